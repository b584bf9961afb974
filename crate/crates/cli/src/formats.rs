//! Graph and coloring file formats: whitespace edge lists and graph6.

use std::fmt;
use std::path::Path;

use packcolor::{Graph, SColoring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// `u v` per line, 0-based ids
    #[value(name = "el")]
    EdgeList,
    #[value(name = "g6")]
    Graph6,
}

impl Format {
    /// `.g6` / `.graph6` files are graph6, everything else an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: Some(line),
            message: message.into(),
        }
    }

    fn new(message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

pub type ParseResult<T> = std::result::Result<T, ParseError>;

pub fn parse_graph(text: &str, format: Format) -> ParseResult<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Graph6 => write_graph6(g) + "\n",
    }
}

/// Edge list with optional `# n=<order>` header (needed for trailing
/// isolated vertices). Other `#` text is a comment.
pub fn parse_edge_list(text: &str) -> ParseResult<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(n) = comment.and_then(|c| c.trim().strip_prefix("n=")) {
            if !body.trim().is_empty() {
                return Err(ParseError::at(line, "order header must be on its own line"));
            }
            if declared.is_some() {
                return Err(ParseError::at(line, "repeated order header"));
            }
            let n = n
                .trim()
                .parse::<usize>()
                .map_err(|_| ParseError::at(line, format!("bad order {:?}", n.trim())))?;
            declared = Some(n);
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [u, v] => {
                let id = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| ParseError::at(line, format!("bad vertex id {t:?}")))
                };
                let (u, v) = (id(u)?, id(v)?);
                if u == v {
                    return Err(ParseError::at(line, format!("loop at {u}")));
                }
                edges.push((u, v));
            }
            _ => return Err(ParseError::at(line, "expected two vertex ids")),
        }
    }
    let span = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < span => {
            return Err(ParseError::new(format!(
                "header declares {n} vertices but edges use id {}",
                span - 1
            )))
        }
        Some(n) => n,
        None => span,
    };
    Graph::from_edges(n, edges).map_err(|e| ParseError::new(e.to_string()))
}

/// One `u v` line per edge (`u < v`, sorted); the header is written only
/// when the edges alone would not determine the order.
pub fn write_edge_list(g: &Graph) -> String {
    let span = g.edges().iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
    let mut out = String::new();
    if span != g.n() {
        out.push_str(&format!("# n={}\n", g.n()));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn size_prefix(n: usize) -> Vec<u8> {
    let six = |shift: u32| 63 + ((n >> shift) & 63) as u8;
    if n <= 62 {
        vec![63 + n as u8]
    } else if n <= 258_047 {
        vec![126, six(12), six(6), six(0)]
    } else {
        vec![126, 126, six(30), six(24), six(18), six(12), six(6), six(0)]
    }
}

/// graph6 string (no header, no newline): order prefix, then the upper
/// triangle column by column, six bits per printable character.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = size_prefix(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 is ASCII")
}

/// Reads the first graph of a graph6 file; the `>>graph6<<` header is
/// optional. Padding bits must be zero.
pub fn parse_graph6(text: &str) -> ParseResult<Graph> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| ParseError::new("empty graph6 input"))?;
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::new(format!("byte {b:#04x} is not graph6")));
    }
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(ParseError::new("empty graph6 input")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.first() != Some(&126) && rest.len() >= 3 => (six(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(ParseError::new("truncated graph6 order")),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(ParseError::new(format!(
            "graph6 body has {} characters, order {n} needs {}",
            body.len(),
            bits.div_ceil(6)
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(ParseError::new("nonzero graph6 padding"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::new(e.to_string()))
}

/// Coloring file: line `i` lists the members of class `i`. Trailing blank
/// lines are ignored; blank lines before the last class are empty classes.
pub fn parse_coloring(text: &str) -> ParseResult<Vec<Vec<usize>>> {
    let mut classes = text
        .lines()
        .enumerate()
        .map(|(idx, line)| {
            line.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| ParseError::at(idx + 1, format!("bad vertex id {t:?}")))
                })
                .collect::<ParseResult<Vec<usize>>>()
        })
        .collect::<ParseResult<Vec<_>>>()?;
    while classes.last().is_some_and(Vec::is_empty) {
        classes.pop();
    }
    Ok(classes)
}

pub fn write_coloring(c: &SColoring) -> String {
    let mut out = String::new();
    for class in c.classes() {
        let ids: Vec<String> = class.iter().map(usize::to_string).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}
