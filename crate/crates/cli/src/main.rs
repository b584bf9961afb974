use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use packcolor::battery;
use packcolor::constructive::{
    color_bipartite_subdivision, color_gpg_1122, color_prism_1122, color_si_complete, color_si_graph,
    color_si_tree, color_two_factor_1122, petersen_subdivision_witness, CaseTrace,
};
use packcolor::generators::{
    complete, complete_tripartite, cycle, generalized_petersen, generalized_prism, random_tree,
    two_factor_graph,
};
use packcolor::{
    packing_chromatic, s_colorable, subdivide, verify_s_coloring, Graph, PackingChromatic, PackingVector,
    PrismSpec, SColoring, SearchConfig, SearchOutcome, TwoFactorSpec,
};
use packcolor_cli::{
    coloring_payload, graph_summary, parse_coloring, parse_graph, write_coloring, write_graph, Format,
    ParseError, Report,
};
use serde_json::{json, Value};

/// Exit codes: 0 ok, 1 internal or acceptance failure, 2 bad input,
/// 3 negative answer, 4 undecided within budget, 5 hypothesis not met.
const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;
const EXIT_INDETERMINATE: u8 = 4;
const EXIT_HYPOTHESIS: u8 = 5;

#[derive(Parser)]
#[command(
    name = "packcolor",
    version,
    about = "Packing colorings and S-colorings of (subdivided) graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel search and sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Sequential solver, lexicographically least witness, timing_ms = 0
    #[arg(long, global = true)]
    deterministic: bool,
    /// Seed for random families and matchings
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Solver budget in seconds
    #[arg(long, global = true, value_name = "SECS")]
    time_budget: Option<f64>,
    /// Graph file format (default: .g6/.graph6 → g6, otherwise el)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a named family
    Gen {
        #[arg(value_enum)]
        family: Family,
        params: Vec<usize>,
        #[command(flatten)]
        spec: SpecArgs,
        /// Replace every edge by a path with this many inner vertices
        #[arg(long, value_name = "I")]
        subdivide: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide S-colorability or compute the packing chromatic number
    Solve {
        graph: PathBuf,
        /// Packing vector, e.g. 1,1,2,2
        #[arg(
            long = "S",
            value_delimiter = ',',
            required_unless_present = "chi_rho",
            conflicts_with = "chi_rho"
        )]
        s: Option<Vec<u32>>,
        #[arg(long)]
        chi_rho: bool,
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Run a constructive coloring recipe
    Construct {
        #[arg(value_enum)]
        recipe: Recipe,
        /// Recipe parameters: numbers, or a graph file first for the
        /// bipartite-sub / si-tree / si-graph recipes
        params: Vec<String>,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long)]
        coloring_out: Option<PathBuf>,
    },
    /// Check a coloring file against a graph
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Packing vector (default 1,2,...,k for k coloring lines)
        #[arg(long = "S", value_delimiter = ',')]
        s: Option<Vec<u32>>,
    },
    /// Run acceptance suites ("all" or one suite id)
    Acceptance {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// Prism matching as a permutation of 1..n: x_i -- y_sigma(i)
    #[arg(long, value_delimiter = ',')]
    sigma: Option<Vec<usize>>,
    /// Lengths of the cycles Z_1, Z_2, ... of a two-factor graph
    #[arg(long, value_delimiter = ',')]
    z: Option<Vec<usize>>,
    /// Two-factor matching: entry i is the 0-based Z index matched to x_(i+1)
    #[arg(long, value_delimiter = ',')]
    matching: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Complete,
    /// K_{n,n,n}
    Tripartite,
    Prism,
    /// Generalized Petersen P(n, k)
    Gpg,
    TwoFactor,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Recipe {
    #[value(name = "prism-1122")]
    Prism1122,
    #[value(name = "two-factor-1122")]
    TwoFactor1122,
    #[value(name = "gpg-1122")]
    Gpg1122,
    BipartiteSub,
    SiComplete,
    SiTree,
    SiGraph,
    PetersenWitness,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<packcolor::Error> for Failure {
    fn from(e: packcolor::Error) -> Self {
        use packcolor::Error as E;
        let code = match e {
            E::HypothesisViolated(_) | E::NotBipartite | E::NotATree | E::NotConnected => EXIT_HYPOTHESIS,
            E::ConstructionFailed(_) => EXIT_FAILURE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

struct Ctx {
    command: String,
    deterministic: bool,
    seed: Option<u64>,
    time_budget: Option<Duration>,
    format: Option<Format>,
    started: Instant,
}

impl Ctx {
    fn timing_ms(&self) -> u64 {
        if self.deterministic {
            0
        } else {
            self.started.elapsed().as_millis() as u64
        }
    }

    fn emit(&self, g: &Graph, result: Value, trace: Option<&CaseTrace>) {
        let report = Report {
            command: self.command.clone(),
            graph: graph_summary(g),
            result,
            case_trace: trace.map(|t| serde_json::to_value(t).expect("trace serializes")),
            timing_ms: self.timing_ms(),
        };
        print!("{}", report.to_json());
    }

    fn format_for(&self, path: &Path) -> Format {
        self.format.unwrap_or_else(|| Format::from_path(path))
    }

    fn read_graph(&self, path: &Path) -> Result<Graph, Failure> {
        let text = read(path)?;
        parse_graph(&text, self.format_for(path)).map_err(|e| parse_failure(path, e))
    }

    fn write_graph(&self, path: &Path, g: &Graph) -> Result<(), Failure> {
        write(path, &write_graph(g, self.format_for(path)))
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure {
        code: EXIT_FAILURE,
        message: format!("{}: {e}", path.display()),
    })
}

fn parse_failure(path: &Path, e: ParseError) -> Failure {
    Failure::input(format!("{}: {e}", path.display()))
}

fn arity<T>(params: &[T], want: usize, usage: &str) -> Result<(), Failure> {
    if params.len() == want {
        Ok(())
    } else {
        Err(Failure::input(format!("expected {usage}")))
    }
}

fn number(params: &[String], i: usize, name: &str) -> Result<usize, Failure> {
    params[i].parse().map_err(|_| {
        Failure::input(format!(
            "{name} must be a nonnegative integer, got {:?}",
            params[i]
        ))
    })
}

fn prism_spec(ctx: &Ctx, n: usize, spec: &SpecArgs) -> Result<PrismSpec, Failure> {
    Ok(match (&spec.sigma, ctx.seed) {
        (Some(sigma), _) => PrismSpec::new(n, sigma.clone())?,
        (None, Some(seed)) => PrismSpec::random(n, seed)?,
        (None, None) => PrismSpec::identity(n)?,
    })
}

fn two_factor_spec(ctx: &Ctx, spec: &SpecArgs) -> Result<TwoFactorSpec, Failure> {
    let z = spec
        .z
        .clone()
        .ok_or_else(|| Failure::input("two-factor graphs need --z with the Z cycle lengths"))?;
    Ok(match (&spec.matching, ctx.seed) {
        (Some(m), _) => TwoFactorSpec::new(z.iter().sum(), z, m.clone())?,
        (None, Some(seed)) => TwoFactorSpec::random(z, seed)?,
        (None, None) => {
            let n = z.iter().sum();
            TwoFactorSpec::new(n, z, (0..n).collect())?
        }
    })
}

fn search_config(ctx: &Ctx) -> SearchConfig {
    let cfg = if ctx.deterministic {
        SearchConfig::deterministic()
    } else {
        SearchConfig::parallel()
    };
    match ctx.time_budget {
        Some(b) => cfg.with_time_budget(b),
        None => cfg,
    }
}

fn gen(
    ctx: &Ctx,
    family: Family,
    params: &[usize],
    spec: &SpecArgs,
    sub: Option<usize>,
    output: Option<&Path>,
) -> Outcome {
    let g = match family {
        Family::Cycle => {
            arity(params, 1, "cycle N")?;
            cycle(params[0])?
        }
        Family::Complete => {
            arity(params, 1, "complete N")?;
            complete(params[0])?
        }
        Family::Tripartite => {
            arity(params, 1, "tripartite N")?;
            complete_tripartite(params[0])?
        }
        Family::Prism => {
            arity(params, 1, "prism N [--sigma ... | --seed S]")?;
            generalized_prism(&prism_spec(ctx, params[0], spec)?)?
        }
        Family::Gpg => {
            arity(params, 2, "gpg N K")?;
            generalized_petersen(params[0], params[1])?.0
        }
        Family::TwoFactor => {
            arity(params, 0, "two-factor --z L1,L2,... [--matching ... | --seed S]")?;
            two_factor_graph(&two_factor_spec(ctx, spec)?)?
        }
        Family::Tree => {
            arity(params, 1, "tree N [--seed S]")?;
            random_tree(params[0], ctx.seed.unwrap_or(0))?
        }
    };
    let g = match sub {
        Some(i) => subdivide(&g, i)?.graph,
        None => g,
    };
    match output {
        Some(path) => ctx.write_graph(path, &g)?,
        None => print!("{}", write_graph(&g, ctx.format.unwrap_or(Format::EdgeList))),
    }
    Ok(0)
}

fn write_coloring_out(path: Option<&Path>, c: &SColoring) -> Result<(), Failure> {
    match path {
        Some(p) => write(p, &write_coloring(c)),
        None => Ok(()),
    }
}

fn solve(ctx: &Ctx, path: &Path, s: Option<&[u32]>, coloring_out: Option<&Path>) -> Outcome {
    let g = ctx.read_graph(path)?;
    let cfg = search_config(ctx);
    let (result, code) = match s {
        Some(s) => {
            let packing = PackingVector::new(s.to_vec())?;
            match s_colorable(&g, &packing, &cfg)? {
                SearchOutcome::Colorable(c) => {
                    write_coloring_out(coloring_out, &c)?;
                    let mut r = coloring_payload(&c);
                    r["decision"] = json!("colorable");
                    (r, 0)
                }
                SearchOutcome::NotColorable => {
                    (json!({ "S": s, "decision": "not-colorable" }), EXIT_NEGATIVE)
                }
                SearchOutcome::Indeterminate => {
                    (json!({ "S": s, "decision": "indeterminate" }), EXIT_INDETERMINATE)
                }
            }
        }
        None => match packing_chromatic(&g, &cfg)? {
            PackingChromatic::Exact { k, witness } => {
                write_coloring_out(coloring_out, &witness)?;
                let mut r = coloring_payload(&witness);
                r["k"] = json!(k);
                (r, 0)
            }
            PackingChromatic::Bounds { lower, upper } => (
                json!({ "decision": "indeterminate", "lower": lower, "upper": upper }),
                EXIT_INDETERMINATE,
            ),
        },
    };
    ctx.emit(&g, result, None);
    Ok(code)
}

fn construct(
    ctx: &Ctx,
    recipe: Recipe,
    params: &[String],
    spec: &SpecArgs,
    graph_out: Option<&Path>,
    coloring_out: Option<&Path>,
) -> Outcome {
    let mut extra = json!({});
    let (g, c, trace): (Graph, SColoring, Option<CaseTrace>) = match recipe {
        Recipe::Prism1122 => {
            arity(params, 1, "prism-1122 N [--sigma ... | --seed S]")?;
            let spec = prism_spec(ctx, number(params, 0, "N")?, spec)?;
            let g = generalized_prism(&spec)?;
            let (res, trace) = color_prism_1122(&spec)?;
            extra["sigma"] = json!(spec.sigma);
            match res.coloring() {
                Some(c) => (g, c.clone(), Some(trace)),
                None => {
                    if let Some(p) = graph_out {
                        ctx.write_graph(p, &g)?;
                    }
                    extra["petersen_detected"] = json!(true);
                    ctx.emit(&g, extra, Some(&trace));
                    return Ok(EXIT_NEGATIVE);
                }
            }
        }
        Recipe::TwoFactor1122 => {
            arity(
                params,
                0,
                "two-factor-1122 --z L1,L2,... [--matching ... | --seed S]",
            )?;
            let spec = two_factor_spec(ctx, spec)?;
            let (c, trace) = color_two_factor_1122(&spec)?;
            extra["z"] = json!(spec.z_lengths);
            extra["matching"] = json!(spec.matching);
            (two_factor_graph(&spec)?, c, Some(trace))
        }
        Recipe::Gpg1122 => {
            arity(params, 2, "gpg-1122 N K")?;
            let (n, k) = (number(params, 0, "N")?, number(params, 1, "K")?);
            let (c, trace) = color_gpg_1122(n, k)?;
            (generalized_petersen(n, k)?.0, c, Some(trace))
        }
        Recipe::BipartiteSub => {
            arity(params, 1, "bipartite-sub GRAPH")?;
            let (sg, c) = color_bipartite_subdivision(&ctx.read_graph(Path::new(&params[0]))?)?;
            (sg.graph, c, None)
        }
        Recipe::SiComplete => {
            arity(params, 2, "si-complete N I")?;
            let (sg, c) = color_si_complete(number(params, 0, "N")?, number(params, 1, "I")?)?;
            (sg.graph, c, None)
        }
        Recipe::SiTree | Recipe::SiGraph => {
            arity(params, 2, "si-tree|si-graph GRAPH I")?;
            let g = ctx.read_graph(Path::new(&params[0]))?;
            let i = number(params, 1, "I")?;
            let (sg, c) = match recipe {
                Recipe::SiTree => color_si_tree(&g, i)?,
                _ => color_si_graph(&g, i)?,
            };
            (sg.graph, c, None)
        }
        Recipe::PetersenWitness => {
            arity(params, 0, "petersen-witness")?;
            let (sg, c) = petersen_subdivision_witness()?;
            (sg.graph, c, None)
        }
    };
    // every colorer verifies its output; this re-check guards the CLI path
    let verdict = verify_s_coloring(&g, &c)?;
    if !verdict.is_ok() {
        return Err(Failure {
            code: EXIT_FAILURE,
            message: format!(
                "constructed coloring has {} violation(s)",
                verdict.violations().len()
            ),
        });
    }
    if let Some(p) = graph_out {
        ctx.write_graph(p, &g)?;
    }
    write_coloring_out(coloring_out, &c)?;
    let mut result = coloring_payload(&c);
    for (k, v) in extra.as_object().expect("object") {
        result[k] = v.clone();
    }
    result["verified"] = json!(true);
    ctx.emit(&g, result, trace.as_ref());
    Ok(0)
}

fn verify(ctx: &Ctx, graph: &Path, coloring: &Path, s: Option<&[u32]>) -> Outcome {
    let g = ctx.read_graph(graph)?;
    let classes = parse_coloring(&read(coloring)?).map_err(|e| parse_failure(coloring, e))?;
    let packing = match s {
        Some(s) => PackingVector::new(s.to_vec())?,
        None => PackingVector::new((1..=classes.len() as u32).collect())?,
    };
    let c = SColoring::from_classes(packing, g.n(), &classes)?;
    let verdict = verify_s_coloring(&g, &c)?;
    let result = json!({
        "S": c.packing().as_slice(),
        "ok": verdict.is_ok(),
        "violations": verdict.violations(),
    });
    ctx.emit(&g, result, None);
    Ok(if verdict.is_ok() { 0 } else { EXIT_NEGATIVE })
}

fn acceptance(ctx: &Ctx, id: &str) -> Outcome {
    let suites = if id == "all" {
        battery::suites()
    } else {
        vec![battery::suite(id).ok_or_else(|| {
            let known: Vec<&str> = battery::suites().iter().map(|s| s.id).collect();
            Failure::input(format!("unknown suite {id:?}; known: all, {}", known.join(", ")))
        })?]
    };
    let mut reports = Vec::new();
    for s in &suites {
        let r = s.run();
        eprintln!("{}", r.line());
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r.passed);
    let out = json!({
        "command": ctx.command,
        "passed": passed,
        "suites": reports,
        "timing_ms": ctx.timing_ms(),
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("valid JSON"));
    Ok(if passed { 0 } else { EXIT_FAILURE })
}

fn run(cli: Cli) -> Outcome {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::input(format!("--jobs: {e}")))?;
    }
    let time_budget = match cli.time_budget {
        Some(secs) if secs.is_finite() && secs >= 0.0 => Some(Duration::from_secs_f64(secs)),
        Some(secs) => return Err(Failure::input(format!("bad --time-budget {secs}"))),
        None => None,
    };
    let ctx = Ctx {
        command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
        deterministic: cli.deterministic,
        seed: cli.seed,
        time_budget,
        format: cli.format,
        started: Instant::now(),
    };
    match &cli.command {
        Command::Gen {
            family,
            params,
            spec,
            subdivide,
            output,
        } => gen(&ctx, *family, params, spec, *subdivide, output.as_deref()),
        Command::Solve {
            graph,
            s,
            chi_rho: _,
            coloring_out,
        } => solve(&ctx, graph, s.as_deref(), coloring_out.as_deref()),
        Command::Construct {
            recipe,
            params,
            spec,
            graph_out,
            coloring_out,
        } => construct(
            &ctx,
            *recipe,
            params,
            spec,
            graph_out.as_deref(),
            coloring_out.as_deref(),
        ),
        Command::Verify { graph, coloring, s } => verify(&ctx, graph, coloring, s.as_deref()),
        Command::Acceptance { suite } => acceptance(&ctx, suite),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
