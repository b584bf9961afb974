//! JSON reports. `serde_json` maps keep keys sorted, and class members come
//! out in ascending id order, so equal inputs give byte-identical output.

use packcolor::{Graph, SColoring};
use serde_json::{json, Value};

pub fn graph_summary(g: &Graph) -> Value {
    let max_degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut histogram = vec![0usize; if g.n() == 0 { 0 } else { max_degree + 1 }];
    for v in 0..g.n() {
        histogram[g.degree(v)] += 1;
    }
    json!({ "n": g.n(), "m": g.m(), "degree_histogram": histogram })
}

/// Classes (1-based position in the list) with the packing vector and the
/// number of classes actually used.
pub fn coloring_payload(c: &SColoring) -> Value {
    json!({
        "S": c.packing().as_slice(),
        "classes": c.classes(),
        "classes_used": c.nonempty_class_count(),
    })
}

pub struct Report {
    pub command: String,
    pub graph: Value,
    pub result: Value,
    pub case_trace: Option<Value>,
    pub timing_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut v = json!({
            "command": self.command,
            "graph": self.graph,
            "result": self.result,
            "timing_ms": self.timing_ms,
        });
        if let Some(t) = &self.case_trace {
            v["case_trace"] = t.clone();
        }
        let mut s = serde_json::to_string_pretty(&v).expect("report is valid JSON");
        s.push('\n');
        s
    }
}
