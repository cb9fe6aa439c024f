use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};
use turan_core::symmetrize::SymmetrizationTrace;
use turan_core::verify::Exact;
use turan_core::{Hypergraph, Rational};

/// The JSON document printed by `--json`.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub timings: Value,
    pub tool_version: &'static str,
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, elapsed: Duration) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results,
            timings: json!({ "seconds": elapsed.as_secs_f64() }),
            tool_version: env!("CARGO_PKG_VERSION"),
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn exact(x: Rational) -> Value {
    serde_json::to_value(Exact::from(x)).expect("rationals serialize")
}

pub fn graph(h: &Hypergraph) -> Value {
    json!({
        "r": h.uniformity(),
        "n": h.vertex_count(),
        "edges": h.edge_lists(),
    })
}

/// The trace as a list of events, one per duplication or removal.
pub fn trace(t: &SymmetrizationTrace) -> Value {
    let mut events = Vec::new();
    for (i, round) in t.rounds.iter().enumerate() {
        if let Some(step) = &round.symmetrize {
            events.push(json!({
                "round": i,
                "event": "symmetrize",
                "deleted": step.from,
                "copied": step.to,
                "copied_class": step.to_class,
            }));
        }
        for &z in &round.removed {
            events.push(json!({ "round": i, "event": "remove", "vertex": z }));
        }
        events.push(json!({
            "round": i,
            "event": "end_round",
            "vertices": round.vertices,
            "min_degree": round.min_degree,
        }));
    }
    json!({
        "algorithm": t.algorithm,
        "alpha": t.alpha.map(exact),
        "input": graph(&t.input),
        "events": events,
        "output_vertices": t.vertices,
        "output": graph(&t.output),
    })
}
