use std::fmt::Write as _;

use serde_json::{json, Value};

use super::{Counterexample, Status, SuiteReport};
use crate::report::SCHEMA;

fn counterexample_line(out: &mut String, label: &str, c: &Counterexample) {
    let mut at = format!("ring={}", c.ring);
    if let Some(x) = &c.x {
        let _ = write!(at, " x={x}");
    }
    if let Some(a) = c.alpha {
        let _ = write!(at, " alpha={a}");
    }
    if let Some(b) = c.beta {
        let _ = write!(at, " beta={b}");
    }
    let _ = writeln!(out, "    {label}: {at}: {}", c.detail);
    let _ = writeln!(out, "      replay: {}", c.replay());
}

impl SuiteReport {
    /// Plain-text report; byte-identical for identical inputs.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "divgraph verify: {} theorem(s) over {} ring(s), scope {}",
            self.theorems.len(),
            self.rings.len(),
            self.scope.token()
        );
        for b in &self.build_failures {
            let _ = writeln!(out, "BUILD-FAIL {}: {}", b.spec, b.error);
        }
        let width = self.theorems.iter().map(|t| t.id.len()).max().unwrap_or(0);
        for t in &self.theorems {
            let _ = writeln!(
                out,
                "{:<width$}  {:<11}  checked={}  [{}]",
                t.id,
                t.status.to_string(),
                t.checked,
                t.domain
            );
            for c in &t.counterexamples {
                counterexample_line(&mut out, "counterexample", c);
            }
            if t.total_counterexamples > t.counterexamples.len() as u64 {
                let _ = writeln!(
                    out,
                    "    ... {} more counterexample(s)",
                    t.total_counterexamples - t.counterexamples.len() as u64
                );
            }
            for c in &t.scope_breaks {
                counterexample_line(&mut out, "scope break", c);
            }
            for n in &t.notes {
                let _ = writeln!(out, "    note [{}] x{}: {}", n.key, n.count, n.text);
            }
        }
        let count = |s: Status| self.theorems.iter().filter(|t| t.status == s).count();
        let _ = writeln!(
            out,
            "summary: {} passed, {} failed, {} scope-break, {} build failure(s)",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::ScopeBreak),
            self.build_failures.len()
        );
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "kind": "verify",
            "scope": self.scope,
            "passed": self.passed(),
            "rings": self.rings,
            "build_failures": self.build_failures,
            "theorems": self.theorems,
        })
    }
}
