//! Text and structured renderings shared by the CLI and the harness.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::atoms::AtomKind;
use crate::error::Result;
use crate::factor::Enumeration;
use crate::graph::DivisorGraph;
use crate::lab::Lab;
use crate::props::PropertyReport;
use crate::ring::ElementId;

/// Version tag carried by every structured report.
pub const SCHEMA: &str = "divgraph/1";

/// Prefix an object with the schema tag and report kind.
pub fn with_schema(kind: &str, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), SCHEMA.into());
    out.insert("kind".into(), kind.into());
    match body {
        Value::Object(fields) => out.extend(fields),
        other => {
            out.insert("data".into(), other);
        }
    }
    Value::Object(out)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

const FLAG_KINDS: [AtomKind; 5] = [
    AtomKind::Prime,
    AtomKind::Irreducible,
    AtomKind::StrongIrreducible,
    AtomKind::MIrreducible,
    AtomKind::VeryStrongIrreducible,
];

/// Classification table for `elements` (all elements when empty).
pub fn classify_text(lab: &Lab, elements: &[ElementId]) -> Result<String> {
    let ring = lab.ring();
    let all: Vec<ElementId>;
    let elements = if elements.is_empty() {
        all = ring.elements().collect();
        &all
    } else {
        elements
    };
    let width = elements
        .iter()
        .map(|&a| ring.name(a).len())
        .max()
        .unwrap_or(1)
        .max(7);
    let mut out = String::new();
    let _ = writeln!(out, "ring: {}", ring.spec_string());
    let _ = write!(out, "{:<width$}", "element");
    for k in FLAG_KINDS {
        let _ = write!(out, "  {:<6}", k.token());
    }
    out.push('\n');
    for &a in elements {
        let _ = write!(out, "{:<width$}", ring.name(a));
        if ring.is_unit(a) {
            out.push_str("  unit\n");
            continue;
        }
        let p = lab.profile(a)?;
        for k in FLAG_KINDS {
            let _ = write!(out, "  {:<6}", if p.is(k) { "yes" } else { "no" });
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn classify_json(lab: &Lab, elements: &[ElementId]) -> Result<Value> {
    let ring = lab.ring();
    let ids: Vec<ElementId> = if elements.is_empty() {
        ring.elements().collect()
    } else {
        elements.to_vec()
    };
    let mut rows = Vec::new();
    for a in ids {
        let mut row = Map::new();
        row.insert("element".into(), ring.name(a).into());
        row.insert("unit".into(), ring.is_unit(a).into());
        if !ring.is_unit(a) {
            let p = lab.profile(a)?;
            for k in FLAG_KINDS {
                row.insert(k.token().into(), p.is(k).into());
            }
        }
        rows.push(Value::Object(row));
    }
    Ok(with_schema(
        "classify",
        json!({ "ring": ring.spec_string(), "elements": rows }),
    ))
}

fn product_string(lab: &Lab, factors: &[ElementId]) -> String {
    let names: Vec<&str> = factors.iter().map(|&a| lab.ring().name(a)).collect();
    names.join(" * ")
}

pub fn factor_text(lab: &Lab, x: ElementId, cap: usize, e: &Enumeration) -> String {
    let ring = lab.ring();
    let mut out = String::new();
    let (alpha, beta) = e
        .factorizations
        .first()
        .map(|f| (f.kind.to_string(), f.beta.to_string()))
        .unwrap_or_default();
    let _ = writeln!(out, "ring: {}", ring.spec_string());
    let _ = writeln!(out, "x: {}", ring.name(x));
    if !alpha.is_empty() {
        let _ = writeln!(out, "alpha: {alpha}, beta: {beta}");
    }
    let _ = writeln!(out, "cap: {cap}");
    for f in &e.factorizations {
        let _ = writeln!(
            out,
            "[{}] {} = {}",
            f.len(),
            ring.name(x),
            product_string(lab, &f.factors)
        );
    }
    let _ = writeln!(out, "count: {}", e.factorizations.len());
    if e.truncated {
        let _ = writeln!(out, "truncated: factorizations longer than {cap} exist");
    }
    if e.limited {
        let _ = writeln!(out, "limited: the result limit stopped the search");
    }
    out
}

pub fn factor_json(lab: &Lab, x: ElementId, cap: usize, e: &Enumeration) -> Value {
    let ring = lab.ring();
    let rows: Vec<Value> = e
        .factorizations
        .iter()
        .map(|f| {
            json!({
                "length": f.len(),
                "factors": f.factors.iter().map(|&a| ring.name(a)).collect::<Vec<_>>(),
                "representatives": f.representatives.iter().map(|&a| ring.name(a)).collect::<Vec<_>>(),
            })
        })
        .collect();
    with_schema(
        "factor",
        json!({
            "ring": ring.spec_string(),
            "x": ring.name(x),
            "cap": cap,
            "factorizations": rows,
            "truncated": e.truncated,
            "limited": e.limited,
        }),
    )
}

pub fn graph_json(g: &DivisorGraph) -> Value {
    with_schema("graph", g.to_json())
}

pub fn graph_text(g: &DivisorGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring: {}", g.ring());
    let _ = writeln!(out, "x: {}", g.x_name());
    let _ = writeln!(out, "alpha: {}, beta: {}", g.alpha(), g.beta());
    let _ = writeln!(out, "vertices: {}", g.vertex_count());
    for (i, v) in g.vertices().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {}  loops={}  deg={}  degl={}",
            v.name,
            g.loops(i),
            g.degree(i),
            g.degl(i)
        );
    }
    let _ = writeln!(out, "edges: {}", g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {}",
            g.vertices()[u].name,
            g.vertices()[v].name
        );
    }
    let _ = writeln!(out, "loop total: {}", g.loop_total());
    let _ = writeln!(out, "sum degl: {}", g.sum_degl());
    let _ = writeln!(out, "diameter: {}", g.diameter());
    let _ = writeln!(out, "clique number: {}", g.clique_number());
    let _ = writeln!(out, "pseudo-clique number: {}", g.pseudo_clique_number());
    let _ = writeln!(out, "pseudo-clique: {}", g.is_pseudo_clique());
    out
}

pub fn props_json(report: &PropertyReport) -> Value {
    with_schema("props", report.to_json())
}
