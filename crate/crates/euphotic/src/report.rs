//! Structured reports for the command surface. Reports serialize
//! deterministically (struct field order, sorted collections, exact
//! rationals as strings) so identical inputs give byte-identical output.

use crate::affine::{AffineRoot, Facet};
use crate::error::Result;
use crate::grading::GradingReport;
use crate::hessenberg::HessenbergDatum;
use crate::rat::format_rat;
use crate::root_system::{value_to_classical, RootSystem};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub body: Value,
}

impl Report {
    pub fn new(command: &str, body: Value) -> Report {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            body,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn affine_root_json(rs: &RootSystem, ar: &AffineRoot) -> Value {
    json!({ "gradient": rs.roots[ar.gradient], "level": ar.level })
}

fn point_json(rs: &RootSystem, x: &crate::rat::RatVec) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("value".into(), json!(x.strings()));
    if let Ok(e) = value_to_classical(rs, x) {
        let strings: Vec<String> = e.iter().map(format_rat).collect();
        obj.insert("classical".into(), json!(strings));
    }
    Value::Object(obj)
}

pub fn facet_report(rs: &RootSystem, facet: &Facet, grading: &GradingReport) -> Value {
    json!({
        "group": format!("{}{}", rs.group, rs.rank),
        "J": facet.j,
        "m": facet.m,
        "barycenter": point_json(rs, &facet.barycenter),
        "dims": grading.dims,
        "levi_root_count": grading.levi_roots.len(),
        "vp_weight_count": grading.vp_weights.len(),
    })
}

pub fn grading_report(rs: &RootSystem, grading: &GradingReport) -> Value {
    json!({
        "group": format!("{}{}", rs.group, rs.rank),
        "J": grading.facet.j,
        "m": grading.m,
        "barycenter": point_json(rs, &grading.facet.barycenter),
        "dims": grading.dims,
        "levi_roots": grading.levi_roots.iter().map(|a| affine_root_json(rs, a)).collect::<Vec<_>>(),
        "vp_weights": grading.vp_weights.iter().map(|a| affine_root_json(rs, a)).collect::<Vec<_>>(),
        "vp_dual_weights": grading.vp_dual_weights.iter().map(|a| affine_root_json(rs, a)).collect::<Vec<_>>(),
    })
}

pub fn datum_json(rs: &RootSystem, d: &HessenbergDatum, in_region: Option<bool>) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("y".into(), point_json(rs, &d.y));
    obj.insert(
        "qw_roots".into(),
        json!(d.qw_roots.iter().map(|a| affine_root_json(rs, a)).collect::<Vec<_>>()),
    );
    obj.insert(
        "vw_perp".into(),
        json!(d.vw_perp.iter().map(|a| affine_root_json(rs, a)).collect::<Vec<_>>()),
    );
    obj.insert(
        "vw_perp_gradients".into(),
        json!(d.vw_perp_gradients.iter().map(|&r| rs.roots[r].clone()).collect::<Vec<_>>()),
    );
    obj.insert(
        "flags".into(),
        json!({
            "exceptional": d.flags.exceptional,
            "halfspace_empty": d.flags.halfspace_empty,
            "simple_root_meager": d.flags.simple_root_meager,
            "rule_empty": d.flags.rule_empty,
        }),
    );
    if let Some(w) = &d.witness {
        obj.insert(
            "witness".into(),
            json!({ "word": w.word.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "translation": w.translation.strings() }),
        );
    }
    if let Some(r) = in_region {
        obj.insert("in_region".into(), json!(r));
    }
    Value::Object(obj)
}

/// Renders a report as plain text, one keyed line per top-level field.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("# {} (schema {})\n", report.command, report.schema));
    render_value(&report.body, 0, &mut out);
    out
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {val}\n")),
                }
            }
        }
        Value::Array(items) => {
            if items.iter().all(|i| !matches!(i, Value::Object(_) | Value::Array(_))) {
                out.push_str(&format!(
                    "{pad}[{}]\n",
                    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
                ));
            } else {
                for (n, item) in items.iter().enumerate() {
                    out.push_str(&format!("{pad}- [{n}]\n"));
                    render_value(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

pub fn ok<T: Serialize>(command: &str, body: &T) -> Result<Report> {
    Ok(Report::new(
        command,
        serde_json::to_value(body).map_err(|e| crate::error::Error::Input(e.to_string()))?,
    ))
}
