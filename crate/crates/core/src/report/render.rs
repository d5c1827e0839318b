//! Deterministic JSON and CSV rendering. All floats are rounded to 10
//! significant digits before formatting, so equal inputs give equal bytes.

use serde_json::json;

use crate::error::Result;
use crate::fox::ZetaTracePoint;
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::report::{round_sig10, BoundReport, ZetaSummary};
use crate::reps::{RepKind, RepMatrixBundle};

/// Fixed header of the growth CSV.
pub const GROWTH_CSV_HEADER: &str =
    "k,trace_of_norms,norm_of_collected_trace,trace_root,collected_root,trace_ratio,collected_ratio";

pub fn bound_report_json(report: &BoundReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn kind_name(kind: RepKind) -> &'static str {
    match kind {
        RepKind::BurauReduced => "burau",
        RepKind::Lkb => "lkb",
        RepKind::FoxSpecialized => "fox",
    }
}

/// Polynomial as a sorted list of `{exponents, coeff}` objects with decimal
/// string coefficients.
pub fn poly_json(p: &LaurentPoly) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms()
        .iter()
        .map(|(e, c)| json!({ "exponents": e, "coeff": c.to_string() }))
        .collect();
    serde_json::Value::Array(terms)
}

fn matrix_json(m: &LaurentMatrix) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = (0..m.rows())
        .map(|r| {
            let cells: Vec<serde_json::Value> =
                (0..m.cols()).map(|c| poly_json(m.entry(r, c))).collect();
            serde_json::Value::Array(cells)
        })
        .collect();
    serde_json::Value::Array(rows)
}

pub fn rep_json(bundle: &RepMatrixBundle, power: i64) -> String {
    let value = json!({
        "schema_version": 1,
        "braid": bundle.braid.to_text(),
        "n": bundle.braid.n(),
        "kind": kind_name(bundle.kind),
        "k": power,
        "dims": { "rows": bundle.matrix.rows(), "cols": bundle.matrix.cols() },
        "vars": bundle.kind.var_names(),
        "entries": matrix_json(&bundle.matrix),
    });
    let mut s = serde_json::to_string_pretty(&value).expect("rep serializes");
    s.push('\n');
    s
}

pub fn rep_csv(bundle: &RepMatrixBundle) -> String {
    let names = bundle.kind.var_names();
    let mut out = String::from("row,col,entry\n");
    for r in 0..bundle.matrix.rows() {
        for c in 0..bundle.matrix.cols() {
            let cell = bundle.matrix.entry(r, c).display_with(names);
            out.push_str(&format!("{r},{c},\"{cell}\"\n"));
        }
    }
    out
}

pub fn growth_json(braid_text: &str, n: usize, summary: &ZetaSummary) -> Result<String> {
    let value = json!({
        "schema_version": 1,
        "braid": braid_text,
        "n": n,
        "zeta1": summary,
    });
    let mut s = serde_json::to_string_pretty(&value).expect("growth serializes");
    s.push('\n');
    Ok(s)
}

fn fmt_float(x: f64) -> String {
    format!("{}", round_sig10(x))
}

pub fn growth_csv(points: &[ZetaTracePoint]) -> String {
    let mut out = String::from(GROWTH_CSV_HEADER);
    out.push('\n');
    for (i, p) in points.iter().enumerate() {
        let k = p.k as f64;
        let trace_root = (p.trace_of_norms as f64).powf(1.0 / k);
        let coll_root = (p.norm_of_collected_trace as f64).powf(1.0 / k);
        let trace_ratio = if i + 1 < points.len() && p.trace_of_norms > 0 {
            fmt_float(points[i + 1].trace_of_norms as f64 / p.trace_of_norms as f64)
        } else {
            String::new()
        };
        let coll_ratio = if i + 1 < points.len() && p.norm_of_collected_trace > 0 {
            fmt_float(
                points[i + 1].norm_of_collected_trace as f64 / p.norm_of_collected_trace as f64,
            )
        } else {
            String::new()
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            p.k,
            p.trace_of_norms,
            p.norm_of_collected_trace,
            fmt_float(trace_root),
            fmt_float(coll_root),
            trace_ratio,
            coll_ratio,
        ));
    }
    out
}
