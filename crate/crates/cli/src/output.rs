//! Rendering for the three output formats.
//!
//! Table rows are comma-separated values for eyeballing; JSON and CSV carry
//! every count as a decimal string so nothing is truncated downstream. All
//! rendering is a pure function of the data — no timestamps, fixed orders —
//! so identical invocations produce byte-identical output.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use gw_core::arith::Integer;
use gw_core::quantum::PairGrouping;
use gw_core::severi::{ComponentLedger, DroppedCandidate, SplitTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NdRow {
    pub d: u32,
    pub n: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn csv_from_records(records: Vec<Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.write_record(&record).expect("csv record");
    }
    String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv is utf-8")
}

pub fn render_nd(rows: &[NdRow], format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            for row in rows {
                match (&row.f, &row.g) {
                    (Some(f), Some(g)) => {
                        out.push_str(&format!("{}, {}, {}, {}\n", row.d, row.n, f, g))
                    }
                    _ => out.push_str(&format!("{}, {}\n", row.d, row.n)),
                }
            }
            out
        }
        Format::Json => to_json(&rows),
        Format::Csv => {
            let split = rows.iter().any(|r| r.f.is_some());
            let mut records = Vec::new();
            if split {
                records.push(vec!["d".into(), "n".into(), "f".into(), "g".into()]);
            } else {
                records.push(vec!["d".into(), "n".into()]);
            }
            for row in rows {
                let mut record = vec![row.d.to_string(), row.n.clone()];
                if split {
                    record.push(row.f.clone().unwrap_or_default());
                    record.push(row.g.clone().unwrap_or_default());
                }
                records.push(record);
            }
            csv_from_records(records)
        }
    }
}

/// Rows of (degree, value) under a configurable value key; used by
/// `severi roberts` ("value") and `quantum wdvv` ("residual").
pub fn render_degree_values(rows: &[(u32, Integer)], key: &str, format: Format) -> String {
    match format {
        Format::Table => rows
            .iter()
            .map(|(d, v)| format!("{d}, {v}\n"))
            .collect(),
        Format::Json => {
            let docs: Vec<serde_json::Value> = rows
                .iter()
                .map(|(d, v)| serde_json::json!({"d": d, key: v.to_string()}))
                .collect();
            to_json(&docs)
        }
        Format::Csv => {
            let mut records = vec![vec!["d".to_string(), key.to_string()]];
            records.extend(rows.iter().map(|(d, v)| vec![d.to_string(), v.to_string()]));
            csv_from_records(records)
        }
    }
}

#[derive(Serialize)]
struct ComponentsDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<u32>,
    #[serde(flatten)]
    ledger: &'a ComponentLedger,
    #[serde(skip_serializing_if = "Option::is_none")]
    irreducible: Option<String>,
}

pub fn render_components(
    d: Option<u32>,
    ledger: &ComponentLedger,
    irreducible: Option<Integer>,
    format: Format,
) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            for entry in &ledger.entries {
                out.push_str(&format!("{}, {}\n", entry.label, entry.value));
            }
            out.push_str(&format!("total, {}\n", ledger.total));
            if let Some(irr) = &irreducible {
                out.push_str(&format!("irreducible, {irr}\n"));
            }
            out
        }
        Format::Json => to_json(&ComponentsDoc {
            d,
            ledger,
            irreducible: irreducible.map(|v| v.to_string()),
        }),
        Format::Csv => {
            let mut records = vec![vec!["label".to_string(), "value".to_string()]];
            for entry in &ledger.entries {
                records.push(vec![entry.label.clone(), entry.value.to_string()]);
            }
            records.push(vec!["total".into(), ledger.total.to_string()]);
            if let Some(irr) = &irreducible {
                records.push(vec!["irreducible".into(), irr.to_string()]);
            }
            csv_from_records(records)
        }
    }
}

#[derive(Serialize)]
struct Formula5Doc<'a> {
    d: u32,
    delta: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<&'a [SplitTerm]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dropped: Option<&'a [DroppedCandidate]>,
    total: String,
}

/// Returns (stdout, stderr). With `ledger` set, the table format prints one
/// row per contributing term plus a total row on stdout and sends the
/// dropped-candidate audit to stderr; JSON carries everything in one
/// document.
pub fn render_formula5(
    d: u32,
    delta: u32,
    terms: &[SplitTerm],
    dropped: &[DroppedCandidate],
    ledger: bool,
    format: Format,
) -> (String, String) {
    let total: Integer = terms.iter().map(|t| t.product.clone()).sum();
    match format {
        Format::Table => {
            if !ledger {
                return (format!("{total}\n"), String::new());
            }
            let mut out = String::new();
            for t in terms {
                out.push_str(&format!(
                    "pi={} free={} fixed={} d1={} d2={} m={} m_comp={} n_comp={} placement={} aux={}={} product={}\n",
                    t.pi, t.pi_free, t.pi_fixed_top, t.delta1, t.delta2,
                    t.m_outer, t.m_comp, t.n_comp, t.placement, t.aux, t.aux_value, t.product,
                ));
            }
            out.push_str(&format!("total, {total}\n"));
            let mut audit = String::new();
            for c in dropped {
                audit.push_str(&format!(
                    "dropped: pi={} free={} fixed={} reason={}\n",
                    c.pi, c.pi_free, c.pi_fixed_top, c.reason,
                ));
            }
            (out, audit)
        }
        Format::Json => {
            let doc = Formula5Doc {
                d,
                delta,
                terms: ledger.then_some(terms),
                dropped: ledger.then_some(dropped),
                total: total.to_string(),
            };
            (to_json(&doc), String::new())
        }
        Format::Csv => {
            if !ledger {
                return (
                    csv_from_records(vec![
                        vec!["total".to_string()],
                        vec![total.to_string()],
                    ]),
                    String::new(),
                );
            }
            let mut records = vec![vec![
                "pi".to_string(),
                "pi_free".into(),
                "pi_fixed_top".into(),
                "delta1".into(),
                "delta2".into(),
                "placement".into(),
                "m_outer".into(),
                "m_comp".into(),
                "n_comp".into(),
                "aux_e".into(),
                "aux_delta".into(),
                "aux_fixed".into(),
                "aux_free".into(),
                "aux_value".into(),
                "product".into(),
            ]];
            for t in terms {
                records.push(vec![
                    t.pi.to_string(),
                    t.pi_free.to_string(),
                    t.pi_fixed_top.to_string(),
                    t.delta1.to_string(),
                    t.delta2.to_string(),
                    t.placement.to_string(),
                    t.m_outer.to_string(),
                    t.m_comp.to_string(),
                    t.n_comp.to_string(),
                    t.aux.e.to_string(),
                    t.aux.delta.to_string(),
                    t.aux.fixed.to_string(),
                    t.aux.free.to_string(),
                    t.aux_value.to_string(),
                    t.product.to_string(),
                ]);
            }
            let mut audit = String::new();
            for c in dropped {
                audit.push_str(&format!(
                    "dropped: pi={} free={} fixed={} reason={}\n",
                    c.pi, c.pi_free, c.pi_fixed_top, c.reason,
                ));
            }
            (csv_from_records(records), audit)
        }
    }
}

pub fn render_fourpoint(
    d: u32,
    grouping: &PairGrouping,
    value: &Integer,
    format: Format,
) -> String {
    match format {
        Format::Table => format!("{value}\n"),
        Format::Json => to_json(&serde_json::json!({
            "d": d,
            "grouping": grouping.to_string(),
            "value": value.to_string(),
        })),
        Format::Csv => csv_from_records(vec![
            vec!["d".to_string(), "grouping".into(), "value".into()],
            vec![d.to_string(), grouping.to_string(), value.to_string()],
        ]),
    }
}
