//! Output rendering: text tables, canonical-order JSON, and CSV.
//!
//! Certified integers are always rendered as decimal strings so consumers
//! never face 64-bit overflow, JSON objects keep a fixed key order so that
//! parse + re-serialize round-trips byte-identically, and rational endpoints
//! stay exact with a decimal rendering alongside.

use std::fmt::Write as _;

use genus_gaps_core::absgaps::RealizationWitness;
use genus_gaps_core::exact::{int, Rat};
use genus_gaps_core::intervals::CoverageCertificate;
use genus_gaps_core::nfold::NfoldBoundResult;
use genus_gaps_core::p3::{P3Report, RootBracket, RootTable};
use genus_gaps_core::surface::BoundProfile;
use genus_gaps_core::Int;
use serde_json::{json, Value};

use crate::Format;

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("rendered values are serializable")
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
}

pub fn surface(profile: &BoundProfile, cert: &CoverageCertificate, format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "polarized surface {}", cert.surface);
            let _ = writeln!(
                out,
                "discriminants: delta(0) = {}, delta(1) = {}",
                profile.delta0, profile.delta1
            );
            let _ = writeln!(
                out,
                "thresholds (eps = 0 | 1): n1 = {} | {}, n2 = {} | {}, n3 = {}, n0 = {} | {}, n0* = {}",
                profile.n1_0,
                profile.n1_1,
                profile.n2_0,
                profile.n2_1,
                profile.n3,
                profile.n0_0,
                profile.n0_1,
                profile.n0_star
            );
            let _ = writeln!(out, "threshold genus: phi = {}", profile.phi);
            let _ = writeln!(out, "interval chain:");
            for (k, iv) in cert.intervals.iter().enumerate() {
                let n = &cert.start_n + int(k as i64);
                let _ = writeln!(out, "  J_{n} = {iv}");
            }
            let _ = writeln!(
                out,
                "every genus g >= {} occurs on this surface; chain verified through n = {}",
                cert.threshold, cert.verified_up_to
            );
            out
        }
        Format::Json => {
            let intervals: Vec<Value> = cert
                .intervals
                .iter()
                .enumerate()
                .map(|(k, iv)| {
                    let n = &cert.start_n + int(k as i64);
                    json!({"n": s(n), "lo": s(iv.lo()), "hi": s(iv.hi())})
                })
                .collect();
            pretty(&json!({
                "delta0": s(&profile.delta0),
                "delta1": s(&profile.delta1),
                "n1": {"eps0": s(&profile.n1_0), "eps1": s(&profile.n1_1)},
                "n2": {"eps0": s(&profile.n2_0), "eps1": s(&profile.n2_1)},
                "n3": s(&profile.n3),
                "n0": {"eps0": s(&profile.n0_0), "eps1": s(&profile.n0_1), "star": s(&profile.n0_star)},
                "phi": s(&profile.phi),
                "intervals": intervals,
            }))
        }
        Format::Csv => csv_table(
            &[
                "delta0", "delta1", "n1_0", "n1_1", "n2_0", "n2_1", "n3", "n0_0", "n0_1",
                "n0_star", "phi",
            ],
            &[vec![
                profile.delta0.to_string(),
                profile.delta1.to_string(),
                profile.n1_0.to_string(),
                profile.n1_1.to_string(),
                profile.n2_0.to_string(),
                profile.n2_1.to_string(),
                profile.n3.to_string(),
                profile.n0_0.to_string(),
                profile.n0_1.to_string(),
                profile.n0_star.to_string(),
                profile.phi.to_string(),
            ]],
        ),
    }
}

fn root_json(bracket: &RootBracket) -> Value {
    json!({
        "lo": s(&bracket.lo),
        "hi": s(&bracket.hi),
        "decimal": bracket.display_value(),
    })
}

fn root_line(brackets: &[RootBracket]) -> String {
    brackets
        .iter()
        .map(|b| format!("{} in [{}, {}]", b.display_value(), b.lo, b.hi))
        .collect::<Vec<_>>()
        .join(", ")
}

/// The ratio cd_bound / d^3 as an exact rational.
fn cd_ratio(rep: &P3Report) -> Rat {
    let d3 = &rep.degree * &rep.degree * &rep.degree;
    Rat::new(rep.cd_bound.clone(), d3)
}

pub fn p3_single(rep: &P3Report, roots: &RootTable, format: Format) -> String {
    let ratio = cd_ratio(rep);
    match format {
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "degree-{} surface in projective 3-space: {}",
                rep.degree, rep.surface
            );
            let _ = writeln!(
                out,
                "discriminants: delta(0) = {}, delta(1) = {}",
                rep.profile.delta0, rep.profile.delta1
            );
            let _ = writeln!(
                out,
                "search thresholds (eps = 0 | 1): n1 = {} | {}, n2 = {} | {}, n3 = {}, n0* = {}, phi = {}",
                rep.profile.n1_0,
                rep.profile.n1_1,
                rep.profile.n2_0,
                rep.profile.n2_1,
                rep.profile.n3,
                rep.profile.n0_star,
                rep.profile.phi
            );
            let _ = writeln!(
                out,
                "closed forms (eps = 0 | 1): n1 = {} | {}, n2 = {} | {}, n3 = {} | {}",
                rep.closed_forms.n1_0,
                rep.closed_forms.n1_1,
                rep.closed_forms.n2_0,
                rep.closed_forms.n2_1,
                rep.closed_forms.n3_0,
                rep.closed_forms.n3_1
            );
            if rep.mismatches.is_empty() {
                let _ = writeln!(out, "warnings: none");
            } else {
                let _ = writeln!(out, "warnings:");
                for m in &rep.mismatches {
                    let _ = writeln!(out, "  {m}");
                }
            }
            let _ = writeln!(
                out,
                "genus bound: cd_bound = {} (cd_bound / d^3 = {})",
                rep.cd_bound, ratio
            );
            if let Some(v) = &rep.cd_bound_at_dm4 {
                let _ = writeln!(out, "bound at level d-4: {v}");
            }
            match &rep.gap_containment {
                Some(iv) => {
                    let _ = writeln!(out, "gaps, if any, are contained in {iv}");
                }
                None => {
                    let _ = writeln!(out, "gaps, if any, are unconstrained at this degree");
                }
            }
            let _ = writeln!(
                out,
                "discriminant roots per unit degree (eps 0): {}",
                root_line(&roots.eps0_roots)
            );
            let _ = writeln!(
                out,
                "discriminant roots per unit degree (eps 1): {}",
                root_line(&roots.eps1_roots)
            );
            for note in &rep.notes {
                let _ = writeln!(out, "note: {note}");
            }
            out
        }
        Format::Json => {
            let warnings: Vec<Value> = rep
                .mismatches
                .iter()
                .map(|m| {
                    json!({
                        "kind": m.kind.to_string(),
                        "eps": s(m.eps.as_int()),
                        "closed_form": s(&m.closed_form),
                        "general": s(&m.general),
                    })
                })
                .collect();
            let eps0: Vec<Value> = roots.eps0_roots.iter().map(root_json).collect();
            let eps1: Vec<Value> = roots.eps1_roots.iter().map(root_json).collect();
            pretty(&json!({
                "d": s(&rep.degree),
                "e": s(rep.surface.e()),
                "p": s(rep.surface.p()),
                "q": s(rep.surface.q()),
                "n4": s(rep.surface.n4()),
                "delta0": s(&rep.profile.delta0),
                "delta1": s(&rep.profile.delta1),
                "n1": {"eps0": s(&rep.profile.n1_0), "eps1": s(&rep.profile.n1_1)},
                "n2": {"eps0": s(&rep.profile.n2_0), "eps1": s(&rep.profile.n2_1)},
                "n3": s(&rep.profile.n3),
                "n0": {"eps0": s(&rep.profile.n0_0), "eps1": s(&rep.profile.n0_1), "star": s(&rep.profile.n0_star)},
                "phi": s(&rep.profile.phi),
                "closed_forms": {
                    "n1_0": s(&rep.closed_forms.n1_0),
                    "n1_1": s(&rep.closed_forms.n1_1),
                    "n2_0": s(&rep.closed_forms.n2_0),
                    "n2_1": s(&rep.closed_forms.n2_1),
                    "n3_0": s(&rep.closed_forms.n3_0),
                    "n3_1": s(&rep.closed_forms.n3_1),
                },
                "warnings": warnings,
                "cd_bound": s(&rep.cd_bound),
                "cd_bound_at_dm4": rep.cd_bound_at_dm4.as_ref().map(s).unwrap_or(Value::Null),
                "cd_over_d3": {"exact": s(&ratio), "decimal": genus_gaps_core::exact::decimal_string(&ratio, 4)},
                "gap_containment": rep.gap_containment.as_ref()
                    .map(|iv| json!({"lo": s(iv.lo()), "hi": s(iv.hi())}))
                    .unwrap_or(Value::Null),
                "roots": {"eps0": eps0, "eps1": eps1},
                "notes": rep.notes.clone(),
            }))
        }
        Format::Csv => p3_range(std::slice::from_ref(rep), Format::Csv),
    }
}

const P3_ROW_HEADER: [&str; 16] = [
    "d", "e", "p", "q", "n4", "delta0", "delta1", "n1_0", "n1_1", "n2_0", "n2_1", "n3", "n0_star",
    "phi", "cd_bound", "warnings",
];

fn p3_row(rep: &P3Report) -> Vec<String> {
    vec![
        rep.degree.to_string(),
        rep.surface.e().to_string(),
        rep.surface.p().to_string(),
        rep.surface.q().to_string(),
        rep.surface.n4().to_string(),
        rep.profile.delta0.to_string(),
        rep.profile.delta1.to_string(),
        rep.profile.n1_0.to_string(),
        rep.profile.n1_1.to_string(),
        rep.profile.n2_0.to_string(),
        rep.profile.n2_1.to_string(),
        rep.profile.n3.to_string(),
        rep.profile.n0_star.to_string(),
        rep.profile.phi.to_string(),
        rep.cd_bound.to_string(),
        rep.mismatches.len().to_string(),
    ]
}

/// Range mode is row-oriented: table and csv both emit CSV rows, json emits
/// an array of per-degree objects with the same fields.
pub fn p3_range(reps: &[P3Report], format: Format) -> String {
    match format {
        Format::Table | Format::Csv => {
            let rows: Vec<Vec<String>> = reps.iter().map(p3_row).collect();
            csv_table(&P3_ROW_HEADER, &rows)
        }
        Format::Json => {
            let rows: Vec<Value> = reps
                .iter()
                .map(|rep| {
                    let row = p3_row(rep);
                    let mut obj = serde_json::Map::new();
                    for (key, value) in P3_ROW_HEADER.iter().zip(row) {
                        obj.insert((*key).to_string(), Value::String(value));
                    }
                    Value::Object(obj)
                })
                .collect();
            pretty(&Value::Array(rows))
        }
    }
}

fn witness_mode(w: &RealizationWitness) -> &'static str {
    match w {
        RealizationWitness::SmallDegree => "small-degree",
        RealizationWitness::Severi { .. } => "severi",
        RealizationWitness::HighRange { .. } => "high-range",
    }
}

fn witness_json(d: &Int, g: &Int, w: &RealizationWitness) -> Value {
    match w {
        RealizationWitness::SmallDegree => json!({
            "d": s(d),
            "g": s(g),
            "mode": witness_mode(w),
            "note": "every genus occurs classically on surfaces of degree at most 4",
        }),
        RealizationWitness::Severi {
            n,
            delta,
            interval,
            standard_range,
        } => json!({
            "d": s(d),
            "g": s(g),
            "mode": witness_mode(w),
            "n": s(n),
            "delta": s(delta),
            "interval": {"lo": s(interval.lo()), "hi": s(interval.hi())},
            "standard_range": standard_range,
        }),
        RealizationWitness::HighRange {
            threshold,
            side_condition_ok,
        } => json!({
            "d": s(d),
            "g": s(g),
            "mode": witness_mode(w),
            "threshold": s(threshold),
            "side_condition_ok": side_condition_ok,
        }),
    }
}

const WITNESS_ROW_HEADER: [&str; 9] = [
    "d",
    "g",
    "mode",
    "n",
    "delta",
    "interval_lo",
    "interval_hi",
    "threshold",
    "side_condition_ok",
];

fn witness_row(d: &Int, g: &Int, w: &RealizationWitness) -> Vec<String> {
    let blank = String::new;
    match w {
        RealizationWitness::SmallDegree => vec![
            d.to_string(),
            g.to_string(),
            witness_mode(w).to_string(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
            blank(),
        ],
        RealizationWitness::Severi {
            n,
            delta,
            interval,
            standard_range: _,
        } => vec![
            d.to_string(),
            g.to_string(),
            witness_mode(w).to_string(),
            n.to_string(),
            delta.to_string(),
            interval.lo().to_string(),
            interval.hi().to_string(),
            blank(),
            blank(),
        ],
        RealizationWitness::HighRange {
            threshold,
            side_condition_ok,
        } => vec![
            d.to_string(),
            g.to_string(),
            witness_mode(w).to_string(),
            blank(),
            blank(),
            blank(),
            blank(),
            threshold.to_string(),
            side_condition_ok.to_string(),
        ],
    }
}

pub fn witness_single(d: &Int, g: &Int, w: &RealizationWitness, format: Format) -> String {
    match format {
        Format::Table => format!("d = {d}, g = {g}: {w}\n"),
        Format::Json => pretty(&witness_json(d, g, w)),
        Format::Csv => csv_table(&WITNESS_ROW_HEADER, &[witness_row(d, g, w)]),
    }
}

pub fn witness_rows(d: &Int, rows: &[(Int, RealizationWitness)], format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            for (g, w) in rows {
                let _ = writeln!(out, "d = {d}, g = {g}: {w}");
            }
            out
        }
        Format::Json => {
            let items: Vec<Value> = rows.iter().map(|(g, w)| witness_json(d, g, w)).collect();
            pretty(&Value::Array(items))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = rows.iter().map(|(g, w)| witness_row(d, g, w)).collect();
            csv_table(&WITNESS_ROW_HEADER, &rows)
        }
    }
}

pub fn absgaps_audit(d: &Int, g_lo: &Int, g_hi: &Int, format: Format) -> String {
    match format {
        Format::Table => format!(
            "audit pass: d = {d}, every genus in [{g_lo}, {g_hi}] has a re-verified witness and the coverage intervals leave no hole\n"
        ),
        Format::Json => pretty(&json!({
            "d": s(d),
            "g_lo": s(g_lo),
            "g_hi": s(g_hi),
            "result": "pass",
        })),
        Format::Csv => csv_table(
            &["d", "g_lo", "g_hi", "result"],
            &[vec![
                d.to_string(),
                g_lo.to_string(),
                g_hi.to_string(),
                "pass".to_string(),
            ]],
        ),
    }
}

pub fn nfold(result: &NfoldBoundResult, format: Format) -> String {
    match format {
        Format::Table => format!(
            "m_XL = {}\np_XL = {}\ntail certified from m = {}\n",
            result.m_xl, result.p_xl, result.tail_certified_from
        ),
        Format::Json => pretty(&json!({
            "m_XL": s(&result.m_xl),
            "p_XL": s(&result.p_xl),
            "tail_from": s(&result.tail_certified_from),
        })),
        Format::Csv => csv_table(
            &["m_XL", "p_XL", "tail_from"],
            &[vec![
                result.m_xl.to_string(),
                result.p_xl.to_string(),
                result.tail_certified_from.to_string(),
            ]],
        ),
    }
}

pub fn audit_rows(rows: &[(Int, Int)], format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            for (d, g_max) in rows {
                let _ = writeln!(
                    out,
                    "d = {d}: genera 0..={g_max} verified (witnesses, coverage, contiguity)"
                );
            }
            out
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(d, g_max)| json!({"d": s(d), "g_max": s(g_max), "result": "pass"}))
                .collect();
            pretty(&Value::Array(items))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|(d, g_max)| vec![d.to_string(), g_max.to_string(), "pass".to_string()])
                .collect();
            csv_table(&["d", "g_max", "result"], &rows)
        }
    }
}
