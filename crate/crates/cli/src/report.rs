//! JSON report assembly. Every report carries `"schema": 1` at the top level
//! so downstream automation can pin the layout.

use crate::engine::{Analysis, BenchOutcome, SweepOutcome};
use cibool::bf::GeneralizedFunction;
use cibool::ci::{CiVerdict, Witness};
use cibool::cyclo::CycloInt;
use cibool::spectra::SpectralReport;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

pub fn cyclo_json(value: &CycloInt) -> Value {
    json!({ "level": value.level(), "text": value.to_string() })
}

pub fn witness_json(witness: &Witness) -> Value {
    match witness {
        Witness::Distribution {
            positions,
            assignment,
            output,
        } => json!({
            "kind": "distribution",
            "positions": positions,
            "assignment": assignment.iter().map(|&b| b as u8).collect::<Vec<_>>(),
            "output": output,
        }),
        Witness::WalshComponentPoint { u, v, value } => json!({
            "kind": "walsh-component-point",
            "u": u,
            "v": v,
            "value": value,
        }),
        Witness::WalshGeneralizedPoint {
            c,
            root_index,
            value,
        } => json!({
            "kind": "walsh-generalized-point",
            "c": c,
            "root_index": root_index,
            "value": cyclo_json(value),
        }),
        Witness::FourierGeneralizedPoint {
            permutation,
            root_index,
            order,
            value,
        } => json!({
            "kind": "fourier-generalized-point",
            "permutation": permutation,
            "root_index": root_index,
            "order": order,
            "value": cyclo_json(value),
        }),
        Witness::FourierComponentPoint {
            output_mask,
            permutation,
            order,
            value,
        } => json!({
            "kind": "fourier-component-point",
            "output_mask": output_mask,
            "permutation": permutation,
            "order": order,
            "value": cyclo_json(value),
        }),
    }
}

pub fn verdict_json(verdict: &CiVerdict) -> Value {
    json!({
        "method": verdict.method.name(),
        "order": verdict.order,
        "pass": verdict.pass,
        "evaluations": verdict.evaluations,
        "witness": verdict.witness.as_ref().map(witness_json),
    })
}

pub fn spectral_report_json(report: &SpectralReport) -> Value {
    let points: Vec<Value> = report
        .points
        .iter()
        .map(|p| {
            json!({
                "order": p.order,
                "input_mask": p.input_mask,
                "root_index": p.root_index,
                "output_mask": p.output_mask,
                "permutation": p.permutation,
                "vanished": p.vanished,
            })
        })
        .collect();
    json!({
        "method": report.method.name(),
        "evaluation_count": report.evaluation_count(),
        "points": points,
    })
}

pub fn input_json(g: &GeneralizedFunction, source: &str) -> Value {
    json!({
        "source": source,
        "digest": crate::format::digest(g),
        "n": g.n(),
        "m": g.m(),
    })
}

pub fn analysis_json(g: &GeneralizedFunction, source: &str, analysis: &Analysis) -> Value {
    let methods: Vec<Value> = analysis
        .results
        .iter()
        .zip(&analysis.elapsed_ms)
        .map(|(result, &ms)| {
            json!({
                "method": result.method.name(),
                "ci_order": result.order,
                "elapsed_ms": ms,
                "verdicts": result.verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
                "evaluations": result.verdicts.iter().map(|v| v.evaluations).sum::<u64>(),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "command": "ci",
        "input": input_json(g, source),
        "order": "max",
        "methods": methods,
        "agreement": analysis.agreement,
    })
}

pub fn fixed_order_json(
    g: &GeneralizedFunction,
    source: &str,
    t: u32,
    verdicts: &[CiVerdict],
    agreement: bool,
) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "command": "ci",
        "input": input_json(g, source),
        "order": t,
        "methods": verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
        "agreement": agreement,
    })
}

pub fn sweep_json(outcome: &SweepOutcome, elapsed_ms: u128) -> Value {
    let histograms: Vec<Value> = outcome
        .methods
        .iter()
        .zip(&outcome.histograms)
        .map(|(method, histogram)| {
            json!({
                "method": method.name(),
                "orders": histogram
                    .iter()
                    .map(|(order, count)| json!({ "order": order, "functions": count.to_string() }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "command": "sweep",
        "n": outcome.n,
        "m": outcome.m,
        "methods": outcome.methods.iter().map(|m| m.name()).collect::<Vec<_>>(),
        "functions": outcome.total.to_string(),
        "disagreements": outcome.disagreements.to_string(),
        "disagreement_matrix": outcome
            .disagreement_matrix
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "first_disagreements": outcome
            .first_disagreements
            .iter()
            .map(|(code, orders)| json!({ "code": code.to_string(), "orders": orders }))
            .collect::<Vec<_>>(),
        "single_order_divergences": outcome.single_order_divergences.to_string(),
        "histograms": histograms,
        "elapsed_ms": elapsed_ms,
    })
}

pub fn bench_json(outcome: &BenchOutcome) -> Value {
    let cases: Vec<Value> = outcome
        .cases
        .iter()
        .map(|case| {
            json!({
                "label": case.label,
                "pass": case.pass,
                "walsh_component": {
                    "evaluations": case.component_evaluations,
                    "wall_ns": case.component_nanos.to_string(),
                },
                "walsh_generalized": {
                    "evaluations": case.generalized_evaluations,
                    "wall_ns": case.generalized_nanos.to_string(),
                },
                "trace_consistent": case.trace_consistent,
                "matches_formula": case.matches_formula,
            })
        })
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "command": "bench",
        "n": outcome.n,
        "m": outcome.m,
        "t": outcome.t,
        "formula": {
            "walsh_component": outcome.component_formula.to_string(),
            "walsh_generalized": outcome.generalized_formula.to_string(),
            "ratio": format!("{}/{}", outcome.ratio.0, outcome.ratio.1),
        },
        "cases": cases,
    })
}
