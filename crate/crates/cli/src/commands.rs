//! Subcommand argument structures and implementations.
//!
//! Exit codes: 0 on success, 1 on input/usage errors, 2 when the methods
//! disagree — they are provably equivalent, so a disagreement is a bug
//! sentinel, not a property of the input.

use crate::engine::{self, EngineError};
use crate::format::{self, ParseError};
use crate::report;
use cibool::bf::{GeneralizedFunction, MultiOutputFunction};
use cibool::ci::{CiError, CiOptions};
use cibool::spectra::{self, SpectraError};
use cibool::Method;
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_DISAGREEMENT: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Ci(#[from] CiError),
    #[error("{0}")]
    Spectra(#[from] SpectraError),
    #[error("{0}")]
    Engine(#[from] EngineError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Parser, Debug)]
#[command(
    name = "cibool",
    version,
    about = "Correlation-immunity analysis of multi-output Boolean functions, in exact arithmetic"
)]
pub struct Cli {
    /// Write a JSON report to this path ("-" for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Print only the essential result lines.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Lift the built-in size guards (permutation enumeration, sweep size).
    #[arg(long, global = true)]
    pub allow_large: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide correlation immunity with one or all methods.
    Ci(CiArgs),
    /// Enumerate a whole (n, m) function universe and cross-check methods.
    Sweep(SweepArgs),
    /// Measure spectral-point counts of the two Walsh criteria.
    Bench(BenchArgs),
    /// Evaluate spectra at chosen points and print exact values.
    Spectrum(SpectrumArgs),
    /// Convert between truth-table and ANF representations.
    Convert(ConvertArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Truth-table file: header "n m", then 2^n values in index order.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// ANF expression such as "2*x1*x2 + x3 + 1"; requires --n and --m.
    #[arg(long, value_name = "EXPR", conflicts_with = "input")]
    pub anf: Option<String>,
    #[arg(long, value_name = "N")]
    pub n: Option<u32>,
    #[arg(long, value_name = "M")]
    pub m: Option<u32>,
}

#[derive(Args, Debug)]
pub struct CiArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// "all" or a comma-separated subset of: definition, walsh-component,
    /// walsh-generalized, fourier-generalized, fourier-component.
    #[arg(long, default_value = "all")]
    pub method: String,
    /// "max" to search the maximal order, or an explicit order t.
    #[arg(long, default_value = "max")]
    pub order: String,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m: u32,
    /// "all" or a comma-separated method list.
    #[arg(long, default_value = "all")]
    pub methods: String,
    /// Skip the single-order/accumulated comparison of the Fourier criteria.
    #[arg(long)]
    pub no_single_order_probe: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub t: u32,
    /// Number of uniformly random functions measured besides the constant.
    #[arg(long, default_value_t = 0)]
    pub samples: u64,
    #[arg(long, default_value_t = 0xC1B0)]
    pub seed: u64,
    /// Measure a supplied truth-table file as an extra case.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// walsh-component | walsh-generalized | dft
    #[arg(long)]
    pub transform: String,
    /// Output mask v (walsh-component).
    #[arg(long)]
    pub v: Option<u32>,
    /// Root index i (walsh-generalized, dft).
    #[arg(long)]
    pub i: Option<u32>,
    /// Evaluate at all masks of weight up to this bound.
    #[arg(long, value_name = "W")]
    pub max_weight: Option<u32>,
    /// Explicit points: masks (walsh) or frequencies (dft). Repeatable.
    #[arg(long = "point", value_name = "P")]
    pub points: Vec<u32>,
    /// For dft: evaluate at the order-t frequency 2^(n-t). Repeatable.
    #[arg(long = "order", value_name = "T")]
    pub orders: Vec<u32>,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// anf | table
    #[arg(long)]
    pub to: String,
}

pub fn run(cli: Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Ci(args) => run_ci(&cli, args),
        Command::Sweep(args) => run_sweep(&cli, args),
        Command::Bench(args) => run_bench(&cli, args),
        Command::Spectrum(args) => run_spectrum(&cli, args),
        Command::Convert(args) => run_convert(&cli, args),
    }
}

fn load_function(input: &InputArgs) -> Result<(GeneralizedFunction, String), CliError> {
    match (&input.input, &input.anf) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            let g = format::parse_truth_table(&text)?;
            Ok((g, path.display().to_string()))
        }
        (None, Some(expr)) => {
            let (n, m) = match (input.n, input.m) {
                (Some(n), Some(m)) => (n, m),
                _ => return Err(CliError::Usage("--anf requires --n and --m".to_string())),
            };
            let g = format::parse_anf(expr, n, m)?;
            Ok((g, format!("anf:{expr}")))
        }
        _ => Err(CliError::Usage(
            "provide exactly one of --input FILE or --anf EXPR".to_string(),
        )),
    }
}

fn parse_methods(selection: &str) -> Result<Vec<Method>, CliError> {
    if selection == "all" {
        return Ok(Method::ALL.to_vec());
    }
    selection
        .split(',')
        .map(|name| {
            name.trim()
                .parse::<Method>()
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

fn options_for(cli: &Cli, n: u32) -> CiOptions {
    let mut opts = CiOptions::default();
    if cli.allow_large {
        opts.max_permutation_n = opts.max_permutation_n.max(n);
    }
    opts
}

fn permutation_hint(err: CiError) -> CliError {
    if matches!(err, CiError::PermutationLimit { .. }) {
        CliError::Usage(format!(
            "{err}; pass --allow-large to lift the cap, or restrict --method"
        ))
    } else {
        CliError::Ci(err)
    }
}

/// True when the JSON report is routed to stdout; plain-text output is
/// suppressed in that case so stdout stays machine-parseable.
fn json_to_stdout(cli: &Cli) -> bool {
    cli.json
        .as_deref()
        .map(|p| p.as_os_str() == "-")
        .unwrap_or(false)
}

fn write_json(cli: &Cli, value: &Value) -> Result<(), CliError> {
    if let Some(path) = &cli.json {
        let text = serde_json::to_string_pretty(value)?;
        if path.as_os_str() == "-" {
            println!("{text}");
        } else {
            std::fs::write(path, text + "\n")?;
        }
    }
    Ok(())
}

fn run_ci(cli: &Cli, args: &CiArgs) -> Result<u8, CliError> {
    let (g, source) = load_function(&args.input)?;
    let methods = parse_methods(&args.method)?;
    let opts = options_for(cli, g.n());
    let text_out = !json_to_stdout(cli);
    if text_out && !cli.quiet {
        println!(
            "input: {source} (n={}, m={}, {})",
            g.n(),
            g.m(),
            format::digest(&g)
        );
    }
    if args.order == "max" {
        let analysis = engine::analyze_max(&g, &methods, &opts).map_err(permutation_hint)?;
        if text_out && !cli.quiet {
            for (result, ms) in analysis.results.iter().zip(&analysis.elapsed_ms) {
                let evaluations: u64 = result.verdicts.iter().map(|v| v.evaluations).sum();
                println!(
                    "{}: ci_order = {} (evaluations: {evaluations}, {ms} ms)",
                    result.method.name(),
                    result.order
                );
            }
        }
        let mut report_value = report::analysis_json(&g, &source, &analysis);
        if cli.json.is_some() {
            // Point-level evidence for the Walsh methods, taken just past the
            // certified order so the first non-vanishing point is on record.
            let boundary = analysis
                .results
                .first()
                .map(|r| (r.order + 1).min(g.n()))
                .unwrap_or(0);
            report_value["spectral_reports"] = walsh_trace_json(&g, &methods, boundary)?;
        }
        write_json(cli, &report_value)?;
        if !analysis.agreement {
            let summary: Vec<String> = analysis
                .results
                .iter()
                .map(|r| format!("{}={}", r.method.name(), r.order))
                .collect();
            eprintln!(
                "error: methods disagree on the CI order ({}); this is an implementation bug",
                summary.join(", ")
            );
            return Ok(EXIT_DISAGREEMENT);
        }
        if text_out {
            if methods.len() > 1 {
                println!(
                    "ci_order = {} (all {} methods agree)",
                    analysis.results[0].order,
                    methods.len()
                );
            } else {
                println!(
                    "ci_order = {} ({})",
                    analysis.results[0].order,
                    methods[0].name()
                );
            }
        }
    } else {
        let t: u32 = args.order.parse().map_err(|_| {
            CliError::Usage(format!(
                "--order must be \"max\" or an integer, got `{}`",
                args.order
            ))
        })?;
        let (verdicts, agreement) =
            engine::analyze_at(&g, &methods, t, &opts).map_err(permutation_hint)?;
        if text_out && !cli.quiet {
            for v in &verdicts {
                println!(
                    "{}: {} at t={t} (evaluations: {})",
                    v.method.name(),
                    if v.pass { "pass" } else { "FAIL" },
                    v.evaluations
                );
            }
        }
        let mut report_value = report::fixed_order_json(&g, &source, t, &verdicts, agreement);
        if cli.json.is_some() {
            report_value["spectral_reports"] = walsh_trace_json(&g, &methods, t)?;
        }
        write_json(cli, &report_value)?;
        if !agreement {
            eprintln!("error: methods disagree at t={t}; this is an implementation bug");
            return Ok(EXIT_DISAGREEMENT);
        }
        if text_out {
            println!(
                "result at t={t}: {}",
                if verdicts.iter().all(|v| v.pass) {
                    "pass"
                } else {
                    "FAIL"
                }
            );
        }
    }
    Ok(EXIT_OK)
}

fn walsh_trace_json(
    g: &GeneralizedFunction,
    methods: &[Method],
    t: u32,
) -> Result<Value, CliError> {
    let mut traces = Vec::new();
    if methods.contains(&Method::WalshComponent) {
        let f = MultiOutputFunction::from_generalized(g);
        let (_, trace) = cibool::ci::ci_check_walsh_component_traced(&f, t)?;
        traces.push(report::spectral_report_json(&trace));
    }
    if methods.contains(&Method::WalshGeneralized) {
        let (_, trace) = cibool::ci::ci_check_walsh_generalized_traced(g, t)?;
        traces.push(report::spectral_report_json(&trace));
    }
    Ok(Value::Array(traces))
}

fn run_sweep(cli: &Cli, args: &SweepArgs) -> Result<u8, CliError> {
    let methods = parse_methods(&args.methods)?;
    let params = engine::SweepParams {
        n: args.n,
        m: args.m,
        methods,
        probe_single_order: !args.no_single_order_probe,
        allow_large: cli.allow_large,
        opts: options_for(cli, args.n),
    };
    let start = Instant::now();
    let outcome = engine::run_sweep(&params).map_err(|e| match e {
        EngineError::Ci(inner) => permutation_hint(inner),
        other => CliError::Engine(other),
    })?;
    let elapsed = start.elapsed().as_millis();
    let text_out = !json_to_stdout(cli);
    if text_out && !cli.quiet {
        println!(
            "sweep n={} m={}: {} functions, {} methods, {elapsed} ms",
            outcome.n,
            outcome.m,
            outcome.total,
            outcome.methods.len()
        );
        for (method, histogram) in outcome.methods.iter().zip(&outcome.histograms) {
            let cells: Vec<String> = histogram
                .iter()
                .map(|(order, count)| format!("{order}:{count}"))
                .collect();
            println!("  {} order histogram: {}", method.name(), cells.join(" "));
        }
        println!(
            "  single-order fourier divergences: {}",
            outcome.single_order_divergences
        );
    }
    if text_out {
        println!("disagreements: {}", outcome.disagreements);
    }
    write_json(cli, &report::sweep_json(&outcome, elapsed))?;
    if outcome.disagreements > 0 {
        for (code, orders) in &outcome.first_disagreements {
            eprintln!("disagreement at function code {code}: orders {orders:?}");
        }
        return Ok(EXIT_DISAGREEMENT);
    }
    Ok(EXIT_OK)
}

fn run_bench(cli: &Cli, args: &BenchArgs) -> Result<u8, CliError> {
    let mut cases: Vec<(String, GeneralizedFunction)> = vec![(
        "constant".to_string(),
        GeneralizedFunction::constant(args.n, args.m, 0).map_err(CiError::from)?,
    )];
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for s in 0..args.samples {
        let values = (0..1usize << args.n)
            .map(|_| rng.gen_range(0..1u32 << args.m) as u16)
            .collect();
        let g = GeneralizedFunction::new(args.n, args.m, values).map_err(CiError::from)?;
        cases.push((format!("sample-{s}"), g));
    }
    if let Some(path) = &args.input {
        let g = format::parse_truth_table(&std::fs::read_to_string(path)?)?;
        if g.n() != args.n || g.m() != args.m {
            return Err(CliError::Usage(format!(
                "supplied function is ({}, {}), expected ({}, {})",
                g.n(),
                g.m(),
                args.n,
                args.m
            )));
        }
        cases.push((path.display().to_string(), g));
    }
    let outcome = engine::run_bench(args.n, args.m, args.t, cases)?;
    let text_out = !json_to_stdout(cli);
    if text_out && !cli.quiet {
        println!(
            "walsh-component formula (2^m-1)*sum C(n,j): {}",
            outcome.component_formula
        );
        println!(
            "walsh-generalized formula m*sum C(n,j): {}",
            outcome.generalized_formula
        );
    }
    if text_out {
        println!("count ratio: {}/{}", outcome.ratio.0, outcome.ratio.1);
    }
    let mut formula_violated = false;
    for case in &outcome.cases {
        let status = match case.matches_formula {
            Some(true) => "matches formulas",
            Some(false) => {
                formula_violated = true;
                "COUNT MISMATCH"
            }
            None => "failed early (counts as measured)",
        };
        if text_out {
            println!(
                "case {}: component={} pts ({} ns), generalized={} pts ({} ns), {status}",
                case.label,
                case.component_evaluations,
                case.component_nanos,
                case.generalized_evaluations,
                case.generalized_nanos
            );
        }
        if !case.trace_consistent {
            formula_violated = true;
            eprintln!("error: point trace disagrees with the evaluation counter");
        }
    }
    write_json(cli, &report::bench_json(&outcome))?;
    if formula_violated {
        eprintln!(
            "error: measured counts contradict the closed formulas; this is an implementation bug"
        );
        return Ok(EXIT_DISAGREEMENT);
    }
    Ok(EXIT_OK)
}

fn run_spectrum(cli: &Cli, args: &SpectrumArgs) -> Result<u8, CliError> {
    let (g, source) = load_function(&args.input)?;
    let n = g.n();
    let mask_points = |args: &SpectrumArgs| -> Result<Vec<u32>, CliError> {
        if !args.points.is_empty() {
            return Ok(args.points.clone());
        }
        if let Some(w) = args.max_weight {
            return Ok((0..1u32 << n).filter(|u| u.count_ones() <= w).collect());
        }
        Err(CliError::Usage(
            "select points with --point or --max-weight".to_string(),
        ))
    };
    let mut lines = Vec::new();
    let mut json_points = Vec::new();
    match args.transform.as_str() {
        "walsh-component" => {
            let v = args
                .v
                .ok_or_else(|| CliError::Usage("walsh-component requires --v".to_string()))?;
            let f = MultiOutputFunction::from_generalized(&g);
            for u in mask_points(args)? {
                let value = spectra::walsh_component(&f, u, v)?;
                lines.push(format!("u={u} v={v}: {value}"));
                json_points.push(json!({
                    "u": u, "v": v, "value": value, "vanished": value == 0,
                }));
            }
        }
        "walsh-generalized" => {
            let i = args
                .i
                .ok_or_else(|| CliError::Usage("walsh-generalized requires --i".to_string()))?;
            for c in mask_points(args)? {
                let value = spectra::walsh_generalized(&g, c, i)?;
                lines.push(format!("c={c} i={i}: {value}"));
                json_points.push(json!({
                    "c": c, "i": i, "value": report::cyclo_json(&value),
                    "vanished": value.is_zero(),
                }));
            }
        }
        "dft" => {
            let i = args
                .i
                .ok_or_else(|| CliError::Usage("dft requires --i".to_string()))?;
            let mut freqs: Vec<u32> = args.points.clone();
            for &t in &args.orders {
                if t == 0 || t > n {
                    return Err(CliError::Usage(format!("--order {t} outside 1..={n}")));
                }
                freqs.push(1u32 << (n - t));
            }
            if freqs.is_empty() {
                return Err(CliError::Usage(
                    "select dft points with --point or --order".to_string(),
                ));
            }
            for j in freqs {
                let value = spectra::dft_point(&g, i, j)?;
                lines.push(format!("j={j} i={i}: {value}"));
                json_points.push(json!({
                    "j": j, "i": i, "value": report::cyclo_json(&value),
                    "vanished": value.is_zero(),
                }));
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown transform `{other}` (walsh-component | walsh-generalized | dft)"
            )))
        }
    }
    if !json_to_stdout(cli) {
        for line in &lines {
            println!("{line}");
        }
    }
    write_json(
        cli,
        &json!({
            "schema": report::SCHEMA_VERSION,
            "command": "spectrum",
            "transform": args.transform,
            "input": report::input_json(&g, &source),
            "points": json_points,
        }),
    )?;
    Ok(EXIT_OK)
}

fn run_convert(cli: &Cli, args: &ConvertArgs) -> Result<u8, CliError> {
    let (g, source) = load_function(&args.input)?;
    let rendered = match args.to.as_str() {
        "anf" => format::render_anf(&g.anf()) + "\n",
        "table" => format::render_truth_table(&g),
        other => {
            return Err(CliError::Usage(format!(
                "unknown target `{other}` (anf | table)"
            )))
        }
    };
    if !json_to_stdout(cli) {
        print!("{rendered}");
    }
    write_json(
        cli,
        &json!({
            "schema": report::SCHEMA_VERSION,
            "command": "convert",
            "to": args.to,
            "input": report::input_json(&g, &source),
            "output": rendered.trim_end(),
        }),
    )?;
    Ok(EXIT_OK)
}
