//! Analysis drivers shared by the subcommands and the acceptance suite.

use cibool::bf::GeneralizedFunction;
use cibool::ci::{self, CiError, CiOptions, CiOrderResult, CiVerdict};
use cibool::Method;
use std::collections::BTreeMap;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Ci(#[from] CiError),
    #[error(
        "sweep universe has 2^{bits} functions; the default guard is 2^{limit} (use --allow-large)"
    )]
    UniverseTooLarge { bits: u32, limit: u32 },
    #[error("sweep universe of 2^{bits} functions cannot be enumerated")]
    UniverseOverflow { bits: u32 },
}

/// Maximal-order analysis of one function under the selected methods.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub results: Vec<CiOrderResult>,
    pub elapsed_ms: Vec<u128>,
    /// False when any two methods report different orders, which signals an
    /// implementation bug: the criteria are provably equivalent.
    pub agreement: bool,
}

pub fn analyze_max(
    g: &GeneralizedFunction,
    methods: &[Method],
    opts: &CiOptions,
) -> Result<Analysis, CiError> {
    let mut results = Vec::with_capacity(methods.len());
    let mut elapsed_ms = Vec::with_capacity(methods.len());
    for &method in methods {
        let start = Instant::now();
        results.push(ci::ci_order_with_options(g, method, opts)?);
        elapsed_ms.push(start.elapsed().as_millis());
    }
    let agreement = results.windows(2).all(|w| w[0].order == w[1].order);
    Ok(Analysis {
        results,
        elapsed_ms,
        agreement,
    })
}

/// Fixed-order analysis: one verdict per method at order `t`.
pub fn analyze_at(
    g: &GeneralizedFunction,
    methods: &[Method],
    t: u32,
    opts: &CiOptions,
) -> Result<(Vec<CiVerdict>, bool), CiError> {
    let mut verdicts = Vec::with_capacity(methods.len());
    for &method in methods {
        verdicts.push(ci::ci_check(g, method, t, opts)?);
    }
    let agreement = verdicts.windows(2).all(|w| w[0].pass == w[1].pass);
    Ok((verdicts, agreement))
}

/// The function whose value sequence is `code` written in base `2^m`
/// (digit `k` = value at index `k`).
pub fn function_from_code(n: u32, m: u32, code: u128) -> GeneralizedFunction {
    let radix_bits = m;
    let mask = (1u128 << radix_bits) - 1;
    let values = (0..1u32 << n)
        .map(|k| ((code >> (radix_bits * k)) & mask) as u16)
        .collect();
    GeneralizedFunction::new(n, m, values).expect("code digits are in range")
}

/// Bits of entropy in the `(n, m)` function universe: `m·2^n`.
pub fn universe_bits(n: u32, m: u32) -> u32 {
    m * (1u32 << n)
}

pub struct SweepParams {
    pub n: u32,
    pub m: u32,
    pub methods: Vec<Method>,
    /// Also compare the single-order reading of the Fourier criteria against
    /// the accumulated one (reported, not asserted).
    pub probe_single_order: bool,
    /// Lifts the `2^20`-function guard.
    pub allow_large: bool,
    pub opts: CiOptions,
}

pub struct SweepOutcome {
    pub n: u32,
    pub m: u32,
    pub methods: Vec<Method>,
    pub total: u128,
    /// Per method: CI order → number of functions attaining it.
    pub histograms: Vec<BTreeMap<u32, u128>>,
    /// Pairwise order mismatches, indexed as methods × methods.
    pub disagreement_matrix: Vec<Vec<u128>>,
    pub disagreements: u128,
    /// First few codes (with per-method orders) where methods disagreed.
    pub first_disagreements: Vec<(u128, Vec<u32>)>,
    /// (function, method, order) triples where the single-order Fourier
    /// reading differed from the accumulated one.
    pub single_order_divergences: u128,
}

/// Default cap on sweep size: `2^20` functions.
pub const SWEEP_GUARD_BITS: u32 = 20;

pub fn run_sweep(params: &SweepParams) -> Result<SweepOutcome, EngineError> {
    let bits = universe_bits(params.n, params.m);
    if bits >= 127 {
        return Err(EngineError::UniverseOverflow { bits });
    }
    if !params.allow_large && bits > SWEEP_GUARD_BITS {
        return Err(EngineError::UniverseTooLarge {
            bits,
            limit: SWEEP_GUARD_BITS,
        });
    }
    let total = 1u128 << bits;
    let method_count = params.methods.len();
    let mut histograms = vec![BTreeMap::new(); method_count];
    let mut matrix = vec![vec![0u128; method_count]; method_count];
    let mut disagreements = 0u128;
    let mut first_disagreements = Vec::new();
    let mut single_order_divergences = 0u128;
    for code in 0..total {
        let g = function_from_code(params.n, params.m, code);
        let mut orders = Vec::with_capacity(method_count);
        for (idx, &method) in params.methods.iter().enumerate() {
            let order = ci::ci_order_with_options(&g, method, &params.opts)?.order;
            *histograms[idx].entry(order).or_insert(0) += 1;
            orders.push(order);
        }
        let mut mismatch = false;
        for a in 0..method_count {
            for b in a + 1..method_count {
                if orders[a] != orders[b] {
                    matrix[a][b] += 1;
                    matrix[b][a] += 1;
                    mismatch = true;
                }
            }
        }
        if mismatch {
            disagreements += 1;
            if first_disagreements.len() < 10 {
                first_disagreements.push((code, orders.clone()));
            }
        }
        if params.probe_single_order {
            single_order_divergences +=
                single_order_divergence_count(&g, &params.methods, &orders, &params.opts)?;
        }
    }
    Ok(SweepOutcome {
        n: params.n,
        m: params.m,
        methods: params.methods.clone(),
        total,
        histograms,
        disagreement_matrix: matrix,
        disagreements,
        first_disagreements,
        single_order_divergences,
    })
}

fn single_order_divergence_count(
    g: &GeneralizedFunction,
    methods: &[Method],
    orders: &[u32],
    opts: &CiOptions,
) -> Result<u128, CiError> {
    let mut divergences = 0u128;
    for (idx, &method) in methods.iter().enumerate() {
        let accumulated_order = orders[idx];
        for t in 1..=g.n() {
            let single = match method {
                Method::FourierGeneralized => ci::fourier_generalized_single_order(g, t, opts)?,
                Method::FourierComponent => {
                    let f = cibool::bf::MultiOutputFunction::from_generalized(g);
                    ci::fourier_component_single_order(&f, t, opts)?
                }
                _ => continue,
            };
            let accumulated = t <= accumulated_order;
            if single != accumulated {
                divergences += 1;
            }
        }
    }
    Ok(divergences)
}

/// One measured instance of the Walsh-method comparison.
pub struct BenchCase {
    pub label: String,
    pub pass: bool,
    pub component_evaluations: u64,
    pub generalized_evaluations: u64,
    pub component_nanos: u128,
    pub generalized_nanos: u128,
    /// Point lists and counters agree (trace self-consistency).
    pub trace_consistent: bool,
    /// On passing instances: measured counts equal the closed formulas.
    pub matches_formula: Option<bool>,
}

pub struct BenchOutcome {
    pub n: u32,
    pub m: u32,
    pub t: u32,
    pub component_formula: u128,
    pub generalized_formula: u128,
    pub ratio: (u128, u128),
    pub cases: Vec<BenchCase>,
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Measures spectral-point counts of the component-Walsh and
/// generalized-Walsh checks. Constant inputs pass every order, forcing the
/// full scan; random samples typically fail early and are reported as-is.
pub fn run_bench(
    n: u32,
    m: u32,
    t: u32,
    functions: Vec<(String, GeneralizedFunction)>,
) -> Result<BenchOutcome, CiError> {
    let component_formula = ci::op_count(Method::WalshComponent, n, m, t);
    let generalized_formula = ci::op_count(Method::WalshGeneralized, n, m, t);
    let d = gcd((1u128 << m) - 1, m as u128).max(1);
    let ratio = (((1u128 << m) - 1) / d, m as u128 / d);
    let mut cases = Vec::with_capacity(functions.len());
    for (label, g) in functions {
        let f = cibool::bf::MultiOutputFunction::from_generalized(&g);
        let start = Instant::now();
        let (component, component_report) = ci::ci_check_walsh_component_traced(&f, t)?;
        let component_nanos = start.elapsed().as_nanos();
        let start = Instant::now();
        let (generalized, generalized_report) = ci::ci_check_walsh_generalized_traced(&g, t)?;
        let generalized_nanos = start.elapsed().as_nanos();
        let pass = component.pass && generalized.pass;
        let trace_consistent = component_report.evaluation_count() == component.evaluations
            && generalized_report.evaluation_count() == generalized.evaluations;
        let matches_formula = pass.then(|| {
            component.evaluations as u128 == component_formula
                && generalized.evaluations as u128 == generalized_formula
        });
        cases.push(BenchCase {
            label,
            pass,
            component_evaluations: component.evaluations,
            generalized_evaluations: generalized.evaluations,
            component_nanos,
            generalized_nanos,
            trace_consistent,
            matches_formula,
        });
    }
    Ok(BenchOutcome {
        n,
        m,
        t,
        component_formula,
        generalized_formula,
        ratio,
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_enumeration_covers_the_universe() {
        assert_eq!(universe_bits(3, 2), 16);
        let g = function_from_code(3, 2, 0);
        assert!(g.values().iter().all(|&v| v == 0));
        let g = function_from_code(3, 2, 0b11_10_01);
        assert_eq!(g.values(), &[1, 2, 3, 0, 0, 0, 0, 0]);
        let top = function_from_code(3, 2, (1u128 << 16) - 1);
        assert!(top.values().iter().all(|&v| v == 3));
    }

    #[test]
    fn tiny_sweeps_match_known_distributions() {
        // n = 1, m = 1: both constants are first-order CI, x1 and its
        // complement are not.
        let outcome = run_sweep(&SweepParams {
            n: 1,
            m: 1,
            methods: Method::ALL.to_vec(),
            probe_single_order: true,
            allow_large: false,
            opts: CiOptions::default(),
        })
        .unwrap();
        assert_eq!(outcome.total, 4);
        assert_eq!(outcome.disagreements, 0);
        assert_eq!(outcome.single_order_divergences, 0);
        for histogram in &outcome.histograms {
            assert_eq!(histogram.get(&1), Some(&2));
            assert_eq!(histogram.get(&0), Some(&2));
        }

        // n = 2, m = 1: XOR and XNOR attain order 1, constants order 2.
        let outcome = run_sweep(&SweepParams {
            n: 2,
            m: 1,
            methods: Method::ALL.to_vec(),
            probe_single_order: true,
            allow_large: false,
            opts: CiOptions::default(),
        })
        .unwrap();
        assert_eq!(outcome.total, 16);
        assert_eq!(outcome.disagreements, 0);
        let histogram = &outcome.histograms[0];
        assert_eq!(histogram.get(&2), Some(&2));
        assert_eq!(histogram.get(&1), Some(&2));
        assert_eq!(histogram.get(&0), Some(&12));
        let xor = function_from_code(2, 1, 0b0110);
        assert_eq!(ci::ci_order(&xor, Method::Definition).unwrap().order, 1);
    }

    #[test]
    fn sweep_guard() {
        let params = SweepParams {
            n: 3,
            m: 3,
            methods: vec![Method::Definition],
            probe_single_order: false,
            allow_large: false,
            opts: CiOptions::default(),
        };
        assert!(matches!(
            run_sweep(&params),
            Err(EngineError::UniverseTooLarge { bits: 24, .. })
        ));
    }

    #[test]
    fn bench_counts_on_constants() {
        let constant = GeneralizedFunction::constant(10, 4, 0).unwrap();
        let outcome = run_bench(10, 4, 2, vec![("constant".into(), constant)]).unwrap();
        assert_eq!(outcome.component_formula, 825);
        assert_eq!(outcome.generalized_formula, 220);
        assert_eq!(outcome.ratio, (15, 4));
        let case = &outcome.cases[0];
        assert!(case.pass);
        assert_eq!(case.component_evaluations, 825);
        assert_eq!(case.generalized_evaluations, 220);
        assert!(case.trace_consistent);
        assert_eq!(case.matches_formula, Some(true));
    }

    #[test]
    fn bench_zero_order() {
        let constant = GeneralizedFunction::constant(4, 2, 1).unwrap();
        let outcome = run_bench(4, 2, 0, vec![("constant".into(), constant)]).unwrap();
        assert_eq!(outcome.component_formula, 0);
        assert_eq!(outcome.generalized_formula, 0);
        assert_eq!(outcome.cases[0].component_evaluations, 0);
        assert_eq!(outcome.cases[0].generalized_evaluations, 0);
    }
}
