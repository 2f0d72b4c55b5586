//! Spectral transforms with exact values: component Walsh sums, Walsh sums of
//! the generalized form, and the discrete Fourier transform of generalized
//! value sequences at roots of unity.
//!
//! Component Walsh values are plain integers. Everything else lands in
//! [`CycloInt`], at the smallest ring level that hosts the point exactly.

use crate::bf::{GeneralizedFunction, MultiOutputFunction};
use crate::cyclo::CycloInt;
use crate::Method;
use thiserror::Error;

/// Errors from spectral evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("output mask v must be nonzero")]
    ZeroOutputMask,
    #[error("output mask {mask:#x} has bits above m = {m}")]
    OutputMaskOutOfRange { mask: u32, m: u32 },
    #[error("input mask {mask:#x} has bits above n = {n}")]
    InputMaskOutOfRange { mask: u32, n: u32 },
    #[error("root index {i} outside 1..={m}")]
    RootIndexOutOfRange { i: u32, m: u32 },
    #[error("frequency {j} outside 0..{limit}")]
    FrequencyOutOfRange { j: u32, limit: u64 },
    #[error("order {t} outside 1..={n}")]
    OrderOutOfRange { t: u32, n: u32 },
}

/// One evaluated spectral point, as listed in a [`SpectralReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPoint {
    /// Mask weight or checked order the point belongs to, when applicable.
    pub order: Option<u32>,
    /// Input-side mask (`u` or `c`), when applicable.
    pub input_mask: Option<u32>,
    /// Root index `i`, when applicable.
    pub root_index: Option<u32>,
    /// Output-side mask `v`, when applicable.
    pub output_mask: Option<u32>,
    /// Variable permutation (1-based image), when one was applied.
    pub permutation: Option<Vec<u32>>,
    /// Whether the value at this point was exactly zero.
    pub vanished: bool,
}

/// Record of which spectral points a check evaluated and which vanished.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralReport {
    pub method: Method,
    pub points: Vec<SpectralPoint>,
}

impl SpectralReport {
    pub fn new(method: Method) -> Self {
        SpectralReport {
            method,
            points: Vec::new(),
        }
    }

    /// Total evaluations; equals the number of listed points by construction.
    pub fn evaluation_count(&self) -> u64 {
        self.points.len() as u64
    }
}

fn check_output_mask(v: u32, m: u32) -> Result<(), SpectraError> {
    if v == 0 {
        return Err(SpectraError::ZeroOutputMask);
    }
    if v >> m != 0 {
        return Err(SpectraError::OutputMaskOutOfRange { mask: v, m });
    }
    Ok(())
}

fn check_root_index(i: u32, m: u32) -> Result<(), SpectraError> {
    if i == 0 || i > m {
        return Err(SpectraError::RootIndexOutOfRange { i, m });
    }
    Ok(())
}

/// The Walsh transform of the component combination `v·f` at mask `u`:
/// `Σ_x (−1)^{v·f(x) + u·x}`. An integer with `|value| ≤ 2^n` and the parity
/// of `2^n`. Rejects `v = 0`.
pub fn walsh_component(f: &MultiOutputFunction, u: u32, v: u32) -> Result<i64, SpectraError> {
    check_output_mask(v, f.m())?;
    if u as u64 >> f.n() != 0 {
        return Err(SpectraError::InputMaskOutOfRange { mask: u, n: f.n() });
    }
    let combo = f.component_combination(v).expect("mask validated above");
    let mut acc = 0i64;
    for (k, &bit) in combo.values().iter().enumerate() {
        let parity = (bit as u32 + (u & k as u32).count_ones()) & 1;
        acc += 1 - 2 * parity as i64;
    }
    Ok(acc)
}

/// All `2^n` Walsh values of `v·f` at once, via the in-place butterfly
/// (n·2^n additions). `result[u]` equals [`walsh_component`]`(f, u, v)`.
pub fn fast_walsh_all(f: &MultiOutputFunction, v: u32) -> Result<Vec<i64>, SpectraError> {
    check_output_mask(v, f.m())?;
    let combo = f.component_combination(v).expect("mask validated above");
    let mut w: Vec<i64> = combo
        .values()
        .iter()
        .map(|&bit| 1 - 2 * bit as i64)
        .collect();
    let len = w.len();
    let mut h = 1;
    while h < len {
        let mut base = 0;
        while base < len {
            for k in base..base + h {
                let (a, b) = (w[k], w[k + h]);
                w[k] = a + b;
                w[k + h] = a - b;
            }
            base += 2 * h;
        }
        h <<= 1;
    }
    Ok(w)
}

/// The level-`i` Walsh sum of the generalized form at mask `c`:
/// `Σ_x ω_i^{g(x)} (−1)^{c·x}` with `ω_i = ζ_{2^i}`. At `i = 1` this is the
/// component Walsh value of the low output bit, embedded as an integer.
pub fn walsh_generalized(
    g: &GeneralizedFunction,
    c: u32,
    i: u32,
) -> Result<CycloInt, SpectraError> {
    check_root_index(i, g.m())?;
    if c as u64 >> g.n() != 0 {
        return Err(SpectraError::InputMaskOutOfRange { mask: c, n: g.n() });
    }
    let residue = (1u32 << i) - 1;
    let mut counts = vec![0i64; 1usize << i];
    for (k, &value) in g.values().iter().enumerate() {
        let e = (value as u32 & residue) as usize;
        if (c & k as u32).count_ones() & 1 == 0 {
            counts[e] += 1;
        } else {
            counts[e] -= 1;
        }
    }
    Ok(CycloInt::from_counts(i, &counts))
}

/// The discrete Fourier transform of the level-`i` root sequence of `g` at
/// frequency `j`: `Σ_k ω_i^{g(k)} ξ^{-kj}` with `ξ = ζ_{2^n}`.
///
/// The value is computed at the smallest ring level that contains it: level
/// `max(i, s)` where `2^s` is the multiplicative order of `ξ^{-j}`. In
/// particular `j = 2^{n-t}` needs only level `max(i, t)`, and `j = 0`
/// coincides with the mask-zero generalized Walsh sum.
pub fn dft_point(g: &GeneralizedFunction, i: u32, j: u32) -> Result<CycloInt, SpectraError> {
    check_root_index(i, g.m())?;
    let n = g.n();
    if j as u64 >= 1u64 << n {
        return Err(SpectraError::FrequencyOutOfRange {
            j,
            limit: 1u64 << n,
        });
    }
    if j == 0 {
        return walsh_generalized(g, 0, i);
    }
    let tz = j.trailing_zeros();
    let s = n - tz;
    let j_odd = (j >> tz) as u64;
    let level = i.max(s);
    let period = 1u64 << level;
    let residue = (1u32 << i) - 1;
    let mut counts = vec![0i64; period as usize];
    for (k, &value) in g.values().iter().enumerate() {
        let root_part = ((value as u32 & residue) as u64) << (level - i);
        let freq_part = ((k as u64 * j_odd) & ((1u64 << s) - 1)) << (level - s);
        let e = (root_part + (period - freq_part) % period) % period;
        counts[e as usize] += 1;
    }
    Ok(CycloInt::from_counts(level, &counts))
}

/// The order-`t` evaluation of the sequence polynomial
/// `F^{(i)}(z) = Σ_k ω_i^{g(k)} z^k` at `z = ξ^{-2^{n-t}}`; identical to
/// [`dft_point`] at frequency `2^{n-t}`.
pub fn assoc_poly_eval(g: &GeneralizedFunction, i: u32, t: u32) -> Result<CycloInt, SpectraError> {
    let n = g.n();
    if t == 0 || t > n {
        return Err(SpectraError::OrderOutOfRange { t, n });
    }
    dft_point(g, i, 1u32 << (n - t))
}
