//! Exact arithmetic in the cyclotomic integer rings `Z[ζ_{2^L}]`.
//!
//! A level-`L` element lives in `Z[z]/(z^{2^{L-1}} + 1)`: the minimal
//! polynomial of a primitive `2^L`-th root of unity is `z^{2^{L-1}} + 1`, so
//! `{1, ζ, ζ², …, ζ^{2^{L-1}-1}}` is an integral basis and reduction only ever
//! uses `ζ^{2^{L-1}} = −1`. Coefficients are arbitrary-precision integers;
//! equality and zero-tests are coefficient-wise and exact.
//!
//! Only ring operations are provided (no inversion): spectral sums need
//! addition, multiplication, conjugation, level embedding and a zero test.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Errors from cyclotomic-ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    /// `lift` can only embed into a ring of equal or higher level.
    #[error("cannot lift from level {from} down to level {to}")]
    LevelTooLow { from: u32, to: u32 },
}

/// Largest supported level; keeps coefficient vectors (length `2^{L-1}`) and
/// exponent arithmetic comfortably in range.
pub const MAX_LEVEL: u32 = 30;

/// An exact element of `Z[ζ_{2^L}]`.
///
/// `coeffs[j]` multiplies `ζ_{2^L}^j` for `0 ≤ j < 2^{L-1}`. At level 1 the
/// root is `ζ_2 = −1` and the element is a plain integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloInt {
    level: u32,
    coeffs: Vec<BigInt>,
}

fn check_level(level: u32) {
    assert!(
        (1..=MAX_LEVEL).contains(&level),
        "cyclotomic level {level} outside 1..={MAX_LEVEL}"
    );
}

impl CycloInt {
    /// The additive identity at the given level.
    pub fn zero(level: u32) -> Self {
        check_level(level);
        CycloInt {
            level,
            coeffs: vec![BigInt::zero(); 1 << (level - 1)],
        }
    }

    /// Embeds an ordinary integer at the given level.
    pub fn from_int<T: Into<BigInt>>(level: u32, value: T) -> Self {
        let mut out = CycloInt::zero(level);
        out.coeffs[0] = value.into();
        out
    }

    /// `ζ_{2^L}^e` in canonical form. The exponent is reduced mod `2^L`; a
    /// reduced exponent at or above `2^{L-1}` folds to a negative unit
    /// coefficient via `ζ^{2^{L-1}} = −1`.
    pub fn root_power(level: u32, e: i64) -> Self {
        check_level(level);
        let period = 1i64 << level;
        let e = e.rem_euclid(period) as usize;
        let half = 1usize << (level - 1);
        let mut out = CycloInt::zero(level);
        if e < half {
            out.coeffs[e] = BigInt::from(1);
        } else {
            out.coeffs[e - half] = BigInt::from(-1);
        }
        out
    }

    /// Builds an element from per-exponent multiplicities: `counts[e]` copies
    /// of `ζ^e` for `0 ≤ e < 2^L`, folding the upper half negatively.
    pub(crate) fn from_counts(level: u32, counts: &[i64]) -> Self {
        check_level(level);
        let half = 1usize << (level - 1);
        debug_assert_eq!(counts.len(), half << 1);
        let coeffs = (0..half)
            .map(|j| BigInt::from(counts[j] - counts[j + half]))
            .collect();
        CycloInt { level, coeffs }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// The coefficient of `ζ^j`.
    pub fn coefficient(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact zero test: every basis coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The ring automorphism `ζ ↦ ζ^{-1}` (complex conjugation restricted to
    /// the ring).
    pub fn conj(&self) -> Self {
        let half = self.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); half];
        coeffs[0] = self.coeffs[0].clone();
        for j in 1..half {
            // ζ^{-j} = −ζ^{2^{L-1} - j}
            coeffs[half - j] -= &self.coeffs[j];
        }
        CycloInt {
            level: self.level,
            coeffs,
        }
    }

    /// Embeds into the level-`target` ring via `ζ_{2^L} ↦ ζ_{2^target}^{2^{target-L}}`.
    pub fn lift(&self, target: u32) -> Result<Self, CycloError> {
        if target < self.level {
            return Err(CycloError::LevelTooLow {
                from: self.level,
                to: target,
            });
        }
        check_level(target);
        if target == self.level {
            return Ok(self.clone());
        }
        let stride = 1usize << (target - self.level);
        let mut out = CycloInt::zero(target);
        for (j, c) in self.coeffs.iter().enumerate() {
            out.coeffs[j * stride] = c.clone();
        }
        Ok(out)
    }

    /// Lifts the pair to a common level.
    fn aligned(&self, other: &CycloInt) -> (CycloInt, CycloInt) {
        let level = self.level.max(other.level);
        (self.lift(level).unwrap(), other.lift(level).unwrap())
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;

    fn add(self, rhs: &CycloInt) -> CycloInt {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;

    fn sub(self, rhs: &CycloInt) -> CycloInt {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;

    fn neg(self) -> CycloInt {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -std::mem::take(c);
        }
        out
    }
}

impl Mul for &CycloInt {
    type Output = CycloInt;

    /// Schoolbook product with the fold `ζ^{d+k} = −ζ^k` for `d = 2^{L-1}`.
    fn mul(self, rhs: &CycloInt) -> CycloInt {
        let (a, b) = self.aligned(rhs);
        let d = a.coeffs.len();
        let mut coeffs = vec![BigInt::zero(); d];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let p = ai * bj;
                let k = i + j;
                if k < d {
                    coeffs[k] += p;
                } else {
                    coeffs[k - d] -= p;
                }
            }
        }
        CycloInt {
            level: a.level,
            coeffs,
        }
    }
}

impl fmt::Display for CycloInt {
    /// Polynomial rendering in the level's root, e.g. `2 + 2·ζ4` or `1 - ζ8^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let root = 1u64 << self.level;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let one = mag == BigInt::from(1);
            if j == 0 {
                write!(f, "{mag}")?;
            } else {
                if !one {
                    write!(f, "{mag}·")?;
                }
                write!(f, "ζ{root}")?;
                if j > 1 {
                    write!(f, "^{j}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloInt(level={}, {})", self.level, self)
    }
}
