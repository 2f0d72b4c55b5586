//! Exact-arithmetic correlation-immunity analysis for multi-output Boolean
//! functions.
//!
//! An `(n, m)`-function maps `n` input bits to `m` output bits. It is
//! *t-th order correlation immune* (CI) when its output distribution is
//! unchanged by fixing any set of at most `t` input coordinates. This crate
//! decides the CI order through five interchangeable routes:
//!
//! * the probability definition itself (exact conditional counts),
//! * the classical component Walsh criterion (Golomb–Xiao–Massey),
//! * a Walsh criterion on the generalized form over `Z_{2^m}`,
//! * a Fourier criterion on the generalized value sequence, and
//! * a Fourier criterion applied per component combination.
//!
//! Every spectral value is computed in [`cyclo::CycloInt`], the ring of
//! cyclotomic integers `Z[ζ_{2^L}]`, so "the spectrum vanishes" is an exact
//! integer statement rather than a floating-point tolerance.

pub mod bf;
pub mod ci;
pub mod cyclo;
pub mod spectra;

pub use bf::{GeneralizedAnf, GeneralizedFunction, MultiOutputFunction, Permutation};
pub use ci::{CiOptions, CiOrderResult, CiVerdict, DistributionCounts, Witness};
pub use cyclo::CycloInt;

use std::fmt;
use std::str::FromStr;

/// The five interchangeable correlation-immunity deciders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exact conditional output-count comparison straight from the definition.
    Definition,
    /// Walsh transform of every nonzero component combination.
    WalshComponent,
    /// Walsh sums of the generalized form, one root of unity per output level.
    WalshGeneralized,
    /// Fourier spectrum of the generalized value sequence under variable
    /// permutations (permutation-free for symmetric functions).
    FourierGeneralized,
    /// Single-output Fourier criterion applied to each component combination.
    FourierComponent,
}

impl Method {
    /// All methods, in the order reports list them.
    pub const ALL: [Method; 5] = [
        Method::Definition,
        Method::WalshComponent,
        Method::WalshGeneralized,
        Method::FourierGeneralized,
        Method::FourierComponent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Definition => "definition",
            Method::WalshComponent => "walsh-component",
            Method::WalshGeneralized => "walsh-generalized",
            Method::FourierGeneralized => "fourier-generalized",
            Method::FourierComponent => "fourier-component",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error returned when parsing an unrecognized method name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMethod(pub String);

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown method `{}`", self.0)
    }
}

impl std::error::Error for UnknownMethod {}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .iter()
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| UnknownMethod(s.to_string()))
    }
}
