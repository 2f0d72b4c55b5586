//! Truth-table representations of multi-output Boolean functions, the
//! generalized form over `Z_{2^m}`, algebraic normal forms, and variable
//! permutations.
//!
//! The index convention is global: input `x = (x_1, …, x_n)` is encoded as
//! `k = Σ x_i·2^{i-1}`, so `x_1` is the least-significant bit of `k` and value
//! sequences are listed in increasing `k`.

use std::collections::BTreeMap;
use thiserror::Error;

/// Largest supported input count (tables have `2^n` entries).
pub const MAX_INPUTS: u32 = 24;
/// Largest supported output count (values live in `Z_{2^m}`).
pub const MAX_OUTPUTS: u32 = 16;

/// Errors from constructing or combining function representations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctionError {
    #[error("input count {n} outside supported range 1..={MAX_INPUTS}")]
    InputCountOutOfRange { n: u32 },
    #[error("output count {m} outside supported range 1..={MAX_OUTPUTS}")]
    OutputCountOutOfRange { m: u32 },
    #[error("expected {expected} component tables, got {got}")]
    WrongComponentCount { expected: usize, got: usize },
    #[error("expected {expected} table entries, got {got}")]
    WrongTableLength { expected: usize, got: usize },
    #[error("value {value} at index {index} exceeds {max} (m = {m})")]
    ValueOutOfRange {
        index: usize,
        value: u32,
        max: u32,
        m: u32,
    },
    #[error("output mask must be nonzero")]
    ZeroMask,
    #[error("output mask {mask:#x} has bits above m = {m}")]
    MaskOutOfRange { mask: u32, m: u32 },
    #[error("image {image:?} is not a permutation of 1..={n}")]
    InvalidPermutation { image: Vec<u32>, n: u32 },
    #[error("monomial mask {mask:#x} uses variables above n = {n}")]
    MonomialOutOfRange { mask: u32, n: u32 },
}

fn check_sizes(n: u32, m: u32) -> Result<(), FunctionError> {
    if !(1..=MAX_INPUTS).contains(&n) {
        return Err(FunctionError::InputCountOutOfRange { n });
    }
    if !(1..=MAX_OUTPUTS).contains(&m) {
        return Err(FunctionError::OutputCountOutOfRange { m });
    }
    Ok(())
}

fn table_len(n: u32) -> usize {
    1usize << n
}

fn word_count(n: u32) -> usize {
    (table_len(n) + 63) / 64
}

/// An `(n, m)`-function stored as `m` bit-packed component truth tables.
///
/// Component `i` (1-based) at index `k` is the output bit `f_i(x)` for the
/// input `x` encoded by `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiOutputFunction {
    n: u32,
    m: u32,
    components: Vec<Vec<u64>>,
}

impl MultiOutputFunction {
    /// Builds from explicit component truth tables, each of length `2^n`.
    pub fn from_components(
        n: u32,
        m: u32,
        components: Vec<Vec<bool>>,
    ) -> Result<Self, FunctionError> {
        check_sizes(n, m)?;
        if components.len() != m as usize {
            return Err(FunctionError::WrongComponentCount {
                expected: m as usize,
                got: components.len(),
            });
        }
        let len = table_len(n);
        let mut packed = Vec::with_capacity(m as usize);
        for table in &components {
            if table.len() != len {
                return Err(FunctionError::WrongTableLength {
                    expected: len,
                    got: table.len(),
                });
            }
            let mut words = vec![0u64; word_count(n)];
            for (k, &bit) in table.iter().enumerate() {
                if bit {
                    words[k >> 6] |= 1u64 << (k & 63);
                }
            }
            packed.push(words);
        }
        Ok(MultiOutputFunction {
            n,
            m,
            components: packed,
        })
    }

    /// The constant function whose every output equals `value`.
    pub fn constant(n: u32, m: u32, value: u16) -> Result<Self, FunctionError> {
        GeneralizedFunction::constant(n, m, value).map(|g| Self::from_generalized(&g))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn input_count(&self) -> usize {
        table_len(self.n)
    }

    /// The output bit of component `i` (1-based) at index `k`.
    pub fn component_bit(&self, i: u32, k: u32) -> bool {
        assert!((1..=self.m).contains(&i), "component index out of range");
        let k = k as usize;
        assert!(k < self.input_count(), "input index out of range");
        (self.components[(i - 1) as usize][k >> 6] >> (k & 63)) & 1 == 1
    }

    /// Packs the components into values over `Z_{2^m}`:
    /// `g(k) = Σ_i 2^{i-1}·f_i(k)`.
    pub fn to_generalized(&self) -> GeneralizedFunction {
        let values = (0..self.input_count())
            .map(|k| {
                let mut v = 0u32;
                for (i, words) in self.components.iter().enumerate() {
                    v |= (((words[k >> 6] >> (k & 63)) & 1) as u32) << i;
                }
                v as u16
            })
            .collect();
        GeneralizedFunction {
            n: self.n,
            m: self.m,
            values,
        }
    }

    /// Recovers the components: component `i` is bit `i-1` of each value.
    pub fn from_generalized(g: &GeneralizedFunction) -> Self {
        let mut components = vec![vec![0u64; word_count(g.n)]; g.m as usize];
        for (k, &v) in g.values.iter().enumerate() {
            for (i, words) in components.iter_mut().enumerate() {
                if (v >> i) & 1 == 1 {
                    words[k >> 6] |= 1u64 << (k & 63);
                }
            }
        }
        MultiOutputFunction {
            n: g.n,
            m: g.m,
            components,
        }
    }

    /// The single-output combination `v·f(x) = ⊕_{i: v_i=1} f_i(x)`, returned
    /// as its `m = 1` generalized (0/1-valued) form. Rejects `v = 0`.
    pub fn component_combination(&self, v: u32) -> Result<GeneralizedFunction, FunctionError> {
        if v == 0 {
            return Err(FunctionError::ZeroMask);
        }
        if v >> self.m != 0 {
            return Err(FunctionError::MaskOutOfRange { mask: v, m: self.m });
        }
        let mut words = vec![0u64; word_count(self.n)];
        for (i, component) in self.components.iter().enumerate() {
            if (v >> i) & 1 == 1 {
                for (w, c) in words.iter_mut().zip(component) {
                    *w ^= c;
                }
            }
        }
        let values = (0..self.input_count())
            .map(|k| ((words[k >> 6] >> (k & 63)) & 1) as u16)
            .collect();
        Ok(GeneralizedFunction {
            n: self.n,
            m: 1,
            values,
        })
    }
}

/// The generalized form of an `(n, m)`-function: the value sequence of a map
/// `F_2^n → Z_{2^m}`, listed in increasing index `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedFunction {
    n: u32,
    m: u32,
    values: Vec<u16>,
}

impl GeneralizedFunction {
    /// Builds from a value sequence of length `2^n` with entries below `2^m`.
    pub fn new(n: u32, m: u32, values: Vec<u16>) -> Result<Self, FunctionError> {
        check_sizes(n, m)?;
        if values.len() != table_len(n) {
            return Err(FunctionError::WrongTableLength {
                expected: table_len(n),
                got: values.len(),
            });
        }
        let max = ((1u32 << m) - 1) as u16;
        for (index, &value) in values.iter().enumerate() {
            if value > max {
                return Err(FunctionError::ValueOutOfRange {
                    index,
                    value: value as u32,
                    max: max as u32,
                    m,
                });
            }
        }
        Ok(GeneralizedFunction { n, m, values })
    }

    /// The constant function with every value equal to `value`.
    pub fn constant(n: u32, m: u32, value: u16) -> Result<Self, FunctionError> {
        check_sizes(n, m)?;
        Self::new(n, m, vec![value; table_len(n)])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn input_count(&self) -> usize {
        table_len(self.n)
    }

    pub fn value(&self, k: u32) -> u16 {
        self.values[k as usize]
    }

    pub fn values(&self) -> &[u16] {
        &self.values
    }

    /// The algebraic normal form over `Z_{2^m}`, by the subtractive Möbius
    /// transform: the coefficient of the monomial with support `S` is
    /// `Σ_{x ⊆ S} (−1)^{|S|−|x|} g(x) mod 2^m`.
    pub fn anf(&self) -> GeneralizedAnf {
        let mask = ((1u32 << self.m) - 1) as u16;
        let mut work: Vec<u16> = self.values.clone();
        for b in 0..self.n {
            let bit = 1usize << b;
            for k in 0..work.len() {
                if k & bit != 0 {
                    work[k] = work[k].wrapping_sub(work[k ^ bit]) & mask;
                }
            }
        }
        let coeffs = work
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(k, c)| (k as u32, c))
            .collect();
        GeneralizedAnf {
            n: self.n,
            m: self.m,
            coeffs,
        }
    }

    /// Applies a variable permutation: the result at `(x_1, …, x_n)` equals
    /// this function at `(x_{π(1)}, …, x_{π(n)})`. Under this convention the
    /// action composes as `(π∘σ)·g = π·(σ·g)` with `(π∘σ)(j) = π(σ(j))`.
    pub fn permute(&self, permutation: &Permutation) -> GeneralizedFunction {
        assert_eq!(
            permutation.n(),
            self.n,
            "permutation arity must match the input count"
        );
        let values = (0..self.values.len())
            .map(|k| {
                let mut src = 0usize;
                for j in 0..self.n {
                    let source_var = permutation.image[j as usize] - 1;
                    src |= ((k >> source_var) & 1) << j;
                }
                self.values[src]
            })
            .collect();
        GeneralizedFunction {
            n: self.n,
            m: self.m,
            values,
        }
    }

    /// True iff the function is invariant under every variable permutation,
    /// i.e. its value depends only on the input's Hamming weight. Checked via
    /// the `n−1` adjacent transpositions, which generate the full group.
    pub fn is_symmetric(&self) -> bool {
        for b in 0..self.n.saturating_sub(1) {
            let lo = 1usize << b;
            let hi = 1usize << (b + 1);
            for k in 0..self.values.len() {
                // Only inputs where the two bits differ move under the swap.
                if (k & lo != 0) && (k & hi == 0) {
                    let swapped = (k ^ lo) | hi;
                    if self.values[k] != self.values[swapped] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A sparse algebraic normal form over `Z_{2^m}`: monomial support masks
/// mapped to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedAnf {
    n: u32,
    m: u32,
    coeffs: BTreeMap<u32, u16>,
}

impl GeneralizedAnf {
    /// Builds from `(monomial mask, coefficient)` pairs. Coefficients are
    /// reduced mod `2^m`, repeated monomials accumulate, zeros are dropped.
    pub fn new(
        n: u32,
        m: u32,
        terms: impl IntoIterator<Item = (u32, u64)>,
    ) -> Result<Self, FunctionError> {
        check_sizes(n, m)?;
        let modulus = 1u64 << m;
        let mut coeffs: BTreeMap<u32, u16> = BTreeMap::new();
        for (mask, coeff) in terms {
            if mask >> n != 0 {
                return Err(FunctionError::MonomialOutOfRange { mask, n });
            }
            let entry = coeffs.entry(mask).or_insert(0);
            *entry = ((*entry as u64 + coeff % modulus) % modulus) as u16;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(GeneralizedAnf { n, m, coeffs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coefficients(&self) -> &BTreeMap<u32, u16> {
        &self.coeffs
    }

    /// Evaluates at one input: the mod-`2^m` sum of coefficients of monomials
    /// whose support is contained in `x`.
    pub fn evaluate(&self, x: u32) -> u16 {
        let mask = ((1u32 << self.m) - 1) as u16;
        self.coeffs
            .iter()
            .filter(|&(&s, _)| s & x == s)
            .fold(0u16, |acc, (_, &c)| acc.wrapping_add(c) & mask)
    }

    /// Evaluates at every input via the inverse (zeta) transform.
    pub fn to_function(&self) -> GeneralizedFunction {
        let mask = ((1u32 << self.m) - 1) as u16;
        let mut work = vec![0u16; table_len(self.n)];
        for (&monomial, &c) in &self.coeffs {
            work[monomial as usize] = c;
        }
        for b in 0..self.n {
            let bit = 1usize << b;
            for k in 0..work.len() {
                if k & bit != 0 {
                    work[k] = work[k].wrapping_add(work[k ^ bit]) & mask;
                }
            }
        }
        GeneralizedFunction {
            n: self.n,
            m: self.m,
            values: work,
        }
    }
}

/// A permutation of the variable positions `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    /// Builds from the image array: `image[j-1] = π(j)`, 1-based.
    pub fn new(image: Vec<u32>) -> Result<Self, FunctionError> {
        let n = image.len() as u32;
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v == 0 || v > n || seen[(v - 1) as usize] {
                return Err(FunctionError::InvalidPermutation { image, n });
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// The transposition exchanging positions `a` and `b` (1-based).
    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self, FunctionError> {
        let mut image: Vec<u32> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(FunctionError::InvalidPermutation { image, n });
        }
        image.swap((a - 1) as usize, (b - 1) as usize);
        Ok(Permutation { image })
    }

    pub fn n(&self) -> u32 {
        self.image.len() as u32
    }

    /// `π(j)`, 1-based.
    pub fn apply(&self, j: u32) -> u32 {
        self.image[(j - 1) as usize]
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    /// Composition `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutation arities must match");
        Permutation {
            image: other.image.iter().map(|&j| self.apply(j)).collect(),
        }
    }

    /// All permutations of `{1, …, n}` in lexicographic image order.
    pub fn enumerate(n: u32) -> impl Iterator<Item = Permutation> {
        let mut current: Option<Vec<u32>> = Some((1..=n).collect());
        std::iter::from_fn(move || {
            let image = current.take()?;
            current = next_lex_permutation(&image);
            Some(Permutation { image })
        })
    }
}

fn next_lex_permutation(image: &[u32]) -> Option<Vec<u32>> {
    let mut next = image.to_vec();
    let len = next.len();
    if len < 2 {
        return None;
    }
    let mut i = len - 1;
    while i > 0 && next[i - 1] >= next[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = len - 1;
    while next[j] <= next[i - 1] {
        j -= 1;
    }
    next.swap(i - 1, j);
    next[i..].reverse();
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The three-input, two-output sample used throughout the crate's tests,
    /// given by its value sequence in increasing index order.
    pub(crate) fn sample_function() -> GeneralizedFunction {
        GeneralizedFunction::new(3, 2, vec![0, 0, 1, 3, 1, 1, 0, 2]).unwrap()
    }

    /// Entries of the sample as explicit (x1, x2, x3) → value triples, so the
    /// test does not depend on any row ordering.
    const SAMPLE_POINTS: [((u16, u16, u16), u16); 8] = [
        ((0, 0, 0), 0),
        ((1, 0, 0), 0),
        ((0, 1, 0), 1),
        ((1, 1, 0), 3),
        ((0, 0, 1), 1),
        ((1, 0, 1), 1),
        ((0, 1, 1), 0),
        ((1, 1, 1), 2),
    ];

    #[test]
    fn sample_respects_index_convention() {
        let g = sample_function();
        for ((x1, x2, x3), want) in SAMPLE_POINTS {
            let k = (x1 + 2 * x2 + 4 * x3) as u32;
            assert_eq!(g.value(k), want, "x=({x1},{x2},{x3})");
        }
    }

    #[test]
    fn generalized_packing_weights_components() {
        // Component i carries weight 2^{i-1}: bit 0 of the sample's values is
        // the x2⊕x3 column, bit 1 the x1·x2 column.
        let g = sample_function();
        let f = MultiOutputFunction::from_generalized(&g);
        for k in 0..8u32 {
            let (x1, x2, x3) = (k & 1, (k >> 1) & 1, (k >> 2) & 1);
            assert_eq!(f.component_bit(1, k) as u32, x2 ^ x3);
            assert_eq!(f.component_bit(2, k) as u32, x1 & x2);
        }
        assert_eq!(f.to_generalized(), g);
    }

    #[test]
    fn packing_of_repeated_component() {
        // f_1 = f_2 = x_1 at n = m = 2: value 1 + 2 = 3 wherever x_1 = 1.
        let x1: Vec<bool> = (0..4).map(|k| k & 1 == 1).collect();
        let f = MultiOutputFunction::from_components(2, 2, vec![x1.clone(), x1]).unwrap();
        assert_eq!(f.to_generalized().values(), &[0, 3, 0, 3]);
    }

    #[test]
    fn zero_function_round_trip() {
        let f = MultiOutputFunction::constant(4, 3, 0).unwrap();
        let g = f.to_generalized();
        assert!(g.values().iter().all(|&v| v == 0));
        assert_eq!(MultiOutputFunction::from_generalized(&g), f);
    }

    #[test]
    fn anf_of_sample() {
        let anf = sample_function().anf();
        let expect: BTreeMap<u32, u16> = [(0b011, 2), (0b110, 2), (0b010, 1), (0b100, 1)].into();
        assert_eq!(anf.coefficients(), &expect);
    }

    #[test]
    fn anf_weighted_sum_pitfall() {
        // Summing the component ANFs with their 2-adic weights and reducing
        // mod 4 gives x1·x2 + 2·x2 + 2·x3, which is NOT the sample: the
        // packing mixes the residue levels, so carries appear.
        let weighted =
            GeneralizedAnf::new(3, 2, [(0b011u32, 1u64), (0b010, 2), (0b100, 2)]).unwrap();
        let g = sample_function();
        let differs = (0..8u32).any(|k| weighted.evaluate(k) != g.value(k));
        assert!(differs);
    }

    #[test]
    fn anf_constant() {
        let g = GeneralizedFunction::constant(4, 3, 5).unwrap();
        let anf = g.anf();
        assert_eq!(anf.coefficients(), &BTreeMap::from([(0u32, 5u16)]));
        assert_eq!(anf.to_function(), g);
        let zero = GeneralizedFunction::constant(3, 2, 0).unwrap();
        assert!(zero.anf().coefficients().is_empty());
    }

    #[test]
    fn anf_round_trips_exhaustively_small() {
        for code in 0..(1u32 << 16) {
            let values: Vec<u16> = (0..8).map(|k| ((code >> (2 * k)) & 3) as u16).collect();
            let g = GeneralizedFunction::new(3, 2, values).unwrap();
            assert_eq!(g.anf().to_function(), g);
        }
    }

    #[test]
    fn component_combination_selects_and_cancels() {
        let g = sample_function();
        let f = MultiOutputFunction::from_generalized(&g);
        // Unit masks select single components unchanged.
        for i in 1..=2u32 {
            let combo = f.component_combination(1 << (i - 1)).unwrap();
            for k in 0..8u32 {
                assert_eq!(combo.value(k) == 1, f.component_bit(i, k));
            }
        }
        // The x1·x2 component has exactly two ones.
        let prod = f.component_combination(0b10).unwrap();
        assert_eq!(prod.values().iter().filter(|&&v| v == 1).count(), 2);
        assert_eq!(f.component_combination(0), Err(FunctionError::ZeroMask));

        // XOR cancellation: (x1⊕x2) ⊕ (x2⊕x3) = x1⊕x3.
        let t1: Vec<bool> = (0..8).map(|k| (k ^ (k >> 1)) & 1 == 1).collect();
        let t2: Vec<bool> = (0..8).map(|k| ((k >> 1) ^ (k >> 2)) & 1 == 1).collect();
        let f2 = MultiOutputFunction::from_components(3, 2, vec![t1, t2]).unwrap();
        let both = f2.component_combination(0b11).unwrap();
        for k in 0..8u32 {
            assert_eq!(both.value(k) as u32, (k ^ (k >> 2)) & 1);
        }
    }

    #[test]
    fn permute_identity_and_projection() {
        let g = sample_function();
        assert_eq!(g.permute(&Permutation::identity(3)), g);

        // g = x_1 under the swap (1 2) becomes x_2.
        let x1 = GeneralizedFunction::new(2, 1, vec![0, 1, 0, 1]).unwrap();
        let swapped = x1.permute(&Permutation::transposition(2, 1, 2).unwrap());
        assert_eq!(swapped.values(), &[0, 0, 1, 1]);
    }

    #[test]
    fn permute_matches_pointwise_reevaluation() {
        // π = (1 3): independently re-evaluate the sample's ANF with x1 and
        // x3 exchanged at every point and compare.
        let g = sample_function();
        let anf = g.anf();
        let permuted = g.permute(&Permutation::new(vec![3, 2, 1]).unwrap());
        for k in 0..8u32 {
            let (x1, x2, x3) = (k & 1, (k >> 1) & 1, (k >> 2) & 1);
            let swapped = x3 | (x2 << 1) | (x1 << 2);
            assert_eq!(permuted.value(k), anf.evaluate(swapped), "k={k}");
        }
    }

    #[test]
    fn permutation_composition_action() {
        let g = sample_function();
        let pi = Permutation::new(vec![2, 3, 1]).unwrap();
        let sigma = Permutation::new(vec![3, 1, 2]).unwrap();
        let composed = pi.compose(&sigma);
        assert_eq!(g.permute(&sigma).permute(&pi), g.permute(&composed));
    }

    #[test]
    fn permutation_validation_and_enumeration() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 2, 3]).is_err());
        assert!(Permutation::new(vec![1, 2, 4]).is_err());
        let all: Vec<_> = Permutation::enumerate(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], Permutation::identity(3));
        assert_eq!(all[5].image(), &[3, 2, 1]);
        let mut images: Vec<_> = all.iter().map(|p| p.image().to_vec()).collect();
        let sorted = {
            images.sort();
            images.clone()
        };
        assert_eq!(
            images, sorted,
            "enumeration must be lexicographic and duplicate-free"
        );
    }

    #[test]
    fn symmetry_detection() {
        // wt(x) mod 4 is symmetric by construction.
        let weight_fn = GeneralizedFunction::new(
            3,
            2,
            (0..8u32).map(|k| (k.count_ones() % 4) as u16).collect(),
        )
        .unwrap();
        assert!(weight_fn.is_symmetric());

        let x1 = GeneralizedFunction::new(3, 1, (0..8).map(|k| (k & 1) as u16).collect()).unwrap();
        assert!(!x1.is_symmetric());

        // The sample differs from its (1 2) image at some point.
        let g = sample_function();
        let swapped = g.permute(&Permutation::transposition(3, 1, 2).unwrap());
        assert_ne!(g, swapped);
        assert!(!g.is_symmetric());
    }

    #[test]
    fn symmetry_agrees_with_weight_class_test() {
        for code in 0..(1u32 << 16) {
            let values: Vec<u16> = (0..8).map(|k| ((code >> (2 * k)) & 3) as u16).collect();
            let g = GeneralizedFunction::new(3, 2, values).unwrap();
            let by_weight = (0..8u32).all(|k| {
                (0..8u32)
                    .filter(|&j| j.count_ones() == k.count_ones())
                    .all(|j| g.value(j) == g.value(k))
            });
            assert_eq!(g.is_symmetric(), by_weight, "code={code}");
        }
    }

    #[test]
    fn constructor_validation() {
        assert!(matches!(
            GeneralizedFunction::new(2, 2, vec![0, 1, 2]),
            Err(FunctionError::WrongTableLength {
                expected: 4,
                got: 3
            })
        ));
        assert!(matches!(
            GeneralizedFunction::new(2, 1, vec![0, 1, 2, 0]),
            Err(FunctionError::ValueOutOfRange { index: 2, .. })
        ));
        assert!(GeneralizedFunction::new(0, 1, vec![]).is_err());
        assert!(GeneralizedFunction::new(25, 1, vec![]).is_err());
        assert!(GeneralizedFunction::constant(2, 17, 0).is_err());
    }
}
