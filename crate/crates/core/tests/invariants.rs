//! Structural invariants of the representations, the ring, and the spectra,
//! checked with randomized and property-based inputs. Exhaustive small-universe
//! checks live in the acceptance suite of the CLI crate.

use cibool::bf::{GeneralizedFunction, MultiOutputFunction, Permutation};
use cibool::cyclo::CycloInt;
use cibool::spectra;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_function(rng: &mut ChaCha8Rng, n: u32, m: u32) -> GeneralizedFunction {
    let values = (0..1usize << n)
        .map(|_| rng.gen_range(0..1u32 << m) as u16)
        .collect();
    GeneralizedFunction::new(n, m, values).unwrap()
}

fn random_permutation(rng: &mut ChaCha8Rng, n: u32) -> Permutation {
    let mut image: Vec<u32> = (1..=n).collect();
    for i in (1..image.len()).rev() {
        image.swap(i, rng.gen_range(0..=i));
    }
    Permutation::new(image).unwrap()
}

fn function_strategy(n: u32, m: u32) -> impl Strategy<Value = GeneralizedFunction> {
    prop::collection::vec(0..(1u16 << m), 1usize << n)
        .prop_map(move |values| GeneralizedFunction::new(n, m, values).unwrap())
}

fn cyclo_strategy(level: u32) -> impl Strategy<Value = CycloInt> {
    prop::collection::vec(-50i64..50, 1usize << level).prop_map(move |counts| {
        counts
            .iter()
            .enumerate()
            .fold(CycloInt::zero(level), |acc, (e, &c)| {
                let term = &CycloInt::from_int(level, c) * &CycloInt::root_power(level, e as i64);
                &acc + &term
            })
    })
}

#[test]
fn round_trip_exhaustive_small_universe() {
    for code in 0..(1u32 << 16) {
        let values: Vec<u16> = (0..8).map(|k| ((code >> (2 * k)) & 3) as u16).collect();
        let g = GeneralizedFunction::new(3, 2, values).unwrap();
        let f = MultiOutputFunction::from_generalized(&g);
        assert_eq!(f.to_generalized(), g);
    }
}

proptest! {
    #[test]
    fn round_trip_randomized(g in function_strategy(6, 4)) {
        let f = MultiOutputFunction::from_generalized(&g);
        prop_assert_eq!(f.to_generalized(), g);
    }

    #[test]
    fn anf_reproduces_function(g in function_strategy(6, 4)) {
        let anf = g.anf();
        prop_assert_eq!(anf.to_function(), g.clone());
        for k in [0u32, 1, 17, 33, 63] {
            prop_assert_eq!(anf.evaluate(k), g.value(k));
        }
    }

    #[test]
    fn permutation_action_involution(g in function_strategy(5, 2), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(g.permute(&Permutation::identity(5)), g.clone());
        let a = rng.gen_range(1..=5u32);
        let b = {
            let mut b = rng.gen_range(1..=5u32);
            while b == a {
                b = rng.gen_range(1..=5u32);
            }
            b
        };
        let swap = Permutation::transposition(5, a, b).unwrap();
        prop_assert_eq!(g.permute(&swap).permute(&swap), g.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn root_power_is_a_homomorphism(level in 1u32..=8, a in -2000i64..2000, b in -2000i64..2000) {
        let lhs = &CycloInt::root_power(level, a) * &CycloInt::root_power(level, b);
        prop_assert_eq!(lhs, CycloInt::root_power(level, a + b));
    }
}

proptest! {
    #[test]
    fn lift_preserves_structure(a in cyclo_strategy(3), b in cyclo_strategy(3)) {
        let target = 6;
        let la = a.lift(target).unwrap();
        let lb = b.lift(target).unwrap();
        prop_assert_eq!(a.is_zero(), la.is_zero());
        prop_assert_eq!((&a * &b).lift(target).unwrap(), &la * &lb);
        prop_assert_eq!((&a + &b).lift(target).unwrap(), &la + &lb);
        prop_assert_eq!(a.conj().lift(target).unwrap(), la.conj());
    }

    #[test]
    fn norm_positivity(a in cyclo_strategy(4)) {
        let norm = &a * &a.conj();
        if a.is_zero() {
            prop_assert!(norm.is_zero());
        } else {
            prop_assert!(norm.coefficient(0) > &BigInt::from(0));
        }
    }
}

#[test]
fn walsh_parity_and_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let g = random_function(&mut rng, 6, 3);
        let f = MultiOutputFunction::from_generalized(&g);
        for _ in 0..20 {
            let u = rng.gen_range(0..64u32);
            let v = rng.gen_range(1..8u32);
            let w = spectra::walsh_component(&f, u, v).unwrap();
            assert!(w.abs() <= 64);
            assert_eq!(w.rem_euclid(2), 0, "values share the parity of 2^n");
        }
    }
}

#[test]
fn fast_walsh_matches_naive_on_random_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    // Every point at n = 4; sampled points at the larger sizes.
    for _ in 0..10 {
        let g = random_function(&mut rng, 4, 3);
        let f = MultiOutputFunction::from_generalized(&g);
        for v in 1..8u32 {
            let all = spectra::fast_walsh_all(&f, v).unwrap();
            for u in 0..16u32 {
                assert_eq!(
                    all[u as usize],
                    spectra::walsh_component(&f, u, v).unwrap(),
                    "v={v} u={u}"
                );
            }
        }
    }
    for &n in &[7u32, 10] {
        let g = random_function(&mut rng, n, 2);
        let f = MultiOutputFunction::from_generalized(&g);
        for v in 1..4u32 {
            let all = spectra::fast_walsh_all(&f, v).unwrap();
            assert_eq!(all.len(), 1 << n);
            for _ in 0..40 {
                let u = rng.gen_range(0..1u32 << n);
                assert_eq!(
                    all[u as usize],
                    spectra::walsh_component(&f, u, v).unwrap(),
                    "n={n} v={v} u={u}"
                );
            }
        }
    }
}

#[test]
fn component_parseval_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..20 {
        let g = random_function(&mut rng, 8, 3);
        let f = MultiOutputFunction::from_generalized(&g);
        for v in 1..8u32 {
            let sum: i64 = spectra::fast_walsh_all(&f, v)
                .unwrap()
                .iter()
                .map(|w| w * w)
                .sum();
            assert_eq!(sum, 1 << 16);
        }
    }
}

#[test]
fn generalized_parseval_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..10 {
        let g = random_function(&mut rng, 6, 3);
        for i in 1..=3u32 {
            let mut sum = CycloInt::zero(i);
            for c in 0..64u32 {
                let w = spectra::walsh_generalized(&g, c, i).unwrap();
                sum = &sum + &(&w * &w.conj());
            }
            assert_eq!(sum, CycloInt::from_int(i, 1i64 << 12), "i={i}");
        }
    }
}

#[test]
fn level_one_walsh_collapses_to_low_bit() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..50 {
        let g = random_function(&mut rng, 5, 3);
        let f = MultiOutputFunction::from_generalized(&g);
        for c in 0..32u32 {
            let ring = spectra::walsh_generalized(&g, c, 1).unwrap();
            let int = spectra::walsh_component(&f, c, 1).unwrap();
            assert_eq!(ring.coefficient(0), &BigInt::from(int));
        }
    }
}

#[test]
fn dft_dc_point_equals_mask_zero_walsh() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..50 {
        let g = random_function(&mut rng, 6, 4);
        for i in 1..=4u32 {
            assert_eq!(
                spectra::dft_point(&g, i, 0).unwrap(),
                spectra::walsh_generalized(&g, 0, i).unwrap()
            );
        }
    }
}

#[test]
fn generalized_walsh_equals_conditional_count_difference() {
    // Independent route: split the inputs on the sign of c·x, tally values,
    // and rebuild the sum as Σ_α (a_α − b_α)·ω_i^α.
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..30 {
        let n = rng.gen_range(3..=6u32);
        let m = rng.gen_range(1..=3u32);
        let g = random_function(&mut rng, n, m);
        let c = rng.gen_range(1..1u32 << n);
        for i in 1..=m {
            let mut diff = vec![0i64; 1 << m];
            for (k, &value) in g.values().iter().enumerate() {
                if (c & k as u32).count_ones() & 1 == 0 {
                    diff[value as usize] += 1;
                } else {
                    diff[value as usize] -= 1;
                }
            }
            let expected = diff
                .iter()
                .enumerate()
                .fold(CycloInt::zero(i), |acc, (alpha, &d)| {
                    let term = &CycloInt::from_int(i, d) * &CycloInt::root_power(i, alpha as i64);
                    &acc + &term
                });
            assert_eq!(spectra::walsh_generalized(&g, c, i).unwrap(), expected);
        }
    }
}

#[test]
fn permuted_function_reindexes_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    for _ in 0..40 {
        let n = rng.gen_range(2..=6u32);
        let g = random_function(&mut rng, n, 2);
        let p = random_permutation(&mut rng, n);
        let permuted = g.permute(&p);
        for _ in 0..20 {
            let k = rng.gen_range(0..1u32 << n);
            let mut src = 0u32;
            for j in 1..=n {
                if (k >> (p.apply(j) - 1)) & 1 == 1 {
                    src |= 1 << (j - 1);
                }
            }
            assert_eq!(permuted.value(k), g.value(src));
        }
    }
}
