//! Randomized invariants tying independent implementations to each other.

use dichroma_core::coloring::exact_chromatic_number;
use dichroma_core::dichromatic::{block_counts, dichromatic_polynomial};
use dichroma_core::families::{random_digraph, random_oriented_graph};
use dichroma_core::independence::{
    all_bounds, caro_wei_directed_bound, caro_wei_directed_bound_exact,
    caro_wei_undirected_bound, independence_number, permutation_acyclic_set,
};
use dichroma_core::poly::Polynomial;
use dichroma_core::Digraph;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

fn seeded_digraph(seed: u64, n: usize, p: f64) -> Digraph {
    let mut r = ChaCha12Rng::seed_from_u64(seed);
    random_digraph(n, p, &mut r).unwrap()
}

fn seeded_oriented(seed: u64, n: usize, p: f64) -> Digraph {
    let mut r = ChaCha12Rng::seed_from_u64(seed);
    random_oriented_graph(n, p, &mut r).unwrap()
}

fn transpose(d: &Digraph) -> Digraph {
    let arcs: Vec<(usize, usize)> = d.arcs().map(|(u, v)| (v, u)).collect();
    Digraph::from_arcs(d.vertex_count(), &arcs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_sets_are_acyclic(seed in any::<u64>(), n in 1usize..=10, p in 0.0f64..1.0) {
        let d = seeded_digraph(seed, n, p);
        let mut r = ChaCha12Rng::seed_from_u64(seed ^ 0x9E37);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let s = permutation_acyclic_set(&d, &perm).unwrap();
        prop_assert!(d.is_acyclic(s));
    }

    #[test]
    fn exact_rational_matches_float(seed in any::<u64>(), n in 1usize..=12, p in 0.0f64..1.0) {
        let d = seeded_digraph(seed, n, p);
        let exact = caro_wei_directed_bound_exact(&d);
        let approx = caro_wei_directed_bound(&d);
        let as_float = exact.numer().to_f64().unwrap() / exact.denom().to_f64().unwrap();
        prop_assert!((approx - as_float).abs() < 1e-9);
    }

    #[test]
    fn directed_bound_dominates_undirected_when_digon_free(
        seed in any::<u64>(), n in 1usize..=12, p in 0.0f64..1.0,
    ) {
        let d = seeded_oriented(seed, n, p);
        prop_assert!(
            caro_wei_directed_bound(&d) >= caro_wei_undirected_bound(&d) - 1e-9
        );
    }

    #[test]
    fn applicable_bounds_sound_on_digon_free(seed in any::<u64>(), n in 1usize..=8, p in 0.0f64..1.0) {
        let d = seeded_oriented(seed, n, p);
        let alpha = independence_number(&d).unwrap() as f64;
        for b in all_bounds(&d) {
            if b.applicable && !b.heuristic {
                prop_assert!(b.value.unwrap() <= alpha + 1e-9, "{:?}", b);
            }
        }
    }

    #[test]
    fn girth_is_min_induced_cycle_length(seed in any::<u64>(), n in 2usize..=9, p in 0.0f64..1.0) {
        let d = seeded_digraph(seed, n, p);
        let shortest = d.induced_cycles().iter().map(|c| c.len()).min();
        prop_assert_eq!(d.girth(), shortest);
    }

    #[test]
    fn transpose_preserves_polynomial(seed in any::<u64>(), n in 1usize..=8, p in 0.0f64..1.0) {
        let d = seeded_digraph(seed, n, p);
        prop_assert_eq!(
            dichromatic_polynomial(&d).unwrap(),
            dichromatic_polynomial(&transpose(&d)).unwrap()
        );
    }

    #[test]
    fn falling_factorial_expansion(seed in any::<u64>(), n in 1usize..=8, p in 0.0f64..1.0) {
        let d = seeded_digraph(seed, n, p);
        let poly = dichromatic_polynomial(&d).unwrap();
        let bc = block_counts(&d).unwrap();
        for k in 0..20u64 {
            let direct: BigInt = bc
                .counts
                .iter()
                .enumerate()
                .map(|(j, &a)| BigInt::from(a) * Polynomial::falling_factorial(j).eval_u64(k))
                .sum();
            prop_assert_eq!(poly.eval_u64(k), direct);
        }
    }

    #[test]
    fn one_coloring_iff_acyclic(seed in any::<u64>(), n in 1usize..=8, p in 0.0f64..1.0) {
        let d = seeded_digraph(seed, n, p);
        let poly = dichromatic_polynomial(&d).unwrap();
        prop_assert_eq!(
            poly.eval_u64(1) == BigInt::from(1),
            d.is_acyclic(d.full_set())
        );
    }

    #[test]
    fn chromatic_number_is_first_positive_evaluation(
        seed in any::<u64>(), n in 1usize..=8, p in 0.0f64..1.0,
    ) {
        let d = seeded_digraph(seed, n, p);
        let poly = dichromatic_polynomial(&d).unwrap();
        let chi = exact_chromatic_number(&d).unwrap() as u64;
        prop_assert!(poly.eval_u64(chi) > BigInt::zero());
        if chi > 0 {
            prop_assert_eq!(poly.eval_u64(chi - 1), BigInt::zero());
        }
    }

    #[test]
    fn chromatic_vs_independence_pigeonhole(seed in any::<u64>(), n in 1usize..=10, p in 0.0f64..1.0) {
        let d = seeded_digraph(seed, n, p);
        let chi = exact_chromatic_number(&d).unwrap();
        let alpha = independence_number(&d).unwrap();
        // chi * alpha >= n: some class must be at least n/chi vertices.
        prop_assert!(chi * alpha >= n);
    }

    #[test]
    fn exact_bound_never_exceeds_alpha_on_digon_free(
        seed in any::<u64>(), n in 1usize..=9, p in 0.0f64..1.0,
    ) {
        let d = seeded_oriented(seed, n, p);
        let alpha = independence_number(&d).unwrap();
        prop_assert!(caro_wei_directed_bound_exact(&d) <= Ratio::from(BigInt::from(alpha)));
    }

    #[test]
    fn caro_wei_positive_terms(seed in any::<u64>(), n in 1usize..=12, p in 0.0f64..1.0) {
        // Each summand 1/(1+d+) + 1/(1+d-) - 1/(1+d) is a probability, so
        // the exact bound sits in (0, n].
        let d = seeded_digraph(seed, n, p);
        let exact = caro_wei_directed_bound_exact(&d);
        prop_assert!(exact.is_positive());
        prop_assert!(exact <= Ratio::from(BigInt::from(n)));
    }
}
