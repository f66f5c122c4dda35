//! Property tests for the symmetric-function, character and bound layers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use oscbound::bounds::{forced_zero_by_symmetry, reduced_bound, signature_q, transpose_dual};
use oscbound::characters::{character_value, character_value_direct, shifted_target, ProductClass};
use oscbound::partitions::{Partition, SchubertProblem};
use oscbound::poly::{permutation_sign, permutations, vandermonde, ExponentVector};
use oscbound::symfunc::{lr_multiplicity, schur_expand, schur_poly, schur_poly_bialternant, weyl_dimension, CycleType};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(64)
}

/// A partition with at most `rows` parts and weight at most `max_weight`.
fn partition(rows: usize, max_weight: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0u32..=max_weight, rows).prop_filter_map("too heavy", move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        (v.iter().sum::<u32>() <= max_weight).then(|| Partition::new(v).unwrap())
    })
}

/// `(n, lambdas, mu)` with `|mu| = Σ|λ|` and at most `n` parts in every partition.
fn weighted_instance() -> impl Strategy<Value = (usize, Vec<Partition>, Partition)> {
    (1usize..=3).prop_flat_map(|n| {
        proptest::collection::vec(partition(n, 3), 1..=4).prop_flat_map(move |lambdas| {
            let total: u32 = lambdas.iter().map(|l| l.weight() as u32).sum();
            let shapes: Vec<Partition> = Partition::all_of_weight(total)
                .into_iter()
                .filter(|m| m.len() <= n)
                .collect();
            (Just(n), Just(lambdas), proptest::sample::select(shapes))
        })
    })
}

/// A valid problem with `d <= 6` whose first `2c` factors come in equal pairs.
fn valid_problem() -> impl Strategy<Value = SchubertProblem> {
    (2u32..=6).prop_flat_map(|d| (Just(d), 1..d)).prop_flat_map(|(d, n)| {
        let n = n as usize;
        let cols = d - n as u32;
        let pieces = proptest::collection::vec(partition(n, 3), 1..=4);
        (Just(n), Just(d), pieces, 0usize..=2, any::<proptest::sample::Index>()).prop_filter_map(
            "does not fit",
            move |(n, d, pieces, pairs, pick)| {
                let pairs = pairs.min(pieces.len());
                let mut lambdas: Vec<Partition> = Vec::new();
                for l in &pieces[..pairs] {
                    lambdas.push(l.clone());
                    lambdas.push(l.clone());
                }
                lambdas.extend(pieces[pairs..].iter().cloned());
                let used: u64 = lambdas.iter().map(Partition::weight).sum();
                let area = u64::from(cols) * n as u64;
                if used > area || lambdas.iter().any(|l| !l.fits_in(n, cols)) {
                    return None;
                }
                let pool = Partition::in_box((area - used) as u32, n, cols);
                if pool.is_empty() {
                    return None;
                }
                let nu = pool[pick.index(pool.len())].clone();
                let p = SchubertProblem {
                    lambdas,
                    nu,
                    n,
                    d,
                    c: pairs,
                };
                p.validate().is_ok().then_some(p)
            },
        )
    })
}

/// A self-dual problem in `Gr(n, 2n)`: every partition self-conjugate.
fn self_dual_problem() -> impl Strategy<Value = SchubertProblem> {
    (1usize..=3).prop_flat_map(|n| {
        let shapes: Vec<Partition> = (1..=(n * n) as u32)
            .flat_map(|w| Partition::in_box(w, n, n as u32))
            .filter(Partition::is_self_conjugate)
            .collect();
        (
            Just(n),
            proptest::collection::vec(proptest::sample::select(shapes), 1..=3),
            0usize..=2,
            any::<proptest::sample::Index>(),
        )
            .prop_filter_map("no self-conjugate remainder", |(n, pieces, pairs, pick)| {
                let pairs = pairs.min(pieces.len());
                let mut lambdas = Vec::new();
                for l in &pieces[..pairs] {
                    lambdas.push(l.clone());
                    lambdas.push(l.clone());
                }
                lambdas.extend(pieces[pairs..].iter().cloned());
                let used: u64 = lambdas.iter().map(Partition::weight).sum();
                let area = (n * n) as u64;
                if used > area {
                    return None;
                }
                let pool: Vec<Partition> = Partition::in_box((area - used) as u32, n, n as u32)
                    .into_iter()
                    .filter(Partition::is_self_conjugate)
                    .collect();
                if pool.is_empty() {
                    return None;
                }
                let nu = pool[pick.index(pool.len())].clone();
                let p = SchubertProblem {
                    lambdas,
                    nu,
                    n,
                    d: 2 * n as u32,
                    c: pairs,
                };
                p.validate().is_ok().then_some(p)
            })
    })
}

fn a_of(p: &SchubertProblem) -> BigInt {
    signature_q(&p.lambdas, &p.mu().unwrap(), p.c, p.n).unwrap().value
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn schur_constructions_agree(n in 1usize..=4, l in partition(4, 8)) {
        let tableaux = schur_poly(&l, n);
        prop_assert_eq!(&tableaux, &schur_poly_bialternant(&l, n).unwrap());
        prop_assert!(tableaux.is_symmetric());
    }

    #[test]
    fn schur_stability(n in 2usize..=4, l in partition(4, 7)) {
        let restricted = schur_poly(&l, n).drop_last_variable();
        if l.len() < n {
            prop_assert_eq!(restricted, schur_poly(&l, n - 1));
        } else {
            prop_assert!(restricted.is_zero());
        }
    }

    #[test]
    fn schur_dimension(n in 1usize..=4, l in partition(4, 8)) {
        prop_assert_eq!(schur_poly(&l, n).eval_all_ones(), weyl_dimension(&l, n));
    }

    #[test]
    fn lr_matches_expansion((n, lambdas, mu) in weighted_instance()) {
        let mut prod = schur_poly(&Partition::empty(), n);
        for l in &lambdas {
            prod = &prod * &schur_poly(l, n);
        }
        let expansion = schur_expand(&prod, n).unwrap();
        prop_assert_eq!(expansion.coeff(&mu), lr_multiplicity(&lambdas, &mu, n));
    }

    #[test]
    fn identity_class_is_multiplicity((n, lambdas, mu) in weighted_instance()) {
        let cls = ProductClass::new(lambdas.iter().map(|l| (l.clone(), CycleType::identity(1))));
        let v = character_value(&cls, &mu, n).unwrap();
        prop_assert!(!v.weight_gated);
        prop_assert_eq!(v.value, lr_multiplicity(&lambdas, &mu, n));
    }

    #[test]
    fn class_function_ignores_cycle_order(
        lengths in proptest::collection::vec(1u32..=3, 1..=4),
        l in partition(2, 2),
        seed in any::<proptest::sample::Index>(),
    ) {
        let k: u32 = lengths.iter().sum::<u32>() * l.weight() as u32;
        let shapes: Vec<Partition> = Partition::all_of_weight(k).into_iter().filter(|m| m.len() <= 3).collect();
        let mu = shapes[seed.index(shapes.len())].clone();
        let mut reversed = lengths.clone();
        reversed.reverse();
        let a = character_value(&ProductClass::new([(l.clone(), CycleType::new(lengths).unwrap())]), &mu, 3).unwrap();
        let b = character_value(&ProductClass::new([(l, CycleType::new(reversed).unwrap())]), &mu, 3).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn weight_gate((n, lambdas, mu) in weighted_instance(), extra in 1u32..=2) {
        let mut parts = mu.parts().to_vec();
        if parts.is_empty() {
            parts.push(0);
        }
        parts[0] += extra;
        let heavier = Partition::new(parts).unwrap();
        let cls = ProductClass::new(lambdas.into_iter().map(|l| (l, CycleType::identity(1))));
        let v = character_value(&cls, &heavier, n).unwrap();
        prop_assert!(v.weight_gated);
        prop_assert!(v.value.is_zero());
    }

    #[test]
    fn antisymmetrization_consistency((n, lambdas, mu) in weighted_instance(), pick in any::<proptest::sample::Index>()) {
        let mut prod = schur_poly(&Partition::empty(), n);
        for l in &lambdas {
            prod = &prod * &schur_poly(l, n);
        }
        let full = &vandermonde(n) * &prod;
        let target = shifted_target(&mu, n).unwrap();
        let perms = permutations(n);
        let w = &perms[pick.index(perms.len())];
        let moved: Vec<u32> = (0..n).map(|i| target.as_slice()[w[i]]).collect();
        let base = full.coeff(&target).unwrap();
        prop_assert_eq!(full.coeff(&ExponentVector::new(moved)).unwrap(), base.clone() * permutation_sign(w));
        let cls = ProductClass::new(lambdas.into_iter().map(|l| (l, CycleType::identity(1))));
        prop_assert_eq!(character_value_direct(&cls, &mu, n).unwrap().value, base);
    }

    #[test]
    fn signature_invariants(p in valid_problem()) {
        let a = a_of(&p);
        let a0 = a_of(&p.with_pairs(0));
        prop_assert_eq!(&a0, &lr_multiplicity(&p.lambdas, &p.mu().unwrap(), p.n));
        prop_assert!(a.abs() <= a0);
        prop_assert!((&a - &a0).is_even());
    }

    #[test]
    fn transpose_and_reduction(p in valid_problem()) {
        let a = a_of(&p);
        let (dual, sign) = transpose_dual(&p).unwrap();
        prop_assert_eq!(a_of(&dual) * sign, a.clone());
        prop_assert_eq!(reduced_bound(&p).unwrap(), a);
    }

    #[test]
    fn symmetric_problems_vanish(p in self_dual_problem()) {
        prop_assume!(forced_zero_by_symmetry(&p));
        prop_assert!(a_of(&p).is_zero());
    }
}
