use std::sync::Arc;

use num_complex::Complex64;
use projrep::burnside::{character_table_float, FloatOptions};
use projrep::catalog;
use projrep::check::row_matched_distance;
use projrep::cocycle::Multiplier;
use projrep::decompose::{decompose, random_unitary, DecomposeOptions};
use projrep::dixon::{character_table_exact, PrimeContext};
use projrep::group::FiniteGroup;
use projrep::modp::{mod_pow, poly_eval, poly_roots, ZpMatrix};
use projrep::rep::{ProjectiveRep, Side};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_groups() -> Vec<(String, FiniteGroup)> {
    catalog::groups_up_to_16()
}

prop_compose! {
    fn group_index()(i in 0..42usize) -> usize { i }
}

fn coboundary(g: &Arc<FiniteGroup>, n: u64, raw: &[i64]) -> Multiplier {
    let mut mu: Vec<i64> = (0..g.order()).map(|i| raw[i % raw.len()]).collect();
    mu[0] = 0;
    Multiplier::coboundary_from_mu(g.clone(), n, &mu).unwrap()
}

fn bilinear(g: &Arc<FiniteGroup>, k: u64, i: usize, j: usize) -> Multiplier {
    let homs = catalog::homomorphisms_to_cyclic(g, k);
    catalog::bilinear_multiplier(g.clone(), &homs[i % homs.len()], &homs[j % homs.len()], k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_is_a_homomorphism(e in 1u64..13, a in 0u64..50, b in 0u64..50, order in 1usize..40) {
        let ctx = projrep::dixon::choose_prime(order, e);
        let ta = ctx.theta_root(a, e).unwrap();
        let tb = ctx.theta_root(b, e).unwrap();
        prop_assert_eq!(ta * tb % ctx.p, ctx.theta_root(a + b, e).unwrap());
        prop_assert_eq!(mod_pow(ctx.z, e, ctx.p), 1);
        prop_assert!((ctx.p as u128).pow(2) > 4 * order as u128);
    }

    #[test]
    fn for_prime_rejects_inadmissible(p in 2u64..200, e in 1u64..10) {
        if let Some(ctx) = PrimeContext::for_prime(20, e, p) {
            prop_assert_eq!((p - 1) % e, 0);
            prop_assert!(p * p > 80);
            prop_assert_eq!(ctx.root_pow.len() as u64, e);
        }
    }

    #[test]
    fn roots_are_roots(coeffs in proptest::collection::vec(0u64..13, 1..6)) {
        for r in poly_roots(&coeffs, 13) {
            prop_assert_eq!(poly_eval(&coeffs, r, 13), 0);
        }
    }

    #[test]
    fn nullspace_is_killed(rows in proptest::collection::vec(proptest::collection::vec(0u64..7, 4), 1..5)) {
        let m = ZpMatrix::from_rows(&rows, 7);
        for v in m.nullspace() {
            prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn coboundaries_are_cocycles(gi in group_index(), n in prop::sample::select(vec![2u64, 3, 4, 6]),
                                 raw in proptest::collection::vec(0i64..12, 1..8)) {
        let g = Arc::new(small_groups()[gi].1.clone());
        let m = coboundary(&g, n, &raw);
        prop_assert!(m.validate().is_ok());
        prop_assert_eq!(m.class_factor_product_violations(), 0);
        // A coboundary is cohomologically trivial, so every class is regular.
        prop_assert_eq!(m.regular_class_data().unwrap().len(), g.conjugacy_classes().len());
    }

    #[test]
    fn products_of_bilinears_are_cocycles(gi in group_index(), k in 2u64..5, i in 0usize..64, j in 0usize..64,
                                          raw in proptest::collection::vec(0i64..12, 1..8)) {
        let g = Arc::new(small_groups()[gi].1.clone());
        let m = bilinear(&g, k, i, j).product(&coboundary(&g, 6, &raw)).unwrap();
        prop_assert!(m.validate().is_ok());
        prop_assert_eq!(m.class_factor_product_violations(), 0);
        let rcd = m.regular_class_data().unwrap();
        for c in rcd.classes() {
            prop_assert_eq!(rcd.beta_to(c.representative), 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_and_float_tables_agree(gi in group_index(), k in 2u64..4, i in 0usize..64, j in 0usize..64) {
        let g = Arc::new(small_groups()[gi].1.clone());
        let m = bilinear(&g, k, i, j);
        let exact = character_table_exact(&m).unwrap();
        let float = character_table_float(&m, &FloatOptions::default()).unwrap();
        let sum: u64 = exact.degrees().iter().map(|d| d * d).sum();
        prop_assert_eq!(sum, g.order() as u64);
        prop_assert_eq!(exact.orthogonality_violations_modp(), 0);
        prop_assert_eq!(exact.theta_consistency_violations(), 0);
        let fv: Vec<Vec<Complex64>> = float.irreps.iter().map(|r| r.chars.clone()).collect();
        let d = row_matched_distance(&exact.complex_values(), &fv).unwrap();
        prop_assert!(d < 1e-6, "distance {}", d);
    }

    #[test]
    fn dual_and_tensor_are_valid(n in 2usize..6) {
        let h = catalog::heisenberg_rep(n);
        prop_assert!(h.dual().validate().is_ok());
        prop_assert!(h.tensor(&h.dual()).unwrap().validate().is_ok());
        let reg = ProjectiveRep::regular(h.multiplier().clone(), Side::Right);
        prop_assert!(reg.validate().is_ok());
    }

    #[test]
    fn decompose_recovers_direct_sums(seed in 0u64..1000, picks in proptest::collection::vec(0usize..3, 1..4)) {
        let mult = Arc::new(Multiplier::trivial(Arc::new(catalog::symmetric(3))));
        let perms = catalog::symmetric_permutations(3);
        let fam = [
            catalog::one_dim_rep(mult.clone(), &[0; 6], 2),
            catalog::one_dim_rep(mult.clone(), &catalog::symmetric_sign(3), 2),
            catalog::permutation_complement_rep(mult.clone(), &perms),
        ];
        let parts: Vec<&ProjectiveRep> = picks.iter().map(|&i| &fam[i]).collect();
        let sum = ProjectiveRep::direct_sum(&parts).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = sum.conjugated(&random_unitary(sum.degree(), &mut rng));
        let found = decompose(&rep, &DecomposeOptions::with_seed(seed)).unwrap();
        let want: Vec<Vec<Complex64>> = parts.iter().map(|p| p.character()).collect();
        let got: Vec<Vec<Complex64>> = found.iter().map(|p| p.character()).collect();
        let d = row_matched_distance(&want, &got).unwrap();
        prop_assert!(d < 1e-6, "distance {}", d);
    }

    #[test]
    fn seeded_runs_repeat(seed in 0u64..1000) {
        let m = Arc::new(catalog::heisenberg_multiplier(3));
        let reg = ProjectiveRep::regular(m.clone(), Side::Left);
        let opts = DecomposeOptions::with_seed(seed);
        let a: Vec<_> = decompose(&reg, &opts).unwrap().iter().map(|p| p.to_json()).collect();
        let b: Vec<_> = decompose(&reg, &opts).unwrap().iter().map(|p| p.to_json()).collect();
        prop_assert_eq!(a, b);
        let fo = FloatOptions { seed, ..FloatOptions::default() };
        let t1 = serde_json::to_string(&character_table_float(&m, &fo).unwrap()).unwrap();
        let t2 = serde_json::to_string(&character_table_float(&m, &fo).unwrap()).unwrap();
        prop_assert_eq!(t1, t2);
    }
}
