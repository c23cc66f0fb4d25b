use std::sync::Arc;

use lochom::duality::{artinian_dual_of, noetherian_dim, noetherian_dual_of, width};
use lochom::{
    ext_module, invariants, is_isomorphic, krull_dim, matlis_dual_finite, resolve, FPModule, FreeElement, FreeModule,
    Monomial, Polynomial, Ring,
};
use lochom_oracle::{alternating_twist_sum, is_standard_in_degree, Presentation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_form(ring: &Arc<Ring>, rng: &mut ChaCha8Rng, degree: u32) -> Polynomial {
    let n = ring.nvars();
    let p = ring.field().characteristic();
    loop {
        let mut raw = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let mut exps = vec![0u32; n];
            for _ in 0..degree {
                exps[rng.gen_range(0..n)] += 1;
            }
            let exps: Vec<_> = exps.into_iter().map(|e| e as _).collect();
            raw.push((rng.gen_range(1..p), Monomial::from_exponents(&exps)));
        }
        let f = Polynomial::normalize(ring, raw).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_quotient(seed: u64) -> FPModule {
    let ring = Ring::standard(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=3);
    let gens: Vec<Polynomial> = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            random_form(&ring, &mut rng, d)
        })
        .collect();
    FPModule::cyclic(&ring, &gens).unwrap()
}

fn random_monomial_artinian(seed: u64) -> FPModule {
    let ring = Ring::standard(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens: Vec<Polynomial> = (0..3)
        .map(|i| Polynomial::monomial(1, Monomial::var(3, i).pow(rng.gen_range(1..=3))))
        .collect();
    for _ in 0..rng.gen_range(0..3) {
        let exps: Vec<_> = (0..3).map(|_| rng.gen_range(0..2u32) as _).collect();
        let m = Monomial::from_exponents(&exps);
        if !m.is_one() {
            gens.push(Polynomial::monomial(1, m));
        }
    }
    FPModule::cyclic(&ring, &gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn groebner_bases_are_standard(seed in any::<u64>()) {
        let m = random_quotient(seed);
        let gb = m.groebner_basis();
        prop_assert!(gb.satisfies_buchberger_criterion());
        let pres = Presentation::of(&m);
        for d in 0..=5 {
            prop_assert!(is_standard_in_degree(3, m.twists(), &pres.relations, d));
        }
    }

    #[test]
    fn hilbert_functions_agree_with_linear_algebra(seed in any::<u64>()) {
        let m = random_quotient(seed);
        let res = resolve(&m);
        let tw: Vec<Vec<i32>> = (0..=res.len()).map(|i| res.free_module(i).twists().to_vec()).collect();
        let pres = Presentation::of(&m);
        for d in 0..=6 {
            let oracle = pres.hilbert(d) as i64;
            prop_assert_eq!(m.hilbert_function(d as i32) as i64, oracle);
            prop_assert_eq!(alternating_twist_sum(3, &tw, d), oracle);
        }
    }

    #[test]
    fn ext_vanishes_outside_depth_and_dimension(seed in any::<u64>()) {
        let m = random_quotient(seed);
        let inv = invariants(&m);
        let n = 3i64;
        let depth = inv.depth.unwrap() as i64;
        let dim = inv.dim as i64;
        prop_assert!(depth <= dim);
        for i in 0..=n {
            let e = ext_module(i, &m, -3);
            if i < n - dim || i > n - depth {
                prop_assert!(e.is_zero(), "Ext^{} should vanish", i);
            }
            if i == n - dim || i == n - depth {
                prop_assert!(!e.is_zero(), "Ext^{} should not vanish", i);
            }
        }
        prop_assert_eq!(inv.is_cm, depth == dim);
    }

    #[test]
    fn shifting_moves_hilbert_functions(seed in any::<u64>(), k in -3i32..=3) {
        let m = random_quotient(seed);
        let s = m.shift(k);
        for d in -4..=4 {
            prop_assert_eq!(s.hilbert_function(d), m.hilbert_function(d + k));
        }
        prop_assert_eq!(krull_dim(&s), krull_dim(&m));
    }

    #[test]
    fn change_of_basis_is_an_isomorphism(seed in any::<u64>()) {
        let m = random_quotient(seed);
        let ring = m.ring().clone();
        let f: Polynomial = m.relations().column(0).components(m.ambient()).remove(0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let p = ring.field().characteristic();
        // rows of an invertible matrix [[1, a], [b, 1 + ab]]
        let (a, b) = (rng.gen_range(0..p), rng.gen_range(0..p));
        let c = ring.field().add(1, ring.field().mul(a, b));
        let amb = FreeModule::new(ring.clone(), vec![0, 0]);
        let rels = [
            FreeElement::from_components(&amb, &[f.clone(), f.scale(a, &ring)]).unwrap(),
            FreeElement::from_components(&amb, &[f.scale(b, &ring), f.scale(c, &ring)]).unwrap(),
        ];
        let twisted = FPModule::from_relations(&amb, &rels).unwrap();
        let plain = FPModule::cyclic(&ring, &[f.clone()]).unwrap();
        let plain = plain.direct_sum(&plain).unwrap();
        prop_assert!(is_isomorphic(&twisted, &plain, seed).is_yes());
    }

    #[test]
    fn matlis_dual_reverses_degrees(seed in any::<u64>()) {
        let m = random_monomial_artinian(seed);
        let d = matlis_dual_finite(&m).unwrap();
        for e in -8..=8 {
            prop_assert_eq!(d.hilbert_function(e), m.hilbert_function(-e));
        }
        let dd = matlis_dual_finite(&d).unwrap();
        prop_assert!(is_isomorphic(&dd, &m, seed).is_yes());
    }

    #[test]
    fn width_is_at_most_noetherian_dimension(seed in any::<u64>()) {
        let m = random_quotient(seed);
        let x = artinian_dual_of(&m);
        prop_assert!(width(&x).unwrap() as i32 <= noetherian_dim(&x));
        prop_assert_eq!(noetherian_dual_of(&x), m);
    }
}
