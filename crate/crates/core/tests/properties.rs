use liecps::catalog::{default_samples, get, instances, KEYS};
use liecps::connection::{cp_connection, curvature_at, extend_to_hat, is_flat, is_torsion_free, parallel_check, restrict, Connection};
use liecps::forms::{ce_differential, check_dual_product_integrability, KForm};
use liecps::lie::{check_jacobi, is_ideal, realify_complexification};
use liecps::linalg::{is_zero_vector, unit_vector, CirclePoint, Rational};
use liecps::lsa::{aff_bracket, bicrossproduct, check_lsa, check_matched_pair, induced_lsa, matched_pair_from_cps};
use liecps::random::{self, random_almost_product, random_bilinear_product, random_cps, random_lsa, random_sparse_product};
use liecps::schema::{from_json, to_json, CpsDoc};
use liecps::structures::check_product_integrable;
use liecps::{LieAlgebra, Subspace, Tensor};
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn catalog_algebras() -> Vec<LieAlgebra> {
    let samples = vec![CirclePoint::from_parameter(&Rational::new(1.into(), 2.into()))];
    let mut out = Vec::new();
    for key in KEYS {
        for (_, p) in instances(key, &samples) {
            let a = get(key, &p).unwrap().algebra;
            if a.dim() <= 8 {
                out.push(a);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn aff_bracket_is_lie_iff_product_is_left_symmetric(seed in any::<u64>(), n in 1usize..=3, kind in 0u8..3) {
        let mut r = random::rng(seed);
        let p = match kind {
            0 => random_bilinear_product(&mut r, n),
            1 => random_lsa(&mut r, n),
            _ => random_sparse_product(&mut r, n, 0.2),
        };
        let jacobi = check_jacobi(&aff_bracket(&p, "aff")).passed();
        let lsa = check_lsa(&p.commutator("c"), &p).passed();
        prop_assert_eq!(jacobi, lsa);
    }

    #[test]
    fn random_structures_satisfy_every_pipeline_law(seed in any::<u64>(), k in 1usize..=2) {
        let mut r = random::rng(seed);
        let cps = random_cps(&mut r, k).unwrap();
        let (plus, minus) = induced_lsa(&cps).unwrap();
        prop_assert!(check_lsa(plus.base(), plus.product()).passed());
        prop_assert!(check_lsa(minus.base(), minus.product()).passed());
        let mp = matched_pair_from_cps(&cps).unwrap();
        prop_assert!(check_matched_pair(mp.u(), mp.v(), mp.rho(), mp.mu()).passed());
        prop_assert!(bicrossproduct(&mp).unwrap().same_constants(&cps.adapted_algebra()));
        let c = cp_connection(&cps).unwrap();
        prop_assert!(is_torsion_free(&c));
        prop_assert!(parallel_check(&c, cps.j()) && parallel_check(&c, cps.e()));
    }

    #[test]
    fn curvature_vanishes_on_pairs_from_one_eigenspace(seed in any::<u64>(), k in 1usize..=2) {
        let mut r = random::rng(seed);
        let cps = random_cps(&mut r, k).unwrap();
        let c = cp_connection(&cps).unwrap();
        let n = cps.dim();
        for basis in [cps.plus_basis(), cps.minus_basis()] {
            for x in &basis {
                for y in &basis {
                    for z in 0..n {
                        prop_assert!(is_zero_vector(&curvature_at(&c, x, y, &unit_vector(n, z))));
                    }
                }
            }
            prop_assert!(is_flat(&restrict(&c, &basis, "leaf").unwrap()));
        }
    }

    #[test]
    fn both_eigenspaces_ideals_forces_abelian(seed in any::<u64>(), k in 1usize..=2) {
        let mut r = random::rng(seed);
        let cps = random_cps(&mut r, k).unwrap();
        let g = cps.algebra();
        if is_ideal(g, cps.plus()) && is_ideal(g, cps.minus()) {
            prop_assert!(g.is_abelian());
        }
    }

    #[test]
    fn structure_documents_round_trip(seed in any::<u64>(), k in 1usize..=2) {
        let mut r = random::rng(seed);
        let cps = random_cps(&mut r, k).unwrap();
        let text = to_json(&CpsDoc::from_cps(&cps));
        let back = from_json::<CpsDoc>(&text).unwrap().to_cps().unwrap();
        prop_assert_eq!(back.j(), cps.j());
        prop_assert_eq!(back.e(), cps.e());
        prop_assert!(back.algebra().same_constants(cps.algebra()));
    }

    #[test]
    fn subspace_span_is_canonical(seed in any::<u64>(), n in 1usize..=5, k in 1usize..=4) {
        let mut r = random::rng(seed);
        let vs: Vec<_> = (0..k).map(|_| random::random_vector(&mut r, n, 3)).collect();
        let s = Subspace::span(n, &vs);
        let mixed = random::random_invertible(&mut r, k);
        let ws: Vec<_> = (0..k).map(|i| {
            let mut w = vec![Rational::from_integer(0.into()); n];
            for (j, v) in vs.iter().enumerate() {
                for t in 0..n {
                    w[t] += mixed.get(j, i) * &v[t];
                }
            }
            w
        }).collect();
        prop_assert_eq!(Subspace::span(n, &ws), s);
    }

    #[test]
    fn doubling_stays_on_the_circle(p in -50i64..50, q in 1i64..20) {
        let t = Rational::new(p.into(), q.into());
        let d = CirclePoint::from_parameter(&t).double();
        prop_assert_eq!(d.cos() * d.cos() + d.sin() * d.sin(), Rational::from_integer(1.into()));
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn extension_preserves_torsion_freeness(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        let algebras = catalog_algebras();
        let g = algebras[(seed % algebras.len() as u64) as usize].clone();
        let n = g.dim();
        // Half the bracket plus a symmetric tensor is torsion-free.
        let mut t = random::random_symmetric_perturbation(&mut r, n);
        let half = Rational::new(1.into(), 2.into());
        for i in 0..n {
            for j in 0..n {
                let b = g.bracket_basis(i, j);
                for k in 0..n {
                    let v = t.get(&[i, j, k]) + &half * &b[k];
                    t.set(&[i, j, k], v);
                }
            }
        }
        let c = Connection::new(g.clone(), t).unwrap();
        prop_assert!(is_torsion_free(&c));
        let hat = extend_to_hat(&c, &realify_complexification(&g)).unwrap();
        prop_assert!(is_torsion_free(&hat));
    }

    #[test]
    fn differential_squares_to_zero(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        for g in catalog_algebras() {
            let n = g.dim();
            let f = KForm::from_covector(&random::random_vector(&mut r, n, 3));
            let df = ce_differential(&g, &f).unwrap();
            prop_assert!(ce_differential(&g, &df).unwrap().is_zero());
        }
    }

    #[test]
    fn dual_integrability_matches_direct_check(seed in any::<u64>()) {
        let mut r = random::rng(seed);
        for g in catalog_algebras().into_iter().filter(|g| g.dim() <= 4) {
            let e = random_almost_product(&mut r, g.dim());
            prop_assert_eq!(
                check_dual_product_integrability(&g, &e).unwrap(),
                check_product_integrable(&g, e.matrix()).passed()
            );
        }
    }
}

#[test]
fn flatness_agrees_on_g_and_its_complexification() {
    for key in KEYS {
        for (_, p) in instances(key, &default_samples()) {
            let entry = get(key, &p).unwrap();
            for s in &entry.structures {
                let Ok(cps) = entry.cps(&s.name) else { continue };
                if cps.dim() > 8 {
                    continue;
                }
                let c = cp_connection(&cps).unwrap();
                let hat = extend_to_hat(&c, &realify_complexification(cps.algebra())).unwrap();
                assert_eq!(is_flat(&c), is_flat(&hat), "{key} {}", s.name);
            }
        }
    }
}

#[test]
fn zero_tensor_is_rejected_as_probe() {
    let mut r = random::rng(1);
    let cps = random_cps(&mut r, 1).unwrap();
    let n = cps.dim();
    assert!(liecps::connection::uniqueness_probe(&cps, &Tensor::zeros(&[n, n, n])).is_err());
}
