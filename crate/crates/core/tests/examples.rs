//! Worked examples checked against independent computations.

use liecps::catalog::{get, get_structure, Params};
use liecps::connection::{cp_connection, curvature_at, is_flat, restrict};
use liecps::forms::{invariant_symmetric_forms, signature};
use liecps::hypercomplex::{induce_hypercomplex, iterate_family, DEFAULT_CAP};
use liecps::lie::{is_subalgebra, parse_combination};
use liecps::linalg::{unit_vector, CirclePoint, Rational};
use liecps::lsa::{extended_product, induced_lsa};
use liecps::structures::{is_abelian_cs, validate_cps};
use liecps::{Error, Matrix, Vector};

fn v(labels: &[String], s: &str) -> Vector {
    parse_combination(labels, s).unwrap()
}

/// `R(x, y) = [L_x, L_y] - L_[x,y]` computed with matrices of left
/// multiplication, independently of the tensor code.
#[test]
fn a2_curvature_from_left_multiplications() {
    let cps = get_structure("A2", "JE", &Params::none()).unwrap();
    let g = cps.algebra();
    let p = extended_product(&cps).unwrap();
    let c = cp_connection(&cps).unwrap();
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit_vector(n, i), unit_vector(n, j));
            let (lx, ly) = (p.left(&x), p.left(&y));
            let r = &(&(&lx * &ly) - &(&ly * &lx)) - &p.left(&g.bracket(&x, &y));
            for k in 0..n {
                let z = unit_vector(n, k);
                assert_eq!(r.apply(&z), curvature_at(&c, &x, &y, &z));
            }
        }
    }
    let l = g.labels();
    let (x, y) = (v(l, "A-D"), v(l, "B+C"));
    assert_eq!(curvature_at(&c, &x, &y, &x), v(l, "-6C"));
}

#[test]
fn gl2r_leaves_and_connection_are_flat() {
    let cps = get_structure("gl2R", "JE", &Params::none()).unwrap();
    let c = cp_connection(&cps).unwrap();
    assert!(is_flat(&c));
    assert!(is_flat(&restrict(&c, &cps.plus_basis(), "plus").unwrap()));
    let (plus, minus) = induced_lsa(&cps).unwrap();
    assert_eq!(plus.dim(), 2);
    assert_eq!(minus.dim(), 2);
}

#[test]
fn gl2r_induced_structure_on_gl2c() {
    let cps = get_structure("gl2R", "JE", &Params::none()).unwrap();
    let (rc, h) = induce_hypercomplex(&cps).unwrap();
    let l = rc.hat.labels();
    assert_eq!(h.j1().apply(&v(l, "W")), v(l, "Z^"));
    assert_eq!(h.j2().apply(&v(l, "W")), v(l, "-X-Y"));
    let minus_id = Matrix::scalar(8, &Rational::from_integer((-1).into()));
    assert_eq!(&(h.j1() * h.j1()), &minus_id);
    assert_eq!(&(h.j2() * h.j2()), &minus_id);
    assert_eq!(&(h.j1() * h.j2()), &(&(h.j2() * h.j1()) * &minus_id));
}

#[test]
fn h3r_eigenspaces_rotate_with_the_parameter() {
    // E_theta at t = 0 is the unrotated structure; at t = 1 the half angle is
    // a quarter turn.
    let at = |t: i64| get_structure("h3R", "E_theta", &Params::at(CirclePoint::from_parameter(&Rational::from_integer(t.into())))).unwrap();
    let (a, b) = (at(0), at(1));
    assert_ne!(a.plus(), b.plus());
    assert_eq!(a.j(), b.j());
    for cps in [a, b] {
        assert!(is_subalgebra(cps.algebra(), cps.plus()));
        assert!(is_subalgebra(cps.algebra(), cps.minus()));
    }
}

#[test]
fn iterated_family_doubles_dimension() {
    let cps = get_structure("affR", "JE", &Params::none()).unwrap();
    for k in 1..=3 {
        let stage = iterate_family(&cps, k, DEFAULT_CAP).unwrap();
        assert_eq!(stage.hypercomplex.algebra().dim(), 2 << k);
    }
    assert!(matches!(iterate_family(&cps, 6, DEFAULT_CAP), Err(Error::CapExceeded { .. })));
}

#[test]
fn h2_complex_structure_is_not_abelian() {
    let e = get("H2", &Params::none()).unwrap();
    let j = e.complex_structure.unwrap();
    assert!(!is_abelian_cs(&e.algebra, &j));
}

#[test]
fn so3r_invariant_forms() {
    // R + so(3): the center and the Killing form give two independent
    // invariant symmetric forms.
    let e = get("so3R", &Params::none()).unwrap();
    let forms = invariant_symmetric_forms(&e.algebra);
    assert_eq!(forms.len(), 2);
    let killing = e.algebra.killing_form();
    assert_eq!(signature(&killing), (0, 3));
}

#[test]
fn wrong_square_is_reported() {
    let e = get("affR", &Params::none()).unwrap();
    let s = &e.structures[0];
    let err = validate_cps(&e.algebra, &Matrix::identity(2), &s.e).unwrap_err();
    assert_eq!(err.to_string(), "J squared is not -Id");
    assert!(err.is_malformed_input());
}
