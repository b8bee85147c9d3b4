//! Seeded generators for property tests and randomized checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::lie::{apply_change_of_basis, LieAlgebra};
use crate::linalg::{frac, q, Matrix, Rational, Tensor};
use crate::lsa::{aff_construction, BilinearProduct};
use crate::structures::{validate_cps, AlmostProduct, ComplexProductStructure};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `[-bound, bound]`.
pub fn small_int<R: Rng>(r: &mut R, bound: i64) -> Rational {
    q(r.gen_range(-bound..=bound))
}

/// `p/q` with `|p| <= bound` and `q in 1..=3`.
pub fn small_rational<R: Rng>(r: &mut R, bound: i64) -> Rational {
    frac(r.gen_range(-bound..=bound), r.gen_range(1..=3))
}

pub fn random_vector<R: Rng>(r: &mut R, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| small_int(r, bound)).collect()
}

pub fn random_matrix<R: Rng>(r: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols).map(|_| small_int(r, bound)).collect();
    Matrix::new(rows, cols, data).expect("sized")
}

/// Invertible `n x n` integer matrix, by rejection.
pub fn random_invertible<R: Rng>(r: &mut R, n: usize) -> Matrix {
    loop {
        let m = random_matrix(r, n, n, 2);
        if m.rank() == n {
            return m;
        }
    }
}

/// Nonzero tensor `d[i][j][k]` symmetric in `i, j`.
pub fn random_symmetric_perturbation<R: Rng>(r: &mut R, n: usize) -> Tensor {
    loop {
        let mut t = Tensor::zeros(&[n, n, n]);
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    // Sparse: most entries stay zero.
                    if r.gen_bool(0.3) {
                        let v = small_int(r, 3);
                        t.set(&[i, j, k], v.clone());
                        t.set(&[j, i, k], v);
                    }
                }
            }
        }
        if !t.is_zero() {
            return t;
        }
    }
}

pub fn basis_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

/// Product with independent entries in `[-3, 3]`.
pub fn random_bilinear_product<R: Rng>(r: &mut R, n: usize) -> BilinearProduct {
    let mut t = Tensor::zeros(&[n, n, n]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set(&[i, j, k], small_int(r, 3));
            }
        }
    }
    BilinearProduct::new(basis_labels("e", n), t).expect("sized")
}

/// Sparse product: each structure constant is nonzero with probability
/// `density`. Small dimensions then hit left-symmetric products often
/// enough to exercise both outcomes of a test.
pub fn random_sparse_product<R: Rng>(r: &mut R, n: usize, density: f64) -> BilinearProduct {
    let mut t = Tensor::zeros(&[n, n, n]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if r.gen_bool(density) {
                    t.set(&[i, j, k], small_int(r, 3));
                }
            }
        }
    }
    BilinearProduct::new(basis_labels("e", n), t).expect("sized")
}

/// A left-symmetric product, built from one of a few template families and
/// moved to a random basis.
pub fn random_lsa<R: Rng>(r: &mut R, n: usize) -> BilinearProduct {
    let f: Vec<Rational> = (0..n).map(|_| small_int(r, 2)).collect();
    let mut t = Tensor::zeros(&[n, n, n]);
    match r.gen_range(0..4) {
        // x.y = f(x) y
        0 => {
            for i in 0..n {
                for j in 0..n {
                    t.set(&[i, j, j], f[i].clone());
                }
            }
        }
        // x.y = f(y) x
        1 => {
            for i in 0..n {
                for j in 0..n {
                    t.set(&[i, j, i], f[j].clone());
                }
            }
        }
        // e_1 acts as the identity on the left, everything else is zero
        2 => {
            for j in 0..n {
                t.set(&[0, j, j], q(1));
            }
        }
        // diagonal idempotents: e_i.e_i = c_i e_i
        _ => {
            for (i, c) in f.iter().enumerate() {
                t.set(&[i, i, i], c.clone());
            }
        }
    }
    let p = BilinearProduct::new(basis_labels("e", n), t).expect("sized");
    let change = random_invertible(r, n);
    p.in_basis(&change, basis_labels("e", n)).expect("invertible")
}

/// `E = P diag(+-1) P^-1` with both signs present.
pub fn random_almost_product<R: Rng>(r: &mut R, n: usize) -> AlmostProduct {
    assert!(n >= 2, "an almost product structure needs dimension at least 2");
    let plus = r.gen_range(1..n);
    let mut signs: Vec<i64> = (0..n).map(|k| if k < plus { 1 } else { -1 }).collect();
    signs.shuffle(r);
    let mut d = Matrix::zeros(n, n);
    for (k, s) in signs.iter().enumerate() {
        d.set(k, k, q(*s));
    }
    let p = random_invertible(r, n);
    let e = &(&p * &d) * &p.inverse().expect("invertible");
    AlmostProduct::new(e).expect("both eigenvalues occur")
}

/// A complex product structure on `aff(A)` for a random left-symmetric `A`
/// of dimension `k`, moved to a random basis.
pub fn random_cps<R: Rng>(r: &mut R, k: usize) -> Result<ComplexProductStructure> {
    let p = random_lsa(r, k);
    let (g, cps) = aff_construction(&p, "aff(A)")?;
    let change = random_invertible(r, 2 * k);
    conjugate(&g, &cps, &change)
}

/// The same structure in the basis given by the columns of `change`.
pub fn conjugate(g: &LieAlgebra, cps: &ComplexProductStructure, change: &Matrix) -> Result<ComplexProductStructure> {
    let inv = change.try_inverse()?;
    let g2 = apply_change_of_basis(g, change, Some(basis_labels("f", g.dim())))?;
    let j = &(&inv * cps.j()) * change;
    let e = &(&inv * cps.e()) * change;
    validate_cps(&g2, &j, &e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lsa::check_lsa;

    #[test]
    fn lsa_templates_are_left_symmetric() {
        let mut r = rng(7);
        for n in 1..=3 {
            for _ in 0..20 {
                let p = random_lsa(&mut r, n);
                assert!(check_lsa(&p.commutator("c"), &p).passed());
            }
        }
    }

    #[test]
    fn random_cps_validates() {
        let mut r = rng(11);
        for _ in 0..10 {
            let cps = random_cps(&mut r, 2).unwrap();
            assert_eq!(cps.dim(), 4);
        }
    }

    #[test]
    fn almost_products_square_to_identity() {
        let mut r = rng(3);
        for n in 2..=5 {
            let e = random_almost_product(&mut r, n);
            assert!((e.matrix() * e.matrix()).is_identity());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        assert_eq!(random_bilinear_product(&mut rng(5), 2), random_bilinear_product(&mut rng(5), 2));
    }
}
