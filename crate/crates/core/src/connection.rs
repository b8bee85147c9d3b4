//! Left-invariant connections as bilinear maps on a Lie algebra.

use crate::error::{Error, Result};
use crate::lie::{apply_change_of_basis, subalgebra_in_basis, LieAlgebra, RealifiedComplexification};
use crate::linalg::{bilinear_eval, bilinear_in_basis, solve, unit_vector, vec_neg, vec_sub, zero_vector, Matrix, Rational, Tensor, Vector};
use crate::lsa::extended_product;
use crate::structures::ComplexProductStructure;

/// `nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    base: LieAlgebra,
    gamma: Tensor,
}

impl Connection {
    pub fn new(base: LieAlgebra, gamma: Tensor) -> Result<Self> {
        let n = base.dim();
        if gamma.shape() != [n, n, n] {
            return Err(Error::DimensionMismatch { expected: n, found: gamma.shape().first().copied().unwrap_or(0) });
        }
        Ok(Self { base, gamma })
    }

    pub fn zero(base: LieAlgebra) -> Self {
        let n = base.dim();
        Self { base, gamma: Tensor::zeros(&[n, n, n]) }
    }

    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    pub fn gamma(&self) -> &Tensor {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `nabla_x y`
    pub fn nabla(&self, x: &[Rational], y: &[Rational]) -> Vector {
        bilinear_eval(&self.gamma, x, y)
    }

    /// `nabla_x` as a matrix.
    pub fn nabla_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.nabla(x, &unit_vector(n, j))).collect();
        Matrix::from_columns(n, &cols).expect("square")
    }

    /// The same connection in the basis given by the columns of `p`.
    pub fn in_basis(&self, p: &Matrix, labels: Option<Vec<String>>) -> Result<Self> {
        let base = apply_change_of_basis(&self.base, p, labels)?;
        Ok(Self { base, gamma: bilinear_in_basis(&self.gamma, p)? })
    }

    pub fn add(&self, d: &Tensor) -> Result<Self> {
        if d.shape() != self.gamma.shape() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: d.shape().first().copied().unwrap_or(0) });
        }
        Ok(Self { base: self.base.clone(), gamma: &self.gamma + d })
    }
}

/// `T(X,Y) = nabla_X Y - nabla_Y X - [X,Y]` as `t[i][j][k]`.
pub fn torsion(c: &Connection) -> Tensor {
    let n = c.dim();
    let mut t = Tensor::zeros(&[n, n, n]);
    for i in 0..n {
        for j in 0..n {
            let v = vec_sub(&vec_sub(c.gamma.fiber(&[i, j]), c.gamma.fiber(&[j, i])), &c.base.bracket_basis(i, j));
            t.set_fiber(&[i, j], &v);
        }
    }
    t
}

/// `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z` as
/// `r[i][j][k][l]`.
pub fn curvature(c: &Connection) -> Tensor {
    let n = c.dim();
    let mats: Vec<Matrix> = (0..n).map(|i| c.nabla_matrix(&unit_vector(n, i))).collect();
    let mut r = Tensor::zeros(&[n, n, n, n]);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let m = &(&(&mats[i] * &mats[j]) - &(&mats[j] * &mats[i])) - &c.nabla_matrix(&c.base.bracket_basis(i, j));
            for k in 0..n {
                r.set_fiber(&[i, j, k], &m.column(k));
            }
        }
    }
    r
}

/// `R(x, y) z` for arbitrary vectors.
pub fn curvature_at(c: &Connection, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let a = c.nabla(x, &c.nabla(y, z));
    let b = c.nabla(y, &c.nabla(x, z));
    let d = c.nabla(&c.base.bracket(x, y), z);
    vec_sub(&vec_sub(&a, &b), &d)
}

pub fn is_torsion_free(c: &Connection) -> bool {
    torsion(c).is_zero()
}

pub fn is_flat(c: &Connection) -> bool {
    curvature(c).is_zero()
}

/// Nonzero curvature values `R(e_i, e_j) e_k` with `i < j`, labelled.
pub fn curvature_witnesses(c: &Connection) -> Vec<(String, String, String, String)> {
    let n = c.dim();
    let r = curvature(c);
    let l = c.base.labels();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let v = r.fiber(&[i, j, k]);
                if v.iter().any(|x| !num::Zero::is_zero(x)) {
                    out.push((l[i].clone(), l[j].clone(), l[k].clone(), c.base.show(v)));
                }
            }
        }
    }
    out
}

/// The canonical torsion-free connection `nabla_X Y = X.Y` given by the
/// extended product of a complex product structure.
pub fn cp_connection(cps: &ComplexProductStructure) -> Result<Connection> {
    let p = extended_product(cps)?;
    Connection::new(cps.algebra().clone(), p.tensor().clone())
}

/// `nabla_x (T y) = T (nabla_x y)` for all basis `x, y`.
pub fn parallel_check(c: &Connection, t: &Matrix) -> bool {
    let n = c.dim();
    if t.rows() != n || t.cols() != n {
        return false;
    }
    (0..n).all(|i| c.nabla_matrix(&unit_vector(n, i)).commutes_with(t))
}

/// Whether `nabla^CP + d` still makes both `J` and `E` parallel. `d` must be
/// nonzero and symmetric in its first two slots, so that the perturbed
/// connection remains torsion-free.
pub fn uniqueness_probe(cps: &ComplexProductStructure, d: &Tensor) -> Result<bool> {
    let n = cps.dim();
    if d.shape() != [n, n, n] {
        return Err(Error::InvalidProbe(format!("shape {:?}, expected [{n}, {n}, {n}]", d.shape())));
    }
    if d.is_zero() {
        return Err(Error::InvalidProbe("perturbation is zero".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if d.fiber(&[i, j]) != d.fiber(&[j, i]) {
                return Err(Error::InvalidProbe("perturbation is not symmetric".into()));
            }
        }
    }
    let c = cp_connection(cps)?.add(d)?;
    Ok(parallel_check(&c, cps.j()) && parallel_check(&c, cps.e()))
}

/// Complex-bilinear extension to the realified complexification:
/// `nabla_{X+IY}(X'+IY') = (nabla_X X' - nabla_Y Y') + I(nabla_X Y' + nabla_Y X')`.
pub fn extend_to_hat(c: &Connection, rc: &RealifiedComplexification) -> Result<Connection> {
    if !c.base.same_constants(&rc.base) {
        return Err(Error::BaseMismatch);
    }
    let n = c.dim();
    let mut g = Tensor::zeros(&[2 * n, 2 * n, 2 * n]);
    for i in 0..n {
        for j in 0..n {
            let v = c.gamma.fiber(&[i, j]);
            let mut real = v.to_vec();
            real.extend(zero_vector(n));
            let mut imag = zero_vector(n);
            imag.extend(v.iter().cloned());
            g.set_fiber(&[i, j], &real);
            g.set_fiber(&[i, n + j], &imag);
            g.set_fiber(&[n + i, j], &imag);
            g.set_fiber(&[n + i, n + j], &vec_neg(&real));
        }
    }
    Connection::new(rc.hat.clone(), g)
}

/// Restriction to a subalgebra stable under the connection, in the given
/// basis of that subalgebra.
pub fn restrict(c: &Connection, basis: &[Vector], name: &str) -> Result<Connection> {
    let sub = subalgebra_in_basis(&c.base, basis, name)?;
    let k = basis.len();
    let cols = Matrix::from_columns(c.dim(), basis)?;
    let mut g = Tensor::zeros(&[k, k, k]);
    for a in 0..k {
        for b in 0..k {
            let v = c.nabla(&basis[a], &basis[b]);
            let coords = solve(&cols, &v).ok_or(Error::NotSubalgebra)?;
            g.set_fiber(&[a, b], &coords);
        }
    }
    Connection::new(sub, g)
}

/// The canonical connection of a complex product structure written in the
/// adapted frame, with combination labels such as `A-D`.
pub fn cp_connection_adapted(cps: &ComplexProductStructure) -> Result<Connection> {
    let labels = cps.frame().column_vectors().iter().map(|v| cps.algebra().show(v)).collect();
    cp_connection(cps)?.in_basis(cps.frame(), Some(labels))
}
