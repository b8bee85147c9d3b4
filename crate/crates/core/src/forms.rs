//! Low-degree exterior forms on a Lie algebra, the Chevalley–Eilenberg
//! differential, and the metric/hypersymplectic checks attached to a complex
//! product structure.
//!
//! Bilinear forms are stored as Gram matrices: `B(X, Y) = X^T M Y`.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::BracketTable;
use crate::linalg::{dot, Matrix, Rational};
use crate::structures::{AlmostProduct, ComplexProductStructure};

/// An alternating form of degree 1, 2 or 3, stored by its coefficients on
/// strictly increasing index tuples of the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

/// Sorts `idx` in place; returns the permutation sign, or `None` on a repeat.
fn sort_with_sign(idx: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(odd)
    }
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Result<Self> {
        if !(1..=3).contains(&degree) {
            return Err(Error::FormDegree(degree));
        }
        Ok(Self { dim, degree, coeffs: BTreeMap::new() })
    }

    /// Builds a form from `(indices, value)` pairs. Indices may come in any
    /// order; the value is attached to the sorted tuple with the
    /// permutation sign. Repeated entries accumulate.
    pub fn from_entries(dim: usize, degree: usize, entries: &[(Vec<usize>, Rational)]) -> Result<Self> {
        let mut f = Self::zero(dim, degree)?;
        for (idx, v) in entries {
            if idx.len() != degree {
                return Err(Error::DimensionMismatch { expected: degree, found: idx.len() });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= dim) {
                return Err(Error::DimensionMismatch { expected: dim, found: bad + 1 });
            }
            let mut sorted = idx.clone();
            match sort_with_sign(&mut sorted) {
                None if v.is_zero() => {}
                None => return Err(Error::NotAlternating),
                Some(odd) => {
                    let val = if odd { -v.clone() } else { v.clone() };
                    f.add_at(sorted, &val);
                }
            }
        }
        Ok(f)
    }

    pub fn from_covector(v: &[Rational]) -> Self {
        let coeffs = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i], c.clone()))
            .collect();
        Self { dim: v.len(), degree: 1, coeffs }
    }

    /// The 2-form with Gram matrix `m`, which must be antisymmetric.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        if !m.is_antisymmetric() {
            return Err(Error::NotAlternating);
        }
        let n = m.rows();
        let mut coeffs = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                if !m.get(i, j).is_zero() {
                    coeffs.insert(vec![i, j], m.get(i, j).clone());
                }
            }
        }
        Ok(Self { dim: n, degree: 2, coeffs })
    }

    fn add_at(&mut self, idx: Vec<usize>, v: &Rational) {
        let entry = self.coeffs.entry(idx.clone()).or_insert_with(Rational::zero);
        *entry += v;
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero coefficients on sorted index tuples.
    pub fn coefficients(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.coeffs
    }

    /// Value on basis vectors in the given (arbitrary) order.
    pub fn eval_basis(&self, idx: &[usize]) -> Rational {
        let mut sorted = idx.to_vec();
        match sort_with_sign(&mut sorted) {
            None => Rational::zero(),
            Some(odd) => {
                let v = self.coeffs.get(&sorted).cloned().unwrap_or_else(Rational::zero);
                if odd {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// Value on arbitrary vectors; `args.len()` must equal the degree.
    pub fn eval(&self, args: &[&[Rational]]) -> Rational {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let mut total = Rational::zero();
        for (idx, c) in &self.coeffs {
            // Alternating sum over permutations of the tuple.
            total += c * alternation(args, idx);
        }
        total
    }

    /// Gram matrix of a 2-form.
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.degree != 2 {
            return Err(Error::FormDegree(self.degree));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (idx, c) in &self.coeffs {
            m.set(idx[0], idx[1], c.clone());
            m.set(idx[1], idx[0], -c.clone());
        }
        Ok(m)
    }

    /// Whether `f(v_1, ..., v_k)` vanishes for all arguments from `basis`.
    pub fn vanishes_on(&self, basis: &[crate::linalg::Vector]) -> bool {
        let k = self.degree;
        let m = basis.len();
        let mut idx = vec![0usize; k];
        loop {
            if idx.windows(2).all(|w| w[0] < w[1]) {
                let args: Vec<&[Rational]> = idx.iter().map(|&i| basis[i].as_slice()).collect();
                if !self.eval(&args).is_zero() {
                    return false;
                }
            }
            let mut p = k;
            loop {
                if p == 0 {
                    return true;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < m {
                    break;
                }
                idx[p] = 0;
            }
        }
    }
}

/// `det` of the `k x k` matrix `(args[a][idx[b]])`, i.e. the value of the
/// decomposable form `e^{idx_1} ^ ... ^ e^{idx_k}` on `args`.
fn alternation(args: &[&[Rational]], idx: &[usize]) -> Rational {
    match idx.len() {
        1 => args[0][idx[0]].clone(),
        2 => &args[0][idx[0]] * &args[1][idx[1]] - &args[0][idx[1]] * &args[1][idx[0]],
        _ => {
            let a = |r: usize, c: usize| &args[r][idx[c]];
            a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
                + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
        }
    }
}

/// Chevalley–Eilenberg differential on 1- and 2-forms:
/// `df(X,Y) = -f([X,Y])` and
/// `dw(X,Y,Z) = -w([X,Y],Z) + w([X,Z],Y) - w([Y,Z],X)`.
pub fn ce_differential(g: &BracketTable, f: &KForm) -> Result<KForm> {
    let n = g.dim();
    if f.dim != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.dim });
    }
    match f.degree {
        1 => {
            let mut out = KForm::zero(n, 2)?;
            let cov: Vec<Rational> = (0..n).map(|i| f.eval_basis(&[i])).collect();
            for i in 0..n {
                for j in i + 1..n {
                    let v = -dot(&cov, &g.bracket_basis(i, j));
                    if !v.is_zero() {
                        out.coeffs.insert(vec![i, j], v);
                    }
                }
            }
            Ok(out)
        }
        2 => {
            let mut out = KForm::zero(n, 3)?;
            let w = f.to_matrix()?;
            // w(v, e_k) as a covector in v: column k of the Gram matrix.
            let w_with = |v: &[Rational], k: usize| dot(v, &w.column(k));
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        let v = -w_with(&g.bracket_basis(i, j), k) + w_with(&g.bracket_basis(i, k), j)
                            - w_with(&g.bracket_basis(j, k), i);
                        if !v.is_zero() {
                            out.coeffs.insert(vec![i, j, k], v);
                        }
                    }
                }
            }
            Ok(out)
        }
        d => Err(Error::FormDegree(d)),
    }
}

/// Dual integrability test for an almost-product structure: with
/// `A+ = ann(g_-)` and `A- = ann(g_+)`, `d(A+)` has no component on
/// `g_- x g_-` and `d(A-)` none on `g_+ x g_+`.
pub fn check_dual_product_integrability(g: &BracketTable, e: &AlmostProduct) -> Result<bool> {
    let n = g.dim();
    let m = e.matrix();
    if m.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.rows() });
    }
    let plus = crate::linalg::eigenspace(m, &Rational::one());
    let minus = crate::linalg::eigenspace(m, &-Rational::one());
    for (forms, domain) in [(minus.annihilator(), &minus), (plus.annihilator(), &plus)] {
        for f in forms.basis() {
            let df = ce_differential(g, &KForm::from_covector(&f))?;
            if !df.vanishes_on(&domain.basis()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A symmetric bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm(Matrix);

impl SymmetricForm {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.0.rank() == self.0.rows()
    }

    pub fn signature(&self) -> (usize, usize) {
        signature(&self.0)
    }
}

/// Inertia `(p, q)` of a symmetric matrix, by exact symmetric Gaussian
/// elimination. Zero directions are counted in neither.
pub fn signature(s: &Matrix) -> (usize, usize) {
    let n = s.rows();
    let mut a = s.clone();
    let (mut p, mut q) = (0, 0);
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a.get(i, i).is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => {
                // No diagonal pivot: add row/column j to row/column i where
                // a[i][j] != 0, which makes a[i][i] = 2 a[i][j].
                let Some((i, j)) = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| !a.get(i, j).is_zero())
                else {
                    break;
                };
                add_congruence(&mut a, i, j);
                i
            }
        };
        swap_congruence(&mut a, k, pivot);
        let d = a.get(k, k).clone();
        if d.is_positive() {
            p += 1;
        } else {
            q += 1;
        }
        for i in k + 1..n {
            let f = a.get(i, k) / &d;
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = a.get(i, c) - &f * a.get(k, c);
                a.set(i, c, v);
            }
            for r in 0..n {
                let v = a.get(r, i) - &f * a.get(r, k);
                a.set(r, i, v);
            }
        }
    }
    (p, q)
}

fn swap_congruence(a: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows();
    for c in 0..n {
        let t = a.get(i, c).clone();
        a.set(i, c, a.get(j, c).clone());
        a.set(j, c, t);
    }
    for r in 0..n {
        let t = a.get(r, i).clone();
        a.set(r, i, a.get(r, j).clone());
        a.set(r, j, t);
    }
}

fn add_congruence(a: &mut Matrix, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a.get(i, c) + a.get(j, c);
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.get(r, i) + a.get(r, j);
        a.set(r, i, v);
    }
}

/// Basis of the space of ad-invariant symmetric bilinear forms,
/// `B([x,y],z) + B(y,[x,z]) = 0`, found by a linear solve.
pub fn invariant_symmetric_forms(g: &BracketTable) -> Vec<Matrix> {
    let n = g.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let slot = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair");
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut row = vec![Rational::zero(); pairs.len()];
                let (xy, xz) = (g.bracket_basis(i, j), g.bracket_basis(i, k));
                for m in 0..n {
                    row[slot(m, k)] += &xy[m];
                    row[slot(j, m)] += &xz[m];
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let space = if rows.is_empty() {
        crate::linalg::Subspace::full(pairs.len())
    } else {
        crate::linalg::kernel(&Matrix::from_rows(rows).expect("rectangular"))
    };
    space
        .basis()
        .iter()
        .map(|v| {
            let mut m = Matrix::zeros(n, n);
            for (c, &(a, b)) in v.iter().zip(&pairs) {
                m.set(a, b, c.clone());
                m.set(b, a, c.clone());
            }
            m
        })
        .collect()
}

/// Outcome of one named check in a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

fn check(name: &'static str, passed: bool) -> Check {
    Check { name, passed }
}

fn invariant_under(m: &Matrix, t: &Matrix) -> bool {
    &(&t.transpose() * m) * t == *m
}

fn closed(g: &BracketTable, w: &Matrix) -> Result<bool> {
    match KForm::from_matrix(w) {
        Ok(f) => Ok(ce_differential(g, &f)?.is_zero()),
        Err(Error::NotAlternating) => Ok(false),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug)]
pub struct MetricSuite {
    /// `w(X, Y) = G(X, JY)`; present when that pairing is alternating.
    pub omega: Option<KForm>,
    pub checks: Vec<Check>,
}

/// Checks a candidate metric `G` against a complex product structure.
pub fn compatible_metric_suite(cps: &ComplexProductStructure, g: &SymmetricForm) -> Result<MetricSuite> {
    let n = cps.dim();
    let gm = g.matrix();
    if gm.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: gm.rows() });
    }
    let w = gm * cps.j();
    let omega = KForm::from_matrix(&w).ok();
    let is_closed = match &omega {
        Some(f) => ce_differential(cps.algebra(), f)?.is_zero(),
        None => false,
    };
    let checks = vec![
        check("J-INVARIANT", invariant_under(gm, cps.j())),
        check("E-INVARIANT", invariant_under(gm, cps.e())),
        check("OMEGA-ANTISYMMETRIC", omega.is_some()),
        check("OMEGA-CLOSED", is_closed),
    ];
    Ok(MetricSuite { omega, checks })
}

#[derive(Clone, Debug)]
pub struct HypersymplecticSuite {
    /// `h(X, Y) = w1(JX, Y)`.
    pub h: Matrix,
    /// `w2(X, Y) = h(X, EY)`.
    pub w2: Matrix,
    /// `w3(X, Y) = h(X, JEY)`.
    pub w3: Matrix,
    pub signature: (usize, usize),
    pub checks: Vec<Check>,
}

/// Builds `h`, `w2`, `w3` from a nondegenerate 2-form `w1` and reports the
/// hypersymplectic identities. `w1` is expected to satisfy
/// `w1(JX,JY) = w1(X,Y)` and `w1(EX,EY) = w1(X,Y)`; both are reported.
pub fn hypersymplectic_suite(cps: &ComplexProductStructure, w1: &KForm) -> Result<HypersymplecticSuite> {
    let n = cps.dim();
    if !n.is_multiple_of(4) {
        return Err(Error::NotDivisibleByFour(n));
    }
    if w1.degree() != 2 {
        return Err(Error::FormDegree(w1.degree()));
    }
    if w1.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: w1.dim() });
    }
    let w = w1.to_matrix()?;
    if w.rank() != n {
        return Err(Error::DegenerateForm);
    }
    let (j, e) = (cps.j(), cps.e());
    let h = &j.transpose() * &w;
    let w2 = &h * e;
    let w3 = &(&h * j) * e;
    let signature = signature(&h);
    let m = n / 4;
    let isotropic = |basis: &[crate::linalg::Vector], form: &Matrix| {
        basis.iter().all(|x| basis.iter().all(|y| dot(x, &form.apply(y)).is_zero()))
    };
    let (pb, mb) = (cps.plus_basis(), cps.minus_basis());
    let g = cps.algebra();
    let checks = vec![
        check("W1-J-INVARIANT", invariant_under(&w, j)),
        check("W1-E-INVARIANT", invariant_under(&w, e)),
        check("H-SYMMETRIC", h.is_symmetric()),
        check("H-E-ANTI-INVARIANT", &(&e.transpose() * &h) * e == -&h),
        check("PLUS-ISOTROPIC", isotropic(&pb, &h)),
        check("MINUS-ISOTROPIC", isotropic(&mb, &h)),
        check("PLUS-LAGRANGIAN-W2", isotropic(&pb, &w2)),
        check("MINUS-LAGRANGIAN-W2", isotropic(&mb, &w2)),
        check("SIGNATURE", signature == (2 * m, 2 * m)),
        check("W1-CLOSED", closed(g, &w)?),
        check("W2-CLOSED", closed(g, &w2)?),
        check("W3-CLOSED", closed(g, &w3)?),
    ];
    Ok(HypersymplecticSuite { h, w2, w3, signature, checks })
}
