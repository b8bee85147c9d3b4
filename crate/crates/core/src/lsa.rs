//! Left-symmetric algebras, matched pairs of Lie algebras and bicrossproducts.

use crate::error::{Error, Report, Result};
use crate::lie::{check_jacobi, parse_combination, subalgebra_in_basis, BracketTable, LieAlgebra};
use crate::linalg::{
    axpy, bilinear_eval, bilinear_in_basis, is_zero_vector, unit_vector, vec_add, vec_neg, vec_sub, zero_vector,
    Matrix, Rational, Tensor, Vector,
};
use crate::structures::{splitting_endomorphism, validate_cps, ComplexProductStructure};

/// A bilinear product `e_i . e_j = sum_k a[i][j][k] e_k` on a labelled vector
/// space. No laws are assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearProduct {
    labels: Vec<String>,
    a: Tensor,
}

impl BilinearProduct {
    pub fn new(labels: Vec<String>, a: Tensor) -> Result<Self> {
        let n = labels.len();
        if a.shape() != [n, n, n] {
            return Err(Error::DimensionMismatch { expected: n, found: a.shape().first().copied().unwrap_or(0) });
        }
        Ok(Self { labels, a })
    }

    pub fn zero(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self { labels, a: Tensor::zeros(&[n, n, n]) }
    }

    /// Products written with labels, e.g. `("X", "X", "X")`; unlisted are zero.
    pub fn from_relations(labels: &[&str], relations: &[(&str, &str, &str)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let mut p = Self::zero(labels);
        for (x, y, out) in relations {
            let i = p.index(x)?;
            let j = p.index(y)?;
            let v = parse_combination(&p.labels, out)?;
            p.a.set_fiber(&[i, j], &v);
        }
        Ok(p)
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tensor(&self) -> &Tensor {
        &self.a
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[Rational] {
        self.a.fiber(&[i, j])
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        bilinear_eval(&self.a, x, y)
    }

    /// Left multiplication `L_x` as a matrix.
    pub fn left(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &unit_vector(n, j))).collect();
        Matrix::from_columns(n, &cols).expect("square")
    }

    /// The commutator bracket `[x, y] = x.y - y.x` (not checked for Jacobi).
    pub fn commutator(&self, name: &str) -> BracketTable {
        let n = self.dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                entries.push((i, j, vec_sub(self.mul_basis(i, j), self.mul_basis(j, i))));
            }
        }
        BracketTable::new(name, self.labels.clone(), entries).expect("commutator is antisymmetric")
    }

    /// The same product in the basis given by the columns of `p`.
    pub fn in_basis(&self, p: &Matrix, labels: Vec<String>) -> Result<Self> {
        Self::new(labels, bilinear_in_basis(&self.a, p)?)
    }

    pub fn show(&self, v: &[Rational]) -> String {
        crate::linalg::format_combination(&self.labels, v)
    }
}

/// Checks `[x,y] = x.y - y.x` on basis pairs (`EQ-TFREE`) and
/// `x.(y.z) - (x.y).z = y.(x.z) - (y.x).z` on basis triples (`EQ-FLAT`).
pub fn check_lsa(base: &BracketTable, p: &BilinearProduct) -> Report {
    let n = base.dim();
    let mut report = Report::new();
    if p.dim() != n {
        report.push("EQ-TFREE", vec![], format!("product has dimension {}, algebra {n}", p.dim()));
        return report;
    }
    let label = |i: usize| base.labels()[i].clone();
    for i in 0..n {
        for j in i + 1..n {
            let r = vec_sub(&vec_sub(p.mul_basis(i, j), p.mul_basis(j, i)), &base.bracket_basis(i, j));
            if !is_zero_vector(&r) {
                report.push("EQ-TFREE", vec![label(i), label(j)], base.show(&r));
            }
        }
    }
    // the associator defect is antisymmetric in its first two slots
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let r = flat_defect(p, &unit_vector(n, i), &unit_vector(n, j), &unit_vector(n, k));
                if !is_zero_vector(&r) {
                    report.push("EQ-FLAT", vec![label(i), label(j), label(k)], base.show(&r));
                }
            }
        }
    }
    report
}

/// `x.(y.z) - (x.y).z - y.(x.z) + (y.x).z`
pub fn flat_defect(p: &BilinearProduct, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let assoc = |a: &[Rational], b: &[Rational]| vec_sub(&p.mul(a, &p.mul(b, z)), &p.mul(&p.mul(a, b), z));
    vec_sub(&assoc(x, y), &assoc(y, x))
}

/// `x.(y.z) - (x.y).z`
pub fn associator(p: &BilinearProduct, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    vec_sub(&p.mul(x, &p.mul(y, z)), &p.mul(&p.mul(x, y), z))
}

/// A left-symmetric product on a Lie algebra, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsaProduct {
    base: LieAlgebra,
    product: BilinearProduct,
}

impl LsaProduct {
    pub fn new(base: LieAlgebra, product: BilinearProduct) -> Result<Self> {
        let report = check_lsa(&base, &product);
        if !report.passed() {
            return Err(Error::NotLsa(report));
        }
        Ok(Self { base, product })
    }

    /// Builds the Lie algebra from the commutator; fails unless the product is
    /// left-symmetric.
    pub fn from_product(name: &str, product: BilinearProduct) -> Result<Self> {
        let table = product.commutator(name);
        let report = check_lsa(&table, &product);
        if !report.passed() {
            return Err(Error::NotLsa(report));
        }
        Ok(Self { base: LieAlgebra::new(table)?, product })
    }

    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    pub fn product(&self) -> &BilinearProduct {
        &self.product
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.product.mul(x, y)
    }
}

/// The LSA products `X.Y = -pi_+ J[X, JY]` on `plus` and `A.B = -pi_- J[A, JB]`
/// on `minus`, each in the canonical basis of its subspace.
pub fn induced_lsa(cps: &ComplexProductStructure) -> Result<(LsaProduct, LsaProduct)> {
    let g = cps.algebra();
    let j = cps.j();
    let k = cps.half();
    let side = |basis: Vec<Vector>, name: &str, coords: &dyn Fn(&[Rational]) -> Vector| -> Result<LsaProduct> {
        let sub = subalgebra_in_basis(g, &basis, name)?;
        let mut t = Tensor::zeros(&[k, k, k]);
        for a in 0..k {
            for b in 0..k {
                let v = j.apply(&g.bracket(&basis[a], &j.apply(&basis[b])));
                t.set_fiber(&[a, b], &vec_neg(&coords(&v)));
            }
        }
        let product = BilinearProduct::new(sub.labels().to_vec(), t)?;
        LsaProduct::new(sub, product)
    };
    let plus = side(cps.plus_basis(), &format!("{}+", g.name()), &|v| cps.plus_coords(v))?;
    let minus = side(cps.minus_basis(), &format!("{}-", g.name()), &|v| cps.minus_coords(v))?;
    Ok((plus, minus))
}

/// Two Lie algebras with cross representations `rho: u -> gl(v)` and
/// `mu: v -> gl(u)`, one matrix per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    u: LieAlgebra,
    v: LieAlgebra,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
}

fn combine(ms: &[Matrix], x: &[Rational], size: usize) -> Matrix {
    let mut out = Matrix::zeros(size, size);
    for (m, c) in ms.iter().zip(x) {
        if !num::Zero::is_zero(c) {
            out = &out + &m.scale(c);
        }
    }
    out
}

/// Checks the representation laws and both compatibility laws of a matched
/// pair, returning every violation.
pub fn check_matched_pair(u: &BracketTable, v: &BracketTable, rho: &[Matrix], mu: &[Matrix]) -> Report {
    let (p, m) = (u.dim(), v.dim());
    let mut report = Report::new();
    if rho.len() != p || mu.len() != m {
        report.push("REP-RHO", vec![], "wrong number of representation matrices".into());
        return report;
    }
    let rho_of = |x: &[Rational]| combine(rho, x, m);
    let mu_of = |a: &[Rational]| combine(mu, a, p);
    let ul = |i: usize| u.labels()[i].clone();
    let vl = |i: usize| v.labels()[i].clone();
    for a in 0..p {
        for b in a + 1..p {
            let lhs = rho_of(&u.bracket_basis(a, b));
            let rhs = &(&rho[a] * &rho[b]) - &(&rho[b] * &rho[a]);
            if lhs != rhs {
                report.push("REP-RHO", vec![ul(a), ul(b)], "rho is not a representation".into());
            }
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            let lhs = mu_of(&v.bracket_basis(a, b));
            let rhs = &(&mu[a] * &mu[b]) - &(&mu[b] * &mu[a]);
            if lhs != rhs {
                report.push("REP-MU", vec![vl(a), vl(b)], "mu is not a representation".into());
            }
        }
    }
    // both laws are antisymmetric in their last two arguments
    for x in 0..p {
        for a in 0..m {
            for b in a + 1..m {
                let (ea, eb) = (unit_vector(m, a), unit_vector(m, b));
                let mut r = rho[x].apply(&v.bracket_basis(a, b));
                r = vec_sub(&r, &v.bracket(&rho[x].column(a), &eb));
                r = vec_sub(&r, &v.bracket(&ea, &rho[x].column(b)));
                r = vec_add(&r, &rho_of(&mu[a].column(x)).column(b));
                r = vec_sub(&r, &rho_of(&mu[b].column(x)).column(a));
                if !is_zero_vector(&r) {
                    report.push("JACOBI1", vec![ul(x), vl(a), vl(b)], v.show(&r));
                }
            }
        }
    }
    for a in 0..m {
        for x in 0..p {
            for y in x + 1..p {
                let (ex, ey) = (unit_vector(p, x), unit_vector(p, y));
                let mut r = mu[a].apply(&u.bracket_basis(x, y));
                r = vec_sub(&r, &u.bracket(&mu[a].column(x), &ey));
                r = vec_sub(&r, &u.bracket(&ex, &mu[a].column(y)));
                r = vec_add(&r, &mu_of(&rho[x].column(a)).column(y));
                r = vec_sub(&r, &mu_of(&rho[y].column(a)).column(x));
                if !is_zero_vector(&r) {
                    report.push("JACOBI2", vec![vl(a), ul(x), ul(y)], u.show(&r));
                }
            }
        }
    }
    report
}

impl MatchedPair {
    pub fn new(u: LieAlgebra, v: LieAlgebra, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Result<Self> {
        let shapes_ok = rho.iter().all(|r| r.rows() == v.dim() && r.cols() == v.dim())
            && mu.iter().all(|r| r.rows() == u.dim() && r.cols() == u.dim());
        if !shapes_ok {
            return Err(Error::DimensionMismatch { expected: v.dim(), found: rho.first().map_or(0, Matrix::rows) });
        }
        let report = check_matched_pair(&u, &v, &rho, &mu);
        if !report.passed() {
            return Err(Error::MatchedPair(report));
        }
        Ok(Self { u, v, rho, mu })
    }

    pub fn u(&self) -> &LieAlgebra {
        &self.u
    }

    pub fn v(&self) -> &LieAlgebra {
        &self.v
    }

    /// `rho(e_i)` for each basis vector of `u`.
    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    /// `mu(f_i)` for each basis vector of `v`.
    pub fn mu(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn rho_of(&self, x: &[Rational]) -> Matrix {
        combine(&self.rho, x, self.v.dim())
    }

    pub fn mu_of(&self, a: &[Rational]) -> Matrix {
        combine(&self.mu, a, self.u.dim())
    }
}

/// Splits the mixed bracket `[X, A] = -mu(A) X + rho(X) A` of a complex
/// product structure, in the canonical bases of `plus` and `minus`.
pub fn matched_pair_from_cps(cps: &ComplexProductStructure) -> Result<MatchedPair> {
    let g = cps.algebra();
    let k = cps.half();
    let pb = cps.plus_basis();
    let mb = cps.minus_basis();
    let u = subalgebra_in_basis(g, &pb, &format!("{}+", g.name()))?;
    let v = subalgebra_in_basis(g, &mb, &format!("{}-", g.name()))?;
    let mut rho = vec![Matrix::zeros(k, k); k];
    let mut mu = vec![Matrix::zeros(k, k); k];
    for x in 0..k {
        for a in 0..k {
            let br = g.bracket(&pb[x], &mb[a]);
            let (pc, mc) = (cps.plus_coords(&br), cps.minus_coords(&br));
            for r in 0..k {
                rho[x].set(r, a, mc[r].clone());
                mu[a].set(r, x, -pc[r].clone());
            }
        }
    }
    MatchedPair::new(u, v, rho, mu)
}

/// `[(X,A),(Y,B)] = ([X,Y] + mu(A)Y - mu(B)X, [A,B] + rho(X)B - rho(Y)A)`
pub fn bicrossproduct(mp: &MatchedPair) -> Result<LieAlgebra> {
    let (p, m) = (mp.u.dim(), mp.v.dim());
    let n = p + m;
    let mut labels = mp.u.labels().to_vec();
    for l in mp.v.labels() {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let split = |w: &[Rational]| (w[..p].to_vec(), w[p..].to_vec());
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (x, a) = split(&unit_vector(n, i));
            let (y, b) = split(&unit_vector(n, j));
            let mut first = mp.u.bracket(&x, &y);
            first = vec_add(&first, &mp.mu_of(&a).apply(&y));
            first = vec_sub(&first, &mp.mu_of(&b).apply(&x));
            let mut second = mp.v.bracket(&a, &b);
            second = vec_add(&second, &mp.rho_of(&x).apply(&b));
            second = vec_sub(&second, &mp.rho_of(&y).apply(&a));
            first.extend(second);
            entries.push((i, j, first));
        }
    }
    let name = format!("{}|x|{}", mp.u.name(), mp.v.name());
    LieAlgebra::new(BracketTable::new(name, labels, entries)?)
}

/// `aff(A)`: the bracket `[(a,b),(a',b')] = (aa' - a'a, ab' - a'b)` on
/// `A + A`, with `J(a,b) = (-b,a)` and `E = Id + (-Id)`.
///
/// Fails with the Jacobi witness unless `A` is left-symmetric.
pub fn aff_construction(p: &BilinearProduct, name: &str) -> Result<(LieAlgebra, ComplexProductStructure)> {
    let table = aff_bracket(p, name);
    let report = check_jacobi(&table);
    if !report.passed() {
        return Err(Error::Jacobi(report));
    }
    let g = LieAlgebra::new(table)?;
    let n = p.dim();
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        j.set(n + k, k, crate::linalg::q(1));
        j.set(k, n + k, crate::linalg::q(-1));
    }
    let plus: Vec<Vector> = (0..n).map(|k| unit_vector(2 * n, k)).collect();
    let minus: Vec<Vector> = (n..2 * n).map(|k| unit_vector(2 * n, k)).collect();
    let e = splitting_endomorphism(&plus, &minus);
    let cps = validate_cps(&g, &j, &e)?;
    Ok((g, cps))
}

/// The raw `aff` bracket table on `A + A`; labels `a` and `Ja`.
pub fn aff_bracket(p: &BilinearProduct, name: &str) -> BracketTable {
    let n = p.dim();
    let mut labels = p.labels().to_vec();
    labels.extend(p.labels().iter().map(|l| format!("J{l}")));
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // [(e_i,0),(e_j,0)] = (e_i e_j - e_j e_i, 0)
            if i < j {
                let mut v = vec_sub(p.mul_basis(i, j), p.mul_basis(j, i));
                v.extend(zero_vector(n));
                entries.push((i, j, v));
            }
            // [(e_i,0),(0,e_j)] = (0, e_i e_j)
            let mut v = zero_vector(n);
            v.extend(p.mul_basis(i, j).iter().cloned());
            entries.push((i, n + j, v));
        }
    }
    BracketTable::new(name, labels, entries).expect("aff bracket is antisymmetric")
}

/// Result of building a complex product structure from two LSAs.
#[derive(Clone, Debug)]
pub struct LsaPairConstruction {
    pub pair: MatchedPair,
    pub algebra: LieAlgebra,
    pub cps: ComplexProductStructure,
}

/// `rho(X)A = phi(X . phi^-1 A)`, `mu(A)X = phi^-1(A . phi X)` on `u + v`
/// with `J(X,A) = (-phi^-1 A, phi X)` and `E = Id + (-Id)`.
pub fn matched_pair_from_lsa_pair(u: &LsaProduct, v: &LsaProduct, phi: &Matrix) -> Result<LsaPairConstruction> {
    let n = u.dim();
    if v.dim() != n || phi.rows() != n || phi.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
    }
    let phi_inv = phi.try_inverse()?;
    let rho: Vec<Matrix> = (0..n)
        .map(|x| {
            let lx = u.product().left(&unit_vector(n, x));
            &(phi * &lx) * &phi_inv
        })
        .collect();
    let mu: Vec<Matrix> = (0..n)
        .map(|a| {
            let la = v.product().left(&unit_vector(n, a));
            &(&phi_inv * &la) * phi
        })
        .collect();
    let pair = MatchedPair::new(u.base().clone(), v.base().clone(), rho, mu)?;
    let algebra = bicrossproduct(&pair)?;
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            j.set(n + r, c, phi.get(r, c).clone());
            j.set(r, n + c, -phi_inv.get(r, c).clone());
        }
    }
    let plus: Vec<Vector> = (0..n).map(|k| unit_vector(2 * n, k)).collect();
    let minus: Vec<Vector> = (n..2 * n).map(|k| unit_vector(2 * n, k)).collect();
    let e = splitting_endomorphism(&plus, &minus);
    let cps = validate_cps(&algebra, &j, &e)?;
    Ok(LsaPairConstruction { pair, algebra, cps })
}

/// `(X+A).(Y+B) = X.Y + rho(X)B + mu(A)Y + A.B` in the adapted frame
/// (plus basis, then minus basis).
pub fn extended_product_adapted(cps: &ComplexProductStructure) -> Result<BilinearProduct> {
    let (lp, lm) = induced_lsa(cps)?;
    let mp = matched_pair_from_cps(cps)?;
    let k = cps.half();
    let n = 2 * k;
    let mut t = Tensor::zeros(&[n, n, n]);
    for a in 0..k {
        for b in 0..k {
            let mut v = lp.product().mul_basis(a, b).to_vec();
            v.extend(zero_vector(k));
            t.set_fiber(&[a, b], &v);
            let mut v = zero_vector(k);
            v.extend(mp.rho[a].column(b));
            t.set_fiber(&[a, k + b], &v);
            let mut v = mp.mu[a].column(b);
            v.extend(zero_vector(k));
            t.set_fiber(&[k + a, b], &v);
            let mut v = zero_vector(k);
            v.extend(lm.product().mul_basis(a, b).iter().cloned());
            t.set_fiber(&[k + a, k + b], &v);
        }
    }
    let labels = cps.frame().column_vectors().iter().map(|v| cps.algebra().show(v)).collect();
    BilinearProduct::new(labels, t)
}

/// The extended product in the original basis of `g`.
pub fn extended_product(cps: &ComplexProductStructure) -> Result<BilinearProduct> {
    let adapted = extended_product_adapted(cps)?;
    adapted.in_basis(cps.frame_inverse(), cps.algebra().labels().to_vec())
}

/// The tensors `Phi(X)(A,B)` (shape `[k,k,k,k]`, values in minus coordinates)
/// and `Psi(A)(X,Y)` (values in plus coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub phi: Tensor,
    pub psi: Tensor,
}

impl Obstruction {
    /// Whether the extended product is left-symmetric on all of `g`.
    pub fn extends(&self) -> bool {
        self.phi.is_zero() && self.psi.is_zero()
    }
}

pub fn phi_psi_obstruction(cps: &ComplexProductStructure) -> Result<Obstruction> {
    let (lp, lm) = induced_lsa(cps)?;
    let mp = matched_pair_from_cps(cps)?;
    let k = cps.half();
    let mut phi = Tensor::zeros(&[k, k, k, k]);
    let mut psi = Tensor::zeros(&[k, k, k, k]);
    for x in 0..k {
        let rx = &mp.rho[x];
        for a in 0..k {
            for b in 0..k {
                let (ea, eb) = (unit_vector(k, a), unit_vector(k, b));
                // rho(X)(A.B) - (rho(X)A).B - A.(rho(X)B) + rho(mu(A)X)B
                let mut r = rx.apply(lm.product().mul_basis(a, b));
                r = vec_sub(&r, &lm.mul(&rx.column(a), &eb));
                r = vec_sub(&r, &lm.mul(&ea, &rx.column(b)));
                axpy(&mut r, &crate::linalg::q(1), &mp.rho_of(&mp.mu[a].column(x)).column(b));
                phi.set_fiber(&[x, a, b], &r);
            }
        }
    }
    for a in 0..k {
        let ma = &mp.mu[a];
        for x in 0..k {
            for y in 0..k {
                let (ex, ey) = (unit_vector(k, x), unit_vector(k, y));
                // mu(A)(X.Y) - (mu(A)X).Y - X.(mu(A)Y) + mu(rho(X)A)Y
                let mut r = ma.apply(lp.product().mul_basis(x, y));
                r = vec_sub(&r, &lp.mul(&ma.column(x), &ey));
                r = vec_sub(&r, &lp.mul(&ex, &ma.column(y)));
                axpy(&mut r, &crate::linalg::q(1), &mp.mu_of(&mp.rho[x].column(a)).column(y));
                psi.set_fiber(&[a, x, y], &r);
            }
        }
    }
    Ok(Obstruction { phi, psi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, Subspace};
    use crate::structures::cps_from_subalgebra_pair;

    fn aff() -> LieAlgebra {
        LieAlgebra::from_relations("aff(R)", &["X", "Y"], &[("X", "Y", "Y")]).unwrap()
    }

    fn aff_cps() -> ComplexProductStructure {
        validate_cps(&aff(), &Matrix::from_i64(&[&[0, -1], &[1, 0]]), &Matrix::from_i64(&[&[1, 0], &[0, -1]])).unwrap()
    }

    fn a2_cps() -> ComplexProductStructure {
        let g = LieAlgebra::from_relations(
            "A2",
            &["A", "B", "C", "D"],
            &[("A", "B", "B"), ("A", "C", "-C"), ("A", "D", "-D")],
        )
        .unwrap();
        let lab = |s: &str| parse_combination(g.labels(), s).unwrap();
        // J(A-D) = B+C, J(C) = D
        let frame = Matrix::from_columns(4, &[lab("A-D"), lab("C"), lab("B+C"), lab("D")]).unwrap();
        let ja = Matrix::from_i64(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let j = &(&frame * &ja) * &frame.try_inverse().unwrap();
        let plus = Subspace::span(4, &[lab("A-D"), lab("C")]);
        cps_from_subalgebra_pair(&g, &j, &plus).unwrap()
    }

    #[test]
    fn lsa_laws() {
        let abel = LieAlgebra::abelian("R", vec!["X".into()]);
        assert!(check_lsa(&abel, &BilinearProduct::zero(vec!["X".into()])).passed());
        let p = BilinearProduct::from_relations(&["X"], &[("X", "X", "X")]).unwrap();
        assert!(check_lsa(&abel, &p).passed());
        let bad = BilinearProduct::from_relations(&["e1", "e2"], &[("e1", "e2", "e1"), ("e1", "e1", "e2")]).unwrap();
        let r = check_lsa(&bad.commutator("c"), &bad);
        assert!(r.violations.iter().all(|v| v.law == "EQ-FLAT"));
        assert!(!r.passed());
    }

    #[test]
    fn aff_induced_lsa() {
        let (lp, lm) = induced_lsa(&aff_cps()).unwrap();
        assert_eq!(lp.product().mul_basis(0, 0), &[q(1)]);
        assert_eq!(lm.product().mul_basis(0, 0), &[q(0)]);
    }

    #[test]
    fn aff_matched_pair() {
        let mp = matched_pair_from_cps(&aff_cps()).unwrap();
        assert_eq!(mp.rho()[0], Matrix::from_i64(&[&[1]]));
        assert_eq!(mp.mu()[0], Matrix::from_i64(&[&[0]]));
        assert!(bicrossproduct(&mp).unwrap().same_constants(&aff()));
    }

    #[test]
    fn extended_product_on_aff() {
        let p = extended_product(&aff_cps()).unwrap();
        assert_eq!(p.mul_basis(0, 0), &[q(1), q(0)]);
        assert_eq!(p.mul_basis(0, 1), &[q(0), q(1)]);
        assert_eq!(p.mul_basis(1, 0), &[q(0), q(0)]);
        assert_eq!(p.mul_basis(1, 1), &[q(0), q(0)]);
        assert!(phi_psi_obstruction(&aff_cps()).unwrap().extends());
    }

    #[test]
    fn a2_l_table() {
        let cps = a2_cps();
        let p = extended_product(&cps).unwrap();
        let g = cps.algebra();
        let lab = |s: &str| parse_combination(g.labels(), s).unwrap();
        let l = |x: &str, y: &str| g.show(&p.mul(&lab(x), &lab(y)));
        assert_eq!(l("A-D", "A-D"), "A-D");
        assert_eq!(l("B+C", "A-D"), "2C");
        assert_eq!(l("A-D", "C"), "-C");
        for y in ["A-D", "C", "B+C", "D"] {
            assert_eq!(l("C", y), "0");
            assert_eq!(l("D", y), "0");
        }
        assert_eq!(g.show(&associator(&p, &lab("A-D"), &lab("B+C"), &lab("A-D"))), "-4C");
        assert_eq!(g.show(&associator(&p, &lab("B+C"), &lab("A-D"), &lab("A-D"))), "2C");
        assert!(!phi_psi_obstruction(&cps).unwrap().extends());
        let r = check_lsa(g, &p);
        assert!(r.violations.iter().all(|v| v.law == "EQ-FLAT") && !r.passed());
    }

    #[test]
    fn aff_construction_cases() {
        let zero = BilinearProduct::zero(vec!["X".into()]);
        let (g, _) = aff_construction(&zero, "aff0").unwrap();
        assert!(g.is_abelian());
        let unit = BilinearProduct::from_relations(&["X"], &[("X", "X", "X")]).unwrap();
        let (g, cps) = aff_construction(&unit, "affR").unwrap();
        assert_eq!(g.bracket_basis(0, 1), vec![q(0), q(1)]);
        assert!(crate::lie::is_ideal(&g, cps.minus()));
        let bad = BilinearProduct::from_relations(&["e1", "e2"], &[("e1", "e2", "e1"), ("e1", "e1", "e2")]).unwrap();
        assert!(matches!(aff_construction(&bad, "bad"), Err(Error::Jacobi(_))));
    }

    #[test]
    fn lsa_pair_construction() {
        let unit = LsaProduct::from_product("u", BilinearProduct::from_relations(&["X"], &[("X", "X", "X")]).unwrap()).unwrap();
        let triv = LsaProduct::from_product("v", BilinearProduct::zero(vec!["A".into()])).unwrap();
        let built = matched_pair_from_lsa_pair(&unit, &triv, &Matrix::identity(1)).unwrap();
        assert!(built.algebra.same_constants(&aff()));
        assert_eq!(built.cps.j(), aff_cps().j());
        // R^1 with the same LSA on both sides and phi = Id
        let both = matched_pair_from_lsa_pair(&unit, &unit, &Matrix::identity(1)).unwrap();
        assert!(!both.algebra.is_abelian());
    }

    #[test]
    fn broken_matched_pair_is_named() {
        let u = LieAlgebra::abelian("u", vec!["X".into(), "Y".into()]);
        let v = LieAlgebra::abelian("v", vec!["A".into(), "B".into()]);
        // rho(X), rho(Y) do not commute
        let rho = vec![Matrix::from_i64(&[&[0, 1], &[0, 0]]), Matrix::from_i64(&[&[0, 0], &[1, 0]])];
        let mu = vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2)];
        let err = MatchedPair::new(u, v, rho, mu).unwrap_err();
        assert_eq!(err.code(), "REP-RHO");
    }
}
