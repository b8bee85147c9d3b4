//! Almost complex and almost product endomorphisms, their integrability, and
//! validated complex product structures.

use crate::error::{Error, Report, Result};
use crate::lie::{is_homomorphism, is_subalgebra, matrix_endomorphism, matrix_lie_algebra, BracketTable, LieAlgebra};
use crate::linalg::{
    eigenspace, is_zero_vector, q, unit_vector, vec_add, vec_sub, CirclePoint, Matrix,
    Rational, Subspace, Vector,
};

fn square_of_dim(m: &Matrix, n: usize) -> Result<()> {
    if !m.is_square() || m.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.rows().max(m.cols()) });
    }
    Ok(())
}

/// An endomorphism with `J^2 = -Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplex(Matrix);

impl AlmostComplex {
    pub fn new(j: Matrix) -> Result<Self> {
        if !j.is_square() {
            return Err(Error::DimensionMismatch { expected: j.rows(), found: j.cols() });
        }
        if !(-&(&j * &j)).is_identity() {
            return Err(Error::NotAlmostComplex);
        }
        Ok(Self(j))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

/// An endomorphism with `E^2 = Id`, `E != +-Id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostProduct(Matrix);

impl AlmostProduct {
    pub fn new(e: Matrix) -> Result<Self> {
        if !e.is_square() {
            return Err(Error::DimensionMismatch { expected: e.rows(), found: e.cols() });
        }
        if !(&e * &e).is_identity() {
            return Err(Error::NotAlmostProduct);
        }
        if e.is_identity() || (-&e).is_identity() {
            return Err(Error::TrivialProduct);
        }
        Ok(Self(e))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }
}

fn pair_labels(g: &BracketTable, i: usize, j: usize) -> Vec<String> {
    vec![g.labels()[i].clone(), g.labels()[j].clone()]
}

/// `J[X,Y] = [JX,Y] + [X,JY] + J[JX,JY]` on all basis pairs.
pub fn check_complex_integrable(g: &BracketTable, j: &Matrix) -> Report {
    integrability(g, j, q(1), "EQ1")
}

/// `E[X,Y] = [EX,Y] + [X,EY] - E[EX,EY]` on all basis pairs.
pub fn check_product_integrable(g: &BracketTable, e: &Matrix) -> Report {
    integrability(g, e, q(-1), "EQ4")
}

fn integrability(g: &BracketTable, t: &Matrix, sign: Rational, law: &'static str) -> Report {
    let n = g.dim();
    let images = t.column_vectors();
    let mut report = Report::new();
    for a in 0..n {
        for b in a + 1..n {
            let lhs = t.apply(&g.bracket_basis(a, b));
            let mut rhs = vec_add(&g.bracket(&images[a], &unit_vector(n, b)), &g.bracket_with_basis(a, &images[b]));
            let last = t.apply(&g.bracket(&images[a], &images[b]));
            crate::linalg::axpy(&mut rhs, &sign, &last);
            let residual = vec_sub(&lhs, &rhs);
            if !is_zero_vector(&residual) {
                report.push(law, pair_labels(g, a, b), g.show(&residual));
            }
        }
    }
    report
}

/// `[IX,Y] = I[X,Y]` for all basis pairs, i.e. `ad x` commutes with `I`.
pub fn check_bicomplex_condition(g: &BracketTable, i: &Matrix) -> bool {
    (0..g.dim()).all(|x| g.ad(&unit_vector(g.dim(), x)).commutes_with(i))
}

/// `[JX,JY] = [X,Y]` on all basis pairs.
pub fn is_abelian_cs(g: &BracketTable, j: &Matrix) -> bool {
    let images = j.column_vectors();
    (0..g.dim()).all(|a| (a + 1..g.dim()).all(|b| g.bracket(&images[a], &images[b]) == g.bracket_basis(a, b)))
}

/// A validated complex product structure `{J, E}` on a Lie algebra together
/// with its eigenspace splitting.
///
/// The adapted frame lists the canonical basis of `plus` followed by the
/// canonical basis of `minus`; products and representations elsewhere in the
/// crate are expressed in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexProductStructure {
    g: LieAlgebra,
    j: Matrix,
    e: Matrix,
    plus: Subspace,
    minus: Subspace,
    frame: Matrix,
    frame_inv: Matrix,
}

pub fn validate_cps(g: &LieAlgebra, j: &Matrix, e: &Matrix) -> Result<ComplexProductStructure> {
    let n = g.dim();
    square_of_dim(j, n)?;
    square_of_dim(e, n)?;
    AlmostComplex::new(j.clone())?;
    AlmostProduct::new(e.clone())?;
    if !j.anticommutes_with(e) {
        return Err(Error::NotAnticommuting);
    }
    let r = check_complex_integrable(g, j);
    if !r.passed() {
        return Err(Error::ComplexNotIntegrable(r));
    }
    let r = check_product_integrable(g, e);
    if !r.passed() {
        return Err(Error::ProductNotIntegrable(r));
    }
    let plus = eigenspace(e, &q(1));
    let minus = eigenspace(e, &q(-1));
    if plus.dim() * 2 != n || minus.dim() * 2 != n {
        return Err(Error::EigenDimension { plus: plus.dim(), minus: minus.dim(), expected: n / 2 });
    }
    if plus.image(j) != minus {
        return Err(Error::MinusNotJPlus);
    }
    let mut cols = plus.basis();
    cols.extend(minus.basis());
    let frame = Matrix::from_columns(n, &cols)?;
    let frame_inv = frame.try_inverse()?;
    Ok(ComplexProductStructure { g: g.clone(), j: j.clone(), e: e.clone(), plus, minus, frame, frame_inv })
}

impl ComplexProductStructure {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn j(&self) -> &Matrix {
        &self.j
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    /// `F = JE`
    pub fn f(&self) -> Matrix {
        &self.j * &self.e
    }

    pub fn plus(&self) -> &Subspace {
        &self.plus
    }

    pub fn minus(&self) -> &Subspace {
        &self.minus
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// Half the dimension: `dim plus = dim minus`.
    pub fn half(&self) -> usize {
        self.g.dim() / 2
    }

    /// Columns are the adapted basis (plus basis, then minus basis).
    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    pub fn frame_inverse(&self) -> &Matrix {
        &self.frame_inv
    }

    pub fn plus_basis(&self) -> Vec<Vector> {
        self.plus.basis()
    }

    pub fn minus_basis(&self) -> Vec<Vector> {
        self.minus.basis()
    }

    /// Coordinates in the adapted frame.
    pub fn to_adapted(&self, v: &[Rational]) -> Vector {
        self.frame_inv.apply(v)
    }

    pub fn from_adapted(&self, v: &[Rational]) -> Vector {
        self.frame.apply(v)
    }

    /// Plus-basis coordinates of the `plus` component of `v`.
    pub fn plus_coords(&self, v: &[Rational]) -> Vector {
        self.to_adapted(v)[..self.half()].to_vec()
    }

    /// Minus-basis coordinates of the `minus` component of `v`.
    pub fn minus_coords(&self, v: &[Rational]) -> Vector {
        self.to_adapted(v)[self.half()..].to_vec()
    }

    /// An endomorphism written in the adapted frame.
    pub fn in_adapted(&self, m: &Matrix) -> Matrix {
        &(&self.frame_inv * m) * &self.frame
    }

    /// The structure constants of `g` in the adapted frame.
    pub fn adapted_algebra(&self) -> LieAlgebra {
        let labels = self.frame.column_vectors().iter().map(|v| self.g.show(v)).collect();
        crate::lie::apply_change_of_basis(&self.g, &self.frame, Some(labels)).expect("frame is invertible")
    }
}

/// Builds `E` from `plus` and `J(plus)`; every failed precondition is listed.
pub fn cps_from_subalgebra_pair(g: &LieAlgebra, j: &Matrix, plus: &Subspace) -> Result<ComplexProductStructure> {
    let n = g.dim();
    square_of_dim(j, n)?;
    if plus.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: plus.ambient_dim() });
    }
    AlmostComplex::new(j.clone())?;
    let minus = plus.image(j);
    let mut failures = Vec::new();
    if !is_subalgebra(g, plus) {
        failures.push("plus is not a subalgebra".to_string());
    }
    if !is_subalgebra(g, &minus) {
        failures.push("J(plus) is not a subalgebra".to_string());
    }
    if plus.intersect(&minus)?.dim() != 0 {
        failures.push("plus and J(plus) intersect nontrivially".to_string());
    }
    if plus.sum(&minus)?.dim() != n {
        failures.push("plus and J(plus) do not span g".to_string());
    }
    if !failures.is_empty() {
        return Err(Error::Preconditions(failures));
    }
    let e = splitting_endomorphism(&plus.basis(), &minus.basis());
    validate_cps(g, j, &e)
}

/// The endomorphism that is `Id` on `plus` and `-Id` on `minus`.
pub fn splitting_endomorphism(plus: &[Vector], minus: &[Vector]) -> Matrix {
    let n = plus.len() + minus.len();
    let mut cols = plus.to_vec();
    cols.extend(minus.iter().cloned());
    let p = Matrix::from_columns(n, &cols).expect("square frame");
    let mut d = Matrix::identity(n);
    for k in plus.len()..n {
        d.set(k, k, q(-1));
    }
    &(&p * &d) * &p.try_inverse().expect("complementary subspaces")
}

/// Complex product structure of a double Lie algebra from an isomorphism
/// `phi: plus -> minus` given in the canonical bases of `plus` and `minus`.
pub fn cps_from_phi(g: &LieAlgebra, plus: &Subspace, minus: &Subspace, phi: &Matrix) -> Result<ComplexProductStructure> {
    let n = g.dim();
    let k = plus.dim();
    let mut failures = Vec::new();
    if plus.ambient_dim() != n || minus.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: plus.ambient_dim() });
    }
    if minus.dim() != k {
        failures.push(format!("plus has dimension {k} but minus has dimension {}", minus.dim()));
    }
    if !is_subalgebra(g, plus) {
        failures.push("plus is not a subalgebra".to_string());
    }
    if !is_subalgebra(g, minus) {
        failures.push("minus is not a subalgebra".to_string());
    }
    if plus.sum(minus)?.dim() != n || plus.dim() + minus.dim() != n {
        failures.push("plus and minus are not complementary".to_string());
    }
    if phi.rows() != k || phi.cols() != k {
        failures.push(format!("phi must be {k} x {k}"));
    } else if phi.inverse().is_none() {
        failures.push("phi is not invertible".to_string());
    }
    if !failures.is_empty() {
        return Err(Error::Preconditions(failures));
    }
    let pb = plus.basis();
    let mb = minus.basis();
    let mut cols = pb.clone();
    cols.extend(mb.iter().cloned());
    let frame = Matrix::from_columns(n, &cols)?;
    // J in the adapted frame: [[0, -phi^-1], [phi, 0]]
    let phi_inv = phi.try_inverse()?;
    let mut ja = Matrix::zeros(n, n);
    for r in 0..k {
        for c in 0..k {
            ja.set(k + r, c, phi.get(r, c).clone());
            ja.set(r, k + c, -phi_inv.get(r, c).clone());
        }
    }
    // J is phi on plus and -phi^-1 on minus
    let j = &(&frame * &ja) * &frame.try_inverse()?;
    let mut report = Report::new();
    for a in 0..k {
        for b in a + 1..k {
            let (x, y) = (&pb[a], &pb[b]);
            let (px, py) = (j.apply(x), j.apply(y));
            let lhs = vec_sub(&j.apply(&g.bracket(x, y)), &j.apply(&g.bracket(&px, &py)));
            let rhs = vec_add(&g.bracket(&px, y), &g.bracket(x, &py));
            let residual = vec_sub(&lhs, &rhs);
            if !is_zero_vector(&residual) {
                report.push("EQ-FI", vec![g.show(x), g.show(y)], g.show(&residual));
            }
        }
    }
    if !report.passed() {
        return Err(Error::PhiCondition(report));
    }
    let e = splitting_endomorphism(&pb, &mb);
    validate_cps(g, &j, &e)
}

/// `E_theta = cos(theta) E + sin(theta) JE` and its `+1` eigenspace.
pub fn pencil(cps: &ComplexProductStructure, p: &CirclePoint) -> (AlmostProduct, Subspace) {
    let e = &cps.e().scale(p.cos()) + &cps.f().scale(p.sin());
    let plus = eigenspace(&e, &q(1));
    (AlmostProduct::new(e).expect("pencil member is an almost product structure"), plus)
}

/// The pencil member as a complex product structure with the same `J`.
pub fn pencil_cps(cps: &ComplexProductStructure, p: &CirclePoint) -> Result<ComplexProductStructure> {
    let (e, _) = pencil(cps, p);
    validate_cps(cps.algebra(), cps.j(), e.matrix())
}

/// Whether `phi` is a Lie algebra isomorphism with `phi J = J' phi` and
/// `phi E = E' phi`.
pub fn check_equivalence(a: &ComplexProductStructure, b: &ComplexProductStructure, phi: &Matrix) -> bool {
    let n = a.dim();
    if b.dim() != n || phi.rows() != n || phi.cols() != n || phi.inverse().is_none() {
        return false;
    }
    is_homomorphism(a.algebra(), b.algebra(), phi)
        && phi * a.j() == b.j() * phi
        && phi * a.e() == b.e() * phi
}

/// `sp(n, R)` in block form `[[A, B], [C, -A^t]]` with its splitting into
/// `gl(n)`, `a_+` (upper symmetric block) and `a_-` (lower symmetric block).
#[derive(Clone, Debug)]
pub struct SpDecomposition {
    pub algebra: LieAlgebra,
    pub matrices: Vec<Matrix>,
    pub gl: Subspace,
    pub a_plus: Subspace,
    pub a_minus: Subspace,
}

fn unit(rows: usize, r: usize, c: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, rows);
    m.set(r, c, q(1));
    m
}

pub fn standard_j0(n: usize) -> Matrix {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        m.set(k, n + k, q(-1));
        m.set(n + k, k, q(1));
    }
    m
}

pub fn standard_e0(n: usize) -> Matrix {
    let mut m = Matrix::identity(2 * n);
    for k in n..2 * n {
        m.set(k, k, q(-1));
    }
    m
}

pub fn sp_decomposition(n: usize) -> Result<SpDecomposition> {
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    let m = 2 * n;
    let mut matrices = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            matrices.push(&unit(m, i, j) - &unit(m, n + j, n + i));
            labels.push(format!("A({},{})", i + 1, j + 1));
        }
    }
    let gl_count = matrices.len();
    for (tag, off_r, off_c) in [("B", 0, n), ("C", n, 0)] {
        for i in 0..n {
            for j in i..n {
                let mut b = unit(m, off_r + i, off_c + j);
                if i != j {
                    b = &b + &unit(m, off_r + j, off_c + i);
                }
                matrices.push(b);
                labels.push(format!("{tag}({},{})", i + 1, j + 1));
            }
        }
    }
    let sym = n * (n + 1) / 2;
    let algebra = matrix_lie_algebra(&format!("sp({n},R)"), labels, &matrices)?;
    let d = algebra.dim();
    let span = |r: std::ops::Range<usize>| Subspace::span(d, &r.map(|k| unit_vector(d, k)).collect::<Vec<_>>());
    Ok(SpDecomposition {
        gl: span(0..gl_count),
        a_plus: span(gl_count..gl_count + sym),
        a_minus: span(gl_count + sym..d),
        algebra,
        matrices,
    })
}

/// `gl(2n, R)` in the basis of matrix units `E(i,j)` (row-major) with
/// `J(A) = A J0` and `E(A) = A E0`.
pub fn gl2n(n: usize) -> Result<(LieAlgebra, Matrix, Matrix)> {
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    let m = 2 * n;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..m {
        for j in 0..m {
            basis.push(unit(m, i, j));
            labels.push(format!("E({},{})", i + 1, j + 1));
        }
    }
    let g = matrix_lie_algebra(&format!("gl({m},R)"), labels, &basis)?;
    let (j0, e0) = (standard_j0(n), standard_e0(n));
    let j = matrix_endomorphism(&basis, |a| a * &j0)?;
    let e = matrix_endomorphism(&basis, |a| a * &e0)?;
    Ok((g, j, e))
}

/// Standard structure on `C^n = R^n x R^n`: `J(U,V) = (-V,U)`, `E(U,V) = (U,-V)`.
pub fn standard_abelian(n: usize) -> (LieAlgebra, Matrix, Matrix) {
    let mut labels: Vec<String> = (1..=n).map(|k| format!("U{k}")).collect();
    labels.extend((1..=n).map(|k| format!("V{k}")));
    (LieAlgebra::abelian(&format!("C{n}"), labels), standard_j0(n), standard_e0(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::parse_combination;
    use crate::linalg::frac;

    fn aff() -> LieAlgebra {
        LieAlgebra::from_relations("aff(R)", &["X", "Y"], &[("X", "Y", "Y")]).unwrap()
    }

    fn aff_j() -> Matrix {
        Matrix::from_i64(&[&[0, -1], &[1, 0]])
    }

    fn aff_e() -> Matrix {
        Matrix::from_i64(&[&[1, 0], &[0, -1]])
    }

    fn h3r() -> LieAlgebra {
        LieAlgebra::from_relations("h3+R", &["X", "Y", "Z", "W"], &[("X", "Y", "Z")]).unwrap()
    }

    /// Matrix whose column `k` is the image of basis vector `k`.
    fn endo(g: &BracketTable, images: &[&str]) -> Matrix {
        let cols: Vec<Vector> = images.iter().map(|s| parse_combination(g.labels(), s).unwrap()).collect();
        Matrix::from_columns(g.dim(), &cols).unwrap()
    }

    #[test]
    fn complex_integrability() {
        assert!(check_complex_integrable(&aff(), &aff_j()).passed());
        let g = h3r();
        let j = endo(&g, &["Z", "W", "-X", "-Y"]);
        let r = check_complex_integrable(&g, &j);
        assert!(!r.passed());
        assert_eq!(r.violations[0].at, vec!["X", "Y"]);
        let (c, j, _) = standard_abelian(2);
        assert!(check_complex_integrable(&c, &j).passed());
    }

    #[test]
    fn product_integrability_matches_subalgebras() {
        assert!(check_product_integrable(&aff(), &aff_e()).passed());
        let g = h3r();
        let e = endo(&g, &["X", "Y", "-Z", "-W"]);
        assert!(!check_product_integrable(&g, &e).passed());
        let plus = eigenspace(&e, &q(1));
        assert!(!is_subalgebra(&g, &plus));
    }

    #[test]
    fn bicomplex_condition() {
        assert!(!check_bicomplex_condition(&aff(), &aff_j()));
        let rc = crate::lie::realify_complexification(&aff());
        assert!(check_bicomplex_condition(&rc.hat, &rc.i_map));
        let (c, j, _) = standard_abelian(1);
        assert!(check_bicomplex_condition(&c, &j));
    }

    #[test]
    fn validation_error_order() {
        let g = aff();
        assert!(validate_cps(&g, &aff_j(), &aff_e()).is_ok());
        assert_eq!(validate_cps(&g, &aff_e(), &aff_e()).unwrap_err(), Error::NotAlmostComplex);
        assert_eq!(validate_cps(&g, &aff_j(), &aff_j()).unwrap_err(), Error::NotAlmostProduct);
        assert_eq!(validate_cps(&g, &aff_j(), &Matrix::identity(2)).unwrap_err(), Error::TrivialProduct);
        let e = Matrix::from_i64(&[&[1, 1], &[0, -1]]);
        assert_eq!(validate_cps(&g, &aff_j(), &e).unwrap_err(), Error::NotAnticommuting);
        let h = h3r();
        let j = endo(&h, &["Z", "W", "-X", "-Y"]);
        let e = endo(&h, &["X", "-Y", "-Z", "W"]);
        assert_eq!(validate_cps(&h, &j, &e).unwrap_err().code(), "EQ1");
    }

    #[test]
    fn from_subalgebra_pair() {
        let (c, j, e) = standard_abelian(2);
        let plus = Subspace::span(4, &[unit_vector(4, 0), unit_vector(4, 1)]);
        let cps = cps_from_subalgebra_pair(&c, &j, &plus).unwrap();
        assert_eq!(cps.e(), &e);
        let h = h3r();
        let j = endo(&h, &["Y", "-X", "W", "-Z"]);
        let bad = Subspace::span(4, &[unit_vector(4, 0), unit_vector(4, 1)]);
        match cps_from_subalgebra_pair(&h, &j, &bad) {
            Err(Error::Preconditions(f)) => assert_eq!(f.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn from_phi() {
        let g = aff();
        let plus = Subspace::span(2, &[unit_vector(2, 0)]);
        let minus = Subspace::span(2, &[unit_vector(2, 1)]);
        let cps = cps_from_phi(&g, &plus, &minus, &Matrix::from_i64(&[&[1]])).unwrap();
        assert_eq!(cps.j(), &aff_j());
        assert_eq!(cps.e(), &aff_e());
        let cps2 = cps_from_phi(&g, &plus, &minus, &Matrix::from_i64(&[&[2]])).unwrap();
        assert_eq!(cps2.j(), &Matrix::new(2, 2, vec![q(0), frac(-1, 2), q(2), q(0)]).unwrap());
        assert!(matches!(
            cps_from_phi(&g, &plus, &minus, &Matrix::from_i64(&[&[0]])),
            Err(Error::Preconditions(_))
        ));
    }

    #[test]
    fn phi_condition_violation_is_reported() {
        // h3 + R with plus = span{X, W}, minus = span{Y, Z}: both abelian
        // subalgebras; phi X = Z, phi W = Y breaks the compatibility condition.
        let g = h3r();
        let plus = Subspace::span(4, &[unit_vector(4, 0), unit_vector(4, 3)]);
        let minus = Subspace::span(4, &[unit_vector(4, 1), unit_vector(4, 2)]);
        let err = cps_from_phi(&g, &plus, &minus, &Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap_err();
        assert_eq!(err.code(), "EQ-FI");
        let ok = cps_from_phi(&g, &plus, &minus, &Matrix::identity(2));
        assert!(ok.is_ok(), "{ok:?}");
    }

    #[test]
    fn pencil_members() {
        let cps = validate_cps(&aff(), &aff_j(), &aff_e()).unwrap();
        let (e, plus) = pencil(&cps, &CirclePoint::zero_angle());
        assert_eq!(e.matrix(), cps.e());
        assert_eq!(&plus, cps.plus());
        let (e, plus) = pencil(&cps, &CirclePoint::half_turn());
        assert_eq!(e.matrix(), &-cps.e());
        assert_eq!(&plus, cps.minus());
        let (_, plus) = pencil(&cps, &CirclePoint::quarter_turn());
        let x = unit_vector(2, 0);
        assert_eq!(plus, Subspace::span(2, &[vec_add(&x, &cps.j().apply(&x))]));
    }

    #[test]
    fn equivalence() {
        let cps = validate_cps(&aff(), &aff_j(), &aff_e()).unwrap();
        assert!(check_equivalence(&cps, &cps, &Matrix::identity(2)));
        assert!(!check_equivalence(&cps, &cps, &Matrix::from_i64(&[&[1, 0], &[0, 2]])));
    }

    #[test]
    fn abelian_complex_structures() {
        let g = h3r();
        assert!(is_abelian_cs(&g, &endo(&g, &["Y", "-X", "W", "-Z"])));
        let h2 = LieAlgebra::from_relations(
            "H2",
            &["A", "X", "Y", "Z"],
            &[("X", "Y", "Z"), ("A", "X", "-Y"), ("A", "Y", "X")],
        )
        .unwrap();
        assert!(!is_abelian_cs(&h2, &endo(&h2, &["Z", "Y", "-X", "-A"])));
    }

    #[test]
    fn symplectic_blocks() {
        for n in 1..=3 {
            let sp = sp_decomposition(n).unwrap();
            assert_eq!(sp.algebra.dim(), n * (2 * n + 1));
            assert_eq!(sp.gl.dim(), n * n);
            assert!(is_subalgebra(&sp.algebra, &sp.gl));
            assert!(crate::lie::is_abelian_subspace(&sp.algebra, &sp.a_plus));
            assert!(crate::lie::is_abelian_subspace(&sp.algebra, &sp.a_minus));
            let j0 = standard_j0(n);
            for x in &sp.matrices {
                assert!((&(&x.transpose() * &j0) + &(&j0 * x)).is_zero());
            }
        }
    }

    #[test]
    fn gl_right_multiplication() {
        for n in 1..=2 {
            let (g, j, e) = gl2n(n).unwrap();
            let cps = validate_cps(&g, &j, &e).unwrap();
            assert_eq!(cps.plus().dim(), 2 * n * n);
        }
    }
}
