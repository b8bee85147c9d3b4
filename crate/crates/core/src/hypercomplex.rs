//! Hypercomplex structures and the structure induced on the realified
//! complexification of a Lie algebra with a complex product structure.

use crate::error::{Error, Report, Result};
use crate::lie::{is_homomorphism, is_subalgebra, realify_complexification, LieAlgebra, RealifiedComplexification};
use crate::linalg::{Matrix, Subspace};
use crate::structures::{check_complex_integrable, splitting_endomorphism, validate_cps, ComplexProductStructure};

/// A pair of anticommuting complex structures; `j3 = j1 j2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercomplexStructure {
    g: LieAlgebra,
    j1: Matrix,
    j2: Matrix,
}

impl HypercomplexStructure {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn j1(&self) -> &Matrix {
        &self.j1
    }

    pub fn j2(&self) -> &Matrix {
        &self.j2
    }

    pub fn j3(&self) -> Matrix {
        &self.j1 * &self.j2
    }
}

fn minus_identity(m: &Matrix) -> bool {
    (-m).is_identity()
}

/// Every law of a hypercomplex structure, each under its own identifier.
pub fn hypercomplex_report(g: &LieAlgebra, j1: &Matrix, j2: &Matrix) -> Report {
    let n = g.dim();
    let mut report = Report::new();
    let shape_ok = |m: &Matrix| m.rows() == n && m.cols() == n;
    if !shape_ok(j1) || !shape_ok(j2) {
        report.push("SHAPE", vec![], format!("structures must be {n} x {n}"));
        return report;
    }
    let j3 = j1 * j2;
    for (law, m) in [("J1-SQUARE", j1), ("J2-SQUARE", j2)] {
        if !minus_identity(&(m * m)) {
            report.push(law, vec![], "square is not -Id".into());
        }
    }
    if !j1.anticommutes_with(j2) {
        report.push("ANTICOMMUTE", vec![], "J1 J2 + J2 J1 is not zero".into());
    }
    if !minus_identity(&(&j3 * &j3)) {
        report.push("J3-SQUARE", vec![], "square is not -Id".into());
    }
    if &(j2 * &j3) != j1 {
        report.push("QUATERNION", vec!["J2".into(), "J3".into()], "J2 J3 is not J1".into());
    }
    if &(&j3 * j1) != j2 {
        report.push("QUATERNION", vec!["J3".into(), "J1".into()], "J3 J1 is not J2".into());
    }
    for (law, m) in [("EQ1-J1", j1), ("EQ1-J2", j2), ("EQ1-J3", &j3)] {
        for v in check_complex_integrable(g, m).violations {
            report.push(law, v.at, v.residual);
        }
    }
    report
}

pub fn check_hypercomplex(g: &LieAlgebra, j1: &Matrix, j2: &Matrix) -> Result<HypercomplexStructure> {
    let report = hypercomplex_report(g, j1, j2);
    if !report.passed() {
        return Err(Error::Hypercomplex(report));
    }
    Ok(HypercomplexStructure { g: g.clone(), j1: j1.clone(), j2: j2.clone() })
}

/// Equivalence of hypercomplex structures: `phi` is an isomorphism with
/// `phi J_k = J'_k phi` for `k = 1, 2`.
pub fn check_hypercomplex_equivalence(a: &HypercomplexStructure, b: &HypercomplexStructure, phi: &Matrix) -> bool {
    let n = a.g.dim();
    phi.rows() == n
        && phi.cols() == n
        && b.g.dim() == n
        && phi.inverse().is_some()
        && is_homomorphism(&a.g, &b.g, phi)
        && phi * &a.j1 == &b.j1 * phi
        && phi * &a.j2 == &b.j2 * phi
}

/// The complex structure equal to `I` on `u1` and `-I` on `u2`, for a
/// splitting of the realified complexification into complex subalgebras.
pub fn split_complex_structure(rc: &RealifiedComplexification, u1: &Subspace, u2: &Subspace) -> Result<Matrix> {
    let n = rc.hat.dim();
    if u1.ambient_dim() != n || u2.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u1.ambient_dim().max(u2.ambient_dim()) });
    }
    if u1.dim() == 0 || u2.dim() == 0 {
        return Err(Error::InvalidSplitting("both summands must be nonzero".into()));
    }
    if u1.dim() + u2.dim() != n || u1.sum(u2)?.dim() != n {
        return Err(Error::InvalidSplitting("summands are not complementary".into()));
    }
    for (name, u) in [("u1", u1), ("u2", u2)] {
        if !is_subalgebra(&rc.hat, u) {
            return Err(Error::InvalidSplitting(format!("{name} is not a subalgebra")));
        }
        if !u.is_stable_under(&rc.i_map) {
            return Err(Error::InvalidSplitting(format!("{name} is not stable under I")));
        }
    }
    let s = splitting_endomorphism(&u1.basis(), &u2.basis());
    let i_hat = &rc.i_map * &s;
    let report = check_complex_integrable(&rc.hat, &i_hat);
    if !report.passed() {
        return Err(Error::ComplexNotIntegrable(report));
    }
    Ok(i_hat)
}

/// The hypercomplex structure `{I^, J^}` on the realified complexification,
/// with `I^ = I` on `g_+ + I g_+`, `-I` on `g_- + I g_-`, and `J^` the
/// complex-linear extension of `J`.
pub fn induce_hypercomplex(cps: &ComplexProductStructure) -> Result<(RealifiedComplexification, HypercomplexStructure)> {
    let rc = realify_complexification(cps.algebra());
    let u1 = rc.complex_span(cps.plus());
    let u2 = rc.complex_span(cps.minus());
    let i_hat = split_complex_structure(&rc, &u1, &u2)?;
    let j_hat = rc.complexify(cps.j());
    let h = check_hypercomplex(&rc.hat, &i_hat, &j_hat)?;
    Ok((rc, h))
}

/// The complex product structure `{J^, E^ = -I I^}` on the realified
/// complexification.
pub fn induced_cps_on_hat(cps: &ComplexProductStructure) -> Result<(RealifiedComplexification, ComplexProductStructure)> {
    let (rc, h) = induce_hypercomplex(cps)?;
    let hat_cps = cps_from_hypercomplex(&rc, &h)?;
    Ok((rc, hat_cps))
}

fn cps_from_hypercomplex(rc: &RealifiedComplexification, h: &HypercomplexStructure) -> Result<ComplexProductStructure> {
    let e_hat = -&(&rc.i_map * h.j1());
    validate_cps(&rc.hat, h.j2(), &e_hat)
}

/// One member of the iterated family.
#[derive(Clone, Debug)]
pub struct FamilyStage {
    pub k: usize,
    pub cps: ComplexProductStructure,
    pub hypercomplex: HypercomplexStructure,
}

pub const DEFAULT_CAP: usize = 64;

/// `g_(k)`: the `k`-fold realified complexification of `g`, of dimension
/// `2^k dim g`, carrying the hypercomplex structure induced from the complex
/// product structure of the previous stage.
pub fn iterate_family(cps: &ComplexProductStructure, k: usize, cap: usize) -> Result<FamilyStage> {
    if k == 0 {
        return Err(Error::Preconditions(vec!["k must be at least 1".into()]));
    }
    let dim = 1usize
        .checked_shl(k as u32)
        .and_then(|f| f.checked_mul(cps.dim()))
        .unwrap_or(usize::MAX);
    if dim > cap {
        return Err(Error::CapExceeded { dim, cap });
    }
    let mut current = cps.clone();
    let mut stage = None;
    for step in 1..=k {
        let (rc, h) = induce_hypercomplex(&current)?;
        let next = cps_from_hypercomplex(&rc, &h)?;
        stage = Some(FamilyStage { k: step, cps: next.clone(), hypercomplex: h });
        current = next;
    }
    Ok(stage.expect("k >= 1"))
}
