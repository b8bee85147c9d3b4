//! Built-in example algebras with their structures and reference values.
//!
//! Family entries take a point on the unit circle. The point supplied in
//! [`Params::point`] is the *half* angle `theta/2`; matrices use the full
//! angle obtained with [`CirclePoint::double`], while eigenvector spanning
//! sets use the half angle directly. This keeps every value rational.

use num::{One, Zero};

use crate::connection::{cp_connection, curvature_at, extend_to_hat, is_flat, is_torsion_free, parallel_check};
use crate::error::{Error, Report, Result};
use crate::forms::invariant_symmetric_forms;
use crate::hypercomplex::{check_hypercomplex, induce_hypercomplex};
use crate::lie::{is_abelian_subspace, is_subalgebra, parse_combination, realify_complexification, BracketTable, LieAlgebra};
use crate::linalg::{is_zero_vector, q, CirclePoint, Matrix, Rational, Subspace, Vector};
use crate::lsa::{
    aff_construction, bicrossproduct, extended_product, induced_lsa, matched_pair_from_cps, phi_psi_obstruction,
    BilinearProduct,
};
use crate::structures::{
    check_complex_integrable, gl2n, is_abelian_cs, sp_decomposition, splitting_endomorphism, standard_abelian, standard_j0,
    validate_cps, ComplexProductStructure,
};

pub const KEYS: &[&str] = &[
    "Cn_abelian",
    "affR",
    "gl2R",
    "gl2nR",
    "spn",
    "affA",
    "A2",
    "h3R",
    "A4",
    "H2",
    "so3R",
    "gl2C",
    "A2_hat",
    "h3R_hat",
    "A4_hat",
];

/// Parameters for entries that need them.
#[derive(Clone, Debug, Default)]
pub struct Params {
    /// Half-angle point for the `theta` families.
    pub point: Option<CirclePoint>,
    /// Size parameter for `Cn_abelian`, `gl2nR` and `spn`.
    pub n: Option<usize>,
    /// Bilinear product for `affA`.
    pub product: Option<BilinearProduct>,
}

impl Params {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn at(point: CirclePoint) -> Self {
        Self { point: Some(point), ..Self::default() }
    }

    pub fn with_n(n: usize) -> Self {
        Self { n: Some(n), ..Self::default() }
    }

    pub fn with_product(p: BilinearProduct) -> Self {
        Self { product: Some(p), ..Self::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoDimType {
    Abelian,
    Aff,
}

/// Isomorphism type of a 2-dimensional subalgebra: abelian when the bracket
/// of its basis vanishes, otherwise `aff(R)`. `None` if `s` is not a
/// 2-dimensional subalgebra.
pub fn two_dim_type(g: &BracketTable, s: &Subspace) -> Option<TwoDimType> {
    if s.dim() != 2 || !is_subalgebra(g, s) {
        return None;
    }
    let b = s.basis();
    Some(if is_zero_vector(&g.bracket(&b[0], &b[1])) { TwoDimType::Abelian } else { TwoDimType::Aff })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryKind {
    /// Carries complex product structures.
    Positive,
    /// Carries a complex structure but no stored complex product structure.
    Negative,
    /// A subspace decomposition without structures.
    Decomposition,
    /// Realified complexification of `base` with transcribed hypercomplex
    /// structures.
    Hypercomplex { base: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedStructure {
    pub name: String,
    pub j: Matrix,
    pub e: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// Spanning set contained in the `+1` eigenspace; equal to it when the
    /// set has full rank.
    PlusSpan(Vec<Vector>),
    MinusSpan(Vec<Vector>),
    HalfTypes { plus: TwoDimType, minus: TwoDimType },
    /// Value of the extended product `x . y`.
    Product { x: Vector, y: Vector, value: Vector },
    /// `x(yz) - (xy)z` and `y(xz) - (yx)z`.
    Associators { x: Vector, y: Vector, z: Vector, xyz: Vector, yxz: Vector },
    Extends(bool),
    CurvatureAt { x: Vector, y: Vector, z: Vector, value: Vector },
    ConnectionFlat(bool),
    HatConnectionFlat(bool),
    /// Transcribed `(I^, J^)` on the realified complexification.
    Hypercomplex { i_hat: Matrix, j_hat: Matrix },
    AbelianComplex(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub structure: Option<String>,
    pub label: String,
    pub expect: Expectation,
}

/// A reference value that is misprinted in the source display, with the
/// value actually stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub item: String,
    pub printed: String,
    pub corrected: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub title: String,
    pub kind: EntryKind,
    pub algebra: LieAlgebra,
    pub structures: Vec<NamedStructure>,
    /// Structures of a family that are excluded at the given parameter.
    pub excluded: Vec<String>,
    /// Complex structure stored on negative entries.
    pub complex_structure: Option<Matrix>,
    pub subspaces: Vec<(String, Subspace)>,
    /// Basis of the ad-invariant symmetric forms (negative entries).
    pub invariant_forms: Vec<Matrix>,
    pub fixtures: Vec<Fixture>,
    pub errata: Vec<Erratum>,
}

impl CatalogEntry {
    fn new(key: &str, title: &str, kind: EntryKind, algebra: LieAlgebra) -> Self {
        Self {
            key: key.into(),
            title: title.into(),
            kind,
            algebra,
            structures: Vec::new(),
            excluded: Vec::new(),
            complex_structure: None,
            subspaces: Vec::new(),
            invariant_forms: Vec::new(),
            fixtures: Vec::new(),
            errata: Vec::new(),
        }
    }

    fn structure(&mut self, name: &str, j: Matrix, e: Matrix) {
        self.structures.push(NamedStructure { name: name.into(), j, e });
    }

    fn fixture(&mut self, structure: Option<&str>, label: &str, expect: Expectation) {
        self.fixtures.push(Fixture { structure: structure.map(Into::into), label: label.into(), expect });
    }

    pub fn structure_named(&self, name: &str) -> Option<&NamedStructure> {
        self.structures.iter().find(|s| s.name == name)
    }

    /// The named structure, validated.
    pub fn cps(&self, name: &str) -> Result<ComplexProductStructure> {
        if self.excluded.iter().any(|x| x == name) {
            return Err(Error::ExcludedParameter(format!("{} {name}", self.key)));
        }
        let s = self.structure_named(name).ok_or_else(|| Error::UnknownKey(format!("{}/{name}", self.key)))?;
        validate_cps(&self.algebra, &s.j, &s.e)
    }
}

// ---- transcription helpers ----

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

fn hat_labels(ls: &[&str]) -> Vec<String> {
    let mut out = labels(ls);
    out.extend(ls.iter().map(|s| format!("{s}^")));
    out
}

/// Vector from `(coefficient, label)` terms.
fn lin(ls: &[String], terms: &[(Rational, &str)]) -> Vector {
    let mut v = vec![Rational::zero(); ls.len()];
    for (c, l) in terms {
        let i = ls.iter().position(|x| x == l).unwrap_or_else(|| panic!("label {l}"));
        v[i] += c;
    }
    v
}

fn combo(ls: &[String], s: &str) -> Vector {
    parse_combination(ls, s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Endomorphism from the images of the basis vectors.
fn endo(ls: &[String], images: &[&str]) -> Matrix {
    let cols: Vec<Vector> = images.iter().map(|s| combo(ls, s)).collect();
    Matrix::from_columns(ls.len(), &cols).expect("square")
}

fn endo_terms(ls: &[String], images: &[Vec<(Rational, &str)>]) -> Matrix {
    let cols: Vec<Vector> = images.iter().map(|t| lin(ls, t)).collect();
    Matrix::from_columns(ls.len(), &cols).expect("square")
}

fn algebra(name: &str, ls: &[String], rel: &[(&str, &str, &str)]) -> LieAlgebra {
    let refs: Vec<&str> = ls.iter().map(String::as_str).collect();
    LieAlgebra::from_relations(name, &refs, rel).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn neg(r: &Rational) -> Rational {
    -r.clone()
}

fn one_plus(r: &Rational) -> Rational {
    Rational::one() + r
}

/// `(-I) * I^` with `I` the standard complex structure of the
/// realification.
fn e_from_i_hat(i_hat: &Matrix) -> Matrix {
    -&(&standard_j0(i_hat.rows() / 2) * i_hat)
}

fn need_point(key: &str, p: &Params) -> Result<(CirclePoint, CirclePoint)> {
    let half = p.point.clone().ok_or_else(|| Error::MissingParameter(key.into()))?;
    let full = half.double();
    Ok((half, full))
}

fn need_n(key: &str, p: &Params) -> Result<usize> {
    match p.n {
        None => Err(Error::MissingParameter(key.into())),
        Some(0) => Err(Error::ExcludedParameter(format!("{key} with n = 0"))),
        Some(n) => Ok(n),
    }
}

// ---- entries ----

pub fn get(key: &str, p: &Params) -> Result<CatalogEntry> {
    match key {
        "Cn_abelian" => cn_abelian(need_n(key, p)?),
        "affR" => Ok(aff_r()),
        "gl2R" => Ok(gl2r()),
        "gl2nR" => gl2n_r(need_n(key, p)?),
        "spn" => spn(need_n(key, p)?),
        "affA" => aff_a(p.product.as_ref().ok_or_else(|| Error::MissingParameter(key.into()))?),
        "A2" => Ok(a2()),
        "h3R" => Ok(h3r(&need_point(key, p)?)),
        "A4" => Ok(a4(&need_point(key, p)?)),
        "H2" => Ok(h2()),
        "so3R" => Ok(so3r()),
        "gl2C" => Ok(gl2c()),
        "A2_hat" => Ok(a2_hat()),
        "h3R_hat" => Ok(h3r_hat(&need_point(key, p)?)),
        "A4_hat" => Ok(a4_hat(&need_point(key, p)?)),
        _ => Err(Error::UnknownKey(key.into())),
    }
}

/// Shorthand for `get(key, p)?.cps(name)`.
pub fn get_structure(key: &str, name: &str, p: &Params) -> Result<ComplexProductStructure> {
    get(key, p)?.cps(name)
}

/// Whether the entry needs a circle point.
pub fn is_family(key: &str) -> bool {
    matches!(key, "h3R" | "A4" | "h3R_hat" | "A4_hat")
}

fn cn_abelian(n: usize) -> Result<CatalogEntry> {
    let (g, j, e) = standard_abelian(n);
    let mut c = CatalogEntry::new("Cn_abelian", "abelian C^n = R^n x R^n", EntryKind::Positive, g);
    c.structure("standard", j, e);
    c.fixture(Some("standard"), "flat connection", Expectation::ConnectionFlat(true));
    Ok(c)
}

fn aff_r() -> CatalogEntry {
    let ls = labels(&["X", "Y"]);
    let g = algebra("aff(R)", &ls, &[("X", "Y", "Y")]);
    let mut c = CatalogEntry::new("affR", "aff(R), [X,Y] = Y", EntryKind::Positive, g);
    c.structure("JE", endo(&ls, &["Y", "-X"]), endo(&ls, &["X", "-Y"]));
    c.fixture(Some("JE"), "plus eigenspace", Expectation::PlusSpan(vec![combo(&ls, "X")]));
    c.fixture(Some("JE"), "minus eigenspace", Expectation::MinusSpan(vec![combo(&ls, "Y")]));
    c
}

fn gl2r() -> CatalogEntry {
    let ls = labels(&["W", "X", "Y", "Z"]);
    let g = algebra("gl(2,R)", &ls, &[("W", "X", "2X"), ("W", "Y", "-2Y"), ("X", "Y", "W")]);
    let mut c = CatalogEntry::new("gl2R", "gl(2,R) = R + sl(2,R), Z central", EntryKind::Positive, g);
    let j = endo(&ls, &["-X-Y", "1/2W+1/2Z", "1/2W-1/2Z", "-X+Y"]);
    let e = endo(&ls, &["Z", "-X", "Y", "W"]);
    c.structure("JE", j, e);
    let s = Some("JE");
    c.fixture(s, "plus eigenspace", Expectation::PlusSpan(vec![combo(&ls, "Y"), combo(&ls, "W+Z")]));
    c.fixture(s, "minus eigenspace", Expectation::MinusSpan(vec![combo(&ls, "X"), combo(&ls, "W-Z")]));
    c.fixture(s, "eigenspace types", Expectation::HalfTypes { plus: TwoDimType::Aff, minus: TwoDimType::Aff });
    c.fixture(s, "connection flat", Expectation::ConnectionFlat(true));
    c.fixture(s, "extended connection flat", Expectation::HatConnectionFlat(true));
    c.errata.push(Erratum {
        item: "eigenspace types".into(),
        printed: "both isomorphic to gl(2,R)".into(),
        corrected: "both isomorphic to aff(R)".into(),
        reason: "2-dimensional subalgebras; the double Lie algebra stated next is (gl(2,R), aff(R), aff(R))".into(),
    });
    c
}

fn gl2n_r(n: usize) -> Result<CatalogEntry> {
    let (g, j, e) = gl2n(n)?;
    let mut c = CatalogEntry::new("gl2nR", "gl(2n,R) with right multiplication by J0, E0", EntryKind::Positive, g);
    c.structure("JE", j, e);
    c.fixture(Some("JE"), "connection flat", Expectation::ConnectionFlat(true));
    Ok(c)
}

fn spn(n: usize) -> Result<CatalogEntry> {
    let d = sp_decomposition(n)?;
    let mut c = CatalogEntry::new("spn", "sp(n,R) = gl(n,R) + a+ + a-", EntryKind::Decomposition, d.algebra);
    c.subspaces = vec![("gl".into(), d.gl), ("a+".into(), d.a_plus), ("a-".into(), d.a_minus)];
    Ok(c)
}

fn aff_a(p: &BilinearProduct) -> Result<CatalogEntry> {
    let (g, cps) = aff_construction(p, "aff(A)")?;
    let mut c = CatalogEntry::new("affA", "aff(A) on A + A for a left-symmetric A", EntryKind::Positive, g);
    c.structure("JE", cps.j().clone(), cps.e().clone());
    Ok(c)
}

fn a2() -> CatalogEntry {
    let ls = labels(&["A", "B", "C", "D"]);
    let g = algebra("A2", &ls, &[("A", "B", "B"), ("A", "C", "-C"), ("A", "D", "-D")]);
    let mut c = CatalogEntry::new("A2", "[A,B] = B, [A,C] = -C, [A,D] = -D", EntryKind::Positive, g);
    let j = endo(&ls, &["B", "-A", "D", "-C"]);
    let plus = vec![combo(&ls, "A-D"), combo(&ls, "C")];
    let minus = vec![combo(&ls, "B+C"), combo(&ls, "D")];
    c.structure("JE", j, splitting_endomorphism(&plus, &minus));
    let s = Some("JE");
    c.fixture(s, "plus eigenspace", Expectation::PlusSpan(plus));
    c.fixture(s, "minus eigenspace", Expectation::MinusSpan(minus));
    let l = |x: &str, y: &str, v: &str| Expectation::Product { x: combo(&ls, x), y: combo(&ls, y), value: combo(&ls, v) };
    for (x, y, v) in [
        ("A-D", "A-D", "A-D"),
        ("A-D", "C", "-C"),
        ("A-D", "B+C", "B+C"),
        ("A-D", "D", "-D"),
        ("B+C", "A-D", "2C"),
        ("B+C", "C", "0"),
        ("B+C", "B+C", "2D"),
        ("B+C", "D", "0"),
    ] {
        c.fixture(s, &format!("L_({x})({y})"), l(x, y, v));
    }
    for x in ["C", "D"] {
        for y in ["A-D", "C", "B+C", "D"] {
            c.fixture(s, &format!("L_{x} = 0 on {y}"), l(x, y, "0"));
        }
    }
    c.fixture(
        s,
        "associators at (A-D, B+C, A-D)",
        Expectation::Associators {
            x: combo(&ls, "A-D"),
            y: combo(&ls, "B+C"),
            z: combo(&ls, "A-D"),
            xyz: combo(&ls, "-4C"),
            yxz: combo(&ls, "2C"),
        },
    );
    c.fixture(s, "product does not extend", Expectation::Extends(false));
    c.fixture(
        s,
        "curvature R(A-D, B+C)(A-D)",
        Expectation::CurvatureAt { x: combo(&ls, "A-D"), y: combo(&ls, "B+C"), z: combo(&ls, "A-D"), value: combo(&ls, "-6C") },
    );
    c.fixture(s, "connection not flat", Expectation::ConnectionFlat(false));
    c.fixture(s, "extended connection not flat", Expectation::HatConnectionFlat(false));
    c
}

fn h3r((half, full): &(CirclePoint, CirclePoint)) -> CatalogEntry {
    let ls = labels(&["X", "Y", "Z", "W"]);
    let g = algebra("h3+R", &ls, &[("X", "Y", "Z")]);
    let mut c = CatalogEntry::new("h3R", "h3 + R, [X,Y] = Z", EntryKind::Positive, g);
    let (ct, st) = (full.cos(), full.sin());
    let (ch, sh) = (half.cos(), half.sin());
    let j = endo(&ls, &["Y", "-X", "W", "-Z"]);
    let e = endo_terms(
        &ls,
        &[vec![(q(1), "X")], vec![(q(-1), "Y")], vec![(ct.clone(), "Z"), (st.clone(), "W")], vec![(st.clone(), "Z"), (neg(ct), "W")]],
    );
    c.structure("E_theta", j, e);
    let s = Some("E_theta");
    c.fixture(s, "plus eigenspace", Expectation::PlusSpan(vec![combo(&ls, "X"), lin(&ls, &[(ch.clone(), "Z"), (sh.clone(), "W")])]));
    c.fixture(s, "minus eigenspace", Expectation::MinusSpan(vec![combo(&ls, "Y"), lin(&ls, &[(neg(sh), "Z"), (ch.clone(), "W")])]));
    c.fixture(s, "eigenspace types", Expectation::HalfTypes { plus: TwoDimType::Abelian, minus: TwoDimType::Abelian });
    c.fixture(s, "abelian complex structure", Expectation::AbelianComplex(true));
    c
}

/// Full-angle matrices of the four `A4` families.
fn a4_matrices(ls: &[String], full: &CirclePoint) -> [(String, Matrix); 4] {
    let (c, s) = (full.cos(), full.sin());
    let c1 = one_plus(c);
    let top = |extra_a: Vec<(Rational, &'static str)>, extra_b: Vec<(Rational, &'static str)>| {
        let mut a = vec![(c.clone(), "A"), (s.clone(), "B")];
        a.extend(extra_a);
        let mut b = vec![(s.clone(), "A"), (neg(c), "B")];
        b.extend(extra_b);
        (a, b)
    };
    let (a, b) = top(vec![], vec![]);
    let e = endo_terms(ls, &[a, b, vec![(q(1), "C")], vec![(q(-1), "D")]]);
    let (a, b) = top(vec![(neg(s), "C"), (c1.clone(), "D")], vec![(c1.clone(), "C"), (s.clone(), "D")]);
    let e1 = endo_terms(ls, &[a, b, vec![(q(1), "C")], vec![(q(-1), "D")]]);
    let (a, b) = top(vec![], vec![]);
    let e2 = endo_terms(
        ls,
        &[
            a,
            b,
            vec![(neg(s), "A"), (c1.clone(), "B"), (q(1), "C")],
            vec![(c1.clone(), "A"), (s.clone(), "B"), (q(-1), "D")],
        ],
    );
    let et = endo(ls, &["-A-2C", "B+2D", "C", "-D"]);
    [("E_theta".into(), e), ("E'_theta".into(), e1), ("E''_theta".into(), e2), ("E~".into(), et)]
}

fn a4((half, full): &(CirclePoint, CirclePoint)) -> CatalogEntry {
    let ls = labels(&["A", "B", "C", "D"]);
    let g = algebra("A4", &ls, &[("A", "B", "B"), ("A", "C", "C"), ("A", "D", "D")]);
    let mut c = CatalogEntry::new("A4", "[A,B] = B, [A,C] = C, [A,D] = D", EntryKind::Positive, g);
    let j = endo(&ls, &["B", "-A", "D", "-C"]);
    let excluded = full.is_half_turn();
    for (name, e) in a4_matrices(&ls, full) {
        if excluded && (name == "E'_theta" || name == "E''_theta") {
            c.excluded.push(name);
        } else {
            c.structure(&name, j.clone(), e);
        }
    }
    let (ch, sh) = (half.cos(), half.sin());
    let v = |t: &[(Rational, &str)]| lin(&ls, t);
    // The bracket of the spanning vectors is a multiple of cos(theta/2)
    // (plus) or sin(theta/2) (minus); it vanishes at theta = 0 or pi.
    let kind = |x: &Rational| if x.is_zero() { TwoDimType::Abelian } else { TwoDimType::Aff };
    for (name, side, x) in [("E_theta", "plus", ch), ("E_theta", "minus", sh), ("E'_theta", "minus", sh)] {
        if x.is_zero() && !c.excluded.iter().any(|e| e == name) {
            c.errata.push(Erratum {
                item: format!("{name} {side} eigenspace type at theta = {}", if side == "plus" { "pi" } else { "0" }),
                printed: "isomorphic to aff(R)".into(),
                corrected: "abelian".into(),
                reason: "the bracket of the two spanning vectors is a multiple of a vanishing half-angle coordinate".into(),
            });
        }
    }
    let spans: Vec<(&str, Vec<Vector>, Vec<Vector>, TwoDimType, TwoDimType)> = vec![
        (
            "E_theta",
            vec![combo(&ls, "C"), v(&[(ch.clone(), "A"), (sh.clone(), "B")])],
            vec![combo(&ls, "D"), v(&[(neg(sh), "A"), (ch.clone(), "B")])],
            kind(ch),
            kind(sh),
        ),
        (
            "E'_theta",
            vec![combo(&ls, "C"), v(&[(ch.clone(), "A"), (sh.clone(), "B"), (ch.clone(), "D")])],
            vec![combo(&ls, "D"), v(&[(neg(sh), "A"), (ch.clone(), "B"), (neg(ch), "C")])],
            kind(ch),
            kind(sh),
        ),
        (
            "E''_theta",
            vec![v(&[(ch.clone(), "A"), (sh.clone(), "B")]), v(&[(neg(ch), "A"), (sh.clone(), "C")])],
            vec![v(&[(neg(sh), "A"), (ch.clone(), "B")]), v(&[(neg(ch), "B"), (sh.clone(), "D")])],
            TwoDimType::Aff,
            TwoDimType::Aff,
        ),
        ("E~", vec![combo(&ls, "C"), combo(&ls, "B+D")], vec![combo(&ls, "D"), combo(&ls, "A+C")], TwoDimType::Abelian, TwoDimType::Aff),
    ];
    for (name, plus, minus, tp, tm) in spans {
        if c.excluded.iter().any(|x| x == name) {
            continue;
        }
        c.fixture(Some(name), "plus eigenspace", Expectation::PlusSpan(plus));
        c.fixture(Some(name), "minus eigenspace", Expectation::MinusSpan(minus));
        c.fixture(Some(name), "eigenspace types", Expectation::HalfTypes { plus: tp, minus: tm });
    }
    c
}

fn h2() -> CatalogEntry {
    let ls = labels(&["A", "X", "Y", "Z"]);
    let g = algebra("H2", &ls, &[("X", "Y", "Z"), ("A", "X", "-Y"), ("A", "Y", "X")]);
    let mut c = CatalogEntry::new("H2", "[X,Y] = Z, [A,X] = -Y, [A,Y] = X; no complex product structure", EntryKind::Negative, g);
    c.complex_structure = Some(endo(&ls, &["Z", "Y", "-X", "-A"]));
    c.fixture(None, "complex structure is not abelian", Expectation::AbelianComplex(false));
    c
}

fn so3r() -> CatalogEntry {
    let ls = labels(&["T", "X1", "X2", "X3"]);
    let g = algebra("R+so(3)", &ls, &[("X1", "X2", "X3"), ("X2", "X3", "X1"), ("X3", "X1", "X2")]);
    let forms = invariant_symmetric_forms(&g);
    let mut c = CatalogEntry::new("so3R", "R + so(3); no complex product structure", EntryKind::Negative, g);
    c.complex_structure = Some(endo(&ls, &["X3", "X2", "-X1", "-T"]));
    c.invariant_forms = forms;
    c
}

// ---- realified complexifications ----

fn hat_entry(key: &str, base: &'static str, title: &str, g: LieAlgebra) -> CatalogEntry {
    CatalogEntry::new(key, title, EntryKind::Hypercomplex { base }, g)
}

fn add_hypercomplex(c: &mut CatalogEntry, name: &str, i_hat: Matrix, j_hat: Matrix) {
    let e_hat = e_from_i_hat(&i_hat);
    c.structure(name, j_hat.clone(), e_hat);
    c.fixture(Some(name), "hypercomplex structure", Expectation::Hypercomplex { i_hat, j_hat });
}

fn gl2c() -> CatalogEntry {
    let ls = hat_labels(&["W", "X", "Y", "Z"]);
    let g = algebra(
        "gl(2,C)",
        &ls,
        &[
            ("W", "X", "2X"),
            ("W^", "X^", "-2X"),
            ("W", "Y", "-2Y"),
            ("W^", "Y^", "2Y"),
            ("X", "Y", "W"),
            ("X^", "Y^", "-W"),
            ("W", "X^", "2X^"),
            ("W^", "X", "2X^"),
            ("W", "Y^", "-2Y^"),
            ("W^", "Y", "-2Y^"),
            ("X^", "Y", "W^"),
            ("X", "Y^", "W^"),
        ],
    );
    let mut c = hat_entry("gl2C", "gl2R", "gl(2,C) as a real Lie algebra", g);
    let i_hat = endo(&ls, &["Z^", "-X^", "Y^", "W^", "-Z", "X", "-Y", "-W"]);
    let j_hat = endo(
        &ls,
        &["-X-Y", "1/2W+1/2Z", "1/2W-1/2Z", "-X+Y", "-X^-Y^", "1/2W^+1/2Z^", "1/2W^-1/2Z^", "-X^+Y^"],
    );
    add_hypercomplex(&mut c, "JE", i_hat, j_hat);
    let bracket_reason = "the complex-bilinear bracket gives [W^,Y] = I[W,Y] and [X,Y^] = I[X,Y]";
    let i_reason = "X lies in the -1 eigenspace and Y in the +1 eigenspace; the printed value would give I^ I^ = Id";
    for (item, printed, corrected, reason) in [
        ("[W^,Y]", "-[W^,Y] = -2Y^", "[W^,Y] = -2Y^", bracket_reason),
        ("[X,Y^]", "-[X,Y^] = W^", "[X,Y^] = W^", bracket_reason),
        ("I^ X^", "-X", "X", i_reason),
        ("I^ Y^", "Y", "-Y", i_reason),
    ] {
        c.errata.push(Erratum { item: item.into(), printed: printed.into(), corrected: corrected.into(), reason: reason.into() });
    }
    c
}

/// `[A,B] = B`, `[A,C] = sC`, `[A,D] = sD` extended complex-bilinearly.
fn ab_hat_brackets(sign: &str) -> Vec<(String, String, String)> {
    let flip = if sign == "-" { "" } else { "-" };
    let mut rel = Vec::new();
    for (l, sg, fl) in [("B", "", "-"), ("C", sign, flip), ("D", sign, flip)] {
        rel.push(("A".into(), l.into(), format!("{sg}{l}")));
        rel.push(("A^".into(), format!("{l}^"), format!("{fl}{l}")));
        rel.push(("A".into(), format!("{l}^"), format!("{sg}{l}^")));
        rel.push(("A^".into(), l.into(), format!("{sg}{l}^")));
    }
    rel
}

fn algebra_owned(name: &str, ls: &[String], rel: &[(String, String, String)]) -> LieAlgebra {
    let r: Vec<(&str, &str, &str)> = rel.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    algebra(name, ls, &r)
}

fn ab_hat_j(ls: &[String]) -> Matrix {
    endo(ls, &["B", "-A", "D", "-C", "B^", "-A^", "D^", "-C^"])
}

fn a2_hat() -> CatalogEntry {
    let ls = hat_labels(&["A", "B", "C", "D"]);
    let g = algebra_owned("A2^", &ls, &ab_hat_brackets("-"));
    let mut c = hat_entry("A2_hat", "A2", "realified complexification of A2", g);
    let i_hat = endo(&ls, &["A^-2D^", "-B^-2C^", "C^", "-D^", "-A+2D", "B+2C", "-C", "D"]);
    add_hypercomplex(&mut c, "JE", i_hat, ab_hat_j(&ls));
    c
}

fn h3r_hat((_, full): &(CirclePoint, CirclePoint)) -> CatalogEntry {
    let ls = hat_labels(&["X", "Y", "Z", "W"]);
    let g = algebra("h3+R^", &ls, &[("X", "Y", "Z"), ("X^", "Y^", "-Z"), ("X", "Y^", "Z^"), ("X^", "Y", "Z^")]);
    let mut c = hat_entry("h3R_hat", "h3R", "realified complexification of h3 + R", g);
    let (ct, st) = (full.cos(), full.sin());
    let i_hat = endo_terms(
        &ls,
        &[
            vec![(q(1), "X^")],
            vec![(q(-1), "Y^")],
            vec![(ct.clone(), "Z^"), (st.clone(), "W^")],
            vec![(st.clone(), "Z^"), (neg(ct), "W^")],
            vec![(q(-1), "X")],
            vec![(q(1), "Y")],
            vec![(neg(ct), "Z"), (neg(st), "W")],
            vec![(neg(st), "Z"), (ct.clone(), "W")],
        ],
    );
    let j_hat = endo(&ls, &["Y", "-X", "W", "-Z", "Y^", "-X^", "W^", "-Z^"]);
    add_hypercomplex(&mut c, "E_theta", i_hat, j_hat);
    c
}

fn a4_hat((_, full): &(CirclePoint, CirclePoint)) -> CatalogEntry {
    let ls = hat_labels(&["A", "B", "C", "D"]);
    let g = algebra_owned("A4^", &ls, &ab_hat_brackets(""));
    let mut c = hat_entry("A4_hat", "A4", "realified complexification of A4", g);
    let (ct, st) = (full.cos(), full.sin());
    let c1 = one_plus(ct);
    let j_hat = ab_hat_j(&ls);
    let top = |hat: bool| -> (Vec<(Rational, &'static str)>, Vec<(Rational, &'static str)>) {
        if hat {
            (vec![(ct.clone(), "A^"), (st.clone(), "B^")], vec![(st.clone(), "A^"), (neg(ct), "B^")])
        } else {
            (vec![(neg(ct), "A"), (neg(st), "B")], vec![(neg(st), "A"), (ct.clone(), "B")])
        }
    };
    let with = |mut v: Vec<(Rational, &'static str)>, extra: Vec<(Rational, &'static str)>| {
        v.extend(extra);
        v
    };
    let (a, b) = top(true);
    let (ah, bh) = top(false);
    let i_theta = endo_terms(
        &ls,
        &[a.clone(), b.clone(), vec![(q(1), "C^")], vec![(q(-1), "D^")], ah.clone(), bh.clone(), vec![(q(-1), "C")], vec![(q(1), "D")]],
    );
    add_hypercomplex(&mut c, "E_theta", i_theta, j_hat.clone());
    if !full.is_half_turn() {
        let i_prime = endo_terms(
            &ls,
            &[
                with(a.clone(), vec![(neg(st), "C^"), (c1.clone(), "D^")]),
                with(b.clone(), vec![(c1.clone(), "C^"), (st.clone(), "D^")]),
                vec![(q(1), "C^")],
                vec![(q(-1), "D^")],
                with(ah.clone(), vec![(st.clone(), "C"), (neg(&c1), "D")]),
                with(bh.clone(), vec![(neg(&c1), "C"), (neg(st), "D")]),
                vec![(q(-1), "C")],
                vec![(q(1), "D")],
            ],
        );
        add_hypercomplex(&mut c, "E'_theta", i_prime, j_hat.clone());
        let i_second = endo_terms(
            &ls,
            &[
                a,
                b,
                vec![(neg(st), "A^"), (c1.clone(), "B^"), (q(1), "C^")],
                vec![(c1.clone(), "A^"), (st.clone(), "B^"), (q(-1), "D^")],
                ah,
                bh,
                vec![(st.clone(), "A"), (neg(&c1), "B"), (q(-1), "C")],
                vec![(neg(&c1), "A"), (neg(st), "B"), (q(1), "D")],
            ],
        );
        add_hypercomplex(&mut c, "E''_theta", i_second, j_hat.clone());
    } else {
        c.excluded = vec!["E'_theta".into(), "E''_theta".into()];
    }
    let i_tilde = endo(&ls, &["-A^-2C^", "B^+2D^", "C^", "-D^", "A+2C", "-B-2D", "-C", "D"]);
    add_hypercomplex(&mut c, "E~", i_tilde, j_hat);
    c
}

// ---- verification ----

/// Default half-angle sample points: stereographic parameters
/// `t = 0, 1, -1, 1/2, 3`.
pub fn default_samples() -> Vec<CirclePoint> {
    [q(0), q(1), q(-1), crate::linalg::frac(1, 2), q(3)].iter().map(CirclePoint::from_parameter).collect()
}

/// Bilinear products used to instantiate `affA` during verification.
pub fn sample_products() -> Vec<BilinearProduct> {
    vec![
        BilinearProduct::from_relations(&["x"], &[("x", "x", "x")]).expect("valid"),
        BilinearProduct::from_relations(&["a", "b"], &[("a", "a", "a"), ("a", "b", "b")]).expect("valid"),
        BilinearProduct::zero(labels(&["a", "b"])),
    ]
}

fn point_tag(p: &CirclePoint) -> String {
    format!("({}, {})", p.cos(), p.sin())
}

/// Every parameter instance verified for `key`.
pub fn instances(key: &str, samples: &[CirclePoint]) -> Vec<(String, Params)> {
    match key {
        "Cn_abelian" | "gl2nR" | "spn" => (1..=2).map(|n| (format!("n={n}"), Params::with_n(n))).collect(),
        "affA" => sample_products().into_iter().enumerate().map(|(i, p)| (format!("product #{i}"), Params::with_product(p))).collect(),
        k if is_family(k) => samples.iter().map(|p| (point_tag(p), Params::at(p.clone()))).collect(),
        _ => vec![(String::new(), Params::none())],
    }
}

/// Runs the full pipeline on every entry and instance; the returned report
/// is empty on success.
pub fn verify_all(samples: &[CirclePoint]) -> Report {
    let mut report = Report::new();
    for key in KEYS {
        report.extend(verify_key(key, samples));
    }
    report
}

pub fn verify_key(key: &str, samples: &[CirclePoint]) -> Report {
    let mut report = Report::new();
    for (tag, params) in instances(key, samples) {
        match get(key, &params) {
            Ok(entry) => report.extend(verify_entry(&entry, &params, &tag)),
            Err(e) => report.push("CATALOG", vec![key.into(), tag], e.to_string()),
        }
    }
    report
}

struct Ctx<'a> {
    report: &'a mut Report,
    key: &'a str,
    tag: &'a str,
}

impl Ctx<'_> {
    fn fail(&mut self, law: &'static str, structure: &str, what: impl Into<String>) {
        let mut at = vec![self.key.to_string()];
        if !structure.is_empty() {
            at.push(structure.to_string());
        }
        if !self.tag.is_empty() {
            at.push(self.tag.to_string());
        }
        self.report.push(law, at, what.into());
    }

    fn expect(&mut self, ok: bool, law: &'static str, structure: &str, what: &str) {
        if !ok {
            self.fail(law, structure, what);
        }
    }
}

pub fn verify_entry(entry: &CatalogEntry, params: &Params, tag: &str) -> Report {
    let mut report = Report::new();
    let mut ctx = Ctx { report: &mut report, key: &entry.key, tag };
    let g = &entry.algebra;
    match &entry.kind {
        EntryKind::Positive | EntryKind::Hypercomplex { .. } => {
            for s in &entry.structures {
                match validate_cps(g, &s.j, &s.e) {
                    Ok(cps) => {
                        pipeline(&mut ctx, &s.name, &cps);
                        for f in entry.fixtures.iter().filter(|f| f.structure.as_deref() == Some(&s.name)) {
                            check_fixture(&mut ctx, entry, params, &cps, f);
                        }
                    }
                    Err(e) => ctx.fail("VALIDATE", &s.name, e.to_string()),
                }
            }
        }
        EntryKind::Negative => {
            if let Some(j) = &entry.complex_structure {
                ctx.expect(check_complex_integrable(g, j).passed(), "EQ1", "", "stored complex structure");
                for f in entry.fixtures.iter().filter(|f| f.structure.is_none()) {
                    if let Expectation::AbelianComplex(want) = f.expect {
                        ctx.expect(is_abelian_cs(g, j) == want, "FIXTURE", "", &f.label);
                    }
                }
            }
            if entry.key == "so3R" {
                let has_definite = entry.invariant_forms.len() == 2
                    && invariant_symmetric_forms(g).len() == 2
                    && is_in_span(&entry.invariant_forms, &Matrix::identity(g.dim()));
                ctx.expect(has_definite, "FIXTURE", "", "invariant forms contain an inner product");
            }
        }
        EntryKind::Decomposition => {
            let mut total = 0;
            for (name, s) in &entry.subspaces {
                total += s.dim();
                ctx.expect(is_subalgebra(g, s), "SUBALGEBRA", name, "subspace is a subalgebra");
                if name != "gl" {
                    ctx.expect(is_abelian_subspace(g, s), "FIXTURE", name, "subspace is abelian");
                }
            }
            ctx.expect(total == g.dim(), "FIXTURE", "", "subspaces span the algebra");
        }
    }
    report
}

fn is_in_span(ms: &[Matrix], target: &Matrix) -> bool {
    let cols: Vec<Vector> = ms.iter().map(|m| m.entries().to_vec()).collect();
    let s = Subspace::span(target.rows() * target.cols(), &cols);
    s.contains(target.entries())
}

fn pipeline(ctx: &mut Ctx<'_>, name: &str, cps: &ComplexProductStructure) {
    if let Err(e) = induced_lsa(cps) {
        ctx.fail("LSA", name, e.to_string());
    }
    match matched_pair_from_cps(cps) {
        Ok(mp) => match bicrossproduct(&mp) {
            Ok(b) => ctx.expect(b.same_constants(&cps.adapted_algebra()), "BICROSS", name, "bicrossproduct constants"),
            Err(e) => ctx.fail("BICROSS", name, e.to_string()),
        },
        Err(e) => ctx.fail(e.code(), name, e.to_string()),
    }
    let conn = match cp_connection(cps) {
        Ok(c) => c,
        Err(e) => return ctx.fail("CONNECTION", name, e.to_string()),
    };
    ctx.expect(is_torsion_free(&conn), "TORSION", name, "connection has torsion");
    ctx.expect(parallel_check(&conn, cps.j()), "PARALLEL-J", name, "J is not parallel");
    ctx.expect(parallel_check(&conn, cps.e()), "PARALLEL-E", name, "E is not parallel");
    match induce_hypercomplex(cps) {
        Ok((rc, h)) => match extend_to_hat(&conn, &rc) {
            Ok(hc) => {
                ctx.expect(parallel_check(&hc, h.j1()), "PARALLEL-I", name, "I^ is not parallel");
                ctx.expect(parallel_check(&hc, h.j2()), "PARALLEL-J", name, "J^ is not parallel");
            }
            Err(e) => ctx.fail("CONNECTION", name, e.to_string()),
        },
        Err(e) => ctx.fail(e.code(), name, e.to_string()),
    }
}

fn span_matches(ctx: &mut Ctx<'_>, name: &str, label: &str, space: &Subspace, vs: &[Vector]) {
    let ok = vs.iter().all(|v| space.contains(v));
    let span = Subspace::span(space.ambient_dim(), vs);
    let full = span.dim() == vs.len();
    ctx.expect(ok && (!full || span == *space), "FIXTURE", name, label);
}

fn check_fixture(ctx: &mut Ctx<'_>, entry: &CatalogEntry, params: &Params, cps: &ComplexProductStructure, f: &Fixture) {
    let name = f.structure.as_deref().unwrap_or("");
    let g = cps.algebra();
    match &f.expect {
        Expectation::PlusSpan(vs) => span_matches(ctx, name, &f.label, cps.plus(), vs),
        Expectation::MinusSpan(vs) => span_matches(ctx, name, &f.label, cps.minus(), vs),
        Expectation::HalfTypes { plus, minus } => {
            let ok = two_dim_type(g, cps.plus()) == Some(*plus) && two_dim_type(g, cps.minus()) == Some(*minus);
            ctx.expect(ok, "FIXTURE", name, &f.label);
        }
        Expectation::Product { x, y, value } => {
            let ok = extended_product(cps).map(|p| p.mul(x, y) == *value).unwrap_or(false);
            ctx.expect(ok, "FIXTURE", name, &f.label);
        }
        Expectation::Associators { x, y, z, xyz, yxz } => {
            let ok = extended_product(cps)
                .map(|p| crate::lsa::associator(&p, x, y, z) == *xyz && crate::lsa::associator(&p, y, x, z) == *yxz)
                .unwrap_or(false);
            ctx.expect(ok, "FIXTURE", name, &f.label);
        }
        Expectation::Extends(want) => {
            let ok = phi_psi_obstruction(cps).map(|o| o.extends() == *want).unwrap_or(false);
            ctx.expect(ok, "FIXTURE", name, &f.label);
        }
        Expectation::CurvatureAt { x, y, z, value } => {
            let ok = cp_connection(cps).map(|c| curvature_at(&c, x, y, z) == *value).unwrap_or(false);
            ctx.expect(ok, "FIXTURE", name, &f.label);
        }
        Expectation::ConnectionFlat(want) => {
            let ok = cp_connection(cps).map(|c| is_flat(&c) == *want).unwrap_or(false);
            ctx.expect(ok, "FIXTURE", name, &f.label);
        }
        Expectation::HatConnectionFlat(want) => {
            let rc = realify_complexification(g);
            let ok = cp_connection(cps).and_then(|c| extend_to_hat(&c, &rc)).map(|c| is_flat(&c) == *want).unwrap_or(false);
            ctx.expect(ok, "FIXTURE", name, &f.label);
        }
        Expectation::AbelianComplex(want) => {
            ctx.expect(is_abelian_cs(g, cps.j()) == *want, "FIXTURE", name, &f.label);
        }
        Expectation::Hypercomplex { i_hat, j_hat } => {
            if let Err(e) = check_hypercomplex(&entry.algebra, i_hat, j_hat) {
                ctx.fail(e.code(), name, format!("transcribed structure: {e}"));
            }
            let EntryKind::Hypercomplex { base } = entry.kind else {
                return ctx.fail("FIXTURE", name, "hypercomplex fixture on a non-hat entry");
            };
            match get_structure(base, name, params) {
                Ok(base_cps) => match induce_hypercomplex(&base_cps) {
                    Ok((rc, h)) => {
                        ctx.expect(rc.hat.labels() == entry.algebra.labels(), "FIXTURE", name, "hat basis labels");
                        ctx.expect(rc.hat.same_constants(&entry.algebra), "FIXTURE", name, "hat structure constants");
                        ctx.expect(h.j1() == i_hat, "FIXTURE", name, "I^ matches");
                        ctx.expect(h.j2() == j_hat, "FIXTURE", name, "J^ matches");
                    }
                    Err(e) => ctx.fail(e.code(), name, e.to_string()),
                },
                Err(e) => ctx.fail("CATALOG", name, e.to_string()),
            }
        }
    }
}
