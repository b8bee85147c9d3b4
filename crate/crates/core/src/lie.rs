//! Lie algebras given by structure constants.
//!
//! A [`BracketTable`] is any antisymmetric bracket on a labelled basis; a
//! [`LieAlgebra`] is a bracket table that passed the Jacobi check at
//! construction, so downstream code can rely on it.

use std::ops::Deref;

use num::{One, Zero};

use crate::error::{Error, Report, Result};
use crate::linalg::{
    format_combination, is_zero_vector, parse_rational, solve, unit_vector, vec_neg,
    zero_vector, Matrix, Rational, Subspace, Tensor, Vector,
};

/// Antisymmetric bracket `[e_i, e_j] = sum_k c[i][j][k] e_k`. Only the `i < j`
/// half is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    name: String,
    labels: Vec<String>,
    upper: Vec<Vec<(usize, Rational)>>,
}

fn sparse(v: &[Rational]) -> Vec<(usize, Rational)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

impl BracketTable {
    /// Builds a table from `(i, j, [e_i, e_j])` triples. Pairs may be given in
    /// either order; unlisted pairs are zero.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        entries: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut dense: Vec<Option<Vector>> = vec![None; n * n];
        for (i, j, v) in entries {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: i.max(j) + 1 });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            if i == j {
                if !is_zero_vector(&v) {
                    return Err(Error::NotAntisymmetric(labels[i].clone(), labels[j].clone()));
                }
                continue;
            }
            let (a, b, v) = if i < j { (i, j, v) } else { (j, i, vec_neg(&v)) };
            match &dense[a * n + b] {
                Some(existing) if *existing != v => {
                    return Err(Error::NotAntisymmetric(labels[a].clone(), labels[b].clone()))
                }
                _ => dense[a * n + b] = Some(v),
            }
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Parse(format!("duplicate basis label {l:?}")));
            }
        }
        let upper = dense
            .into_iter()
            .map(|v| v.map(|v| sparse(&v)).unwrap_or_default())
            .collect();
        Ok(Self { name: name.into(), labels, upper })
    }

    /// Builds a table from a full `n x n x n` tensor, checking antisymmetry.
    pub fn from_tensor(name: impl Into<String>, labels: Vec<String>, c: &Tensor) -> Result<Self> {
        let n = labels.len();
        if c.shape() != [n, n, n] {
            return Err(Error::DimensionMismatch { expected: n, found: c.shape()[0] });
        }
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let a = c.fiber(&[i, j]);
                let b = c.fiber(&[j, i]);
                if a.iter().zip(b).any(|(x, y)| *x != -y) {
                    return Err(Error::NotAntisymmetric(labels[i].clone(), labels[j].clone()));
                }
                if i < j {
                    entries.push((i, j, a.to_vec()));
                }
            }
        }
        Self::new(name, labels, entries)
    }

    /// Builds a table from relations written with labels, e.g.
    /// `("X", "Y", "Z")` or `("W", "X", "2X")`.
    pub fn from_relations(name: &str, labels: &[&str], relations: &[(&str, &str, &str)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let mut entries = Vec::new();
        for (a, b, out) in relations {
            let i = index_of(&labels, a)?;
            let j = index_of(&labels, b)?;
            entries.push((i, j, parse_combination(&labels, out)?));
        }
        Self::new(name, labels, entries)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        index_of(&self.labels, label)
    }

    /// Renders a vector as a combination of basis labels.
    pub fn show(&self, v: &[Rational]) -> String {
        format_combination(&self.labels, v)
    }

    fn terms(&self, i: usize, j: usize) -> (&[(usize, Rational)], bool) {
        let n = self.dim();
        if i < j {
            (&self.upper[i * n + j], false)
        } else if i > j {
            (&self.upper[j * n + i], true)
        } else {
            (&[], false)
        }
    }

    /// `acc += s [e_i, e_j]`
    pub fn accumulate_basis_bracket(&self, acc: &mut [Rational], s: &Rational, i: usize, j: usize) {
        let (terms, negate) = self.terms(i, j);
        for (k, c) in terms {
            if negate {
                acc[*k] -= s * c;
            } else {
                acc[*k] += s * c;
            }
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vector(self.dim());
        self.accumulate_basis_bracket(&mut v, &Rational::one(), i, j);
        v
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "bracket arguments must have length {n}");
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                if i != j {
                    self.accumulate_basis_bracket(&mut out, &(xi * yj), i, j);
                }
            }
        }
        out
    }

    /// `[e_i, v]`
    pub fn bracket_with_basis(&self, i: usize, v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            if i != j {
                self.accumulate_basis_bracket(&mut out, vj, i, j);
            }
        }
        out
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_pairs(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.upper[i * n + j].is_empty() {
                    out.push((i, j, self.bracket_basis(i, j)));
                }
            }
        }
        out
    }

    pub fn to_tensor(&self) -> Tensor {
        let n = self.dim();
        let mut t = Tensor::zeros(&[n, n, n]);
        for (i, j, v) in self.nonzero_pairs() {
            t.set_fiber(&[i, j], &v);
            t.set_fiber(&[j, i], &vec_neg(&v));
        }
        t
    }

    pub fn is_abelian(&self) -> bool {
        self.upper.iter().all(Vec::is_empty)
    }

    /// Same structure constants (labels and name ignored).
    pub fn same_constants(&self, other: &BracketTable) -> bool {
        self.dim() == other.dim() && self.upper == other.upper
    }

    /// Matrix of `ad(x)`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &unit_vector(n, j))).collect();
        Matrix::from_columns(n, &cols).expect("square")
    }

    /// `tr(ad x ad y)` on basis pairs.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad(&unit_vector(n, i))).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                k.set(i, j, (&ads[i] * &ads[j]).trace());
            }
        }
        k
    }
}

fn index_of(labels: &[String], label: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

/// Parses a linear combination such as `-X+1/2Y^` over the given labels.
pub fn parse_combination(labels: &[String], text: &str) -> Result<Vector> {
    let mut v = zero_vector(labels.len());
    let bytes = text.as_bytes();
    let mut pos = 0;
    if text == "0" {
        return Ok(v);
    }
    while pos < bytes.len() {
        let mut sign = Rational::one();
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -sign;
                pos += 1;
            }
            _ if pos > 0 => return Err(Error::Parse(format!("expected sign in {text:?}"))),
            _ => {}
        }
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let coeff = if start == pos {
            Rational::one()
        } else {
            parse_rational(&text[start..pos])?
        };
        let rest = &text[pos..];
        let label = labels
            .iter()
            .enumerate()
            .filter(|(_, l)| rest.starts_with(l.as_str()))
            .max_by_key(|(_, l)| l.len())
            .ok_or_else(|| Error::UnknownLabel(rest.to_string()))?;
        v[label.0] += sign * coeff;
        pos += label.1.len();
    }
    Ok(v)
}

/// Jacobiator on all basis triples `i < j < k`; one violation per failing
/// triple.
pub fn check_jacobi(t: &BracketTable) -> Report {
    let n = t.dim();
    let mut report = Report::new();
    // [[e_a, e_b], e_c]
    let nested = |a: usize, b: usize, c: usize, acc: &mut Vector| {
        let inner = t.bracket_basis(a, b);
        for (m, x) in inner.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            t.accumulate_basis_bracket(acc, x, m, c);
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut acc = zero_vector(n);
                nested(i, j, k, &mut acc);
                nested(j, k, i, &mut acc);
                nested(k, i, j, &mut acc);
                if !is_zero_vector(&acc) {
                    report.push(
                        "JACOBI",
                        vec![t.labels[i].clone(), t.labels[j].clone(), t.labels[k].clone()],
                        t.show(&acc),
                    );
                }
            }
        }
    }
    report
}

/// A bracket table known to satisfy the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra(BracketTable);

impl Deref for LieAlgebra {
    type Target = BracketTable;

    fn deref(&self) -> &BracketTable {
        &self.0
    }
}

impl LieAlgebra {
    pub fn new(table: BracketTable) -> Result<Self> {
        let report = check_jacobi(&table);
        if !report.passed() {
            return Err(Error::Jacobi(report));
        }
        Ok(Self(table))
    }

    pub fn from_relations(name: &str, labels: &[&str], relations: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(BracketTable::from_relations(name, labels, relations)?)
    }

    pub fn abelian(name: &str, labels: Vec<String>) -> Self {
        Self(BracketTable::new(name, labels, std::iter::empty()).expect("abelian table"))
    }

    pub fn table(&self) -> &BracketTable {
        &self.0
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut t = self.0.clone();
        t.name = name.into();
        Self(t)
    }
}

pub fn is_subalgebra(g: &BracketTable, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(&g.bracket(&b[i], &b[j]))))
}

pub fn is_ideal(g: &BracketTable, s: &Subspace) -> bool {
    let b = s.basis();
    (0..g.dim()).all(|i| b.iter().all(|v| s.contains(&g.bracket_with_basis(i, v))))
}

pub fn is_abelian_subspace(g: &BracketTable, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| is_zero_vector(&g.bracket(&b[i], &b[j]))))
}

/// Lie algebra structure on a subalgebra, in a given basis of it.
pub fn subalgebra_in_basis(g: &LieAlgebra, basis: &[Vector], name: &str) -> Result<LieAlgebra> {
    let s = Subspace::span(g.dim(), basis);
    if s.dim() != basis.len() {
        return Err(Error::Singular);
    }
    let cols = Matrix::from_columns(g.dim(), basis)?;
    let labels: Vec<String> = basis.iter().map(|v| g.show(v)).collect();
    let mut entries = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let br = g.bracket(&basis[i], &basis[j]);
            let coords = solve(&cols, &br).ok_or(Error::NotSubalgebra)?;
            entries.push((i, j, coords));
        }
    }
    LieAlgebra::new(BracketTable::new(name, labels, entries)?)
}

/// Block-diagonal direct sum; clashing labels of the second summand get a
/// trailing `'`.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> LieAlgebra {
    let (n, m) = (g.dim(), h.dim());
    let mut labels = g.labels().to_vec();
    for l in h.labels() {
        let mut l = l.clone();
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    let mut entries = Vec::new();
    for (i, j, v) in g.nonzero_pairs() {
        let mut w = v;
        w.extend(zero_vector(m));
        entries.push((i, j, w));
    }
    for (i, j, v) in h.nonzero_pairs() {
        let mut w = zero_vector(n);
        w.extend(v);
        entries.push((n + i, n + j, w));
    }
    let name = format!("{}+{}", g.name(), h.name());
    LieAlgebra::new(BracketTable::new(name, labels, entries).expect("block table"))
        .expect("direct sum of Lie algebras")
}

/// Structure constants in the basis `f_a = sum_i p[i][a] e_i` (columns of `p`).
pub fn apply_change_of_basis(g: &LieAlgebra, p: &Matrix, labels: Option<Vec<String>>) -> Result<LieAlgebra> {
    let n = g.dim();
    if !p.is_square() || p.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: p.rows() });
    }
    let inv = p.try_inverse()?;
    let cols = p.column_vectors();
    let labels = match labels {
        Some(l) if l.len() == n => l,
        Some(l) => return Err(Error::DimensionMismatch { expected: n, found: l.len() }),
        None => cols.iter().map(|v| g.show(v)).collect(),
    };
    let mut entries = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            entries.push((a, b, inv.apply(&g.bracket(&cols[a], &cols[b]))));
        }
    }
    LieAlgebra::new(BracketTable::new(g.name(), labels, entries)?)
}

/// `phi[x, y] = [phi x, phi y]` on all basis pairs. `phi` is `dim h x dim g`.
pub fn is_homomorphism(g: &BracketTable, h: &BracketTable, phi: &Matrix) -> bool {
    if phi.rows() != h.dim() || phi.cols() != g.dim() {
        return false;
    }
    let images = phi.column_vectors();
    (0..g.dim()).all(|i| {
        (i + 1..g.dim()).all(|j| phi.apply(&g.bracket_basis(i, j)) == h.bracket(&images[i], &images[j]))
    })
}

/// The real Lie algebra underlying `g (x) C`, in the basis
/// `{e_1..e_n, ie_1..ie_n}`, with multiplication by `i` as `i_map`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealifiedComplexification {
    pub base: LieAlgebra,
    pub hat: LieAlgebra,
    pub i_map: Matrix,
}

/// Suffix marking the `I`-images of a basis: `^`, or `^2`, `^3`, ... when an
/// earlier realification already used `^`.
pub fn hat_suffix(labels: &[String]) -> String {
    let clash = |s: &str| labels.iter().any(|l| labels.contains(&format!("{l}{s}")));
    let mut suffix = "^".to_string();
    let mut k = 1;
    while clash(&suffix) {
        k += 1;
        suffix = format!("^{k}");
    }
    suffix
}

pub fn realify_complexification(g: &LieAlgebra) -> RealifiedComplexification {
    let n = g.dim();
    let mut labels = g.labels().to_vec();
    let suffix = hat_suffix(g.labels());
    labels.extend(g.labels().iter().map(|l| format!("{l}{suffix}")));
    let mut entries = Vec::new();
    for (i, j, v) in g.nonzero_pairs() {
        let mut real = v.clone();
        real.extend(zero_vector(n));
        let mut imag = zero_vector(n);
        imag.extend(v.iter().cloned());
        // [x, y], [x, iy] = i[x, y], [ix, y] = i[x, y], [ix, iy] = -[x, y]
        entries.push((i, j, real.clone()));
        entries.push((i, n + j, imag.clone()));
        entries.push((n + i, j, imag));
        entries.push((n + i, n + j, vec_neg(&real)));
    }
    let hat = LieAlgebra::new(
        BracketTable::new(format!("{}^", g.name()), labels, entries).expect("realified table"),
    )
    .expect("realification of a Lie algebra");
    let mut i_map = Matrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        i_map.set(n + k, k, Rational::one());
        i_map.set(k, n + k, -Rational::one());
    }
    RealifiedComplexification { base: g.clone(), hat, i_map }
}

impl RealifiedComplexification {
    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    /// Complex-linear extension `diag(m, m)` of an endomorphism of `g`.
    pub fn complexify(&self, m: &Matrix) -> Matrix {
        Matrix::block_diagonal(m, m)
    }

    /// `s + I s` for a subspace `s` of `g`.
    pub fn complex_span(&self, s: &Subspace) -> Subspace {
        let n = self.base_dim();
        let mut vs = Vec::new();
        for v in s.basis() {
            let mut re = v.clone();
            re.extend(zero_vector(n));
            let mut im = zero_vector(n);
            im.extend(v);
            vs.push(re);
            vs.push(im);
        }
        Subspace::span(2 * n, &vs)
    }
}

/// Lie algebra spanned by the given matrices under the commutator.
pub fn matrix_lie_algebra(name: &str, labels: Vec<String>, basis: &[Matrix]) -> Result<LieAlgebra> {
    let flat = flattened(basis)?;
    let mut entries = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let c = &(&basis[i] * &basis[j]) - &(&basis[j] * &basis[i]);
            let coords = solve(&flat, c.entries()).ok_or(Error::NotSubalgebra)?;
            entries.push((i, j, coords));
        }
    }
    LieAlgebra::new(BracketTable::new(name, labels, entries)?)
}

/// Matrix, in the given matrix basis, of a linear map on matrices.
pub fn matrix_endomorphism(basis: &[Matrix], f: impl Fn(&Matrix) -> Matrix) -> Result<Matrix> {
    let flat = flattened(basis)?;
    let cols = basis
        .iter()
        .map(|b| solve(&flat, f(b).entries()).ok_or(Error::NotSubalgebra))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(basis.len(), &cols)
}

fn flattened(basis: &[Matrix]) -> Result<Matrix> {
    let len = basis.first().map_or(0, |m| m.rows() * m.cols());
    let cols: Vec<Vector> = basis.iter().map(|m| m.entries().to_vec()).collect();
    let flat = Matrix::from_columns(len, &cols)?;
    if flat.rank() != basis.len() {
        return Err(Error::Singular);
    }
    Ok(flat)
}
