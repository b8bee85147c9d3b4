//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational`; there is no tolerance anywhere and
//! equality is structural. Subspaces are kept in reduced row-echelon form so two
//! equal subspaces always have identical representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` in lowest terms. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` (base 10, optional leading `-`, no whitespace).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Canonical `"p/q"` / `"p"` rendering.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], s: &Rational) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn vec_neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Rational], s: &Rational, v: &[Rational]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s * x;
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Renders `v` as a combination of `labels`, e.g. `A-D` or `1/2W+1/2Z`.
///
/// Compound labels such as `B+C` are parenthesized unless they stand alone
/// with coefficient one.
pub fn format_combination(labels: &[String], v: &[Rational]) -> String {
    let terms = v.iter().filter(|c| !c.is_zero()).count();
    let mut out = String::new();
    for (label, c) in labels.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !abs.is_one() {
            out.push_str(&format_rational(&abs));
        }
        let compound = label.contains(['+', '-', ' ']);
        if compound && (terms > 1 || !c.is_one()) {
            out.push('(');
            out.push_str(label);
            out.push(')');
        } else {
            out.push_str(label);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Dense row-major rational matrix. Acts on column vectors (`M v`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = s.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose `k`-th column is `cols[k]`.
    pub fn from_columns(n_rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(n_rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            if v.len() != n_rows {
                return Err(Error::DimensionMismatch {
                    expected: n_rows,
                    found: v.len(),
                });
            }
            for (r, x) in v.iter().enumerate() {
                m.data[r * m.cols + c] = x.clone();
            }
        }
        Ok(m)
    }

    /// Convenience for integer literals; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
            .expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && *self == -&self.transpose()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let (red, _) = rref(&aug);
        for i in 0..n {
            if !red.get(i, i).is_one() {
                return None;
            }
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    pub fn try_inverse(&self) -> Result<Matrix> {
        self.inverse().ok_or(Error::Singular)
    }

    pub fn block_diagonal(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                m.set(r, c, a.get(r, c).clone());
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                m.set(a.rows + r, a.cols + c, b.get(r, c).clone());
            }
        }
        m
    }

    /// Sub-block `rows × cols`.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self * other == other * self
    }

    pub fn anticommutes_with(&self, other: &Matrix) -> bool {
        self * other == -&(other * self)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_add(&self.data, &rhs.data),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_sub(&self.data, &rhs.data),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_neg(&self.data),
        }
    }
}

/// Reduced row-echelon form and rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_row = 0;
    for c in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !a.get(r, c).is_zero()) else {
            continue;
        };
        if p != pivot_row {
            for k in 0..cols {
                a.data.swap(p * cols + k, pivot_row * cols + k);
            }
        }
        let inv = a.get(pivot_row, c).recip();
        for k in c..cols {
            let v = a.get(pivot_row, k) * &inv;
            a.set(pivot_row, k, v);
        }
        let pivot: Vector = a.row(pivot_row).to_vec();
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            let f = a.get(r, c).clone();
            if f.is_zero() {
                continue;
            }
            for k in c..cols {
                if !pivot[k].is_zero() {
                    let v = a.get(r, k) - &f * &pivot[k];
                    a.set(r, k, v);
                }
            }
        }
        pivot_row += 1;
    }
    (a, pivot_row)
}

/// Some `x` with `m x = t`, if the system is consistent.
pub fn solve(m: &Matrix, t: &[Rational]) -> Option<Vector> {
    assert_eq!(t.len(), m.rows);
    let mut cols = m.column_vectors();
    cols.push(t.to_vec());
    let aug = Matrix::from_columns(m.rows, &cols).expect("consistent shapes");
    let (red, rank) = rref(&aug);
    let mut x = zero_vector(m.cols);
    for r in 0..rank {
        let p = (0..=m.cols).find(|&c| !red.get(r, c).is_zero()).expect("pivot row");
        if p == m.cols {
            return None;
        }
        x[p] = red.get(r, m.cols).clone();
    }
    Some(x)
}

/// `{v : m v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (red, rank) = rref(m);
    let cols = m.cols;
    let pivots: Vec<usize> = (0..rank)
        .map(|r| (0..cols).find(|&c| !red.get(r, c).is_zero()).expect("pivot row"))
        .collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = unit_vector(cols, free);
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red.get(r, free);
        }
        basis.push(v);
    }
    Subspace::span(cols, &basis)
}

/// `ker(m - lam Id)`.
pub fn eigenspace(m: &Matrix, lam: &Rational) -> Subspace {
    assert!(m.is_square(), "eigenspace of a non-square matrix");
    kernel(&(m - &Matrix::scalar(m.rows, lam)))
}

/// Linear subspace of `Q^n`, stored as the nonzero rows of its RREF.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .row_vectors()
            .iter()
            .map(|r| format!("({})", r.iter().map(format_rational).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "span{{{}}} in Q^{}", rows.join(", "), self.ambient)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
        assert_eq!(m.cols, ambient, "vector length differs from ambient dimension");
        let (red, rank) = rref(&m);
        Self {
            ambient,
            basis: red.block(0..rank, 0..ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Canonical basis (rows of the RREF).
    pub fn basis(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    fn pivots(&self) -> Vec<usize> {
        (0..self.basis.rows)
            .map(|r| {
                (0..self.ambient)
                    .find(|&c| !self.basis.get(r, c).is_zero())
                    .expect("nonzero basis row")
            })
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vector = self.pivots().iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = zero_vector(self.ambient);
        for (r, c) in coords.iter().enumerate() {
            axpy(&mut rebuilt, c, self.basis.row(r));
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.row_vectors().iter().all(|v| self.contains(v))
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let mut vs = self.basis();
        vs.extend(other.basis());
        Ok(Subspace::span(self.ambient, &vs))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let (a, b) = (self.basis(), other.basis());
        if a.is_empty() || b.is_empty() {
            return Ok(Subspace::zero(self.ambient));
        }
        // Solve sum x_i a_i - sum y_j b_j = 0.
        let mut cols = a.clone();
        cols.extend(b.iter().map(|v| vec_neg(v)));
        let system = Matrix::from_columns(self.ambient, &cols)?;
        let sols = kernel(&system);
        let vectors: Vec<Vector> = sols
            .basis()
            .iter()
            .map(|s| {
                let mut v = zero_vector(self.ambient);
                for (x, ai) in s.iter().zip(&a) {
                    axpy(&mut v, x, ai);
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols, self.ambient);
        let vs: Vec<Vector> = self.basis().iter().map(|v| m.apply(v)).collect();
        Subspace::span(m.rows, &vs)
    }

    /// Linear forms (as coefficient vectors) vanishing on the subspace.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        kernel(&self.basis)
    }

    pub fn is_stable_under(&self, m: &Matrix) -> bool {
        self.basis().iter().all(|v| self.contains(&m.apply(v)))
    }
}

/// Rational point `(c, s)` on the unit circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirclePoint {
    c: Rational,
    s: Rational,
}

impl CirclePoint {
    pub fn new(c: Rational, s: Rational) -> Result<Self> {
        if &c * &c + &s * &s != Rational::one() {
            return Err(Error::NotOnCircle);
        }
        Ok(Self { c, s })
    }

    /// Stereographic parametrisation `((1-t^2)/(1+t^2), 2t/(1+t^2))`.
    pub fn from_parameter(t: &Rational) -> Self {
        let t2 = t * t;
        let den = Rational::one() + &t2;
        Self {
            c: (Rational::one() - &t2) / &den,
            s: (q(2) * t) / den,
        }
    }

    /// `(1, 0)`, angle zero.
    pub fn zero_angle() -> Self {
        Self {
            c: Rational::one(),
            s: Rational::zero(),
        }
    }

    /// `(-1, 0)`, the one point the stereographic parametrisation misses.
    pub fn half_turn() -> Self {
        Self {
            c: -Rational::one(),
            s: Rational::zero(),
        }
    }

    /// `(0, 1)`.
    pub fn quarter_turn() -> Self {
        Self {
            c: Rational::zero(),
            s: Rational::one(),
        }
    }

    pub fn cos(&self) -> &Rational {
        &self.c
    }

    pub fn sin(&self) -> &Rational {
        &self.s
    }

    /// Point at twice the angle: `(c^2 - s^2, 2cs)`.
    pub fn double(&self) -> CirclePoint {
        CirclePoint {
            c: &self.c * &self.c - &self.s * &self.s,
            s: q(2) * &self.c * &self.s,
        }
    }

    pub fn is_half_turn(&self) -> bool {
        *self == Self::half_turn()
    }
}

/// Circle circle_point helper matching the free-function form.
pub fn circle_point(t: &Rational) -> CirclePoint {
    CirclePoint::from_parameter(t)
}

/// Dense rational tensor with arbitrary shape, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Rational>,
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{:?} with {} nonzero entries", self.shape, self.nonzero_count())
    }
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        Self {
            shape: shape.to_vec(),
            data: vec![Rational::zero(); shape.iter().product()],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.shape.len(), "tensor index rank mismatch");
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| {
            assert!(i < n, "tensor index out of range");
            acc * n + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Rational) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    /// The vector obtained by fixing every index but the last.
    pub fn fiber(&self, prefix: &[usize]) -> &[Rational] {
        assert_eq!(prefix.len() + 1, self.shape.len());
        let last = *self.shape.last().expect("rank >= 1");
        let mut idx = prefix.to_vec();
        idx.push(0);
        let start = self.offset(&idx);
        &self.data[start..start + last]
    }

    pub fn set_fiber(&mut self, prefix: &[usize], v: &[Rational]) {
        let last = *self.shape.last().expect("rank >= 1");
        assert_eq!(v.len(), last);
        let mut idx = prefix.to_vec();
        idx.push(0);
        let start = self.offset(&idx);
        self.data[start..start + last].clone_from_slice(v);
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// All multi-indices with nonzero entries, in row-major order.
    pub fn nonzero_indices(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (flat, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut idx = vec![0; self.shape.len()];
            let mut rem = flat;
            for (slot, &n) in idx.iter_mut().zip(&self.shape).rev() {
                *slot = rem % n;
                rem /= n;
            }
            out.push(idx);
        }
        out
    }
}

impl Add for &Tensor {
    type Output = Tensor;

    fn add(self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.shape, rhs.shape);
        Tensor {
            shape: self.shape.clone(),
            data: vec_add(&self.data, &rhs.data),
        }
    }
}

impl Sub for &Tensor {
    type Output = Tensor;

    fn sub(self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.shape, rhs.shape);
        Tensor {
            shape: self.shape.clone(),
            data: vec_sub(&self.data, &rhs.data),
        }
    }
}

/// `sum_ij x_i y_j t[i][j]` for a tensor of shape `[n, n, m]`.
pub fn bilinear_eval(t: &Tensor, x: &[Rational], y: &[Rational]) -> Vector {
    let shape = t.shape();
    assert!(shape.len() == 3 && x.len() == shape[0] && y.len() == shape[1]);
    let mut out = zero_vector(shape[2]);
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            axpy(&mut out, &(xi * yj), t.fiber(&[i, j]));
        }
    }
    out
}

/// A bilinear map `V x V -> V` rewritten in the basis given by the columns of
/// the invertible matrix `p`.
pub fn bilinear_in_basis(t: &Tensor, p: &Matrix) -> Result<Tensor> {
    let n = p.rows();
    if t.shape() != [n, n, n] || !p.is_square() {
        return Err(Error::DimensionMismatch { expected: n, found: t.shape()[0] });
    }
    let inv = p.try_inverse()?;
    let cols = p.column_vectors();
    let mut out = Tensor::zeros(&[n, n, n]);
    for a in 0..n {
        for b in 0..n {
            out.set_fiber(&[a, b], &inv.apply(&bilinear_eval(t, &cols[a], &cols[b])));
        }
    }
    Ok(out)
}
