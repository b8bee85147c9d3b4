//! JSON documents for algebras, structures, products and forms.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`) so that every document
//! round-trips bit-exactly. Sparse maps keep insertion order.

use indexmap::IndexMap;
use num::Zero;
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::forms::KForm;
use crate::hypercomplex::HypercomplexStructure;
use crate::lie::{BracketTable, LieAlgebra};
use crate::linalg::{format_rational, parse_rational, Matrix, Rational, Tensor, Vector};
use crate::lsa::{BilinearProduct, MatchedPair};
use crate::structures::ComplexProductStructure;

/// Sparse vector over named basis vectors.
pub type Combination = IndexMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub i: String,
    pub j: String,
    pub out: Combination,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<EntryDoc>,
}

pub type MatrixDoc = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndomorphismDoc {
    pub basis: Vec<String>,
    pub matrix: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpsDoc {
    pub algebra: AlgebraDoc,
    #[serde(rename = "J")]
    pub j: MatrixDoc,
    #[serde(rename = "E")]
    pub e: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDoc {
    pub basis: Vec<String>,
    #[serde(default)]
    pub product: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedPairDoc {
    pub u: AlgebraDoc,
    pub v: AlgebraDoc,
    pub rho: Vec<MatrixDoc>,
    pub mu: Vec<MatrixDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionDoc {
    pub algebra: AlgebraDoc,
    #[serde(default)]
    pub gamma: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTermDoc {
    pub indices: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDoc {
    pub dim: usize,
    pub degree: usize,
    #[serde(default)]
    pub coefficients: Vec<FormTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypercomplexDoc {
    pub algebra: AlgebraDoc,
    #[serde(rename = "J1")]
    pub j1: MatrixDoc,
    #[serde(rename = "J2")]
    pub j2: MatrixDoc,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents always serialize")
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

// ---- vectors and matrices ----

pub fn combination_doc(labels: &[String], v: &[Rational]) -> Combination {
    labels
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(l, c)| (l.clone(), format_rational(c)))
        .collect()
}

pub fn combination_from_doc(labels: &[String], c: &Combination) -> Result<Vector> {
    let mut v = vec![Rational::zero(); labels.len()];
    for (l, s) in c {
        let i = index(labels, l)?;
        v[i] += parse_rational(s)?;
    }
    Ok(v)
}

fn index(labels: &[String], l: &str) -> Result<usize> {
    labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.into()))
}

pub fn matrix_doc(m: &Matrix) -> MatrixDoc {
    m.row_vectors().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

pub fn matrix_from_doc(d: &MatrixDoc) -> Result<Matrix> {
    let rows = d
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vector>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Matrix::new(0, 0, vec![]);
    }
    Matrix::from_rows(rows)
}

/// Square matrix of the given size.
pub fn square_from_doc(d: &MatrixDoc, n: usize) -> Result<Matrix> {
    let m = matrix_from_doc(d)?;
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: if m.rows() != n { m.rows() } else { m.cols() } });
    }
    Ok(m)
}

fn tensor_entries(labels: &[String], t: &Tensor, antisymmetric: bool) -> Vec<EntryDoc> {
    let n = labels.len();
    let mut out = Vec::new();
    for i in 0..n {
        let lo = if antisymmetric { i + 1 } else { 0 };
        for j in lo..n {
            let v = t.fiber(&[i, j]);
            if v.iter().any(|c| !c.is_zero()) {
                out.push(EntryDoc { i: labels[i].clone(), j: labels[j].clone(), out: combination_doc(labels, v) });
            }
        }
    }
    out
}

fn tensor_from_entries(labels: &[String], entries: &[EntryDoc]) -> Result<Tensor> {
    let n = labels.len();
    let mut t = Tensor::zeros(&[n, n, n]);
    for e in entries {
        let (i, j) = (index(labels, &e.i)?, index(labels, &e.j)?);
        let v = combination_from_doc(labels, &e.out)?;
        let prev = t.fiber(&[i, j]).to_vec();
        t.set_fiber(&[i, j], &crate::linalg::vec_add(&prev, &v));
    }
    Ok(t)
}

// ---- algebras ----

impl AlgebraDoc {
    pub fn from_table(g: &BracketTable) -> Self {
        Self {
            name: g.name().to_string(),
            dim: g.dim(),
            basis: g.labels().to_vec(),
            brackets: tensor_entries(g.labels(), &g.to_tensor(), true),
        }
    }

    /// The raw table; checks labels and antisymmetry but not Jacobi.
    pub fn to_table(&self) -> Result<BracketTable> {
        if self.basis.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: self.basis.len() });
        }
        let mut entries = Vec::new();
        for e in &self.brackets {
            let (i, j) = (index(&self.basis, &e.i)?, index(&self.basis, &e.j)?);
            entries.push((i, j, combination_from_doc(&self.basis, &e.out)?));
        }
        BracketTable::new(self.name.clone(), self.basis.clone(), entries)
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        LieAlgebra::new(self.to_table()?)
    }
}

impl EndomorphismDoc {
    pub fn new(labels: &[String], m: &Matrix) -> Self {
        Self { basis: labels.to_vec(), matrix: matrix_doc(m) }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        square_from_doc(&self.matrix, self.basis.len())
    }
}

impl CpsDoc {
    pub fn new(g: &BracketTable, j: &Matrix, e: &Matrix) -> Self {
        Self { algebra: AlgebraDoc::from_table(g), j: matrix_doc(j), e: matrix_doc(e) }
    }

    pub fn from_cps(cps: &ComplexProductStructure) -> Self {
        Self::new(cps.algebra(), cps.j(), cps.e())
    }

    /// Parses the pieces without validating the structure.
    pub fn parts(&self) -> Result<(LieAlgebra, Matrix, Matrix)> {
        let g = self.algebra.to_algebra()?;
        let n = g.dim();
        Ok((g, square_from_doc(&self.j, n)?, square_from_doc(&self.e, n)?))
    }

    pub fn to_cps(&self) -> Result<ComplexProductStructure> {
        let (g, j, e) = self.parts()?;
        crate::structures::validate_cps(&g, &j, &e)
    }
}

impl ProductDoc {
    pub fn from_product(p: &BilinearProduct) -> Self {
        Self { basis: p.labels().to_vec(), product: tensor_entries(p.labels(), p.tensor(), false) }
    }

    pub fn to_product(&self) -> Result<BilinearProduct> {
        BilinearProduct::new(self.basis.clone(), tensor_from_entries(&self.basis, &self.product)?)
    }
}

impl MatchedPairDoc {
    pub fn from_pair(mp: &MatchedPair) -> Self {
        Self {
            u: AlgebraDoc::from_table(mp.u()),
            v: AlgebraDoc::from_table(mp.v()),
            rho: mp.rho().iter().map(matrix_doc).collect(),
            mu: mp.mu().iter().map(matrix_doc).collect(),
        }
    }

    pub fn to_pair(&self) -> Result<MatchedPair> {
        let (u, v) = (self.u.to_algebra()?, self.v.to_algebra()?);
        if self.rho.len() != u.dim() {
            return Err(Error::DimensionMismatch { expected: u.dim(), found: self.rho.len() });
        }
        if self.mu.len() != v.dim() {
            return Err(Error::DimensionMismatch { expected: v.dim(), found: self.mu.len() });
        }
        let rho = self.rho.iter().map(|m| square_from_doc(m, v.dim())).collect::<Result<Vec<_>>>()?;
        let mu = self.mu.iter().map(|m| square_from_doc(m, u.dim())).collect::<Result<Vec<_>>>()?;
        MatchedPair::new(u, v, rho, mu)
    }
}

impl ConnectionDoc {
    pub fn from_connection(c: &Connection) -> Self {
        Self { algebra: AlgebraDoc::from_table(c.base()), gamma: tensor_entries(c.base().labels(), c.gamma(), false) }
    }

    pub fn to_connection(&self) -> Result<Connection> {
        let g = self.algebra.to_algebra()?;
        let t = tensor_from_entries(g.labels(), &self.gamma)?;
        Connection::new(g, t)
    }
}

impl FormDoc {
    pub fn from_form(f: &KForm) -> Self {
        Self {
            dim: f.dim(),
            degree: f.degree(),
            coefficients: f
                .coefficients()
                .iter()
                .map(|(idx, v)| FormTermDoc { indices: idx.clone(), value: format_rational(v) })
                .collect(),
        }
    }

    pub fn to_form(&self) -> Result<KForm> {
        let entries = self
            .coefficients
            .iter()
            .map(|t| Ok((t.indices.clone(), parse_rational(&t.value)?)))
            .collect::<Result<Vec<_>>>()?;
        KForm::from_entries(self.dim, self.degree, &entries)
    }
}

impl HypercomplexDoc {
    pub fn from_structure(h: &HypercomplexStructure) -> Self {
        Self { algebra: AlgebraDoc::from_table(h.algebra()), j1: matrix_doc(h.j1()), j2: matrix_doc(h.j2()) }
    }

    pub fn to_structure(&self) -> Result<HypercomplexStructure> {
        let g = self.algebra.to_algebra()?;
        let n = g.dim();
        crate::hypercomplex::check_hypercomplex(&g, &square_from_doc(&self.j1, n)?, &square_from_doc(&self.j2, n)?)
    }
}
