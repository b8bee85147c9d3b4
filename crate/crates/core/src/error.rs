use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// One failed instance of an identity, e.g. the integrability condition at a
/// pair of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Stable identifier of the law, e.g. `EQ1`, `JACOBI`, `EQ-FLAT`.
    pub law: &'static str,
    /// Basis indices (or labels) the law was evaluated at.
    pub at: Vec<String>,
    /// Nonzero residual, rendered as a combination of basis labels.
    pub residual: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at ({}): residual {}", self.law, self.at.join(", "), self.residual)
    }
}

/// Collection of violations; empty means the check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: &'static str, at: Vec<String>, residual: String) {
        self.violations.push(Violation { law, at, residual });
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn first_line(r: &Report) -> String {
    match r.first() {
        Some(v) if r.violations.len() > 1 => format!("{v} (+{} more)", r.violations.len() - 1),
        Some(v) => v.to_string(),
        None => "no witness".into(),
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("point is not on the unit circle")]
    NotOnCircle,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("structure constants are not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(String, String),
    #[error("Jacobi identity fails: {}", first_line(.0))]
    Jacobi(Report),
    #[error("J squared is not -Id")]
    NotAlmostComplex,
    #[error("E squared is not Id")]
    NotAlmostProduct,
    #[error("E is a multiple of the identity")]
    TrivialProduct,
    #[error("J and E do not anticommute")]
    NotAnticommuting,
    #[error("complex structure is not integrable: {}", first_line(.0))]
    ComplexNotIntegrable(Report),
    #[error("product structure is not integrable: {}", first_line(.0))]
    ProductNotIntegrable(Report),
    #[error("eigenspaces of E have dimensions {plus} and {minus}, expected {expected} each")]
    EigenDimension { plus: usize, minus: usize, expected: usize },
    #[error("the -1 eigenspace is not J applied to the +1 eigenspace")]
    MinusNotJPlus,
    #[error("preconditions failed: {}", .0.join("; "))]
    Preconditions(Vec<String>),
    #[error("compatibility condition for phi fails: {}", first_line(.0))]
    PhiCondition(Report),
    #[error("matched-pair law fails: {}", first_line(.0))]
    MatchedPair(Report),
    #[error("not a left-symmetric algebra: {}", first_line(.0))]
    NotLsa(Report),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("invalid probe: {0}")]
    InvalidProbe(String),
    #[error("hypercomplex law fails: {}", first_line(.0))]
    Hypercomplex(Report),
    #[error("invalid splitting: {0}")]
    InvalidSplitting(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("dimension {0} is not divisible by 4")]
    NotDivisibleByFour(usize),
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("form is not alternating")]
    NotAlternating,
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("unsupported form degree {0}")]
    FormDegree(usize),
    #[error("unknown catalog key {0:?}")]
    UnknownKey(String),
    #[error("catalog entry {0:?} requires a parameter")]
    MissingParameter(String),
    #[error("parameter excluded for {0}")]
    ExcludedParameter(String),
    #[error("connection is based on a different Lie algebra")]
    BaseMismatch,
}

impl Error {
    /// Stable identifier used in reports and CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DIM",
            Error::Singular => "SINGULAR",
            Error::NotOnCircle => "CIRCLE",
            Error::Parse(_) => "PARSE",
            Error::UnknownLabel(_) => "LABEL",
            Error::NotAntisymmetric(..) => "ANTISYM",
            Error::Jacobi(_) => "JACOBI",
            Error::NotAlmostComplex => "J-SQUARE",
            Error::NotAlmostProduct => "E-SQUARE",
            Error::TrivialProduct => "E-TRIVIAL",
            Error::NotAnticommuting => "JE-ANTI",
            Error::ComplexNotIntegrable(_) => "EQ1",
            Error::ProductNotIntegrable(_) => "EQ4",
            Error::EigenDimension { .. } => "EIGEN-DIM",
            Error::MinusNotJPlus => "EIGEN-J",
            Error::Preconditions(_) => "PRECONDITION",
            Error::PhiCondition(_) => "EQ-FI",
            Error::MatchedPair(r) => r.first().map_or("MATCHED-PAIR", |v| v.law),
            Error::NotLsa(r) => r.first().map_or("LSA", |v| v.law),
            Error::NotSubalgebra => "SUBALGEBRA",
            Error::InvalidProbe(_) => "PROBE",
            Error::Hypercomplex(r) => r.first().map_or("HYPERCOMPLEX", |v| v.law),
            Error::InvalidSplitting(_) => "SPLIT",
            Error::CapExceeded { .. } => "CAP",
            Error::NotDivisibleByFour(_) => "DIM-MOD4",
            Error::NotSymmetric => "SYMMETRIC",
            Error::NotAlternating => "ALTERNATING",
            Error::DegenerateForm => "DEGENERATE",
            Error::FormDegree(_) => "DEGREE",
            Error::UnknownKey(_) => "UNKNOWN-KEY",
            Error::MissingParameter(_) => "MISSING-PARAM",
            Error::ExcludedParameter(_) => "EXCLUDED-PARAM",
            Error::BaseMismatch => "BASE",
        }
    }

    /// Whether the error means the input itself was malformed (as opposed to a
    /// well-formed structure failing an identity).
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::Singular
                | Error::NotOnCircle
                | Error::Parse(_)
                | Error::UnknownLabel(_)
                | Error::NotAntisymmetric(..)
                | Error::NotAlmostComplex
                | Error::NotAlmostProduct
                | Error::TrivialProduct
                | Error::UnknownKey(_)
                | Error::MissingParameter(_)
                | Error::ExcludedParameter(_)
                | Error::FormDegree(_)
                | Error::NotSymmetric
                | Error::NotAlternating
                | Error::BaseMismatch
        )
    }
}
