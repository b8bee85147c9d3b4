//! Shared fixtures for the benchmarks.

use liecps::catalog::{get_structure, Params};
use liecps::structures::ComplexProductStructure;
use liecps::CirclePoint;

pub fn gl2r() -> ComplexProductStructure {
    get_structure("gl2R", "JE", &Params::none()).expect("catalog")
}

pub fn a4(t: i64) -> ComplexProductStructure {
    let p = Params::at(CirclePoint::from_parameter(&liecps::Rational::from_integer(t.into())));
    get_structure("A4", "E_theta", &p).expect("catalog")
}

/// `gl(2n, R)`, of dimension `4 n^2`.
pub fn gl2n(n: usize) -> ComplexProductStructure {
    get_structure("gl2nR", "JE", &Params::with_n(n)).expect("catalog")
}
