//! Exact sparse multivariate polynomials over F2 and the integers.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{monomials_of_degree, Monomial};
pub use parse::parse;
pub use polynomial::Polynomial;
pub use ring::{CoefficientRing, Generator, PolyRing};

pub(crate) use polynomial::add_into;
pub(crate) use ring::same_ring;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    ZeroDegree(String),
    #[error("generator `{name}` has odd degree {degree}; odd degrees are only allowed over F2")]
    OddDegreeOverIntegers { name: String, degree: u32 },
    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown generator `{name}` at offset {pos}")]
    UnknownGenerator { name: String, pos: usize },
}
