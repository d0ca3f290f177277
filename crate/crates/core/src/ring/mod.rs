//! Presented graded rings and canonical normal forms.
//!
//! Two strategies: relations forming a monic tower are reduced with the
//! division algorithm, over F2 or the integers; everything else must be over
//! F2 and is completed with a degree-truncated Buchberger algorithm. The
//! monomial order is graded-lex with later generators larger, so relations
//! that are monic in a newly adjoined fibre class lead with that class.

mod linalg;
mod presentation;
mod quotient;
mod reduce;

pub use presentation::{RingPresentation, Strategy};
pub use quotient::{Ring, RingElement};

use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("relation #{index} is not homogeneous: {relation}")]
    NotHomogeneous { index: usize, relation: String },
    #[error("relation #{index} is not monic in a single new generator: {relation}")]
    NotATower { index: usize, relation: String },
    #[error("relations #{first} and #{second} are both monic in `{generator}`")]
    TowerClash { generator: String, first: usize, second: usize },
    #[error("Groebner completion is only implemented over F2")]
    GroebnerNeedsF2,
    #[error("a truncation degree is required for Groebner completion")]
    MissingTruncation,
    #[error("presentation has not been completed")]
    NotComplete,
    #[error("{0} is only implemented over F2")]
    NeedsF2(&'static str),
    #[error("element is not homogeneous")]
    NotHomogeneousElement,
    #[error("not free over the subring without `{generator}` in degree {degree}: expected rank {expected}, found {found}")]
    NotFree {
        generator: String,
        degree: u32,
        expected: usize,
        found: usize,
    },
    #[error("element has `{generator}`-degree above {max_power}")]
    NotExpressible { generator: String, max_power: u32 },
}
