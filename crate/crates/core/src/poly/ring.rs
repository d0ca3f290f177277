use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::PolyError;

/// Coefficient ring of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    F2,
    Integers,
}

impl CoefficientRing {
    /// Brings an integer into canonical form for this ring.
    pub fn normalize(self, c: BigInt) -> BigInt {
        match self {
            CoefficientRing::Integers => c,
            CoefficientRing::F2 => {
                if (&c % 2u32).is_zero() {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CoefficientRing::F2 => "f2",
            CoefficientRing::Integers => "z",
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoefficientRing::F2 => "F2",
            CoefficientRing::Integers => "Z",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }
}

/// A graded commutative polynomial ring: coefficients plus ordered, graded
/// generators. Later generators are larger in the monomial order.
///
/// Commutativity is global. Over `Integers` every generator must sit in even
/// degree so that graded-commutative signs never arise; over `F2` signs are
/// invisible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    coeffs: CoefficientRing,
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PolyRing {
    pub fn new(coeffs: CoefficientRing, gens: Vec<Generator>) -> Result<Arc<Self>, PolyError> {
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if !is_valid_name(&g.name) {
                return Err(PolyError::InvalidGeneratorName(g.name.clone()));
            }
            if g.degree == 0 {
                return Err(PolyError::ZeroDegree(g.name.clone()));
            }
            if coeffs == CoefficientRing::Integers && g.degree % 2 == 1 {
                return Err(PolyError::OddDegreeOverIntegers {
                    name: g.name.clone(),
                    degree: g.degree,
                });
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(PolyError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(PolyRing {
            coeffs,
            gens,
            index,
        }))
    }

    pub fn coefficients(&self) -> CoefficientRing {
        self.coeffs
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn degree_of(&self, idx: usize) -> u32 {
        self.gens[idx].degree
    }

    pub fn name_of(&self, idx: usize) -> &str {
        &self.gens[idx].name
    }

    /// The same generators over a different coefficient ring.
    pub fn with_coefficients(&self, coeffs: CoefficientRing) -> Result<Arc<Self>, PolyError> {
        PolyRing::new(coeffs, self.gens.clone())
    }

    /// The generators of `self` followed by `extra`.
    pub fn extend(&self, extra: &[Generator]) -> Result<Arc<Self>, PolyError> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        PolyRing::new(self.coeffs, gens)
    }
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
