use std::fmt;
use std::sync::Arc;

use crate::poly::{monomials_of_degree, same_ring, CoefficientRing, Monomial, PolyRing, Polynomial};

use super::reduce::{buchberger_f2, make_monic};
use super::RingError;

/// How normal forms are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Each relation is monic in its own generator, and all its other terms
    /// only involve that generator to a lower power and earlier generators.
    MonicTower,
    /// Truncated Buchberger completion over F2.
    GroebnerF2,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::MonicTower => "monic-tower",
            Strategy::GroebnerF2 => "groebner-f2",
        })
    }
}

/// A graded ring given by generators and homogeneous relations.
///
/// When `truncation` is set, every element of degree above it is zero.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    strategy: Strategy,
    truncation: Option<u32>,
    basis: Option<Vec<Polynomial>>,
}

impl RingPresentation {
    pub fn new(
        ring: Arc<PolyRing>,
        relations: Vec<Polynomial>,
        strategy: Strategy,
        truncation: Option<u32>,
    ) -> Result<Self, RingError> {
        let mut kept = Vec::with_capacity(relations.len());
        for (i, r) in relations.into_iter().enumerate() {
            if !same_ring(r.ring(), &ring) {
                return Err(RingError::Poly(crate::poly::PolyError::RingMismatch));
            }
            if !r.is_homogeneous() {
                return Err(RingError::NotHomogeneous { index: i, relation: r.to_string() });
            }
            if r.is_zero() {
                continue;
            }
            kept.push(r);
        }
        if strategy == Strategy::GroebnerF2 {
            if ring.coefficients() != CoefficientRing::F2 {
                return Err(RingError::GroebnerNeedsF2);
            }
            if truncation.is_none() {
                return Err(RingError::MissingTruncation);
            }
        }
        let pres = RingPresentation {
            ring,
            relations: kept,
            strategy,
            truncation,
            basis: None,
        };
        if strategy == Strategy::MonicTower {
            pres.check_tower()?;
        }
        Ok(pres)
    }

    /// The free polynomial ring on `ring`'s generators.
    pub fn free(ring: Arc<PolyRing>) -> Self {
        RingPresentation {
            ring,
            relations: Vec::new(),
            strategy: Strategy::MonicTower,
            truncation: None,
            basis: None,
        }
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn coefficients(&self) -> CoefficientRing {
        self.ring.coefficients()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn is_complete(&self) -> bool {
        self.basis.is_some()
    }

    /// The completed relation set, once [`complete`](Self::complete) ran.
    pub fn basis(&self) -> Option<&[Polynomial]> {
        self.basis.as_deref()
    }

    fn check_tower(&self) -> Result<(), RingError> {
        let mut owners: Vec<Option<usize>> = vec![None; self.ring.num_generators()];
        for (i, r) in self.relations.iter().enumerate() {
            let (lm, _) = r.leading_term().expect("zero relations are dropped");
            let shape_err = || RingError::NotATower {
                index: i,
                relation: r.to_string(),
            };
            let top = lm.top_generator().ok_or_else(shape_err)?;
            if lm.pure_power_of() != Some(top) {
                return Err(shape_err());
            }
            let lead_exp = lm.exponent(top);
            for (m, _) in r.terms().rev().skip(1) {
                if m.top_generator().is_some_and(|g| g > top) || m.exponent(top) >= lead_exp {
                    return Err(shape_err());
                }
            }
            if make_monic(r).is_none() {
                return Err(shape_err());
            }
            if let Some(prev) = owners[top] {
                return Err(RingError::TowerClash {
                    generator: self.ring.name_of(top).to_string(),
                    first: prev,
                    second: i,
                });
            }
            owners[top] = Some(i);
        }
        Ok(())
    }

    /// Closes the relation set under S-polynomial reduction (for
    /// `GroebnerF2`, up to the truncation degree). A `MonicTower` presentation
    /// already is its own completion.
    pub fn complete(&self) -> Result<RingPresentation, RingError> {
        if self.basis.is_some() {
            return Ok(self.clone());
        }
        let basis = match self.strategy {
            Strategy::MonicTower => {
                self.check_tower()?;
                // leading monomials are powers of distinct generators, so the
                // monic relations form a Groebner basis already
                self.relations
                    .iter()
                    .map(|r| make_monic(r).expect("checked"))
                    .map(|r| r.truncated(self.truncation))
                    .filter(|r| !r.is_zero())
                    .collect()
            }
            Strategy::GroebnerF2 => {
                let n = self.truncation.ok_or(RingError::MissingTruncation)?;
                buchberger_f2(&self.relations, n)
            }
        };
        let mut out = self.clone();
        out.basis = Some(basis);
        Ok(out)
    }

    /// Monomials of degree `degree` not divisible by any leading monomial of
    /// the completed basis. They form an additive basis of that degree piece
    /// (over F2, and over the integers for monic bases).
    pub fn standard_monomials(&self, degree: u32) -> Result<Vec<Monomial>, RingError> {
        let basis = self.basis.as_ref().ok_or(RingError::NotComplete)?;
        if self.truncation.is_some_and(|n| degree > n) {
            return Ok(Vec::new());
        }
        let leads: Vec<&Monomial> = basis.iter().filter_map(|g| g.leading_monomial()).collect();
        Ok(monomials_of_degree(&self.ring, degree)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect())
    }

    /// Highest nonzero degree, if the ring is finite.
    pub fn top_degree(&self) -> Result<Option<u32>, RingError> {
        let basis = self.basis.as_ref().ok_or(RingError::NotComplete)?;
        let bound = match self.truncation {
            Some(n) => n,
            None => {
                let mut bound = 0;
                for g in 0..self.ring.num_generators() {
                    let e = basis
                        .iter()
                        .filter_map(|b| b.leading_monomial())
                        .filter(|m| m.pure_power_of() == Some(g))
                        .map(|m| m.exponent(g))
                        .min();
                    match e {
                        Some(e) => bound += (e - 1) * self.ring.degree_of(g),
                        None => return Ok(None),
                    }
                }
                bound
            }
        };
        for d in (0..=bound).rev() {
            if !self.standard_monomials(d)?.is_empty() {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    /// Same generators and relations over a different coefficient ring
    /// (reduction mod 2 from the integers).
    pub fn reduce_mod_two(&self) -> Result<RingPresentation, RingError> {
        if self.coefficients() == CoefficientRing::F2 {
            return Ok(self.clone());
        }
        let ring = self.ring.with_coefficients(CoefficientRing::F2)?;
        let relations = self
            .relations
            .iter()
            .map(|r| r.change_coefficients(&ring))
            .collect::<Result<Vec<_>, _>>()?;
        RingPresentation::new(ring, relations, self.strategy, self.truncation)
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.coefficients())?;
        for (i, g) in self.ring.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", g.name, g.degree)?;
        }
        f.write_str("]/(")?;
        let rels = self.basis.as_deref().unwrap_or(&self.relations);
        for (i, r) in rels.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")?;
        if let Some(n) = self.truncation {
            write!(f, " truncated above degree {n}")?;
        }
        Ok(())
    }
}
