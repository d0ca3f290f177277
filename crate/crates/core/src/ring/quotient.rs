use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::{self, same_ring, CoefficientRing, Monomial, PolyRing, Polynomial};

use super::linalg::{BitVec, Span};
use super::reduce::reduce;
use super::{RingError, RingPresentation};

/// A completed presentation, shared by all of its elements.
#[derive(Clone)]
pub struct Ring {
    pres: Arc<RingPresentation>,
}

impl Ring {
    pub fn new(pres: RingPresentation) -> Result<Ring, RingError> {
        Ok(Ring {
            pres: Arc::new(pres.complete()?),
        })
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.pres
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        self.pres.poly_ring()
    }

    pub fn coefficients(&self) -> CoefficientRing {
        self.pres.coefficients()
    }

    pub fn truncation(&self) -> Option<u32> {
        self.pres.truncation()
    }

    fn basis(&self) -> &[Polynomial] {
        self.pres.basis().expect("Ring holds a completed presentation")
    }

    pub(crate) fn reduce(&self, p: &Polynomial) -> Polynomial {
        reduce(p, self.basis(), self.pres.truncation())
    }

    /// Canonical representative of `p` in this ring. Polynomials from another
    /// ring are matched by generator name.
    pub fn normal_form(&self, p: &Polynomial) -> Result<RingElement, RingError> {
        let p = if same_ring(p.ring(), self.poly_ring()) {
            p.clone()
        } else {
            p.embed(self.poly_ring())?
        };
        Ok(self.wrap(self.reduce(&p)))
    }

    fn wrap(&self, value: Polynomial) -> RingElement {
        RingElement {
            ring: self.clone(),
            value,
        }
    }

    pub fn parse(&self, text: &str) -> Result<RingElement, RingError> {
        let p = poly::parse(text, self.poly_ring())?;
        Ok(self.wrap(self.reduce(&p)))
    }

    pub fn generator(&self, name: &str) -> Result<RingElement, RingError> {
        let p = Polynomial::generator(self.poly_ring(), name)?;
        Ok(self.wrap(self.reduce(&p)))
    }

    pub fn zero(&self) -> RingElement {
        self.wrap(Polynomial::zero(self.poly_ring()))
    }

    pub fn one(&self) -> RingElement {
        self.wrap(self.reduce(&Polynomial::one(self.poly_ring())))
    }

    pub fn standard_monomials(&self, degree: u32) -> Vec<Monomial> {
        self.pres.standard_monomials(degree).expect("completed")
    }

    /// Rank of the degree-`degree` piece.
    pub fn dimension(&self, degree: u32) -> usize {
        self.standard_monomials(degree).len()
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.pres.top_degree().expect("completed")
    }

    pub fn same_as(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres)
            || (same_ring(self.poly_ring(), other.poly_ring())
                && self.basis() == other.basis()
                && self.truncation() == other.truncation())
    }

    /// Decides whether `target = factor * q` for some `q`, by linear algebra
    /// over F2 on the degree pieces involved.
    pub fn is_multiple_of(&self, target: &RingElement, factor: &RingElement) -> Result<bool, RingError> {
        if self.coefficients() != CoefficientRing::F2 {
            return Err(RingError::NeedsF2("divisibility"));
        }
        let d = target
            .value
            .homogeneous_degree()
            .ok_or(RingError::NotHomogeneousElement)?;
        let f = factor
            .value
            .homogeneous_degree()
            .ok_or(RingError::NotHomogeneousElement)?;
        if target.is_zero() {
            return Ok(true);
        }
        if factor.is_zero() || d < f {
            return Ok(false);
        }
        let rows = self.standard_monomials(d);
        let index: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let to_bits = |p: &Polynomial| {
            let mut v = BitVec::zeros(rows.len());
            for (m, _) in p.terms() {
                v.set(index[m]);
            }
            v
        };
        let mut span = Span::default();
        for m in self.standard_monomials(d - f) {
            let prod = self.reduce(&factor.value.mul_monomial(&m, &BigInt::one()));
            span.insert(to_bits(&prod));
        }
        Ok(span.contains(&to_bits(&target.value)))
    }

    /// The ring given by those declared relations that do not mention
    /// `generator`.
    pub fn subring_without(&self, generator: &str) -> Result<Ring, RingError> {
        let g = self.generator_index(generator)?;
        let relations = self
            .pres
            .relations()
            .iter()
            .filter(|r| !r.involves(g))
            .cloned()
            .collect();
        Ring::new(RingPresentation::new(
            self.poly_ring().clone(),
            relations,
            self.pres.strategy(),
            self.pres.truncation(),
        )?)
    }

    fn generator_index(&self, name: &str) -> Result<usize, RingError> {
        self.poly_ring()
            .index_of(name)
            .ok_or_else(|| RingError::Poly(poly::PolyError::UnknownGenerator { name: name.to_string(), pos: 0 }))
    }

    /// Checks degreewise, up to `max_degree`, that this ring is free over
    /// [`subring_without(generator)`](Self::subring_without) with basis
    /// `1, g, ..., g^max_power`, by comparing ranks.
    pub fn verify_free_basis(&self, generator: &str, max_power: u32, max_degree: u32) -> Result<(), RingError> {
        let g = self.generator_index(generator)?;
        let sub = self.subring_without(generator)?;
        let gdeg = self.poly_ring().degree_of(g);
        let sub_dim = |deg: u32| {
            sub.standard_monomials(deg)
                .iter()
                .filter(|m| m.exponent(g) == 0)
                .count()
        };
        for d in 0..=max_degree {
            let expected: usize = (0..=max_power)
                .filter(|j| j * gdeg <= d)
                .map(|j| sub_dim(d - j * gdeg))
                .sum();
            let found = self.dimension(d);
            if expected != found {
                return Err(RingError::NotFree {
                    generator: generator.to_string(),
                    degree: d,
                    expected,
                    found,
                });
            }
        }
        Ok(())
    }

    /// Coefficients `c_0..c_max_power`, free of `generator`, with
    /// `e = sum c_j * generator^j`. The freeness of the module is checked up to
    /// the truncation degree, or up to the degree of `e` for infinite rings.
    pub fn module_coordinates(
        &self,
        e: &RingElement,
        generator: &str,
        max_power: u32,
    ) -> Result<Vec<Polynomial>, RingError> {
        let g = self.generator_index(generator)?;
        let check_to = self
            .truncation()
            .or_else(|| self.top_degree())
            .unwrap_or_else(|| e.degree().unwrap_or(0));
        self.verify_free_basis(generator, max_power, check_to)?;
        let sub = self.subring_without(generator)?;
        let ring = self.poly_ring();
        let mut coords = vec![Polynomial::zero(ring); max_power as usize + 1];
        for (m, c) in e.value.terms() {
            let j = m.exponent(g);
            if j > max_power {
                return Err(RingError::NotExpressible {
                    generator: generator.to_string(),
                    max_power,
                });
            }
            let mut exps = m.exponents().to_vec();
            exps[g] = 0;
            coords[j as usize].add_term(Monomial::new(ring, exps), c.clone());
        }
        Ok(coords.into_iter().map(|c| sub.reduce(&c)).collect())
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.pres)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.pres, f)
    }
}

/// An element of a [`Ring`], stored in normal form.
#[derive(Clone)]
pub struct RingElement {
    ring: Ring,
    value: Polynomial,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The normal-form representative.
    pub fn polynomial(&self) -> &Polynomial {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.value.degree()
    }

    fn check(&self, other: &RingElement) -> Result<(), RingError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(RingError::Poly(poly::PolyError::RingMismatch))
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check(other)?;
        Ok(self.ring.wrap(self.ring.reduce(&(&self.value + &other.value))))
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check(other)?;
        Ok(self.ring.wrap(self.ring.reduce(&(&self.value - &other.value))))
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check(other)?;
        Ok(self.ring.wrap(self.ring.reduce(&(&self.value * &other.value))))
    }

    /// Square-and-multiply with reduction after every product.
    pub fn pow(&self, k: u32) -> RingElement {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.value == other.value
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({})", self.value)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

impl<'a> Add<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn add(self, rhs: &'a RingElement) -> RingElement {
        self.checked_add(rhs).expect("elements of different rings")
    }
}

impl<'a> Sub<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &'a RingElement) -> RingElement {
        self.checked_sub(rhs).expect("elements of different rings")
    }
}

impl<'a> Mul<&'a RingElement> for &'a RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &'a RingElement) -> RingElement {
        self.checked_mul(rhs).expect("elements of different rings")
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.ring.wrap(-&self.value)
    }
}
