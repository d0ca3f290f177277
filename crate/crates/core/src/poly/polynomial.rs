use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::same_ring;
use super::{CoefficientRing, Monomial, PolyError, PolyRing};

/// Sparse polynomial: monomial to nonzero coefficient, in monomial order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    pub(crate) terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: impl Into<BigInt>) -> Self {
        Self::monomial(ring, Monomial::one(ring), c)
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(m, c.into());
        p
    }

    pub fn var(ring: &Arc<PolyRing>, idx: usize) -> Self {
        Self::monomial(ring, Monomial::generator(ring, idx, 1), 1)
    }

    pub fn generator(ring: &Arc<PolyRing>, name: &str) -> Result<Self, PolyError> {
        let idx = ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownGenerator {
                name: name.to_string(),
                pos: 0,
            })?;
        Ok(Self::var(ring, idx))
    }

    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn coefficients(&self) -> CoefficientRing {
        self.ring.coefficients()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Highest weighted degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms; `Some(0)` is returned for zero as well.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => Some(0),
            Some(d) => it.all(|e| e == d).then_some(d),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Whether the generator at `idx` occurs in some term.
    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(idx) > 0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        add_into(&mut self.terms, self.ring.coefficients(), m, c);
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncated(mut self, max_degree: Option<u32>) -> Self {
        if let Some(n) = max_degree {
            self.terms.retain(|m, _| m.degree() <= n);
        }
        self
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = BTreeMap::new();
        let coeffs = self.ring.coefficients();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                add_into(&mut out, coeffs, ma.mul(mb), ca * cb);
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (a, ca) in &self.terms {
            out.add_term(a.mul(m), ca * c);
        }
        out
    }

    /// `self^k` by square-and-multiply; `self^0 = 1`.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
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

    /// Evaluation homomorphism sending generator `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.num_generators() {
            return Err(PolyError::RingMismatch);
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => self.ring.clone(),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(PolyError::RingMismatch);
        }
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.checked_mul(&images[i].pow(e))?;
                }
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Re-expresses `self` in `target`, matching generators by name. Only
    /// generators that actually occur need to exist in `target`.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = self
            .ring
            .generators()
            .iter()
            .map(|g| target.index_of(&g.name))
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.num_generators()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| PolyError::UnknownGenerator {
                    name: self.ring.name_of(i).to_string(),
                    pos: 0,
                })?;
                exps[j] += e;
            }
            out.add_term(Monomial::new(target, exps), c.clone());
        }
        Ok(out)
    }

    /// Coefficientwise image in another coefficient ring over the same
    /// generator names (e.g. reduction mod 2).
    pub fn change_coefficients(&self, target: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        if target.generators() != self.ring.generators() {
            return Err(PolyError::RingMismatch);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Renders using the expression grammar understood by [`super::parse`].
    pub fn render(&self) -> String {
        self.to_string()
    }
}

pub(crate) fn add_into(
    terms: &mut BTreeMap<Monomial, BigInt>,
    coeffs: CoefficientRing,
    m: Monomial,
    c: BigInt,
) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            let c = coeffs.normalize(c);
            if !c.is_zero() {
                v.insert(c);
            }
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = coeffs.normalize(o.get() + c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.ring.coefficients(), self)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    // descending generator order reads naturally: T^2*S rather than S*T^2
    for (i, &e) in m.exponents().iter().enumerate().rev() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.name_of(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
