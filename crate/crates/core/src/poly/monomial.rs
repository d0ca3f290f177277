use std::cmp::Ordering;

use super::PolyRing;

/// Exponent vector with its cached weighted degree.
///
/// Ordered graded-lexicographically: first by weighted degree, then by the
/// exponent of the last generator, then the one before it, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(ring: &PolyRing) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; ring.num_generators()].into_boxed_slice(),
        }
    }

    pub fn new(ring: &PolyRing, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), ring.num_generators(), "exponent vector length");
        let degree = exps
            .iter()
            .enumerate()
            .map(|(i, &e)| e * ring.degree_of(i))
            .sum();
        Monomial {
            degree,
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn generator(ring: &PolyRing, idx: usize, power: u32) -> Self {
        let mut exps = vec![0; ring.num_generators()];
        exps[idx] = power;
        Monomial {
            degree: power * ring.degree_of(idx),
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            degree: other.degree - self.degree,
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial, ring: &PolyRing) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(ring, exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single generator this monomial is a power of.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Largest generator index with a positive exponent.
    pub fn top_generator(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of weighted degree exactly `degree`.
pub fn monomials_of_degree(ring: &PolyRing, degree: u32) -> Vec<Monomial> {
    fn rec(ring: &PolyRing, idx: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == ring.num_generators() {
            if remaining == 0 {
                out.push(Monomial::new(ring, cur.clone()));
            }
            return;
        }
        let d = ring.degree_of(idx);
        let mut e = 0;
        while e * d <= remaining {
            cur[idx] = e;
            rec(ring, idx + 1, remaining - e * d, cur, out);
            e += 1;
        }
        cur[idx] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; ring.num_generators()];
    rec(ring, 0, degree, &mut cur, &mut out);
    out.sort();
    out
}
