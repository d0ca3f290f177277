use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use rand_distr::StandardNormal;

use super::Vector;
use crate::bundles::Field;

/// An element of R, C or H, stored as a quaternion `a + bi + cj + dk` whose
/// unused components are zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KScalar {
    field: Field,
    c: [f64; 4],
}

impl KScalar {
    /// From the first `d` components; the rest must be absent.
    pub fn new(field: Field, comps: &[f64]) -> Self {
        let d = field.dim() as usize;
        assert_eq!(comps.len(), d, "a {field} scalar has {d} components");
        let mut c = [0.0; 4];
        c[..d].copy_from_slice(comps);
        KScalar { field, c }
    }

    pub fn real(field: Field, x: f64) -> Self {
        KScalar { field, c: [x, 0.0, 0.0, 0.0] }
    }

    pub fn zero(field: Field) -> Self {
        Self::real(field, 0.0)
    }

    pub fn one(field: Field) -> Self {
        Self::real(field, 1.0)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn components(&self) -> &[f64] {
        &self.c[..self.field.dim() as usize]
    }

    pub fn re(&self) -> f64 {
        self.c[0]
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.c;
        KScalar { field: self.field, c: [a, -b, -c, -d] }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c.iter().map(|x| x * x).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        KScalar { field: self.field, c: self.c.map(|x| x * s) }
    }

    pub fn inverse(&self) -> Self {
        self.conj().scale(1.0 / self.norm_sqr())
    }

    pub fn random_unit<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Self {
        loop {
            let comps: Vec<f64> = (0..field.dim()).map(|_| rng.sample(StandardNormal)).collect();
            let q = KScalar::new(field, &comps);
            let n = q.norm();
            if n > 1e-6 {
                return q.scale(1.0 / n);
            }
        }
    }

    fn wider(a: Field, b: Field) -> Field {
        if a.dim() >= b.dim() {
            a
        } else {
            b
        }
    }
}

impl Add for KScalar {
    type Output = KScalar;
    fn add(self, o: KScalar) -> KScalar {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(o.c) {
            *x += y;
        }
        KScalar { field: Self::wider(self.field, o.field), c }
    }
}

impl Sub for KScalar {
    type Output = KScalar;
    fn sub(self, o: KScalar) -> KScalar {
        self + (-o)
    }
}

impl Neg for KScalar {
    type Output = KScalar;
    fn neg(self) -> KScalar {
        self.scale(-1.0)
    }
}

impl Mul for KScalar {
    type Output = KScalar;
    fn mul(self, o: KScalar) -> KScalar {
        let [a1, b1, c1, d1] = self.c;
        let [a2, b2, c2, d2] = o.c;
        KScalar {
            field: Self::wider(self.field, o.field),
            c: [
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ],
        }
    }
}

/// A vector in `K^{n+1}`, with scalars acting on the left.
#[derive(Debug, Clone, PartialEq)]
pub struct KVector {
    field: Field,
    entries: Vec<KScalar>,
}

impl KVector {
    pub fn new(field: Field, entries: Vec<KScalar>) -> Self {
        let entries = entries
            .into_iter()
            .map(|e| KScalar { field, c: e.c })
            .collect();
        KVector { field, entries }
    }

    /// From the underlying real vector of length `d(n+1)`.
    pub fn from_real(field: Field, v: &Vector) -> Self {
        let d = field.dim() as usize;
        assert_eq!(v.len() % d, 0);
        let entries = v
            .as_slice()
            .chunks(d)
            .map(|c| KScalar::new(field, c))
            .collect();
        KVector { field, entries }
    }

    pub fn to_real(&self) -> Vector {
        let d = self.field.dim() as usize;
        Vector::from_iterator(
            self.entries.len() * d,
            self.entries.iter().flat_map(|e| e.c[..d].to_vec()),
        )
    }

    pub fn basis(field: Field, len: usize, i: usize) -> Self {
        let mut entries = vec![KScalar::zero(field); len];
        entries[i] = KScalar::one(field);
        KVector { field, entries }
    }

    pub fn random_unit<R: Rng + ?Sized>(field: Field, len: usize, rng: &mut R) -> Self {
        let d = field.dim() as usize;
        loop {
            let v = Vector::from_iterator(len * d, (0..len * d).map(|_| rng.sample(StandardNormal)));
            let n = v.norm();
            if n > 1e-6 {
                return KVector::from_real(field, &(v / n));
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[KScalar] {
        &self.entries
    }

    /// `<u, v> = sum u_i conj(v_i)`, linear on the left in `u`.
    pub fn inner(&self, other: &KVector) -> KScalar {
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(KScalar::zero(self.field), |acc, (a, b)| acc + *a * b.conj())
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(KScalar::norm_sqr).sum::<f64>().sqrt()
    }

    pub fn left_mul(&self, q: KScalar) -> KVector {
        KVector {
            field: self.field,
            entries: self.entries.iter().map(|e| q * *e).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> KVector {
        KVector {
            field: self.field,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    pub fn add(&self, other: &KVector) -> KVector {
        KVector {
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn sub(&self, other: &KVector) -> KVector {
        self.add(&other.scale(-1.0))
    }

    pub fn normalized(&self) -> KVector {
        self.scale(1.0 / self.norm())
    }
}
