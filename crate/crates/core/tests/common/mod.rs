//! Brute-force oracle for graded quotients over F2.
//!
//! Membership in the degree-D part of an ideal generated by homogeneous
//! polynomials is decided by Gaussian elimination on the span of all
//! products `m * r` with `deg m + deg r = D`. Nothing here touches the
//! crate's reduction or linear algebra; only the declared relations are read.
#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use tcbundle::poly::Polynomial;
use tcbundle::ring::Ring;

type Exps = Vec<u32>;
type Row = BTreeSet<usize>;

/// All exponent vectors of weighted degree `d`.
pub fn monomials(weights: &[u32], d: u32) -> Vec<Exps> {
    fn go(weights: &[u32], i: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        let max = left.checked_div(w).unwrap_or(0);
        for e in 0..=max {
            cur[i] = e;
            go(weights, i + 1, left - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(weights, 0, d, &mut vec![0; weights.len()], &mut out);
    out
}

fn degree(weights: &[u32], e: &[u32]) -> u32 {
    weights.iter().zip(e).map(|(w, x)| w * x).sum()
}

/// Support of a polynomial mod 2, split into homogeneous pieces.
fn support(p: &Polynomial) -> Vec<Exps> {
    p.terms()
        .filter(|(_, c)| !(*c % 2u32).is_zero())
        .map(|(m, _)| m.exponents().to_vec())
        .collect()
}

/// Echelon form keyed by pivot (largest index in the row).
#[derive(Default)]
struct Echelon {
    rows: HashMap<usize, Row>,
}

impl Echelon {
    fn reduce(&self, mut v: Row) -> Row {
        while let Some(&p) = v.iter().next_back() {
            match self.rows.get(&p) {
                Some(r) => v = v.symmetric_difference(r).copied().collect(),
                None => break,
            }
        }
        // pivot not present; keep reducing lower entries is unnecessary for
        // membership, which only asks whether the vector dies
        v
    }

    fn insert(&mut self, v: Row) {
        let v = self.reduce(v);
        if let Some(&p) = v.iter().next_back() {
            self.rows.insert(p, v);
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub struct Oracle {
    weights: Vec<u32>,
    generators: Vec<Vec<Exps>>,
    truncation: Option<u32>,
    cache: RefCell<HashMap<u32, (Vec<Exps>, Echelon)>>,
}

impl Oracle {
    /// The ideal of the declared relations of `ring`.
    pub fn from_ring(ring: &Ring) -> Oracle {
        let pr = ring.poly_ring();
        let weights = (0..pr.num_generators()).map(|i| pr.degree_of(i)).collect();
        let mut o = Oracle {
            weights,
            generators: Vec::new(),
            truncation: ring.truncation(),
            cache: RefCell::new(HashMap::new()),
        };
        for r in ring.presentation().relations() {
            o.add_generator(r);
        }
        o
    }

    /// Adds `p` to the ideal (its homogeneous pieces separately).
    pub fn with(mut self, p: &Polynomial) -> Oracle {
        self.add_generator(p);
        self.cache.borrow_mut().clear();
        self
    }

    fn add_generator(&mut self, p: &Polynomial) {
        let mut by_degree: HashMap<u32, Vec<Exps>> = HashMap::new();
        for e in support(p) {
            by_degree.entry(degree(&self.weights, &e)).or_default().push(e);
        }
        let mut keys: Vec<_> = by_degree.keys().copied().collect();
        keys.sort_unstable();
        assert!(keys.len() <= 1, "oracle expects homogeneous relations");
        for k in keys {
            self.generators.push(by_degree.remove(&k).unwrap());
        }
    }

    fn with_degree<T>(&self, d: u32, f: impl FnOnce(&[Exps], &Echelon) -> T) -> T {
        let mut cache = self.cache.borrow_mut();
        let entry = cache.entry(d).or_insert_with(|| {
            let basis = monomials(&self.weights, d);
            let index: HashMap<&Exps, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
            let mut ech = Echelon::default();
            for g in &self.generators {
                let gd = degree(&self.weights, &g[0]);
                if gd > d {
                    continue;
                }
                for m in monomials(&self.weights, d - gd) {
                    let row: Row = g
                        .iter()
                        .map(|e| {
                            let prod: Exps = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                            index[&prod]
                        })
                        .collect();
                    ech.insert(row);
                }
            }
            (basis, ech)
        });
        f(&entry.0, &entry.1)
    }

    /// Whether `p` lies in the ideal (plus everything above the truncation).
    pub fn is_zero(&self, p: &Polynomial) -> bool {
        let mut by_degree: HashMap<u32, Vec<Exps>> = HashMap::new();
        for e in support(p) {
            by_degree.entry(degree(&self.weights, &e)).or_default().push(e);
        }
        by_degree.into_iter().all(|(d, terms)| {
            if self.truncation.is_some_and(|n| d > n) {
                return true;
            }
            self.with_degree(d, |basis, ech| {
                let index: HashMap<&Exps, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
                let mut row = Row::new();
                for e in &terms {
                    let i = index[e];
                    if !row.remove(&i) {
                        row.insert(i);
                    }
                }
                ech.reduce(row).is_empty()
            })
        })
    }

    pub fn equivalent(&self, p: &Polynomial, q: &Polynomial) -> bool {
        self.is_zero(&(p - q))
    }

    /// Dimension of the quotient in degree `d`.
    pub fn quotient_dim(&self, d: u32) -> usize {
        if self.truncation.is_some_and(|n| d > n) {
            return 0;
        }
        self.with_degree(d, |basis, ech| basis.len() - ech.rank())
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
}

/// Compares reduction in `ring` with the oracle on every monomial of degree
/// `0..=max_degree`. Returns the number of mismatches.
pub fn count_mismatches(ring: &Ring, max_degree: u32) -> usize {
    let oracle = Oracle::from_ring(ring);
    let pr = ring.poly_ring();
    let mut bad = 0;
    for d in 0..=max_degree {
        let std: BTreeSet<Exps> = ring
            .standard_monomials(d)
            .iter()
            .map(|m| m.exponents().to_vec())
            .collect();
        if std.len() != oracle.quotient_dim(d) || ring.dimension(d) != std.len() {
            bad += 1;
        }
        for e in monomials(oracle.weights(), d) {
            let m = Polynomial::monomial(pr, tcbundle::poly::Monomial::new(pr, e), 1);
            let nf = ring.normal_form(&m).unwrap();
            let nf_poly = nf.polynomial();
            let only_standard = nf_poly.terms().all(|(t, _)| std.contains(t.exponents()));
            if !only_standard || !oracle.equivalent(&m, nf_poly) {
                bad += 1;
            }
        }
    }
    bad
}

/// A random real bundle of rank `n + 1 <= 5` over a truncated polynomial base
/// on one or two generators, with random Stiefel-Whitney classes.
pub fn random_real_bundle<R: rand::Rng>(rng: &mut R) -> tcbundle::bundles::BundleSpec {
    use tcbundle::bundles::{BundleSpec, Field};
    use tcbundle::poly::{CoefficientRing, Generator, Monomial, PolyRing};
    use tcbundle::ring::{RingPresentation, Strategy};

    let n = rng.gen_range(1..=4u32);
    let mut gens = vec![Generator::new("x", 1)];
    if rng.gen_bool(0.5) {
        gens.push(Generator::new("y", 2));
    }
    let pr = PolyRing::new(CoefficientRing::F2, gens).unwrap();
    let weights: Vec<u32> = (0..pr.num_generators()).map(|i| pr.degree_of(i)).collect();
    let truncation = rng.gen_range(2..=6u32);
    let base = RingPresentation::new(pr.clone(), vec![], Strategy::GroebnerF2, Some(truncation)).unwrap();
    let classes = (1..=n + 1)
        .map(|i| {
            let mut c = Polynomial::zero(&pr);
            for e in monomials(&weights, i) {
                if rng.gen_bool(0.5) {
                    c = &c + &Polynomial::monomial(&pr, Monomial::new(&pr, e), 1);
                }
            }
            c
        })
        .collect();
    BundleSpec::new(Field::R, n + 1, base, classes, None).unwrap()
}
