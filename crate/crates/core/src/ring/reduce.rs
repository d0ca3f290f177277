use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::{add_into, CoefficientRing, Monomial, PolyRing, Polynomial};

/// Full reduction of `p` by `basis`, whose elements must all have leading
/// coefficient 1. Terms of degree above `truncation` are discarded.
pub(crate) fn reduce(p: &Polynomial, basis: &[Polynomial], truncation: Option<u32>) -> Polynomial {
    let ring = p.ring().clone();
    let coeffs = ring.coefficients();
    let mut rem: BTreeMap<Monomial, BigInt> = p.terms.clone();
    if let Some(n) = truncation {
        rem.retain(|m, _| m.degree() <= n);
    }
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rem.pop_last() {
        let divisor = basis.iter().find_map(|g| {
            let lm = g.leading_monomial()?;
            lm.quotient_of(&m).map(|q| (g, q))
        });
        match divisor {
            Some((g, q)) => {
                // subtract c*q*g; its leading term cancels the popped one
                for (gm, gc) in g.terms().rev().skip(1) {
                    add_into(&mut rem, coeffs, q.mul(gm), -(&c * gc));
                }
            }
            None => {
                out.insert(m, c);
            }
        }
    }
    Polynomial::from_terms(&ring, out)
}

/// Scales `p` so that its leading coefficient is 1, if the leading
/// coefficient is a unit.
pub(crate) fn make_monic(p: &Polynomial) -> Option<Polynomial> {
    let (_, lc) = p.leading_term()?;
    if lc.is_one() {
        Some(p.clone())
    } else if *lc == BigInt::from(-1) {
        Some(p.scale(&BigInt::from(-1)))
    } else {
        None
    }
}

fn s_polynomial(a: &Polynomial, b: &Polynomial, ring: &Arc<PolyRing>) -> Polynomial {
    let la = a.leading_monomial().expect("nonzero");
    let lb = b.leading_monomial().expect("nonzero");
    let lcm = la.lcm(lb, ring);
    let qa = la.quotient_of(&lcm).expect("lcm divisible");
    let qb = lb.quotient_of(&lcm).expect("lcm divisible");
    let one = BigInt::one();
    let left = a.mul_monomial(&qa, &one);
    let right = b.mul_monomial(&qb, &one);
    &left - &right
}

/// Buchberger completion over F2, skipping every S-pair whose lcm lies above
/// `truncation`. Returns the reduced basis.
pub(crate) fn buchberger_f2(relations: &[Polynomial], truncation: u32) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for r in relations {
        let r = reduce(r, &basis, Some(truncation));
        if !r.is_zero() {
            basis.push(r);
        }
    }
    let Some(ring) = basis.first().map(|p| p.ring().clone()) else {
        return basis;
    };
    debug_assert_eq!(ring.coefficients(), CoefficientRing::F2);

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // lowest-degree pair first
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .map(|(n, &(i, j))| {
                let lcm = basis[i]
                    .leading_monomial()
                    .unwrap()
                    .lcm(basis[j].leading_monomial().unwrap(), &ring);
                (n, lcm.degree())
            })
            .min_by_key(|&(_, d)| d)
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) || li.lcm(lj, &ring).degree() > truncation {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &ring);
        let r = reduce(&s, &basis, Some(truncation));
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            for i in 0..k {
                pairs.push((i, k));
            }
        }
    }
    interreduce(basis, Some(truncation))
}

/// Drops redundant leading monomials and fully reduces the tails.
pub(crate) fn interreduce(mut basis: Vec<Polynomial>, truncation: Option<u32>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap().clone();
        if minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(&lm))
        {
            continue;
        }
        minimal.retain(|h| !lm.divides(h.leading_monomial().unwrap()));
        minimal.push(g);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let g = &minimal[i];
        let (lm, lc) = g.leading_term().unwrap();
        let head = Polynomial::monomial(g.ring(), lm.clone(), lc.clone());
        let tail = g - &head;
        let tail = reduce(&tail, &others, truncation);
        out.push(&head + &tail);
    }
    out
}
