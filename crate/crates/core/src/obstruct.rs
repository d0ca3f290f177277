//! Euler-class power vanishing tests.
//!
//! Every test here evaluates the ordinary-cohomology image of a stable
//! cohomotopy condition. A vanishing verdict does not prove the stable
//! condition; a non-vanishing verdict refutes it.

use num_bigint::BigInt;
use thiserror::Error;

use crate::bundles::{
    feder_ring, projective_ring, q_tilde_ring, BundleError, BundleSpec, Field,
};
use crate::poly::{CoefficientRing, Generator, Monomial, PolyError, PolyRing, Polynomial};
use crate::ring::{Ring, RingElement, RingError, RingPresentation, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructError {
    #[error(transparent)]
    Bundle(#[from] BundleError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0} is defined for real bundles only")]
    RealOnly(&'static str),
    #[error("internal disagreement in {test} at k = {k}: {detail}")]
    Disagreement {
        test: &'static str,
        k: u32,
        detail: String,
    },
}

impl From<PolyError> for ObstructError {
    fn from(e: PolyError) -> Self {
        ObstructError::Ring(RingError::Poly(e))
    }
}

/// Outcome of a search for the least vanishing power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinK {
    Found(u32),
    NotFoundUpTo(u32),
}

impl MinK {
    pub fn found(self) -> Option<u32> {
        match self {
            MinK::Found(k) => Some(k),
            MinK::NotFoundUpTo(_) => None,
        }
    }
}

impl std::fmt::Display for MinK {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MinK::Found(k) => write!(f, "{k}"),
            MinK::NotFoundUpTo(k) => write!(f, "none up to {k}"),
        }
    }
}

/// Smallest `k <= k_max` with `e^k = 0`. The zero element gives 1.
pub fn min_k_vanishing(e: &RingElement, k_max: u32) -> MinK {
    let mut power = e.ring().one();
    for k in 0..=k_max {
        if power.is_zero() {
            return MinK::Found(k);
        }
        power = &power * e;
    }
    MinK::NotFoundUpTo(k_max)
}

/// Default search bound `2(n+1)d + 2`.
pub fn default_k_max(b: &BundleSpec) -> u32 {
    2 * b.rank() * b.field().dim() + 2
}

fn require_real(b: &BundleSpec, what: &'static str) -> Result<(), ObstructError> {
    if b.field() != Field::R {
        return Err(ObstructError::RealOnly(what));
    }
    Ok(())
}

/// Whether `w_n^k` is a multiple of `w_{n+1}` in the base ring.
pub fn sphere_divisibility_test(b: &BundleSpec, k: u32) -> Result<bool, ObstructError> {
    require_real(b, "the sphere divisibility test")?;
    let base = b.base();
    let n = b.n() as usize;
    let wn = base.normal_form(b.class(n))?.pow(k);
    let top = base.normal_form(b.class(n + 1))?;
    Ok(base.is_multiple_of(&wn, &top)?)
}

/// Computes `e(zeta~)^k = 0` on the sphere bundle directly and checks it
/// against [`sphere_divisibility_test`]. Returns the common verdict.
///
/// The sphere bundle double covers the projective bundle, and the kernel of
/// the pullback is the ideal generated by `t`, so `e(zeta~)^k` vanishes iff
/// `x_n^k` lies in `t H*(P)`.
pub fn gysin_equivalence_check(b: &BundleSpec, k: u32) -> Result<bool, ObstructError> {
    let divisible = sphere_divisibility_test(b, k)?;
    let p = projective_ring(b, CoefficientRing::F2)?;
    let direct = p.ring.is_multiple_of(&p.e_zeta.pow(k), &p.e_eta)?;
    if direct != divisible {
        return Err(ObstructError::Disagreement {
            test: "gysin_equivalence_check",
            k,
            detail: format!("divisibility says {divisible}, sphere bundle says {direct}"),
        });
    }
    Ok(direct)
}

/// Remainder of `p` on division by the monic polynomial `f` in `t`, with
/// coefficients reduced in `base`. Returns the `t^j` coefficients.
fn long_division(
    p: &Polynomial,
    f: &Polynomial,
    t_index: usize,
    base: &Ring,
) -> Result<Vec<RingElement>, ObstructError> {
    let ring = p.ring().clone();
    let deg_f = f
        .terms()
        .map(|(m, _)| m.exponent(t_index))
        .max()
        .unwrap_or(0);
    let coefficient_of = |p: &Polynomial, j: u32| {
        let mut c = Polynomial::zero(&ring);
        for (m, coeff) in p.terms() {
            if m.exponent(t_index) == j {
                let mut exps = m.exponents().to_vec();
                exps[t_index] = 0;
                c.add_term(Monomial::new(&ring, exps), coeff.clone());
            }
        }
        c
    };
    let lead_f = coefficient_of(f, deg_f);
    debug_assert!(lead_f == Polynomial::one(&ring) || lead_f == -&Polynomial::one(&ring));
    let mut rem = p.clone();
    loop {
        let top = rem.terms().map(|(m, _)| m.exponent(t_index)).max().unwrap_or(0);
        if rem.is_zero() || top < deg_f {
            break;
        }
        let c = &coefficient_of(&rem, top) * &lead_f;
        let shift = Polynomial::var(&ring, t_index).pow(top - deg_f);
        rem = &rem - &(&(&c * &shift) * f);
    }
    let top = rem.terms().map(|(m, _)| m.exponent(t_index)).max().unwrap_or(0);
    (0..=top)
        .map(|j| Ok(base.normal_form(&coefficient_of(&rem, j))?))
        .collect()
}

/// Whether `e(zeta)^k = 0` on the projective bundle. Computed both in the
/// quotient ring and by long division of `x_n^k` by the defining monic
/// polynomial over the base; the two must agree.
pub fn symm_sphere_test(b: &BundleSpec, k: u32) -> Result<bool, ObstructError> {
    require_real(b, "the symmetrized sphere test")?;
    let p = projective_ring(b, CoefficientRing::F2)?;
    let in_quotient = p.e_zeta.pow(k).is_zero();
    let by_division = symm_sphere_by_division(b, k)?;
    if in_quotient != by_division {
        return Err(ObstructError::Disagreement {
            test: "symm_sphere_test",
            k,
            detail: format!("quotient says {in_quotient}, long division says {by_division}"),
        });
    }
    Ok(in_quotient)
}

fn symm_sphere_by_division(b: &BundleSpec, k: u32) -> Result<bool, ObstructError> {
    // work in the free polynomial ring base[t] with the base relations left
    // to the coefficient reduction
    let base = base_f2(b)?;
    let ring = base.poly_ring().extend(&[Generator::new("t", 1)])?;
    let t_index = ring.num_generators() - 1;
    let t = Polynomial::var(&ring, t_index);
    let n = b.n();
    let mut w = vec![Polynomial::one(&ring)];
    for i in 1..=b.rank() as usize {
        w.push(b.class(i).embed(&ring)?);
    }
    let mut f = Polynomial::zero(&ring);
    let mut x_n = Polynomial::zero(&ring);
    for j in 0..=n + 1 {
        f = &f + &(&t.pow(j) * &w[(n + 1 - j) as usize]);
        if j <= n {
            x_n = &x_n + &(&t.pow(j) * &w[(n - j) as usize]);
        }
    }
    let rem = long_division(&x_n.pow(k), &f, t_index, &base)?;
    Ok(rem.iter().all(RingElement::is_zero))
}

fn base_f2(b: &BundleSpec) -> Result<Ring, ObstructError> {
    let pres = b.base().presentation().reduce_mod_two()?;
    Ok(Ring::new(pres)?)
}

/// The generic base `F2[w_1, ..., w_{n+1}]` and the bundle over it.
pub fn generic_real_bundle(n: u32) -> Result<BundleSpec, ObstructError> {
    let gens = (1..=n + 1).map(|i| Generator::new(format!("w{i}"), i)).collect();
    let ring = PolyRing::new(CoefficientRing::F2, gens)?;
    let classes = (0..=n as usize).map(|i| Polynomial::var(&ring, i)).collect();
    Ok(BundleSpec::new(Field::R, n + 1, RingPresentation::free(ring), classes, None)?)
}

/// Checks the closed formulas for `e(zeta)^2` and `e(zeta)^3` in the `x_i`
/// basis for generic classes.
pub fn closed_form_check(n: u32) -> Result<bool, ObstructError> {
    let b = generic_real_bundle(n)?;
    let p = projective_ring(&b, CoefficientRing::F2)?;
    let w: Vec<Polynomial> = p.classes.iter().map(|c| c.polynomial().clone()).collect();
    let n = n as usize;
    let zero = Polynomial::zero(p.ring.poly_ring());

    let mut square = vec![zero.clone(); n + 1];
    square[n] = w[n].clone();
    square[n - 1] = w[n + 1].clone();
    let ok2 = p.x_coordinates(&p.e_zeta.pow(2))? == square;

    if n < 2 {
        return Ok(ok2);
    }
    let mut cube = vec![zero; n + 1];
    cube[n] = &w[n].pow(2) + &(&w[n - 1] * &w[n + 1]);
    cube[n - 1] = &w[n] * &w[n + 1];
    cube[n - 2] = w[n + 1].pow(2);
    let ok3 = p.x_coordinates(&p.e_zeta.pow(3))? == cube;
    Ok(ok2 && ok3)
}

/// Verdict for `e(alpha~)^k` on the space of ordered orthogonal line pairs.
#[derive(Debug, Clone)]
pub struct PairVerdict {
    pub vanishes: bool,
    /// Normal form of `e(alpha~)^k`.
    pub witness: RingElement,
}

pub fn proj_pair_test(b: &BundleSpec, k: u32, coeffs: CoefficientRing) -> Result<PairVerdict, ObstructError> {
    let q = q_tilde_ring(b, coeffs)?;
    let witness = q.e_alpha_tilde.pow(k);
    Ok(PairVerdict {
        vanishes: witness.is_zero(),
        witness,
    })
}

/// Whether `e(alpha)^k = 0` in the cohomology of the unordered pair space.
/// Cross-checked against the reduction `e(alpha)^k != 0 <=> Y^{k-1} != 0` in
/// the Grassmann ring.
pub fn symm_proj_test(b: &BundleSpec, k: u32, truncation: Option<u32>) -> Result<bool, ObstructError> {
    let f = feder_ring(b, truncation)?;
    let direct = f.e_alpha.pow(k).is_zero();
    let reduced = match k {
        0 => f.grassmann.ring.one().is_zero(),
        _ => f.grassmann.y.pow(k - 1).is_zero(),
    };
    if direct != reduced {
        return Err(ObstructError::Disagreement {
            test: "symm_proj_test",
            k,
            detail: format!("direct says {direct}, Grassmann reduction says {reduced}"),
        });
    }
    Ok(direct)
}

/// Integral data for the sphere `S(R^{n+1})` over a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSphereRow {
    pub n: u32,
    /// `e(zeta~)` as a multiple of the top class.
    pub euler_value: BigInt,
    pub min_k: u32,
}

/// `H*(S^n; Z) = Z[s]/(s^2)`, with `s` placed in degree `2n` so that the
/// ring stays even-graded; only the product structure matters here.
pub fn point_sphere_table(n: u32) -> Result<PointSphereRow, ObstructError> {
    let ring = PolyRing::new(CoefficientRing::Integers, vec![Generator::new("s", 2 * n)])?;
    let s = Polynomial::var(&ring, 0);
    let sphere = Ring::new(RingPresentation::new(ring, vec![s.pow(2)], Strategy::MonicTower, None)?)?;
    let euler_value = BigInt::from(if n.is_multiple_of(2) { 2 } else { 0 });
    let e = sphere.normal_form(&s.scale(&euler_value))?;
    let min_k = min_k_vanishing(&e, 2)
        .found()
        .expect("e^2 = 0 in a ring with s^2 = 0");
    Ok(PointSphereRow { n, euler_value, min_k })
}
