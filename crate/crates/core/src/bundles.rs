//! Vector bundle data and the cohomology rings built from it.
//!
//! Generator names, against the usual notation:
//!
//! | ring                    | generators            | meaning                                   |
//! |-------------------------|-----------------------|-------------------------------------------|
//! | `projective_ring`       | `t` (deg d)           | Euler class of the Hopf line bundle       |
//! | `q_tilde_ring`          | `S`, `T` (deg d)      | Hopf classes on the two factors           |
//! | `grassmann_ring`        | `Y` (d), `Z` (2d)     | `w_d`, `w_2d` of the tautological 2-plane |
//! | `feder_ring`            | `Y`, `Z`, `X` (deg 1) | as above, `X` the real line of the swap   |
//!
//! Base generators keep the names given by the caller and must not collide
//! with these.

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{monomials_of_degree, CoefficientRing, Generator, Monomial, PolyError, PolyRing, Polynomial};
use crate::ring::{Ring, RingElement, RingError, RingPresentation, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("{given} characteristic classes given for a rank {rank} bundle")]
    TooManyClasses { given: usize, rank: u32 },
    #[error("class w{index} must have degree {expected}, found {found}")]
    ClassDegree { index: usize, expected: u32, found: u32 },
    #[error("{field} bundles need {needed} coefficients here")]
    CoefficientMismatch { field: Field, needed: CoefficientRing },
    #[error("base generator name `{0}` is reserved for a fibre class")]
    NameClash(String),
    #[error("base ring is not connected (degree-0 part is not the coefficient ring)")]
    NotConnected,
    #[error("a truncation degree is required: give the base a truncation or a dimension bound")]
    MissingTruncation,
    #[error("truncated bases over the integers are not supported; give explicit monic relations")]
    TruncatedIntegralBase,
}

impl From<PolyError> for BundleError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::DuplicateGenerator(name) => BundleError::NameClash(name),
            other => BundleError::Ring(RingError::Poly(other)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    /// Real dimension `d` of the field.
    pub fn dim(self) -> u32 {
        match self {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
        })
    }
}

/// A K-vector bundle of rank n+1 over a base with presented cohomology,
/// recorded through its classes `w_1^K, ..., w_{n+1}^K` (Stiefel-Whitney
/// classes for R, Chern classes `c_i` for C, `c_2i` for H).
#[derive(Debug, Clone)]
pub struct BundleSpec {
    field: Field,
    n: u32,
    base: Ring,
    classes: Vec<Polynomial>,
    dim_bound: Option<u32>,
}

impl BundleSpec {
    /// `classes[i]` is `w_{i+1}`; missing trailing classes are zero.
    pub fn new(
        field: Field,
        rank: u32,
        base: RingPresentation,
        classes: Vec<Polynomial>,
        dim_bound: Option<u32>,
    ) -> Result<Self, BundleError> {
        if rank < 2 {
            return Err(BundleError::RankTooSmall(rank));
        }
        let n = rank - 1;
        if classes.len() > rank as usize {
            return Err(BundleError::TooManyClasses {
                given: classes.len(),
                rank,
            });
        }
        if field == Field::R && base.coefficients() != CoefficientRing::F2 {
            return Err(BundleError::CoefficientMismatch {
                field,
                needed: CoefficientRing::F2,
            });
        }
        let base = Ring::new(base)?;
        if base.dimension(0) != 1 || base.one().is_zero() {
            return Err(BundleError::NotConnected);
        }
        let d = field.dim();
        let mut padded = Vec::with_capacity(rank as usize);
        for i in 0..rank as usize {
            let c = match classes.get(i) {
                Some(c) => base.normal_form(c)?.polynomial().clone(),
                None => Polynomial::zero(base.poly_ring()),
            };
            let expected = d * (i as u32 + 1);
            match c.homogeneous_degree() {
                Some(deg) if c.is_zero() || deg == expected => {}
                found => {
                    return Err(BundleError::ClassDegree {
                        index: i + 1,
                        expected,
                        found: found.unwrap_or_else(|| c.degree().unwrap_or(0)),
                    })
                }
            }
            padded.push(c);
        }
        Ok(BundleSpec {
            field,
            n,
            base,
            classes: padded,
            dim_bound,
        })
    }

    /// A bundle over a point: all classes vanish.
    pub fn over_point(field: Field, rank: u32, coeffs: CoefficientRing) -> Result<Self, BundleError> {
        let ring = PolyRing::new(coeffs, Vec::new())?;
        BundleSpec::new(field, rank, RingPresentation::free(ring), Vec::new(), Some(0))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `n`, one less than the rank.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> u32 {
        self.n + 1
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    /// `w_i` for `1 <= i <= n+1`.
    pub fn class(&self, i: usize) -> &Polynomial {
        &self.classes[i - 1]
    }

    pub fn classes(&self) -> &[Polynomial] {
        &self.classes
    }

    /// Dimension bound for the base: the caller's bound, else the top degree
    /// of the base ring when finite.
    pub fn base_dim(&self) -> Option<u32> {
        self.dim_bound
            .or_else(|| self.base.truncation())
            .or_else(|| self.base.top_degree())
    }

    /// Default truncation for the Grassmann and Feder rings.
    pub fn default_truncation(&self) -> Option<u32> {
        let d = self.field.dim();
        self.base_dim().map(|b| b + 2 * self.n * d + d + 1)
    }
}

/// Base relations and classes carried into a ring with extra generators.
struct Extension {
    ring: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    /// `w_0 = 1, w_1, ..., w_{n+1}` in the extended ring.
    classes: Vec<Polynomial>,
    strategy: Strategy,
    truncation: Option<u32>,
}

fn extend(
    b: &BundleSpec,
    coeffs: CoefficientRing,
    new_gens: &[Generator],
    fibre_top: u32,
    forced_truncation: Option<u32>,
) -> Result<Extension, BundleError> {
    let base_pres = b.base.presentation();
    let (base_pres, classes) = match (base_pres.coefficients(), coeffs) {
        (CoefficientRing::Integers, CoefficientRing::F2) => {
            let reduced = base_pres.reduce_mod_two()?;
            let classes = b
                .classes
                .iter()
                .map(|c| c.change_coefficients(reduced.poly_ring()))
                .collect::<Result<Vec<_>, _>>()?;
            (reduced, classes)
        }
        (CoefficientRing::F2, CoefficientRing::Integers) => {
            return Err(BundleError::CoefficientMismatch {
                field: b.field,
                needed: CoefficientRing::F2,
            })
        }
        _ => (base_pres.clone(), b.classes.clone()),
    };
    let ring = base_pres.poly_ring().extend(new_gens)?;

    let mut relations = base_pres
        .relations()
        .iter()
        .map(|r| r.embed(&ring))
        .collect::<Result<Vec<_>, _>>()?;
    let mut strategy = base_pres.strategy();
    let mut truncation = None;
    if let Some(n) = base_pres.truncation() {
        if coeffs == CoefficientRing::Integers {
            return Err(BundleError::TruncatedIntegralBase);
        }
        // base classes above the base truncation vanish in the extension too
        for m in overflow_monomials(base_pres.poly_ring(), n) {
            relations.push(Polynomial::monomial(base_pres.poly_ring(), m, 1).embed(&ring)?);
        }
        strategy = Strategy::GroebnerF2;
        truncation = Some(n + fibre_top);
    }
    if let Some(t) = forced_truncation {
        strategy = Strategy::GroebnerF2;
        truncation = Some(t);
    }
    let mut all = vec![Polynomial::one(&ring)];
    for c in &classes {
        all.push(c.embed(&ring)?);
    }
    Ok(Extension {
        ring,
        relations,
        classes: all,
        strategy,
        truncation,
    })
}

/// Minimal monomials of degree above `n`.
fn overflow_monomials(ring: &Arc<PolyRing>, n: u32) -> Vec<Monomial> {
    let max_deg = ring.generators().iter().map(|g| g.degree).max().unwrap_or(0);
    let mut out = Vec::new();
    for d in n + 1..=n + max_deg {
        for m in monomials_of_degree(ring, d) {
            let minimal = (0..ring.num_generators())
                .filter(|&i| m.exponent(i) > 0)
                .all(|i| d - ring.degree_of(i) <= n);
            if minimal {
                out.push(m);
            }
        }
    }
    out
}

fn sign(j: u32) -> BigInt {
    if j.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn finish(ext: Extension) -> Result<Ring, BundleError> {
    Ok(Ring::new(RingPresentation::new(
        ext.ring,
        ext.relations,
        ext.strategy,
        ext.truncation,
    )?)?)
}

/// Cohomology of the projective bundle with the classes named there.
#[derive(Debug, Clone)]
pub struct ProjectiveRing {
    pub ring: Ring,
    /// Euler class of the complement of the Hopf line bundle.
    pub e_zeta: RingElement,
    /// Euler class of the Hopf line bundle, the generator `t`.
    pub e_eta: RingElement,
    /// `w_0 = 1, w_1, ..., w_{n+1}` pulled back to this ring.
    pub classes: Vec<RingElement>,
}

impl ProjectiveRing {
    /// `x_i = t^i + w_1 t^{i-1} + ... + w_i` for `i = 0..=n`, a basis over the
    /// base ring (F2 only).
    pub fn x_basis(&self) -> Vec<RingElement> {
        let n = self.classes.len() - 2;
        let t = &self.e_eta;
        let mut xs: Vec<RingElement> = vec![self.ring.one()];
        for i in 1..=n {
            let next = &(t * &xs[i - 1]) + &self.classes[i];
            xs.push(next);
        }
        xs
    }

    /// Coordinates `b_0..b_n` of `e` in the basis `x_0..x_n` (F2 only).
    pub fn x_coordinates(&self, e: &RingElement) -> Result<Vec<Polynomial>, RingError> {
        let n = self.classes.len() - 2;
        let mut c = self.ring.module_coordinates(e, "t", n as u32)?;
        let mut b = vec![Polynomial::zero(self.ring.poly_ring()); n + 1];
        for i in (0..=n).rev() {
            b[i] = self.ring.normal_form(&c[i])?.polynomial().clone();
            for j in 0..=i {
                let sub = &b[i] * self.classes[i - j].polynomial();
                c[j] = &c[j] - &sub;
            }
        }
        Ok(b)
    }
}

/// `H*(B)[t]/(sum_j (-1)^j t^j w_{n+1-j})`, made monic in `t`.
pub fn projective_ring(b: &BundleSpec, coeffs: CoefficientRing) -> Result<ProjectiveRing, BundleError> {
    if b.field == Field::R && coeffs != CoefficientRing::F2 {
        return Err(BundleError::CoefficientMismatch {
            field: b.field,
            needed: CoefficientRing::F2,
        });
    }
    let d = b.field.dim();
    let n = b.n;
    let mut ext = extend(b, coeffs, &[Generator::new("t", d)], n * d, None)?;
    let t = Polynomial::generator(&ext.ring, "t")?;
    let mut rel = Polynomial::zero(&ext.ring);
    for j in 0..=n + 1 {
        let term = &t.pow(j) * &ext.classes[(n + 1 - j) as usize];
        rel = &rel + &term.scale(&sign(j));
    }
    ext.relations.push(rel.scale(&sign(n + 1)));
    let mut e_zeta = Polynomial::zero(&ext.ring);
    for j in 0..=n {
        let term = &t.pow(j) * &ext.classes[(n - j) as usize];
        e_zeta = &e_zeta + &term.scale(&sign(j));
    }
    let classes_poly = ext.classes.clone();
    let ring = finish(ext)?;
    Ok(ProjectiveRing {
        e_zeta: ring.normal_form(&e_zeta)?,
        e_eta: ring.generator("t")?,
        classes: classes_poly
            .iter()
            .map(|c| ring.normal_form(c))
            .collect::<Result<_, _>>()?,
        ring,
    })
}

/// Cohomology of the bundle of ordered orthogonal pairs of lines.
#[derive(Debug, Clone)]
pub struct QTildeRing {
    pub ring: Ring,
    /// `T - S`.
    pub e_alpha_tilde: RingElement,
    pub s: RingElement,
    pub t: RingElement,
}

/// Complete homogeneous symmetric polynomial `T^i + S T^{i-1} + ... + S^i`.
pub fn complete_homogeneous(s: &Polynomial, t: &Polynomial, i: u32) -> Polynomial {
    let mut h = Polynomial::zero(s.ring());
    for j in 0..=i {
        h = &h + &(&s.pow(j) * &t.pow(i - j));
    }
    h
}

/// `H*(P_K(xi))[T]/(w_n + sum_{i=1}^n (-1)^i h_i(S,T) w_{n-i})` over
/// `H*(P_K(xi)) = H*(B)[S]/(sum_j (-1)^j S^j w_{n+1-j})`.
pub fn q_tilde_ring(b: &BundleSpec, coeffs: CoefficientRing) -> Result<QTildeRing, BundleError> {
    if b.field == Field::R && coeffs != CoefficientRing::F2 {
        return Err(BundleError::CoefficientMismatch {
            field: b.field,
            needed: CoefficientRing::F2,
        });
    }
    let d = b.field.dim();
    let n = b.n;
    let gens = [Generator::new("S", d), Generator::new("T", d)];
    let mut ext = extend(b, coeffs, &gens, (2 * n - 1) * d, None)?;
    let s = Polynomial::generator(&ext.ring, "S")?;
    let t = Polynomial::generator(&ext.ring, "T")?;
    let w = &ext.classes;

    let mut p_rel = Polynomial::zero(&ext.ring);
    for j in 0..=n + 1 {
        p_rel = &p_rel + &(&s.pow(j) * &w[(n + 1 - j) as usize]).scale(&sign(j));
    }
    let mut q_rel = w[n as usize].clone();
    for i in 1..=n {
        let h = complete_homogeneous(&s, &t, i);
        q_rel = &q_rel + &(&h * &w[(n - i) as usize]).scale(&sign(i));
    }
    ext.relations.push(p_rel.scale(&sign(n + 1)));
    ext.relations.push(q_rel.scale(&sign(n)));
    let e = &t - &s;
    let ring = finish(ext)?;
    Ok(QTildeRing {
        e_alpha_tilde: ring.normal_form(&e)?,
        s: ring.normal_form(&s)?,
        t: ring.normal_form(&t)?,
        ring,
    })
}

/// Memoised `p_i(Y,Z)`: `p_0 = 1`, `p_1 = Y`, `p_{i+1} = Y p_i + Z p_{i-1}`.
#[derive(Debug, Clone)]
pub struct PPolynomialTable {
    y: Polynomial,
    z: Polynomial,
    memo: Vec<Polynomial>,
}

impl PPolynomialTable {
    pub fn new(y: Polynomial, z: Polynomial) -> Self {
        let one = Polynomial::one(y.ring());
        let memo = vec![one, y.clone()];
        PPolynomialTable { y, z, memo }
    }

    pub fn p(&mut self, i: usize) -> Polynomial {
        while self.memo.len() <= i {
            let k = self.memo.len();
            let next = &(&self.y * &self.memo[k - 1]) + &(&self.z * &self.memo[k - 2]);
            self.memo.push(next);
        }
        self.memo[i].clone()
    }

    /// `p_i^xi = p_i + p_{i-1} w_1 + ... + p_1 w_{i-1} + w_i`, where
    /// `classes[j]` is `w_j` with `classes[0] = 1`.
    pub fn p_xi(&mut self, i: usize, classes: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(self.y.ring());
        for j in 0..=i {
            if let Some(w) = classes.get(j) {
                acc = &acc + &(&self.p(i - j) * w);
            }
        }
        acc
    }
}

pub fn p_polynomial(i: usize, table: &mut PPolynomialTable) -> Polynomial {
    table.p(i)
}

#[derive(Debug, Clone)]
pub struct GrassmannRing {
    pub ring: Ring,
    pub y: RingElement,
    pub z: RingElement,
}

fn grassmann_relations(ext: &Extension, n: u32) -> Result<Vec<Polynomial>, BundleError> {
    let y = Polynomial::generator(&ext.ring, "Y")?;
    let z = Polynomial::generator(&ext.ring, "Z")?;
    let mut table = PPolynomialTable::new(y, z.clone());
    let n = n as usize;
    let first = table.p_xi(n, &ext.classes);
    let second = &(&z * &table.p_xi(n - 1, &ext.classes)) + &ext.classes[n + 1];
    Ok(vec![first, second])
}

fn truncation_for(b: &BundleSpec, truncation: Option<u32>) -> Result<u32, BundleError> {
    truncation
        .or_else(|| b.default_truncation())
        .ok_or(BundleError::MissingTruncation)
}

/// `H*(B;F2)[Y,Z]/(p_n^xi, Z p_{n-1}^xi + w_{n+1})`, completed over F2.
pub fn grassmann_ring(b: &BundleSpec, truncation: Option<u32>) -> Result<GrassmannRing, BundleError> {
    let d = b.field.dim();
    let trunc = truncation_for(b, truncation)?;
    let gens = [Generator::new("Y", d), Generator::new("Z", 2 * d)];
    let mut ext = extend(b, CoefficientRing::F2, &gens, 2 * (b.n - 1) * d, Some(trunc))?;
    let rels = grassmann_relations(&ext, b.n)?;
    ext.relations.extend(rels);
    let ring = finish(ext)?;
    Ok(GrassmannRing {
        y: ring.generator("Y")?,
        z: ring.generator("Z")?,
        ring,
    })
}

#[derive(Debug, Clone)]
pub struct FederRing {
    pub ring: Ring,
    pub e_lambda: RingElement,
    /// `Y + X^d`.
    pub e_alpha: RingElement,
    /// `Y`.
    pub w_d_beta: RingElement,
    pub grassmann: GrassmannRing,
}

/// `H*(B;F2)[X,Y,Z]/(X(X^d+Y), p_n^xi, Z p_{n-1}^xi + w_{n+1})`.
pub fn feder_ring(b: &BundleSpec, truncation: Option<u32>) -> Result<FederRing, BundleError> {
    let d = b.field.dim();
    let trunc = truncation_for(b, truncation)?;
    let grassmann = grassmann_ring(b, Some(trunc))?;
    let gens = [
        Generator::new("Y", d),
        Generator::new("Z", 2 * d),
        Generator::new("X", 1),
    ];
    let mut ext = extend(b, CoefficientRing::F2, &gens, 2 * (b.n - 1) * d + d, Some(trunc))?;
    let rels = grassmann_relations(&ext, b.n)?;
    ext.relations.extend(rels);
    let x = Polynomial::generator(&ext.ring, "X")?;
    let y = Polynomial::generator(&ext.ring, "Y")?;
    let x_d_plus_y = &x.pow(d) + &y;
    ext.relations.push(&x * &x_d_plus_y);
    let ring = finish(ext)?;
    Ok(FederRing {
        e_lambda: ring.normal_form(&x)?,
        e_alpha: ring.normal_form(&x_d_plus_y)?,
        w_d_beta: ring.normal_form(&y)?,
        ring,
        grassmann,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn f2_base(gens: &[(&str, u32)], rels: &[&str]) -> RingPresentation {
        let r = PolyRing::new(
            CoefficientRing::F2,
            gens.iter().map(|(n, d)| Generator::new(*n, *d)).collect(),
        )
        .unwrap();
        let rels = rels.iter().map(|s| parse(s, &r).unwrap()).collect();
        RingPresentation::new(r, rels, Strategy::MonicTower, None).unwrap()
    }

    #[test]
    fn real_projective_plane_over_point() {
        let b = BundleSpec::over_point(Field::R, 3, CoefficientRing::F2).unwrap();
        let p = projective_ring(&b, CoefficientRing::F2).unwrap();
        assert!(p.ring.parse("t^3").unwrap().is_zero());
        assert!(!p.ring.parse("t^2").unwrap().is_zero());
        assert_eq!(p.e_zeta, p.ring.parse("t^2").unwrap());
    }

    #[test]
    fn complex_line_pair_over_point() {
        let b = BundleSpec::over_point(Field::C, 2, CoefficientRing::Integers).unwrap();
        let p = projective_ring(&b, CoefficientRing::Integers).unwrap();
        assert_eq!(p.ring.coefficients(), CoefficientRing::Integers);
        assert!(p.ring.parse("t^2").unwrap().is_zero());
        assert!(!p.ring.parse("5*t").unwrap().is_zero());
        // e_zeta = w_1 - t w_0 = -t with the alternating convention
        assert_eq!(p.e_zeta, p.ring.parse("-t").unwrap());
    }

    #[test]
    fn bundle_over_projective_space() {
        // B = P(R^4), xi with w1 = x: relation t^{n+1} + x t^n
        let base = f2_base(&[("x", 1)], &["x^4"]);
        let x = parse("x", base.poly_ring()).unwrap();
        let b = BundleSpec::new(Field::R, 3, base, vec![x], None).unwrap();
        let p = projective_ring(&b, CoefficientRing::F2).unwrap();
        let rel = p.ring.presentation().relations().last().unwrap().clone();
        assert_eq!(rel, parse("t^3 + x*t^2", p.ring.poly_ring()).unwrap());
        assert_eq!(p.ring.parse("t^3").unwrap(), p.ring.parse("x*t^2").unwrap());
        assert_eq!(b.base_dim(), Some(3));
    }

    #[test]
    fn euler_classes_multiply_to_top_class() {
        let base = f2_base(&[("a", 1), ("b", 2), ("c", 3)], &["a^5", "b^3", "c^2"]);
        let r = base.poly_ring().clone();
        let classes = vec![parse("a", &r).unwrap(), parse("b + a^2", &r).unwrap(), parse("c + a*b", &r).unwrap()];
        let b = BundleSpec::new(Field::R, 3, base, classes, None).unwrap();
        let p = projective_ring(&b, CoefficientRing::F2).unwrap();
        assert_eq!(&p.e_zeta * &p.e_eta, p.classes[3]);
        assert_eq!(p.x_basis()[2], p.e_zeta);
    }

    #[test]
    fn integral_euler_product() {
        // generic Chern classes in even degrees
        let r = PolyRing::new(
            CoefficientRing::Integers,
            vec![Generator::new("c1", 2), Generator::new("c2", 4), Generator::new("c3", 6)],
        )
        .unwrap();
        let classes = ["c1", "c2", "c3"].iter().map(|s| parse(s, &r).unwrap()).collect();
        let b = BundleSpec::new(Field::C, 3, RingPresentation::free(r), classes, None).unwrap();
        let p = projective_ring(&b, CoefficientRing::Integers).unwrap();
        assert_eq!(&p.e_zeta * &p.e_eta, p.classes[3]);
    }

    #[test]
    fn milnor_presentation() {
        for n in [2u32, 4] {
            let b = BundleSpec::over_point(Field::R, n + 1, CoefficientRing::F2).unwrap();
            let q = q_tilde_ring(&b, CoefficientRing::F2).unwrap();
            let h: Vec<String> = (0..=n).map(|j| format!("S^{j}*T^{}", n - j)).collect();
            assert!(q.ring.parse(&format!("S^{}", n + 1)).unwrap().is_zero());
            assert!(q.ring.parse(&h.join("+")).unwrap().is_zero());
            assert_eq!(q.e_alpha_tilde, q.ring.parse("T+S").unwrap());
            assert_eq!(q.ring.dimension(0), 1);
            let total: usize = (0..=2 * n).map(|d| q.ring.dimension(d)).sum();
            assert_eq!(total as u32, (n + 1) * n);
        }
    }

    #[test]
    fn complex_q_tilde_presentation() {
        let b = BundleSpec::over_point(Field::C, 3, CoefficientRing::Integers).unwrap();
        let q = q_tilde_ring(&b, CoefficientRing::Integers).unwrap();
        assert!(q.ring.parse("S^3").unwrap().is_zero());
        assert!(q.ring.parse("T^2+S*T+S^2").unwrap().is_zero());
        assert!(!q.ring.parse("2*T*S").unwrap().is_zero());
        assert_eq!(q.e_alpha_tilde, q.ring.parse("T-S").unwrap());
    }

    #[test]
    fn q_tilde_relation_matches_product_formula() {
        // w_i(zeta) = sum_j (-1)^j S^j w_{i-j}(xi); the T-relation is
        // sum_i (-1)^i T^i w_{n-i}(zeta)
        let r = PolyRing::new(
            CoefficientRing::Integers,
            vec![Generator::new("c1", 2), Generator::new("c2", 4), Generator::new("c3", 6), Generator::new("c4", 8)],
        )
        .unwrap();
        let classes: Vec<Polynomial> = ["c1", "c2", "c3", "c4"].iter().map(|s| parse(s, &r).unwrap()).collect();
        let b = BundleSpec::new(Field::C, 4, RingPresentation::free(r), classes, None).unwrap();
        let q = q_tilde_ring(&b, CoefficientRing::Integers).unwrap();
        let pr = q.ring.poly_ring();
        let s = Polynomial::generator(pr, "S").unwrap();
        let t = Polynomial::generator(pr, "T").unwrap();
        let mut w = vec![Polynomial::one(pr)];
        for name in ["c1", "c2", "c3", "c4"] {
            w.push(Polynomial::generator(pr, name).unwrap());
        }
        let n = 3usize;
        let wz = |i: usize| {
            let mut acc = Polynomial::zero(pr);
            for j in 0..=i {
                acc = &acc + &(&s.pow(j as u32) * &w[i - j]).scale(&sign(j as u32));
            }
            acc
        };
        let mut oracle = Polynomial::zero(pr);
        for i in 0..=n {
            oracle = &oracle + &(&t.pow(i as u32) * &wz(n - i)).scale(&sign(i as u32));
        }
        assert!(q.ring.normal_form(&oracle).unwrap().is_zero());
        let declared = q.ring.presentation().relations().last().unwrap();
        assert!(declared == &oracle || declared == &(-&oracle));
    }

    #[test]
    fn q_tilde_is_symmetric() {
        let base = f2_base(&[("a", 1), ("b", 2)], &["a^4", "b^2"]);
        let r = base.poly_ring().clone();
        let classes = vec![parse("a", &r).unwrap(), parse("b", &r).unwrap(), parse("a*b", &r).unwrap()];
        let b = BundleSpec::new(Field::R, 3, base, classes, None).unwrap();
        let q = q_tilde_ring(&b, CoefficientRing::F2).unwrap();
        let pr = q.ring.poly_ring();
        let images: Vec<Polynomial> = pr
            .generators()
            .iter()
            .map(|g| {
                let name = match g.name.as_str() {
                    "S" => "T",
                    "T" => "S",
                    other => other,
                };
                Polynomial::generator(pr, name).unwrap()
            })
            .collect();
        for rel in q.ring.presentation().relations() {
            let swapped = rel.substitute(&images).unwrap();
            assert!(q.ring.normal_form(&swapped).unwrap().is_zero(), "{swapped}");
        }
    }

    #[test]
    fn p_polynomials_over_f2() {
        let r = PolyRing::new(CoefficientRing::F2, vec![Generator::new("Y", 1), Generator::new("Z", 2)]).unwrap();
        let y = Polynomial::generator(&r, "Y").unwrap();
        let z = Polynomial::generator(&r, "Z").unwrap();
        let mut table = PPolynomialTable::new(y, z);
        assert_eq!(p_polynomial(0, &mut table), Polynomial::one(&r));
        assert_eq!(p_polynomial(2, &mut table), parse("Y^2+Z", &r).unwrap());
        assert_eq!(p_polynomial(3, &mut table), parse("Y^3", &r).unwrap());
        // closed form sum_j C(i-j, j) Y^{i-2j} Z^j, hand-expanded
        assert_eq!(p_polynomial(4, &mut table), parse("Y^4+Y^2*Z+Z^2", &r).unwrap());
        assert_eq!(p_polynomial(5, &mut table), parse("Y^5+Y*Z^2", &r).unwrap());
    }

    #[test]
    fn grassmann_plane_over_point() {
        let b = BundleSpec::over_point(Field::R, 3, CoefficientRing::F2).unwrap();
        let g = grassmann_ring(&b, None).unwrap();
        let rels = g.ring.presentation().relations();
        assert_eq!(rels[0], parse("Y^2+Z", g.ring.poly_ring()).unwrap());
        assert_eq!(rels[1], parse("Z*Y", g.ring.poly_ring()).unwrap());
        let total: usize = (0..=10).map(|d| g.ring.dimension(d)).sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn feder_basics() {
        let b = BundleSpec::over_point(Field::R, 5, CoefficientRing::F2).unwrap();
        let f = feder_ring(&b, None).unwrap();
        let x = &f.e_lambda;
        assert!((x * &(&x.pow(1) + &f.w_d_beta)).is_zero());
        f.ring.verify_free_basis("X", 1, f.ring.truncation().unwrap()).unwrap();
        // e_alpha with X = 0 is Y
        let pr = f.ring.poly_ring();
        let images: Vec<Polynomial> = pr
            .generators()
            .iter()
            .map(|g| {
                if g.name == "X" {
                    Polynomial::zero(pr)
                } else {
                    Polynomial::generator(pr, &g.name).unwrap()
                }
            })
            .collect();
        let restricted = f.e_alpha.polynomial().substitute(&images).unwrap();
        assert_eq!(restricted, f.w_d_beta.polynomial().clone());
    }

    #[test]
    fn validation() {
        assert!(matches!(
            BundleSpec::over_point(Field::R, 1, CoefficientRing::F2),
            Err(BundleError::RankTooSmall(1))
        ));
        assert!(matches!(
            BundleSpec::over_point(Field::R, 3, CoefficientRing::Integers),
            Err(BundleError::CoefficientMismatch { .. })
        ));
        let base = f2_base(&[("x", 1)], &["x^4"]);
        let bad = parse("x", base.poly_ring()).unwrap();
        assert!(matches!(
            BundleSpec::new(Field::R, 3, base.clone(), vec![Polynomial::zero(base.poly_ring()), bad], None),
            Err(BundleError::ClassDegree { index: 2, .. })
        ));
        let clash = f2_base(&[("t", 1)], &["t^2"]);
        let b = BundleSpec::new(Field::R, 2, clash, vec![], None).unwrap();
        assert!(matches!(projective_ring(&b, CoefficientRing::F2), Err(BundleError::NameClash(_))));
        let b = BundleSpec::over_point(Field::R, 3, CoefficientRing::F2).unwrap();
        assert!(matches!(projective_ring(&b, CoefficientRing::Integers), Err(BundleError::CoefficientMismatch { .. })));
    }
}
