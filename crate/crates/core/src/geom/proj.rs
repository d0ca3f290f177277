use std::f64::consts::PI;
use std::fmt;

use super::sphere::geodesic_c;
use super::{GeomError, KScalar, KVector, DEGENERACY_CUTOFF, GEOM_TOL};
use crate::bundles::Field;

/// A left K-line `Ku`, held by a unit representative `u`.
///
/// The representative is kept exactly as constructed (after scaling to unit
/// length), so data attached to it, such as a homomorphism encoded by `a(u)`,
/// stays meaningful. Comparisons ignore the choice of representative.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint {
    rep: KVector,
}

impl ProjPoint {
    pub fn new(v: KVector) -> Result<Self, GeomError> {
        let n = v.norm();
        if n < DEGENERACY_CUTOFF {
            return Err(GeomError::NotUnit(n));
        }
        Ok(ProjPoint { rep: v.scale(1.0 / n) })
    }

    pub fn rep(&self) -> &KVector {
        &self.rep
    }

    pub fn field(&self) -> Field {
        self.rep.field()
    }

    /// `min |u - q v|` over unit scalars `q`.
    pub fn distance(&self, other: &ProjPoint) -> f64 {
        let s = self.rep.inner(&other.rep);
        let q = if s.norm() < 1e-300 {
            KScalar::one(self.field())
        } else {
            s.scale(1.0 / s.norm())
        };
        self.rep.sub(&other.rep.left_mul(q)).norm()
    }

    pub fn approx_eq(&self, other: &ProjPoint) -> bool {
        self.distance(other) < GEOM_TOL
    }

    /// The representative whose entry of largest norm is real and positive.
    pub fn normalized_rep(&self) -> KVector {
        let pivot = self
            .rep
            .entries()
            .iter()
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .copied()
            .unwrap_or_else(|| KScalar::one(self.field()));
        self.rep.left_mul(pivot.conj().scale(1.0 / pivot.norm()))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.normalized_rep().entries().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let c: Vec<String> = e.components().iter().map(|x| format!("{x:.6}")).collect();
            if c.len() == 1 {
                f.write_str(&c[0])?;
            } else {
                write!(f, "({})", c.join(" "))?;
            }
        }
        f.write_str("]")
    }
}

/// The representative of `m` whose inner product with `u` is real and
/// positive, or `None` if the lines are orthogonal.
fn aligned(u: &KVector, m: &KVector) -> Option<KVector> {
    let s = u.inner(m);
    let n = s.norm();
    (n >= DEGENERACY_CUTOFF).then(|| m.left_mul(s.scale(1.0 / n)))
}

fn check_same_space(a: &KVector, b: &KVector) -> Result<(), GeomError> {
    if a.len() != b.len() || a.field() != b.field() {
        return Err(GeomError::Dimension(a.len(), b.len()));
    }
    Ok(())
}

/// Shortest geodesic from `L` (t = 1) to `M` (t = -1), for lines that are
/// not orthogonal.
pub fn proj_rho(t: f64, l: &ProjPoint, m: &ProjPoint) -> Result<ProjPoint, GeomError> {
    check_same_space(&l.rep, &m.rep)?;
    let u = &l.rep;
    let v = aligned(u, &m.rep).ok_or(GeomError::OrthogonalLines)?;
    let field = u.field();
    let path = geodesic_c((1.0 - t) / 2.0, &u.to_real(), &v.to_real())?;
    ProjPoint::new(KVector::from_real(field, &path))
}

fn check_hom(l: &ProjPoint, m: &ProjPoint, a_u: &KVector) -> Result<f64, GeomError> {
    check_same_space(&l.rep, &m.rep)?;
    check_same_space(&l.rep, a_u)?;
    let ip = l.rep.inner(&m.rep).norm();
    if ip > GEOM_TOL {
        return Err(GeomError::NotOrthogonal(ip));
    }
    let c = a_u.inner(&m.rep);
    if a_u.sub(&m.rep.left_mul(c)).norm() > GEOM_TOL {
        return Err(GeomError::NotInTarget);
    }
    Ok(a_u.norm())
}

/// Geodesic from `L` (t = 1) to the orthogonal line `M` (t = -1) along the
/// isometry `a: L -> M`, given by `a(u)` for the representative `u` of `L`.
pub fn proj_sigma(a_u: &KVector, t: f64, l: &ProjPoint, m: &ProjPoint) -> Result<ProjPoint, GeomError> {
    let norm = check_hom(l, m, a_u)?;
    if (norm - 1.0).abs() > GEOM_TOL {
        return Err(GeomError::NotUnit(norm));
    }
    let angle = PI * (t + 1.0) / 4.0;
    ProjPoint::new(l.rep.scale(angle.sin()).add(&a_u.scale(angle.cos())))
}

/// `(L, M, a) -> ((1 + a) L, (1 + a^*) M)` for orthogonal `L`, `M` and
/// `|a| <= 1`.
pub fn proj_pi_map(l: &ProjPoint, m: &ProjPoint, a_u: &KVector) -> Result<(ProjPoint, ProjPoint), GeomError> {
    let norm = check_hom(l, m, a_u)?;
    if norm > 1.0 + GEOM_TOL {
        return Err(GeomError::TooLong(norm));
    }
    let u = &l.rep;
    let v = &m.rep;
    // a^*(v) = <v, a(u)> u
    let adj = u.left_mul(v.inner(a_u));
    Ok((ProjPoint::new(u.add(a_u))?, ProjPoint::new(v.add(&adj))?))
}

/// Inverse of [`proj_pi_map`] off the diagonal. The returned `a(u)` refers to
/// the representative stored in the returned `L`.
pub fn proj_pi_inverse(x: &ProjPoint, y: &ProjPoint) -> Result<(ProjPoint, ProjPoint, KVector), GeomError> {
    check_same_space(&x.rep, &y.rep)?;
    if x.distance(y) < DEGENERACY_CUTOFF {
        return Err(GeomError::EqualLines);
    }
    let xr = &x.rep;
    let (yr, s) = match aligned(xr, &y.rep) {
        Some(yr) => {
            let s = xr.inner(&yr).re().min(1.0);
            (yr, s)
        }
        None => (y.rep.clone(), 0.0),
    };
    // 2t / (1 + t^2) = s with 0 <= t < 1
    let t = s / (1.0 + (1.0 - s * s).sqrt());
    let k = (1.0 + t * t).sqrt() / (1.0 - t * t);
    let u = xr.sub(&yr.scale(t)).scale(k);
    let v = yr.sub(&xr.scale(t)).scale(k);
    let a_u = v.scale(t);
    Ok((ProjPoint::new(u)?, ProjPoint::new(v)?, a_u))
}
