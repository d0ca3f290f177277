use super::{check_dims, check_unit, GeomError, Vector, DEGENERACY_CUTOFF, GEOM_TOL};

/// `sin(t x) / sin(x)`, continuous at `x = 0`.
fn sin_ratio(t: f64, x: f64) -> f64 {
    if x < 1e-6 {
        t * (1.0 + x * x * (1.0 - t * t) / 6.0)
    } else {
        (t * x).sin() / x.sin()
    }
}

/// Shortest great-circle arc from `u` (t = 0) to `v` (t = 1).
pub fn geodesic_c(t: f64, u: &Vector, v: &Vector) -> Result<Vector, GeomError> {
    check_dims(u, v)?;
    check_unit(u)?;
    check_unit(v)?;
    let sum = (u + v).norm();
    if sum < DEGENERACY_CUTOFF {
        return Err(GeomError::Antipodal(sum));
    }
    let diff = (u - v).norm();
    let theta = 2.0 * diff.atan2(sum);
    let cos = theta.cos();
    let w = v - u * cos;
    Ok(u * (t * theta).cos() + w * sin_ratio(t, theta))
}

/// `rho(1) = u`, `rho(-1) = v`.
pub fn rho_sphere(t: f64, u: &Vector, v: &Vector) -> Result<Vector, GeomError> {
    geodesic_c((1.0 - t) / 2.0, u, v)
}

/// The half great circle from `u` (t = 1) through `w` (t = 0) to `-u`
/// (t = -1), for a unit `w` orthogonal to `u`.
pub fn sigma_sphere(w: &Vector, t: f64, u: &Vector) -> Result<Vector, GeomError> {
    check_dims(w, u)?;
    check_unit(w)?;
    check_unit(u)?;
    let ip = w.dot(u);
    if ip.abs() > GEOM_TOL {
        return Err(GeomError::NotOrthogonal(ip));
    }
    if t >= 0.0 {
        geodesic_c(t, w, u)
    } else {
        geodesic_c(-t, w, &-u)
    }
}

/// `((u, -u), w) -> (pi_+, pi_-)`, for `w` orthogonal to `u` with `|w| <= 1`.
pub fn pi_map(u: &Vector, v: &Vector, w: &Vector) -> Result<(Vector, Vector), GeomError> {
    check_dims(u, v)?;
    check_dims(u, w)?;
    check_unit(u)?;
    let anti = (u + v).norm();
    if anti > GEOM_TOL {
        return Err(GeomError::NotAntipodal(anti));
    }
    let ip = w.dot(u);
    if ip.abs() > GEOM_TOL {
        return Err(GeomError::NotOrthogonal(ip));
    }
    let s2 = w.norm_squared();
    if s2.sqrt() > 1.0 + GEOM_TOL {
        return Err(GeomError::TooLong(s2.sqrt()));
    }
    let a = (1.0 - s2) / (1.0 + s2);
    let b = 2.0 / (1.0 + s2);
    Ok((u * a + w * b, v * a + w * b))
}

/// The unique `(u, -u, w)` with `|w| < 1` mapped to `(x, y)` by [`pi_map`].
pub fn pi_inverse(x: &Vector, y: &Vector) -> Result<(Vector, Vector, Vector), GeomError> {
    check_dims(x, y)?;
    check_unit(x)?;
    check_unit(y)?;
    let diff = x - y;
    let dn = diff.norm();
    if dn < DEGENERACY_CUTOFF {
        return Err(GeomError::Diagonal(dn));
    }
    let u = &diff / dn;
    let cos = dn / 2.0;
    let w = (x + y) / (2.0 * (1.0 + cos));
    Ok((u.clone(), -u, w))
}
