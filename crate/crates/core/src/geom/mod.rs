//! Explicit geodesics and motion planners on a single fibre: the unit
//! sphere `S(V)` and the projective spaces `P_K(V)`.
//!
//! Geometric identities are held to [`GEOM_TOL`]; inputs closer than
//! [`DEGENERACY_CUTOFF`] to a place where a formula breaks down are rejected.

mod kscalar;
mod planner;
mod proj;
mod sphere;

pub use kscalar::{KScalar, KVector};
pub use planner::{
    build_sphere_planner, geodesic_equivariance_error, random_orthogonal, random_unitary, trivial_planner, verify_planner, Planner,
    PlannerReport, PlannerRule, Symmetry,
};
pub use proj::{proj_pi_inverse, proj_pi_map, proj_rho, proj_sigma, ProjPoint};
pub use sphere::{geodesic_c, pi_inverse, pi_map, rho_sphere, sigma_sphere};

use nalgebra::DVector;
use thiserror::Error;

pub type Vector = DVector<f64>;

pub const GEOM_TOL: f64 = 1e-9;
pub const SCALAR_TOL: f64 = 1e-12;
pub const DEGENERACY_CUTOFF: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("points are antipodal (|u + v| = {0:e})")]
    Antipodal(f64),
    #[error("points are not antipodal (|u + v| = {0:e})")]
    NotAntipodal(f64),
    #[error("points coincide (|u - v| = {0:e})")]
    Diagonal(f64),
    #[error("vector is not a unit vector (norm {0})")]
    NotUnit(f64),
    #[error("vectors are not orthogonal (inner product {0:e})")]
    NotOrthogonal(f64),
    #[error("lines are orthogonal")]
    OrthogonalLines,
    #[error("lines coincide")]
    EqualLines,
    #[error("homomorphism has norm {0} > 1")]
    TooLong(f64),
    #[error("image of the homomorphism does not lie in the target line")]
    NotInTarget,
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("time parameter {0} outside [-1, 1]")]
    TimeOutOfRange(f64),
    #[error("no nowhere-zero section of the complement bundle is implemented for n = {0}: \
             S^{0} has no complex structure, and the vector-product section for n = 2 is not built")]
    NoSection(usize),
}

fn check_unit(u: &Vector) -> Result<(), GeomError> {
    let n = u.norm();
    if (n - 1.0).abs() > GEOM_TOL {
        return Err(GeomError::NotUnit(n));
    }
    Ok(())
}

fn check_dims(u: &Vector, v: &Vector) -> Result<(), GeomError> {
    if u.len() != v.len() {
        return Err(GeomError::Dimension(u.len(), v.len()));
    }
    Ok(())
}
