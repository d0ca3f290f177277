//! Spec files and the text reports behind the command-line tool.

mod report;
mod specfile;

pub use report::{ring_dump, run_criteria, CriteriaReport, CriterionResult, Status, WhichRing};
pub use specfile::{parse_coefficients, SpecError, SpecFile};

use crate::geom::{build_sphere_planner, verify_planner, GeomError, PlannerReport};

/// Builds the planner on `S^n` and verifies it.
pub fn run_planner(n: usize, samples: usize, seed: u64) -> Result<PlannerReport, GeomError> {
    let planner = build_sphere_planner(n)?;
    Ok(verify_planner(&planner, samples, seed))
}
