use std::f64::consts::PI;
use std::fmt;

use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::sphere::{geodesic_c, pi_inverse, pi_map, rho_sphere, sigma_sphere};
use super::{GeomError, Vector, DEGENERACY_CUTOFF, GEOM_TOL};

/// Isometries a rule commutes with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Orthogonal,
    /// Unitary for the complex structure `J(x, y) = (-y, x)`.
    Unitary,
}

/// One local rule of a motion planner on `S^n`.
pub trait PlannerRule: Send + Sync {
    fn name(&self) -> &str;
    fn contains(&self, u: &Vector, v: &Vector) -> bool;
    /// Path from `u` (t = 1) to `v` (t = -1).
    fn path(&self, t: f64, u: &Vector, v: &Vector) -> Result<Vector, GeomError>;
    /// Evaluates the path at several times; rules with per-pair setup
    /// override this.
    fn sample(&self, ts: &[f64], u: &Vector, v: &Vector) -> Result<Vec<Vector>, GeomError> {
        ts.iter().map(|&t| self.path(t, u, v)).collect()
    }
    /// Upper bound on the speed `|d/dt path|`.
    fn speed_bound(&self) -> f64;
    fn symmetry(&self) -> Symmetry;
}

struct GeodesicRule;

impl PlannerRule for GeodesicRule {
    fn name(&self) -> &str {
        "geodesic"
    }

    fn contains(&self, u: &Vector, v: &Vector) -> bool {
        (u + v).norm() >= DEGENERACY_CUTOFF
    }

    fn path(&self, t: f64, u: &Vector, v: &Vector) -> Result<Vector, GeomError> {
        check_time(t)?;
        rho_sphere(t, u, v)
    }

    fn speed_bound(&self) -> f64 {
        PI / 2.0
    }

    fn symmetry(&self) -> Symmetry {
        Symmetry::Orthogonal
    }
}

/// The rule built from the nowhere-zero section `u -> Ju` of the complement
/// bundle over `S^n`, `n` odd.
struct ComplexStructureRule;

fn j(u: &Vector) -> Vector {
    let m = u.len() / 2;
    Vector::from_fn(u.len(), |i, _| if i < m { -u[i + m] } else { u[i - m] })
}

impl ComplexStructureRule {
    fn at(&self, t: f64, u0: &Vector, v0: &Vector, w: &Vector) -> Result<Vector, GeomError> {
        check_time(t)?;
        if t <= -0.5 {
            Ok(pi_map(u0, v0, &(w * (-2.0 * t - 1.0)))?.1)
        } else if t < 0.5 {
            sigma_sphere(&j(u0), 2.0 * t, u0)
        } else {
            Ok(pi_map(u0, v0, &(w * (2.0 * t - 1.0)))?.0)
        }
    }
}

impl PlannerRule for ComplexStructureRule {
    fn name(&self) -> &str {
        "complex-structure"
    }

    fn contains(&self, u: &Vector, v: &Vector) -> bool {
        (u - v).norm() >= DEGENERACY_CUTOFF
    }

    fn path(&self, t: f64, u: &Vector, v: &Vector) -> Result<Vector, GeomError> {
        let (u0, v0, w) = pi_inverse(u, v)?;
        self.at(t, &u0, &v0, &w)
    }

    fn sample(&self, ts: &[f64], u: &Vector, v: &Vector) -> Result<Vec<Vector>, GeomError> {
        let (u0, v0, w) = pi_inverse(u, v)?;
        ts.iter().map(|&t| self.at(t, &u0, &v0, &w)).collect()
    }

    fn speed_bound(&self) -> f64 {
        // the outer pieces move |w| at speed <= 2 and pi_+ has angular
        // derivative 2 / (1 + s^2) <= 2 in s; the middle runs a half circle
        // at speed pi
        4.0
    }

    fn symmetry(&self) -> Symmetry {
        Symmetry::Unitary
    }
}

fn check_time(t: f64) -> Result<(), GeomError> {
    if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&t) {
        return Err(GeomError::TimeOutOfRange(t));
    }
    Ok(())
}

/// Ordered local rules on `S^n` (ambient dimension `n + 1`).
pub struct Planner {
    n: usize,
    rules: Vec<Box<dyn PlannerRule>>,
}

impl Planner {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rules(&self) -> &[Box<dyn PlannerRule>] {
        &self.rules
    }

    /// The first rule whose domain contains `(u, v)`.
    pub fn rule_for(&self, u: &Vector, v: &Vector) -> Option<&dyn PlannerRule> {
        self.rules.iter().find(|r| r.contains(u, v)).map(|r| r.as_ref())
    }

    /// Path from `u` to `v` by the first applicable rule.
    pub fn plan(&self, ts: &[f64], u: &Vector, v: &Vector) -> Result<Vec<Vector>, GeomError> {
        let rule = self.rule_for(u, v).ok_or(GeomError::Antipodal((u + v).norm()))?;
        rule.sample(ts, u, v)
    }
}

impl fmt::Debug for Planner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.rules.iter().map(|r| r.name()).collect();
        f.debug_struct("Planner").field("n", &self.n).field("rules", &names).finish()
    }
}

/// Geodesic rule plus the complex-structure rule, for odd `n`.
pub fn build_sphere_planner(n: usize) -> Result<Planner, GeomError> {
    if n.is_multiple_of(2) {
        return Err(GeomError::NoSection(n));
    }
    Ok(Planner {
        n,
        rules: vec![Box::new(GeodesicRule), Box::new(ComplexStructureRule)],
    })
}

/// The geodesic rule alone; it misses antipodal pairs.
pub fn trivial_planner(n: usize) -> Planner {
    Planner {
        n,
        rules: vec![Box::new(GeodesicRule)],
    }
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn random_unit<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vector {
    loop {
        let v = Vector::from_fn(dim, |_, _| gaussian(rng));
        let n = v.norm();
        if n > 1e-6 {
            return v / n;
        }
    }
}

/// Haar-random orthogonal matrix.
pub fn random_orthogonal<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<f64> {
    let a = DMatrix::from_fn(dim, dim, |_, _| gaussian(rng));
    let qr = a.qr();
    let (q, r) = (qr.q(), qr.r());
    let signs = DMatrix::from_diagonal(&r.diagonal().map(|x| if x < 0.0 { -1.0 } else { 1.0 }));
    q * signs
}

/// Random unitary matrix of `C^{dim/2}`, acting on `R^dim` with coordinates
/// `(x, y)` for `x + iy`.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<f64> {
    let m = dim / 2;
    let a = DMatrix::from_fn(m, m, |_, _| Complex::new(gaussian(rng), gaussian(rng)));
    let q = a.qr().q();
    DMatrix::from_fn(dim, dim, |i, k| {
        let z = q[(i % m, k % m)];
        match (i < m, k < m) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    })
}

/// Numeric checks of a planner on seeded random pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct PlannerReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub resolution: usize,
    pub max_endpoint_error: f64,
    pub max_diagonal_error: f64,
    pub max_unit_error: f64,
    pub cover_failures: usize,
    /// Largest displacement between adjacent time samples.
    pub max_step: f64,
    /// Largest excess of a step over the rule's speed bound times the step.
    pub max_continuity_excess: f64,
    pub max_equivariance_error: f64,
    pub path_errors: usize,
}

impl PlannerReport {
    pub fn passes(&self) -> bool {
        self.max_endpoint_error < GEOM_TOL
            && self.max_diagonal_error < GEOM_TOL
            && self.max_unit_error < GEOM_TOL
            && self.cover_failures == 0
            && self.max_continuity_excess <= 1e-6
            && self.max_equivariance_error < GEOM_TOL
            && self.path_errors == 0
    }

    /// `key=value` lines in a fixed order.
    pub fn to_key_values(&self) -> String {
        let lines = [
            format!("n={}", self.n),
            format!("samples={}", self.samples),
            format!("seed={}", self.seed),
            format!("resolution={}", self.resolution),
            format!("max_endpoint_error={:e}", self.max_endpoint_error),
            format!("max_diagonal_error={:e}", self.max_diagonal_error),
            format!("max_unit_error={:e}", self.max_unit_error),
            format!("cover_failures={}", self.cover_failures),
            format!("max_step={:e}", self.max_step),
            format!("max_continuity_excess={:e}", self.max_continuity_excess),
            format!("max_equivariance_error={:e}", self.max_equivariance_error),
            format!("path_errors={}", self.path_errors),
            format!("verdict={}", if self.passes() { "pass" } else { "fail" }),
        ];
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

#[derive(Clone, Copy)]
enum PairKind {
    Random,
    Diagonal,
    Antipodal,
    NearAntipodal,
}

fn sample_pair<R: Rng + ?Sized>(dim: usize, kind: PairKind, rng: &mut R) -> (Vector, Vector) {
    let u = random_unit(dim, rng);
    let v = match kind {
        PairKind::Random => random_unit(dim, rng),
        PairKind::Diagonal => u.clone(),
        PairKind::Antipodal => -&u,
        PairKind::NearAntipodal => {
            let p = random_unit(dim, rng) * 1e-3;
            let v = -&u + p;
            let n = v.norm();
            v / n
        }
    };
    (u, v)
}

/// Runs every check on `samples` seeded pairs, mixing random, diagonal,
/// antipodal and nearly antipodal pairs.
pub fn verify_planner(planner: &Planner, samples: usize, seed: u64) -> PlannerReport {
    const RESOLUTION: usize = 256;
    let dim = planner.n + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid: Vec<f64> = (0..=RESOLUTION)
        .map(|i| -1.0 + 2.0 * i as f64 / RESOLUTION as f64)
        .collect();
    let dt = 2.0 / RESOLUTION as f64;
    let equi_ts = [-1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0];
    let mut report = PlannerReport {
        n: planner.n,
        samples,
        seed,
        resolution: RESOLUTION,
        max_endpoint_error: 0.0,
        max_diagonal_error: 0.0,
        max_unit_error: 0.0,
        cover_failures: 0,
        max_step: 0.0,
        max_continuity_excess: f64::NEG_INFINITY,
        max_equivariance_error: 0.0,
        path_errors: 0,
    };
    for i in 0..samples {
        let kind = match i % 8 {
            0 => PairKind::Diagonal,
            1 => PairKind::Antipodal,
            2 => PairKind::NearAntipodal,
            _ => PairKind::Random,
        };
        let (u, v) = sample_pair(dim, kind, &mut rng);
        let mut covered = false;
        for rule in planner.rules() {
            if !rule.contains(&u, &v) {
                continue;
            }
            covered = true;
            let path = match rule.sample(&grid, &u, &v) {
                Ok(p) => p,
                Err(_) => {
                    report.path_errors += 1;
                    continue;
                }
            };
            let end = (&path[RESOLUTION] - &u).norm().max((&path[0] - &v).norm());
            report.max_endpoint_error = report.max_endpoint_error.max(end);
            for (k, p) in path.iter().enumerate() {
                report.max_unit_error = report.max_unit_error.max((p.norm() - 1.0).abs());
                if matches!(kind, PairKind::Diagonal) {
                    report.max_diagonal_error = report.max_diagonal_error.max((p - &u).norm());
                }
                if k > 0 {
                    let step = (p - &path[k - 1]).norm();
                    report.max_step = report.max_step.max(step);
                    let excess = step - rule.speed_bound() * dt;
                    report.max_continuity_excess = report.max_continuity_excess.max(excess);
                }
            }
            let g = match rule.symmetry() {
                Symmetry::Orthogonal => random_orthogonal(dim, &mut rng),
                Symmetry::Unitary => random_unitary(dim, &mut rng),
            };
            let (gu, gv) = (&g * &u, &g * &v);
            match (rule.sample(&equi_ts, &gu, &gv), rule.sample(&equi_ts, &u, &v)) {
                (Ok(moved), Ok(base)) => {
                    for (a, b) in moved.iter().zip(&base) {
                        let err = (a - &g * b).norm();
                        report.max_equivariance_error = report.max_equivariance_error.max(err);
                    }
                }
                _ => report.path_errors += 1,
            }
        }
        if !covered {
            report.cover_failures += 1;
        }
    }
    if report.max_continuity_excess == f64::NEG_INFINITY {
        report.max_continuity_excess = 0.0;
    }
    report
}

/// `c(t, g u, g v)` against `g c(t, u, v)` for random orthogonal `g`.
pub fn geodesic_equivariance_error(dim: usize, trials: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let (u, v) = sample_pair(dim, PairKind::Random, &mut rng);
        let g = random_orthogonal(dim, &mut rng);
        let t: f64 = rng.gen();
        if let (Ok(a), Ok(b)) = (geodesic_c(t, &(&g * &u), &(&g * &v)), geodesic_c(t, &u, &v)) {
            worst = worst.max((a - &g * b).norm());
        }
    }
    worst
}
