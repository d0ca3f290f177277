use std::fmt::Write as _;

use crate::bundles::{feder_ring, grassmann_ring, projective_ring, q_tilde_ring, BundleError, Field};
use crate::obstruct::{
    default_k_max, gysin_equivalence_check, min_k_vanishing, symm_proj_test, symm_sphere_test, MinK,
    ObstructError,
};
use crate::poly::CoefficientRing;
use crate::ring::{Ring, RingElement};

use super::SpecFile;

/// Outcome of one criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Evaluated {
        /// Largest checked `k` below the vanishing one, with the nonzero class.
        fails_at: Option<(u32, String)>,
        passes_at: MinK,
    },
    NotApplicable(String),
    NotEvaluated(String),
    /// An internal cross-check failed.
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub key: &'static str,
    pub title: String,
    /// The class whose powers are tested; the witness is its power at `fails_at`.
    pub class: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriteriaReport {
    pub field: Field,
    pub rank: u32,
    pub k_max: u32,
    pub pair_coeffs: CoefficientRing,
    pub criteria: Vec<CriterionResult>,
}

const NOTES: [&str; 3] = [
    "A criterion passes at k when the cohomology image of the stable Euler class vanishes in degree k. \
     That is necessary for the stable cohomotopy condition but does not prove it; a failure at k refutes it.",
    "Stable range (not checked): for sphere bundles the stable condition is equivalent to the existence of \
     k nowhere-zero sections when dim B < (2k-1)n - 2.",
    "Integral criteria with twisted coefficients are not evaluated.",
];

fn from_min_k(e: &RingElement, k_max: u32) -> Status {
    let found = min_k_vanishing(e, k_max);
    let witness_k = match found {
        MinK::Found(0) => None,
        MinK::Found(k) => Some(k - 1),
        MinK::NotFoundUpTo(k) => Some(k),
    };
    Status::Evaluated {
        fails_at: witness_k.map(|k| (k, e.pow(k).to_string())),
        passes_at: found,
    }
}

fn error_status(e: ObstructError) -> Status {
    match e {
        ObstructError::Disagreement { .. } => Status::Error(e.to_string()),
        ObstructError::Bundle(BundleError::MissingTruncation) => {
            Status::NotEvaluated("needs a dimension bound for the base (set `dim` or `truncation`)".into())
        }
        other => Status::NotEvaluated(other.to_string()),
    }
}

fn sphere(spec: &SpecFile, k_max: u32) -> Status {
    let b = &spec.bundle;
    let n = b.n() as usize;
    let mut last_fail = None;
    for k in 0..=k_max {
        match gysin_equivalence_check(b, k) {
            Ok(true) => {
                return Status::Evaluated {
                    fails_at: last_fail,
                    passes_at: MinK::Found(k),
                }
            }
            Ok(false) => {
                let wn = match b.base().normal_form(b.class(n)) {
                    Ok(w) => w.pow(k),
                    Err(e) => return Status::Error(e.to_string()),
                };
                last_fail = Some((k, wn.to_string()));
            }
            Err(e) => return error_status(e),
        }
    }
    Status::Evaluated {
        fails_at: last_fail,
        passes_at: MinK::NotFoundUpTo(k_max),
    }
}

fn symm_sphere(spec: &SpecFile, k_max: u32) -> Status {
    let b = &spec.bundle;
    let p = match projective_ring(b, CoefficientRing::F2) {
        Ok(p) => p,
        Err(e) => return error_status(e.into()),
    };
    let status = from_min_k(&p.e_zeta, k_max);
    // cross-check against long division at the boundary
    if let Status::Evaluated { passes_at, .. } = &status {
        let ks: Vec<u32> = match passes_at {
            MinK::Found(k) => vec![k.saturating_sub(1), *k],
            MinK::NotFoundUpTo(k) => vec![*k],
        };
        for k in ks {
            if let Err(e) = symm_sphere_test(b, k) {
                return error_status(e);
            }
        }
    }
    status
}

fn proj_pair(spec: &SpecFile, k_max: u32, coeffs: CoefficientRing) -> Status {
    let b = &spec.bundle;
    if b.field() == Field::R && coeffs == CoefficientRing::Integers {
        return Status::NotApplicable("real bundles use F2 coefficients".into());
    }
    match q_tilde_ring(b, coeffs) {
        Ok(q) => from_min_k(&q.e_alpha_tilde, k_max),
        Err(e) => error_status(e.into()),
    }
}

fn symm_proj(spec: &SpecFile, k_max: u32) -> Status {
    let b = &spec.bundle;
    let f = match feder_ring(b, None) {
        Ok(f) => f,
        Err(e) => return error_status(e.into()),
    };
    let status = from_min_k(&f.e_alpha, k_max);
    if let Status::Evaluated { passes_at, .. } = &status {
        let ks: Vec<u32> = match passes_at {
            MinK::Found(k) => vec![k.saturating_sub(1), *k],
            MinK::NotFoundUpTo(k) => vec![*k],
        };
        for k in ks {
            if let Err(e) = symm_proj_test(b, k, None) {
                return error_status(e);
            }
        }
    }
    status
}

/// Evaluates every criterion that applies to the bundle.
pub fn run_criteria(
    spec: &SpecFile,
    k_max: Option<u32>,
    coeffs: Option<CoefficientRing>,
) -> CriteriaReport {
    let b = &spec.bundle;
    let k_max = k_max.or(spec.k_max).unwrap_or_else(|| default_k_max(b));
    let pair_coeffs = coeffs.or(spec.pair_coeffs).unwrap_or(match b.field() {
        Field::R => CoefficientRing::F2,
        _ => CoefficientRing::Integers,
    });
    let real = b.field() == Field::R;
    let not_real = || Status::NotApplicable("sphere-bundle criteria are for real bundles".into());
    let criteria = vec![
        CriterionResult {
            key: "sphere",
            title: "sphere bundle, w_n^k divisible by w_{n+1}".into(),
            class: format!("w{}", b.n()),
            status: if real { sphere(spec, k_max) } else { not_real() },
        },
        CriterionResult {
            key: "symm_sphere",
            title: "symmetrized sphere bundle, e(zeta)^k = 0".into(),
            class: "e(zeta)".into(),
            status: if real { symm_sphere(spec, k_max) } else { not_real() },
        },
        CriterionResult {
            key: "proj_pair",
            title: format!("projective bundle, e(alpha~)^k = 0 over {}", pair_coeffs),
            class: "e(alpha~)".into(),
            status: proj_pair(spec, k_max, pair_coeffs),
        },
        CriterionResult {
            key: "symm_proj",
            title: "symmetrized projective bundle, e(alpha)^k = 0 over F2".into(),
            class: "e(alpha)".into(),
            status: symm_proj(spec, k_max),
        },
        CriterionResult {
            key: "twisted_sphere",
            title: "integral sphere-bundle criteria with twisted coefficients".into(),
            class: String::new(),
            status: Status::NotEvaluated("twisted coefficients are out of scope".into()),
        },
    ];
    CriteriaReport {
        field: b.field(),
        rank: b.rank(),
        k_max,
        pair_coeffs,
        criteria,
    }
}

impl CriteriaReport {
    /// True if an internal cross-check disagreed.
    pub fn has_errors(&self) -> bool {
        self.criteria.iter().any(|c| matches!(c.status, Status::Error(_)))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "bundle: K = {}, rank {}, n = {}; k searched up to {}",
            self.field,
            self.rank,
            self.rank - 1,
            self.k_max
        );
        for c in &self.criteria {
            let _ = write!(out, "\n{}: ", c.key);
            match &c.status {
                Status::Evaluated { fails_at, passes_at } => {
                    let mut parts = Vec::new();
                    if let Some((k, _)) = fails_at {
                        parts.push(format!("fails at k={k}"));
                    }
                    match passes_at {
                        MinK::Found(k) => parts.push(format!("passes at k={k}")),
                        MinK::NotFoundUpTo(k) => parts.push(format!("does not pass for any k <= {k}")),
                    }
                    let _ = writeln!(out, "{}", parts.join(", "));
                    let _ = writeln!(out, "  {}", c.title);
                    // the sphere test asks for divisibility, the others for vanishing
                    let (bad, good) = if c.key == "sphere" {
                        ("not divisible", "divisible")
                    } else {
                        ("nonzero", "zero")
                    };
                    let mut detail = Vec::new();
                    if let Some((k, w)) = fails_at {
                        detail.push(format!("{bad} at k={k}, witness {w}"));
                    }
                    if let MinK::Found(k) = passes_at {
                        detail.push(format!("{good} at k={k}"));
                    }
                    let _ = writeln!(out, "  {}^k: {}", c.class, detail.join("; "));
                }
                Status::NotApplicable(why) => {
                    let _ = writeln!(out, "not applicable: {why}");
                }
                Status::NotEvaluated(why) => {
                    let _ = writeln!(out, "not evaluated: {why}");
                }
                Status::Error(why) => {
                    let _ = writeln!(out, "ERROR: {why}");
                }
            }
        }
        out.push_str("\nnotes:\n");
        for n in NOTES {
            let _ = writeln!(out, "  - {n}");
        }
        out
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field={}", self.field);
        let _ = writeln!(out, "rank={}", self.rank);
        let _ = writeln!(out, "n={}", self.rank - 1);
        let _ = writeln!(out, "kmax={}", self.k_max);
        let _ = writeln!(out, "pair_coeffs={}", self.pair_coeffs.name());
        for c in &self.criteria {
            let key = c.key;
            match &c.status {
                Status::Evaluated { fails_at, passes_at } => {
                    let _ = writeln!(out, "{key}.status=evaluated");
                    if let Some((k, w)) = fails_at {
                        let _ = writeln!(out, "{key}.fails_at={k}");
                        let _ = writeln!(out, "{key}.witness={w}");
                        let _ = writeln!(out, "{key}.witness_class={}^{k}", c.class);
                    }
                    match passes_at {
                        MinK::Found(k) => {
                            let _ = writeln!(out, "{key}.passes_at={k}");
                        }
                        MinK::NotFoundUpTo(_) => {
                            let _ = writeln!(out, "{key}.passes_at=none");
                        }
                    }
                }
                Status::NotApplicable(why) => {
                    let _ = writeln!(out, "{key}.status=not_applicable\n{key}.detail={why}");
                }
                Status::NotEvaluated(why) => {
                    let _ = writeln!(out, "{key}.status=not_evaluated\n{key}.detail={why}");
                }
                Status::Error(why) => {
                    let _ = writeln!(out, "{key}.status=error\n{key}.detail={why}");
                }
            }
        }
        let _ = writeln!(out, "cohomology_shadow_only=true");
        out
    }
}

/// Which ring `ring` dumps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhichRing {
    Proj,
    QTilde,
    Grassmann,
    Feder,
}

impl WhichRing {
    pub fn parse(s: &str) -> Option<WhichRing> {
        match s {
            "proj" => Some(WhichRing::Proj),
            "qtilde" => Some(WhichRing::QTilde),
            "grassmann" => Some(WhichRing::Grassmann),
            "feder" => Some(WhichRing::Feder),
            _ => None,
        }
    }
}

/// The completed presentation and its degreewise ranks.
pub fn ring_dump(spec: &SpecFile, which: WhichRing, coeffs: Option<CoefficientRing>) -> Result<String, BundleError> {
    let b = &spec.bundle;
    let coeffs = coeffs.or(spec.pair_coeffs).unwrap_or(match b.field() {
        Field::R => CoefficientRing::F2,
        _ => CoefficientRing::Integers,
    });
    let (ring, classes): (Ring, Vec<(&str, RingElement)>) = match which {
        WhichRing::Proj => {
            let p = projective_ring(b, coeffs)?;
            let named = vec![("e(zeta)", p.e_zeta.clone()), ("e(eta)", p.e_eta.clone())];
            (p.ring, named)
        }
        WhichRing::QTilde => {
            let q = q_tilde_ring(b, coeffs)?;
            let named = vec![("e(alpha~)", q.e_alpha_tilde.clone())];
            (q.ring, named)
        }
        WhichRing::Grassmann => {
            let g = grassmann_ring(b, None)?;
            let named = vec![("w_d(beta)", g.y.clone()), ("w_2d(beta)", g.z.clone())];
            (g.ring, named)
        }
        WhichRing::Feder => {
            let f = feder_ring(b, None)?;
            let named = vec![
                ("e(lambda)", f.e_lambda.clone()),
                ("e(alpha)", f.e_alpha.clone()),
                ("w_d(beta)", f.w_d_beta.clone()),
            ];
            (f.ring, named)
        }
    };
    let mut out = String::new();
    let _ = writeln!(out, "{ring}");
    for (name, e) in classes {
        let _ = writeln!(out, "{name} = {e}");
    }
    let top = ring.top_degree().or(ring.truncation());
    match top {
        Some(top) => {
            let dims: Vec<String> = (0..=top).map(|d| ring.dimension(d).to_string()).collect();
            let _ = writeln!(out, "ranks by degree 0..{top}: {}", dims.join(" "));
        }
        None => {
            let _ = writeln!(out, "infinite ring (no top degree)");
        }
    }
    Ok(out)
}
