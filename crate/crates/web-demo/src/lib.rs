use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wasm_bindgen::prelude::*;

use tcbundle::bundles::{feder_ring, grassmann_ring, projective_ring, q_tilde_ring, Field};
use tcbundle::cli::{run_criteria, SpecFile};
use tcbundle::geom::{build_sphere_planner, KVector};
use tcbundle::poly::CoefficientRing;
use tcbundle::ring::Ring;

/// Criteria report for a spec file, as text or key=value lines.
#[wasm_bindgen]
pub fn criteria_report(spec: &str, machine: bool) -> Result<String, JsError> {
    let spec = SpecFile::parse(spec).map_err(|e| JsError::new(&e.to_string()))?;
    let report = run_criteria(&spec, None, None);
    Ok(if machine {
        report.render_machine()
    } else {
        report.render_text()
    })
}

/// A planned path on S^3 between two seeded random points (or a point and
/// its antipode). Returns `steps + 1` points as a flat list of 4-vectors;
/// the rule used is reported by [`planner_rule`].
#[wasm_bindgen]
pub fn planner_path(seed: u64, steps: u32, antipodal: bool) -> Result<Vec<f64>, JsError> {
    let (u, v) = endpoints(seed, antipodal);
    let planner = build_sphere_planner(3).map_err(|e| JsError::new(&e.to_string()))?;
    // paths run from u at t = 1 to v at t = -1
    let ts: Vec<f64> = (0..=steps).map(|i| 1.0 - 2.0 * i as f64 / steps.max(1) as f64).collect();
    let path = planner.plan(&ts, &u, &v).map_err(|e| JsError::new(&e.to_string()))?;
    Ok(path.iter().flat_map(|p| p.iter().copied()).collect())
}

#[wasm_bindgen]
pub fn planner_rule(seed: u64, antipodal: bool) -> String {
    let (u, v) = endpoints(seed, antipodal);
    match build_sphere_planner(3) {
        Ok(p) => p.rule_for(&u, &v).map_or("none".into(), |r| r.name().to_string()),
        Err(e) => e.to_string(),
    }
}

fn endpoints(seed: u64, antipodal: bool) -> (tcbundle::geom::Vector, tcbundle::geom::Vector) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = KVector::random_unit(Field::R, 4, &mut rng).to_real();
    let v = if antipodal {
        -&u
    } else {
        KVector::random_unit(Field::R, 4, &mut rng).to_real()
    };
    (u, v)
}

fn ring_for(spec: &SpecFile, which: &str) -> Result<Ring, String> {
    let b = &spec.bundle;
    let coeffs = spec.pair_coeffs.unwrap_or(match b.field() {
        Field::R => CoefficientRing::F2,
        _ => CoefficientRing::Integers,
    });
    let ring = match which {
        "proj" => projective_ring(b, coeffs).map(|r| r.ring),
        "qtilde" => q_tilde_ring(b, coeffs).map(|r| r.ring),
        "grassmann" => grassmann_ring(b, None).map(|r| r.ring),
        "feder" => feder_ring(b, None).map(|r| r.ring),
        other => return Err(format!("unknown ring `{other}`")),
    };
    ring.map_err(|e| e.to_string())
}

/// Normal form of `element^k` in one of the bundle rings, one line per power.
#[wasm_bindgen]
pub fn power_table(spec: &str, which: &str, element: &str, k: u32) -> Result<String, JsError> {
    let spec = SpecFile::parse(spec).map_err(|e| JsError::new(&e.to_string()))?;
    let ring = ring_for(&spec, which).map_err(|e| JsError::new(&e))?;
    let e = ring.parse(element).map_err(|e| JsError::new(&e.to_string()))?;
    let mut out = format!("{ring}\n");
    let mut power = ring.one();
    for i in 0..=k {
        out.push_str(&format!("({element})^{i} = {power}\n"));
        power = &power * &e;
    }
    Ok(out)
}
