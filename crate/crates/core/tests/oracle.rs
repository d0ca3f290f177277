mod common;

use common::{count_mismatches, Oracle};
use tcbundle::bundles::{feder_ring, grassmann_ring, projective_ring, q_tilde_ring, BundleSpec, Field};
use tcbundle::poly::{parse, CoefficientRing, Generator, PolyRing};
use tcbundle::ring::{Ring, RingPresentation, Strategy};

fn span(ring: &Ring) -> u32 {
    ring.truncation().or(ring.top_degree()).unwrap() + 2
}

fn point(n: u32) -> BundleSpec {
    BundleSpec::over_point(Field::R, n + 1, CoefficientRing::F2).unwrap()
}

#[test]
fn milnor_rings_match_oracle() {
    for n in [2, 4] {
        let q = q_tilde_ring(&point(n), CoefficientRing::F2).unwrap();
        assert_eq!(count_mismatches(&q.ring, span(&q.ring)), 0, "n = {n}");
    }
}

#[test]
fn grassmann_ring_matches_oracle() {
    let g = grassmann_ring(&point(2), None).unwrap();
    assert_eq!(count_mismatches(&g.ring, span(&g.ring)), 0);
}

#[test]
fn feder_ring_matches_oracle() {
    let f = feder_ring(&point(2), None).unwrap();
    assert_eq!(count_mismatches(&f.ring, span(&f.ring)), 0);
}

#[test]
fn groebner_ring_matches_oracle() {
    let pr = PolyRing::new(CoefficientRing::F2, vec![Generator::new("x", 1), Generator::new("y", 2)]).unwrap();
    let rels = ["x^3 + x*y", "y^2 + x^2*y"].map(|r| parse(r, &pr).unwrap()).to_vec();
    let ring = Ring::new(RingPresentation::new(pr, rels, Strategy::GroebnerF2, Some(9)).unwrap()).unwrap();
    assert_eq!(count_mismatches(&ring, 11), 0);
}

#[test]
fn projective_bundle_over_truncated_base_matches_oracle() {
    let pr = PolyRing::new(CoefficientRing::F2, vec![Generator::new("x", 1), Generator::new("y", 2)]).unwrap();
    let base = RingPresentation::new(pr.clone(), vec![], Strategy::GroebnerF2, Some(4)).unwrap();
    let classes = ["x", "x^2 + y", "x*y"].map(|c| parse(c, &pr).unwrap()).to_vec();
    let b = BundleSpec::new(Field::R, 3, base, classes, None).unwrap();
    let p = projective_ring(&b, CoefficientRing::F2).unwrap();
    assert_eq!(count_mismatches(&p.ring, span(&p.ring)), 0);
}

#[test]
fn oracle_sees_known_identities() {
    // (T+S)^6 = T^4 S^2 + T^2 S^4 != 0 and (T+S)^7 = 0 for n = 4
    let q = q_tilde_ring(&point(4), CoefficientRing::F2).unwrap();
    let o = Oracle::from_ring(&q.ring);
    let pr = q.ring.poly_ring();
    let e = parse("T + S", pr).unwrap();
    let w = parse("T^4*S^2 + T^2*S^4", pr).unwrap();
    assert!(o.equivalent(&e.pow(6), &w));
    assert!(!o.is_zero(&w));
    assert!(o.is_zero(&e.pow(7)));
}
