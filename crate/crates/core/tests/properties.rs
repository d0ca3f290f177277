use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tcbundle::bundles::{q_tilde_ring, BundleSpec, Field};
use tcbundle::geom::{
    pi_inverse, pi_map, proj_pi_inverse, proj_pi_map, proj_rho, proj_sigma, sigma_sphere, KScalar, KVector,
    ProjPoint,
};
use tcbundle::poly::{parse, CoefficientRing, Generator, Monomial, PolyRing, Polynomial};

fn ring(coeffs: CoefficientRing) -> Arc<PolyRing> {
    // integral generators live in even degrees
    let s = if coeffs == CoefficientRing::F2 { 1 } else { 2 };
    PolyRing::new(
        coeffs,
        vec![Generator::new("x", s), Generator::new("y", s), Generator::new("z", 2 * s)],
    )
    .unwrap()
}

fn poly(coeffs: CoefficientRing) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::array::uniform3(0u32..4), -4i64..=4), 0..6).prop_map(move |terms| {
        let r = ring(coeffs);
        let terms: Vec<_> = terms
            .into_iter()
            .map(|(e, c)| (Monomial::new(&r, e.to_vec()), BigInt::from(c)))
            .collect();
        Polynomial::from_terms(&r, terms)
    })
}

fn coeff_ring() -> impl Strategy<Value = CoefficientRing> {
    prop_oneof![Just(CoefficientRing::F2), Just(CoefficientRing::Integers)]
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::R), Just(Field::C), Just(Field::H)]
}

fn with_polys(n: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    coeff_ring().prop_flat_map(move |c| prop::collection::vec(poly(c), n))
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(ps in with_polys(3)) {
        let (a, b, c) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(&(a - b) + b, a.clone());
        prop_assert_eq!(a * &Polynomial::one(a.ring()), a.clone());
    }

    #[test]
    fn frobenius_over_f2(p in poly(CoefficientRing::F2), q in poly(CoefficientRing::F2)) {
        prop_assert_eq!((&p + &q).pow(2), &p.pow(2) + &q.pow(2));
    }

    #[test]
    fn pow_matches_repeated_product(ps in with_polys(1), k in 0u32..7) {
        let p = &ps[0];
        let mut acc = Polynomial::one(p.ring());
        for _ in 0..k {
            acc = &acc * p;
        }
        prop_assert_eq!(p.pow(k), acc);
    }

    #[test]
    fn render_parse_round_trip(ps in with_polys(1)) {
        let p = &ps[0];
        let text = p.render();
        prop_assert_eq!(&parse(&text, p.ring()).unwrap(), p);
    }

    #[test]
    fn normal_form_is_a_ring_map(seed in any::<u64>()) {
        let b = BundleSpec::over_point(Field::R, 5, CoefficientRing::F2).unwrap();
        let q = q_tilde_ring(&b, CoefficientRing::F2).unwrap();
        let pr = q.ring.poly_ring().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut random = || {
            let terms: Vec<_> = (0..4)
                .map(|_| (Monomial::new(&pr, vec![rng.gen_range(0..7), rng.gen_range(0..7)]), BigInt::from(1)))
                .collect();
            Polynomial::from_terms(&pr, terms)
        };
        let (a, b) = (random(), random());
        let nf = |p: &Polynomial| q.ring.normal_form(p).unwrap();
        prop_assert_eq!(nf(&(&a * &b)), &nf(&a) * &nf(&b));
        prop_assert_eq!(nf(&(&a + &b)), &nf(&a) + &nf(&b));
        prop_assert_eq!(nf(nf(&a).polynomial()), nf(&a));
    }

    #[test]
    fn quaternion_associativity_and_norm(c in prop::array::uniform12(-2.0f64..2.0)) {
        let a = KScalar::new(Field::H, &c[0..4]);
        let b = KScalar::new(Field::H, &c[4..8]);
        let d = KScalar::new(Field::H, &c[8..12]);
        let lhs = (a * b) * d;
        let rhs = a * (b * d);
        let scale = 1.0 + a.norm() * b.norm() * d.norm();
        for (x, y) in lhs.components().iter().zip(rhs.components()) {
            prop_assert!((x - y).abs() <= 1e-12 * scale);
        }
        prop_assert!(((a * b).norm() - a.norm() * b.norm()).abs() <= 1e-12 * scale);
    }

    #[test]
    fn sphere_pi_round_trips(seed in any::<u64>(), dim in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = KVector::random_unit(Field::R, dim, &mut rng).to_real();
        let y = KVector::random_unit(Field::R, dim, &mut rng).to_real();
        prop_assume!((&x - &y).norm() > 1e-3);
        let (u, v, w) = pi_inverse(&x, &y).unwrap();
        prop_assert!(w.norm() < 1.0);
        let (x2, y2) = pi_map(&u, &v, &w).unwrap();
        prop_assert!((x2 - &x).norm() < 1e-9 && (y2 - &y).norm() < 1e-9);
        // and the other way round
        let u = x;
        let mut w = y.clone() - &u * u.dot(&y);
        w *= rng.gen_range(0.0..0.99) / w.norm();
        let (p, q) = pi_map(&u, &-&u, &w).unwrap();
        let (u2, _, w2) = pi_inverse(&p, &q).unwrap();
        prop_assert!((u2 - &u).norm() < 1e-9 && (w2 - &w).norm() < 1e-9);
    }

    #[test]
    fn sigma_branches_meet(seed in any::<u64>(), dim in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = KVector::random_unit(Field::R, dim, &mut rng).to_real();
        let r = KVector::random_unit(Field::R, dim, &mut rng).to_real();
        let w = r.clone() - &u * u.dot(&r);
        prop_assume!(w.norm() > 1e-3);
        let w = &w / w.norm();
        let at = |t: f64| sigma_sphere(&w, t, &u).unwrap();
        prop_assert!((at(1e-12) - at(-1e-12)).norm() < 1e-9);
        prop_assert!((at(0.0) - &w).norm() < 1e-12);
    }

    #[test]
    fn proj_pi_round_trips(seed in any::<u64>(), k in field(), len in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (l, m) = orthogonal_lines(k, len, &mut rng);
        let c = KScalar::random_unit(k, &mut rng).scale(rng.gen_range(0.0..0.95));
        let a_u = m.rep().left_mul(c);
        let (x, y) = proj_pi_map(&l, &m, &a_u).unwrap();
        let (l2, m2, a2) = proj_pi_inverse(&x, &y).unwrap();
        prop_assert!(l2.distance(&l) < 1e-9 && m2.distance(&m) < 1e-9);
        // a(q u) = q a(u)
        let q = l2.rep().inner(l.rep());
        prop_assert!(a2.sub(&a_u.left_mul(q)).norm() < 1e-9);

        let x = ProjPoint::new(KVector::random_unit(k, len, &mut rng)).unwrap();
        let y = ProjPoint::new(KVector::random_unit(k, len, &mut rng)).unwrap();
        prop_assume!(x.distance(&y) > 1e-3);
        let (l, m, a) = proj_pi_inverse(&x, &y).unwrap();
        prop_assert!(a.norm() < 1.0);
        let (x2, y2) = proj_pi_map(&l, &m, &a).unwrap();
        prop_assert!(x2.distance(&x) < 1e-9 && y2.distance(&y) < 1e-9);
    }

    #[test]
    fn proj_geodesics_ignore_representatives(seed in any::<u64>(), k in field(), len in 2usize..5, t in -1.0f64..1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = KScalar::random_unit(k, &mut rng);
        let p = KScalar::random_unit(k, &mut rng);

        let l = ProjPoint::new(KVector::random_unit(k, len, &mut rng)).unwrap();
        let m = ProjPoint::new(KVector::random_unit(k, len, &mut rng)).unwrap();
        prop_assume!(l.rep().inner(m.rep()).norm() > 1e-3);
        let l_q = ProjPoint::new(l.rep().left_mul(q)).unwrap();
        let m_p = ProjPoint::new(m.rep().left_mul(p)).unwrap();
        let a = proj_rho(t, &l, &m).unwrap();
        let b = proj_rho(t, &l_q, &m_p).unwrap();
        prop_assert!(a.distance(&b) < 1e-9);

        let (l, m) = orthogonal_lines(k, len, &mut rng);
        let c = KScalar::random_unit(k, &mut rng);
        let a_u = m.rep().left_mul(c);
        let l_q = ProjPoint::new(l.rep().left_mul(q)).unwrap();
        let m_p = ProjPoint::new(m.rep().left_mul(p)).unwrap();
        let a = proj_sigma(&a_u, t, &l, &m).unwrap();
        let b = proj_sigma(&a_u.left_mul(q), t, &l_q, &m_p).unwrap();
        prop_assert!(a.distance(&b) < 1e-9);
    }
}

fn orthogonal_lines(k: Field, len: usize, rng: &mut ChaCha8Rng) -> (ProjPoint, ProjPoint) {
    loop {
        let u = KVector::random_unit(k, len, rng);
        let r = KVector::random_unit(k, len, rng);
        let m = r.sub(&u.left_mul(r.inner(&u)));
        if m.norm() > 1e-3 {
            return (ProjPoint::new(u).unwrap(), ProjPoint::new(m).unwrap());
        }
    }
}
