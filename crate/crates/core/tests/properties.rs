mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use reeskit::coeff::Coeff;
use reeskit::groebner::Ideal;
use reeskit::monomial::Monomial;
use reeskit::poly::{PolyRing, Polynomial};
use reeskit::ring::{AffineRing, RingMap};

fn ring() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z"])
}

fn arb_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, 3), -5i64..=5), 0..=max_terms)
}

fn build(r: &Arc<PolyRing>, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    let ts = terms
        .iter()
        .filter(|(e, c)| *c != 0 && e.iter().sum::<u32>() <= 3)
        .map(|(e, c)| (Monomial::new(e.clone()), Coeff::Rational(BigRational::from_integer(BigInt::from(*c)))))
        .collect();
    Polynomial::from_terms(r, ts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normal_form_is_idempotent(gens in prop::collection::vec(arb_poly(2, 3), 1..3), f in arb_poly(3, 4)) {
        let r = ring();
        let a = AffineRing::polynomial(&r);
        let i = Ideal::new(&a, gens.iter().map(|g| build(&r, g)).collect()).unwrap();
        let f = build(&r, &f);
        let nf = i.normal_form(&f);
        prop_assert_eq!(i.normal_form(&nf), nf.clone());
        prop_assert!(i.contains(&(&f - &nf)));
    }

    #[test]
    fn basis_ignores_generator_order(gens in prop::collection::vec(arb_poly(2, 3), 1..4)) {
        let r = ring();
        let a = AffineRing::polynomial(&r);
        let ps: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let mut rev = ps.clone();
        rev.reverse();
        let i = Ideal::new(&a, ps).unwrap();
        let j = Ideal::new(&a, rev).unwrap();
        prop_assert_eq!(i.groebner_basis(), j.groebner_basis());
        prop_assert_eq!(i.to_string(), j.to_string());
    }

    #[test]
    fn combinations_are_members(gens in prop::collection::vec(arb_poly(2, 2), 1..3), mults in prop::collection::vec(arb_poly(1, 2), 3)) {
        let r = ring();
        let a = AffineRing::polynomial(&r);
        let ps: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
        let combo = ps.iter().zip(&mults).fold(r.zero(), |acc, (g, h)| &acc + &(g * &build(&r, h)));
        let i = Ideal::new(&a, ps).unwrap();
        prop_assert!(i.contains(&combo));
        prop_assert!(i.normal_form(&combo).is_zero());
    }

    #[test]
    fn printed_polynomials_parse_back(f in arb_poly(3, 5)) {
        let r = ring();
        let f = build(&r, &f);
        prop_assert_eq!(common::poly(&r, &f.to_string()), f);
    }

    #[test]
    fn ring_maps_compose(img1 in prop::collection::vec(arb_poly(1, 2), 3), img2 in prop::collection::vec(arb_poly(1, 2), 3), f in arb_poly(2, 3)) {
        let r = ring();
        let a = AffineRing::polynomial(&r);
        let phi = RingMap::new(&a, &a, img1.iter().map(|p| build(&r, p)).collect()).unwrap();
        let psi = RingMap::new(&a, &a, img2.iter().map(|p| build(&r, p)).collect()).unwrap();
        let f = build(&r, &f);
        let both = phi.then(&psi).unwrap();
        prop_assert_eq!(both.apply(&f).unwrap(), psi.apply(&phi.apply(&f).unwrap()).unwrap());
    }

    #[test]
    fn quotient_ring_reduction_is_canonical(f in arb_poly(3, 4), h in arb_poly(1, 2)) {
        let r = ring();
        let q = AffineRing::new(&r, vec![common::poly(&r, "x^2 - y*z"), common::poly(&r, "z^2")]).unwrap();
        let f = build(&r, &f);
        let shifted = &f + &(&build(&r, &h) * &common::poly(&r, "x^2 - y*z"));
        prop_assert_eq!(q.reduce(&f), q.reduce(&shifted));
    }
}
