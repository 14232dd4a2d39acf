mod common;

use common::*;
use reeskit::poly::PolyRing;

#[test]
fn oracle_membership_by_hand() {
    let a = quotient(&["x", "y"], "");
    let i = ideal(&a, "x^2, y");
    assert!(member(&i, &poly(a.poly_ring(), "x^3 + x*y"), 4));
    assert!(!member(&i, &poly(a.poly_ring(), "x"), 6));
    assert!(!member(&i, &poly(a.poly_ring(), "x^5"), 4));
}

#[test]
fn oracle_respects_ring_relations() {
    let a = quotient(&["x"], "x^2");
    let zero = ideal(&a, "");
    assert!(member(&zero, &poly(a.poly_ring(), "x^3"), 4));
    assert!(!member(&zero, &poly(a.poly_ring(), "x"), 4));
}

#[test]
fn oracle_elimination_of_parabola() {
    let a = quotient(&["t", "x", "y"], "");
    let i = ideal(&a, "x - t, y - t^2");
    let found = eliminated(&i, &[0], 4);
    let r = PolyRing::rational(&["t", "x", "y"]);
    let target = Vector::from_poly(&poly(&r, "y - x^2"));
    let mut span = Echelon::new();
    for v in &found {
        span.insert(v);
    }
    assert!(span.contains(&target));
    assert!(found.iter().all(|v| v.0.keys().all(|e| e[0] == 0)));
}

#[test]
fn oracle_colon_of_monomial_ideal() {
    let a = quotient(&["x", "y"], "");
    let i = ideal(&a, "x^2, x*y");
    let j = vec![Vector::from_poly(&poly(a.poly_ring(), "x"))];
    let k = colon(&i, &j, 2, 4);
    // (x^2, xy) : x = (x, y): degree <= 2 part has dimension 2 + 3.
    assert_eq!(k.len(), 5);
    assert!(kills(&i, &Vector::from_poly(&poly(a.poly_ring(), "y")), &j, 1, 4));
    assert!(!kills(&i, &Vector::from_poly(&poly(a.poly_ring(), "1")), &j, 1, 4));
}

#[test]
fn oracle_saturation_by_powers() {
    let a = quotient(&["x", "y"], "");
    let i = ideal(&a, "x^3*y");
    let j = vec![Vector::from_poly(&poly(a.poly_ring(), "x"))];
    let y = Vector::from_poly(&poly(a.poly_ring(), "y"));
    assert!(!kills(&i, &y, &j, 2, 6));
    assert!(kills(&i, &y, &j, 3, 6));
}

#[test]
fn monomial_count() {
    assert_eq!(monomials_upto(3, 2).len(), 10);
    assert_eq!(monomials_upto(2, 3).len(), 10);
}
