//! Gröbner engine versus the linear-algebra oracle on a fixed list of small
//! ideals (at most three variables, generators of degree at most three).

use std::sync::Arc;

use reeskit::groebner::{eliminate, ideal_quotient, saturate, saturate_by_iteration, Ideal};
use reeskit::ring::AffineRing;

use super::{colon, eliminated, ideal, kills, member, polys, quotient, Vector};

pub struct Case {
    pub ring: Arc<AffineRing>,
    pub i: Ideal,
    pub j: Ideal,
    pub probes: Vec<reeskit::poly::Polynomial>,
}

fn case(vars: &[&str], rels: &str, i: &str, j: &str, probes: &str) -> Case {
    let ring = quotient(vars, rels);
    let probes = polys(ring.poly_ring(), probes);
    Case { i: ideal(&ring, i), j: ideal(&ring, j), probes, ring }
}

pub fn cases() -> Vec<Case> {
    vec![
        case(&["x", "y"], "", "x^2, x*y", "x", "x, y, x^2, x*y^2 + x^2, y^2, x + y"),
        case(&["x", "y"], "", "x^2 - y, x*y", "y", "y, y^2, x^3, x^2, x, x*y - y^2"),
        case(&["x", "y", "z"], "", "x*y, y*z, x*z", "x, y", "x*y*z, x^2*y, x + y, z^2, x*y + z"),
        case(&["x", "y", "z"], "", "x^2 - y*z, x*y - z", "z", "x^3 - x*z, y*z, z, x^2*y - y^2*z"),
        case(&["x", "T"], "x^2", "x*T", "T", "x*T^2, T, x, x*T + x^2"),
        case(&["x", "y"], "x*y", "", "x", "y, x, y^2, x + y"),
        case(&["x", "y", "z"], "", "x*z - 1", "x", "x*z - 1, z, x*y*z - y, y"),
        case(&["x", "S", "T"], "x^2, x*S", "x*T, T^2", "T", "x*T*S, T^3, S*T, x, T"),
        case(&["x", "y"], "", "y^2 - x^3", "x, y", "y^3 - x^3*y, x^3, y^2, x*y"),
    ]
}

const BOUND: u32 = 7;

/// Returns a description of the first disagreement.
pub fn check(c: &Case) -> Result<(), String> {
    let n = c.ring.nvars();
    for f in &c.probes {
        let (e, o) = (c.i.contains(f), member(&c.i, f, BOUND));
        if e != o {
            return Err(format!("membership of {f} in {}: engine {e}, oracle {o}", c.i));
        }
    }
    for v in 0..n {
        let e = eliminate(&c.i, &[v]);
        for g in e.gens() {
            if g.involves(v) || !member(&c.i, g, BOUND) {
                return Err(format!("eliminating variable {v} from {}: bad generator {g}", c.i));
            }
        }
        for w in eliminated(&c.i, &[v], BOUND) {
            if !e.contains(&w.to_poly(c.ring.poly_ring())) {
                return Err(format!("eliminating variable {v} from {}: missed {:?}", c.i, w));
            }
        }
    }
    let jv: Vec<Vector> = c.j.gens().iter().map(Vector::from_poly).collect();
    let q = ideal_quotient(&c.i, &c.j).map_err(|e| e.to_string())?;
    for g in q.gens() {
        if !kills(&c.i, &Vector::from_poly(g), &jv, 1, BOUND + 2) {
            return Err(format!("quotient {} : {}: {g} does not multiply J into I", c.i, c.j));
        }
    }
    for w in colon(&c.i, &jv, BOUND - 2, BOUND) {
        if !q.contains(&w.to_poly(c.ring.poly_ring())) {
            return Err(format!("quotient {} : {}: missed {:?}", c.i, c.j, w));
        }
    }
    let s = saturate(&c.i, &c.j).map_err(|e| e.to_string())?;
    for g in s.gens() {
        let gv = Vector::from_poly(g);
        if !(1..=4).any(|k| kills(&c.i, &gv, &jv, k, BOUND + 2)) {
            return Err(format!("saturation of {} by {}: {g} is not killed by a power", c.i, c.j));
        }
    }
    for k in 1..=3u32 {
        let jk = super::power(&jv, k);
        let deg = jk.iter().map(|v| v.degree()).max().unwrap_or(0);
        for w in colon(&c.i, &jk, BOUND - deg, BOUND) {
            if !s.contains(&w.to_poly(c.ring.poly_ring())) {
                return Err(format!("saturation of {} by {}: missed {:?}", c.i, c.j, w));
            }
        }
    }
    let iter = saturate_by_iteration(&c.i, &c.j).map_err(|e| e.to_string())?;
    if iter != s {
        return Err(format!("saturation of {} by {}: iteration gives {iter}, elimination {s}", c.i, c.j));
    }
    Ok(())
}
