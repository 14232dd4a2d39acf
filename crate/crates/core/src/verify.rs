//! Built-in self-checks replaying the reference computations: the Rees
//! algebra of `(x)` over `QQ[x]/(x^2)` and its failed base change, the
//! blow-up of the plane at the origin, projective bundles and the density
//! predicates.

use std::sync::Arc;

use crate::fpmod::{base_change, present, FPModule, FlatExtension};
use crate::groebner::{ring_map_kernel, Ideal};
use crate::modsyz::Matrix;
use crate::poly::PolyRing;
use crate::projgeo::{assofrees_check, charts_all_empty, is_proj_empty, proj_charts, schematically_dense};
use crate::rees::{
    check_injectivity_flat, compare_base_change, rees_presentation, sym_presentation,
    BaseChangeComparison,
};
use crate::ring::{AffineRing, RingMap};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub found: String,
    pub passed: bool,
}

fn check(name: &str, expected: impl ToString, found: impl ToString) -> Check {
    let (expected, found) = (expected.to_string(), found.to_string());
    Check { name: name.to_string(), passed: expected == found, expected, found }
}

fn failed(name: &str, expected: &str, e: impl std::fmt::Display) -> Check {
    Check { name: name.to_string(), expected: expected.to_string(), found: format!("error: {e}"), passed: false }
}

struct DualNumbers {
    a: Arc<AffineRing>,
    m: FPModule,
    phi: RingMap,
}

fn dual_numbers() -> DualNumbers {
    let r = PolyRing::rational(&["x"]);
    let a = AffineRing::new(&r, vec![r.var(0).pow(2)]).expect("ring");
    let m = FPModule::new(&a, 1, vec![vec![a.var(0)]]).expect("module");
    let s = PolyRing::rational(&["x", "S"]);
    let b = AffineRing::new(&s, vec![s.var(0).pow(2), &s.var(0) * &s.var(1)]).expect("ring");
    let phi = RingMap::by_names(&a, &b).expect("inclusion");
    DualNumbers { a, m, phi }
}

fn plane() -> (Arc<PolyRing>, Arc<AffineRing>, FPModule) {
    let r = PolyRing::rational(&["x", "y"]);
    let a = AffineRing::polynomial(&r);
    let m = present(&Matrix::from_rows(&a, vec![vec![r.var(0), r.var(1)]]).expect("row"));
    (r, a, m)
}

/// Runs every check; never panics on engine errors.
pub fn run_all() -> Vec<Check> {
    let mut out = Vec::new();
    let d = dual_numbers();

    out.push(match rees_presentation(&d.m) {
        Ok(g) => check("Rees algebra of (x) over QQ[x]/(x^2)", "(x*T, T^2)", g.ideal()),
        Err(e) => failed("Rees algebra of (x) over QQ[x]/(x^2)", "(x*T, T^2)", e),
    });
    out.push(check("symmetric algebra of (x) over QQ[x]/(x^2)", "(x*T)", sym_presentation(&d.m).ideal()));

    let tp = PolyRing::rational(&["T"]);
    let kernel = RingMap::new(&AffineRing::polynomial(&tp), &d.a, vec![d.a.var(0)]).map(|k| ring_map_kernel(&k));
    out.push(match kernel {
        Ok(k) => check("kernel of T -> x into QQ[x]/(x^2)", "(T^2)", k),
        Err(e) => failed("kernel of T -> x into QQ[x]/(x^2)", "(T^2)", e),
    });

    match base_change(&d.m, &d.phi) {
        Ok(mb) => out.push(check("(x) tensored with B is B/(x)", "coker [[x]]", mb)),
        Err(e) => out.push(failed("(x) tensored with B is B/(x)", "coker [[x]]", e)),
    }

    match compare_base_change(&d.m, &d.phi) {
        Ok(rep) => {
            let bt = rep.left.ambient().clone();
            let p = bt.poly_ring();
            let (x, s, t) = (p.var(0), p.var(1), p.var(2));
            let expected_left = Ideal::new(&bt, vec![&x * &s, &x * &t, t.pow(2)]).expect("ideal");
            let expected_right = Ideal::new(&bt, vec![&x * &s, &x * &t]).expect("ideal");
            out.push(check("Rees ideal extended to B[T] equals (xS, xT, T^2)", true, *rep.left.ideal() == expected_left));
            out.push(check("Rees ideal of the base change equals (xS, xT)", true, *rep.right.ideal() == expected_right));
            let found = match rep.outcome {
                BaseChangeComparison::Surjection => "surjection".to_string(),
                BaseChangeComparison::NoCanonicalMap { witness } => format!("no canonical map, witness {witness}"),
            };
            out.push(check("comparison over B", "no canonical map, witness T^2", found));
        }
        Err(e) => out.push(failed("comparison over B", "no canonical map, witness T^2", e)),
    }

    if let Ok(g) = rees_presentation(&d.m) {
        out.push(check("blow-up of (x) over QQ[x]/(x^2) is empty", true, is_proj_empty(&g)));
        out.push(check("every chart of that blow-up is empty", true, charts_all_empty(&g)));
        let p = Ideal::new(&d.a, vec![d.a.var(0)]).expect("ideal");
        match assofrees_check(&d.m, &[p]) {
            Ok(rep) => out.push(check("dual generators land in (x)", true, rep.aggregate)),
            Err(e) => out.push(failed("dual generators land in (x)", "true", e)),
        }
    }

    let (r, a, m) = plane();
    match rees_presentation(&m) {
        Ok(g) => {
            out.push(check("Rees algebra of (x, y) over QQ[x,y]", "(y*T1 - x*T2)", g.ideal()));
            let charts: Vec<String> = proj_charts(&g).iter().map(|c| c.ideal.to_string()).collect();
            out.push(check("charts of the blow-up of the origin", "(x*u2 - y); (y*u1 - x)", charts.join("; ")));
        }
        Err(e) => out.push(failed("Rees algebra of (x, y) over QQ[x,y]", "(y*T1 - x*T2)", e)),
    }
    let by = AffineRing::new(&r, vec![r.var(1)]).expect("ring");
    match RingMap::by_names(&a, &by).and_then(|f| compare_base_change(&m, &f)) {
        Ok(rep) => {
            let ok = matches!(rep.outcome, BaseChangeComparison::Surjection);
            out.push(check("comparison over QQ[x,y]/(y) is a surjection", true, ok));
        }
        Err(e) => out.push(failed("comparison over QQ[x,y]/(y) is a surjection", "true", e)),
    }
    let s = PolyRing::rational(&["x", "y", "z"]);
    let loc = AffineRing::new(&s, vec![&(&s.var(0) * &s.var(2)) - &s.one()]).expect("ring");
    match RingMap::by_names(&a, &loc).and_then(|f| FlatExtension::recognize(&f)).and_then(|e| check_injectivity_flat(&m, &e)) {
        Ok(b) => out.push(check("Rees algebra of (x, y) injects after inverting x", true, b)),
        Err(e) => out.push(failed("Rees algebra of (x, y) injects after inverting x", "true", e)),
    }

    for n in 1..=3 {
        let name = format!("Rees algebra of a free module of rank {n}");
        match rees_presentation(&FPModule::free(&a, n)) {
            Ok(g) => out.push(check(&name, "(0)", g.ideal())),
            Err(e) => out.push(failed(&name, "(0)", e)),
        }
    }

    let xy = AffineRing::new(&r, vec![&r.var(0) * &r.var(1)]).expect("ring");
    let rep = schematically_dense(&Ideal::new(&xy, vec![r.var(0)]).expect("ideal"));
    let found = match rep.witness {
        Some(w) => format!("not dense, witness {w}"),
        None => "dense".to_string(),
    };
    out.push(check("density of x != 0 in QQ[x,y]/(xy)", "not dense, witness y", found));
    let dense = schematically_dense(&Ideal::new(&a, vec![r.var(0), r.var(1)]).expect("ideal")).dense;
    out.push(check("density of the punctured plane", true, dense));
    out
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_checks_pass() {
        for c in super::run_all() {
            assert!(c.passed, "{}: expected {}, found {}", c.name, c.expected, c.found);
        }
    }
}
