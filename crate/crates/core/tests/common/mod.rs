//! Shared helpers for the integration tests, including a brute-force oracle
//! for ideal computations that works by linear algebra over ℚ on the space of
//! polynomials of bounded degree. It knows nothing about Gröbner bases.
//!
//! Every positive answer of the oracle is a certificate: a vector found in
//! the bounded span really lies in the ideal. A negative answer only means no
//! certificate exists below the degree bound.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use reeskit::coeff::Coeff;
use reeskit::dsl::{exec::eval, parse_expr_list};
use reeskit::groebner::Ideal;
use reeskit::poly::{PolyRing, Polynomial};
use reeskit::ring::AffineRing;

pub fn polys(ring: &Arc<PolyRing>, src: &str) -> Vec<Polynomial> {
    parse_expr_list(src)
        .expect("parse")
        .iter()
        .map(|e| eval(e, ring).expect("eval"))
        .collect()
}

pub fn poly(ring: &Arc<PolyRing>, src: &str) -> Polynomial {
    polys(ring, src).pop().expect("one polynomial")
}

pub fn ideal(ring: &Arc<AffineRing>, src: &str) -> Ideal {
    Ideal::new(ring, polys(ring.poly_ring(), src)).expect("ideal")
}

pub fn quotient(vars: &[&str], relations: &str) -> Arc<AffineRing> {
    let r = PolyRing::rational(vars);
    let rels = polys(&r, relations);
    AffineRing::new(&r, rels).expect("ring")
}

pub type Exps = Vec<u32>;

/// A sparse vector indexed by exponent vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector(pub BTreeMap<Exps, BigRational>);

impl Vector {
    pub fn zero() -> Vector {
        Vector(BTreeMap::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_poly(p: &Polynomial) -> Vector {
        let mut out = BTreeMap::new();
        for (m, c) in p.terms() {
            let Coeff::Rational(q) = c else { panic!("the oracle works over QQ") };
            out.insert(m.exponents().to_vec(), q.clone());
        }
        Vector(out)
    }

    pub fn to_poly(&self, ring: &Arc<PolyRing>) -> Polynomial {
        let terms = self
            .0
            .iter()
            .map(|(e, c)| (reeskit::monomial::Monomial::new(e.clone()), Coeff::Rational(c.clone())))
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    pub fn degree(&self) -> u32 {
        self.0.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_scaled(&mut self, other: &Vector, c: &BigRational) {
        for (e, v) in &other.0 {
            let entry = self.0.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.0.remove(e);
            }
        }
    }

    pub fn mul(&self, other: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                let e: Exps = a.iter().zip(b).map(|(i, j)| i + j).collect();
                let mut single = Vector::zero();
                single.0.insert(e, x * y);
                out.add_scaled(&single, &BigRational::one());
            }
        }
        out
    }

    pub fn monomial(e: &[u32]) -> Vector {
        let mut v = Vector::zero();
        v.0.insert(e.to_vec(), BigRational::one());
        v
    }
}

/// All exponent vectors in `n` variables of total degree at most `d`.
pub fn monomials_upto(n: usize, d: u32) -> Vec<Exps> {
    fn go(n: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Fully reduced row echelon form. Pivots are chosen as the largest monomial
/// under `key`, so monomials with a larger key are eliminated first.
type PivotKey = Box<dyn Fn(&Exps) -> (u32, u32, Exps)>;

pub struct Echelon {
    key: PivotKey,
    rows: Vec<(Exps, Vector)>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::with_priority(Vec::new())
    }

    /// Monomials involving any of `first` are pivoted before all others.
    pub fn with_priority(first: Vec<usize>) -> Echelon {
        let key = move |e: &Exps| {
            let heavy: u32 = first.iter().map(|&i| e[i]).sum();
            (heavy, e.iter().sum(), e.clone())
        };
        Echelon { key: Box::new(key), rows: Vec::new() }
    }

    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.0.get(p).cloned() {
                v.add_scaled(row, &-c);
            }
        }
        v
    }

    /// Adds `v` to the span; returns false when it was already there.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let mut r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let pivot = r.0.keys().max_by_key(|e| (self.key)(e)).expect("nonzero").clone();
        let inv = BigRational::one() / r.0[&pivot].clone();
        r = {
            let mut s = Vector::zero();
            s.add_scaled(&r, &inv);
            s
        };
        for (_, row) in self.rows.iter_mut() {
            if let Some(c) = row.0.get(&pivot).cloned() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Rows whose pivot has key component zero, i.e. rows free of the
    /// prioritized variables.
    pub fn light_rows(&self) -> Vec<Vector> {
        self.rows.iter().filter(|(p, _)| (self.key)(p).0 == 0).map(|(_, r)| r.clone()).collect()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// The degree-`d` truncation of an ideal: the span of all `m * g` with
/// `deg(m g) <= d`.
pub struct Truncation {
    pub nvars: usize,
    pub bound: u32,
    pub span: Echelon,
}

impl Truncation {
    pub fn new(nvars: usize, gens: &[Vector], bound: u32) -> Truncation {
        Truncation::with_priority(nvars, gens, bound, Vec::new())
    }

    pub fn with_priority(nvars: usize, gens: &[Vector], bound: u32, first: Vec<usize>) -> Truncation {
        let mut span = Echelon::with_priority(first);
        for g in gens {
            if g.is_zero() || g.degree() > bound {
                continue;
            }
            for m in monomials_upto(nvars, bound - g.degree()) {
                span.insert(&Vector::monomial(&m).mul(g));
            }
        }
        Truncation { nvars, bound, span }
    }

    pub fn contains(&self, f: &Vector) -> bool {
        f.degree() <= self.bound && self.span.contains(f)
    }
}

/// Generators of `I + Q` for an ideal of an affine ring, as oracle vectors.
pub fn lifted(i: &Ideal) -> Vec<Vector> {
    i.gens().iter().chain(i.ring().relations()).map(Vector::from_poly).collect()
}

pub fn member(i: &Ideal, f: &Polynomial, bound: u32) -> bool {
    Truncation::new(i.ring().nvars(), &lifted(i), bound).contains(&Vector::from_poly(f))
}

/// Elements of `(I + Q) ∩ k[other variables]` found below the bound.
pub fn eliminated(i: &Ideal, vars: &[usize], bound: u32) -> Vec<Vector> {
    Truncation::with_priority(i.ring().nvars(), &lifted(i), bound, vars.to_vec()).span.light_rows()
}

/// A basis of the polynomials `f` of degree at most `d` with `f * g` in the
/// bounded span of `I` for every `g` in `js`.
pub fn colon(i: &Ideal, js: &[Vector], d: u32, bound: u32) -> Vec<Vector> {
    let n = i.ring().nvars();
    let t = Truncation::new(n, &lifted(i), bound);
    let mons = monomials_upto(n, d);
    // Residues of m * g_j, tagged by j through an extra coordinate.
    let residue = |m: &Exps| -> Vector {
        let mut out = BTreeMap::new();
        for (j, g) in js.iter().enumerate() {
            let prod = Vector::monomial(m).mul(g);
            if prod.degree() > bound {
                panic!("bound too small for the colon computation");
            }
            for (e, c) in t.span.reduce(&prod).0 {
                let mut tagged = e.clone();
                tagged.push(j as u32);
                out.insert(tagged, c);
            }
        }
        Vector(out)
    };
    // Gaussian elimination tracking combinations; each residue reducing to
    // zero contributes one kernel vector.
    let mut rows: Vec<(Exps, Vector, Vector)> = Vec::new();
    let mut kernel = Vec::new();
    for m in &mons {
        let mut r = residue(m);
        let mut comb = Vector::monomial(m);
        for (p, row, rc) in &rows {
            if let Some(c) = r.0.get(p).cloned() {
                r.add_scaled(row, &-c.clone());
                comb.add_scaled(rc, &-c);
            }
        }
        if r.is_zero() {
            kernel.push(comb);
            continue;
        }
        let pivot = r.0.keys().max().expect("nonzero").clone();
        let inv = BigRational::one() / r.0[&pivot].clone();
        let mut rn = Vector::zero();
        rn.add_scaled(&r, &inv);
        let mut cn = Vector::zero();
        cn.add_scaled(&comb, &inv);
        for (_, row, rc) in rows.iter_mut() {
            if let Some(c) = row.0.get(&pivot).cloned() {
                row.add_scaled(&rn, &-c.clone());
                rc.add_scaled(&cn, &-c);
            }
        }
        rows.push((pivot, rn, cn));
    }
    kernel
}

/// Generators of `J^k` as oracle vectors.
pub fn power(js: &[Vector], k: u32) -> Vec<Vector> {
    let mut cur = vec![Vector::monomial(&vec![0; js.first().map_or(0, |v| v.0.keys().next().map_or(0, |e| e.len()))])];
    for _ in 0..k {
        let mut next = Vec::new();
        for a in &cur {
            for b in js {
                next.push(a.mul(b));
            }
        }
        cur = next;
    }
    cur
}

/// `f * J^k ⊆ I` below the bound.
pub fn kills(i: &Ideal, f: &Vector, js: &[Vector], k: u32, bound: u32) -> bool {
    let t = Truncation::new(i.ring().nvars(), &lifted(i), bound);
    power(js, k).iter().all(|g| t.contains(&f.mul(g)))
}
pub mod gb_suite;
