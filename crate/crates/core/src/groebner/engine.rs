//! Buchberger's algorithm on sparse vectors of polynomials.
//!
//! Ideals are the rank-one case (every term at position 0). Terms of a
//! vector are kept sorted in descending order for a [`TermOrder`].

use std::cmp::Ordering;
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub pos: usize,
    pub coeff: Coeff,
}

pub(crate) type Vector = Vec<Term>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PositionMode {
    /// Lower position index wins first, then the monomial order.
    PositionOverTerm,
    /// Monomial order first, position breaks ties.
    TermOverPosition,
}

#[derive(Clone, Debug)]
pub(crate) struct TermOrder {
    pub mono: MonomialOrder,
    pub mode: PositionMode,
}

impl TermOrder {
    pub fn ideal(mono: MonomialOrder) -> Self {
        TermOrder { mono, mode: PositionMode::PositionOverTerm }
    }

    pub fn pot(mono: MonomialOrder) -> Self {
        TermOrder { mono, mode: PositionMode::PositionOverTerm }
    }

    pub fn top(mono: MonomialOrder) -> Self {
        TermOrder { mono, mode: PositionMode::TermOverPosition }
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match self.mode {
            PositionMode::PositionOverTerm => {
                b.1.cmp(&a.1).then_with(|| self.mono.cmp_monomials(a.0, b.0))
            }
            PositionMode::TermOverPosition => {
                self.mono.cmp_monomials(a.0, b.0).then_with(|| b.1.cmp(&a.1))
            }
        }
    }

    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp((&a.mon, a.pos), (&b.mon, b.pos))
    }
}

pub(crate) fn sort_vector(v: &mut Vector, ord: &TermOrder) {
    v.sort_by(|a, b| ord.cmp_terms(b, a));
}

pub(crate) fn poly_to_vector(p: &Polynomial, pos: usize, ord: &TermOrder) -> Vector {
    let mut v: Vector = p
        .terms()
        .iter()
        .map(|(m, c)| Term { mon: m.clone(), pos, coeff: c.clone() })
        .collect();
    sort_vector(&mut v, ord);
    v
}

pub(crate) fn column_to_vector(col: &[Polynomial], ord: &TermOrder) -> Vector {
    let mut v: Vector = Vec::new();
    for (pos, p) in col.iter().enumerate() {
        v.extend(p.terms().iter().map(|(m, c)| Term { mon: m.clone(), pos, coeff: c.clone() }));
    }
    sort_vector(&mut v, ord);
    v
}

/// Collects all terms into a polynomial of `ring`, ignoring positions.
pub(crate) fn vector_to_poly(v: &Vector, ring: &Arc<PolyRing>) -> Polynomial {
    Polynomial::from_terms(ring, v.iter().map(|t| (t.mon.clone(), t.coeff.clone())).collect())
}

pub(crate) fn vector_to_column(v: &Vector, ring: &Arc<PolyRing>, offset: usize, rank: usize) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
    for t in v {
        if t.pos >= offset && t.pos < offset + rank {
            parts[t.pos - offset].push((t.mon.clone(), t.coeff.clone()));
        }
    }
    parts.into_iter().map(|ts| Polynomial::from_terms(ring, ts)).collect()
}

/// `f - c * m * g`.
fn sub_scaled(f: &Vector, c: &Coeff, m: &Monomial, g: &Vector, ord: &TermOrder) -> Vector {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|t| Term { mon: t.mon.mul(m), pos: t.pos, coeff: (&t.coeff * c).neg() }).peekable();
    while i < f.len() {
        match gi.peek() {
            None => break,
            Some(h) => match ord.cmp_terms(&f[i], h) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let h = gi.next().unwrap();
                    let s = &f[i].coeff + &h.coeff;
                    if !s.is_zero() {
                        out.push(Term { mon: h.mon, pos: h.pos, coeff: s });
                    }
                    i += 1;
                }
            },
        }
    }
    out.extend(f[i..].iter().cloned());
    out.extend(gi);
    out
}

fn monic(v: &mut Vector) {
    if let Some(lead) = v.first() {
        if !lead.coeff.is_one() {
            let inv = lead.coeff.inv();
            for t in v.iter_mut() {
                t.coeff = &t.coeff * &inv;
            }
        }
    }
}

fn find_reducer<'a>(t: &Term, basis: &'a [&Vector]) -> Option<&'a Vector> {
    basis
        .iter()
        .find(|g| {
            let l = &g[0];
            l.pos == t.pos && l.mon.divides(&t.mon)
        })
        .copied()
}

/// Full reduction of `f` by `basis` (every term is reduced, not only the
/// leading one).
pub(crate) fn normal_form(f: &Vector, basis: &[&Vector], ord: &TermOrder) -> Vector {
    let mut p = f.clone();
    let mut start = 0;
    loop {
        // terms before `start` are already irreducible and moved out
        if start >= p.len() {
            break;
        }
        let t = &p[start];
        match find_reducer(t, basis) {
            Some(g) => {
                let l = &g[0];
                let q = l.mon.quotient_of(&t.mon);
                let c = &t.coeff / &l.coeff;
                let tail = p.split_off(start);
                let reduced = sub_scaled(&tail, &c, &q, g, ord);
                p.extend(reduced);
            }
            None => {
                start += 1;
            }
        }
    }
    p
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
}

fn lead(v: &Vector) -> &Term {
    &v[0]
}

/// Reduced Gröbner basis of the span of `gens`. The output is monic,
/// auto-reduced and sorted in descending order of leading terms.
///
/// `ideal_mode` enables Buchberger's coprime criterion, which is only valid
/// for rank-one inputs.
pub(crate) fn groebner(gens: Vec<Vector>, ord: &TermOrder, ideal_mode: bool) -> Vec<Vector> {
    let mut inputs: Vec<Vector> = gens
        .into_iter()
        .filter(|g| !g.is_empty())
        .map(|mut g| {
            sort_vector(&mut g, ord);
            monic(&mut g);
            g
        })
        .collect();
    if inputs.is_empty() {
        return Vec::new();
    }
    if ideal_mode {
        if let Some(u) = inputs.iter().find(|g| g.len() == 1 && g[0].mon.is_one()) {
            return vec![u.clone()];
        }
    }
    // process small leading terms first
    inputs.sort_by(|a, b| ord.cmp_terms(&a[0], &b[0]));

    let mut basis: Vec<Vector> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in inputs {
        let active_refs: Vec<&Vector> =
            basis.iter().zip(&active).filter(|(_, a)| **a).map(|(g, _)| g).collect();
        let h = normal_form(&g, &active_refs, ord);
        if h.is_empty() {
            continue;
        }
        let mut h = h;
        monic(&mut h);
        if ideal_mode && h[0].mon.is_one() {
            return vec![h];
        }
        update(&mut basis, &mut active, &mut pairs, h, ideal_mode);
    }

    while !pairs.is_empty() {
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                ord.cmp((&a.lcm, a.pos), (&b.lcm, b.pos)).then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(idx);
        let s = s_vector(&basis[pair.i], &basis[pair.j], &pair.lcm, ord);
        let active_refs: Vec<&Vector> =
            basis.iter().zip(&active).filter(|(_, a)| **a).map(|(g, _)| g).collect();
        let mut h = normal_form(&s, &active_refs, ord);
        if h.is_empty() {
            continue;
        }
        monic(&mut h);
        if ideal_mode && h[0].mon.is_one() {
            return vec![h];
        }
        update(&mut basis, &mut active, &mut pairs, h, ideal_mode);
    }

    let kept: Vec<Vector> =
        basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    interreduce(kept, ord)
}

fn s_vector(f: &Vector, g: &Vector, lcm: &Monomial, ord: &TermOrder) -> Vector {
    let (lf, lg) = (lead(f), lead(g));
    let mf = lf.mon.quotient_of(lcm);
    let mg = lg.mon.quotient_of(lcm);
    // both inputs are monic
    let scaled_f: Vector = f
        .iter()
        .map(|t| Term { mon: t.mon.mul(&mf), pos: t.pos, coeff: t.coeff.clone() })
        .collect();
    sub_scaled(&scaled_f, &lg.coeff, &mg, g, ord)
}

/// Gebauer–Möller installation of a new basis element.
fn update(basis: &mut Vec<Vector>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Vector, ideal_mode: bool) {
    let hi = basis.len();
    let (hm, hp) = (h[0].mon.clone(), h[0].pos);

    let mut candidates: Vec<(usize, Monomial, bool)> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        if !active[k] || g[0].pos != hp {
            continue;
        }
        let coprime = ideal_mode && hm.coprime(&g[0].mon);
        candidates.push((k, hm.lcm(&g[0].mon), coprime));
    }

    // chain criterion among the new pairs
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for idx in 0..candidates.len() {
        let (k, ref l, coprime) = candidates[idx];
        let dominated = !coprime
            && (candidates[idx + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l)));
        if !dominated {
            kept.push((k, l.clone(), coprime));
        }
    }

    // old pairs made redundant by h
    pairs.retain(|p| {
        if p.pos != hp || !hm.divides(&p.lcm) {
            return true;
        }
        let li = hm.lcm(&basis[p.i][0].mon);
        let lj = hm.lcm(&basis[p.j][0].mon);
        li == p.lcm || lj == p.lcm
    });

    for (k, l, coprime) in kept {
        if !coprime {
            pairs.push(Pair { i: k, j: hi, lcm: l, pos: hp });
        }
    }

    for (k, g) in basis.iter().enumerate() {
        if active[k] && g[0].pos == hp && hm.divides(&g[0].mon) {
            active[k] = false;
        }
    }
    basis.push(h);
    active.push(true);
}

fn interreduce(mut gs: Vec<Vector>, ord: &TermOrder) -> Vec<Vector> {
    // minimal basis: drop elements whose leading term is divisible by another
    gs.sort_by(|a, b| ord.cmp_terms(&a[0], &b[0]));
    let mut minimal: Vec<Vector> = Vec::new();
    for g in gs {
        let t = &g[0];
        if minimal.iter().any(|m| m[0].pos == t.pos && m[0].mon.divides(&t.mon)) {
            continue;
        }
        minimal.push(g);
    }
    let n = minimal.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let others: Vec<&Vector> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g).collect();
        let mut r = normal_form(&minimal[k], &others, ord);
        monic(&mut r);
        out.push(r);
    }
    out.sort_by(|a, b| ord.cmp_terms(&b[0], &a[0]));
    out
}
