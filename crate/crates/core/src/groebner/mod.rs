//! Ideals and the Gröbner toolkit: reduced bases, normal forms, elimination,
//! intersection, colon ideals, saturation and kernels of ring maps.
//!
//! Computations over `A = k[x]/Q` are lifted to `k[x]` by adjoining the
//! generators of `Q`.

pub(crate) mod engine;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::{same_affine, AffineRing, RingMap};

use engine::{groebner, poly_to_vector, vector_to_poly, TermOrder, Vector};

/// Reduced Gröbner basis of `polys` for the order of `ring`.
pub(crate) fn reduced_basis(polys: &[Polynomial], ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    reduced_basis_in_order(polys, ring, ring.order())
}

/// Reduced Gröbner basis for an explicit order; results are re-sorted for
/// the order of `ring`, but the list keeps the order of the computation.
fn reduced_basis_in_order(polys: &[Polynomial], ring: &Arc<PolyRing>, order: &MonomialOrder) -> Vec<Polynomial> {
    let ord = TermOrder::ideal(order.clone());
    let gens: Vec<Vector> = polys.iter().map(|p| poly_to_vector(p, 0, &ord)).collect();
    groebner(gens, &ord, true).iter().map(|v| vector_to_poly(v, ring)).collect()
}

/// Reduced Gröbner basis of `gens` for `order`. The returned polynomials
/// live in a copy of the input ring carrying `order`, and are sorted in
/// descending order of leading monomials. Empty input gives the zero ideal.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().with_order(order.clone());
    let gens: Vec<Polynomial> = gens.iter().map(|g| g.reorder(&ring)).collect();
    reduced_basis(&gens, &ring)
}

/// Fully reduced remainder of `f` modulo `basis`, which must be a Gröbner
/// basis for the order of `f`'s ring.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ord = TermOrder::ideal(f.ring().order().clone());
    let bv: Vec<Vector> = basis.iter().map(|g| poly_to_vector(g, 0, &ord)).collect();
    let refs: Vec<&Vector> = bv.iter().collect();
    let r = engine::normal_form(&poly_to_vector(f, 0, &ord), &refs, &ord);
    Polynomial::from_sorted(f.ring(), r.into_iter().map(|t| (t.mon, t.coeff)).collect())
}

/// An ideal of an affine ring. The reduced Gröbner basis of the lifted
/// ideal (generators plus the ring's relations) is computed lazily.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<AffineRing>,
    gens: Vec<Polynomial>,
    basis: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ring: &Arc<AffineRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ring.check(g)?;
        }
        let gens = gens.iter().map(|g| ring.reduce(g)).filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, basis: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<AffineRing>) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), basis: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<AffineRing>) -> Ideal {
        Ideal::new(ring, vec![ring.poly_ring().one()]).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<AffineRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generators of `I + Q` in the ambient polynomial ring.
    pub(crate) fn lifted_gens(&self) -> Vec<Polynomial> {
        let mut v = self.gens.clone();
        v.extend(self.ring.relation_basis().iter().cloned());
        v
    }

    /// Reduced Gröbner basis of the lifted ideal `I + Q` in the ambient ring.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.basis.get_or_init(|| {
            if self.gens.is_empty() {
                self.ring.relation_basis().to_vec()
            } else {
                reduced_basis(&self.lifted_gens(), self.ring.poly_ring())
            }
        })
    }

    /// The canonical generator list: the reduced Gröbner basis without the
    /// elements that already vanish in the ring.
    pub fn canonical_generators(&self) -> Vec<Polynomial> {
        self.groebner_basis().iter().filter(|g| !self.ring.is_zero(g)).cloned().collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self.groebner_basis())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().first().map(|g| g.is_constant()).unwrap_or(false)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ideal::new(&self.ring, g)
    }

    pub fn power(&self, n: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// The quotient ring `A / I` presented over the ambient polynomial ring.
    pub fn quotient_ring(&self) -> Arc<AffineRing> {
        AffineRing::new(self.ring.poly_ring(), self.groebner_basis().to_vec()).expect("same ring")
    }

    fn check_same(&self, other: &Ideal) -> Result<()> {
        if same_affine(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_affine(&self.ring, &other.ring) && self.groebner_basis() == other.groebner_basis()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "(1)");
        }
        let gens = self.canonical_generators();
        if gens.is_empty() {
            return write!(f, "(0)");
        }
        let s: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// `ring` extended by fresh variables appended at the end.
pub(crate) fn extend_ring(ring: &Arc<PolyRing>, names: &[&str]) -> (Arc<PolyRing>, Vec<usize>) {
    let mut vars = ring.vars().to_vec();
    let mut idx = Vec::new();
    for n in names {
        let fresh = PolyRing::fresh_name(&vars, n);
        idx.push(vars.len());
        vars.push(fresh);
    }
    let ext = PolyRing::new(ring.field(), vars, MonomialOrder::DegRevLex).expect("fresh names");
    (ext, idx)
}

/// Polynomials of `polys` (in a polynomial ring) free of `vars`, forming a
/// Gröbner basis of the elimination ideal.
pub(crate) fn eliminate_polys(polys: &[Polynomial], vars: &[usize]) -> Vec<Polynomial> {
    let Some(first) = polys.first() else {
        return Vec::new();
    };
    let ring = first.ring();
    let order = MonomialOrder::block(vars.to_vec(), MonomialOrder::DegRevLex);
    reduced_basis_in_order(polys, ring, &order)
        .into_iter()
        .filter(|g| !g.involves_any(vars))
        .collect()
}

/// `I ∩ k[remaining variables]`, returned as an ideal of the same ring whose
/// generators avoid `vars`.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Ideal {
    let ring = ideal.ring.poly_ring();
    let gens = eliminate_polys(&ideal.lifted_gens(), vars);
    let gens = gens.iter().map(|g| g.reorder(ring)).collect();
    Ideal::new(&ideal.ring, gens).expect("same ring")
}

/// Drops the trailing variables introduced by [`extend_ring`].
fn restrict(p: &Polynomial, ring: &Arc<PolyRing>) -> Polynomial {
    let n = ring.nvars();
    let index_map: Vec<usize> = (0..p.ring().nvars()).map(|i| i.min(n.saturating_sub(1))).collect();
    debug_assert!((n..p.ring().nvars()).all(|i| !p.involves(i)));
    if n == 0 {
        return Polynomial::from_terms(
            ring,
            p.terms().iter().map(|(_, c)| (crate::monomial::Monomial::one(0), c.clone())).collect(),
        );
    }
    p.map_vars(ring, &index_map)
}

fn intersect_lifted(a: &[Polynomial], b: &[Polynomial], ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (ext, idx) = extend_ring(ring, &["t"]);
    let embed: Vec<usize> = (0..ring.nvars()).collect();
    let t = ext.var(idx[0]);
    let one_minus_t = &ext.one() - &t;
    let mut gens = Vec::new();
    for f in a {
        gens.push(&t * &f.map_vars(&ext, &embed));
    }
    for g in b {
        gens.push(&one_minus_t * &g.map_vars(&ext, &embed));
    }
    eliminate_polys(&gens, &idx).iter().map(|p| restrict(p, ring)).collect()
}

/// `I ∩ J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_same(j)?;
    let gens = intersect_lifted(&i.lifted_gens(), &j.lifted_gens(), i.ring.poly_ring());
    Ideal::new(&i.ring, gens)
}

/// `(I : J) = { f : f J ⊆ I }`.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_same(j)?;
    let ring = i.ring.poly_ring();
    let lifted = i.lifted_gens();
    let mut acc: Option<Ideal> = None;
    for g in &j.gens {
        let inter = intersect_lifted(&lifted, std::slice::from_ref(g), ring);
        let quot: Vec<Polynomial> = inter
            .iter()
            .map(|p| p.div_exact(g).expect("intersection with (g) is divisible by g"))
            .collect();
        let colon = Ideal::new(&i.ring, quot)?;
        if colon.is_unit() {
            continue;
        }
        acc = Some(match acc {
            None => colon,
            Some(prev) => intersect(&prev, &colon)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(&i.ring)))
}

/// `(I : J^∞)` via one auxiliary variable per generator of `J`:
/// `(I : g^∞) = (I + (1 - t g)) ∩ k[x]`.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_same(j)?;
    let ring = i.ring.poly_ring();
    let (ext, idx) = extend_ring(ring, &["t"]);
    let embed: Vec<usize> = (0..ring.nvars()).collect();
    let lifted: Vec<Polynomial> = i.lifted_gens().iter().map(|p| p.map_vars(&ext, &embed)).collect();
    let t = ext.var(idx[0]);
    let mut acc: Option<Ideal> = None;
    for g in &j.gens {
        let mut gens = lifted.clone();
        gens.push(&ext.one() - &(&t * &g.map_vars(&ext, &embed)));
        let sat: Vec<Polynomial> = eliminate_polys(&gens, &idx).iter().map(|p| restrict(p, ring)).collect();
        let sat = Ideal::new(&i.ring, sat)?;
        if sat.is_unit() {
            continue;
        }
        acc = Some(match acc {
            None => sat,
            Some(prev) => intersect(&prev, &sat)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(&i.ring)))
}

/// `(I : J^∞)` as the stable value of the chain `I ⊆ I:J ⊆ (I:J):J ⊆ ...`.
pub fn saturate_by_iteration(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut cur = i.clone();
    loop {
        let next = ideal_quotient(&cur, j)?;
        if next.is_subset_of(&cur) {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Kernel of `φ: k[x]/Q_A → k[y]/Q_B`, via elimination of `y` from the
/// graph ideal `Q_B + (x_i - φ(x_i))` in `k[y, x]`.
pub fn ring_map_kernel(phi: &RingMap) -> Ideal {
    let src = phi.source();
    let tgt = phi.target();
    let sp = src.poly_ring();
    let tp = tgt.poly_ring();
    let m = tp.nvars();
    let mut vars: Vec<String> = tp.vars().to_vec();
    for v in sp.vars() {
        let fresh = PolyRing::fresh_name(&vars, v);
        vars.push(fresh);
    }
    let graph_ring = PolyRing::new(sp.field(), vars, MonomialOrder::DegRevLex).expect("fresh names");
    let target_embed: Vec<usize> = (0..m).collect();
    let mut gens: Vec<Polynomial> = tgt.relation_basis().iter().map(|q| q.map_vars(&graph_ring, &target_embed)).collect();
    for (i, im) in phi.images().iter().enumerate() {
        gens.push(&graph_ring.var(m + i) - &im.map_vars(&graph_ring, &target_embed));
    }
    let elim: Vec<usize> = (0..m).collect();
    let back: Vec<usize> = (0..graph_ring.nvars()).map(|k| k.saturating_sub(m)).collect();
    let kernel: Vec<Polynomial> = eliminate_polys(&gens, &elim).iter().map(|p| p.map_vars(sp, &back)).collect();
    Ideal::new(src, kernel).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(ring: &Arc<AffineRing>, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(ring, gens).unwrap()
    }

    #[test]
    fn lex_basis_of_two_quadrics() {
        let r = PolyRing::rational(&["x", "y"]);
        let (x, y, one) = (r.var(0), r.var(1), r.one());
        let gb = buchberger(&[&(&x * &x) - &one, &(&x * &y) - &one], &MonomialOrder::Lex);
        let s: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        assert_eq!(s, vec!["x - y", "y^2 - 1"]);
    }

    #[test]
    fn already_a_basis() {
        let r = PolyRing::rational(&["x", "T"]);
        let (x, t) = (r.var(0), r.var(1));
        let gb = buchberger(&[&x * &x, &x * &t, &t * &t], &MonomialOrder::DegRevLex);
        let s: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        assert_eq!(s, vec!["x^2", "x*T", "T^2"]);
        assert_eq!(buchberger(std::slice::from_ref(&x), &MonomialOrder::Lex).len(), 1);
        assert!(buchberger(&[], &MonomialOrder::Lex).is_empty());
    }

    #[test]
    fn normal_forms() {
        let r = PolyRing::rational(&["x", "T"]);
        let (x, t) = (r.var(0), r.var(1));
        assert!(normal_form(&(&x * &x), std::slice::from_ref(&x)).is_zero());
        let gb = reduced_basis(&[&x * &t, &x * &x], &r);
        assert_eq!(normal_form(&(&t * &t), &gb), &t * &t);
        let s = PolyRing::rational(&["x", "y"]);
        let d = &s.var(0) - &s.var(1);
        assert!(normal_form(&d.neg(), std::slice::from_ref(&d)).is_zero());
    }

    #[test]
    fn eliminate_parameter() {
        let r = PolyRing::rational(&["t", "x"]);
        let a = AffineRing::polynomial(&r);
        let (t, x) = (r.var(0), r.var(1));
        let i = ideal(&a, vec![&t * &t, &x - &t]);
        let e = eliminate(&i, &[0]);
        assert_eq!(e.to_string(), "(x^2)");
        let j = ideal(&a, vec![&x - &t]);
        assert_eq!(eliminate(&j, &[]), j);
    }

    #[test]
    fn colon_and_saturation_in_node() {
        let r = PolyRing::rational(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let a = AffineRing::new(&r, vec![&x * &y]).unwrap();
        let zero = Ideal::zero(&a);
        let jx = ideal(&a, vec![x.clone()]);
        assert_eq!(ideal_quotient(&zero, &jx).unwrap(), ideal(&a, vec![y.clone()]));
        assert_eq!(saturate(&zero, &jx).unwrap(), ideal(&a, vec![y.clone()]));
        assert_eq!(saturate_by_iteration(&zero, &jx).unwrap(), ideal(&a, vec![y.clone()]));
    }

    #[test]
    fn colon_by_variable() {
        let r = PolyRing::rational(&["x", "y"]);
        let a = AffineRing::polynomial(&r);
        let (x, y) = (r.var(0), r.var(1));
        let i = ideal(&a, vec![&(&x * &x) * &y]);
        let q = ideal_quotient(&i, &ideal(&a, vec![y.clone()])).unwrap();
        assert_eq!(q, ideal(&a, vec![&x * &x]));
        assert_eq!(ideal_quotient(&i, &Ideal::unit(&a)).unwrap(), i);
        assert_eq!(saturate(&i, &Ideal::unit(&a)).unwrap(), i);
    }

    #[test]
    fn saturation_kills_rees_ideal_of_nilpotent_module() {
        let r = PolyRing::rational(&["x", "T"]);
        let (x, t) = (r.var(0), r.var(1));
        let a = AffineRing::new(&r, vec![&x * &x]).unwrap();
        let i = ideal(&a, vec![&x * &t, &t * &t]);
        let tt = ideal(&a, vec![t.clone()]);
        assert!(saturate(&i, &tt).unwrap().is_unit());
        assert!(saturate_by_iteration(&i, &tt).unwrap().is_unit());
    }

    #[test]
    fn intersection_of_coordinate_axes() {
        let r = PolyRing::rational(&["x", "y"]);
        let a = AffineRing::polynomial(&r);
        let (x, y) = (r.var(0), r.var(1));
        let ix = ideal(&a, vec![x.clone()]);
        let iy = ideal(&a, vec![y.clone()]);
        assert_eq!(intersect(&ix, &iy).unwrap(), ideal(&a, vec![&x * &y]));
        assert_eq!(intersect(&ix, &ix).unwrap(), ix);
        assert_eq!(intersect(&ix, &Ideal::unit(&a)).unwrap(), ix);
    }

    #[test]
    fn kernels() {
        let tr = PolyRing::rational(&["T"]);
        let src = AffineRing::polynomial(&tr);
        let xr = PolyRing::rational(&["x"]);
        let a = AffineRing::new(&xr, vec![xr.var(0).pow(2)]).unwrap();
        let phi = RingMap::new(&src, &a, vec![xr.var(0)]).unwrap();
        let k = ring_map_kernel(&phi);
        assert_eq!(k.to_string(), "(T^2)");
        assert!(ring_map_kernel(&RingMap::identity(&a)).is_zero());
    }

    #[test]
    fn kernel_of_rees_map_for_dual_numbers() {
        // A[T] -> A[Y], T -> xY over A = QQ[x]/(x^2)
        let src_ring = PolyRing::rational(&["x", "T"]);
        let src = AffineRing::new(&src_ring, vec![src_ring.var(0).pow(2)]).unwrap();
        let tgt_ring = PolyRing::rational(&["x", "Y"]);
        let tgt = AffineRing::new(&tgt_ring, vec![tgt_ring.var(0).pow(2)]).unwrap();
        let phi = RingMap::new(&src, &tgt, vec![tgt_ring.var(0), &tgt_ring.var(0) * &tgt_ring.var(1)]).unwrap();
        assert_eq!(ring_map_kernel(&phi).to_string(), "(x*T, T^2)");
    }
}
