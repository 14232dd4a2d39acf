//! Affine rings `k[x]/I` and maps between them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::groebner::{normal_form, reduced_basis};
use crate::poly::{same_ring, PolyRing, Polynomial};

/// Quotient of a polynomial ring by an ideal. Elements are polynomials of
/// the ambient ring, canonically represented by their normal form modulo
/// the reduced Gröbner basis of the defining ideal.
#[derive(Debug)]
pub struct AffineRing {
    poly: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    basis: OnceLock<Vec<Polynomial>>,
}

impl AffineRing {
    pub fn new(poly: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Arc<AffineRing>> {
        for r in &relations {
            if !same_ring(r.ring(), poly) {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Arc::new(AffineRing { poly: poly.clone(), relations, basis: OnceLock::new() }))
    }

    /// The polynomial ring itself, with no relations.
    pub fn polynomial(poly: &Arc<PolyRing>) -> Arc<AffineRing> {
        Arc::new(AffineRing { poly: poly.clone(), relations: Vec::new(), basis: OnceLock::from(Vec::new()) })
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// Defining relations as supplied.
    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// Reduced Gröbner basis of the defining ideal (computed once).
    pub fn relation_basis(&self) -> &[Polynomial] {
        self.basis.get_or_init(|| reduced_basis(&self.relations, &self.poly))
    }

    /// Canonical representative of `f` in this ring.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(f.ring(), &self.poly));
        let basis = self.relation_basis();
        if basis.is_empty() {
            return f.clone();
        }
        normal_form(f, basis)
    }

    pub fn is_zero(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// True for the zero ring.
    pub fn is_trivial(&self) -> bool {
        self.relation_basis().first().map(|g| g.is_constant()).unwrap_or(false)
    }

    pub fn zero(&self) -> Polynomial {
        self.poly.zero()
    }

    pub fn one(&self) -> Polynomial {
        self.reduce(&self.poly.one())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.reduce(&self.poly.var(i))
    }

    pub fn var_named(&self, name: &str) -> Result<Polynomial> {
        Ok(self.reduce(&self.poly.var_named(name)?))
    }

    pub(crate) fn check(&self, f: &Polynomial) -> Result<()> {
        if same_ring(f.ring(), &self.poly) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    /// Same ambient ring and same defining ideal.
    pub fn same_as(&self, other: &AffineRing) -> bool {
        same_ring(&self.poly, &other.poly) && self.relation_basis() == other.relation_basis()
    }
}

pub(crate) fn same_affine(a: &Arc<AffineRing>, b: &Arc<AffineRing>) -> bool {
    Arc::ptr_eq(a, b) || a.same_as(b)
}

impl fmt::Display for AffineRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)?;
        let basis = self.relation_basis();
        if !basis.is_empty() {
            let gens: Vec<String> = basis.iter().map(|g| g.to_string()).collect();
            write!(f, " / ({})", gens.join(", "))?;
        }
        Ok(())
    }
}

/// A k-algebra homomorphism given by the images of the source variables.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Arc<AffineRing>,
    target: Arc<AffineRing>,
    images: Vec<Polynomial>,
}

impl RingMap {
    /// Checks that every defining relation of the source maps to zero.
    pub fn new(source: &Arc<AffineRing>, target: &Arc<AffineRing>, images: Vec<Polynomial>) -> Result<RingMap> {
        if images.len() != source.nvars() {
            return Err(AlgebraError::LengthMismatch { expected: source.nvars(), found: images.len() });
        }
        if source.poly.field() != target.poly.field() {
            return Err(AlgebraError::RingMismatch);
        }
        for im in &images {
            target.check(im)?;
        }
        let images: Vec<Polynomial> = images.iter().map(|p| target.reduce(p)).collect();
        let map = RingMap { source: source.clone(), target: target.clone(), images };
        for r in source.relations() {
            let v = map.apply_raw(r);
            if !v.is_zero() {
                return Err(AlgebraError::IllDefinedMap(format!("relation {r} maps to {v}")));
            }
        }
        Ok(map)
    }

    pub fn identity(ring: &Arc<AffineRing>) -> RingMap {
        let images = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        RingMap { source: ring.clone(), target: ring.clone(), images }
    }

    /// Map sending each source variable to the target variable of the same
    /// name.
    pub fn by_names(source: &Arc<AffineRing>, target: &Arc<AffineRing>) -> Result<RingMap> {
        let images = source
            .poly_ring()
            .vars()
            .iter()
            .map(|v| target.var_named(v))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<AffineRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<AffineRing> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    fn apply_raw(&self, f: &Polynomial) -> Polynomial {
        self.target.reduce(&f.substitute(self.target.poly_ring(), &self.images))
    }

    /// Substitution followed by the target normal form.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.source.check(f)?;
        Ok(self.apply_raw(f))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &RingMap) -> Result<RingMap> {
        if !same_affine(&self.target, &next.source) {
            return Err(AlgebraError::RingMismatch);
        }
        let images = self.images.iter().map(|p| next.apply_raw(p)).collect();
        Ok(RingMap { source: self.source.clone(), target: next.target.clone(), images })
    }

    /// Recognises `A -> A[z]/(f z - 1)` where the map is the inclusion of
    /// variables by name. Returns `f` on success.
    pub fn principal_localization(&self) -> Option<Polynomial> {
        let src = self.source.poly_ring();
        let tgt = self.target.poly_ring();
        if tgt.nvars() != src.nvars() + 1 {
            return None;
        }
        let mut index_map = Vec::with_capacity(src.nvars());
        for (i, v) in src.vars().iter().enumerate() {
            let j = tgt.index_of(v)?;
            if self.images[i] != self.target.reduce(&tgt.var(j)) {
                return None;
            }
            index_map.push(j);
        }
        let z = (0..tgt.nvars()).find(|j| !index_map.contains(j))?;
        // target ideal must be the source ideal plus one relation f*z - 1
        let extended: Vec<Polynomial> = self.source.relations().iter().map(|r| r.map_vars(tgt, &index_map)).collect();
        let base = AffineRing::new(tgt, extended.clone()).ok()?;
        let rel = self.target.relations().iter().find(|r| !base.is_zero(r))?;
        let rel = base.reduce(rel);
        // rel = c*(f*z - 1): degree one in z, constant term free of z
        let mut f_terms = Vec::new();
        let mut rest_terms = Vec::new();
        for (m, c) in rel.terms() {
            match m.exponents()[z] {
                0 => rest_terms.push((m.clone(), c.clone())),
                1 => {
                    let mut e = m.exponents().to_vec();
                    e[z] = 0;
                    f_terms.push((crate::monomial::Monomial::new(e), c.clone()))
                }
                _ => return None,
            }
        }
        let rest = Polynomial::from_terms(tgt, rest_terms);
        if !rest.is_constant() || rest.is_zero() {
            return None;
        }
        let scale = rest.terms()[0].1.neg().inv();
        let f = Polynomial::from_terms(tgt, f_terms).scale(&scale);
        let mut expected = extended;
        expected.push(&(&f * &tgt.var(z)) - &tgt.one());
        if !AffineRing::new(tgt, expected).ok()?.same_as(&self.target) {
            return None;
        }
        let mut back = vec![0usize; tgt.nvars()];
        for (i, &j) in index_map.iter().enumerate() {
            back[j] = i;
        }
        Some(self.source.reduce(&f.map_vars(src, &back)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_nilpotent_vanishes() {
        let r = PolyRing::rational(&["x"]);
        let a = AffineRing::new(&r, vec![r.var(0).pow(2)]).unwrap();
        let x = a.var(0);
        assert!(a.is_zero(&(&x * &x)));
        assert_eq!(a.to_string(), "QQ[x] / (x^2)");
    }

    #[test]
    fn map_into_dual_numbers() {
        let t = PolyRing::rational(&["T"]);
        let src = AffineRing::polynomial(&t);
        let r = PolyRing::rational(&["x"]);
        let a = AffineRing::new(&r, vec![r.var(0).pow(2)]).unwrap();
        let phi = RingMap::new(&src, &a, vec![r.var(0)]).unwrap();
        assert!(phi.apply(&t.var(0).pow(2)).unwrap().is_zero());
        assert_eq!(phi.apply(&t.var(0)).unwrap(), r.var(0));
    }

    #[test]
    fn identity_and_inclusion() {
        let r = PolyRing::rational(&["x", "y"]);
        let a = AffineRing::polynomial(&r);
        let f = &r.var(0) * &r.var(1);
        assert_eq!(RingMap::identity(&a).apply(&f).unwrap(), f);
        let s = PolyRing::rational(&["x", "y", "z"]);
        let loc = AffineRing::new(&s, vec![&(&s.var(0) * &s.var(2)) - &s.one()]).unwrap();
        let inc = RingMap::by_names(&a, &loc).unwrap();
        assert_eq!(inc.apply(&f).unwrap().to_string(), "x*y");
        assert_eq!(inc.principal_localization().unwrap(), r.var(0));
    }

    #[test]
    fn ill_defined_map_rejected() {
        let r = PolyRing::rational(&["x"]);
        let a = AffineRing::new(&r, vec![r.var(0).pow(2)]).unwrap();
        let b = AffineRing::polynomial(&r);
        assert!(matches!(RingMap::new(&a, &b, vec![r.var(0)]), Err(AlgebraError::IllDefinedMap(_))));
    }
}
