//! Polynomial rings over exact fields and sparse polynomials in them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::coeff::{Coeff, Field};
use crate::error::{AlgebraError, Result};
use crate::monomial::{Monomial, MonomialOrder};

/// `field[vars]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(AlgebraError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// Convenience constructor for tests and examples: degrevlex over `QQ`.
    pub fn rational(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(
            Field::Rational,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
        .expect("distinct variable names")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing { field: self.field, vars: self.vars.clone(), order })
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn from_i64(self: &Arc<Self>, n: i64) -> Polynomial {
        self.constant(self.field.from_i64(n))
    }

    pub fn constant(self: &Arc<Self>, c: Coeff) -> Polynomial {
        Polynomial::from_terms(self, vec![(Monomial::one(self.nvars()), c)])
    }

    pub fn var(self: &Arc<Self>, index: usize) -> Polynomial {
        Polynomial::from_terms(self, vec![(Monomial::var(self.nvars(), index), self.field.one())])
    }

    pub fn var_named(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        let i = self.index_of(name).ok_or_else(|| AlgebraError::UnknownVariable(name.into()))?;
        Ok(self.var(i))
    }

    /// Returns a name based on `base` that is not among `taken`.
    pub fn fresh_name(taken: &[String], base: &str) -> String {
        if !taken.iter().any(|t| t == base) {
            return base.to_string();
        }
        let mut k = 1;
        loop {
            let cand = format!("{base}_{k}");
            if !taken.contains(&cand) {
                return cand;
            }
            k += 1;
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial with terms sorted in descending order for its ring's
/// monomial order and no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    /// Canonicalises an arbitrary list of terms (merges duplicates, drops
    /// zeros, sorts).
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = ring.order.clone();
        terms.sort_by(|a, b| ord.cmp_monomials(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds from terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[var] > 0)
    }

    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms.iter().any(|(m, _)| m.involves_any(vars))
    }

    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.neg())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, mon: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, a)| (m.mul(mon), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.push((m.mul(n), a * b));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, out))
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let ord = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (m, a) = &self.terms[i];
            let (n, b) = &other.terms[j];
            match ord.cmp_monomials(m, n) {
                std::cmp::Ordering::Greater => {
                    out.push((m.clone(), a.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((n.clone(), if subtract { b.neg() } else { b.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if subtract { a - b } else { a + b };
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(n, b)| (n.clone(), if subtract { b.neg() } else { b.clone() })),
        );
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Re-sorts the terms for a ring with the same variables but a different
    /// monomial order.
    pub fn reorder(&self, ring: &Arc<PolyRing>) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars());
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.order.cmp_monomials(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Renames variables: variable `i` becomes variable `index_map[i]` of
    /// `target`.
    pub fn map_vars(&self, target: &Arc<PolyRing>, index_map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[index_map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Substitutes `images[i]` for variable `i`. All images must live in one
    /// ring, which becomes the result ring.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![target.one()]; images.len()];
        let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            acc.extend(term.terms);
        }
        Polynomial::from_terms(target, acc)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?.clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let q = lm.quotient_of(&m);
            let qc = &c / &lc;
            rem = &rem - &divisor.mul_term(&q, &qc);
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }
}

impl<'a> std::ops::Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a> std::ops::Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> std::ops::Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", a, factors.join("*"))?;
            }
        }
        Ok(())
    }
}
