//! Monomials and monomial orders.

use std::cmp::Ordering;

use crate::error::{AlgebraError, Result};

/// Exponent vector indexed by the variables of the ambient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree restricted to the given variables.
    pub fn partial_degree(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.0[i]).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn involves_any(&self, vars: &[usize]) -> bool {
        vars.iter().any(|&i| self.0[i] > 0)
    }
}

/// A monomial order on exponent vectors of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Elimination order: monomials are first compared by the degrevlex
    /// order on the `eliminate` variables, ties broken by `inner`.
    Block { eliminate: Vec<usize>, inner: Box<MonomialOrder> },
    /// `t_vars` have degree one, all other variables degree zero; ties are
    /// broken by degrevlex on all variables.
    TGraded { t_vars: Vec<usize> },
}

impl MonomialOrder {
    pub fn block(eliminate: Vec<usize>, inner: MonomialOrder) -> Self {
        MonomialOrder::Block { eliminate, inner: Box::new(inner) }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(AlgebraError::LengthMismatch { expected: a.nvars(), found: b.nvars() });
        }
        Ok(self.cmp_exps(&a.0, &b.0))
    }

    pub(crate) fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(&a.0, &b.0)
    }

    pub(crate) fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => degrevlex(a, b, None),
            MonomialOrder::Block { eliminate, inner } => {
                degrevlex(a, b, Some(eliminate)).then_with(|| inner.cmp_exps(a, b))
            }
            MonomialOrder::TGraded { t_vars } => {
                let da: u32 = t_vars.iter().map(|&i| a[i]).sum();
                let db: u32 = t_vars.iter().map(|&i| b[i]).sum();
                da.cmp(&db).then_with(|| degrevlex(a, b, None))
            }
        }
    }
}

/// Degree reverse lexicographic comparison, optionally restricted to a
/// subset of variable indices (taken in increasing order).
fn degrevlex(a: &[u32], b: &[u32], subset: Option<&Vec<usize>>) -> Ordering {
    match subset {
        None => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| {
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            })
        }
        Some(vars) => {
            let da: u32 = vars.iter().map(|&i| a[i]).sum();
            let db: u32 = vars.iter().map(|&i| b[i]).sum();
            da.cmp(&db).then_with(|| {
                for &i in vars.iter().rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_leading_variable_dominates() {
        // x > y: x vs y^2
        assert_eq!(MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 2])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn degrevlex_xy_below_x_squared() {
        assert_eq!(MonomialOrder::DegRevLex.compare(&m(&[1, 1]), &m(&[2, 0])).unwrap(), Ordering::Less);
        assert_eq!(MonomialOrder::DegRevLex.compare(&m(&[0, 3]), &m(&[2, 0])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn block_eliminated_variable_dominates() {
        // variables (t, x); t vs x^5
        let ord = MonomialOrder::block(vec![0], MonomialOrder::Lex);
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[0, 5])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn t_graded_counts_only_t_degree() {
        let ord = MonomialOrder::TGraded { t_vars: vec![1] };
        assert_eq!(ord.compare(&m(&[0, 1]), &m(&[7, 0])).unwrap(), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[2, 1]), &m(&[1, 1])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(MonomialOrder::Lex.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }
}
