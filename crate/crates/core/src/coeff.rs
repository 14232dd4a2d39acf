//! Exact coefficient fields: the rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Prime field of the given characteristic.
    Prime(u64),
}

impl Field {
    /// Builds `GF(p)`, rejecting non-primes and moduli too large for the
    /// `u128` product path.
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if !(2..(1 << 62)).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::zero()),
            Field::Prime(p) => Coeff::Modular { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Modular { value: n.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// Maps a rational number into the field. Fails when the denominator
    /// vanishes modulo `p`.
    pub fn from_rational(self, q: &BigRational) -> Result<Coeff, AlgebraError> {
        match self {
            Field::Rational => Ok(Coeff::Rational(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let reduce = |n: &BigInt| -> u64 {
                    let r = ((n % &pb) + &pb) % &pb;
                    r.to_u64().expect("residue fits in u64")
                };
                let num = Coeff::Modular { value: reduce(q.numer()), modulus: p };
                let den = Coeff::Modular { value: reduce(q.denom()), modulus: p };
                if den.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                Ok(&num * &den.inv())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Coeff {
    pub fn field(&self) -> Field {
        match self {
            Coeff::Rational(_) => Field::Rational,
            Coeff::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Modular { value, .. } => *value == 1,
        }
    }

    /// True for coefficients that print with a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_negative(),
            Coeff::Modular { .. } => false,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Rational(q) => {
                assert!(!q.is_zero(), "inverse of zero");
                Coeff::Rational(q.recip())
            }
            Coeff::Modular { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                Coeff::Modular { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(q) => Coeff::Rational(-q),
            Coeff::Modular { value, modulus } => Coeff::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $m:expr) => {
        impl<'a> std::ops::$trait<&'a Coeff> for &'a Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &'a Coeff) -> Coeff {
                match (self, rhs) {
                    (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational($q(a, b)),
                    (
                        Coeff::Modular { value: a, modulus: p },
                        Coeff::Modular { value: b, modulus: q },
                    ) if p == q => Coeff::Modular { value: $m(*a, *b, *p), modulus: *p },
                    _ => panic!("coefficient field mismatch"),
                }
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
});
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
});
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, mul_mod);

impl<'a> std::ops::Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn div(self, rhs: &'a Coeff) -> Coeff {
        self * &rhs.inv()
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let q = Field::Rational.from_rational(&BigRational::new(6.into(), (-4).into())).unwrap();
        assert_eq!(q.to_string(), "-3/2");
        let r = &q * &Field::Rational.from_i64(-2);
        assert_eq!(r.to_string(), "3");
    }

    #[test]
    fn prime_field_residues() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Coeff::Modular { value: 6, modulus: 7 });
        assert!((&a * &a.inv()).is_one());
        let half = f.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half, f.from_i64(4));
        assert!(f.from_rational(&BigRational::new(1.into(), 7.into())).is_err());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }
}
