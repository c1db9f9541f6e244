//! Coefficient fields: exact rationals ℚ and prime fields GF(p).
//!
//! The field is a runtime parameter. Elements are carried as [`Coeff`] values
//! and all arithmetic goes through the owning [`Field`], which holds the
//! modulus for the finite-field case.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The active coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// Exact rational numbers with arbitrary-precision integers.
    Q,
    /// The prime field GF(p) for a prime p < 2^31.
    Fp(u32),
}

/// An element of the active field.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// GF(p) for prime p ≤ 2^31.
    pub fn fp(p: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Field::Fp(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            Field::Q => Coeff::Q(BigRational::zero()),
            Field::Fp(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            Field::Q => Coeff::Q(BigRational::one()),
            Field::Fp(_) => Coeff::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Field::Q => Coeff::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Fp(p) => {
                let p = *p as i64;
                Coeff::Fp(v.rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            Field::Q => Coeff::Q(BigRational::from_integer(v.clone())),
            Field::Fp(p) => {
                let p = BigInt::from(*p);
                let mut r = v % &p;
                if r.is_negative() {
                    r += &p;
                }
                let digits = r.to_u64_digits().1;
                Coeff::Fp(digits.first().copied().unwrap_or(0))
            }
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Q(r) => r.is_zero(),
            Coeff::Fp(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Q, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x + y),
            (Field::Fp(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x + y) % (*p as u64)),
            _ => panic!("coefficient does not belong to the active field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Q, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x - y),
            (Field::Fp(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                let p = *p as u64;
                Coeff::Fp((x + p - y) % p)
            }
            _ => panic!("coefficient does not belong to the active field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Q, Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(x * y),
            (Field::Fp(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp((x * y) % (*p as u64)),
            _ => panic!("coefficient does not belong to the active field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Q, Coeff::Q(x)) => Coeff::Q(-x),
            (Field::Fp(p), Coeff::Fp(x)) => {
                let p = *p as u64;
                Coeff::Fp((p - x % p) % p)
            }
            _ => panic!("coefficient does not belong to the active field"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Q, Coeff::Q(x)) => {
                assert!(!x.is_zero(), "division by zero");
                Coeff::Q(x.recip())
            }
            (Field::Fp(p), Coeff::Fp(x)) => {
                assert!(*x != 0, "division by zero");
                Coeff::Fp(pow_mod(*x, *p as u64 - 2, *p as u64))
            }
            _ => panic!("coefficient does not belong to the active field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        *c == self.one()
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl std::fmt::Display for Coeff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coeff::Q(r) => write!(f, "{}", r),
            Coeff::Fp(v) => write!(f, "{}", v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(Field::fp(2).is_ok());
        assert!(Field::fp(3).is_ok());
        assert!(Field::fp(2147483647).is_ok()); // 2^31 - 1
        assert!(Field::fp(4).is_err());
        assert!(Field::fp(1).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let k = Field::fp(5).unwrap();
        let a = k.from_i64(3);
        let b = k.from_i64(4);
        assert_eq!(k.add(&a, &b), k.from_i64(2));
        assert_eq!(k.mul(&a, &b), k.from_i64(2));
        assert_eq!(k.sub(&a, &b), k.from_i64(4));
        assert_eq!(k.mul(&a, &k.inv(&a)), k.one());
        assert_eq!(k.from_i64(-1), k.from_i64(4));
    }

    #[test]
    fn rational_arithmetic() {
        let k = Field::Q;
        let half = k.div(&k.one(), &k.from_i64(2));
        assert_eq!(k.add(&half, &half), k.one());
        assert!(k.is_zero(&k.sub(&k.one(), &k.one())));
    }
}
