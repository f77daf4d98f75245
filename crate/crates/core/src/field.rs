//! Exact scalars over the rationals or a prime field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Ground field descriptor. Arithmetic is exact in both cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    /// Prime field of order `p`.
    Gf(u64),
}

impl FieldSpec {
    pub fn gf(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Gf(p))
        } else {
            Err(Error::Parse(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Gf(p) => *p,
        }
    }

    /// True when radical computations via the trace form are valid: the
    /// characteristic is zero or exceeds `dim`.
    pub fn admits_radical(&self, dim: usize) -> bool {
        match self {
            FieldSpec::Rationals => true,
            FieldSpec::Gf(p) => *p as u128 > dim as u128,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Gf(p) => Scalar::Fp { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Gf(p) => Scalar::Fp { p: *p, v: 1 % *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Gf(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, v: m }
            }
        }
    }

    /// Parse a scalar in canonical rendering: `a/b` or `a` over the
    /// rationals, a residue `0..p-1` over GF(p).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let r = if let Some((num, den)) = s.split_once('/') {
                    let n: BigInt = num
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational: {s}")))?;
                    let d: BigInt = den
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational: {s}")))?;
                    if d.is_zero() {
                        return Err(Error::Parse(format!("zero denominator: {s}")));
                    }
                    BigRational::new(n, d)
                } else {
                    let n: BigInt = s
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad integer: {s}")))?;
                    BigRational::from_integer(n)
                };
                Ok(Scalar::Rat(r))
            }
            FieldSpec::Gf(_) => {
                let n: i64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad residue: {s}")))?;
                Ok(self.from_i64(n))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::Gf(p) => write!(f, "gf:{p}"),
        }
    }
}

/// An exact field element. Elements of different fields never mix; doing so
/// is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::Gf(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp {
                    p: *p,
                    v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp {
                    p: *p,
                    v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "division by zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { p, v } => {
                assert!(*v != 0, "division by zero");
                Scalar::Fp {
                    p: *p,
                    v: mod_pow(*v, p - 2, *p),
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Canonical text rendering: reduced fraction over the rationals, the
    /// least nonnegative residue over GF(p).
    pub fn render(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    /// True when the scalar is a (positive or negative) integer of absolute
    /// value one; used only to pick tidy display forms.
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { p, v } => *v == 1 % *p,
        }
    }

    pub fn is_minus_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => (-r).is_one(),
            Scalar::Fp { p, v } => p - v == 1 && *p != 1,
        }
    }

    /// Signed integer value when the scalar is a small integer.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() && r.numer().abs() <= BigInt::from(i64::MAX) {
                    let s: String = r.numer().to_string();
                    s.parse().ok()
                } else {
                    None
                }
            }
            Scalar::Fp { v, .. } => i64::try_from(*v).ok(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = FieldSpec::Rationals;
        let a = f.parse_scalar("1/3").unwrap();
        let b = f.parse_scalar("1/6").unwrap();
        assert_eq!(a.add(&b).render(), "1/2");
        assert_eq!(a.mul(&b).render(), "1/18");
        assert_eq!(a.div(&b).render(), "2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::gf(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(a.mul(&a.inv()), f.one());
        assert!(FieldSpec::gf(6).is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(65537));
        assert!(!is_prime(65536));
        assert!(is_prime(1_000_000_007));
    }
}
