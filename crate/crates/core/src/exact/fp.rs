use super::{factor::is_prime_u64, Field, FiniteField, QAlgebra, Ring};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::fmt;

/// The prime field `F_p` for an odd prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    pub(crate) p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || !is_prime_u64(p) || p >= 1 << 63 {
            return Err(Error::Precondition(format!(
                "{p} is not an odd prime below 2^63"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp::from_i64(v, self.p)
    }

    pub fn zero(&self) -> Fp {
        Fp { v: 0, p: self.p }
    }

    pub fn one(&self) -> Fp {
        Fp { v: 1, p: self.p }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.p).map(move |v| Fp { v, p: self.p })
    }
}

/// An element of `F_p`, stored as its canonical representative.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    let x = e.x.mod_floor(&BigInt::from(p));
    x.to_u64()
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Fp {
        Fp { v: v % p, p }
    }

    pub fn from_i64(v: i64, p: u64) -> Fp {
        let r = (v as i128).rem_euclid(p as i128) as u64;
        Fp { v: r, p }
    }

    pub fn from_bigint(n: &BigInt, p: u64) -> Fp {
        let r = n.mod_floor(&BigInt::from(p));
        Fp {
            v: r.to_u64().unwrap(),
            p,
        }
    }

    pub fn from_rational(q: &BigRational, p: u64) -> Option<Fp> {
        let d = Fp::from_bigint(q.denom(), p);
        Some(Fp::from_bigint(q.numer(), p).mul(&d.inv()?))
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self) -> i64 {
        if self.v > self.p / 2 {
            self.v as i64 - self.p as i64
        } else {
            self.v as i64
        }
    }

    /// Legendre symbol: 0, 1 or -1.
    pub fn legendre(&self) -> i32 {
        if self.v == 0 {
            return 0;
        }
        if powmod(self.v, (self.p - 1) / 2, self.p) == 1 {
            1
        } else {
            -1
        }
    }

    /// A square root, if one exists (Tonelli-Shanks).
    pub fn sqrt(&self) -> Option<Fp> {
        let p = self.p;
        if self.v == 0 {
            return Some(*self);
        }
        if self.legendre() != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while Fp::new(z, p).legendre() != -1 {
            z += 1;
        }
        let mut m = s;
        let mut c = powmod(z, q, p);
        let mut t = powmod(self.v, q, p);
        let mut r = powmod(self.v, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = mulmod(tt, tt, p);
                i += 1;
            }
            let b = powmod(c, 1 << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        let r = Fp::new(r, p);
        let r2 = r.neg();
        Some(if r2.v < r.v { r2 } else { r })
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.v + rhs.v;
        Fp {
            v: if s >= self.p { s - self.p } else { s },
            p: self.p,
        }
    }
    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            v: if self.v >= rhs.v {
                self.v - rhs.v
            } else {
                self.v + self.p - rhs.v
            },
            p: self.p,
        }
    }
    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            v: mulmod(self.v, rhs.v, self.p),
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        Fp::from_bigint(n, self.p)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp::from_i64(n, self.p)
    }
    fn pow(&self, e: u64) -> Self {
        Fp {
            v: powmod(self.v, e, self.p),
            p: self.p,
        }
    }
}

impl QAlgebra for Fp {
    fn from_rational_like(&self, q: &BigRational) -> Option<Self> {
        Fp::from_rational(q, self.p)
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        invmod(self.v, self.p).map(|v| Fp { v, p: self.p })
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn is_square(&self) -> bool {
        self.legendre() >= 0
    }
}

impl FiniteField for Fp {
    fn order(&self) -> BigUint {
        BigUint::from(self.p)
    }
    fn degree(&self) -> usize {
        1
    }
    fn frobenius(&self) -> Self {
        *self
    }
    fn element_at(&self, i: u64) -> Self {
        Fp::new(i, self.p)
    }
    fn coords(&self) -> Vec<u64> {
        vec![self.v]
    }
}
