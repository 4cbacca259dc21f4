//! Exact arithmetic: integers, rationals, prime fields, small extension
//! fields, dense univariate polynomials and rational functions.
//!
//! Every element type carries enough context to build its own zero and one
//! (a prime-field element knows `p`, an extension element holds its field),
//! which lets the polynomial and invariant code stay generic over the ring.

mod factor;
mod fp;
mod fq;
mod parse;
mod poly;
mod ratfun;
mod resultant;
mod roots;
pub mod serial;

pub use factor::{
    exact_sqrt, factor_integer, is_prime_u64, is_probable_prime, next_prime, primes_below,
    squarefree_part_int, Factorization,
};
pub use fp::{Fp, PrimeField};
pub use fq::{ExtField, Fq};
pub use parse::{parse_bivariate, parse_poly, parse_poly_z, parse_rational, parse_value};
pub use poly::Poly;
pub use ratfun::RationalFunction;
pub use resultant::{
    crt_symmetric, discriminant, discriminant_z, resultant, resultant_modular,
    resultant_subresultant, resultant_z,
};
pub use roots::{
    distinct_degree_factorization, embedding, equal_degree_split, factor_finite, is_irreducible,
    roots_in_field, roots_in_splitting_field, roots_in_splitting_field_ext, splitting_degree,
    squarefree_factorization, Root,
};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integers.
pub type Integer = BigInt;
/// Rationals, always reduced with positive denominator.
pub type Rational = BigRational;

/// A commutative ring whose elements know how to build their own constants.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Image of an integer in this ring.
    fn from_int_like(&self, n: &BigInt) -> Self;

    fn from_i64_like(&self, n: i64) -> Self {
        self.from_int_like(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    fn pow_big(&self, e: &BigUint) -> Self {
        let mut acc = self.one_like();
        for i in (0..e.bits()).rev() {
            acc = acc.square();
            if e.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    /// Multiply by an integer.
    fn scale_int(&self, n: i64) -> Self {
        self.mul(&self.from_i64_like(n))
    }
}

/// A ring containing the image of `Q` (or at least of the rationals whose
/// denominators are invertible in it).
pub trait QAlgebra: Ring {
    /// Image of `q`, or `None` when its denominator is not invertible.
    fn from_rational_like(&self, q: &BigRational) -> Option<Self>;

    fn scale_rational(&self, q: &BigRational) -> Option<Self> {
        Some(self.mul(&self.from_rational_like(q)?))
    }
}

/// A field.
pub trait Field: QAlgebra {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul(&rhs.inv()?))
    }

    /// Characteristic, 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// Whether the element is a square in this field.
    fn is_square(&self) -> bool;
}

/// A finite field `F_q` with `q = p^m`.
pub trait FiniteField: Field + Eq + std::hash::Hash {
    fn order(&self) -> BigUint;
    fn degree(&self) -> usize;
    /// `self^p`.
    fn frobenius(&self) -> Self;
    /// The element with index `i` in a fixed enumeration of the field, `0 <= i < q`.
    fn element_at(&self, i: u64) -> Self;
    /// Canonical coefficient vector over the prime field (constant term first).
    fn coords(&self) -> Vec<u64>;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        n.clone()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl QAlgebra for BigRational {
    fn from_rational_like(&self, q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn is_square(&self) -> bool {
        if self.is_negative() {
            return false;
        }
        is_square_int(self.numer()) && is_square_int(self.denom())
    }
}

/// Whether a (nonnegative) integer is a perfect square.
pub fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Exact `n`-th root of a rational, if it exists.
pub fn rational_nth_root(q: &BigRational, n: u32) -> Option<BigRational> {
    if q.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root = |a: &BigInt| -> Option<BigInt> {
        let r = a.nth_root(n);
        if &Pow::pow(&r, n) == a {
            Some(r)
        } else {
            None
        }
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

use num_traits::Pow;

/// Rational from a pair of machine integers.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from a machine integer.
pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
