use super::fp::{invmod, mulmod};
use super::{Field, FiniteField, Fp, Poly, PrimeField, QAlgebra, Ring};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

/// Largest supported extension degree.
pub const MAX_EXT_DEGREE: usize = 6;

#[derive(Debug, PartialEq, Eq)]
struct FqCtx {
    p: u64,
    m: usize,
    /// Monic modulus, `m + 1` coefficients, constant term first.
    modulus: Vec<u64>,
}

/// The field `F_{p^m}`, `1 <= m <= 6`, presented as `F_p[x]/(modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    ctx: Arc<FqCtx>,
}

/// An element of an [`ExtField`].
#[derive(Clone)]
pub struct Fq {
    ctx: Arc<FqCtx>,
    c: [u64; MAX_EXT_DEGREE],
}

impl ExtField {
    /// `F_{p^m}` with the smallest monic irreducible modulus, ordering
    /// candidates by the integer `sum c_i p^i` of their lower coefficients.
    pub fn new(p: u64, m: usize) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        if m == 0 || m > MAX_EXT_DEGREE {
            return Err(Error::Precondition(format!(
                "extension degree {m} unsupported"
            )));
        }
        // first irreducible in lexicographic order of the low coefficients,
        // each digit below `base` (a binomial scan alone can take p steps)
        for base in [p.min(64), p] {
            let count = (base as u128).pow(m as u32);
            for n in 0..count {
                let mut coeffs = Vec::with_capacity(m + 1);
                let mut k = n;
                for _ in 0..m {
                    coeffs.push(fp.elem((k % base as u128) as i64));
                    k /= base as u128;
                }
                coeffs.push(fp.one());
                let f = Poly::new(coeffs, fp.zero());
                if (m == 1 || !f.coeff(0).is_zero()) && super::roots::is_irreducible(&f) {
                    return Ok(Self::build(p, m, &f));
                }
            }
        }
        Err(Error::Internal(format!(
            "no irreducible polynomial of degree {m} over F_{p}"
        )))
    }

    /// `F_p[x]/(modulus)` for a caller-chosen monic irreducible modulus.
    pub fn with_modulus(modulus: &Poly<Fp>) -> Result<Self> {
        let m = modulus
            .degree()
            .ok_or_else(|| Error::Precondition("zero modulus".into()))?;
        let p = modulus.coeff(0).modulus();
        PrimeField::new(p)?;
        if m == 0 || m > MAX_EXT_DEGREE || !modulus.lead().is_one() {
            return Err(Error::Precondition(
                "modulus must be monic of degree 1..=6".into(),
            ));
        }
        if !super::roots::is_irreducible(modulus) {
            return Err(Error::Precondition("modulus is reducible".into()));
        }
        Ok(Self::build(p, m, modulus))
    }

    fn build(p: u64, m: usize, f: &Poly<Fp>) -> Self {
        let modulus = (0..=m).map(|i| f.coeff(i).value()).collect();
        ExtField {
            ctx: Arc::new(FqCtx { p, m, modulus }),
        }
    }

    pub fn p(&self) -> u64 {
        self.ctx.p
    }

    pub fn degree(&self) -> usize {
        self.ctx.m
    }

    pub fn modulus(&self) -> Poly<Fp> {
        let fp = PrimeField { p: self.ctx.p };
        Poly::new(
            self.ctx.modulus.iter().map(|&v| Fp::new(v, fp.p)).collect(),
            fp.zero(),
        )
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.ctx.p).pow(self.ctx.m as u32)
    }

    pub fn zero(&self) -> Fq {
        Fq {
            ctx: self.ctx.clone(),
            c: [0; MAX_EXT_DEGREE],
        }
    }

    pub fn one(&self) -> Fq {
        self.from_u64(1)
    }

    pub fn from_u64(&self, v: u64) -> Fq {
        let mut c = [0; MAX_EXT_DEGREE];
        c[0] = v % self.ctx.p;
        Fq {
            ctx: self.ctx.clone(),
            c,
        }
    }

    pub fn from_fp(&self, a: &Fp) -> Fq {
        debug_assert_eq!(a.modulus(), self.ctx.p);
        self.from_u64(a.value())
    }

    pub fn from_i64(&self, v: i64) -> Fq {
        self.from_fp(&Fp::from_i64(v, self.ctx.p))
    }

    /// Element from coordinates (constant term first), reduced mod p.
    pub fn from_coords(&self, coords: &[u64]) -> Fq {
        assert!(coords.len() <= self.ctx.m, "too many coordinates");
        let mut c = [0; MAX_EXT_DEGREE];
        for (i, &v) in coords.iter().enumerate() {
            c[i] = v % self.ctx.p;
        }
        Fq {
            ctx: self.ctx.clone(),
            c,
        }
    }

    /// The class of `x`.
    pub fn generator(&self) -> Fq {
        if self.ctx.m == 1 {
            return self.from_u64(self.ctx.p - self.ctx.modulus[0]);
        }
        self.from_coords(&[0, 1])
    }

    /// All elements in the enumeration order of [`FiniteField::element_at`].
    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        let q = self
            .ctx
            .p
            .checked_pow(self.ctx.m as u32)
            .expect("field too large to enumerate");
        let z = self.zero();
        (0..q).map(move |i| z.element_at(i))
    }

    pub fn same_field(&self, a: &Fq) -> bool {
        Arc::ptr_eq(&self.ctx, &a.ctx) || *self.ctx == *a.ctx
    }
}

impl Fq {
    pub fn field(&self) -> ExtField {
        ExtField {
            ctx: self.ctx.clone(),
        }
    }

    pub fn p(&self) -> u64 {
        self.ctx.p
    }

    /// Whether the element lies in the prime field.
    pub fn in_prime_field(&self) -> bool {
        self.c[1..].iter().all(|&v| v == 0)
    }

    /// The prime-field value, if the element lies there.
    pub fn to_fp(&self) -> Option<Fp> {
        if self.in_prime_field() {
            Some(Fp::new(self.c[0], self.ctx.p))
        } else {
            None
        }
    }

    fn with(&self, c: [u64; MAX_EXT_DEGREE]) -> Fq {
        Fq {
            ctx: self.ctx.clone(),
            c,
        }
    }

    /// Smallest `d` dividing the field degree with `self^(p^d) = self`.
    pub fn field_of_definition_degree(&self) -> usize {
        let m = self.ctx.m;
        (1..=m)
            .filter(|d| m.is_multiple_of(*d))
            .find(|&d| {
                let mut x = self.clone();
                for _ in 0..d {
                    x = x.frobenius();
                }
                x == *self
            })
            .unwrap_or(m)
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.m == 1 || self.in_prime_field() {
            return write!(f, "{}", self.c[0]);
        }
        write!(f, "[")?;
        for i in 0..self.ctx.m {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.c[i])?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && (Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx)
    }
}

impl Eq for Fq {}

impl Hash for Fq {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.p.hash(state);
        self.ctx.m.hash(state);
        self.c.hash(state);
    }
}

impl Ring for Fq {
    fn zero_like(&self) -> Self {
        self.with([0; MAX_EXT_DEGREE])
    }
    fn one_like(&self) -> Self {
        let mut c = [0; MAX_EXT_DEGREE];
        c[0] = 1;
        self.with(c)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }
    fn is_one(&self) -> bool {
        self.c[0] == 1 && self.in_prime_field()
    }
    fn add(&self, rhs: &Self) -> Self {
        let p = self.ctx.p;
        let mut c = [0; MAX_EXT_DEGREE];
        for i in 0..self.ctx.m {
            let s = self.c[i] + rhs.c[i];
            c[i] = if s >= p { s - p } else { s };
        }
        self.with(c)
    }
    fn sub(&self, rhs: &Self) -> Self {
        let p = self.ctx.p;
        let mut c = [0; MAX_EXT_DEGREE];
        for i in 0..self.ctx.m {
            c[i] = if self.c[i] >= rhs.c[i] {
                self.c[i] - rhs.c[i]
            } else {
                self.c[i] + p - rhs.c[i]
            };
        }
        self.with(c)
    }
    fn mul(&self, rhs: &Self) -> Self {
        let p = self.ctx.p;
        let m = self.ctx.m;
        if m == 1 {
            let mut c = [0; MAX_EXT_DEGREE];
            c[0] = mulmod(self.c[0], rhs.c[0], p);
            return self.with(c);
        }
        let mut prod = [0u64; 2 * MAX_EXT_DEGREE - 1];
        for i in 0..m {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + mulmod(self.c[i], rhs.c[j], p)) % p;
            }
        }
        let md = &self.ctx.modulus;
        for k in (m..2 * m - 1).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..m {
                let sub = mulmod(lead, md[i], p);
                let slot = &mut prod[k - m + i];
                *slot = if *slot >= sub {
                    *slot - sub
                } else {
                    *slot + p - sub
                };
            }
        }
        let mut c = [0; MAX_EXT_DEGREE];
        c[..m].copy_from_slice(&prod[..m]);
        self.with(c)
    }
    fn neg(&self) -> Self {
        let p = self.ctx.p;
        let mut c = [0; MAX_EXT_DEGREE];
        for i in 0..self.ctx.m {
            c[i] = if self.c[i] == 0 { 0 } else { p - self.c[i] };
        }
        self.with(c)
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        let mut c = [0; MAX_EXT_DEGREE];
        c[0] = Fp::from_bigint(n, self.ctx.p).value();
        self.with(c)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        let mut c = [0; MAX_EXT_DEGREE];
        c[0] = Fp::from_i64(n, self.ctx.p).value();
        self.with(c)
    }
}

impl QAlgebra for Fq {
    fn from_rational_like(&self, q: &BigRational) -> Option<Self> {
        let v = Fp::from_rational(q, self.ctx.p)?;
        let mut c = [0; MAX_EXT_DEGREE];
        c[0] = v.value();
        Some(self.with(c))
    }
}

impl Field for Fq {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.ctx.p;
        if self.in_prime_field() {
            let mut c = [0; MAX_EXT_DEGREE];
            c[0] = invmod(self.c[0], p)?;
            return Some(self.with(c));
        }
        let fp = PrimeField { p };
        let a = Poly::new(
            self.c[..self.ctx.m]
                .iter()
                .map(|&v| Fp::new(v, p))
                .collect(),
            fp.zero(),
        );
        let (g, s, _) = a.gcdext(&self.field().modulus());
        debug_assert_eq!(g.degree(), Some(0));
        let ginv = g.coeff(0).inv()?;
        let mut c = [0; MAX_EXT_DEGREE];
        for (i, v) in s.coeffs().iter().enumerate() {
            c[i] = v.mul(&ginv).value();
        }
        Some(self.with(c))
    }
    fn characteristic(&self) -> u64 {
        self.ctx.p
    }
    fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let e = (self.field().order() - 1u32) >> 1;
        self.pow_big(&e).is_one()
    }
}

impl FiniteField for Fq {
    fn order(&self) -> BigUint {
        self.field().order()
    }
    fn degree(&self) -> usize {
        self.ctx.m
    }
    fn frobenius(&self) -> Self {
        if self.ctx.m == 1 {
            return self.clone();
        }
        self.pow(self.ctx.p)
    }
    fn element_at(&self, mut i: u64) -> Self {
        let p = self.ctx.p;
        let mut c = [0; MAX_EXT_DEGREE];
        for slot in c.iter_mut().take(self.ctx.m) {
            *slot = i % p;
            i /= p;
        }
        self.with(c)
    }
    fn coords(&self) -> Vec<u64> {
        self.c[..self.ctx.m].to_vec()
    }
}

impl PartialOrd for Fq {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fq {
    /// Lexicographic on the coordinate vector, constant term first.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.c.cmp(&other.c)
    }
}
