use super::{Field, FiniteField, QAlgebra, Ring};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use std::fmt;

/// Dense univariate polynomial, coefficient `i` multiplies `x^i`.
///
/// Trailing zeros are never stored. The polynomial keeps a zero of its
/// coefficient ring so that context-carrying coefficients (prime fields,
/// extension fields) are available even for the zero polynomial.
#[derive(Clone, PartialEq)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
    zero: R,
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c:?})")?,
                1 => write!(f, "({c:?})*x")?,
                _ => write!(f, "({c:?})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>, zero: R) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            zero: zero.zero_like(),
        }
    }

    pub fn zero(zero: R) -> Self {
        Poly {
            coeffs: Vec::new(),
            zero: zero.zero_like(),
        }
    }

    pub fn constant(c: R) -> Self {
        let z = c.zero_like();
        Poly::new(vec![c], z)
    }

    pub fn one(zero: &R) -> Self {
        Poly::constant(zero.one_like())
    }

    /// The polynomial `x`.
    pub fn x(zero: &R) -> Self {
        Poly::monomial(zero.one_like(), 1)
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let z = c.zero_like();
        let mut v = vec![z.clone(); k];
        v.push(c);
        Poly::new(v, z)
    }

    /// `x - a`.
    pub fn linear_root(a: &R) -> Self {
        Poly::new(vec![a.neg(), a.one_like()], a.zero_like())
    }

    pub fn from_ints(cs: &[i64], zero: &R) -> Self {
        Poly::new(
            cs.iter().map(|&c| zero.from_i64_like(c)).collect(),
            zero.clone(),
        )
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lead(&self) -> &R {
        self.coeffs.last().unwrap_or(&self.zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(v, self.zero.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(v, self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.zero.clone());
        }
        let mut v = vec![self.zero.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::new(v, self.zero.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
            self.zero.clone(),
        )
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.zero);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = self.zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluation at an element of an algebra over the coefficient ring,
    /// through a coefficient map.
    pub fn eval_with<S: Ring>(&self, x: &S, map: impl Fn(&R) -> S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&map(c));
        }
        acc
    }

    /// Coefficientwise map into another ring.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S, zero: S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect(), zero)
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale_int(i as i64))
            .collect();
        Poly::new(v, self.zero.clone())
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero(self.zero.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// `self(-x)`.
    pub fn negate_var(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        Poly::new(v, self.zero.clone())
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &R) -> Self {
        self.compose(&Poly::new(vec![c.clone(), c.one_like()], self.zero.clone()))
    }

    /// `x^n self(1/x)` for `n >= deg`.
    pub fn reverse(&self, n: usize) -> Self {
        assert!(self.coeffs.len() <= n + 1, "reverse length below degree");
        let mut v = vec![self.zero.clone(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Poly::new(v, self.zero.clone())
    }

    /// `self(x^k)`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![self.zero.clone(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Poly::new(v, self.zero.clone())
    }

    /// Pseudo-division: returns `(q, r)` with `lc(d)^(deg a - deg d + 1) a = q d + r`.
    pub fn pseudo_divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let z = self.zero.clone();
        if self.deg() < d.deg() {
            return (Poly::zero(z), self.clone());
        }
        let dd = d.coeffs.len() - 1;
        let lc = d.lead().clone();
        let mut r = self.coeffs.clone();
        let n = r.len() - dd;
        let mut q = vec![z.clone(); n];
        for k in (0..n).rev() {
            let c = r[k + dd].clone();
            for qi in q.iter_mut() {
                *qi = qi.mul(&lc);
            }
            q[k] = c.clone();
            for ri in r.iter_mut().take(k + dd) {
                *ri = ri.mul(&lc);
            }
            r[k + dd] = z.clone();
            if c.is_zero() {
                continue;
            }
            for i in 0..dd {
                r[k + i] = r[k + i].sub(&c.mul(&d.coeffs[i]));
            }
        }
        (Poly::new(q, z.clone()), Poly::new(r, z))
    }
}

impl<R: Field> Poly<R> {
    /// Euclidean division.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let z = self.zero.clone();
        if self.deg() < d.deg() {
            return (Poly::zero(z), self.clone());
        }
        let dd = d.coeffs.len() - 1;
        let inv = d.lead().inv().expect("leading coefficient invertible");
        let mut r = self.coeffs.clone();
        let n = r.len() - dd;
        let mut q = vec![z.clone(); n];
        for k in (0..n).rev() {
            let c = r[k + dd].mul(&inv);
            r[k + dd] = z.clone();
            if c.is_zero() {
                continue;
            }
            for i in 0..dd {
                r[k + i] = r[k + i].sub(&c.mul(&d.coeffs[i]));
            }
            q[k] = c;
        }
        (Poly::new(q, z.clone()), Poly::new(r, z))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn gcdext(&self, other: &Self) -> (Self, Self, Self) {
        let z = self.zero.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(&z), Poly::zero(z.clone()));
        let (mut t0, mut t1) = (Poly::zero(z.clone()), Poly::one(&z));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().inv().unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &Self) -> Self {
        let base = self.rem(m);
        let mut acc = Poly::one(&self.zero).rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Product of the distinct irreducible factors, monic (characteristic
    /// zero, or degree below the characteristic).
    pub fn radical(&self) -> Self {
        assert!(!self.is_zero(), "radical of zero");
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        self.div_exact(&g).unwrap().monic()
    }

    /// Yun's squarefree decomposition `f = lc * prod g_i^i` (characteristic
    /// zero, or degree below the characteristic).
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).unwrap();
        let c = df.div_exact(&a0).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.div_exact(&a).unwrap();
            let c = d.div_exact(&a).unwrap();
            d = c.sub(&b.derivative());
            if !a.is_constant() {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// The monic squarefree `d` with `f = lc * d * m^2`: product of the
    /// factors of odd multiplicity.
    pub fn squarefree_part(&self) -> Self {
        let one = Poly::one(&self.zero);
        self.squarefree_decomposition()
            .into_iter()
            .filter(|(_, i)| i % 2 == 1)
            .fold(one, |acc, (g, _)| acc.mul(&g))
    }

    pub fn is_separable(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Strip the maximal power of `d` dividing `self`; returns the exponent.
    pub fn strip_factor(&self, d: &Self) -> (Self, u32) {
        assert!(!d.is_constant(), "stripping a constant");
        let mut cur = self.clone();
        let mut k = 0;
        while !cur.is_zero() {
            match cur.div_exact(d) {
                Some(q) => {
                    cur = q;
                    k += 1;
                }
                None => break,
            }
        }
        (cur, k)
    }
}

impl<R: FiniteField> Poly<R> {
    /// `x^(q^k) mod self`.
    pub fn frobenius_power_of_x(&self, k: usize) -> Self {
        let q = self.zero.order();
        let mut h = Poly::x(&self.zero).rem(self);
        for _ in 0..k {
            h = h.powmod(&q, self);
        }
        h
    }
}

impl Poly<BigInt> {
    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::from(0), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        use num_traits::Signed;
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        Poly::new(
            self.coeffs.iter().map(|a| a / &c).collect(),
            BigInt::from(0),
        )
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(
            |c| BigRational::from_integer(c.clone()),
            BigRational::from_integer(0.into()),
        )
    }

    /// Largest coefficient bit length.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

impl Poly<BigRational> {
    /// `(c, P)` with `self = c * P`, `P` primitive integral with positive
    /// leading coefficient.
    pub fn to_primitive_integral(&self) -> (BigRational, Poly<BigInt>) {
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return (BigRational::zero(), Poly::zero(BigInt::zero()));
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &l).to_integer()).collect();
        let p = Poly::new(ints, BigInt::zero());
        let prim = p.primitive_part();
        let c = BigRational::new(p.lead().clone(), l * prim.lead());
        (c, prim)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero_like(&self) -> Self {
        Poly::zero(self.zero.clone())
    }
    fn one_like(&self) -> Self {
        Poly::one(&self.zero)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        Poly::constant(self.zero.from_int_like(n))
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn scale_int(&self, n: i64) -> Self {
        let c = self.zero.from_i64_like(n);
        self.scale(&c)
    }
}

impl<R: QAlgebra> QAlgebra for Poly<R> {
    fn from_rational_like(&self, q: &BigRational) -> Option<Self> {
        Some(Poly::constant(self.zero.from_rational_like(q)?))
    }
    fn scale_rational(&self, q: &BigRational) -> Option<Self> {
        let c = self.zero.from_rational_like(q)?;
        Some(self.scale(&c))
    }
}
