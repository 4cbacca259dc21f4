use super::{Field, Poly, QAlgebra, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Reduced fraction of polynomials over a field: `gcd(num, den) = 1`,
/// `den` monic.
#[derive(Clone, PartialEq)]
pub struct RationalFunction<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

impl<F: Field> RationalFunction<F> {
    /// `num / den`; panics on a zero denominator.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                den: Poly::one(num.zero_elem()),
                num,
            };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).unwrap();
        let den = den.div_exact(&g).unwrap();
        let lc_inv = den.lead().inv().unwrap();
        RationalFunction {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let den = Poly::one(p.zero_elem());
        RationalFunction { num: p, den }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RationalFunction::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul(&rhs.inv()?))
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        self.num.eval(x).div(&self.den.eval(x))
    }

    /// `self(g)` for a rational function `g`.
    pub fn compose(&self, g: &Self) -> Self {
        let ev = |p: &Poly<F>| {
            let mut acc = self.zero_like();
            for c in p.coeffs().iter().rev() {
                acc = acc
                    .mul(g)
                    .add(&RationalFunction::from_poly(Poly::constant(c.clone())));
            }
            acc
        };
        ev(&self.num)
            .div(&ev(&self.den))
            .expect("composition hits a pole identically")
    }
}

impl<F: Field> Ring for RationalFunction<F> {
    fn zero_like(&self) -> Self {
        RationalFunction::from_poly(self.num.zero_like())
    }
    fn one_like(&self) -> Self {
        RationalFunction::from_poly(self.num.one_like())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction::new(self.num.add(&rhs.num), self.den.clone());
        }
        RationalFunction::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn from_int_like(&self, n: &BigInt) -> Self {
        RationalFunction::from_poly(self.num.from_int_like(n))
    }
}

impl<F: Field> QAlgebra for RationalFunction<F> {
    fn from_rational_like(&self, q: &BigRational) -> Option<Self> {
        Some(RationalFunction::from_poly(self.num.from_rational_like(q)?))
    }
}
