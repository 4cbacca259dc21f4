//! Weierstrass models `y^2 = x^3 + a2 x^2 + a4 x + a6`.
//!
//! Discriminants follow the `16 * disc(cubic)` convention, `j = c4^3 / Delta`
//! with `c4 = 16 (a2^2 - 3 a4)`. Rational point search is a bounded scan over
//! `x = a / b^2`; it never proves completeness.

use crate::error::{Error, Result};
use crate::exact::{
    roots_in_splitting_field, roots_in_splitting_field_ext, ExtField, Field, Fp, Fq, Poly,
    RationalFunction, Ring, Root,
};
use num_bigint::BigInt;
use num_integer::{Integer as _, Roots};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// `y^2 = cubic(x)` with a monic cubic.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassModel<R: Ring> {
    cubic: Poly<R>,
}

/// A point `(x, y)`; membership is checked by [`on_curve`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePoint<R> {
    pub x: R,
    pub y: R,
}

fn check_monic_cubic<R: Ring>(cubic: &Poly<R>) -> Result<()> {
    if cubic.degree() != Some(3) || !cubic.lead().is_one() {
        return Err(Error::Precondition("model needs a monic cubic".into()));
    }
    Ok(())
}

impl<R: Ring> WeierstrassModel<R> {
    /// An elliptic model; the cubic discriminant must be nonzero.
    pub fn new(cubic: Poly<R>) -> Result<Self> {
        let e = Self::possibly_singular(cubic)?;
        if e.cubic_discriminant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(e)
    }

    /// A model that may be singular (for locus studies).
    pub fn possibly_singular(cubic: Poly<R>) -> Result<Self> {
        check_monic_cubic(&cubic)?;
        Ok(WeierstrassModel { cubic })
    }

    pub fn from_coeffs(a2: R, a4: R, a6: R) -> Result<Self> {
        let one = a2.one_like();
        Self::new(Poly::new(vec![a6, a4, a2.clone(), one], a2.zero_like()))
    }

    pub fn cubic(&self) -> &Poly<R> {
        &self.cubic
    }

    pub fn a2(&self) -> R {
        self.cubic.coeff(2)
    }

    pub fn a4(&self) -> R {
        self.cubic.coeff(1)
    }

    pub fn a6(&self) -> R {
        self.cubic.coeff(0)
    }

    /// `disc(x^3 + a2 x^2 + a4 x + a6)`.
    pub fn cubic_discriminant(&self) -> R {
        let (a, b, c) = (self.a2(), self.a4(), self.a6());
        let ab = a.mul(&b);
        ab.square()
            .sub(&b.pow(3).scale_int(4))
            .sub(&a.pow(3).mul(&c).scale_int(4))
            .sub(&c.square().scale_int(27))
            .add(&ab.mul(&c).scale_int(18))
    }

    /// `Delta_E = 16 disc(cubic)`.
    pub fn curve_discriminant(&self) -> R {
        self.cubic_discriminant().scale_int(16)
    }

    /// `c4 = 16 a2^2 - 48 a4`.
    pub fn c4(&self) -> R {
        self.a2()
            .square()
            .scale_int(16)
            .sub(&self.a4().scale_int(48))
    }

    /// Coefficientwise image in another ring.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S, zero: S) -> Result<WeierstrassModel<S>> {
        WeierstrassModel::possibly_singular(self.cubic.map(f, zero))
    }

    /// The model after `x -> x + c`.
    pub fn translate(&self, c: &R) -> Self {
        WeierstrassModel {
            cubic: self.cubic.shift(c),
        }
    }
}

impl<F: Field> WeierstrassModel<F> {
    pub fn j_invariant(&self) -> Result<F> {
        self.c4()
            .pow(3)
            .div(&self.curve_discriminant())
            .ok_or(Error::Singular)
    }
}

impl WeierstrassModel<Poly<BigRational>> {
    /// `j` as an element of `Q(s)`.
    pub fn j_rational_function(&self) -> Result<RationalFunction<BigRational>> {
        let d = self.curve_discriminant();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        Ok(RationalFunction::new(self.c4().pow(3), d))
    }

    /// Specialize the parameter: `s -> value` through `embed: Q -> F`.
    pub fn specialize<F: Field>(
        &self,
        value: &F,
        embed: impl Fn(&BigRational) -> Option<F>,
    ) -> Result<WeierstrassModel<F>> {
        let mut cs = Vec::with_capacity(4);
        for c in self.cubic.coeffs() {
            let mut acc = value.zero_like();
            for q in c.coeffs().iter().rev() {
                let q = embed(q).ok_or_else(|| {
                    Error::Precondition("coefficient not defined in this field".into())
                })?;
                acc = acc.mul(value).add(&q);
            }
            cs.push(acc);
        }
        WeierstrassModel::possibly_singular(Poly::new(cs, value.zero_like()))
    }
}

/// Free-function form of [`WeierstrassModel::curve_discriminant`].
pub fn curve_discriminant<R: Ring>(e: &WeierstrassModel<R>) -> R {
    e.curve_discriminant()
}

/// Free-function form of [`WeierstrassModel::j_invariant`].
pub fn j_invariant<F: Field>(e: &WeierstrassModel<F>) -> Result<F> {
    e.j_invariant()
}

/// x-coordinates of the nonzero 2-torsion points over `F_p`, in the
/// splitting field.
pub fn two_torsion_x(e: &WeierstrassModel<Fp>) -> Result<(ExtField, [Root; 3])> {
    if e.cubic_discriminant().is_zero() {
        return Err(Error::Singular);
    }
    let (k, roots) = roots_in_splitting_field(e.cubic())?;
    Ok((k, three(roots)?))
}

/// As [`two_torsion_x`] for a model over an extension field.
pub fn two_torsion_x_ext(e: &WeierstrassModel<Fq>) -> Result<(ExtField, [Root; 3])> {
    if e.cubic_discriminant().is_zero() {
        return Err(Error::Singular);
    }
    let (k, roots) = roots_in_splitting_field_ext(e.cubic())?;
    Ok((k, three(roots)?))
}

fn three(roots: Vec<Root>) -> Result<[Root; 3]> {
    if roots.len() != 3 || roots.iter().any(|r| r.multiplicity != 1) {
        return Err(Error::Internal(
            "separable cubic without three simple roots".into(),
        ));
    }
    let mut it = roots.into_iter();
    Ok([it.next().unwrap(), it.next().unwrap(), it.next().unwrap()])
}

/// Finite-field shadow of the cubic Galois criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitRecord {
    pub disc_is_square: bool,
    pub root_count: usize,
    /// square discriminant iff 0 or 3 roots in `F_p`
    pub consistent: bool,
}

pub fn galois_cubic_split_check(f: &Poly<Fp>) -> Result<SplitRecord> {
    let e = WeierstrassModel::possibly_singular(f.clone())?;
    let d = e.cubic_discriminant();
    if d.is_zero() {
        return Err(Error::Singular);
    }
    let disc_is_square = d.is_square();
    let root_count = crate::exact::roots_in_field(f).len();
    let consistent = disc_is_square == (root_count == 0 || root_count == 3);
    Ok(SplitRecord {
        disc_is_square,
        root_count,
        consistent,
    })
}

pub fn on_curve<R: Ring>(e: &WeierstrassModel<R>, p: &AffinePoint<R>) -> bool {
    p.y.square() == e.cubic().eval(&p.x)
}

/// `y^2 = f(x)` at a rational point, for any `f` (used for the
/// hyperelliptic obstruction curves).
pub fn on_poly_curve(f: &Poly<BigRational>, p: &AffinePoint<BigRational>) -> bool {
    &p.y * &p.y == f.eval(&p.x)
}

/// Rational points of `y^2 = cubic` with `x = a / b^2`, `|a| <= bound`,
/// `1 <= b <= bound`, `gcd(a, b) = 1`. The cubic must have integral
/// coefficients. Sorted by `(x, y)`.
pub fn bounded_point_search(
    e: &WeierstrassModel<BigRational>,
    bound: u64,
) -> Result<Vec<AffinePoint<BigRational>>> {
    bounded_search_poly(e.cubic(), bound)
}

/// [`bounded_point_search`] for `y^2 = f(x)` with `f` monic, integral, of odd
/// degree `d`: a point is `(a / b^2, c / b^d)` with
/// `c^2 = sum f_i a^i b^(2(d-i))`.
pub fn bounded_search_poly(
    f: &Poly<BigRational>,
    bound: u64,
) -> Result<Vec<AffinePoint<BigRational>>> {
    let d = match f.degree() {
        Some(d) if d % 2 == 1 && f.lead().is_one() => d,
        _ => {
            return Err(Error::Precondition(
                "search needs a monic polynomial of odd degree".into(),
            ))
        }
    };
    if bound == 0 {
        return Err(Error::Precondition(
            "height bound must be at least 1".into(),
        ));
    }
    if f.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(Error::Precondition(
            "search needs integral coefficients".into(),
        ));
    }
    let fz: Vec<BigInt> = f.coeffs().iter().map(|c| c.to_integer()).collect();
    let small: Option<Vec<i128>> = fz.iter().map(|c| c.to_i128()).collect();
    let bound = bound as i64;
    let mut pts: Vec<AffinePoint<BigRational>> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|b| {
            let mut found = Vec::new();
            for a in -bound..=bound {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let n = small
                    .as_ref()
                    .and_then(|cs| weighted_value_i128(cs, a, b, d))
                    .map(BigInt::from)
                    .unwrap_or_else(|| weighted_value_big(&fz, a, b, d));
                if let Some(c) = square_root(&n) {
                    let x = BigRational::new(BigInt::from(a), BigInt::from(b) * BigInt::from(b));
                    let den = BigInt::from(b).pow(d as u32);
                    found.push(AffinePoint {
                        x: x.clone(),
                        y: BigRational::new(c.clone(), den.clone()),
                    });
                    if !Zero::is_zero(&c) {
                        found.push(AffinePoint {
                            x,
                            y: BigRational::new(-c, den),
                        });
                    }
                }
            }
            found
        })
        .collect();
    pts.sort();
    Ok(pts)
}

/// `sum c_i a^i b^(2(d-i))` in `i128`, `None` on overflow.
fn weighted_value_i128(cs: &[i128], a: i64, b: i64, d: usize) -> Option<i128> {
    let b2 = (b as i128).checked_mul(b as i128)?;
    let mut acc: i128 = 0;
    // Horner in (a, b^2): acc = acc * a + c_i * b2^(d-i)
    let mut pw = 1i128;
    let mut terms = vec![0i128; d + 1];
    for i in (0..=d).rev() {
        terms[i] = cs[i].checked_mul(pw)?;
        if i > 0 {
            pw = pw.checked_mul(b2)?;
        }
    }
    for i in (0..=d).rev() {
        acc = acc.checked_mul(a as i128)?.checked_add(terms[i])?;
    }
    Some(acc)
}

fn weighted_value_big(cs: &[BigInt], a: i64, b: i64, d: usize) -> BigInt {
    let a = BigInt::from(a);
    let b2 = BigInt::from(b) * BigInt::from(b);
    let mut acc = BigInt::zero();
    for i in (0..=d).rev() {
        acc = acc * &a + &cs[i] * b2.pow((d - i) as u32);
    }
    acc
}

fn square_root(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    if let Some(v) = n.to_u128() {
        let r = v.sqrt();
        return (r * r == v).then(|| BigInt::from(r));
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Integral cubic from small coefficients, constant term first.
pub fn integral_model(cs: &[i64]) -> Result<WeierstrassModel<BigRational>> {
    let z = BigRational::zero();
    WeierstrassModel::new(Poly::from_ints(cs, &z))
}

#[cfg(test)]
mod tests;
