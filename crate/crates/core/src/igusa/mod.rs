//! Igusa-Clebsch and Igusa invariants of binary sextics, weighted
//! projective equality, and the geometric isomorphism test.
//!
//! `I2, I4, I6, I10` are the root-difference orbit sums (see
//! [`generate`]); they are evaluated through generated integer formulas in
//! the coefficients, so they make sense over any commutative ring, in
//! particular over `Z[t]`.

mod formulas;
pub mod generate;
mod rpoly;

pub use rpoly::{cross, family_j, r_polynomials, RPoly, RPolys, R_FALLBACK, R_MAIN};

use crate::error::{Error, Result};
use crate::exact::{
    roots_in_splitting_field, serial::CoeffString, Field, FiniteField, Fp, Fq, Poly, QAlgebra, Ring,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

/// Evaluate a generated formula at coefficients a0..a6.
pub fn eval_formula<R: Ring>(formula: &[(i64, [u8; 7])], a: &[R; 7]) -> R {
    let maxe = formula
        .iter()
        .flat_map(|(_, e)| e.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let powers: Vec<Vec<R>> = a
        .iter()
        .map(|ai| {
            let mut v = vec![ai.one_like()];
            for k in 1..=maxe {
                v.push(v[k - 1].mul(ai));
            }
            v
        })
        .collect();
    let mut acc = a[0].zero_like();
    for (c, e) in formula {
        let mut term = a[0].from_i64_like(*c);
        for i in 0..7 {
            if e[i] > 0 {
                term = term.mul(&powers[i][e[i] as usize]);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// Igusa-Clebsch invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct IgusaClebsch<R> {
    pub i2: R,
    pub i4: R,
    pub i6: R,
    pub i10: R,
}

/// Igusa invariants `J2..J10` (weights 2..10) in the scaled normalization
/// below.
#[derive(Clone, Debug, PartialEq)]
pub struct IgusaVector<R> {
    pub j: [R; 5],
}

/// The sextic's coefficients a0..a6, padding with zeros (degree 5 input is a
/// sextic with a root at infinity).
pub fn sextic_coefficients<R: Ring>(f: &Poly<R>) -> Result<[R; 7]> {
    match f.degree() {
        Some(5) | Some(6) => Ok(std::array::from_fn(|i| f.coeff(i))),
        d => Err(Error::Precondition(format!(
            "expected degree 5 or 6, got {d:?}"
        ))),
    }
}

/// Igusa-Clebsch invariants from coefficients, over any ring, no checks.
pub fn igusa_clebsch_coeffs<R: Ring>(a: &[R; 7]) -> IgusaClebsch<R> {
    IgusaClebsch {
        i2: eval_formula(formulas::I2, a),
        i4: eval_formula(formulas::I4, a),
        i6: eval_formula(formulas::I6, a),
        i10: eval_formula(formulas::I10, a),
    }
}

fn check_characteristic(c: u64) -> Result<()> {
    if matches!(c, 2 | 3 | 5) {
        return Err(Error::Unsupported(format!("characteristic {c}")));
    }
    Ok(())
}

/// Igusa-Clebsch invariants of a separable sextic or quintic over a field.
pub fn igusa_clebsch<F: Field>(f: &Poly<F>) -> Result<IgusaClebsch<F>> {
    let a = sextic_coefficients(f)?;
    check_characteristic(a[0].characteristic())?;
    let ic = igusa_clebsch_coeffs(&a);
    if ic.i10.is_zero() {
        return Err(Error::Singular);
    }
    Ok(ic)
}

/// Per-weight normalization: `J_{2k}` here is `2^(4k)` times Igusa's
/// `J_{2k}` (equivalently Igusa's invariants of `4f`). With this choice
/// every integral sextic has integral `J`s (checked in tests).
pub const SCALE_LOG2: [u32; 5] = [4, 8, 12, 16, 20];

/// Igusa invariants from Igusa-Clebsch invariants.
///
/// `J2 = I2/8`, `J4 = (4 J2^2 - I4)/96`, `J6 = (8 J2^3 - 160 J2 J4 - I6)/576`,
/// `J8 = (J2 J6 - J4^2)/4`, `J10 = I10/4096`, then `J_{2k} *= 2^SCALE_LOG2[k-1]`.
pub fn igusa_j<R: QAlgebra>(ic: &IgusaClebsch<R>) -> Result<IgusaVector<R>> {
    let sc = |r: &R, n: i64, d: i64| -> Result<R> {
        r.scale_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
            .ok_or_else(|| Error::Unsupported("normalization constant not invertible".into()))
    };
    let j2 = sc(&ic.i2, 1, 8)?;
    let j4 = sc(&j2.square().scale_int(4).sub(&ic.i4), 1, 96)?;
    let j6 = sc(
        &j2.pow(3)
            .scale_int(8)
            .sub(&j2.mul(&j4).scale_int(160))
            .sub(&ic.i6),
        1,
        576,
    )?;
    let j8 = sc(&j2.mul(&j6).sub(&j4.square()), 1, 4)?;
    let j10 = sc(&ic.i10, 1, 4096)?;
    let raw = [j2, j4, j6, j8, j10];
    let mut j = raw.clone();
    for k in 0..5 {
        j[k] = raw[k].scale_int(1i64 << SCALE_LOG2[k]);
    }
    Ok(IgusaVector { j })
}

/// Igusa invariants of a separable sextic or quintic over a field.
/// `(c x + d)^6 f((a x + b)/(c x + d))` for `m = [a, b, c, d]`.
pub fn mobius_transform<R: Ring>(f: &Poly<R>, m: [&R; 4]) -> Poly<R> {
    let z = f.zero_elem();
    let num = Poly::new(vec![m[1].clone(), m[0].clone()], z.clone());
    let den = Poly::new(vec![m[3].clone(), m[2].clone()], z.clone());
    let mut acc = Poly::zero(z.clone());
    for i in 0..=6u64 {
        let term = num.pow(i).mul(&den.pow(6 - i)).scale(&f.coeff(i as usize));
        acc = acc.add(&term);
    }
    acc
}

pub fn igusa_vector<F: Field>(f: &Poly<F>) -> Result<IgusaVector<F>> {
    igusa_j(&igusa_clebsch(f)?)
}

impl<R: Ring> IgusaVector<R> {
    /// `J8 = (J2 J6 - J4^2)/4` in the scaled normalization.
    pub fn j8_relation_holds(&self) -> bool {
        // raw J8 = (J2 J6 - J4^2)/4 becomes 4 J8' = J2' J6' - J4'^2 after scaling
        let [j2, j4, j6, j8, _] = &self.j;
        j8.scale_int(4) == j2.mul(j6).sub(&j4.square())
    }

    /// `(e^2k J_2k)`.
    pub fn twist(&self, e: &R) -> Self {
        let e2 = e.square();
        let mut pow = e2.clone();
        let mut j = self.j.clone();
        for jk in j.iter_mut() {
            *jk = jk.mul(&pow);
            pow = pow.mul(&e2);
        }
        IgusaVector { j }
    }
}

impl<R: Ring + CoeffString> IgusaVector<R> {
    pub fn to_json(&self, field: Value) -> Value {
        json!({
            "J2": self.j[0].coeff_string(),
            "J4": self.j[1].coeff_string(),
            "J6": self.j[2].coeff_string(),
            "J8": self.j[3].coeff_string(),
            "J10": self.j[4].coeff_string(),
            "field": field,
        })
    }
}

/// Fields where `x^n = a` can be solved.
pub trait RootExtraction: Field {
    /// All `x` in the field with `x^n = self`.
    fn nth_roots(&self, n: u32) -> Vec<Self>;
}

impl RootExtraction for BigRational {
    fn nth_roots(&self, n: u32) -> Vec<Self> {
        match crate::exact::rational_nth_root(self, n) {
            Some(r) if n.is_multiple_of(2) && !num_traits::Zero::is_zero(&r) => vec![r.clone(), -r],
            Some(r) => vec![r],
            None => vec![],
        }
    }
}

fn finite_nth_roots<F: FiniteField>(a: &F, n: u32) -> Vec<F> {
    let mut cs = vec![a.neg()];
    cs.extend((1..n).map(|_| a.zero_like()));
    cs.push(a.one_like());
    let f = Poly::new(cs, a.zero_like());
    crate::exact::roots_in_field(&f)
        .into_iter()
        .map(|(r, _)| r)
        .collect()
}

impl RootExtraction for Fp {
    fn nth_roots(&self, n: u32) -> Vec<Self> {
        finite_nth_roots(self, n)
    }
}

impl RootExtraction for Fq {
    fn nth_roots(&self, n: u32) -> Vec<Self> {
        finite_nth_roots(self, n)
    }
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Whether `v_{2k} = e^{2k} u_{2k}` for all k, for some nonzero `e`.
///
/// With `mu = e^2` the condition is `v_k = mu^k u_k` (`k = 1..5`). Both
/// vectors must share their zero pattern; on the support `K` (which
/// contains 5 since `J10 != 0`) put `r_k = v_k / u_k` and `g = gcd(K)`, so
/// `g` is 1 or 5. A solution `mu` exists over the algebraic closure iff
/// `r_k = nu^(k/g)` for all `k` in `K`, where `nu = prod r_k^(n_k)` for a
/// Bezout relation `sum n_k k = g` (then any `mu` with `mu^g = nu` works,
/// and `nu` is forced). This is exact and needs no field extension. For
/// `e` in the field itself one further needs `e` with `e^(2g) = nu`.
pub fn weighted_equal<F: RootExtraction>(
    u: &IgusaVector<F>,
    v: &IgusaVector<F>,
    geometric: bool,
) -> Result<bool> {
    if u.j[4].is_zero() || v.j[4].is_zero() {
        return Err(Error::Singular);
    }
    let mut ks = Vec::new();
    let mut rs = Vec::new();
    for k in 0..5 {
        match (u.j[k].is_zero(), v.j[k].is_zero()) {
            (true, true) => {}
            (false, false) => {
                ks.push(k as u32 + 1);
                rs.push(v.j[k].div(&u.j[k]).unwrap());
            }
            _ => return Ok(false),
        }
    }
    let g = ks.iter().fold(0, |acc, &k| gcd_u32(acc, k));
    // Bezout: g is 1 or 5, and 5 is in K.
    let nu = if g == 5 {
        rs[ks.iter().position(|&k| k == 5).unwrap()].clone()
    } else {
        bezout_unit(&ks, &rs)
    };
    for (k, r) in ks.iter().zip(&rs) {
        if nu.pow((k / g) as u64) != *r {
            return Ok(false);
        }
    }
    if geometric {
        return Ok(true);
    }
    Ok(!nu.nth_roots(2 * g).is_empty())
}

/// `prod r_k^(n_k)` with `sum n_k k = 1` over the support `ks` (gcd 1).
fn bezout_unit<F: Field>(ks: &[u32], rs: &[F]) -> F {
    // a coprime pair among the weights suffices
    for i in 0..ks.len() {
        for j in 0..ks.len() {
            if gcd_u32(ks[i], ks[j]) == 1 {
                // find n with n*ks[i] = 1 mod ks[j], then m = (1 - n ks[i]) / ks[j]
                let (a, b) = (ks[i] as i64, ks[j] as i64);
                let n = (0..b).find(|n| (n * a - 1).rem_euclid(b) == 0).unwrap();
                let m = (1 - n * a) / b;
                let pw = |x: &F, e: i64| -> F {
                    if e >= 0 {
                        x.pow(e as u64)
                    } else {
                        x.inv().unwrap().pow((-e) as u64)
                    }
                };
                return pw(&rs[i], n).mul(&pw(&rs[j], m));
            }
        }
    }
    // gcd 1 needs at least two weights; a single weight 1 is its own unit
    rs[ks.iter().position(|&k| k == 1).expect("support with gcd 1")].clone()
}

/// Whether two genus-2 models are isomorphic over the algebraic closure.
pub fn geometric_isomorphism_test<F: RootExtraction>(f1: &Poly<F>, f2: &Poly<F>) -> Result<bool> {
    weighted_equal(&igusa_vector(f1)?, &igusa_vector(f2)?, true)
}

/// Root-difference evaluation of `I2, I4, I6, I10` in the splitting field:
/// the independent oracle for the generated formulas (degree 6 input).
pub fn igusa_clebsch_oracle(f: &Poly<Fp>) -> Result<(crate::exact::ExtField, IgusaClebsch<Fq>)> {
    if f.degree() != Some(6) {
        return Err(Error::Precondition("oracle needs a sextic".into()));
    }
    let (field, roots) = roots_in_splitting_field(f)?;
    let mut list = Vec::new();
    for r in &roots {
        for _ in 0..r.multiplicity {
            list.push(r.value.clone());
        }
    }
    let roots: [Fq; 6] = std::array::from_fn(|i| list[i].clone());
    let lead = field.from_fp(f.lead());
    let sum = |name: &str| {
        generate::orbit_sum(
            &generate::orbit(name),
            generate::invariant_degree(name),
            &lead,
            &roots,
        )
    };
    Ok((
        field,
        IgusaClebsch {
            i2: sum("I2"),
            i4: sum("I4"),
            i6: sum("I6"),
            i10: sum("I10"),
        },
    ))
}

#[cfg(test)]
mod tests;
