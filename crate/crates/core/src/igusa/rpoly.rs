//! The weighted differences `R` of a family over `Q[t]`.
//!
//! With `J_k` the invariants of the family sextic (no twist factor),
//! `R_{a,b} = J_a(t)^m J_b(-t)^n - J_a(-t)^m J_b(t)^n` for the weights
//! `a m = b n`; they vanish at `t` whenever `C_t` and `C_{-t}` are
//! geometrically isomorphic.

use super::{igusa_clebsch_coeffs, igusa_j};
use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::families::{FamilySpec, PolyQ};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

/// `(a, b, m, n)` as indices into `J2..J10` (0 = J2, 1 = J4, 2 = J6, 4 = J10).
pub const R_MAIN: [(&str, usize, usize, u64, u64); 3] =
    [("R2", 1, 0, 1, 2), ("R3", 2, 0, 1, 3), ("R5", 4, 0, 1, 5)];
pub const R_FALLBACK: [(&str, usize, usize, u64, u64); 3] = [
    ("R23", 1, 2, 3, 2),
    ("R35", 2, 4, 5, 3),
    ("R25", 4, 1, 2, 5),
];

/// One `R` after division by its denominator.
#[derive(Clone, Debug)]
pub struct RPoly {
    pub name: &'static str,
    pub quotient: PolyQ,
    /// `quotient = content * primitive`.
    pub content: BigRational,
    pub primitive: Poly<BigInt>,
}

#[derive(Clone, Debug)]
pub struct RPolys {
    /// `J2, J4, J6, J8, J10` of the family sextic over `Q[t]`.
    pub j: [PolyQ; 5],
    pub main: Option<[RPoly; 3]>,
    pub fallback: Option<[RPoly; 3]>,
}

/// `J2..J10` of the family sextic as polynomials in `t`.
pub fn family_j(spec: &FamilySpec) -> Result<[PolyQ; 5]> {
    let a: [PolyQ; 7] = std::array::from_fn(|i| spec.sextic.coeff(i));
    if a[6].is_zero() {
        return Err(Error::Precondition("family sextic has degree < 6".into()));
    }
    Ok(igusa_j(&igusa_clebsch_coeffs(&a))?.j)
}

/// `ja(t)^m jb(-t)^n - ja(-t)^m jb(t)^n`.
pub fn cross(ja: &PolyQ, jb: &PolyQ, m: u64, n: u64) -> PolyQ {
    let (ja_n, jb_n) = (ja.negate_var(), jb.negate_var());
    ja.pow(m)
        .mul(&jb_n.pow(n))
        .sub(&ja_n.pow(m).mul(&jb.pow(n)))
}

fn divide(name: &'static str, num: PolyQ, den: &PolyQ) -> Result<RPoly> {
    if num.is_zero() {
        return Err(Error::CommonFactor(format!("{name} vanishes identically")));
    }
    let quotient = num
        .div_exact(den)
        .ok_or_else(|| Error::Internal(format!("{name} is not divisible by its denominator")))?;
    let (content, primitive) = quotient.to_primitive_integral();
    Ok(RPoly {
        name,
        quotient,
        content,
        primitive,
    })
}

fn family_rs(
    j: &[PolyQ; 5],
    which: &[(&'static str, usize, usize, u64, u64); 3],
    dens: &[PolyQ; 3],
) -> Result<[RPoly; 3]> {
    let rs: Vec<RPoly> = which
        .par_iter()
        .zip(dens.par_iter())
        .map(|(&(name, a, b, m, n), den)| divide(name, cross(&j[a], &j[b], m, n), den))
        .collect::<Result<_>>()?;
    Ok(rs.try_into().expect("three R polynomials"))
}

/// `R2, R3, R5` (and `R23, R35, R25` when the family prints them) divided
/// by the printed denominators; non-divisibility is an error.
pub fn r_polynomials(spec: &FamilySpec) -> Result<RPolys> {
    let j = family_j(spec)?;
    let main = spec
        .r_denominators
        .as_ref()
        .map(|d| family_rs(&j, &R_MAIN, d))
        .transpose()?;
    let fallback = spec
        .fallback_denominators
        .as_ref()
        .map(|d| family_rs(&j, &R_FALLBACK, d))
        .transpose()?;
    Ok(RPolys { j, main, fallback })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_poly, q, qi};
    use crate::families::{family_sextic, FamilyId};
    use crate::igusa::igusa_vector;

    #[test]
    fn family_j_specializes() {
        // J's over Q[t] at t0 equal the J's of the specialized sextic
        for id in FamilyId::ALL {
            let spec = id.spec();
            let j = family_j(spec).unwrap();
            for t0 in [qi(3), q(-2, 5)] {
                let (_, sextic) = family_sextic(spec, &t0).unwrap();
                let direct = igusa_vector(&sextic).unwrap();
                let at: Vec<BigRational> = j.iter().map(|p| p.eval(&t0)).collect();
                assert_eq!(at, direct.j.to_vec(), "{id} t={t0}");
            }
        }
    }

    #[test]
    fn cross_is_odd_in_t() {
        let a = parse_poly("t^3 + 2*t + 5", "t").unwrap();
        let b = parse_poly("t^2 - 7*t + 1", "t").unwrap();
        let r = cross(&a, &b, 2, 3);
        assert_eq!(r.negate_var(), r.neg());
        assert!(cross(&b.mul(&b), &b, 1, 2).is_zero());
    }

    #[test]
    fn deg3_and_deg4_divide() {
        let r = r_polynomials(FamilyId::Deg3.spec()).unwrap();
        assert!(r.main.is_some() && r.fallback.is_none());
        let r = r_polynomials(FamilyId::Deg4.spec()).unwrap();
        let [r2, r3, r5] = r.main.unwrap();
        assert_eq!((r2.name, r3.name, r5.name), ("R2", "R3", "R5"));
        let fb = r.fallback.unwrap();
        for rp in fb.iter().chain([&r2, &r3, &r5]) {
            assert_eq!(rp.primitive.to_rational().scale(&rp.content), rp.quotient);
        }
    }

    #[test]
    fn wrong_denominator_is_rejected() {
        let mut spec = FamilyId::Deg3.spec().clone();
        let dens = spec.r_denominators.as_mut().unwrap();
        dens[0] = dens[0].mul(&parse_poly("t+5", "t").unwrap());
        assert!(matches!(r_polynomials(&spec), Err(Error::Internal(_))));
    }
}
