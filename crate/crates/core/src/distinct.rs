//! When are `C_t` and `C_{-t}` geometrically isomorphic?
//!
//! Over `Q` the `R` polynomials have a common root only if the resultant
//! gcd vanishes, so the primes dividing it ([`prime_support`]) are the only
//! characteristics where an exceptional `t` can exist. [`charp_analysis`]
//! works in one such characteristic: it computes the `R`s over `F_p[t]`,
//! strips the factors where the family degenerates, and verifies every root
//! of the remaining gcd with the Igusa test. [`full_scan`] is the brute-force
//! check over a small field.

use crate::error::{Error, Result};
use crate::exact::serial::render_poly;
use crate::exact::{
    factor_finite, factor_integer, is_prime_u64, resultant_z, roots_in_field, ExtField, Fp, Fq,
    Poly, PrimeField, Ring,
};
use crate::families::{family_sextic, map_poly, FamilyId, FamilySpec, PolyQ};
use crate::igusa::{
    geometric_isomorphism_test, igusa_clebsch_coeffs, igusa_j, r_polynomials, R_FALLBACK, R_MAIN,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PrimeSupportReport {
    pub family: FamilyId,
    pub resultant_gcd: String,
    pub prime_support: Vec<u64>,
    /// Cofactor that could not be factored (`None` when fully factored).
    pub unfactored: Option<String>,
    pub printed_list: Vec<u64>,
    /// Support and list agree on primes above 5.
    pub match_above5: bool,
    /// `(name, content)` of each `R` over `Q[t]`.
    pub contents: Vec<(String, String)>,
    pub degrees: Vec<(String, usize)>,
}

/// `gcd(res(R2, R3), res(R2, R5))` over `Z` and its prime support.
pub fn prime_support(spec: &FamilySpec) -> Result<PrimeSupportReport> {
    let rs = r_polynomials(spec)?;
    let [r2, r3, r5] = rs
        .main
        .ok_or_else(|| Error::Precondition(format!("{} has no R polynomials", spec.id)))?;
    let (res23, res25) = rayon::join(
        || resultant_z(&r2.primitive, &r3.primitive),
        || resultant_z(&r2.primitive, &r5.primitive),
    );
    let (res23, res25) = (res23?, res25?);
    if res23 == BigInt::from(0) || res25 == BigInt::from(0) {
        return Err(Error::CommonFactor(format!(
            "{}: R2 shares a factor over Q",
            spec.id
        )));
    }
    let g = res23.gcd(&res25);
    let fact = factor_integer(&g)?;
    let prime_support: Vec<u64> = fact
        .factors
        .iter()
        .map(|(p, _)| p.to_u64().expect("prime below 2^64"))
        .collect();
    let above = |v: &[u64]| -> BTreeSet<u64> { v.iter().copied().filter(|&p| p > 5).collect() };
    let match_above5 =
        fact.unfactored.is_none() && above(&prime_support) == above(&spec.resultant_primes);
    let describe = |r: &crate::igusa::RPoly| (r.name.to_string(), r.content.to_string());
    Ok(PrimeSupportReport {
        family: spec.id,
        resultant_gcd: g.to_string(),
        prime_support,
        unfactored: fact.unfactored.map(|u| u.to_string()),
        printed_list: spec.resultant_primes.clone(),
        match_above5,
        contents: [&r2, &r3, &r5].into_iter().map(describe).collect(),
        degrees: [&r2, &r3, &r5]
            .into_iter()
            .map(|r| (r.name.to_string(), r.primitive.deg().max(0) as usize))
            .collect(),
    })
}

/// `t^4 + 7*t^2 + 1` style rendering with residues in `0..p`.
pub fn render_fp(f: &Poly<Fp>) -> String {
    render_poly(f, "t")
}

fn fp_poly(p: &PolyQ, prime: u64) -> Result<Poly<Fp>> {
    map_poly(p, &Fp::new(0, prime))
}

/// `J2..J10` of the family sextic over `F_p[t]`.
fn j_mod_p(spec: &FamilySpec, p: u64) -> Result<[Poly<Fp>; 5]> {
    let zero = Fp::new(0, p);
    let a: Vec<Poly<Fp>> = (0..7)
        .map(|i| map_poly(&spec.sextic.coeff(i), &zero))
        .collect::<Result<_>>()?;
    let a: [Poly<Fp>; 7] = a.try_into().expect("seven coefficients");
    if a[6].is_zero() {
        return Err(Error::Precondition(format!("sextic degenerates mod {p}")));
    }
    Ok(igusa_j(&igusa_clebsch_coeffs(&a))?.j)
}

fn cross_p(j: &[Poly<Fp>; 5], a: usize, b: usize, m: u64, n: u64) -> Poly<Fp> {
    let (ja_n, jb_n) = (j[a].negate_var(), j[b].negate_var());
    j[a].pow(m)
        .mul(&jb_n.pow(n))
        .sub(&ja_n.pow(m).mul(&j[b].pow(n)))
}

/// Valid parameters off the candidate locus tested per characteristic.
pub const NON_ROOT_SAMPLES: usize = 20;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StrippedFactor {
    pub factor: String,
    /// Exponent removed from each `R`, in report order.
    pub exponents: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CharPStatus {
    /// `gcd(R2, R3, R5) = 1` after stripping.
    Coprime,
    /// `J2(t)` and `J2(-t)` share a factor; the `R23, R35, R25` triple
    /// has no common factor.
    CoprimeViaFallback,
    /// A common factor remains, but none of its roots gives isomorphic curves.
    CoprimeAfterVerification,
    Exceptional,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocusRoot {
    pub t: String,
    pub degree: usize,
    /// `C_t` and `C_{-t}` are geometrically isomorphic.
    pub isomorphic: bool,
    /// Both are isomorphic to the printed representative.
    pub matches_representative: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocusFactor {
    pub factor: String,
    pub verified: bool,
    pub roots: Vec<LocusRoot>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CharPReport {
    pub family: FamilyId,
    pub p: u64,
    pub status: CharPStatus,
    pub stripped: Vec<StrippedFactor>,
    pub gcd_r2_r3: String,
    pub gcd_r2_r5: String,
    pub j2_common: String,
    pub fallback_used: bool,
    /// `gcd(R23, R35) = gcd(R25, R35) = gcd(R23, R25) = 1`.
    pub fallback_pairwise_coprime: Option<bool>,
    /// Monic common factor before verification.
    pub candidate_locus: String,
    /// Product of the candidate factors whose roots all verify.
    pub locus: String,
    #[serde(skip)]
    pub locus_poly: Poly<Fp>,
    pub factors: Vec<LocusFactor>,
    pub expected_locus: Option<String>,
    pub theorem_locus: Option<String>,
    pub matches_expected: bool,
    pub matches_theorem: Option<bool>,
    pub non_roots_sampled: usize,
    pub non_root_positives: Vec<String>,
}

impl CharPReport {
    pub fn passed(&self) -> bool {
        (self.matches_expected || self.matches_theorem == Some(true))
            && self.non_root_positives.is_empty()
            && self.factors.iter().all(|f| {
                f.roots
                    .iter()
                    .all(|r| r.matches_representative != Some(false))
            })
    }
}

fn monic_or_one(f: &Poly<Fp>) -> Poly<Fp> {
    if f.is_zero() {
        f.clone()
    } else {
        f.monic()
    }
}

/// Roots of an irreducible `phi` over `F_p`, in `F_{p^deg}`.
fn roots_of_irreducible(phi: &Poly<Fp>) -> Result<Vec<Fq>> {
    let d = phi.degree().unwrap_or(0);
    let k = ExtField::new(phi.zero_elem().modulus(), d.max(1))
        .map_err(|_| Error::Unsupported(format!("extension of degree {d}")))?;
    let lifted = phi.map(|c| k.from_fp(c), k.zero());
    Ok(roots_in_field(&lifted)
        .into_iter()
        .map(|(r, _)| r)
        .collect())
}

fn lift(f: &PolyQ, k: &Fq) -> Result<Poly<Fq>> {
    map_poly(f, &k.zero_like())
}

/// `(C_t ~ C_{-t}, both ~ representative)` at one parameter value.
fn pair_test<F: crate::igusa::RootExtraction>(
    spec: &FamilySpec,
    t: &F,
    rep: Option<&Poly<F>>,
) -> Result<(bool, Option<bool>)> {
    let (_, c_plus) = family_sextic(spec, t)?;
    let (_, c_minus) = family_sextic(spec, &t.neg())?;
    let iso = geometric_isomorphism_test(&c_plus, &c_minus)?;
    let rep = match rep {
        Some(r) => Some(
            geometric_isomorphism_test(&c_plus, r)? && geometric_isomorphism_test(&c_minus, r)?,
        ),
        None => None,
    };
    Ok((iso, rep))
}

/// Exceptional-locus analysis of a family in characteristic `p > 5`.
pub fn charp_analysis(spec: &FamilySpec, p: u64) -> Result<CharPReport> {
    if p <= 5 || !is_prime_u64(p) {
        return Err(Error::Precondition(format!("{p} is not a prime above 5")));
    }
    let j = j_mod_p(spec, p)?;
    let mut main: Vec<Poly<Fp>> = R_MAIN
        .iter()
        .map(|&(_, a, b, m, n)| cross_p(&j, a, b, m, n))
        .collect();
    if main.iter().any(|r| r.is_zero()) {
        return Err(Error::CommonFactor(format!(
            "an R vanishes identically mod {p}"
        )));
    }

    // irreducible factors mod p of everything where the family degenerates
    let mut strip: Vec<Poly<Fp>> = Vec::new();
    for f in spec
        .denominator_factors
        .iter()
        .chain(&spec.validity_factors)
    {
        let fp = fp_poly(f, p)?;
        if fp.is_constant() {
            continue;
        }
        for (phi, _) in factor_finite(&fp) {
            let phi = phi.monic();
            if !strip.contains(&phi) {
                strip.push(phi);
            }
        }
    }
    let strip_all = |rs: &mut Vec<Poly<Fp>>| -> Vec<StrippedFactor> {
        strip
            .iter()
            .map(|phi| {
                let exponents = rs
                    .iter_mut()
                    .map(|r| {
                        let (q, k) = r.strip_factor(phi);
                        *r = q;
                        k
                    })
                    .collect();
                StrippedFactor {
                    factor: render_fp(phi),
                    exponents,
                }
            })
            .collect()
    };
    let stripped = strip_all(&mut main);
    let g23 = main[0].gcd(&main[1]);
    let g25 = main[0].gcd(&main[2]);
    let mut candidate = g23.gcd(&g25);

    let mut j2_common = j[0].gcd(&j[0].negate_var());
    for phi in &strip {
        j2_common = j2_common.strip_factor(phi).0;
    }
    let mut fallback_used = false;
    let mut fallback_pairwise_coprime = None;
    if !j2_common.is_constant() && !candidate.gcd(&j2_common).is_constant() {
        fallback_used = true;
        let mut fb: Vec<Poly<Fp>> = R_FALLBACK
            .iter()
            .map(|&(_, a, b, m, n)| cross_p(&j, a, b, m, n))
            .collect();
        if fb.iter().any(|r| r.is_zero()) {
            return Err(Error::CommonFactor(format!(
                "a fallback R vanishes mod {p}"
            )));
        }
        strip_all(&mut fb);
        let pair = |a: usize, b: usize| fb[a].gcd(&fb[b]);
        let (g01, g12, g02) = (pair(0, 1), pair(1, 2), pair(0, 2));
        fallback_pairwise_coprime =
            Some(g01.is_constant() && g12.is_constant() && g02.is_constant());
        candidate = candidate.gcd(&g01.gcd(&fb[2]));
    }
    let candidate = monic_or_one(&candidate);

    let case = spec.exceptional_case(p);
    let rep = case.and_then(|c| c.representative.as_ref());
    let mut factors = Vec::new();
    let mut locus = Poly::one(&Fp::new(0, p));
    if !candidate.is_constant() {
        for (phi, _) in factor_finite(&candidate) {
            let phi = phi.monic();
            let mut roots = Vec::new();
            for t0 in roots_of_irreducible(&phi)? {
                let rep_k = rep.map(|r| lift(r, &t0)).transpose()?;
                let (isomorphic, matches_representative, error) =
                    match pair_test(spec, &t0, rep_k.as_ref()) {
                        Ok((iso, m)) => (iso, m, None),
                        Err(e) => (false, None, Some(e.to_string())),
                    };
                roots.push(LocusRoot {
                    t: t0.to_string(),
                    degree: t0.field_of_definition_degree(),
                    isomorphic,
                    matches_representative,
                    error,
                });
            }
            let verified = roots.iter().all(|r| r.isomorphic);
            if verified {
                locus = locus.mul(&phi);
            }
            factors.push(LocusFactor {
                factor: render_fp(&phi),
                verified,
                roots,
            });
        }
    }
    let status = if !locus.is_constant() {
        CharPStatus::Exceptional
    } else if !candidate.is_constant() {
        CharPStatus::CoprimeAfterVerification
    } else if fallback_used {
        CharPStatus::CoprimeViaFallback
    } else {
        CharPStatus::Coprime
    };

    let expected = case
        .map(|c| fp_poly(&c.locus, p))
        .transpose()?
        .map(|e| monic_or_one(&e));
    let theorem = case
        .map(|c| fp_poly(&c.theorem_locus, p))
        .transpose()?
        .map(|e| monic_or_one(&e));
    let matches_expected = match &expected {
        Some(e) => *e == locus,
        None => locus.is_constant(),
    };
    let matches_theorem = theorem.as_ref().map(|e| *e == locus);

    // random valid parameters off the candidate locus must test false
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let field = PrimeField::new(p)?;
    let validity = spec.validity();
    let valid = |t: &Fp| -> bool {
        let v = fp_poly(&validity, p).expect("integral validity");
        !v.eval(t).is_zero() && !v.eval(&t.neg()).is_zero() && !candidate.eval(t).is_zero()
    };
    let pool: Vec<Fp> = if p <= 200 {
        field.elements().filter(|t| valid(t)).collect()
    } else {
        let mut seen = BTreeSet::new();
        for _ in 0..200 {
            let t = rng.gen_range(1..p);
            if seen.len() < NON_ROOT_SAMPLES && valid(&field.elem(t as i64)) {
                seen.insert(t);
            }
        }
        seen.into_iter().map(|t| field.elem(t as i64)).collect()
    };
    let mut non_root_positives = Vec::new();
    let sampled = pool.len().min(NON_ROOT_SAMPLES);
    for t in pool.iter().take(NON_ROOT_SAMPLES) {
        match pair_test::<Fp>(spec, t, None) {
            Ok((false, _)) => {}
            Ok((true, _)) => non_root_positives.push(t.to_string()),
            Err(e) => non_root_positives.push(format!("{t}: {e}")),
        }
    }

    Ok(CharPReport {
        family: spec.id,
        p,
        status,
        stripped,
        gcd_r2_r3: render_fp(&monic_or_one(&g23)),
        gcd_r2_r5: render_fp(&monic_or_one(&g25)),
        j2_common: render_fp(&monic_or_one(&j2_common)),
        fallback_used,
        fallback_pairwise_coprime,
        candidate_locus: render_fp(&candidate),
        locus: render_fp(&locus),
        locus_poly: locus,
        factors,
        expected_locus: expected.as_ref().map(render_fp),
        theorem_locus: theorem.as_ref().map(render_fp),
        matches_expected,
        matches_theorem,
        non_roots_sampled: sampled,
        non_root_positives,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanReport {
    pub family: FamilyId,
    pub p: u64,
    pub ext: usize,
    pub valid_count: usize,
    pub positives: Vec<String>,
    /// Roots in the field of the case-analysis locus.
    pub expected: Vec<String>,
    /// Roots of the locus as stated in the theorem.
    pub theorem: Vec<String>,
    pub matches_locus: bool,
    pub matches_theorem: bool,
    pub errors: Vec<String>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.matches_locus && self.errors.is_empty()
    }
}

/// Upper bound on the scanned field size.
pub const SCAN_LIMIT: u64 = 10_000;

/// Every valid `t` in `F_{p^ext}`: is `C_t` geometrically isomorphic to
/// `C_{-t}`? Compared with the roots of the exceptional locus for `p`.
pub fn full_scan(spec: &FamilySpec, p: u64, ext: usize) -> Result<ScanReport> {
    if p <= 5 || !is_prime_u64(p) || !(1..=2).contains(&ext) {
        return Err(Error::Precondition(format!(
            "scan needs a prime p > 5 and ext in 1..=2, got {p}, {ext}"
        )));
    }
    if p.pow(ext as u32) > SCAN_LIMIT {
        return Err(Error::Precondition(format!(
            "{p}^{ext} exceeds the scan limit {SCAN_LIMIT}"
        )));
    }
    let k = ExtField::new(p, ext)?;
    let validity = lift(&spec.validity(), &k.zero())?;
    let elements: Vec<Fq> = k
        .elements()
        .filter(|t| !validity.eval(t).is_zero() && !validity.eval(&t.neg()).is_zero())
        .collect();
    let outcomes: Vec<(Fq, Result<bool>)> = elements
        .par_iter()
        .map(|t| {
            (
                t.clone(),
                pair_test::<Fq>(spec, t, None).map(|(iso, _)| iso),
            )
        })
        .collect();
    let mut positives = BTreeSet::new();
    let mut errors = Vec::new();
    for (t, r) in outcomes {
        match r {
            Ok(true) => {
                positives.insert(t);
            }
            Ok(false) => {}
            Err(e) => errors.push(format!("{t}: {e}")),
        }
    }
    let roots_of = |f: &PolyQ| -> Result<BTreeSet<Fq>> {
        let lifted = lift(f, &k.zero())?;
        Ok(roots_in_field(&lifted)
            .into_iter()
            .map(|(r, _)| r)
            .filter(|t| elements.contains(t))
            .collect())
    };
    let case = spec.exceptional_case(p);
    let expected = case
        .map(|c| roots_of(&c.locus))
        .transpose()?
        .unwrap_or_default();
    let theorem = case
        .map(|c| roots_of(&c.theorem_locus))
        .transpose()?
        .unwrap_or_default();
    let show = |s: &BTreeSet<Fq>| s.iter().map(|t| t.to_string()).collect::<Vec<_>>();
    Ok(ScanReport {
        family: spec.id,
        p,
        ext,
        valid_count: elements.len(),
        matches_locus: positives == expected,
        matches_theorem: positives == theorem,
        positives: show(&positives),
        expected: show(&expected),
        theorem: show(&theorem),
        errors,
    })
}

/// The `t`-polynomial `f` over `F_p`, rendered; used by reports.
pub fn render_q_mod_p(f: &PolyQ, p: u64) -> Result<String> {
    Ok(render_fp(&monic_or_one(&fp_poly(f, p)?)))
}

#[cfg(test)]
mod tests;
