//! The four one-parameter families of curve pairs `(C_t, C_{-t})`, and the
//! table of genus-zero `X_0(N)` parameterizations they come from.
//!
//! A family is a pair of isogenous Weierstrass models `E_s, E'_s` over
//! `Q(s)`, the substitution `s = s(t)` that makes the 2-torsion graph Galois
//! stable, and the resulting genus-2 curve `twist(t) y^2 = sextic(x, t)`.

mod data;
mod table1;

pub use table1::{cusp_check, fricke_relation_holds, x0_jpair, X0Param, GENUS_ZERO_LEVELS};

use crate::ellcurve::WeierstrassModel;
use crate::error::{Error, Result};
use crate::exact::{parse_bivariate, parse_poly, Field, Poly, QAlgebra, RationalFunction, Ring};
use num_rational::BigRational;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

pub type PolyQ = Poly<BigRational>;
/// Polynomial in `x` with coefficients in `Q[t]` (or `Q[s]`).
pub type BiPolyQ = Poly<PolyQ>;
pub type RatQ = RationalFunction<BigRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    Howe2,
    Deg3,
    Deg4,
    Deg7,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [
        FamilyId::Howe2,
        FamilyId::Deg3,
        FamilyId::Deg4,
        FamilyId::Deg7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Howe2 => "howe2",
            FamilyId::Deg3 => "deg3",
            FamilyId::Deg4 => "deg4",
            FamilyId::Deg7 => "deg7",
        }
    }

    /// Degree of the isogeny `E_s -> E'_s`.
    pub fn isogeny_degree(self) -> u32 {
        match self {
            FamilyId::Howe2 => 2,
            FamilyId::Deg3 => 3,
            FamilyId::Deg4 => 4,
            FamilyId::Deg7 => 7,
        }
    }

    pub fn parity(self) -> Parity {
        if self.isogeny_degree() % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn spec(self) -> &'static FamilySpec {
        static SPECS: [OnceLock<FamilySpec>; 4] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        match self {
            FamilyId::Howe2 => SPECS[0].get_or_init(data::howe2),
            FamilyId::Deg3 => SPECS[1].get_or_init(data::deg3),
            FamilyId::Deg4 => SPECS[2].get_or_init(data::deg4),
            FamilyId::Deg7 => SPECS[3].get_or_init(data::deg7),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// `num / den` kept unreduced: the checks below cross-multiply instead of
/// taking gcds of large polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct Fraction {
    pub num: PolyQ,
    pub den: PolyQ,
}

impl Fraction {
    pub fn poly(p: PolyQ) -> Self {
        let den = Poly::one(p.zero_elem());
        Fraction { num: p, den }
    }

    pub fn same(&self, other: &Fraction) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn mul(&self, o: &Fraction) -> Fraction {
        Fraction {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }

    pub fn add(&self, o: &Fraction) -> Fraction {
        if self.den == o.den {
            return Fraction {
                num: self.num.add(&o.num),
                den: self.den.clone(),
            };
        }
        Fraction {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    pub fn negate_var(&self) -> Fraction {
        Fraction {
            num: self.num.negate_var(),
            den: self.den.negate_var(),
        }
    }

    pub fn reduced(&self) -> RatQ {
        RationalFunction::new(self.num.clone(), self.den.clone())
    }
}

/// A printed formula that disagrees with the rest of the data, kept
/// alongside the housed value.
#[derive(Clone, Debug)]
pub struct Erratum {
    pub quantity: &'static str,
    pub printed: Fraction,
    pub note: &'static str,
}

/// `(gamma_32 x^2 - 1)(gamma_21 x^2 - 1)(gamma_13 x^2 - 1)` data as displayed.
#[derive(Clone, Debug)]
pub enum GammaData {
    /// Product, sum and pair-sum of the three gammas.
    Symmetric {
        e3: Fraction,
        e1: Fraction,
        e2: Fraction,
    },
    /// `gamma_32` alone, with product and sum of the other two.
    Split {
        g32: Fraction,
        product: Fraction,
        sum: Fraction,
    },
}

impl GammaData {
    /// `(e1, e2, e3)`.
    pub fn symmetric(&self) -> (Fraction, Fraction, Fraction) {
        match self {
            GammaData::Symmetric { e3, e1, e2 } => (e1.clone(), e2.clone(), e3.clone()),
            GammaData::Split { g32, product, sum } => {
                (g32.add(sum), g32.mul(sum).add(product), g32.mul(product))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct KappaData {
    pub gammas: GammaData,
    pub gammas_tilde: GammaData,
    pub kappa: Fraction,
    pub kappa_tilde: Fraction,
    /// The displayed square factor in front of the sextic in `h_t`.
    pub prefactor: Fraction,
    pub prefactor_tilde: Fraction,
    /// The sextic displayed in `h~_t`.
    pub sextic_tilde: BiPolyQ,
}

/// An exceptional characteristic: `C_t` and `C_{-t}` become geometrically
/// isomorphic on `locus`.
#[derive(Clone, Debug)]
pub struct ExceptionalCase {
    pub p: u64,
    /// From the case analysis.
    pub locus: PolyQ,
    /// As stated in the theorem.
    pub theorem_locus: PolyQ,
    pub representative: Option<PolyQ>,
}

#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub model: WeierstrassModel<PolyQ>,
    pub model_prime: WeierstrassModel<PolyQ>,
    pub delta: PolyQ,
    pub delta_prime: PolyQ,
    /// Housed `j(E_s)`, `j(E'_s)`.
    pub j: Fraction,
    pub j_prime: Fraction,
    pub errata: Vec<Erratum>,
    /// `s` as a polynomial in `t`.
    pub substitution: PolyQ,
    /// The curve pair is defined where none of these vanish.
    pub validity_factors: Vec<PolyQ>,
    pub twist: PolyQ,
    /// `C_t: twist(t) y^2 = sextic(x, t)`.
    pub sextic: BiPolyQ,
    pub kappa: Option<KappaData>,
    /// Denominators of `R_2, R_3, R_5`.
    pub r_denominators: Option<[PolyQ; 3]>,
    /// Denominators of `R_23, R_35, R_25`.
    pub fallback_denominators: Option<[PolyQ; 3]>,
    /// Irreducible factors of the denominators, stripped in characteristic p.
    pub denominator_factors: Vec<PolyQ>,
    /// Primes dividing the resultant gcd.
    pub resultant_primes: Vec<u64>,
    pub exceptional: Vec<ExceptionalCase>,
    /// Primes in the resultant list with no exceptional locus.
    pub negative_controls: Vec<u64>,
}

impl FamilySpec {
    pub fn validity(&self) -> PolyQ {
        let one = Poly::one(self.twist.zero_elem());
        self.validity_factors.iter().fold(one, |acc, f| acc.mul(f))
    }

    pub fn parity(&self) -> Parity {
        self.id.parity()
    }

    /// The sextic with its `t`-coefficients mapped into `R`.
    pub fn sextic_over<R: QAlgebra>(&self, zero: &R) -> Result<Poly<Poly<R>>> {
        let inner = Poly::zero(zero.clone());
        let cs = self
            .sextic
            .coeffs()
            .iter()
            .map(|c| map_poly(c, zero))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(cs, inner))
    }

    /// `C_{t}` with `t` replaced by `-t`.
    pub fn sextic_negated(&self) -> BiPolyQ {
        let z = self.sextic.zero_elem().clone();
        self.sextic.map(|c| c.negate_var(), z)
    }

    pub fn exceptional_case(&self, p: u64) -> Option<&ExceptionalCase> {
        self.exceptional.iter().find(|c| c.p == p)
    }
}

/// Image of a rational polynomial in `R[t]`.
pub fn map_poly<R: QAlgebra>(p: &PolyQ, zero: &R) -> Result<Poly<R>> {
    let cs = p
        .coeffs()
        .iter()
        .map(|c| {
            zero.from_rational_like(c)
                .ok_or_else(|| Error::Precondition(format!("{c} is not defined in this ring")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(cs, zero.clone()))
}

/// Value of a rational polynomial at `x`.
pub fn eval_q<R: QAlgebra>(p: &PolyQ, x: &R) -> Result<R> {
    Ok(map_poly(p, &x.zero_like())?.eval(x))
}

fn eval_bi<F: QAlgebra>(f: &BiPolyQ, t: &F) -> Result<Poly<F>> {
    let cs = f
        .coeffs()
        .iter()
        .map(|c| eval_q(c, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(cs, t.zero_like()))
}

/// `(twist(t), sextic(x, t))` of `C_t`.
pub fn family_sextic<F: Field>(spec: &FamilySpec, t: &F) -> Result<(F, Poly<F>)> {
    if t.characteristic() == 2 {
        return Err(Error::Precondition("characteristic 2".into()));
    }
    for f in &spec.validity_factors {
        if eval_q(f, t)?.is_zero() {
            return Err(Error::OutsideLocus(format!("{} at t = {t:?}", spec.id)));
        }
    }
    let twist = eval_q(&spec.twist, t)?;
    let sextic = eval_bi(&spec.sextic, t)?;
    if sextic.degree() != Some(6) || !sextic.is_separable() {
        return Err(Error::Internal(format!(
            "{} sextic degenerates at t = {t:?}",
            spec.id
        )));
    }
    Ok((twist, sextic))
}

/// `C_t` and `C_{-t}`.
#[allow(clippy::type_complexity)]
pub fn family_pair<F: Field>(spec: &FamilySpec, t: &F) -> Result<((F, Poly<F>), (F, Poly<F>))> {
    Ok((family_sextic(spec, t)?, family_sextic(spec, &t.neg())?))
}

/// The models `E_{s(t)}`, `E'_{s(t)}` at a parameter value `t`.
pub fn models_at<F: Field>(
    spec: &FamilySpec,
    t: &F,
) -> Result<(WeierstrassModel<F>, WeierstrassModel<F>)> {
    let s = eval_q(&spec.substitution, t)?;
    let at = |m: &WeierstrassModel<PolyQ>| -> Result<WeierstrassModel<F>> {
        m.specialize(&s, |q| s.from_rational_like(q))
    };
    Ok((at(&spec.model)?, at(&spec.model_prime)?))
}

/// Odd degree: `Delta(s)` is a square. Even degree: `Delta(s) Delta'(s)` is.
pub fn galois_restriction_check<F: Field>(spec: &FamilySpec, s: &F) -> Result<bool> {
    let d = eval_q(&spec.delta, s)?;
    let dp = eval_q(&spec.delta_prime, s)?;
    if d.is_zero() || dp.is_zero() {
        return Err(Error::Singular);
    }
    Ok(match spec.parity() {
        Parity::Odd => d.is_square(),
        Parity::Even => d.mul(&dp).is_square(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityEntry {
    pub name: String,
    pub holds: bool,
    /// A printed form kept as an erratum; expected to fail.
    pub erratum: bool,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub family: FamilyId,
    pub entries: Vec<IdentityEntry>,
}

impl IdentityReport {
    /// Every housed identity holds and every erratum is confirmed as one.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.holds != e.erratum)
    }
}

fn j_matches(e: &WeierstrassModel<PolyQ>, j: &Fraction) -> bool {
    e.c4().pow(3).mul(&j.den) == j.num.mul(&e.curve_discriminant())
}

/// `Delta(E_s)`, `Delta(E'_s)`, `j(E_s)`, `j(E'_s)` against the housed
/// closed forms, as identities in `Q(s)`.
pub fn family_identity_check(spec: &FamilySpec) -> IdentityReport {
    let entry = |name: &str, holds: bool| IdentityEntry {
        name: name.into(),
        holds,
        erratum: false,
        note: String::new(),
    };
    let mut entries = vec![
        entry("Delta", spec.model.curve_discriminant() == spec.delta),
        entry(
            "Delta'",
            spec.model_prime.curve_discriminant() == spec.delta_prime,
        ),
        entry("j", j_matches(&spec.model, &spec.j)),
        entry("j'", j_matches(&spec.model_prime, &spec.j_prime)),
    ];
    for e in &spec.errata {
        let model = if e.quantity.ends_with('\'') {
            &spec.model_prime
        } else {
            &spec.model
        };
        entries.push(IdentityEntry {
            name: format!("{} (printed)", e.quantity),
            holds: j_matches(model, &e.printed),
            erratum: true,
            note: e.note.into(),
        });
    }
    IdentityReport {
        family: spec.id,
        entries,
    }
}

/// One half (`h_t` or `h~_t`) of the symbolic check.
#[derive(Clone, Debug, Serialize)]
pub struct KappaHalf {
    /// `kappa * prod(gamma x^2 - 1)` is a scalar multiple of the sextic.
    pub proportional: bool,
    /// `(printed prefactor) / (prefactor implied by kappa and the gammas)`,
    /// when that ratio is a constant.
    pub printed_ratio: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KappaReport {
    pub family: FamilyId,
    pub h: KappaHalf,
    pub h_tilde: KappaHalf,
    /// The displayed `h~` sextic is `sextic(x, -t)`.
    pub tilde_sextic_is_negated: bool,
    /// `kappa~(t) = kappa(-t)` and the tilde gammas are the gammas at `-t`.
    pub tilde_is_negation: bool,
}

impl KappaReport {
    /// The assemblies hold; printed prefactors may differ by a constant,
    /// which is reported.
    pub fn passed(&self) -> bool {
        self.h.proportional
            && self.h_tilde.proportional
            && self.tilde_sextic_is_negated
            && self.tilde_is_negation
            && self.h.printed_ratio.is_some()
            && self.h_tilde.printed_ratio.is_some()
    }
}

fn kappa_half(
    gammas: &GammaData,
    kappa: &Fraction,
    prefactor: &Fraction,
    sextic: &BiPolyQ,
) -> KappaHalf {
    let (e1, e2, e3) = gammas.symmetric();
    let zero = sextic.zero_elem().zero_elem().clone();
    let minus_one = Fraction::poly(Poly::constant(zero.one_like().neg()));
    // coefficients of x^0, x^2, x^4, x^6 in kappa * prod
    let neg = |f: &Fraction| Fraction {
        num: f.num.neg(),
        den: f.den.clone(),
    };
    let prod = [minus_one, e1, neg(&e2), e3];
    let a: Vec<Fraction> = prod.iter().map(|c| kappa.mul(c)).collect();
    let s: Vec<PolyQ> = (0..4).map(|i| sextic.coeff(2 * i)).collect();
    let odd_zero = (0..4).all(|i| sextic.coeff(2 * i + 1).is_zero());
    // a_i / s_i all equal a_3 / s_3
    let proportional = odd_zero
        && (0..4).all(|i| a[i].num.mul(&s[3]).mul(&a[3].den) == a[3].num.mul(&s[i]).mul(&a[i].den));
    // implied prefactor a_3 / s_3; ratio printed / implied
    let ratio_num = prefactor.num.mul(&s[3]).mul(&a[3].den);
    let ratio_den = prefactor.den.mul(&a[3].num);
    let printed_ratio = if proportional && !ratio_den.is_zero() {
        let c = ratio_num.lead() / ratio_den.lead();
        (ratio_num == ratio_den.scale(&c)).then(|| c.to_string())
    } else {
        None
    };
    KappaHalf {
        proportional,
        printed_ratio,
    }
}

/// The displayed gamma / kappa data assemble to the family sextic.
pub fn symbolic_kappa_check(spec: &FamilySpec) -> Result<KappaReport> {
    let k = spec
        .kappa
        .as_ref()
        .ok_or_else(|| Error::Precondition(format!("{} has no kappa data", spec.id)))?;
    let h = kappa_half(&k.gammas, &k.kappa, &k.prefactor, &spec.sextic);
    let h_tilde = kappa_half(
        &k.gammas_tilde,
        &k.kappa_tilde,
        &k.prefactor_tilde,
        &k.sextic_tilde,
    );
    let tilde_sextic_is_negated = k.sextic_tilde == spec.sextic_negated();
    let (e1, e2, e3) = k.gammas.symmetric();
    let (f1, f2, f3) = k.gammas_tilde.symmetric();
    let tilde_is_negation = k.kappa_tilde.same(&k.kappa.negate_var())
        && f1.same(&e1.negate_var())
        && f2.same(&e2.negate_var())
        && f3.same(&e3.negate_var());
    Ok(KappaReport {
        family: spec.id,
        h,
        h_tilde,
        tilde_sextic_is_negated,
        tilde_is_negation,
    })
}

#[cfg(test)]
mod tests;
