//! Obstruction curves: for the isogeny degrees beyond the four families,
//! the parameters where the discriminant condition holds are the rational
//! points of a curve `O_N`, and these curves have only the listed points.
//!
//! The discriminant classes are printed data; as an independent check each
//! is compared with the square class of `j_N(s) - 1728` (times that of
//! `j'_N(s) - 1728` for even `N`), which equals the discriminant of any
//! model up to squares.

use crate::ellcurve::{bounded_search_poly, on_poly_curve, AffinePoint};
use crate::error::{Error, Result};
use crate::exact::serial::render_poly;
use crate::exact::{parse_poly, squarefree_part_int, Poly, Ring};
use crate::families::{x0_jpair, PolyQ, RatQ};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

/// Degrees with an obstruction curve, in the order they are discussed.
pub const OBSTRUCTION_DEGREES: [u32; 10] = [5, 9, 13, 25, 6, 8, 10, 12, 16, 18];

/// Height bound for the elliptic searches.
pub const ELLIPTIC_BOUND: u64 = 1000;
/// Height bound for the degree-7 hyperelliptic searches.
pub const HYPERELLIPTIC_BOUND: u64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Finiteness {
    /// Rank zero asserted, not proved here.
    RankZeroClaim,
    /// Genus 3, finitely many points by Faltings; not effective.
    FaltingsClaim,
}

#[derive(Clone, Debug)]
pub struct ObstructionRecord {
    pub n: u32,
    /// Discriminant of `E_s` up to squares, as printed.
    pub delta: RatQ,
    /// Same for `E'_s` (even `N`).
    pub delta_prime: Option<RatQ>,
    /// `O_N: y^2 = curve(x)`.
    pub curve: PolyQ,
    pub listed_points: Vec<AffinePoint<BigRational>>,
    pub finiteness: Finiteness,
}

impl ObstructionRecord {
    pub fn is_elliptic(&self) -> bool {
        self.curve.degree() == Some(3)
    }
}

fn poly(s: &str, var: &str) -> PolyQ {
    parse_poly(s, var).expect("obstruction data parses")
}

fn ratq(num: &str, den: &str) -> RatQ {
    RatQ::new(poly(num, "s"), poly(den, "s"))
}

fn pts(xs: &[i64]) -> Vec<AffinePoint<BigRational>> {
    xs.iter()
        .map(|&x| AffinePoint {
            x: BigRational::from_integer(x.into()),
            y: BigRational::zero(),
        })
        .collect()
}

/// The printed record for degree `n`.
pub fn obstruction_record(n: u32) -> Result<ObstructionRecord> {
    let odd = |delta: &str, curve: &str, listed: &[i64], finiteness| ObstructionRecord {
        n,
        delta: ratq(delta, "1"),
        delta_prime: None,
        curve: poly(curve, "x"),
        listed_points: pts(listed),
        finiteness,
    };
    let even = |d: (&str, &str), dp: (&str, &str), curve: &str, listed: &[i64], finiteness| {
        ObstructionRecord {
            n,
            delta: ratq(d.0, d.1),
            delta_prime: Some(ratq(dp.0, dp.1)),
            curve: poly(curve, "x"),
            listed_points: pts(listed),
            finiteness,
        }
    };
    use Finiteness::*;
    Ok(match n {
        5 => odd("s^2+22*s+125", "x^3+22*x^2+125*x", &[0], RankZeroClaim),
        9 => odd("s*(s^2+9*s+27)", "x^3+9*x^2+27*x", &[0], RankZeroClaim),
        13 => odd("s*(s^2+6*s+13)", "x^3+6*x^2+13*x", &[0], RankZeroClaim),
        25 => odd(
            "s*(s^4+5*s^3+15*s^2+25*s+25)*(s^2+2*s+5)",
            "x*(x^4+5*x^3+15*x^2+25*x+25)*(x^2+2*x+5)",
            &[],
            FaltingsClaim,
        ),
        6 => even(
            ("s*(s+8)", "1"),
            ("s+9", "1"),
            "x^3+17*x^2+72*x",
            &[0, -8, -9],
            RankZeroClaim,
        ),
        8 => even(
            ("s*(s+8)", "1"),
            ("s+4", "1"),
            "x^3+12*x^2+32*x",
            &[0, -4, -8],
            RankZeroClaim,
        ),
        10 => even(
            ("s*(s+4)", "s^2+8*s+20"),
            ("s+5", "s^2+8*s+20"),
            "x^3+9*x^2+20*x",
            &[0, -4, -5],
            RankZeroClaim,
        ),
        12 => even(
            ("s*(s+2)*(s+4)*(s+6)", "1"),
            ("(s+2)*(s+3)*(s+6)", "1"),
            "x^3+7*x^2+12*x",
            &[0, -3, -4],
            RankZeroClaim,
        ),
        16 => even(
            ("s*(s+4)*(s^2+4*s+8)", "1"),
            ("(s+2)*(s^2+4*s+8)", "1"),
            "x^3+6*x^2+8*x",
            &[0, -2, -4],
            RankZeroClaim,
        ),
        18 => even(
            ("s*(s+2)*(s^2+6*s+12)", "1"),
            ("(s+3)*(s^2+3*s+3)", "1"),
            "x*(x+2)*(x+3)*(x^2+3*x+3)*(x^2+6*x+12)",
            &[],
            FaltingsClaim,
        ),
        _ => {
            return Err(Error::Precondition(format!(
                "no obstruction curve for degree {n}"
            )))
        }
    })
}

pub fn obstruction_records() -> Vec<ObstructionRecord> {
    OBSTRUCTION_DEGREES
        .iter()
        .map(|&n| obstruction_record(n).expect("listed degree"))
        .collect()
}

/// Square class of a nonzero rational function: `(c, d)` with `f = c * d * square`,
/// `c` a squarefree integer and `d` monic squarefree.
pub fn square_class(f: &RatQ) -> Result<(BigInt, PolyQ)> {
    square_class_of(&[f.num().clone(), f.den().clone()])
}

/// Square class of a product, reducing each factor first.
fn square_class_of(factors: &[PolyQ]) -> Result<(BigInt, PolyQ)> {
    if factors.iter().any(|f| f.is_zero()) {
        return Err(Error::Degenerate("square class of zero".into()));
    }
    let one = PolyQ::one(&BigRational::zero());
    let mut lc = BigRational::one();
    let mut d = one.clone();
    for f in factors {
        lc *= f.lead();
        d = d.mul(&f.squarefree_part());
    }
    let d = d.squarefree_part();
    // numer * denom has the square class of lc
    let c = squarefree_part_int(&(lc.numer() * lc.denom()))?;
    Ok((c, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Relation {
    /// `curve = class`.
    Equal,
    /// `curve = x * class`: the class lacks the factor `s`.
    MissingS,
    Unrelated,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SquareConditionReport {
    pub n: u32,
    pub curve: String,
    /// Square class of the printed `Delta` (`Delta * Delta'` for even `N`).
    pub printed_class: String,
    pub printed_constant: String,
    pub printed_relation: Relation,
    /// Same from `j - 1728` of the `X_0(N)` parameterization.
    pub j_class: String,
    pub j_constant: String,
    pub j_relation: Relation,
    pub consistent: bool,
    pub discrepancy: Option<String>,
}

fn relation(curve: &PolyQ, class: &PolyQ) -> Relation {
    let x = Poly::x(&BigRational::zero());
    if curve == class {
        Relation::Equal
    } else if *curve == class.mul(&x) {
        Relation::MissingS
    } else {
        Relation::Unrelated
    }
}

fn j_minus_1728(j: &RatQ) -> RatQ {
    j.sub(&RatQ::from_poly(Poly::constant(BigRational::from_integer(
        1728.into(),
    ))))
}

fn rename(p: &PolyQ) -> String {
    render_poly(p, "x")
}

/// Does the curve describe exactly the `s` where the discriminant condition
/// holds? Reports the relation to the printed classes and to the classes
/// computed from `j`.
pub fn square_condition_consistency(rec: &ObstructionRecord) -> Result<SquareConditionReport> {
    let printed = match &rec.delta_prime {
        Some(dp) => rec.delta.mul(dp),
        None => rec.delta.clone(),
    };
    let (pc, pclass) = square_class(&printed)?;
    let row = x0_jpair(rec.n)?;
    let mut parts = vec![j_minus_1728(&row.j)];
    if rec.delta_prime.is_some() {
        parts.push(j_minus_1728(&row.j_prime));
    }
    let parts: Vec<PolyQ> = parts
        .iter()
        .flat_map(|f| [f.num().clone(), f.den().clone()])
        .collect();
    let (jc, jclass) = square_class_of(&parts)?;
    let printed_relation = relation(&rec.curve, &pclass);
    let j_relation = relation(&rec.curve, &jclass);
    let consistent = printed_relation == Relation::Equal
        && j_relation == Relation::Equal
        && One::is_one(&pc)
        && One::is_one(&jc);
    let discrepancy = (!consistent).then(|| {
        format!(
            "O_{}: curve {} ; printed class {}*({}) [{:?}] ; j class {}*({}) [{:?}]",
            rec.n,
            rename(&rec.curve),
            pc,
            rename(&pclass),
            printed_relation,
            jc,
            rename(&jclass),
            j_relation
        )
    });
    Ok(SquareConditionReport {
        n: rec.n,
        curve: rename(&rec.curve),
        printed_class: rename(&pclass),
        printed_constant: pc.to_string(),
        printed_relation,
        j_class: rename(&jclass),
        j_constant: jc.to_string(),
        j_relation,
        consistent,
        discrepancy,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ObstructionReport {
    pub n: u32,
    pub elliptic: bool,
    pub bound: u64,
    /// `(x, y)` as strings.
    pub listed: Vec<(String, String)>,
    pub listed_on_curve: bool,
    pub found: Vec<(String, String)>,
    /// Every listed point is found.
    pub superset: bool,
    /// Found equals listed (asserted for elliptic records).
    pub exact: bool,
    pub finiteness: Finiteness,
    /// Finiteness or rank claims are not proved here.
    pub claim_verified: bool,
}

impl ObstructionReport {
    pub fn passed(&self) -> bool {
        self.listed_on_curve && self.superset && (!self.elliptic || self.exact)
    }
}

fn show(p: &AffinePoint<BigRational>) -> (String, String) {
    (p.x.to_string(), p.y.to_string())
}

/// Listed points on the curve, and a bounded search for others
/// (`x = a / b^2` with `|a|, b <= bound`).
pub fn verify_obstruction(
    rec: &ObstructionRecord,
    bound: Option<u64>,
) -> Result<ObstructionReport> {
    let elliptic = rec.is_elliptic();
    let bound = bound.unwrap_or(if elliptic {
        ELLIPTIC_BOUND
    } else {
        HYPERELLIPTIC_BOUND
    });
    let listed_on_curve = rec
        .listed_points
        .iter()
        .all(|p| on_poly_curve(&rec.curve, p));
    let found = bounded_search_poly(&rec.curve, bound)?;
    let superset = rec.listed_points.iter().all(|p| found.contains(p));
    let mut listed = rec.listed_points.clone();
    listed.sort();
    let exact = found == listed;
    if found.iter().any(|p| !on_poly_curve(&rec.curve, p)) {
        return Err(Error::Internal(
            "search returned a point off the curve".into(),
        ));
    }
    Ok(ObstructionReport {
        n: rec.n,
        elliptic,
        bound,
        listed: listed.iter().map(show).collect(),
        listed_on_curve,
        found: found.iter().map(show).collect(),
        superset,
        exact,
        finiteness: rec.finiteness,
        claim_verified: false,
    })
}

#[cfg(test)]
mod tests;
