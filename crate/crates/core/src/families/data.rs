//! The four families as data. Everything is parsed from the displayed
//! formulas; the parameter of the models is `s`, that of the curves is `t`.

use super::*;

fn ps(s: &str) -> PolyQ {
    parse_poly(s, "s").unwrap_or_else(|e| panic!("bad data '{s}': {e}"))
}

fn pt(s: &str) -> PolyQ {
    parse_poly(s, "t").unwrap_or_else(|e| panic!("bad data '{s}': {e}"))
}

fn model(s: &str) -> WeierstrassModel<PolyQ> {
    let cubic = parse_bivariate(s, "x", "s").unwrap_or_else(|e| panic!("bad model '{s}': {e}"));
    WeierstrassModel::new(cubic).expect("family model is elliptic over Q(s)")
}

fn sextic(s: &str) -> BiPolyQ {
    parse_bivariate(s, "x", "t").unwrap_or_else(|e| panic!("bad sextic '{s}': {e}"))
}

fn frac_s(num: &str, den: &str) -> Fraction {
    Fraction {
        num: ps(num),
        den: ps(den),
    }
}

fn frac_t(num: &str, den: &str) -> Fraction {
    Fraction {
        num: pt(num),
        den: pt(den),
    }
}

fn poly_t(num: &str) -> Fraction {
    frac_t(num, "1")
}

fn factors(fs: &[&str]) -> Vec<PolyQ> {
    fs.iter().map(|f| pt(f)).collect()
}

fn exceptional(
    p: u64,
    locus: &str,
    theorem_locus: &str,
    representative: Option<&str>,
) -> ExceptionalCase {
    ExceptionalCase {
        p,
        locus: pt(locus),
        theorem_locus: pt(theorem_locus),
        representative: representative.map(|r| parse_poly(r, "x").expect("representative parses")),
    }
}

pub(super) fn howe2() -> FamilySpec {
    FamilySpec {
        id: FamilyId::Howe2,
        model: model("x*(x^2 - 4*(s+1)*x + 4*(s+1))"),
        model_prime: model("x*(x^2 + 8*(s+1)*x + 16*s*(s+1))"),
        delta: ps("2^12*s*(s+1)^3"),
        delta_prime: ps("2^18*s^2*(s+1)^3"),
        j: frac_s("(64*s+16)^3", "64*s"),
        j_prime: frac_s("64*(s+4)^3", "s^2"),
        errata: vec![Erratum {
            quantity: "j'",
            printed: frac_s("(64*s+256)^3", "64*s^2"),
            note: "the printed j' is not the j-invariant of the printed E'_s; \
                   the housed form 64(s+4)^3/s^2 is (s'+256)^3/s'^2 at s' = 64 s",
        }],
        substitution: pt("t^2"),
        validity_factors: factors(&["t", "t-1", "t+1", "t^2+1"]),
        twist: pt("t+1"),
        sextic: sextic("(2*x^2 - t)*(4*t^2*x^4 + 4*(t^2+t+1)*x^2 + 1)"),
        kappa: None,
        r_denominators: None,
        fallback_denominators: None,
        denominator_factors: factors(&["t", "t-1", "t+1", "t^2+1"]),
        resultant_primes: vec![],
        exceptional: vec![exceptional(11, "(t^2+3)*(t^2+4)", "(t^2+3)*(t^2+4)", None)],
        negative_controls: vec![],
    }
}

pub(super) fn deg3() -> FamilySpec {
    FamilySpec {
        id: FamilyId::Deg3,
        model: model("x^3 + (s^2 + 18*s - 27)/4*x^2 - 36*s*x - s^3 - 18*s^2 + 27*s"),
        model_prime: model(
            "x^3 + (s^2 + 18*s - 27)/4*x^2 - (5*s^3 + 165*s^2 + 891*s + 1215)*x \
             - s^5 - 65*s^4 - 1285*s^3 - 7614*s^2 - 17496*s - 13851",
        ),
        delta: ps("s*(s+3)^6*(s+27)^2"),
        delta_prime: ps("s^3*(s+3)^6*(s+27)^2"),
        j: frac_s("(s+27)*(s+3)^3", "s"),
        j_prime: frac_s("(s+27)*(s+243)^3", "s^3"),
        errata: vec![],
        substitution: pt("t^2"),
        validity_factors: factors(&["t", "t^2+27", "t^2+243", "t^2+3", "t^4-10*t^2+729"]),
        twist: pt("(t^2+27)*(t^2-8*t+27)"),
        sextic: sextic(DEG3_SEXTIC),
        kappa: Some(KappaData {
            gammas: GammaData::Symmetric {
                e3: poly_t("t^2"),
                e1: frac_t("t^4-8*t^3+42*t^2-144*t-243", "16*t"),
                e2: frac_t("-(t^4+16*t^3-126*t^2+648*t-2187)", "16*t"),
            },
            gammas_tilde: GammaData::Symmetric {
                e3: poly_t("t^2"),
                e1: frac_t("-(t^4+8*t^3+42*t^2+144*t-243)", "16*t"),
                e2: frac_t("t^4-16*t^3-126*t^2-648*t-2187", "16*t"),
            },
            kappa: frac_t("(t^2+3)^21*(t^2+27)^8*t^9*(t^2-8*t+27)^3", "1024"),
            kappa_tilde: frac_t("-(t^2+3)^21*(t^2+27)^8*t^9*(t^2+8*t+27)^3", "1024"),
            prefactor: frac_t("(t^2+3)^21*(t^2+27)^8*t^8*(t^2-8*t+27)^3", "1024"),
            prefactor_tilde: frac_t("(t^2+3)^21*(t^2+27)^8*t^8*(t^2+8*t+27)^3", "1024"),
            sextic_tilde: sextic(
                "-16*t^3*x^6 + (t^4-16*t^3-126*t^2-648*t-2187)*x^4 \
                 + (t^4+8*t^3+42*t^2+144*t-243)*x^2 + 16*t",
            ),
        }),
        r_denominators: Some([
            pt("t*(t^2+27)^3*(t^2+243)*(t^2+3)"),
            pt("t^5*(t^2+27)^3*(t^2+243)*(t^2+3)"),
            pt("t^5*(t^2+27)^5*(t^2+243)*(t^2+3)"),
        ]),
        fallback_denominators: None,
        denominator_factors: factors(&["t", "t^2+27", "t^2+243", "t^2+3"]),
        resultant_primes: vec![2, 3, 5, 13, 17],
        exceptional: vec![
            exceptional(
                13,
                "t^4+7*t^2+1",
                "t^2+2*t+12",
                Some("x^6 + 11*x^5 + 7*x^4 + 7*x^2 + 2*x + 1"),
            ),
            exceptional(
                17,
                "t^2+7",
                "t^2+7",
                Some("x^6 + 13*x^5 + 13*x^4 + 13*x^2 + 4*x + 1"),
            ),
        ],
        negative_controls: vec![7, 11],
    }
}

pub(super) const DEG3_SEXTIC: &str = "16*t^3*x^6 + (t^4+16*t^3-126*t^2+648*t-2187)*x^4 \
     + (t^4-8*t^3+42*t^2-144*t-243)*x^2 - 16*t";

pub(super) fn deg4() -> FamilySpec {
    FamilySpec {
        id: FamilyId::Deg4,
        model: model("x*(x^2 + s*(s-8)*x + 16*s^2)"),
        model_prime: model("x^3 + s*(s-8)*x^2 - 16*s^2*(5*s+4)*x - 64*s^3*(s-1)*(s+8)"),
        delta: ps("2^12*s^7*(s-16)"),
        delta_prime: ps("2^12*s^7*(s-16)^4"),
        j: frac_s("(s^2-16*s+16)^3", "s*(s-16)"),
        j_prime: frac_s("(s^2+224*s+256)^3", "s*(s-16)^4"),
        errata: vec![],
        substitution: pt("16*t^2+16"),
        validity_factors: factors(&["t", "t^2+1", "2*t^2+1", "t^2+2", "t^2-1", "t^4+t^2+1"]),
        twist: pt("(t^2+1)*(t^2-t+1)*(t-1)"),
        sextic: sextic("(4*x^2+t)*(16*t^4*x^4 + 8*(2*t^4-4*t^3+5*t^2-4*t+2)*x^2 + 1)"),
        kappa: Some(KappaData {
            gammas: GammaData::Split {
                g32: frac_t("-4", "t"),
                product: poly_t("16*t^4"),
                sum: poly_t("-8*(2*t^4-4*t^3+5*t^2-4*t+2)"),
            },
            gammas_tilde: GammaData::Split {
                g32: frac_t("4", "t"),
                product: poly_t("16*t^4"),
                sum: poly_t("-8*(2*t^4+4*t^3+5*t^2+4*t+2)"),
            },
            kappa: poly_t("-2^172*t^11*(t-1)^3*(t^2+1)^25*(t^2-t+1)^3"),
            kappa_tilde: poly_t("-2^172*t^11*(t+1)^3*(t^2+1)^25*(t^2+t+1)^3"),
            prefactor: poly_t("2^172*t^10*(t-1)^3*(t^2+1)^25*(t^2-t+1)^3"),
            prefactor_tilde: poly_t("2^172*t^10*(-t-1)^3*(t^2+1)^25*(t^2+t+1)^3"),
            sextic_tilde: sextic("(4*x^2-t)*(16*t^4*x^4 + 8*(2*t^4+4*t^3+5*t^2+4*t+2)*x^2 + 1)"),
        }),
        r_denominators: Some([
            pt("t*(t^2+1)*(2*t^2+1)*(t^2+2)"),
            pt("t^5*(t^2+1)*(2*t^2+1)*(t^2+2)"),
            pt("t^5*(t^2+1)^3*(2*t^2+1)*(t^2+2)"),
        ]),
        fallback_denominators: Some([
            pt("t^11*(t^2+1)*(2*t^2+1)*(t^2+2)"),
            pt("t^41*(t^2+1)^7*(2*t^2+1)*(t^2+2)"),
            pt("t^11*(t^2+1)^5*(2*t^2+1)*(t^2+2)"),
        ]),
        denominator_factors: factors(&["t", "t^2+1", "2*t^2+1", "t^2+2"]),
        resultant_primes: vec![2, 3, 5, 7, 11, 23, 37, 47],
        exceptional: vec![
            exceptional(
                23,
                "(t^2+13)*(t^2+16)",
                "(t^2-10)*(t^2-7)",
                Some("x^6 + x^3 + 2"),
            ),
            exceptional(
                47,
                "(t^2+26)*(t^2+38)",
                "(t^2-26)*(t^2-38)",
                Some("x^6 + 16*x^5 + 41*x^4 + 4*x^3 + 41*x^2 + 16*x + 1"),
            ),
        ],
        negative_controls: vec![11, 37],
    }
}

const DEG7_A: &str = "(s^4 + 14*s^3 + 63*s^2 + 70*s - 7)";

pub(super) fn deg7() -> FamilySpec {
    let e = format!("x^3 + {DEG7_A}/4*x^2 - 36*s*x - s*{DEG7_A}");
    let e_prime = format!(
        "x^3 + {DEG7_A}/4*x^2 \
         - (5*s^7 + 165*s^6 + 2180*s^5 + 14555*s^4 + 49820*s^3 + 75215*s^2 + 25431*s + 2450)*x \
         - s^11 - 61*s^10 - 1563*s^9 - 22420*s^8 - 199153*s^7 - 1132425*s^6 - 4079892*s^5 \
         - 8795374*s^4 - 9879408*s^3 - 4152015*s^2 - 725788*s - 45276"
    );
    let common = "(t^2-t+7)^8*(t^2+t+7)^8*(t^4+5*t^2+1)^21";
    let r_tail = "(t^2+7)*(t^4+5*t^2+1)*(t^4+245*t^2+2401)";
    FamilySpec {
        id: FamilyId::Deg7,
        model: model(&e),
        model_prime: model(&e_prime),
        delta: ps("s*(s^2+5*s+1)^6*(s^2+13*s+49)^2"),
        delta_prime: ps("s^7*(s^2+5*s+1)^6*(s^2+13*s+49)^2"),
        j: frac_s("(s^2+13*s+49)*(s^2+5*s+1)^3", "s"),
        j_prime: frac_s("(s^2+13*s+49)*(s^2+245*s+2401)^3", "s^7"),
        errata: vec![],
        substitution: pt("t^2"),
        validity_factors: factors(&[
            "t",
            "t^4+13*t^2+49",
            "t^8-6*t^6+43*t^4-294*t^2+2401",
            "t^4+5*t^2+1",
            "t^2+7",
            "t^4+245*t^2+2401",
        ]),
        twist: pt("(t^4+5*t^2+1)*(t^2-5*t+7)*(t^2-3*t+7)"),
        sextic: sextic(DEG7_SEXTIC),
        kappa: Some(KappaData {
            gammas: GammaData::Symmetric {
                e3: poly_t("t^6"),
                e1: frac_t(
                    "t^8-8*t^7+38*t^6-128*t^5+327*t^4-640*t^3+910*t^2-784*t-343",
                    "16*t",
                ),
                e2: frac_t(
                    "-(t^8+16*t^7-130*t^6+640*t^5-2289*t^4+6272*t^3-13034*t^2+19208*t-16807)",
                    "16*t",
                ),
            },
            gammas_tilde: GammaData::Symmetric {
                e3: poly_t("t^6"),
                e1: frac_t(
                    "-(t^8+8*t^7+38*t^6+128*t^5+327*t^4+640*t^3+910*t^2+784*t-343)",
                    "16*t",
                ),
                e2: frac_t(
                    "t^8-16*t^7-130*t^6-640*t^5-2289*t^4-6272*t^3-13034*t^2-19208*t-16807",
                    "16*t",
                ),
            },
            kappa: frac_t(
                &format!("t^17*(t^2-5*t+7)^3*(t^2-3*t+7)^3*{common}"),
                "1024",
            ),
            kappa_tilde: frac_t(
                &format!("-t^17*(t^2+5*t+7)^3*(t^2+3*t+7)^3*{common}"),
                "1024",
            ),
            prefactor: frac_t(
                &format!("t^16*(t^2-5*t+7)^3*(t^2-3*t+7)^3*{common}"),
                "1024",
            ),
            prefactor_tilde: frac_t(
                &format!("t^16*(t^2+5*t+7)^3*(t^2+3*t+7)^3*{common}"),
                "1024",
            ),
            sextic_tilde: sextic(
                "-16*t^7*x^6 \
                 + (t^8-16*t^7-130*t^6-640*t^5-2289*t^4-6272*t^3-13034*t^2-19208*t-16807)*x^4 \
                 + (t^8+8*t^7+38*t^6+128*t^5+327*t^4+640*t^3+910*t^2+784*t-343)*x^2 + 16*t",
            ),
        }),
        r_denominators: Some([
            pt(&format!("t*(t^4+13*t^2+49)^2*{r_tail}")),
            pt(&format!("t^9*(t^4+13*t^2+49)^2*{r_tail}")),
            pt(&format!("t^9*(t^4+13*t^2+49)^4*{r_tail}")),
        ]),
        fallback_denominators: None,
        denominator_factors: factors(&[
            "t",
            "t^4+13*t^2+49",
            "t^2+7",
            "t^4+5*t^2+1",
            "t^4+245*t^2+2401",
        ]),
        resultant_primes: vec![2, 3, 5, 7, 13, 17, 19, 41, 167, 571603],
        exceptional: vec![
            exceptional(13, "t^2+6", "t^2-7", Some("x^5 + x^3 + 8*x")),
            exceptional(
                17,
                "(t^4+11*t^2+15)*(t^4+7*t^2+15)",
                "(t^2+3*t+10)*(t^2+8*t+1)*(t^2+9*t+10)*(t^2+14*t+10)",
                Some("x^5 + x^3 + 7*x"),
            ),
            exceptional(
                41,
                "t^4+26*t^2+8",
                "(t^2+t+34)*(t^2-t+34)",
                Some("x^5 + x^3 + 14*x"),
            ),
        ],
        negative_controls: vec![7, 19, 167],
    }
}

pub(super) const DEG7_SEXTIC: &str = "16*t^7*x^6 \
     + (t^8+16*t^7-130*t^6+640*t^5-2289*t^4+6272*t^3-13034*t^2+19208*t-16807)*x^4 \
     + (t^8-8*t^7+38*t^6-128*t^5+327*t^4-640*t^3+910*t^2-784*t-343)*x^2 - 16*t";
