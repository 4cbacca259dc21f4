use super::*;
use crate::exact::{q, qi, PrimeField};
use crate::testutil::random_prime;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ps(s: &str) -> PolyQ {
    parse_poly(s, "s").unwrap()
}

#[test]
fn table_rows_exist_exactly_for_genus_zero_levels() {
    for n in 1..=30 {
        assert_eq!(x0_jpair(n).is_ok(), GENUS_ZERO_LEVELS.contains(&n), "N={n}");
    }
    assert!(matches!(x0_jpair(11), Err(Error::Precondition(_))));
}

#[test]
fn fricke_constants() {
    let c: [(u32, i64); 15] = [
        (1, 1),
        (2, 4096),
        (3, 729),
        (4, 256),
        (5, 125),
        (6, 72),
        (7, 49),
        (8, 32),
        (9, 27),
        (10, 20),
        (12, 12),
        (13, 13),
        (16, 8),
        (18, 6),
        (25, 5),
    ];
    for (n, cn) in c {
        let row = x0_jpair(n).unwrap();
        if n == 1 {
            assert_eq!(row.j, row.j_prime);
            continue;
        }
        assert!(fricke_relation_holds(&row, &qi(cn)), "N={n}");
        assert!(!fricke_relation_holds(&row, &qi(cn + 1)), "N={n}");
    }
}

#[test]
fn repaired_rows_differ_from_printed() {
    // the printed N = 6 row fails the Fricke relation
    let printed = X0Param {
        n: 6,
        j: RatQ::new(
            ps("(s+6)^3*(s^3+18*s^3+84*s+24)^3"),
            ps("s*(s+8)^3*(s+9)^2"),
        ),
        ..x0_jpair(6).unwrap()
    };
    assert!(!fricke_relation_holds(&printed, &qi(72)));
    let printed = X0Param {
        n: 10,
        j: RatQ::new(
            ps("(s^6+20*s^5+160*s^4+640*s^3+1280*s^2+1040*s+80)^3"),
            ps("s*(s+4)^4*(s+5)^2"),
        ),
        ..x0_jpair(10).unwrap()
    };
    assert!(!fricke_relation_holds(&printed, &qi(20)));
    for n in [6, 10, 12, 16] {
        assert!(!x0_jpair(n).unwrap().corrections.is_empty());
    }
}

#[test]
fn j_pairs_have_level_degree_poles() {
    // j_N has a simple pole at s = 0 and j'_N a pole of order N there
    for n in GENUS_ZERO_LEVELS.into_iter().filter(|&n| n > 1) {
        let row = x0_jpair(n).unwrap();
        let (_, k) = row.j.den().strip_factor(&ps("s"));
        let (_, kp) = row.j_prime.den().strip_factor(&ps("s"));
        assert_eq!((k, kp), (1, n), "N={n}");
    }
}

#[test]
fn cusp_examples() {
    let f = PrimeField::new(101).unwrap();
    assert!(!cusp_check(2, &f.elem(0)).unwrap());
    assert!(cusp_check(2, &f.elem(1)).unwrap());
    assert!(!cusp_check(6, &f.elem(-8)).unwrap());
    assert!(!cusp_check(6, &f.elem(-9)).unwrap());
    assert!(cusp_check(6, &f.elem(5)).unwrap());
    assert!(!cusp_check(3, &qi(0)).unwrap());
    assert!(cusp_check(3, &q(1, 2)).unwrap());
    assert!(cusp_check(11, &qi(1)).is_err());
}

#[test]
fn family_j_invariants_match_table() {
    let j = |spec: &FamilySpec| spec.model.j_rational_function().unwrap();
    let jp = |spec: &FamilySpec| spec.model_prime.j_rational_function().unwrap();
    let s = RatQ::from_poly(ps("s"));
    // howe2 at s' = 64 s
    let s64 = RatQ::from_poly(ps("64*s"));
    let howe = FamilyId::Howe2.spec();
    assert_eq!(x0_jpair(2).unwrap().j.compose(&s64), j(howe));
    assert_eq!(x0_jpair(2).unwrap().j_prime.compose(&s64), jp(howe));
    for (id, n) in [(FamilyId::Deg3, 3), (FamilyId::Deg7, 7)] {
        let row = x0_jpair(n).unwrap();
        assert_eq!(row.j.compose(&s), j(id.spec()), "{id}");
        assert_eq!(row.j_prime.compose(&s), jp(id.spec()), "{id}");
    }
    // deg4 sits at u = s - 16; j_4 is also invariant under u -> -16 - u
    let u = RatQ::from_poly(ps("s-16"));
    let neg = RatQ::from_poly(ps("-s"));
    let row = x0_jpair(4).unwrap();
    assert_eq!(row.j.compose(&u), j(FamilyId::Deg4.spec()));
    assert_eq!(row.j.compose(&neg), j(FamilyId::Deg4.spec()));
    assert_eq!(row.j_prime.compose(&u), jp(FamilyId::Deg4.spec()));
    assert_ne!(row.j_prime.compose(&neg), jp(FamilyId::Deg4.spec()));
}

#[test]
fn identity_reports() {
    for id in FamilyId::ALL {
        let r = family_identity_check(id.spec());
        assert!(r.passed(), "{id}: {r:?}");
        for e in &r.entries {
            assert_eq!(e.holds, !e.erratum, "{id} {}", e.name);
        }
    }
    let howe = family_identity_check(FamilyId::Howe2.spec());
    assert_eq!(howe.entries.iter().filter(|e| e.erratum).count(), 1);
}

#[test]
fn identity_check_catches_mutation() {
    let mut spec = FamilyId::Deg3.spec().clone();
    spec.delta = spec.delta.add(&ps("s"));
    spec.j.den = spec.j.den.scale(&qi(2));
    let r = family_identity_check(&spec);
    assert!(!r.passed());
    let failing: Vec<_> = r
        .entries
        .iter()
        .filter(|e| !e.holds)
        .map(|e| e.name.as_str())
        .collect();
    assert_eq!(failing, vec!["Delta", "j"]);
}

#[test]
fn kappa_assemblies() {
    assert!(symbolic_kappa_check(FamilyId::Howe2.spec()).is_err());
    for (id, ratio) in [
        (FamilyId::Deg3, "16"),
        (FamilyId::Deg4, "1"),
        (FamilyId::Deg7, "16"),
    ] {
        let r = symbolic_kappa_check(id.spec()).unwrap();
        assert!(r.passed(), "{id}: {r:?}");
        assert_eq!(r.h.printed_ratio.as_deref(), Some(ratio), "{id}");
        assert_eq!(r.h_tilde.printed_ratio.as_deref(), Some(ratio), "{id}");
    }
}

#[test]
fn kappa_check_catches_mutation() {
    let mut spec = FamilyId::Deg3.spec().clone();
    let k = spec.kappa.as_mut().unwrap();
    if let GammaData::Symmetric { e1, .. } = &mut k.gammas {
        e1.num = e1.num.add(&parse_poly("t", "t").unwrap());
    }
    let r = symbolic_kappa_check(&spec).unwrap();
    assert!(!r.h.proportional);
    assert!(!r.tilde_is_negation);
    assert!(r.h_tilde.proportional);
}

#[test]
fn deg3_at_one() {
    let (twist, sextic) = family_sextic(FamilyId::Deg3.spec(), &qi(1)).unwrap();
    assert_eq!(twist, qi(560));
    assert_eq!(
        sextic,
        Poly::from_ints(&[-16, 0, -352, 0, -1648, 0, 16], &qi(0))
    );
}

#[test]
fn family_sextic_rejects_bad_parameters() {
    let f = PrimeField::new(101).unwrap();
    for id in FamilyId::ALL {
        assert!(matches!(
            family_sextic(id.spec(), &f.elem(0)),
            Err(Error::OutsideLocus(_))
        ));
    }
    assert!(matches!(
        family_sextic(FamilyId::Howe2.spec(), &qi(-1)),
        Err(Error::OutsideLocus(_))
    ));
    let f3 = PrimeField::new(3).unwrap();
    assert!(family_sextic(FamilyId::Deg3.spec(), &f3.elem(1)).is_err());
}

#[test]
fn parse_ids() {
    for id in FamilyId::ALL {
        assert_eq!(id.name().parse::<FamilyId>().unwrap(), id);
    }
    assert!("deg5".parse::<FamilyId>().is_err());
    assert_eq!(FamilyId::Deg4.parity(), Parity::Even);
    assert_eq!(FamilyId::Deg7.parity(), Parity::Odd);
}

#[test]
fn tilde_sextic_is_minus_t() {
    for id in [FamilyId::Deg3, FamilyId::Deg4, FamilyId::Deg7] {
        let spec = id.spec();
        assert_eq!(
            spec.kappa.as_ref().unwrap().sextic_tilde,
            spec.sextic_negated(),
            "{id}"
        );
    }
}

/// Random valid `t` over `F_p` for each family, with `p` in a range.
fn sample(seed: u64, rounds: usize, mut check: impl FnMut(&FamilySpec, crate::exact::Fp)) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..rounds {
        let p = random_prime(&mut rng, 7, 100_000);
        let f = PrimeField::new(p).unwrap();
        for id in FamilyId::ALL {
            let spec = id.spec();
            for _ in 0..5 {
                let t = f.elem(rng.gen_range(1..p as i64));
                let ok = spec
                    .validity_factors
                    .iter()
                    .all(|v| !eval_q(v, &t).unwrap().is_zero());
                if ok {
                    check(spec, t);
                }
            }
        }
    }
}

#[test]
fn valid_parameters_give_genus_two() {
    sample(1, 10, |spec, t| {
        let (tw, s) =
            family_sextic(spec, &t).unwrap_or_else(|e| panic!("{} t={t:?}: {e}", spec.id));
        assert!(s.is_separable() && s.degree() == Some(6));
        let (tw2, s2) = family_sextic(spec, &t.neg()).unwrap();
        assert_eq!(s2.coeffs().len(), 7);
        // C_{-t} sextic is the t -> -t image
        let neg = eval_bi(&spec.sextic_negated(), &t).unwrap();
        assert_eq!(s2, neg);
        assert!(!tw.is_zero() && !tw2.is_zero());
    });
}

#[test]
fn galois_restriction_holds_on_substitution() {
    sample(2, 10, |spec, t| {
        let s = eval_q(&spec.substitution, &t).unwrap();
        let d = eval_q(&spec.delta, &s).unwrap();
        let dp = eval_q(&spec.delta_prime, &s).unwrap();
        if d.is_zero() || dp.is_zero() {
            return;
        }
        assert!(
            galois_restriction_check(spec, &s).unwrap(),
            "{} t={t:?}",
            spec.id
        );
    });
}

#[test]
fn galois_restriction_fails_off_substitution() {
    // a non-square s (odd families, howe2) or s - 16 (deg4) breaks it
    let f = PrimeField::new(10007).unwrap();
    let mut n = f.elem(2);
    while n.is_square() {
        n = n.add(&f.elem(1));
    }
    for id in FamilyId::ALL {
        let spec = id.spec();
        let s = if id == FamilyId::Deg4 {
            n.add(&f.elem(16))
        } else {
            n
        };
        assert!(!galois_restriction_check(spec, &s).unwrap(), "{id}");
    }
    assert!(galois_restriction_check(FamilyId::Deg3.spec(), &f.elem(0)).is_err());
}

#[test]
fn models_at_match_specialized_discriminants() {
    sample(3, 4, |spec, t| {
        let (e, ep) = models_at(spec, &t).unwrap();
        let s = eval_q(&spec.substitution, &t).unwrap();
        assert_eq!(e.curve_discriminant(), eval_q(&spec.delta, &s).unwrap());
        assert_eq!(
            ep.curve_discriminant(),
            eval_q(&spec.delta_prime, &s).unwrap()
        );
    });
}

#[test]
fn kappa_products_over_z() {
    // the 2^172 in deg4 survives parsing exactly
    let k = &FamilyId::Deg4.spec().kappa.as_ref().unwrap().kappa;
    let lead = k.num.lead().clone();
    assert_eq!(
        lead,
        BigRational::from_integer(-(BigInt::from(1) << 172usize))
    );
}
