use super::*;
use crate::exact::{parse_poly, primes_below};

fn t(s: &str) -> PolyQ {
    parse_poly(s, "t").unwrap()
}

fn modp(s: &str, p: u64) -> Poly<Fp> {
    fp_poly(&t(s), p).unwrap().monic()
}

fn above5(v: &[u64]) -> Vec<u64> {
    v.iter().copied().filter(|&p| p > 5).collect()
}

#[test]
fn prime_support_matches_printed_lists() {
    let cases: [(FamilyId, &[u64]); 3] = [
        (FamilyId::Deg3, &[13, 17]),
        (FamilyId::Deg4, &[7, 11, 23, 37, 47]),
        (FamilyId::Deg7, &[7, 13, 17, 19, 41, 167, 571603]),
    ];
    for (id, want) in cases {
        let r = prime_support(id.spec()).unwrap();
        assert!(r.unfactored.is_none(), "{id}");
        assert_eq!(above5(&r.prime_support), want, "{id}");
        assert!(r.match_above5, "{id}");
    }
    assert!(matches!(
        prime_support(FamilyId::Howe2.spec()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn prime_support_is_reproducible() {
    let spec = FamilyId::Deg3.spec();
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let a = one.install(|| prime_support(spec)).unwrap();
    let b = prime_support(spec).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn printed_exceptional_loci() {
    let cases = [
        (FamilyId::Deg3, 13, "t^4+7*t^2+1"),
        (FamilyId::Deg3, 17, "t^2+7"),
        (FamilyId::Deg4, 23, "(t^2-10)*(t^2-7)"),
        (FamilyId::Deg4, 47, "(t^2-26)*(t^2-38)"),
        (FamilyId::Deg7, 13, "t^2+6"),
        (FamilyId::Deg7, 17, "(t^4+11*t^2+15)*(t^4+7*t^2+15)"),
        (FamilyId::Deg7, 41, "t^4+26*t^2+8"),
    ];
    for (id, p, locus) in cases {
        let r = charp_analysis(id.spec(), p).unwrap();
        assert_eq!(r.status, CharPStatus::Exceptional, "{id} {p}");
        assert_eq!(r.locus_poly, modp(locus, p), "{id} {p}");
        assert!(r.passed(), "{id} {p}: {r:?}");
        for f in &r.factors {
            assert!(f.verified, "{id} {p} {}", f.factor);
            for root in &f.roots {
                assert!(
                    root.isomorphic && root.error.is_none(),
                    "{id} {p} {}",
                    root.t
                );
                assert_eq!(
                    root.matches_representative,
                    Some(true),
                    "{id} {p} {}",
                    root.t
                );
            }
        }
        assert!(r.non_roots_sampled > 0, "{id} {p}");
    }
}

#[test]
fn stated_loci_versus_computed() {
    // char 13: the stated quadratic is one of two conjugate halves
    let r = charp_analysis(FamilyId::Deg3.spec(), 13).unwrap();
    assert_eq!(r.matches_theorem, Some(false));
    let half = modp("t^2+2*t+12", 13);
    assert!(half.divides(&r.locus_poly));
    assert!(half.negate_var().divides(&r.locus_poly));
    // char 47: the case analysis divides by (t^2+26)(t^2+38), the locus is t^2 in {26, 38}
    let r = charp_analysis(FamilyId::Deg4.spec(), 47).unwrap();
    assert!(!r.matches_expected);
    assert_eq!(r.matches_theorem, Some(true));
    // char 17: the stated quadratics are not a locus of C_t ~ C_-t
    let r = charp_analysis(FamilyId::Deg7.spec(), 17).unwrap();
    assert!(r.matches_expected);
    assert_eq!(r.matches_theorem, Some(false));
    // char 13, deg7: a candidate of multiplicity two verifies once
    let r = charp_analysis(FamilyId::Deg7.spec(), 13).unwrap();
    assert_eq!(r.candidate_locus, "t^4 + 12*t^2 + 10");
    assert_eq!(r.locus, "t^2 + 6");
}

#[test]
fn negative_controls() {
    for (id, p, fallback) in [
        (FamilyId::Deg3, 7, false),
        (FamilyId::Deg3, 11, false),
        (FamilyId::Deg4, 11, true),
        (FamilyId::Deg4, 37, true),
        (FamilyId::Deg7, 7, false),
        (FamilyId::Deg7, 19, false),
        (FamilyId::Deg7, 167, false),
    ] {
        let r = charp_analysis(id.spec(), p).unwrap();
        let want = if fallback {
            CharPStatus::CoprimeViaFallback
        } else {
            CharPStatus::Coprime
        };
        assert_eq!(r.status, want, "{id} {p}");
        assert!(r.passed(), "{id} {p}: {r:?}");
        if fallback {
            assert_ne!(r.j2_common, "1");
            assert_eq!(r.fallback_pairwise_coprime, Some(true), "{id} {p}");
        }
    }
}

#[test]
fn deg4_fallback_is_triggered_by_j2() {
    // gcd(J2(t), J2(-t)) in the two fallback characteristics
    let r = charp_analysis(FamilyId::Deg4.spec(), 11).unwrap();
    assert_eq!(r.j2_common, "t^4 + 5*t^2 + 1");
    let r = charp_analysis(FamilyId::Deg4.spec(), 37).unwrap();
    assert_eq!(r.j2_common, "t^4 + 20*t^2 + 1");
}

#[test]
fn unlisted_primes_are_coprime() {
    for id in [FamilyId::Deg3, FamilyId::Deg4, FamilyId::Deg7] {
        let spec = id.spec();
        let unlisted: Vec<u64> = primes_below(200)
            .into_iter()
            .filter(|&p| p > 5 && !spec.resultant_primes.contains(&p))
            .take(10)
            .collect();
        assert_eq!(unlisted.len(), 10);
        for p in unlisted {
            let r = charp_analysis(spec, p).unwrap();
            assert!(
                matches!(
                    r.status,
                    CharPStatus::Coprime | CharPStatus::CoprimeViaFallback
                ),
                "{id} {p}: {:?}",
                r.status
            );
            assert!(r.passed(), "{id} {p}");
        }
    }
}

#[test]
fn stripping_covers_printed_denominators() {
    // R = cross / denominator over Z[t], so each denominator factor divides
    // the raw cross product mod p at least to its printed power
    for (id, p) in [
        (FamilyId::Deg3, 13),
        (FamilyId::Deg4, 23),
        (FamilyId::Deg7, 41),
        (FamilyId::Deg7, 19),
    ] {
        let spec = id.spec();
        let r = charp_analysis(spec, p).unwrap();
        let dens = spec.r_denominators.as_ref().unwrap();
        for s in &r.stripped {
            let phi = &s.factor;
            for (k, den) in dens.iter().enumerate() {
                let den = fp_poly(den, p).unwrap();
                let factor = factor_finite(&den)
                    .into_iter()
                    .find(|(f, _)| render_fp(&f.monic()) == *phi)
                    .map(|(_, m)| m as u32)
                    .unwrap_or(0);
                assert!(s.exponents[k] >= factor, "{id} {p} {phi} R{k}");
            }
        }
    }
}

#[test]
fn large_prime_quartic_is_a_validity_collision() {
    // the extra quartic divided out at 571603 coincides with t^4 + 245 t^2 + 2401
    // or t^4 + 5 t^2 + 1 there, with excess exponents 1, 2, 4
    let p = 571603;
    let r = charp_analysis(FamilyId::Deg7.spec(), p).unwrap();
    assert_eq!(r.status, CharPStatus::Coprime);
    let quartic = modp("t^4+516817*t^2+49", p);
    let roots: Vec<Poly<Fp>> = factor_finite(&quartic)
        .into_iter()
        .map(|(f, _)| f.monic())
        .collect();
    assert_eq!(roots.len(), 4);
    for f in roots {
        let s = r
            .stripped
            .iter()
            .find(|s| s.factor == render_fp(&f))
            .unwrap();
        assert_eq!(s.exponents, vec![2, 3, 5]);
    }
    let collides = ["t^4+245*t^2+2401", "t^4+5*t^2+1", "t^2+7"]
        .iter()
        .any(|v| !modp(v, p).gcd(&quartic).is_constant());
    assert!(collides);
}

#[test]
fn scans_match_loci() {
    for (id, p) in [
        (FamilyId::Howe2, 11),
        (FamilyId::Deg3, 13),
        (FamilyId::Deg3, 17),
        (FamilyId::Deg4, 23),
        (FamilyId::Deg7, 13),
    ] {
        for ext in [1, 2] {
            let r = full_scan(id.spec(), p, ext).unwrap();
            assert!(r.passed(), "{id} {p} {ext}: {r:?}");
            assert!(r.valid_count > 0);
        }
    }
}

#[test]
fn scan_examples() {
    let r = full_scan(FamilyId::Howe2.spec(), 11, 2).unwrap();
    let k = ExtField::new(11, 2).unwrap();
    let want: BTreeSet<String> = k
        .elements()
        .filter(|t| {
            let t2 = t.square();
            t2 == k.from_u64(8) || t2 == k.from_u64(7)
        })
        .map(|t| t.to_string())
        .collect();
    assert_eq!(want.len(), 4);
    assert_eq!(r.positives.iter().cloned().collect::<BTreeSet<_>>(), want);
    assert!(full_scan(FamilyId::Deg3.spec(), 7, 2)
        .unwrap()
        .positives
        .is_empty());
    let r = full_scan(FamilyId::Deg7.spec(), 13, 2).unwrap();
    let k = ExtField::new(13, 2).unwrap();
    assert_eq!(r.positives.len(), 2);
    assert!(k
        .elements()
        .filter(|t| t.square() == k.from_u64(7))
        .all(|t| r.positives.contains(&t.to_string())));
}

#[test]
fn scan_positives_are_charp_locus_roots() {
    for (id, p) in [
        (FamilyId::Deg3, 13),
        (FamilyId::Deg3, 17),
        (FamilyId::Deg4, 23),
        (FamilyId::Deg7, 13),
        (FamilyId::Deg3, 11),
    ] {
        let c = charp_analysis(id.spec(), p).unwrap();
        let s = full_scan(id.spec(), p, 2).unwrap();
        let k = ExtField::new(p, 2).unwrap();
        let lifted = c.locus_poly.map(|a| k.from_fp(a), k.zero());
        let roots: Vec<String> = if lifted.is_constant() {
            vec![]
        } else {
            roots_in_field(&lifted)
                .into_iter()
                .map(|(r, _)| r.to_string())
                .collect()
        };
        let roots: BTreeSet<String> = roots.into_iter().collect();
        assert_eq!(
            s.positives.iter().cloned().collect::<BTreeSet<_>>(),
            roots,
            "{id} {p}"
        );
    }
}

#[test]
fn preconditions() {
    let spec = FamilyId::Deg3.spec();
    for p in [2, 3, 5, 9, 15] {
        assert!(
            matches!(charp_analysis(spec, p), Err(Error::Precondition(_))),
            "{p}"
        );
    }
    assert!(matches!(
        full_scan(spec, 101, 2),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        full_scan(spec, 13, 3),
        Err(Error::Precondition(_))
    ));
    assert!(full_scan(spec, 101, 1).is_ok());
}

#[test]
fn rendering() {
    assert_eq!(render_fp(&modp("t^4+7*t^2+1", 13)), "t^4 + 7*t^2 + 1");
    assert_eq!(render_fp(&fp_poly(&t("3*t-1"), 13).unwrap()), "3*t + 12");
    assert_eq!(render_q_mod_p(&t("2"), 7).unwrap(), "1");
}
