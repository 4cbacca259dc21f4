use super::*;
use crate::exact::qi;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> PolyQ {
    let cs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-20..=20)).collect();
    Poly::from_ints(&cs, &BigRational::zero())
}

fn ps(s: &str) -> PolyQ {
    parse_poly(s, "s").unwrap()
}

#[test]
fn ten_records() {
    let recs = obstruction_records();
    assert_eq!(
        recs.iter().map(|r| r.n).collect::<Vec<_>>(),
        OBSTRUCTION_DEGREES
    );
    assert_eq!(recs.iter().filter(|r| r.is_elliptic()).count(), 8);
    for r in &recs {
        assert_eq!(r.delta_prime.is_some(), r.n % 2 == 0, "{}", r.n);
        let want = if r.is_elliptic() {
            Finiteness::RankZeroClaim
        } else {
            Finiteness::FaltingsClaim
        };
        assert_eq!(r.finiteness, want);
    }
    assert!(matches!(obstruction_record(7), Err(Error::Precondition(_))));
}

#[test]
fn listed_points_lie_on_curves() {
    for r in obstruction_records() {
        assert!(
            r.listed_points.iter().all(|p| on_poly_curve(&r.curve, p)),
            "{}",
            r.n
        );
    }
}

#[test]
fn elliptic_searches_find_exactly_the_listed_points() {
    for r in obstruction_records()
        .into_iter()
        .filter(|r| r.is_elliptic())
    {
        let v = verify_obstruction(&r, None).unwrap();
        assert_eq!(v.bound, ELLIPTIC_BOUND);
        assert!(v.exact && v.passed(), "{}: {:?}", r.n, v.found);
        assert!(!v.claim_verified);
    }
    let v = verify_obstruction(&obstruction_record(12).unwrap(), None).unwrap();
    let xs: Vec<&str> = v.found.iter().map(|(x, _)| x.as_str()).collect();
    assert_eq!(xs, ["-4", "-3", "0"]);
}

#[test]
fn hyperelliptic_searches_find_only_rational_roots() {
    for r in obstruction_records()
        .into_iter()
        .filter(|r| !r.is_elliptic())
    {
        let v = verify_obstruction(&r, None).unwrap();
        assert!(v.passed() && v.superset, "{}", r.n);
        assert_eq!(v.finiteness, Finiteness::FaltingsClaim);
        for (x, y) in &v.found {
            assert_eq!(y, "0", "O_{}", r.n);
            let x: BigRational = x.parse().unwrap();
            assert!(Zero::is_zero(&r.curve.eval(&x)));
        }
    }
    let v = verify_obstruction(&obstruction_record(18).unwrap(), Some(50)).unwrap();
    assert_eq!(v.found.len(), 3);
    let v = verify_obstruction(&obstruction_record(25).unwrap(), Some(50)).unwrap();
    assert_eq!(v.found, vec![("0".to_string(), "0".to_string())]);
}

#[test]
fn search_catches_missing_points() {
    // drop a listed point: the search result is no longer exact
    let mut r = obstruction_record(6).unwrap();
    r.listed_points.pop();
    let v = verify_obstruction(&r, Some(50)).unwrap();
    assert!(v.superset && !v.exact && !v.passed());
    // a point off the curve
    let mut r = obstruction_record(8).unwrap();
    r.listed_points.push(AffinePoint { x: qi(1), y: qi(1) });
    let v = verify_obstruction(&r, Some(20)).unwrap();
    assert!(!v.listed_on_curve && !v.passed());
}

#[test]
fn square_conditions() {
    for r in obstruction_records() {
        let c = square_condition_consistency(&r).unwrap();
        assert_eq!(c.j_relation, Relation::Equal, "{}", r.n);
        assert_eq!(c.j_constant, "1");
        if r.n == 5 {
            // the printed degree-5 class lacks the factor s; j - 1728 has it
            assert_eq!(c.printed_relation, Relation::MissingS);
            assert_eq!(c.printed_class, "x^2 + 22*x + 125");
            assert!(!c.consistent && c.discrepancy.is_some());
        } else {
            assert!(c.consistent, "{}: {:?}", r.n, c.discrepancy);
            assert!(c.discrepancy.is_none());
        }
    }
    let c = square_condition_consistency(&obstruction_record(6).unwrap()).unwrap();
    assert_eq!(c.printed_class, "x^3 + 17*x^2 + 72*x");
}

#[test]
fn square_condition_catches_mutation() {
    let mut r = obstruction_record(9).unwrap();
    r.curve = parse_poly("x^3+9*x^2+26*x", "x").unwrap();
    let c = square_condition_consistency(&r).unwrap();
    assert_eq!(
        (c.printed_relation, c.j_relation),
        (Relation::Unrelated, Relation::Unrelated)
    );
    let mut r = obstruction_record(10).unwrap();
    r.delta_prime = Some(RatQ::new(ps("s+5"), ps("1")));
    let c = square_condition_consistency(&r).unwrap();
    assert_eq!(c.printed_relation, Relation::Unrelated);
    assert_eq!(c.j_relation, Relation::Equal);
}

#[test]
fn square_class_examples() {
    let f = RatQ::new(ps("s^3*(s+1)^2"), ps("4*(s+2)"));
    let (c, d) = square_class(&f).unwrap();
    assert_eq!((c, d), (BigInt::from(1), ps("s^2+2*s")));
    let (c, d) = square_class(&RatQ::new(ps("-12*s^2"), ps("1"))).unwrap();
    assert_eq!((c, d), (BigInt::from(-3), ps("1")));
    assert!(square_class(&RatQ::new(ps("0"), ps("1"))).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn square_class_ignores_squares(seed in any::<u64>(), k in 1i64..50) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let zero = BigRational::zero();
        let f = random_poly(&mut rng, 4);
        let g = random_poly(&mut rng, 3);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let base = RatQ::new(f.clone(), PolyQ::one(&zero));
        let scaled = RatQ::new(f.mul(&g).mul(&g).scale(&qi(k * k)), PolyQ::one(&zero));
        prop_assert_eq!(square_class(&base).unwrap(), square_class(&scaled).unwrap());
        let inv = RatQ::new(PolyQ::one(&zero), f.clone());
        prop_assert_eq!(square_class(&base).unwrap(), square_class(&inv).unwrap());
    }
}
