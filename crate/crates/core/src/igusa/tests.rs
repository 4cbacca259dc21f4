use super::*;
use crate::exact::{is_prime_u64, qi, ExtField};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_prime(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> u64 {
    loop {
        let p = rng.gen_range(lo..hi) | 1;
        if is_prime_u64(p) {
            return p;
        }
    }
}

fn random_sextic(rng: &mut ChaCha8Rng, p: u64) -> Poly<Fp> {
    loop {
        let mut cs: Vec<Fp> = (0..6).map(|_| Fp::new(rng.gen_range(0..p), p)).collect();
        cs.push(Fp::new(rng.gen_range(1..p), p));
        let f = Poly::new(cs, Fp::new(0, p));
        if f.is_separable() {
            return f;
        }
    }
}

#[test]
fn formulas_are_current() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/src/igusa/formulas.rs");
    let on_disk = std::fs::read_to_string(path).unwrap();
    assert_eq!(
        on_disk,
        generate::render(),
        "formulas.rs is stale; rerun gen-igusa-formulas"
    );
}

#[test]
fn orbit_sizes() {
    assert_eq!(generate::orbit("I2").len(), 15);
    assert_eq!(generate::orbit("I4").len(), 10);
    assert_eq!(generate::orbit("I6").len(), 60);
    assert_eq!(generate::orbit("I10").len(), 1);
}

#[test]
fn integral_sextics_have_integral_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..500 {
        let cs: Vec<BigRational> = (0..7)
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-40..41))))
            .collect();
        let f = Poly::new(cs, qi(0));
        if f.degree().unwrap_or(0) < 5 {
            continue;
        }
        let ic = igusa_clebsch_coeffs(&sextic_coefficients(&f).unwrap());
        let j = igusa_j(&ic).unwrap();
        for jk in &j.j {
            assert!(jk.is_integer(), "non-integral J for {f:?}");
        }
    }
}

#[test]
fn known_values() {
    // x^6 - 1; I2 = 240 from a floating-point sum over the sixth roots of unity
    let f = Poly::from_ints(&[-1, 0, 0, 0, 0, 0, 1], &qi(0));
    let ic = igusa_clebsch(&f).unwrap();
    let disc = crate::exact::discriminant(&f).unwrap();
    assert_eq!(ic.i10, disc);
    assert_eq!(ic.i2, qi(240));
}

#[test]
fn inseparable_and_unsupported() {
    let f = Poly::from_ints(&[1, 0, -2, 0, 1, 0, 1], &qi(0));
    assert!(igusa_clebsch(&f).is_ok());
    let g = Poly::from_ints(&[1, -2, 1], &qi(0)).mul(&Poly::from_ints(&[3, 0, 1, 0, 1], &qi(0)));
    assert_eq!(igusa_clebsch(&g), Err(Error::Singular));
    let h = Poly::from_ints(&[1, 0, 0, 0, 0, 1, 1], &Fp::new(0, 5));
    assert!(matches!(igusa_clebsch(&h), Err(Error::Unsupported(_))));
    assert!(igusa_clebsch(&Poly::from_ints(&[1, 0, 1], &qi(0))).is_err());
}

#[test]
fn oracle_matches_formulas() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a11);
    for _ in 0..100 {
        let p = random_prime(&mut rng, 7, 10_000);
        let f = random_sextic(&mut rng, p);
        let (field, oracle) = igusa_clebsch_oracle(&f).unwrap();
        let ic = igusa_clebsch(&f).unwrap();
        assert_eq!(field.from_fp(&ic.i2), oracle.i2);
        assert_eq!(field.from_fp(&ic.i4), oracle.i4);
        assert_eq!(field.from_fp(&ic.i6), oracle.i6);
        assert_eq!(field.from_fp(&ic.i10), oracle.i10);
    }
}

#[test]
fn quintic_is_limit_of_sextics() {
    // x^5 + x^3 + 8x over F_13 has a root at infinity; x -> x/(x+3) moves it
    // to a finite point.
    let p = 13;
    let f = Poly::from_ints(&[0, 8, 0, 1, 0, 1], &Fp::new(0, p));
    let one = Fp::new(1, p);
    let zero = Fp::new(0, p);
    let g = mobius_transform(&f, [&one, &zero, &one, &Fp::new(3, p)]);
    assert_eq!(g.degree(), Some(6));
    assert!(geometric_isomorphism_test(&f, &g).unwrap());
}

#[test]
fn weighted_equal_basics() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let p = 10_007;
    let f = random_sextic(&mut rng, p);
    let u = igusa_vector(&f).unwrap();
    let e = Fp::new(1234, p);
    assert!(weighted_equal(&u, &u.twist(&e), false).unwrap());
    // quadratic twists share their invariants
    let ns = (2..p)
        .map(|v| Fp::new(v, p))
        .find(|v| !v.is_square())
        .unwrap();
    let v = igusa_vector(&f.scale(&ns)).unwrap();
    assert!(weighted_equal(&u, &v, true).unwrap());
    // f versus a shifted model
    let g = f.shift(&Fp::new(1, p));
    assert!(geometric_isomorphism_test(&f, &g).unwrap());
    // a random other curve
    let h = random_sextic(&mut rng, p);
    assert!(!geometric_isomorphism_test(&f, &h).unwrap());
    let mut w = u.clone();
    w.j[4] = Fp::new(0, p);
    assert!(weighted_equal(&u, &w, true).is_err());
}

#[test]
fn weighted_equal_over_rationals() {
    let f = Poly::from_ints(&[1, 2, 7, 0, 7, 11, 1], &qi(0));
    let u = igusa_vector(&f).unwrap();
    assert!(weighted_equal(&u, &u.twist(&crate::exact::q(3, 5)), false).unwrap());
    let v = igusa_vector(&f.scale(&qi(2))).unwrap();
    assert!(weighted_equal(&u, &v, true).unwrap());
    assert_eq!(v, u.twist(&qi(2)));
}

#[test]
fn extension_field_vectors() {
    let k = ExtField::new(11, 2).unwrap();
    let g = k.generator();
    let f = Poly::new(
        vec![
            g.clone(),
            k.one(),
            k.zero(),
            g.square(),
            k.zero(),
            k.from_u64(3),
            k.one(),
        ],
        k.zero(),
    );
    let u = igusa_vector(&f).unwrap();
    assert!(u.j8_relation_holds());
    assert!(weighted_equal(&u, &u.twist(&g), false).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn translation_invariance(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 7, 10_000);
        let f = random_sextic(&mut rng, p);
        let c = Fp::new(rng.gen_range(0..p), p);
        let u = igusa_vector(&f).unwrap();
        prop_assert!(u.j8_relation_holds());
        prop_assert_eq!(u, igusa_vector(&f.shift(&c)).unwrap());
    }

    #[test]
    fn mobius_covariance(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 7, 10_000);
        let f = random_sextic(&mut rng, p);
        let m: Vec<Fp> = loop {
            let m: Vec<Fp> = (0..4).map(|_| Fp::new(rng.gen_range(0..p), p)).collect();
            if !m[0].mul(&m[3]).sub(&m[1].mul(&m[2])).is_zero() {
                break m;
            }
        };
        let g = mobius_transform(&f, [&m[0], &m[1], &m[2], &m[3]]);
        prop_assert!(g.degree().unwrap() >= 5);
        let v = igusa_vector(&g).unwrap();
        prop_assert!(v.j8_relation_holds());
        prop_assert!(weighted_equal(&igusa_vector(&f).unwrap(), &v, true).unwrap());
    }

    #[test]
    fn twist_law(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 7, 10_000);
        let f = random_sextic(&mut rng, p);
        let e = Fp::new(rng.gen_range(1..p), p);
        let u = igusa_vector(&f).unwrap();
        let v = igusa_vector(&f.scale(&e)).unwrap();
        // J_2k has degree 2k in the coefficients
        prop_assert_eq!(v, u.twist(&e));
        let ic = igusa_clebsch(&f).unwrap();
        let ic2 = igusa_clebsch(&f.scale(&e)).unwrap();
        prop_assert_eq!(ic2.i2, ic.i2.mul(&e.pow(2)));
        prop_assert_eq!(ic2.i10, ic.i10.mul(&e.pow(10)));
    }
}
