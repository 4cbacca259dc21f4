use super::*;
use crate::exact::{discriminant, q, qi, FiniteField, PrimeField};
use crate::testutil::{pf, random_poly, random_prime};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zq() -> BigRational {
    qi(0)
}

fn model_q(cs: &[i64]) -> WeierstrassModel<BigRational> {
    WeierstrassModel::new(Poly::from_ints(cs, &zq())).unwrap()
}

#[test]
fn discriminant_examples() {
    // x(x^2 - 8x + 8): the first family at s = 1
    let e = model_q(&[0, 8, -8, 1]);
    assert_eq!(e.cubic_discriminant(), qi(2048));
    assert_eq!(e.curve_discriminant(), qi(32768));
    assert_eq!(discriminant(e.cubic()).unwrap(), qi(2048));
    assert_eq!(model_q(&[0, -1, 0, 1]).curve_discriminant(), qi(64));
    let cusp = WeierstrassModel::possibly_singular(Poly::from_ints(&[0, 0, 0, 1], &zq())).unwrap();
    assert_eq!(cusp.curve_discriminant(), qi(0));
    assert_eq!(
        WeierstrassModel::new(Poly::from_ints(&[0, 0, 0, 1], &zq())),
        Err(Error::Singular)
    );
    assert!(WeierstrassModel::new(Poly::from_ints(&[0, 0, 2, 1], &zq())).is_err());
    assert!(WeierstrassModel::new(Poly::from_ints(&[0, 0, 2], &zq())).is_err());
}

#[test]
fn j_examples() {
    assert_eq!(model_q(&[0, 8, -8, 1]).j_invariant().unwrap(), qi(8000));
    assert_eq!(model_q(&[1, 0, 0, 1]).j_invariant().unwrap(), qi(0));
    assert_eq!(model_q(&[0, -1, 0, 1]).j_invariant().unwrap(), qi(1728));
    let cusp = WeierstrassModel::possibly_singular(Poly::from_ints(&[0, 0, 0, 1], &zq())).unwrap();
    assert_eq!(cusp.j_invariant(), Err(Error::Singular));
}

#[test]
fn j_over_function_field() {
    // x(x^2 - 4(s+1)x + 4(s+1)) has j = (64s+16)^3 / (64s)
    let e = WeierstrassModel::new(
        crate::exact::parse_bivariate("x*(x^2 - 4*(s+1)*x + 4*(s+1))", "x", "s").unwrap(),
    )
    .unwrap();
    let j = e.j_rational_function().unwrap();
    let s = crate::exact::parse_poly("s", "s").unwrap();
    let num = crate::exact::parse_poly("(64*s+16)^3", "s").unwrap();
    let den = s.scale(&qi(64));
    assert_eq!(j, RationalFunction::new(num, den));
    let at = e.specialize(&q(3, 7), |c| Some(c.clone())).unwrap();
    assert_eq!(at.j_invariant().unwrap(), j.eval(&q(3, 7)).unwrap());
}

#[test]
fn two_torsion_examples() {
    let e = WeierstrassModel::new(pf(&[0, 8, -8, 1], 7)).unwrap();
    let (k, roots) = two_torsion_x(&e).unwrap();
    assert_eq!(k.degree(), 1);
    let xs: Vec<u64> = roots.iter().map(|r| r.value.coords()[0]).collect();
    assert_eq!(xs, vec![0, 3, 5]);

    let e = WeierstrassModel::new(pf(&[0, -1, 0, 1], 11)).unwrap();
    let (_, roots) = two_torsion_x(&e).unwrap();
    let xs: Vec<u64> = roots.iter().map(|r| r.value.coords()[0]).collect();
    assert_eq!(xs, vec![0, 1, 10]);

    // x^3 + 2x + 1 is irreducible mod 5 (no root among 0..4)
    let f = pf(&[1, 2, 0, 1], 5);
    assert!(crate::exact::roots_in_field(&f).is_empty());
    let (k, roots) = two_torsion_x(&WeierstrassModel::new(f).unwrap()).unwrap();
    assert_eq!(k.degree(), 3);
    assert!(roots.iter().all(|r| r.degree == 3));
    let frob = roots[0].value.frobenius();
    assert!(roots.iter().any(|r| r.value == frob) && frob != roots[0].value);

    let sing = WeierstrassModel::possibly_singular(pf(&[0, 1, 2, 1], 7)).unwrap();
    assert_eq!(two_torsion_x(&sing).unwrap_err(), Error::Singular);
}

#[test]
fn split_check_examples() {
    let r = galois_cubic_split_check(&pf(&[0, -1, 0, 1], 5)).unwrap();
    assert_eq!(
        r,
        SplitRecord {
            disc_is_square: true,
            root_count: 3,
            consistent: true
        }
    );
    let r = galois_cubic_split_check(&pf(&[0, 1, 0, 1], 7)).unwrap();
    assert_eq!(
        r,
        SplitRecord {
            disc_is_square: false,
            root_count: 1,
            consistent: true
        }
    );
    assert!(galois_cubic_split_check(&pf(&[0, 0, 1, 1], 7)).is_err());
}

#[test]
fn split_check_exhaustive() {
    for p in [5u64, 7, 11] {
        let mut irreducible = 0;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let f = pf(&[c as i64, b as i64, a as i64, 1], p);
                    if !f.is_separable() {
                        assert!(galois_cubic_split_check(&f).is_err());
                        continue;
                    }
                    let r = galois_cubic_split_check(&f).unwrap();
                    assert!(r.consistent, "p={p} f={f:?}");
                    if r.root_count == 0 {
                        irreducible += 1;
                    }
                }
            }
        }
        // (p^3 - p) / 3 monic irreducible cubics
        assert_eq!(irreducible, (p * p * p - p) / 3);
    }
}

#[test]
fn on_curve_examples() {
    let o6 = model_q(&[0, 72, 17, 1]);
    assert!(on_curve(&o6, &AffinePoint { x: qi(0), y: qi(0) }));
    assert!(on_curve(
        &o6,
        &AffinePoint {
            x: qi(-8),
            y: qi(0)
        }
    ));
    let o5 = model_q(&[0, 125, 22, 1]);
    assert!(!on_curve(&o5, &AffinePoint { x: qi(1), y: qi(1) }));
    assert!(on_curve(&o5, &AffinePoint { x: qi(0), y: qi(0) }));
}

#[test]
fn point_search_small() {
    let pts = bounded_point_search(&model_q(&[0, -1, 0, 1]), 10).unwrap();
    let xs: Vec<_> = pts.iter().map(|p| (p.x.clone(), p.y.clone())).collect();
    assert_eq!(xs, vec![(qi(-1), qi(0)), (qi(0), qi(0)), (qi(1), qi(0))]);
    // y^2 = x^3 + 1: (-1,0), (0,+-1), (2,+-3)
    let pts = bounded_point_search(&model_q(&[1, 0, 0, 1]), 20).unwrap();
    assert_eq!(pts.len(), 5);
    // y^2 = x^3 - 2 has (3, +-5) and the non-integral (129/100, +-383/1000)
    let pts = bounded_point_search(&model_q(&[-2, 0, 0, 1]), 200).unwrap();
    assert!(pts.contains(&AffinePoint {
        x: q(129, 100),
        y: q(383, 1000)
    }));
    assert!(pts.iter().all(|p| on_curve(&model_q(&[-2, 0, 0, 1]), p)));
    assert!(bounded_point_search(&model_q(&[0, -1, 0, 1]), 0).is_err());
}

#[test]
fn point_search_big_fallback() {
    // degree 7 with b up to 40 overflows i128 for the top terms
    let f = Poly::from_ints(&[0, 1, 0, 0, 0, 0, 0, 1], &zq());
    let pts = bounded_search_poly(&f, 40).unwrap();
    assert!(pts.contains(&AffinePoint { x: qi(0), y: qi(0) }));
    assert!(pts.iter().all(|p| on_poly_curve(&f, p)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn discriminant_convention(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 7, 10_000);
        let f = random_poly(&mut rng, 3, p, true);
        let e = WeierstrassModel::possibly_singular(f.clone()).unwrap();
        prop_assert_eq!(e.curve_discriminant(), discriminant(&f).unwrap().scale_int(16));
    }

    #[test]
    fn j_translation_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 7, 10_000);
        let e = WeierstrassModel::possibly_singular(random_poly(&mut rng, 3, p, true)).unwrap();
        prop_assume!(!e.cubic_discriminant().is_zero());
        let c = PrimeField::new(p).unwrap().elem(rng.gen_range(0..p as i64));
        prop_assert_eq!(e.translate(&c).j_invariant().unwrap(), e.j_invariant().unwrap());
    }

    #[test]
    fn two_torsion_symmetric_functions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 7, 2_000);
        let e = WeierstrassModel::possibly_singular(random_poly(&mut rng, 3, p, true)).unwrap();
        prop_assume!(!e.cubic_discriminant().is_zero());
        let (k, r) = two_torsion_x(&e).unwrap();
        let sum = r[0].value.add(&r[1].value).add(&r[2].value);
        let prod = r[0].value.mul(&r[1].value).mul(&r[2].value);
        prop_assert_eq!(sum, k.from_fp(&e.a2().neg()));
        prop_assert_eq!(prod, k.from_fp(&e.a6().neg()));
    }
}
