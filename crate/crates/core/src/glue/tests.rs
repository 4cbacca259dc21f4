use super::*;
use crate::exact::PrimeField;
use crate::families::FamilyId;
use crate::igusa::geometric_isomorphism_test;
use crate::testutil::{pf, random_poly, random_prime};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn split_input(p: u64, a: [i64; 3], b: [i64; 3]) -> GlueInput<Fp> {
    let f = PrimeField::new(p).unwrap();
    let roots = |r: [i64; 3]| r.map(|v| f.elem(v));
    let cubic = |r: &[Fp; 3]| {
        r.iter().fold(Poly::one(&f.zero()), |acc, x| {
            acc.mul(&Poly::linear_root(x))
        })
    };
    let (alphas, betas) = (roots(a), roots(b));
    GlueInput {
        f: cubic(&alphas),
        g: cubic(&betas),
        alphas,
        betas,
    }
}

#[test]
fn identity_pairing_is_excluded() {
    let input = split_input(101, [0, 3, 7], [0, 3, 7]);
    let err = glue_p10(&input).unwrap_err();
    assert_eq!(err, Error::IsomorphismRestriction);
}

#[test]
fn repeated_roots_rejected() {
    let input = split_input(101, [0, 3, 3], [1, 2, 5]);
    assert!(matches!(glue_p10(&input), Err(Error::Degenerate(_))));
    let mut bad = split_input(101, [0, 3, 7], [1, 2, 5]);
    bad.alphas.swap(0, 1);
    bad.alphas[0] = PrimeField::new(101).unwrap().elem(4);
    assert!(matches!(glue_p10(&bad), Err(Error::Precondition(_))));
}

#[test]
fn glue_small_example() {
    let r = glue_p10(&split_input(101, [0, 1, 5], [2, 9, 40])).unwrap();
    assert_eq!(r.h.degree(), Some(6));
    assert!(r.h.is_separable());
    for c in [&r.a1, &r.a2, &r.b1, &r.b2] {
        assert!(!c.is_zero());
    }
    // odd-degree coefficients vanish
    assert!([1, 3, 5].iter().all(|&i| r.h.coeff(i).is_zero()));
}

#[test]
fn odd_graphs_and_alpha() {
    let [g1, g2] = admissible_graphs(Parity::Odd, 0);
    assert_eq!(g1.pairing, [1, 2, 0]);
    assert_eq!(g2.pairing, [2, 0, 1]);
    let psi = [Some(0), Some(1), Some(2)];
    assert_eq!(alpha_image(&g1, &psi), AlphaImage::Graph(g2));
    assert_eq!(alpha_image(&g2, &psi), AlphaImage::Graph(g1));
    let diagonal = TorsionGraph {
        parity: Parity::Odd,
        pairing: [0, 1, 2],
    };
    assert_eq!(
        alpha_image(&diagonal, &psi),
        AlphaImage::NotAGraph(vec![None, None, None])
    );
}

#[test]
fn even_graphs_and_alpha() {
    for q in 0..3 {
        let [g1, g2] = admissible_graphs(Parity::Even, q);
        assert_eq!(g1.pairing, [0, 1, 2]);
        assert_eq!(g2.pairing[q], q);
        assert_ne!(g1, g2);
        // psi kills Q and sends the other two points to Q'
        let psi: [Option<usize>; 3] = std::array::from_fn(|i| if i == q { None } else { Some(q) });
        assert_eq!(alpha_image(&g1, &psi), AlphaImage::Graph(g2));
        assert_eq!(alpha_image(&g2, &psi), AlphaImage::Graph(g1));
    }
}

#[test]
fn inversion_examples() {
    let f = pf(&[5, 0, 0, 2, 0, 0, 1], 101);
    assert_eq!(
        inversion_isomorphism(&f).unwrap(),
        pf(&[1, 0, 0, 2, 0, 0, 5], 101)
    );
    let pal = pf(&[3, 1, 4, 1, 4, 1, 3], 101);
    assert_eq!(inversion_isomorphism(&pal).unwrap(), pal);
    assert!(inversion_isomorphism(&pf(&[0, 1, 0, 0, 0, 0, 1], 101)).is_err());
    assert!(inversion_isomorphism(&pf(&[1, 1, 0, 0, 0, 1], 101)).is_err());
}

#[test]
fn inversion_preserves_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut n = 0;
    while n < 30 {
        let f = random_poly(&mut rng, 6, 101, false);
        if f.degree() != Some(6) || f.coeff(0).is_zero() || !f.is_separable() {
            continue;
        }
        let g = inversion_isomorphism(&f).unwrap();
        assert!(geometric_isomorphism_test(&f, &g).unwrap());
        n += 1;
    }
}

#[test]
fn reconstruction_examples() {
    let cases = [
        (FamilyId::Howe2, 101, 5),
        (FamilyId::Deg3, 101, 5),
        (FamilyId::Deg4, 103, 6),
        (FamilyId::Deg7, 1009, 12),
    ];
    for (id, p, t) in cases {
        let t = PrimeField::new(p).unwrap().elem(t);
        let r = verify_reconstruction(id.spec(), &t).unwrap();
        assert!(
            r.passed(),
            "{id}: {}",
            serde_json::to_string_pretty(&r).unwrap()
        );
        assert!(r.twists_match, "{id}");
    }
}

#[test]
fn reconstruction_preconditions() {
    let f = PrimeField::new(101).unwrap();
    for id in FamilyId::ALL {
        assert!(matches!(
            verify_reconstruction(id.spec(), &f.zero()),
            Err(Error::OutsideLocus(_))
        ));
    }
    let f5 = PrimeField::new(5).unwrap();
    assert!(matches!(
        verify_reconstruction(FamilyId::Deg3.spec(), &f5.elem(2)),
        Err(Error::Precondition(_))
    ));
}

fn random_split(rng: &mut ChaCha8Rng, p: u64) -> Option<GlueInput<Fp>> {
    let mut v = || rng.gen_range(0..p as i64);
    Some(split_input(p, [v(), v(), v()], [v(), v(), v()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn forms_agree_or_excluded(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 7, 1 << 20);
        let input = random_split(&mut rng, p).unwrap();
        match glue_p10(&input) {
            Ok(r) => {
                prop_assert!(r.h.is_separable() && r.h.degree() == Some(6));
                let disc = crate::exact::discriminant(&r.h).unwrap();
                prop_assert!(!disc.is_zero());
            }
            Err(Error::Degenerate(_)) | Err(Error::IsomorphismRestriction) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn swapping_roles_keeps_class(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 7, 1 << 20);
        let input = random_split(&mut rng, p).unwrap();
        let swapped = GlueInput {
            f: input.g.clone(),
            g: input.f.clone(),
            alphas: input.betas,
            betas: input.alphas,
        };
        if let (Ok(a), Ok(b)) = (glue_p10(&input), glue_p10(&swapped)) {
            prop_assert!(geometric_isomorphism_test(&a.h, &b.h).unwrap());
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_reconstruction(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_prime(&mut rng, 50, 1 << 20);
        let id = FamilyId::ALL[rng.gen_range(0..4)];
        let t = PrimeField::new(p).unwrap().elem(rng.gen_range(1..p as i64));
        match verify_reconstruction(id.spec(), &t) {
            Ok(r) => prop_assert!(r.passed(), "{}", serde_json::to_string(&r).unwrap()),
            Err(Error::OutsideLocus(_)) => {}
            Err(e) => prop_assert!(false, "{id} p={p} t={t}: {e}"),
        }
    }
}
