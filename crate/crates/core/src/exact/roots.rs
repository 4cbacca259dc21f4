use super::factor::lcm_u64;
use super::{ExtField, FiniteField, Fp, Fq, Poly, Ring};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Rabin-style irreducibility test: `gcd(x^(q^i) - x, f) = 1` for all
/// `i <= deg f / 2`.
pub fn is_irreducible<F: FiniteField>(f: &Poly<F>) -> bool {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    let f = f.monic();
    let x = Poly::x(f.zero_elem());
    let q = f.zero_elem().order();
    let mut h = x.rem(&f);
    for _ in 1..=n / 2 {
        h = h.powmod(&q, &f);
        if !h.sub(&x).gcd(&f).is_constant() {
            return false;
        }
    }
    true
}

/// Distinct-degree factorization of a squarefree polynomial: pairs
/// `(g_d, d)` where `g_d` is the product of the monic irreducible factors of
/// degree `d`.
pub fn distinct_degree_factorization<F: FiniteField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    let mut rest = f.monic();
    let x = Poly::x(f.zero_elem());
    let q = f.zero_elem().order();
    let mut h = x.clone();
    let mut d = 0;
    while rest.deg() > 0 {
        d += 1;
        if 2 * d > rest.deg() as usize {
            let n = rest.deg() as usize;
            out.push((rest.clone(), n));
            break;
        }
        h = h.powmod(&q, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_constant() {
            rest = rest.div_exact(&g).unwrap();
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    out
}

/// The `k`-th probe of Cantor-Zassenhaus: a monic polynomial of degree
/// `< n` with coefficients drawn from a generator seeded by `k`, so runs are
/// reproducible. Coefficients must leave the prime field, since conjugate
/// roots are never separated by probes defined over it.
fn probe<F: FiniteField>(zero: &F, k: u64, n: usize) -> Poly<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(k);
    let q = u64::try_from(&zero.order()).unwrap_or(u64::MAX);
    let top = if k.is_multiple_of(2) || n <= 2 {
        1
    } else {
        rng.gen_range(1..n)
    };
    let mut cs: Vec<F> = (0..top)
        .map(|_| zero.element_at(rng.gen_range(0..q)))
        .collect();
    cs.push(zero.one_like());
    Poly::new(cs, zero.clone())
}

/// Split a squarefree product of irreducibles of equal degree `d` into its
/// monic factors (odd characteristic).
pub fn equal_degree_split<F: FiniteField>(f: &Poly<F>, d: usize) -> Vec<Poly<F>> {
    let f = f.monic();
    let n = f.deg() as usize;
    if n == d {
        return vec![f];
    }
    let z = f.zero_elem().clone();
    let qd: BigUint = z.order().pow(d as u32);
    let e = (qd - 1u32) >> 1;
    let one = Poly::one(&z);
    let mut k = 0;
    loop {
        let a = probe(&z, k, n);
        k += 1;
        if a.is_constant() {
            continue;
        }
        let g0 = a.gcd(&f);
        let g = if !g0.is_constant() && g0.deg() < f.deg() {
            g0
        } else {
            a.powmod(&e, &f).sub(&one).gcd(&f)
        };
        if !g.is_constant() && g.deg() < f.deg() {
            let h = f.div_exact(&g).unwrap();
            let mut out = equal_degree_split(&g, d);
            out.extend(equal_degree_split(&h, d));
            return out;
        }
    }
}

/// `p`-th root of a polynomial whose derivative vanishes.
fn pth_root<F: FiniteField>(f: &Poly<F>) -> Poly<F> {
    let z = f.zero_elem();
    let p = z.characteristic() as usize;
    let m = z.degree();
    let cs: Vec<F> = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| {
            // a^(p^(m-1)) is the p-th root of a in F_{p^m}
            let mut r = c.clone();
            for _ in 1..m {
                r = r.frobenius();
            }
            r
        })
        .collect();
    Poly::new(cs, z.clone())
}

/// Squarefree factorization over a finite field: `(g_i, i)` with
/// `f = lc * prod g_i^i`, `g_i` squarefree and pairwise coprime.
pub fn squarefree_factorization<F: FiniteField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    sff_into(&f.monic(), 1, &mut out);
    out.sort_by_key(|(_, i)| *i);
    // merge equal multiplicities
    let mut merged: Vec<(Poly<F>, usize)> = Vec::new();
    for (g, i) in out {
        match merged.last_mut() {
            Some((h, j)) if *j == i => *h = h.mul(&g),
            _ => merged.push((g, i)),
        }
    }
    merged
}

fn sff_into<F: FiniteField>(f: &Poly<F>, scale: usize, out: &mut Vec<(Poly<F>, usize)>) {
    if f.is_constant() {
        return;
    }
    let p = f.zero_elem().characteristic() as usize;
    let d = f.derivative();
    if d.is_zero() {
        sff_into(&pth_root(f), scale * p, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c).unwrap();
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y).unwrap();
        if !fac.is_constant() {
            out.push((fac, i * scale));
        }
        w = y;
        c = c.div_exact(&w).unwrap();
        i += 1;
    }
    if !c.is_constant() {
        sff_into(&pth_root(&c), scale * p, out);
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients).
pub fn factor_finite<F: FiniteField>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    for (g, mult) in squarefree_factorization(f) {
        for (h, d) in distinct_degree_factorization(&g) {
            for irr in equal_degree_split(&h, d) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.deg().cmp(&b.deg()).then_with(|| {
            let ka: Vec<Vec<u64>> = a.coeffs().iter().map(|c| c.coords()).collect();
            let kb: Vec<Vec<u64>> = b.coeffs().iter().map(|c| c.coords()).collect();
            ka.cmp(&kb)
        })
    });
    out
}

/// Roots lying in the coefficient field, with multiplicities, sorted by
/// coordinate vector.
pub fn roots_in_field<F: FiniteField>(f: &Poly<F>) -> Vec<(F, usize)> {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    let mut out: Vec<(F, usize)> = Vec::new();
    for (g, mult) in squarefree_factorization(f) {
        let x = Poly::x(g.zero_elem());
        let lin = x.powmod(&g.zero_elem().order(), &g).sub(&x).gcd(&g);
        if lin.is_constant() {
            continue;
        }
        for l in equal_degree_split(&lin, 1) {
            out.push((l.coeff(0).neg(), mult));
        }
    }
    out.sort_by_key(|(r, _)| r.coords());
    out
}

/// Degree of the splitting field of `f` over its coefficient field.
pub fn splitting_degree<F: FiniteField>(f: &Poly<F>) -> usize {
    let mut m = 1u64;
    for (g, _) in squarefree_factorization(f) {
        for (_, d) in distinct_degree_factorization(&g) {
            m = lcm_u64(m, d as u64);
        }
    }
    m as usize
}

/// A root in a splitting field, tagged with the degree over `F_p` of the
/// smallest field containing it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Root {
    #[serde(serialize_with = "super::serial::ser_fq")]
    pub value: Fq,
    pub multiplicity: usize,
    pub degree: usize,
}

fn tag_roots(f: &Poly<Fq>) -> Vec<Root> {
    roots_in_field(f)
        .into_iter()
        .map(|(value, multiplicity)| {
            let degree = value.field_of_definition_degree();
            Root {
                value,
                multiplicity,
                degree,
            }
        })
        .collect()
}

/// All roots of `f` over `F_p`, in the smallest extension `F_{p^m}` where it
/// splits.
pub fn roots_in_splitting_field(f: &Poly<Fp>) -> Result<(ExtField, Vec<Root>)> {
    if f.is_zero() {
        return Err(Error::Precondition("roots of the zero polynomial".into()));
    }
    let m = splitting_degree(f);
    let p = f.zero_elem().modulus();
    let field =
        ExtField::new(p, m).map_err(|_| Error::Unsupported(format!("splitting degree {m}")))?;
    let g = f.map(|c| field.from_fp(c), field.zero());
    Ok((field.clone(), tag_roots(&g)))
}

/// Embedding of `small` into `big` (requires `deg small | deg big`): the
/// generator goes to the first root, in coordinate order, of the modulus of
/// `small`.
pub fn embedding(small: &ExtField, big: &ExtField) -> Result<impl Fn(&Fq) -> Fq> {
    if small.p() != big.p() || !big.degree().is_multiple_of(small.degree()) {
        return Err(Error::Precondition(
            "no embedding between these fields".into(),
        ));
    }
    let modulus = small.modulus().map(|c| big.from_fp(c), big.zero());
    let theta = roots_in_field(&modulus)
        .into_iter()
        .next()
        .map(|(r, _)| r)
        .ok_or_else(|| Error::Internal("modulus has no root in the larger field".into()))?;
    let big = big.clone();
    Ok(move |a: &Fq| {
        let mut acc = big.zero();
        for c in a.coords().iter().rev() {
            acc = acc.mul(&theta).add(&big.from_u64(*c));
        }
        acc
    })
}

/// Roots of `f` over an extension field `K`, in the smallest extension of
/// `K` where it splits, together with the embedding of `K`.
pub fn roots_in_splitting_field_ext(f: &Poly<Fq>) -> Result<(ExtField, Vec<Root>)> {
    if f.is_zero() {
        return Err(Error::Precondition("roots of the zero polynomial".into()));
    }
    let k = f.zero_elem().field();
    let m = k.degree() * splitting_degree(f);
    let big =
        ExtField::new(k.p(), m).map_err(|_| Error::Unsupported(format!("splitting degree {m}")))?;
    let emb = embedding(&k, &big)?;
    let g = f.map(&emb, big.zero());
    Ok((big.clone(), tag_roots(&g)))
}
