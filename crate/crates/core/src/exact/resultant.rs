use super::fp::invmod;
use super::{factor::is_prime_u64, Field, Fp, Poly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

/// Resultant over a field by the Euclidean algorithm.
pub fn resultant<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Result<F> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Precondition("resultant of a zero polynomial".into()));
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = a.lead().one_like();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            return Ok(acc.mul(&b.lead().pow(da as u64)));
        }
        if da == 0 {
            return Ok(acc.mul(&a.lead().pow(db as u64)));
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(acc.zero_like());
        }
        let dr = r.degree().unwrap();
        // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        let mut f = b.lead().pow((da - dr) as u64);
        if da % 2 == 1 && db % 2 == 1 {
            f = f.neg();
        }
        acc = acc.mul(&f);
        a = b;
        b = r;
    }
}

/// Discriminant `(-1)^(n(n-1)/2) Res_{n,n-1}(f, f') / lc(f)`, with the
/// formal degree `n - 1` for `f'` (relevant when the characteristic divides
/// `n`).
pub fn discriminant<F: Field>(f: &Poly<F>) -> Result<F> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::Precondition("discriminant needs degree >= 2".into())),
    };
    let d = f.derivative();
    if d.is_zero() {
        return Ok(f.lead().zero_like());
    }
    let dd = d.degree().unwrap();
    let r = resultant(f, &d)?.mul(&f.lead().pow((n - 1 - dd) as u64));
    let r = if (n * (n - 1) / 2) % 2 == 1 {
        r.neg()
    } else {
        r
    };
    Ok(r.div(f.lead()).unwrap())
}

/// Resultant over `Z` by the subresultant PRS (fraction-free).
pub fn resultant_subresultant(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Precondition("resultant of a zero polynomial".into()));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut s = BigInt::one();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
    }
    if b.deg() == 0 {
        return Ok(s * b.lead().pow(a.deg() as u32));
    }
    let ca = a.content();
    let cb = b.content();
    let t = ca.pow(b.deg() as u32) * cb.pow(a.deg() as u32);
    a = Poly::new(a.coeffs().iter().map(|c| c / &ca).collect(), BigInt::zero());
    b = Poly::new(b.coeffs().iter().map(|c| c / &cb).collect(), BigInt::zero());
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.deg() - b.deg()) as u32;
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        let (_, r) = a.pseudo_divrem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        let div = &g * h.pow(delta);
        b = Poly::new(
            r.coeffs().iter().map(|c| c / &div).collect(),
            BigInt::zero(),
        );
        g = a.lead().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            g.pow(delta) / h.pow(delta - 1)
        };
        if b.deg() == 0 {
            let da = a.deg() as u32;
            let hf = b.lead().pow(da) / h.pow(da - 1);
            return Ok(s * t * hf);
        }
    }
}

/// log2 of the Hadamard bound `|res(a, b)| <= |a|_2^deg(b) |b|_2^deg(a)`.
fn hadamard_bits(a: &Poly<BigInt>, b: &Poly<BigInt>) -> u64 {
    let norm_bits = |p: &Poly<BigInt>| -> f64 {
        let sum: BigInt = p.coeffs().iter().map(|c| c * c).sum();
        (sum.bits() as f64) / 2.0 + 0.5
    };
    let da = a.deg() as f64;
    let db = b.deg() as f64;
    (db * norm_bits(a) + da * norm_bits(b)).ceil() as u64 + 2
}

/// Resultant over `Z` by reduction modulo word-size primes and Chinese
/// remaindering, with enough primes to exceed twice the Hadamard bound.
pub fn resultant_modular(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Precondition("resultant of a zero polynomial".into()));
    }
    let need = hadamard_bits(a, b) + 1;
    let lcs = a.lead() * b.lead();
    let mut primes = Vec::new();
    let mut bits = 0.0f64;
    let mut p: u64 = (1u64 << 62) - 1;
    while bits < need as f64 {
        p -= 2;
        while !is_prime_u64(p) {
            p -= 2;
        }
        if Zero::is_zero(&(&lcs % p)) {
            continue;
        }
        bits += (p as f64).log2();
        primes.push(p);
    }
    let residues: Vec<u64> = primes
        .par_iter()
        .map(|&p| {
            let z = Fp::new(0, p);
            let ap = a.map(|c| Fp::from_bigint(c, p), z);
            let bp = b.map(|c| Fp::from_bigint(c, p), z);
            resultant(&ap, &bp).expect("degrees preserved").value()
        })
        .collect();
    Ok(crt_symmetric(&residues, &primes))
}

/// Garner reconstruction into the symmetric range around zero.
pub fn crt_symmetric(residues: &[u64], primes: &[u64]) -> BigInt {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (&r, &p) in residues.iter().zip(primes) {
        let xm = x.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let mm = m.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let diff = (r as u128 + p as u128 - xm as u128) % p as u128;
        let c = (diff * invmod(mm, p).unwrap() as u128 % p as u128) as u64;
        x += &m * c;
        m *= p;
    }
    if &x * 2 > m {
        x -= &m;
    }
    x
}

/// Resultant over `Z`: the modular algorithm, which for the sizes arising
/// here is far faster than the PRS; both agree (see tests).
pub fn resultant_z(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Result<BigInt> {
    if a.deg() * b.deg() <= 64 {
        resultant_subresultant(a, b)
    } else {
        resultant_modular(a, b)
    }
}

/// Discriminant over `Z`.
pub fn discriminant_z(f: &Poly<BigInt>) -> Result<BigInt> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::Precondition("discriminant needs degree >= 2".into())),
    };
    let r = resultant_z(f, &f.derivative())?;
    let r = if (n * (n - 1) / 2) % 2 == 1 { -r } else { r };
    debug_assert!(Zero::is_zero(&(&r % f.lead())));
    Ok(r / f.lead())
}
