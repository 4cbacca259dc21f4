//! Shared helpers for unit tests.

use crate::exact::{is_prime_u64, Fp, Poly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_prime(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> u64 {
    loop {
        let p = rng.gen_range(lo..hi) | 1;
        if p > 2 && is_prime_u64(p) {
            return p;
        }
    }
}

/// Random polynomial of exact degree `deg`; monic when `monic`.
pub fn random_poly(rng: &mut ChaCha8Rng, deg: usize, p: u64, monic: bool) -> Poly<Fp> {
    let mut cs: Vec<Fp> = (0..deg).map(|_| Fp::new(rng.gen_range(0..p), p)).collect();
    cs.push(Fp::new(if monic { 1 } else { rng.gen_range(1..p) }, p));
    Poly::new(cs, Fp::new(0, p))
}

pub fn pf(cs: &[i64], p: u64) -> Poly<Fp> {
    Poly::from_ints(cs, &Fp::new(0, p))
}
