use super::fp::{mulmod, powmod};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};

/// Trial division bound.
pub const TRIAL_BOUND: u64 = 1_000_000;

/// Deterministic Miller-Rabin, correct for all `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin with the first 20 prime bases; exact below 2^64.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    let n = n.magnitude();
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let bases = [
        2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    'witness: for a in bases {
        if (n % a).is_zero() {
            return false;
        }
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn next_prime(mut n: u64) -> u64 {
    n += 1;
    while !is_prime_u64(n) {
        n += 1;
    }
    n
}

/// Primes below `bound` (sieve of Eratosthenes).
pub fn primes_below(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    let mut sieve = vec![true; n.max(2)];
    sieve[0] = false;
    if n > 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i < n {
        if sieve[i] {
            let mut j = i * i;
            while j < n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A nontrivial factor of composite odd `n < 2^64` (Brent's variant).
fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut steps = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            q = mulmod(q, x.abs_diff(y), n);
            steps += 1;
            if steps.is_multiple_of(64) {
                d = gcd_u64(q, n);
                if d == 0 || d == n {
                    break;
                }
            }
        }
        if d == 1 || d == 0 || d == n {
            // fall back to the unbatched walk for this constant
            let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
            while d == 1 {
                x = f(x);
                y = f(f(y));
                d = gcd_u64(x.abs_diff(y), n);
            }
            if d != n {
                return d;
            }
            continue;
        }
        return d;
    }
    unreachable!()
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

/// Factorization of a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub negative: bool,
    /// `(prime, exponent)` in increasing prime order.
    pub factors: Vec<(BigInt, u32)>,
    /// A cofactor above 2^64 that trial division and rho could not split.
    pub unfactored: Option<BigInt>,
}

impl Factorization {
    pub fn primes(&self) -> Vec<BigInt> {
        self.factors.iter().map(|(p, _)| p.clone()).collect()
    }
}

/// Trial division to 10^6, then Pollard rho on a cofactor below 2^64.
pub fn factor_integer(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::Precondition("cannot factor zero".into()));
    }
    let negative = n.sign() == Sign::Minus;
    let mut m = n.magnitude().clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for p in primes_below(TRIAL_BOUND) {
        if m.is_one() {
            break;
        }
        let pd = p as u32;
        let mut e = 0;
        while (&m % pd).is_zero() {
            m /= pd;
            e += 1;
        }
        if e > 0 {
            factors.push((BigInt::from(p), e));
        }
    }
    let mut unfactored = None;
    if !m.is_one() {
        if let Some(v) = m.to_u64() {
            let mut ps = Vec::new();
            factor_u64_into(v, &mut ps);
            ps.sort_unstable();
            for p in ps {
                match factors.last_mut() {
                    Some((q, e)) if *q == BigInt::from(p) => *e += 1,
                    _ => factors.push((BigInt::from(p), 1)),
                }
            }
        } else if is_probable_prime(&BigInt::from(m.clone())) {
            factors.push((BigInt::from(m), 1));
        } else {
            unfactored = Some(BigInt::from(m));
        }
    }
    factors.sort();
    Ok(Factorization {
        negative,
        factors,
        unfactored,
    })
}

/// Signed squarefree part: `n = d * m^2` with `d` squarefree.
pub fn squarefree_part_int(n: &BigInt) -> Result<BigInt> {
    let f = factor_integer(n)?;
    if f.unfactored.is_some() {
        return Err(Error::Unsupported("cofactor beyond factoring range".into()));
    }
    let mut d = BigInt::one();
    for (p, e) in &f.factors {
        if e % 2 == 1 {
            d *= p;
        }
    }
    Ok(if f.negative { -d } else { d })
}

/// Integer square root test helper used by point searches.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}
