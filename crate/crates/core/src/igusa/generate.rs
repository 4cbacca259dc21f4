//! Generator for the coefficient formulas of I2, I4, I6, I10.
//!
//! Each invariant is a root-difference orbit sum. It is a polynomial in the
//! sextic's coefficients a0..a6, homogeneous of degree d and isobaric of
//! weight 3d. The generator enumerates those monomials, evaluates the
//! orbit sum at random split sextics modulo two 61-bit primes, solves the
//! resulting linear systems, and lifts the solution to integers by CRT.
//! The lifted formula is then checked over Z against the orbit sums at
//! integer-rooted sextics. The output is `formulas.rs`.

use crate::exact::{is_prime_u64, Fp, Ring};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt::Write;

/// Sorted edge list on the six roots, indices 0..6.
pub type EdgeSet = Vec<(usize, usize)>;

/// A generated formula: `(coefficient, exponents of a0..a6)`.
pub type Formula = Vec<(i64, [u8; 7])>;

fn base_pattern(name: &str) -> EdgeSet {
    let e = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| (a - 1, b - 1)).collect::<Vec<_>>();
    match name {
        "I2" => e(&[(1, 2), (3, 4), (5, 6)]),
        "I4" => e(&[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]),
        "I6" => e(&[
            (1, 2),
            (2, 3),
            (3, 1),
            (4, 5),
            (5, 6),
            (6, 4),
            (1, 4),
            (2, 5),
            (3, 6),
        ]),
        "I10" => (0..6)
            .flat_map(|i| ((i + 1)..6).map(move |j| (i, j)))
            .collect(),
        _ => panic!("unknown invariant {name}"),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The S6-orbit of the invariant's defining edge pattern.
pub fn orbit(name: &str) -> Vec<EdgeSet> {
    let base = base_pattern(name);
    let mut seen = BTreeSet::new();
    for perm in permutations(6) {
        let mut img: EdgeSet = base
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        img.sort_unstable();
        seen.insert(img);
    }
    seen.into_iter().collect()
}

/// Weighted degree: I_{2k} has degree 2k in the coefficients.
pub fn invariant_degree(name: &str) -> usize {
    match name {
        "I2" => 2,
        "I4" => 4,
        "I6" => 6,
        "I10" => 10,
        _ => panic!("unknown invariant {name}"),
    }
}

/// Monomials of degree `d` and weight `3d` in a0..a6.
pub fn monomials(d: usize) -> Vec<[u8; 7]> {
    fn rec(i: usize, left: usize, w: usize, d: usize, cur: &mut [u8; 7], out: &mut Vec<[u8; 7]>) {
        if i == 7 {
            if left == 0 && w == 3 * d {
                out.push(*cur);
            }
            return;
        }
        for e in 0..=left {
            cur[i] = e as u8;
            rec(i + 1, left - e, w + i * e, d, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, 0, d, &mut [0; 7], &mut out);
    out
}

/// Orbit sum `lead^d * sum prod (r_i - r_j)^2` over any ring.
pub fn orbit_sum<R: Ring>(orbit: &[EdgeSet], d: usize, lead: &R, roots: &[R; 6]) -> R {
    let mut acc = lead.zero_like();
    for edges in orbit {
        let mut term = lead.one_like();
        for &(i, j) in edges {
            let diff = roots[i].sub(&roots[j]);
            term = term.mul(&diff.mul(&diff));
        }
        acc = acc.add(&term);
    }
    acc.mul(&lead.pow(d as u64))
}

/// Coefficients a0..a6 of `lead * prod (x - r_i)`.
pub fn coefficients_from_roots<R: Ring>(lead: &R, roots: &[R; 6]) -> [R; 7] {
    let mut c: Vec<R> = vec![lead.clone()];
    for r in roots {
        let mut next = vec![lead.zero_like(); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k + 1] = next[k + 1].add(ck);
            next[k] = next[k].sub(&ck.mul(r));
        }
        c = next;
    }
    std::array::from_fn(|i| c[i].clone())
}

fn monomial_value<R: Ring>(e: &[u8; 7], a: &[R; 7]) -> R {
    let mut v = a[0].one_like();
    for i in 0..7 {
        if e[i] > 0 {
            v = v.mul(&a[i].pow(e[i] as u64));
        }
    }
    v
}

/// Solve `M x = b` modulo `p` (M has at least as many rows as columns and
/// full column rank); `None` if singular or inconsistent.
fn solve_mod(mut m: Vec<Vec<Fp>>, mut b: Vec<Fp>) -> Option<Vec<Fp>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let piv = (r..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, piv);
        b.swap(r, piv);
        let inv = crate::exact::Field::inv(&m[r][c]).unwrap();
        for k in c..cols {
            m[r][k] = m[r][k].mul(&inv);
        }
        b[r] = b[r].mul(&inv);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for k in c..cols {
                    let t = m[r][k].mul(&f);
                    m[i][k] = m[i][k].sub(&t);
                }
                let t = b[r].mul(&f);
                b[i] = b[i].sub(&t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(b[..cols].to_vec())
}

fn solve_for_prime(name: &str, p: u64, seed: u64) -> Vec<Fp> {
    let d = invariant_degree(name);
    let orb = orbit(name);
    let mons = monomials(d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = mons.len() + 12;
    let mut m = Vec::with_capacity(rows);
    let mut b = Vec::with_capacity(rows);
    for _ in 0..rows {
        let lead = Fp::new(rng.gen_range(1..p), p);
        let roots: [Fp; 6] = std::array::from_fn(|_| Fp::new(rng.gen_range(0..p), p));
        let a = coefficients_from_roots(&lead, &roots);
        m.push(mons.iter().map(|e| monomial_value(e, &a)).collect());
        b.push(orbit_sum(&orb, d, &lead, &roots));
    }
    solve_mod(m, b).expect("interpolation system is singular or inconsistent")
}

/// Generate the integer formula for one invariant.
pub fn generate(name: &str) -> Formula {
    let mons = monomials(invariant_degree(name));
    let mut p1 = (1u64 << 61) - 1;
    while !is_prime_u64(p1) {
        p1 -= 2;
    }
    let mut p2 = p1 - 2;
    while !is_prime_u64(p2) {
        p2 -= 2;
    }
    let s1 = solve_for_prime(name, p1, 0x1605);
    let s2 = solve_for_prime(name, p2, 0x2605);
    let mut out = Vec::new();
    for (k, e) in mons.iter().enumerate() {
        let c = crate::exact::crt_symmetric(&[s1[k].value(), s2[k].value()], &[p1, p2]);
        if Zero::is_zero(&c) {
            continue;
        }
        let c = c.to_i64().expect("formula coefficient exceeds i64");
        out.push((c, *e));
    }
    verify_over_z(name, &out);
    out
}

/// Exact check of a formula against the orbit sum at integer-rooted sextics.
pub fn verify_over_z(name: &str, formula: &Formula) {
    let d = invariant_degree(name);
    let orb = orbit(name);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..12 {
        let lead = BigInt::from(rng.gen_range(1..40i64) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let roots: [BigInt; 6] = std::array::from_fn(|_| BigInt::from(rng.gen_range(-60..60i64)));
        let a = coefficients_from_roots(&lead, &roots);
        let want = orbit_sum(&orb, d, &lead, &roots);
        let got = super::eval_formula(formula, &a);
        assert_eq!(got, want, "{name} formula disagrees with orbit sum");
    }
}

/// Rust source of `formulas.rs`.
pub fn render() -> String {
    let mut s = String::new();
    s.push_str("// @generated by `cargo run -p isojac --bin gen-igusa-formulas`; do not edit.\n");
    s.push_str("//! Igusa-Clebsch invariants as integer polynomials in the sextic\n");
    s.push_str("//! coefficients: each entry is (coefficient, exponents of a0..a6).\n\n");
    for name in ["I2", "I4", "I6", "I10"] {
        let f = generate(name);
        writeln!(s, "pub(crate) static {name}: &[(i64, [u8; 7])] = &[").unwrap();
        for (c, e) in &f {
            writeln!(s, "    ({c}, {e:?}),").unwrap();
        }
        s.push_str("];\n\n");
    }
    s.pop();
    s
}
