//! JSON forms: polynomials are arrays of coefficient strings (index =
//! degree); standalone finite-field elements are `{"p", "degree", "coeffs"}`.

use super::{FiniteField, Fp, Fq, Poly, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;
use serde_json::{json, Value};

/// Coefficient types with a JSON string form.
pub trait CoeffString {
    fn coeff_string(&self) -> String;
}

impl CoeffString for BigInt {
    fn coeff_string(&self) -> String {
        self.to_string()
    }
}

impl CoeffString for BigRational {
    fn coeff_string(&self) -> String {
        self.to_string()
    }
}

impl CoeffString for Fp {
    fn coeff_string(&self) -> String {
        self.value().to_string()
    }
}

impl CoeffString for Fq {
    fn coeff_string(&self) -> String {
        let c = self.coords();
        if c.len() == 1 || self.in_prime_field() {
            c[0].to_string()
        } else {
            format!(
                "[{}]",
                c.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        }
    }
}

pub fn poly_json<R: Ring + CoeffString>(p: &Poly<R>) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.coeff_string()))
            .collect(),
    )
}

pub fn fp_json(a: &Fp) -> Value {
    json!({"p": a.modulus().to_string(), "degree": 1, "coeffs": [a.value().to_string()]})
}

pub fn fq_json(a: &Fq) -> Value {
    json!({
        "p": a.p().to_string(),
        "degree": a.coords().len(),
        "coeffs": a.coords().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

/// Field descriptor `{"p", "degree"}` (`p = "0"` for `Q`).
pub fn field_json(p: u64, degree: usize) -> Value {
    json!({"p": p.to_string(), "degree": degree})
}

pub(crate) fn ser_fq<S: Serializer>(a: &Fq, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&fq_json(a), s)
}

/// Human-readable `x^2 - 3*x + 1` (highest degree first).
pub fn render_poly<R: Ring + CoeffString>(f: &Poly<R>, var: &str) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let s = c.coeff_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        let term = match i {
            0 => mag,
            _ => {
                let v = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if mag == "1" {
                    v
                } else {
                    format!("{mag}*{v}")
                }
            }
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push_str(&format!("-{term}")),
            (true, false) => out.push_str(&term),
            (false, true) => out.push_str(&format!(" - {term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
        }
    }
    out
}
