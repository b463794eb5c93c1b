//! The q-analogue `∏_{j<k} ∏_i [d_i + h + 2j]_q / [d_i + 2j]_q` and
//! fixed-point tables of Θ.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::theta::theta_on_word;
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::subword::SubwordComplex;

/// Outcome of the q-product: an integer polynomial (coefficients from
/// `q⁰` upward) or a quotient that is not a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CspPolynomial {
    Polynomial { coefficients: Vec<i128> },
    /// Cyclotomic factors `Φ_d` left with negative multiplicity.
    NotPolynomial { missing_cyclotomic: Vec<(usize, i64)> },
}

impl CspPolynomial {
    pub fn coefficients(&self) -> Option<&[i128]> {
        match self {
            CspPolynomial::Polynomial { coefficients } => Some(coefficients),
            CspPolynomial::NotPolynomial { .. } => None,
        }
    }

    pub fn eval(&self, z: Complex64) -> Option<Complex64> {
        let c = self.coefficients()?;
        Some(c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a as f64))
    }

    pub fn value_at_one(&self) -> Option<i128> {
        self.coefficients().map(|c| c.iter().sum())
    }
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

fn poly_mul(a: &[i128], b: &[i128]) -> Result<Vec<i128>> {
    let overflow = || Error::ResourceLimit { what: "CSP polynomial coefficient size".into(), limit: 127 };
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let t = x.checked_mul(y).ok_or_else(overflow)?;
            out[i + j] = out[i + j].checked_add(t).ok_or_else(overflow)?;
        }
    }
    Ok(out)
}

/// Exact division by a monic polynomial; `None` if there is a remainder.
fn poly_div_monic(num: &[i128], den: &[i128]) -> Option<Vec<i128>> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return rem.iter().all(|&x| x == 0).then(Vec::new);
    }
    let mut quot = vec![0i128; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    rem.iter().all(|&x| x == 0).then_some(quot)
}

/// Cyclotomic polynomials `Φ_1 … Φ_max`.
fn cyclotomics(max: usize) -> Vec<Vec<i128>> {
    let mut phi: Vec<Vec<i128>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        // q^n − 1 divided by Φ_d for proper divisors d
        let mut p = vec![0i128; n + 1];
        p[0] = -1;
        p[n] = 1;
        for d in divisors(n).filter(|&d| d < n) {
            p = poly_div_monic(&p, &phi[d]).expect("cyclotomic division is exact");
        }
        phi[n] = p;
    }
    phi
}

pub fn csp_polynomial(sys: &CoxeterSystem, k: usize) -> Result<CspPolynomial> {
    let h = sys.coxeter_number();
    // multiplicity of Φ_d in numerator minus denominator; [n]_q = ∏_{d|n, d>1} Φ_d
    let mut mult: BTreeMap<usize, i64> = BTreeMap::new();
    for j in 0..k {
        for &d in sys.degrees() {
            for e in divisors(d + h + 2 * j).filter(|&e| e > 1) {
                *mult.entry(e).or_default() += 1;
            }
            for e in divisors(d + 2 * j).filter(|&e| e > 1) {
                *mult.entry(e).or_default() -= 1;
            }
        }
    }
    let missing: Vec<(usize, i64)> = mult.iter().filter(|(_, &v)| v < 0).map(|(&d, &v)| (d, v)).collect();
    if !missing.is_empty() {
        return Ok(CspPolynomial::NotPolynomial { missing_cyclotomic: missing });
    }
    let max = mult.keys().copied().max().unwrap_or(1);
    let phi = cyclotomics(max);
    let mut poly = vec![1i128];
    for (&d, &e) in &mult {
        for _ in 0..e {
            poly = poly_mul(&poly, &phi[d])?;
        }
    }
    Ok(CspPolynomial::Polynomial { coefficients: poly })
}

/// One row of a cyclic sieving check.
#[derive(Clone, Debug, Serialize)]
pub struct SievingRow {
    pub d: usize,
    pub fixed_facets: usize,
    /// `f(ζ^d)` rounded, when `f` exists and the value is within tolerance
    /// of a real integer.
    pub polynomial_value: Option<i64>,
    pub matches: bool,
}

/// For the cyclic group of order `2k + h` acting through `Θ^d`, the number
/// of facets fixed by `Θ^d` against `f(e^{2πi d/(2k+h)})`.
pub fn fixed_point_table(
    sys: &CoxeterSystem,
    complex: &SubwordComplex,
    k: usize,
    poly: &CspPolynomial,
) -> Vec<SievingRow> {
    let order = 2 * k + sys.coxeter_number();
    let perm = theta_on_word(sys, complex.word());
    let mut power: Vec<usize> = (0..perm.len()).collect();
    (0..order)
        .map(|d| {
            let fixed = complex
                .facets()
                .iter()
                .filter(|f| f.iter().map(|p| power[p]).collect::<crate::subword::PositionSet>() == **f)
                .count();
            power = power.iter().map(|&p| perm[p]).collect();
            let z = Complex64::from_polar(1.0, 2.0 * PI * d as f64 / order as f64);
            let value = poly.eval(z).and_then(|v| {
                let r = v.re.round();
                ((v.re - r).abs() < 1e-9 && v.im.abs() < 1e-9).then_some(r as i64)
            });
            SievingRow { d, fixed_facets: fixed, polynomial_value: value, matches: value == Some(fixed as i64) }
        })
        .collect()
}
