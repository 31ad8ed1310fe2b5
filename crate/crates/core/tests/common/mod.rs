#![allow(dead_code)]

use std::f64::consts::TAU;

use invtoep_core::schwarz::SchurParams;
use invtoep_core::Series;
use num_complex::Complex64;
use proptest::prelude::*;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `|a - b| <= tol * max(1, |b|)`
pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

pub fn close_f(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

pub fn complex(radius: f64) -> impl Strategy<Value = Complex64> {
    (-radius..=radius, -radius..=radius).prop_map(|(re, im)| c(re, im))
}

/// Schur parameters with each modulus in `[0, 1]`, a third of the time
/// pinned to the circle.
pub fn schur_params() -> impl Strategy<Value = SchurParams> {
    let modulus = prop_oneof![2 => 0.0..=1.0f64, 1 => Just(1.0)];
    let g = (modulus, 0.0..TAU).prop_map(|(r, t)| Complex64::from_polar(r, t));
    (g.clone(), g.clone(), g).prop_map(|(a, b, c)| SchurParams::new(a, b, c))
}

pub fn real_phi() -> impl Strategy<Value = [f64; 3]> {
    (0.0..=3.0f64, -3.0..=3.0f64, -3.0..=3.0f64).prop_map(|(a, b, c)| [a, b, c])
}

pub fn factorials(n: usize) -> Vec<f64> {
    let mut out = vec![1.0];
    for k in 1..=n {
        out.push(out[k - 1] * k as f64);
    }
    out
}

/// Taylor coefficients of `e^u` through `u^n`.
pub fn exp_taylor(n: usize) -> Vec<f64> {
    factorials(n).iter().map(|f| 1.0 / f).collect()
}

/// Taylor coefficients of `(1+u)^p` through `u^n`.
pub fn binomial_taylor(p: f64, n: usize) -> Vec<f64> {
    let mut out = vec![1.0];
    for k in 1..=n {
        out.push(out[k - 1] * (p - (k - 1) as f64) / k as f64);
    }
    out
}

/// `exp(s)` for `s` with zero constant term.
pub fn series_exp(s: &Series) -> Series {
    Series::from_real(&exp_taylor(s.order()), s.order()).compose(s).unwrap()
}

/// Multiplies by `z`, raising the order by one.
pub fn shift(s: &Series) -> Series {
    let mut coeffs = vec![Complex64::default()];
    coeffs.extend_from_slice(s.coeffs());
    Series::from_coeffs(&coeffs, s.order() + 1)
}
