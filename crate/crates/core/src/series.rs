//! Truncated complex power series.
//!
//! A [`Series`] of order `n` carries the coefficients of `1, z, ..., z^n`;
//! every operation truncates at that degree and never looks past it.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient magnitudes below this count as zero in normalization checks.
const NORMALIZATION_TOL: f64 = 1e-12;

/// Default truncation degree: enough for `a2, a3, a4`.
pub const DEFAULT_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    coeffs: Vec<Complex64>,
}

impl Series {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Complex64::new(0.0, 0.0); order + 1] }
    }

    /// The constant `1` truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// The identity `z` truncated at `order` (`order >= 1`).
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Complex64::new(1.0, 0.0);
        }
        s
    }

    /// Builds a series of the given order from leading coefficients,
    /// zero-padding or dropping to fit.
    pub fn from_coeffs(coeffs: &[Complex64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (dst, src) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = *src;
        }
        s
    }

    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_coeffs(&c, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero above the truncation degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Series { coeffs })
    }

    pub fn scale(&self, k: Complex64) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Series) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == Complex64::default() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// `outer(inner(z))`, evaluated by Horner's scheme in the series ring.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        self.check_order(inner)?;
        if inner.coeffs[0].norm() > NORMALIZATION_TOL {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut acc = Series::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    fn check_normalized(&self) -> Result<()> {
        let one = Complex64::new(1.0, 0.0);
        if self.order() < 1
            || self.coeffs[0].norm() > NORMALIZATION_TOL
            || (self.coeffs[1] - one).norm() > NORMALIZATION_TOL
        {
            return Err(Error::NotNormalized);
        }
        Ok(())
    }

    /// `log(f(z)/z)` for a normalized `f = z + a2 z^2 + ...`.
    ///
    /// `f/z` is only known through degree `order - 1`, so the result has
    /// order `order - 1`.
    pub fn log_div_z(&self) -> Result<Series> {
        self.check_normalized()?;
        let m = self.order() - 1;
        // g = f/z with g0 = 1; n L_n = n g_n - sum_{k=1}^{n-1} k L_k g_{n-k}
        let g: Vec<Complex64> = self.coeffs[1..].to_vec();
        let mut log = Series::zero(m);
        for n in 1..=m {
            let mut acc = g[n] * n as f64;
            for k in 1..n {
                acc -= log.coeffs[k] * g[n - k] * k as f64;
            }
            log.coeffs[n] = acc / n as f64;
        }
        Ok(log)
    }

    /// Compositional inverse `g` with `f(g(w)) = w` through the truncation
    /// degree.
    pub fn revert(&self) -> Result<Series> {
        self.check_normalized()?;
        let n = self.order();
        let mut g = Series::identity(n);
        // The w^k coefficient of f(g) is b_k plus terms in b_2..b_{k-1}.
        for k in 2..=n {
            let fg = self.compose(&g)?;
            g.coeffs[k] = -fg.coeffs[k];
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(a: &Series, b: &Series, tol: f64) {
        assert_eq!(a.order(), b.order());
        for (k, (x, y)) in a.coeffs().iter().zip(b.coeffs()).enumerate() {
            assert!((x - y).norm() <= tol, "z^{k}: {x} vs {y}");
        }
    }

    #[test]
    fn difference_of_squares() {
        let a = Series::from_real(&[1.0, 1.0], 3);
        let b = Series::from_real(&[1.0, -1.0], 3);
        assert_eq!(a.mul(&b).unwrap(), Series::from_real(&[1.0, 0.0, -1.0], 3));
    }

    #[test]
    fn mul_by_one() {
        let a = Series::from_coeffs(&[c(1.0, 2.0), c(0.5, -1.0), c(3.0, 0.0)], 4);
        assert_eq!(a.mul(&Series::one(4)).unwrap(), a);
    }

    #[test]
    fn mul_cross_term_hand_expansion() {
        // (1+2z+2z^2+2z^3)(z-iz^2) = z + (2-i)z^2 + (2-2i)z^3
        let a = Series::from_real(&[1.0, 2.0, 2.0, 2.0], 3);
        let b = Series::from_coeffs(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, -1.0)], 3);
        let p = a.mul(&b).unwrap();
        let want = Series::from_coeffs(&[c(0.0, 0.0), c(1.0, 0.0), c(2.0, -1.0), c(2.0, -2.0)], 3);
        assert_close(&p, &want, 1e-15);
        assert_close(&b.mul(&a).unwrap(), &p, 1e-15);
    }

    #[test]
    fn mismatched_orders() {
        let a = Series::one(3);
        let b = Series::one(4);
        assert!(matches!(a.mul(&b), Err(Error::OrderMismatch { left: 3, right: 4 })));
        assert!(a.compose(&b).is_err());
    }

    #[test]
    fn compose_identity_inner() {
        let outer = Series::from_real(&[1.0, 2.0, 2.0, 2.0], 3);
        assert_eq!(outer.compose(&Series::identity(3)).unwrap(), outer);
    }

    #[test]
    fn compose_symbolic_low_terms() {
        let outer = Series::from_real(&[1.0, 2.0, 2.0, 2.0], 3);
        let (c1, c2, c3) = (c(0.3, -0.2), c(-0.1, 0.4), c(0.25, 0.05));
        let inner = Series::from_coeffs(&[c(0.0, 0.0), c1, c2, c3], 3);
        let r = outer.compose(&inner).unwrap();
        assert!((r.coeff(1) - 2.0 * c1).norm() < 1e-15);
        assert!((r.coeff(2) - (2.0 * c2 + 2.0 * c1 * c1)).norm() < 1e-15);
    }

    #[test]
    fn compose_exp_of_iz() {
        let exp = Series::from_real(&[1.0, 1.0, 0.5, 1.0 / 6.0], 3);
        let iz = Series::from_coeffs(&[c(0.0, 0.0), c(0.0, 1.0)], 3);
        let r = exp.compose(&iz).unwrap();
        let want = Series::from_coeffs(&[c(1.0, 0.0), c(0.0, 1.0), c(-0.5, 0.0), c(0.0, -1.0 / 6.0)], 3);
        assert_close(&r, &want, 1e-15);
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let outer = Series::one(3);
        let inner = Series::one(3);
        assert!(matches!(outer.compose(&inner), Err(Error::NonzeroConstantTerm)));
    }

    #[test]
    fn log_of_identity_is_zero() {
        let r = Series::identity(4).log_div_z().unwrap();
        assert_eq!(r, Series::zero(3));
    }

    #[test]
    fn log_of_koebe() {
        // -2 log(1 - z) = 2z + z^2 + (2/3) z^3 + ...
        let f = Series::from_real(&[0.0, 1.0, 2.0, 3.0, 4.0], 4);
        let r = f.log_div_z().unwrap();
        assert_close(&r, &Series::from_real(&[0.0, 2.0, 1.0, 2.0 / 3.0], 3), 1e-15);
    }

    #[test]
    fn log_rejects_unnormalized() {
        let f = Series::from_real(&[0.0, 2.0, 1.0], 2);
        assert!(matches!(f.log_div_z(), Err(Error::NotNormalized)));
        let g = Series::from_real(&[1.0, 1.0], 2);
        assert!(matches!(g.revert(), Err(Error::NotNormalized)));
    }

    #[test]
    fn revert_identity() {
        assert_eq!(Series::identity(4).revert().unwrap(), Series::identity(4));
    }

    #[test]
    fn revert_koebe() {
        let f = Series::from_real(&[0.0, 1.0, 2.0, 3.0, 4.0], 4);
        let g = f.revert().unwrap();
        assert_close(&g, &Series::from_real(&[0.0, 1.0, -2.0, 5.0, -14.0], 4), 1e-13);
    }
}
