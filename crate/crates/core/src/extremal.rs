//! Extremal functions `f_phi` (starlike, `z f'/f = phi(iz)`) and `h_phi`
//! (convex, `1 + z h''/h' = phi(iz)`), built by coefficient recursion.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::minda::{toeplitz, ClassKind, CoeffBundle, FunctionalKind, PhiSpec};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalCoeffs {
    pub class: ClassKind,
    pub phi: PhiSpec,
    /// `a[0] = a1 = 1`, `a[n-1] = a_n`.
    pub a: Vec<Complex64>,
}

impl ExtremalCoeffs {
    /// `a_n` (1-based, zero past the computed order).
    pub fn coeff(&self, n: usize) -> Complex64 {
        n.checked_sub(1).and_then(|i| self.a.get(i)).copied().unwrap_or_default()
    }

    pub fn bundle(&self) -> CoeffBundle {
        CoeffBundle::from_a(self.coeff(2), self.coeff(3), self.coeff(4))
    }
}

/// Coefficients `a1..=aN` of the extremal function (`N >= 2`; smaller
/// values are raised to 2), taking `B_k = 0` for `k > 3`.
pub fn extremal_coeffs(kind: ClassKind, phi: &PhiSpec, n: usize) -> ExtremalCoeffs {
    let mut e = extremal_coeffs_with_taylor(kind, &phi.as_array(), n);
    e.phi = *phi;
    e
}

/// Same recursion driven by a longer Taylor tail `taylor[k-1] = B_k`;
/// coefficients past the slice count as zero.
pub fn extremal_coeffs_with_taylor(kind: ClassKind, taylor: &[f64], n: usize) -> ExtremalCoeffs {
    let n = n.max(2);
    let b = |k: usize| taylor.get(k - 1).copied().unwrap_or(0.0);
    // i^k B_k
    let rotated_phi = |k: usize| Complex64::i().powu(k as u32) * b(k);
    let a = match kind {
        ClassKind::Starlike => {
            // (n-1) a_n = sum_{k=1}^{n-1} i^k B_k a_{n-k}
            let mut a = vec![Complex64::new(1.0, 0.0)];
            for m in 2..=n {
                let s: Complex64 = (1..m).map(|k| rotated_phi(k) * a[m - k - 1]).sum();
                a.push(s / (m - 1) as f64);
            }
            a
        }
        ClassKind::Convex => {
            // d = h', m d_m = sum_{k=1}^{m} i^k B_k d_{m-k}, a_n = d_{n-1} / n
            let mut d = vec![Complex64::new(1.0, 0.0)];
            for m in 1..n {
                let s: Complex64 = (1..=m).map(|k| rotated_phi(k) * d[m - k]).sum();
                d.push(s / m as f64);
            }
            d.iter().enumerate().map(|(j, dj)| dj / (j + 1) as f64).collect()
        }
    };
    let phi = PhiSpec { b1: b(1), b2: b(2), b3: b(3) };
    ExtremalCoeffs { class: kind, phi, a }
}

/// The functional evaluated at the extremal function.
pub fn attainment(functional: FunctionalKind, kind: ClassKind, phi: &PhiSpec) -> f64 {
    toeplitz(functional, &extremal_coeffs(kind, phi, 4).bundle())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn phi(b1: f64, b2: f64, b3: f64) -> PhiSpec {
        PhiSpec::new(b1, b2, b3).unwrap()
    }

    #[test]
    fn rotated_koebe() {
        let e = extremal_coeffs(ClassKind::Starlike, &phi(2.0, 2.0, 2.0), 4);
        assert_eq!(e.a, vec![c(1.0, 0.0), c(0.0, 2.0), c(-3.0, 0.0), c(0.0, -4.0)]);
    }

    #[test]
    fn truncated_tail_agrees_through_a4() {
        let short = extremal_coeffs(ClassKind::Starlike, &phi(2.0, 2.0, 2.0), 8);
        let long = extremal_coeffs_with_taylor(ClassKind::Starlike, &[2.0; 7], 8);
        assert_eq!(short.a[..4], long.a[..4]);
        assert_ne!(short.a[4], long.a[4]);
    }

    #[test]
    fn rotated_half_plane_map() {
        let e = extremal_coeffs(ClassKind::Convex, &phi(2.0, 2.0, 2.0), 3);
        assert_eq!(e.a, vec![c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)]);
    }

    #[test]
    fn second_coefficient() {
        let p = phi(0.7, -0.3, 1.9);
        assert_eq!(extremal_coeffs(ClassKind::Starlike, &p, 2).coeff(2), c(0.0, 0.7));
        assert_eq!(extremal_coeffs(ClassKind::Convex, &p, 2).coeff(2), c(0.0, 0.35));
    }

    #[test]
    fn attainment_examples() {
        let hp = phi(2.0, 2.0, 2.0);
        assert!((attainment(FunctionalKind::T21LogInv, ClassKind::Starlike, &hp) - 3.25).abs() < 1e-14);
        let exp = phi(1.0, 0.5, 1.0 / 6.0);
        assert!((attainment(FunctionalKind::T22Inv, ClassKind::Starlike, &exp) - 5869.0 / 1296.0).abs() < 1e-13);
        for f in FunctionalKind::ALL {
            for k in ClassKind::ALL {
                assert_eq!(attainment(f, k, &phi(0.0, 0.0, 0.0)), 0.0);
            }
        }
    }

    #[test]
    fn koebe_closed_form_to_order_eight() {
        // (1+z)/(1-z) has B_k = 2 for every k; the closed form needs the full tail.
        let e = extremal_coeffs_with_taylor(ClassKind::Starlike, &[2.0; 7], 8);
        for n in 1..=8usize {
            let want = Complex64::i().powu(n as u32 - 1) * n as f64;
            assert!((e.coeff(n) - want).norm() < 1e-12, "a_{n}");
        }
    }
}
