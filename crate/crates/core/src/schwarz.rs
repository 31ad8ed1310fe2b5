//! The body of first three Taylor coefficients of Schwarz functions
//! `w(z) = c1 z + c2 z^2 + c3 z^3 + ...`, together with its Schur-parameter
//! description.
//!
//! Any `(gamma0, gamma1, gamma2)` in the closed polydisk maps onto an
//! admissible triple, and every admissible triple arises this way, so
//! sampling and local search run in the flat parameter box.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default slack for admissibility checks; extremal triples sit on the
/// constraint surface.
pub const DEFAULT_ADMISSIBILITY_TOL: f64 = 1e-12;

/// Moduli up to `1 + PARAM_SLACK` are accepted as unimodular.
const PARAM_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchurParams {
    pub gamma0: Complex64,
    pub gamma1: Complex64,
    pub gamma2: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchwarzTriple {
    pub c1: Complex64,
    pub c2: Complex64,
    pub c3: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleStrategy {
    /// Modulus and argument each uniform.
    UniformPolar,
    /// Each modulus lands in `[0.9, 1]` with probability 1/2.
    BoundaryBiased,
}

impl SchurParams {
    pub fn new(gamma0: Complex64, gamma1: Complex64, gamma2: Complex64) -> Self {
        Self { gamma0, gamma1, gamma2 }
    }

    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::new(z, z, z)
    }

    /// Builds parameters from moduli and arguments; moduli are clamped
    /// into `[0, 1]`.
    pub fn from_polar(radii: [f64; 3], angles: [f64; 3]) -> Self {
        let g = |k: usize| Complex64::from_polar(radii[k].clamp(0.0, 1.0), angles[k]);
        Self::new(g(0), g(1), g(2))
    }

    pub fn as_array(&self) -> [Complex64; 3] {
        [self.gamma0, self.gamma1, self.gamma2]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.gamma0.conj(), self.gamma1.conj(), self.gamma2.conj())
    }

    pub fn validate(&self) -> Result<()> {
        for (index, g) in self.as_array().iter().enumerate() {
            let modulus = g.norm();
            if modulus.is_nan() || modulus > 1.0 + PARAM_SLACK {
                return Err(Error::ParameterOutsideDisk { index, modulus });
            }
        }
        Ok(())
    }
}

impl SchwarzTriple {
    pub fn new(c1: Complex64, c2: Complex64, c3: Complex64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn zero() -> Self {
        SchurParams::zero().to_coeffs_unchecked()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.c1.conj(), self.c2.conj(), self.c3.conj())
    }
}

impl SchurParams {
    /// Forward Schur map without the disk check.
    ///
    /// `c1 = g0`, `c2 = (1-|g0|^2) g1`,
    /// `c3 = (1-|g0|^2) ((1-|g1|^2) g2 - conj(g0) g1^2)`.
    #[inline]
    pub fn to_coeffs_unchecked(&self) -> SchwarzTriple {
        let s0 = (1.0 - self.gamma0.norm_sqr()).max(0.0);
        let s1 = (1.0 - self.gamma1.norm_sqr()).max(0.0);
        let c1 = self.gamma0;
        let c2 = self.gamma1 * s0;
        let c3 = (self.gamma2 * s1 - self.gamma0.conj() * self.gamma1 * self.gamma1) * s0;
        SchwarzTriple { c1, c2, c3 }
    }
}

pub fn schur_to_coeffs(p: &SchurParams) -> Result<SchwarzTriple> {
    p.validate()?;
    Ok(p.to_coeffs_unchecked())
}

/// Checks `|c1| <= 1`, `|c2| <= 1 - |c1|^2` and
/// `|c3 (1-|c1|^2) + conj(c1) c2^2| <= (1-|c1|^2)^2 - |c2|^2`, each within `tol`.
pub fn is_admissible(t: &SchwarzTriple, tol: f64) -> bool {
    let s = 1.0 - t.c1.norm_sqr();
    if t.c1.norm().is_nan() || t.c1.norm() > 1.0 + tol {
        return false;
    }
    if t.c2.norm().is_nan() || t.c2.norm() > s + tol {
        return false;
    }
    let lhs = (t.c3 * s + t.c1.conj() * t.c2 * t.c2).norm();
    lhs <= s * s - t.c2.norm_sqr() + tol
}

/// Inverse of [`schur_to_coeffs`] in the interior `|c1| < 1`,
/// `|c2| < 1 - |c1|^2`.
pub fn recover_params(t: &SchwarzTriple) -> Result<SchurParams> {
    let s0 = 1.0 - t.c1.norm_sqr();
    if s0 <= 0.0 {
        return Err(Error::DegenerateRecovery);
    }
    let gamma1 = t.c2 / s0;
    let s1 = 1.0 - gamma1.norm_sqr();
    if s1 <= 0.0 {
        return Err(Error::DegenerateRecovery);
    }
    let gamma2 = (t.c3 / s0 + t.c1.conj() * gamma1 * gamma1) / s1;
    Ok(SchurParams::new(t.c1, gamma1, gamma2))
}

/// SplitMix64 finalizer; derives independent per-index seeds from a master
/// seed.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn sample_with<R: Rng + ?Sized>(rng: &mut R, strategy: SampleStrategy) -> SchurParams {
    let mut draw = || {
        let r = match strategy {
            SampleStrategy::UniformPolar => rng.random::<f64>(),
            SampleStrategy::BoundaryBiased => {
                if rng.random_bool(0.5) {
                    1.0 - 0.1 * rng.random::<f64>()
                } else {
                    rng.random::<f64>()
                }
            }
        };
        Complex64::from_polar(r, TAU * rng.random::<f64>())
    };
    let g0 = draw();
    let g1 = draw();
    let g2 = draw();
    SchurParams::new(g0, g1, g2)
}

/// Deterministic draw from `seed`.
pub fn sample(seed: u64, strategy: SampleStrategy) -> SchurParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(&mut rng, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_params() {
        assert_eq!(schur_to_coeffs(&SchurParams::zero()).unwrap(), SchwarzTriple::zero());
        assert_eq!(SchwarzTriple::zero().c3, c(0.0, 0.0));
    }

    #[test]
    fn unimodular_gamma0_freezes_tail() {
        let p = SchurParams::new(c(1.0, 0.0), c(0.3, 0.7), c(-0.5, 0.5));
        let t = schur_to_coeffs(&p).unwrap();
        assert_eq!(t, SchwarzTriple::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)));
    }

    #[test]
    fn rotation() {
        let p = SchurParams::new(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0));
        let t = schur_to_coeffs(&p).unwrap();
        assert_eq!(t, SchwarzTriple::new(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)));
    }

    #[test]
    fn outside_disk_rejected() {
        let p = SchurParams::new(c(0.0, 0.0), c(1.1, 0.0), c(0.0, 0.0));
        assert!(matches!(schur_to_coeffs(&p), Err(Error::ParameterOutsideDisk { index: 1, .. })));
        let nan = SchurParams::new(c(f64::NAN, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        assert!(schur_to_coeffs(&nan).is_err());
    }

    #[test]
    fn admissibility_boundary_cases() {
        assert!(is_admissible(&SchwarzTriple::zero(), DEFAULT_ADMISSIBILITY_TOL));
        let boundary = SchwarzTriple::new(c(0.5, 0.0), c(0.75, 0.0), c(-0.375, 0.0));
        assert!(is_admissible(&boundary, DEFAULT_ADMISSIBILITY_TOL));
        let off = SchwarzTriple::new(c(0.5, 0.0), c(0.75, 0.0), c(0.0, 0.0));
        assert!(!is_admissible(&off, DEFAULT_ADMISSIBILITY_TOL));
        assert!(!is_admissible(&SchwarzTriple::new(c(1.01, 0.0), c(0.0, 0.0), c(0.0, 0.0)), 1e-12));
        assert!(!is_admissible(&SchwarzTriple::new(c(0.0, 0.0), c(0.0, 0.0), c(1.01, 0.0)), 1e-12));
    }

    #[test]
    fn sample_is_deterministic() {
        for strategy in [SampleStrategy::UniformPolar, SampleStrategy::BoundaryBiased] {
            assert_eq!(sample(17, strategy), sample(17, strategy));
        }
        assert_ne!(sample(1, SampleStrategy::UniformPolar), sample(2, SampleStrategy::UniformPolar));
    }

    #[test]
    fn uniform_samples_are_admissible() {
        for i in 0..10_000u64 {
            let p = sample(derive_seed(3, i), SampleStrategy::UniformPolar);
            let t = schur_to_coeffs(&p).unwrap();
            assert!(is_admissible(&t, 1e-12), "{p:?}");
        }
    }

    #[test]
    fn boundary_bias_fraction() {
        let near = (0..10_000u64)
            .filter(|&i| sample(derive_seed(5, i), SampleStrategy::BoundaryBiased).gamma0.norm() >= 0.9)
            .count();
        assert!(near >= 4_000, "only {near} of 10^4 draws near the boundary");
    }

    #[test]
    fn recovery_rejects_degenerate() {
        let t = SchwarzTriple::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        assert!(matches!(recover_params(&t), Err(Error::DegenerateRecovery)));
    }
}
