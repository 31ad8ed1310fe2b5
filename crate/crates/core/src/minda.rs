//! Coefficient maps from a Schwarz triple to members of the starlike class
//! `S*(phi)` and the convex class `C(phi)`, and the coefficient functionals
//! built on top of them.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schwarz::{is_admissible, SchwarzTriple, DEFAULT_ADMISSIBILITY_TOL};

/// Taylor data `phi(z) = 1 + b1 z + b2 z^2 + b3 z^3 + ...` of the
/// class-generating function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhiSpec {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

impl PhiSpec {
    pub fn new(b1: f64, b2: f64, b3: f64) -> Result<Self> {
        if !(b1.is_finite() && b2.is_finite() && b3.is_finite()) {
            return Err(Error::InvalidPhi(format!("non-finite coefficients ({b1}, {b2}, {b3})")));
        }
        if b1 < 0.0 {
            return Err(Error::InvalidPhi(format!("B1 = {b1} must be nonnegative")));
        }
        Ok(Self { b1, b2, b3 })
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.b1, self.b2, self.b3]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// `z f'(z) / f(z)` subordinate to `phi`.
    Starlike,
    /// `1 + z f''(z) / f'(z)` subordinate to `phi`.
    Convex,
}

impl ClassKind {
    pub const ALL: [ClassKind; 2] = [ClassKind::Starlike, ClassKind::Convex];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Starlike => "starlike",
            ClassKind::Convex => "convex",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "starlike" => Ok(ClassKind::Starlike),
            "convex" => Ok(ClassKind::Convex),
            _ => Err(format!("unknown class '{s}' (expected starlike or convex)")),
        }
    }
}

/// The four second-order Toeplitz determinants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionalKind {
    /// `b2^2 - b3^2`
    T21Inv,
    /// `b3^2 - b4^2`
    T22Inv,
    /// `G1^2 - G2^2`
    T21LogInv,
    /// `G2^2 - G3^2`
    T22LogInv,
}

impl FunctionalKind {
    pub const ALL: [FunctionalKind; 4] = [
        FunctionalKind::T21LogInv,
        FunctionalKind::T22LogInv,
        FunctionalKind::T21Inv,
        FunctionalKind::T22Inv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionalKind::T21Inv => "t21-inv",
            FunctionalKind::T22Inv => "t22-inv",
            FunctionalKind::T21LogInv => "t21-log-inv",
            FunctionalKind::T22LogInv => "t22-log-inv",
        }
    }

    pub fn is_log(self) -> bool {
        matches!(self, FunctionalKind::T21LogInv | FunctionalKind::T22LogInv)
    }

    /// T(2,2) determinants involve the third coefficient and need `(sigma, mu)`.
    pub fn is_second(self) -> bool {
        matches!(self, FunctionalKind::T22Inv | FunctionalKind::T22LogInv)
    }
}

impl fmt::Display for FunctionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctionalKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FunctionalKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown functional '{s}' (expected t21-inv, t22-inv, t21-log-inv or t22-log-inv)"))
    }
}

/// `(a2, a3, a4)` of a class member with the inverse coefficients
/// `(b2, b3, b4)` and logarithmic inverse coefficients `(g1, g2, g3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffBundle {
    pub a2: Complex64,
    pub a3: Complex64,
    pub a4: Complex64,
    pub b2: Complex64,
    pub b3: Complex64,
    pub b4: Complex64,
    pub g1: Complex64,
    pub g2: Complex64,
    pub g3: Complex64,
}

impl CoeffBundle {
    pub fn from_a(a2: Complex64, a3: Complex64, a4: Complex64) -> Self {
        let a2sq = a2 * a2;
        let a2cu = a2sq * a2;
        let a23 = a2 * a3;
        Self {
            a2,
            a3,
            a4,
            b2: -a2,
            b3: 2.0 * a2sq - a3,
            b4: -5.0 * a2cu + 5.0 * a23 - a4,
            g1: -a2 / 2.0,
            g2: -(a3 - 1.5 * a2sq) / 2.0,
            g3: -(a4 - 4.0 * a23 + (10.0 / 3.0) * a2cu) / 2.0,
        }
    }

    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::from_a(z, z, z)
    }

    pub fn conj(&self) -> Self {
        Self::from_a(self.a2.conj(), self.a3.conj(), self.a4.conj())
    }
}

/// `(a2, a3, a4)` without the admissibility check; used in the oracle's
/// inner loop where the triple comes from the Schur map.
#[inline]
pub fn a_coeffs(kind: ClassKind, phi: &PhiSpec, t: &SchwarzTriple) -> (Complex64, Complex64, Complex64) {
    let PhiSpec { b1, b2, b3 } = *phi;
    let (c1, c2, c3) = (t.c1, t.c2, t.c3);
    let c1sq = c1 * c1;
    let a2 = c1 * b1;
    let a3 = c1sq * (b1 * b1 + b2) + c2 * b1;
    let a4 = c1sq * c1 * (b1 * b1 * b1 + 3.0 * b1 * b2 + 2.0 * b3)
        + c1 * c2 * (3.0 * b1 * b1 + 4.0 * b2)
        + c3 * (2.0 * b1);
    match kind {
        ClassKind::Starlike => (a2, a3 / 2.0, a4 / 6.0),
        ClassKind::Convex => (a2 / 2.0, a3 / 6.0, a4 / 24.0),
    }
}

pub fn coeffs_from_schwarz(kind: ClassKind, phi: &PhiSpec, t: &SchwarzTriple) -> Result<CoeffBundle> {
    if !is_admissible(t, DEFAULT_ADMISSIBILITY_TOL) {
        return Err(Error::InadmissibleTriple {
            c1: t.c1.to_string(),
            c2: t.c2.to_string(),
            c3: t.c3.to_string(),
        });
    }
    let (a2, a3, a4) = a_coeffs(kind, phi, t);
    Ok(CoeffBundle::from_a(a2, a3, a4))
}

/// Modulus of the selected Toeplitz determinant.
#[inline]
pub fn toeplitz(kind: FunctionalKind, cb: &CoeffBundle) -> f64 {
    let (x, y) = match kind {
        FunctionalKind::T21Inv => (cb.b2, cb.b3),
        FunctionalKind::T22Inv => (cb.b3, cb.b4),
        FunctionalKind::T21LogInv => (cb.g1, cb.g2),
        FunctionalKind::T22LogInv => (cb.g2, cb.g3),
    };
    (x * x - y * y).norm()
}

/// `|a3 - lambda a2^2|`
pub fn fekete_szego_value(cb: &CoeffBundle, lambda: f64) -> f64 {
    (cb.a3 - cb.a2 * cb.a2 * lambda).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-13
    }

    fn half_plane() -> PhiSpec {
        PhiSpec::new(2.0, 2.0, 2.0).unwrap()
    }

    fn unit_c1() -> SchwarzTriple {
        SchwarzTriple::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0))
    }

    #[test]
    fn koebe_bundle() {
        let cb = coeffs_from_schwarz(ClassKind::Starlike, &half_plane(), &unit_c1()).unwrap();
        for (got, want) in [(cb.a2, 2.0), (cb.a3, 3.0), (cb.a4, 4.0), (cb.b2, -2.0), (cb.b3, 5.0), (cb.b4, -14.0)] {
            assert!(close(got, c(want, 0.0)), "{got} vs {want}");
        }
        assert!(close(cb.g1, c(-1.0, 0.0)));
        assert!(close(cb.g2, c(1.5, 0.0)));
        assert!(close(cb.g3, c(-10.0 / 3.0, 0.0)));
    }

    #[test]
    fn half_plane_map_bundle() {
        let cb = coeffs_from_schwarz(ClassKind::Convex, &half_plane(), &unit_c1()).unwrap();
        assert!(close(cb.a2, c(1.0, 0.0)) && close(cb.a3, c(1.0, 0.0)) && close(cb.a4, c(1.0, 0.0)));
    }

    #[test]
    fn zero_schwarz_gives_identity() {
        for kind in ClassKind::ALL {
            let cb = coeffs_from_schwarz(kind, &PhiSpec::new(1.3, -0.4, 2.0).unwrap(), &SchwarzTriple::zero()).unwrap();
            assert_eq!(cb, CoeffBundle::zero());
        }
    }

    #[test]
    fn inadmissible_rejected() {
        let t = SchwarzTriple::new(c(0.5, 0.0), c(0.75, 0.0), c(0.0, 0.0));
        assert!(matches!(
            coeffs_from_schwarz(ClassKind::Starlike, &half_plane(), &t),
            Err(Error::InadmissibleTriple { .. })
        ));
    }

    #[test]
    fn toeplitz_values_at_rotated_koebe() {
        let cb = CoeffBundle::from_a(c(0.0, 2.0), c(-3.0, 0.0), c(0.0, -4.0));
        assert!((toeplitz(FunctionalKind::T21LogInv, &cb) - 13.0 / 4.0).abs() < 1e-13);
        assert!(close(cb.b2, c(0.0, -2.0)) && close(cb.b3, c(-5.0, 0.0)) && close(cb.b4, c(0.0, 14.0)));
        assert!((toeplitz(FunctionalKind::T22Inv, &cb) - 221.0).abs() < 1e-12);
    }

    #[test]
    fn toeplitz_of_zero_bundle() {
        for k in FunctionalKind::ALL {
            assert_eq!(toeplitz(k, &CoeffBundle::zero()), 0.0);
        }
    }

    #[test]
    fn fekete_szego_on_koebe() {
        let cb = CoeffBundle::from_a(c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0));
        assert_eq!(fekete_szego_value(&cb, 0.0), 3.0);
        assert_eq!(fekete_szego_value(&cb, 1.5), 3.0);
        assert_eq!(fekete_szego_value(&CoeffBundle::zero(), 0.7), 0.0);
    }

    #[test]
    fn phi_validation() {
        assert!(PhiSpec::new(-0.1, 0.0, 0.0).is_err());
        assert!(PhiSpec::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(PhiSpec::new(0.0, 0.5, 0.0).is_ok());
    }

    #[test]
    fn names_round_trip() {
        for k in FunctionalKind::ALL {
            assert_eq!(k.as_str().parse::<FunctionalKind>().unwrap(), k);
        }
        assert_eq!("convex".parse::<ClassKind>().unwrap(), ClassKind::Convex);
        assert!("concave".parse::<ClassKind>().is_err());
    }
}
