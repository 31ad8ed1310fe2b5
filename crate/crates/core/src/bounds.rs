//! Closed-form sharp bounds for the four Toeplitz determinants, their
//! applicability conditions, and the estimates they are assembled from.
//!
//! Every formula is written once over [`Scalar`], so the same code runs in
//! `f64` and in exact rational arithmetic ([`BigRational`]).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minda::{ClassKind, FunctionalKind, PhiSpec};

/// Default slack for hypothesis and region comparisons.
pub const DEFAULT_HYPOTHESIS_TOL: f64 = 1e-12;

/// Field operations the bound formulas need.
pub trait Scalar: Clone + PartialOrd + Num + Signed {
    fn from_int(n: i64) -> Self;
    fn to_f64(&self) -> f64;

    fn ratio(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

fn sq<T: Scalar>(x: T) -> T {
    x.clone() * x
}

fn max<T: Scalar>(a: T, b: T) -> T {
    if a >= b {
        a
    } else {
        b
    }
}

fn min<T: Scalar>(a: T, b: T) -> T {
    if a <= b {
        a
    } else {
        b
    }
}

/// The admissibility regions for `|c3 + sigma c1 c2 + mu c1^3| <= |mu|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    None,
    Omega1,
    Omega2,
    Omega3,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::None => "none",
            Region::Omega1 => "Omega1",
            Region::Omega2 => "Omega2",
            Region::Omega3 => "Omega3",
        })
    }
}

/// Signed slack of `(sigma, mu)` in one region: nonnegative iff inside.
pub fn region_margin<T: Scalar>(region: Region, sigma: &T, mu: &T) -> Option<T> {
    let s = sigma.abs();
    let m = mu.clone();
    let t = |n| T::from_int(n);
    Some(match region {
        Region::None => return None,
        Region::Omega1 => min(t(2) - s, m - t(1)),
        Region::Omega2 => {
            let floor = (sq(sigma.clone()) + t(8)) / t(12);
            min(min(s.clone() - t(2), t(4) - s), m - floor)
        }
        Region::Omega3 => {
            let floor = T::ratio(2, 3) * (s.clone() - t(1));
            min(s - t(4), m - floor)
        }
    })
}

pub fn in_region<T: Scalar>(region: Region, sigma: &T, mu: &T, tol: &T) -> bool {
    match region_margin(region, sigma, mu) {
        Some(m) => m >= -tol.clone(),
        None => false,
    }
}

const REGIONS: [Region; 3] = [Region::Omega1, Region::Omega2, Region::Omega3];

fn lowest_region<T: Scalar>(sigma: &T, mu: &T, tol: &T) -> Region {
    REGIONS
        .into_iter()
        .find(|&r| in_region(r, sigma, mu, tol))
        .unwrap_or(Region::None)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegionMembership {
    pub region: Region,
    pub sigma: f64,
    pub mu: f64,
}

impl RegionMembership {
    pub fn contains(&self, region: Region, tol: f64) -> bool {
        in_region(region, &self.sigma, &self.mu, &tol)
    }
}

/// Region tag of `(sigma, mu)`; on overlaps the lowest index wins.
pub fn omega_region(sigma: f64, mu: f64, tol: f64) -> RegionMembership {
    RegionMembership { region: lowest_region(&sigma, &mu, &tol), sigma, mu }
}

/// `(sigma, mu)` attached to a T(2,2) functional, or `None` when `b1 = 0`.
pub fn sigma_mu_generic<T: Scalar>(kind: ClassKind, functional: FunctionalKind, b: &[T; 3]) -> Result<(T, T)> {
    let [b1, b2, b3] = b.clone();
    if !functional.is_second() {
        return Err(Error::NoSigmaMu(functional.as_str()));
    }
    if b1.is_zero() {
        return Err(Error::UndefinedSigmaMu);
    }
    let t = |n| T::from_int(n);
    let b1sq = sq(b1.clone());
    let b1cu = b1sq.clone() * b1.clone();
    let b1b2 = b1.clone() * b2.clone();
    let two_b1 = t(2) * b1.clone();
    Ok(match (kind, functional) {
        (ClassKind::Starlike, FunctionalKind::T22LogInv) => (
            -(t(9) * b1sq - t(4) * b2) / two_b1.clone(),
            (t(9) * b1cu - t(9) * b1b2 + t(2) * b3) / two_b1,
        ),
        (ClassKind::Convex, FunctionalKind::T22LogInv) => (
            -(t(5) * b1sq - t(4) * b2) / two_b1.clone(),
            (t(3) * b1cu - t(5) * b1b2 + t(2) * b3) / two_b1,
        ),
        (ClassKind::Starlike, FunctionalKind::T22Inv) => (
            t(2) * (b2 - t(3) * b1sq) / b1.clone(),
            (t(8) * b1cu - t(6) * b1b2 + b3) / b1,
        ),
        (ClassKind::Convex, FunctionalKind::T22Inv) => (
            (t(4) * b2 - t(7) * b1sq) / two_b1.clone(),
            (t(6) * b1cu - t(7) * b1b2 + t(2) * b3) / two_b1,
        ),
        _ => unreachable!("checked is_second above"),
    })
}

pub fn sigma_mu(kind: ClassKind, phi: &PhiSpec, functional: FunctionalKind) -> Result<(f64, f64)> {
    sigma_mu_generic(kind, functional, &phi.as_array())
}

/// Regions whose union the bound for `(kind, functional)` requires.
pub fn required_regions(kind: ClassKind, functional: FunctionalKind) -> &'static [Region] {
    match (kind, functional) {
        (ClassKind::Starlike, FunctionalKind::T22LogInv) | (ClassKind::Convex, FunctionalKind::T22Inv) => &REGIONS,
        (ClassKind::Convex, FunctionalKind::T22LogInv) | (ClassKind::Starlike, FunctionalKind::T22Inv) => {
            &REGIONS[1..]
        }
        _ => &[],
    }
}

fn region_union_margin<T: Scalar>(regions: &[Region], sigma: &T, mu: &T) -> T {
    regions
        .iter()
        .filter_map(|&r| region_margin(r, sigma, mu))
        .reduce(max)
        .expect("nonempty region list")
}

/// Coefficient inequality `lhs >= rhs` gating the bound. T(2,2) bounds share
/// the inequality of their T(2,1) counterpart.
fn coefficient_inequality<T: Scalar>(kind: ClassKind, functional: FunctionalKind, b: &[T; 3]) -> (&'static str, T, T) {
    let [b1, b2, _] = b.clone();
    let t = |n| T::from_int(n);
    let b1sq = sq(b1.clone());
    match (kind, functional.is_log()) {
        (ClassKind::Starlike, true) => ("|B2 - 2 B1^2| >= B1", (b2 - t(2) * b1sq).abs(), b1),
        (ClassKind::Convex, true) => ("|B2 - (5/4) B1^2| >= B1", (b2 - T::ratio(5, 4) * b1sq).abs(), b1),
        (ClassKind::Starlike, false) => ("|3 B1^2 - B2| >= B1", (t(3) * b1sq - b2).abs(), b1),
        (ClassKind::Convex, false) => ("|2 B1^2 - B2| >= B1", (t(2) * b1sq - b2).abs(), b1),
    }
}

/// Value of the sharp bound formula, regardless of its hypotheses.
pub fn theorem_value<T: Scalar>(functional: FunctionalKind, kind: ClassKind, b: &[T; 3]) -> T {
    let [b1, b2, b3] = b.clone();
    let t = |n| T::from_int(n);
    let r = |n, d| T::ratio(n, d);
    let b1sq = sq(b1.clone());
    let b1cu = b1sq.clone() * b1.clone();
    let b1b2 = b1.clone() * b2.clone();
    use ClassKind::*;
    use FunctionalKind::*;
    match (functional, kind) {
        (T21LogInv, Starlike) => b1sq.clone() / t(4) + sq(t(2) * b1sq - b2) / t(16),
        (T21LogInv, Convex) => b1sq.clone() / t(16) + sq(b2 - r(5, 4) * b1sq) / t(144),
        (T22LogInv, Starlike) => {
            sq(b2 - t(2) * b1sq) / t(16) + sq(t(9) * b1cu - t(9) * b1b2 + t(2) * b3) / t(144)
        }
        (T22LogInv, Convex) => {
            sq(b2 - r(5, 4) * b1sq) / t(144) + sq(t(3) * b1cu - t(5) * b1b2 + t(2) * b3) / t(2304)
        }
        (T21Inv, Starlike) => b1sq.clone() + sq(t(3) * b1sq - b2) / t(4),
        (T21Inv, Convex) => b1sq.clone() / t(4) + sq(t(2) * b1sq - b2) / t(36),
        (T22Inv, Starlike) => sq(b2 - t(3) * b1sq) / t(4) + sq(t(8) * b1cu - t(6) * b1b2 + b3) / t(9),
        (T22Inv, Convex) => sq(b2 - t(2) * b1sq) / t(36) + sq(t(6) * b1cu - t(7) * b1b2 + t(2) * b3) / t(576),
    }
}

/// Exact evaluation: the formula value and whether every hypothesis holds
/// with zero tolerance.
pub fn theorem_bound_exact(functional: FunctionalKind, kind: ClassKind, b: &[BigRational; 3]) -> (BigRational, bool) {
    let value = theorem_value(functional, kind, b);
    let (_, lhs, rhs) = coefficient_inequality(kind, functional, b);
    let mut applicable = lhs >= rhs;
    if functional.is_second() {
        applicable &= match sigma_mu_generic(kind, functional, b) {
            Ok((s, m)) => region_union_margin(required_regions(kind, functional), &s, &m) >= BigRational::zero(),
            Err(_) => false,
        };
    }
    (value, applicable)
}

/// `|a3 - lambda a2^2|` estimate, piecewise in `lambda`.
pub fn fekete_szego_bound(kind: ClassKind, phi: &PhiSpec, lambda: f64) -> f64 {
    let PhiSpec { b1, b2, .. } = *phi;
    let b1sq = b1 * b1;
    match kind {
        ClassKind::Starlike => {
            let t = 2.0 * lambda * b1sq;
            if t <= b1sq + b2 - b1 {
                (b1sq + b2 - t) / 2.0
            } else if t <= b1sq + b2 + b1 {
                b1 / 2.0
            } else {
                (t - b1sq - b2) / 2.0
            }
        }
        ClassKind::Convex => {
            let t = 3.0 * lambda * b1sq;
            if t <= 2.0 * (b1sq + b2 - b1) {
                (b2 - 1.5 * lambda * b1sq + b1sq) / 6.0
            } else if t <= 2.0 * (b1sq + b2 + b1) {
                b1 / 6.0
            } else {
                (-b2 + 1.5 * lambda * b1sq - b1sq) / 6.0
            }
        }
    }
}

/// Single-coefficient estimates the Toeplitz bounds are assembled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Intermediate {
    /// `|a2|` (and `|b2|`).
    A2,
    /// `|G2|`
    Gamma2,
    /// `|G3|`
    Gamma3,
    /// `|b3|`
    B3coef,
    /// `|b4|`
    B4coef,
}

pub fn intermediate_bound(kind: ClassKind, phi: &PhiSpec, which: Intermediate) -> Result<f64> {
    intermediate_bound_with_tol(kind, phi, which, DEFAULT_HYPOTHESIS_TOL)
}

pub fn intermediate_bound_with_tol(kind: ClassKind, phi: &PhiSpec, which: Intermediate, tol: f64) -> Result<f64> {
    let b = phi.as_array();
    let PhiSpec { b1, b2, b3 } = *phi;
    let b1sq = b1 * b1;
    let b1cu = b1sq * b1;
    let check_inequality = |functional| -> Result<()> {
        let (name, lhs, rhs) = coefficient_inequality(kind, functional, &b);
        if lhs - rhs >= -tol {
            Ok(())
        } else {
            Err(Error::HypothesisNotSatisfied(format!("{name} (margin {})", lhs - rhs)))
        }
    };
    let check_region = |functional| -> Result<()> {
        let (s, m) = sigma_mu_generic(kind, functional, &b)?;
        let regions = required_regions(kind, functional);
        if region_union_margin(regions, &s, &m) >= -tol {
            Ok(())
        } else {
            Err(Error::HypothesisNotSatisfied(format!("(sigma, mu) = ({s}, {m}) in {}", region_list(regions))))
        }
    };
    use ClassKind::*;
    Ok(match (which, kind) {
        (Intermediate::A2, Starlike) => b1,
        (Intermediate::A2, Convex) => b1 / 2.0,
        (Intermediate::Gamma2, _) => {
            check_inequality(FunctionalKind::T21LogInv)?;
            match kind {
                Starlike => (b2 - 2.0 * b1sq).abs() / 4.0,
                Convex => (b2 - 1.25 * b1sq).abs() / 12.0,
            }
        }
        (Intermediate::Gamma3, _) => {
            check_region(FunctionalKind::T22LogInv)?;
            match kind {
                Starlike => (9.0 * b1cu - 9.0 * b1 * b2 + 2.0 * b3).abs() / 12.0,
                Convex => (3.0 * b1cu - 5.0 * b1 * b2 + 2.0 * b3).abs() / 48.0,
            }
        }
        (Intermediate::B3coef, _) => {
            check_inequality(FunctionalKind::T21Inv)?;
            match kind {
                Starlike => (3.0 * b1sq - b2).abs() / 2.0,
                Convex => (2.0 * b1sq - b2).abs() / 6.0,
            }
        }
        (Intermediate::B4coef, _) => {
            check_region(FunctionalKind::T22Inv)?;
            match kind {
                Starlike => (8.0 * b1cu - 6.0 * b1 * b2 + b3).abs() / 3.0,
                Convex => (6.0 * b1cu - 7.0 * b1 * b2 + 2.0 * b3).abs() / 24.0,
            }
        }
    })
}

fn region_list(regions: &[Region]) -> String {
    regions.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" | ")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub satisfied: bool,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub functional: FunctionalKind,
    pub class: ClassKind,
    pub phi: PhiSpec,
    /// Formula value; only proven when `applicable`.
    pub bound: f64,
    pub hypotheses: Vec<Hypothesis>,
    pub sigma_mu: Option<RegionMembership>,
    pub applicable: bool,
    pub witness: String,
}

pub fn witness(kind: ClassKind) -> &'static str {
    match kind {
        ClassKind::Starlike => "f_phi with z f'(z)/f(z) = phi(iz); Schwarz function w(z) = iz, Schur point (i, 0, 0)",
        ClassKind::Convex => "h_phi with 1 + z h''(z)/h'(z) = phi(iz); Schwarz function w(z) = iz, Schur point (i, 0, 0)",
    }
}

pub fn theorem_bound(functional: FunctionalKind, kind: ClassKind, phi: &PhiSpec) -> BoundReport {
    theorem_bound_with_tol(functional, kind, phi, DEFAULT_HYPOTHESIS_TOL)
}

pub fn theorem_bound_with_tol(functional: FunctionalKind, kind: ClassKind, phi: &PhiSpec, tol: f64) -> BoundReport {
    let b = phi.as_array();
    let bound = theorem_value(functional, kind, &b);
    let (name, lhs, rhs) = coefficient_inequality(kind, functional, &b);
    let mut hypotheses = vec![Hypothesis { name: name.to_string(), satisfied: lhs - rhs >= -tol, margin: lhs - rhs }];
    let mut sigma_mu = None;
    if functional.is_second() {
        let regions = required_regions(kind, functional);
        let label = format!("(sigma, mu) in {}", region_list(regions));
        match sigma_mu_generic(kind, functional, &b) {
            Ok((s, m)) => {
                let margin = region_union_margin(regions, &s, &m);
                hypotheses.push(Hypothesis { name: label, satisfied: margin >= -tol, margin });
                sigma_mu = Some(omega_region(s, m, tol));
            }
            Err(_) => {
                hypotheses.push(Hypothesis { name: "B1 > 0 (sigma, mu defined)".to_string(), satisfied: false, margin: phi.b1 });
            }
        }
    }
    let applicable = hypotheses.iter().all(|h| h.satisfied);
    BoundReport {
        functional,
        class: kind,
        phi: *phi,
        bound,
        hypotheses,
        sigma_mu,
        applicable,
        witness: witness(kind).to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(b1: f64, b2: f64, b3: f64) -> PhiSpec {
        PhiSpec::new(b1, b2, b3).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::ratio(n, d)
    }

    #[test]
    fn region_examples() {
        assert_eq!(omega_region(0.0, 1.0, 1e-12).region, Region::Omega1);
        assert_eq!(omega_region(-7.0, 10.0, 1e-12).region, Region::Omega3);
        assert_eq!(omega_region(-2.5, 0.5, 1e-12).region, Region::None);
        assert_eq!(omega_region(0.0, 0.0, 1e-12).region, Region::None);
    }

    #[test]
    fn region_overlaps_resolve_to_lowest() {
        // |sigma| = 4 with mu >= 2 lies in both Omega2 and Omega3.
        let m = omega_region(4.0, 2.0, 1e-12);
        assert_eq!(m.region, Region::Omega2);
        assert!(m.contains(Region::Omega3, 1e-12));
        // |sigma| = 2 with mu >= 1 lies in Omega1 and Omega2.
        let m = omega_region(-2.0, 1.5, 1e-12);
        assert_eq!(m.region, Region::Omega1);
        assert!(m.contains(Region::Omega2, 1e-12));
    }

    #[test]
    fn sigma_mu_examples() {
        assert_eq!(sigma_mu(ClassKind::Starlike, &phi(2.0, 2.0, 2.0), FunctionalKind::T22LogInv).unwrap(), (-7.0, 10.0));
        let (s, m) = sigma_mu_generic(ClassKind::Starlike, FunctionalKind::T22Inv, &[rat(1, 1), rat(1, 2), rat(1, 6)]).unwrap();
        assert_eq!((s, m), (rat(-5, 1), rat(31, 6)));
        for kind in ClassKind::ALL {
            for f in [FunctionalKind::T22Inv, FunctionalKind::T22LogInv] {
                assert_eq!(sigma_mu(kind, &phi(0.0, 0.5, 0.0), f), Err(Error::UndefinedSigmaMu));
            }
        }
        assert!(matches!(sigma_mu(ClassKind::Convex, &phi(1.0, 1.0, 1.0), FunctionalKind::T21Inv), Err(Error::NoSigmaMu(_))));
    }

    #[test]
    fn fekete_szego_examples() {
        let hp = phi(2.0, 2.0, 2.0);
        assert_eq!(fekete_szego_bound(ClassKind::Starlike, &hp, 0.0), 3.0);
        assert_eq!(fekete_szego_bound(ClassKind::Starlike, &hp, 1.5), 3.0);
        assert_eq!(fekete_szego_bound(ClassKind::Convex, &hp, 0.0), 1.0);
    }

    #[test]
    fn intermediate_examples() {
        let hp = phi(2.0, 2.0, 2.0);
        // |G2| <= |B2 - 2 B1^2| / 4; the sum-of-squares identity pins the 1/4.
        assert_eq!(intermediate_bound(ClassKind::Starlike, &hp, Intermediate::Gamma2).unwrap(), 1.5);
        assert_eq!(intermediate_bound(ClassKind::Starlike, &hp, Intermediate::B4coef).unwrap(), 14.0);
        assert_eq!(intermediate_bound(ClassKind::Convex, &hp, Intermediate::A2).unwrap(), 1.0);
    }

    #[test]
    fn intermediate_hypothesis_errors() {
        // Cardioid data: (sigma1, mu1) = (-5/2, 1/2) is in no region.
        let card = phi(1.0, 1.0, 0.5);
        let err = intermediate_bound(ClassKind::Starlike, &card, Intermediate::Gamma3).unwrap_err();
        assert!(matches!(err, Error::HypothesisNotSatisfied(ref s) if s.contains("Omega1")));
        // exp data for convex: |1/2 - 5/4| = 3/4 < 1
        let exp = phi(1.0, 0.5, 1.0 / 6.0);
        let err = intermediate_bound(ClassKind::Convex, &exp, Intermediate::Gamma2).unwrap_err();
        assert!(matches!(err, Error::HypothesisNotSatisfied(ref s) if s.contains("5/4")));
        assert_eq!(
            intermediate_bound(ClassKind::Starlike, &phi(0.0, 0.5, 0.0), Intermediate::B4coef),
            Err(Error::UndefinedSigmaMu)
        );
    }

    #[test]
    fn theorem_examples() {
        let hp = phi(2.0, 2.0, 2.0);
        let r = theorem_bound(FunctionalKind::T21LogInv, ClassKind::Starlike, &hp);
        assert!(r.applicable && r.bound == 13.0 / 4.0 && r.sigma_mu.is_none());
        let r = theorem_bound(FunctionalKind::T22LogInv, ClassKind::Convex, &hp);
        assert!(r.applicable);
        assert!((r.bound - 13.0 / 144.0).abs() < 1e-15);
        assert_eq!(r.sigma_mu.unwrap().region, Region::Omega2);
        let r = theorem_bound(FunctionalKind::T22LogInv, ClassKind::Starlike, &phi(1.0, 1.0, 0.5));
        assert!(!r.applicable);
        assert!(r.hypotheses[0].satisfied && !r.hypotheses[1].satisfied);
        assert_eq!(r.sigma_mu.unwrap().region, Region::None);
    }

    #[test]
    fn undefined_sigma_mu_report() {
        let r = theorem_bound(FunctionalKind::T22Inv, ClassKind::Starlike, &phi(0.0, 0.5, 0.0));
        assert!(!r.applicable);
        assert!(r.sigma_mu.is_none());
        assert_eq!(r.bound, 1.0 / 16.0);
    }

    #[test]
    fn exact_evaluation() {
        let hp = [rat(2, 1), rat(2, 1), rat(2, 1)];
        let (v, ok) = theorem_bound_exact(FunctionalKind::T22LogInv, ClassKind::Starlike, &hp);
        assert!(ok);
        assert_eq!(v, rat(481, 36));
        let card = [rat(1, 1), rat(1, 1), rat(1, 2)];
        let (v, ok) = theorem_bound_exact(FunctionalKind::T22Inv, ClassKind::Starlike, &card);
        assert!(ok, "boundary |sigma| = 4 must count as inside");
        assert_eq!(v, rat(61, 36));
    }
}
