//! Built-in generating functions with their Taylor data and the published
//! values of the four bounds for each class.

use std::f64::consts::PI;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bounds::Scalar;
use crate::error::{Error, Result};
use crate::minda::{ClassKind, FunctionalKind, PhiSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "kebab-case")]
pub enum CatalogId {
    /// `(1+z)/(1-z)`
    HalfPlane,
    /// `(1+Az)/(1+Bz)`, `-1 <= B < A <= 1`
    Janowski { a: f64, b: f64 },
    /// `(1+(1-2 alpha)z)/(1-z)` for the starlike class of order alpha.
    StarlikeOrder { alpha: f64 },
    /// Same generator, convex class of order alpha.
    ConvexOrder { alpha: f64 },
    /// `((1+z)/(1-z))^beta`, strongly starlike.
    StronglyStar { beta: f64 },
    /// `((1+z)/(1-z))^beta`, strongly convex.
    StronglyConvex { beta: f64 },
    /// `1 + z e^z`
    Cardioid,
    /// `e^z`
    Exp,
    /// `z + sqrt(1+z^2)`
    Lune,
    /// `1 + (2/pi^2) (log((1+sqrt z)/(1-sqrt z)))^2`
    Parabolic,
    /// `sqrt(1+z^2)`
    Lemniscate,
}

impl CatalogId {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogId::HalfPlane => "halfplane",
            CatalogId::Janowski { .. } => "janowski",
            CatalogId::StarlikeOrder { .. } => "starlike-order",
            CatalogId::ConvexOrder { .. } => "convex-order",
            CatalogId::StronglyStar { .. } => "strongly-starlike",
            CatalogId::StronglyConvex { .. } => "strongly-convex",
            CatalogId::Cardioid => "cardioid",
            CatalogId::Exp => "exp",
            CatalogId::Lune => "lune",
            CatalogId::Parabolic => "parabolic",
            CatalogId::Lemniscate => "lemniscate",
        }
    }

    /// The class the id names, when it names one.
    pub fn natural_class(&self) -> Option<ClassKind> {
        match self {
            CatalogId::StarlikeOrder { .. } | CatalogId::StronglyStar { .. } => Some(ClassKind::Starlike),
            CatalogId::ConvexOrder { .. } | CatalogId::StronglyConvex { .. } => Some(ClassKind::Convex),
            CatalogId::HalfPlane | CatalogId::Janowski { .. } => None,
            _ => Some(ClassKind::Starlike),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ParameterOutOfRange(msg));
        match *self {
            CatalogId::Janowski { a, b } if !(-1.0 <= b && b < a && a <= 1.0) => {
                bad(format!("Janowski needs -1 <= B < A <= 1, got A = {a}, B = {b}"))
            }
            CatalogId::StarlikeOrder { alpha } | CatalogId::ConvexOrder { alpha } if !(0.0..1.0).contains(&alpha) => {
                bad(format!("order alpha must lie in [0, 1), got {alpha}"))
            }
            CatalogId::StronglyStar { beta } | CatalogId::StronglyConvex { beta } if !(beta > 0.0 && beta <= 1.0) => {
                bad(format!("beta must lie in (0, 1], got {beta}"))
            }
            _ => Ok(()),
        }
    }

    /// `[B1, B2, B3]` over any scalar; `None` for the parabolic generator,
    /// whose coefficients involve `pi`.
    fn taylor<T: Scalar>(&self, param: impl Fn(f64) -> T) -> Option<[T; 3]> {
        let r = |n, d| T::ratio(n, d);
        Some(match *self {
            CatalogId::HalfPlane => [r(2, 1), r(2, 1), r(2, 1)],
            CatalogId::Janowski { a, b } => {
                let (a, b) = (param(a), param(b));
                let d = a - b.clone();
                [d.clone(), -(b.clone() * d.clone()), b.clone() * b * d]
            }
            CatalogId::StarlikeOrder { alpha } | CatalogId::ConvexOrder { alpha } => {
                let v = r(2, 1) * (r(1, 1) - param(alpha));
                [v.clone(), v.clone(), v]
            }
            CatalogId::StronglyStar { beta } | CatalogId::StronglyConvex { beta } => {
                let b = param(beta);
                let b2 = b.clone() * b.clone();
                [
                    r(2, 1) * b.clone(),
                    r(2, 1) * b2.clone(),
                    r(2, 3) * b * (r(1, 1) + r(2, 1) * b2),
                ]
            }
            CatalogId::Cardioid => [r(1, 1), r(1, 1), r(1, 2)],
            CatalogId::Exp => [r(1, 1), r(1, 2), r(1, 6)],
            CatalogId::Lune => [r(1, 1), r(1, 2), r(0, 1)],
            CatalogId::Lemniscate => [r(0, 1), r(1, 2), r(0, 1)],
            CatalogId::Parabolic => return None,
        })
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CatalogId::Janowski { a, b } => write!(f, "janowski(A={a}, B={b})"),
            CatalogId::StarlikeOrder { alpha } | CatalogId::ConvexOrder { alpha } => {
                write!(f, "{}(alpha={alpha})", self.name())
            }
            CatalogId::StronglyStar { beta } | CatalogId::StronglyConvex { beta } => {
                write!(f, "{}(beta={beta})", self.name())
            }
            _ => f.write_str(self.name()),
        }
    }
}

pub fn phi_coeffs(id: &CatalogId) -> Result<PhiSpec> {
    id.validate()?;
    let [b1, b2, b3] = match id.taylor(|x| x) {
        Some(b) => b,
        None => {
            let p2 = PI * PI;
            [8.0 / p2, 16.0 / (3.0 * p2), 184.0 / (45.0 * p2)]
        }
    };
    PhiSpec::new(b1, b2, b3)
}

/// Exact Taylor data; float parameters are taken at their exact binary
/// value. `None` for the parabolic generator.
pub fn exact_phi(id: &CatalogId) -> Result<Option<[BigRational; 3]>> {
    id.validate()?;
    Ok(id.taylor(|x| BigRational::from_float(x).expect("validated parameters are finite")))
}

/// Published value of a bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Expected {
    Rational { numerator: i64, denominator: i64 },
    Real { value: f64, expression: String },
}

impl Expected {
    pub fn value(&self) -> f64 {
        match self {
            Expected::Rational { numerator, denominator } => *numerator as f64 / *denominator as f64,
            Expected::Real { value, .. } => *value,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Expected::Rational { numerator, denominator } => Some(BigRational::ratio(*numerator, *denominator)),
            Expected::Real { .. } => None,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Rational { numerator, denominator: 1 } => write!(f, "{numerator}"),
            Expected::Rational { numerator, denominator } => write!(f, "{numerator}/{denominator}"),
            Expected::Real { expression, .. } => f.write_str(expression),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub functional: FunctionalKind,
    pub expected: Expected,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub class: ClassKind,
    pub phi: PhiSpec,
    pub fixtures: Vec<Fixture>,
}

fn rationals(values: &[(FunctionalKind, i64, i64)]) -> Vec<Fixture> {
    values
        .iter()
        .map(|&(functional, numerator, denominator)| Fixture {
            functional,
            expected: Expected::Rational { numerator, denominator },
        })
        .collect()
}

fn parabolic_fixtures() -> Vec<Fixture> {
    let p2 = PI * PI;
    let p4 = p2 * p2;
    let p8 = p4 * p4;
    let p12 = p8 * p4;
    let t21 = 128.0 * (648.0 - 36.0 * p2 + 5.0 * p4) / (9.0 * p8);
    let t22 = 64.0 * (p2 - 36.0).powi(2) / (9.0 * p8)
        + 64.0 * (23040.0 - 1440.0 * p2 + 23.0 * p4).powi(2) / (18225.0 * p12);
    vec![
        Fixture {
            functional: FunctionalKind::T21Inv,
            expected: Expected::Real { value: t21, expression: "128(648-36pi^2+5pi^4)/(9pi^8)".into() },
        },
        Fixture {
            functional: FunctionalKind::T22Inv,
            expected: Expected::Real {
                value: t22,
                expression: "64(pi^2-36)^2/(9pi^8)+64(23040-1440pi^2+23pi^4)^2/(18225pi^12)".into(),
            },
        },
    ]
}

/// Published fixed-class values; empty when none are listed.
pub fn fixtures(id: &CatalogId, class: ClassKind) -> Vec<Fixture> {
    use FunctionalKind::*;
    match (id, class) {
        (CatalogId::HalfPlane, ClassKind::Starlike) => {
            rationals(&[(T21LogInv, 13, 4), (T22LogInv, 481, 36), (T21Inv, 29, 1), (T22Inv, 221, 1)])
        }
        (CatalogId::HalfPlane, ClassKind::Convex) => {
            rationals(&[(T21LogInv, 5, 16), (T22LogInv, 13, 144), (T21Inv, 2, 1), (T22Inv, 2, 1)])
        }
        (CatalogId::Exp, ClassKind::Starlike) => {
            rationals(&[(T21LogInv, 25, 64), (T22LogInv, 785, 2592), (T21Inv, 41, 16), (T22Inv, 5869, 1296)])
        }
        (CatalogId::Lune, ClassKind::Starlike) => {
            rationals(&[(T21LogInv, 25, 64), (T22LogInv, 9, 32), (T21Inv, 41, 16), (T22Inv, 625, 144)])
        }
        (CatalogId::Cardioid, ClassKind::Starlike) => rationals(&[(T21LogInv, 5, 16), (T21Inv, 2, 1), (T22Inv, 61, 36)]),
        (CatalogId::Lemniscate, ClassKind::Starlike) => rationals(&[(T21LogInv, 1, 64), (T21Inv, 1, 16)]),
        (CatalogId::Parabolic, ClassKind::Starlike) => parabolic_fixtures(),
        _ => Vec::new(),
    }
}

pub fn entry(id: CatalogId, class: ClassKind) -> Result<CatalogEntry> {
    Ok(CatalogEntry { id, class, phi: phi_coeffs(&id)?, fixtures: fixtures(&id, class) })
}

/// Every fixed class with published values, in table order.
pub fn table_entries() -> Vec<CatalogEntry> {
    [
        (CatalogId::HalfPlane, ClassKind::Starlike),
        (CatalogId::HalfPlane, ClassKind::Convex),
        (CatalogId::Exp, ClassKind::Starlike),
        (CatalogId::Lune, ClassKind::Starlike),
        (CatalogId::Cardioid, ClassKind::Starlike),
        (CatalogId::Parabolic, ClassKind::Starlike),
        (CatalogId::Lemniscate, ClassKind::Starlike),
    ]
    .into_iter()
    .map(|(id, class)| entry(id, class).expect("built-in entries are valid"))
    .collect()
}

/// Catalog generators paired with both classes, plus representative
/// members of the parametric families.
pub fn certificate_entries() -> Vec<(CatalogId, ClassKind)> {
    let mut out = Vec::new();
    for id in [
        CatalogId::HalfPlane,
        CatalogId::Exp,
        CatalogId::Lune,
        CatalogId::Cardioid,
        CatalogId::Parabolic,
        CatalogId::Lemniscate,
        CatalogId::Janowski { a: 0.5, b: -0.5 },
        CatalogId::Janowski { a: 1.0, b: -0.5 },
    ] {
        for class in ClassKind::ALL {
            out.push((id, class));
        }
    }
    out.extend([
        (CatalogId::StarlikeOrder { alpha: 0.25 }, ClassKind::Starlike),
        (CatalogId::ConvexOrder { alpha: 0.1 }, ClassKind::Convex),
        (CatalogId::StronglyStar { beta: 0.5 }, ClassKind::Starlike),
        (CatalogId::StronglyConvex { beta: 0.75 }, ClassKind::Convex),
    ]);
    out
}

/// One-parameter family of a parametric corollary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Order,
    Strongly,
    Janowski,
}

/// Where a parametric corollary is stated to hold.
#[derive(Debug, Clone, Copy)]
pub enum Domain {
    /// Closed parameter interval.
    Interval(f64, f64),
    /// Condition on `(A, B)`, in addition to `-1 <= B < A <= 1`.
    Janowski(fn(f64, f64) -> bool),
}

/// A published closed form for a bound along a family.
#[derive(Debug, Clone, Copy)]
pub struct ParametricCorollary {
    pub family: Family,
    pub class: ClassKind,
    pub functional: FunctionalKind,
    pub domain: Domain,
    /// Closed form in the family parameters (`[alpha]`, `[beta]` or `[A, B]`).
    pub closed_form: fn(&[f64]) -> f64,
    /// Known disagreement between the printed statement and the bound
    /// formula; the bound formula is authoritative.
    pub erratum: Option<&'static str>,
}

impl ParametricCorollary {
    /// Catalog member for the given family parameters.
    pub fn id(&self, params: &[f64]) -> CatalogId {
        match (self.family, self.class) {
            (Family::Order, ClassKind::Starlike) => CatalogId::StarlikeOrder { alpha: params[0] },
            (Family::Order, ClassKind::Convex) => CatalogId::ConvexOrder { alpha: params[0] },
            (Family::Strongly, ClassKind::Starlike) => CatalogId::StronglyStar { beta: params[0] },
            (Family::Strongly, ClassKind::Convex) => CatalogId::StronglyConvex { beta: params[0] },
            (Family::Janowski, _) => CatalogId::Janowski { a: params[0], b: params[1] },
        }
    }
}

fn sq(x: f64) -> f64 {
    x * x
}

/// `(sigma, mu)` in the union of Omega_i for `i` in `from..=3`, exactly as the
/// Janowski items print them.
fn janowski_region(sigma: f64, mu: f64, from: usize) -> bool {
    let s = sigma.abs();
    let tol = 1e-12;
    let o1 = s <= 2.0 + tol && mu >= 1.0 - tol;
    let o2 = (2.0 - tol..=4.0 + tol).contains(&s) && mu >= (sigma * sigma + 8.0) / 12.0 - tol;
    let o3 = s >= 4.0 - tol && mu >= 2.0 / 3.0 * (s - 1.0) - tol;
    (from == 1 && o1) || o2 || o3
}

pub fn parametric_corollaries() -> Vec<ParametricCorollary> {
    use ClassKind::{Convex, Starlike};
    use Domain::{Interval, Janowski};
    use Family::{Janowski as Jan, Order, Strongly};
    use FunctionalKind::*;
    let c = |family, class, functional, domain, closed_form: fn(&[f64]) -> f64| ParametricCorollary {
        family,
        class,
        functional,
        domain,
        closed_form,
        erratum: None,
    };
    vec![
        // Janowski, starlike
        c(Jan, Starlike, T21LogInv, Janowski(|a, b| (2.0 * a - b).abs() >= 1.0), |p| {
            let (a, b) = (p[0], p[1]);
            sq(a - b) * (4.0 * a * a - 4.0 * a * b + b * b + 4.0) / 16.0
        }),
        c(
            Jan,
            Starlike,
            T22LogInv,
            Janowski(|a, b| {
                (2.0 * a - b).abs() >= 1.0
                    && janowski_region((5.0 * b - 9.0 * a) / 2.0, (3.0 * a - 2.0 * b) * (3.0 * a - b) / 2.0, 1)
            }),
            |p| {
                let (a, b) = (p[0], p[1]);
                sq(a - b) * (sq(9.0 * a * a - 9.0 * a * b + 2.0 * b * b) + 9.0 * sq(b - 2.0 * a)) / 144.0
            },
        ),
        c(Jan, Starlike, T21Inv, Janowski(|a, b| (3.0 * a - 2.0 * b).abs() >= 1.0), |p| {
            let (a, b) = (p[0], p[1]);
            sq(a - b) * (sq(3.0 * a - 2.0 * b) + 4.0) / 4.0
        }),
        c(
            Jan,
            Starlike,
            T22Inv,
            Janowski(|a, b| {
                (3.0 * a - 2.0 * b).abs() >= 1.0
                    && janowski_region(4.0 * b - 6.0 * a, 8.0 * a * a - 10.0 * a * b + 3.0 * b * b, 2)
            }),
            |p| {
                let (a, b) = (p[0], p[1]);
                sq(a - b) * (9.0 * sq(3.0 * a - 2.0 * b) + 4.0 * sq(b - 2.0 * a) * sq(4.0 * a - 3.0 * b)) / 36.0
            },
        ),
        // Janowski, convex
        c(Jan, Convex, T21LogInv, Janowski(|a, b| (5.0 * a - b).abs() >= 4.0), |p| {
            let (a, b) = (p[0], p[1]);
            sq(a - b) * (25.0 * a * a - 10.0 * a * b + b * b + 144.0) / 2304.0
        }),
        c(
            Jan,
            Convex,
            T22LogInv,
            Janowski(|a, b| {
                (5.0 * a - b).abs() >= 4.0 && janowski_region((b - 5.0 * a) / 2.0, a * (3.0 * a - b) / 2.0, 2)
            }),
            |p| {
                let (a, b) = (p[0], p[1]);
                sq(a - b) * (a * a * sq(b - 3.0 * a) + sq(b - 5.0 * a)) / 2304.0
            },
        ),
        ParametricCorollary {
            erratum: Some(
                "printed condition |2A-B| >= A-B; the bound's hypothesis |2B1^2-B2| >= B1 reduces to |2A-B| >= 1, used here",
            ),
            ..c(Jan, Convex, T21Inv, Janowski(|a, b| (2.0 * a - b).abs() >= 1.0), |p| {
                let (a, b) = (p[0], p[1]);
                sq(a - b) * (sq(b - 2.0 * a) + 9.0) / 36.0
            })
        },
        ParametricCorollary {
            erratum: Some("printed sigma4 = (7A-3B)/2 has the opposite sign of (4B2-7B1^2)/(2B1) = (3B-7A)/2; |sigma4| agrees"),
            ..c(
                Jan,
                Convex,
                T22Inv,
                Janowski(|a, b| {
                    (2.0 * a - b).abs() >= a - b
                        && janowski_region((7.0 * a - 3.0 * b) / 2.0, (6.0 * a * a - 5.0 * a * b + b * b) / 2.0, 1)
                }),
                |p| {
                    let (a, b) = (p[0], p[1]);
                    sq(2.0 * a * a - 3.0 * a * b + b * b) * (sq(b - 3.0 * a) + 16.0) / 576.0
                },
            )
        },
        // starlike of order alpha
        c(Order, Starlike, T21LogInv, Interval(0.0, 0.5), |p| {
            let a = p[0];
            sq(1.0 - a) * (sq(3.0 - 4.0 * a) + 4.0) / 4.0
        }),
        c(Order, Starlike, T22LogInv, Interval(0.0, 7.0 / 15.0), |p| {
            let a = p[0];
            sq(1.0 - a) * (9.0 * sq(3.0 - 4.0 * a) + 4.0 * sq(2.0 - 3.0 * a) * sq(5.0 - 6.0 * a)) / 36.0
        }),
        c(Order, Starlike, T21Inv, Interval(0.0, 2.0 / 3.0), |p| {
            let a = p[0];
            sq(1.0 - a) * (36.0 * a * a - 60.0 * a + 29.0)
        }),
        c(Order, Starlike, T22Inv, Interval(0.0, 3.0 / 5.0), |p| {
            let a = p[0];
            sq(1.0 - a) * (9.0 * sq(5.0 - 6.0 * a) + 4.0 * sq(3.0 - 4.0 * a) * sq(7.0 - 8.0 * a)) / 9.0
        }),
        // convex of order alpha
        c(Order, Convex, T21LogInv, Interval(0.0, 0.2), |p| {
            let a = p[0];
            5.0 / 144.0 * sq(1.0 - a) * (5.0 * a * a - 6.0 * a + 9.0)
        }),
        c(Order, Convex, T22LogInv, Interval(0.0, 7.0 / 47.0), |p| {
            let a = p[0];
            sq(a - 1.0) * (sq(6.0 * a * a - 7.0 * a + 2.0) + sq(3.0 - 5.0 * a)) / 144.0
        }),
        ParametricCorollary {
            erratum: Some(
                "printed ((1-alpha)^2(3-4alpha)^2+9)/9; the bound formula gives (1-alpha)^2((3-4alpha)^2+9)/9 (equal only at alpha = 0)",
            ),
            ..c(Order, Convex, T21Inv, Interval(0.0, 0.5), |p| {
                let a = p[0];
                (sq(1.0 - a) * sq(3.0 - 4.0 * a) + 9.0) / 9.0
            })
        },
        c(Order, Convex, T22Inv, Interval(0.0, 39.0 / 95.0), |p| {
            let a = p[0];
            sq(1.0 - a) * (sq(2.0 - 3.0 * a) + 4.0) * sq(3.0 - 4.0 * a) / 36.0
        }),
        // strongly starlike
        c(Strongly, Starlike, T21LogInv, Interval(1.0 / 3.0, 1.0), |p| {
            let b = p[0];
            b * b * (9.0 * b * b + 4.0) / 4.0
        }),
        c(Strongly, Starlike, T22LogInv, Interval(1.0 / 3.0, 1.0), |p| {
            let b2 = p[0] * p[0];
            b2 * (3364.0 * b2 * b2 + 961.0 * b2 + 4.0) / 324.0
        }),
        c(Strongly, Starlike, T21Inv, Interval(0.2, 1.0), |p| {
            let b2 = p[0] * p[0];
            b2 * (25.0 * b2 + 4.0)
        }),
        c(Strongly, Starlike, T22Inv, Interval(0.2, 1.0), |p| {
            let b2 = p[0] * p[0];
            b2 * (15376.0 * b2 * b2 + 2521.0 * b2 + 4.0) / 81.0
        }),
        // strongly convex
        c(Strongly, Convex, T21LogInv, Interval(2.0 / 3.0, 1.0), |p| {
            let b2 = p[0] * p[0];
            b2 * (b2 + 4.0) / 16.0
        }),
        c(Strongly, Convex, T22LogInv, Interval(2.0 / 3.0, 1.0), |p| {
            let b2 = p[0] * p[0];
            b2 * (25.0 * b2 * b2 + 91.0 * b2 + 1.0) / 1296.0
        }),
        c(Strongly, Convex, T21Inv, Interval(1.0 / 3.0, 1.0), |p| {
            let b2 = p[0] * p[0];
            b2 * (b2 + 1.0)
        }),
        c(Strongly, Convex, T22Inv, Interval((2.0f64 / 17.0).sqrt(), 1.0), |p| {
            let b2 = p[0] * p[0];
            b2 * (289.0 * b2 * b2 + 358.0 * b2 + 1.0) / 324.0
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_data() {
        assert_eq!(phi_coeffs(&CatalogId::Exp).unwrap(), PhiSpec::new(1.0, 0.5, 1.0 / 6.0).unwrap());
    }

    #[test]
    fn janowski_reduces_to_half_plane() {
        let j = phi_coeffs(&CatalogId::Janowski { a: 1.0, b: -1.0 }).unwrap();
        assert_eq!(j, phi_coeffs(&CatalogId::HalfPlane).unwrap());
    }

    #[test]
    fn parabolic_data() {
        let p = phi_coeffs(&CatalogId::Parabolic).unwrap();
        let p2 = PI * PI;
        assert_eq!(p.as_array(), [8.0 / p2, 16.0 / (3.0 * p2), 184.0 / (45.0 * p2)]);
        assert!(exact_phi(&CatalogId::Parabolic).unwrap().is_none());
    }

    #[test]
    fn parameter_ranges() {
        for id in [
            CatalogId::Janowski { a: 0.5, b: 0.5 },
            CatalogId::Janowski { a: 1.2, b: 0.0 },
            CatalogId::Janowski { a: 0.0, b: -1.5 },
            CatalogId::StarlikeOrder { alpha: 1.0 },
            CatalogId::ConvexOrder { alpha: -0.1 },
            CatalogId::StronglyStar { beta: 0.0 },
            CatalogId::StronglyConvex { beta: 1.5 },
            CatalogId::StronglyStar { beta: f64::NAN },
        ] {
            assert!(matches!(phi_coeffs(&id), Err(Error::ParameterOutOfRange(_))), "{id}");
        }
        assert!(phi_coeffs(&CatalogId::StronglyConvex { beta: 1.0 }).is_ok());
        assert!(phi_coeffs(&CatalogId::StarlikeOrder { alpha: 0.0 }).is_ok());
    }

    #[test]
    fn half_plane_fixtures_include_221() {
        let f = fixtures(&CatalogId::HalfPlane, ClassKind::Starlike);
        assert!(f.contains(&Fixture { functional: FunctionalKind::T22Inv, expected: Expected::Rational { numerator: 221, denominator: 1 } }));
    }

    #[test]
    fn lune_fixture() {
        let f = fixtures(&CatalogId::Lune, ClassKind::Starlike);
        assert!(f.iter().any(|x| x.functional == FunctionalKind::T22LogInv
            && x.expected == Expected::Rational { numerator: 9, denominator: 32 }));
    }

    #[test]
    fn lemniscate_has_two_fixtures() {
        let f = fixtures(&CatalogId::Lemniscate, ClassKind::Starlike);
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|x| !x.functional.is_second()));
    }

    #[test]
    fn exact_matches_float() {
        for (id, _) in certificate_entries() {
            if let Some(exact) = exact_phi(&id).unwrap() {
                let float = phi_coeffs(&id).unwrap().as_array();
                for (e, f) in exact.iter().zip(float) {
                    assert!((Scalar::to_f64(e) - f).abs() <= 1e-15 * f.abs().max(1.0), "{id}");
                }
            }
        }
    }
}
