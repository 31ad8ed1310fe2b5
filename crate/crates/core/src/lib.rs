//! Sharp bounds for second-order Toeplitz determinants built from the
//! inverse coefficients `b_n` and the logarithmic inverse coefficients
//! `G_n` of functions in the Ma-Minda classes `S*(phi)` and `C(phi)`.
//!
//! The crate evaluates the closed-form bounds with their hypotheses
//! ([`bounds`]), builds the extremal functions that attain them
//! ([`extremal`]), and checks each bound independently by maximizing the
//! functional over the coefficient body of Schwarz functions ([`oracle`]).

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod extremal;
pub mod minda;
pub mod oracle;
pub mod schwarz;
pub mod series;

pub use num_complex::Complex64;
pub use num_rational::BigRational;

pub use bounds::{theorem_bound, BoundReport, Hypothesis, Region, RegionMembership};
pub use catalog::{CatalogEntry, CatalogId, Expected, Fixture};
pub use error::{Error, Result};
pub use extremal::{attainment, extremal_coeffs, extremal_coeffs_with_taylor, ExtremalCoeffs};
pub use minda::{ClassKind, CoeffBundle, FunctionalKind, PhiSpec};
pub use oracle::{maximize, OracleConfig, Verdict, VerificationReport};
pub use schwarz::{SchurParams, SchwarzTriple};
pub use series::Series;
