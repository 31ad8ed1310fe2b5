use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invtoep_core::bounds::DEFAULT_HYPOTHESIS_TOL;
use invtoep_core::catalog::{exact_phi, phi_coeffs, CatalogId};
use invtoep_core::{BigRational, ClassKind, FunctionalKind, PhiSpec};

#[derive(Debug, Parser)]
#[command(name = "invtoep", version, about = "Sharp Toeplitz bounds for inverse and log-inverse coefficients of Ma-Minda classes")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Also write a JSON run record to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Tolerance for hypothesis checks and inexact table comparisons.
    #[arg(long, global = true, value_name = "X", default_value_t = DEFAULT_HYPOTHESIS_TOL)]
    pub tol: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one bound with its hypotheses.
    Bound(BoundArgs),
    /// Reproduce the published values for the fixed classes.
    Table(TableArgs),
    /// Check a bound by maximizing the functional numerically.
    Verify(VerifyArgs),
    /// Tabulate a bound along a one-parameter family.
    Sweep(SweepArgs),
    /// List the coefficients of the extremal function.
    Extremal(ExtremalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PhiName {
    #[value(name = "halfplane")]
    HalfPlane,
    Janowski,
    /// Starlike or convex of order alpha, following --class.
    Order,
    StarlikeOrder,
    ConvexOrder,
    /// Strongly starlike or strongly convex of order beta, following --class.
    Strongly,
    StronglyStarlike,
    StronglyConvex,
    Cardioid,
    Exp,
    Lune,
    Parabolic,
    Lemniscate,
}

#[derive(Debug, Clone, Args)]
pub struct PhiArgs {
    #[arg(long)]
    pub class: ClassKind,

    /// Built-in generating function.
    #[arg(long, value_enum, conflicts_with_all = ["b1", "b2", "b3"])]
    pub phi: Option<PhiName>,

    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,

    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,

    /// Janowski A.
    #[arg(long = "jan-a", allow_negative_numbers = true)]
    pub jan_a: Option<f64>,

    /// Janowski B.
    #[arg(long = "jan-b", allow_negative_numbers = true)]
    pub jan_b: Option<f64>,

    #[arg(long, allow_negative_numbers = true, requires_all = ["b2", "b3"])]
    pub b1: Option<f64>,

    #[arg(long, allow_negative_numbers = true, requires_all = ["b1", "b3"])]
    pub b2: Option<f64>,

    #[arg(long, allow_negative_numbers = true, requires_all = ["b1", "b2"])]
    pub b3: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub phi: PhiArgs,

    #[arg(long)]
    pub functional: FunctionalKind,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Keep only rows for this generator (e.g. halfplane, exp).
    #[arg(long, value_name = "NAME")]
    pub only: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub phi: PhiArgs,

    #[arg(long)]
    pub functional: FunctionalKind,

    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for refinement; 1 runs serially, 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    Alpha,
    Beta,
    JanowskiA,
    JanowskiB,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub class: ClassKind,

    #[arg(long)]
    pub functional: FunctionalKind,

    #[arg(long, value_enum)]
    pub param: SweepParam,

    /// `lo:hi:step`; each part may be a decimal or a fraction such as 2/3.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub range: SweepRange,

    /// Fixed Janowski A when sweeping B.
    #[arg(long = "jan-a", allow_negative_numbers = true)]
    pub jan_a: Option<f64>,

    /// Fixed Janowski B when sweeping A.
    #[arg(long = "jan-b", allow_negative_numbers = true)]
    pub jan_b: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ExtremalArgs {
    #[command(flatten)]
    pub phi: PhiArgs,

    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..=64))]
    pub order: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl SweepRange {
    /// `lo, lo + step, ...` up to `hi`; a step wider than the range gives
    /// `lo` alone.
    pub fn points(&self) -> Vec<f64> {
        let span = self.hi - self.lo;
        let n = (span / self.step + 1e-9).floor() as usize;
        (0..=n)
            .map(|k| self.lo + k as f64 * self.step)
            .map(|x| if (x - self.hi).abs() <= 1e-9 * self.step { self.hi } else { x })
            .collect()
    }
}

fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((n, d)) => {
            let n: f64 = n.trim().parse().map_err(|_| format!("bad numerator in '{s}'"))?;
            let d: f64 = d.trim().parse().map_err(|_| format!("bad denominator in '{s}'"))?;
            n / d
        }
        None => s.parse().map_err(|_| format!("'{s}' is not a number"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

pub fn parse_range(s: &str) -> Result<SweepRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, step] = parts[..] else {
        return Err(format!("expected lo:hi:step, got '{s}'"));
    };
    let r = SweepRange { lo: parse_number(lo)?, hi: parse_number(hi)?, step: parse_number(step)? };
    if r.step <= 0.0 {
        return Err("step must be positive".into());
    }
    if r.hi < r.lo {
        return Err("hi must not be below lo".into());
    }
    Ok(r)
}

/// A resolved generating function.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub id: Option<CatalogId>,
    pub phi: PhiSpec,
    /// Exact Taylor data when the inputs are exactly representable.
    pub exact: Option<[BigRational; 3]>,
    pub label: String,
}

fn need(v: Option<f64>, flag: &str, name: &str) -> Result<f64, String> {
    v.ok_or_else(|| format!("--phi {name} needs --{flag}"))
}

impl PhiArgs {
    pub fn resolve(&self) -> Result<Resolved, String> {
        let id = match self.phi {
            Some(name) => Some(self.catalog_id(name)?),
            None => None,
        };
        match id {
            Some(id) => {
                let phi = phi_coeffs(&id).map_err(|e| e.to_string())?;
                let exact = exact_phi(&id).map_err(|e| e.to_string())?;
                Ok(Resolved { id: Some(id), phi, exact, label: id.to_string() })
            }
            None => {
                let (Some(b1), Some(b2), Some(b3)) = (self.b1, self.b2, self.b3) else {
                    return Err("give either --phi or all of --b1, --b2, --b3".into());
                };
                let phi = PhiSpec::new(b1, b2, b3).map_err(|e| e.to_string())?;
                let exact = [b1, b2, b3].map(|x| BigRational::from_float(x).expect("checked finite"));
                Ok(Resolved { id: None, phi, exact: Some(exact), label: format!("(B1, B2, B3) = ({b1}, {b2}, {b3})") })
            }
        }
    }

    fn catalog_id(&self, name: PhiName) -> Result<CatalogId, String> {
        let flag = name.to_possible_value().expect("no skipped variants").get_name().to_string();
        let alpha = || need(self.alpha, "alpha", &flag);
        let beta = || need(self.beta, "beta", &flag);
        Ok(match name {
            PhiName::HalfPlane => CatalogId::HalfPlane,
            PhiName::Janowski => CatalogId::Janowski { a: need(self.jan_a, "jan-a", &flag)?, b: need(self.jan_b, "jan-b", &flag)? },
            PhiName::Order => match self.class {
                ClassKind::Starlike => CatalogId::StarlikeOrder { alpha: alpha()? },
                ClassKind::Convex => CatalogId::ConvexOrder { alpha: alpha()? },
            },
            PhiName::StarlikeOrder => CatalogId::StarlikeOrder { alpha: alpha()? },
            PhiName::ConvexOrder => CatalogId::ConvexOrder { alpha: alpha()? },
            PhiName::Strongly => match self.class {
                ClassKind::Starlike => CatalogId::StronglyStar { beta: beta()? },
                ClassKind::Convex => CatalogId::StronglyConvex { beta: beta()? },
            },
            PhiName::StronglyStarlike => CatalogId::StronglyStar { beta: beta()? },
            PhiName::StronglyConvex => CatalogId::StronglyConvex { beta: beta()? },
            PhiName::Cardioid => CatalogId::Cardioid,
            PhiName::Exp => CatalogId::Exp,
            PhiName::Lune => CatalogId::Lune,
            PhiName::Parabolic => CatalogId::Parabolic,
            PhiName::Lemniscate => CatalogId::Lemniscate,
        })
    }
}

impl SweepArgs {
    pub fn id_at(&self, x: f64) -> Result<CatalogId, String> {
        Ok(match (self.param, self.class) {
            (SweepParam::Alpha, ClassKind::Starlike) => CatalogId::StarlikeOrder { alpha: x },
            (SweepParam::Alpha, ClassKind::Convex) => CatalogId::ConvexOrder { alpha: x },
            (SweepParam::Beta, ClassKind::Starlike) => CatalogId::StronglyStar { beta: x },
            (SweepParam::Beta, ClassKind::Convex) => CatalogId::StronglyConvex { beta: x },
            (SweepParam::JanowskiA, _) => {
                CatalogId::Janowski { a: x, b: self.jan_b.ok_or("sweeping janowski-a needs --jan-b")? }
            }
            (SweepParam::JanowskiB, _) => {
                CatalogId::Janowski { a: self.jan_a.ok_or("sweeping janowski-b needs --jan-a")?, b: x }
            }
        })
    }
}
