use std::process::ExitCode;

use invtoep_core::bounds::{theorem_bound_exact, theorem_bound_with_tol};
use invtoep_core::catalog::{exact_phi, phi_coeffs, table_entries, CatalogId, Expected};
use invtoep_core::minda::toeplitz;
use invtoep_core::oracle::maximize_with;
use invtoep_core::{attainment, extremal_coeffs, FunctionalKind, OracleConfig, Verdict};

use crate::args::{BoundArgs, Cli, Command, ExtremalArgs, Format, SweepArgs, TableArgs, VerifyArgs};
use crate::record::{ExtremalListing, FunctionalValue, Report, RunRecord, SweepRow, TableRow};
use crate::render::{self, BoundView};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Usage = 2,
    NotApplicable = 3,
    NotAttained = 4,
    Violation = 5,
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> Self {
        ExitCode::from(e as u8)
    }
}

/// Output of one command before it is written anywhere.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub exit: Exit,
    pub report: Report,
}

pub fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Bound(a) => bound(a, cli.format, cli.tol),
        Command::Table(a) => table(a, cli.format, cli.tol),
        Command::Verify(a) => verify(a, cli.format, cli.tol),
        Command::Sweep(a) => sweep(a, cli.format, cli.tol),
        Command::Extremal(a) => extremal(a, cli.format),
    }
}

/// Runs the command, writes stdout and the optional run record; usage
/// problems are reported on stderr with exit code 2.
pub fn main_with(cli: &Cli, argv: Vec<String>) -> ExitCode {
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return Exit::Usage.into();
        }
    };
    print!("{}", outcome.stdout);
    if let Some(path) = &cli.out {
        if let Err(e) = RunRecord::new(argv, outcome.report).write(path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return Exit::Usage.into();
        }
    }
    outcome.exit.into()
}

fn bound(a: &BoundArgs, format: Format, tol: f64) -> Result<Outcome, String> {
    let phi = a.phi.resolve()?;
    let report = theorem_bound_with_tol(a.functional, a.phi.class, &phi.phi, tol);
    let exact = phi
        .exact
        .as_ref()
        .and_then(|b| render::fraction(&theorem_bound_exact(a.functional, a.phi.class, b).0));
    let view = BoundView { report: &report, label: &phi.label, exact };
    let stdout = match format {
        Format::Text => view.text(),
        Format::Json => render::json(&report),
        Format::Csv => view.csv(),
        Format::Markdown => view.markdown(),
    };
    let exit = if report.applicable { Exit::Ok } else { Exit::NotApplicable };
    Ok(Outcome { stdout, exit, report: Report::Bound(report) })
}

fn table_rows(only: Option<&str>, tol: f64) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for entry in table_entries() {
        if only.is_some_and(|name| name != entry.id.name()) {
            continue;
        }
        let exact = exact_phi(&entry.id).expect("built-in entries are valid");
        for fx in &entry.fixtures {
            let report = theorem_bound_with_tol(fx.functional, entry.class, &entry.phi, tol);
            let attained = attainment(fx.functional, entry.class, &entry.phi);
            let (computed_exact, value_matches, applicable) = match (&exact, fx.expected.as_rational()) {
                (Some(b), Some(want)) => {
                    let (value, applicable) = theorem_bound_exact(fx.functional, entry.class, b);
                    (Some(value.to_string()), value == want, applicable)
                }
                _ => (None, close(report.bound, fx.expected.value(), tol), report.applicable),
            };
            let notes = match (&entry.id, &fx.expected) {
                (CatalogId::Lemniscate, _) => "generator sqrt(1+z^2) as printed".to_string(),
                (_, Expected::Real { .. }) => format!("compared to relative {tol:e}"),
                _ => String::new(),
            };
            rows.push(TableRow {
                phi: entry.id.name().to_string(),
                class: entry.class,
                functional: fx.functional,
                expected: fx.expected.clone(),
                computed: report.bound,
                computed_exact,
                attained,
                applicable,
                matched: value_matches && applicable && close(attained, report.bound, tol),
                notes,
            });
        }
    }
    rows
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

fn table(a: &TableArgs, format: Format, tol: f64) -> Result<Outcome, String> {
    if let Some(name) = &a.only {
        if !table_entries().iter().any(|e| e.id.name() == name) {
            let names: Vec<&str> = table_entries().iter().map(|e| e.id.name()).collect();
            return Err(format!("no table rows for '{name}' (have {})", names.join(", ")));
        }
    }
    let rows = table_rows(a.only.as_deref(), tol);
    let stdout = match format {
        Format::Text => render::table_text(&rows),
        Format::Json => render::json(&rows),
        Format::Csv => render::table_csv(&rows),
        Format::Markdown => render::table_markdown(&rows),
    };
    let exit = if rows.iter().all(|r| r.matched) { Exit::Ok } else { Exit::Violation };
    Ok(Outcome { stdout, exit, report: Report::Table(rows) })
}

fn verify(a: &VerifyArgs, format: Format, tol: f64) -> Result<Outcome, String> {
    let phi = a.phi.resolve()?;
    let cfg = OracleConfig { hypothesis_tol: tol, parallel: a.threads != 1, ..Default::default() };
    let go = || maximize_with(a.functional, a.phi.class, &phi.phi, a.budget, a.seed, &cfg);
    let report = if a.threads > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(a.threads)
            .build()
            .map_err(|e| format!("cannot start {} threads: {e}", a.threads))?
            .install(go)
    } else {
        go()
    };
    let stdout = match format {
        Format::Text => render::verification_text(&report, &phi.label),
        Format::Json => render::json(&report),
        Format::Csv => render::verification_csv(&report, &phi.label),
        Format::Markdown => render::verification_markdown(&report, &phi.label),
    };
    let exit = match report.verdict {
        Verdict::SharpConfirmed => Exit::Ok,
        Verdict::ValidNotAttained => Exit::NotAttained,
        Verdict::Violation => Exit::Violation,
    };
    Ok(Outcome { stdout, exit, report: Report::Verification(report) })
}

fn sweep(a: &SweepArgs, format: Format, tol: f64) -> Result<Outcome, String> {
    let mut rows = Vec::new();
    for x in a.range.points() {
        let id = a.id_at(x)?;
        let phi = phi_coeffs(&id).map_err(|e| format!("at {x}: {e}"))?;
        let report = theorem_bound_with_tol(a.functional, a.class, &phi, tol);
        rows.push(SweepRow {
            param: x,
            bound: report.bound,
            applicable: report.applicable,
            attained: attainment(a.functional, a.class, &phi),
        });
    }
    let stdout = match format {
        Format::Text | Format::Csv => render::sweep_csv(&rows),
        Format::Json => render::json(&rows),
        Format::Markdown => render::sweep_markdown(&rows),
    };
    Ok(Outcome { stdout, exit: Exit::Ok, report: Report::Sweep(rows) })
}

fn extremal(a: &ExtremalArgs, format: Format) -> Result<Outcome, String> {
    let phi = a.phi.resolve()?;
    let e = extremal_coeffs(a.phi.class, &phi.phi, a.order as usize);
    let bundle = e.bundle();
    let listing = ExtremalListing {
        class: a.phi.class,
        phi: phi.phi,
        label: phi.label.clone(),
        a: e.a.clone(),
        bundle,
        functionals: FunctionalKind::ALL
            .into_iter()
            .map(|functional| FunctionalValue { functional, value: toeplitz(functional, &bundle) })
            .collect(),
    };
    let stdout = match format {
        Format::Text => render::extremal_text(&listing),
        Format::Json => render::json(&listing),
        Format::Csv => render::extremal_csv(&listing),
        Format::Markdown => render::extremal_markdown(&listing),
    };
    Ok(Outcome { stdout, exit: Exit::Ok, report: Report::Extremal(listing) })
}
