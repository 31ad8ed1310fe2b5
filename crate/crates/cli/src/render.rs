//! Text, markdown and CSV renderings. JSON goes straight through serde.

use std::fmt::Write;

use invtoep_core::{BigRational, BoundReport, Complex64, VerificationReport};
use serde::Serialize;

use crate::record::{ExtremalListing, SweepRow, TableRow};

/// Rationals with denominators wider than this are not worth printing.
const MAX_DENOM_BITS: u64 = 48;

pub fn fraction(r: &BigRational) -> Option<String> {
    (r.denom().bits() <= MAX_DENOM_BITS && r.numer().bits() <= 2 * MAX_DENOM_BITS).then(|| r.to_string())
}

/// Decimal with float noise below `1e-12` of the magnitude rounded away.
pub fn decimal(x: f64) -> String {
    if x == 0.0 || x.abs() < 1e-300 {
        return "0".into();
    }
    let digits = (11 - x.abs().log10().floor() as i32).clamp(0, 17) as usize;
    let s = format!("{x:.digits$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

pub fn complex(z: Complex64) -> String {
    let tiny = 1e-13 * z.re.abs().max(z.im.abs()).max(1.0);
    let re = if z.re.abs() < tiny { 0.0 } else { z.re };
    let im = if z.im.abs() < tiny { 0.0 } else { z.im };
    let imag = |v: f64| match decimal(v).as_str() {
        "1" => "i".to_string(),
        "-1" => "-i".to_string(),
        s => format!("{s}i"),
    };
    match (re == 0.0, im == 0.0) {
        (_, true) => decimal(re),
        (true, false) => imag(im),
        (false, false) if im > 0.0 => format!("{}+{}", decimal(re), imag(im)),
        (false, false) => format!("{}{}", decimal(re), imag(im)),
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn csv_out(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn markdown(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}|", header.iter().map(|_| "---").collect::<Vec<_>>().join("|"));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| c.replace('|', "\\|")).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

fn aligned(pairs: &[(String, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in pairs {
        let _ = writeln!(out, "  {k:width$}  {v}");
    }
    out
}

fn kv(k: &str, v: impl Into<String>) -> (String, String) {
    (k.to_string(), v.into())
}

pub struct BoundView<'a> {
    pub report: &'a BoundReport,
    pub label: &'a str,
    pub exact: Option<String>,
}

impl BoundView<'_> {
    fn value(&self) -> String {
        match &self.exact {
            Some(q) if *q != decimal(self.report.bound) => format!("{} = {q}", decimal(self.report.bound)),
            _ => decimal(self.report.bound),
        }
    }

    fn sigma_mu(&self) -> Option<String> {
        self.report
            .sigma_mu
            .map(|m| format!("{}, {} (region {})", decimal(m.sigma), decimal(m.mu), m.region))
    }

    pub fn text(&self) -> String {
        let r = self.report;
        let mut out = format!("{} bound for {}, phi = {}\n", r.functional, r.class, self.label);
        let mut pairs = vec![
            kv("B1, B2, B3", format!("{}, {}, {}", r.phi.b1, r.phi.b2, r.phi.b3)),
            kv("bound", self.value()),
            kv("applicable", if r.applicable { "yes".to_string() } else { "no (formula value, unproven)".to_string() }),
        ];
        if let Some(sm) = self.sigma_mu() {
            pairs.push(kv("sigma, mu", sm));
        }
        pairs.push(kv("witness", r.witness.clone()));
        out.push_str(&aligned(&pairs));
        out.push_str("  hypotheses\n");
        for h in &r.hypotheses {
            let mark = if h.satisfied { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "    [{mark}] {}  (margin {})", h.name, decimal(h.margin));
        }
        out
    }

    pub fn markdown(&self) -> String {
        let r = self.report;
        let mut rows = vec![
            vec!["functional".into(), r.functional.to_string()],
            vec!["class".into(), r.class.to_string()],
            vec!["phi".into(), self.label.to_string()],
            vec!["bound".into(), self.value()],
            vec!["applicable".into(), yes_no(r.applicable).into()],
        ];
        if let Some(sm) = self.sigma_mu() {
            rows.push(vec!["sigma, mu".into(), sm]);
        }
        for h in &r.hypotheses {
            rows.push(vec![format!("`{}`", h.name), format!("{} (margin {})", yes_no(h.satisfied), decimal(h.margin))]);
        }
        rows.push(vec!["witness".into(), r.witness.clone()]);
        markdown(&["field", "value"], rows)
    }

    pub fn csv(&self) -> String {
        let r = self.report;
        csv_out(
            &["functional", "class", "phi", "b1", "b2", "b3", "bound", "exact", "applicable"],
            [vec![
                r.functional.to_string(),
                r.class.to_string(),
                self.label.to_string(),
                r.phi.b1.to_string(),
                r.phi.b2.to_string(),
                r.phi.b3.to_string(),
                r.bound.to_string(),
                self.exact.clone().unwrap_or_default(),
                r.applicable.to_string(),
            ]],
        )
    }
}

fn argmax(r: &VerificationReport) -> String {
    let [g0, g1, g2] = r.argmax.as_array();
    format!("({}, {}, {})", complex(g0), complex(g1), complex(g2))
}

pub fn verification_text(r: &VerificationReport, label: &str) -> String {
    let mut out = format!("verify {} for {}, phi = {}\n", r.functional, r.class, label);
    out.push_str(&aligned(&[
        kv("bound", decimal(r.bound)),
        kv("applicable", if r.applicable { "yes".to_string() } else { "no (formula value, unproven)".to_string() }),
        kv("empirical max", r.empirical_max.to_string()),
        kv("margin", format!("{:e}", r.margin)),
        kv("argmax", argmax(r)),
        kv("samples", r.samples_used.to_string()),
        kv("refinement", format!("{} evaluations", r.refinement_iters)),
        kv("seed", r.seed.to_string()),
        kv("verdict", r.verdict.as_str()),
    ]));
    out
}

pub fn verification_markdown(r: &VerificationReport, label: &str) -> String {
    markdown(
        &["field", "value"],
        [
            ("functional", r.functional.to_string()),
            ("class", r.class.to_string()),
            ("phi", label.to_string()),
            ("bound", decimal(r.bound)),
            ("applicable", yes_no(r.applicable).to_string()),
            ("empirical max", r.empirical_max.to_string()),
            ("margin", format!("{:e}", r.margin)),
            ("argmax", argmax(r)),
            ("samples", r.samples_used.to_string()),
            ("refinement evaluations", r.refinement_iters.to_string()),
            ("seed", r.seed.to_string()),
            ("verdict", r.verdict.as_str().to_string()),
        ]
        .map(|(k, v)| vec![k.to_string(), v]),
    )
}

pub fn verification_csv(r: &VerificationReport, label: &str) -> String {
    csv_out(
        &[
            "functional",
            "class",
            "phi",
            "bound",
            "applicable",
            "empirical_max",
            "margin",
            "samples_used",
            "refinement_iters",
            "seed",
            "verdict",
        ],
        [vec![
            r.functional.to_string(),
            r.class.to_string(),
            label.to_string(),
            r.bound.to_string(),
            r.applicable.to_string(),
            r.empirical_max.to_string(),
            r.margin.to_string(),
            r.samples_used.to_string(),
            r.refinement_iters.to_string(),
            r.seed.to_string(),
            r.verdict.as_str().to_string(),
        ]],
    )
}

fn expected_cell(row: &TableRow) -> String {
    match row.expected.as_rational() {
        Some(_) => row.expected.to_string(),
        None => row.expected.value().to_string(),
    }
}

fn computed_cell(row: &TableRow) -> String {
    row.computed_exact.clone().unwrap_or_else(|| row.computed.to_string())
}

pub fn table_csv(rows: &[TableRow]) -> String {
    csv_out(
        &["class", "functional", "expected", "computed", "attained", "match"],
        rows.iter().map(|r| {
            vec![
                format!("{}({})", r.class, r.phi),
                r.functional.to_string(),
                expected_cell(r),
                computed_cell(r),
                r.attained.to_string(),
                r.matched.to_string(),
            ]
        }),
    )
}

fn table_cells(r: &TableRow) -> Vec<String> {
    vec![
        r.class.to_string(),
        r.phi.clone(),
        r.functional.to_string(),
        r.expected.to_string(),
        computed_cell(r),
        decimal(r.attained),
        yes_no(r.matched).to_string(),
        r.notes.clone(),
    ]
}

const TABLE_HEADER: [&str; 8] = ["class", "phi", "functional", "expected", "computed", "attained", "match", "notes"];

pub fn table_markdown(rows: &[TableRow]) -> String {
    markdown(&TABLE_HEADER, rows.iter().map(table_cells))
}

pub fn table_text(rows: &[TableRow]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(table_cells).collect();
    let mut widths: Vec<usize> = TABLE_HEADER.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |row: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in row.iter().zip(&widths).enumerate() {
            if i + 1 == row.len() {
                s.push_str(c);
            } else {
                let _ = write!(s, "{c:w$}  ");
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(&TABLE_HEADER.map(String::from));
    for row in &cells {
        out.push_str(&line(row));
    }
    let matched = rows.iter().filter(|r| r.matched).count();
    let _ = writeln!(out, "{matched}/{} rows match", rows.len());
    out
}

fn sweep_cells(r: &SweepRow) -> Vec<String> {
    vec![r.param.to_string(), r.bound.to_string(), r.applicable.to_string(), r.attained.to_string()]
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    csv_out(&["param", "bound", "applicable", "attained"], rows.iter().map(sweep_cells))
}

pub fn sweep_markdown(rows: &[SweepRow]) -> String {
    markdown(&["param", "bound", "applicable", "attained"], rows.iter().map(sweep_cells))
}

fn extremal_pairs(e: &ExtremalListing) -> Vec<(String, String)> {
    let mut pairs: Vec<(String, String)> =
        e.a.iter().enumerate().map(|(i, a)| (format!("a{}", i + 1), complex(*a))).collect();
    let b = &e.bundle;
    for (name, v) in [("b2", b.b2), ("b3", b.b3), ("b4", b.b4), ("G1", b.g1), ("G2", b.g2), ("G3", b.g3)] {
        pairs.push((name.to_string(), complex(v)));
    }
    for f in &e.functionals {
        pairs.push((f.functional.to_string(), decimal(f.value)));
    }
    pairs
}

pub fn extremal_text(e: &ExtremalListing) -> String {
    let mut out = format!("extremal function for {}, phi = {}\n", e.class, e.label);
    out.push_str(&aligned(&extremal_pairs(e)));
    out
}

pub fn extremal_markdown(e: &ExtremalListing) -> String {
    markdown(&["quantity", "value"], extremal_pairs(e).into_iter().map(|(k, v)| vec![k, v]))
}

pub fn extremal_csv(e: &ExtremalListing) -> String {
    let b = &e.bundle;
    let mut rows: Vec<(String, Complex64)> =
        e.a.iter().enumerate().map(|(i, a)| (format!("a{}", i + 1), *a)).collect();
    for (name, v) in [("b2", b.b2), ("b3", b.b3), ("b4", b.b4), ("G1", b.g1), ("G2", b.g2), ("G3", b.g3)] {
        rows.push((name.to_string(), v));
    }
    for f in &e.functionals {
        rows.push((f.functional.to_string(), Complex64::new(f.value, 0.0)));
    }
    // + 0.0 folds -0 into 0
    csv_out(&["quantity", "re", "im"], rows.into_iter().map(|(k, v)| vec![k, (v.re + 0.0).to_string(), (v.im + 0.0).to_string()]))
}
