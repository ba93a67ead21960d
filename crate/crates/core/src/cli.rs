//! Argument parsing and report generation for the `hesspave` binary.
//!
//! [`execute`] does all the work and returns the rendered report with an exit
//! code, so the binary only has to print it.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{Composition, HessenbergFunction, Permutation, Tableau};
use crate::error::Error;
use crate::exactla::{generic_hess_flag, hess_zero_coordinates, ExactMatrix, Poly, Scalar};
use crate::oracle::{Oracle, DEFAULT_BUDGET_BITS};
use crate::paving::{
    column_sort_trace, enumerate_cells_with_workers, hessenberg_inversions_of, inversion_profile, r0_tableau,
    CellDescriptor, InversionProfile, PoincareData,
};
use crate::verify::{self, CheckStatus, SuiteConfig};

/// Bumped on any change to the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hesspave", version, about = "Affine pavings of Hessenberg varieties Hess(X_λ, h)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Row lengths of λ, comma separated, e.g. 2,2,2
    #[arg(long = "lambda", global = true, value_name = "PARTS")]
    pub lambda: Option<String>,
    /// Hessenberg function: `springer` or comma-separated h(1),…,h(n)
    #[arg(long = "h", global = true, default_value = "springer", value_name = "H")]
    pub h: String,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
    /// Worker threads for cell enumeration and point counts
    #[arg(long, global = true, env = "HESSPAVE_WORKERS", default_value_t = 1)]
    pub workers: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, clap::Args)]
pub struct FieldArgs {
    /// Prime field size for brute-force counts
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Largest admissible log2 of a brute-force search
    #[arg(long = "budget-bits", default_value_t = DEFAULT_BUDGET_BITS, value_parser = clap::value_parser!(u32).range(1..))]
    pub budget_bits: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every cell with its tableau, Hessenberg inversions and dimension
    Cells,
    /// Cell counts by dimension
    Poincare,
    /// The unique zero-dimensional cell, or EMPTY
    R0,
    /// Run the invariant suites for (λ, h, q)
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random samples per randomized check
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Symbolic columns of the generic flag with vanishing coordinates removed
    GenericFlag {
        /// One-line notation, e.g. 3,6,2,1,5,4
        #[arg(long)]
        w: String,
    },
    /// Brute-force point count over F_q against the paving
    Count {
        #[command(flatten)]
        field: FieldArgs,
        /// Count a single Schubert cell
        #[arg(long)]
        w: Option<String>,
    },
    /// Inversion profile of a filling and of its standardization
    Profile {
        /// Rows separated by `/`, entries by spaces, e.g. "3 1/2 4"
        #[arg(long, conflicts_with = "w")]
        tableau: Option<String>,
        /// Filling R(w) of λ
        #[arg(long)]
        w: Option<String>,
        /// Column-sort trace for d(i, j); requires --j
        #[arg(long, requires = "j")]
        i: Option<usize>,
        #[arg(long, requires = "i")]
        j: Option<usize>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Cells => "cells",
            Command::Poincare => "poincare",
            Command::R0 => "r0",
            Command::Verify { .. } => "verify",
            Command::GenericFlag { .. } => "generic-flag",
            Command::Count { .. } => "count",
            Command::Profile { .. } => "profile",
        }
    }
}

/// Rendered report plus diagnostics for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(problems: &[String]) -> Self {
        let mut stderr = String::from("error: invalid input\n");
        for p in problems {
            let _ = writeln!(stderr, "  - {p}");
        }
        Self { code: EXIT_INPUT, stdout: String::new(), stderr }
    }
}

struct Report {
    code: i32,
    header_seed: Option<u64>,
    json: Value,
    text: String,
    csv: String,
    note: String,
}

impl Report {
    fn ok(json: Value, text: String, csv: String) -> Self {
        Self { code: EXIT_OK, header_seed: None, json, text, csv, note: String::new() }
    }
}

fn problems_of(e: &Error) -> Vec<String> {
    match e {
        Error::InvalidHessenberg(list) => list.iter().map(|p| format!("--h: {p}")).collect(),
        other => vec![other.to_string()],
    }
}

/// Parses λ and h, collecting every problem rather than stopping at the first.
pub fn parse_inputs(lambda: Option<&str>, h: &str) -> std::result::Result<(Composition, HessenbergFunction), Vec<String>> {
    let mut problems = Vec::new();
    let shape = match lambda {
        None => {
            problems.push("--lambda is required".to_string());
            None
        }
        Some(s) => match s.parse::<Composition>() {
            Ok(c) if c.size() == 0 => {
                problems.push("--lambda: λ must have a positive part".to_string());
                None
            }
            Ok(c) => Some(c),
            Err(e) => {
                problems.push(format!("--lambda: {e}"));
                None
            }
        },
    };
    let h = if h.trim().eq_ignore_ascii_case("springer") {
        shape.as_ref().map(|c| HessenbergFunction::springer(c.size()))
    } else {
        match crate::combinatorics::parse_list(h).and_then(HessenbergFunction::new) {
            Ok(hf) => Some(hf),
            Err(e) => {
                problems.extend(problems_of(&e));
                None
            }
        }
    };
    if let (Some(c), Some(hf)) = (&shape, &h) {
        if c.size() != hf.n() {
            problems.push(format!("--h has {} values but λ has {} boxes", hf.n(), c.size()));
        }
    }
    match (shape, h) {
        (Some(c), Some(hf)) if problems.is_empty() => Ok((c, hf)),
        _ => Err(problems),
    }
}

fn parse_word(s: &str, n: usize) -> std::result::Result<Permutation, Vec<String>> {
    let w: Permutation = s.parse().map_err(|e: Error| vec![format!("--w: {e}")])?;
    if w.n() != n {
        return Err(vec![format!("--w has {} entries but λ has {n} boxes", w.n())]);
    }
    Ok(w)
}

/// Runs one invocation.
pub fn execute(cli: &Cli) -> Outcome {
    let (shape, h) = match parse_inputs(cli.lambda.as_deref(), &cli.h) {
        Ok(v) => v,
        Err(p) => return Outcome::input_error(&p),
    };
    let result = match &cli.command {
        Command::Cells => cmd_cells(&shape, &h, cli.workers),
        Command::Poincare => cmd_poincare(&shape, &h, cli.workers),
        Command::R0 => cmd_r0(&shape, &h),
        Command::Verify { field, seed, trials } => {
            let cfg = SuiteConfig { q: field.q, budget_bits: field.budget_bits, workers: cli.workers, seed: *seed, trials: *trials };
            cmd_verify(&shape, &h, &cfg)
        }
        Command::GenericFlag { w } => parse_word(w, shape.size()).and_then(|w| cmd_generic_flag(&shape, &h, &w)),
        Command::Count { field, w } => {
            let w = match w.as_deref().map(|s| parse_word(s, shape.size())).transpose() {
                Ok(w) => w,
                Err(p) => return Outcome::input_error(&p),
            };
            cmd_count(&shape, &h, field, cli.workers, w.as_ref())
        }
        Command::Profile { tableau, w, i, j } => {
            let r = match (tableau, w) {
                (Some(t), _) => Tableau::parse(&t.replace('/', "\n"))
                    .map_err(|e| vec![format!("--tableau: {e}")])
                    .and_then(|t| {
                        if t.shape() != &shape {
                            Err(vec![format!("--tableau has shape {} but λ = {shape}", t.shape())])
                        } else {
                            Ok(t)
                        }
                    }),
                (None, Some(w)) => parse_word(w, shape.size())
                    .and_then(|w| Tableau::of_permutation(&w, &shape).map_err(|e| vec![e.to_string()])),
                (None, None) => Err(vec!["profile needs --tableau or --w".to_string()]),
            };
            r.and_then(|r| cmd_profile(&r, &h, i.zip(*j)))
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(p) => return Outcome::input_error(&p),
    };
    let stdout = match cli.format {
        Format::Json => {
            let mut doc = json!({
                "command": cli.command.name(),
                "lambda": shape,
                "h": h,
                "version": env!("CARGO_PKG_VERSION"),
                "schema_version": SCHEMA_VERSION,
            });
            if let Some(seed) = report.header_seed {
                doc["seed"] = json!(seed);
            }
            doc["result"] = report.json;
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => format!("lambda = {shape}, h = {h}\n{}", report.text),
        Format::Csv => report.csv,
    };
    Outcome { code: report.code, stdout, stderr: report.note }
}

type CmdResult = std::result::Result<Report, Vec<String>>;

fn lib_err(e: Error) -> Vec<String> {
    problems_of(&e)
}

fn pairs_text(pairs: impl Iterator<Item = (usize, usize)>) -> String {
    pairs.map(|(k, l)| format!("({k},{l})")).collect::<Vec<_>>().join(" ")
}

fn cell_json(c: &CellDescriptor) -> Value {
    json!({
        "w": c.w,
        "tableau": c.tableau,
        "hessenberg_inversions": c.hess_inv.iter().collect::<Vec<_>>(),
        "dim": c.dim,
    })
}

fn cmd_cells(shape: &Composition, h: &HessenbergFunction, workers: usize) -> CmdResult {
    let cells = enumerate_cells_with_workers(shape, h, workers).map_err(lib_err)?;
    let mut text = format!("{} cells\n", cells.len());
    let mut csv = String::from("w;dim;inversions\n");
    for c in &cells {
        let inv = pairs_text(c.hess_inv.iter());
        let _ = writeln!(text, "w={} dim={} tableau={} inversions={}", c.w, c.dim, c.tableau, inv);
        let _ = writeln!(csv, "{};{};{}", c.w, c.dim, inv);
    }
    let json = json!({ "count": cells.len(), "cells": cells.iter().map(cell_json).collect::<Vec<_>>() });
    Ok(Report::ok(json, text, csv))
}

fn cmd_poincare(shape: &Composition, h: &HessenbergFunction, workers: usize) -> CmdResult {
    let cells = enumerate_cells_with_workers(shape, h, workers).map_err(lib_err)?;
    let p = PoincareData::from_cells(&cells);
    let text = if p.is_empty() {
        "EMPTY\n".to_string()
    } else {
        format!("coefficients = {:?}\ntotal cells = {}\n", p.coeffs, p.total_cells())
    };
    let mut csv = String::from("degree;cells\n");
    for (k, c) in p.coeffs.iter().enumerate() {
        let _ = writeln!(csv, "{k};{c}");
    }
    let json = json!({ "empty": p.is_empty(), "coefficients": p.coeffs, "total_cells": p.total_cells() });
    Ok(Report::ok(json, text, csv))
}

fn cmd_r0(shape: &Composition, h: &HessenbergFunction) -> CmdResult {
    let r0 = r0_tableau(shape, h).map_err(lib_err)?;
    let check = verify::check_connectedness(shape, h);
    let unique = !check.failed();
    let (text, csv, json) = match &r0 {
        None => ("EMPTY\n".to_string(), "EMPTY\n".to_string(), json!({ "empty": true, "unique_zero_cell": unique })),
        Some(t) => {
            let mut csv = String::from("row;entries\n");
            for (i, row) in t.rows().iter().enumerate() {
                let entries: Vec<String> = row.iter().map(usize::to_string).collect();
                let _ = writeln!(csv, "{};{}", i + 1, entries.join(" "));
            }
            let json = json!({
                "empty": false,
                "tableau": t,
                "w": t.permutation(),
                "unique_zero_cell": unique,
            });
            (t.to_text(), csv, json)
        }
    };
    let mut report = Report::ok(json, text, csv);
    if let CheckStatus::Failed { witness } = check.status {
        report.code = EXIT_VERIFY_FAILED;
        report.note = format!("zero-dimensional cell check failed: {witness}\n");
    }
    Ok(report)
}

fn status_text(s: &CheckStatus) -> String {
    match s {
        CheckStatus::Passed => "PASS".into(),
        CheckStatus::Failed { witness } => format!("FAIL {witness}"),
        CheckStatus::Skipped { reason } => format!("SKIP {reason}"),
        CheckStatus::BudgetExceeded { needed_bits, budget_bits } => {
            format!("BUDGET needs {needed_bits:.2} bits > {budget_bits}")
        }
    }
}

fn cmd_verify(shape: &Composition, h: &HessenbergFunction, cfg: &SuiteConfig) -> CmdResult {
    let report = verify::run_suite(shape, h, cfg).map_err(lib_err)?;
    let mut text = String::new();
    let mut csv = String::from("check;cases;status\n");
    for c in &report.checks {
        let status = status_text(&c.status);
        let _ = writeln!(text, "{:<28} {:>6}  {}", c.name, c.cases, status);
        let _ = writeln!(csv, "{};{};{}", c.name, c.cases, status.replace(['\n', ';'], " "));
    }
    let failure = report.first_failure();
    let code = if failure.is_some() {
        EXIT_VERIFY_FAILED
    } else if report.budget_exceeded() {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let note = match (failure, code) {
        (Some(f), _) => format!("first failing invariant: {}\n", f.name),
        (None, EXIT_BUDGET) => "work budget exceeded; report is partial\n".to_string(),
        _ => String::new(),
    };
    let json = json!({
        "q": cfg.q,
        "budget_bits": cfg.budget_bits,
        "trials": cfg.trials,
        "passed": report.passed(),
        "first_failure": failure,
        "checks": report.checks,
    });
    Ok(Report { code, header_seed: Some(cfg.seed), json, text, csv, note })
}

/// `Σ c_a e_a`, the pivot `e_{w(j)}` first and then by decreasing row.
fn render_column(v: &[Poly], pivot: usize) -> String {
    let mut rows: Vec<usize> = (1..=v.len()).filter(|&a| !v[a - 1].is_zero()).collect();
    rows.sort_by_key(|&a| (a != pivot, std::cmp::Reverse(a)));
    let terms: Vec<String> = rows
        .into_iter()
        .map(|a| {
            let c = &v[a - 1];
            if c.is_one() {
                format!("e{a}")
            } else if c.num_terms() == 1 {
                format!("{c}*e{a}")
            } else {
                format!("({c})*e{a}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn cmd_generic_flag(shape: &Composition, h: &HessenbergFunction, w: &Permutation) -> CmdResult {
    let t = Tableau::of_permutation(w, shape).map_err(lib_err)?;
    if !t.is_row_strict() {
        return Err(vec![format!("R(w) = {t} is not row-strict, so w indexes no cell")]);
    }
    let h_strict = t.is_h_strict(h).map_err(lib_err)?;
    let zeros = hess_zero_coordinates(w, shape, h).map_err(lib_err)?;
    let flag = generic_hess_flag(w, shape, h).map_err(lib_err)?;
    let matrix: &ExactMatrix<Poly> = flag.matrix();
    let columns: Vec<String> = (1..=w.n()).map(|j| render_column(&matrix.column(j), w.get(j))).collect();
    let mut text = format!("w = {w}\nR(w) = {t}\n");
    if !zeros.is_empty() {
        let _ = writeln!(text, "set to zero: {}", zeros.iter().map(|&(a, b)| format!("x{a}{b}")).collect::<Vec<_>>().join(", "));
    }
    let mut csv = String::from("column;vector\n");
    for (j, c) in columns.iter().enumerate() {
        let _ = writeln!(text, "v{} = {c}", j + 1);
        let _ = writeln!(csv, "{};{c}", j + 1);
    }
    let rows: Vec<Vec<Poly>> = (1..=matrix.rows()).map(|a| matrix.row(a)).collect();
    let json = json!({
        "w": w,
        "tableau": t,
        "h_strict": h_strict,
        "zeroed": zeros,
        "columns": columns,
        "matrix": rows,
    });
    let mut report = Report::ok(json, text, csv);
    if !h_strict {
        report.note = format!("note: R(w) = {t} is not h-strict; this cell does not meet Hess(X_λ, h)\n");
    }
    Ok(report)
}

fn cmd_count(
    shape: &Composition,
    h: &HessenbergFunction,
    field: &FieldArgs,
    workers: usize,
    w: Option<&Permutation>,
) -> CmdResult {
    let oracle = match Oracle::new(field.q) {
        Ok(o) => o.with_budget(field.budget_bits).with_workers(workers),
        Err(e) => return Err(vec![format!("--q: {e}")]),
    };
    let outcome = match w {
        Some(w) => oracle.cell_point_count(w, shape, h).map(|count| {
            let dim = Tableau::of_permutation(w, shape)
                .ok()
                .filter(|t| t.is_h_strict(h).unwrap_or(false))
                .map(|t| hessenberg_inversions_of(&t, h).expect("sizes agree").len());
            let predicted = dim.map_or(0, |d| (field.q as u64).pow(d as u32));
            let json = json!({ "q": field.q, "w": w, "count": count, "dim": dim, "predicted": predicted, "match": count == predicted });
            let text = format!("w = {w}: {count} points over F_{} (predicted {predicted})\n", field.q);
            let csv = format!("w;count;dim;predicted\n{w};{count};{};{predicted}\n", dim.map_or(String::new(), |d| d.to_string()));
            (count == predicted, json, text, csv)
        }),
        None => oracle.variety_point_count(shape, h).map(|r| {
            let mut text = format!("{} points over F_{} (predicted {})\n", r.total, r.q, r.predicted);
            let mut csv = String::from("w;count;dim;predicted\n");
            for c in &r.per_cell {
                let dim = c.dim.map_or(String::new(), |d| d.to_string());
                let _ = writeln!(text, "w={} count={} dim={} predicted={}", c.w, c.count, dim, c.predicted);
                let _ = writeln!(csv, "{};{};{};{}", c.w, c.count, dim, c.predicted);
            }
            (r.matches, serde_json::to_value(&r).expect("report serializes"), text, csv)
        }),
    };
    match outcome {
        Ok((matches, json, text, csv)) => {
            let mut report = Report::ok(json, text, csv);
            if !matches {
                report.code = EXIT_VERIFY_FAILED;
                report.note = "brute-force count differs from the paving\n".into();
            }
            Ok(report)
        }
        Err(Error::BudgetExceeded { needed_bits, budget_bits }) => {
            let json = json!({ "q": field.q, "budget_exceeded": { "needed_bits": needed_bits, "budget_bits": budget_bits } });
            let msg = format!("work budget exceeded: needs {needed_bits:.2} bits, budget is {budget_bits}\n");
            Ok(Report {
                code: EXIT_BUDGET,
                header_seed: None,
                json,
                text: msg.clone(),
                csv: String::from("w;count;dim;predicted\n"),
                note: msg,
            })
        }
        Err(e) => Err(lib_err(e)),
    }
}

#[derive(Serialize)]
struct ProfileEntry {
    i: usize,
    j: usize,
    d: usize,
    d_std: usize,
}

fn cmd_profile(r: &Tableau, h: &HessenbergFunction, cols: Option<(usize, usize)>) -> CmdResult {
    if !r.is_h_strict(h).map_err(lib_err)? {
        return Err(vec![format!("R = {r} is not h-strict")]);
    }
    let s = r.standardize().map_err(lib_err)?;
    let d_r: InversionProfile = inversion_profile(r, h).map_err(lib_err)?;
    let std_h_strict = s.is_h_strict(h).map_err(lib_err)?;
    let d_s = if std_h_strict { Some(inversion_profile(&s, h).map_err(lib_err)?) } else { None };
    let entries: Vec<ProfileEntry> = d_r
        .entries()
        .map(|((i, j), d)| ProfileEntry { i, j, d, d_std: d_s.as_ref().map_or(0, |p| p.get(i, j)) })
        .collect();
    let mut text = format!("R = {r}\nstd(R) = {s}\n");
    let mut csv = String::from("i;j;d;d_std\n");
    for e in &entries {
        let _ = writeln!(text, "d({},{}) = {} vs {}", e.i, e.j, e.d, e.d_std);
        let _ = writeln!(csv, "{};{};{};{}", e.i, e.j, e.d, e.d_std);
    }
    let dominated = d_s.as_ref().map(|p| d_r.dominated_by(p));
    let mut json = json!({
        "tableau": r,
        "standardized": s,
        "standardized_h_strict": std_h_strict,
        "dim": d_r.total(),
        "dim_std": d_s.as_ref().map(InversionProfile::total),
        "dominated": dominated,
        "profile": entries,
    });
    if let Some((i, j)) = cols {
        let trace = column_sort_trace(r, i, j, h).map_err(lib_err)?;
        let _ = writeln!(text, "trace for d({i},{j}):");
        for step in &trace {
            let _ = write!(text, "d = {}\n{}", step.d, step.render());
        }
        json["trace"] = serde_json::to_value(&trace).expect("trace serializes");
    }
    Ok(Report::ok(json, text, csv))
}
