//! The `cdr` command-line driver.
//!
//! Every command writes one JSON report (or the dimension tables as CSV) and
//! exits with 0 when all verdicts pass, 1 when a check fails and 2 on a
//! configuration or internal error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cartan::Form;
use crate::checks::{axiom_suite, generator_invariance, iso_homomorphism, n2_report};
use crate::error::{Error, Result};
use crate::fock::{enumerate_basis, State};
use crate::invariants::{
    compare_current_invariants, compare_invariants, differential_spans, finite_group_invariants, generator_set, hilbert_series, leading_term_check,
    span_contained, HilbertTable, ProductMode,
};
use crate::linalg::Matrix;
use crate::rat;
use crate::vertex::LinearIso;

pub const THREADS_ENV: &str = "CDR_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Series {
    /// volume form, Odake generators
    Sl,
    /// symplectic form, small N=4 generators
    Sp,
}

impl Series {
    pub fn form(self) -> Form {
        match self {
            Series::Sl => Form::Volume,
            Series::Sp => Form::Symplectic,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupChoice {
    /// `{I}`
    Trivial,
    /// `{I, -I}`
    Pm,
    /// all diagonal sign matrices
    Signs,
}

impl GroupChoice {
    pub fn elements(self, d: usize) -> Vec<Matrix> {
        match self {
            GroupChoice::Trivial => vec![Matrix::identity(d)],
            GroupChoice::Pm => vec![Matrix::identity(d), Matrix::scalar(d, rat(-1))],
            GroupChoice::Signs => (0..1u32 << d)
                .map(|mask| {
                    let mut m = Matrix::identity(d);
                    for i in 0..d {
                        if mask >> i & 1 == 1 {
                            m[(i, i)] = rat(-1);
                        }
                    }
                    m
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Vacuum, translation, Wick-expansion, skew-symmetry and W(ψ) checks on random states
    VerifyAxioms,
    /// Singular products among Q, L, J, G and the central terms
    VerifyN2,
    /// L(v) on the eight generators for bases of Vect_n, -1 <= n <= degree
    VerifyOdakeInvariance,
    /// Joint kernel of the Cartan action against the differential span of the generators
    InvariantsCompare,
    /// g_0[t]-invariants of the mode algebra and the leading-term check
    GtInvariants,
    /// Fixed spaces of a finite linear group and their Reynolds projectors
    GroupInvariants,
    /// Bigraded dimensions of W_+ and of the generated subalgebra
    Character,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyAxioms => "verify-axioms",
            Command::VerifyN2 => "verify-n2",
            Command::VerifyOdakeInvariance => "verify-odake-invariance",
            Command::InvariantsCompare => "invariants-compare",
            Command::GtInvariants => "gt-invariants",
            Command::GroupInvariants => "group-invariants",
            Command::Character => "character",
        }
    }

    fn default_max_weight(self) -> i32 {
        match self {
            Command::VerifyAxioms | Command::GroupInvariants => 2,
            _ => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cdr", version, about = "Exact checks on the beta-gamma-bc vertex superalgebra and its Cartan-type invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// rank d of V
    #[arg(long, global = true, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, global = true, value_enum, default_value_t = Series::Sl)]
    pub series: Series,
    /// top conformal weight K (command default: 2 for axioms and groups, 3 otherwise)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub max_weight: Option<i32>,
    /// top vector-field degree N
    #[arg(long, global = true, default_value_t = 3, allow_hyphen_values = true)]
    pub degree: i32,
    /// report only this fermion number
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub fermion: Option<i32>,
    /// number of gamma_(-1) factors allowed in sampled or enumerated states
    #[arg(long, global = true)]
    pub gamma_bound: Option<usize>,
    #[arg(long, global = true, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = GroupChoice::Pm)]
    pub group: GroupChoice,
    /// write the report here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

/// A validated job.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JobConfig {
    pub command: Command,
    pub dim: usize,
    pub series: Series,
    pub max_weight: i32,
    pub degree: i32,
    pub fermion: Option<i32>,
    pub gamma_bound: usize,
    pub trials: usize,
    pub seed: u64,
    pub group: GroupChoice,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl JobConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        if cli.dim == 0 {
            return Err(Error::ZeroRank);
        }
        if cli.series == Series::Sp {
            cli.series.form().check_rank(cli.dim)?;
        }
        let max_weight = cli.max_weight.unwrap_or(cli.command.default_max_weight());
        if max_weight < 0 {
            return Err(Error::Config("--max-weight must be non-negative".into()));
        }
        if cli.degree < 0 {
            return Err(Error::Config("--degree must be non-negative".into()));
        }
        let gamma_bound = cli.gamma_bound.unwrap_or(match cli.command {
            Command::VerifyAxioms => 1,
            _ => 0,
        });
        Ok(JobConfig {
            command: cli.command,
            dim: cli.dim,
            series: cli.series,
            max_weight,
            degree: cli.degree,
            fermion: cli.fermion,
            gamma_bound,
            trials: cli.trials,
            seed: cli.seed,
            group: cli.group,
            output: cli.output,
            format: cli.format,
        })
    }

    fn keeps(&self, fermion: i32) -> bool {
        self.fermion.is_none_or(|f| f == fermion)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub wall_clock_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: JobConfig,
    pub passed: bool,
    pub verdicts: Vec<Verdict>,
    pub tables: BTreeMap<String, HilbertTable>,
    pub details: Value,
    pub timing: Timing,
}

impl Report {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (name, t) in &self.tables {
            out.push_str(&format!("# {name}\n"));
            out.push_str(&t.to_csv());
        }
        out
    }
}

struct Outcome {
    verdicts: Vec<Verdict>,
    tables: BTreeMap<String, HilbertTable>,
    details: Value,
}

impl Outcome {
    fn new(details: Value) -> Self {
        Outcome {
            verdicts: Vec::new(),
            tables: BTreeMap::new(),
            details,
        }
    }

    fn verdict(&mut self, check: &str, passed: bool) {
        self.verdicts.push(Verdict {
            check: check.to_string(),
            passed,
        });
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Runs one job and assembles its report.
pub fn execute(cfg: &JobConfig) -> Result<Report> {
    let start = Instant::now();
    let d = cfg.dim;
    let form = cfg.series.form();
    let k = cfg.max_weight;
    let out = match cfg.command {
        Command::VerifyAxioms => {
            let r = axiom_suite(d, k, cfg.trials, cfg.seed);
            let iso = iso_homomorphism(d, k, (cfg.trials / 2).max(1), cfg.seed)?;
            let mut o = Outcome::new(json!({ "axioms": to_value(&r), "linear_iso": to_value(&iso) }));
            for (name, t) in &r.checks {
                o.verdict(name, t.failed == 0 && t.passed > 0);
            }
            o.verdict("linear_iso_homomorphism", iso.failed == 0);
            o
        }
        Command::VerifyN2 => {
            let r = n2_report(d)?;
            let mut o = Outcome::new(to_value(&r));
            let dd = rat(d as i64);
            o.verdict("closure_up_to_translation_of_L", r.closes_on_extended_span);
            o.verdict("l0l_is_translation", r.l0l_is_translation);
            o.verdict("j1j_is_d", r.j1j_value() == Some(dd));
            o.verdict("untwisted_virasoro_term_is_c_over_2", r.structure_holds());
            o
        }
        Command::VerifyOdakeInvariance => {
            let r = generator_invariance(d, form, cfg.degree)?;
            let mut o = Outcome::new(to_value(&r));
            o.verdict("generators_invariant", r.failures.is_empty());
            o.verdict("control_field_detected", r.control_detected);
            o
        }
        Command::InvariantsCompare => {
            let mut r = compare_invariants(d, form, k, cfg.degree)?;
            r.rows.retain(|row| cfg.keeps(row.fermion));
            let mut o = Outcome::new(to_value(&r));
            o.verdict("kernel_matches_span", r.all_match());
            o.verdict("stabilized", r.rows.iter().all(|row| row.stable));
            o.verdict("w_plus_verified", r.w_plus_verified);
            o.tables.insert(
                "invariants".into(),
                hilbert_series(
                    &["domain", "kernel", "kernel_next_degree", "span"],
                    r.rows
                        .iter()
                        .map(|row| ((row.weight, row.fermion), vec![row.domain_dim, row.kernel_dim, row.kernel_dim_next, row.span_dim])),
                ),
            );
            o
        }
        Command::GtInvariants => {
            let mut r = compare_current_invariants(d, form, k)?;
            r.rows.retain(|row| cfg.keeps(row.fermion));
            let mut leading = leading_term_check(d, form, k, cfg.degree)?;
            leading.retain(|row| cfg.keeps(row.fermion));
            let mut o = Outcome::new(json!({ "current_algebra": to_value(&r), "leading_terms": to_value(&leading) }));
            o.verdict("kernel_equals_leading_span", r.passed());
            o.verdict("leading_terms_invariant", leading.iter().all(|row| row.invariant_leading_terms == row.kernel_dim));
            o.tables.insert(
                "current_algebra".into(),
                hilbert_series(
                    &["domain", "kernel", "span", "preimage_span"],
                    r.rows
                        .iter()
                        .map(|row| ((row.weight, row.fermion), vec![row.domain_dim, row.kernel_dim, row.span_dim, row.preimage_span_dim])),
                ),
            );
            o.tables.insert(
                "leading_terms".into(),
                hilbert_series(
                    &["kernel", "invariant_leading_terms"],
                    leading.iter().map(|row| ((row.weight, row.fermion), vec![row.kernel_dim, row.invariant_leading_terms])),
                ),
            );
            o
        }
        Command::GroupInvariants => {
            let group = cfg.group.elements(d);
            let (mut rows, spaces) = finite_group_invariants(&group, d, k, cfg.gamma_bound)?;
            rows.retain(|row| cfg.keeps(row.fermion));
            let gens = generator_set(d, form)?;
            let isos: Vec<LinearIso> = group.iter().map(LinearIso::new).collect::<Result<_>>()?;
            let mut generators_fixed = true;
            for (_, g) in &gens {
                for iso in &isos {
                    generators_fixed &= iso.apply(g)? == *g;
                }
            }
            let mut o = Outcome::new(json!({ "group_order": group.len(), "generators_fixed": generators_fixed, "rows": to_value(&rows) }));
            o.verdict("projector_rank_is_fixed_dim", rows.iter().all(|r| r.projector_rank == r.fixed_dim));
            if generators_fixed {
                let states: Vec<State> = gens.into_iter().map(|(_, s)| s).collect();
                let mut contained = true;
                for w in 0..=k {
                    for (f, span) in differential_spans(&states, d, w, ProductMode::Wick) {
                        if cfg.keeps(f) {
                            let fixed = spaces.get(&(w, f)).map(Vec::as_slice).unwrap_or(&[]);
                            contained &= span_contained(&span.basis, fixed);
                        }
                    }
                }
                o.verdict("fixed_space_contains_generated_subalgebra", contained);
            }
            o.tables.insert(
                "group".into(),
                hilbert_series(
                    &["domain", "fixed", "projector_rank"],
                    rows.iter().map(|r| ((r.weight, r.fermion), vec![r.domain_dim, r.fixed_dim, r.projector_rank])),
                ),
            );
            o
        }
        Command::Character => {
            let states: Vec<State> = generator_set(d, form)?.into_iter().map(|(_, s)| s).collect();
            let mut entries = Vec::new();
            for w in 0..=k {
                let spans = differential_spans(&states, d, w, ProductMode::Wick);
                for (f, sector) in enumerate_basis(d, w, None, 0).by_fermion() {
                    if cfg.keeps(f) {
                        let span = spans.get(&f).map_or(0, |s| s.dim());
                        entries.push(((w, f), vec![sector.len(), span]));
                    }
                }
            }
            let table = hilbert_series(&["w_plus", "generated"], entries);
            let mut o = Outcome::new(json!({ "w_plus_series": table.series(0), "generated_series": table.series(1) }));
            o.verdict("generated_within_w_plus", table.rows.iter().all(|r| r.dims[1] <= r.dims[0]));
            o.tables.insert("character".into(), table);
            o
        }
    };
    Ok(Report {
        tool: "cdr",
        version: env!("CARGO_PKG_VERSION"),
        command: cfg.command.name(),
        config: cfg.clone(),
        passed: out.verdicts.iter().all(|v| v.passed),
        verdicts: out.verdicts,
        tables: out.tables,
        details: out.details,
        timing: Timing {
            wall_clock_seconds: start.elapsed().as_secs_f64(),
        },
    })
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        OutputFormat::Csv => report.to_csv(),
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().map_err(|_| Error::Config(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
    if n == 0 {
        return Err(Error::Config(format!("{THREADS_ENV} must be a positive integer")));
    }
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn run_job(cfg: &JobConfig) -> Result<bool> {
    configure_threads()?;
    let report = execute(cfg)?;
    for v in &report.verdicts {
        eprintln!("{} {}", if v.passed { "pass" } else { "FAIL" }, v.check);
    }
    let body = render(&report, cfg.format);
    match &cfg.output {
        Some(path) => std::fs::write(path, body).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{body}"),
    }
    Ok(report.passed)
}

/// Parses arguments, runs the job and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match JobConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("cdr: invalid configuration: {e}");
            return 2;
        }
    };
    match run_job(&cfg) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("cdr: {e}");
            2
        }
    }
}
