//! Job specification, dispatch and output for the `gbdepth` binary.
//!
//! Every command first builds a serializable output record; the table
//! format is rendered from that record, so both formats always agree.

pub mod output;
pub mod parse;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gbdepth::family::{
    build_family, explore_orders, hibi_ideal, semicontinuity_violations, verify_theorem, DistributiveLattice,
    ExploreConfig, FamilyError, LatticeError, VerifyOptions, DEFAULT_MAX_LATTICE_ELEMENTS,
};
use gbdepth::monomial_invariants::{invariant_report_direct, InvariantError, DEFAULT_LATTICE_BUDGET};
use gbdepth::groebner::DEFAULT_PAIR_BUDGET;
use gbdepth::{
    betti_table, buchberger, initial_ideal, invariant_report, validate_order, verify_gb, Field, Gf32003,
    GroebnerConfig, GroebnerError, Ideal, InvariantConfig, MonomialIdeal, MonomialOrder, OrderError, Rational,
};
use thiserror::Error;

use output::*;
pub use parse::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug, Clone)]
#[command(name = "gbdepth", version, about = "Gröbner bases, initial ideals and depth of monomial quotients")]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Reduced Gröbner basis of an ideal
    Gb,
    /// Initial ideal under an order
    Initial,
    /// Dimension, depth, regularity and Betti table of a monomial quotient
    Invariants,
    /// Check the block family for every order <_0..<_d
    Verify,
    /// Sample random weight orders and record the invariants reached
    Explore,
    /// Join-meet ideal of a finite distributive lattice
    Hibi,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    #[value(alias = "json")]
    Structured,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    /// The rationals
    Qq,
    /// Integers mod 32003
    Gf32003,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Number of blocks of the family
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// Only report this order index (all orders are still computed)
    #[arg(long, global = true)]
    pub r: Option<usize>,
    /// Order: lex, lex:x3>x1>x2, deglex, weight:1,2,2;tie=lex
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Ideal file (`vars: n` header) or comma-separated polynomials
    #[arg(long, global = true)]
    pub ideal: Option<String>,
    /// Comma-separated monomial generators
    #[arg(long, global = true)]
    pub monomial: Option<String>,
    /// Number of variables for inline input
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Explorer sample count [default: 200]
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Explorer weights are drawn from 1..=W
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(i64).range(1..))]
    pub weight_bound: i64,
    /// Also run the uncorrected trailing-block basis through the checker
    #[arg(long, global = true)]
    pub paper_literal: bool,
    /// Worker threads
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[arg(long, global = true, env = "GBDEPTH_BUDGET_PAIRS", default_value_t = DEFAULT_PAIR_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_pairs: u64,
    #[arg(long, global = true, env = "GBDEPTH_BUDGET_LATTICE", default_value_t = DEFAULT_LATTICE_BUDGET as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_lattice: u64,
    /// Also compute Betti tables without component splitting and compare
    #[arg(long, global = true)]
    pub direct: bool,
    #[arg(long, short, global = true)]
    pub verbose: bool,
    /// Lattice for `hibi`: chain:K, grid:AxB, boolean:K, divisors:N, covers:a<b,b<c,...
    #[arg(long, global = true)]
    pub lattice: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = FieldChoice::Qq)]
    pub field: FieldChoice,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Input(_) => EXIT_PARSE,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<OrderError> for CliError {
    fn from(e: OrderError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::LatticeBudget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::NoBlocks => CliError::Input(e.to_string()),
            FamilyError::Order(o) => o.into(),
            FamilyError::Groebner(g) => g.into(),
            FamilyError::Invariant(i) => i.into(),
        }
    }
}

/// Exit status and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl JobSpec {
    fn groebner(&self) -> GroebnerConfig {
        GroebnerConfig { max_pair_reductions: self.opts.budget_pairs }
    }

    fn invariants(&self) -> InvariantConfig {
        InvariantConfig { max_lattice: usize::try_from(self.opts.budget_lattice).unwrap_or(usize::MAX) }
    }
}

/// Runs a job, honoring `--jobs` with a dedicated thread pool.
pub fn run(spec: &JobSpec) -> Outcome {
    match spec.opts.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j as usize).build() {
            Ok(pool) => pool.install(|| run_in_pool(spec)),
            Err(e) => fail(CliError::Internal(format!("thread pool: {e}"))),
        },
        None => run_in_pool(spec),
    }
}

fn fail(e: CliError) -> Outcome {
    Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn run_in_pool(spec: &JobSpec) -> Outcome {
    let result = match spec.opts.field {
        FieldChoice::Qq => dispatch::<Rational>(spec),
        FieldChoice::Gf32003 => dispatch::<Gf32003>(spec),
    };
    match result {
        Ok((code, out)) => {
            let stdout = match spec.opts.format {
                Format::Structured => out.to_json(),
                Format::Table => out.to_table(spec.opts.verbose),
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => fail(e),
    }
}

fn dispatch<C: Field>(spec: &JobSpec) -> Result<(i32, Output), CliError> {
    match spec.command {
        Command::Gb => cmd_gb::<C>(spec),
        Command::Initial => cmd_initial::<C>(spec),
        Command::Invariants => cmd_invariants::<C>(spec),
        Command::Verify => cmd_verify::<C>(spec),
        Command::Explore => cmd_explore::<C>(spec),
        Command::Hibi => cmd_hibi::<C>(spec),
    }
}

/// Reads `--ideal` as a file when it names one, otherwise as inline text.
pub fn load_ideal<C: Field>(value: &str, n: Option<usize>) -> Result<Ideal<C>, CliError> {
    let path = Path::new(value);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{value}: {e}")))?;
        let ideal = parse::parse_ideal_file(&text).map_err(|e| CliError::Input(format!("{value}: {e}")))?;
        return match n {
            Some(k) if k != ideal.nvars() => {
                Err(CliError::Input(format!("{value} declares {} variables, --n says {k}", ideal.nvars())))
            }
            _ => Ok(ideal),
        };
    }
    if value.ends_with(".ideal") || value.contains('/') {
        return Err(CliError::Input(format!("cannot read ideal file {}", PathBuf::from(value).display())));
    }
    Ok(parse::parse_ideal_inline(value, n)?)
}

fn require_ideal<C: Field>(spec: &JobSpec) -> Result<Ideal<C>, CliError> {
    let value = spec.opts.ideal.as_deref().ok_or_else(|| CliError::Input("--ideal is required".into()))?;
    load_ideal(value, spec.opts.n)
}

fn order_for(spec: &JobSpec, n: usize) -> Result<MonomialOrder, CliError> {
    let text = spec.opts.order.as_deref().unwrap_or("lex");
    let parsed = parse::parse_order(text, n)?;
    Ok(validate_order(&parsed, n)?)
}

fn cmd_gb<C: Field>(spec: &JobSpec) -> Result<(i32, Output), CliError> {
    let ideal = require_ideal::<C>(spec)?;
    let order = order_for(spec, ideal.nvars())?;
    let gb = buchberger(&ideal, &order, &spec.groebner())?;
    let verified = verify_gb(gb.elements(), &ideal, &order, &spec.groebner())?.is_confirmed();
    let out = GbOutput {
        command: "gb",
        field: C::name(),
        nvars: ideal.nvars(),
        order: order.to_string(),
        gb_size: gb.len(),
        basis: gb.elements().iter().map(|g| g.to_string()).collect(),
        verified,
    };
    if !verified {
        return Err(CliError::Internal("computed basis failed verification".into()));
    }
    Ok((EXIT_OK, Output::Gb(out)))
}

fn cmd_initial<C: Field>(spec: &JobSpec) -> Result<(i32, Output), CliError> {
    let ideal = require_ideal::<C>(spec)?;
    let order = order_for(spec, ideal.nvars())?;
    let gb = buchberger(&ideal, &order, &spec.groebner())?;
    let init = initial_ideal(&gb);
    Ok((
        EXIT_OK,
        Output::Initial(InitialOutput {
            command: "initial",
            field: C::name(),
            nvars: ideal.nvars(),
            order: order.to_string(),
            gb_size: gb.len(),
            initial_ideal: init.generators().iter().map(|g| g.to_string()).collect(),
            squarefree: init.generators().iter().all(|g| g.is_squarefree()),
        }),
    ))
}

fn cmd_invariants<C: Field>(spec: &JobSpec) -> Result<(i32, Output), CliError> {
    let (ideal, source, order): (MonomialIdeal, &'static str, Option<String>) = match (&spec.opts.monomial, &spec.opts.ideal) {
        (Some(m), None) => (parse::parse_monomials(m, spec.opts.n)?, "monomial", None),
        (None, Some(_)) => {
            let poly = require_ideal::<C>(spec)?;
            let order = order_for(spec, poly.nvars())?;
            let gb = buchberger(&poly, &order, &spec.groebner())?;
            (initial_ideal(&gb), "initial", Some(order.to_string()))
        }
        (Some(_), Some(_)) => return Err(CliError::Input("give either --monomial or --ideal, not both".into())),
        (None, None) => return Err(CliError::Input("--monomial or --ideal is required".into())),
    };
    let cfg = spec.invariants();
    let report = if spec.opts.direct {
        invariant_report_direct::<C>(&ideal, &cfg)?
    } else {
        invariant_report::<C>(&ideal, &cfg)?
    };
    let table = betti_table::<C>(&ideal, &cfg)?;
    Ok((
        EXIT_OK,
        Output::Invariants(InvariantsOutput {
            command: "invariants",
            field: C::name(),
            nvars: ideal.nvars(),
            source,
            order,
            ideal: ideal.generators().iter().map(|g| g.to_string()).collect(),
            dim: report.dim,
            depth: report.depth,
            pd: report.pd,
            reg: report.reg,
            cohen_macaulay: report.cohen_macaulay,
            hilbert_numerator: report.hilbert_numerator.coeffs().to_vec(),
            betti: table.to_triples(),
        }),
    ))
}

fn cmd_verify<C: Field>(spec: &JobSpec) -> Result<(i32, Output), CliError> {
    let d = spec.opts.d.unwrap_or(1);
    if let Some(r) = spec.opts.r {
        if r > d {
            return Err(CliError::Input(format!("--r {r} exceeds --d {d}")));
        }
    }
    let opts = VerifyOptions {
        literal: spec.opts.paper_literal,
        direct: spec.opts.direct,
        groebner: spec.groebner(),
        invariants: spec.invariants(),
    };
    let runs = verify_theorem::<C>(d, &opts)?;
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    let mut internal = None;
    for run in runs {
        let r = match &run {
            Ok(rep) => rep.r,
            Err(f) => f.r,
        };
        if spec.opts.r.is_some_and(|want| want != r) {
            continue;
        }
        match run {
            Ok(rep) => reports.push(rep),
            Err(f) => {
                if !f.error.is_budget() {
                    internal.get_or_insert_with(|| format!("r={}: {}", f.r, f.error));
                }
                failures.push(RunFailureOut { r: f.r, budget: f.error.is_budget(), error: f.error.to_string() });
            }
        }
    }
    let pass = failures.is_empty() && reports.iter().all(|r| r.pass);
    let code = if internal.is_some() {
        EXIT_INTERNAL
    } else if reports.iter().any(|r| !r.pass) {
        EXIT_VERIFY_FAILED
    } else if !failures.is_empty() {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let notes = vec![
        "trailing-block bases contain x_{3i-2}x_{3i} - x_{3i-1}^2; \
         the variant with x_{3i-1}x_{3i} - x_{3i}^2 is checked under --paper-literal"
            .to_string(),
        "leading block r of the initial ideal lives on x_{3r-2}, x_{3r-1}, x_{3r}".to_string(),
    ];
    Ok((code, Output::Verify(VerifyOutput { command: "verify", field: C::name(), d, reports, failures, pass, notes })))
}

fn cmd_explore<C: Field>(spec: &JobSpec) -> Result<(i32, Output), CliError> {
    let (ideal, input, known) = match &spec.opts.ideal {
        Some(_) => (require_ideal::<C>(spec)?, "ideal".to_string(), None),
        None => {
            let d = spec.opts.d.unwrap_or(1);
            // the family quotient is Cohen-Macaulay with depth d and reg d
            (build_family::<C>(d)?.ideal, format!("family d={d}"), Some(KnownInvariants { depth: d, reg: d as i64 }))
        }
    };
    let cfg = ExploreConfig {
        samples: spec.opts.samples.unwrap_or(200),
        weight_bound: spec.opts.weight_bound,
        seed: spec.opts.seed,
        groebner: spec.groebner(),
        invariants: spec.invariants(),
    };
    let summary = explore_orders(&ideal, &cfg)?;
    let violations: Vec<usize> = match &known {
        Some(k) => semicontinuity_violations(&summary, k.depth, k.reg).iter().map(|r| r.sample).collect(),
        None => Vec::new(),
    };
    let code = if !violations.is_empty() { EXIT_INTERNAL } else { EXIT_OK };
    Ok((
        code,
        Output::Explore(ExploreOutput {
            command: "explore",
            field: C::name(),
            input,
            nvars: ideal.nvars(),
            min_depth: summary.min_depth(),
            max_reg: summary.max_reg(),
            known,
            violations,
            summary,
        }),
    ))
}

/// `chain:K`, `grid:AxB`, `boolean:K`, `divisors:N` or `covers:a<b,b<c,...`.
pub fn parse_lattice(text: &str) -> Result<DistributiveLattice, CliError> {
    let bad = |what: &str| CliError::Parse(ParseError { line: 1, column: 1, message: what.to_string() });
    let (kind, arg) = text.split_once(':').ok_or_else(|| bad("expected KIND:ARG"))?;
    let num = |s: &str, col: usize| {
        s.trim().parse::<usize>().map_err(|_| {
            CliError::Parse(ParseError { line: 1, column: col, message: format!("invalid number '{}'", s.trim()) })
        })
    };
    let at = kind.len() + 2;
    Ok(match kind.trim() {
        "chain" => DistributiveLattice::chain(num(arg, at)?)?,
        "boolean" => DistributiveLattice::boolean(num(arg, at)?)?,
        "divisors" => DistributiveLattice::divisors(num(arg, at)? as u64)?,
        "grid" => {
            let (a, b) = arg.split_once('x').ok_or_else(|| bad("grid expects AxB"))?;
            DistributiveLattice::grid(num(a, at)?, num(b, at + a.len() + 1)?)?
        }
        "covers" => {
            let mut names: Vec<String> = Vec::new();
            let mut covers = Vec::new();
            let mut col = at;
            for item in arg.split(',') {
                let (lo, hi) = item.split_once('<').ok_or_else(|| {
                    CliError::Parse(ParseError { line: 1, column: col, message: format!("expected a<b, found '{item}'") })
                })?;
                let mut idx = |s: &str| {
                    let s = s.trim().to_string();
                    match names.iter().position(|x| *x == s) {
                        Some(k) => k,
                        None => {
                            names.push(s);
                            names.len() - 1
                        }
                    }
                };
                let (a, b) = (idx(lo), idx(hi));
                covers.push((a, b));
                col += item.len() + 1;
            }
            DistributiveLattice::from_covers(names, covers, DEFAULT_MAX_LATTICE_ELEMENTS)?
        }
        other => return Err(bad(&format!("unknown lattice kind '{other}'"))),
    })
}

fn cmd_hibi<C: Field>(spec: &JobSpec) -> Result<(i32, Output), CliError> {
    let text = spec.opts.lattice.as_deref().ok_or_else(|| CliError::Input("--lattice is required".into()))?;
    let lattice = parse_lattice(text)?;
    let ideal = hibi_ideal::<C>(&lattice);
    let exploration = match spec.opts.samples {
        Some(samples) => Some(explore_orders(
            &ideal,
            &ExploreConfig {
                samples,
                weight_bound: spec.opts.weight_bound,
                seed: spec.opts.seed,
                groebner: spec.groebner(),
                invariants: spec.invariants(),
            },
        )?),
        None => None,
    };
    Ok((
        EXIT_OK,
        Output::Hibi(HibiOutput {
            command: "hibi",
            field: C::name(),
            lattice: text.to_string(),
            elements: lattice.names().to_vec(),
            nvars: ideal.nvars(),
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
            min_depth: exploration.as_ref().and_then(|s| s.min_depth()),
            exploration,
        }),
    ))
}
