//! Command-line front end: instance files in, JSON reports out.
//!
//! Instance grammar (JSON):
//!
//! ```text
//! {
//!   "blaschke": [{"zero": [0.0, 0.0], "mult": 2}],
//!   "functions": [
//!     {"num": [[0, 0], [0, 0], [1, 0]]},
//!     {"num": [[1, 0], [0, 0], [0, 0], [-1, 0]], "den": [[1, 0]]}
//!   ],
//!   "delta_claimed": 0.5,
//!   "mode": "solve"
//! }
//! ```
//!
//! Polynomials are ascending coefficient lists of `[re, im]` pairs. For
//! `reduce` the functions are `f, g` optionally followed by a witness `x, y`
//! with `f x + g y = 1`.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blaschke::{check_membership, BlaschkeSpec, MembershipReport};
use crate::error::{Error, Result};
use crate::numcore::{cx, Cx, NonvanishingCert, Poly, RationalFn};
use crate::reduce::{reduce_pair, ReductionCase, SearchBudget, SearchStage, UnimodularPair};
use crate::sample::{random_corona_instance, random_spec, InstanceRecipe};
use crate::solver::{
    bezout_unconstrained, constrained_solve, CofactorMethod, ideal_solve, measured_delta, CoronaInstance,
    IdealBound, SolveConfig, SolveReport, SolverPath,
};
use crate::verify::{corona_delta_estimate, sup_norm_estimate, sup_sum, GridConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERICAL: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;
pub const EXIT_INPUT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "corona", version, about = "Bezout equations in C + B H^inf")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Membership / residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 512)]
    pub boundary_samples: usize,
    #[arg(long, global = true, default_value_t = 64)]
    pub grid_rings: usize,
    /// Largest degree of `q` tried by the reduce search.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_degree: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve in the algebra (skew correction).
    Solve { file: PathBuf },
    /// Explicit solution in the ideal `B H^inf` variant.
    SolveIdeal { file: PathBuf },
    /// Membership and corona measurements.
    Check { file: PathBuf },
    /// Search for `h` with `f + h g` invertible.
    Reduce { file: PathBuf },
    /// Boundary sup norms.
    Norms { file: PathBuf },
    /// Dispatch on the file's `mode`.
    Run { file: PathBuf },
    /// Chart `max ||g_k||` against `n` on random data.
    ProbeConjecture(ProbeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ProbeArgs {
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 50)]
    pub instances: usize,
    /// Lower end of the delta band.
    #[arg(long, default_value_t = 0.05)]
    pub delta_min: f64,
    /// Largest degree of `q` in generated members `c + B q`.
    #[arg(long, default_value_t = 6)]
    pub member_degree: usize,
    #[arg(long, value_enum, default_value_t = ProbePath::Constrained)]
    pub path: ProbePath,
    /// Record wall-clock time per row (reports stop being reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProbePath {
    Constrained,
    Ideal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Solve,
    SolveIdeal,
    Check,
    Reduce,
    Norms,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::Solve => "solve",
            Mode::SolveIdeal => "solve-ideal",
            Mode::Check => "check",
            Mode::Reduce => "reduce",
            Mode::Norms => "norms",
        };
        f.write_str(s)
    }
}

pub type CoeffList = Vec<[f64; 2]>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroEntry {
    pub zero: [f64; 2],
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionEntry {
    pub num: CoeffList,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den: Option<CoeffList>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub blaschke: Vec<ZeroEntry>,
    pub functions: Vec<FunctionEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_claimed: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
}

/// Validated contents of an instance file.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub spec: BlaschkeSpec,
    pub functions: Vec<RationalFn>,
    pub delta_claimed: Option<f64>,
    pub mode: Option<Mode>,
}

fn to_poly(c: &[[f64; 2]]) -> Poly {
    Poly::new(c.iter().map(|&[re, im]| cx(re, im)).collect())
}

fn coeff_list(p: &Poly) -> CoeffList {
    p.coeffs().iter().map(|z| [z.re, z.im]).collect()
}

impl FunctionEntry {
    pub fn from_rational(f: &RationalFn) -> Self {
        FunctionEntry {
            num: coeff_list(f.num()),
            den: if f.is_polynomial() { None } else { Some(coeff_list(f.den())) },
        }
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("instance file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Builds the spec and functions; denominators are certified here.
    pub fn load(&self) -> Result<Loaded> {
        for (k, z) in self.blaschke.iter().enumerate() {
            if !(z.zero[0].is_finite() && z.zero[1].is_finite()) {
                return Err(Error::Input(format!("blaschke[{k}].zero: non-finite entry")));
            }
        }
        let points = self.blaschke.iter().map(|z| (cx(z.zero[0], z.zero[1]), z.mult)).collect();
        let spec = BlaschkeSpec::new(points).map_err(|e| Error::Input(format!("blaschke: {e}")))?;
        if self.functions.is_empty() {
            return Err(Error::Input("functions: empty list".into()));
        }
        let mut functions = Vec::with_capacity(self.functions.len());
        for (k, entry) in self.functions.iter().enumerate() {
            let finite = |c: &CoeffList| c.iter().flatten().all(|v| v.is_finite());
            if !finite(&entry.num) {
                return Err(Error::Input(format!("functions[{k}].num: non-finite entry")));
            }
            let num = to_poly(&entry.num);
            let f = match &entry.den {
                None => RationalFn::from_poly(num),
                Some(d) => {
                    if !finite(d) {
                        return Err(Error::Input(format!("functions[{k}].den: non-finite entry")));
                    }
                    RationalFn::new(num, to_poly(d))
                        .map_err(|e| Error::Input(format!("functions[{k}].den: {e}")))?
                }
            };
            functions.push(f);
        }
        if let Some(d) = self.delta_claimed {
            if !(d.is_finite() && d >= 0.0) {
                return Err(Error::Input(format!("delta_claimed: must be finite and >= 0, got {d}")));
            }
        }
        Ok(Loaded { spec, functions, delta_claimed: self.delta_claimed, mode: self.mode })
    }
}

impl Flags {
    pub fn grid(&self) -> Result<GridConfig> {
        let g = GridConfig { boundary_samples: self.boundary_samples, radial_rings: self.grid_rings, ..GridConfig::default() };
        g.validate().map_err(|e| Error::Input(format!("grid flags: {e}")))?;
        Ok(g)
    }

    pub fn solve_config(&self) -> Result<SolveConfig> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::Input(format!("--tol: must be positive, got {}", self.tol)));
        }
        Ok(SolveConfig { grid: self.grid()?, tol: self.tol, ..SolveConfig::default() })
    }
}

impl Default for Flags {
    fn default() -> Self {
        Flags { tol: 1e-8, boundary_samples: 512, grid_rings: 64, max_degree: 8, seed: 0, out: None }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrectionJson {
    pub i: usize,
    pub j: usize,
    pub h: CoeffList,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveReportJson {
    pub command: String,
    pub status: &'static str,
    pub path: SolverPath,
    pub cofactors: CofactorMethod,
    pub refinements: usize,
    pub g: Vec<FunctionEntry>,
    pub residual: f64,
    pub membership_defects: Vec<MembershipReport>,
    pub g_norms: Vec<f64>,
    pub max_g_norm: f64,
    pub correction_norm: f64,
    pub correction: Vec<CorrectionJson>,
    pub delta_measured: f64,
    pub delta_claimed: Option<f64>,
    pub f_sum_sup: f64,
    pub ideal_bound: Option<IdealBound>,
}

impl SolveReportJson {
    pub fn new(command: &str, r: &SolveReport, delta_claimed: Option<f64>, tol: f64) -> Self {
        SolveReportJson {
            command: command.into(),
            status: if r.succeeded(tol) { "ok" } else { "tolerance-exceeded" },
            path: r.path,
            cofactors: r.cofactors,
            refinements: r.refinements,
            g: r.g.iter().map(FunctionEntry::from_rational).collect(),
            residual: r.residual,
            membership_defects: r.membership_defects.clone(),
            g_norms: r.g_norms.clone(),
            max_g_norm: r.max_g_norm(),
            correction_norm: r.correction_norm,
            correction: r
                .correction
                .iter()
                .map(|e| CorrectionJson { i: e.i, j: e.j, h: coeff_list(&e.h) })
                .collect(),
            delta_measured: r.delta_measured,
            delta_claimed,
            f_sum_sup: r.f_sum_sup,
            ideal_bound: r.ideal_bound,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub command: String,
    pub status: &'static str,
    pub membership: Vec<MembershipReport>,
    pub all_members: bool,
    pub delta_measured: f64,
    pub delta_grid_error: f64,
    pub delta_argmin: Cx,
    pub delta_claimed: Option<f64>,
    pub f_sum_sup: f64,
    /// Whether the data has no common zero in the closed disk.
    pub corona: bool,
    pub corona_detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormsReport {
    pub command: String,
    pub status: &'static str,
    pub norms: Vec<f64>,
    pub grid_errors: Vec<f64>,
    pub arguments: Vec<Cx>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReduceReport {
    pub command: String,
    pub status: &'static str,
    pub case: Option<ReductionCase>,
    pub stage: SearchStage,
    pub h: FunctionEntry,
    pub inverse_margin: f64,
    pub h_membership: MembershipReport,
    pub sum_membership: MembershipReport,
    pub sum_cert: NonvanishingCert,
    pub witness_residual: Option<f64>,
}

/// One probe row. `seed` is the master seed; the row's generator is
/// ChaCha8 seeded from it on stream `stream = (n - 1) * instances + instance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeRecord {
    pub n: usize,
    pub instance: usize,
    pub status: String,
    pub delta_measured: Option<f64>,
    pub max_g_norm: Option<f64>,
    pub residual: Option<f64>,
    pub solver_path: SolverPath,
    pub seed: u64,
    pub stream: u64,
    pub attempts: usize,
    pub elapsed: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub command: String,
    pub seed: u64,
    pub n_max: usize,
    pub instances: usize,
    pub delta_min: f64,
    pub member_degree: usize,
    pub rows: Vec<ProbeRecord>,
}

#[derive(Debug, Clone, Serialize)]
struct ErrorReport {
    command: String,
    status: &'static str,
    error: String,
}

/// Exit code for a failed command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_)
        | Error::InvalidSpec(_)
        | Error::NodeCollision(..)
        | Error::Domain(_)
        | Error::NonFinite(_)
        | Error::DimensionMismatch { .. } => EXIT_INPUT,
        Error::NotAMember(_) | Error::NoSolution(_) | Error::AllConstantsZero | Error::Rejection(_) => {
            EXIT_NEGATIVE
        }
        Error::SearchExhausted { .. } => EXIT_EXHAUSTED,
        _ => EXIT_NUMERICAL,
    }
}

fn status_of(e: &Error) -> &'static str {
    match exit_code(e) {
        EXIT_INPUT => "input-error",
        EXIT_NEGATIVE => "negative",
        EXIT_EXHAUSTED => "search-exhausted",
        _ => "numerical-failure",
    }
}

/// Result of one invocation, before any I/O.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    /// Pretty JSON with a trailing newline.
    pub report: String,
    pub diagnostics: Vec<String>,
}

fn render<T: Serialize>(value: &T) -> String {
    let pretty = serde_json::to_string_pretty(value).expect("reports serialize");
    let mut s = inline_scalar_arrays(&pretty);
    s.push('\n');
    s
}

/// End of the JSON string starting at `bytes[start] == b'"'` (index after
/// the closing quote).
fn skip_string(bytes: &[u8], start: usize) -> usize {
    let mut i = start + 1;
    while i < bytes.len() {
        match bytes[i] {
            b'\\' => i += 2,
            b'"' => return i + 1,
            _ => i += 1,
        }
    }
    bytes.len()
}

/// Puts arrays without nested arrays or objects on one line, so `[re, im]`
/// pairs read as pairs.
fn inline_scalar_arrays(pretty: &str) -> String {
    let bytes = pretty.as_bytes();
    let mut out = String::with_capacity(pretty.len());
    let mut i = 0;
    let mut copied = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'"' => i = skip_string(bytes, i),
            b'[' => {
                let mut j = i + 1;
                let mut flat = true;
                while j < bytes.len() {
                    match bytes[j] {
                        b'"' => j = skip_string(bytes, j),
                        b'[' | b'{' => {
                            flat = false;
                            break;
                        }
                        b']' => break,
                        _ => j += 1,
                    }
                }
                if flat && j < bytes.len() {
                    out.push_str(&pretty[copied..i]);
                    let items: Vec<&str> = split_top_level(&pretty[i + 1..j]);
                    out.push('[');
                    out.push_str(&items.join(", "));
                    out.push(']');
                    i = j + 1;
                    copied = i;
                } else {
                    i += 1;
                }
            }
            _ => i += 1,
        }
    }
    out.push_str(&pretty[copied..]);
    out
}

fn split_top_level(body: &str) -> Vec<&str> {
    let bytes = body.as_bytes();
    let mut items = Vec::new();
    let (mut i, mut start) = (0, 0);
    while i < bytes.len() {
        match bytes[i] {
            b'"' => i = skip_string(bytes, i),
            b',' => {
                items.push(body[start..i].trim());
                i += 1;
                start = i;
            }
            _ => i += 1,
        }
    }
    let last = body[start..].trim();
    if !last.is_empty() {
        items.push(last);
    }
    items
}

fn solve_like(name: &str, loaded: &Loaded, flags: &Flags, ideal: bool) -> Result<(i32, String)> {
    let cfg = flags.solve_config()?;
    let inst = CoronaInstance::new(loaded.functions.clone(), loaded.spec.clone(), loaded.delta_claimed, cfg.tol)?;
    let r = if ideal { ideal_solve(&inst, &cfg)? } else { constrained_solve(&inst, &cfg)? };
    let code = if r.succeeded(cfg.tol) { EXIT_OK } else { EXIT_NUMERICAL };
    Ok((code, render(&SolveReportJson::new(name, &r, loaded.delta_claimed, cfg.tol))))
}

fn check(loaded: &Loaded, flags: &Flags) -> Result<(i32, String)> {
    let cfg = flags.solve_config()?;
    let f = &loaded.functions;
    let membership: Vec<MembershipReport> =
        f.iter().map(|fk| check_membership(fk, &loaded.spec, cfg.tol)).collect();
    let all_members = membership.iter().all(|m| m.passed);
    let est = corona_delta_estimate(f, &cfg.grid);
    let delta = measured_delta(f, &loaded.spec, &cfg.grid);
    let (corona, corona_detail) = match bezout_unconstrained(f) {
        Ok(_) => (true, None),
        Err(e @ Error::NoSolution(_)) => (false, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let claim_refuted = loaded.delta_claimed.is_some_and(|d| delta + est.grid_error < d);
    let status = if !all_members {
        "not-a-member"
    } else if !corona {
        "no-corona"
    } else if claim_refuted {
        "delta-claim-refuted"
    } else {
        "ok"
    };
    let report = CheckReport {
        command: "check".into(),
        status,
        membership,
        all_members,
        delta_measured: delta,
        delta_grid_error: est.grid_error,
        delta_argmin: est.argument,
        delta_claimed: loaded.delta_claimed,
        f_sum_sup: sup_sum(f, &cfg.grid),
        corona,
        corona_detail,
    };
    let code = if status == "ok" { EXIT_OK } else { EXIT_NEGATIVE };
    Ok((code, render(&report)))
}

fn norms(loaded: &Loaded, flags: &Flags) -> Result<(i32, String)> {
    let grid = flags.grid()?;
    let m: Vec<_> = loaded.functions.iter().map(|f| sup_norm_estimate(f, &grid)).collect();
    let report = NormsReport {
        command: "norms".into(),
        status: "ok",
        norms: m.iter().map(|x| x.value).collect(),
        grid_errors: m.iter().map(|x| x.grid_error).collect(),
        arguments: m.iter().map(|x| x.argument).collect(),
    };
    Ok((EXIT_OK, render(&report)))
}

fn reduce(loaded: &Loaded, flags: &Flags) -> Result<(i32, String)> {
    let cfg = flags.solve_config()?;
    let f = &loaded.functions;
    let witness = match f.len() {
        2 => None,
        4 => Some((f[2].clone(), f[3].clone())),
        k => {
            return Err(Error::Input(format!(
                "functions: reduce takes f, g and an optional witness x, y; got {k} entries"
            )))
        }
    };
    let pair = UnimodularPair::new(f[0].clone(), f[1].clone(), loaded.spec.clone(), witness, cfg.tol, &cfg.grid)?;
    let budget = SearchBudget { max_degree: flags.max_degree, tol: cfg.tol, grid: cfg.grid, ..SearchBudget::default() };
    let cert = reduce_pair(&pair, &budget)?;
    let report = ReduceReport {
        command: "reduce".into(),
        status: "ok",
        case: cert.case,
        stage: cert.stage,
        h: FunctionEntry::from_rational(&cert.h),
        inverse_margin: cert.inverse_margin,
        h_membership: cert.h_membership,
        sum_membership: cert.sum_membership,
        sum_cert: cert.sum_cert,
        witness_residual: pair.witness_residual(&cfg.grid)?,
    };
    Ok((EXIT_OK, render(&report)))
}

fn probe_row(
    n: usize,
    instance: usize,
    args: &ProbeArgs,
    flags: &Flags,
    cfg: &SolveConfig,
) -> ProbeRecord {
    let stream = ((n - 1) * args.instances + instance) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(flags.seed);
    rng.set_stream(stream);
    let solver_path = match args.path {
        ProbePath::Constrained => SolverPath::Constrained,
        ProbePath::Ideal => SolverPath::Ideal,
    };
    let mut row = ProbeRecord {
        n,
        instance,
        status: String::new(),
        delta_measured: None,
        max_g_norm: None,
        residual: None,
        solver_path,
        seed: flags.seed,
        stream,
        attempts: 0,
        elapsed: None,
    };
    let start = Instant::now();
    let spec = random_spec(&mut rng, 3, 2, 0.8, 0.1);
    let recipe = InstanceRecipe { n, max_degree: args.member_degree, delta_min: args.delta_min, ..InstanceRecipe::default() };
    let solved = random_corona_instance(&mut rng, &spec, &recipe, &cfg.grid).and_then(|s| match s {
        None => Ok(None),
        Some(s) => {
            let r = match solver_path {
                SolverPath::Constrained => constrained_solve(&s.instance, cfg),
                SolverPath::Ideal => ideal_solve(&s.instance, cfg),
            }?;
            Ok(Some((s.delta, s.attempts, r)))
        }
    });
    match solved {
        Ok(None) => {
            row.status = "no-instance".into();
            row.attempts = recipe.max_attempts;
        }
        Ok(Some((delta, attempts, r))) => {
            row.status = if r.succeeded(cfg.tol) { "ok" } else { "tolerance-exceeded" }.into();
            row.delta_measured = Some(delta);
            row.max_g_norm = Some(r.max_g_norm());
            row.residual = Some(r.residual);
            row.attempts = attempts;
        }
        Err(e) => row.status = format!("{}: {e}", status_of(&e)),
    }
    if args.timing {
        row.elapsed = Some(start.elapsed().as_secs_f64());
    }
    row
}

/// Runs the probe; rows are ordered by `(n, instance)` whatever the thread count.
pub fn probe_conjecture(args: &ProbeArgs, flags: &Flags) -> Result<ProbeReport> {
    if args.n_max == 0 || args.instances == 0 {
        return Err(Error::Input("--n-max and --instances must be positive".into()));
    }
    if !(args.delta_min > 0.0 && args.delta_min <= 1.0) {
        return Err(Error::Input(format!("--delta-min: must lie in (0, 1], got {}", args.delta_min)));
    }
    let cfg = flags.solve_config()?;
    let jobs: Vec<(usize, usize)> =
        (1..=args.n_max).flat_map(|n| (0..args.instances).map(move |i| (n, i))).collect();
    let rows = jobs.par_iter().map(|&(n, i)| probe_row(n, i, args, flags, &cfg)).collect();
    Ok(ProbeReport {
        command: "probe-conjecture".into(),
        seed: flags.seed,
        n_max: args.n_max,
        instances: args.instances,
        delta_min: args.delta_min,
        member_degree: args.member_degree,
        rows,
    })
}

fn dispatch(mode: Mode, loaded: &Loaded, flags: &Flags) -> Result<(i32, String)> {
    match mode {
        Mode::Solve => solve_like("solve", loaded, flags, false),
        Mode::SolveIdeal => solve_like("solve-ideal", loaded, flags, true),
        Mode::Check => check(loaded, flags),
        Mode::Reduce => reduce(loaded, flags),
        Mode::Norms => norms(loaded, flags),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve { .. } => "solve",
        Command::SolveIdeal { .. } => "solve-ideal",
        Command::Check { .. } => "check",
        Command::Reduce { .. } => "reduce",
        Command::Norms { .. } => "norms",
        Command::Run { .. } => "run",
        Command::ProbeConjecture(_) => "probe-conjecture",
    }
}

fn execute_inner(cli: &Cli) -> Result<(i32, String)> {
    let flags = &cli.flags;
    let file_mode = |file: &PathBuf, forced: Option<Mode>| -> Result<(i32, String)> {
        let loaded = InstanceFile::read(file)?.load()?;
        let mode = match forced.or(loaded.mode) {
            Some(m) => m,
            None => return Err(Error::Input(format!("{}: mode: missing, needed by `run`", file.display()))),
        };
        dispatch(mode, &loaded, flags)
    };
    match &cli.command {
        Command::Solve { file } => file_mode(file, Some(Mode::Solve)),
        Command::SolveIdeal { file } => file_mode(file, Some(Mode::SolveIdeal)),
        Command::Check { file } => file_mode(file, Some(Mode::Check)),
        Command::Reduce { file } => file_mode(file, Some(Mode::Reduce)),
        Command::Norms { file } => file_mode(file, Some(Mode::Norms)),
        Command::Run { file } => file_mode(file, None),
        Command::ProbeConjecture(args) => Ok((EXIT_OK, render(&probe_conjecture(args, flags)?))),
    }
}

/// Runs a parsed command without touching stdout or the `--out` file.
pub fn execute(cli: &Cli) -> Outcome {
    match execute_inner(cli) {
        Ok((code, report)) => Outcome { code, report, diagnostics: Vec::new() },
        Err(e) => {
            let report = ErrorReport { command: command_name(&cli.command).into(), status: status_of(&e), error: e.to_string() };
            Outcome { code: exit_code(&e), report: render(&report), diagnostics: vec![format!("error: {e}")] }
        }
    }
}

/// Parses `args` (program name first), runs, writes the report, and returns
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = execute(&cli);
    for d in &outcome.diagnostics {
        eprintln!("{d}");
    }
    match &cli.flags.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.report) {
                eprintln!("error: --out {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(outcome.report.as_bytes());
        }
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = r#"{
        "blaschke": [{"zero": [0, 0], "mult": 2}],
        "functions": [{"num": [[0, 0], [0, 0], [1, 0]]}, {"num": [[1, 0], [0, 0], [0, 0], [-1, 0]]}],
        "mode": "solve"
    }"#;

    #[test]
    fn parse_errors_name_the_field() {
        let e = InstanceFile::parse(r#"{"blaschke": [{"zero": [0, 0]}], "functions": []}"#).unwrap_err();
        assert!(e.to_string().contains("mult"), "{e}");
        let e = InstanceFile::parse(r#"{"blaschke": [], "functions": [], "colour": 1}"#).unwrap_err();
        assert!(e.to_string().contains("colour"), "{e}");
        let e = InstanceFile::parse("{\n\"blaschke\": 3}").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let bad_den = r#"{"blaschke": [{"zero": [0, 0], "mult": 1}],
            "functions": [{"num": [[1, 0]], "den": [[0, 0], [1, 0]]}]}"#;
        let e = InstanceFile::parse(bad_den).unwrap().load().unwrap_err();
        assert!(e.to_string().contains("functions[0].den"), "{e}");
        let outside = r#"{"blaschke": [{"zero": [1.5, 0], "mult": 1}], "functions": [{"num": [[1, 0]]}]}"#;
        let e = InstanceFile::parse(outside).unwrap().load().unwrap_err();
        assert_eq!(exit_code(&e), EXIT_INPUT);
        assert!(e.to_string().contains("blaschke"), "{e}");
    }

    #[test]
    fn worked_instance_through_the_grammar() {
        let loaded = InstanceFile::parse(WORKED).unwrap().load().unwrap();
        let (code, report) = dispatch(loaded.mode.unwrap(), &loaded, &Flags::default()).unwrap();
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(v["status"], "ok");
        assert!(v["residual"].as_f64().unwrap() <= 1e-12);
        // g entries parse back through the function grammar
        let g: Vec<FunctionEntry> = serde_json::from_value(v["g"].clone()).unwrap();
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn scalar_arrays_are_inlined() {
        let v = serde_json::json!({"a": [[1.0, -0.5], [2, 3]], "s": "x [1,\n 2]", "e": [], "o": [{"k": ["u", "v,w"]}]});
        let text = render(&v);
        assert!(text.contains("[1.0, -0.5]"), "{text}");
        assert!(text.contains("\"e\": []"), "{text}");
        assert!(text.contains("[\"u\", \"v,w\"]"), "{text}");
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn round_trip_of_a_file() {
        let file = InstanceFile::parse(WORKED).unwrap();
        let again = InstanceFile::parse(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(file, again);
    }
}
