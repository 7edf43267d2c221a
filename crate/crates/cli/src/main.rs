//! `swapmagic` command-line front end.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails or a
//! construction is refused, 2 for unparsable flags or input files, 3 when the
//! exact oracle's size cap is exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use swapmagic::constructions::cocktail::DEFAULT_BUDGET;
use swapmagic::constructions::{
    double, extend_even, extend_odd, factorial_baseline, factorial_style, pipeline, set_cache_dir,
    supermagic_cocktail, t8q, tau, AstrayLabeling, Plan,
};
use swapmagic::io::{labeling_to_json, load_labeling, Meta, WitnessMeta};
use swapmagic::robustness::{ratio_sweep, report, Family, PRule, SweepRow, DEFAULT_CAP};
use swapmagic::sim::{simulate, SimConfig};
use swapmagic::squares::{base_square, check_weaving, little_square, weaving_square};
use swapmagic::verification::{check_astray, find_type_witness, AstrayReport, TypeWitness};
use swapmagic::{alpha_of, EdgeLabeling, Error};

#[derive(Parser)]
#[command(
    name = "swapmagic",
    version,
    about = "Swap-robust almost-supermagic labelings of K_n"
)]
struct Cli {
    /// Cache directory for cocktail labelings (overrides SWAPMAGIC_CACHE_DIR).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labeling and write it as JSON.
    Construct(ConstructArgs),
    /// Check a labeling file against the requested certificates.
    Verify(VerifyArgs),
    /// Run the bad-pair attack and report the robustness bounds.
    Attack(RobustArgs),
    /// Compute the exact worst-case drift with the assignment oracle.
    Exact(ExactArgs),
    /// Tabulate robustness bounds over a construction family as CSV.
    Sweep(SweepArgs),
    /// Drift a labeling with bounded random transpositions.
    Simulate(SimulateArgs),
    /// Dump a little, base or weaving square as CSV.
    Square(SquareArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    kind: Kind,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Kind {
    /// The 1-astray good labeling of K_{8q}.
    T8q {
        #[arg(long)]
        q: u32,
    },
    /// The three-block labeling of K_{8q}.
    Tau {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// A supermagic labeling of the cocktail party graph K_{q[2]} doubled.
    Cocktail {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// The supermagic factorial baseline on K_{4s+2}.
    Factorial {
        #[arg(long)]
        s: u32,
    },
    /// A seeded near-supermagic labeling with one label per factor interval.
    FactorialStyle {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2_000_000)]
        budget: u64,
    },
    /// The halving pipeline for K_n with s rounds.
    Pipeline {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        /// Record the run type certified at this magnitude.
        #[arg(long)]
        p: Option<u32>,
    },
    /// Double a 3-astray good labeling of K_{4q}.
    Double {
        #[arg(long)]
        from: PathBuf,
    },
    /// Add two vertices to a 3-astray good labeling.
    ExtendEven {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        step: u8,
        #[arg(long, value_enum, default_value_t = PlanArg::Default)]
        plan: PlanArg,
    },
    /// Add one vertex to a 3-astray good labeling.
    ExtendOdd {
        #[arg(long)]
        from: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PlanArg {
    Default,
    T,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Check the astray certificate stored in the file.
    #[arg(long)]
    astray: bool,
    /// Astray tolerance; defaults to the value stored in the file.
    #[arg(long)]
    b: Option<u32>,
    /// Compute the run witness at this magnitude.
    #[arg(long)]
    p: Option<u32>,
    /// Require the witness to certify this run count (needs --p and --l).
    #[arg(long, requires_all = ["p", "l"])]
    m: Option<u32>,
    /// Require this total run length per vertex.
    #[arg(long, requires_all = ["p", "m"])]
    l: Option<u32>,
    /// Require the spread of vertex sums to be at most this.
    #[arg(long)]
    alpha_max: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct RobustArgs {
    file: PathBuf,
    #[arg(long)]
    p: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    common: RobustArgs,
    /// Largest edge count the oracle accepts.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Factorial,
    FactorialStyle,
    T8q,
    Pipeline,
}

#[derive(Args)]
struct FamilyFlags {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Seed for factorial-style.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Search budget for factorial-style.
    #[arg(long, default_value_t = 2_000_000)]
    budget: u64,
    /// Halving rounds for pipeline.
    #[arg(long, default_value_t = 1)]
    s: u32,
}

impl FamilyFlags {
    fn family(&self) -> Family {
        match self.family {
            FamilyArg::Factorial => Family::FactorialBaseline,
            FamilyArg::FactorialStyle => Family::FactorialStyle {
                seed: self.seed,
                budget: self.budget,
            },
            FamilyArg::T8q => Family::T8q,
            FamilyArg::Pipeline => Family::Pipeline { s: self.s },
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    family: FamilyFlags,
    /// Family parameters: a list `2,3,5` or a range `2..=6`.
    #[arg(long, value_parser = parse_params)]
    params: Params,
    /// Magnitude rule: an integer, `sqrt` or `div:D`.
    #[arg(long, value_parser = parse_rule, default_value = "1")]
    p: PRule,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Fill the seconds column (makes output timing dependent).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Labeling file; use --family and --param instead to build one.
    #[arg(conflicts_with = "family")]
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long, requires = "family")]
    param: Option<u32>,
    /// Seed for factorial-style.
    #[arg(long, default_value_t = 0)]
    family_seed: u64,
    #[arg(long, default_value_t = 2_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    s: u32,
    #[arg(long, default_value_t = 10)]
    epochs: u32,
    #[arg(long)]
    p: u32,
    /// Transposition attempts per epoch; defaults to four per edge.
    #[arg(long)]
    step_budget: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trace CSV; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit 1 if the trace exceeds the certified drift bound.
    #[arg(long)]
    check_bound: bool,
}

#[derive(Args)]
struct SquareArgs {
    #[arg(value_enum)]
    which: SquareKind,
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Quarter turns for the little square.
    #[arg(long, default_value_t = 0)]
    rot: u32,
    /// Also check the weaving properties and exit 1 on failure.
    #[arg(long)]
    check: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SquareKind {
    Little,
    Base,
    Weaving,
}

#[derive(Clone, Debug)]
struct Params(Vec<u32>);

fn parse_params(s: &str) -> Result<Params, String> {
    let bad = |_| format!("bad parameter list `{s}`");
    if let Some((a, b)) = s.split_once("..=") {
        let (a, b): (u32, u32) = (
            a.trim().parse().map_err(bad)?,
            b.trim().parse().map_err(bad)?,
        );
        if a > b {
            return Err(format!("empty range `{s}`"));
        }
        return Ok(Params((a..=b).collect()));
    }
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(bad))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Params(v))
}

fn parse_rule(s: &str) -> Result<PRule, String> {
    if s == "sqrt" {
        return Ok(PRule::SqrtCeil);
    }
    if let Some(d) = s.strip_prefix("div:") {
        let d: u32 = d.parse().map_err(|_| format!("bad divisor in `{s}`"))?;
        if d == 0 {
            return Err("divisor must be positive".into());
        }
        return Ok(PRule::Div(d));
    }
    s.parse()
        .map(PRule::Const)
        .map_err(|_| format!("magnitude rule `{s}` is not an integer, `sqrt` or `div:D`"))
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::Malformed(_)
            | Error::Json(_)
            | Error::NotBijection { .. }
            | Error::InvalidEdge { .. }
            | Error::IndexOutOfRange { .. }
            | Error::Io(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(dir) = &cli.cache_dir {
        set_cache_dir(Some(dir.clone()));
    }
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Attack(a) => robust(a, None),
        Command::Exact(a) => robust(a.common, Some(a.cap)),
        Command::Sweep(a) => sweep(a),
        Command::Simulate(a) => sim(a),
        Command::Square(a) => square(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load_astray(path: &Path) -> Result<AstrayLabeling, Failure> {
    let (t, meta) = load_labeling(path)?;
    let astray = meta.astray_edges(&t)?.ok_or_else(|| Failure {
        code: 1,
        message: format!("{} carries no astray certificate", path.display()),
    })?;
    Ok(AstrayLabeling::from_parts(t, astray, meta.b.unwrap_or(3))?)
}

fn construct(a: ConstructArgs) -> Outcome {
    let text = match a.kind {
        Kind::Cocktail { q, budget } => supermagic_cocktail(q, budget)?.to_json() + "\n",
        kind => {
            let (t, meta) = build(kind)?;
            labeling_to_json(&t, &meta)? + "\n"
        }
    };
    emit(a.out.as_deref(), &text)?;
    Ok(true)
}

fn build(kind: Kind) -> Result<(EdgeLabeling, Meta), Failure> {
    let astray = |a: AstrayLabeling, name: &str| {
        let meta = Meta::named(name).with_astray(&a);
        (a.t, meta)
    };
    Ok(match kind {
        Kind::T8q { q } => astray(t8q(q)?, "t8q"),
        Kind::Tau { q, budget } => (tau(q, budget)?, Meta::named("tau")),
        Kind::Factorial { s } => (factorial_baseline(s)?, Meta::named("factorial")),
        Kind::FactorialStyle { n, seed, budget } => (
            factorial_style(n, seed, budget)?,
            Meta::named("factorial-style"),
        ),
        Kind::Pipeline { n, s, p } => {
            let out = pipeline(n, s, p)?;
            let mut meta = match &out.astray {
                Some(a) => Meta::named("pipeline").with_astray(a),
                None => Meta::named("pipeline"),
            };
            if let (Some(p), Some(m), Some(l)) = (out.meta.p, out.meta.m, out.meta.l) {
                meta.type_witness = Some(WitnessMeta { p, m, l });
            }
            meta.pipeline = Some(out.meta);
            (out.t, meta)
        }
        Kind::Double { from } => astray(double(&load_astray(&from)?)?, "double"),
        Kind::ExtendEven { from, step, plan } => {
            let plan = match plan {
                PlanArg::Default => Plan::Default,
                PlanArg::T => Plan::TPlan,
            };
            astray(
                extend_even(&load_astray(&from)?, step, plan)?,
                "extend-even",
            )
        }
        Kind::ExtendOdd { from } => (extend_odd(&load_astray(&from)?)?, Meta::named("extend-odd")),
        Kind::Cocktail { .. } => unreachable!("handled by construct"),
    })
}

#[derive(Serialize)]
struct VerifyReport {
    n: u32,
    alpha: i64,
    alpha_ok: Option<bool>,
    astray: Option<AstrayReport>,
    witness: Option<WitnessSummary>,
    pass: bool,
}

#[derive(Serialize)]
struct WitnessSummary {
    p: u32,
    m: u32,
    l: u32,
    requested: Option<(u32, u32)>,
    certified: Option<bool>,
}

fn witness_summary(w: &TypeWitness, want: Option<(u32, u32)>) -> WitnessSummary {
    WitnessSummary {
        p: w.p,
        m: w.m,
        l: w.l,
        requested: want,
        certified: want.map(|(m, l)| w.certifies(m, l)),
    }
}

fn verify(a: VerifyArgs) -> Outcome {
    let (t, meta) = load_labeling(&a.file)?;
    let alpha = alpha_of(&t);
    let alpha_ok = a.alpha_max.map(|x| alpha <= x);
    let astray = if a.astray {
        let edges = meta.astray_edges(&t)?.ok_or_else(|| Failure {
            code: 1,
            message: format!("{} carries no astray certificate", a.file.display()),
        })?;
        let b = a.b.or(meta.b).unwrap_or(3);
        Some(check_astray(&t, &edges, b))
    } else {
        None
    };
    let witness = match a.p {
        Some(p) => {
            let w = find_type_witness(&t, p)?;
            Some(witness_summary(&w, a.m.zip(a.l)))
        }
        None => None,
    };
    let pass = alpha_ok.unwrap_or(true)
        && astray.as_ref().is_none_or(|r| r.pass)
        && witness.as_ref().and_then(|w| w.certified).unwrap_or(true);
    let r = VerifyReport {
        n: t.order(),
        alpha,
        alpha_ok,
        astray,
        witness,
        pass,
    };
    let text = match a.format {
        Format::Json => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
        Format::Human | Format::Csv => human_verify(&r),
    };
    emit(None, &text)?;
    Ok(pass)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn human_verify(r: &VerifyReport) -> String {
    let mut s = format!("K_{}: alpha = {}", r.n, r.alpha);
    if let Some(ok) = r.alpha_ok {
        s += &format!(" [{}]", mark(ok));
    }
    s.push('\n');
    if let Some(a) = &r.astray {
        s += &format!(
            "astray: a = {}, b = {} (at most {} at a vertex), parity {}, centred {}, tolerance {}, balance {}, average {} [{}]\n",
            a.a,
            a.b,
            a.b_actual,
            mark(a.parity),
            mark(a.centred),
            mark(a.tolerance),
            mark(a.balance),
            mark(a.average),
            mark(a.pass)
        );
        if let Some(v) = &a.first_violation {
            s += &format!("  first violation: {v}\n");
        }
    }
    if let Some(w) = &r.witness {
        s += &format!(
            "runs at p = {}: at most {} per vertex, smallest total {}",
            w.p, w.m, w.l
        );
        if let (Some((m, l)), Some(ok)) = (w.requested, w.certified) {
            s += &format!("; ({m}, {l}) [{}]", mark(ok));
        }
        s.push('\n');
    }
    s += if r.pass { "PASS\n" } else { "FAIL\n" };
    s
}

fn robust(a: RobustArgs, cap: Option<u64>) -> Outcome {
    let (t, _) = load_labeling(&a.file)?;
    let r = report(&t, a.p, cap)?;
    let text = match a.format {
        Format::Json => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
        Format::Csv => {
            let mut s =
                String::from("n,p,alpha,attack,theorem_lower,theorem_upper,drift_bound,exact\n");
            s += &format!(
                "{},{},{},{},{},{},{},{}\n",
                r.n,
                r.p,
                r.alpha,
                opt(r.attack.as_ref().map(|x| x.discrepancy)),
                r.theorem_lower,
                r.theorem_upper,
                r.drift.bound,
                opt(r.exact.as_ref().map(|x| x.r))
            );
            s
        }
        Format::Human => {
            let mut s = format!("K_{} at p = {}: alpha = {}\n", r.n, r.p, r.alpha);
            if let Some(x) = &r.attack {
                s += &format!(
                    "attack on ({}, {}): discrepancy {} (guarantee {}, score {}, {} edges moved)\n",
                    x.u,
                    x.v,
                    x.discrepancy,
                    x.guarantee,
                    x.score,
                    x.moves.len()
                );
            }
            if let Some(x) = &r.exact {
                s += &format!("exact: {} on ({}, {})\n", x.r, x.u, x.v);
            }
            s += &format!(
                "bounds: {} <= R <= min({}, {}) (drift with m = {}, l = {})\n",
                r.best_lower(),
                r.theorem_upper,
                r.drift.bound,
                r.drift.m,
                r.drift.l
            );
            s
        }
    };
    emit(a.out.as_deref(), &text)?;
    Ok(r.consistent())
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn sweep(a: SweepArgs) -> Outcome {
    let rows = ratio_sweep(a.family.family(), &a.params.0, a.p, a.cap, a.timing);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "p",
        "alpha",
        "attack_lb",
        "exact",
        "upper",
        "ratio_lb",
        "ratio_exact",
        "seconds",
    ])
    .map_err(csv_failure)?;
    let mut ok = true;
    for (param, row) in a.params.0.iter().zip(rows) {
        match row {
            Ok(r) => write_row(&mut w, &r)?,
            Err(e) => {
                eprintln!("parameter {param}: {e}");
                ok = false;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    emit(
        a.out.as_deref(),
        &String::from_utf8(bytes).expect("csv is utf-8"),
    )?;
    Ok(ok)
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure {
        code: 1,
        message: e.to_string(),
    }
}

fn write_row(w: &mut csv::Writer<Vec<u8>>, r: &SweepRow) -> Result<(), Failure> {
    let ratio = |x: Option<f64>| x.map(|v| format!("{v:.6}")).unwrap_or_default();
    w.write_record([
        r.n.to_string(),
        r.p.to_string(),
        r.alpha.to_string(),
        r.attack_lb.to_string(),
        opt(r.exact),
        r.upper.to_string(),
        ratio(r.ratio_lb),
        ratio(r.ratio_exact),
        r.seconds.map(|s| format!("{s:.3}")).unwrap_or_default(),
    ])
    .map_err(csv_failure)
}

fn sim(a: SimulateArgs) -> Outcome {
    let t = match (&a.file, a.family) {
        (Some(path), _) => load_labeling(path)?.0,
        (None, Some(f)) => {
            let param = a.param.ok_or_else(|| Failure {
                code: 2,
                message: "--family needs --param".into(),
            })?;
            let flags = FamilyFlags {
                family: f,
                seed: a.family_seed,
                budget: a.budget,
                s: a.s,
            };
            flags.family().build(param)?
        }
        (None, None) => {
            return Err(Failure {
                code: 2,
                message: "give a labeling file or --family with --param".into(),
            })
        }
    };
    let cfg = SimConfig {
        epochs: a.epochs,
        step_budget: a
            .step_budget
            .unwrap_or(swapmagic::sim::STEPS_PER_EDGE * t.edge_count()),
        p: a.p,
        seed: a.seed,
    };
    let trace = simulate(&t, &cfg)?;
    emit(a.out.as_deref(), &trace.to_csv())?;
    if a.out.is_some() {
        eprintln!(
            "max discrepancy {} against drift bound {} (m = {}, l = {})",
            trace.max_discrepancy(),
            trace.bound.bound,
            trace.bound.m,
            trace.bound.l
        );
    }
    Ok(!a.check_bound || trace.within_bound())
}

fn square(a: SquareArgs) -> Outcome {
    let sq = match a.which {
        SquareKind::Little => little_square(a.q, a.rot)?,
        SquareKind::Base => base_square(),
        SquareKind::Weaving => weaving_square(a.q)?,
    };
    emit(a.out.as_deref(), &sq.to_csv())?;
    if !a.check {
        return Ok(true);
    }
    let r = check_weaving(&sq)?;
    if !r.pass() {
        eprintln!("{}", serde_json::to_string(&r).expect("report serializes"));
    }
    Ok(r.pass())
}
