use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stablecount_core::decimal::{parse_decimal, render12};
use stablecount_core::inference::{marginal_with, InferenceTask};
use stablecount_core::oracle::{enumerate_stable_bounded, model_literals, model_weight, DEFAULT_BOUND};
use stablecount_core::program::{Lit, Program, Warning};
use stablecount_core::propagation::{Instance, PropagationState};
use stablecount_core::transform::{copy_transform, justified_residual, prj, Subprogram};
use stablecount_core::{CountError, CountOptions, Counter, InferenceError, Mode, OracleError};

use crate::format::{literal_text, parse_program, print_program};
use crate::generate::{generate, Family, GenSpec};
use crate::report::{stats_line, trace_line, Namer};

#[derive(Parser, Debug)]
#[command(name = "stablecount", version, about = "Exact stable-model counting and marginal inference")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Search strategy.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Copy)]
    mode: ModeArg,
    /// Comma-separated literals (`x`, `-x` or `not x`) every model must extend.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    assume: Vec<String>,
    /// Disable the component cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Disable splitting into independent components.
    #[arg(long, global = true)]
    no_decomp: bool,
    /// Print a statistics record after each result.
    #[arg(long, global = true)]
    stats: bool,
    /// Generator seed; for count/infer, shuffles the decision order.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Print every decision and propagation as `LEVEL kind literal reason`.
    #[arg(long, global = true)]
    trace: bool,
    /// Approximate component cache size in bytes.
    #[arg(long, global = true)]
    cache_budget: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Standard,
    Copy,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Standard => Mode::StandardSearch,
            ModeArg::Copy => Mode::Copy,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count stable models.
    Count {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Also print the weighted count.
        #[arg(long)]
        weighted: bool,
        /// Solve this many files in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Marginal probability of each `#query` given the `#evidence`.
    Infer {
        file: PathBuf,
        /// Print exact fractions instead of decimals.
        #[arg(long)]
        exact: bool,
    },
    /// Brute-force enumeration of stable models.
    Oracle {
        file: PathBuf,
        /// List every model.
        #[arg(long)]
        models: bool,
        /// Refuse programs with more variables than this.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Generate a benchmark instance.
    Gen(GenArgs),
    /// Inspect internal program transforms.
    #[command(subcommand)]
    Debug(DebugCommand),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum)]
    family: FamilyArg,
    /// Nodes or persons.
    #[arg(short, long)]
    n: usize,
    /// Edge probability of the random digraph.
    #[arg(short, long, default_value_t = 0.5)]
    p: f64,
    /// Probability of `in(v)` or `stress(x)`.
    #[arg(long, default_value = "0.5")]
    node_prob: String,
    /// Probability of `influences(x_y)`.
    #[arg(long, default_value = "0.5")]
    edge_prob: String,
    #[arg(long)]
    query: Option<usize>,
    #[arg(long)]
    evidence: Option<usize>,
    /// Keep only this many random variables, fixing the rest from the seed.
    #[arg(long)]
    fix_random: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Graphrel,
    Smokers,
}

#[derive(Subcommand, Debug)]
enum DebugCommand {
    /// Print prj(copy(P), π) and the justified residual program after
    /// propagating the assumptions (evidence becomes unit constraints).
    Prj { file: PathBuf },
}

/// Exit status 1: bad input; 2: resource limit.
#[derive(Debug)]
enum Failure {
    Input(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Resource(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Resource(m) => m,
        }
    }
}

type Outcome = Result<String, Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut notes = Vec::new();
    let result = dispatch(&cli, &mut notes);
    for n in notes {
        let _ = writeln!(err, "{n}");
    }
    match result {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cli: &Cli, notes: &mut Vec<String>) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Count { files, weighted, jobs } => count_files(g, files, *weighted, *jobs, notes),
        Command::Infer { file, exact } => {
            let p = load(file, notes)?;
            infer(g, &p, *exact)
        }
        Command::Oracle { file, models, bound } => {
            let p = load(file, notes)?;
            oracle(g, &p, *models, *bound)
        }
        Command::Gen(args) => gen(g, args),
        Command::Debug(DebugCommand::Prj { file }) => {
            let p = load(file, notes)?;
            debug_prj(g, &p)
        }
    }
}

fn load(path: &Path, notes: &mut Vec<String>) -> Result<Program, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let p = parse_program(&text).map_err(|e| Failure::Input(format!("{}:{e}", path.display())))?;
    for w in p.warnings() {
        let level = if matches!(w, Warning::NoRules(_)) { "note" } else { "warning" };
        notes.push(format!("{level}: {}: {w}", path.display()));
    }
    Ok(p)
}

fn assumptions(g: &Global, p: &Program) -> Result<Vec<Lit>, Failure> {
    g.assume
        .iter()
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| p.parse_lit(t).ok_or_else(|| Failure::Input(format!("unknown literal `{t}` in --assume"))))
        .collect()
}

fn options(g: &Global, p: &Program) -> CountOptions {
    let decision_priority = g.seed.map(|seed| {
        let mut order: Vec<u32> = (0..p.num_vars() as u32).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut rank = vec![0; order.len()];
        for (i, v) in order.into_iter().enumerate() {
            rank[v as usize] = i as u32;
        }
        rank
    });
    CountOptions {
        cache: !g.no_cache,
        decomposition: !g.no_decomp,
        decision_priority,
        cache_budget: g.cache_budget,
        trace: g.trace,
        ..CountOptions::default()
    }
}

fn count_error(e: CountError) -> Failure {
    Failure::Input(e.to_string())
}

fn count_one(g: &Global, path: &Path, weighted: bool, prefix: bool) -> (Outcome, Vec<String>) {
    let mut notes = Vec::new();
    let outcome = (|| {
        let p = load(path, &mut notes)?;
        let assumed = assumptions(g, &p)?;
        let opts = CountOptions { weighted, ..options(g, &p) };
        let start = Instant::now();
        let mut counter = Counter::new(&p, g.mode.into(), opts).map_err(count_error)?;
        let r = counter.count(&assumed).map_err(count_error)?;
        let elapsed = start.elapsed();
        let mut text = String::new();
        if g.trace {
            let namer = Namer::new(&p);
            for e in &r.trace {
                text.push_str(&trace_line(&namer, e));
                text.push('\n');
            }
        }
        if prefix {
            text.push_str(&format!("{} {}\n", path.display(), r.count));
        } else {
            text.push_str(&format!("{}\n", r.count));
        }
        if let Some(w) = &r.weight {
            text.push_str(&format!("weight {}\n", render12(w)));
            if !r.defaulted_weights.is_empty() {
                notes.push(format!(
                    "warning: {}: {} standard variables without #prob weighted 1/2",
                    path.display(),
                    r.defaulted_weights.len()
                ));
            }
        }
        if g.stats {
            text.push_str(&stats_line(&r.stats, elapsed));
            text.push('\n');
        }
        Ok(text)
    })();
    (outcome, notes)
}

fn count_files(g: &Global, files: &[PathBuf], weighted: bool, jobs: usize, notes: &mut Vec<String>) -> Outcome {
    let prefix = files.len() > 1;
    let jobs = jobs.clamp(1, files.len().max(1));
    let mut results: Vec<Option<(Outcome, Vec<String>)>> = (0..files.len()).map(|_| None).collect();
    if jobs == 1 {
        for (slot, f) in results.iter_mut().zip(files) {
            *slot = Some(count_one(g, f, weighted, prefix));
        }
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let done = std::sync::Mutex::new(&mut results);
        std::thread::scope(|s| {
            for _ in 0..jobs {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if i >= files.len() {
                        break;
                    }
                    let r = count_one(g, &files[i], weighted, prefix);
                    done.lock().unwrap()[i] = Some(r);
                });
            }
        });
    }
    let mut text = String::new();
    for r in results {
        let (outcome, n) = r.expect("every file is counted");
        notes.extend(n);
        text.push_str(&outcome?);
    }
    Ok(text)
}

fn infer(g: &Global, p: &Program, exact: bool) -> Outcome {
    let mut task = InferenceTask::from_program(p, g.mode.into());
    task.evidence.extend(assumptions(g, p)?);
    if task.queries.is_empty() {
        return Err(Failure::Input("program has no #query".into()));
    }
    let opts = options(g, p);
    let marginals = marginal_with(&task, &opts).map_err(|e| match e {
        InferenceError::Count(c) => count_error(c),
        other => Failure::Input(other.to_string()),
    })?;
    let mut text = String::new();
    for (q, pr) in marginals {
        let value = if exact { pr.to_string() } else { render12(&pr) };
        text.push_str(&format!("query {} {value}\n", p.lit_name(q)));
    }
    Ok(text)
}

fn oracle(g: &Global, p: &Program, list: bool, bound: usize) -> Outcome {
    let set = enumerate_stable_bounded(p, bound).map_err(|e| match e {
        OracleError::SizeLimit { .. } => Failure::Resource(e.to_string()),
        other => Failure::Input(other.to_string()),
    })?;
    let mut given = p.evidence().to_vec();
    given.extend(assumptions(g, p)?);
    let models: Vec<_> = set.extending(&given).collect();
    let total: BigRational = models.iter().map(|m| model_weight(p, m)).fold(BigRational::zero(), |a, b| a + b);
    let mut text = format!("count {}\nweight {}\n", models.len(), render12(&total));
    if !p.queries().is_empty() {
        if total.is_zero() {
            return Err(Failure::Input(OracleError::ZeroEvidenceWeight.to_string()));
        }
        for &q in p.queries() {
            let num: BigRational = models
                .iter()
                .filter(|m| m.is_true(q))
                .map(|m| model_weight(p, m))
                .fold(BigRational::zero(), |a, b| a + b);
            text.push_str(&format!("query {} {}\n", p.lit_name(q), render12(&(num / &total))));
        }
    }
    if list {
        for m in models {
            let lits: Vec<String> = model_literals(m).into_iter().map(|l| p.lit_name(l)).collect();
            text.push_str(&format!("model {}\n", lits.join(" ")));
        }
    }
    Ok(text)
}

fn gen(g: &Global, a: &GenArgs) -> Outcome {
    if a.n == 0 {
        return Err(Failure::Input("--n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&a.p) {
        return Err(Failure::Input("--p must lie in [0, 1]".into()));
    }
    let prob = |flag: &str, text: &str| {
        parse_decimal(text)
            .filter(|r| *r >= BigRational::zero() && *r <= BigRational::from_integer(1.into()))
            .ok_or_else(|| Failure::Input(format!("--{flag} expects a decimal in [0, 1], got `{text}`")))
    };
    let family = match a.family {
        FamilyArg::Graphrel => Family::GraphRel,
        FamilyArg::Smokers => Family::Smokers,
    };
    let seed = g.seed.unwrap_or(0);
    let mut spec = GenSpec::new(family, a.n, a.p, seed);
    spec.node_prob = prob("node-prob", &a.node_prob)?;
    spec.edge_prob = prob("edge-prob", &a.edge_prob)?;
    spec.query = a.query;
    spec.evidence = a.evidence;
    spec.fix_random = a.fix_random;
    for (flag, v) in [("query", a.query), ("evidence", a.evidence)] {
        if v.is_some_and(|v| v == 0 || v > a.n) {
            return Err(Failure::Input(format!("--{flag} must name a node in 1..={}", a.n)));
        }
    }
    let family_name = match family {
        Family::GraphRel => "graphrel",
        Family::Smokers => "smokers",
    };
    let text = format!("% {family_name} n={} p={} seed={seed}\n{}", a.n, a.p, print_program(&generate(&spec)));
    match &a.output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn subprogram_text(p: &Program, s: &Subprogram) -> String {
    let mut text = String::new();
    for r in &s.rules {
        if r.body.is_empty() {
            text.push_str(&format!("rule {}.\n", p.name(r.head)));
        } else {
            let body: Vec<String> = r.body.iter().map(|&l| literal_text(p, l)).collect();
            text.push_str(&format!("rule {} :- {}.\n", p.name(r.head), body.join(", ")));
        }
    }
    for c in &s.constraints {
        let body: Vec<String> = c.lits.iter().map(|&l| literal_text(p, !l)).collect();
        text.push_str(&format!(":- {}.\n", body.join(", ")));
    }
    text
}

fn debug_prj(g: &Global, p: &Program) -> Outcome {
    let assumed = assumptions(g, p)?;
    let q = copy_transform(p);
    let mut st = PropagationState::new(Instance::from_copy(&q, p.evidence()));
    let consistent = assumed.iter().all(|&l| st.assume(l));
    if !consistent || st.initial_scan().is_err() || st.propagate().is_err() {
        return Ok("conflict\n".into());
    }
    let pi = st.assignment();
    let namer = Namer::new(p);
    let mut lits: Vec<Lit> = pi.literals().collect();
    lits.sort();
    let shown: Vec<String> = lits.iter().map(|&l| namer.lit(l)).collect();
    let projected = prj(&q, pi);
    let direct = justified_residual(p, &pi.restrict_to(p.num_vars()));
    Ok(format!(
        "% assignment {}\n% prj\n{}% justified residual\n{}% equal {}\n",
        shown.join(" "),
        subprogram_text(p, &projected),
        subprogram_text(p, &direct),
        if projected == direct { "yes" } else { "no" }
    ))
}
