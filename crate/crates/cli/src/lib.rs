//! The `fthresh` command line.

pub mod format;
pub mod suites;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use fthresh::newton::complement_volume;
use fthresh::thresholds::{
    check_briancon_skoda, check_finiteness_bound, check_multiplicity_bound, check_parameter_lemma,
    check_theorem_c, frobenius_exponent, Verdict,
};
use fthresh::{
    crosscheck_thresholds_equal_jumps, fractional_power, integral_closure, jumping_numbers, multiplicity, nu,
    parse_ideal_spec, rees_valuations, test_ideal, threshold, Error, Ideal, MonomialIdeal, Rational,
};

pub use format::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Nu,
    Threshold,
    Closure,
    FracPower,
    Rees,
    Multiplicity,
    TestIdeal,
    Jumping,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    ParameterLemma,
    TheoremC,
    BrianconSkoda,
    Finiteness,
    MultiplicityBound,
    ThresholdsJumps,
    All,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::ParameterLemma => "parameter-lemma",
            Target::TheoremC => "theorem-c",
            Target::BrianconSkoda => "briancon-skoda",
            Target::Finiteness => "finiteness",
            Target::MultiplicityBound => "multiplicity-bound",
            Target::ThresholdsJumps => "thresholds-jumps",
            Target::All => "all",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "fthresh", version, about = "F-thresholds, integral closures and test ideals of ideals over F_p")]
pub struct Cli {
    #[arg(value_enum)]
    pub verb: Verb,
    /// Verification target (only with `verify`)
    #[arg(value_enum)]
    pub target: Option<Target>,
    #[arg(long, value_name = "FILE")]
    pub a: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub j: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub i: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub ideal: Option<PathBuf>,
    #[arg(long, value_name = "RAT")]
    pub t: Option<String>,
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_name = "INT", conflicts_with = "e_max")]
    pub e: Option<u32>,
    #[arg(long, value_name = "INT")]
    pub e_max: Option<u32>,
    #[arg(long, value_name = "RAT")]
    pub bound: Option<String>,
    #[arg(long, value_name = "INT")]
    pub n_max: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Print `e,nu,ratio` rows instead of the report
    #[arg(long)]
    pub emit_sequence: bool,
    #[arg(long, value_name = "INT")]
    pub jobs: Option<usize>,
}

pub const DEFAULT_E_MAX: u32 = 3;
pub const DEFAULT_N_MAX: u32 = 3;

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Res<T> {
    Err(Failure::Usage(msg.into()))
}

/// A report on standard output, plus whether a verifier failed.
enum Output {
    Report(Value, Verdict),
    Raw(String),
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = match cli.jobs {
        Some(0) => usage("--jobs must be at least 1"),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => usage(format!("cannot start thread pool: {e}")),
        },
        None => dispatch(&cli),
    };
    conclude(result, cli.format)
}

fn conclude(result: Res<Output>, format: Format) -> Outcome {
    match result {
        Ok(Output::Report(value, verdict)) => Outcome {
            code: if verdict.passed() { 0 } else { 1 },
            stdout: format::render(&value, format),
            stderr: String::new(),
        },
        Ok(Output::Raw(text)) => Outcome { code: 0, stdout: text, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Library(e)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn load(path: &Path) -> Res<Ideal> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_ideal_spec(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn require(path: &Option<PathBuf>, flag: &str, verb: &str) -> Res<Ideal> {
    match path {
        Some(p) => load(p),
        None => usage(format!("`{verb}` needs --{flag} FILE")),
    }
}

fn rational(text: &str, flag: &str) -> Res<Rational> {
    text.parse().map_err(|_| Failure::Usage(format!("--{flag} expects a rational a/b or an integer, got `{text}`")))
}

fn pair(a: &Ideal, b: &Ideal) -> Res<()> {
    a.check_same_ring(b).map_err(Failure::from)
}

fn rendered(ideal: &MonomialIdeal, vars: &[String]) -> Value {
    json!(ideal.render(vars))
}

/// The single ideal argument of the one-ideal verbs.
fn single(cli: &Cli, verb: &str) -> Res<Ideal> {
    match (&cli.ideal, &cli.a, &cli.i) {
        (Some(p), None, None) | (None, Some(p), None) | (None, None, Some(p)) => load(p),
        (None, None, None) => usage(format!("`{verb}` needs --ideal FILE")),
        _ => usage(format!("`{verb}` takes a single ideal")),
    }
}

fn reject_target(cli: &Cli) -> Res<()> {
    if cli.target.is_some() {
        return usage("a target is only accepted by `verify`");
    }
    Ok(())
}

fn pass(value: Value) -> Output {
    Output::Report(value, Verdict::Pass)
}

fn dispatch(cli: &Cli) -> Res<Output> {
    if cli.verb != Verb::Verify {
        reject_target(cli)?;
    }
    match cli.verb {
        Verb::Nu => {
            let a = require(&cli.a, "a", "nu")?;
            let j = require(&cli.j, "j", "nu")?;
            pair(&a, &j)?;
            let Some(e) = cli.e else { return usage("`nu` needs --e INT") };
            let q = frobenius_exponent(a.p, e)?;
            let n = nu(&a, &j, e)?;
            Ok(pass(json!({ "p": a.p, "e": e, "q": q, "nu": n })))
        }
        Verb::Threshold => {
            let a = require(&cli.a, "a", "threshold")?;
            let j = require(&cli.j, "j", "threshold")?;
            pair(&a, &j)?;
            let e_max = cli.e_max.or(cli.e).unwrap_or(DEFAULT_E_MAX);
            let est = threshold(&a, &j, e_max)?;
            if cli.emit_sequence {
                let mut text = String::from("e,nu,ratio\n");
                for s in &est.sequence {
                    text.push_str(&format!("{},{},{}\n", s.e, s.nu, s.ratio));
                }
                return Ok(Output::Raw(text));
            }
            Ok(pass(serde_json::to_value(&est).expect("serializable")))
        }
        Verb::Closure => {
            let i = single(cli, "closure")?;
            let c = integral_closure(&i.to_monomial()?)?;
            Ok(pass(json!({ "generators": rendered(&c, &i.vars) })))
        }
        Verb::FracPower => {
            let i = single(cli, "frac-power")?;
            let Some(t) = &cli.t else { return usage("`frac-power` needs --t RAT") };
            let t = rational(t, "t")?;
            let c = fractional_power(&i.to_monomial()?, &t, cli.strict)?;
            Ok(pass(json!({ "t": t, "strict": cli.strict, "generators": rendered(&c, &i.vars) })))
        }
        Verb::Rees => {
            let i = single(cli, "rees")?;
            let r = rees_valuations(&i.to_monomial()?)?;
            Ok(pass(json!({ "valuations": r })))
        }
        Verb::Multiplicity => {
            let i = single(cli, "multiplicity")?;
            let m = i.to_monomial()?;
            Ok(pass(json!({ "multiplicity": multiplicity(&m)?, "complement_volume": complement_volume(&m)? })))
        }
        Verb::TestIdeal => {
            let i = single(cli, "test-ideal")?;
            let Some(t) = &cli.t else { return usage("`test-ideal` needs --t RAT") };
            let t = rational(t, "t")?;
            let tau = test_ideal(&i.to_monomial()?, &t)?;
            Ok(pass(json!({ "t": t, "generators": rendered(&tau, &i.vars) })))
        }
        Verb::Jumping => {
            let i = single(cli, "jumping")?;
            let bound = match &cli.bound {
                Some(b) => rational(b, "bound")?,
                None => Rational::from(i.dim() + 2),
            };
            let s = jumping_numbers(&i.to_monomial()?, &bound)?;
            let ideals: serde_json::Map<String, Value> =
                s.ideals.iter().map(|(t, tau)| (t.to_string(), rendered(tau, &i.vars))).collect();
            Ok(pass(json!({ "bound": bound, "jumps": s.jumps, "ideals": ideals })))
        }
        Verb::Verify => verify(cli),
    }
}

fn parameter_exponents(j: &MonomialIdeal) -> Res<Vec<u32>> {
    let mut exps = Vec::new();
    for g in j.generators() {
        let support: Vec<usize> = g.support().collect();
        if support.len() != 1 {
            return usage("J must be generated by pure powers of variables");
        }
        exps.push((support[0], g[support[0]]));
    }
    exps.sort_unstable();
    if exps.iter().enumerate().any(|(k, (i, _))| *i != k) {
        return usage("J must be generated by pure powers of the leading variables x_1, …, x_n");
    }
    Ok(exps.into_iter().map(|(_, a)| a).collect())
}

fn report<T: serde::Serialize>(r: fthresh::thresholds::Report<T>) -> Output {
    Output::Report(serde_json::to_value(&r).expect("serializable"), r.verdict)
}

fn summary(s: suites::Summary) -> Output {
    Output::Report(s.value, s.verdict)
}

fn verify(cli: &Cli) -> Res<Output> {
    let Some(target) = cli.target else {
        return usage("`verify` needs a target: parameter-lemma, theorem-c, briancon-skoda, finiteness, multiplicity-bound, thresholds-jumps or all");
    };
    let e_max = cli.e_max.or(cli.e).unwrap_or(DEFAULT_E_MAX);
    let n_max = cli.n_max.unwrap_or(DEFAULT_N_MAX);
    let bound = cli.bound.as_deref().map(|b| rational(b, "bound")).transpose()?;
    let files = cli.a.is_some() || cli.j.is_some() || cli.i.is_some() || cli.ideal.is_some();
    let mono = |i: &Ideal| i.to_monomial().map_err(Failure::from);
    match target {
        Target::ParameterLemma if files => {
            let j = require(&cli.j, "j", "verify parameter-lemma")?;
            let exps = parameter_exponents(&mono(&j)?)?;
            Ok(report(check_parameter_lemma(&exps, j.dim(), &suites::PARAMETER_PRIMES, e_max)?))
        }
        Target::TheoremC if files => {
            let i = require(&cli.i, "i", "verify theorem-c")?;
            let j = require(&cli.j, "j", "verify theorem-c")?;
            pair(&i, &j)?;
            let exps = parameter_exponents(&mono(&j)?)?;
            Ok(report(check_theorem_c(&mono(&i)?, &exps)?))
        }
        Target::BrianconSkoda if files => {
            let j = require(&cli.j, "j", "verify briancon-skoda")?;
            Ok(report(check_briancon_skoda(&mono(&j)?, n_max)?))
        }
        Target::Finiteness if files => {
            let a = require(&cli.a, "a", "verify finiteness")?;
            let j = require(&cli.j, "j", "verify finiteness")?;
            pair(&a, &j)?;
            Ok(report(check_finiteness_bound(&mono(&a)?, &mono(&j)?)?))
        }
        Target::MultiplicityBound if files => {
            let a = require(&cli.a, "a", "verify multiplicity-bound")?;
            let j = require(&cli.j, "j", "verify multiplicity-bound")?;
            pair(&a, &j)?;
            Ok(report(check_multiplicity_bound(&mono(&a)?, &mono(&j)?)?))
        }
        Target::ThresholdsJumps if files => {
            let a = require(&cli.a, "a", "verify thresholds-jumps")?;
            let samples = match &cli.j {
                Some(p) => {
                    let j = load(p)?;
                    pair(&a, &j)?;
                    vec![mono(&j)?]
                }
                None => Vec::new(),
            };
            let bound = bound.unwrap_or_else(|| Rational::from(a.dim() + 2));
            Ok(report(crosscheck_thresholds_equal_jumps(&mono(&a)?, &bound, &samples)?))
        }
        Target::All if files => usage("`verify all` runs the built-in corpora and takes no input files"),
        _ => builtin(target, e_max, n_max, bound),
    }
}

pub const THEOREM_C_CASES: usize = 200;
pub const BRIANCON_SKODA_CASES: usize = 100;
pub const FINITENESS_CASES: usize = 100;
pub const MULTIPLICITY_CASES: usize = 100;
pub const JUMP_SAMPLES: usize = 20;

fn builtin(target: Target, e_max: u32, n_max: u32, bound: Option<Rational>) -> Res<Output> {
    let bound = bound.unwrap_or_else(|| Rational::from(4));
    let run_one = |t: Target| -> Res<suites::Summary> {
        Ok(match t {
            Target::ParameterLemma => suites::parameter_lemma(e_max)?,
            Target::TheoremC => suites::theorem_c(THEOREM_C_CASES)?,
            Target::BrianconSkoda => suites::briancon_skoda(BRIANCON_SKODA_CASES, n_max)?,
            Target::Finiteness => suites::finiteness(FINITENESS_CASES)?,
            Target::MultiplicityBound => suites::multiplicity_bound(MULTIPLICITY_CASES)?,
            Target::ThresholdsJumps => suites::thresholds_jumps(&bound, JUMP_SAMPLES)?,
            Target::All => unreachable!(),
        })
    };
    if target != Target::All {
        return Ok(summary(run_one(target)?));
    }
    let mut details = serde_json::Map::new();
    let mut ok = true;
    for t in [
        Target::ParameterLemma,
        Target::TheoremC,
        Target::BrianconSkoda,
        Target::Finiteness,
        Target::MultiplicityBound,
        Target::ThresholdsJumps,
    ] {
        let s = run_one(t)?;
        ok &= s.verdict.passed();
        details.insert(t.name().to_string(), s.value);
    }
    let verdict = Verdict::from_bool(ok);
    Ok(Output::Report(json!({ "verdict": verdict, "details": details }), verdict))
}
