//! Argument parsing and command execution for the `apery-zeta` binary.

use std::collections::BTreeSet;
use std::fmt;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use apery_zeta::exact::{log10_abs, to_decimal, Rational, ZetaOracle};
use apery_zeta::report::VerificationReport;
use apery_zeta::{auxiliary, gosper, series, zeta23, zeta5, Error};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BITS: u8 = 3;

pub const MAX_BITS_VAR: &str = "APERY_ZETA_MAX_BITS";

#[derive(Parser, Debug, Clone)]
#[command(name = "apery-zeta", version, about = "Apéry-like recursions for ζ(5), ζ(3) and ζ(2)")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Attach the published constants to each verification report.
    #[arg(long, global = true)]
    pub paper_annotate: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Approximate the constants to a number of certified digits.
    Compute(ComputeArgs),
    /// Approximations p_n/q_n to ζ(5) and their errors.
    Table(TableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Compare Gosper's matrix product against the recursion.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ComputeArgs {
    #[arg(long, value_enum, default_value_t = System::Zeta5)]
    pub system: System,
    /// Certified decimal digits after the point.
    #[arg(long, default_value_t = 30)]
    pub digits: u32,
    /// Use index n instead of choosing it from --digits.
    #[arg(long)]
    pub n: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct TableArgs {
    #[arg(long, default_value_t = 10)]
    pub n_max: u64,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Restrict to one system; both by default.
    #[arg(long, value_enum)]
    pub system: Option<System>,
    /// Upper index for sweeps; each suite has its own default.
    #[arg(long)]
    pub n_max: Option<u64>,
    /// Index for the rate suite.
    #[arg(long, default_value_t = 400)]
    pub n: u64,
    #[arg(long, conflicts_with = "selectors")]
    pub all: bool,
    #[arg(value_enum)]
    pub selectors: Vec<Selector>,
}

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    /// Number of Gosper factors.
    #[arg(long, default_value_t = 100)]
    pub factors: u64,
    /// Recursion index.
    #[arg(long, default_value_t = 20)]
    pub n: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    Zeta5,
    Zeta23,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Selector {
    Signs,
    Integrality,
    Oracle,
    Recursions,
    Roots,
    Rates,
}

impl Selector {
    pub const ALL: [Selector; 6] = [
        Selector::Signs,
        Selector::Integrality,
        Selector::Oracle,
        Selector::Recursions,
        Selector::Roots,
        Selector::Rates,
    ];
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Bits(Error),
    Compute(Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Bits(_) => EXIT_BITS,
            CliError::Compute(_) => EXIT_FAIL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Bits(e) | CliError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BitBudgetExceeded { .. } => CliError::Bits(e),
            other => CliError::Compute(other),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

/// Reads the bit cap from the environment.
pub fn max_bits_from_env() -> CliResult<Option<u64>> {
    match std::env::var(MAX_BITS_VAR) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("{MAX_BITS_VAR} must be a non-negative integer, got {v:?}"))),
    }
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let max_bits = max_bits_from_env()?;
    match &cli.command {
        Command::Compute(args) => compute(cli, args, max_bits),
        Command::Table(args) => table(cli, args, max_bits),
        Command::Verify(args) => verify(cli, args, max_bits),
        Command::Bench(args) => bench(cli, args),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

/// `1.2345678e-11` style rendering of a positive rational.
pub fn scientific(x: &Rational) -> String {
    match log10_abs(x) {
        None => "0".into(),
        Some(l) => {
            let e = l.floor();
            format!("{:.6}e{}", 10f64.powf(l - e), e as i64)
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ComputedValue {
    pub constant: String,
    pub decimal: String,
    pub error_upper: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ComputeOutput {
    pub system: String,
    pub n: u64,
    pub digits: u32,
    pub values: Vec<ComputedValue>,
}

/// Truncated decimal shared by every point of `[x − e, x + e]`, if any.
fn certified_digits(x: &Rational, e: &Rational, digits: u32) -> Option<String> {
    let lo = to_decimal(&(x - e), digits);
    (lo == to_decimal(&(x + e), digits)).then_some(lo)
}

fn compute(cli: &Cli, args: &ComputeArgs, max_bits: Option<u64>) -> CliResult<Output> {
    if args.digits == 0 {
        return Err(CliError::Usage("--digits must be at least 1".into()));
    }
    let mut oracle = ZetaOracle::new();
    // Digits gained per step: log₁₀|μ₃/μ₂| for each system.
    let per_step = match args.system {
        System::Zeta5 => 3.84,
        System::Zeta23 => 2.91,
    };
    let (start, stop) = match args.n {
        Some(n) => (n, n),
        None => {
            let guess = (args.digits as f64 / per_step).floor() as u64;
            (guess.saturating_sub(2), guess + 12)
        }
    };
    let seq_max = stop.max(2);
    let result = match args.system {
        System::Zeta5 => {
            let seqs = zeta5::sequences_with(&zeta5::Zeta5Coefficients::printed(), seq_max, max_bits)?;
            let mut found = None;
            for n in start..=stop {
                let a = zeta5::approximation(&seqs, n, &mut oracle)?;
                let e = a.error.hi().clone();
                let decimal = certified_digits(&a.fraction, &e, args.digits);
                if decimal.is_some() || n == stop {
                    let decimal = decimal.unwrap_or_else(|| to_decimal(&a.fraction, args.digits));
                    found = Some((n, vec![("zeta5", decimal, e)]));
                    break;
                }
            }
            found.unwrap()
        }
        System::Zeta23 => {
            let seqs =
                zeta23::sequences23_with(&zeta23::Zeta23Coefficients::printed(), seq_max, max_bits)?;
            let mut found = None;
            for n in start..=stop {
                let a = zeta23::approximation23(&seqs, n, &mut oracle)?;
                let (e3, e2) = (a.error3.hi().clone(), a.error2.hi().clone());
                let d3 = certified_digits(&a.zeta3, &e3, args.digits);
                let d2 = certified_digits(&a.zeta2, &e2, args.digits);
                if (d3.is_some() && d2.is_some()) || n == stop {
                    let d3 = d3.unwrap_or_else(|| to_decimal(&a.zeta3, args.digits));
                    let d2 = d2.unwrap_or_else(|| to_decimal(&a.zeta2, args.digits));
                    found = Some((n, vec![("zeta3", d3, e3), ("zeta2", d2, e2)]));
                    break;
                }
            }
            found.unwrap()
        }
    };
    let (n, values) = result;
    let out = ComputeOutput {
        system: format!("{:?}", args.system).to_lowercase(),
        n,
        digits: args.digits,
        values: values
            .into_iter()
            .map(|(c, d, e)| ComputedValue {
                constant: c.into(),
                decimal: d,
                error_upper: scientific(&e),
            })
            .collect(),
    };
    let stdout = match cli.format {
        Format::Json => json_line(&out),
        Format::Text => {
            let mut s = String::new();
            for v in &out.values {
                let name = match v.constant.as_str() {
                    "zeta5" => "ζ(5)",
                    "zeta3" => "ζ(3)",
                    _ => "ζ(2)",
                };
                s += &format!("{name} = {}  (n = {}, error ≤ {})\n", v.decimal, out.n, v.error_upper);
            }
            s
        }
    };
    Ok(Output { stdout, code: EXIT_OK })
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct TableLine {
    pub n: u64,
    pub fraction: String,
    pub error_upper: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub published_fraction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub published_error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
}

fn table(cli: &Cli, args: &TableArgs, max_bits: Option<u64>) -> CliResult<Output> {
    // Guard the bit budget before the (unbounded) table builder runs.
    zeta5::sequences_with(&zeta5::Zeta5Coefficients::printed(), args.n_max.max(2), max_bits)?;
    let mut oracle = ZetaOracle::new();
    let rows = zeta5::table(args.n_max, &mut oracle)?;
    let mut all_match = true;
    let lines: Vec<TableLine> = rows
        .iter()
        .map(|row| {
            let a = &row.approximation;
            let published = zeta5::published_row(a.n);
            if row.matches_published == Some(false) {
                all_match = false;
            }
            TableLine {
                n: a.n,
                fraction: a.fraction.to_string(),
                error_upper: scientific(a.error.hi()),
                published_fraction: published.and_then(|p| p.fraction.map(String::from)),
                published_error: published.map(|p| p.error.to_string()),
                status: row
                    .matches_published
                    .map(|ok| if ok { "PASS" } else { "FAIL" }.to_string()),
            }
        })
        .collect();
    let stdout = match cli.format {
        Format::Json => json_line(&lines),
        Format::Text => {
            let mut s = String::from("n\tp/q\t|ζ(5) − p/q|\tpublished\n");
            for l in &lines {
                s += &format!("{}\t{}\t≤ {}", l.n, l.fraction, l.error_upper);
                if let (Some(e), Some(st)) = (&l.published_error, &l.status) {
                    s += &format!("\t{e}\t{st}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Output {
        stdout,
        code: if all_match { EXIT_OK } else { EXIT_FAIL },
    })
}

/// Resolved selection for `verify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyPlan {
    pub systems: BTreeSet<System>,
    pub selectors: BTreeSet<Selector>,
    pub n_max: Option<u64>,
    pub rate_n: u64,
}

impl VerifyPlan {
    pub fn from_args(args: &VerifyArgs) -> CliResult<Self> {
        let selectors: BTreeSet<Selector> = if args.all {
            Selector::ALL.into_iter().collect()
        } else {
            args.selectors.iter().copied().collect()
        };
        if selectors.is_empty() {
            return Err(CliError::Usage("name at least one suite or pass --all".into()));
        }
        if args.n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        if args.n_max == Some(0) {
            return Err(CliError::Usage("--n-max must be at least 1".into()));
        }
        let systems = match args.system {
            Some(s) => [s].into_iter().collect(),
            None => [System::Zeta5, System::Zeta23].into_iter().collect(),
        };
        Ok(Self {
            systems,
            selectors,
            n_max: args.n_max,
            rate_n: args.n,
        })
    }

    fn sweep(&self, default: u64) -> u64 {
        self.n_max.unwrap_or(default)
    }

    /// Highest recursion index any selected suite needs.
    fn sequence_length(&self) -> u64 {
        let mut top = 2;
        for s in &self.selectors {
            top = top.max(match s {
                Selector::Signs => self.sweep(300),
                Selector::Integrality => self.sweep(300),
                Selector::Oracle => self.sweep(25),
                Selector::Rates => self.rate_n.max(200),
                Selector::Recursions | Selector::Roots => 2,
            });
        }
        top
    }
}

/// Published constants shown with `--paper-annotate`.
pub fn expected_for(check: &str) -> Option<&'static str> {
    Some(match check {
        "zeta5.roots" => "μ₁=−0.02001512…, μ₂=0.33753726…, μ₃=−2368.31752213…",
        "zeta5.rates" => "log|μ₂|=−1.08607936…, log|μ₃|",
        "zeta5.linear_form_signs" => "ℓ_n>0, ℓ̃_n<0",
        "zeta5.alternating_signs" => "sign q_n = sign p_n = sign p̃_n = (−1)^(n−1)",
        "zeta5.integrality" => "q_n∈ℤ, 2D_n⁵p_n∈ℤ, 2D_n³p̃_n∈ℤ",
        "zeta5.oracle" => "q_n=u_nw̃_n−ũ_nw_n, p_n=w̃_nv_n−w_nṽ_n, p̃_n=u_nṽ_n−ũ_nv_n",
        "aux.form_signs" => "r_n>0, u_n>0, w_n>0, v_n>0; r̃_n<0, ũ_n>0, w̃_n>0, ṽ_n>0",
        "aux.inclusions" => "2u_n∈ℤ, 2D_n²w_n∈ℤ, 2D_n⁵v_n∈ℤ (and tildes)",
        "aux.lambda_products" => "μ₁=λ₁λ₂, μ₂=λ₁λ₃, μ₃=λ₂λ₃",
        "aux.recursion8" => "r_1=9ζ(5)+33ζ(3)−49, r_2=469ζ(5)+(6125/4)ζ(3)−74463/32",
        "aux.recursion9" => "r̃_1=2ζ(5)+12ζ(3)−33/2, r̃_2=552ζ(5)+1764ζ(3)−43085/16",
        "series.linear_form_structure" => "ℚ-linear forms in 1, ζ(3), ζ(5)",
        "zeta23.roots" => "μ₃=219.85478039…, log|μ₂|=−1.31018925…",
        "zeta23.rates" => "log|μ₂|=−1.31018925…, log|μ₃|",
        "zeta23.positivity" => "q′_n, p′_n, p̃′_n > 0",
        "zeta23.integrality" => "q′_n∈ℤ, D_n³p′_n∈ℤ, D_n²p̃′_n∈ℤ",
        _ => return None,
    })
}

type Job<'a> = Box<dyn FnOnce() -> apery_zeta::Result<VerificationReport> + Send + 'a>;

fn verify(cli: &Cli, args: &VerifyArgs, max_bits: Option<u64>) -> CliResult<Output> {
    let plan = VerifyPlan::from_args(args)?;
    let reports = run_plan(&plan, max_bits)?;
    let mut reports: Vec<VerificationReport> = reports
        .into_iter()
        .map(|r| match (cli.paper_annotate, expected_for(&r.check)) {
            (true, Some(e)) => r.with_expected(e),
            _ => r,
        })
        .collect();
    reports.sort_by(|a, b| {
        let key = |r: &VerificationReport| (r.check.clone(), r.counterexample.as_ref().map(|c| c.n));
        key(a).cmp(&key(b))
    });
    let all_pass = reports.iter().all(|r| r.passed());
    let stdout = match cli.format {
        Format::Json => json_line(&reports),
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    Ok(Output {
        stdout,
        code: if all_pass { EXIT_OK } else { EXIT_FAIL },
    })
}

pub fn run_plan(plan: &VerifyPlan, max_bits: Option<u64>) -> CliResult<Vec<VerificationReport>> {
    let len = plan.sequence_length();
    let s5 = if plan.systems.contains(&System::Zeta5) {
        Some(zeta5::sequences_with(&zeta5::Zeta5Coefficients::printed(), len, max_bits)?)
    } else {
        None
    };
    let s23 = if plan.systems.contains(&System::Zeta23) {
        Some(zeta23::sequences23_with(&zeta23::Zeta23Coefficients::printed(), len, max_bits)?)
    } else {
        None
    };
    let mut jobs: Vec<Job> = Vec::new();
    let rate_n = plan.rate_n;
    let timed = |f: Job<'_>| -> apery_zeta::Result<VerificationReport> { VerificationReport::timed(f) };
    if let Some(s) = &s5 {
        for sel in &plan.selectors {
            match sel {
                Selector::Signs => {
                    let n = plan.sweep(200);
                    jobs.push(Box::new(move || zeta5::sign_law_check(s, n, &mut ZetaOracle::new())));
                    let n = plan.sweep(300);
                    jobs.push(Box::new(move || Ok(zeta5::alternation_check(s, n))));
                    let n = plan.sweep(25);
                    jobs.push(Box::new(move || auxiliary::form_signs_check(n, &mut ZetaOracle::new())));
                }
                Selector::Integrality => {
                    let n = plan.sweep(300);
                    jobs.push(Box::new(move || Ok(zeta5::integrality_check(s, n))));
                    let n = plan.sweep(25);
                    jobs.push(Box::new(move || auxiliary::inclusions_check(n)));
                }
                Selector::Oracle => {
                    let n = plan.sweep(25);
                    jobs.push(Box::new(move || zeta5::oracle_check(s, n)));
                    jobs.push(Box::new(move || series::linear_form_structure_check(n)));
                }
                Selector::Recursions => {
                    let n = plan.sweep(25);
                    jobs.push(Box::new(move || auxiliary::verify_recursion_8(n, &mut ZetaOracle::new())));
                    jobs.push(Box::new(move || auxiliary::verify_recursion_9(n, &mut ZetaOracle::new())));
                }
                Selector::Roots => {
                    jobs.push(Box::new(zeta5::roots_check));
                    jobs.push(Box::new(auxiliary::lambda_check));
                }
                Selector::Rates => {
                    jobs.push(Box::new(move || {
                        let r = zeta5::rate_report(s, rate_n, &mut ZetaOracle::new())?;
                        Ok(zeta5::rate_check("zeta5.rates", &r, RATE_TOLERANCE))
                    }));
                }
            }
        }
    }
    if let Some(s) = &s23 {
        for sel in &plan.selectors {
            match sel {
                Selector::Signs => {
                    let n = plan.sweep(300);
                    jobs.push(Box::new(move || Ok(zeta23::positivity_check23(s, n))));
                }
                Selector::Integrality => {
                    let n = plan.sweep(300);
                    jobs.push(Box::new(move || Ok(zeta23::integrality_check23(s, n))));
                }
                Selector::Oracle => {
                    let n = plan.sweep(15);
                    jobs.push(Box::new(move || zeta23::oracle_check23(s, n)));
                }
                Selector::Recursions => {}
                Selector::Roots => jobs.push(Box::new(zeta23::roots_check23)),
                Selector::Rates => {
                    jobs.push(Box::new(move || {
                        let r = zeta23::rate_report23(s, rate_n, &mut ZetaOracle::new())?;
                        Ok(zeta5::rate_check("zeta23.rates", &r, RATE_TOLERANCE))
                    }));
                    jobs.push(Box::new(move || {
                        let band = (Rational::new(1.into(), 10_000.into()), Rational::new(1.into(), 100.into()));
                        zeta23::convergence_ratio_check(s, 50, 200, 5, band, &mut ZetaOracle::new())
                    }));
                }
            }
        }
    }
    let results: Vec<apery_zeta::Result<VerificationReport>> = thread::scope(|scope| {
        let handles: Vec<_> = jobs.into_iter().map(|job| scope.spawn(move || timed(job))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread panicked")).collect()
    });
    results.into_iter().map(|r| r.map_err(CliError::from)).collect()
}

/// Allowed gap between a finite-n rate and its limit.
pub const RATE_TOLERANCE: f64 = 0.02;

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct BenchSide {
    pub steps: u64,
    pub digits_zeta5: i64,
    pub digits_zeta3: i64,
    pub error_zeta5: String,
    pub error_zeta3: String,
    pub max_bits: u64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct BenchOutput {
    pub gosper: BenchSide,
    pub recursion: BenchSide,
}

fn bench(cli: &Cli, args: &BenchArgs) -> CliResult<Output> {
    let mut oracle = ZetaOracle::new();
    let c = gosper::compare_with_recursion(args.factors, args.n, &mut oracle)?;
    let (g5, g3) = c.gosper_digits();
    let (r5, r3) = c.recursion_digits();
    let out = BenchOutput {
        gosper: BenchSide {
            steps: c.n_factors,
            digits_zeta5: g5,
            digits_zeta3: g3,
            error_zeta5: scientific(&c.gosper_error5),
            error_zeta3: scientific(&c.gosper_error3),
            max_bits: c.gosper_bits,
        },
        recursion: BenchSide {
            steps: c.recursion_n,
            digits_zeta5: r5,
            digits_zeta3: r3,
            error_zeta5: scientific(&c.recursion_error5),
            error_zeta3: scientific(&c.recursion_error3),
            max_bits: c.recursion_bits,
        },
    };
    let stdout = match cli.format {
        Format::Json => json_line(&out),
        Format::Text => {
            let mut s = String::from("method\tsteps\tζ(5) digits\tζ(3) digits\tmax bits\n");
            for (name, side) in [("gosper", &out.gosper), ("recursion", &out.recursion)] {
                s += &format!(
                    "{name}\t{}\t{} ({})\t{} ({})\t{}\n",
                    side.steps,
                    side.digits_zeta5,
                    side.error_zeta5,
                    side.digits_zeta3,
                    side.error_zeta3,
                    side.max_bits
                );
            }
            s
        }
    };
    Ok(Output { stdout, code: EXIT_OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("apery-zeta").chain(args.iter().copied()))
    }

    #[test]
    fn unknown_selector_is_a_usage_error() {
        let err = parse(&["verify", "bogus"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn all_conflicts_with_selectors() {
        assert!(parse(&["verify", "--all", "roots"]).is_err());
    }

    #[test]
    fn plan_from_all() {
        let cli = parse(&["verify", "--all", "--n-max", "25", "--system", "zeta5"]).unwrap();
        let Command::Verify(args) = cli.command else { panic!() };
        let plan = VerifyPlan::from_args(&args).unwrap();
        assert_eq!(plan.selectors.len(), 6);
        assert_eq!(plan.systems.len(), 1);
        assert_eq!(plan.sequence_length(), 400);
    }

    #[test]
    fn empty_selection_rejected() {
        let cli = parse(&["verify"]).unwrap();
        let Command::Verify(args) = cli.command else { panic!() };
        assert_eq!(VerifyPlan::from_args(&args).unwrap_err().code(), EXIT_USAGE);
    }

    #[test]
    fn scientific_rendering() {
        assert_eq!(scientific(&Rational::new(28.into(), 1_000_000_000_000i64.into())), "2.800000e-11");
    }

    #[test]
    fn certified_digit_agreement() {
        let x = Rational::new(1036927755.into(), 1_000_000_000.into());
        let tiny = Rational::new(1.into(), 1_000_000_000_000i64.into());
        assert_eq!(certified_digits(&x, &tiny, 6).as_deref(), Some("1.036927"));
        let wide = Rational::new(1.into(), 100.into());
        assert_eq!(certified_digits(&x, &wide, 6), None);
    }
}
