//! Command-line front end for the counting engine.
//!
//! Three subcommands: `eval` answers one counting question, symbolically
//! and/or at a chosen prime power; `table` lists every valid profile of a
//! family in a fixed ambient dimension; `verify` runs the symbolic identity
//! suite and the brute-force oracle sweeps.
//!
//! Exit codes: 0 success, 1 a verification run found mismatches, 2 the
//! requested profile is invalid, 3 the command line itself is malformed.

use std::process::ExitCode;

use anzahl::counting::{rho, validate_for, Family, FormType, ProfileParams, ValidityVerdict};
use anzahl::oracle::PrimeFieldCtx;
use anzahl::verify::{
    formula_poly, identity_suite, run_sweep, valid_profiles, CheckStatus, SweepConfig, SweepReport,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod output;
use output::{Format, TableRow};

#[derive(Parser)]
#[command(name = "anzahl", version, about = "Exact subspace counts relative to a quadratic form")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one counting quantity
    Eval(EvalArgs),
    /// List every valid profile of a family at one ambient dimension
    Table(TableArgs),
    /// Run verification suites and report mismatches
    Verify(VerifyArgs),
}

/// A failed run: exit code plus a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn malformed(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }

    fn mismatches(count: usize) -> Failure {
        Failure { code: 1, message: format!("verification failed: {count} mismatches") }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version land here as well; only genuine parse
            // errors count as malformed input.
            let fatal = err.use_stderr();
            let _ = err.print();
            return if fatal { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if !failure.message.is_empty() {
                eprintln!("{}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliFamily {
    Alpha,
    Beta,
    #[value(name = "beta_nu")]
    BetaNu,
    Gamma,
    Rho,
}

impl CliFamily {
    fn lib(self) -> Family {
        match self {
            CliFamily::Alpha => Family::Alpha,
            CliFamily::Beta | CliFamily::BetaNu => Family::Beta,
            CliFamily::Gamma => Family::Gamma,
            CliFamily::Rho => Family::Rho,
        }
    }

    fn name(self) -> &'static str {
        match self {
            CliFamily::Alpha => "alpha",
            CliFamily::Beta => "beta",
            CliFamily::BetaNu => "beta_nu",
            CliFamily::Gamma => "gamma",
            CliFamily::Rho => "rho",
        }
    }
}

/// Every profile flag, all optional at parse time; which ones a family
/// needs is checked in [`build_profile`].
#[derive(Args, Clone, Default)]
struct ProfileFlags {
    /// Radical dimension of the subspace π
    #[arg(long, allow_negative_numbers = true)]
    i: Option<i64>,
    /// Dimension of π
    #[arg(long, allow_negative_numbers = true)]
    j: Option<i64>,
    /// Type of π: -1, 0, or 1
    #[arg(long, allow_negative_numbers = true)]
    delta: Option<i64>,
    /// Perpendicular type of π, defined when n(j-i) is odd
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<i64>,
    /// Ambient dimension
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    /// Ambient type: -1, 0, or 1
    #[arg(long, allow_negative_numbers = true)]
    eps: Option<i64>,
    /// Dimension of the second space σ
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    /// Type of σ
    #[arg(long, allow_negative_numbers = true)]
    zeta: Option<i64>,
    /// Type of π^⊥ ∩ σ in the refined extension count
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<i64>,
    /// Perpendicular type of σ
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<i64>,
    /// Type of the span of π and σ
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<i64>,
}

const FLAG_NAMES: [&str; 11] =
    ["i", "j", "delta", "lambda", "n", "eps", "k", "zeta", "nu", "mu", "eta"];

impl ProfileFlags {
    fn get(&self, name: &str) -> Option<i64> {
        match name {
            "i" => self.i,
            "j" => self.j,
            "delta" => self.delta,
            "lambda" => self.lambda,
            "n" => self.n,
            "eps" => self.eps,
            "k" => self.k,
            "zeta" => self.zeta,
            "nu" => self.nu,
            "mu" => self.mu,
            "eta" => self.eta,
            _ => unreachable!("unknown flag {name}"),
        }
    }
}

/// Required and optional profile flags per family; anything else is rejected.
fn flag_sets(family: CliFamily) -> (&'static [&'static str], &'static [&'static str]) {
    match family {
        CliFamily::Alpha => (&["i", "j", "delta", "n", "eps"], &["lambda"]),
        CliFamily::Beta => (&["i", "j", "delta", "n", "eps", "k", "zeta"], &["lambda"]),
        CliFamily::BetaNu => (&["i", "j", "delta", "n", "eps", "k", "zeta", "nu"], &["lambda"]),
        CliFamily::Gamma => (&["i", "j", "delta", "n", "eps", "k", "zeta", "eta"], &["lambda", "mu"]),
        CliFamily::Rho => (&["j", "delta", "n", "eps", "k", "zeta", "eta"], &[]),
    }
}

fn as_form(name: &str, v: i64) -> Result<FormType, Failure> {
    FormType::from_sign(v)
        .ok_or_else(|| Failure::malformed(format!("--{name} must be -1, 0, or 1 (got {v})")))
}

fn build_profile(family: CliFamily, flags: &ProfileFlags) -> Result<ProfileParams, Failure> {
    let (required, optional) = flag_sets(family);
    for name in FLAG_NAMES {
        let given = flags.get(name).is_some();
        if given && !required.contains(&name) && !optional.contains(&name) {
            return Err(Failure::malformed(format!(
                "--{name} does not apply to {}",
                family.name()
            )));
        }
        if !given && required.contains(&name) {
            return Err(Failure::malformed(format!("{} requires --{name}", family.name())));
        }
    }
    let form = |name: &str| as_form(name, flags.get(name).unwrap());
    let opt_form = |name: &str| flags.get(name).map(|v| as_form(name, v)).transpose();
    let p = match family {
        CliFamily::Alpha => ProfileParams::alpha(
            flags.i.unwrap(),
            flags.j.unwrap(),
            form("delta")?,
            opt_form("lambda")?,
            flags.n.unwrap(),
            form("eps")?,
        ),
        CliFamily::Beta | CliFamily::BetaNu => ProfileParams::beta(
            flags.i.unwrap(),
            flags.j.unwrap(),
            form("delta")?,
            opt_form("lambda")?,
            flags.n.unwrap(),
            form("eps")?,
            flags.k.unwrap(),
            form("zeta")?,
            opt_form("nu")?,
        ),
        CliFamily::Gamma => ProfileParams::gamma(
            flags.i.unwrap(),
            flags.j.unwrap(),
            form("delta")?,
            opt_form("lambda")?,
            flags.n.unwrap(),
            form("eps")?,
            flags.k.unwrap(),
            form("zeta")?,
            opt_form("mu")?,
            form("eta")?,
        ),
        CliFamily::Rho => ProfileParams::rho(
            flags.j.unwrap(),
            form("delta")?,
            flags.k.unwrap(),
            form("zeta")?,
            flags.n.unwrap(),
            form("eps")?,
            form("eta")?,
        ),
    };
    match validate_for(family.lib(), &p) {
        ValidityVerdict::Valid => Ok(p),
        ValidityVerdict::Invalid(reason) => Err(Failure::invalid(reason.to_string())),
    }
}

/// `q` must be an odd prime power, at least 3.
fn validate_q(q: i64) -> Result<(), Failure> {
    let mut rest = q;
    if q >= 3 && q % 2 == 1 {
        let mut p = 3;
        while p * p <= rest && rest % p != 0 {
            p += 2;
        }
        let p = if rest % p == 0 { p } else { rest };
        while rest % p == 0 {
            rest /= p;
        }
    }
    if q < 3 || q % 2 == 0 || rest != 1 {
        return Err(Failure::malformed(format!("q must be an odd prime power >= 3, got {q}")));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Symbolic,
    Numeric,
    Both,
}

#[derive(Args)]
struct EvalArgs {
    /// Counting family
    #[arg(value_enum)]
    family: CliFamily,
    #[command(flatten)]
    profile: ProfileFlags,
    /// Evaluation point, an odd prime power >= 3
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,
    /// What to print
    #[arg(long, value_enum, default_value_t = OutputKind::Both)]
    output: OutputKind,
}

/// Symbolic string and, when `q` was given, the exact value there.
fn evaluate(family: CliFamily, p: &ProfileParams, q: Option<i64>) -> (String, Option<String>) {
    match family {
        CliFamily::Rho => {
            let ratio =
                rho(p.j, p.delta, p.k.unwrap(), p.zeta.unwrap(), p.n, p.eps, p.eta.unwrap());
            let value = q.map(|q| ratio.value_at(q).to_string());
            (ratio.to_string(), value)
        }
        _ => {
            let poly = formula_poly(family.lib(), p);
            let value = q.map(|q| poly.eval_at_int(q).expect("q >= 3").to_string());
            (poly.to_string(), value)
        }
    }
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    if let Some(q) = args.q {
        validate_q(q)?;
    }
    let p = build_profile(args.family, &args.profile)?;
    let (symbolic, numeric) = evaluate(args.family, &p, args.q);
    match (args.output, numeric) {
        (OutputKind::Symbolic, _) => println!("{symbolic}"),
        (OutputKind::Numeric, Some(value)) => println!("{value}"),
        (OutputKind::Numeric, None) => {
            return Err(Failure::malformed("--output numeric requires --q"));
        }
        (OutputKind::Both, Some(value)) => println!("{symbolic} = {value}"),
        (OutputKind::Both, None) => println!("{symbolic}"),
    }
    Ok(())
}

#[derive(Args)]
struct TableArgs {
    /// Counting family
    #[arg(value_enum)]
    family: CliFamily,
    /// Ambient dimension
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    /// Ambient type; when absent, every type of the right parity
    #[arg(long, allow_negative_numbers = true)]
    eps: Option<i64>,
    /// Evaluation point for the numeric column
    #[arg(long, allow_negative_numbers = true)]
    q: Option<i64>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Omit the timestamp from JSON metadata
    #[arg(long)]
    no_timestamp: bool,
}

fn ambient_types(n: i64) -> &'static [FormType] {
    if n % 2 == 0 {
        &[FormType::Hyperbolic, FormType::Elliptic]
    } else {
        &[FormType::Parabolic]
    }
}

/// Which valid profiles belong in a family's table: the λ/ν/μ refinements
/// are families (or columns) of their own.
fn family_admits(family: CliFamily, p: &ProfileParams) -> bool {
    match family {
        CliFamily::Alpha => p.lambda.is_none(),
        CliFamily::Beta => p.nu.is_none(),
        CliFamily::BetaNu => p.nu.is_some(),
        CliFamily::Gamma => p.mu.is_none(),
        CliFamily::Rho => true,
    }
}

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    if let Some(q) = args.q {
        validate_q(q)?;
    }
    if args.n < 0 {
        return Err(Failure::malformed(format!("--n must be non-negative, got {}", args.n)));
    }
    let eps_list: Vec<FormType> = match args.eps {
        Some(v) => vec![as_form("eps", v)?],
        None => ambient_types(args.n).to_vec(),
    };
    let mut rows = Vec::new();
    for &eps in &eps_list {
        for p in valid_profiles(args.family.lib(), args.n, eps) {
            if p.j == 0 || !family_admits(args.family, &p) {
                continue;
            }
            let (symbolic, numeric) = evaluate(args.family, &p, args.q);
            rows.push(TableRow { family: args.family.name(), q: args.q, profile: p, symbolic, numeric });
        }
    }
    match args.format {
        Format::Csv => {
            output::write_table_csv(&rows).map_err(|e| Failure::malformed(e.to_string()))?;
        }
        Format::Json => {
            let meta =
                output::table_meta(args.family.name(), args.n, args.eps, args.q, !args.no_timestamp);
            let reports = rows.iter().map(output::table_row_json).collect();
            println!("{}", output::json_doc(meta, reports));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Identities,
    Oracle,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(value_enum)]
    suite: Suite,
    /// Largest ambient dimension
    #[arg(long, default_value_t = 4)]
    n_max: i64,
    /// Odd primes for the oracle sweeps, comma separated
    #[arg(long, value_delimiter = ',', default_value = "3")]
    primes: Vec<u32>,
    /// Worker threads for the sweeps
    #[arg(long)]
    jobs: Option<usize>,
    /// Cap the subspace dimension j in oracle sweeps
    #[arg(long)]
    max_j: Option<i64>,
    /// Cap the second dimension k in oracle sweeps
    #[arg(long)]
    max_k: Option<i64>,
    /// Base-point representatives per class in oracle sweeps
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// Emit the full report list instead of a summary
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Omit the timestamp from JSON metadata
    #[arg(long)]
    no_timestamp: bool,
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    for &p in &args.primes {
        PrimeFieldCtx::new(p).map_err(|e| Failure::malformed(e.to_string()))?;
    }
    if args.n_max < 1 {
        return Err(Failure::malformed(format!("--n-max must be at least 1, got {}", args.n_max)));
    }
    if let Some(jobs) = args.jobs {
        // Ignore the error if a global pool already exists; the ordering of
        // every report is independent of the worker count anyway.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }

    let identities = if matches!(args.suite, Suite::Identities | Suite::All) {
        identity_suite(args.n_max)
    } else {
        Vec::new()
    };
    let mut sweeps: Vec<(Family, SweepReport)> = Vec::new();
    if matches!(args.suite, Suite::Oracle | Suite::All) {
        for family in [Family::Alpha, Family::Beta, Family::Gamma, Family::Rho] {
            let mut cfg = SweepConfig::new(family, args.n_max, &args.primes);
            cfg.max_j = args.max_j;
            cfg.max_k = args.max_k;
            cfg.representatives = args.reps;
            let reports = run_sweep(&cfg).map_err(|e| Failure::malformed(e.to_string()))?;
            sweeps.extend(reports.into_iter().map(|r| (family, r)));
        }
    }

    let mismatches = identities
        .iter()
        .map(|r| &r.status)
        .chain(sweeps.iter().map(|(_, r)| &r.status))
        .filter(|s| matches!(s, CheckStatus::Mismatch))
        .count();

    match args.format {
        None => output::print_verify_summary(&identities, &sweeps, args.n_max),
        Some(Format::Csv) => {
            output::write_verify_csv(&identities, &sweeps)
                .map_err(|e| Failure::malformed(e.to_string()))?;
        }
        Some(Format::Json) => {
            let meta =
                output::verify_meta(args.suite.name(), args.n_max, &args.primes, !args.no_timestamp);
            let reports = output::verify_reports_json(&identities, &sweeps);
            println!("{}", output::json_doc(meta, reports));
        }
    }
    if mismatches > 0 {
        return Err(Failure::mismatches(mismatches));
    }
    Ok(())
}
