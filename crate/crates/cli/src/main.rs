//! `superhowe`: build highest weight vectors and run the verification suites.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 hook condition
//! violated, 4 internal division or auxiliary-variable failure, 5 term budget
//! exceeded.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use superhowe::hwv::{Budget, S2Model, TensorModel, MAX_TERMS_ENV};
use superhowe::operators::is_highest;
use superhowe::symfunc::{verify_classical_quartet, verify_s2_characters, verify_super_cauchy, verify_super_dual_cauchy};
use superhowe::verify::{
    run_cross_checks, run_default_suite, run_s2_cell, run_tensor_cell, verify_determinant_identities,
    verify_lambda_s2_decomposition, verify_s2_decomposition, verify_s2_semigroup, verify_skew_duality,
    verify_tensor_duality, CaseGrid,
};
use superhowe::{Error, Partition, Status, VerificationReport};

use output::{HwvOutput, Output, ReportsOutput};

#[derive(Parser, Debug)]
#[command(name = "superhowe", version, about = "Highest weight vectors for super Howe dualities")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Abort any construction whose intermediate results exceed this many terms.
    #[arg(long, global = true, env = MAX_TERMS_ENV)]
    max_terms: Option<usize>,

    /// Record wall time per report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one highest weight vector and check it.
    Hwv(HwvArgs),
    /// Run a named theorem check or a whole suite.
    Verify(VerifyArgs),
    /// Check a generating-function identity up to a degree.
    Identities(IdentitiesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    Tensor,
    S2,
}

#[derive(Args, Debug, Clone, Copy)]
struct Dims {
    #[arg(short = 'p', default_value_t = 0)]
    p: usize,
    #[arg(short = 'q', default_value_t = 0)]
    q: usize,
    #[arg(short = 'm', default_value_t = 0)]
    m: usize,
    #[arg(short = 'n', default_value_t = 0)]
    n: usize,
}

#[derive(Args, Debug)]
struct HwvArgs {
    #[arg(long, value_enum)]
    model: Model,
    #[command(flatten)]
    dims: Dims,
    /// Comma-separated parts, e.g. `2,1,1`.
    #[arg(long)]
    lambda: Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    TensorDuality,
    SkewDuality,
    S2Decomposition,
    LambdaS2Decomposition,
    HwvTensor,
    HwvS2,
    CrossConsistency,
    DeterminantIdentities,
    S2Semigroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Default,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("what").required(true).args(["theorem", "suite"]))]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Option<Theorem>,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    #[command(flatten)]
    dims: Dims,
    /// Degree (or partition size) bound.
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Identity {
    SuperCauchy,
    SuperDualCauchy,
    S2,
    ClassicalQuartet,
}

#[derive(Args, Debug)]
struct IdentitiesArgs {
    #[arg(long, value_enum)]
    which: Identity,
    #[command(flatten)]
    dims: Dims,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::HookViolation(_) => 3,
        Error::NotDivisible | Error::AuxiliaryResidue(_) | Error::DivisionByZero | Error::OddDivisor => 4,
        Error::OverBudget { .. } => 5,
        Error::Bounds(_) | Error::Invalid(_) | Error::Parse(_) | Error::NotContained { .. } => 2,
        _ => 4,
    }
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::OverBudget => 5,
    }
}

fn run_hwv(args: &HwvArgs, budget: Budget) -> superhowe::Result<HwvOutput> {
    let Dims { p, q, m, n } = args.dims;
    let lambda = &args.lambda;
    match args.model {
        Model::Tensor => {
            let model = TensorModel::new(p, q, m, n).with_budget(budget);
            let expected = model.expected_weight(lambda)?;
            let v = model.hwv_general(lambda)?;
            let weight = model.joint_weight(&v)?;
            let highest = is_highest(&v, &model.realizations())?;
            Ok(HwvOutput::new("tensor", &[("p", p), ("q", q), ("m", m), ("n", n)], lambda, &v, weight, expected, highest))
        }
        Model::S2 => {
            let model = S2Model::new(m, n).with_budget(budget);
            let expected = model.expected_weight(lambda)?;
            let v = model.hwv_s2(lambda)?;
            let weight = model.weight(&v)?;
            let highest = is_highest(&v, &[model.glmn()])?;
            Ok(HwvOutput::new("s2", &[("m", m), ("n", n)], lambda, &v, weight, expected, highest))
        }
    }
}

fn timed<T>(timing: bool, f: impl FnOnce() -> superhowe::Result<T>) -> superhowe::Result<(T, Option<u64>)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, timing.then(|| start.elapsed().as_millis() as u64)))
}

fn run_verify(args: &VerifyArgs, budget: Budget, timing: bool) -> superhowe::Result<ReportsOutput> {
    let Dims { p, q, m, n } = args.dims;
    let k = args.max_degree;
    if args.suite == Some(Suite::Default) {
        let start = Instant::now();
        let mut reports = run_default_suite(&CaseGrid::default_grid(), k, budget)?;
        if timing {
            let ms = start.elapsed().as_millis() as u64;
            reports.iter_mut().for_each(|r| r.wall_time_ms = Some(ms));
        }
        return Ok(ReportsOutput::new("verify", reports));
    }
    let theorem = args.theorem.expect("clap requires a theorem or a suite");
    let mut relation = None;
    let (mut report, ms): (VerificationReport, _) = timed(timing, || {
        Ok(match theorem {
            Theorem::TensorDuality => verify_tensor_duality(p, q, m, n, k),
            Theorem::SkewDuality => verify_skew_duality(p, q, m, n, k),
            Theorem::S2Decomposition => verify_s2_decomposition(m, n, k),
            Theorem::LambdaS2Decomposition => verify_lambda_s2_decomposition(m, n, k),
            Theorem::HwvTensor => run_tensor_cell(p, q, m, n, k, budget)?,
            Theorem::HwvS2 => run_s2_cell(m, n, k, budget)?,
            Theorem::CrossConsistency => run_cross_checks(p, q, m, n, k, budget)?,
            Theorem::DeterminantIdentities => verify_determinant_identities(k)?,
            Theorem::S2Semigroup => {
                let (r, rel) = verify_s2_semigroup(m, n, k)?;
                relation = rel;
                r
            }
        })
    })?;
    report.wall_time_ms = ms;
    let mut out = ReportsOutput::new("verify", vec![report]);
    out.relation = relation;
    Ok(out)
}

fn run_identities(args: &IdentitiesArgs, timing: bool) -> superhowe::Result<ReportsOutput> {
    let Dims { p, q, m, n } = args.dims;
    let k = args.max_degree;
    let (mut report, ms) = timed(timing, || {
        Ok(match args.which {
            Identity::SuperCauchy => verify_super_cauchy(p, q, m, n, k),
            Identity::SuperDualCauchy => verify_super_dual_cauchy(p, q, m, n, k),
            Identity::S2 => verify_s2_characters(m, n, k),
            Identity::ClassicalQuartet => verify_classical_quartet(m, k),
        })
    })?;
    report.wall_time_ms = ms;
    Ok(ReportsOutput::new("identities", vec![report]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget { max_terms: cli.max_terms };
    let result: superhowe::Result<Box<dyn Output>> = match &cli.command {
        Command::Hwv(a) => run_hwv(a, budget).map(|o| Box::new(o) as Box<dyn Output>),
        Command::Verify(a) => run_verify(a, budget, cli.timing).map(|o| Box::new(o) as Box<dyn Output>),
        Command::Identities(a) => run_identities(a, cli.timing).map(|o| Box::new(o) as Box<dyn Output>),
    };
    match result {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => out.to_json(),
                Format::Text => out.to_text(),
            };
            if let Err(e) = output::emit(&text, cli.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(status_code(out.status()))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
