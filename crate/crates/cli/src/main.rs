//! `partrec`: partition-function tables, identity verification and
//! benchmarks from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 guard violation.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use partrec::selftest::Faults;
use partrec::{Error, Method, Oracle, Params};

use commands::{ComputeArgs, Format, Status};

#[derive(Parser)]
#[command(name = "partrec", version, about = "Euler-type recurrences for partition functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recurrence,
    Series,
    Dp,
    Enum,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Series => Method::Series,
            MethodArg::Dp => Method::Dp,
            MethodArg::Enum => Method::Enum,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Series,
    Dp,
    Enum,
}

impl From<OracleArg> for Oracle {
    fn from(o: OracleArg) -> Oracle {
        match o {
            OracleArg::Series => Oracle::Series,
            OracleArg::Dp => Oracle::Dp,
            OracleArg::Enum => Oracle::Enum,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the table F(0..=N) for a family.
    Compute {
        /// P, Pd, Po, QQ, OverP, OverPd, Bl (ell=…) or Pcm (m=…,c=…)
        family: String,
        /// Family parameters, e.g. `m=5,c=2`
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: MethodArg,
        /// Catalog id of the identity used by the recurrence method
        #[arg(long)]
        via: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Check a catalog identity (or `all`) against an oracle.
    Verify {
        target: String,
        #[arg(long, default_value_t = 200)]
        max: usize,
        #[arg(long, value_enum, default_value = "series")]
        oracle: OracleArg,
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Check the product and theta series identities to order N.
    Selftest {
        #[arg(long, default_value_t = 2000)]
        max: usize,
        #[arg(long, hide = true)]
        corrupt_euler: bool,
    },
    /// Time each method on one family and cross-check the tables.
    Bench {
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "recurrence,series,dp")]
        methods: Vec<MethodArg>,
        #[arg(long)]
        via: Option<String>,
        #[arg(long, hide = true)]
        inject_disagreement: bool,
    },
    /// List catalog identities.
    List {
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> partrec::Result<Status> {
    match cli.command {
        Command::Compute { family, params, max, method, via, format, out, cache_dir } => {
            commands::compute_cmd(ComputeArgs {
                family,
                params: params.parse()?,
                max,
                method: method.into(),
                via,
                format,
                out,
                cache_dir,
            })
        }
        Command::Verify { target, max, oracle, params } => {
            let params: Params = params.parse()?;
            commands::verify_cmd(&target, &params, max, oracle.into())
        }
        Command::Selftest { max, corrupt_euler } => commands::selftest_cmd(max, Faults { corrupt_euler }),
        Command::Bench { family, params, max, methods, via, inject_disagreement } => {
            let methods: Vec<Method> = methods.into_iter().map(Method::from).collect();
            commands::bench_cmd(&family, &params.parse()?, max, &methods, via.as_deref(), inject_disagreement)
        }
        Command::List { json } => commands::list_cmd(json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("partrec: {err}");
            ExitCode::from(match err {
                Error::Domain(_) | Error::Usage(_) => 2,
                Error::Guard(_) => 3,
                Error::Integrity(_) => 1,
            })
        }
    }
}
