//! Command-line surface for the divisor-class engine: single computations,
//! report rendering, and the verification sweeps. Exit codes: 0 when all
//! requested checks pass, 1 on any verification mismatch, 2 on usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use syzygy_core::enumerative::{grd_count, rho};
use syzygy_core::kodaira::certificate;
use syzygy_core::pipeline::{bn_slope, rank_data, rank_data_balanced, zclass};
use syzygy_core::pointed::m14_class;
use syzygy_core::rat::Rat;
use syzygy_core::report::{render_certificate, render_pipeline, render_pointed, OutputFormat};
use syzygy_core::verify::{
    all_ok, verify_aleph, verify_asymptotic, verify_cycles, verify_formula, CheckLine,
};

#[derive(Parser)]
#[command(
    name = "syzygy",
    about = "Exact divisor-class and slope computations on moduli of curves",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormatArg {
    /// Output format: json, csv or markdown
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline report for the syzygy divisor at one index
    Zclass {
        #[arg(long)]
        i: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Slope of the syzygy divisor and its Brill-Noether comparison
    Slope {
        #[arg(long)]
        i: u32,
    },
    /// Verification sweeps; exit 1 on any mismatch
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// The pointed genus-14 divisor class report
    M14 {
        #[command(flatten)]
        format: FormatArg,
    },
    /// General-type certificate for a pointed moduli space
    Kodaira {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Castelnuovo count of linear series (requires rho = 0)
    Bn {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
    },
    /// Rank bookkeeping of the syzygy bundles at one index
    Ranks {
        #[arg(long)]
        i: u32,
        /// Optional independent k (defaults to the balanced 3i+6)
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Pipeline flags for all 0 <= i <= imax
    Formula {
        #[arg(long, default_value_t = 3)]
        imax: u32,
    },
    /// Reciprocal-factorial identity suites
    Aleph {
        #[arg(long, default_value_t = 3)]
        imax: u32,
    },
    /// Cycle-class oracle equivalences up to kmax
    Cycles {
        #[arg(long, default_value_t = 12)]
        kmax: u32,
    },
    /// Exact asymptotic ratio check at one (j, i) pair
    Asymptotic {
        #[arg(long)]
        j: u32,
        #[arg(long, default_value_t = 10_000)]
        i_eval: u32,
        /// Relative tolerance as an exact rational, e.g. 1/100
        #[arg(long, default_value = "1/100")]
        tol: String,
    },
}

fn parse_format(arg: &FormatArg) -> Result<OutputFormat, String> {
    arg.format.parse::<OutputFormat>()
}

fn print_lines(lines: &[CheckLine]) -> bool {
    for line in lines {
        println!("{}: {}", if line.ok { "PASS" } else { "FAIL" }, line.label);
    }
    all_ok(lines)
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Zclass { i, format } => {
            let fmt = match parse_format(&format) {
                Ok(f) => f,
                Err(e) => return usage_error(e),
            };
            match zclass(i) {
                Ok(rep) => {
                    let ok = rep.flags.all_ok();
                    println!("{}", render_pipeline(&rep, fmt));
                    if ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Slope { i } => match zclass(i) {
            Ok(rep) => {
                let g = 6 * i + 10;
                println!("{}", rep.slope);
                let ok = rep.slope < bn_slope(g);
                println!("< 6+12/{}: {}", g + 1, if ok { "yes" } else { "no" });
                if ok && rep.flags.all_ok() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => usage_error(e),
        },
        Command::Verify { what } => {
            let lines = match what {
                VerifyCommand::Formula { imax } => verify_formula(imax),
                VerifyCommand::Aleph { imax } => verify_aleph(imax),
                VerifyCommand::Cycles { kmax } => verify_cycles(kmax),
                VerifyCommand::Asymptotic { j, i_eval, tol } => {
                    let tol: Rat = match tol.parse() {
                        Ok(t) => t,
                        Err(e) => return usage_error(e),
                    };
                    verify_asymptotic(j, i_eval, &tol)
                }
            };
            if print_lines(&lines) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::M14 { format } => {
            let fmt = match parse_format(&format) {
                Ok(f) => f,
                Err(e) => return usage_error(e),
            };
            match m14_class() {
                Ok(class) => {
                    println!("{}", render_pointed(&class, fmt));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Kodaira { g, n, format } => {
            let fmt = match parse_format(&format) {
                Ok(f) => f,
                Err(e) => return usage_error(e),
            };
            match certificate(g, n) {
                Ok(cert) => {
                    println!("{}", render_certificate(&cert, fmt));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Bn { g, r, d } => match grd_count(g, r, d) {
            Ok(count) => {
                println!("{count}");
                ExitCode::SUCCESS
            }
            Err(_) => usage_error(format!(
                "rho({g},{r},{d}) = {} is nonzero; the count is not defined",
                rho(g, r, d)
            )),
        },
        Command::Ranks { i, k } => {
            let data = match k {
                Some(k) => rank_data(i, k),
                None => rank_data_balanced(i),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&data).expect("serialize")
            );
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli)
}
