use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qpoincare::export::{export, parse_rational, ExportKind, Format};
use qpoincare::expr::{parse, Side};
use qpoincare::invariants::GramSpace;
use qpoincare::scalars::CycField;
use qpoincare::suite::{run_suite, Suite};
use qpoincare::AlgebraError;

#[derive(Parser)]
#[command(name = "qpoincare", version, about = "Exact algebra of the quantum Poincare group E_q(1,1) at odd roots of unity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print a JSON report.
    Suite {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Export a table.
    Export {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Gram space for `gram`.
        #[arg(long, value_enum, default_value_t = SpaceArg::M)]
        space: SpaceArg,
        /// Numeric lambda+ (rational) for `dmatrix`.
        #[arg(long, requires = "lambda_minus", allow_negative_numbers = true)]
        lambda_plus: Option<String>,
        /// Numeric lambda- (rational) for `dmatrix`.
        #[arg(long, requires = "lambda_plus", allow_negative_numbers = true)]
        lambda_minus: Option<String>,
        /// Write to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Parse an expression and print its normal form.
    Parse {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = SideArg::A)]
        side: SideArg,
        expr: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Hopf,
    Duality,
    Integral,
    Forms,
    Repr,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Dmatrix,
    Gram,
    Pairing,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    #[value(name = "SO", alias = "so")]
    So,
    #[value(name = "M", alias = "m")]
    M,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "U", alias = "u")]
    U,
}

const FAILED: u8 = 1;
const USAGE: u8 = 2;

fn usage(e: AlgebraError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Suite { p, suite, seed } => {
            let suite = match suite {
                SuiteArg::Hopf => Suite::Hopf,
                SuiteArg::Duality => Suite::Duality,
                SuiteArg::Integral => Suite::Integral,
                SuiteArg::Forms => Suite::Forms,
                SuiteArg::Repr => Suite::Repr,
                SuiteArg::All => Suite::All,
            };
            let report = match run_suite(p, suite, seed) {
                Ok(r) => r,
                Err(e @ AlgebraError::InvalidOrder(_)) => return usage(e),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(FAILED);
                }
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                for f in report.failures() {
                    eprintln!("FAIL {}: {}", f.assertion_id, f.detail);
                }
                ExitCode::from(FAILED)
            }
        }
        Command::Export { kind, p, format, space, lambda_plus, lambda_minus, output } => {
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            };
            let kind = match kind {
                KindArg::Dmatrix => {
                    let numeric = match (lambda_plus, lambda_minus) {
                        (Some(a), Some(b)) => match (parse_rational(&a), parse_rational(&b)) {
                            (Ok(a), Ok(b)) => Some((a, b)),
                            (Err(e), _) | (_, Err(e)) => return usage(e),
                        },
                        _ => None,
                    };
                    ExportKind::Dmatrix { numeric }
                }
                KindArg::Gram => ExportKind::Gram(match space {
                    SpaceArg::So => GramSpace::So,
                    SpaceArg::M => GramSpace::M,
                }),
                KindArg::Pairing => ExportKind::Pairing,
            };
            let text = match export(&kind, p, format) {
                Ok(t) => t,
                Err(e @ (AlgebraError::InvalidOrder(_) | AlgebraError::ZeroLambda)) => return usage(e),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(FAILED);
                }
            };
            match output {
                Some(path) => {
                    if let Err(e) = fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(FAILED);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Command::Parse { p, side, expr } => {
            let field = match CycField::new(p) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let side = match side {
                SideArg::A => Side::A,
                SideArg::U => Side::U,
            };
            match parse(field, &expr, side) {
                Ok(x) => {
                    println!("{}", x.render());
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
    }
}
