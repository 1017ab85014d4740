mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use commands::{Input, Numeric};
use error::CliError;

#[derive(Parser)]
#[command(
    name = "symrank",
    version,
    about = "Waring rank and border rank bounds for homogeneous polynomials"
)]
struct Cli {
    /// Comma-separated variable names, in order.
    #[arg(long, global = true)]
    vars: Option<String>,
    /// Working precision for irrational coefficients.
    #[arg(long, global = true, default_value_t = 256)]
    precision_bits: u32,
    /// Residual tolerance for numeric verification.
    #[arg(long, global = true, default_value = "1e-20")]
    tolerance: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyArg {
    /// Homogeneous polynomial, e.g. "x^2*y - 3/2*y^3".
    #[arg(long)]
    poly: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    DetPerm,
    Products,
    Cubics,
}

#[derive(Subcommand)]
enum Command {
    /// Catalecticant ranks for each s and the best flattening bound.
    FlattenRank {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long)]
        s: Option<u32>,
    },
    /// Rank and border rank of a form whose span has dimension at most 2.
    BinaryRank {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Formula bounds for the monomial with the given exponents.
    MonomialBounds {
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
    },
    /// Rank and border rank bounds for det_n and per_n.
    DetpermTable {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long)]
        verify_flattenings: bool,
        #[arg(long, default_value_t = 4)]
        max_verify_n: u32,
    },
    /// Every applicable bound with its provenance.
    Bounds {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Verify a Waring decomposition from a file or from the built-in catalog.
    VerifyDecomp {
        #[arg(long, requires = "decomp", conflicts_with_all = ["catalog", "catalog_all"])]
        target: Option<String>,
        #[arg(long, requires = "target")]
        decomp: Option<std::path::PathBuf>,
        #[arg(long, conflicts_with = "catalog_all")]
        catalog: Option<String>,
        #[arg(long)]
        catalog_all: bool,
    },
    /// Limit of the span of d-th powers along a curve family.
    LimitPlane {
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["normal_form", "five_curve"])]
        monomial: Option<Vec<u32>>,
        #[arg(long, requires = "degree", conflicts_with = "five_curve")]
        normal_form: Option<String>,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        five_curve: bool,
    },
    /// Row of the plane cubic table with rank and border rank.
    CubicClassify {
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Reproduce one of the reference tables.
    #[command(name = "paper-tables")]
    ReferenceTables {
        #[arg(long, value_enum)]
        which: Table,
        #[arg(long)]
        max_n: Option<u32>,
    },
}

fn run(cli: Cli) -> Result<Value, CliError> {
    let vars = cli.vars.as_deref();
    let numeric = || Numeric::new(cli.precision_bits, &cli.tolerance);
    match cli.command {
        Command::FlattenRank { poly, s } => {
            commands::flatten_rank(&Input::parse(&poly.poly, vars)?, s)
        }
        Command::BinaryRank { poly } => commands::binary_rank(&Input::parse(&poly.poly, vars)?),
        Command::MonomialBounds { exponents } => commands::monomial_bounds(&exponents),
        Command::DetpermTable {
            max_n,
            verify_flattenings,
            max_verify_n,
        } => commands::detperm_table(max_n, verify_flattenings, max_verify_n),
        Command::Bounds { poly } => commands::bounds(&Input::parse(&poly.poly, vars)?),
        Command::VerifyDecomp {
            target,
            decomp,
            catalog,
            catalog_all,
        } => {
            if let (Some(t), Some(path)) = (target, decomp) {
                let text = std::fs::read_to_string(&path).map_err(|e| {
                    CliError::Precondition(format!("cannot read {}: {e}", path.display()))
                })?;
                commands::verify_file(&Input::parse(&t, vars)?, &text)
            } else if let Some(id) = catalog {
                commands::verify_catalog(&[id.as_str()], &numeric()?)
            } else if catalog_all {
                commands::verify_catalog(&commands::catalog_ids(), &numeric()?)
            } else {
                Err(CliError::Parse(String::from(
                    "give --target with --decomp, --catalog ID, or --catalog-all",
                )))
            }
        }
        Command::LimitPlane {
            monomial,
            normal_form,
            degree,
            five_curve,
        } => match (monomial, normal_form) {
            (Some(b), _) => commands::limit_monomial(&b),
            (None, Some(id)) => commands::limit_normal_form(&id, degree.unwrap_or(3)),
            (None, None) if five_curve => commands::limit_five_curve(),
            _ => Err(CliError::Parse(String::from(
                "give --monomial, --normal-form with --degree, or --five-curve",
            ))),
        },
        Command::CubicClassify { poly } => {
            commands::cubic_classify(&Input::parse(&poly.poly, vars)?)
        }
        Command::ReferenceTables { which, max_n } => {
            let name = match which {
                Table::DetPerm => "det-perm",
                Table::Products => "products",
                Table::Cubics => "cubics",
            };
            commands::reference_tables(name, max_n, &numeric()?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(v) => {
            let text = serde_json::to_string_pretty(&v).expect("json values serialize");
            match writeln!(std::io::stdout().lock(), "{text}") {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
