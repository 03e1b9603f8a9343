//! Command-line front end for `liealg-core`.
//!
//! Exit status: 0 on success, 1 on a domain error (the algebra or path does
//! not admit the requested computation), 2 on usage or input-format errors.
//! Errors are reported on stderr as a single line `error: CODE: message`.

pub mod algebra_file;
pub mod path_file;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use liealg_core::catalog;
use liealg_core::degeneration::{contract_diagonal, contract_path, screen, ContractionPath, WeightVector};
use liealg_core::leibniz_cohomology::{leibniz_cohomology_dim, CoefficientModule, Limits, DEFAULT_SIZE_GUARD};
use liealg_core::lie_cohomology::lie_cohomology_dim;
use liealg_core::rigidity::analyze;
use liealg_core::StructureConstants;

use algebra_file::{parse_algebra, render_algebra, FileError};
use report::{Format, Report};

/// Overrides the cochain size guard (`dim M · d^{q+1}`).
pub const SIZE_GUARD_ENV: &str = "LIEALG_MAX_COCHAIN_DIM";

#[derive(Debug, Parser)]
#[command(name = "liealg", version, about = "Exact cohomology, rigidity and contractions of Lie and Leibniz algebras")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theory {
    Lie,
    Leibniz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coeff {
    Adjoint,
    Trivial,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Lie and Leibniz identities and print failing basis tuples.
    Check { file: PathBuf },
    /// Degeneration invariants: series dimensions, center, derivations, orbit dimension.
    Invariants { file: PathBuf },
    /// Dimension of one cohomology space.
    Cohom {
        file: PathBuf,
        #[arg(long, value_enum)]
        theory: Theory,
        #[arg(long, value_enum, default_value_t = Coeff::Adjoint)]
        coeff: Coeff,
        #[arg(long)]
        degree: usize,
    },
    /// Rigidity indicators from H^0..H^2 and HL^0..HL^2.
    Rigidity { file: PathBuf },
    /// Contract along diag(t^a1, ..., t^ad) or a path matrix over Q(t).
    Contract {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "path", required_unless_present = "path")]
        weights: Option<Vec<i64>>,
        #[arg(long)]
        path: Option<PathBuf>,
    },
    /// Necessary conditions for a proper degeneration FROM -> TO.
    Screen { from: PathBuf, to: PathBuf },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    List,
    Show {
        name: String,
        params: Vec<usize>,
        /// Print the algebra file instead of a summary.
        #[arg(long)]
        export: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(PathBuf, std::io::Error),
    File(PathBuf, FileError),
    Domain(liealg_core::Error, Option<Vec<String>>),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(..) => 1,
            _ => 2,
        }
    }

    fn line(&self) -> String {
        match self {
            CliError::Usage(m) => format!("USAGE: {m}"),
            CliError::Io(p, e) => format!("IO_ERROR: {}: {e}", p.display()),
            CliError::File(p, e) => format!("{}: {}: {e}", e.code(), p.display()),
            CliError::Domain(liealg_core::Error::NoLimit { i, j, k, pole_order }, Some(names)) => format!(
                "NO_LIMIT: ({},{},{}) [{},{}] -> {} has a pole of order {pole_order} at t = 0",
                i + 1,
                j + 1,
                k + 1,
                names[*i],
                names[*j],
                names[*k]
            ),
            CliError::Domain(e, _) => format!("{}: {e}", e.code()),
        }
    }
}

fn domain(e: liealg_core::Error) -> CliError {
    CliError::Domain(e, None)
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> Result<StructureConstants, CliError> {
    parse_algebra(&read(path)?).map_err(|e| CliError::File(path.to_path_buf(), e))
}

fn limits_from_env() -> Result<Limits, CliError> {
    match std::env::var(SIZE_GUARD_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(|max_cochain_dim| Limits { max_cochain_dim })
            .map_err(|_| CliError::Usage(format!("{SIZE_GUARD_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(Limits {
            max_cochain_dim: DEFAULT_SIZE_GUARD,
        }),
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    let report: Report = match cli.command {
        Command::Check { file } => report::check(&load(&file)?),
        Command::Invariants { file } => report::invariants(&load(&file)?),
        Command::Cohom {
            file,
            theory,
            coeff,
            degree,
        } => {
            let a = load(&file)?;
            let (theory_name, coeff_name) = (
                if theory == Theory::Lie { "lie" } else { "leibniz" },
                if coeff == Coeff::Adjoint { "adjoint" } else { "trivial" },
            );
            let dim = match theory {
                Theory::Lie if coeff == Coeff::Trivial => {
                    return Err(CliError::Usage("Lie cohomology is computed with adjoint coefficients only".into()))
                }
                Theory::Lie => lie_cohomology_dim(&a, degree).map_err(domain)?,
                Theory::Leibniz => {
                    let m = if coeff == Coeff::Adjoint {
                        CoefficientModule::Adjoint
                    } else {
                        CoefficientModule::Trivial
                    };
                    leibniz_cohomology_dim(&a, degree, m, &limits_from_env()?).map_err(domain)?
                }
            };
            report::cohom(&a, theory_name, coeff_name, degree, dim)
        }
        Command::Rigidity { file } => {
            let a = load(&file)?;
            report::rigidity(&analyze(&a, &limits_from_env()?).map_err(domain)?)
        }
        Command::Contract { file, weights, path } => {
            let a = load(&file)?;
            let names = Some(a.basis_names().to_vec());
            let result = match (weights, path) {
                (Some(w), _) => contract_diagonal(&a, &WeightVector(w)),
                (None, Some(p)) => {
                    let g = path_file::parse_path(&read(&p)?).map_err(|e| CliError::File(p.clone(), e))?;
                    ContractionPath::new(g).and_then(|path| contract_path(&a, &path))
                }
                (None, None) => unreachable!("clap requires --weights or --path"),
            };
            let r = result.map_err(|e| CliError::Domain(e, names))?;
            report::contraction(&a, &r)
        }
        Command::Screen { from, to } => {
            let (lam, mu) = (load(&from)?, load(&to)?);
            let outcome = screen(&lam, &mu).map_err(domain)?;
            report::screen(&lam, &mu, &outcome)
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => report::catalog_list(catalog::ENTRIES),
            CatalogCommand::Show { name, params, export } => {
                let a = catalog::get(&name, &params).map_err(domain)?;
                if export {
                    return Ok(render_algebra(&a));
                }
                let e = catalog::entry(&name).expect("get succeeded");
                report::catalog_show(e, &params, &a)
            }
        },
    };
    Ok(report.render(format))
}

/// Runs the command line `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let first = e.to_string();
                    let first = first.lines().next().unwrap_or("").trim_start_matches("error: ");
                    let _ = writeln!(err, "error: USAGE: {first}");
                    2
                }
            };
        }
    };
    match execute(cli) {
        Ok(s) => {
            let _ = out.write_all(s.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.line());
            e.exit_code()
        }
    }
}
