//! `gw` — exact plane-curve counts from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails (`verify`, or a
//! nonzero `quantum wdvv` residual), 2 on usage or domain errors, 3 when the
//! splitting formula needs an auxiliary degree the tables do not provide
//! (the missing key is printed as JSON so it can be supplied via `--aux`).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gw_core::kontsevich::{self, NdTable};
use gw_core::quantum::{self, PairGrouping};
use gw_core::severi::{self, AuxKey, AuxTable, AuxTableError, Layered, SeveriError};

mod output;
mod verify;

use output::Format;

#[derive(Parser)]
#[command(name = "gw", version, about = "Exact curve counts in the plane: nodal-curve ledgers and rational-curve recursions")]
struct Cli {
    /// Output format for data commands
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rational-curve counts n_d for 1 <= d <= max
    Nd {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max: u32,
        /// Also print the split sums f and g entering each degree
        #[arg(long)]
        split: bool,
    },
    /// Nodal-curve degrees: the splitting formula and its worked ledgers
    Severi {
        #[command(subcommand)]
        cmd: SeveriCmd,
    },
    /// Four-point sums and associativity residuals
    Quantum {
        #[command(subcommand)]
        cmd: QuantumCmd,
    },
    /// Run the whole verification suite; exit 0 iff every check passes
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..))]
        max: u32,
        /// Test hook: corrupt one built-in aux value so the suite must fail
        #[arg(long, hide = true)]
        corrupt_aux: bool,
    },
}

#[derive(Subcommand)]
enum SeveriCmd {
    /// Two-node degrees from the closed form, for 3 <= d <= max
    Roberts {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        max: u32,
    },
    /// The per-component two-node ledger at one degree (d >= 4)
    Components {
        #[arg(long, value_parser = clap::value_parser!(u32).range(4..))]
        d: u32,
    },
    /// Evaluate the splitting formula for N_{d,delta}
    Formula5 {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        delta: u32,
        /// JSON aux table layered over the built-in entries
        #[arg(long)]
        aux: Option<PathBuf>,
        /// Print per-term rows; dropped candidates go to stderr for audit
        #[arg(long)]
        ledger: bool,
    },
    /// The three-node quartic ledger and the irreducible count
    Quartics,
}

#[derive(Subcommand)]
enum QuantumCmd {
    /// A single four-point sum
    Fourpoint {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Insertion grouping: "pp,ll" or "pl,pl"
        #[arg(long)]
        pairs: String,
        /// Point-class insertions (defaults to 3d - 4)
        #[arg(long)]
        n: Option<u32>,
        /// Drop the degenerate splits d_1 = 0 and d_2 = 0
        #[arg(long)]
        exclude_degenerate: bool,
    },
    /// Associativity residuals for 2 <= d <= max; exit 0 iff all vanish
    Wdvv {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        max: u32,
    },
}

enum CliError {
    Domain(String),
    MissingAux(AuxKey),
    Verification,
    Io(String),
}

impl From<SeveriError> for CliError {
    fn from(e: SeveriError) -> Self {
        match e {
            SeveriError::MissingAux(key) => CliError::MissingAux(key),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<kontsevich::DegreeError> for CliError {
    fn from(e: kontsevich::DegreeError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<AuxTableError> for CliError {
    fn from(e: AuxTableError) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification) => ExitCode::from(1),
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::MissingAux(key)) => {
            let json = serde_json::to_string(&key).expect("aux keys serialize");
            eprintln!("error: missing auxiliary table entry: {json}");
            ExitCode::from(3)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Nd { max, split } => cmd_nd(max, split, format),
        Command::Severi { cmd } => match cmd {
            SeveriCmd::Roberts { max } => cmd_roberts(max, format),
            SeveriCmd::Components { d } => cmd_components(d, format),
            SeveriCmd::Formula5 { d, delta, aux, ledger } => {
                cmd_formula5(d, delta, aux, ledger, format)
            }
            SeveriCmd::Quartics => cmd_quartics(format),
        },
        Command::Quantum { cmd } => match cmd {
            QuantumCmd::Fourpoint { d, pairs, n, exclude_degenerate } => {
                cmd_fourpoint(d, &pairs, n, exclude_degenerate, format)
            }
            QuantumCmd::Wdvv { max } => cmd_wdvv(max, format),
        },
        Command::Verify { max, corrupt_aux } => {
            if verify::run(max, corrupt_aux) {
                Ok(())
            } else {
                Err(CliError::Verification)
            }
        }
    }
}

fn cmd_nd(max: u32, split: bool, format: Format) -> Result<(), CliError> {
    let mut table = NdTable::new();
    kontsevich::n_d(max, &mut table)?;
    let mut rows = Vec::new();
    for d in 1..=max {
        let n = table.entry(d).to_string();
        let (f, g) = if split && d >= 2 {
            (
                Some(kontsevich::f_sum(d, &table)?.to_string()),
                Some(kontsevich::g_sum(d, &table)?.to_string()),
            )
        } else {
            (None, None)
        };
        rows.push(output::NdRow { d, n, f, g });
    }
    print!("{}", output::render_nd(&rows, format));
    Ok(())
}

fn cmd_roberts(max: u32, format: Format) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for d in 3..=max {
        rows.push((d, severi::roberts_closed(d)?));
    }
    print!("{}", output::render_degree_values(&rows, "value", format));
    Ok(())
}

fn cmd_components(d: u32, format: Format) -> Result<(), CliError> {
    let ledger = severi::delta2_components(d)?;
    print!("{}", output::render_components(Some(d), &ledger, None, format));
    Ok(())
}

fn cmd_quartics(format: Format) -> Result<(), CliError> {
    let ledger = severi::quartic_components()?;
    let irreducible = severi::irreducible_rational_quartics()?;
    print!(
        "{}",
        output::render_components(None, &ledger, Some(irreducible), format)
    );
    Ok(())
}

fn cmd_formula5(
    d: u32,
    delta: u32,
    aux_path: Option<PathBuf>,
    ledger: bool,
    format: Format,
) -> Result<(), CliError> {
    let base = severi::paper_aux();
    let user_table = match aux_path {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            Some(AuxTable::from_json_str(&text)?)
        }
        None => None,
    };

    let (terms, dropped) = match &user_table {
        Some(table) => {
            let provider = Layered { primary: table, fallback: &base };
            severi::formula5_audit(d, delta, &provider)?
        }
        None => severi::formula5_audit(d, delta, &base)?,
    };

    let (stdout, stderr) = output::render_formula5(d, delta, &terms, &dropped, ledger, format);
    print!("{stdout}");
    eprint!("{stderr}");
    Ok(())
}

fn cmd_fourpoint(
    d: u32,
    pairs: &str,
    n: Option<u32>,
    exclude_degenerate: bool,
    format: Format,
) -> Result<(), CliError> {
    let grouping: PairGrouping = pairs.parse().map_err(CliError::Domain)?;
    let n = n.unwrap_or_else(|| (3 * d).saturating_sub(4));
    let mut table = NdTable::new();
    kontsevich::n_d(d, &mut table)?;
    let value = quantum::four_point_sum(d, n, &grouping, &table, !exclude_degenerate);
    print!("{}", output::render_fourpoint(d, &grouping, &value, format));
    Ok(())
}

fn cmd_wdvv(max: u32, format: Format) -> Result<(), CliError> {
    let mut table = NdTable::new();
    kontsevich::n_d(max, &mut table)?;
    let residuals = quantum::wdvv_residuals(max, &table);
    let all_zero = residuals.iter().all(|(_, r)| r == &gw_core::arith::Integer::from(0));
    print!("{}", output::render_degree_values(&residuals, "residual", format));
    if all_zero {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}
