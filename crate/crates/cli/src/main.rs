use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lagfactor::{Side, CATALOG_BOUND};
use lagfactor_cli::{
    cmd_check_cfs, cmd_find_complements, cmd_find_factorization, cmd_from_table, cmd_group_info, cmd_is_factor,
    cmd_verify_lemmas, cmd_verify_theorem, Outcome, EXIT_INPUT_ERROR,
};

/// Factor decisions and strong-CFS classification for small finite groups.
///
/// GROUP is a spec such as C9, C2^3, C4xC2, D4, Q8, Dic3, A4, S3, or
/// @FILE for a Cayley-table file. SUBSET is written `{a,a^2,a^4}` or
/// `{1,2,4}`.
#[derive(Parser)]
#[command(name = "lagfactor", version)]
struct Cli {
    /// Write the structured report to PATH (`-` for standard output).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether SUBSET is a factor of GROUP.
    IsFactor {
        group: String,
        subset: String,
        #[arg(long, default_value = "left")]
        side: Side,
        /// Give up after N search nodes (exit code 3).
        #[arg(long, value_name = "N")]
        node_budget: Option<u64>,
    },
    /// List every complement of SUBSET, one per translation class.
    FindComplements {
        group: String,
        subset: String,
        #[arg(long, default_value = "left")]
        side: Side,
    },
    /// Check whether every Lagrange subset of GROUP is a left factor.
    CheckCfs {
        group: String,
        /// Count every non-factor instead of stopping at the first.
        #[arg(long)]
        census: bool,
    },
    /// Classify every catalog group up to the given order.
    VerifyTheorem {
        #[arg(long, default_value_t = CATALOG_BOUND)]
        max_order: usize,
        #[arg(long)]
        census: bool,
    },
    /// Run the exhaustive construction checks over the catalog.
    VerifyLemmas,
    /// Search for GROUP = A1 A2 ... Ak with the given part sizes.
    FindFactorization {
        group: String,
        /// Comma-separated part sizes, e.g. 2,3,2.
        sizes: String,
        #[arg(long, value_name = "N")]
        node_budget: Option<u64>,
    },
    /// Print elements, element orders and the multiplication table.
    GroupInfo { group: String },
    /// Validate a Cayley-table file and print its group info.
    FromTable { file: PathBuf },
}

fn run(cli: &Cli) -> Result<Outcome, lagfactor_cli::InputError> {
    match &cli.command {
        Command::IsFactor { group, subset, side, node_budget } => cmd_is_factor(group, subset, *side, *node_budget),
        Command::FindComplements { group, subset, side } => cmd_find_complements(group, subset, *side),
        Command::CheckCfs { group, census } => cmd_check_cfs(group, *census),
        Command::VerifyTheorem { max_order, census } => cmd_verify_theorem(*max_order, *census),
        Command::VerifyLemmas => cmd_verify_lemmas(),
        Command::FindFactorization { group, sizes, node_budget } => {
            cmd_find_factorization(group, sizes, *node_budget)
        }
        Command::GroupInfo { group } => cmd_group_info(group),
        Command::FromTable { file } => cmd_from_table(file),
    }
}

// A closed pipe (e.g. `| head`) is not an error worth a panic.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT_ERROR as u8);
        }
    };
    match cli.json.as_deref() {
        Some(p) if p.as_os_str() == "-" => emit(&outcome.report.to_json()),
        Some(p) => {
            emit(&outcome.text);
            let written = std::fs::File::create(p).and_then(|mut f| writeln!(f, "{}", outcome.report.to_json()));
            if let Err(e) = written {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(EXIT_INPUT_ERROR as u8);
            }
        }
        None => emit(&outcome.text),
    }
    ExitCode::from(outcome.code as u8)
}
