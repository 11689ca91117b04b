use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fermicode_cli::{assemble, digest, BuildOptions, Outcome, Target};

/// Environment variable naming the directory that receives report files.
const REPORT_DIR_ENV: &str = "FERMICODE_REPORT_DIR";

#[derive(Parser)]
#[command(name = "fermicode", version, about = "Build and verify Majorana-fermion stabilizer codes")]
struct Cli {
    /// Worker threads for the distance search (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Directory for report and output files; overrides FERMICODE_REPORT_DIR.
    #[arg(long, global = true)]
    report_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named code, verify it and write its code-spec and report files.
    Build {
        /// hastings, glued, four-qubit, four-qubit-embedded or single-occupancy.
        #[arg(long)]
        code: String,
        /// Family parameter of the 2^l-mode code (3..=7).
        #[arg(long)]
        l: Option<usize>,
        /// Number of qubits of the single-occupancy code.
        #[arg(long)]
        n: Option<usize>,
        /// single|s or double|d, for four-qubit-embedded.
        #[arg(long)]
        occupancy: Option<String>,
        /// Largest support weight searched for the distance.
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
        /// Also write every codespace basis vector as a Fock state file.
        #[arg(long)]
        emit_basis: bool,
    },
    /// Validate a code-spec file and report its parameters and syndromes.
    Check {
        codefile: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
    },
    /// Convert an operator between Majorana and Pauli form.
    Convert {
        #[arg(allow_hyphen_values = true)]
        operator: String,
        #[arg(long, value_enum)]
        to: To,
        /// Number of fermionic modes (inferred when omitted).
        #[arg(long)]
        modes: Option<usize>,
    },
    /// Evaluate the eight E8 Weyl invariants at exact amplitudes.
    Invariants {
        /// Eight amplitudes such as `1`, `-2/5` or `1/2+1/3*i`; options go before them.
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        amplitudes: Vec<String>,
        /// Add decimal approximations.
        #[arg(long)]
        decimal: bool,
        /// Add the rank of the invariant Jacobian at this point.
        #[arg(long)]
        rank: bool,
    },
    /// Embed a qubit state file into Fock space.
    Embed {
        statefile: PathBuf,
        /// Per-qubit label such as 0101, or single/double.
        #[arg(long)]
        occupancy: String,
        #[arg(long)]
        n: Option<usize>,
        /// Write the Fock state file here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum To {
    Pauli,
    Majorana,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn run(cli: Cli) -> Result<bool> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let report_dir = cli
        .report_dir
        .clone()
        .or_else(|| std::env::var_os(REPORT_DIR_ENV).map(PathBuf::from));
    let (name, inputs, outcome): (&str, String, Outcome) = match &cli.command {
        Command::Build { code, l, n, occupancy, max_weight, emit_basis } => {
            let opts = BuildOptions {
                code: code.clone(),
                l: *l,
                n: *n,
                occupancy: occupancy.clone(),
                max_weight: *max_weight,
                emit_basis: *emit_basis,
                jobs: cli.jobs,
            };
            ("build", digest(&[&opts.canonical()]), fermicode_cli::build(&opts)?)
        }
        Command::Check { codefile, max_weight } => {
            let spec = read(codefile)?;
            let d = digest(&[&spec, &max_weight.to_string()]);
            ("check", d, fermicode_cli::check(&spec, *max_weight, cli.jobs)?)
        }
        Command::Convert { operator, to, modes } => {
            let target = match to {
                To::Pauli => Target::Pauli,
                To::Majorana => Target::Majorana,
            };
            let d = digest(&[operator, &format!("{modes:?}")]);
            ("convert", d, fermicode_cli::convert(operator, target, *modes)?)
        }
        Command::Invariants { amplitudes, decimal, rank } => {
            let parts: Vec<&str> = amplitudes.iter().map(String::as_str).collect();
            ("invariants", digest(&parts), fermicode_cli::invariants(amplitudes, *decimal, *rank)?)
        }
        Command::Embed { statefile, occupancy, n, output } => {
            let state = read(statefile)?;
            let outcome = fermicode_cli::embed_state(&state, occupancy, *n)?;
            if let Some(out) = output {
                let text = outcome.body["state"].as_str().unwrap_or_default();
                std::fs::write(out, text).with_context(|| format!("cannot write {}", out.display()))?;
            }
            ("embed", digest(&[&state, occupancy]), outcome)
        }
    };
    let report = assemble(name, &args, &inputs, &outcome);
    let text = serde_json::to_string_pretty(&report)? + "\n";
    let dir = match (&cli.command, report_dir) {
        (_, Some(d)) => Some(d),
        (Command::Build { .. }, None) => Some(PathBuf::from(".")),
        _ => None,
    };
    if let Some(dir) = dir {
        for (file, contents) in &outcome.files {
            write(&dir, file, contents)?;
        }
        write(&dir, &outcome.report_name, &text)?;
    }
    print!("{text}");
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
