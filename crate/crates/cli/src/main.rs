use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ccix_cli::catalog::{write_catalog, DEFAULT_SEED};
use ccix_cli::error::{EXIT_INPUT, EXIT_OK};
use ccix_cli::run::{exit_code, verify_paths, VerifyOptions};
use ccix_cli::{inspect, parse_matroid, write_matroid, CliError, MatroidFile};
use ccix_core::analyze::DEFAULT_PAIR_CAP;
use clap::{Args, Parser, Subcommand};

/// Circuit-cocircuit intersection toolkit.
#[derive(Debug, Parser)]
#[command(name = "ccix", version)]
struct Cli {
    /// Write the machine-readable report to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Worker threads; 0 means every available core.
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    threads: usize,
    /// Cap on circuit-cocircuit pairs enumerated per matroid.
    #[arg(long, global = true, value_name = "PAIRS", default_value_t = DEFAULT_PAIR_CAP)]
    cap: u64,
    /// Seed for the random catalog entries.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Record wall-clock times in reports (makes them run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the intersection property on matroid files or directories.
    Verify {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Write the standard catalog of matroid files.
    Catalog {
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
    /// Query a single matroid.
    Inspect(InspectArgs),
}

#[derive(Debug, Args)]
struct InspectArgs {
    path: PathBuf,
    #[arg(long)]
    circuits: bool,
    #[arg(long)]
    cocircuits: bool,
    #[arg(long)]
    hyperplanes: bool,
    /// Emit the dual in circuits format.
    #[arg(long)]
    dual: bool,
    /// Emit a minor in circuits format, e.g. "del=a,b;con=c".
    #[arg(long, value_name = "SPEC")]
    minor: Option<String>,
    /// Print the achieved intersection sizes.
    #[arg(long)]
    cc_sizes: bool,
    /// Extract the reduced minor for "circuit=...;cocircuit=...".
    #[arg(long, value_name = "PAIR")]
    oxley: Option<String>,
    /// Where --dual / --minor write their file (default: stdout).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn emit_file(file: &MatroidFile, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => write_matroid(path, file),
        None => {
            print!("{}", file.to_json());
            Ok(())
        }
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run_inspect(args: &InspectArgs, cap: u64) -> Result<(), CliError> {
    let (file, m) = parse_matroid(&args.path)?;
    let name = file.name();
    let mut any = false;
    let mut section = |title: &str, body: String| {
        any = true;
        println!("{title}:");
        print!("{body}");
    };
    if args.circuits {
        section("circuits", inspect::circuits(&m));
    }
    if args.cocircuits {
        section("cocircuits", inspect::cocircuit_list(&m)?);
    }
    if args.hyperplanes {
        section("hyperplanes", inspect::hyperplanes(&m)?);
    }
    if args.cc_sizes {
        any = true;
        print!("{}", inspect::cc_sizes(&m, cap)?);
    }
    if let Some(pair) = &args.oxley {
        any = true;
        print!("{}", inspect::oxley(&m, pair)?);
    }
    if args.dual && args.minor.is_some() && args.out.is_some() {
        return Err(CliError::Usage("--dual and --minor cannot share one --out file".into()));
    }
    if args.dual {
        any = true;
        emit_file(&inspect::dual_file(&m, name)?, args.out.as_deref())?;
    }
    if let Some(spec) = &args.minor {
        any = true;
        emit_file(&inspect::minor_file(&m, name, spec)?, args.out.as_deref())?;
    }
    if !any {
        // no query flag: a short summary
        println!(
            "{}: |E|={} rank={} circuits={}",
            name.unwrap_or("matroid"),
            m.len(),
            m.rank(),
            m.circuits().len()
        );
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Verify { paths } => {
            let opts = VerifyOptions {
                cap: cli.cap,
                threads: (cli.threads > 0).then_some(cli.threads),
                timing: cli.timing,
            };
            let report = verify_paths(paths, &opts)?;
            print!("{}", report.to_text(cli.timing));
            if let Some(path) = &cli.json {
                write_text(path, &report.to_json())?;
            }
            if let Some(first) = report.entries.iter().find_map(|e| e.error.as_ref()) {
                eprintln!("error: {}", first.message);
            }
            Ok(exit_code(&report))
        }
        Command::Catalog { out } => {
            let written = write_catalog(out, cli.seed)?;
            println!("wrote {} files to {}", written.len(), out.display());
            Ok(EXIT_OK)
        }
        Command::Inspect(args) => {
            run_inspect(args, cli.cap)?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(u8::try_from(code).unwrap_or(EXIT_INPUT as u8))
}
