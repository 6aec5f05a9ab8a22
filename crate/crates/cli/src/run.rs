//! The `verify` sweep: per-file jobs on a rayon pool, merged by path.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use ccix_core::analyze::{verify_conjecture, DEFAULT_PAIR_CAP};
use rayon::prelude::*;

use crate::error::{CliError, EXIT_ASSERTION, EXIT_OK};
use crate::format::parse_matroid;
use crate::report::{entry_result, Entry, ErrorInfo, Report};

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub cap: u64,
    /// `None` uses every available core.
    pub threads: Option<usize>,
    /// Record wall-clock times; off by default so reports are byte-stable.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_PAIR_CAP,
            threads: None,
            timing: false,
        }
    }
}

/// Expands directories to their `*.json` files; the result is sorted and
/// free of duplicates.
pub fn collect_inputs(paths: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for path in paths {
        if path.is_dir() {
            let entries = fs::read_dir(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            for entry in entries {
                let entry = entry.map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                let p = entry.path();
                if p.is_file() && p.extension().is_some_and(|e| e == "json") {
                    out.push(p);
                }
            }
        } else {
            out.push(path.clone());
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn failed(file: String, name: String, kind: &'static str, message: String, exit_code: i32, ms: f64) -> Entry {
    Entry {
        file,
        name,
        status: "error",
        error: Some(ErrorInfo {
            kind,
            message,
            exit_code,
        }),
        result: None,
        ms,
    }
}

pub fn verify_file(path: &Path, opts: &VerifyOptions) -> Entry {
    let started = Instant::now();
    let elapsed = |t: Instant| if opts.timing { t.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
    let file = file_name(path);
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| file.clone());

    let (parsed, m) = match parse_matroid(path) {
        Ok(v) => v,
        Err(e) => return failed(file, stem, e.kind(), e.to_string(), e.exit_code(), elapsed(started)),
    };
    let name = parsed.name().map(str::to_string).unwrap_or(stem);
    match verify_conjecture(&m, opts.cap) {
        Ok(report) => {
            let result = entry_result(&m, &report);
            let ok = report.passed() && result.property_suites.all_pass_or_vacuous();
            Entry {
                file,
                name,
                status: if ok { "pass" } else { "fail" },
                error: None,
                result: Some(result),
                ms: elapsed(started),
            }
        }
        Err(e) => {
            let cli = CliError::Core(e);
            failed(file, name, cli.kind(), format!("{}: {cli}", path.display()), cli.exit_code(), elapsed(started))
        }
    }
}

/// Exit code of the first non-passing entry, in report order.
pub fn exit_code(report: &Report) -> i32 {
    report
        .entries
        .iter()
        .find(|e| e.status != "pass")
        .map_or(EXIT_OK, |e| e.error.as_ref().map_or(EXIT_ASSERTION, |err| err.exit_code))
}

pub fn verify_paths(paths: &[PathBuf], opts: &VerifyOptions) -> Result<Report, CliError> {
    let inputs = collect_inputs(paths)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    // indexed collect keeps input order whatever the scheduling
    let entries = pool.install(|| inputs.par_iter().map(|p| verify_file(p, opts)).collect());
    Ok(Report::new(entries))
}
