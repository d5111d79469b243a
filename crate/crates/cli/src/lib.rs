//! Command-line front end for `grquot-core`: argument parsing, report
//! rendering and the acceptance suite.

pub mod acceptance;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use acceptance::{run_suite, CriterionResult, Selection, SuiteReport};
pub use commands::run;
pub use config::{Command, Format, RunConfig, DEFAULT_SEED, THREADS_ENV};
pub use error::{CliError, CliResult};
pub use report::{Report, Status};

/// Render `report` in the requested format, newline-terminated.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => match acceptance_lines(report) {
            Some(lines) => lines,
            None => report.to_text(),
        },
    }
}

/// `criterion N: PASS ...` lines for acceptance reports.
fn acceptance_lines(report: &Report) -> Option<String> {
    if report.command != "acceptance" {
        return None;
    }
    let mut out = String::new();
    for c in report.payload["criteria"].as_array()? {
        let passed = c["passed"].as_bool()?;
        out.push_str(&format!(
            "criterion {:>2}: {}  {}",
            c["id"].as_u64()?,
            if passed { "PASS" } else { "FAIL" },
            c["title"].as_str()?
        ));
        if let Some(ms) = c["elapsed_ms"].as_u64() {
            out.push_str(&format!(" ({ms} ms)"));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "{}/{} criteria passed\n",
        report.payload["passed_count"],
        report.payload["total"]
    ));
    Some(out)
}

/// Size the global thread pool from [`THREADS_ENV`] if set.
pub fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    if n == 0 {
        return Err(CliError::Usage(format!("{THREADS_ENV} must be positive")));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}
