use std::process::ExitCode;

use clap::Parser;

use grquot_cli::{configure_threads, render, run, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let result = configure_threads().and_then(|_| run(&cfg)).and_then(|report| {
        let text = render(&report, cfg.format());
        match &cfg.output {
            Some(path) => std::fs::write(path, &text)?,
            None => print!("{text}"),
        }
        Ok(report.exit_code())
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("grquot: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
