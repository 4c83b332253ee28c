//! Command-line front end for `hypertoric-core`: file formats, subcommands
//! and report rendering.

pub mod chi;
pub mod commands;
pub mod error;
pub mod input;
pub mod report;
pub mod selfcheck;

pub use commands::{run, Cli, Command};
pub use error::CliError;
pub use report::Report;

/// What the binary writes and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: u8,
}

/// Runs a parsed command line and renders the outcome.
pub fn execute(cli: &Cli) -> Output {
    let name = cli.command.name();
    match run(cli) {
        Ok(report) => {
            let (stdout, stderr) = if cli.json {
                (pretty(&report.to_json()), String::new())
            } else {
                let warnings: String = report.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
                (report.text.clone(), warnings)
            };
            Output {
                stdout,
                stderr,
                exit_code: report.exit_code,
            }
        }
        Err(e) => {
            let (stdout, stderr) = if cli.json {
                (pretty(&report::error_json(name, &e)), String::new())
            } else {
                (String::new(), format!("error: {e}\n"))
            };
            Output {
                stdout,
                stderr,
                exit_code: e.exit_code(),
            }
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
