//! `surfgeom`: one subcommand per computation, results as CSV, JSON or DOT.
//!
//! Exit status: 0 success, 1 domain error, 2 parse or usage error; `decide`
//! returns 0, 3 or 4 for Bounded, Unbounded and indeterminate.

mod args;
mod commands;
mod config;
mod output;

use std::path::Path;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format, GlobalOpts};
use config::{Failure, Outcome, Settings};

/// Runs one parsed invocation, writing its result, and returns the exit
/// status fixed by the result.
fn execute(cli: &Cli) -> Outcome<i32> {
    let settings = Settings::resolve(&cli.global)?;
    if let Command::Batch { file } = &cli.command {
        return batch(file, &cli.global);
    }
    let report = commands::run(&cli.command, &settings)?;
    let format = settings
        .format
        .or(report.default_format)
        .unwrap_or(Format::Csv);
    let text = report.render(format)?;
    match &settings.output {
        Some(path) => output::write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    Ok(report.code)
}

/// Splits a batch line into words; double quotes group words.
fn words(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let (mut quoted, mut any) = (false, false);
    for c in line.chars() {
        match c {
            '"' => {
                quoted = !quoted;
                any = true;
            }
            c if c.is_whitespace() && !quoted => {
                if any {
                    out.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            c => {
                cur.push(c);
                any = true;
            }
        }
    }
    if any {
        out.push(cur);
    }
    out
}

/// One command per non-blank, non-`#` line, inheriting the outer options it
/// does not set. Stops at the first nonzero status and returns it.
fn batch(file: &Path, outer: &GlobalOpts) -> Outcome<i32> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::Domain(format!("{}: {e}", file.display())))?;
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let argv = std::iter::once("surfgeom".to_string()).chain(words(line));
        let cli = Cli::try_parse_from(argv)
            .map_err(|e| Failure::Parse(format!("line {}: {e}", n + 1)))?;
        if matches!(cli.command, Command::Batch { .. }) {
            return Err(Failure::Parse(format!(
                "line {}: batch files cannot nest",
                n + 1
            )));
        }
        let mut cli = cli;
        let g = &mut cli.global;
        g.config = g.config.take().or_else(|| outer.config.clone());
        g.constants = g.constants.take().or_else(|| outer.constants.clone());
        g.format = g.format.or(outer.format);
        let code = execute(&cli)?;
        if code != 0 {
            return Ok(code);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batch_words_respect_quotes() {
        assert_eq!(
            words(r#"decide "[1;1,1](period:1)" inf -K 10"#),
            ["decide", "[1;1,1](period:1)", "inf", "-K", "10"]
        );
        assert_eq!(words("  collar 1  2 "), ["collar", "1", "2"]);
        assert_eq!(words(r#"resolve "" x"#), ["resolve", "", "x"]);
    }
}
