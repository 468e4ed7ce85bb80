//! Command-line front end.
//!
//! ```text
//! json-taxonomy [--report | --acronym] <PATH>
//! ```
//!
//! By default prints one qualifier per line followed by the acronym (or
//! `no acronym: structural`). `-` reads the document from standard input.
//! Exit codes: 0 success, 1 unreadable file or invalid JSON, 2 usage error.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::Parser;

use crate::report::{report_from, serialize_report};
use crate::stats::compute_stats;
use crate::taxonomy::{classify_stats, NO_ACRONYM_STRUCTURAL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "json-taxonomy",
    version,
    about = "Classify a JSON document by size, content type, redundancy and nesting",
    after_help = "JSON_TAXONOMY_NO_COLOR is accepted for compatibility; output is never colored."
)]
struct Args {
    /// Path to a JSON document, or `-` to read standard input
    path: PathBuf,

    /// Print the full analysis report as JSON
    #[arg(long, conflicts_with = "acronym")]
    report: bool,

    /// Print only the acronym
    #[arg(long)]
    acronym: bool,
}

/// Runs the CLI with explicit streams and returns the process exit code.
/// `args` includes the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(err) => {
            let text = err.render().to_string();
            let stream: &mut dyn Write = if err.use_stderr() { stderr } else { stdout };
            return match stream.write_all(text.as_bytes()) {
                Ok(()) => err.exit_code(),
                Err(_) => EXIT_FAILURE,
            };
        }
    };
    match execute(&args, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(_) => EXIT_FAILURE,
    }
}

fn execute(
    args: &Args,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> io::Result<i32> {
    let from_stdin = args.path.as_os_str() == "-";
    let display_name = if from_stdin {
        "<stdin>".to_string()
    } else {
        args.path.display().to_string()
    };

    let input = if from_stdin {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf).map(|_| buf)
    } else {
        std::fs::read(&args.path)
    };
    let input = match input {
        Ok(input) => input,
        Err(err) => {
            writeln!(stderr, "json-taxonomy: cannot read {display_name}: {err}")?;
            return Ok(EXIT_FAILURE);
        }
    };

    let document = match crate::parse(&input) {
        Ok(document) => document,
        Err(failure) => {
            writeln!(
                stderr,
                "{display_name}:{}:{}: {}",
                failure.line, failure.column, failure.message
            )?;
            return Ok(EXIT_FAILURE);
        }
    };

    let stats = compute_stats(document.root());
    let label = classify_stats(&stats);
    let acronym = label.acronym();
    let acronym = acronym.as_deref().unwrap_or(NO_ACRONYM_STRUCTURAL);

    if args.report {
        writeln!(stdout, "{}", serialize_report(&report_from(&stats, &label)))?;
    } else if args.acronym {
        writeln!(stdout, "{acronym}")?;
    } else {
        for qualifier in label.qualifiers() {
            writeln!(stdout, "{qualifier}")?;
        }
        writeln!(stdout, "{acronym}")?;
    }
    stdout.flush()?;
    Ok(EXIT_OK)
}
