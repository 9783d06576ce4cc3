//! Command-line driver behind the `basilica` binary.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::builder::TypedValueParser;
use clap::{Parser, ValueEnum};

use crate::decomposition::decompose;
use crate::error::Error;
use crate::graph::Graph;
use crate::io::{emit_dot, emit_json, parse_dimacs, parse_edge_list};
use crate::oracle::{DEFAULT_LIMIT, MAX_LIMIT};
use crate::verify::cross_check_with_limit;

pub const EXIT_OK: i32 = 0;
/// Bad arguments, unreadable input or a parse error.
pub const EXIT_INPUT: i32 = 1;
/// The oracle disagreed with the computed decomposition, or an internal
/// consistency check failed.
pub const EXIT_MISMATCH: i32 = 2;
/// `--verify` was requested on a graph above the oracle size limit.
pub const EXIT_GUARD: i32 = 3;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Dimacs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
}

/// Compute the basilica decomposition of an undirected graph.
#[derive(Parser, Debug)]
#[command(name = "basilica", version, about)]
pub struct Args {
    /// Input file; omit or pass `-` to read standard input.
    pub input: Option<PathBuf>,

    /// Input format. Defaults to DIMACS for .dimacs/.col/.clq files and to
    /// the edge-list format otherwise.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,

    #[arg(long, value_enum, default_value = "json")]
    pub out: OutputFormat,

    /// Cross-check the result against the exhaustive oracle.
    #[arg(long)]
    pub verify: bool,

    /// Largest vertex count accepted by `--verify`.
    #[arg(long, default_value_t = DEFAULT_LIMIT, value_parser = clap::value_parser!(u64).range(0..=MAX_LIMIT as u64).map(|v| v as usize))]
    pub verify_limit: usize,

    /// Write the result here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn detect_format(path: Option<&Path>) -> InputFormat {
    let ext = path
        .and_then(Path::extension)
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("dimacs" | "col" | "clq") => InputFormat::Dimacs,
        _ => InputFormat::Edgelist,
    }
}

fn read_graph(args: &Args, stdin: &mut dyn Read) -> Result<Graph, String> {
    let path = args.input.as_deref().filter(|p| p.as_os_str() != "-");
    let text = match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        None => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            buf
        }
    };
    let format = args.format.unwrap_or_else(|| detect_format(path));
    let parsed = match format {
        InputFormat::Edgelist => parse_edge_list(&text),
        InputFormat::Dimacs => parse_dimacs(&text),
    };
    let name = path.map_or_else(|| "stdin".to_owned(), |p| p.display().to_string());
    parsed.map_err(|e| format!("{name}: {e}"))
}

/// Parses `argv` (program name first) and runs the driver. Returns the
/// process exit code.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    execute(&args, stdin, stdout, stderr)
}

pub fn execute(
    args: &Args,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let graph = match read_graph(args, stdin) {
        Ok(g) => g,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    if args.verify && graph.vertex_count() > args.verify_limit {
        let _ = writeln!(
            stderr,
            "error: refusing to verify: {}",
            Error::OracleGuard {
                vertices: graph.vertex_count(),
                limit: args.verify_limit
            }
        );
        return EXIT_GUARD;
    }
    let decomposition = match decompose(&graph) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_MISMATCH;
        }
    };
    if args.verify {
        match cross_check_with_limit(&decomposition, args.verify_limit) {
            Ok(mismatches) if mismatches.is_empty() => {}
            Ok(mismatches) => {
                for m in &mismatches {
                    let _ = writeln!(stderr, "verify: {m}");
                }
                return EXIT_MISMATCH;
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_GUARD;
            }
        }
    }
    let text = match args.out {
        OutputFormat::Json => emit_json(&decomposition),
        OutputFormat::Dot => emit_dot(&decomposition),
    };
    let written = match &args.output {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| format!("stdout: {e}")),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}
