//! Library side of the `nonrep` command: each subcommand is a function
//! returning an [`Outcome`], so tests can drive them without a process.

pub mod bench;
pub mod commands;
pub mod diag;
pub mod export;
pub mod report;
pub mod search;

use std::path::PathBuf;

use nonrep::Error as CoreError;
use thiserror::Error;

pub use commands::{
    cmd_colour, cmd_export, cmd_gen, cmd_verify, ColourArgs, ExportArgs, ExportFormat, GenArgs, Mode, VerifyArgs,
};
pub use report::{Phase, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CLASS: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },

    #[error("cannot parse {what}: {message}")]
    Parse { what: String, message: String },

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("bench exponent {exponent:.3} exceeds {limit}")]
    Scaling { exponent: f64, limit: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Write { .. } | CliError::Parse { .. } => EXIT_PARSE,
            CliError::Core(e) => core_exit_code(e),
            CliError::Scaling { .. } => EXIT_VERIFY,
        }
    }
}

fn core_exit_code(e: &CoreError) -> i32 {
    use CoreError::*;
    match e {
        Malformed(_) | DartOutOfRange(_) | NotPlanar { .. } | Json(_) | PartialColouring { .. } | InvalidSpec(_) => {
            EXIT_PARSE
        }
        NotOuterplane
        | NotSimple
        | NotBiconnected
        | HasBridge
        | NotATree
        | NotCactus
        | OddCycle(_)
        | MultipleBlocks(_)
        | GuardExceeded { .. }
        | CycleTooShort(_) => EXIT_CLASS,
        _ => EXIT_VERIFY,
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a command produced: the exit code plus the JSON written to stdout,
/// if any.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Option<String>,
}

impl Outcome {
    pub fn ok(stdout: Option<String>) -> Self {
        Outcome { code: EXIT_OK, stdout }
    }
}

pub(crate) fn read_file(path: &std::path::Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

/// Writes to `path`, or returns the text for stdout when there is none.
pub(crate) fn write_or_return(path: Option<&std::path::Path>, text: String) -> CliResult<Option<String>> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|source| CliError::Write { path: p.to_owned(), source })?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
