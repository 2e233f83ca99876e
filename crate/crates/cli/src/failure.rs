use std::fmt;
use std::io;
use std::path::PathBuf;

use compgroup::{Error, ErrorKind};

/// Why a command did not succeed. Each variant maps to one exit status.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Io { path: PathBuf, source: io::Error },
    /// A computed identity or regression value did not hold.
    Check(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) => match e.kind() {
                ErrorKind::Validation => 1,
                ErrorKind::Arithmetic => 2,
                ErrorKind::Parse => 3,
            },
            Failure::Io { .. } => 3,
            Failure::Check(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Failure::Check(msg) => write!(f, "check failed: {msg}"),
        }
    }
}
