use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{file}:{line}:{column}: {msg}")]
    Parse {
        file: String,
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{input}: {source}")]
    Domain {
        input: String,
        source: apolar_core::Error,
    },
}

impl CliError {
    /// 1 for mathematical failures on valid input, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        use apolar_core::Error as E;
        match self {
            CliError::Domain {
                source:
                    E::NotZeroDimensional
                    | E::IrrationalRoots(_)
                    | E::NotVanishing(_)
                    | E::NonIsolatedPoint(..)
                    | E::BoundViolation(_)
                    | E::InvalidRoot(_)
                    | E::WrongArity { .. },
                ..
            } => 1,
            _ => 2,
        }
    }

    pub(crate) fn domain(input: impl Into<String>, source: apolar_core::Error) -> Self {
        CliError::Domain {
            input: input.into(),
            source,
        }
    }
}
