use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}line {line}: {msg}", path.as_ref().map(|p| format!("{}: ", p.display())).unwrap_or_default())]
    Parse {
        path: Option<PathBuf>,
        line: usize,
        msg: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Core(#[from] recolor_core::Error),
}

impl CliError {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> CliError {
        CliError::Parse {
            path: None,
            line,
            msg: msg.into(),
        }
    }

    /// 3 for budget refusals, 2 for everything else that stops a command.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(recolor_core::Error::TooLarge { .. })
            | CliError::Core(recolor_core::Error::EncodingOverflow { .. }) => 3,
            _ => 2,
        }
    }
}
