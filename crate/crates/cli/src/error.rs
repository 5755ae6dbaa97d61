//! CLI-level errors with stable machine-readable codes and exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}line {}: {message}", path_prefix(path), line.map_or_else(|| "?".into(), |l| l.to_string()))]
    Parse {
        path: Option<String>,
        line: Option<usize>,
        message: String,
    },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error(transparent)]
    Core(#[from] eigenstrata::Error),

    #[error("no inputs")]
    NoInputs,

    #[error("{0}")]
    Usage(String),
}

fn path_prefix(path: &Option<String>) -> String {
    path.as_ref().map_or_else(String::new, |p| format!("{p}: "))
}

impl CliError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse_error",
            CliError::Io { .. } => "io_error",
            CliError::Core(e) => e.code(),
            CliError::NoInputs => "no_inputs",
            CliError::Usage(_) => "usage_error",
        }
    }

    /// Process exit code: 2 for degenerate forms, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(eigenstrata::Error::DegenerateForm) => 2,
            _ => 1,
        }
    }

    /// Attach the file path to a parse error produced from bare text.
    pub fn with_path(self, path: &str) -> CliError {
        match self {
            CliError::Parse {
                path: None,
                line,
                message,
            } => CliError::Parse {
                path: Some(path.to_string()),
                line,
                message,
            },
            other => other,
        }
    }
}
