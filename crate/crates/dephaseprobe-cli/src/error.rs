//! CLI error split by exit code: bad configuration (1) vs numerical failure (2).

use dephaseprobe::Error;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numerical(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    /// Attach the grid point that triggered a numerical failure.
    pub fn at_point(self, point: &str) -> Self {
        match self {
            CliError::Numerical(msg) => CliError::Numerical(format!("at {point}: {msg}")),
            config => config,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Config(msg) | CliError::Numerical(msg) => msg,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::Domain { .. } | Error::InvalidAxis(_) | Error::UnknownRateModel { .. } => {
                CliError::Config(err.to_string())
            }
            _ => CliError::Numerical(err.to_string()),
        }
    }
}
