//! CLI error kinds with a stable exit-code contract:
//! 0 success, 2 config error, 3 input error, 4 infeasible generation,
//! 1 anything else.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Input(String),
    Infeasible(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Input(_) => 3,
            CliError::Infeasible(_) => 4,
            CliError::Runtime(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config",
            CliError::Input(_) => "input",
            CliError::Infeasible(_) => "infeasible",
            CliError::Runtime(_) => "runtime",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Config(m)
            | CliError::Input(m)
            | CliError::Infeasible(m)
            | CliError::Runtime(m) => m,
        }
    }

    /// Single-line JSON record for scripting.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": self.kind(),
            "exit_code": self.exit_code(),
            "message": self.message(),
        })
        .to_string()
    }

    /// Map a core error surfacing from graph analysis to an input error;
    /// generation errors keep their own exit codes.
    pub fn from_analysis(err: lexnet::Error) -> Self {
        CliError::Input(err.to_string())
    }

    pub fn from_generation(err: lexnet::Error) -> Self {
        match err {
            lexnet::Error::InfeasibleGeneration { .. } => CliError::Infeasible(err.to_string()),
            lexnet::Error::InvalidParameter(_) | lexnet::Error::DegreeOutOfRange { .. } => {
                CliError::Config(err.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind(), self.message())
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Runtime(err.to_string())
    }
}
