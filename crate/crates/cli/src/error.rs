use std::fmt;

use gaussprobe::Error as CoreError;

pub const EXIT_PANEL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PHYSICS: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        Self { code: EXIT_PARSE, message: message.into() }
    }

    pub fn panel(message: impl Into<String>) -> Self {
        Self { code: EXIT_PANEL, message: message.into() }
    }

    /// Errors raised while turning a parsed config into library objects.
    pub fn config(e: CoreError) -> Self {
        match e {
            CoreError::DegenerateBudget(_) => Self::physics(e),
            _ => Self::parse(e.to_string()),
        }
    }

    /// Errors raised by the computation itself.
    pub fn physics(e: CoreError) -> Self {
        let code = if matches!(e, CoreError::DegenerateBudget(_)) { EXIT_BUDGET } else { EXIT_PHYSICS };
        Self { code, message: e.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::parse(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::parse(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::parse(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
