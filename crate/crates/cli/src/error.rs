use std::fmt;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Validation,
    Io,
    NoValidCombination,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            kind: Kind::Validation,
            message: message.into(),
        }
    }

    pub fn io(path: &std::path::Path, err: impl fmt::Display) -> Self {
        Self {
            kind: Kind::Io,
            message: format!("{}: {err}", path.display()),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self.kind {
            Kind::Validation => 2,
            Kind::Io => 3,
            Kind::NoValidCombination => 4,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<circlust::Error> for CliError {
    fn from(e: circlust::Error) -> Self {
        let kind = match e {
            circlust::Error::NoValidCombination { .. } => Kind::NoValidCombination,
            _ => Kind::Validation,
        };
        Self {
            kind,
            message: e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
