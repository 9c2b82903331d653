use std::path::PathBuf;

use murasugi_core::Error as CoreError;
use thiserror::Error;

/// Process exit codes. 0..=2 follow the verdict, the rest are failures.
pub mod exit {
    pub const NORM: i32 = 0;
    pub const NOT_NORM: i32 = 1;
    pub const INCONCLUSIVE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const COMPONENTS: i32 = 4;
    pub const PERIOD: i32 = 5;
    pub const AUGMENTATION: i32 = 6;
    pub const OTHER: i32 = 7;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("p is required (pass --p or set p in the config file)")]
    MissingPeriod,
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("config {}: {message}", path.display())]
    Config { path: PathBuf, message: String },
    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },
    #[error("report line {line}: {message}")]
    Report { line: usize, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                CoreError::Parse(_)
                | CoreError::LetterOutOfRange { .. }
                | CoreError::UnknownGenerator(_)
                | CoreError::InconsistentAbelianization(_)
                | CoreError::MissingMeridian
                | CoreError::Shape { .. }
                | CoreError::BadDropIndex(_) => exit::PARSE,
                CoreError::ComponentCount(_) => exit::COMPONENTS,
                CoreError::InvalidPeriod(_) | CoreError::PeriodMismatch(..) => exit::PERIOD,
                CoreError::Augmentation(_) => exit::AUGMENTATION,
                _ => exit::OTHER,
            },
            CliError::Usage(_)
            | CliError::Config { .. }
            | CliError::Manifest { .. }
            | CliError::Report { .. } => exit::PARSE,
            CliError::MissingPeriod => exit::PERIOD,
            CliError::Io { .. } => exit::OTHER,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
