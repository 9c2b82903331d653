//! Settings merged from an optional TOML file and command-line flags.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use murasugi_core::norm::SearchBounds;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Report,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Report => "report",
        })
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "report" => Ok(Format::Report),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

/// Every field is optional; a flat `key = value` namespace mirroring the
/// long flag names.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct Overrides {
    pub p: Option<i64>,
    pub max_coeff: Option<u32>,
    pub max_tdeg: Option<u32>,
    pub budget: Option<u64>,
    pub drop_relator: Option<usize>,
    pub format: Option<Format>,
    pub parallel: Option<bool>,
}

impl Overrides {
    pub fn from_file(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        toml::from_str(&text).map_err(|e| CliError::Config {
            path: path.to_path_buf(),
            message: e.message().to_string(),
        })
    }

    /// Fields set in `self` win over `base`.
    pub fn over(self, base: Overrides) -> Overrides {
        Overrides {
            p: self.p.or(base.p),
            max_coeff: self.max_coeff.or(base.max_coeff),
            max_tdeg: self.max_tdeg.or(base.max_tdeg),
            budget: self.budget.or(base.budget),
            drop_relator: self.drop_relator.or(base.drop_relator),
            format: self.format.or(base.format),
            parallel: self.parallel.or(base.parallel),
        }
    }

    pub fn resolve(self) -> Settings {
        let d = SearchBounds::default();
        Settings {
            p: self.p,
            bounds: SearchBounds {
                max_abs_coeff: self.max_coeff.unwrap_or(d.max_abs_coeff),
                max_t_degree: self.max_tdeg.or(d.max_t_degree),
                budget: self.budget.unwrap_or(d.budget),
                parallel: self.parallel.unwrap_or(d.parallel),
            },
            drop_relator: self.drop_relator,
            format: self.format.unwrap_or_default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub p: Option<i64>,
    pub bounds: SearchBounds,
    pub drop_relator: Option<usize>,
    pub format: Format,
}

impl Default for Settings {
    fn default() -> Self {
        Overrides::default().resolve()
    }
}

impl Settings {
    pub fn period(&self) -> CliResult<i64> {
        self.p.ok_or(CliError::MissingPeriod)
    }
}
