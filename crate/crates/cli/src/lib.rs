//! Front end for the murasugi screening tool: settings, the link-to-verdict
//! pipeline, batch manifests and the report format.

pub mod batch;
pub mod config;
pub mod error;
pub mod pipeline;
pub mod report;

pub use config::{Format, Overrides, Settings};
pub use error::{exit, CliError, CliResult};
pub use pipeline::{Input, LinkInput};
pub use report::{Mode, Report, Summary};
