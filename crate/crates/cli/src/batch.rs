//! Manifest-driven screening: one input per line, reports in input order.

use std::path::Path;

use rayon::prelude::*;

use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::pipeline::{run, Input};
use crate::report::{Mode, Report, Summary};

/// One manifest line: `mode | p | kind | text`.
///
/// `p` may be `-` to fall back on the global setting. `kind` is `braid`,
/// `presentation` (a path relative to the manifest) or `poly`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Entry {
    pub line: usize,
    pub mode: Mode,
    pub p: Option<i64>,
    pub input: Input,
}

pub fn parse_manifest(text: &str, base: &Path) -> CliResult<Vec<Entry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| CliError::Manifest { line, message };
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.splitn(4, '|').map(str::trim).collect();
        let [mode, p, kind, body] = fields[..] else {
            return Err(err(format!(
                "expected `mode | p | kind | text`, got {content:?}"
            )));
        };
        let mode: Mode = mode.parse().map_err(err)?;
        let p = match p {
            "-" => None,
            v => Some(v.parse::<i64>().map_err(|e| err(format!("p: {e}")))?),
        };
        let input = match kind {
            "braid" => Input::braid(body),
            "presentation" => Input::presentation(base.join(body)),
            "poly" => Input::poly(body),
            k => return Err(err(format!("unknown input kind {k:?}"))),
        };
        out.push(Entry {
            line,
            mode,
            p,
            input,
        });
    }
    Ok(out)
}

/// Processes every entry (concurrently when `parallel`) and returns the
/// reports in manifest order. Per-line failures are recorded, not raised.
pub fn run_batch(entries: &[Entry], settings: &Settings, parallel: bool) -> (Vec<Report>, Summary) {
    let one = |e: &Entry| {
        let s = Settings {
            p: e.p.or(settings.p),
            ..*settings
        };
        run(e.mode, &e.input, &s)
    };
    let reports: Vec<Report> = if parallel {
        entries.par_iter().map(one).collect()
    } else {
        entries.iter().map(one).collect()
    };
    let summary = Summary::tally(&reports);
    (reports, summary)
}
