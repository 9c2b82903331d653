//! Line-oriented `key: value` reports, one record per input, records
//! separated by `---`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{CliError, CliResult};

pub const SEPARATOR: &str = "---";

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    Alex,
    Murasugi,
    Check,
    Realize,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Alex => "alex",
            Mode::Murasugi => "murasugi",
            Mode::Check => "check",
            Mode::Realize => "realize",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "alex" => Ok(Mode::Alex),
            "murasugi" => Ok(Mode::Murasugi),
            "check" => Ok(Mode::Check),
            "realize" => Ok(Mode::Realize),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

/// One battery line as reported: name, status and evidence text.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BatteryLine {
    pub name: String,
    pub status: String,
    pub evidence: String,
}

/// Everything computed for one input. Polynomial fields hold canonical text.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub mode: Mode,
    /// `braid <word>`, `presentation <path>` or `poly <text>`.
    pub input: String,
    pub p: Option<i64>,
    pub delta: Option<String>,
    pub linking: Option<i64>,
    pub warnings: Vec<String>,
    pub murasugi: Option<String>,
    pub augmentation: Option<String>,
    pub battery: Vec<BatteryLine>,
    pub verdict: Option<String>,
    /// `name | evidence` of the failing battery line.
    pub cited: Option<String>,
    pub reason: Option<String>,
    pub bounds: Option<String>,
    pub witness: Option<String>,
    pub nodes: Option<u64>,
    pub error: Option<String>,
    pub exit: i32,
    pub time_ms: u64,
}

impl Report {
    pub fn new(mode: Mode, input: impl Into<String>) -> Self {
        Report {
            mode,
            input: input.into(),
            p: None,
            delta: None,
            linking: None,
            warnings: Vec::new(),
            murasugi: None,
            augmentation: None,
            battery: Vec::new(),
            verdict: None,
            cited: None,
            reason: None,
            bounds: None,
            witness: None,
            nodes: None,
            error: None,
            exit: 0,
            time_ms: 0,
        }
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        let mut put = |k: &str, v: &dyn fmt::Display| {
            let v = v.to_string().replace('\n', " ");
            let _ = writeln!(out, "{k}: {v}");
        };
        put("mode", &self.mode);
        put("input", &self.input);
        if let Some(p) = self.p {
            put("p", &p);
        }
        if let Some(d) = &self.delta {
            put("delta", d);
        }
        if let Some(l) = self.linking {
            put("linking", &l);
        }
        for w in &self.warnings {
            put("warning", w);
        }
        if let Some(m) = &self.murasugi {
            put("murasugi", m);
        }
        if let Some(a) = &self.augmentation {
            put("augmentation", a);
        }
        for c in &self.battery {
            put(
                "check",
                &format_args!("{} | {} | {}", c.name, c.status, c.evidence),
            );
        }
        if let Some(v) = &self.verdict {
            put("verdict", v);
        }
        if let Some(c) = &self.cited {
            put("cited", c);
        }
        if let Some(r) = &self.reason {
            put("reason", r);
        }
        if let Some(b) = &self.bounds {
            put("bounds", b);
        }
        if let Some(w) = &self.witness {
            put("witness", w);
        }
        if let Some(n) = self.nodes {
            put("nodes", &n);
        }
        if let Some(e) = &self.error {
            put("error", e);
        }
        put("exit", &self.exit);
        put("time-ms", &self.time_ms);
        out
    }

    /// Parses one record; `first_line` is only used for error positions.
    pub fn parse(text: &str, first_line: usize) -> CliResult<Report> {
        let mut mode = None;
        let mut input = None;
        let mut r = Report::new(Mode::Alex, "");
        let mut exit = None;
        let mut time = None;
        for (i, line) in text.lines().enumerate() {
            let line_no = first_line + i;
            let err = |message: String| CliError::Report {
                line: line_no,
                message,
            };
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(": ")
                .ok_or_else(|| err(format!("expected `key: value`, got {line:?}")))?;
            let int = |v: &str| v.parse::<i64>().map_err(|e| err(format!("{key}: {e}")));
            match key {
                "mode" => mode = Some(value.parse::<Mode>().map_err(err)?),
                "input" => input = Some(value.to_string()),
                "p" => r.p = Some(int(value)?),
                "delta" => r.delta = Some(value.into()),
                "linking" => r.linking = Some(int(value)?),
                "warning" => r.warnings.push(value.into()),
                "murasugi" => r.murasugi = Some(value.into()),
                "augmentation" => r.augmentation = Some(value.into()),
                "check" => {
                    let mut parts = value.splitn(3, " | ");
                    match (parts.next(), parts.next(), parts.next()) {
                        (Some(n), Some(s), Some(e)) => r.battery.push(BatteryLine {
                            name: n.into(),
                            status: s.into(),
                            evidence: e.into(),
                        }),
                        _ => return Err(err(format!("malformed check line {value:?}"))),
                    }
                }
                "verdict" => r.verdict = Some(value.into()),
                "cited" => r.cited = Some(value.into()),
                "reason" => r.reason = Some(value.into()),
                "bounds" => r.bounds = Some(value.into()),
                "witness" => r.witness = Some(value.into()),
                "nodes" => r.nodes = Some(value.parse().map_err(|e| err(format!("nodes: {e}")))?),
                "error" => r.error = Some(value.into()),
                "exit" => exit = Some(int(value)? as i32),
                "time-ms" => time = Some(value.parse().map_err(|e| err(format!("time-ms: {e}")))?),
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        let missing = |k: &str| CliError::Report {
            line: first_line,
            message: format!("record lacks `{k}`"),
        };
        r.mode = mode.ok_or_else(|| missing("mode"))?;
        r.input = input.ok_or_else(|| missing("input"))?;
        r.exit = exit.ok_or_else(|| missing("exit"))?;
        r.time_ms = time.ok_or_else(|| missing("time-ms"))?;
        Ok(r)
    }
}

/// Per-category counts for a batch run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Summary {
    pub norm: usize,
    pub not_norm: usize,
    pub inconclusive: usize,
    pub error: usize,
    /// Successful non-`check` lines (`alex`, `murasugi`, `realize`).
    pub ok: usize,
}

impl Summary {
    pub fn tally(reports: &[Report]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match (r.exit, r.mode) {
                (0, Mode::Check) => s.norm += 1,
                (0, _) => s.ok += 1,
                (1, _) => s.not_norm += 1,
                (2, _) => s.inconclusive += 1,
                _ => s.error += 1,
            }
        }
        s
    }

    pub fn emit(&self) -> String {
        format!(
            "summary: norm={} not-norm={} inconclusive={} error={} ok={}\n",
            self.norm, self.not_norm, self.inconclusive, self.error, self.ok
        )
    }

    pub fn parse(line: &str) -> Option<Summary> {
        let rest = line.trim().strip_prefix("summary: ")?;
        let mut s = Summary::default();
        for field in rest.split_whitespace() {
            let (k, v) = field.split_once('=')?;
            let v: usize = v.parse().ok()?;
            match k {
                "norm" => s.norm = v,
                "not-norm" => s.not_norm = v,
                "inconclusive" => s.inconclusive = v,
                "error" => s.error = v,
                "ok" => s.ok = v,
                _ => return None,
            }
        }
        Some(s)
    }
}

/// Reports separated by `---`, then the summary record when present.
pub fn emit_stream(reports: &[Report], summary: Option<&Summary>) -> String {
    let mut out = String::new();
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            out.push_str(SEPARATOR);
            out.push('\n');
        }
        out.push_str(&r.emit());
    }
    if let Some(s) = summary {
        if !reports.is_empty() {
            out.push_str(SEPARATOR);
            out.push('\n');
        }
        out.push_str(&s.emit());
    }
    out
}

pub fn parse_stream(text: &str) -> CliResult<(Vec<Report>, Option<Summary>)> {
    let mut reports = Vec::new();
    let mut summary = None;
    let mut chunk = String::new();
    let mut start = 1;
    let mut flush = |chunk: &mut String, start: usize| -> CliResult<()> {
        if chunk.trim().is_empty() {
        } else if let Some(s) = Summary::parse(chunk) {
            summary = Some(s);
        } else {
            reports.push(Report::parse(chunk, start)?);
        }
        chunk.clear();
        Ok(())
    };
    for (i, line) in text.lines().enumerate() {
        if line == SEPARATOR {
            flush(&mut chunk, start)?;
            start = i + 2;
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
    }
    flush(&mut chunk, start)?;
    Ok((reports, summary))
}

/// The emitted text with every `time-ms` line removed.
pub fn strip_timing(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with("time-ms: "))
        .fold(String::new(), |mut acc, l| {
            acc.push_str(l);
            acc.push('\n');
            acc
        })
}
