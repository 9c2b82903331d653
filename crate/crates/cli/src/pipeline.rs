//! Link input → Δ_L → Murasugi polynomial → verdict.

use std::path::{Path, PathBuf};
use std::time::Instant;

use murasugi_core::braid::{analyze_closure, braid_to_presentation};
use murasugi_core::fox::alexander_polynomial;
use murasugi_core::norm::{decide_full, realize, Verdict};
use murasugi_core::{BraidWord, GroupPresentation, GroupRingElem, LaurentPoly2, Variable};
use num_traits::Zero;

use crate::config::Settings;
use crate::error::{exit, CliError, CliResult};
use crate::report::{BatteryLine, Mode, Report};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinkInput {
    Braid(String),
    /// A presentation file.
    Presentation(PathBuf),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Input {
    Link(LinkInput),
    /// A group-ring element in `g`, `t`.
    Poly(String),
}

impl Input {
    pub fn braid(text: &str) -> Self {
        Input::Link(LinkInput::Braid(text.to_string()))
    }

    pub fn presentation(path: impl AsRef<Path>) -> Self {
        Input::Link(LinkInput::Presentation(path.as_ref().to_path_buf()))
    }

    pub fn poly(text: &str) -> Self {
        Input::Poly(text.to_string())
    }

    /// Text for the report's `input` field.
    pub fn label(&self) -> String {
        match self {
            Input::Link(LinkInput::Braid(b)) => format!("braid {}", b.trim()),
            Input::Link(LinkInput::Presentation(p)) => format!("presentation {}", p.display()),
            Input::Poly(s) => format!("poly {}", s.trim()),
        }
    }
}

/// Δ_L together with what is known about the link.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlexOutput {
    pub delta: LaurentPoly2,
    /// Only known for braid inputs.
    pub linking: Option<i64>,
    pub warnings: Vec<String>,
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

const ZERO_LINKING: &str = "linking number is 0; the two-component theory assumes it is nonzero";

pub fn alexander(input: &LinkInput, drop: Option<usize>) -> CliResult<AlexOutput> {
    let (pres, linking) = match input {
        LinkInput::Braid(text) => {
            let braid = BraidWord::parse(text)?;
            let info = analyze_closure(&braid);
            (braid_to_presentation(&braid)?, Some(info.linking_number))
        }
        LinkInput::Presentation(path) => (GroupPresentation::parse(&read(path)?)?, None),
    };
    let delta = alexander_polynomial(&pres, drop)?;
    let mut warnings = Vec::new();
    match linking {
        Some(0) => warnings.push(ZERO_LINKING.to_string()),
        // |Δ(1, 1)| = |ℓ| for two-component links
        None if delta.specialize(Variable::X, 1)?.coeff_sum().is_zero() => {
            warnings.push(format!("{ZERO_LINKING} (from Δ(1,1) = 0)"))
        }
        _ => {}
    }
    if delta.is_zero() {
        warnings.push("Δ is zero (split link)".to_string());
    }
    Ok(AlexOutput {
        delta,
        linking,
        warnings,
    })
}

fn augmentation_text(p: &GroupRingElem) -> String {
    let parts: Vec<String> = p.augment().iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Fills the link and Murasugi fields of `report` and returns the element.
fn murasugi_into(
    report: &mut Report,
    input: &Input,
    settings: &Settings,
) -> CliResult<GroupRingElem> {
    let p = settings.period()?;
    report.p = Some(p);
    let elem = match input {
        Input::Link(link) => {
            let alex = alexander(link, settings.drop_relator)?;
            report.delta = Some(alex.delta.to_string());
            report.linking = alex.linking;
            report.warnings.extend(alex.warnings);
            GroupRingElem::project(&alex.delta, p)?.canonical()
        }
        Input::Poly(text) => GroupRingElem::parse(text, p)?,
    };
    report.murasugi = Some(elem.canonical().to_string());
    report.augmentation = Some(augmentation_text(&elem));
    Ok(elem)
}

fn finish(mut report: Report, result: CliResult<()>, start: Instant) -> Report {
    if let Err(e) = result {
        report.error = Some(e.to_string());
        report.exit = e.exit_code();
    }
    report.time_ms = start.elapsed().as_millis() as u64;
    report
}

/// Runs one input through `mode`. Errors are recorded in the report, never
/// returned.
pub fn run(mode: Mode, input: &Input, settings: &Settings) -> Report {
    let start = Instant::now();
    let mut report = Report::new(mode, input.label());
    let result = match mode {
        Mode::Alex => alex_into(&mut report, input, settings),
        Mode::Murasugi => murasugi_into(&mut report, input, settings).map(|_| ()),
        Mode::Check => check_into(&mut report, input, settings),
        Mode::Realize => realize_into(&mut report, input, settings),
    };
    finish(report, result, start)
}

fn alex_into(report: &mut Report, input: &Input, settings: &Settings) -> CliResult<()> {
    let Input::Link(link) = input else {
        return Err(CliError::Usage("alex needs a braid or presentation".into()));
    };
    let alex = alexander(link, settings.drop_relator)?;
    report.delta = Some(alex.delta.to_string());
    report.linking = alex.linking;
    report.warnings.extend(alex.warnings);
    Ok(())
}

fn check_into(report: &mut Report, input: &Input, settings: &Settings) -> CliResult<()> {
    let elem = murasugi_into(report, input, settings)?;
    let decision = decide_full(&elem, &settings.bounds)?;
    report.battery = decision
        .battery
        .checks
        .iter()
        .map(|c| BatteryLine {
            name: c.name.clone(),
            status: c.status.to_string(),
            evidence: c.evidence.to_string(),
        })
        .collect();
    report.verdict = Some(decision.verdict.kind().to_string());
    report.nodes = Some(decision.nodes);
    match &decision.verdict {
        Verdict::Norm { witness } => {
            report.witness = Some(witness.to_string());
            report.exit = exit::NORM;
        }
        Verdict::NotNorm { check } => {
            report.cited = Some(format!("{} | {}", check.name, check.evidence));
            report.exit = exit::NOT_NORM;
        }
        Verdict::Inconclusive { bounds, reason } => {
            report.reason = Some(reason.to_string());
            report.bounds = Some(format!(
                "max-coeff={} max-tdeg={} budget={}",
                bounds.max_abs_coeff, bounds.max_t_degree, bounds.budget
            ));
            report.exit = exit::INCONCLUSIVE;
        }
    }
    Ok(())
}

fn realize_into(report: &mut Report, input: &Input, settings: &Settings) -> CliResult<()> {
    let Input::Poly(text) = input else {
        return Err(CliError::Usage("realize needs a polynomial a(g, t)".into()));
    };
    let p = settings.period()?;
    report.p = Some(p);
    let a = GroupRingElem::parse(text, p)?;
    report.augmentation = Some(augmentation_text(&a));
    report.murasugi = Some(realize(&a)?.to_string());
    Ok(())
}
