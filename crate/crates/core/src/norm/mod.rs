//! Deciding whether a group-ring element is a norm `a·ā` up to `±g^r t^s`
//! with `a(g, 1) = 1`.

mod battery;
mod search;
mod univariate;

pub use battery::{battery, BatteryReport, Check, CheckStatus, Evidence};
pub use search::{
    normalize_target, witness_search, ResolvedBounds, SearchBounds, SearchOutcome, SearchResult,
};
pub use univariate::{norm_factorizations, univ_norm_test};

use std::fmt;

use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum InconclusiveReason {
    SpaceExhausted,
    BudgetExhausted,
}

impl fmt::Display for InconclusiveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InconclusiveReason::SpaceExhausted => "search space exhausted",
            InconclusiveReason::BudgetExhausted => "budget exhausted",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// `witness · conj(witness) ≐ P`, re-verified.
    Norm { witness: GroupRingElem },
    /// The first failing battery line.
    NotNorm { check: Check },
    Inconclusive {
        bounds: ResolvedBounds,
        reason: InconclusiveReason,
    },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Norm { .. } => "norm",
            Verdict::NotNorm { .. } => "not-norm",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Battery and decision bundled, as reported by the front end.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decision {
    pub battery: BatteryReport,
    pub verdict: Verdict,
    /// Search nodes spent (zero when the battery already failed).
    pub nodes: u64,
}

/// Battery first; when it passes, a bounded witness search.
pub fn decide(p: &GroupRingElem, bounds: &SearchBounds) -> Result<Verdict> {
    Ok(decide_full(p, bounds)?.verdict)
}

pub fn decide_full(p: &GroupRingElem, bounds: &SearchBounds) -> Result<Decision> {
    let report = battery(p)?;
    if let Some(check) = report.first_failure() {
        return Ok(Decision {
            verdict: Verdict::NotNorm {
                check: check.clone(),
            },
            battery: report,
            nodes: 0,
        });
    }
    let result = witness_search(p, bounds)?;
    let verdict = match result.outcome {
        SearchOutcome::Found(witness) => {
            assert!(
                verify_witness(p, &witness)?,
                "search returned an unverified witness"
            );
            Verdict::Norm { witness }
        }
        SearchOutcome::Exhausted => Verdict::Inconclusive {
            bounds: result.bounds,
            reason: InconclusiveReason::SpaceExhausted,
        },
        SearchOutcome::BudgetExhausted => Verdict::Inconclusive {
            bounds: result.bounds,
            reason: InconclusiveReason::BudgetExhausted,
        },
    };
    Ok(Decision {
        battery: report,
        verdict,
        nodes: result.nodes,
    })
}

fn require_unit_augmentation(a: &GroupRingElem) -> Result<()> {
    if a.has_unit_augmentation() {
        return Ok(());
    }
    let aug: Vec<String> = a.augment().iter().map(ToString::to_string).collect();
    Err(Error::Augmentation(format!("[{}]", aug.join(", "))))
}

/// The canonical form of `a·ā`, for `a` with `a(g, 1) = 1`.
pub fn realize(a: &GroupRingElem) -> Result<GroupRingElem> {
    require_unit_augmentation(a)?;
    Ok(a.mul(&a.conj())?.canonical())
}

/// `a·ā ≐ P` and `a(g, 1) = 1`.
pub fn verify_witness(p: &GroupRingElem, a: &GroupRingElem) -> Result<bool> {
    if p.p() != a.p() {
        return Err(Error::PeriodMismatch(p.p(), a.p()));
    }
    let n = a.mul(&a.conj())?;
    Ok(n.equal_up_to_unit(p)? && a.has_unit_augmentation())
}
