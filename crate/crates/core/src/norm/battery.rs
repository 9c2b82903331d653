//! Exact necessary conditions for `P ≐ a·ā` with `a(g, 1) = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group_ring::GroupRingElem;
use crate::intpoly::{cyclotomic, is_perfect_square, resultant, IntPoly};
use crate::laurent::LaurentPoly1;
use crate::norm::univariate::univ_norm_test;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "n/a",
        })
    }
}

/// The exact value a check was decided on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Evidence {
    SelfConjugate(bool),
    Augmentation(Vec<BigInt>),
    Span(i64),
    /// The integer tested for being a perfect square.
    Integer(BigInt),
    /// Univariate witness, `None` when the specialization is not a norm.
    Witness(Option<LaurentPoly1>),
    Note(String),
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::SelfConjugate(true) => f.write_str("self-conjugate"),
            Evidence::SelfConjugate(false) => f.write_str("not self-conjugate"),
            Evidence::Augmentation(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Evidence::Span(s) => write!(f, "{s}"),
            Evidence::Integer(n) => write!(f, "{n}"),
            Evidence::Witness(Some(w)) => write!(f, "{w}"),
            Evidence::Witness(None) => f.write_str("none"),
            Evidence::Note(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    /// `B1` .. `B7`, with the divisor in brackets for `B5[d]`.
    pub name: String,
    pub status: CheckStatus,
    pub evidence: Evidence,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, evidence: Evidence) -> Self {
        Check {
            name: name.into(),
            status: if pass {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            evidence,
        }
    }

    pub fn description(&self) -> &'static str {
        match self.name.split('[').next().unwrap_or("") {
            "B1" => "self-conjugacy",
            "B2" => "augmentation is a unit g^r",
            "B3" => "even t-span",
            "B4" => "|P(1,-1)| is a square",
            "B5" => "|Res(Phi_d, P(g,-1))| is a square",
            "B6" => "P(1,t) is a norm",
            "B7" => "P(-1,t) is a norm",
            _ => "",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BatteryReport {
    pub checks: Vec<Check>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }
}

fn univariate_check(name: &str, poly: &LaurentPoly1) -> Result<Check> {
    if poly.is_zero() {
        return Ok(Check::new(name, false, Evidence::Witness(None)));
    }
    match univ_norm_test(poly) {
        Ok(w) => Ok(Check::new(name, w.is_some(), Evidence::Witness(w))),
        Err(Error::DegreeBound { degree, bound }) => Ok(Check {
            name: name.into(),
            status: CheckStatus::NotApplicable,
            evidence: Evidence::Note(format!("degree {degree} exceeds bound {bound}")),
        }),
        Err(e) => Err(e),
    }
}

/// Runs B1..B7 in order. B5 has one line per divisor `d > 1` of p; B7 is
/// listed as not applicable for odd p.
pub fn battery(p: &GroupRingElem) -> Result<BatteryReport> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let period = p.p();
    let mut checks = Vec::new();

    let self_conj = p.equal_up_to_unit(&p.conj())?;
    checks.push(Check::new(
        "B1",
        self_conj,
        Evidence::SelfConjugate(self_conj),
    ));

    let aug = p.augment();
    let unit_aug =
        aug.iter().filter(|c| !c.is_zero()).count() == 1 && aug.iter().any(|c| c.abs().is_one());
    checks.push(Check::new("B2", unit_aug, Evidence::Augmentation(aug)));

    let span = p.t_span();
    checks.push(Check::new("B3", span % 2 == 0, Evidence::Span(span)));

    let at_minus_one: BigInt = p.comps().iter().map(LaurentPoly1::eval_minus_one).sum();
    let b4 = at_minus_one.abs();
    checks.push(Check::new(
        "B4",
        is_perfect_square(&b4),
        Evidence::Integer(b4),
    ));

    let lifted = p.lift_at_minus_one();
    let lift = IntPoly::new((0..period as i64).map(|i| lifted.coeff(i)).collect());
    for d in (2..=period as u64).filter(|d| (period as u64).is_multiple_of(*d)) {
        let phi = cyclotomic(d)?;
        let r = resultant(&phi, &lift)?.abs();
        checks.push(Check::new(
            format!("B5[{d}]"),
            is_perfect_square(&r),
            Evidence::Integer(r),
        ));
    }

    checks.push(univariate_check("B6", &p.eval_g_one())?);

    match p.eval_g_minus_one() {
        Some(q) => checks.push(univariate_check("B7", &q)?),
        None => checks.push(Check {
            name: "B7".into(),
            status: CheckStatus::NotApplicable,
            evidence: Evidence::Note("p odd".into()),
        }),
    }
    Ok(BatteryReport { checks })
}
