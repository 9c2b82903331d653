//! The group ring `Z[Z/p × Z]`, written in the generators `g` (order p)
//! and `t` (infinite order). Murasugi polynomials and norm witnesses live
//! here.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly1, LaurentPoly2};
use crate::text;

/// `Σ_i g^i · comps[i](t)` with `0 <= i < p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupRingElem {
    p: usize,
    comps: Vec<LaurentPoly1>,
}

/// The unit `±g^r t^s`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnitGR {
    pub negative: bool,
    pub r: usize,
    pub s: i64,
}

fn check_period(p: i64) -> Result<usize> {
    if p < 2 {
        return Err(Error::InvalidPeriod(p));
    }
    Ok(p as usize)
}

impl GroupRingElem {
    pub fn new(p: usize, comps: Vec<LaurentPoly1>) -> Result<Self> {
        check_period(p as i64)?;
        if comps.len() != p {
            return Err(Error::PeriodMismatch(p, comps.len()));
        }
        Ok(GroupRingElem { p, comps })
    }

    pub fn zero(p: usize) -> Result<Self> {
        Self::new(p, vec![LaurentPoly1::zero(); p])
    }

    pub fn one(p: usize) -> Result<Self> {
        Self::monomial(p, 0, 0, 1)
    }

    /// `c · g^i t^j`, with `i` reduced mod p.
    pub fn monomial(p: usize, i: i64, j: i64, c: impl Into<BigInt>) -> Result<Self> {
        Self::from_terms(p, [((i, j), c.into())])
    }

    /// Sum of `c · g^i t^j` over `((i, j), c)`, reducing `i` mod p.
    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), BigInt)>>(
        p: usize,
        it: I,
    ) -> Result<Self> {
        check_period(p as i64)?;
        let mut buckets: Vec<Vec<(i64, BigInt)>> = vec![Vec::new(); p];
        for ((i, j), c) in it {
            buckets[i.rem_euclid(p as i64) as usize].push((j, c));
        }
        Ok(GroupRingElem {
            p,
            comps: buckets.into_iter().map(LaurentPoly1::from_terms).collect(),
        })
    }

    /// Dense constructor: `coeffs[i][j]` is the coefficient of `g^i t^j`.
    pub fn from_rows(p: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() != p {
            return Err(Error::PeriodMismatch(p, rows.len()));
        }
        Self::new(
            p,
            rows.iter()
                .map(|r| LaurentPoly1::from_coeffs(0, r))
                .collect(),
        )
    }

    /// The projection `Z[Z × Z] → Z[Z/p × Z]`, `x ↦ g`, `y ↦ t`.
    pub fn project(poly: &LaurentPoly2, p: i64) -> Result<Self> {
        let p = check_period(p)?;
        Self::from_terms(p, poly.terms().map(|(k, c)| (k, c.clone())))
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn comps(&self) -> &[LaurentPoly1] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &LaurentPoly1 {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(LaurentPoly1::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.comps[0] == LaurentPoly1::one() && self.comps[1..].iter().all(LaurentPoly1::is_zero)
    }

    fn same_period(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PeriodMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_period(other)?;
        Ok(GroupRingElem {
            p: self.p,
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupRingElem {
            p: self.p,
            comps: self.comps.iter().map(|c| -c).collect(),
        }
    }

    /// Convolution in the g-index mod p, product of t-polynomials.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_period(other)?;
        let p = self.p;
        let mut comps = vec![LaurentPoly1::zero(); p];
        for (i, a) in self.comps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.comps.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                comps[k] = &comps[k] + &(a * b);
            }
        }
        Ok(GroupRingElem { p, comps })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        GroupRingElem {
            p: self.p,
            comps: self.comps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// The involution `g ↦ g^-1`, `t ↦ t^-1`.
    pub fn conj(&self) -> Self {
        let p = self.p;
        GroupRingElem {
            p,
            comps: (0..p).map(|i| self.comps[(p - i) % p].conj()).collect(),
        }
    }

    /// Evaluation at `t = 1`, landing in `Z[Z/p]`.
    pub fn augment(&self) -> Vec<BigInt> {
        self.comps.iter().map(LaurentPoly1::coeff_sum).collect()
    }

    /// True when the augmentation is `[1, 0, ..., 0]`, i.e. `a(g, 1) = 1`.
    pub fn has_unit_augmentation(&self) -> bool {
        let aug = self.augment();
        aug[0].is_one() && aug[1..].iter().all(Zero::is_zero)
    }

    /// Evaluation at `g = 1`.
    pub fn eval_g_one(&self) -> LaurentPoly1 {
        self.comps.iter().cloned().sum()
    }

    /// Evaluation at `g = -1`; only defined for even p.
    pub fn eval_g_minus_one(&self) -> Option<LaurentPoly1> {
        if !self.p.is_multiple_of(2) {
            return None;
        }
        Some(
            self.comps
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .sum(),
        )
    }

    /// `P(x, -1)` as an element of `Z[x]/(x^p - 1)`, lifted to degree `< p`.
    pub fn lift_at_minus_one(&self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(
            self.comps
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.eval_minus_one())),
        )
    }

    pub fn min_t(&self) -> Option<i64> {
        self.comps.iter().filter_map(LaurentPoly1::min_exp).min()
    }

    pub fn max_t(&self) -> Option<i64> {
        self.comps.iter().filter_map(LaurentPoly1::max_exp).max()
    }

    /// Max minus min t-exponent across all components.
    pub fn t_span(&self) -> i64 {
        match (self.min_t(), self.max_t()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    /// Multiply by `±g^r t^s`.
    pub fn apply_unit(&self, u: &UnitGR) -> Self {
        let p = self.p;
        let comps = (0..p)
            .map(|i| {
                let c = self.comps[(i + p - u.r % p) % p].shift(u.s);
                if u.negative {
                    -c
                } else {
                    c
                }
            })
            .collect();
        GroupRingElem { p, comps }
    }

    /// Dense coefficient stream in scan order (g-index ascending, then
    /// t-exponent ascending over `[lo, lo + width)`).
    fn stream(&self, lo: i64, width: usize) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.p * width);
        for c in &self.comps {
            for j in 0..width as i64 {
                out.push(c.coeff(lo + j));
            }
        }
        out
    }

    /// Canonical representative of the orbit `{±g^r t^s · P}`.
    ///
    /// The t-support is shifted to start at 0; among the p rotations (each
    /// signed so its first nonzero scanned coefficient is positive) the
    /// lexicographically greatest coefficient stream wins.
    pub fn canonical(&self) -> Self {
        self.canonical_unit()
            .map(|u| self.apply_unit(&u))
            .unwrap_or_else(|| self.clone())
    }

    /// The unit `u` with `canonical() == u · self`; `None` for zero.
    pub fn canonical_unit(&self) -> Option<UnitGR> {
        let lo = self.min_t()?;
        let width = (self.t_span() + 1) as usize;
        let mut best: Option<(Vec<BigInt>, UnitGR)> = None;
        for r in 0..self.p {
            let u = UnitGR {
                negative: false,
                r,
                s: -lo,
            };
            let mut s = self.apply_unit(&u).stream(0, width);
            let negative = s
                .iter()
                .find(|c| !c.is_zero())
                .is_some_and(|c| c.is_negative());
            if negative {
                s.iter_mut().for_each(|c| *c = -&*c);
            }
            let cand = (s, UnitGR { negative, ..u });
            best = match best {
                Some(b) if b.0.cmp(&cand.0) != Ordering::Less => Some(b),
                _ => Some(cand),
            };
        }
        best.map(|b| b.1)
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> Result<bool> {
        self.same_period(other)?;
        Ok(self.canonical() == other.canonical())
    }

    /// As a polynomial in `(g, t)` with g-exponents in `0..p`.
    pub fn to_poly2(&self) -> LaurentPoly2 {
        LaurentPoly2::from_terms(
            self.comps
                .iter()
                .enumerate()
                .flat_map(|(i, c)| c.terms().map(move |(j, a)| ((i as i64, j), a.clone()))),
        )
    }

    /// Parses `g`,`t` text and reduces g-exponents mod p.
    pub fn parse(text: &str, p: i64) -> Result<Self> {
        let p = check_period(p)?;
        let poly = text::parse_poly2(text, ['g', 't'])?;
        Self::from_terms(p, poly.terms().map(|(k, c)| (k, c.clone())))
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_poly2(&self.to_poly2(), ['g', 't']))
    }
}

impl UnitGR {
    pub fn as_elem(&self, p: usize) -> GroupRingElem {
        let c = if self.negative { -1 } else { 1 };
        GroupRingElem::monomial(p, self.r as i64, self.s, c).expect("valid period")
    }
}
