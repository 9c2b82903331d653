//! Bounded exhaustive search for `a` with `a·ā ≐ P` and `a(g, 1) = 1`.
//!
//! A norm `a·ā` with `a(g,1) = 1` has augmentation exactly 1 and is exactly
//! self-conjugate, which pins the unit: `P` is rescaled to the unique
//! `Q = ±g^r t^s P` with those two properties, and `a·ā = Q` is solved
//! exactly. Write `a = Σ_{j=0..m} A_j t^j` with `A_j ∈ Z[Z/p]`, `A_0` and
//! `A_m` nonzero. The search runs over the degree `m`, over the finitely
//! many univariate norm splittings `f` of `Q(1,t)` (which fix `ε(A_j)`),
//! and for even `p` over those of `Q(-1,t)`; then over layers, pairing
//! `A_i` with `A_{m-i}`. The t^(m-i) coefficient of `a·ā` is linear in
//! `A_{m-i}` once `A_0..A_i` and `A_{m-i+1}..A_m` are fixed, and the last
//! one or two unknowns follow from `Σ A_j = 1`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group_ring::{GroupRingElem, UnitGR};
use crate::laurent::LaurentPoly1;
use crate::norm::univariate::norm_factorizations;

/// Bounds on the witness `a = Σ c_ij g^i t^j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SearchBounds {
    /// `|c_ij| <= max_abs_coeff`.
    pub max_abs_coeff: u32,
    /// `0 <= j <= max_t_degree`; `None` means half the t-span of `P`.
    pub max_t_degree: Option<u32>,
    /// Candidate evaluations allowed before giving up.
    pub budget: u64,
    pub parallel: bool,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_abs_coeff: 3,
            max_t_degree: None,
            budget: 10_000_000,
            parallel: false,
        }
    }
}

impl SearchBounds {
    pub fn resolve(&self, p: &GroupRingElem) -> ResolvedBounds {
        ResolvedBounds {
            max_abs_coeff: self.max_abs_coeff,
            max_t_degree: self.max_t_degree.unwrap_or((p.t_span().max(0) / 2) as u32),
            budget: self.budget,
        }
    }
}

/// Bounds with the t-degree default filled in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ResolvedBounds {
    pub max_abs_coeff: u32,
    pub max_t_degree: u32,
    pub budget: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchOutcome {
    /// The lexicographically smallest witness within bounds.
    Found(GroupRingElem),
    /// The whole space was searched and holds no witness.
    Exhausted,
    /// The node budget ran out first; no conclusion.
    BudgetExhausted,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub bounds: ResolvedBounds,
    /// Candidate evaluations spent.
    pub nodes: u64,
}

type Vector = Vec<i64>;

/// `X·Y` in `Z[Z/p]`.
fn gmul(x: &[i64], y: &[i64]) -> Vector {
    let p = x.len();
    let mut out = vec![0i64; p];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            out[(i + j) % p] += a * b;
        }
    }
    out
}

fn gconj(x: &[i64]) -> Vector {
    let p = x.len();
    (0..p).map(|i| x[(p - i) % p]).collect()
}

fn alt_sum(x: &[i64]) -> i64 {
    x.iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { c } else { -c })
        .sum()
}

/// The unit `u` with `u·P` of augmentation exactly 1 and t-support
/// symmetric about 0, together with `u·P`. `None` when no unit does it.
pub fn normalize_target(p: &GroupRingElem) -> Option<(UnitGR, GroupRingElem)> {
    let aug = p.augment();
    let nonzero: Vec<usize> = (0..aug.len()).filter(|&i| !aug[i].is_zero()).collect();
    if nonzero.len() != 1 || !aug[nonzero[0]].abs().is_one() {
        return None;
    }
    let r0 = nonzero[0];
    let (lo, hi) = (p.min_t()?, p.max_t()?);
    if (lo + hi) % 2 != 0 {
        return None;
    }
    let u = UnitGR {
        negative: aug[r0].is_negative(),
        r: (p.p() - r0) % p.p(),
        s: -(lo + hi) / 2,
    };
    let q = p.apply_unit(&u);
    (q.conj() == q).then_some((u, q))
}

type Key = (Option<i64>, Option<i64>);

/// Coefficient vectors in `[-c, c]^p` grouped by `(ε, value at g = -1)`;
/// the second entry is only tracked for even p.
struct Buckets {
    p: usize,
    map: HashMap<Key, Vec<Vector>>,
}

impl Buckets {
    fn key(p: usize, eps: Option<i64>, alt: Option<i64>) -> Key {
        (eps, if p.is_multiple_of(2) { alt } else { None })
    }

    /// Generates every bucket the layouts refer to, charging one node per
    /// vector; `None` when the budget runs out.
    fn build(problem: &Problem, layouts: &[Layout]) -> Option<Self> {
        let p = problem.p;
        let mut map = HashMap::new();
        for layout in layouts {
            for j in 0..=layout.m {
                let key = Self::key(p, layout.eps[j], layout.alt[j]);
                if let std::collections::hash_map::Entry::Vacant(e) = map.entry(key) {
                    e.insert(generate(problem, key)?);
                }
            }
        }
        Some(Buckets { p, map })
    }

    fn get(&self, eps: Option<i64>, alt: Option<i64>) -> &[Vector] {
        &self.map[&Self::key(self.p, eps, alt)]
    }
}

/// Vectors in the box with the sums prescribed by `key`, in lex order.
fn generate(problem: &Problem, key: Key) -> Option<Vec<Vector>> {
    let p = problem.p;
    // coordinates split into classes whose sums are prescribed
    let (classes, targets): (Vec<usize>, Vec<Option<i64>>) = match key {
        (Some(e), Some(h)) => {
            if (e + h) % 2 != 0 {
                return Some(Vec::new());
            }
            (
                (0..p).map(|i| i % 2).collect(),
                vec![Some((e + h) / 2), Some((e - h) / 2)],
            )
        }
        (Some(e), None) => (vec![0; p], vec![Some(e)]),
        (None, _) => (vec![0; p], vec![None]),
    };
    let mut rem = vec![0i64; targets.len()];
    for &k in &classes {
        rem[k] += 1;
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; p];
    let mut sums = vec![0i64; targets.len()];
    let ok = fill(
        problem,
        &classes,
        &targets,
        &mut rem,
        &mut sums,
        0,
        &mut cur,
        &mut |v| {
            if key.0.is_none()
                && key
                    .1
                    .is_some_and(|h| p.is_multiple_of(2) && alt_sum(v) != h)
            {
                return;
            }
            out.push(v.to_vec());
        },
    );
    ok.then_some(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    problem: &Problem,
    classes: &[usize],
    targets: &[Option<i64>],
    rem: &mut [i64],
    sums: &mut [i64],
    i: usize,
    cur: &mut Vector,
    emit: &mut dyn FnMut(&[i64]),
) -> bool {
    if i == cur.len() {
        if !problem.tick() {
            return false;
        }
        emit(cur);
        return true;
    }
    let c = problem.c;
    let k = classes[i];
    rem[k] -= 1;
    for v in -c..=c {
        let s = sums[k] + v;
        if targets[k].is_some_and(|t| (t - s).abs() > c * rem[k]) {
            continue;
        }
        cur[i] = v;
        sums[k] = s;
        let ok = fill(problem, classes, targets, rem, sums, i + 1, cur, emit);
        sums[k] = s - v;
        if !ok {
            rem[k] += 1;
            return false;
        }
    }
    rem[k] += 1;
    true
}

/// Determinant by Bareiss elimination over i128; `None` on overflow.
fn det_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Some(0);
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    let d = m[n - 1][n - 1];
    Some(if negate { -d } else { d })
}

/// Solver for `X·B = R` in `Z[Z/p]` with B fixed: Cramer's rule on the
/// circulant matrix of right multiplication by B.
struct RightDivider {
    matrix: Vec<Vec<i128>>,
    det: Option<i128>,
}

impl RightDivider {
    fn new(b: &[i64]) -> Self {
        let p = b.len();
        // (X·B)_k = Σ_i X_i B_{k-i}
        let matrix: Vec<Vec<i128>> = (0..p)
            .map(|k| (0..p).map(|i| b[(k + p - i) % p] as i128).collect())
            .collect();
        let det = det_i128(matrix.clone());
        RightDivider { matrix, det }
    }

    /// `Some(Some(x))` for the unique integral solution, `Some(None)` when
    /// the unique rational solution is not integral, `None` when B is a
    /// zero divisor (or arithmetic overflowed) and the caller must
    /// enumerate.
    fn solve(&self, r: &[i64]) -> Option<Option<Vector>> {
        let det = self.det.filter(|&d| d != 0)?;
        let p = r.len();
        let mut x = Vec::with_capacity(p);
        for i in 0..p {
            let mut m = self.matrix.clone();
            for (k, row) in m.iter_mut().enumerate() {
                row[i] = r[k] as i128;
            }
            let di = det_i128(m)?;
            if di % det != 0 {
                return Some(None);
            }
            x.push(i64::try_from(di / det).ok()?);
        }
        Some(Some(x))
    }
}

struct Problem {
    p: usize,
    c: i64,
    /// Coefficients of `Q` at `t^k` for `k >= 0`, zero beyond its degree.
    q: Vec<Vector>,
    width: usize,
    budget: u64,
    nodes: AtomicU64,
    over: AtomicBool,
}

impl Problem {
    fn q_at(&self, k: usize) -> Vector {
        self.q.get(k).cloned().unwrap_or_else(|| vec![0; self.p])
    }

    /// Charges one node; false once the budget is spent.
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget {
            self.over.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn in_box(&self, v: &[i64]) -> bool {
        v.iter().all(|x| x.abs() <= self.c)
    }
}

/// Per-degree constraints: `ε(A_j)` and, for even p, `A_j(-1)`.
#[derive(Clone)]
struct Layout {
    m: usize,
    eps: Vec<Option<i64>>,
    alt: Vec<Option<i64>>,
}

impl Layout {
    fn admits(&self, j: usize, v: &[i64]) -> bool {
        self.eps[j].is_none_or(|e| v.iter().sum::<i64>() == e)
            && (!v.len().is_multiple_of(2) || self.alt[j].is_none_or(|h| alt_sum(v) == h))
    }
}

/// Shifts `t^s f` of each univariate witness that fit in `[0, m]`, as
/// dense coefficient lists of length `m + 1`. `f(1)` is forced to `target`.
fn placements(ws: &[LaurentPoly1], m: usize, target: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for w in ws {
        let w = if w.coeff_sum() == BigInt::from(target) {
            w.clone()
        } else {
            -w
        };
        let Some(coeffs): Option<Vec<i64>> = (0..=w.max_exp().unwrap_or(0))
            .map(|e| w.coeff(e).to_i64())
            .collect()
        else {
            continue;
        };
        let d = coeffs.len() - 1;
        for s in 0..=m.saturating_sub(d) {
            if d > m {
                break;
            }
            let mut v = vec![0i64; m + 1];
            v[s..s + coeffs.len()].copy_from_slice(&coeffs);
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Searches for the lexicographically smallest `a` (coefficient stream in
/// g-index then t-exponent order) with `a·ā ≐ P`, `a(g,1) = 1` and t-support
/// starting at 0, within `bounds`.
pub fn witness_search(p: &GroupRingElem, bounds: &SearchBounds) -> Result<SearchResult> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let resolved = bounds.resolve(p);
    let done = |outcome, nodes| SearchResult {
        outcome,
        bounds: resolved,
        nodes,
    };
    let Some((_, q)) = normalize_target(p) else {
        return Ok(done(SearchOutcome::Exhausted, 0));
    };
    let period = q.p();
    let half = (q.t_span() / 2) as usize;
    let c = resolved.max_abs_coeff as i64;
    let d_max = resolved.max_t_degree as usize;

    // a·ā has coefficients bounded by p (m + 1) c^2; anything larger rules
    // out every candidate
    let mut qk: Vec<Vector> = Vec::with_capacity(half + 1);
    for k in 0..=half as i64 {
        let row: Option<Vector> = q
            .comps()
            .iter()
            .map(|comp| comp.coeff(k).to_i64())
            .collect();
        match row {
            Some(r) => qk.push(r),
            None => return Ok(done(SearchOutcome::Exhausted, 0)),
        }
    }

    let w1 = match norm_factorizations(&q.eval_g_one()) {
        Ok(w) => Some(w),
        Err(Error::DegreeBound { .. }) => None,
        Err(e) => return Err(e),
    };
    let w2 = match q.eval_g_minus_one() {
        Some(qm) => match norm_factorizations(&qm) {
            Ok(w) => Some(w),
            Err(Error::DegreeBound { .. }) => None,
            Err(e) => return Err(e),
        },
        None => None,
    };

    let problem = Problem {
        p: period,
        c,
        q: qk,
        width: d_max + 1,
        budget: resolved.budget,
        nodes: AtomicU64::new(0),
        over: AtomicBool::new(false),
    };

    let mut layouts = Vec::new();
    for m in half..=d_max {
        let eps_choices: Vec<Vec<Option<i64>>> = match &w1 {
            Some(ws) => placements(ws, m, 1)
                .into_iter()
                .map(|v| v.into_iter().map(Some).collect())
                .collect(),
            None => vec![vec![None; m + 1]],
        };
        let alt_choices: Vec<Vec<Option<i64>>> = match (&w2, period % 2 == 0) {
            (Some(ws), true) => placements(ws, m, 1)
                .into_iter()
                .map(|v| v.into_iter().map(Some).collect())
                .collect(),
            _ => vec![vec![None; m + 1]],
        };
        for e in &eps_choices {
            for a in &alt_choices {
                layouts.push(Layout {
                    m,
                    eps: e.clone(),
                    alt: a.clone(),
                });
            }
        }
    }

    let Some(buckets) = Buckets::build(&problem, &layouts) else {
        return Ok(done(SearchOutcome::BudgetExhausted, problem.budget));
    };
    let mut solutions: Vec<Vec<Vector>> = Vec::new();
    for layout in &layouts {
        let firsts: Vec<&Vector> = buckets
            .get(layout.eps[0], layout.alt[0])
            .iter()
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        let run = |a0: &&Vector| -> Vec<Vec<Vector>> {
            let mut found = Vec::new();
            search_from(&problem, layout, a0, &buckets, &mut found);
            found
        };
        let found: Vec<Vec<Vector>> = if bounds.parallel {
            firsts.par_iter().flat_map_iter(run).collect()
        } else {
            firsts.iter().flat_map(run).collect()
        };
        solutions.extend(found);
        if problem.over.load(Ordering::Relaxed) {
            break;
        }
    }
    let nodes = problem.nodes.load(Ordering::Relaxed).min(problem.budget);
    if problem.over.load(Ordering::Relaxed) {
        return Ok(done(SearchOutcome::BudgetExhausted, nodes));
    }
    let best = solutions
        .into_iter()
        .map(|a| (stream(&a, period, problem.width), a))
        .min_by(|x, y| x.0.cmp(&y.0));
    Ok(match best {
        Some((_, a)) => done(SearchOutcome::Found(to_elem(&a, period)?), nodes),
        None => done(SearchOutcome::Exhausted, nodes),
    })
}

fn stream(a: &[Vector], p: usize, width: usize) -> Vec<i64> {
    let mut out = vec![0i64; p * width];
    for (j, aj) in a.iter().enumerate() {
        for (i, &x) in aj.iter().enumerate() {
            out[i * width + j] = x;
        }
    }
    out
}

fn to_elem(a: &[Vector], p: usize) -> Result<GroupRingElem> {
    GroupRingElem::from_terms(
        p,
        a.iter().enumerate().flat_map(|(j, aj)| {
            aj.iter()
                .enumerate()
                .map(move |(i, &x)| ((i as i64, j as i64), BigInt::from(x)))
        }),
    )
}

/// Full check of `a·ā = Q` and `Σ A_j = 1`.
fn verify(problem: &Problem, a: &[Vector]) -> bool {
    let p = problem.p;
    let mut total = vec![0i64; p];
    for aj in a {
        for (t, x) in total.iter_mut().zip(aj) {
            *t += x;
        }
    }
    if total[0] != 1 || total[1..].iter().any(|&x| x != 0) {
        return false;
    }
    let m = a.len() - 1;
    let bars: Vec<Vector> = a.iter().map(|x| gconj(x)).collect();
    (0..=m).all(|k| {
        let mut acc = vec![0i64; p];
        for j in 0..=m - k {
            for (s, v) in acc.iter_mut().zip(gmul(&a[j + k], &bars[j])) {
                *s += v;
            }
        }
        acc == problem.q_at(k)
    })
}

/// Whether coordinates of `e_0 - partial` are reachable with `left` more
/// box vectors.
fn reachable(problem: &Problem, partial: &[i64], left: usize) -> bool {
    let lim = problem.c * left as i64;
    partial
        .iter()
        .enumerate()
        .all(|(i, &s)| ((i == 0) as i64 - s).abs() <= lim)
}

fn search_from(
    problem: &Problem,
    layout: &Layout,
    a0: &Vector,
    buckets: &Buckets,
    found: &mut Vec<Vec<Vector>>,
) {
    if !problem.tick() {
        return;
    }
    let m = layout.m;
    let p = problem.p;
    let mut a: Vec<Option<Vector>> = vec![None; m + 1];
    a[0] = Some(a0.clone());
    if m == 0 {
        let full = vec![a0.clone()];
        if verify(problem, &full) {
            found.push(full);
        }
        return;
    }
    let div = RightDivider::new(&gconj(a0));
    let bar0 = gconj(a0);
    if m == 1 {
        let a1: Vector = (0..p).map(|i| (i == 0) as i64 - a0[i]).collect();
        if a1.iter().all(|&x| x == 0) || !problem.in_box(&a1) || !layout.admits(1, &a1) {
            return;
        }
        let full = vec![a0.clone(), a1];
        if verify(problem, &full) {
            found.push(full);
        }
        return;
    }
    // A_m from A_m·Ā_0 = Q_m
    let target = problem.q_at(m);
    let ams: Vec<Vector> = candidates_for(problem, layout, m, &div, &bar0, &target, buckets);
    for am in ams {
        if am.iter().all(|&x| x == 0) {
            continue;
        }
        a[m] = Some(am);
        layer(problem, layout, 1, &mut a, &div, &bar0, buckets, found);
        if problem.over.load(Ordering::Relaxed) {
            return;
        }
    }
}

/// Values X admitted at index j with `X·Ā_0 = target`.
fn candidates_for(
    problem: &Problem,
    layout: &Layout,
    j: usize,
    div: &RightDivider,
    bar0: &[i64],
    target: &[i64],
    buckets: &Buckets,
) -> Vec<Vector> {
    match div.solve(target) {
        Some(Some(x)) => {
            if problem.in_box(&x) && layout.admits(j, &x) {
                vec![x]
            } else {
                Vec::new()
            }
        }
        Some(None) => Vec::new(),
        None => {
            let mut out = Vec::new();
            for x in buckets.get(layout.eps[j], layout.alt[j]) {
                if !problem.tick() {
                    break;
                }
                if gmul(x, bar0) == target {
                    out.push(x.clone());
                }
            }
            out
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn layer(
    problem: &Problem,
    layout: &Layout,
    i: usize,
    a: &mut Vec<Option<Vector>>,
    div: &RightDivider,
    bar0: &[i64],
    buckets: &Buckets,
    found: &mut Vec<Vec<Vector>>,
) {
    let m = layout.m;
    let p = problem.p;
    let partial: Vector = (0..p)
        .map(|g| a.iter().flatten().map(|v| v[g]).sum())
        .collect();
    let remaining = m + 1 - a.iter().flatten().count();
    if !reachable(problem, &partial, remaining) {
        return;
    }
    let j = m - i;
    if remaining <= 2 {
        // enumerate A_i when two are open; the last follows from Σ A_j = 1
        let open: Vec<usize> = (0..=m).filter(|&k| a[k].is_none()).collect();
        let finish =
            |a: &mut Vec<Option<Vector>>, partial: &[i64], found: &mut Vec<Vec<Vector>>| {
                let last = *open.last().expect("an open index");
                let x: Vector = (0..p).map(|g| (g == 0) as i64 - partial[g]).collect();
                if !problem.in_box(&x) || !layout.admits(last, &x) {
                    return;
                }
                a[last] = Some(x);
                let full: Vec<Vector> = a.iter().map(|v| v.clone().expect("assigned")).collect();
                if verify(problem, &full) {
                    found.push(full);
                }
                a[last] = None;
            };
        if open.len() == 1 {
            finish(a, &partial, found);
            return;
        }
        let first = open[0];
        for x in buckets.get(layout.eps[first], layout.alt[first]) {
            if !problem.tick() {
                return;
            }
            let part: Vector = partial.iter().zip(x).map(|(s, v)| s + v).collect();
            a[first] = Some(x.clone());
            finish(a, &part, found);
        }
        a[first] = None;
        return;
    }
    // Q_{m-i} = A_{m-i}·Ā_0 + Σ_{k=1..i} A_{m-i+k}·Ā_k
    for x in buckets.get(layout.eps[i], layout.alt[i]) {
        if !problem.tick() {
            return;
        }
        a[i] = Some(x.clone());
        let mut rhs = problem.q_at(j);
        for k in 1..=i {
            let prod = gmul(
                a[j + k].as_ref().expect("assigned"),
                &gconj(a[k].as_ref().expect("assigned")),
            );
            for (r, v) in rhs.iter_mut().zip(prod) {
                *r -= v;
            }
        }
        for y in candidates_for(problem, layout, j, div, bar0, &rhs, buckets) {
            a[j] = Some(y);
            layer(problem, layout, i + 1, a, div, bar0, buckets, found);
            a[j] = None;
            if problem.over.load(Ordering::Relaxed) {
                a[i] = None;
                return;
            }
        }
        a[i] = None;
    }
}
