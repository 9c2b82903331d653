//! Complete factorization in `Z[x]` at small degree: squarefree
//! decomposition followed by Kronecker's interpolation method.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dense::{GcdDomain, IntegralDomain};
use crate::error::{Error, Result};
use crate::intpoly::{IntPoly, DEFAULT_DEGREE_BOUND};

/// `content · Π factor^multiplicity`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub content: BigInt,
    /// Primitive irreducible factors with positive leading coefficient,
    /// sorted by degree then coefficients.
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, (q, m)| {
                acc.mul(&q.pow(*m))
            })
    }
}

/// Deterministic factor order: degree, then ascending coefficient list.
pub fn factor_order(a: &IntPoly, b: &IntPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

pub fn factor_univariate(f: &IntPoly) -> Result<Factorization> {
    factor_univariate_with_bound(f, DEFAULT_DEGREE_BOUND)
}

pub fn factor_univariate_with_bound(f: &IntPoly, bound: usize) -> Result<Factorization> {
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroInput);
    };
    if deg > bound {
        return Err(Error::DegreeBound { degree: deg, bound });
    }
    let mut content = f.content();
    if f.lc().is_negative() {
        content = -content;
    }
    let mut prim = f.div_scalar(&content).expect("content divides");
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();

    let zeros = prim.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        factors.push((IntPoly::monomial(BigInt::one(), 1), zeros as u32));
        prim = UPolyExt::drop_low(&prim, zeros);
    }

    for (part, mult) in squarefree_decomposition(&prim) {
        for q in kronecker_split(&part) {
            factors.push((q, mult));
        }
    }
    factors.sort_by(|a, b| factor_order(&a.0, &b.0));
    Ok(Factorization { content, factors })
}

trait UPolyExt {
    fn drop_low(&self, k: usize) -> Self;
}

impl UPolyExt for IntPoly {
    fn drop_low(&self, k: usize) -> Self {
        IntPoly::new(self.coeffs()[k..].to_vec())
    }
}

/// Squarefree parts `(s_i, i)` with `f = Π s_i^i` for primitive `f` with
/// positive leading coefficient; constant parts are omitted.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while c.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.exact_div(&y).expect("gcd divides");
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.normalized(), i));
        }
        i += 1;
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
    }
    if w.degree().unwrap_or(0) > 0 {
        out.push((w.normalized(), i));
    }
    out
}

/// Irreducible factors of a primitive squarefree polynomial.
fn kronecker_split(f: &IntPoly) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut rest = f.normalized();
    let mut k = 1;
    loop {
        let d = rest.degree().unwrap_or(0);
        if d == 0 {
            break;
        }
        if 2 * k > d {
            out.push(rest);
            break;
        }
        match find_factor(&rest, k) {
            Some(h) => {
                rest = rest.exact_div(&h).expect("found factor divides");
                out.push(h);
            }
            None => k += 1,
        }
    }
    out.sort_by(factor_order);
    out
}

/// Positive divisors of `n != 0`.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    if let Some(m) = n.to_u128() {
        let mut d = 1u128;
        while d * d <= m {
            if m % d == 0 {
                small.push(BigInt::from(d));
                if d * d != m {
                    large.push(BigInt::from(m / d));
                }
            }
            d += 1;
        }
    } else {
        let mut d = BigInt::one();
        while &d * &d <= n {
            if n.is_multiple_of(&d) {
                small.push(d.clone());
                if &d * &d != n {
                    large.push(&n / &d);
                }
            }
            d += 1;
        }
    }
    large.reverse();
    small.extend(large);
    small
}

/// A factor of exact degree `k`, found by interpolating through divisors
/// of `f` at `k + 1` integer points. Lexicographically first in the
/// enumeration order, so the result is deterministic.
fn find_factor(f: &IntPoly, k: usize) -> Option<IntPoly> {
    let deg = f.degree()?;
    // candidate points 0, 1, -1, 2, -2, ...
    let mut cands: Vec<(usize, i64, BigInt)> = Vec::new();
    let mut a = 0i64;
    let limit = (4 * deg + 8) as i64;
    while cands.len() < 3 * (k + 1) && a.abs() <= limit {
        let v = f.eval(&BigInt::from(a));
        if v.is_zero() {
            // rational root a
            if k == 1 {
                return Some(IntPoly::new(vec![BigInt::from(-a), BigInt::one()]));
            }
        } else {
            cands.push((divisors(&v).len(), a, v));
        }
        a = if a > 0 { -a } else { -a + 1 };
    }
    if cands.len() < k + 1 {
        return None;
    }
    cands.sort_by(|x, y| {
        x.0.cmp(&y.0)
            .then(x.1.abs().cmp(&y.1.abs()))
            .then(x.1.cmp(&y.1))
    });
    cands.truncate(k + 1);
    let points: Vec<BigInt> = cands.iter().map(|c| BigInt::from(c.1)).collect();
    let choices: Vec<Vec<BigInt>> = cands
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let pos = divisors(&c.2);
            if i == 0 {
                pos
            } else {
                pos.iter().flat_map(|d| [d.clone(), -d]).collect()
            }
        })
        .collect();
    let mut newton = Vec::with_capacity(k + 1);
    search(f, k, &points, &choices, &mut newton)
}

fn search(
    f: &IntPoly,
    k: usize,
    points: &[BigInt],
    choices: &[Vec<BigInt>],
    newton: &mut Vec<BigInt>,
) -> Option<IntPoly> {
    let j = newton.len();
    if j == k + 1 {
        if newton[k].is_zero() {
            return None;
        }
        let mut h = IntPoly::constant(newton[k].clone());
        for m in (0..k).rev() {
            let lin = IntPoly::new(vec![-&points[m], BigInt::one()]);
            h = h.mul(&lin).add(&IntPoly::constant(newton[m].clone()));
        }
        let h = h.normalized();
        if !f.lc().is_multiple_of(&h.lc()) || !f.coeff(0).is_multiple_of(&h.coeff(0)) {
            return None;
        }
        return f.exact_div(&h).map(|_| h);
    }
    'values: for v in &choices[j] {
        // divided difference f[a_0..a_j] from the new value
        let mut t = v.clone();
        for m in 0..j {
            let num = &t - &newton[m];
            let den = &points[j] - &points[m];
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                continue 'values;
            }
            t = q;
        }
        newton.push(t);
        if let Some(h) = search(f, k, points, choices, newton) {
            return Some(h);
        }
        newton.pop();
    }
    None
}
