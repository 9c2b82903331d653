//! Complete norm decision in `Z[t^±1]`: `P ≐ f(t)·f(t^-1)` read off the
//! factorization of `P`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dense::{GcdDomain, IntegralDomain};
use crate::error::{Error, Result};
use crate::factor::{factor_order, factor_univariate};
use crate::intpoly::{is_perfect_square, IntPoly};
use crate::laurent::LaurentPoly1;

/// Factor data of a univariate norm: `f = root · fixed · Π q^k q̄^(e-k)`
/// for any choice of `0 <= k <= e` per conjugate pair.
struct NormShape {
    root: BigInt,
    fixed: IntPoly,
    pairs: Vec<(IntPoly, IntPoly, u32)>,
}

/// `q(1/t)·t^deg`, made primitive with positive leading coefficient.
fn conj_factor(q: &IntPoly) -> IntPoly {
    q.reversed().normalized()
}

fn norm_shape(p: &LaurentPoly1) -> Result<Option<NormShape>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p.span() % 2 != 0 {
        return Ok(None);
    }
    let (_, dense) = p.to_dense();
    let fz = factor_univariate(&dense)?;
    let content = fz.content.abs();
    if !is_perfect_square(&content) {
        return Ok(None);
    }
    let mut fixed = IntPoly::one();
    let mut pairs = Vec::new();
    for (q, m) in &fz.factors {
        let qb = conj_factor(q);
        if &qb == q {
            if m % 2 != 0 {
                return Ok(None);
            }
            fixed = fixed.mul(&q.pow(m / 2));
            continue;
        }
        match fz.factors.iter().find(|(r, _)| *r == qb) {
            Some((_, mb)) if mb == m => {
                if factor_order(q, &qb).is_lt() {
                    pairs.push((q.clone(), qb, *m));
                }
            }
            _ => return Ok(None),
        }
    }
    Ok(Some(NormShape {
        root: content.sqrt(),
        fixed,
        pairs,
    }))
}

/// Sign convention for witnesses: `f(1) > 0`, or a positive leading
/// coefficient when `f(1) = 0`.
fn sign_normalize(f: IntPoly) -> IntPoly {
    let at_one = f.eval(&BigInt::one());
    let flip = if at_one.is_zero() {
        f.lc().is_negative()
    } else {
        at_one.is_negative()
    };
    if flip {
        f.neg()
    } else {
        f
    }
}

impl NormShape {
    fn assemble(&self, choice: &[u32]) -> LaurentPoly1 {
        let mut f = self.fixed.scale(&self.root);
        for ((q, qb, e), &k) in self.pairs.iter().zip(choice) {
            f = f.mul(&q.pow(k)).mul(&qb.pow(e - k));
        }
        sign_normalize(f).to_laurent()
    }
}

/// A witness `f` with `P ≐ f·f̄`, or `None` when `P` is not such a norm.
/// Takes the later factor (in factor order) from every conjugate pair;
/// `f` starts at `t^0` and follows the sign convention `f(1) > 0`.
pub fn univ_norm_test(p: &LaurentPoly1) -> Result<Option<LaurentPoly1>> {
    Ok(norm_shape(p)?.map(|s| s.assemble(&vec![0; s.pairs.len()])))
}

/// Every `f` up to units with `P ≐ f·f̄`, each normalized as in
/// [`univ_norm_test`]. Empty when `P` is not a norm.
pub fn norm_factorizations(p: &LaurentPoly1) -> Result<Vec<LaurentPoly1>> {
    let Some(shape) = norm_shape(p)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    let mut choice = vec![0u32; shape.pairs.len()];
    loop {
        out.push(shape.assemble(&choice));
        // odometer over 0..=e per pair
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            if choice[i] < shape.pairs[i].2 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
