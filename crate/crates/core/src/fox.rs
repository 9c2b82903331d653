//! Fox free differential calculus and the two-variable Alexander
//! polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly1, LaurentPoly2, Variable};
use crate::matrix::Matrix;
use crate::presentation::{abelianize, GroupPresentation, Letter};

fn ab_monomial(e: (i64, i64)) -> LaurentPoly2 {
    LaurentPoly2::monomial(e.0, e.1, 1)
}

/// `∂w/∂x_j`, abelianized through `abmap`.
pub fn fox_derivative(word: &[Letter], j: usize, abmap: &[(i64, i64)]) -> Result<LaurentPoly2> {
    if j >= abmap.len() {
        return Err(Error::UnknownGenerator(j));
    }
    let mut terms: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
    let mut prefix = (0i64, 0i64);
    for l in word {
        let (a, b) = *abmap.get(l.gen).ok_or(Error::UnknownGenerator(l.gen))?;
        if l.inverse {
            prefix = (prefix.0 - a, prefix.1 - b);
            if l.gen == j {
                *terms.entry(prefix).or_default() -= 1;
            }
        } else {
            if l.gen == j {
                *terms.entry(prefix).or_default() += 1;
            }
            prefix = (prefix.0 + a, prefix.1 + b);
        }
    }
    Ok(LaurentPoly2::from_terms(terms))
}

/// `Σ_j ∂w/∂x_j · (ab(x_j) − 1) − (ab(w) − 1)`, which vanishes for every
/// word by the fundamental formula of Fox calculus.
pub fn fundamental_residual(word: &[Letter], abmap: &[(i64, i64)]) -> Result<LaurentPoly2> {
    let mut acc = LaurentPoly2::zero();
    for (j, &e) in abmap.iter().enumerate() {
        let d = fox_derivative(word, j, abmap)?;
        acc = acc + d * (ab_monomial(e) - LaurentPoly2::one());
    }
    let w = abelianize(word, abmap)?;
    Ok(acc - (ab_monomial(w) - LaurentPoly2::one()))
}

/// Relators × generators matrix of abelianized Fox derivatives.
pub fn alexander_matrix(pres: &GroupPresentation) -> Result<Matrix<LaurentPoly2>> {
    let n = pres.generators().len();
    let rows = pres
        .relators()
        .iter()
        .map(|r| (0..n).map(|j| fox_derivative(r, j, pres.abmap())).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    Ok(Matrix::from_rows(rows, n))
}

/// The square-minus-one-column matrix obtained from the Alexander matrix:
/// with `n` relators one row is dropped (the last by default); with
/// `n - 1` relators nothing is dropped.
fn reduced_matrix(pres: &GroupPresentation, drop: Option<usize>) -> Result<Matrix<LaurentPoly2>> {
    let n = pres.generators().len();
    let r = pres.relators().len();
    let m = alexander_matrix(pres)?;
    if n == 0 {
        return Err(Error::Shape {
            relators: r,
            generators: n,
        });
    }
    if r == n {
        let d = drop.unwrap_or(r - 1);
        if d >= r {
            return Err(Error::BadDropIndex(d));
        }
        Ok(m.without_row(d))
    } else if r + 1 == n {
        match drop {
            Some(d) => Err(Error::BadDropIndex(d)),
            None => Ok(m),
        }
    } else {
        Err(Error::Shape {
            relators: r,
            generators: n,
        })
    }
}

/// Determinants `D_j` of the reduced matrix with column `j` deleted, in
/// column order. Evaluated concurrently.
pub fn column_minors(pres: &GroupPresentation, drop: Option<usize>) -> Result<Vec<LaurentPoly2>> {
    let m = reduced_matrix(pres, drop)?;
    (0..m.cols())
        .into_par_iter()
        .map(|j| m.without_col(j).det())
        .collect()
}

/// `Δ_L(x, y)` in canonical form: the gcd of all column minors, folded
/// in ascending column order. Zero when every minor vanishes.
pub fn alexander_polynomial(pres: &GroupPresentation, drop: Option<usize>) -> Result<LaurentPoly2> {
    let minors = column_minors(pres, drop)?;
    let mut acc = LaurentPoly2::zero();
    for d in &minors {
        if d.is_zero() {
            continue;
        }
        acc = if acc.is_zero() {
            d.canonical()
        } else {
            acc.gcd(d)?
        };
    }
    Ok(acc)
}

/// Torres check for a link with unknotted first component:
/// `Δ(x, 1) ≐ 1 + x + … + x^{|ℓ|−1}`.
pub fn torres_residual(delta: &LaurentPoly2, linking: i64) -> Result<bool> {
    if linking == 0 {
        return Err(Error::ZeroLinking);
    }
    let at_one = delta.specialize(Variable::Y, 1)?;
    let n = linking.unsigned_abs() as i64;
    let expected = LaurentPoly1::from_terms((0..n).map(|e| (e, BigInt::from(1))));
    Ok(at_one.equal_up_to_unit(&expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_to_presentation, BraidWord};

    fn commutator() -> GroupPresentation {
        GroupPresentation::parse("gens: a b\nab: a=x b=y\nrel: a b a^-1 b^-1").unwrap()
    }

    fn p2(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn derivative_examples() {
        let c = commutator();
        let w = &c.relators()[0];
        assert_eq!(fox_derivative(w, 0, c.abmap()).unwrap(), p2("1 - y"));
        assert_eq!(fox_derivative(w, 1, c.abmap()).unwrap(), p2("-1 + x"));
        let a = [Letter::new(0, false)];
        assert!(fox_derivative(&a, 1, c.abmap()).unwrap().is_zero());
        let a_inv = [Letter::new(0, true)];
        assert_eq!(fox_derivative(&a_inv, 0, c.abmap()).unwrap(), p2("-x^-1"));
        assert_eq!(
            fox_derivative(&a, 2, c.abmap()),
            Err(Error::UnknownGenerator(2))
        );
    }

    #[test]
    fn matrix_examples() {
        let m = alexander_matrix(&commutator()).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(m.row(0), [p2("1 - y"), p2("-1 + x")]);
        let empty =
            GroupPresentation::new(vec!["a".into(), "b".into()], vec![], vec![(1, 0), (0, 1)])
                .unwrap();
        let m = alexander_matrix(&empty).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 2));
    }

    #[test]
    fn fundamental_identity_on_commutator() {
        let c = commutator();
        assert!(fundamental_residual(&c.relators()[0], c.abmap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn hopf_link() {
        let pres = braid_to_presentation(&BraidWord::parse("2; 1 1").unwrap()).unwrap();
        assert_eq!(pres.generators().len(), 2);
        let minors = column_minors(&pres, None).unwrap();
        let x1 = p2("x - 1");
        let y1 = p2("y - 1");
        for d in &minors {
            assert!(d.equal_up_to_unit(&x1) || d.equal_up_to_unit(&y1), "{d}");
        }
        assert!(alexander_polynomial(&pres, None).unwrap().is_one());
    }

    #[test]
    fn torus_link_t24_matches_hand_calculation() {
        // ⟨a, b | (ab)^2 (ba)^-2⟩: ∂r/∂a = (1 + xy)(1 - y) by hand
        let hand =
            GroupPresentation::parse("gens: a b\nab: a=x b=y\nrel: a b a b a^-1 b^-1 a^-1 b^-1")
                .unwrap();
        let d = fox_derivative(&hand.relators()[0], 0, hand.abmap()).unwrap();
        assert_eq!(d, &p2("1 + x*y") * &p2("1 - y"));
        let from_hand = alexander_polynomial(&hand, None).unwrap();
        assert_eq!(from_hand, p2("1 + x*y"));
        let pres = braid_to_presentation(&BraidWord::parse("2; 1 1 1 1").unwrap()).unwrap();
        let delta = alexander_polynomial(&pres, None).unwrap();
        assert!(delta.equal_up_to_unit(&from_hand), "{delta}");
    }

    #[test]
    fn shape_errors() {
        let three = GroupPresentation::parse(
            "gens: a b\nab: a=x b=y\nrel: a b a^-1 b^-1\nrel: a b a^-1 b^-1\nrel: a b a^-1 b^-1",
        )
        .unwrap();
        assert_eq!(
            alexander_polynomial(&three, None),
            Err(Error::Shape {
                relators: 3,
                generators: 2
            })
        );
        let pres = braid_to_presentation(&BraidWord::parse("2; 1 1").unwrap()).unwrap();
        assert_eq!(
            alexander_polynomial(&pres, Some(2)),
            Err(Error::BadDropIndex(2))
        );
    }

    #[test]
    fn split_link_has_zero_polynomial() {
        let pres = braid_to_presentation(&BraidWord::parse("2; 1 -1").unwrap()).unwrap();
        assert!(alexander_polynomial(&pres, None).unwrap().is_zero());
    }

    #[test]
    fn torres_examples() {
        assert!(torres_residual(&LaurentPoly2::one(), 1).unwrap());
        assert!(torres_residual(&p2("1 + x*y"), 2).unwrap());
        assert!(!torres_residual(&p2("1 + x*y"), 3).unwrap());
        assert!(torres_residual(&p2("1 + x*y"), -2).unwrap());
        assert_eq!(
            torres_residual(&LaurentPoly2::one(), 0),
            Err(Error::ZeroLinking)
        );
    }
}
