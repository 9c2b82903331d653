//! Dense integer polynomials: cyclotomic polynomials, Sylvester
//! resultants and perfect-square tests.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::dense::{IntegralDomain, UPoly};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly1;
use crate::matrix::Matrix;

/// Dense polynomial in `Z[x]`, ascending coefficients.
pub type IntPoly = UPoly<BigInt>;

/// Largest degree accepted by the factorizer unless overridden.
pub const DEFAULT_DEGREE_BOUND: usize = 24;

pub fn int_poly(coeffs: &[i64]) -> IntPoly {
    UPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

impl UPoly<BigInt> {
    /// Horner evaluation at an integer.
    pub fn eval(&self, a: &BigInt) -> BigInt {
        self.coeffs()
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * a + c)
    }

    pub fn to_laurent(&self) -> LaurentPoly1 {
        LaurentPoly1::from_dense(0, self)
    }

    /// Coefficient list reversed: `x^deg · f(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs().to_vec();
        c.reverse();
        UPoly::new(c)
    }
}

/// The d-th cyclotomic polynomial, `1 <= d <= 1000`.
pub fn cyclotomic(d: u64) -> Result<IntPoly> {
    if !(1..=1000).contains(&d) {
        return Err(Error::CyclotomicRange(d));
    }
    // Φ_e for every divisor e of d, in increasing order
    let divisors: Vec<u64> = (1..=d).filter(|e| d.is_multiple_of(*e)).collect();
    let mut table: Vec<(u64, IntPoly)> = Vec::with_capacity(divisors.len());
    for &e in &divisors {
        let mut num = IntPoly::monomial(BigInt::from(1), e as usize).sub(&IntPoly::one());
        for (f, phi) in &table {
            if e % f == 0 {
                num = num
                    .exact_div(phi)
                    .expect("cyclotomic factors divide x^e - 1");
            }
        }
        table.push((e, num));
    }
    Ok(table.pop().expect("d is its own divisor").1)
}

/// `Res(f, g)` as the determinant of the Sylvester matrix (rows of `f`
/// first, coefficients in descending order).
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    let Some(m) = f.degree() else {
        return Err(Error::ZeroInput);
    };
    let Some(n) = g.degree() else {
        return Ok(BigInt::zero());
    };
    let size = m + n;
    let mut s: Matrix<BigInt> = Matrix::zeros(size, size);
    for i in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            s.set(n + i, i + k, c.clone());
        }
    }
    s.det_bareiss()
}

/// `n >= 0` and `n` is the square of an integer.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}
