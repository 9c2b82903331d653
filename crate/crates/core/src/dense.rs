//! Dense univariate polynomials over an integral domain, used as the
//! recursive representation `Z[x][y]` behind bivariate gcd and exact
//! division, and as `Z[x]` for the integer-polynomial tools.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Commutative ring without zero divisors in which exact division can be
/// attempted.
pub trait IntegralDomain: Clone + PartialEq + Debug + Send + Sync {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `self = other * q`, or `None` if `other` does not divide.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_elem();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Integral domain with gcds and a distinguished "positive" associate.
pub trait GcdDomain: IntegralDomain {
    /// Gcd normalized to the positive associate; `gcd(0, 0) = 0`.
    fn gcd(&self, other: &Self) -> Self;
    /// True when the leading sign is negative (the normal form flips it).
    fn lead_negative(&self) -> bool;

    fn normalized(&self) -> Self {
        if self.lead_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl IntegralDomain for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
}

impl GcdDomain for BigInt {
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn lead_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Dense polynomial `c[0] + c[1] v + ... + c[n] v^n`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly<R> {
    coeffs: Vec<R>,
}

impl<R: IntegralDomain> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one_elem())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * v^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero_elem(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero_elem)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero_elem)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero_elem(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &R) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|a| a.exact_div(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("prem by zero polynomial");
        let Some(da) = self.degree() else {
            return self.clone();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lc();
        let mut e = (da - db + 1) as u32;
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let t = b.scale(&r.lc()).shift(dr - db);
            r = IntegralDomain::sub(&r.scale(&lb), &t);
            e -= 1;
        }
        r.scale(&lb.pow(e))
    }

    pub fn derivative(&self) -> Self
    where
        R: From<i64>,
    {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&R::from(k as i64)))
                .collect(),
        )
    }
}

impl<R: IntegralDomain> IntegralDomain for UPoly<R> {
    fn zero_elem() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn one_elem() -> Self {
        UPoly {
            coeffs: vec![R::one_elem()],
        }
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                    (Some(a), Some(b)) => a.add(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero_elem() || other.is_zero_elem() {
            return Self::zero_elem();
        }
        let mut out = vec![R::zero_elem(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        let lb = other.lc();
        let mut rem = self.clone();
        let mut quot = vec![R::zero_elem(); self.coeffs.len().saturating_sub(db).max(1)];
        while let Some(dr) = rem.degree() {
            if dr < db {
                return None;
            }
            let c = rem.lc().exact_div(&lb)?;
            rem = IntegralDomain::sub(&rem, &other.scale(&c).shift(dr - db));
            quot[dr - db] = c;
        }
        Some(Self::new(quot))
    }
}

impl<R: GcdDomain> UPoly<R> {
    /// Gcd of the coefficients, normalized; zero for the zero polynomial.
    pub fn content(&self) -> R {
        let mut g = R::zero_elem();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g == R::one_elem() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero_elem() {
            return self.clone();
        }
        let c = self.content();
        self.div_scalar(&c).expect("content divides").normalized()
    }

    /// Gcd of primitive parts by the subresultant remainder sequence.
    fn primitive_gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = R::one_elem();
        let mut h = R::one_elem();
        loop {
            let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
            let r = a.prem(&b);
            match r.degree() {
                None => break,
                Some(0) => return Self::one_elem(),
                Some(_) => {}
            }
            a = b;
            let divisor = g.mul(&h.pow(delta));
            b = r
                .div_scalar(&divisor)
                .expect("subresultant division is exact");
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                g.pow(delta)
                    .exact_div(&h.pow(delta - 1))
                    .expect("subresultant h update is exact")
            };
        }
        b.primitive_part()
    }
}

impl<R: GcdDomain> GcdDomain for UPoly<R> {
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero_elem() {
            return other.normalized();
        }
        if other.is_zero_elem() {
            return self.normalized();
        }
        let c = self.content().gcd(&other.content());
        let pa = self.primitive_part();
        let pb = other.primitive_part();
        Self::primitive_gcd(&pa, &pb).scale(&c).normalized()
    }
    fn lead_negative(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.lead_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> UPoly<BigInt> {
        UPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(zp(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(zp(&[0, 0]).is_zero());
    }

    #[test]
    fn prem_matches_definition() {
        // a = x^2 + 1, b = 2x + 1: 4a = (2x + 1)(2x - 1) + 5
        let r = zp(&[1, 0, 1]).prem(&zp(&[1, 2]));
        assert_eq!(r, zp(&[5]));
    }

    #[test]
    fn exact_division() {
        let a = zp(&[-1, 0, 1]);
        assert_eq!(a.exact_div(&zp(&[-1, 1])), Some(zp(&[1, 1])));
        assert_eq!(a.exact_div(&zp(&[0, 2])), None);
        assert_eq!(zp(&[2, 4]).exact_div(&zp(&[1, 3])), None);
    }

    #[test]
    fn integer_gcd() {
        // (x - 1)(x + 2) and (x - 1)(2x + 3)
        let a = zp(&[-2, 1, 1]);
        let b = zp(&[-3, 1, 2]);
        assert_eq!(a.gcd(&b), zp(&[-1, 1]));
        assert_eq!(zp(&[6, 12]).gcd(&zp(&[4, 8])), zp(&[2, 4]));
        assert_eq!(zp(&[-3, -6]).gcd(&UPoly::zero()), zp(&[3, 6]));
    }

    #[test]
    fn nested_gcd() {
        type P2 = UPoly<UPoly<BigInt>>;
        // polynomials in y with coefficients in Z[x]
        let x_minus_1 = zp(&[-1, 1]);
        let f: P2 = UPoly::new(vec![x_minus_1.neg(), x_minus_1.clone()]); // (x-1)(y-1)
        let g: P2 = UPoly::new(vec![x_minus_1.clone(), x_minus_1.clone()]); // (x-1)(y+1)
        assert_eq!(f.gcd(&g), P2::constant(x_minus_1));
    }
}
