//! Sparse Laurent polynomials over `Z` in one and two variables.
//!
//! `LaurentPoly2` is the ring `Z[x^±1, y^±1]` in which two-variable
//! Alexander polynomials live. Values are immutable maps from exponents to
//! nonzero coefficients; equality is structural.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dense::{self, UPoly};
use crate::error::{Error, Result};

/// Element of `Z[t^±1]`. Which variable it denotes depends on context.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i64, BigInt>,
}

/// Element of `Z[x^±1, y^±1]`, keyed by `(x-exponent, y-exponent)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

/// One of the two variables of [`LaurentPoly2`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variable {
    X,
    Y,
}

/// The unit `±x^r y^s` of `Z[x^±1, y^±1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnitMonomial2 {
    pub negative: bool,
    pub r: i64,
    pub s: i64,
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        Self::from_terms([(e, c.into())])
    }

    /// Builds from `(exponent, coefficient)` pairs, combining like terms.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in it {
            add_term(&mut terms, e, c);
        }
        LaurentPoly1 { terms }
    }

    /// Coefficients `c[k]` of `t^(offset + k)`.
    pub fn from_coeffs(offset: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (offset + k as i64, BigInt::from(c))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly1 {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, a)| (e, a * c)))
    }

    /// `t ↦ t^-1`
    pub fn conj(&self) -> Self {
        LaurentPoly1 {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `t = -1`.
    pub fn eval_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(&e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Splits off the lowest power: returns `(min_exp, polynomial)` with
    /// `self = t^min_exp * polynomial`.
    pub fn to_dense(&self) -> (i64, UPoly<BigInt>) {
        let lo = self.min_exp().unwrap_or(0);
        let n = (self.span() + 1) as usize;
        let mut coeffs = vec![BigInt::zero(); if self.is_zero() { 0 } else { n }];
        for (&e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        (lo, UPoly::new(coeffs))
    }

    pub fn from_dense(offset: i64, p: &UPoly<BigInt>) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (offset + k as i64, c.clone())),
        )
    }

    /// Representative of the orbit under `±t^s`: lowest exponent 0 and
    /// positive top coefficient.
    pub fn canonical(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        if shifted
            .terms
            .values()
            .next_back()
            .is_some_and(|c| c.is_negative())
        {
            -shifted
        } else {
            shifted
        }
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(ex: i64, ey: i64, c: impl Into<BigInt>) -> Self {
        Self::from_terms([((ex, ey), c.into())])
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), BigInt)>>(it: I) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in it {
            add_term(&mut terms, k, c);
        }
        LaurentPoly2 { terms }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_i64_terms(it: &[((i64, i64), i64)]) -> Self {
        Self::from_terms(it.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order of `(x-exponent, y-exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, ex: i64, ey: i64) -> BigInt {
        self.terms.get(&(ex, ey)).cloned().unwrap_or_default()
    }

    /// Minimum x-exponent and minimum y-exponent (taken independently).
    pub fn min_exps(&self) -> Option<(i64, i64)> {
        let mx = self.terms.keys().map(|k| k.0).min()?;
        let my = self.terms.keys().map(|k| k.1).min()?;
        Some((mx, my))
    }

    pub fn max_exps(&self) -> Option<(i64, i64)> {
        let mx = self.terms.keys().map(|k| k.0).max()?;
        let my = self.terms.keys().map(|k| k.1).max()?;
        Some((mx, my))
    }

    /// Multiply by `x^dx y^dy`.
    pub fn shift(&self, dx: i64, dy: i64) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + dx, b + dy), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, a)| (k, a * c)))
    }

    /// The bar involution `x ↦ x^-1, y ↦ y^-1`.
    pub fn conj(&self) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((-a, -b), c.clone()))
                .collect(),
        }
    }

    /// Canonical representative of the orbit under units `±x^r y^s`:
    /// both minimum exponents 0, lex-greatest coefficient positive.
    pub fn canonical(&self) -> Self {
        let Some((mx, my)) = self.min_exps() else {
            return Self::zero();
        };
        let shifted = self.shift(-mx, -my);
        if shifted
            .terms
            .values()
            .next_back()
            .is_some_and(|c| c.is_negative())
        {
            -shifted
        } else {
            shifted
        }
    }

    /// The unit `u` with `canonical() == u * self`; `None` for zero.
    pub fn canonical_unit(&self) -> Option<UnitMonomial2> {
        let (mx, my) = self.min_exps()?;
        let negative = self
            .terms
            .values()
            .next_back()
            .is_some_and(|c| c.is_negative());
        Some(UnitMonomial2 {
            negative,
            r: -mx,
            s: -my,
        })
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Substitute `which := value` for `value ∈ {+1, -1}`; the result is a
    /// polynomial in the remaining variable.
    pub fn specialize(&self, which: Variable, value: i64) -> Result<LaurentPoly1> {
        if value != 1 && value != -1 {
            return Err(Error::BadSpecialization(value));
        }
        Ok(LaurentPoly1::from_terms(self.terms.iter().map(
            |(&(a, b), c)| {
                let (gone, kept) = match which {
                    Variable::X => (a, b),
                    Variable::Y => (b, a),
                };
                let c = if value == -1 && gone.rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                };
                (kept, c)
            },
        )))
    }

    /// `self = x^mx y^my * N(x, y)` with `N ∈ Z[x][y]` (outer variable y).
    pub fn to_nested(&self) -> ((i64, i64), UPoly<UPoly<BigInt>>) {
        let Some((mx, my)) = self.min_exps() else {
            return ((0, 0), UPoly::new(Vec::new()));
        };
        let mut rows: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            let row = rows.entry(b - my).or_default();
            let k = (a - mx) as usize;
            if row.len() <= k {
                row.resize(k + 1, BigInt::zero());
            }
            row[k] = c.clone();
        }
        let top = *rows.keys().next_back().unwrap() as usize;
        let mut outer = vec![UPoly::new(Vec::new()); top + 1];
        for (b, row) in rows {
            outer[b as usize] = UPoly::new(row);
        }
        ((mx, my), UPoly::new(outer))
    }

    pub fn from_nested(offset: (i64, i64), n: &UPoly<UPoly<BigInt>>) -> Self {
        let mut terms = Vec::new();
        for (b, row) in n.coeffs().iter().enumerate() {
            for (a, c) in row.coeffs().iter().enumerate() {
                terms.push(((offset.0 + a as i64, offset.1 + b as i64), c.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// `R` with `self = divisor * R`, exactly in `Z[x^±1, y^±1]`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let ((ax, ay), a) = self.to_nested();
        let ((bx, by), b) = divisor.to_nested();
        let q = dense::IntegralDomain::exact_div(&a, &b).ok_or(Error::NotDivisible)?;
        Ok(Self::from_nested((ax - bx, ay - by), &q))
    }

    /// Canonical gcd in the UFD `Z[x^±1, y^±1]`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        if other.is_zero() {
            return Ok(self.canonical());
        }
        if self.is_zero() {
            return Ok(other.canonical());
        }
        let (_, a) = self.to_nested();
        let (_, b) = other.to_nested();
        Ok(Self::from_nested((0, 0), &dense::GcdDomain::gcd(&a, &b)).canonical())
    }

    pub fn pow(&self, e: u32) -> Self {
        dense::IntegralDomain::pow(self, e)
    }
}

impl UnitMonomial2 {
    pub const ONE: UnitMonomial2 = UnitMonomial2 {
        negative: false,
        r: 0,
        s: 0,
    };

    pub fn as_poly(&self) -> LaurentPoly2 {
        LaurentPoly2::monomial(self.r, self.s, if self.negative { -1 } else { 1 })
    }

    pub fn apply(&self, p: &LaurentPoly2) -> LaurentPoly2 {
        let q = p.shift(self.r, self.s);
        if self.negative {
            -q
        } else {
            q
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        UnitMonomial2 {
            negative: self.negative != other.negative,
            r: self.r + other.r,
            s: self.s + other.s,
        }
    }

    pub fn inverse(&self) -> Self {
        UnitMonomial2 {
            negative: self.negative,
            r: -self.r,
            s: -self.s,
        }
    }
}

macro_rules! forward_binops {
    ($ty:ty, $key:ty) => {
        impl Add<&$ty> for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let mut terms = self.terms.clone();
                for (k, c) in &rhs.terms {
                    add_term(&mut terms, *k, c.clone());
                }
                <$ty>::from_map(terms)
            }
        }
        impl Sub<&$ty> for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                let mut terms = self.terms.clone();
                for (k, c) in &rhs.terms {
                    add_term(&mut terms, *k, -c);
                }
                <$ty>::from_map(terms)
            }
        }
        impl Mul<&$ty> for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                let mut terms = BTreeMap::new();
                for (k1, c1) in &self.terms {
                    for (k2, c2) in &rhs.terms {
                        add_term(&mut terms, <$ty>::key_add(*k1, *k2), c1 * c2);
                    }
                }
                <$ty>::from_map(terms)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                <$ty>::from_map(self.terms.iter().map(|(k, c)| (*k, -c)).collect())
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl std::iter::Sum for $ty {
            fn sum<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold(<$ty>::default(), |a, b| &a + &b)
            }
        }
        impl $ty {
            fn from_map(terms: BTreeMap<$key, BigInt>) -> Self {
                Self { terms }
            }
        }
    };
}

impl LaurentPoly1 {
    fn key_add(a: i64, b: i64) -> i64 {
        a + b
    }
}

impl LaurentPoly2 {
    fn key_add(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
        (a.0 + b.0, a.1 + b.1)
    }
}

forward_binops!(LaurentPoly1, i64);
forward_binops!(LaurentPoly2, (i64, i64));

impl dense::IntegralDomain for LaurentPoly2 {
    fn zero_elem() -> Self {
        LaurentPoly2::zero()
    }
    fn one_elem() -> Self {
        LaurentPoly2::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
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
        LaurentPoly2::exact_div(self, other).ok()
    }
}

impl From<i64> for LaurentPoly1 {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPoly2 {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl LaurentPoly2 {
    /// `true` when the polynomial equals the constant 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(t: &[((i64, i64), i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_i64_terms(t)
    }

    #[test]
    fn ring_examples() {
        let x = LaurentPoly2::x();
        let y = LaurentPoly2::y();
        assert_eq!(&(&x + &y) + &(-&x), y);
        let one = LaurentPoly2::one();
        assert_eq!(
            &(&x - &one) * &(&x + &one),
            p2(&[((2, 0), 1), ((0, 0), -1)])
        );
        assert!((&x * &LaurentPoly2::zero()).is_zero());
    }

    #[test]
    fn conj_examples() {
        let p = p2(&[((1, 0), 1), ((0, -1), 2)]);
        assert_eq!(p.conj(), p2(&[((-1, 0), 1), ((0, 1), 2)]));
        assert_eq!(p.conj().conj(), p);
        let q = p2(&[((2, 0), 1), ((0, 0), -1)]);
        assert_eq!(q.conj(), p2(&[((-2, 0), 1), ((0, 0), -1)]));
    }

    #[test]
    fn canonical_examples() {
        let p = p2(&[((-1, 1), -1), ((-1, 0), 1)]);
        let y_minus_1 = p2(&[((0, 1), 1), ((0, 0), -1)]);
        assert_eq!(p.canonical(), y_minus_1);
        assert_eq!(y_minus_1.canonical(), y_minus_1);
        assert!(LaurentPoly2::zero().canonical().is_zero());
        let u = p.canonical_unit().unwrap();
        assert_eq!(u.apply(&p), y_minus_1);
    }

    #[test]
    fn unit_equivalence_examples() {
        let x_minus_1 = p2(&[((1, 0), 1), ((0, 0), -1)]);
        let other = p2(&[((-1, 0), -1), ((0, 0), 1)]);
        let y_minus_1 = p2(&[((0, 1), 1), ((0, 0), -1)]);
        assert!(x_minus_1.equal_up_to_unit(&other));
        assert!(!x_minus_1.equal_up_to_unit(&y_minus_1));
        assert!(LaurentPoly2::zero().equal_up_to_unit(&LaurentPoly2::zero()));
    }

    #[test]
    fn specialize_examples() {
        let p = p2(&[((1, 1), 1), ((-1, 0), 1)]);
        assert_eq!(
            p.specialize(Variable::Y, 1).unwrap(),
            LaurentPoly1::from_terms([(1, 1.into()), (-1, 1.into())])
        );
        assert_eq!(
            p.specialize(Variable::X, -1).unwrap(),
            LaurentPoly1::from_coeffs(0, &[-1, -1])
        );
        assert!(LaurentPoly2::zero()
            .specialize(Variable::X, 1)
            .unwrap()
            .is_zero());
        assert_eq!(
            p.specialize(Variable::X, 2),
            Err(Error::BadSpecialization(2))
        );
    }

    #[test]
    fn exact_div_examples() {
        let x2m1 = p2(&[((2, 0), 1), ((0, 0), -1)]);
        let xm1 = p2(&[((1, 0), 1), ((0, 0), -1)]);
        let ym1 = p2(&[((0, 1), 1), ((0, 0), -1)]);
        assert_eq!(
            x2m1.exact_div(&xm1).unwrap(),
            p2(&[((1, 0), 1), ((0, 0), 1)])
        );
        assert_eq!(x2m1.exact_div(&ym1), Err(Error::NotDivisible));
        assert!(LaurentPoly2::zero().exact_div(&xm1).unwrap().is_zero());
        assert_eq!(
            xm1.exact_div(&LaurentPoly2::zero()),
            Err(Error::DivisionByZero)
        );
        // Laurent shifts are units
        let shifted = x2m1.shift(-3, 2);
        assert_eq!(
            shifted.exact_div(&xm1).unwrap(),
            p2(&[((1, 0), 1), ((0, 0), 1)]).shift(-3, 2)
        );
    }

    #[test]
    fn gcd_examples() {
        let x2m1 = p2(&[((2, 0), 1), ((0, 0), -1)]);
        let sq = p2(&[((2, 0), 1), ((1, 0), -2), ((0, 0), 1)]);
        let xm1 = p2(&[((1, 0), 1), ((0, 0), -1)]);
        assert_eq!(x2m1.gcd(&sq).unwrap(), xm1);
        assert_eq!(x2m1.shift(2, -1).gcd(&LaurentPoly2::zero()).unwrap(), x2m1);
        assert_eq!(
            LaurentPoly2::zero().gcd(&LaurentPoly2::zero()),
            Err(Error::GcdOfZeros)
        );

        let ym1 = p2(&[((0, 1), 1), ((0, 0), -1)]);
        let yp1 = p2(&[((0, 1), 1), ((0, 0), 1)]);
        let a = &xm1 * &ym1;
        let b = &xm1 * &yp1;
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, xm1);
        // oracle: both cofactors are exact
        assert_eq!(a.exact_div(&g).unwrap(), ym1);
        assert_eq!(b.exact_div(&g).unwrap(), yp1);
    }

    #[test]
    fn unit_monomial_composition() {
        let u = UnitMonomial2 {
            negative: true,
            r: 2,
            s: -1,
        };
        let v = UnitMonomial2 {
            negative: true,
            r: -1,
            s: 3,
        };
        let p = p2(&[((0, 0), 1), ((1, 1), -2)]);
        assert_eq!(u.compose(&v).apply(&p), u.apply(&v.apply(&p)));
        assert_eq!(u.compose(&u.inverse()), UnitMonomial2::ONE);
        assert_eq!(u.as_poly(), u.apply(&LaurentPoly2::one()));
    }
}
