#![allow(dead_code)]

use murasugi_core::{GroupRingElem, LaurentPoly1, LaurentPoly2};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gr(s: &str, p: i64) -> GroupRingElem {
    GroupRingElem::parse(s, p).unwrap()
}

pub fn random_poly1(rng: &mut impl Rng, terms: usize, exp: i64, coeff: i64) -> LaurentPoly1 {
    LaurentPoly1::from_terms((0..terms).map(|_| {
        (
            rng.gen_range(-exp..=exp),
            BigInt::from(rng.gen_range(-coeff..=coeff)),
        )
    }))
}

pub fn random_poly2(rng: &mut impl Rng, terms: usize, exp: i64, coeff: i64) -> LaurentPoly2 {
    LaurentPoly2::from_terms((0..terms).map(|_| {
        let e = (rng.gen_range(-exp..=exp), rng.gen_range(-exp..=exp));
        (e, BigInt::from(rng.gen_range(-coeff..=coeff)))
    }))
}

pub fn random_gr(
    rng: &mut impl Rng,
    p: usize,
    terms: usize,
    exp: i64,
    coeff: i64,
) -> GroupRingElem {
    GroupRingElem::from_terms(
        p,
        (0..terms).map(|_| {
            let e = (rng.gen_range(0..p as i64), rng.gen_range(-exp..=exp));
            (e, BigInt::from(rng.gen_range(-coeff..=coeff)))
        }),
    )
    .unwrap()
}

/// Random `a` with t-support in `[0, deg]`, coefficients in `[-c, c]`, and
/// `a(g, 1) = 1` imposed by construction.
pub fn random_augmented(rng: &mut impl Rng, p: usize, deg: usize, c: i64) -> GroupRingElem {
    let mut rows = Vec::with_capacity(p);
    for i in 0..p {
        let target = (i == 0) as i64;
        loop {
            let mut row: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-c..=c)).collect();
            let k = rng.gen_range(0..=deg);
            let rest: i64 = row
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, v)| v)
                .sum();
            row[k] = target - rest;
            if row[k].abs() <= c {
                rows.push(row);
                break;
            }
        }
    }
    GroupRingElem::from_rows(p, &rows).unwrap()
}

/// All units `±g^r t^s` with `|s| <= 2`.
pub fn units(p: usize) -> Vec<murasugi_core::UnitGR> {
    let mut out = Vec::new();
    for negative in [false, true] {
        for r in 0..p {
            for s in -2..=2 {
                out.push(murasugi_core::UnitGR { negative, r, s });
            }
        }
    }
    out
}
