use murasugi_core::dense::IntegralDomain;
use murasugi_core::factor::factor_univariate;
use murasugi_core::intpoly::{cyclotomic, int_poly, is_perfect_square, resultant, IntPoly};
use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::common::rng;

/// `Π_{d | n} Φ_d = x^n - 1` for `n <= 30`.
pub fn cyclotomic_products() {
    for n in 1..=30u64 {
        let prod = (1..=n)
            .filter(|d| n % d == 0)
            .fold(IntPoly::one(), |acc, d| acc.mul(&cyclotomic(d).unwrap()));
        let mut target = vec![0i64; n as usize + 1];
        target[0] = -1;
        target[n as usize] = 1;
        assert_eq!(prod, int_poly(&target), "n = {n}");
    }
}

fn random_int_poly(r: &mut impl Rng, deg: usize, c: i64) -> IntPoly {
    let mut coeffs: Vec<i64> = (0..=deg).map(|_| r.gen_range(-c..=c)).collect();
    while coeffs[deg] == 0 {
        coeffs[deg] = r.gen_range(-c..=c);
    }
    int_poly(&coeffs)
}

fn to_f64(p: &IntPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()
}

fn roots(p: &IntPoly) -> Vec<Complex<f64>> {
    let c = to_f64(p);
    let n = c.len() - 1;
    let lc = c[n];
    let companion = DMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            -c[n - 1 - j] / lc
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    companion.complex_eigenvalues().iter().copied().collect()
}

fn eval(c: &[f64], z: Complex<f64>) -> Complex<f64> {
    c.iter()
        .rev()
        .fold(Complex::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// Sylvester resultant against `lc(f)^deg(g) · Π g(α)` over float roots.
pub fn resultant_matches_roots() {
    let mut r = rng(0x1e50_0001);
    for _ in 0..300 {
        let (m, n) = (r.gen_range(1..=6), r.gen_range(0..=6));
        let f = random_int_poly(&mut r, m, 5);
        let g = random_int_poly(&mut r, n, 5);
        let exact = resultant(&f, &g).unwrap().to_f64().unwrap();
        let gc = to_f64(&g);
        let lc = f.lc().to_f64().unwrap();
        let approx = roots(&f)
            .into_iter()
            .fold(Complex::new(lc.powi(n as i32), 0.0), |acc, z| {
                acc * eval(&gc, z)
            });
        let err = (approx - exact).norm();
        assert!(
            err <= 1e-6 * exact.abs().max(1.0),
            "f = {f:?}, g = {g:?}: exact {exact}, roots give {approx}"
        );
    }
}

/// Rational root theorem: for degree 2 and 3, irreducible iff no rational root.
fn has_rational_root(f: &IntPoly) -> bool {
    let divisors = |n: &BigInt| -> Vec<i64> {
        let n = n.abs().to_i64().unwrap();
        (1..=n).filter(|d| n % d == 0).collect()
    };
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return true;
    }
    for num in divisors(&c0) {
        for den in divisors(&f.lc()) {
            for s in [num, -num] {
                // den^deg · f(s/den) = Σ c_k s^k den^(deg-k)
                let deg = f.degree().unwrap() as u32;
                let v: BigInt = f
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| {
                        c * BigInt::from(s).pow(k as u32) * BigInt::from(den).pow(deg - k as u32)
                    })
                    .sum();
                if v.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Multiply-back on 500 random products, plus irreducibility spot checks.
pub fn factorization() {
    let mut r = rng(0x1e50_0002);
    let mut pool: Vec<IntPoly> = Vec::new();
    for _ in 0..500 {
        let mut prod = IntPoly::constant(BigInt::from(
            r.gen_range(1..=3) * if r.gen() { 1 } else { -1 },
        ));
        let mut deg = 0;
        while deg < 10 {
            let d = r.gen_range(1..=4).min(10 - deg);
            prod = prod.mul(&random_int_poly(&mut r, d, 4));
            deg += d;
            if r.gen_bool(0.3) {
                break;
            }
        }
        let fac = factor_univariate(&prod).unwrap();
        assert_eq!(fac.expand(), prod, "multiply-back");
        for (q, _) in &fac.factors {
            assert!(q.lc().is_positive());
            assert!(q.content() == BigInt::from(1), "{q:?} not primitive");
            if matches!(q.degree(), Some(2 | 3)) {
                assert!(!has_rational_root(q), "{q:?} has a rational root");
            }
            pool.push(q.clone());
        }
    }
    pool.sort_by(murasugi_core::factor::factor_order);
    pool.dedup();
    for q in &pool {
        for small in pool
            .iter()
            .filter(|s| s.degree() < q.degree() && s.degree() > Some(0))
        {
            assert!(
                q.exact_div(small).is_none(),
                "{small:?} divides reported irreducible {q:?}"
            );
        }
    }
}

/// Exhaustive agreement for `|n| <= 10^6`.
pub fn perfect_squares() {
    let mut next_root = 0i64;
    for n in -1_000_000i64..=1_000_000 {
        while n >= 0 && next_root * next_root < n {
            next_root += 1;
        }
        let expected = n >= 0 && next_root * next_root == n;
        assert_eq!(is_perfect_square(&BigInt::from(n)), expected, "n = {n}");
    }
}

pub fn all() {
    cyclotomic_products();
    resultant_matches_roots();
    factorization();
    perfect_squares();
}
