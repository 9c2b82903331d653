use murasugi_core::{LaurentPoly2, Matrix, UnitMonomial2};
use num_bigint::BigInt;
use rand::Rng;

use crate::common::{random_poly2, rng};

fn triple(r: &mut impl Rng) -> [LaurentPoly2; 3] {
    [(); 3].map(|_| {
        let n = r.gen_range(0..=6);
        random_poly2(r, n, 5, 9)
    })
}

fn random_unit(r: &mut impl Rng) -> UnitMonomial2 {
    UnitMonomial2 {
        negative: r.gen(),
        r: r.gen_range(-4..=4),
        s: r.gen_range(-4..=4),
    }
}

/// Associativity, commutativity and distributivity on 1000 triples.
pub fn ring_laws() {
    let mut r = rng(0x1a55_0001);
    for _ in 0..1000 {
        let [a, b, c] = triple(&mut r);
        assert_eq!(
            &(&a + &b) + &c,
            &a + &(&b + &c),
            "add assoc: {a} | {b} | {c}"
        );
        assert_eq!(&a + &b, &b + &a, "add comm: {a} | {b}");
        assert_eq!(
            &(&a * &b) * &c,
            &a * &(&b * &c),
            "mul assoc: {a} | {b} | {c}"
        );
        assert_eq!(&a * &b, &b * &a, "mul comm: {a} | {b}");
        assert_eq!(
            &a * &(&b + &c),
            &(&a * &b) + &(&a * &c),
            "distrib: {a} | {b} | {c}"
        );
        assert_eq!((&a - &b).is_zero(), a == b);
        assert_eq!(&a * &LaurentPoly2::one(), a);
    }
}

pub fn conj_is_involution() {
    let mut r = rng(0x1a55_0002);
    for _ in 0..1000 {
        let [a, b, _] = triple(&mut r);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj(), "{a} | {b}");
        assert_eq!((&a + &b).conj(), &a.conj() + &b.conj(), "{a} | {b}");
        assert_eq!(a.conj().conj(), a);
    }
}

pub fn canonical_form() {
    let mut r = rng(0x1a55_0003);
    for _ in 0..1000 {
        let [a, b, _] = triple(&mut r);
        let c = a.canonical();
        assert_eq!(c.canonical(), c, "idempotent: {a}");
        assert!(a.equal_up_to_unit(&c), "P ≐ canonical(P): {a}");
        assert!(a.equal_up_to_unit(&a));
        let (u, v) = (random_unit(&mut r), random_unit(&mut r));
        let ua = u.apply(&a);
        let vua = v.apply(&ua);
        assert!(
            a.equal_up_to_unit(&ua) && ua.equal_up_to_unit(&a),
            "symmetry: {a}"
        );
        assert!(
            ua.equal_up_to_unit(&vua) && a.equal_up_to_unit(&vua),
            "transitivity: {a}"
        );
        assert_eq!(a.equal_up_to_unit(&b), b.equal_up_to_unit(&a));
        if let Some(w) = a.canonical_unit() {
            assert_eq!(w.apply(&a), c);
        }
    }
}

pub fn exact_division() {
    let mut r = rng(0x1a55_0004);
    let mut n = 0;
    while n < 1000 {
        let [a, b, _] = triple(&mut r);
        if b.is_zero() {
            continue;
        }
        n += 1;
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a, "({a}) * ({b}) / ({b})");
    }
}

/// `gcd(AC, BC)` divides both products and is divisible by the planted `C`.
pub fn gcd_with_planted_factor() {
    let mut r = rng(0x1a55_0005);
    let mut n = 0;
    while n < 300 {
        let a = random_poly2(&mut r, 4, 3, 9);
        let b = random_poly2(&mut r, 4, 3, 9);
        let c = random_poly2(&mut r, 3, 2, 5);
        if a.is_zero() || b.is_zero() || c.is_zero() {
            continue;
        }
        n += 1;
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc).unwrap();
        assert!(ac.exact_div(&g).is_ok(), "gcd does not divide {ac}");
        assert!(bc.exact_div(&g).is_ok(), "gcd does not divide {bc}");
        assert!(
            g.exact_div(&c).is_ok(),
            "planted {c} does not divide gcd {g}"
        );
        assert_eq!(g, g.canonical());
    }
}

/// Bareiss against Laplace expansion, over both Z and Z[x^±1, y^±1].
pub fn determinants() {
    let mut r = rng(0x1a55_0006);
    for n in [3usize, 4] {
        for _ in 0..200 {
            let rows: Vec<Vec<BigInt>> = (0..n)
                .map(|_| (0..n).map(|_| BigInt::from(r.gen_range(-9..=9))).collect())
                .collect();
            let m = Matrix::from_rows(rows, n);
            assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
        }
        for _ in 0..60 {
            let rows: Vec<Vec<LaurentPoly2>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let k = r.gen_range(0..=3);
                            random_poly2(&mut r, k, 2, 4)
                        })
                        .collect()
                })
                .collect();
            let m = Matrix::from_rows(rows, n);
            assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
        }
    }
}

pub fn all() {
    ring_laws();
    conj_is_involution();
    canonical_form();
    exact_division();
    gcd_with_planted_factor();
    determinants();
}
