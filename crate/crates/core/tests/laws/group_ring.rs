use murasugi_core::{GroupRingElem, UnitGR};
use num_bigint::BigInt;
use rand::Rng;

use crate::common::{random_gr, random_poly2, rng};

const PERIODS: [i64; 4] = [2, 3, 5, 6];

/// `project` respects `+`, `·` and the involutions on 1000 pairs per period.
pub fn projection_is_homomorphism() {
    let mut r = rng(0x9a0b_0001);
    for p in PERIODS {
        for _ in 0..1000 {
            let (n, m) = (r.gen_range(0..=6), r.gen_range(0..=6));
            let a = random_poly2(&mut r, n, 5, 9);
            let b = random_poly2(&mut r, m, 5, 9);
            let pa = GroupRingElem::project(&a, p).unwrap();
            let pb = GroupRingElem::project(&b, p).unwrap();
            assert_eq!(
                GroupRingElem::project(&(&a * &b), p).unwrap(),
                pa.mul(&pb).unwrap(),
                "p={p}: {a} | {b}"
            );
            assert_eq!(
                GroupRingElem::project(&(&a + &b), p).unwrap(),
                pa.add(&pb).unwrap(),
                "p={p}: {a} | {b}"
            );
            assert_eq!(
                GroupRingElem::project(&a.conj(), p).unwrap(),
                pa.conj(),
                "p={p}: {a}"
            );
        }
    }
}

/// Augmentation lands multiplicatively in `Z[Z/p]`.
pub fn augmentation_is_multiplicative() {
    let mut r = rng(0x9a0b_0002);
    for p in PERIODS {
        let p = p as usize;
        for _ in 0..500 {
            let a = random_gr(&mut r, p, 5, 4, 9);
            let b = random_gr(&mut r, p, 5, 4, 9);
            let (ea, eb) = (a.augment(), b.augment());
            let mut conv = vec![BigInt::from(0); p];
            for i in 0..p {
                for j in 0..p {
                    conv[(i + j) % p] += &ea[i] * &eb[j];
                }
            }
            assert_eq!(a.mul(&b).unwrap().augment(), conv, "p={p}: {a} | {b}");
        }
    }
}

pub fn conj_is_involution() {
    let mut r = rng(0x9a0b_0003);
    for p in PERIODS {
        let p = p as usize;
        for _ in 0..500 {
            let a = random_gr(&mut r, p, 5, 4, 9);
            let b = random_gr(&mut r, p, 5, 4, 9);
            assert_eq!(a.mul(&b).unwrap().conj(), a.conj().mul(&b.conj()).unwrap());
            assert_eq!(a.add(&b).unwrap().conj(), a.conj().add(&b.conj()).unwrap());
            assert_eq!(a.conj().conj(), a);
        }
    }
}

pub fn canonical_form() {
    let mut r = rng(0x9a0b_0004);
    for p in PERIODS {
        let p = p as usize;
        for _ in 0..500 {
            let a = random_gr(&mut r, p, 5, 4, 9);
            let b = random_gr(&mut r, p, 5, 4, 9);
            let c = a.canonical();
            assert_eq!(c.canonical(), c, "idempotent: {a}");
            assert!(a.equal_up_to_unit(&c).unwrap());
            let mut unit = || UnitGR {
                negative: r.gen(),
                r: r.gen_range(0..p),
                s: r.gen_range(-4..=4),
            };
            let (u, v) = (unit(), unit());
            let ua = a.apply_unit(&u);
            let vua = ua.apply_unit(&v);
            assert!(a.equal_up_to_unit(&ua).unwrap() && ua.equal_up_to_unit(&a).unwrap());
            assert!(ua.equal_up_to_unit(&vua).unwrap() && a.equal_up_to_unit(&vua).unwrap());
            assert_eq!(
                a.equal_up_to_unit(&b).unwrap(),
                b.equal_up_to_unit(&a).unwrap()
            );
            assert_eq!(a.apply_unit(&u).canonical(), c);
        }
    }
}

pub fn all() {
    projection_is_homomorphism();
    augmentation_is_multiplicative();
    conj_is_involution();
    canonical_form();
}
