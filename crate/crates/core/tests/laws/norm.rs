use std::collections::HashSet;

use murasugi_core::norm::{
    battery, decide, realize, univ_norm_test, verify_witness, SearchBounds, Verdict,
};
use murasugi_core::LaurentPoly1;

use crate::common::{random_augmented, rng};

/// `decide(realize(a))` is a verified norm for 200 augmentation-constrained `a`.
pub fn realization_round_trip() {
    use rand::Rng;
    let mut r = rng(0x5eed_0001);
    let bounds = SearchBounds::default();
    for n in 0..200 {
        let p = [2, 3, 5][n % 3];
        let deg = r.gen_range(0..=2);
        let a = random_augmented(&mut r, p, deg, 2);
        let target = realize(&a).unwrap();
        assert!(
            battery(&target).unwrap().passed(),
            "battery rejected realize({a})"
        );
        match decide(&target, &bounds).unwrap() {
            Verdict::Norm { witness } => {
                assert!(verify_witness(&target, &witness).unwrap(), "{a}");
                let n = witness.mul(&witness.conj()).unwrap();
                assert!(n.equal_up_to_unit(&target).unwrap());
            }
            v => panic!("a = {a} (p = {p}): {v:?}"),
        }
    }
}

/// Every `f` with t-span <= 2 and coefficients in `[-1, 1]`, canonical.
/// For span(P) <= 4 and |P_k| <= 2 any witness has Σ f_j² = |P_0| <= 2,
/// so this list is complete.
fn small_norms() -> HashSet<LaurentPoly1> {
    let mut out = HashSet::new();
    for code in 0..27 {
        let f = LaurentPoly1::from_coeffs(0, &[code % 3 - 1, code / 3 % 3 - 1, code / 9 - 1]);
        if !f.is_zero() {
            out.insert((&f * &f.conj()).canonical());
        }
    }
    out
}

/// Exhaustive agreement with the bounded brute force on t-span <= 4,
/// coefficients in `[-2, 2]`. Returns the number of canonical inputs.
pub fn univariate_completeness() -> usize {
    let norms = small_norms();
    let mut seen = HashSet::new();
    for code in 0..5i64.pow(5) {
        let coeffs: Vec<i64> = (0..5).map(|k| code / 5i64.pow(k) % 5 - 2).collect();
        let p = LaurentPoly1::from_coeffs(0, &coeffs);
        if p.is_zero() || !seen.insert(p.canonical()) {
            continue;
        }
        let fast = univ_norm_test(&p).unwrap();
        assert_eq!(fast.is_some(), norms.contains(&p.canonical()), "{p}");
        if let Some(f) = fast {
            assert!((&f * &f.conj()).equal_up_to_unit(&p), "{p}: witness {f}");
        }
    }
    seen.len()
}
