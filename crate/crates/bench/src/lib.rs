//! Fixed inputs shared by the benchmarks and their smoke test.

use murasugi_core::norm::realize;
use murasugi_core::{BraidWord, GroupRingElem, LaurentPoly2};

/// Two-component braid closures, smallest first.
pub const BRAIDS: &[&str] = &[
    "2; 1 1",
    "2; 1 1 1 1",
    "3; 1 -2 1 -2 1",
    "3; 1 1 1 2 2 2 2",
    "4; 1 2 3 2 1 3",
    "2; 1^8",
];

/// `(p, a)` pairs with `a(g, 1) = 1`; the benchmark targets are `a·ā`.
pub const WITNESSES: &[(i64, &str)] = &[
    (3, "1 + g*t - g"),
    (5, "1 - g + g*t - g^2*t + g^2*t^2"),
    (5, "1 + g - g*t + g^3*t^2 - g^3*t^3"),
    (7, "1 + g^2*t - g^2"),
];

pub fn braid(text: &str) -> BraidWord {
    BraidWord::parse(text).expect("fixture braids parse")
}

pub fn norm_targets() -> Vec<(String, GroupRingElem)> {
    WITNESSES
        .iter()
        .map(|&(p, a)| {
            let a = GroupRingElem::parse(a, p).expect("fixture parses");
            (
                format!("p{p}:{a}"),
                realize(&a).expect("fixture has unit augmentation"),
            )
        })
        .collect()
}

/// `(A·C, B·C)` with a planted common factor of growing size.
pub fn gcd_pair(k: i64) -> (LaurentPoly2, LaurentPoly2) {
    let lin = |a: i64, b: i64| {
        LaurentPoly2::from_i64_terms(&[((0, 0), 1), ((1, 0), a), ((0, 1), b), ((1, 1), 1)])
    };
    let common = (1..=k).fold(LaurentPoly2::one(), |acc, i| &acc * &lin(i, -i));
    (
        &lin(2, 3).pow(k as u32) * &common,
        &lin(-3, 1).pow(k as u32) * &common,
    )
}
