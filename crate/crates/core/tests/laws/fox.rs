use murasugi_core::braid::{analyze_closure, braid_to_presentation};
use murasugi_core::fox::{
    alexander_polynomial, column_minors, fundamental_residual, torres_residual,
};
use murasugi_core::presentation::abelianize;
use murasugi_core::{BraidWord, GroupPresentation, LaurentPoly2, Variable};

/// Two-component closures with at most eight crossings.
pub const BRAIDS: &[&str] = &[
    "2; 1 1",
    "2; 1 1 1 1",
    "2; 1 1 1 1 1 1",
    "2; -1 -1",
    "2; 1 1 1 1 1 1 1 1",
    "3; 1 1 2",
    "3; 1 -2 1 -2 1",
    "3; 1 2 1 2 1",
    "3; 1 1 1 2 2 2 2",
    "3; -1 2 -1 2 -1 2 -1",
    "4; 1 2 3 2 1 3",
    "4; 1 -2 3 -2 1 -2",
    "3; 2 1 1 1 1 2 2",
];

pub fn presentations() -> Vec<(&'static str, GroupPresentation)> {
    BRAIDS
        .iter()
        .map(|b| {
            let w = BraidWord::parse(b).unwrap();
            assert_eq!(analyze_closure(&w).components, 2, "{b}");
            (*b, braid_to_presentation(&w).unwrap())
        })
        .collect()
}

/// `Σ_j ∂w/∂x_j · (ab(x_j) - 1) = 0` for every relator.
pub fn fundamental_identity() {
    for (b, pres) in presentations() {
        for r in pres.relators() {
            assert_eq!(abelianize(r, pres.abmap()).unwrap(), (0, 0), "{b}");
            assert!(
                fundamental_residual(r, pres.abmap()).unwrap().is_zero(),
                "{b}"
            );
        }
    }
}

pub fn drop_independence() {
    for (b, pres) in presentations() {
        let reference = alexander_polynomial(&pres, None).unwrap();
        for d in 0..pres.relators().len() {
            assert_eq!(
                alexander_polynomial(&pres, Some(d)).unwrap(),
                reference,
                "{b}, drop {d}"
            );
        }
    }
}

/// `D_j (w_k - 1) ≐ D_k (w_j - 1)` for the column-deleted minors.
pub fn column_relation() {
    for (b, pres) in presentations() {
        let w: Vec<LaurentPoly2> = pres
            .abmap()
            .iter()
            .map(|&(x, y)| LaurentPoly2::monomial(x, y, 1) - LaurentPoly2::one())
            .collect();
        for drop in 0..pres.relators().len() {
            let minors = column_minors(&pres, Some(drop)).unwrap();
            for j in 0..minors.len() {
                for k in 0..minors.len() {
                    let lhs = &minors[j] * &w[k];
                    let rhs = &minors[k] * &w[j];
                    assert!(lhs.equal_up_to_unit(&rhs), "{b}: columns {j}, {k}");
                }
            }
        }
    }
}

/// Hand Fox calculus on `⟨a, b | (ab)^k (a^-1 b^-1)^k⟩`.
pub fn hand_torus_presentation(k: usize) -> GroupPresentation {
    let rel = format!(
        "{} {}",
        vec!["a b"; k].join(" "),
        vec!["a^-1 b^-1"; k].join(" ")
    );
    GroupPresentation::parse(&format!("gens: a b\nab: a=x b=y\nrel: {rel}\n")).unwrap()
}

/// `Δ(x, 1) ≐ 1 + x + ... + x^(k-1)` for the closures of `σ_1^(2k)`, checked
/// against the one-relator hand presentation first.
pub fn torres_torus_links() {
    for k in 1..=3usize {
        let braid = format!("2; {}", vec!["1"; 2 * k].join(" "));
        let w = BraidWord::parse(&braid).unwrap();
        let info = analyze_closure(&w);
        assert_eq!(info.linking_number, k as i64);
        let delta = alexander_polynomial(&braid_to_presentation(&w).unwrap(), None).unwrap();
        let oracle = alexander_polynomial(&hand_torus_presentation(k), None).unwrap();
        assert!(
            delta.equal_up_to_unit(&oracle),
            "{braid}: {delta} vs hand {oracle}"
        );
        let expected: LaurentPoly2 = (0..k as i64)
            .map(|e| LaurentPoly2::monomial(e, 0, 1))
            .fold(LaurentPoly2::zero(), |a, m| a + m);
        let residual = delta.specialize(Variable::Y, 1).unwrap();
        let expected = expected.specialize(Variable::Y, 1).unwrap();
        assert!(
            residual.equal_up_to_unit(&expected),
            "{braid}: Δ(x,1) = {residual}"
        );
        assert!(torres_residual(&delta, info.linking_number).unwrap());
    }
}
