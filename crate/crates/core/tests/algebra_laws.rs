mod common;
mod laws;

#[test]
fn laurent_ring_laws() {
    laws::poly::ring_laws();
}

#[test]
fn laurent_conj_is_involution() {
    laws::poly::conj_is_involution();
}

#[test]
fn laurent_canonical_form() {
    laws::poly::canonical_form();
}

#[test]
fn laurent_exact_division() {
    laws::poly::exact_division();
}

#[test]
fn laurent_gcd_planted_factor() {
    laws::poly::gcd_with_planted_factor();
}

#[test]
fn bareiss_matches_cofactor() {
    laws::poly::determinants();
}

#[test]
fn projection_is_homomorphism() {
    laws::group_ring::projection_is_homomorphism();
}

#[test]
fn augmentation_is_multiplicative() {
    laws::group_ring::augmentation_is_multiplicative();
}

#[test]
fn group_ring_conj_is_involution() {
    laws::group_ring::conj_is_involution();
}

#[test]
fn group_ring_canonical_form() {
    laws::group_ring::canonical_form();
}

#[test]
fn cyclotomic_products() {
    laws::intpoly::cyclotomic_products();
}

#[test]
fn resultant_matches_float_roots() {
    laws::intpoly::resultant_matches_roots();
}

#[test]
fn factorization_multiplies_back() {
    laws::intpoly::factorization();
}

#[test]
fn perfect_squares_exhaustive() {
    laws::intpoly::perfect_squares();
}
