use qbps_core::verify::{self, Check};

fn report(check: Check) {
    println!("{}", check.line());
    assert!(check.pass, "{}", check.line());
}

#[test]
fn toric_counts() {
    report(verify::toric_counts());
}

#[test]
fn odd_loop_rank_two() {
    report(verify::odd_loop_rank_two());
}

#[test]
fn one_loop_divisibility() {
    report(verify::one_loop_divisibility());
}

#[test]
fn route_agreement() {
    report(verify::route_agreement());
}

#[test]
fn gcd_invariance() {
    report(verify::gcd_invariance());
}

#[test]
fn closed_forms() {
    report(verify::closed_forms());
}

#[test]
fn epsilon_oracles() {
    report(verify::epsilon_oracles());
}

#[test]
fn p2_identity() {
    report(verify::p2_identity());
}

#[test]
fn find_delta_parity() {
    report(verify::find_delta_parity());
}

#[test]
fn polytope_properties() {
    report(verify::polytope_properties());
}
