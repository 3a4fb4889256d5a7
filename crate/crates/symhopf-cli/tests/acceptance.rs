//! Acceptance gate: one test per headline guarantee, each printing a
//! single pass/fail line.  Run with `--nocapture` to see the lines for
//! passing tests too.

use symhopf_cli::verify::{self, Limits, SuiteReport};

fn gate(label: &str, report: SuiteReport) {
    let status = if report.ok() { "PASS" } else { "FAIL" };
    println!(
        "criterion {label}: {status} ({} of {} checks)",
        report.passed(),
        report.checks
    );
    assert!(
        report.ok(),
        "suite {} failed {} of {} checks:\n{:#?}",
        report.suite,
        report.failures.len(),
        report.checks,
        report.failures
    );
}

#[test]
fn criterion_01_dimensions_agree_across_models() {
    gate("01 (dimension agreement)", verify::dimensions(Limits::bidegrees()));
}

#[test]
fn criterion_02_pairing_matrices_are_invertible() {
    gate("02 (pairing invertibility)", verify::pairing(Limits::bidegrees()));
}

#[test]
fn criterion_03_cup_matches_the_duality_oracle() {
    gate("03 (cup vs oracle)", verify::oracle(Limits::oracle()));
}

#[test]
fn criterion_04_worked_examples_hold() {
    gate("04 (worked examples)", verify::examples());
}

#[test]
fn criterion_05_hopf_axioms_on_random_triples() {
    gate("05 (Hopf ring axioms)", verify::axioms());
}

#[test]
fn criterion_06_operation_rewriting_is_sound() {
    gate("06 (operation rewriting)", verify::adem());
}

#[test]
fn criterion_07_spread_classes_generate_polynomial_subalgebras() {
    gate("07 (polynomial subalgebras)", verify::subalgebra());
}

#[test]
fn criterion_08_twelve_point_generator_table() {
    gate("08 (generator table)", verify::feshbach());
}

#[test]
fn criterion_09_stiefel_whitney_classes() {
    gate("09 (Stiefel-Whitney suite)", verify::sw());
}

#[test]
fn criterion_10_invariant_theoretic_model() {
    gate("10 (invariant model)", verify::invariants());
}
