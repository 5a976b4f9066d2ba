//! Acceptance suite: every check of the embedded verification suite as its
//! own test, printing one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use permlab_cli::verify::{checks, run_check};

fn run(id: &str) {
    let all = checks();
    let check = all.iter().find(|c| c.id == id).expect("known check id");
    let outcome = run_check(check);
    println!(
        "{} {} [{:.1}s] {} — {}",
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.id,
        outcome.seconds,
        outcome.title,
        outcome.detail,
    );
    assert!(outcome.passed, "{}: {}", outcome.id, outcome.detail);
}

#[test]
fn c01_stanton_rank_sequence() {
    run("c01");
}

#[test]
fn c02_fine_sequence_family() {
    run("c02");
}

#[test]
fn c03_other_derangement_counts() {
    run("c03");
}

#[test]
fn c04_distributions_and_inequalities() {
    run("c04");
}

#[test]
fn c05_separable_permutations() {
    run("c05");
}

#[test]
fn c06_symmetry_and_wilf_classes() {
    run("c06");
}

#[test]
fn c07_gk_statistics() {
    run("c07");
}

#[test]
fn c08_shape_wilf_and_dominance() {
    run("c08");
}

#[test]
fn c09_separations_and_unbalanced_equivalence() {
    run("c09");
}

#[test]
fn c10_two_stacks_in_series() {
    run("c10");
}

#[test]
fn c11_west_characterization() {
    run("c11");
}

#[test]
fn c12_two_two_stack() {
    run("c12");
}

#[test]
fn c13_container_machine_basis_theorem() {
    run("c13");
}

#[test]
fn c14_priority_queues() {
    run("c14");
}

#[test]
fn c15_stieltjes_diagnostics() {
    run("c15");
}

#[test]
fn c16_conjecture_surveys() {
    run("c16");
}
