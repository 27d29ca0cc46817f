//! Full-size verification sweeps, one test per headline property. Each
//! prints its report line; run with `-- --nocapture` to see them all.

use betagamma::verification::{self, CheckReport};

fn run(report: CheckReport) {
    println!("{}", report.summary_line());
    assert!(report.passed, "{}", report.summary_line());
    assert!(report.cases > 0, "{} swept no cases", report.name);
}

#[test]
fn criterion_01_bipartition_counts() {
    run(verification::check_bipartition_counts(false));
}

#[test]
fn criterion_02_character_table() {
    run(verification::check_character_table(false));
}

#[test]
fn criterion_03_mode_brackets() {
    run(verification::check_mode_brackets(false));
}

#[test]
fn criterion_04_mta_products() {
    run(verification::check_mta_products(false));
}

#[test]
fn criterion_05_unity() {
    run(verification::check_unity(false));
}

#[test]
fn criterion_06_zhu_blocks() {
    run(verification::check_zhu_blocks(false));
}

#[test]
fn criterion_07_zhu_representation() {
    run(verification::check_zhu_representation(false));
}

#[test]
fn criterion_08_weight_classification() {
    run(verification::check_weight_classification(false));
}

#[test]
fn criterion_09_interlock() {
    run(verification::check_interlock(false));
}

#[test]
fn criterion_10_delta_operator() {
    run(verification::check_delta_operator(false));
}

#[test]
fn criterion_11_property_suites() {
    run(verification::check_property_suites(false));
}
