//! The fourteen acceptance criteria, one test each, run with the full suite.
//! Each test prints one PASS/FAIL line per check.

use polyfault::verify::{run_criterion, Status, Suite};

fn criterion(id: u8) {
    let checks = run_criterion(id, Suite::Full);
    let mut failed = Vec::new();
    for check in &checks {
        let status = if check.status == Status::Fail { "FAIL" } else { "PASS" };
        println!("criterion {id:>2} {status}: {check}");
        if check.status != Status::Pass {
            failed.push(check.to_string());
        }
    }
    assert!(failed.is_empty(), "criterion {id}:\n{}", failed.join("\n"));
}

#[test]
fn criterion_01_four_row_closed_form() {
    criterion(1);
}

#[test]
fn criterion_02_five_row_generating_function() {
    criterion(2);
}

#[test]
fn criterion_03_three_rows_have_faults() {
    criterion(3);
}

#[test]
fn criterion_04_faultfree_construction() {
    criterion(4);
}

#[test]
fn criterion_05_min_crossing_construction() {
    criterion(5);
}

#[test]
fn criterion_06_crossing_number_cap() {
    criterion(6);
}

#[test]
fn criterion_07_crossing_conservation() {
    criterion(7);
}

#[test]
fn criterion_08_six_row_lower_bound() {
    criterion(8);
}

#[test]
fn criterion_09_seven_row_system() {
    criterion(9);
}

#[test]
fn criterion_10_upper_bound() {
    criterion(10);
}

#[test]
fn criterion_11_domino_product_formula() {
    criterion(11);
}

#[test]
fn criterion_12_monodic_injectivity() {
    criterion(12);
}

#[test]
fn criterion_13_enumeration_matches_dp() {
    criterion(13);
}

#[test]
fn criterion_14_six_by_six_seed_count() {
    criterion(14);
}
