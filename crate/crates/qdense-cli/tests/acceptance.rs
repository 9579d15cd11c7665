//! Acceptance gate. One test per shipping criterion; each prints a single
//! PASS/FAIL line derived from one shared full verification run, then
//! fails if any of its records failed.
//!
//! Tolerances live in the suite itself (qdense::verify): reference curves
//! are checked to 1e-9 absolute, interval enclosures to width 1e-9, the
//! trend threshold is 3/20 at the largest field tested.

use qdense::verify::{run_suite, SuiteLevel, VerificationReport};
use std::sync::OnceLock;

static REPORT: OnceLock<VerificationReport> = OnceLock::new();

fn report() -> &'static VerificationReport {
    REPORT.get_or_init(|| run_suite(SuiteLevel::Full))
}

fn gate(criterion: usize, prefix: &str, description: &str) {
    let records: Vec<_> = report()
        .records
        .iter()
        .filter(|r| r.name.starts_with(prefix))
        .collect();
    assert!(
        !records.is_empty(),
        "criterion {criterion}: no records with prefix {prefix}"
    );
    let failed: Vec<_> = records.iter().filter(|r| !r.pass).collect();
    let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {verdict} ({description}; {}/{} records passed)",
        records.len() - failed.len(),
        records.len()
    );
    for r in &failed {
        println!("  {} expected {} got {}", r.name, r.expected, r.got);
    }
    assert!(
        failed.is_empty(),
        "criterion {criterion} failed {} of {} records",
        failed.len(),
        records.len()
    );
}

#[test]
fn criterion_01_worked_families() {
    gate(1, "c1-", "five-member and seven-member families end to end");
}

#[test]
fn criterion_02_density_curve_in_q() {
    gate(2, "c2-", "finite-field density upper bounds match the reference curve");
}

#[test]
fn criterion_03_limit_curve_and_crossover() {
    gate(3, "c3-", "limit bounds: enclosure width, reference curve, crossover");
}

#[test]
fn criterion_04_pair_intersection_formula() {
    gate(4, "c4-", "pair-intersection counts agree with exhaustive recounts");
}

#[test]
fn criterion_05_overlap_table() {
    gate(5, "c5-", "ordered-pair overlap table sums correctly and matches its census");
}

#[test]
fn criterion_06_code_censuses() {
    gate(6, "c6-", "small code censuses and their exact densities");
}

#[test]
fn criterion_07_duality() {
    gate(7, "c7-", "duality symmetry of censused densities");
}

#[test]
fn criterion_08_randomized_windows() {
    gate(8, "c8-", "randomized bound windows all contain their censused counts");
}

#[test]
fn criterion_09_large_field_trend() {
    gate(9, "c9-", "deviations shrink with the field and end below threshold");
}

#[test]
fn criterion_10_functional_identities() {
    gate(10, "c10-", "functional counting identities on a full subspace lattice");
}
