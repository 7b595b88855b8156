//! Suite-level behavior: every checker passes on a small grid, reports are
//! deterministic, a corrupted table is caught, and id resolution errors are
//! surfaced by name.

use hbp_core::identity::{run_identity, run_suite, UnknownIdentity};
use hbp_core::{HbTable, IdentityId, ParamGrid};

fn small_grid() -> ParamGrid {
    ParamGrid::new((1, 3), (1, 3), (0, 10), (1, 3), 12)
}

#[test]
fn every_identity_passes_on_a_small_grid() {
    let grid = small_grid();
    let mut table = HbTable::new();
    for report in run_suite(&IdentityId::ALL, &grid, &mut table) {
        assert!(
            report.pass(),
            "{} failed: {:?}",
            report.id,
            report.failures.first()
        );
        assert!(report.checked > 0, "{} checked nothing", report.id);
    }
}

#[test]
fn reports_are_deterministic() {
    let grid = small_grid();
    let mut t1 = HbTable::new();
    let mut t2 = HbTable::new();
    let ids = [
        IdentityId::ConvolutionConstancy,
        IdentityId::EgfIdentity1,
        IdentityId::SopClosedFormCheck,
    ];
    let first = run_suite(&ids, &grid, &mut t1);
    let second = run_suite(&ids, &grid, &mut t2);
    for (a, b) in first.iter().zip(&second) {
        assert_eq!(a.content(), b.content());
    }
}

#[test]
fn corrupted_table_produces_counterexamples() {
    let grid = small_grid();
    let mut table = HbTable::new();
    table.corrupt_entry(2, 2);
    let report = run_identity(IdentityId::Kamano, &grid, &mut table);
    assert!(!report.pass());
    let failure = &report.failures[0];
    assert_ne!(failure.lhs, failure.rhs);
    assert!(!failure.params.is_empty());
}

#[test]
fn report_order_matches_input_order() {
    let grid = ParamGrid::new((1, 2), (1, 2), (0, 4), (1, 2), 8);
    let mut table = HbTable::new();
    let ids = [
        IdentityId::Kamano,
        IdentityId::EulerLinear,
        IdentityId::BAtOne,
    ];
    let reports = run_suite(&ids, &grid, &mut table);
    let got: Vec<IdentityId> = reports.iter().map(|r| r.id).collect();
    assert_eq!(got, ids);
}

#[test]
fn vacuous_degree_range_still_passes() {
    // degrees below every stated validity range: nothing checked, no failures
    let grid = ParamGrid::new((1, 2), (1, 2), (-3, -1), (1, 2), 8);
    let mut table = HbTable::new();
    let report = run_identity(IdentityId::EulerQuadratic, &grid, &mut table);
    assert_eq!(report.checked, 0);
    assert!(report.pass());
}

#[test]
fn unknown_identity_is_an_error_naming_it() {
    let err = "euler_cubic".parse::<IdentityId>().unwrap_err();
    assert_eq!(err, UnknownIdentity("euler_cubic".into()));
    assert!(err.to_string().contains("euler_cubic"));
}

#[test]
fn euler_even_quadratic_records_its_domain_gap() {
    let grid = ParamGrid::new((1, 1), (1, 1), (0, 5), (1, 1), 8);
    let mut table = HbTable::new();
    let report = run_identity(IdentityId::EulerEvenQuadratic, &grid, &mut table);
    assert!(report.pass());
    assert_eq!(report.checked, 5); // degrees 0, 2, 3, 4, 5
    assert!(report.notes.iter().any(|n| n.contains("n=1 excluded")));
}
