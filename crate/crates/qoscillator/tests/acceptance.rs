//! Acceptance gate: one test (and one printed pass/fail line) per
//! criterion. Run with `--nocapture` to see the lines for passing
//! criteria as well.

use qoscillator::identity::{
    corrupted_hermite_source, verify_algebra_relations, verify_connection_formula,
    verify_connection_formula_with, verify_eigenfunctions, verify_generating_function,
    verify_generating_function_with, verify_matrix_elements, verify_q_binomial_theorem,
    verify_realization, verify_specialization, verify_transformation_formula,
    GeneratingFunction, IdentityReport, Specialization,
};
use qoscillator::numeric::{check_limit, LimitCheckSpec, LimitIdentity};
use qoscillator::qfunctions::QuarterInt;

fn gate(criterion: u32, name: &str, reports: &[IdentityReport]) {
    let pass = reports.iter().all(|r| r.is_pass());
    println!(
        "criterion {:2} ({}): {}",
        criterion,
        name,
        if pass { "pass" } else { "FAIL" }
    );
    for r in reports {
        assert!(
            r.is_pass(),
            "criterion {} failed in {}: {:?}",
            criterion,
            r.identity,
            r.counterexample
        );
    }
}

fn quarters() -> [QuarterInt; 4] {
    [QuarterInt(0), QuarterInt(1), QuarterInt(2), QuarterInt(3)]
}

#[test]
fn criterion_01_connection_formula() {
    gate(
        1,
        "connection formula with derivation replay, n <= 12",
        &[verify_connection_formula(12)],
    );
}

#[test]
fn criterion_02_generating_functions() {
    gate(
        2,
        "generating functions, exact to t-order 16",
        &[
            verify_generating_function(GeneratingFunction::Eq37, 16),
            verify_generating_function(GeneratingFunction::Eq40, 16),
        ],
    );
}

#[test]
fn criterion_03_algebra_relations() {
    gate(
        3,
        "algebra relations on the 32-dimensional truncation",
        &[verify_algebra_relations(32)],
    );
}

#[test]
fn criterion_04_realization_consistency() {
    gate(
        4,
        "difference realization vs representation, n <= 20",
        &[verify_realization(20)],
    );
}

#[test]
fn criterion_05_matrix_elements() {
    gate(
        5,
        "closed-form matrix elements vs truncated oracle, m,n <= 8, all quarter exponents",
        &[verify_matrix_elements(8, &quarters(), 32, 16)],
    );
}

#[test]
fn criterion_06_specializations() {
    gate(
        6,
        "Wall and q-Laguerre specializations, n <= 10, gamma <= 4",
        &[
            verify_specialization(Specialization::Eq19Wall, 10, 4),
            verify_specialization(Specialization::Eq21Laguerre, 10, 4),
        ],
    );
}

#[test]
fn criterion_07_eigenfunctions() {
    gate(
        7,
        "eigenfunction properties to series order 12",
        &[verify_eigenfunctions(12)],
    );
}

#[test]
fn criterion_08_hypergeometric_identities() {
    gate(
        8,
        "q-binomial theorem (order 12) and transformation formula (n <= 8, c = q^9..q^13)",
        &[
            verify_q_binomial_theorem(12),
            verify_transformation_formula(8, &[9, 10, 11, 12, 13]),
        ],
    );
}

#[test]
fn criterion_09_classical_limits() {
    let mut reports = Vec::new();
    for n in 0..=6 {
        reports.push(check_limit(&LimitCheckSpec::new(LimitIdentity::Eq6, n)).unwrap());
        reports.push(check_limit(&LimitCheckSpec::new(LimitIdentity::Eq33, n)).unwrap());
    }
    for n in 0..=8 {
        reports.push(check_limit(&LimitCheckSpec::new(LimitIdentity::Eq32, n)).unwrap());
    }
    for mu in quarters() {
        reports.push(
            check_limit(&LimitCheckSpec::new(LimitIdentity::QExpLimit, 0).with_mu(mu)).unwrap(),
        );
    }
    gate(
        9,
        "classical q -> 1 limits with monotone-convergence gate",
        &reports,
    );
}

#[test]
fn criterion_10_fault_sensitivity() {
    let bad = corrupted_hermite_source(5);
    let connection = verify_connection_formula_with(12, &bad);
    let generating = verify_generating_function_with(GeneratingFunction::Eq37, 16, &bad);
    let mut pass = true;

    // Both verifiers must fail, each with a counterexample localized to
    // the corrupted degree.
    for (report, key, loc) in [
        (&connection, "n", 5u64),
        (&generating, "t_order", 5u64),
    ] {
        if report.is_pass() {
            pass = false;
            continue;
        }
        let cex = report.counterexample.as_ref().expect("fail implies counterexample");
        if cex.point.get(key).and_then(|v| v.as_u64()) != Some(loc) {
            pass = false;
        }
        if cex.difference.is_empty() || cex.difference == "0" {
            pass = false;
        }
    }

    // The clean sources must still pass, so the failure is attributable
    // to the injected corruption alone.
    if !verify_connection_formula(5).is_pass() {
        pass = false;
    }

    println!(
        "criterion 10 (fault sensitivity: corrupted degree-5 coefficient detected): {}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(
        pass,
        "fault injection not detected or not localized: {:?} / {:?}",
        connection.counterexample, generating.counterexample
    );
}
