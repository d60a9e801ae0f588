use mixed_eulerian::identities::{
    run_suite, verify_cycle, verify_partial_eulerian, verify_type_b_properties, Status, Suite,
};
use mixed_eulerian::oracle::rational;
use mixed_eulerian::{all_compositions, mixed_eulerian_a, volume_poly, Composition, Family};
use num_bigint::BigUint;

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

#[test]
fn full_suite_at_five_passes() {
    let report = run_suite(Suite::All, 5).unwrap();
    let failures: Vec<_> = report.failures().collect();
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(report.checks.iter().any(|c| c.status == Status::Info));
}

#[test]
fn reports_are_reproducible() {
    let first = run_suite(Suite::All, 4).unwrap().to_json(false);
    let second = run_suite(Suite::All, 4).unwrap().to_json(false);
    assert_eq!(first.to_string(), second.to_string());
}

#[test]
fn suite_names_and_limits() {
    assert_eq!("4.1".parse::<Suite>().unwrap(), Suite::TypeA);
    assert_eq!("5.2".parse::<Suite>().unwrap(), Suite::TypeB);
    assert_eq!("ineq".parse::<Suite>().unwrap(), Suite::Inequality);
    assert!("nope".parse::<Suite>().is_err());
    assert!(run_suite(Suite::Cycle, 0).is_err());
    assert!(run_suite(Suite::Cycle, 8).is_err());
}

#[test]
fn sums_at_three_and_four() {
    let total = |n| -> BigUint { all_compositions(n).iter().map(mixed_eulerian_a).sum() };
    assert_eq!(total(3), BigUint::from(30u32));
    assert_eq!(total(4), BigUint::from(336u32));
    for (n, expected) in [(3, 16), (4, 125)] {
        let ones = vec![rational(1, 1); n];
        assert_eq!(
            volume_poly(n, Family::A).unwrap().evaluate(&ones).unwrap(),
            rational(expected, 1)
        );
    }
    assert_eq!(mixed_eulerian_a(&comp(&[0, 3, 0])), BigUint::from(4u32));
}

#[test]
fn cycle_report_lists_catalan_many_classes() {
    let report = verify_cycle(4);
    assert!(report.passed());
    let notes: Vec<String> = report
        .find("cycle.class-count")
        .filter_map(|c| c.note.clone())
        .collect();
    assert_eq!(notes, ["1 classes", "2 classes", "5 classes", "14 classes"]);
}

#[test]
fn partial_eulerian_instance() {
    // A_{1,1,1} = binom(2,2)·A(2,3;1) + binom(3,2)·A(2,2;1) = 0 + 3·2
    assert_eq!(mixed_eulerian_a(&comp(&[1, 1, 1])), BigUint::from(6u32));
    assert!(verify_partial_eulerian(4).passed());
}

#[test]
fn unscaled_binomial_is_informational() {
    let report = verify_type_b_properties(2);
    assert!(report.passed());
    let info: Vec<_> = report.find("type-b.binomial-unscaled").collect();
    assert_eq!(info.len(), 1);
    assert_eq!(info[0].status, Status::Info);
    assert!(info[0].witness.is_some());
    let scaled: Vec<_> = report.find("type-b.binomial-scaled").collect();
    assert_eq!(scaled[0].status, Status::Pass);
}
