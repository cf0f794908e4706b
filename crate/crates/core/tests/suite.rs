use hypercauchy_core::verification::{run_suite, Suite};

#[test]
fn every_suite_runs_and_only_the_symmetrization_check_fails() {
    let mut failures = Vec::new();
    let mut total = 0;
    for suite in Suite::NAMED {
        let start = std::time::Instant::now();
        let reports = run_suite(suite);
        println!("{suite}: {} checks in {:.2?}", reports.len(), start.elapsed());
        total += reports.len();
        for r in reports {
            if !r.passed() {
                println!("FAIL {}: {} vs {} ({})", r.check_name(), r.measured(), r.expected(), r.detail());
                failures.push(r.check_name().to_string());
            }
        }
    }
    assert!(total > 500);
    assert_eq!(failures.len(), 1, "{failures:?}");
    assert!(failures[0].starts_with("symmetrized vs exact component"));
}

#[test]
fn suites_are_deterministic() {
    assert_eq!(run_suite(Suite::Sampling), run_suite(Suite::Sampling));
}
