//! The verification suites are deterministic and independent of execution.

use fgsp6::par::Execution;
use fgsp6::verify::{self, Config, SUITES};

#[test]
fn sequential_and_parallel_reports_agree() {
    for s in SUITES {
        let base = Config { seed: 11, trials: Some(4), ..Config::default() };
        let a = verify::run_suite(s, &Config { exec: Execution::Sequential, ..base.clone() }).unwrap();
        let b = verify::run_suite(s, &Config { exec: Execution::Parallel, ..base }).unwrap();
        assert!(a.passed(), "{a}");
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
    }
}

#[test]
fn all_expands_in_order() {
    let cfg = Config { trials: Some(0), ..Config::default() };
    let reports = verify::run(&["all".to_string()], &cfg).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.suite.as_str()).collect();
    assert_eq!(names, SUITES);
    assert!(reports.iter().all(|r| r.passed()));
}
