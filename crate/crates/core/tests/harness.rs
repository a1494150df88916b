use curveplan::bench::{summarize, NodeStats};
use curveplan::{run_benchmark, BenchOptions, PlannerConfigs, PlannerKind, RngSeed, Scenario};

fn options(threads: usize) -> BenchOptions {
    BenchOptions {
        threads: Some(threads),
        ..Default::default()
    }
}

#[test]
fn records_independent_of_thread_count() {
    let s = Scenario::scenario1();
    let configs = PlannerConfigs::default();
    let one = run_benchmark(&s, &configs, 6, RngSeed(11), &options(1)).unwrap();
    let many = run_benchmark(&s, &configs, 6, RngSeed(11), &options(8)).unwrap();
    assert_eq!(one.trials, many.trials);
    assert_eq!(one.without_timing().to_csv(), many.without_timing().to_csv());
    assert_eq!(one.without_timing().to_json(), many.without_timing().to_json());
}

#[test]
fn summary_recomputes_from_records() {
    let s = Scenario::scenario1();
    let report = run_benchmark(&s, &PlannerConfigs::default(), 8, RngSeed(5), &options(4)).unwrap();
    assert_eq!(summarize(&report.trials).unwrap(), report.summary);
    for planner in PlannerKind::ALL {
        let nodes: Vec<f64> = report
            .trials
            .iter()
            .filter(|t| t.planner == planner && t.succeeded)
            .map(|t| t.nodes_expanded as f64)
            .collect();
        let stats = NodeStats::from_values(&nodes).unwrap();
        let reported = report.summary.iter().find(|x| x.planner == planner).unwrap();
        let r = reported.nodes.as_ref().unwrap();
        assert!((r.mean - stats.mean).abs() < 1e-9);
        assert!((r.std_dev - stats.std_dev).abs() < 1e-9);
        let trials: Vec<_> = report.trials.iter().filter(|t| t.planner == planner).collect();
        assert_eq!(trials.len(), 8);
        assert!(trials.iter().enumerate().all(|(i, t)| t.trial_index == i));
    }
}

#[test]
fn trial_records_meet_invariants() {
    let s = Scenario::scenario1();
    let configs = PlannerConfigs::default();
    let report = run_benchmark(&s, &configs, 10, RngSeed(3), &BenchOptions::default()).unwrap();
    for t in &report.trials {
        if t.succeeded {
            assert!(t.nodes_expanded >= 1);
            assert!(t.path_length >= s.straight_line_distance() - configs.goal_tolerance(t.planner));
            assert!(t.objective_value >= t.path_length);
        }
        assert_eq!(t.seed, t.planner.trial_seed(RngSeed(3), t.trial_index));
    }
}

#[test]
fn json_report_has_frozen_top_level_fields() {
    let s = Scenario::scenario1();
    let report = run_benchmark(&s, &PlannerConfigs::default(), 1, RngSeed(0), &BenchOptions::default()).unwrap();
    let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    for key in ["scenario", "rng", "configs", "trials", "summary"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    let trial = &value["trials"][0];
    for key in ["planner", "trial_index", "seed", "nodes_expanded", "path_length", "objective_value", "succeeded", "wall_time_ms"] {
        assert!(trial.get(key).is_some(), "missing {key}");
    }
}
