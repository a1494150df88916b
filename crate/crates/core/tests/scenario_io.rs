use curveplan::scenario::ScenarioError;
use proptest::prelude::*;
use curveplan::{generate_scenario, load_scenario, save_scenario, Bounds, RngSeed, Scenario};

#[test]
fn round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        Scenario::scenario1(),
        Scenario::enclosed_goal(),
        generate_scenario(Bounds::new(0.0, 0.0, 100.0, 100.0), 0, (1.0, 2.0), RngSeed(1)).unwrap(),
        generate_scenario(Bounds::new(-50.0, 10.0, 150.0, 90.0), 50, (0.5, 7.5), RngSeed(2)).unwrap(),
    ];
    for (i, s) in cases.iter().enumerate() {
        let path = dir.path().join(format!("s{i}.json"));
        save_scenario(s, &path).unwrap();
        let back = load_scenario(&path).unwrap();
        assert_eq!(&back, s);
        back.validate().unwrap();
    }
    let empty = dir.path().join("s2.json");
    let text = std::fs::read_to_string(empty).unwrap();
    assert!(text.contains("\"obstacles\": []"));
}

#[test]
fn missing_file_names_the_path() {
    let err = load_scenario("/nonexistent/where.json").unwrap_err();
    assert!(matches!(err, ScenarioError::Read { .. }));
    assert!(err.to_string().contains("/nonexistent/where.json"));
}

#[test]
fn malformed_json_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert!(matches!(load_scenario(&path), Err(ScenarioError::Parse(_))));
}

proptest! {
    #[test]
    fn json_round_trip_is_exact(seed in any::<u64>(), n in 0usize..40, side in 10.0..500.0f64) {
        let s = generate_scenario(Bounds::new(0.0, 0.0, side, side), n, (0.1, side / 20.0), RngSeed(seed)).unwrap();
        prop_assert_eq!(Scenario::from_json(&s.to_json()).unwrap(), s);
    }
}
