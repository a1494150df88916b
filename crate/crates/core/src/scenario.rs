//! Scenario definition, validation, JSON I/O and seeded generation.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{distance, Bounds, Obstacle, Point2};
use crate::rng::{RngSeed, TrialRng};

/// Stand-in obstacle map used by the benchmark suite.
pub const SCENARIO1_JSON: &str = include_str!("../fixtures/scenario1.json");

/// Goal sealed inside a ring of overlapping discs; no planner can reach it.
pub const ENCLOSED_GOAL_JSON: &str = include_str!("../fixtures/enclosed_goal.json");

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed scenario JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid scenario: {0}")]
    Invalid(String),
}

#[derive(Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error("invalid generator arguments: {0}")]
    InvalidArguments(String),
    #[error("workspace too crowded: placed {placed} of {requested} obstacles before exhausting {attempts} attempts")]
    Crowded {
        placed: usize,
        requested: usize,
        attempts: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    pub bounds: Bounds,
    pub obstacles: Vec<Obstacle>,
    pub start: Point2,
    pub goal: Point2,
}

impl Scenario {
    /// Checks every structural invariant and reports the first violation.
    pub fn validate(&self) -> Result<(), ScenarioError> {
        let invalid = |msg: String| Err(ScenarioError::Invalid(msg));
        let b = &self.bounds;
        if ![b.min_x, b.min_y, b.max_x, b.max_y].iter().all(|v| v.is_finite()) {
            return invalid("bounds contain a non-finite value".into());
        }
        if b.width() <= 0.0 || b.height() <= 0.0 {
            return invalid(format!(
                "bounds must have positive width and height (got {} x {})",
                b.width(),
                b.height()
            ));
        }
        for (label, p) in [("start", self.start), ("goal", self.goal)] {
            if !p.is_finite() {
                return invalid(format!("{label} has a non-finite coordinate"));
            }
            if !b.contains(p) {
                return invalid(format!("{label} ({}, {}) lies outside bounds", p.x, p.y));
            }
        }
        for (i, o) in self.obstacles.iter().enumerate() {
            if !o.center.is_finite() || !o.radius.is_finite() {
                return invalid(format!("obstacle {i} has a non-finite value"));
            }
            if o.radius <= 0.0 {
                return invalid(format!("obstacle {i} has non-positive radius {}", o.radius));
            }
            if !b.contains(o.center) {
                return invalid(format!("obstacle {i} center lies outside bounds"));
            }
            if o.contains(self.start) {
                return invalid(format!("start inside obstacle {i}"));
            }
            if o.contains(self.goal) {
                return invalid(format!("goal inside obstacle {i}"));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Scenario, ScenarioError> {
        let scenario: Scenario = serde_json::from_str(text)?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serialization is infallible")
    }

    pub fn scenario1() -> Scenario {
        Scenario::from_json(SCENARIO1_JSON).expect("bundled scenario1 fixture is valid")
    }

    pub fn enclosed_goal() -> Scenario {
        Scenario::from_json(ENCLOSED_GOAL_JSON).expect("bundled enclosed_goal fixture is valid")
    }

    pub fn straight_line_distance(&self) -> f64 {
        distance(self.start, self.goal)
    }
}

pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario, ScenarioError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| ScenarioError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Scenario::from_json(&text)
}

pub fn save_scenario(scenario: &Scenario, path: impl AsRef<Path>) -> Result<(), ScenarioError> {
    let path = path.as_ref();
    let mut text = scenario.to_json();
    text.push('\n');
    fs::write(path, text).map_err(|source| ScenarioError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// Attempts allowed per obstacle before giving up.
pub const PLACEMENT_ATTEMPTS: usize = 1_000;

/// Fraction of the workspace extent used to inset start and goal from the
/// lower-left and upper-right corners.
const CORNER_INSET: f64 = 0.05;

/// Random scenario with `n_obstacles` discs, start near the lower-left
/// corner and goal near the upper-right one. Pure in its arguments.
pub fn generate_scenario(
    bounds: Bounds,
    n_obstacles: usize,
    radius_range: (f64, f64),
    seed: RngSeed,
) -> Result<Scenario, GenerateError> {
    let (r_min, r_max) = radius_range;
    if !(r_min > 0.0 && r_min <= r_max && r_max.is_finite()) {
        return Err(GenerateError::InvalidArguments(format!(
            "radius range must satisfy 0 < min <= max (got [{r_min}, {r_max}])"
        )));
    }
    if !(bounds.width() > 0.0 && bounds.height() > 0.0) {
        return Err(GenerateError::InvalidArguments(
            "bounds must have positive width and height".into(),
        ));
    }

    let start = Point2::new(
        bounds.min_x + CORNER_INSET * bounds.width(),
        bounds.min_y + CORNER_INSET * bounds.height(),
    );
    let goal = Point2::new(
        bounds.max_x - CORNER_INSET * bounds.width(),
        bounds.max_y - CORNER_INSET * bounds.height(),
    );

    let mut rng = TrialRng::new(seed);
    let mut obstacles = Vec::with_capacity(n_obstacles);
    for placed in 0..n_obstacles {
        let mut accepted = None;
        for _ in 0..PLACEMENT_ATTEMPTS {
            let center = rng.point_in(&bounds);
            let radius = rng.uniform(r_min, r_max);
            let o = Obstacle { center, radius };
            if !o.contains(start) && !o.contains(goal) {
                accepted = Some(o);
                break;
            }
        }
        match accepted {
            Some(o) => obstacles.push(o),
            None => {
                return Err(GenerateError::Crowded {
                    placed,
                    requested: n_obstacles,
                    attempts: PLACEMENT_ATTEMPTS,
                })
            }
        }
    }

    Ok(Scenario {
        name: format!("generated-{}-{}", n_obstacles, seed.0),
        bounds,
        obstacles,
        start,
        goal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(side: f64) -> Bounds {
        Bounds::new(0.0, 0.0, side, side)
    }

    #[test]
    fn minimal_file_loads() {
        let json = r#"{"name":"empty","bounds":{"min_x":0,"min_y":0,"max_x":100,"max_y":100},
            "obstacles":[],"start":{"x":5,"y":5},"goal":{"x":95,"y":95}}"#;
        let s = Scenario::from_json(json).unwrap();
        assert!(s.obstacles.is_empty());
        assert_eq!(s.start, Point2::new(5.0, 5.0));
        assert_eq!(s.goal, Point2::new(95.0, 95.0));
    }

    #[test]
    fn start_inside_obstacle_is_rejected() {
        let json = r#"{"name":"bad","bounds":{"min_x":0,"min_y":0,"max_x":100,"max_y":100},
            "obstacles":[{"cx":50,"cy":50,"r":2},{"cx":6,"cy":5,"r":3}],
            "start":{"x":5,"y":5},"goal":{"x":95,"y":95}}"#;
        let err = Scenario::from_json(json).unwrap_err();
        assert_eq!(err.to_string(), "invalid scenario: start inside obstacle 1");
    }

    #[test]
    fn missing_field_is_a_parse_error() {
        let json = r#"{"name":"x","obstacles":[],"start":{"x":5,"y":5},"goal":{"x":9,"y":9}}"#;
        assert!(matches!(Scenario::from_json(json), Err(ScenarioError::Parse(_))));
    }

    #[test]
    fn degenerate_bounds_rejected() {
        let s = Scenario {
            name: "flat".into(),
            bounds: Bounds::new(0.0, 0.0, 10.0, 0.0),
            obstacles: vec![],
            start: Point2::new(0.0, 0.0),
            goal: Point2::new(5.0, 0.0),
        };
        assert!(matches!(s.validate(), Err(ScenarioError::Invalid(_))));
    }

    #[test]
    fn obstacle_center_outside_bounds_rejected() {
        let mut s = generate_scenario(square(100.0), 0, (1.0, 2.0), RngSeed(0)).unwrap();
        s.obstacles.push(Obstacle::new(120.0, 50.0, 30.0));
        let err = s.validate().unwrap_err().to_string();
        assert!(err.contains("obstacle 0 center"), "{err}");
    }

    #[test]
    fn goal_on_boundary_is_admissible() {
        let mut s = generate_scenario(square(100.0), 0, (1.0, 2.0), RngSeed(0)).unwrap();
        s.obstacles.push(Obstacle::new(s.goal.x - 2.0, s.goal.y, 2.0));
        s.validate().unwrap();
    }

    #[test]
    fn fixtures_load() {
        assert_eq!(Scenario::scenario1().obstacles.len(), 6);
        Scenario::enclosed_goal();
    }

    #[test]
    fn no_obstacles_generates_corner_offsets() {
        let s = generate_scenario(square(100.0), 0, (1.0, 5.0), RngSeed(3)).unwrap();
        assert!(s.obstacles.is_empty());
        assert_eq!(s.start, Point2::new(5.0, 5.0));
        assert_eq!(s.goal, Point2::new(95.0, 95.0));
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_scenario(square(100.0), 25, (2.0, 6.0), RngSeed(11)).unwrap();
        let b = generate_scenario(square(100.0), 25, (2.0, 6.0), RngSeed(11)).unwrap();
        let c = generate_scenario(square(100.0), 25, (2.0, 6.0), RngSeed(12)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn generated_scenarios_validate() {
        for seed in 0..50 {
            let s = generate_scenario(square(100.0), 30, (1.0, 10.0), RngSeed(seed)).unwrap();
            s.validate().unwrap();
            assert_eq!(s.obstacles.len(), 30);
        }
    }

    #[test]
    fn crowded_workspace_fails() {
        // Every center in a 1x1 box is within sqrt(2) of start, inside any
        // disc of radius >= 5, so no placement can ever be accepted.
        let err = generate_scenario(square(1.0), 200, (5.0, 6.0), RngSeed(0)).unwrap_err();
        assert_eq!(
            err,
            GenerateError::Crowded {
                placed: 0,
                requested: 200,
                attempts: PLACEMENT_ATTEMPTS
            }
        );
    }

    #[test]
    fn bad_radius_range() {
        assert!(matches!(
            generate_scenario(square(10.0), 1, (3.0, 1.0), RngSeed(0)),
            Err(GenerateError::InvalidArguments(_))
        ));
        assert!(matches!(
            generate_scenario(square(10.0), 1, (0.0, 1.0), RngSeed(0)),
            Err(GenerateError::InvalidArguments(_))
        ));
    }
}
