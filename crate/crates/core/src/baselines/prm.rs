//! Single-query PRM: sample, connect k-nearest, search.

use serde::{Deserialize, Serialize};

use crate::baselines::roadmap::Roadmap;
use crate::geometry::{distance, point_collides};
use crate::plan::{require, ConfigError, PlanResult, StepMode};
use crate::rng::{RngSeed, TrialRng};
use crate::scenario::Scenario;

/// Draws allowed per requested sample before settling for fewer.
pub const DRAWS_PER_SAMPLE: usize = 1_000;

pub const START_NODE: usize = 0;
pub const GOAL_NODE: usize = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PrmConfig {
    pub n_samples: usize,
    pub k_neighbors: usize,
    pub goal_tolerance: f64,
}

impl Default for PrmConfig {
    fn default() -> Self {
        PrmConfig {
            n_samples: 300,
            k_neighbors: 10,
            goal_tolerance: 1.0,
        }
    }
}

impl PrmConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        const NAME: &str = "prm";
        require(NAME, self.n_samples > 0, || "n_samples must be > 0".into())?;
        require(NAME, self.k_neighbors > 0, || "k_neighbors must be > 0".into())?;
        require(NAME, self.k_neighbors < self.n_samples, || {
            format!(
                "k_neighbors ({}) must be smaller than n_samples ({})",
                self.k_neighbors, self.n_samples
            )
        })?;
        require(
            NAME,
            self.goal_tolerance > 0.0 && self.goal_tolerance.is_finite(),
            || format!("goal_tolerance must be finite and > 0 (got {})", self.goal_tolerance),
        )
    }
}

/// Builds the roadmap (start at index 0, goal at 1, samples after) and the
/// number of rejected draws.
pub fn build_roadmap(scenario: &Scenario, config: &PrmConfig, seed: RngSeed) -> (Roadmap, usize) {
    let mut rng = TrialRng::new(seed);
    let mut nodes = Vec::with_capacity(config.n_samples + 2);
    nodes.push(scenario.start);
    nodes.push(scenario.goal);
    let mut rejected = 0;
    let budget = config.n_samples.saturating_mul(DRAWS_PER_SAMPLE);
    let mut draws = 0;
    while nodes.len() < config.n_samples + 2 && draws < budget {
        draws += 1;
        let p = rng.point_in(&scenario.bounds);
        if point_collides(p, &scenario.obstacles) {
            rejected += 1;
        } else {
            nodes.push(p);
        }
    }
    let map = Roadmap::connect_k_nearest(nodes, config.k_neighbors, &scenario.obstacles);
    (map, rejected)
}

pub fn prm_plan(
    scenario: &Scenario,
    config: &PrmConfig,
    seed: RngSeed,
) -> Result<PlanResult, ConfigError> {
    config.validate()?;
    let (map, rejected) = build_roadmap(scenario, config, seed);
    let nodes_expanded = map.nodes.len();

    let (route, succeeded) = match map.shortest_path(START_NODE, GOAL_NODE) {
        Some((route, _)) => (route, true),
        None => (vec![START_NODE], false),
    };
    let path: Vec<_> = route.iter().map(|&i| map.nodes[i]).collect();
    let succeeded = succeeded
        && distance(*path.last().expect("route is nonempty"), scenario.goal)
            <= config.goal_tolerance;
    let mut modes = vec![StepMode::Graph; path.len()];
    modes[0] = StepMode::Start;

    Ok(PlanResult {
        path,
        modes,
        nodes_expanded,
        committed: nodes_expanded - 1,
        rejected,
        iterations_used: 1,
        succeeded,
    })
}
