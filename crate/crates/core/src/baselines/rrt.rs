//! Goal-biased RRT.

use serde::{Deserialize, Serialize};

use crate::baselines::nearest::nearest;
use crate::dccppa::local_step;
use crate::geometry::{distance, segment_collides, Point2, Segment};
use crate::plan::{require, ConfigError, PlanResult, StepMode};
use crate::rng::{RngSeed, TrialRng};
use crate::scenario::Scenario;

/// Sampling rounds allowed per tree node before giving up on a trapped tree.
pub const ATTEMPTS_PER_NODE: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RrtConfig {
    pub step_size: f64,
    /// Probability of sampling the goal instead of a uniform point.
    pub goal_bias: f64,
    pub goal_tolerance: f64,
    /// Tree size limit, root included.
    pub max_nodes: usize,
}

impl Default for RrtConfig {
    fn default() -> Self {
        RrtConfig {
            step_size: 1.0,
            goal_bias: 0.05,
            goal_tolerance: 1.0,
            max_nodes: 10_000,
        }
    }
}

impl RrtConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        const NAME: &str = "rrt";
        require(NAME, self.step_size > 0.0 && self.step_size.is_finite(), || {
            format!("step_size must be finite and > 0 (got {})", self.step_size)
        })?;
        require(NAME, (0.0..=1.0).contains(&self.goal_bias), || {
            format!("goal_bias must lie in [0, 1] (got {})", self.goal_bias)
        })?;
        require(
            NAME,
            self.goal_tolerance > 0.0 && self.goal_tolerance.is_finite(),
            || format!("goal_tolerance must be finite and > 0 (got {})", self.goal_tolerance),
        )?;
        require(NAME, self.max_nodes > 0, || "max_nodes must be > 0".into())
    }
}

/// Tree rooted at index 0; `parents[0]` is `None`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Tree {
    pub nodes: Vec<Point2>,
    pub parents: Vec<Option<usize>>,
}

impl Tree {
    pub fn with_root(root: Point2) -> Self {
        Tree {
            nodes: vec![root],
            parents: vec![None],
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn push(&mut self, p: Point2, parent: usize) -> usize {
        self.nodes.push(p);
        self.parents.push(Some(parent));
        self.nodes.len() - 1
    }

    /// Root-to-`leaf` node sequence.
    pub fn path_to(&self, leaf: usize) -> Vec<Point2> {
        let mut path = vec![self.nodes[leaf]];
        let mut at = leaf;
        while let Some(parent) = self.parents[at] {
            path.push(self.nodes[parent]);
            at = parent;
        }
        path.reverse();
        path
    }
}

/// Grows the tree and returns it alongside the plan.
pub fn rrt_grow(scenario: &Scenario, config: &RrtConfig, seed: RngSeed) -> (Tree, PlanResult) {
    let obstacles = &scenario.obstacles;
    let goal = scenario.goal;
    let mut rng = TrialRng::new(seed);
    let mut tree = Tree::with_root(scenario.start);
    let mut rejected = 0;
    let mut iterations = 0;

    let result = |tree: &Tree, leaf: usize, rejected, iterations, ok| {
        let path = tree.path_to(leaf);
        let mut modes = vec![StepMode::Graph; path.len()];
        modes[0] = StepMode::Start;
        PlanResult {
            path,
            modes,
            nodes_expanded: tree.len(),
            committed: tree.len() - 1,
            rejected,
            iterations_used: iterations,
            succeeded: ok,
        }
    };

    if distance(scenario.start, goal) <= config.goal_tolerance {
        let r = result(&tree, 0, 0, 0, true);
        return (tree, r);
    }

    let max_iterations = config.max_nodes.saturating_mul(ATTEMPTS_PER_NODE);
    while tree.len() < config.max_nodes && iterations < max_iterations {
        iterations += 1;
        let target = if rng.bernoulli(config.goal_bias) {
            goal
        } else {
            rng.point_in(&scenario.bounds)
        };
        let near = nearest(&tree.nodes, target).expect("tree has a root");
        let from = tree.nodes[near];
        let new = local_step(from, target, config.step_size);
        if new == from || segment_collides(&Segment::new(from, new), obstacles) {
            rejected += 1;
            continue;
        }
        let id = tree.push(new, near);
        if distance(new, goal) <= config.goal_tolerance {
            let r = result(&tree, id, rejected, iterations, true);
            return (tree, r);
        }
    }

    // Report the branch that got closest.
    let closest = nearest(&tree.nodes, goal).expect("tree has a root");
    let r = result(&tree, closest, rejected, iterations, false);
    (tree, r)
}

pub fn rrt_plan(
    scenario: &Scenario,
    config: &RrtConfig,
    seed: RngSeed,
) -> Result<PlanResult, ConfigError> {
    config.validate()?;
    Ok(rrt_grow(scenario, config, seed).1)
}
