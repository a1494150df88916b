//! Result type shared by every planner.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dccppa::{objective, path_length};
use crate::geometry::{Obstacle, Point2};

/// How a path point was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepMode {
    Start,
    /// Fixed-size step straight toward the goal.
    Local,
    /// Accepted random sample.
    Global,
    /// Vertex of an RRT tree or PRM roadmap.
    Graph,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanResult {
    /// Starts at the scenario start. When `succeeded`, ends within the goal
    /// tolerance of the goal.
    pub path: Vec<Point2>,
    /// One entry per path point.
    pub modes: Vec<StepMode>,
    /// The comparison metric: every node the planner materialized.
    pub nodes_expanded: usize,
    /// Nodes added after the start (DCCPPA: committed steps; RRT: tree
    /// nodes beyond the root; PRM: roadmap nodes beyond the start).
    pub committed: usize,
    /// Samples drawn and thrown away. Counted in `nodes_expanded` for
    /// DCCPPA only.
    pub rejected: usize,
    pub iterations_used: usize,
    pub succeeded: bool,
}

impl PlanResult {
    pub fn path_length(&self) -> f64 {
        path_length(&self.path)
    }

    pub fn objective(&self, obstacles: &[Obstacle], beta: f64) -> f64 {
        objective(&self.path, obstacles, beta)
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("invalid {planner} config: {message}")]
pub struct ConfigError {
    pub planner: &'static str,
    pub message: String,
}

impl ConfigError {
    pub(crate) fn new(planner: &'static str, message: impl Into<String>) -> Self {
        ConfigError {
            planner,
            message: message.into(),
        }
    }
}

pub(crate) fn require(
    planner: &'static str,
    ok: bool,
    message: impl FnOnce() -> String,
) -> Result<(), ConfigError> {
    if ok {
        Ok(())
    } else {
        Err(ConfigError::new(planner, message()))
    }
}
