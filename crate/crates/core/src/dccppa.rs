//! Dynamic curvature-constrained planning.
//!
//! The planner walks from start toward goal in fixed-size straight steps
//! (local mode). When the next step would violate the curvature threshold or
//! hit an obstacle, it falls back to rejection sampling over the workspace
//! (global mode), accepting only points that satisfy the threshold, are
//! obstacle-free, reachable by a clear segment and, with directional bias on,
//! strictly closer to the goal.
//!
//! "Curvature" here is the proximity metric
//! `kappa(p) = sum over obstacles of 1 / (r_i + d_i)`, with `d_i` the distance
//! from `p` to the center of obstacle `i`. It is not the differential
//! curvature of the path.

use serde::{Deserialize, Serialize};

use crate::geometry::{distance, point_collides, segment_collides, Obstacle, Point2, Segment};
use crate::plan::{require, ConfigError, PlanResult, StepMode};
use crate::rng::{RngSeed, TrialRng};
use crate::scenario::Scenario;

/// Lower clamp on center distance inside `curvature`.
pub const CENTER_DISTANCE_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DccppaConfig {
    /// Weight of curvature deviation in the objective.
    pub beta: f64,
    pub curvature_threshold: f64,
    pub max_step: f64,
    pub goal_tolerance: f64,
    pub max_iterations: usize,
    pub max_global_attempts_per_iteration: usize,
    /// Global samples must strictly reduce distance to the goal.
    pub directional_bias: bool,
    /// Fraction of global samples drawn on inflated obstacle perimeters.
    pub perimeter_bias: f64,
    /// Inflation applied to obstacle radii for perimeter samples.
    pub perimeter_clearance: f64,
}

impl Default for DccppaConfig {
    fn default() -> Self {
        DccppaConfig {
            beta: 1.0,
            curvature_threshold: 1.0,
            max_step: 1.0,
            goal_tolerance: 1.0,
            max_iterations: 10_000,
            max_global_attempts_per_iteration: 1_000,
            directional_bias: true,
            perimeter_bias: 0.0,
            perimeter_clearance: 0.5,
        }
    }
}

impl DccppaConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        const NAME: &str = "dccppa";
        require(NAME, self.beta >= 0.0 && self.beta.is_finite(), || {
            format!("beta must be finite and >= 0 (got {})", self.beta)
        })?;
        for (field, v) in [
            ("curvature_threshold", self.curvature_threshold),
            ("max_step", self.max_step),
            ("goal_tolerance", self.goal_tolerance),
        ] {
            require(NAME, v > 0.0 && v.is_finite(), || {
                format!("{field} must be finite and > 0 (got {v})")
            })?;
        }
        require(NAME, self.max_iterations > 0, || "max_iterations must be > 0".into())?;
        require(NAME, self.max_global_attempts_per_iteration > 0, || {
            "max_global_attempts_per_iteration must be > 0".into()
        })?;
        require(NAME, (0.0..=1.0).contains(&self.perimeter_bias), || {
            format!("perimeter_bias must lie in [0, 1] (got {})", self.perimeter_bias)
        })?;
        require(
            NAME,
            self.perimeter_clearance >= 0.0 && self.perimeter_clearance.is_finite(),
            || format!("perimeter_clearance must be >= 0 (got {})", self.perimeter_clearance),
        )
    }
}

/// Proximity curvature of `p` against every obstacle. Zero with no obstacles.
pub fn curvature(p: Point2, obstacles: &[Obstacle]) -> f64 {
    obstacles
        .iter()
        .map(|o| 1.0 / (o.radius + distance(p, o.center).max(CENTER_DISTANCE_FLOOR)))
        .sum()
}

/// Sum of consecutive segment lengths.
pub fn path_length(path: &[Point2]) -> f64 {
    path.windows(2).map(|w| distance(w[0], w[1])).sum()
}

/// Curvature summed over every path point (every point against every
/// obstacle).
pub fn curvature_deviation(path: &[Point2], obstacles: &[Obstacle]) -> f64 {
    path.iter().map(|&p| curvature(p, obstacles)).sum()
}

/// `path_length + beta * curvature_deviation`.
pub fn objective(path: &[Point2], obstacles: &[Obstacle], beta: f64) -> f64 {
    path_length(path) + beta * curvature_deviation(path, obstacles)
}

/// One straight step of at most `max_step` from `current` toward `goal`.
/// Never overshoots; returns `goal` when already there.
pub fn local_step(current: Point2, goal: Point2, max_step: f64) -> Point2 {
    let dist = distance(current, goal);
    if dist == 0.0 || dist <= max_step {
        return goal;
    }
    let scale = max_step / dist;
    Point2::new(
        current.x + (goal.x - current.x) * scale,
        current.y + (goal.y - current.y) * scale,
    )
}

/// Outcome of one global-search round.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalSample {
    /// `None` when the attempt budget ran out.
    pub point: Option<Point2>,
    pub rejected: usize,
}

/// Rejection-samples a successor for `current`.
///
/// A candidate is accepted when it lies in bounds, is outside every
/// obstacle, satisfies the curvature threshold, is reachable from `current`
/// by a collision-free segment and, with directional bias on, is strictly
/// closer to the goal than `current`.
pub fn global_sample(
    scenario: &Scenario,
    config: &DccppaConfig,
    current: Point2,
    rng: &mut TrialRng,
) -> GlobalSample {
    let obstacles = &scenario.obstacles;
    let current_goal_dist = distance(current, scenario.goal);
    let mut rejected = 0;
    for _ in 0..config.max_global_attempts_per_iteration {
        let candidate = draw_candidate(scenario, config, rng);
        let admissible = scenario.bounds.contains(candidate)
            && (!config.directional_bias || distance(candidate, scenario.goal) < current_goal_dist)
            && !point_collides(candidate, obstacles)
            && curvature(candidate, obstacles) <= config.curvature_threshold
            && !segment_collides(&Segment::new(current, candidate), obstacles);
        if admissible {
            return GlobalSample {
                point: Some(candidate),
                rejected,
            };
        }
        rejected += 1;
    }
    GlobalSample {
        point: None,
        rejected,
    }
}

fn draw_candidate(scenario: &Scenario, config: &DccppaConfig, rng: &mut TrialRng) -> Point2 {
    let obstacles = &scenario.obstacles;
    if config.perimeter_bias > 0.0 && !obstacles.is_empty() && rng.bernoulli(config.perimeter_bias)
    {
        let o = obstacles[rng.index(obstacles.len())];
        let theta = rng.uniform(0.0, std::f64::consts::TAU);
        let r = o.radius + config.perimeter_clearance;
        return Point2::new(o.center.x + r * theta.cos(), o.center.y + r * theta.sin());
    }
    rng.point_in(&scenario.bounds)
}

/// Validated planner handle.
#[derive(Debug, Clone)]
pub struct Dccppa {
    config: DccppaConfig,
}

impl Dccppa {
    pub fn new(config: DccppaConfig) -> Result<Self, ConfigError> {
        config.validate()?;
        Ok(Dccppa { config })
    }

    pub fn config(&self) -> &DccppaConfig {
        &self.config
    }

    pub fn plan(&self, scenario: &Scenario, seed: RngSeed) -> PlanResult {
        let cfg = &self.config;
        let obstacles = &scenario.obstacles;
        let goal = scenario.goal;
        let mut rng = TrialRng::new(seed);

        let mut current = scenario.start;
        let mut path = vec![current];
        let mut modes = vec![StepMode::Start];
        let mut rejected = 0;

        let finish = |path: Vec<Point2>, modes: Vec<StepMode>, rejected, iterations, ok| {
            let committed = path.len() - 1;
            PlanResult {
                nodes_expanded: path.len() + rejected,
                path,
                modes,
                committed,
                rejected,
                iterations_used: iterations,
                succeeded: ok,
            }
        };

        // A start point above the threshold can never appear on a valid path.
        if curvature(current, obstacles) > cfg.curvature_threshold {
            return finish(path, modes, rejected, 0, false);
        }

        for iteration in 0..cfg.max_iterations {
            if distance(current, goal) <= cfg.goal_tolerance {
                return finish(path, modes, rejected, iteration, true);
            }

            let candidate = local_step(current, goal, cfg.max_step);
            let local_ok = curvature(candidate, obstacles) <= cfg.curvature_threshold
                && !segment_collides(&Segment::new(current, candidate), obstacles);
            if local_ok {
                current = candidate;
                path.push(current);
                modes.push(StepMode::Local);
                continue;
            }

            let sample = global_sample(scenario, cfg, current, &mut rng);
            rejected += sample.rejected;
            match sample.point {
                Some(p) => {
                    current = p;
                    path.push(current);
                    modes.push(StepMode::Global);
                }
                None => return finish(path, modes, rejected, iteration + 1, false),
            }
        }

        let ok = distance(current, goal) <= cfg.goal_tolerance;
        finish(path, modes, rejected, cfg.max_iterations, ok)
    }
}

/// Convenience wrapper around [`Dccppa::plan`].
pub fn plan(
    scenario: &Scenario,
    config: &DccppaConfig,
    seed: RngSeed,
) -> Result<PlanResult, ConfigError> {
    Ok(Dccppa::new(config.clone())?.plan(scenario, seed))
}
