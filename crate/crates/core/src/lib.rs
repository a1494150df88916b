//! Sampling-based 2D path planning around circular obstacles.
//!
//! * [`dccppa`]: the curvature-constrained planner (local straight steps,
//!   curvature-gated global sampling).
//! * [`baselines`]: goal-biased RRT and k-nearest PRM for comparison.
//! * [`bench`]: seeded multi-trial harness reporting node counts.
//! * [`render`]: SVG figures.
//!
//! Every planner is a pure function of `(scenario, config, seed)`.

pub mod baselines;
pub mod bench;
pub mod dccppa;
pub mod geometry;
pub mod plan;
pub mod render;
pub mod rng;
pub mod scenario;

pub use baselines::{prm_plan, rrt_plan, PrmConfig, RrtConfig};
pub use bench::{
    run_benchmark, scaling_probe, summarize, BenchOptions, BenchReport, PlannerConfigs,
    PlannerKind, TrialRecord,
};
pub use dccppa::{Dccppa, DccppaConfig};
pub use geometry::{path_collides, Bounds, Obstacle, Point2, Segment};
pub use plan::{ConfigError, PlanResult, StepMode};
pub use rng::{RngSeed, RNG_ALGORITHM};
pub use scenario::{generate_scenario, load_scenario, save_scenario, Scenario};
