//! Reference planners measured with the same node-count metric.

pub mod nearest;
pub mod prm;
pub mod roadmap;
pub mod rrt;

pub use prm::{prm_plan, PrmConfig};
pub use roadmap::Roadmap;
pub use rrt::{rrt_plan, RrtConfig, Tree};
