//! Planner configuration layering: defaults < `--config` file < flags.

use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::Args;
use curveplan::PlannerConfigs;

#[derive(Debug, Clone, Default, Args)]
pub struct ConfigArgs {
    /// JSON file with optional "dccppa", "rrt" and "prm" sections; missing
    /// fields keep their defaults
    #[arg(long, value_name = "JSON")]
    pub config: Option<PathBuf>,
    /// DCCPPA curvature weight in the objective
    #[arg(long)]
    pub beta: Option<f64>,
    /// DCCPPA curvature threshold
    #[arg(long = "kappa-max", value_name = "KAPPA")]
    pub kappa_max: Option<f64>,
    /// Step size for DCCPPA local steps and RRT extensions
    #[arg(long)]
    pub step: Option<f64>,
    /// Goal tolerance for every planner
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// DCCPPA iteration budget
    #[arg(long)]
    pub iters: Option<usize>,
}

impl ConfigArgs {
    pub fn resolve(&self) -> anyhow::Result<PlannerConfigs> {
        let mut configs = match &self.config {
            Some(path) => read_config(path)?,
            None => PlannerConfigs::default(),
        };
        if let Some(beta) = self.beta {
            configs.dccppa.beta = beta;
        }
        if let Some(kappa) = self.kappa_max {
            configs.dccppa.curvature_threshold = kappa;
        }
        if let Some(step) = self.step {
            configs.dccppa.max_step = step;
            configs.rrt.step_size = step;
        }
        if let Some(tol) = self.tolerance {
            configs.dccppa.goal_tolerance = tol;
            configs.rrt.goal_tolerance = tol;
            configs.prm.goal_tolerance = tol;
        }
        if let Some(iters) = self.iters {
            configs.dccppa.max_iterations = iters;
        }
        configs.validate()?;
        Ok(configs)
    }
}

fn read_config(path: &Path) -> anyhow::Result<PlannerConfigs> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("malformed config {}", path.display()))
}
