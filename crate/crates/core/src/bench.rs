//! Repeated seeded trials of every planner on one scenario, node-count
//! statistics, and report serialization.
//!
//! Trials may run on a worker pool; records are always returned in
//! (planner, trial index) order, so output does not depend on the degree of
//! parallelism. Wall time is reported but excluded from record equality.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::baselines::{prm_plan, rrt_plan, PrmConfig, RrtConfig};
use crate::dccppa::{Dccppa, DccppaConfig};
use crate::geometry::Bounds;
use crate::plan::{ConfigError, PlanResult};
use crate::rng::{RngSeed, RNG_ALGORITHM};
use crate::scenario::{generate_scenario, GenerateError, Scenario};

pub const CSV_HEADER: &str = "planner,trial,seed,nodes,path_length,objective,succeeded,wall_ms";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("n_trials must be at least 1")]
    NoTrials,
    #[error("no records to summarize")]
    EmptyRecords,
    #[error("scaling probe needs at least one problem size")]
    NoSizes,
    #[error("no planners selected")]
    NoPlanners,
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("cannot build worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlannerKind {
    #[serde(rename = "DCCPPA")]
    Dccppa,
    #[serde(rename = "RRT")]
    Rrt,
    #[serde(rename = "PRM")]
    Prm,
}

impl PlannerKind {
    pub const ALL: [PlannerKind; 3] = [PlannerKind::Dccppa, PlannerKind::Rrt, PlannerKind::Prm];

    pub fn label(self) -> &'static str {
        match self {
            PlannerKind::Dccppa => "DCCPPA",
            PlannerKind::Rrt => "RRT",
            PlannerKind::Prm => "PRM",
        }
    }

    /// Stream tag used when deriving per-trial seeds.
    fn seed_tag(self) -> u64 {
        match self {
            PlannerKind::Dccppa => 1,
            PlannerKind::Rrt => 2,
            PlannerKind::Prm => 3,
        }
    }

    pub fn trial_seed(self, base: RngSeed, trial_index: usize) -> RngSeed {
        base.child(self.seed_tag(), trial_index as u64)
    }
}

impl std::fmt::Display for PlannerKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for PlannerKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dccppa" => Ok(PlannerKind::Dccppa),
            "rrt" => Ok(PlannerKind::Rrt),
            "prm" => Ok(PlannerKind::Prm),
            other => Err(format!("unknown planner {other:?} (expected dccppa, rrt or prm)")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PlannerConfigs {
    pub dccppa: DccppaConfig,
    pub rrt: RrtConfig,
    pub prm: PrmConfig,
}

impl PlannerConfigs {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.dccppa.validate()?;
        self.rrt.validate()?;
        self.prm.validate()
    }

    /// Runs one planner. Configs must already be valid.
    pub fn run(&self, planner: PlannerKind, scenario: &Scenario, seed: RngSeed) -> Result<PlanResult, ConfigError> {
        match planner {
            PlannerKind::Dccppa => Ok(Dccppa::new(self.dccppa.clone())?.plan(scenario, seed)),
            PlannerKind::Rrt => rrt_plan(scenario, &self.rrt, seed),
            PlannerKind::Prm => prm_plan(scenario, &self.prm, seed),
        }
    }

    pub fn goal_tolerance(&self, planner: PlannerKind) -> f64 {
        match planner {
            PlannerKind::Dccppa => self.dccppa.goal_tolerance,
            PlannerKind::Rrt => self.rrt.goal_tolerance,
            PlannerKind::Prm => self.prm.goal_tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialRecord {
    pub planner: PlannerKind,
    pub trial_index: usize,
    pub seed: RngSeed,
    pub nodes_expanded: usize,
    pub path_length: f64,
    /// Objective of the returned path under the DCCPPA beta.
    pub objective_value: f64,
    pub succeeded: bool,
    pub wall_time_ms: f64,
}

impl PartialEq for TrialRecord {
    fn eq(&self, other: &Self) -> bool {
        self.planner == other.planner
            && self.trial_index == other.trial_index
            && self.seed == other.seed
            && self.nodes_expanded == other.nodes_expanded
            && self.path_length.to_bits() == other.path_length.to_bits()
            && self.objective_value.to_bits() == other.objective_value.to_bits()
            && self.succeeded == other.succeeded
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeStats {
    pub mean: f64,
    pub median: f64,
    pub min: f64,
    pub max: f64,
    /// Sample standard deviation (n - 1); zero for a single value.
    pub std_dev: f64,
}

impl NodeStats {
    pub fn from_values(values: &[f64]) -> Option<NodeStats> {
        if values.is_empty() {
            return None;
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mid = sorted.len() / 2;
        let median = if sorted.len().is_multiple_of(2) {
            (sorted[mid - 1] + sorted[mid]) / 2.0
        } else {
            sorted[mid]
        };
        let std_dev = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        Some(NodeStats {
            mean,
            median,
            min: sorted[0],
            max: sorted[sorted.len() - 1],
            std_dev,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlannerSummary {
    pub planner: PlannerKind,
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    /// Over succeeded trials only; `None` when none succeeded.
    pub nodes: Option<NodeStats>,
}

/// Per-planner statistics, in planner order.
pub fn summarize(records: &[TrialRecord]) -> Result<Vec<PlannerSummary>, BenchError> {
    if records.is_empty() {
        return Err(BenchError::EmptyRecords);
    }
    let mut out = Vec::new();
    for planner in PlannerKind::ALL {
        let mine: Vec<&TrialRecord> = records.iter().filter(|r| r.planner == planner).collect();
        if mine.is_empty() {
            continue;
        }
        let nodes: Vec<f64> = mine
            .iter()
            .filter(|r| r.succeeded)
            .map(|r| r.nodes_expanded as f64)
            .collect();
        out.push(PlannerSummary {
            planner,
            trials: mine.len(),
            successes: nodes.len(),
            success_rate: nodes.len() as f64 / mine.len() as f64,
            nodes: NodeStats::from_values(&nodes),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub scenario: Scenario,
    pub rng: String,
    pub configs: PlannerConfigs,
    pub trials: Vec<TrialRecord>,
    pub summary: Vec<PlannerSummary>,
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub planners: Vec<PlannerKind>,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            planners: PlannerKind::ALL.to_vec(),
            threads: None,
        }
    }
}

fn run_trial(
    scenario: &Scenario,
    configs: &PlannerConfigs,
    planner: PlannerKind,
    trial_index: usize,
    base_seed: RngSeed,
) -> TrialRecord {
    let seed = planner.trial_seed(base_seed, trial_index);
    let started = Instant::now();
    let result = configs
        .run(planner, scenario, seed)
        .expect("configs validated before dispatch");
    let wall_time_ms = started.elapsed().as_secs_f64() * 1e3;
    TrialRecord {
        planner,
        trial_index,
        seed,
        nodes_expanded: result.nodes_expanded,
        path_length: result.path_length(),
        objective_value: result.objective(&scenario.obstacles, configs.dccppa.beta),
        succeeded: result.succeeded,
        wall_time_ms,
    }
}

pub fn run_benchmark(
    scenario: &Scenario,
    configs: &PlannerConfigs,
    n_trials: usize,
    base_seed: RngSeed,
    options: &BenchOptions,
) -> Result<BenchReport, BenchError> {
    if n_trials == 0 {
        return Err(BenchError::NoTrials);
    }
    if options.planners.is_empty() {
        return Err(BenchError::NoPlanners);
    }
    configs.validate()?;

    let mut planners = options.planners.clone();
    planners.sort();
    planners.dedup();
    let jobs: Vec<(PlannerKind, usize)> = planners
        .iter()
        .flat_map(|&p| (0..n_trials).map(move |i| (p, i)))
        .collect();
    let execute = || -> Vec<TrialRecord> {
        jobs.par_iter()
            .map(|&(p, i)| run_trial(scenario, configs, p, i, base_seed))
            .collect()
    };
    let trials = match options.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| BenchError::Pool(e.to_string()))?
            .install(execute),
        None => execute(),
    };
    let summary = summarize(&trials)?;
    Ok(BenchReport {
        scenario: scenario.clone(),
        rng: RNG_ALGORITHM.to_string(),
        configs: configs.clone(),
        trials,
        summary,
    })
}

impl BenchReport {
    /// Copy with every wall time zeroed, for byte-stable output.
    pub fn without_timing(&self) -> BenchReport {
        let mut r = self.clone();
        for t in &mut r.trials {
            t.wall_time_ms = 0.0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        w.write_record(CSV_HEADER.split(',')).expect("in-memory write");
        for t in &self.trials {
            w.write_record([
                t.planner.label().to_string(),
                t.trial_index.to_string(),
                t.seed.to_string(),
                t.nodes_expanded.to_string(),
                t.path_length.to_string(),
                t.objective_value.to_string(),
                t.succeeded.to_string(),
                format!("{:.3}", t.wall_time_ms),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    /// Trial-by-planner node-count table followed by summary rows. Failed
    /// trials show as `-`.
    pub fn format_table(&self) -> String {
        let planners: Vec<PlannerKind> = self.summary.iter().map(|s| s.planner).collect();
        let n_trials = self.trials.iter().map(|t| t.trial_index + 1).max().unwrap_or(0);
        let mut out = String::new();
        let _ = write!(out, "{:>12}", "Trial Number");
        for p in &planners {
            let _ = write!(out, " {:>10}", p.label());
        }
        out.push('\n');
        for i in 0..n_trials {
            let _ = write!(out, "{:>12}", i + 1);
            for p in &planners {
                let cell = self
                    .trials
                    .iter()
                    .find(|t| t.planner == *p && t.trial_index == i)
                    .map(|t| {
                        if t.succeeded {
                            t.nodes_expanded.to_string()
                        } else {
                            "-".to_string()
                        }
                    })
                    .unwrap_or_default();
                let _ = write!(out, " {cell:>10}");
            }
            out.push('\n');
        }
        type Column = (&'static str, fn(&NodeStats) -> f64);
        let rows: [Column; 5] = [
            ("mean", |s| s.mean),
            ("median", |s| s.median),
            ("min", |s| s.min),
            ("max", |s| s.max),
            ("std dev", |s| s.std_dev),
        ];
        for (name, get) in rows {
            let _ = write!(out, "{name:>12}");
            for s in &self.summary {
                match &s.nodes {
                    Some(stats) => {
                        let _ = write!(out, " {:>10.1}", get(stats));
                    }
                    None => {
                        let _ = write!(out, " {:>10}", "-");
                    }
                }
            }
            out.push('\n');
        }
        let _ = write!(out, "{:>12}", "success");
        for s in &self.summary {
            let _ = write!(out, " {:>9.0}%", s.success_rate * 100.0);
        }
        out.push('\n');
        out
    }
}

/// Family of generated scenarios of growing obstacle count.
#[derive(Debug, Clone)]
pub struct ScalingProbe {
    pub bounds: Bounds,
    pub obstacle_counts: Vec<usize>,
    pub radius_range: (f64, f64),
    pub scenarios_per_size: usize,
    pub base_seed: RngSeed,
    pub planner: PlannerKind,
}

impl Default for ScalingProbe {
    fn default() -> Self {
        ScalingProbe {
            bounds: Bounds::new(0.0, 0.0, 100.0, 100.0),
            obstacle_counts: vec![5, 10, 20, 40],
            radius_range: (2.0, 5.0),
            scenarios_per_size: 20,
            base_seed: RngSeed(0),
            planner: PlannerKind::Dccppa,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub obstacles: usize,
    pub runs: usize,
    pub mean_nodes: f64,
    pub mean_wall_ms: f64,
    pub success_rate: f64,
}

/// Empirical scaling table, one row per obstacle count, run sequentially
/// on the calling thread.
pub fn scaling_probe(
    probe: &ScalingProbe,
    configs: &PlannerConfigs,
) -> Result<Vec<ScalingRow>, BenchError> {
    if probe.obstacle_counts.is_empty() {
        return Err(BenchError::NoSizes);
    }
    configs.validate()?;
    let mut rows = Vec::with_capacity(probe.obstacle_counts.len());
    for &count in &probe.obstacle_counts {
        let mut nodes = 0.0;
        let mut wall = 0.0;
        let mut successes = 0;
        let runs = probe.scenarios_per_size.max(1);
        for j in 0..runs {
            let scenario_seed = probe.base_seed.child(count as u64, j as u64);
            let scenario =
                generate_scenario(probe.bounds, count, probe.radius_range, scenario_seed)?;
            let seed = probe.planner.trial_seed(probe.base_seed, j);
            let started = Instant::now();
            let result = configs.run(probe.planner, &scenario, seed)?;
            wall += started.elapsed().as_secs_f64() * 1e3;
            nodes += result.nodes_expanded as f64;
            successes += usize::from(result.succeeded);
        }
        rows.push(ScalingRow {
            obstacles: count,
            runs,
            mean_nodes: nodes / runs as f64,
            mean_wall_ms: wall / runs as f64,
            success_rate: successes as f64 / runs as f64,
        });
    }
    Ok(rows)
}
