use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::{Deserialize, Serialize};

use curveplan::render::{write_svg, LabeledPath, RenderStyle};
use curveplan::{
    generate_scenario, load_scenario, run_benchmark, save_scenario, BenchOptions, Bounds,
    PlanResult, PlannerKind, RngSeed, RNG_ALGORITHM,
};

use crate::config::ConfigArgs;

pub enum Outcome {
    Done,
    NoPath,
}

/// What `plan` writes.
#[derive(Debug, Serialize, Deserialize)]
pub struct PlanRecord {
    pub planner: PlannerKind,
    pub scenario: String,
    pub seed: RngSeed,
    pub rng: String,
    pub beta: f64,
    pub path_length: f64,
    pub objective: f64,
    #[serde(flatten)]
    pub result: PlanResult,
}

fn parse_planner(name: &str) -> anyhow::Result<PlannerKind> {
    name.parse::<PlannerKind>().map_err(anyhow::Error::msg)
}

fn write_text(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

pub fn plan(
    scenario_path: &Path,
    planner: &str,
    seed: u64,
    out: &Path,
    config: &ConfigArgs,
) -> anyhow::Result<Outcome> {
    let planner = parse_planner(planner)?;
    let scenario = load_scenario(scenario_path)?;
    let configs = config.resolve()?;
    let seed = RngSeed(seed);
    let result = configs.run(planner, &scenario, seed)?;
    let beta = configs.dccppa.beta;
    let record = PlanRecord {
        planner,
        scenario: scenario.name.clone(),
        seed,
        rng: RNG_ALGORITHM.to_string(),
        beta,
        path_length: result.path_length(),
        objective: result.objective(&scenario.obstacles, beta),
        result,
    };
    let mut json = serde_json::to_string_pretty(&record)?;
    json.push('\n');
    write_text(out, &json)?;

    let status = if record.result.succeeded {
        "reached goal"
    } else {
        "no path"
    };
    println!(
        "{planner}: {status}; nodes={} length={:.3} J={:.3}",
        record.result.nodes_expanded, record.path_length, record.objective
    );
    Ok(if record.result.succeeded {
        Outcome::Done
    } else {
        Outcome::NoPath
    })
}

pub struct BenchArgs {
    pub scenario: PathBuf,
    pub trials: usize,
    pub seed: u64,
    pub out_dir: PathBuf,
    pub threads: Option<usize>,
    pub timing: bool,
    pub config: ConfigArgs,
}

pub fn bench(args: &BenchArgs) -> anyhow::Result<Outcome> {
    let scenario = load_scenario(&args.scenario)?;
    let configs = args.config.resolve()?;
    let options = BenchOptions {
        threads: args.threads,
        ..Default::default()
    };
    let mut report = run_benchmark(&scenario, &configs, args.trials, RngSeed(args.seed), &options)?;
    if !args.timing {
        report = report.without_timing();
    }
    fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("cannot create {}", args.out_dir.display()))?;
    let mut json = report.to_json();
    json.push('\n');
    write_text(&args.out_dir.join("report.json"), &json)?;
    write_text(&args.out_dir.join("report.csv"), &report.to_csv())?;

    println!("scenario {} | {} trials | seed {} | rng {}", scenario.name, args.trials, args.seed, report.rng);
    print!("{}", report.format_table());
    Ok(Outcome::Done)
}

pub struct RenderArgs {
    pub scenario: PathBuf,
    pub results: Vec<PathBuf>,
    pub run: Vec<String>,
    pub seed: u64,
    pub style: Option<PathBuf>,
    pub out: PathBuf,
    pub config: ConfigArgs,
}

pub fn render(args: &RenderArgs) -> anyhow::Result<Outcome> {
    let scenario = load_scenario(&args.scenario)?;
    let style: RenderStyle = match &args.style {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read style {}", path.display()))?;
            serde_json::from_str(&text)
                .with_context(|| format!("malformed style {}", path.display()))?
        }
        None => RenderStyle::default(),
    };

    let mut paths = Vec::new();
    for file in &args.results {
        let text = fs::read_to_string(file)
            .with_context(|| format!("cannot read {}", file.display()))?;
        let record: PlanRecord = serde_json::from_str(&text)
            .with_context(|| format!("malformed plan result {}", file.display()))?;
        paths.push(LabeledPath::new(record.planner.label(), record.result.path));
    }
    if !args.run.is_empty() {
        let configs = args.config.resolve()?;
        for name in &args.run {
            let planner = parse_planner(name)?;
            let result = configs.run(planner, &scenario, RngSeed(args.seed))?;
            paths.push(LabeledPath::new(planner.label(), result.path));
        }
    }

    write_svg(&scenario, &paths, &style, &args.out)?;
    println!("wrote {} ({} paths)", args.out.display(), paths.len());
    Ok(Outcome::Done)
}

pub fn generate(
    n_obstacles: usize,
    radius_range: (f64, f64),
    (width, height): (f64, f64),
    name: Option<String>,
    seed: u64,
    out: &Path,
) -> anyhow::Result<Outcome> {
    let bounds = Bounds::new(0.0, 0.0, width, height);
    let mut scenario = generate_scenario(bounds, n_obstacles, radius_range, RngSeed(seed))?;
    if let Some(name) = name {
        scenario.name = name;
    }
    save_scenario(&scenario, out)?;
    println!("wrote {} ({} obstacles)", out.display(), scenario.obstacles.len());
    Ok(Outcome::Done)
}
