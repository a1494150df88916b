//! `curveplan`: plan, benchmark, render and generate scenarios.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 planner found no path.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};

use crate::config::ConfigArgs;

#[derive(Debug, Parser)]
#[command(name = "curveplan", version, about = "Curvature-constrained 2D path planning")]
#[command(after_help = "Config precedence: flags > --config file > built-in defaults.\n\
Exit codes: 0 success, 1 usage or I/O error, 2 planner found no path.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SeedArg {
    /// RNG seed [env: CURVEPLAN_SEED, default 0]
    #[arg(long, env = "CURVEPLAN_SEED", hide_env = true)]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one planner once and write the result as JSON
    Plan {
        #[arg(long, value_name = "JSON")]
        scenario: PathBuf,
        /// dccppa, rrt or prm
        #[arg(long, default_value = "dccppa")]
        planner: String,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, value_name = "JSON")]
        out: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Repeated seeded trials of every planner; writes report.json and report.csv
    Bench {
        #[arg(long, value_name = "JSON")]
        scenario: PathBuf,
        /// Trials per planner (at least 1)
        #[arg(long, default_value_t = 10, value_parser = at_least_one)]
        trials: usize,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long = "out-dir", value_name = "DIR")]
        out_dir: PathBuf,
        /// Worker threads (default: all cores)
        #[arg(long, value_parser = at_least_one)]
        threads: Option<usize>,
        /// Record measured wall times; without it every wall_ms is 0 and the
        /// report files are byte-reproducible
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Draw the scenario and any number of paths as SVG
    Render {
        #[arg(long, value_name = "JSON")]
        scenario: PathBuf,
        /// Result file written by `plan`; repeatable
        #[arg(long = "result", value_name = "JSON")]
        results: Vec<PathBuf>,
        /// Planner to run and draw; repeatable
        #[arg(long = "run", value_name = "PLANNER")]
        run: Vec<String>,
        #[command(flatten)]
        seed: SeedArg,
        /// Style overrides as JSON
        #[arg(long, value_name = "JSON")]
        style: Option<PathBuf>,
        #[arg(long, value_name = "SVG")]
        out: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Generate a random scenario
    Gen {
        #[arg(long = "obstacles", default_value_t = 10)]
        n_obstacles: usize,
        #[arg(long = "r-min", default_value_t = 2.0)]
        r_min: f64,
        #[arg(long = "r-max", default_value_t = 8.0)]
        r_max: f64,
        #[arg(long, default_value_t = 100.0)]
        width: f64,
        #[arg(long, default_value_t = 100.0)]
        height: f64,
        /// Scenario name (default: derived from size and seed)
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, value_name = "JSON")]
        out: PathBuf,
    },
}

fn at_least_one(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            report_usage_error(&e);
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };

    let outcome = match cli.command {
        Command::Plan {
            scenario,
            planner,
            seed,
            out,
            config,
        } => commands::plan(&scenario, &planner, seed.seed.unwrap_or(0), &out, &config),
        Command::Bench {
            scenario,
            trials,
            seed,
            out_dir,
            threads,
            timing,
            config,
        } => commands::bench(&commands::BenchArgs {
            scenario,
            trials,
            seed: seed.seed.unwrap_or(0),
            out_dir,
            threads,
            timing,
            config,
        }),
        Command::Render {
            scenario,
            results,
            run,
            seed,
            style,
            out,
            config,
        } => commands::render(&commands::RenderArgs {
            scenario,
            results,
            run,
            seed: seed.seed.unwrap_or(0),
            style,
            out,
            config,
        }),
        Command::Gen {
            n_obstacles,
            r_min,
            r_max,
            width,
            height,
            name,
            seed,
            out,
        } => commands::generate(
            n_obstacles,
            (r_min, r_max),
            (width, height),
            name,
            seed.seed.unwrap_or(0),
            &out,
        ),
    };

    match outcome {
        Ok(commands::Outcome::Done) => ExitCode::SUCCESS,
        Ok(commands::Outcome::NoPath) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Clap leaves the usage line out of value errors; always show it.
fn report_usage_error(e: &clap::Error) {
    let text = e.render().to_string();
    eprint!("{text}");
    if text.contains("Usage:") {
        return;
    }
    let mut cmd = Cli::command();
    cmd.build();
    let sub = std::env::args()
        .skip(1)
        .find(|a| !a.starts_with('-'))
        .and_then(|name| cmd.find_subcommand(&name).cloned());
    let usage = match sub {
        Some(mut sub) => sub.render_usage(),
        None => cmd.render_usage(),
    };
    eprintln!("\n{usage}");
}
