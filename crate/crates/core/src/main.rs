use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use ujp::analysis::{global_min_f, min_f_for_m, tight_instance};
use ujp::harness::{random_instance, ratio_sweep, simulate, table1_report, RewardMode, SweepConfig};
use ujp::solvers::ratio_report;
use ujp::{evaluate, lzf_schedule, optimal_schedule, Error, Instance, Schedule, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "ujp", version, about = "Scheduling unreliable jobs on parallel machines")]
struct Cli {
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RewardKind {
    UnitZ,
    LogUniform,
}

#[derive(Subcommand)]
enum Command {
    /// Primary LZF schedule of an instance.
    Lzf { instance: PathBuf },
    /// Exact optimal schedule.
    Opt {
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// LZF value over optimal value.
    Ratio {
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Expected-reward breakdown of a given schedule.
    Eval { instance: PathBuf, schedule: PathBuf },
    /// Minimum of the bound function, for one machine count or globally.
    Bound {
        #[arg(long, conflicts_with = "global", required_unless_present = "global")]
        m: Option<usize>,
        #[arg(long)]
        global: bool,
    },
    /// Instance on which LZF approaches its worst-case ratio.
    Tight {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        eps: f64,
    },
    /// Seeded random instance.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.05)]
        prob_lo: f64,
        #[arg(long, default_value_t = 0.95)]
        prob_hi: f64,
        #[arg(long, value_enum, default_value = "unit-z")]
        reward: RewardKind,
        #[arg(long, default_value_t = 0.1)]
        reward_lo: f64,
        #[arg(long, default_value_t = 10.0)]
        reward_hi: f64,
    },
    /// Ratio sweep over random instances described by a JSON config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
    /// Monte Carlo estimate of a schedule's expected reward.
    Simulate {
        instance: PathBuf,
        schedule: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bound minima for m = 2..6, m = 38 and overall.
    Table1,
}

enum CliError {
    Ujp(Error),
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Ujp(e)
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        serde_json::to_string(value).expect("serializable")
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let pretty = cli.pretty;
    let out = match cli.command {
        Command::Lzf { instance } => {
            let inst: Instance = read_json(&instance)?;
            json(&lzf_schedule(&inst)?, pretty)
        }
        Command::Opt { instance, cap } => {
            let inst: Instance = read_json(&instance)?;
            json(&optimal_schedule(&inst, cap)?, pretty)
        }
        Command::Ratio { instance, cap } => {
            let inst: Instance = read_json(&instance)?;
            let r = ratio_report(&inst, cap)?;
            if pretty {
                format!("lzf {:.12}\nopt {:.12}\nlambda {:.12}", r.lzf.value, r.opt.value, r.lambda)
            } else {
                json(&r, false)
            }
        }
        Command::Eval { instance, schedule } => {
            let inst: Instance = read_json(&instance)?;
            let sched: Schedule = read_json(&schedule)?;
            json(&evaluate(&inst, &sched)?, pretty)
        }
        Command::Bound { m, global } => {
            let point = if global { global_min_f() } else { min_f_for_m(m.expect("clap enforces --m"))? };
            if pretty {
                let t = point.t.map(|t| format!(", t = {t}")).unwrap_or_default();
                format!("min f = {:.9} at x = {:.9}, p = {:.9}{t}", point.value, point.x, point.p)
            } else {
                json(&point, false)
            }
        }
        Command::Tight { m, eps } => json(&tight_instance(m, eps)?, pretty),
        Command::Random { n, m, seed, prob_lo, prob_hi, reward, reward_lo, reward_hi } => {
            let mode = match reward {
                RewardKind::UnitZ => RewardMode::UnitZ,
                RewardKind::LogUniform => RewardMode::LogUniform { lo: reward_lo, hi: reward_hi },
            };
            json(&random_instance(n, m, seed, (prob_lo, prob_hi), mode)?, pretty)
        }
        Command::Sweep { config } => {
            let cfg: SweepConfig = read_json(&config)?;
            let r = ratio_sweep(&cfg)?;
            if pretty {
                let mut text = format!("instances {}\nmin lambda {:.12}\n", r.count, r.min_lambda);
                for (k, c) in r.histogram.counts.iter().enumerate() {
                    let lo = r.histogram.lo + k as f64 * r.histogram.width;
                    text.push_str(&format!("[{:.3}, {:.3})  {c}\n", lo, lo + r.histogram.width));
                }
                text.trim_end().to_string()
            } else {
                json(&r, false)
            }
        }
        Command::Simulate { instance, schedule, trials, seed } => {
            let inst: Instance = read_json(&instance)?;
            let sched: Schedule = read_json(&schedule)?;
            json(&simulate(&inst, &sched, trials, seed)?, pretty)
        }
        Command::Table1 => {
            let report = table1_report();
            if pretty {
                report.to_string()
            } else {
                json(&report, false)
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Ujp(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
