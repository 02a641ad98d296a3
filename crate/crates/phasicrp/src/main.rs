use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use phasicrp::evaluate::{evaluate, EvalConfig};
use phasicrp::manifest::FILE_NAME as MANIFEST;
use phasicrp::pipeline::{encode_sessions, synth_to_dir, EncodeOptions};
use phasicrp::report::{report_to_json, write_report};
use phasicrp_core::encode::ImageMode;
use phasicrp_core::knn::KnnConfig;
use phasicrp_core::synth::{GlucoseClass, SynthConfig};

#[derive(Parser)]
#[command(
    name = "phasicrp",
    version,
    about = "Phasic recurrence-plot images from wearable sessions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a synthetic session (E4 channel files + CGM table)
    Synth {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3000)]
        duration_s: u32,
        /// Comma-separated `bvp_hz:glucose_mgdl` pairs, one per class
        #[arg(long, default_value = "0.5:90,1.5:180", value_parser = parse_classes)]
        classes: Classes,
        #[arg(long, default_value_t = 0.1)]
        noise: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Turn session windows into RGB recurrence images and a manifest
    Encode(EncodeArgs),
    /// Score a manifest with the nearest-neighbor baseline; prints JSON
    Eval {
        #[arg(long)]
        manifest: PathBuf,
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// Encode, then optionally evaluate the fresh manifest
    Pipeline {
        #[command(flatten)]
        encode: EncodeArgs,
        #[arg(long)]
        eval: bool,
        #[command(flatten)]
        eval_args: EvalArgs,
    },
}

#[derive(Args)]
struct EncodeArgs {
    /// Session directory; repeat for several participants
    #[arg(long, required = true)]
    session: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Phasic)]
    mode: Mode,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, default_value_t = 0.70)]
    ratio: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    k: usize,
    #[arg(long, default_value_t = 32)]
    pool_side: usize,
}

impl EvalArgs {
    fn config(&self) -> EvalConfig {
        EvalConfig {
            ratio: self.ratio,
            seed: self.seed,
            knn: KnnConfig {
                k: self.k,
                pool_side: self.pool_side,
            },
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Mode {
    Temporal,
    Phasic,
}

impl From<Mode> for ImageMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Temporal => ImageMode::TemporalSigned,
            Mode::Phasic => ImageMode::Phasic,
        }
    }
}

#[derive(Clone)]
struct Classes(Vec<GlucoseClass>);

fn parse_classes(raw: &str) -> Result<Classes, String> {
    raw.split(',')
        .map(|pair| {
            let (f, g) = pair
                .split_once(':')
                .ok_or_else(|| format!("expected bvp_hz:glucose, got {pair:?}"))?;
            let num = |s: &str| s.trim().parse::<f64>().map_err(|e| format!("{s:?}: {e}"));
            Ok(GlucoseClass {
                bvp_hz: num(f)?,
                glucose: num(g)?,
            })
        })
        .collect::<Result<Vec<_>, String>>()
        .map(Classes)
}

fn run_encode(args: &EncodeArgs) -> Result<()> {
    let opts = EncodeOptions {
        mode: args.mode.into(),
        jobs: args.jobs.into(),
        ..Default::default()
    };
    let (summary, _) = encode_sessions(&args.session, &args.out, &opts)?;
    eprintln!("{summary}");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Synth {
            seed,
            duration_s,
            classes,
            noise,
            out,
        } => {
            let config = SynthConfig::new(seed, duration_s, classes.0, noise);
            synth_to_dir(&config, &out)
                .with_context(|| format!("writing synthetic session to {}", out.display()))?;
            eprintln!("wrote {} ({duration_s} s, seed {seed})", out.display());
        }
        Command::Encode(args) => run_encode(&args)?,
        Command::Eval { manifest, eval } => {
            let report = evaluate(&manifest, &eval.config())?;
            println!("{}", report_to_json(&report));
        }
        Command::Pipeline {
            encode,
            eval,
            eval_args,
        } => {
            for dir in &encode.session {
                if !dir.is_dir() {
                    bail!("session directory {} does not exist", dir.display());
                }
            }
            run_encode(&encode)?;
            if eval {
                let report = evaluate(&encode.out.join(MANIFEST), &eval_args.config())?;
                write_report(&report, &encode.out.join("report.json"))?;
                println!("{}", report_to_json(&report));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
