//! `distver`: minimum-distance verification and complexity exponents.
//!
//! Exit codes: 0 exact answer, 1 input or configuration error, 2 truncated
//! search (bound only), 3 infeasible brute force.

mod commands;
mod manifest;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use commands::{DistanceArgs, ExponentsArgs, Outcome, Params, SampleArgs};
use manifest::{Envelope, RunManifest};

#[derive(Parser)]
#[command(
    name = "distver",
    version,
    about = "Minimum-distance verification for classical and quantum codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the minimum distance of a code.
    Distance(DistanceArgs),
    /// Draw a code from an ensemble.
    Sample(SampleArgs),
    /// Tables and curves of the complexity exponents as CSV.
    Exponents(ExponentsArgs),
    /// Re-run the command recorded in an envelope and compare payloads.
    Replay {
        /// JSON envelope written by an earlier run.
        envelope: PathBuf,
    },
}

fn execute(params: &Params) -> Result<(Outcome, Envelope)> {
    let start = Instant::now();
    let outcome = match params {
        Params::Distance(a) => commands::distance(a)?,
        Params::Sample(a) => commands::sample(a)?,
        Params::Exponents(a) => commands::exponents(a)?,
    };
    let envelope = Envelope {
        payload: outcome.payload.clone(),
        manifest: RunManifest {
            command: params.name().into(),
            inputs: params.inputs(),
            params: params.clone(),
            seed: params.seed(),
            generator: distver::rng::GENERATOR_ID.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            wall_clock_secs: start.elapsed().as_secs_f64(),
            summary: outcome.summary.clone(),
        },
    };
    Ok((outcome, envelope))
}

fn run(cli: Cli) -> Result<u8> {
    let params = match cli.command {
        Command::Distance(a) => Params::Distance(a),
        Command::Sample(a) => Params::Sample(a),
        Command::Exponents(a) => Params::Exponents(a),
        Command::Replay { envelope } => return replay(&envelope),
    };
    let (outcome, envelope) = execute(&params)?;
    let json = serde_json::to_string_pretty(&envelope)? + "\n";
    for (path, text) in &outcome.files {
        // empty text marks the envelope's own destination
        let body = if text.is_empty() { &json } else { text };
        fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))?;
    }
    match &outcome.stdout {
        Some(s) => print!("{s}"),
        None => print!("{json}"),
    }
    Ok(outcome.exit)
}

fn replay(path: &PathBuf) -> Result<u8> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let old: Envelope =
        serde_json::from_str(&text).with_context(|| format!("{} is not an envelope", path.display()))?;
    let (_, new) = execute(&old.manifest.params)?;
    if new.payload_json() == old.payload_json() {
        println!("replay of {} matches: {}", old.manifest.command, new.manifest.summary);
        Ok(0)
    } else {
        eprintln!("replay of {} differs from {}", old.manifest.command, path.display());
        Ok(1)
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<distver::Error>() {
        Some(distver::Error::Infeasible(_)) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
