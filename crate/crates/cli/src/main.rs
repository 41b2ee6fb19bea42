use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use maxtri::fixtures;
use maxtri::io::{parse_polygon_document, render_svg, PolygonDocument, ResultRecord, SvgOptions};
use maxtri::{bench, differential_fuzz, run_corpus, Algorithm, FuzzConfig};

#[derive(Parser)]
#[command(name = "maxtri", version, about = "Largest inscribed triangles and quadrilaterals of convex polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one polygon and print the result record as JSON.
    Solve {
        #[arg(long, value_parser = parse_alg)]
        alg: Algorithm,
        /// Polygon file, or `fixture9` / `fixture16` for a bundled fixture.
        #[arg(long = "in")]
        input: String,
        /// Also write the JSON record to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write an SVG drawing to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Include the pointer trace (pointer-walk algorithms only).
        #[arg(long)]
        trace: bool,
        /// Starting vertex for the pointer walks.
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Compare target algorithms with the oracle on random polygons.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        #[arg(long, default_value_t = 4)]
        nmin: usize,
        #[arg(long, default_value_t = 64)]
        nmax: usize,
        #[arg(long, default_value_t = 1_000_000)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated algorithm ids.
        #[arg(long, value_delimiter = ',', value_parser = parse_alg, required = true)]
        targets: Vec<Algorithm>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Shrink failing polygons by deleting vertices.
        #[arg(long)]
        shrink: bool,
        /// Run on these polygon files (or fixture names) instead of random ones.
        #[arg(long, num_args = 1..)]
        corpus: Vec<String>,
    },
    /// Time an algorithm on random polygons of the given sizes; prints CSV.
    Bench {
        #[arg(long, value_parser = parse_alg)]
        alg: Algorithm,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        reps: u32,
        /// Leave out the timing column.
        #[arg(long)]
        no_time: bool,
    },
    /// Bundled counter-example fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Check every claim about the bundled fixtures.
    Verify,
}

fn parse_alg(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: maxtri::Error| e.to_string())
}

fn load(input: &str) -> Result<PolygonDocument> {
    let bytes = match fixtures::by_name(input) {
        Some(text) => text.as_bytes().to_vec(),
        None => fs::read(input).with_context(|| format!("reading {input}"))?,
    };
    parse_polygon_document(&bytes).with_context(|| format!("parsing {input}"))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn solve(
    alg: Algorithm,
    input: &str,
    json: Option<PathBuf>,
    svg: Option<PathBuf>,
    trace: bool,
    root: usize,
) -> Result<ExitCode> {
    let doc = load(input)?;
    let poly = &doc.polygon;
    let start = Instant::now();
    let solution = alg.run(poly, root)?;
    let elapsed = start.elapsed().as_nanos() as u64;

    if let Some(path) = svg {
        let checkpoints = solution
            .trace
            .as_ref()
            .filter(|_| trace)
            .map(|t| t.best_so_far.as_slice());
        write(&path, &render_svg(poly, &solution.tuple, checkpoints, SvgOptions::default()))?;
    }
    let record = ResultRecord::new(alg, poly, &doc.labels, solution, elapsed, trace);
    let text = serde_json::to_string_pretty(&record)?;
    if let Some(path) = json {
        write(&path, &format!("{text}\n"))?;
    }
    println!("{text}");
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn fuzz(
    trials: u32,
    nmin: usize,
    nmax: usize,
    bound: i64,
    seed: u64,
    targets: Vec<Algorithm>,
    k: usize,
    shrink: bool,
    corpus: Vec<String>,
) -> Result<ExitCode> {
    let report = if corpus.is_empty() {
        differential_fuzz(&FuzzConfig {
            trials,
            n_min: nmin,
            n_max: nmax,
            coord_bound: bound,
            seed,
            targets,
            k,
            shrink,
        })?
    } else {
        let polygons = corpus
            .iter()
            .map(|c| load(c).map(|d| d.polygon))
            .collect::<Result<Vec<_>>>()?;
        run_corpus(&polygons, &targets, k, shrink)?
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    let bad = report.exact_failures().count();
    if bad > 0 {
        eprintln!("{bad} failure(s) in algorithms that should be exact");
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve { alg, input, json, svg, trace, root } => solve(alg, &input, json, svg, trace, root),
        Command::Fuzz { trials, nmin, nmax, bound, seed, targets, k, shrink, corpus } => {
            fuzz(trials, nmin, nmax, bound, seed, targets, k, shrink, corpus)
        }
        Command::Bench { alg, sizes, seed, reps, no_time } => {
            if !matches!(alg, Algorithm::Quadratic | Algorithm::Dnc) {
                bail!("bench supports quadratic and dnc, got {alg}");
            }
            let rows = bench::run(alg, &sizes, seed, reps)?;
            print!("{}", bench::to_csv(&rows, !no_time));
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { action: FixturesAction::Verify } => {
            let checks = fixtures::verify();
            for c in &checks {
                println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            if checks.iter().all(|c| c.passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("fixture mismatch");
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
