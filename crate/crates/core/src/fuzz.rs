//! Differential fuzzing of the solvers against the exhaustive oracle.
//!
//! Trial `i` of a campaign draws its own seed from `(seed, i)`, so trials can
//! run on any number of threads and the report comes out the same. A failure
//! records that trial seed, and [`trial_polygon`] rebuilds the input from it.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algorithm::Algorithm;
use crate::error::{invalid, Result};
use crate::generate::random_convex_polygon;
use crate::geometry::{validate_convex_polygon, ConvexPolygon, DoubledArea, IndexTuple, Point, Winding, COORD_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub trials: u32,
    pub n_min: usize,
    pub n_max: usize,
    pub coord_bound: i64,
    pub seed: u64,
    pub targets: Vec<Algorithm>,
    pub k: usize,
    /// Shrink each failing polygon by greedy vertex deletion.
    pub shrink: bool,
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        Algorithm::oracle_for(self.k)?;
        if self.trials == 0 {
            return Err(invalid("trials must be at least 1"));
        }
        if self.n_min < self.k || self.n_min > self.n_max {
            return Err(invalid(format!(
                "vertex range [{}, {}] must be nonempty and start at k = {} or more",
                self.n_min, self.n_max, self.k
            )));
        }
        if !(1..=COORD_LIMIT).contains(&self.coord_bound) {
            return Err(invalid(format!(
                "coordinate bound must lie in [1, {COORD_LIMIT}], got {}",
                self.coord_bound
            )));
        }
        check_targets(&self.targets, self.k)
    }
}

fn check_targets(targets: &[Algorithm], k: usize) -> Result<()> {
    if targets.is_empty() {
        return Err(invalid("no target algorithms"));
    }
    if let Some(a) = targets.iter().find(|a| a.k() != k) {
        return Err(invalid(format!("{a} solves k = {}, campaign has k = {k}", a.k())));
    }
    Ok(())
}

/// Where a failing input came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureOrigin {
    Trial { index: u32, seed: u64 },
    Corpus { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shrunk {
    pub polygon: Vec<Point>,
    pub target: IndexTuple,
    pub target_area: DoubledArea,
    pub oracle: IndexTuple,
    pub oracle_area: DoubledArea,
    pub deficit: DoubledArea,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub origin: FailureOrigin,
    pub algorithm: Algorithm,
    pub n: usize,
    pub polygon: Vec<Point>,
    pub target: IndexTuple,
    pub target_area: DoubledArea,
    pub oracle: IndexTuple,
    pub oracle_area: DoubledArea,
    /// Oracle area minus target area; always positive.
    pub deficit: DoubledArea,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shrunk: Option<Shrunk>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetStats {
    pub algorithm: Algorithm,
    pub runs: u64,
    pub failures: u64,
    pub max_deficit: DoubledArea,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub trials_run: u64,
    pub failures: Vec<Failure>,
    pub targets: Vec<TargetStats>,
}

impl FuzzReport {
    /// Failures of algorithms that are meant to be optimal.
    pub fn exact_failures(&self) -> impl Iterator<Item = &Failure> {
        self.failures.iter().filter(|f| f.algorithm.is_exact())
    }
}

/// Seed of trial `index` in a campaign seeded with `seed`.
pub fn trial_seed(seed: u64, index: u32) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(u64::from(index));
    rng.next_u64()
}

/// The polygon a trial with seed `trial_seed` runs on.
pub fn trial_polygon(cfg: &FuzzConfig, trial_seed: u64) -> Result<ConvexPolygon> {
    let span = (cfg.n_max - cfg.n_min + 1) as u64;
    let n = cfg.n_min + (trial_seed % span) as usize;
    random_convex_polygon(n, cfg.coord_bound, trial_seed)
}

/// Runs a seeded campaign.
pub fn differential_fuzz(cfg: &FuzzConfig) -> Result<FuzzReport> {
    cfg.validate()?;
    let oracle = Algorithm::oracle_for(cfg.k)?;
    let outcomes = (0..cfg.trials)
        .into_par_iter()
        .map(|index| {
            let seed = trial_seed(cfg.seed, index);
            let poly = trial_polygon(cfg, seed)?;
            check_polygon(&poly, &cfg.targets, oracle, cfg.shrink, FailureOrigin::Trial { index, seed })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(&cfg.targets, outcomes))
}

/// Runs the targets on a fixed list of polygons.
pub fn run_corpus(
    polygons: &[ConvexPolygon],
    targets: &[Algorithm],
    k: usize,
    shrink: bool,
) -> Result<FuzzReport> {
    let oracle = Algorithm::oracle_for(k)?;
    check_targets(targets, k)?;
    if let Some(p) = polygons.iter().find(|p| p.len() < k) {
        return Err(invalid(format!("corpus polygon with {} vertices, need {k}", p.len())));
    }
    let outcomes = polygons
        .par_iter()
        .enumerate()
        .map(|(index, poly)| check_polygon(poly, targets, oracle, shrink, FailureOrigin::Corpus { index }))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(targets, outcomes))
}

fn summarize(targets: &[Algorithm], outcomes: Vec<Vec<Failure>>) -> FuzzReport {
    let trials_run = outcomes.len() as u64;
    let failures: Vec<Failure> = outcomes.into_iter().flatten().collect();
    let targets = targets
        .iter()
        .map(|&algorithm| {
            let mine = failures.iter().filter(|f| f.algorithm == algorithm);
            TargetStats {
                algorithm,
                runs: trials_run,
                failures: mine.clone().count() as u64,
                max_deficit: mine.map(|f| f.deficit).max().unwrap_or_default(),
            }
        })
        .collect();
    FuzzReport { trials_run, failures, targets }
}

/// Compares every target with the oracle on one polygon. Pointer walks start
/// at vertex 0.
fn check_polygon(
    poly: &ConvexPolygon,
    targets: &[Algorithm],
    oracle: Algorithm,
    shrink: bool,
    origin: FailureOrigin,
) -> Result<Vec<Failure>> {
    let best = oracle.run(poly, 0)?;
    let mut failures = Vec::new();
    for &alg in targets {
        let got = alg.run(poly, 0)?;
        if got.area < best.area {
            let shrunk = if shrink { shrink_failure(poly, alg, oracle)? } else { None };
            failures.push(Failure {
                origin: origin.clone(),
                algorithm: alg,
                n: poly.len(),
                polygon: poly.vertices().to_vec(),
                target: got.tuple,
                target_area: got.area,
                oracle: best.tuple.clone(),
                oracle_area: best.area,
                deficit: DoubledArea(best.area.value() - got.area.value()),
                shrunk,
            });
        }
    }
    Ok(failures)
}

/// Deletes vertices one at a time while `alg` still loses to the oracle.
/// Returns `None` when no vertex can be removed.
fn shrink_failure(poly: &ConvexPolygon, alg: Algorithm, oracle: Algorithm) -> Result<Option<Shrunk>> {
    let mut current = poly.vertices().to_vec();
    let mut last = None;
    let mut i = 0;
    while i < current.len() && current.len() > alg.k() {
        let mut candidate = current.clone();
        candidate.remove(i);
        let Ok(cand) = validate_convex_polygon(&candidate, Winding::CounterClockwise) else {
            i += 1;
            continue;
        };
        let got = alg.run(&cand, 0)?;
        let best = oracle.run(&cand, 0)?;
        if got.area < best.area {
            last = Some(Shrunk {
                polygon: candidate.clone(),
                target: got.tuple,
                target_area: got.area,
                oracle: best.tuple,
                oracle_area: best.area,
                deficit: DoubledArea(best.area.value() - got.area.value()),
            });
            current = candidate;
        } else {
            i += 1;
        }
    }
    Ok(last)
}
