//! Wall-clock scaling runs over seeded random polygons.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::algorithm::Algorithm;
use crate::error::Result;
use crate::fuzz::trial_seed;
use crate::generate::random_convex_polygon;
use crate::geometry::{DoubledArea, COORD_LIMIT};
use crate::io::input_digest;

/// Coordinate bound used for a benchmark polygon with `n` vertices. Past
/// 2^16 vertices the 2^25 box gets crowded, so the full range is used.
pub fn bench_bound(n: usize) -> i64 {
    if n <= 1 << 16 {
        1 << 25
    } else {
        COORD_LIMIT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub n: usize,
    pub reps: u32,
    pub doubled_area: DoubledArea,
    pub input_digest: String,
    pub median_ns: u64,
}

/// Times `alg` `reps` times on one polygon per size. The polygon for size
/// `n` depends only on `seed` and `n`.
pub fn run(alg: Algorithm, sizes: &[usize], seed: u64, reps: u32) -> Result<Vec<BenchRow>> {
    let reps = reps.max(1);
    sizes
        .iter()
        .map(|&n| {
            let poly = random_convex_polygon(n, bench_bound(n), trial_seed(seed, n as u32))?;
            let mut times = Vec::with_capacity(reps as usize);
            let mut area = DoubledArea::ZERO;
            for _ in 0..reps {
                let start = Instant::now();
                let sol = alg.run(&poly, 0)?;
                times.push(start.elapsed().as_nanos() as u64);
                area = sol.area;
            }
            times.sort_unstable();
            Ok(BenchRow {
                algorithm: alg,
                n,
                reps,
                doubled_area: area,
                input_digest: input_digest(&poly),
                median_ns: times[times.len() / 2],
            })
        })
        .collect()
}

/// CSV with a header line. `with_time = false` drops the `median_ns` column,
/// leaving only reproducible fields.
pub fn to_csv(rows: &[BenchRow], with_time: bool) -> String {
    let mut s = String::from("alg,n,reps,doubled_area,input_digest");
    s.push_str(if with_time { ",median_ns\n" } else { "\n" });
    for r in rows {
        let _ = write!(s, "{},{},{},{},{}", r.algorithm, r.n, r.reps, r.doubled_area, r.input_digest);
        if with_time {
            let _ = write!(s, ",{}", r.median_ns);
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_reproducible() {
        let a = run(Algorithm::Dnc, &[16, 64], 3, 2).unwrap();
        let b = run(Algorithm::Dnc, &[16, 64], 3, 2).unwrap();
        assert_eq!(to_csv(&a, false), to_csv(&b, false));
        let csv = to_csv(&a, true);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.starts_with("alg,n,reps,doubled_area,input_digest,median_ns\n"));
        let q = run(Algorithm::Quadratic, &[16, 64], 3, 1).unwrap();
        assert_eq!(q[1].doubled_area, a[1].doubled_area);
    }
}
