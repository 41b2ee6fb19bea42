//! Random strictly convex lattice polygons via Valtr's construction.
//!
//! Random x and y coordinate multisets are split into two monotone chains
//! each, giving edge vectors that sum to zero. Sorting the vectors by angle
//! and walking them traces a convex polygon whose extent never exceeds the
//! sampled coordinate range. On the lattice two vectors can be zero or point
//! the same way, so zero vectors are dropped and parallel runs merged. That
//! loses vertices; we oversample and then keep a random subset of exactly `n`
//! vertices, which stays strictly convex.

use std::cmp::Ordering;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::geometry::{canonical_cyclic_order, validate_convex_polygon, ConvexPolygon, Point, Winding, COORD_LIMIT};

/// Attempts before giving up with [`Error::ResourceExhausted`]. Each retry
/// samples half of `n` more edge vectors than the previous one.
pub const RETRY_BUDGET: u32 = 32;

/// A strictly convex polygon with exactly `n` vertices and coordinates in
/// `[0, coord_bound]`, fully determined by `(n, coord_bound, seed)`.
pub fn random_convex_polygon(n: usize, coord_bound: i64, seed: u64) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(invalid(format!("need n >= 3, got {n}")));
    }
    if !(1..=COORD_LIMIT).contains(&coord_bound) {
        return Err(invalid(format!(
            "coordinate bound must lie in [1, {COORD_LIMIT}], got {coord_bound}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for attempt in 0..RETRY_BUDGET {
        let m = n + n * attempt as usize / 2;
        let walk = valtr_walk(&mut rng, m, coord_bound);
        best = best.max(walk.len());
        if walk.len() < n {
            continue;
        }
        let mut keep = sample(&mut rng, walk.len(), n).into_vec();
        keep.sort_unstable();
        let points: Vec<Point> = keep.into_iter().map(|i| walk[i]).collect();
        return Ok(validate_convex_polygon(&points, Winding::CounterClockwise)?);
    }
    Err(Error::ResourceExhausted {
        attempts: RETRY_BUDGET,
        reason: format!(
            "no strictly convex {n}-gon within bound {coord_bound} (largest had {best} vertices)"
        ),
    })
}

/// Vertices of one Valtr polygon built from `m` sampled coordinates per axis,
/// shifted so both minima are zero. May hold fewer than `m` vertices.
fn valtr_walk(rng: &mut ChaCha8Rng, m: usize, bound: i64) -> Vec<Point> {
    let xs = chain_deltas(rng, m, bound);
    let mut ys = chain_deltas(rng, m, bound);
    ys.shuffle(rng);

    let mut vectors: Vec<(i64, i64)> = xs
        .into_iter()
        .zip(ys)
        .filter(|&v| v != (0, 0))
        .collect();
    vectors.sort_unstable_by(|&u, &v| angle_cmp(u, v));

    let mut merged: Vec<(i64, i64)> = Vec::with_capacity(vectors.len());
    for v in vectors {
        match merged.last_mut() {
            Some(last) if angle_cmp(*last, v) == Ordering::Equal => {
                last.0 += v.0;
                last.1 += v.1;
            }
            _ => merged.push(v),
        }
    }
    if merged.len() < 3 {
        return Vec::new();
    }

    let mut points = Vec::with_capacity(merged.len());
    let (mut x, mut y) = (0i64, 0i64);
    for (dx, dy) in merged {
        points.push(Point::new(x, y));
        x += dx;
        y += dy;
    }
    let min_x = points.iter().map(|p| p.x).min().unwrap_or(0);
    let min_y = points.iter().map(|p| p.y).min().unwrap_or(0);
    for p in &mut points {
        p.x -= min_x;
        p.y -= min_y;
    }
    points
}

/// `m` signed steps that walk from the minimum to the maximum of `m` random
/// values in `[0, bound]` along two chains and back; they sum to zero.
fn chain_deltas(rng: &mut ChaCha8Rng, m: usize, bound: i64) -> Vec<i64> {
    let mut values: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=bound)).collect();
    values.sort_unstable();
    let (lo, hi) = (values[0], values[m - 1]);
    let mut deltas = Vec::with_capacity(m);
    let (mut top, mut bottom) = (lo, lo);
    for &v in &values[1..m - 1] {
        if rng.gen::<bool>() {
            deltas.push(v - top);
            top = v;
        } else {
            deltas.push(bottom - v);
            bottom = v;
        }
    }
    deltas.push(hi - top);
    deltas.push(bottom - hi);
    deltas
}

/// Exact polar-angle order of nonzero vectors, starting at the positive x
/// axis. Parallel vectors pointing the same way compare equal.
fn angle_cmp(u: (i64, i64), v: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| u8::from(y < 0 || (y == 0 && x < 0));
    half(u).cmp(&half(v)).then_with(|| {
        let c = u.0 as i128 * v.1 as i128 - u.1 as i128 * v.0 as i128;
        0.cmp(&c)
    })
}

/// Every strictly convex polygon with between 3 and `max_n` vertices taken
/// from the `side` x `side` lattice grid `{0..side}^2`, in a fixed order.
pub fn lattice_convex_polygons(side: i64, max_n: usize) -> Vec<ConvexPolygon> {
    let grid: Vec<Point> = (0..side)
        .flat_map(|x| (0..side).map(move |y| Point::new(x, y)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(max_n);
    extend_convex(&grid, 0, max_n, &mut chosen, &mut out);
    out
}

// Points not in convex position stay that way when more points are added,
// so the search never extends such a set.
fn extend_convex(
    grid: &[Point],
    from: usize,
    max_n: usize,
    chosen: &mut Vec<Point>,
    out: &mut Vec<ConvexPolygon>,
) {
    for i in from..grid.len() {
        chosen.push(grid[i]);
        let ok = match chosen.len() {
            0..=2 => true,
            _ => match canonical_cyclic_order(chosen) {
                Ok(p) => {
                    out.push(p);
                    true
                }
                Err(_) => false,
            },
        };
        if ok && chosen.len() < max_n {
            extend_convex(grid, i + 1, max_n, chosen, out);
        }
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle_is_valid() {
        for seed in 0..20 {
            let p = random_convex_polygon(3, 10, seed).unwrap();
            assert_eq!(p.len(), 3);
        }
    }

    #[test]
    fn same_seed_same_polygon() {
        let a = random_convex_polygon(32, 1_000_000, 7).unwrap();
        let b = random_convex_polygon(32, 1_000_000, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_convex_polygon(32, 1_000_000, 8).unwrap());
    }

    #[test]
    fn tiny_bound_exhausts_budget() {
        let err = random_convex_polygon(40, 3, 1).unwrap_err();
        assert!(matches!(err, Error::ResourceExhausted { attempts: RETRY_BUDGET, .. }));
    }

    #[test]
    fn bad_arguments() {
        assert!(random_convex_polygon(2, 100, 0).is_err());
        assert!(random_convex_polygon(10, 0, 0).is_err());
        assert!(random_convex_polygon(10, COORD_LIMIT + 1, 0).is_err());
    }

    #[test]
    fn angle_order_is_counter_clockwise() {
        let mut v = [(0, -1), (-1, 0), (1, 1), (1, 0), (0, 1), (2, 2), (-1, -1)];
        v.sort_by(|&a, &b| angle_cmp(a, b));
        assert_eq!(v[0], (1, 0));
        assert_eq!(angle_cmp((1, 1), (2, 2)), Ordering::Equal);
        assert_eq!(v[v.len() - 1], (0, -1));
    }

    #[test]
    fn lattice_counts() {
        // 2x2 grid: four triangles and the square.
        assert_eq!(lattice_convex_polygons(2, 8).len(), 5);
        // 3x3 grid has 76 non-degenerate triangles.
        let three = lattice_convex_polygons(3, 3);
        assert_eq!(three.len(), 76);
        assert!(lattice_convex_polygons(3, 9).iter().all(|p| p.len() <= 8));
    }

    proptest! {
        #[test]
        fn output_validates(n in 3usize..80, bound in 200i64..2_000_000, seed: u64) {
            let p = random_convex_polygon(n, bound, seed).unwrap();
            prop_assert_eq!(p.len(), n);
            prop_assert!(p.vertices().iter().all(|q| (0..=bound).contains(&q.x) && (0..=bound).contains(&q.y)));
            prop_assert!(validate_convex_polygon(p.vertices(), Winding::CounterClockwise).is_ok());
        }
    }
}
