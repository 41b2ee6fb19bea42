//! Largest inscribed triangle: the original linear-time pointer walk (which is
//! wrong), the quadratic all-roots sweep, and divide-and-conquer.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::geometry::{cross, ConvexPolygon, DoubledArea, IndexTuple, VertexId};
use crate::stability::{doubled, interleave_positions, largest_rooted_offsets};

/// Which pointer moved in a [`TraceStep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pointer {
    A,
    B,
    C,
    D,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub pointer: Pointer,
    pub from: VertexId,
    pub to: VertexId,
    /// Doubled area of the current tuple after the move.
    pub area_after: DoubledArea,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checkpoint {
    pub tuple: IndexTuple,
    pub area: DoubledArea,
}

/// Pointer moves and best-so-far updates of a pointer-walk algorithm.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunTrace {
    pub steps: Vec<TraceStep>,
    pub best_so_far: Vec<Checkpoint>,
}

impl RunTrace {
    pub(crate) fn step(&mut self, pointer: Pointer, from: VertexId, to: VertexId, area: i64) {
        self.steps.push(TraceStep {
            pointer,
            from,
            to,
            area_after: DoubledArea(area),
        });
    }

    pub(crate) fn checkpoint(&mut self, ids: Vec<VertexId>, area: i64) {
        self.best_so_far.push(Checkpoint {
            tuple: IndexTuple::from_unsorted(ids),
            area: DoubledArea(area),
        });
    }

    /// Checkpoint areas never decrease.
    pub fn is_monotone(&self) -> bool {
        self.best_so_far.windows(2).all(|w| w[0].area <= w[1].area)
    }

    pub fn final_checkpoint(&self) -> Option<&Checkpoint> {
        self.best_so_far.last()
    }
}

/// The original linear-time triangle walk, with `next` meaning the clockwise
/// successor.
///
/// Both advance tests are evaluated in every inner iteration, comparisons use
/// `>=`, and `b`, `c` are not reset when `a` moves. When `a` lands on `b`,
/// `b` (and then `c`) step forward, mirroring the collision guard of the
/// quadrilateral walk. The result is not optimal in general.
pub fn ds_triangle(poly: &ConvexPolygon, root: VertexId) -> Result<(IndexTuple, RunTrace)> {
    let n = poly.len();
    if root >= n {
        return Err(invalid(format!("root {root} out of range for {n} vertices")));
    }
    let next = |i: VertexId| poly.prev(i);
    // Positive for a clockwise triple.
    let area = |a: VertexId, b: VertexId, c: VertexId| {
        cross(poly.vertex(a), poly.vertex(c), poly.vertex(b))
    };

    let mut trace = RunTrace::default();
    let mut a = root;
    let mut b = next(a);
    let mut c = next(b);
    let mut m = area(a, b, c);
    let mut best = (a, b, c);
    trace.checkpoint(vec![a, b, c], m);

    loop {
        while area(a, b, next(c)) >= area(a, b, c) || area(a, next(b), c) >= area(a, b, c) {
            if area(a, b, next(c)) >= area(a, b, c) {
                let to = next(c);
                trace.step(Pointer::C, c, to, area(a, b, to));
                c = to;
            }
            if area(a, next(b), c) >= area(a, b, c) {
                let to = next(b);
                trace.step(Pointer::B, b, to, area(a, to, c));
                b = to;
            }
        }
        let current = area(a, b, c);
        if current >= m {
            m = current;
            best = (a, b, c);
            trace.checkpoint(vec![a, b, c], m);
        }
        let to = next(a);
        trace.step(Pointer::A, a, to, area(to, b, c));
        a = to;
        if a == root {
            return Ok((IndexTuple::triangle(best.0, best.1, best.2), trace));
        }
        if b == a {
            let to = next(b);
            trace.step(Pointer::B, b, to, area(a, to, c));
            b = to;
            if c == b {
                let to = next(c);
                trace.step(Pointer::C, c, to, area(a, b, to));
                c = to;
            }
        }
    }
}

/// Largest triangle by running the rooted sweep from every vertex; `b` and
/// `c` restart at the root's successors each time. The first maximum in root
/// order wins.
pub fn quadratic_triangle(poly: &ConvexPolygon) -> IndexTuple {
    quadratic_triangle_with_area(poly).0
}

pub fn quadratic_triangle_with_area(poly: &ConvexPolygon) -> (IndexTuple, DoubledArea) {
    let ids: Vec<VertexId> = (0..poly.len()).collect();
    let (t, area) = quadratic_on(poly, &ids);
    (IndexTuple::from_unsorted(t.to_vec()), DoubledArea(area))
}

/// Quadratic sweep over the cyclic subsequence `ids` of `poly`.
fn quadratic_on(poly: &ConvexPolygon, ids: &[VertexId]) -> ([VertexId; 3], i64) {
    let m = ids.len();
    let pts = doubled(ids.iter().map(|&i| poly.vertex(i)));
    let mut best = ([0, 1, 2], -1);
    for a in 0..m {
        let (b, c, area) = largest_rooted_offsets(&pts[a..a + m]);
        if area > best.1 {
            best = ([ids[a], ids[(a + b) % m], ids[(a + c) % m]], area);
        }
    }
    best
}

/// Counters collected over one divide-and-conquer run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DncStats {
    pub nodes: usize,
    pub base_cases: usize,
    pub one_part_splits: usize,
    pub two_part_splits: usize,
    /// Nodes whose split did not shrink the problem and were solved by the
    /// quadratic sweep instead.
    pub fallback_nodes: usize,
    pub max_fallback_size: usize,
    /// Nodes that broke the part-size bounds. Always zero unless the bounds
    /// are wrong.
    pub bound_violations: usize,
    pub max_depth: usize,
}

/// Largest part size allowed for a node of size `n`: ceil(5(n + 6) / 6).
pub fn part_size_bound(n: usize) -> usize {
    (5 * (n + 6)).div_ceil(6)
}

/// Node size at or below which [`dnc_triangle`] stops splitting and runs the
/// quadratic sweep.
pub const DEFAULT_BASE_CASE: usize = 32;

/// Largest triangle by divide and conquer.
pub fn dnc_triangle(poly: &ConvexPolygon) -> IndexTuple {
    dnc_triangle_with_stats(poly).0
}

pub fn dnc_triangle_with_stats(poly: &ConvexPolygon) -> (IndexTuple, DoubledArea, DncStats) {
    dnc_triangle_with_base(poly, DEFAULT_BASE_CASE)
}

/// Divide and conquer with an explicit base-case size; values below 5 act
/// as 5. Small thresholds force deep recursion, which is what the split
/// tests want.
pub fn dnc_triangle_with_base(
    poly: &ConvexPolygon,
    base_case: usize,
) -> (IndexTuple, DoubledArea, DncStats) {
    let mut stats = DncStats::default();
    let ids: Vec<VertexId> = (0..poly.len()).collect();
    let (t, area) = dnc_solve(poly, &ids, base_case.max(5), 0, &mut stats);
    (IndexTuple::from_unsorted(t.to_vec()), DoubledArea(area), stats)
}

fn dnc_solve(
    poly: &ConvexPolygon,
    ids: &[VertexId],
    base_case: usize,
    depth: usize,
    stats: &mut DncStats,
) -> ([VertexId; 3], i64) {
    let m = ids.len();
    stats.nodes += 1;
    stats.max_depth = stats.max_depth.max(depth);
    if m <= base_case {
        stats.base_cases += 1;
        return quadratic_on(poly, ids);
    }
    let pts = doubled(ids.iter().map(|&i| poly.vertex(i)));

    let (b, c, _) = largest_rooted_offsets(&pts[..m]);
    let ta = [0, b, c];
    let median = median_of_largest_interval(m, ta);
    let (b, c, _) = largest_rooted_offsets(&pts[median..median + m]);
    let tm = sorted3([median, (median + b) % m, (median + c) % m]);

    let (parts, _) = split_local(m, ta, tm);
    let bound = part_size_bound(m);
    let within = parts.iter().all(|p| p.len() <= bound)
        && (parts.len() != 2 || parts[0].len() + parts[1].len() <= m + 6);
    if !within {
        stats.bound_violations += 1;
    }
    debug_assert!(
        within,
        "split of a {m}-vertex node into parts of sizes {:?} breaks the size bounds",
        parts.iter().map(Vec::len).collect::<Vec<_>>()
    );
    match parts.len() {
        1 => stats.one_part_splits += 1,
        _ => stats.two_part_splits += 1,
    }

    if parts.iter().any(|p| p.len() >= m) {
        stats.fallback_nodes += 1;
        stats.max_fallback_size = stats.max_fallback_size.max(m);
        return quadratic_on(poly, ids);
    }

    let mut best = ([0; 3], -1);
    for part in &parts {
        let sub: Vec<VertexId> = part.iter().map(|&i| ids[i]).collect();
        let found = dnc_solve(poly, &sub, base_case, depth + 1, stats);
        // Strict comparison keeps the earlier part on ties.
        if found.1 > best.1 {
            best = found;
        }
    }
    best
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

/// Median vertex of the interval of `ta` (sorted positions on a cycle of
/// length `n`) holding the most vertices; ties go to the lowest start.
pub(crate) fn median_of_largest_interval(n: usize, ta: [usize; 3]) -> usize {
    let mut best_start = ta[0];
    let mut best_len = 0;
    for i in 0..3 {
        let s = ta[i];
        let e = ta[(i + 1) % 3];
        let len = (e + n - s) % n;
        if len > best_len {
            best_len = len;
            best_start = s;
        }
    }
    (best_start + best_len / 2) % n
}

/// Subproblems induced by two dividing triangles on a cycle of length `n`.
///
/// The distinct dividing vertices cut the cycle into closed elementary
/// intervals. A triple of symbolic positions (a dividing vertex, or the open
/// interior of an elementary interval, empty or not) is compatible when a
/// triangle placed there interleaves both dividing triangles. Each compatible
/// triple covers the dividing vertices it names plus the closed intervals
/// whose interiors it names; the maximal covers are the parts, returned as
/// ascending local positions. The flag reports whether `ta` and `tm`
/// interleave.
pub(crate) fn split_local(n: usize, ta: [usize; 3], tm: [usize; 3]) -> (Vec<Vec<usize>>, bool) {
    let mut dividing: Vec<usize> = ta.iter().chain(tm.iter()).copied().collect();
    dividing.sort_unstable();
    dividing.dedup();
    let d = dividing.len();
    let succ = |i: usize| dividing[(i + 1) % d];
    let interior_len = |i: usize| (succ(i) + n - dividing[i]) % n - 1;

    // Positions on the doubled cycle: vertex v -> 2v, interior after v -> 2v + 1.
    // Piece 2i is dividing vertex i, piece 2i + 1 the interior of interval i.
    let positions: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| [(2 * dividing[i], 2 * i), (2 * dividing[i] + 1, 2 * i + 1)])
        .collect();
    let ta2 = ta.map(|v| 2 * v);
    let tm2 = tm.map(|v| 2 * v);

    let mut covers: Vec<u32> = Vec::new();
    for x in 0..positions.len() {
        for y in x + 1..positions.len() {
            for z in y + 1..positions.len() {
                let s = [positions[x].0, positions[y].0, positions[z].0];
                if !interleave_positions(&ta2, &s, 2 * n) || !interleave_positions(&tm2, &s, 2 * n)
                {
                    continue;
                }
                let mut mask = 0u32;
                for &(_, piece) in &[positions[x], positions[y], positions[z]] {
                    if piece % 2 == 0 {
                        mask |= 1 << piece;
                    } else {
                        let i = piece / 2;
                        mask |= 1 << (2 * i);
                        mask |= 1 << (2 * ((i + 1) % d));
                        if interior_len(i) > 0 {
                            mask |= 1 << piece;
                        }
                    }
                }
                if !covers.contains(&mask) {
                    covers.push(mask);
                }
            }
        }
    }
    let maximal: Vec<u32> = covers
        .iter()
        .copied()
        .filter(|&m| !covers.iter().any(|&o| o != m && o & m == m))
        .collect();

    let mut parts: Vec<Vec<usize>> = maximal
        .into_iter()
        .map(|mask| {
            let mut part = Vec::new();
            for (i, &v) in dividing.iter().enumerate() {
                if mask & (1 << (2 * i)) != 0 {
                    part.push(v);
                }
                if mask & (1 << (2 * i + 1)) != 0 {
                    part.extend((1..=interior_len(i)).map(|off| (v + off) % n));
                }
            }
            part.sort_unstable();
            part
        })
        .collect();
    parts.sort();
    (parts, interleave_positions(&ta, &tm, n))
}

/// One subproblem of a split: a convex polygon plus, for each of its
/// vertices, the vertex id in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubPart {
    pub polygon: ConvexPolygon,
    pub parent_ids: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubproblemSplit {
    pub parts: Vec<SubPart>,
    pub interleaving: bool,
}

/// Splits `poly` with dividing triangles `ta` and `tm`, where `tm` must
/// contain the median vertex of the largest interval induced by `ta`.
pub fn split_subproblems(
    poly: &ConvexPolygon,
    ta: &IndexTuple,
    tm: &IndexTuple,
) -> Result<SubproblemSplit> {
    let n = poly.len();
    for t in [ta, tm] {
        if t.k() != 3 || t.indices().iter().any(|&i| i >= n) {
            return Err(invalid(format!("{t} is not a triangle on {n} vertices")));
        }
    }
    let ta = [ta.indices()[0], ta.indices()[1], ta.indices()[2]];
    let tm = [tm.indices()[0], tm.indices()[1], tm.indices()[2]];
    let median = median_of_largest_interval(n, ta);
    if ta.contains(&median) {
        return Err(invalid("the largest interval of the first triangle has no interior vertex"));
    }
    if !tm.contains(&median) {
        return Err(invalid(format!(
            "second triangle must contain the median vertex {median}"
        )));
    }
    let (parts, interleaving) = split_local(n, ta, tm);
    let parts = parts
        .into_iter()
        .map(|ids| SubPart {
            polygon: poly.subpolygon(&ids),
            parent_ids: ids,
        })
        .collect();
    Ok(SubproblemSplit { parts, interleaving })
}
