//! Interleaving and stability predicates, and the rooted two-pointer sweep
//! shared by the quadratic and divide-and-conquer algorithms.
//!
//! Stability is always "no single-vertex replacement is strictly larger", so
//! equal-area replacements keep a tuple stable.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::geometry::{cross, ConvexPolygon, DoubledArea, IndexTuple, Point, VertexId};

/// Every 2-stable triangle rooted at one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableTriangleSet {
    pub root: VertexId,
    pub triangles: Vec<IndexTuple>,
}

/// Closed-interval interleaving of two P-aligned tuples of equal size.
pub fn interleaves(a: &IndexTuple, b: &IndexTuple, poly: &ConvexPolygon) -> Result<bool> {
    if a.k() != b.k() {
        return Err(invalid(format!(
            "interleaving needs equal sizes, got {} and {}",
            a.k(),
            b.k()
        )));
    }
    let n = poly.len();
    if a.indices().iter().chain(b.indices()).any(|&i| i >= n) {
        return Err(invalid("tuple index out of range"));
    }
    Ok(interleave_positions(a.indices(), b.indices(), n))
}

/// `a` and `b` are sorted positions on a cycle of length `n`.
pub(crate) fn interleave_positions(a: &[usize], b: &[usize], n: usize) -> bool {
    arcs_hit(a, b, n) && arcs_hit(b, a, n)
}

/// Every closed arc between cyclically consecutive members of `sorted`
/// contains a member of `other`.
fn arcs_hit(sorted: &[usize], other: &[usize], n: usize) -> bool {
    let k = sorted.len();
    (0..k).all(|i| {
        let s = sorted[i];
        let e = sorted[(i + 1) % k];
        let len = match (e + n - s) % n {
            0 => n,
            l => l,
        };
        other.iter().any(|&x| (x + n - s) % n <= len)
    })
}

fn check_triangle(poly: &ConvexPolygon, t: &IndexTuple) -> Result<()> {
    if t.k() != 3 {
        return Err(invalid(format!("expected a triangle, got {} vertices", t.k())));
    }
    if t.indices().iter().any(|&i| i >= poly.len()) {
        return Err(invalid("triangle index out of range"));
    }
    Ok(())
}

/// Neither non-root vertex of `t` can be swapped for a larger triangle.
pub fn is_2_stable(poly: &ConvexPolygon, t: &IndexTuple, root: VertexId) -> Result<bool> {
    check_triangle(poly, t)?;
    if !t.contains(root) {
        return Err(invalid(format!("root {root} is not a vertex of {t}")));
    }
    let others: Vec<VertexId> = t.indices().iter().copied().filter(|&v| v != root).collect();
    Ok(replacement_safe(poly, t, root, others[0], others[1])
        && replacement_safe(poly, t, root, others[1], others[0]))
}

/// No single vertex of `t` can be swapped for a larger triangle.
pub fn is_3_stable(poly: &ConvexPolygon, t: &IndexTuple) -> Result<bool> {
    check_triangle(poly, t)?;
    let [a, b, c] = [t.indices()[0], t.indices()[1], t.indices()[2]];
    Ok(replacement_safe(poly, t, a, b, c)
        && replacement_safe(poly, t, b, c, a)
        && replacement_safe(poly, t, c, a, b))
}

/// Replacing `moving` (keeping `keep1`, `keep2`) by any vertex never yields a
/// strictly larger unsigned area.
fn replacement_safe(
    poly: &ConvexPolygon,
    t: &IndexTuple,
    keep1: VertexId,
    keep2: VertexId,
    moving: VertexId,
) -> bool {
    let base = poly.triangle_area(keep1, keep2, moving);
    (0..poly.len())
        .filter(|v| !t.contains(*v))
        .all(|v| poly.triangle_area(keep1, keep2, v) <= base)
}

/// No vertex of `q` can move to another vertex strictly between its two
/// neighbours in `q` and strictly increase the area.
pub fn is_k_stable(poly: &ConvexPolygon, q: &IndexTuple) -> Result<bool> {
    let n = poly.len();
    let k = q.k();
    if k < 3 {
        return Err(invalid(format!("k-stability needs k >= 3, got {k}")));
    }
    if q.indices().iter().any(|&i| i >= n) {
        return Err(invalid("tuple index out of range"));
    }
    let base = q.area(poly);
    let ids = q.indices();
    let mut trial = ids.to_vec();
    for i in 0..k {
        let prev = ids[(i + k - 1) % k];
        let next = ids[(i + 1) % k];
        let mut v = poly.next(prev);
        while v != next {
            if v != ids[i] {
                trial[i] = v;
                if poly.tuple_area(&trial) > base {
                    return Ok(false);
                }
            }
            v = poly.next(v);
        }
        trial[i] = ids[i];
    }
    Ok(true)
}

/// The cyclic sequence `points` written out twice, so that the `m` points
/// starting at any root form one contiguous window.
pub(crate) fn doubled(points: impl Iterator<Item = Point> + Clone) -> Vec<Point> {
    points.clone().chain(points).collect()
}

/// One rooted sweep over `window`, the cyclic point sequence read from the
/// root onwards.
///
/// With the root at offset 0, `b` walks from offset 1 to `m - 2`; for each
/// `b` the pointer `c` advances while that does not shrink the triangle and
/// never moves back. `visit(b, c, area)` sees the offsets and the doubled
/// area of the triangle.
#[inline]
pub(crate) fn rooted_sweep<V>(window: &[Point], mut visit: V)
where
    V: FnMut(usize, usize, i64),
{
    let m = window.len();
    debug_assert!(m >= 3);
    let a = window[0];
    let mut c = 2;
    for b in 1..m - 1 {
        let pb = window[b];
        if c <= b {
            c = b + 1;
        }
        let mut area = cross(a, pb, window[c]);
        while c + 1 < m {
            let pn = window[c + 1];
            let next = cross(a, pb, pn);
            if next < area {
                break;
            }
            c += 1;
            area = next;
        }
        visit(b, c, area);
    }
}

/// Largest rooted triangle over `window` (as in [`rooted_sweep`]); returns
/// offsets `(b, c)` and the doubled area. The first maximum in sweep order
/// wins.
#[inline]
pub(crate) fn largest_rooted_offsets(window: &[Point]) -> (usize, usize, i64) {
    let mut best = (1, 2, -1);
    rooted_sweep(window, |b, c, area| {
        if area > best.2 {
            best = (b, c, area);
        }
    });
    best
}

/// Largest-area triangle that uses `root` as a vertex, found in one linear
/// sweep.
pub fn largest_rooted_triangle(poly: &ConvexPolygon, root: VertexId) -> Result<IndexTuple> {
    let n = poly.len();
    if root >= n {
        return Err(invalid(format!("root {root} out of range for {n} vertices")));
    }
    let pts = doubled(poly.vertices().iter().copied());
    let (b, c, _) = largest_rooted_offsets(&pts[root..root + n]);
    Ok(IndexTuple::triangle(root, (root + b) % n, (root + c) % n))
}

/// Largest rooted triangle together with its doubled area.
pub fn largest_rooted_triangle_with_area(
    poly: &ConvexPolygon,
    root: VertexId,
) -> Result<(IndexTuple, DoubledArea)> {
    let t = largest_rooted_triangle(poly, root)?;
    let area = t.area(poly);
    Ok((t, area))
}

/// All 2-stable triangles rooted at `root`.
///
/// The rooted sweep proposes, for every `b`, the farthest `c` (and its equal
/// plateau neighbour); proposals that survive the full replacement test are
/// returned in sweep order.
pub fn enumerate_2_stable_rooted(poly: &ConvexPolygon, root: VertexId) -> Result<StableTriangleSet> {
    let n = poly.len();
    if root >= n {
        return Err(invalid(format!("root {root} out of range for {n} vertices")));
    }
    let mut proposals: Vec<(usize, usize)> = Vec::new();
    let pts = doubled(poly.vertices().iter().copied());
    rooted_sweep(&pts[root..root + n], |b, c, area| {
        if c > b + 1 {
            let before = cross(
                poly.vertex(root),
                poly.vertex((root + b) % n),
                poly.vertex((root + c - 1) % n),
            );
            if before == area {
                proposals.push((b, c - 1));
            }
        }
        proposals.push((b, c));
    });
    let mut triangles: Vec<IndexTuple> = Vec::new();
    for (b, c) in proposals {
        let t = IndexTuple::triangle(root, (root + b) % n, (root + c) % n);
        if !triangles.contains(&t) && is_2_stable(poly, &t, root)? {
            triangles.push(t);
        }
    }
    Ok(StableTriangleSet { root, triangles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{validate_convex_polygon, Winding};

    fn poly(v: &[(i64, i64)]) -> ConvexPolygon {
        let p: Vec<Point> = v.iter().map(|&p| p.into()).collect();
        validate_convex_polygon(&p, Winding::CounterClockwise).unwrap()
    }

    fn hexagon() -> ConvexPolygon {
        poly(&[(2, 0), (4, 1), (4, 3), (2, 4), (0, 3), (0, 1)])
    }

    fn t(v: &[usize]) -> IndexTuple {
        IndexTuple::from_unsorted(v.to_vec())
    }

    #[test]
    fn interleave_examples() {
        let h = hexagon();
        assert!(interleaves(&t(&[0, 2, 4]), &t(&[1, 3, 5]), &h).unwrap());
        assert!(!interleaves(&t(&[0, 1, 2]), &t(&[3, 4, 5]), &h).unwrap());
        assert!(interleaves(&t(&[0, 1, 3]), &t(&[0, 1, 3]), &h).unwrap());
        assert!(interleaves(&t(&[0, 1]), &t(&[0, 1, 3]), &h).is_err());
    }

    #[test]
    fn stability_on_triangle() {
        let p = poly(&[(0, 0), (5, 1), (2, 4)]);
        let whole = t(&[0, 1, 2]);
        for r in 0..3 {
            assert!(is_2_stable(&p, &whole, r).unwrap());
            assert_eq!(largest_rooted_triangle(&p, r).unwrap(), whole);
            let set = enumerate_2_stable_rooted(&p, r).unwrap();
            assert_eq!(set.triangles, vec![whole.clone()]);
        }
        assert!(is_3_stable(&p, &whole).unwrap());
        assert!(is_k_stable(&p, &whole).unwrap());
    }

    #[test]
    fn root_must_belong_to_triangle() {
        let h = hexagon();
        assert!(is_2_stable(&h, &t(&[0, 2, 4]), 1).is_err());
        assert!(is_3_stable(&h, &t(&[0, 2])).is_err());
    }

    #[test]
    fn unit_square_rooted() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let best = largest_rooted_triangle(&sq, 0).unwrap();
        assert!(best.contains(0));
        assert_eq!(best.area(&sq).value(), 1);
    }

    #[test]
    fn k_equal_n_is_stable() {
        let h = hexagon();
        assert!(is_k_stable(&h, &t(&[0, 1, 2, 3, 4, 5])).unwrap());
    }
}
