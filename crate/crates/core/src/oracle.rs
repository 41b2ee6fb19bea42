//! Exhaustive ground truth. Deliberately shares no arithmetic with the fast
//! algorithms: it computes its own shoelace sums over raw coordinates.

use crate::error::{invalid, Result};
use crate::geometry::{ConvexPolygon, DoubledArea, IndexTuple, Point};

fn shoelace(points: &[Point]) -> i128 {
    let n = points.len();
    (0..n)
        .map(|i| {
            let p = points[i];
            let q = points[(i + 1) % n];
            p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128
        })
        .sum()
}

/// Largest P-aligned k-gon (k = 3 or 4) by scanning all C(n, k) index sets in
/// lexicographic order; the first maximum wins.
pub fn brute_force_max_kgon(poly: &ConvexPolygon, k: usize) -> Result<IndexTuple> {
    brute_force_max_kgon_with_area(poly, k).map(|(t, _)| t)
}

pub fn brute_force_max_kgon_with_area(
    poly: &ConvexPolygon,
    k: usize,
) -> Result<(IndexTuple, DoubledArea)> {
    let n = poly.len();
    if k != 3 && k != 4 {
        return Err(invalid(format!("oracle supports k = 3 or 4, got {k}")));
    }
    if n < k {
        return Err(invalid(format!("need at least {k} vertices, got {n}")));
    }
    let v = poly.vertices();
    let mut best: Option<(Vec<usize>, i128)> = None;
    let mut consider = |ids: &[usize]| {
        let pts: Vec<Point> = ids.iter().map(|&i| v[i]).collect();
        let a = shoelace(&pts);
        if best.as_ref().is_none_or(|(_, b)| a > *b) {
            best = Some((ids.to_vec(), a));
        }
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if k == 3 {
                    consider(&[a, b, c]);
                } else {
                    for d in c + 1..n {
                        consider(&[a, b, c, d]);
                    }
                }
            }
        }
    }
    let (ids, area) = best.expect("n >= k leaves at least one tuple");
    let area = i64::try_from(area).expect("in-bound polygon areas fit i64");
    Ok((IndexTuple::new(ids, n)?, DoubledArea(area)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{validate_convex_polygon, Winding};

    #[test]
    fn whole_polygon_when_n_equals_k() {
        let p: Vec<Point> = [(0, 0), (4, 0), (1, 3)].iter().map(|&q| q.into()).collect();
        let p = validate_convex_polygon(&p, Winding::CounterClockwise).unwrap();
        assert_eq!(brute_force_max_kgon(&p, 3).unwrap().indices(), &[0, 1, 2]);
        assert!(brute_force_max_kgon(&p, 4).is_err());

        let q: Vec<Point> = [(0, 0), (4, 0), (5, 3), (1, 3)].iter().map(|&q| q.into()).collect();
        let q = validate_convex_polygon(&q, Winding::CounterClockwise).unwrap();
        let (t, a) = brute_force_max_kgon_with_area(&q, 4).unwrap();
        assert_eq!(t.indices(), &[0, 1, 2, 3]);
        assert_eq!(a.value(), 24);
    }

    #[test]
    fn rejects_unsupported_k() {
        let p: Vec<Point> = [(0, 0), (4, 0), (1, 3)].iter().map(|&q| q.into()).collect();
        let p = validate_convex_polygon(&p, Winding::CounterClockwise).unwrap();
        assert!(brute_force_max_kgon(&p, 5).is_err());
    }
}
