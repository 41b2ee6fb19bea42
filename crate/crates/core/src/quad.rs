//! The original linear-time quadrilateral walk. Like its triangle sibling it
//! is not optimal in general.

use crate::error::{invalid, Result};
use crate::geometry::{ConvexPolygon, IndexTuple, VertexId};
use crate::triangle::{Pointer, RunTrace};

/// Runs the quadrilateral walk from `root`, `next` meaning the
/// counter-clockwise successor.
///
/// The loop nest is kept as published: the `c` and `b` advance loops sit
/// inside the `d` advance loop, every test is `<=`, and when `a` catches up
/// with `b` the collision cascade pushes `b`, then `c`, then `d` forward.
pub fn ds_quadrilateral(poly: &ConvexPolygon, root: VertexId) -> Result<(IndexTuple, RunTrace)> {
    let n = poly.len();
    if n < 4 {
        return Err(invalid(format!("quadrilateral walk needs n >= 4, got {n}")));
    }
    if root >= n {
        return Err(invalid(format!("root {root} out of range for {n} vertices")));
    }
    let next = |i: VertexId| poly.next(i);
    let area = |a: VertexId, b: VertexId, c: VertexId, d: VertexId| {
        poly.tuple_area(&[a, b, c, d]).value()
    };

    let mut trace = RunTrace::default();
    let mut a = root;
    let mut b = next(a);
    let mut c = next(b);
    let mut d = next(c);
    let mut m = area(a, b, c, d);
    let mut best = [a, b, c, d];
    trace.checkpoint(best.to_vec(), m);

    loop {
        while area(a, b, c, d) <= area(a, b, c, next(d)) {
            let to = next(d);
            trace.step(Pointer::D, d, to, area(a, b, c, to));
            d = to;
            while area(a, b, c, d) <= area(a, b, next(c), d) {
                let to = next(c);
                trace.step(Pointer::C, c, to, area(a, b, to, d));
                c = to;
            }
            while area(a, b, c, d) <= area(a, next(b), c, d) {
                let to = next(b);
                trace.step(Pointer::B, b, to, area(a, to, c, d));
                b = to;
            }
        }
        let current = area(a, b, c, d);
        if current > m || current == m && best != [a, b, c, d] {
            m = current;
            best = [a, b, c, d];
            trace.checkpoint(best.to_vec(), m);
        }

        let to = next(a);
        trace.step(Pointer::A, a, to, area(to, b, c, d));
        a = to;
        if a == root {
            return Ok((IndexTuple::from_unsorted(best.to_vec()), trace));
        }
        if b == a {
            let to = next(b);
            trace.step(Pointer::B, b, to, area(a, to, c, d));
            b = to;
            if c == b {
                let to = next(c);
                trace.step(Pointer::C, c, to, area(a, b, to, d));
                c = to;
                if d == c {
                    let to = next(d);
                    trace.step(Pointer::D, d, to, area(a, b, c, to));
                    d = to;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{validate_convex_polygon, Point, Winding};
    use crate::oracle::brute_force_max_kgon_with_area;

    fn poly(v: &[(i64, i64)]) -> ConvexPolygon {
        let p: Vec<Point> = v.iter().map(|&p| p.into()).collect();
        validate_convex_polygon(&p, Winding::CounterClockwise).unwrap()
    }

    #[test]
    fn four_gon_returns_itself() {
        let p = poly(&[(0, 0), (6, 1), (5, 5), (1, 4)]);
        for r in 0..4 {
            let (q, trace) = ds_quadrilateral(&p, r).unwrap();
            assert_eq!(q.indices(), &[0, 1, 2, 3]);
            assert!(trace.is_monotone());
        }
    }

    #[test]
    fn square_with_apex_matches_oracle() {
        // Unit-ish square plus a far apex above, symmetric about x = 1.
        let p = poly(&[(0, 0), (2, 0), (2, 2), (1, 6), (0, 2)]);
        let (_, best) = brute_force_max_kgon_with_area(&p, 4).unwrap();
        for r in 0..5 {
            let (q, _) = ds_quadrilateral(&p, r).unwrap();
            assert_eq!(q.area(&p), best, "root {r}");
        }
    }

    #[test]
    fn rejects_triangles() {
        let p = poly(&[(0, 0), (6, 1), (5, 5)]);
        assert!(ds_quadrilateral(&p, 0).is_err());
    }
}
