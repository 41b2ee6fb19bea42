use maxtri::{
    brute_force_max_kgon_with_area, enumerate_2_stable_rooted, interleaves, is_2_stable,
    is_3_stable, largest_rooted_triangle_with_area, random_convex_polygon, split_subproblems,
    validate_convex_polygon, ConvexPolygon, IndexTuple, Point, Winding,
};
use proptest::prelude::*;

fn all_triangles(n: usize) -> impl Iterator<Item = IndexTuple> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| IndexTuple::triangle(a, b, c)))
    })
}

/// Largest area over the subpolygons of a split.
fn best_over_parts(p: &ConvexPolygon, ta: &IndexTuple, tm: &IndexTuple) -> i64 {
    let split = split_subproblems(p, ta, tm).unwrap();
    split
        .parts
        .iter()
        .map(|part| {
            assert!(part.parent_ids.len() < p.len());
            assert!(part.parent_ids.windows(2).all(|w| w[0] < w[1]));
            let (t, area) = brute_force_max_kgon_with_area(&part.polygon, 3).unwrap();
            let lifted = IndexTuple::new(t.indices().iter().map(|&i| part.parent_ids[i]).collect(), p.len()).unwrap();
            assert_eq!(lifted.area(p), area);
            area.value()
        })
        .max()
        .unwrap()
}

/// The two dividing triangles the divide-and-conquer algorithm would use.
fn dividing(p: &ConvexPolygon) -> (IndexTuple, IndexTuple) {
    let n = p.len();
    let (ta, _) = largest_rooted_triangle_with_area(p, 0).unwrap();
    let ids = ta.indices();
    let (mut start, mut len) = (ids[0], 0);
    for i in 0..3 {
        let l = (ids[(i + 1) % 3] + n - ids[i]) % n;
        if l > len {
            (start, len) = (ids[i], l);
        }
    }
    let median = (start + len / 2) % n;
    let (tm, _) = largest_rooted_triangle_with_area(p, median).unwrap();
    (ta, tm)
}

#[test]
fn split_keeps_optimum_with_tied_dividing_triangles() {
    // Square symmetry: the largest triangles rooted at 0 and at the median
    // tie in area.
    let pts: Vec<Point> = [
        (3, 0), (5, 0), (7, 1), (8, 3), (8, 5), (7, 7), (5, 8), (3, 8), (1, 7), (0, 5), (0, 3), (1, 1),
    ]
    .iter()
    .map(|&q| q.into())
    .collect();
    let p = validate_convex_polygon(&pts, Winding::CounterClockwise).unwrap();
    let (ta, tm) = dividing(&p);
    assert_eq!(ta.area(&p), tm.area(&p));
    assert_ne!(ta, tm);
    let split = split_subproblems(&p, &ta, &tm).unwrap();
    assert_eq!(split.parts.len(), if split.interleaving { 2 } else { 1 });
    let (_, best) = brute_force_max_kgon_with_area(&p, 3).unwrap();
    assert_eq!(best_over_parts(&p, &ta, &tm), best.value());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rooted_sweep_matches_exhaustive_rooted_search(n in 3usize..30, seed: u64) {
        let p = random_convex_polygon(n, 1_000_000, seed).unwrap();
        for root in 0..n {
            let (_, area) = largest_rooted_triangle_with_area(&p, root).unwrap();
            let best = all_triangles(n).filter(|t| t.contains(root)).map(|t| t.area(&p)).max().unwrap();
            prop_assert_eq!(area, best);
        }
    }

    #[test]
    fn two_stable_enumeration_is_complete(n in 3usize..22, bound in 20i64..1_000_000, seed: u64) {
        let Ok(p) = random_convex_polygon(n, bound, seed) else { return Ok(()) };
        for root in 0..n {
            let mut got = enumerate_2_stable_rooted(&p, root).unwrap().triangles;
            got.sort();
            let want: Vec<IndexTuple> = all_triangles(n)
                .filter(|t| t.contains(root) && is_2_stable(&p, t, root).unwrap())
                .collect();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn three_stable_triangles_interleave(n in 3usize..22, bound in 20i64..1_000_000, seed: u64) {
        let Ok(p) = random_convex_polygon(n, bound, seed) else { return Ok(()) };
        let stable: Vec<IndexTuple> = all_triangles(n).filter(|t| is_3_stable(&p, t).unwrap()).collect();
        prop_assert!(!stable.is_empty());
        for a in &stable {
            for b in &stable {
                prop_assert!(interleaves(a, b, &p).unwrap());
            }
        }
    }

    #[test]
    fn split_parts_contain_an_optimum(n in 10usize..40, seed: u64) {
        let p = random_convex_polygon(n, 1_000_000, seed).unwrap();
        let (ta, tm) = dividing(&p);
        let (_, best) = brute_force_max_kgon_with_area(&p, 3).unwrap();
        let split = split_subproblems(&p, &ta, &tm).unwrap();
        prop_assert_eq!(split.parts.len(), if split.interleaving { 2 } else { 1 });
        prop_assert_eq!(best_over_parts(&p, &ta, &tm), best.value());
    }
}
