//! Exact-integer algorithms for the largest triangle and quadrilateral
//! inscribed in a convex lattice polygon, together with the brute-force
//! oracle, stability predicates, random polygon generation and a
//! differential fuzzer.

pub mod algorithm;
pub mod bench;
pub mod error;
pub mod fixtures;
pub mod fuzz;
pub mod generate;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod quad;
pub mod stability;
pub mod triangle;

pub use algorithm::{Algorithm, Solution};
pub use error::{Error, GeometryError, Result};
pub use fuzz::{differential_fuzz, run_corpus, FuzzConfig, FuzzReport};
pub use generate::{lattice_convex_polygons, random_convex_polygon};
pub use geometry::{
    canonical_cyclic_order, doubled_polygon_area, doubled_triangle_area, orientation,
    validate_convex_polygon, ConvexPolygon, DoubledArea, IndexTuple, Orientation, Point,
    VertexId, Winding, COORD_LIMIT,
};
pub use oracle::{brute_force_max_kgon, brute_force_max_kgon_with_area};
pub use quad::ds_quadrilateral;
pub use stability::{
    enumerate_2_stable_rooted, interleaves, is_2_stable, is_3_stable, is_k_stable,
    largest_rooted_triangle, largest_rooted_triangle_with_area, StableTriangleSet,
};
pub use triangle::{
    dnc_triangle, dnc_triangle_with_base, dnc_triangle_with_stats, ds_triangle, part_size_bound,
    quadratic_triangle, quadratic_triangle_with_area, split_subproblems, Checkpoint, DncStats,
    Pointer, RunTrace, SubPart, SubproblemSplit, TraceStep, DEFAULT_BASE_CASE,
};
