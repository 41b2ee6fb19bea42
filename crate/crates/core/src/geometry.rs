//! Exact integer primitives: points, orientation, doubled areas and convex
//! polygon validation.
//!
//! Every area in this crate is *doubled* so that lattice polygons never need
//! halves. Coordinates are bounded by [`COORD_LIMIT`], which keeps every cross
//! product of three in-bound points inside `i64`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// Largest admissible absolute coordinate (2^29).
///
/// Coordinate differences stay below 2^30, so a cross product is bounded by
/// 2^61 and the doubled area of any inscribed triangle or quadrilateral fits
/// in `i64`.
pub const COORD_LIMIT: i64 = 1 << 29;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn in_bounds(&self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Result of the orientation predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Declared traversal order of a vertex list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Winding {
    #[serde(rename = "CW")]
    Clockwise,
    #[serde(rename = "CCW")]
    CounterClockwise,
}

impl Winding {
    pub fn as_str(self) -> &'static str {
        match self {
            Winding::Clockwise => "CW",
            Winding::CounterClockwise => "CCW",
        }
    }
}

/// Twice the signed Euclidean area of a point sequence.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubledArea(pub i64);

impl DoubledArea {
    pub const ZERO: DoubledArea = DoubledArea(0);

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn abs(self) -> DoubledArea {
        DoubledArea(self.0.abs())
    }
}

impl fmt::Display for DoubledArea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

// Serialized as a decimal string so consumers never round it through a float.
impl Serialize for DoubledArea {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for DoubledArea {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<i64>()
            .map(DoubledArea)
            .map_err(serde::de::Error::custom)
    }
}

/// `(q - p) x (r - p)`. Callers guarantee the coordinate bound.
#[inline(always)]
pub(crate) fn cross(p: Point, q: Point, r: Point) -> i64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    match cross(p, q, r) {
        v if v > 0 => Orientation::CounterClockwise,
        0 => Orientation::Collinear,
        _ => Orientation::Clockwise,
    }
}

/// Signed doubled area of the triangle `pqr`; positive when counter-clockwise.
pub fn doubled_triangle_area(p: Point, q: Point, r: Point) -> DoubledArea {
    DoubledArea(cross(p, q, r))
}

/// Shoelace sum over an arbitrary point sequence.
pub fn doubled_polygon_area(points: &[Point]) -> Result<DoubledArea, GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::TooFew { n: points.len() });
    }
    let origin = points[0];
    let mut sum: i128 = 0;
    for w in points[1..].windows(2) {
        sum += cross(origin, w[0], w[1]) as i128;
    }
    i64::try_from(sum)
        .map(DoubledArea)
        .map_err(|_| GeometryError::AreaOverflow)
}

/// Index of a vertex inside a [`ConvexPolygon`].
pub type VertexId = usize;

/// A strictly convex polygon stored counter-clockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Builds a polygon from a list already known to be strictly convex and
    /// counter-clockwise (for example a subsequence of a validated polygon).
    pub(crate) fn from_trusted(vertices: Vec<Point>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline(always)]
    pub fn vertex(&self, i: VertexId) -> Point {
        self.vertices[i]
    }

    #[inline]
    pub fn next(&self, i: VertexId) -> VertexId {
        if i + 1 == self.vertices.len() {
            0
        } else {
            i + 1
        }
    }

    #[inline]
    pub fn prev(&self, i: VertexId) -> VertexId {
        if i == 0 {
            self.vertices.len() - 1
        } else {
            i - 1
        }
    }

    /// Unsigned doubled area of the triangle on three vertex ids.
    #[inline]
    pub fn triangle_area(&self, a: VertexId, b: VertexId, c: VertexId) -> DoubledArea {
        DoubledArea(cross(self.vertices[a], self.vertices[b], self.vertices[c]).abs())
    }

    /// Signed doubled area of the polygon spanned by `ids`, in the given order.
    pub fn tuple_area(&self, ids: &[VertexId]) -> DoubledArea {
        match ids.len() {
            0..=2 => DoubledArea::ZERO,
            _ => {
                let o = self.vertices[ids[0]];
                let mut s = 0i64;
                for w in ids[1..].windows(2) {
                    s += cross(o, self.vertices[w[0]], self.vertices[w[1]]);
                }
                DoubledArea(s)
            }
        }
    }

    /// Doubled area of the whole polygon.
    pub fn area(&self) -> DoubledArea {
        // A convex polygon inside the coordinate box cannot overflow.
        doubled_polygon_area(&self.vertices).expect("validated polygon area fits i64")
    }

    /// The polygon formed by a cyclic subsequence of this one's vertices.
    pub fn subpolygon(&self, ids: &[VertexId]) -> ConvexPolygon {
        ConvexPolygon::from_trusted(ids.iter().map(|&i| self.vertices[i]).collect())
    }
}

/// A k-tuple of distinct vertex ids in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexTuple(Vec<VertexId>);

impl IndexTuple {
    /// Sorts the ids; fails on duplicates or ids out of range.
    pub fn new(mut ids: Vec<VertexId>, n: usize) -> Result<Self, GeometryError> {
        ids.sort_unstable();
        if let Some(&bad) = ids.iter().find(|&&i| i >= n) {
            return Err(GeometryError::IndexOutOfRange { index: bad, n });
        }
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(GeometryError::RepeatedIndex);
        }
        Ok(Self(ids))
    }

    pub(crate) fn from_unsorted(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        Self(ids)
    }

    pub fn triangle(a: VertexId, b: VertexId, c: VertexId) -> Self {
        Self::from_unsorted(vec![a, b, c])
    }

    pub fn indices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Doubled area of the tuple as a polygon; non-negative because the ids
    /// follow the counter-clockwise storage order.
    pub fn area(&self, poly: &ConvexPolygon) -> DoubledArea {
        poly.tuple_area(&self.0)
    }

    pub fn points(&self, poly: &ConvexPolygon) -> Vec<Point> {
        self.0.iter().map(|&i| poly.vertex(i)).collect()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Half-plane class of a direction: 0 for angles in [0, pi), 1 for [pi, 2pi).
fn half(dx: i64, dy: i64) -> u8 {
    if dy > 0 || (dy == 0 && dx > 0) {
        0
    } else {
        1
    }
}

/// Checks a vertex list and returns it as a counter-clockwise polygon.
///
/// Clockwise input is reversed. Error indices always refer to positions in
/// `points` as given.
pub fn validate_convex_polygon(
    points: &[Point],
    declared: Winding,
) -> Result<ConvexPolygon, GeometryError> {
    let n = points.len();
    if n < 3 {
        return Err(GeometryError::TooFew { n });
    }
    if let Some(index) = points.iter().position(|p| !p.in_bounds()) {
        let p = points[index];
        return Err(GeometryError::CoordinateOverflow { index, x: p.x, y: p.y });
    }
    let mut seen: HashMap<Point, usize> = HashMap::with_capacity(n);
    for (i, p) in points.iter().enumerate() {
        if let Some(&first) = seen.get(p) {
            return Err(GeometryError::Duplicate { first, second: i });
        }
        seen.insert(*p, i);
    }

    let ccw: Vec<Point> = match declared {
        Winding::CounterClockwise => points.to_vec(),
        Winding::Clockwise => points.iter().rev().copied().collect(),
    };
    let original = |i: usize| match declared {
        Winding::CounterClockwise => i,
        Winding::Clockwise => n - 1 - i,
    };

    // Every turn must be strictly left, and the edge directions must wind
    // exactly once (a pentagram turns left everywhere but winds twice).
    let mut windings = 0usize;
    for i in 0..n {
        let p = ccw[i];
        let q = ccw[(i + 1) % n];
        let r = ccw[(i + 2) % n];
        match orientation(p, q, r) {
            Orientation::CounterClockwise => {}
            Orientation::Collinear => {
                return Err(GeometryError::Collinear { index: original((i + 1) % n) })
            }
            Orientation::Clockwise => {
                return Err(GeometryError::NotConvex { index: original((i + 1) % n) })
            }
        }
        if half(q.x - p.x, q.y - p.y) == 1 && half(r.x - q.x, r.y - q.y) == 0 {
            windings += 1;
        }
    }
    if windings != 1 {
        return Err(GeometryError::NotConvex { index: original(0) });
    }
    Ok(ConvexPolygon { vertices: ccw })
}

/// Recovers the counter-clockwise cycle of a set of points in convex
/// position, starting from the lexicographically smallest point.
pub fn canonical_cyclic_order(points: &[Point]) -> Result<ConvexPolygon, GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::TooFew { n: points.len() });
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        let first = points.iter().position(|p| *p == w[0]).unwrap_or(0);
        let second = points.iter().rposition(|p| *p == w[0]).unwrap_or(0);
        return Err(GeometryError::Duplicate { first, second });
    }
    if let Some(index) = points.iter().position(|p| !p.in_bounds()) {
        let p = points[index];
        return Err(GeometryError::CoordinateOverflow { index, x: p.x, y: p.y });
    }

    // Andrew's monotone chain, dropping collinear points.
    let mut hull: Vec<Point> = Vec::with_capacity(sorted.len() + 1);
    for &p in &sorted {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in sorted.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();

    if hull.len() < 3 {
        return Err(GeometryError::Collinear { index: 0 });
    }
    if hull.len() != sorted.len() {
        let poly = ConvexPolygon::from_trusted(hull.clone());
        for (index, p) in points.iter().enumerate() {
            if hull.contains(p) {
                continue;
            }
            return Err(if strictly_inside(&poly, *p) {
                GeometryError::PointNotOnHull { x: p.x, y: p.y }
            } else {
                GeometryError::Collinear { index }
            });
        }
    }
    Ok(ConvexPolygon::from_trusted(hull))
}

fn strictly_inside(poly: &ConvexPolygon, p: Point) -> bool {
    let n = poly.len();
    (0..n).all(|i| cross(poly.vertex(i), poly.vertex((i + 1) % n), p) > 0)
}
