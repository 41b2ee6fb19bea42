use serde::Serialize;
use sha2::{Digest, Sha256};

use super::format::write_polygon_file;
use crate::algorithm::{Algorithm, Solution};
use crate::geometry::{ConvexPolygon, DoubledArea, IndexTuple, Point};
use crate::triangle::RunTrace;

/// SHA-256 (hex) of the polygon's canonical text form, without labels.
pub fn input_digest(poly: &ConvexPolygon) -> String {
    hex::encode(Sha256::digest(write_polygon_file(poly, &[]).as_bytes()))
}

/// One solver run, as emitted by `solve`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub algorithm: Algorithm,
    pub input_digest: String,
    pub indices: IndexTuple,
    pub points: Vec<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub doubled_area: DoubledArea,
    pub wall_time_ns: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<RunTrace>,
}

impl ResultRecord {
    /// `labels` are the input's vertex names; they are attached only when
    /// every result vertex has one.
    pub fn new(
        algorithm: Algorithm,
        poly: &ConvexPolygon,
        labels: &[Option<String>],
        solution: Solution,
        wall_time_ns: u64,
        keep_trace: bool,
    ) -> Self {
        let labels = solution
            .tuple
            .indices()
            .iter()
            .map(|&i| labels.get(i).cloned().flatten())
            .collect::<Option<Vec<String>>>();
        ResultRecord {
            algorithm,
            input_digest: input_digest(poly),
            points: solution.tuple.points(poly),
            indices: solution.tuple,
            labels,
            doubled_area: solution.area,
            wall_time_ns,
            trace: if keep_trace { solution.trace } else { None },
        }
    }

    /// Recomputes the area from the indices and checks digest and area.
    pub fn verify(&self, poly: &ConvexPolygon) -> bool {
        self.input_digest == input_digest(poly)
            && self.indices.indices().iter().all(|&i| i < poly.len())
            && self.indices.area(poly) == self.doubled_area
    }
}
