//! A uniform handle on every solver so the fuzzer, the benchmark and the
//! CLI can pick one by name.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::geometry::{ConvexPolygon, DoubledArea, IndexTuple, VertexId};
use crate::oracle::brute_force_max_kgon_with_area;
use crate::quad::ds_quadrilateral;
use crate::triangle::{dnc_triangle_with_stats, ds_triangle, quadratic_triangle_with_area, RunTrace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Ds,
    Quadratic,
    Dnc,
    Oracle,
    DsQuad,
    OracleQuad,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Ds,
        Algorithm::Quadratic,
        Algorithm::Dnc,
        Algorithm::Oracle,
        Algorithm::DsQuad,
        Algorithm::OracleQuad,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Ds => "ds",
            Algorithm::Quadratic => "quadratic",
            Algorithm::Dnc => "dnc",
            Algorithm::Oracle => "oracle",
            Algorithm::DsQuad => "ds-quad",
            Algorithm::OracleQuad => "oracle-quad",
        }
    }

    /// Number of vertices in the polygon the algorithm returns.
    pub fn k(self) -> usize {
        match self {
            Algorithm::DsQuad | Algorithm::OracleQuad => 4,
            _ => 3,
        }
    }

    /// Whether the algorithm is supposed to be optimal. Failures of the two
    /// original pointer walks are expected.
    pub fn is_exact(self) -> bool {
        !matches!(self, Algorithm::Ds | Algorithm::DsQuad)
    }

    /// Whether the algorithm takes a starting vertex.
    pub fn is_rooted(self) -> bool {
        matches!(self, Algorithm::Ds | Algorithm::DsQuad)
    }

    pub fn oracle_for(k: usize) -> Result<Algorithm> {
        match k {
            3 => Ok(Algorithm::Oracle),
            4 => Ok(Algorithm::OracleQuad),
            _ => Err(invalid(format!("k must be 3 or 4, got {k}"))),
        }
    }

    /// Runs the algorithm. `root` is used by the pointer walks only.
    pub fn run(self, poly: &ConvexPolygon, root: VertexId) -> Result<Solution> {
        let (tuple, trace) = match self {
            Algorithm::Ds => {
                let (t, trace) = ds_triangle(poly, root)?;
                (t, Some(trace))
            }
            Algorithm::DsQuad => {
                let (t, trace) = ds_quadrilateral(poly, root)?;
                (t, Some(trace))
            }
            Algorithm::Quadratic => (quadratic_triangle_with_area(poly).0, None),
            Algorithm::Dnc => (dnc_triangle_with_stats(poly).0, None),
            Algorithm::Oracle => (brute_force_max_kgon_with_area(poly, 3)?.0, None),
            Algorithm::OracleQuad => (brute_force_max_kgon_with_area(poly, 4)?.0, None),
        };
        let area = tuple.area(poly);
        Ok(Solution { tuple, area, trace })
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| invalid(format!("unknown algorithm {s:?}")))
    }
}

/// What an algorithm returned, with its exact doubled area.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub tuple: IndexTuple,
    pub area: DoubledArea,
    pub trace: Option<RunTrace>,
}
