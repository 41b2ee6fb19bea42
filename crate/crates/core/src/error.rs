use thiserror::Error;

/// Rejections raised while building or measuring polygons.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("need at least 3 points, got {n}")]
    TooFew { n: usize },
    #[error("point {index} = ({x}, {y}) exceeds the coordinate bound")]
    CoordinateOverflow { index: usize, x: i64, y: i64 },
    #[error("point {second} repeats point {first}")]
    Duplicate { first: usize, second: usize },
    #[error("point {index} is collinear with its neighbours")]
    Collinear { index: usize },
    #[error("polygon is not strictly convex in the declared orientation at point {index}")]
    NotConvex { index: usize },
    #[error("point ({x}, {y}) lies strictly inside the hull")]
    PointNotOnHull { x: i64, y: i64 },
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("vertex indices must be distinct")]
    RepeatedIndex,
    #[error("doubled area does not fit in 64 bits")]
    AreaOverflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("gave up after {attempts} attempts: {reason}")]
    ResourceExhausted { attempts: u32, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
