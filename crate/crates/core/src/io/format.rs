//! The plain-text polygon format:
//!
//! ```text
//! # label 0 a1
//! n 3 CCW
//! 0 0
//! 1 0
//! 0 1
//! ```
//!
//! Lines starting with `#` are comments and may appear anywhere; a comment of
//! the form `# label <row> <name>` names the point on data row `<row>`
//! (counted from 0). Blank lines are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{validate_convex_polygon, ConvexPolygon, Point, Winding};
use crate::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("missing header line \"n <count> <CW|CCW>\"")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected two integers, got {text:?}")]
    BadPoint { line: usize, text: String },
    #[error("line {line}: malformed label comment {text:?}")]
    BadLabel { line: usize, text: String },
    #[error("header declares {declared} points, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("line {}: {source}", line.map_or_else(|| "?".to_string(), |l| l.to_string()))]
    Invalid {
        line: Option<usize>,
        #[source]
        source: GeometryError,
    },
}

/// A parsed polygon file with optional vertex names, indexed like the
/// canonical counter-clockwise polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonDocument {
    pub polygon: ConvexPolygon,
    pub declared: Winding,
    pub labels: Vec<Option<String>>,
}

impl PolygonDocument {
    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.get(i).and_then(|l| l.as_deref())
    }

    /// Vertex index carrying `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(name))
    }
}

pub fn parse_polygon_file(bytes: &[u8]) -> Result<ConvexPolygon, ParseError> {
    parse_polygon_document(bytes).map(|d| d.polygon)
}

pub fn parse_polygon_document(bytes: &[u8]) -> Result<PolygonDocument, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::NotUtf8)?;
    let mut header: Option<(usize, Winding)> = None;
    let mut points = Vec::new();
    let mut rows = Vec::new();
    let mut row_labels: Vec<(usize, usize, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("label") {
                let row = words.next().and_then(|w| w.parse::<usize>().ok());
                let name = words.next();
                match (row, name, words.next()) {
                    (Some(row), Some(name), None) => row_labels.push((line, row, name.to_string())),
                    _ => {
                        return Err(ParseError::BadLabel { line, text: raw.to_string() });
                    }
                }
            }
            continue;
        }
        let words: Vec<&str> = trimmed.split_whitespace().collect();
        if header.is_none() {
            let bad = || ParseError::BadHeader { line, text: raw.to_string() };
            let [tag, count, winding] = words[..] else {
                return Err(bad());
            };
            if tag != "n" {
                return Err(bad());
            }
            let count: usize = count.parse().map_err(|_| bad())?;
            let winding = match winding {
                "CCW" => Winding::CounterClockwise,
                "CW" => Winding::Clockwise,
                _ => return Err(bad()),
            };
            header = Some((count, winding));
            continue;
        }
        let bad = || ParseError::BadPoint { line, text: raw.to_string() };
        let [x, y] = words[..] else {
            return Err(bad());
        };
        let x: i64 = x.parse().map_err(|_| bad())?;
        let y: i64 = y.parse().map_err(|_| bad())?;
        points.push(Point::new(x, y));
        rows.push(line);
    }

    let (declared_count, winding) = header.ok_or(ParseError::MissingHeader)?;
    if declared_count != points.len() {
        return Err(ParseError::CountMismatch {
            declared: declared_count,
            found: points.len(),
        });
    }
    let polygon = validate_convex_polygon(&points, winding).map_err(|source| {
        let row = match source {
            GeometryError::CoordinateOverflow { index, .. }
            | GeometryError::Collinear { index }
            | GeometryError::NotConvex { index } => Some(index),
            GeometryError::Duplicate { second, .. } => Some(second),
            _ => None,
        };
        ParseError::Invalid { line: row.map(|r| rows[r]), source }
    })?;

    let position: HashMap<Point, usize> =
        polygon.vertices().iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut labels = vec![None; polygon.len()];
    for (line, row, name) in row_labels {
        let Some(p) = points.get(row) else {
            return Err(ParseError::BadLabel { line, text: format!("row {row} does not exist") });
        };
        labels[position[p]] = Some(name);
    }
    Ok(PolygonDocument { polygon, declared: winding, labels })
}

/// Writes `poly` in canonical counter-clockwise form. Labels, if given, are
/// emitted as `# label` comments ahead of the header.
pub fn write_polygon_file(poly: &ConvexPolygon, labels: &[Option<String>]) -> String {
    let mut out = String::new();
    for (i, name) in labels.iter().enumerate() {
        if let Some(name) = name {
            let _ = writeln!(out, "# label {i} {name}");
        }
    }
    let _ = writeln!(out, "n {} CCW", poly.len());
    for p in poly.vertices() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let p = parse_polygon_file(b"n 3 CCW\n0 0\n1 0\n0 1\n").unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn clockwise_is_normalized() {
        let d = parse_polygon_document(b"# label 0 first\nn 3 CW\n0 0\n0 1\n1 0\n").unwrap();
        assert_eq!(d.declared, Winding::Clockwise);
        assert_eq!(d.polygon.vertices(), &[Point::new(1, 0), Point::new(0, 1), Point::new(0, 0)]);
        assert_eq!(d.index_of("first"), Some(2));
    }

    #[test]
    fn count_mismatch() {
        let err = parse_polygon_file(b"n 4 CCW\n0 0\n1 0\n0 1\n").unwrap_err();
        assert_eq!(err, ParseError::CountMismatch { declared: 4, found: 3 });
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(parse_polygon_file(b"").unwrap_err(), ParseError::MissingHeader);
        assert!(matches!(
            parse_polygon_file(b"n 3 ccw\n").unwrap_err(),
            ParseError::BadHeader { line: 1, .. }
        ));
        assert!(matches!(
            parse_polygon_file(b"n 3 CCW\n0 0\n1 x\n0 1\n").unwrap_err(),
            ParseError::BadPoint { line: 3, .. }
        ));
        assert!(matches!(
            parse_polygon_file(b"# label a b\nn 3 CCW\n0 0\n1 0\n0 1\n").unwrap_err(),
            ParseError::BadLabel { line: 1, .. }
        ));
        assert_eq!(parse_polygon_file(b"\xff").unwrap_err(), ParseError::NotUtf8);
    }

    #[test]
    fn geometry_errors_carry_lines() {
        let err = parse_polygon_file(b"n 4 CCW\n# comment\n0 0\n2 0\n4 0\n0 2\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Invalid { line: Some(4), source: GeometryError::Collinear { index: 1 } }
        ));
        let err = parse_polygon_file(b"n 3 CCW\n0 0\n1 0\n0 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: Some(4), .. }));
        let err = parse_polygon_file(b"n 2 CCW\n0 0\n1 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: None, .. }));
    }

    #[test]
    fn write_then_parse() {
        let d = parse_polygon_document(b"# label 1 b\nn 4 CCW\n0 0\n3 0\n3 3\n0 3\n").unwrap();
        let text = write_polygon_file(&d.polygon, &d.labels);
        assert_eq!(text, "# label 1 b\nn 4 CCW\n0 0\n3 0\n3 3\n0 3\n");
        assert_eq!(parse_polygon_document(text.as_bytes()).unwrap(), d);
    }
}
