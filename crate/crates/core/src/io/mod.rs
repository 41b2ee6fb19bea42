//! Polygon files, result records and SVG drawings.

mod format;
mod record;
mod svg;

pub use format::{parse_polygon_document, parse_polygon_file, write_polygon_file, ParseError, PolygonDocument};
pub use record::{input_digest, ResultRecord};
pub use svg::{render_svg, SvgOptions};
