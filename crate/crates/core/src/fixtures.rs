//! The two bundled counter-example polygons and the checks that confirm the
//! original pointer walks fail on them.

use serde::Serialize;

use crate::geometry::IndexTuple;
use crate::io::{parse_polygon_document, ParseError, PolygonDocument};
use crate::oracle::brute_force_max_kgon_with_area;
use crate::quad::ds_quadrilateral;
use crate::stability::is_k_stable;
use crate::triangle::ds_triangle;

pub const TRIANGLE9: &str = include_str!("../fixtures/triangle9.poly");
pub const QUAD16: &str = include_str!("../fixtures/quad16.poly");

/// Text of a bundled fixture by its CLI name.
pub fn by_name(name: &str) -> Option<&'static str> {
    match name {
        "fixture9" => Some(TRIANGLE9),
        "fixture16" => Some(QUAD16),
        _ => None,
    }
}

pub fn triangle9() -> Result<PolygonDocument, ParseError> {
    parse_polygon_document(TRIANGLE9.as_bytes())
}

pub fn quad16() -> Result<PolygonDocument, ParseError> {
    parse_polygon_document(QUAD16.as_bytes())
}

/// The tuple formed by the named vertices, if every name exists.
pub fn named_tuple(doc: &PolygonDocument, names: &[&str]) -> Option<IndexTuple> {
    let ids = names.iter().map(|n| doc.index_of(n)).collect::<Option<Vec<_>>>()?;
    IndexTuple::new(ids, doc.polygon.len()).ok()
}

fn names(doc: &PolygonDocument, t: &IndexTuple) -> String {
    let parts: Vec<String> = t
        .indices()
        .iter()
        .map(|&i| doc.label(i).map_or_else(|| i.to_string(), str::to_string))
        .collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name, passed, detail: detail.into() }
    }
}

/// Runs every claim about both fixtures.
pub fn verify() -> Vec<Check> {
    let mut checks = Vec::new();
    verify_triangle9(&mut checks);
    verify_quad16(&mut checks);
    checks
}

fn verify_triangle9(checks: &mut Vec<Check>) {
    let doc = match triangle9() {
        Ok(d) => d,
        Err(e) => {
            checks.push(Check::new("triangle9: parses as a strictly convex polygon", false, e.to_string()));
            return;
        }
    };
    checks.push(Check::new("triangle9: parses as a strictly convex polygon", true, "9 vertices"));
    let p = &doc.polygon;
    let want_opt = named_tuple(&doc, &["a0", "b0", "c0"]).expect("fixture labels");
    let want_ds = named_tuple(&doc, &["c0", "c1", "c2"]).expect("fixture labels");

    let (opt, opt_area) = brute_force_max_kgon_with_area(p, 3).expect("n >= 3");
    checks.push(Check::new(
        "triangle9: oracle optimum is {a0,b0,c0}",
        opt == want_opt,
        format!("oracle {} with doubled area {opt_area}", names(&doc, &opt)),
    ));

    let mut wrong = Vec::new();
    let mut ds_area = None;
    let mut trace_ok = true;
    for root in 0..p.len() {
        let (t, trace) = ds_triangle(p, root).expect("root in range");
        if t != want_ds {
            wrong.push(format!("root {root} gave {}", names(&doc, &t)));
        }
        ds_area = Some(t.area(p));
        let last = trace.final_checkpoint().map(|c| c.area);
        trace_ok &= trace.is_monotone() && last.is_some_and(|a| a < opt_area);
    }
    checks.push(Check::new(
        "triangle9: original walk reports {c0,c1,c2} from every root",
        wrong.is_empty(),
        if wrong.is_empty() { "9 of 9 roots".to_string() } else { wrong.join("; ") },
    ));
    let ds_area = ds_area.unwrap_or_default();
    checks.push(Check::new(
        "triangle9: optimum strictly larger than the walk's result",
        opt_area > ds_area,
        format!("{opt_area} vs {ds_area}, deficit {}", opt_area.value() - ds_area.value()),
    ));
    checks.push(Check::new(
        "triangle9: walk checkpoints rise monotonically yet stop below the optimum",
        trace_ok,
        "checked from every root",
    ));
}

fn verify_quad16(checks: &mut Vec<Check>) {
    let doc = match quad16() {
        Ok(d) => d,
        Err(e) => {
            checks.push(Check::new("quad16: parses as a strictly convex polygon", false, e.to_string()));
            return;
        }
    };
    checks.push(Check::new("quad16: parses as a strictly convex polygon", true, "16 vertices"));
    let p = &doc.polygon;
    let want_opt = named_tuple(&doc, &["a4", "a8", "a12", "a16"]).expect("fixture labels");
    let want_ds = named_tuple(&doc, &["a1", "a4", "a8", "a12"]).expect("fixture labels");

    let (opt, opt_area) = brute_force_max_kgon_with_area(p, 4).expect("n >= 4");
    checks.push(Check::new(
        "quad16: oracle optimum is {a4,a8,a12,a16}",
        opt == want_opt,
        format!("oracle {} with doubled area {opt_area}", names(&doc, &opt)),
    ));

    let mut wrong = Vec::new();
    for root in 0..p.len() {
        let (q, _) = ds_quadrilateral(p, root).expect("n >= 4");
        if q != want_ds {
            wrong.push(format!("root {root} gave {}", names(&doc, &q)));
        }
    }
    checks.push(Check::new(
        "quad16: original walk reports {a1,a4,a8,a12} from every root",
        wrong.is_empty(),
        if wrong.is_empty() { "16 of 16 roots".to_string() } else { wrong.join("; ") },
    ));
    let ds_area = want_ds.area(p);
    checks.push(Check::new(
        "quad16: optimum strictly larger than the walk's result",
        opt_area > ds_area,
        format!("{opt_area} vs {ds_area}, deficit {}", opt_area.value() - ds_area.value()),
    ));
    let stable = is_k_stable(p, &want_ds).expect("k = 4");
    checks.push(Check::new(
        "quad16: the walk's result is not 4-stable",
        !stable,
        format!("is_k_stable = {stable}"),
    ));
}
