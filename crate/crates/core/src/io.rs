//! Text formats for polygons and reports.
//!
//! Polygons are read and written as JSON `{"vertices": [[x, y], ...]}` or as
//! CSV with one `x,y` row per vertex. Every float is written with 17
//! significant digits, so write → read → write is byte-stable.

use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::error::{Error, Result};
use crate::geom::{Polygon, Tolerance, Vec2};

/// Formats `value` with 17 significant digits in scientific notation.
pub fn fmt_f64(value: f64) -> String {
    if value == 0.0 {
        // keep the sign of negative zero out of the output
        return format!("{:.16e}", 0.0);
    }
    format!("{value:.16e}")
}

/// Compact JSON formatter that prints floats via [`fmt_f64`].
#[derive(Debug, Default, Clone, Copy)]
pub struct FixedPrecision;

impl Formatter for FixedPrecision {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Serializes any value as compact JSON with fixed-precision floats.
pub fn to_json_string<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedPrecision);
    value
        .serialize(&mut ser)
        .expect("serializing to memory cannot fail");
    String::from_utf8(out).expect("JSON output is UTF-8")
}

/// Wire form of a polygon.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[f64; 2]>,
}

impl From<&Polygon> for PolygonJson {
    fn from(p: &Polygon) -> Self {
        PolygonJson {
            vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
        }
    }
}

impl PolygonJson {
    pub fn points(&self) -> Vec<Vec2> {
        self.vertices.iter().map(|&p| p.into()).collect()
    }

    pub fn into_polygon(self, tol: &Tolerance) -> Result<Polygon> {
        Polygon::with_tolerance(self.points(), tol)
    }
}

pub fn polygon_to_json(p: &Polygon) -> String {
    to_json_string(&PolygonJson::from(p))
}

/// Parses polygon JSON into raw points (orientation untouched).
pub fn points_from_json(text: &str) -> Result<Vec<Vec2>> {
    let parsed: PolygonJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("polygon JSON: {e}")))?;
    Ok(parsed.points())
}

pub fn polygon_to_csv(p: &Polygon) -> String {
    let mut out = String::new();
    for v in p.vertices() {
        out.push_str(&fmt_f64(v.x));
        out.push(',');
        out.push_str(&fmt_f64(v.y));
        out.push('\n');
    }
    out
}

/// Parses `x,y` rows. Blank lines and an optional `x,y` header are skipped.
pub fn points_from_csv(text: &str) -> Result<Vec<Vec2>> {
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (lineno == 0 && line.eq_ignore_ascii_case("x,y")) {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let [x, y] = fields.as_slice() else {
            return Err(Error::Parse(format!(
                "CSV line {}: expected 2 fields, got {}",
                lineno + 1,
                fields.len()
            )));
        };
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| Error::Parse(format!("CSV line {}: {e}: {s:?}", lineno + 1)))
        };
        points.push(Vec2::try_new(parse(x)?, parse(y)?)?);
    }
    Ok(points)
}

/// JSON-lines output: one polygon object per line.
pub fn polygons_to_jsonl<'a>(polys: impl IntoIterator<Item = &'a Polygon>) -> String {
    let mut out = String::new();
    for p in polys {
        out.push_str(&polygon_to_json(p));
        out.push('\n');
    }
    out
}

/// A descent sequence: the polygons and a parallel array of their areas.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceJson {
    pub polygons: Vec<PolygonJson>,
    pub areas: Vec<f64>,
}

impl SequenceJson {
    pub fn from_polygons<'a>(polys: impl IntoIterator<Item = &'a Polygon>) -> Self {
        let (polygons, areas) = polys
            .into_iter()
            .map(|p| (PolygonJson::from(p), p.area()))
            .unzip();
        SequenceJson { polygons, areas }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::new(vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn json_shape() {
        let text = polygon_to_json(&square());
        assert!(text.starts_with("{\"vertices\":[["));
        assert!(text.contains("1.0000000000000000e0"));
        let back = points_from_json(&text).unwrap();
        assert_eq!(back, square().vertices());
    }

    #[test]
    fn csv_parse_with_header_and_blank_lines() {
        let pts = points_from_csv("x,y\n0,0\n\n1, 0\n0,1\n").unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[1], Vec2::new(1.0, 0.0));
        assert!(matches!(points_from_csv("0,0,0\n"), Err(Error::Parse(_))));
        assert!(matches!(points_from_csv("a,b\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn negative_zero_prints_as_zero() {
        assert_eq!(fmt_f64(-0.0), fmt_f64(0.0));
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(
            points_from_json("{\"verts\": []}"),
            Err(Error::Parse(_))
        ));
    }
}
