//! Canonical coordinates for pentagons and hexagons, the extremal families
//! built from them, and the n-gon constructions approaching the bounds.
//!
//! Both coordinatizations live in the frame `v₁ = (1, 0)`, `v₂ = (0, 2)`,
//! which has `v₁ ∧ v₂ = 1`. Any other unit-wedge frame is an affine image of
//! this one and gives the same area ratios.

mod hexagon;
mod ngon;
mod pentagon;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{wedge, Vec2};

pub use hexagon::{
    build_hexagon, hexagon_lower_family, hexagon_ratio_closed, hexagon_upper_family,
    HexagonAggregates, HexagonParams,
};
pub use ngon::{
    append_vertex, ngon_lower_construction, ngon_upper_construction, Insertion, LowerConstruction,
    UpperConstruction, CONSTRUCTION_ABS_EPS,
};
pub use pentagon::{
    build_pentagon, pentagon_lower_family, pentagon_ratio_closed, pentagon_upper_family,
    PentagonParams,
};

pub(crate) const FRAME_V1: Vec2 = Vec2::new(1.0, 0.0);
pub(crate) const FRAME_V2: Vec2 = Vec2::new(0.0, 2.0);

/// Parameter file contents: `{"pentagon": {...}}` or `{"hexagon": {...}}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamFile {
    Pentagon(PentagonParams),
    Hexagon(HexagonParams),
}

impl ParamFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: ParamFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("parameter file: {e}")))?;
        match &parsed {
            ParamFile::Pentagon(p) => p.validate()?,
            ParamFile::Hexagon(h) => h.validate()?,
        }
        Ok(parsed)
    }

    pub fn build(&self) -> Result<crate::geom::ConvexPolygon> {
        match self {
            ParamFile::Pentagon(p) => build_pentagon(p),
            ParamFile::Hexagon(h) => build_hexagon(h),
        }
    }

    /// Closed-form area ratio for these parameters.
    pub fn closed_ratio(&self, k: crate::kasner::KasnerParams) -> Result<f64> {
        match self {
            ParamFile::Pentagon(p) => pentagon_ratio_closed(p, k),
            ParamFile::Hexagon(h) => hexagon_ratio_closed(h, k),
        }
    }
}

/// Intersection of line `p0 p1` with line `q0 q1`; `None` when parallel.
pub(crate) fn line_intersection(p0: Vec2, p1: Vec2, q0: Vec2, q1: Vec2) -> Option<Vec2> {
    let dp = p1 - p0;
    let dq = q1 - q0;
    let denom = wedge(dp, dq);
    if denom == 0.0 || !denom.is_finite() {
        return None;
    }
    let s = wedge(q0 - p0, dq) / denom;
    Some(p0 + s * dp)
}

/// Coordinates `(α, β)` with `w = α·v₁ + β·v₂`.
pub(crate) fn affine_coords(w: Vec2, v1: Vec2, v2: Vec2) -> Result<(f64, f64)> {
    let det = wedge(v1, v2);
    if det == 0.0 {
        return Err(Error::Degenerate("frame vectors are parallel".into()));
    }
    Ok((wedge(w, v2) / det, wedge(v1, w) / det))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_has_unit_wedge() {
        assert_eq!(wedge(FRAME_V1, FRAME_V2), 1.0);
    }

    #[test]
    fn param_file_parsing() {
        let p = ParamFile::from_json(r#"{"pentagon": {"a": 1, "b": 1, "c": 1, "d": 1}}"#).unwrap();
        assert_eq!(p.build().unwrap().area(), 5.0);
        let h = ParamFile::from_json(
            r#"{"hexagon": {"a": 1, "b": 1, "c": 1, "d": 1, "e": 1, "f": 1}}"#,
        )
        .unwrap();
        assert!((h.build().unwrap().area() - 13.0).abs() < 1e-12);
        assert!(
            ParamFile::from_json(r#"{"pentagon": {"a": 1, "b": 1, "c": 0.1, "d": 0.1}}"#).is_err()
        );
        assert!(ParamFile::from_json(r#"{"heptagon": {}}"#).is_err());
    }

    #[test]
    fn helpers() {
        let x = line_intersection(
            Vec2::new(-1.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(0.5, -1.0),
            Vec2::new(0.5, 1.0),
        )
        .unwrap();
        assert_eq!(x, Vec2::new(0.5, 0.0));
        assert!(line_intersection(
            Vec2::ZERO,
            Vec2::new(1.0, 0.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(1.0, 1.0)
        )
        .is_none());
        let (a, b) = affine_coords(Vec2::new(3.0, 4.0), FRAME_V1, FRAME_V2).unwrap();
        assert_eq!((a, b), (3.0, 2.0));
    }
}
