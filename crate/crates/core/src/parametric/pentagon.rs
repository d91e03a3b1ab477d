//! Pentagon coordinates `(a, b, c, d)`.
//!
//! With `O` the intersection of the diagonals `AD` and `CE`, `v₁ = OA`,
//! `v₂ = OC` and `v₁ ∧ v₂ = 1`: `D = O − a·v₁`, `E = O − b·v₂` and
//! `B = O + c·v₁ + d·v₂`. The pentagon then has area `a + b + c + d + ab`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Tolerance};
use crate::kasner::KasnerParams;

use super::{affine_coords, line_intersection, FRAME_V1, FRAME_V2};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PentagonParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl PentagonParams {
    /// Checks positivity and that every ear comes out positive.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let p = PentagonParams { a, b, c, d };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let PentagonParams { a, b, c, d } = *self;
        if !([a, b, c, d].iter().all(|v| *v > 0.0 && v.is_finite())) {
            return Err(Error::InvalidParameter(format!(
                "pentagon parameters must be positive and finite: {self:?}"
            )));
        }
        if let Some((name, e)) = ["ABC", "BCD", "CDE", "DEA", "EAB"]
            .iter()
            .zip(self.ear_areas())
            .find(|(_, e)| *e <= 0.0)
        {
            return Err(Error::Convexity(format!(
                "ear {name} has area {e} for {self:?}"
            )));
        }
        Ok(())
    }

    /// `Δ(K) = a + b + c + d + ab`.
    pub fn area(&self) -> f64 {
        let PentagonParams { a, b, c, d } = *self;
        a + b + c + d + a * b
    }

    /// Ears `ABC, BCD, CDE, DEA, EAB`.
    pub fn ear_areas(&self) -> [f64; 5] {
        let PentagonParams { a, b, c, d } = *self;
        [
            c + d - 1.0,
            a - a * d + c,
            a * b + a,
            a * b + b,
            b - b * c + d,
        ]
    }

    /// `(1 + ad + bc) / (a + b + c + d + ab)`.
    pub fn fraction(&self) -> f64 {
        let PentagonParams { a, b, c, d } = *self;
        (1.0 + a * d + b * c) / self.area()
    }

    /// Recovers the parameters of a convex pentagon labelled as given.
    ///
    /// The result is the coordinatization of the affine image of `k`; it is
    /// feasible whenever `k` is convex.
    pub fn from_pentagon(k: &ConvexPolygon) -> Result<Self> {
        if k.len() != 5 {
            return Err(Error::WrongArity {
                expected: 5,
                actual: k.len(),
            });
        }
        let [pa, pb, pc, pd, pe] = [0, 1, 2, 3, 4].map(|i| k.vertex(i));
        let o = line_intersection(pa, pd, pc, pe)
            .ok_or_else(|| Error::Degenerate("diagonals AD and CE are parallel".into()))?;
        let (v1, v2) = (pa - o, pc - o);
        let (da, _) = affine_coords(pd - o, v1, v2)?;
        let (_, eb) = affine_coords(pe - o, v1, v2)?;
        let (c, d) = affine_coords(pb - o, v1, v2)?;
        PentagonParams::new(-da, -eb, c, d)
    }

    /// Rotates the labels of `k` so that `ABC` is an ear of least area, then
    /// extracts the parameters. Returns the parameters and the rotation used.
    pub fn from_pentagon_min_ear(k: &ConvexPolygon) -> Result<(Self, usize)> {
        let ears = k.ear_areas();
        let shift = ears
            .iter()
            .enumerate()
            .min_by(|x, y| x.1.total_cmp(y.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        Ok((Self::from_pentagon(&k.rotated(shift))?, shift))
    }
}

/// Builds the pentagon `ABCDE` in the frame `O = 0`, `v₁ = (1, 0)`,
/// `v₂ = (0, 2)`.
pub fn build_pentagon(p: &PentagonParams) -> Result<ConvexPolygon> {
    p.validate()?;
    let PentagonParams { a, b, c, d } = *p;
    let pts = vec![
        FRAME_V1,
        c * FRAME_V1 + d * FRAME_V2,
        FRAME_V2,
        -a * FRAME_V1,
        -b * FRAME_V2,
    ];
    ConvexPolygon::new(pts, &Tolerance::default())
}

/// `1 − 2r + r·(1 + ad + bc)/(a + b + c + d + ab)`.
pub fn pentagon_ratio_closed(p: &PentagonParams, k: KasnerParams) -> Result<f64> {
    p.validate()?;
    let r = k.r();
    Ok(1.0 - 2.0 * r + r * p.fraction())
}

/// `(n, n, 1, 1)`: the ratio tends to `1 − 2r` as `n → ∞`.
pub fn pentagon_lower_family(n: f64) -> Result<PentagonParams> {
    if !(n >= 1.0 && n.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "family parameter must be >= 1, got {n}"
        )));
    }
    PentagonParams::new(n, n, 1.0, 1.0)
}

/// `(n, 1/n, 1, 1)`: the ratio tends to `1 − r` as `n → ∞`.
pub fn pentagon_upper_family(n: f64) -> Result<PentagonParams> {
    if !(n >= 1.0 && n.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "family parameter must be >= 1, got {n}"
        )));
    }
    PentagonParams::new(n, 1.0 / n, 1.0, 1.0)
}
