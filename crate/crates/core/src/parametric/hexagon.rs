//! Hexagon coordinates `(a, …, f)` relative to the triangle cut out by the
//! three long diagonals.
//!
//! `M = AD ∩ BE`, `N = AD ∩ CF`, `P = CF ∩ BE`, `v₁ = MN`, `v₂ = MP`,
//! `v₃ = v₂ − v₁`, scaled so that `Δ(MNP) = 1`. Then `A = M − a·v₁`,
//! `B = M − b·v₂`, `C = N − c·v₃`, `D = N + d·v₁`, `E = P + e·v₂`,
//! `F = P + f·v₃`, and `Δ(K) = 1 + S + T`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Tolerance};
use crate::kasner::KasnerParams;

use super::{affine_coords, line_intersection, FRAME_V1, FRAME_V2};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HexagonParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

/// `S = Σ a`, `T = Σ ab` (adjacent), `U = Σ ac` (one apart).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HexagonAggregates {
    pub s: f64,
    pub t: f64,
    pub u: f64,
}

/// Relabelings of the diagonal triangle that map the coordinatization onto
/// itself: new parameter `i` is old parameter `SYMMETRIES[k][i]`.
const SYMMETRIES: [[usize; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [2, 3, 4, 5, 0, 1],
    [4, 5, 0, 1, 2, 3],
    [1, 0, 5, 4, 3, 2],
    [5, 4, 3, 2, 1, 0],
    [3, 2, 1, 0, 5, 4],
];

impl HexagonParams {
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Result<Self> {
        let p = HexagonParams { a, b, c, d, e, f };
        p.validate()?;
        Ok(p)
    }

    pub fn from_array([a, b, c, d, e, f]: [f64; 6]) -> Result<Self> {
        Self::new(a, b, c, d, e, f)
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// All six equal to `t`.
    pub fn uniform(t: f64) -> Result<Self> {
        Self::new(t, t, t, t, t, t)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.to_array().iter().all(|v| *v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "hexagon parameters must be positive and finite: {self:?}"
            )));
        }
        if let Some((name, e)) = ["ABC", "BCD", "CDE", "DEF", "EFA", "FAB"]
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

    pub fn aggregates(&self) -> HexagonAggregates {
        let [a, b, c, d, e, f] = self.to_array();
        HexagonAggregates {
            s: a + b + c + d + e + f,
            t: a * b + b * c + c * d + d * e + e * f + f * a,
            u: a * c + b * d + c * e + d * f + e * a + f * b,
        }
    }

    /// `Δ(K) = 1 + S + T`.
    pub fn area(&self) -> f64 {
        let g = self.aggregates();
        1.0 + g.s + g.t
    }

    /// Ears `ABC, BCD, CDE, DEF, EFA, FAB`; the first is `b(1 + a + c) − ac`
    /// and the rest follow by cyclic shift.
    pub fn ear_areas(&self) -> [f64; 6] {
        let p = self.to_array();
        std::array::from_fn(|i| {
            let (prev, mid, next) = (p[i], p[(i + 1) % 6], p[(i + 2) % 6]);
            mid * (1.0 + prev + next) - prev * next
        })
    }

    /// `(2 + S + U) / (1 + S + T)`.
    pub fn fraction(&self) -> f64 {
        let g = self.aggregates();
        (2.0 + g.s + g.u) / (1.0 + g.s + g.t)
    }

    /// An equivalent labelling with `a = min{a, …, f}`.
    pub fn min_first(&self) -> HexagonParams {
        let p = self.to_array();
        let argmin = (0..6)
            .min_by(|&i, &j| p[i].total_cmp(&p[j]))
            .expect("six entries");
        let sigma = SYMMETRIES
            .iter()
            .find(|s| s[0] == argmin)
            .expect("every index is reachable");
        let q: [f64; 6] = std::array::from_fn(|i| p[sigma[i]]);
        HexagonParams {
            a: q[0],
            b: q[1],
            c: q[2],
            d: q[3],
            e: q[4],
            f: q[5],
        }
    }

    /// Recovers the parameters of a convex hexagon from its diagonal
    /// triangle. Labels are rotated by one when the triangle `MNP` comes out
    /// clockwise; the rotation used is returned alongside.
    pub fn from_hexagon(k: &ConvexPolygon) -> Result<(Self, usize)> {
        if k.len() != 6 {
            return Err(Error::WrongArity {
                expected: 6,
                actual: k.len(),
            });
        }
        for shift in 0..2 {
            let h = k.rotated(shift);
            let [pa, pb, pc, pd, pe, pf] = [0, 1, 2, 3, 4, 5].map(|i| h.vertex(i));
            let concurrent = || Error::Degenerate("long diagonals are parallel".into());
            let m = line_intersection(pa, pd, pb, pe).ok_or_else(concurrent)?;
            let n = line_intersection(pa, pd, pc, pf).ok_or_else(concurrent)?;
            let p = line_intersection(pc, pf, pb, pe).ok_or_else(concurrent)?;
            let (v1, v2) = (n - m, p - m);
            if crate::geom::wedge(v1, v2) <= 0.0 {
                continue;
            }
            let a = -affine_coords(pa - m, v1, v2)?.0;
            let b = -affine_coords(pb - m, v1, v2)?.1;
            let c = -affine_coords(pc - n, v1, v2)?.1;
            let d = affine_coords(pd - n, v1, v2)?.0;
            let e = affine_coords(pe - p, v1, v2)?.1;
            let f = affine_coords(pf - p, v1, v2)?.1;
            return Ok((HexagonParams::new(a, b, c, d, e, f)?, shift));
        }
        Err(Error::Degenerate(
            "long diagonals are concurrent; perturb a vertex".into(),
        ))
    }
}

/// Builds `ABCDEF` in the frame `M = 0`, `v₁ = (1, 0)`, `v₂ = (0, 2)`.
pub fn build_hexagon(p: &HexagonParams) -> Result<ConvexPolygon> {
    p.validate()?;
    let (v1, v2) = (FRAME_V1, FRAME_V2);
    let v3 = v2 - v1;
    let (m, n, q) = (crate::geom::Vec2::ZERO, v1, v2);
    let pts = vec![
        m - p.a * v1,
        m - p.b * v2,
        n - p.c * v3,
        n + p.d * v1,
        q + p.e * v2,
        q + p.f * v3,
    ];
    ConvexPolygon::new(pts, &Tolerance::default())
}

/// `(1 − 2r) + r·(2 + S + U)/(1 + S + T)`.
pub fn hexagon_ratio_closed(p: &HexagonParams, k: KasnerParams) -> Result<f64> {
    p.validate()?;
    let r = k.r();
    Ok(1.0 - 2.0 * r + r * p.fraction())
}

/// `(1, 1, 1, 1, n, n)`: ratio tends to `1 − 2r` as `n → ∞`.
pub fn hexagon_lower_family(n: f64) -> Result<HexagonParams> {
    if !(n >= 1.0 && n.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "family parameter must be >= 1, got {n}"
        )));
    }
    HexagonParams::new(1.0, 1.0, 1.0, 1.0, n, n)
}

/// `(t, …, t)`: ratio tends to 1 as `t → 0`.
pub fn hexagon_upper_family(t: f64) -> Result<HexagonParams> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "family parameter must be > 0, got {t}"
        )));
    }
    HexagonParams::uniform(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kasner::area_ratio;

    fn ones() -> HexagonParams {
        HexagonParams::uniform(1.0).unwrap()
    }

    #[test]
    fn all_ones_hexagon() {
        let k = build_hexagon(&ones()).unwrap();
        assert_eq!(ones().area(), 13.0);
        assert!((k.area() - 13.0).abs() < 1e-13);
        assert_eq!(ones().ear_areas(), [2.0; 6]);
        for e in k.ear_areas() {
            assert!((e - 2.0).abs() < 1e-13);
        }
        assert!((ones().fraction() - 14.0 / 13.0).abs() < 1e-15);
    }

    #[test]
    fn geometric_ears_match_formulas() {
        let p = HexagonParams::new(0.4, 1.3, 0.7, 2.2, 0.9, 0.5).unwrap();
        let k = build_hexagon(&p).unwrap();
        for (geo, formula) in k.ear_areas().iter().zip(p.ear_areas()) {
            assert!((geo - formula).abs() < 1e-13);
        }
        let g = p.aggregates();
        let ear_sum: f64 = p.ear_areas().iter().sum();
        assert!((ear_sum - (g.s + 2.0 * g.t - g.u)).abs() < 1e-13);
    }

    #[test]
    fn lower_family_area_by_shoelace() {
        for n in [1.0, 3.0, 17.5] {
            let k = build_hexagon(&hexagon_lower_family(n).unwrap()).unwrap();
            let pts = k.vertices();
            let shoelace = (0..6)
                .map(|i| pts[i].x * pts[(i + 1) % 6].y - pts[(i + 1) % 6].x * pts[i].y)
                .sum::<f64>()
                / 2.0;
            assert!((shoelace - (n * n + 4.0 * n + 8.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_ratio_matches_construction() {
        for p in [
            ones(),
            HexagonParams::new(0.4, 1.3, 0.7, 2.2, 0.9, 0.5).unwrap(),
            hexagon_lower_family(25.0).unwrap(),
            hexagon_upper_family(0.01).unwrap(),
        ] {
            let k = build_hexagon(&p).unwrap();
            for m in [0.1, 0.5, 0.9] {
                let kp = KasnerParams::new(m).unwrap();
                let direct = area_ratio(&k, kp).unwrap().ratio;
                assert!((direct - hexagon_ratio_closed(&p, kp).unwrap()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn family_fractions() {
        for n in [1.0, 4.0, 100.0] {
            let frac = hexagon_lower_family(n).unwrap().fraction();
            assert!((frac - (6.0 * n + 8.0) / (n * n + 4.0 * n + 8.0)).abs() < 1e-14);
        }
        assert!((hexagon_lower_family(100.0).unwrap().fraction() - 608.0 / 10408.0).abs() < 1e-15);
        for t in [0.01, 0.3, 1.0] {
            let frac = hexagon_upper_family(t).unwrap().fraction();
            let expect = (2.0 + 6.0 * t + 6.0 * t * t) / (1.0 + 6.0 * t + 6.0 * t * t);
            assert!((frac - expect).abs() < 1e-14);
        }
        assert!((hexagon_upper_family(0.01).unwrap().fraction() - 1.942_86).abs() < 1e-5);
    }

    #[test]
    fn upper_family_convex_over_range() {
        let tol = Tolerance::default();
        for t in [1e-4, 1e-3, 0.1, 1.0, 10.0, 100.0] {
            assert!(build_hexagon(&hexagon_upper_family(t).unwrap())
                .unwrap()
                .is_convex_ccw(&tol));
        }
    }

    #[test]
    fn symmetries_preserve_area_and_ratio() {
        let p = HexagonParams::new(0.4, 1.3, 0.7, 2.2, 0.9, 0.5).unwrap();
        let q = p.min_first();
        assert_eq!(q.a, 0.4);
        let arr = p.to_array();
        for sigma in SYMMETRIES {
            let s = HexagonParams::from_array(std::array::from_fn(|i| arr[sigma[i]])).unwrap();
            assert!((s.area() - p.area()).abs() < 1e-13);
            assert!((s.fraction() - p.fraction()).abs() < 1e-14);
        }
        let r = HexagonParams::new(2.0, 1.5, 1.0, 0.3, 0.8, 1.1)
            .unwrap()
            .min_first();
        assert_eq!(r.a, 0.3);
    }

    #[test]
    fn parameters_round_trip_through_geometry() {
        let p = HexagonParams::new(0.4, 1.3, 0.7, 2.2, 0.9, 0.5).unwrap();
        let k = build_hexagon(&p).unwrap();
        let (q, shift) = HexagonParams::from_hexagon(&k).unwrap();
        assert_eq!(shift, 0);
        for (x, y) in p.to_array().iter().zip(q.to_array()) {
            assert!((x - y).abs() < 1e-12, "{p:?} vs {q:?}");
        }
    }

    #[test]
    fn infeasible_rejected() {
        assert!(HexagonParams::new(1.0, 1.0, 1.0, 1.0, 1.0, 0.0).is_err());
        // b(1 + a + c) − ac <= 0
        assert!(matches!(
            HexagonParams::new(5.0, 0.1, 5.0, 1.0, 1.0, 1.0),
            Err(Error::Convexity(_))
        ));
    }
}
