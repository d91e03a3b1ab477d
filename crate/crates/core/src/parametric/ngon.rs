//! Convex n-gons (n ≥ 6) whose area ratio comes arbitrarily close to either
//! end of the open interval `(1 − 2r, 1)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{wedge, ConvexPolygon, Tolerance, Vec2};

use super::hexagon::{build_hexagon, hexagon_upper_family};

/// Wedge threshold the constructions are validated against.
pub const CONSTRUCTION_ABS_EPS: f64 = 1e-12;

const SAGITTA_RETRIES: usize = 40;

fn construction_tol() -> Tolerance {
    Tolerance::new(CONSTRUCTION_ABS_EPS, 1e-9).expect("positive constants")
}

fn check_args(n: usize, eps: f64) -> Result<()> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!("need n >= 6, got {n}")));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "eps must lie in (0, 1), got {eps}"
        )));
    }
    Ok(())
}

/// Result of [`ngon_lower_construction`].
#[derive(Debug, Clone)]
pub struct LowerConstruction {
    pub polygon: ConvexPolygon,
    /// Sagitta of the arc carrying `A₄ … A_{n−1}`.
    pub sagitta: f64,
    /// Area added back by the arc beyond the chord `A₃A_n`.
    pub added_area: f64,
}

/// Unit-area triangle `M A₁ A₂` with the corner at `M` cut off by a triangle
/// of area `eps²`, the cut replaced by a shallow circular arc carrying the
/// remaining `n − 4` vertices. Its ratio stays below `1 − 2r + eps/2`.
///
/// `M = (0, 0)`, `A₁ = (2, 0)`, `A₂ = (0, 1)`; the cut points sit at the same
/// fraction `eps` of each leg, `A_n = (2·eps, 0)` and `A₃ = (0, eps)`, so both
/// ears at `A₁` and `A₂` have area `1 − eps`.
pub fn ngon_lower_construction(n: usize, eps: f64) -> Result<LowerConstruction> {
    check_args(n, eps)?;
    let a1 = Vec2::new(2.0, 0.0);
    let a2 = Vec2::new(0.0, 1.0);
    let a3 = Vec2::new(0.0, eps);
    let an = Vec2::new(2.0 * eps, 0.0);
    let cut_area = eps * eps;

    let chord_vec = an - a3;
    let chord = chord_vec.norm();
    let mid = 0.5 * (a3 + an);
    // unit normal of the chord pointing away from M (into the polygon)
    let mut away = Vec2::new(-chord_vec.y, chord_vec.x) * (1.0 / chord);
    if away.dot(mid) < 0.0 {
        away = -away;
    }

    let tol = construction_tol();
    let mut sagitta = cut_area / (2.0 * chord);
    let mut last_err = None;
    for _ in 0..SAGITTA_RETRIES {
        let radius = (chord * chord / 4.0 + sagitta * sagitta) / (2.0 * sagitta);
        let centre = mid + (radius - sagitta) * away;
        let start = (a3 - centre).y.atan2((a3 - centre).x);
        let mut sweep = (an - centre).y.atan2((an - centre).x) - start;
        if sweep > PI {
            sweep -= 2.0 * PI;
        } else if sweep < -PI {
            sweep += 2.0 * PI;
        }
        let steps = n - 3;
        let mut pts = vec![a1, a2, a3];
        for k in 1..steps {
            let t = start + sweep * k as f64 / steps as f64;
            pts.push(centre + radius * Vec2::new(t.cos(), t.sin()));
        }
        pts.push(an);

        let candidate = ConvexPolygon::new(pts, &tol);
        match candidate {
            Ok(poly) => {
                let added = poly.area() - (1.0 - cut_area);
                if added > 0.0 && added < cut_area {
                    return Ok(LowerConstruction {
                        polygon: poly,
                        sagitta,
                        added_area: added,
                    });
                }
                last_err = Some(Error::Construction(format!(
                    "arc adds area {added:e}, budget {cut_area:e}"
                )));
            }
            Err(e) => last_err = Some(e),
        }
        sagitta /= 2.0;
    }
    Err(Error::Construction(format!(
        "no admissible sagitta after {SAGITTA_RETRIES} halvings: {}",
        last_err.map(|e| e.to_string()).unwrap_or_default()
    )))
}

/// One vertex insertion of [`ngon_upper_construction`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Insertion {
    /// Label rotation applied before appending.
    pub rotation: usize,
    pub lambda: f64,
    /// Strict upper bound `min{1/2, a_{n,1}/(a_{n,1} + a_{n−1,1})}`.
    pub lambda_bound: f64,
}

/// Result of [`ngon_upper_construction`].
#[derive(Debug, Clone)]
pub struct UpperConstruction {
    pub polygon: ConvexPolygon,
    /// Seed hexagon parameter (all six coordinates equal to it).
    pub seed_t: f64,
    /// Seed hexagon followed by every intermediate polygon up to `polygon`.
    pub chain: Vec<ConvexPolygon>,
    pub insertions: Vec<Insertion>,
}

/// `1 − ratio` of the uniform seed hexagon at `r = 1/4`, the worst case
/// over `m`: `r·6t(1 + t)/(1 + 6t + 6t²)`.
fn uniform_hexagon_deficit(t: f64) -> f64 {
    0.25 * 6.0 * t * (1.0 + t) / (1.0 + 6.0 * t + 6.0 * t * t)
}

/// Appends `A_{n+1} = A_n + λ(v_{n−1} + v_n)` after rotating labels so that
/// `v_{n−1} ∧ v_1 > 0`.
pub fn append_vertex(q: &ConvexPolygon) -> Result<(ConvexPolygon, Insertion)> {
    let n = q.len();
    let rotation = (0..n)
        .find(|&k| {
            let v = q.rotated(k).edge_vectors();
            wedge(v[n - 2], v[0]) > 0.0
        })
        .ok_or_else(|| Error::Construction("no labelling gives v_{n-1} ∧ v_1 > 0".into()))?;
    let rotated = q.rotated(rotation);
    let v = rotated.edge_vectors();
    let a_prev = wedge(v[n - 2], v[0]);
    let a_last = wedge(v[n - 1], v[0]);
    let lambda_bound = 0.5f64.min(a_last / (a_last + a_prev));
    let lambda = 0.5 * lambda_bound;
    let mut pts = rotated.vertices().to_vec();
    pts.push(pts[n - 1] + lambda * (v[n - 2] + v[n - 1]));
    let grown = ConvexPolygon::new(pts, &construction_tol())?;
    Ok((
        grown,
        Insertion {
            rotation,
            lambda,
            lambda_bound,
        },
    ))
}

/// Convex n-gon with ratio above `1 − eps` for every `m`: a uniform
/// hexagon with ratio above `1 − eps/2`, grown one vertex at a time by
/// [`append_vertex`]. Each insertion keeps the ratio from decreasing.
pub fn ngon_upper_construction(n: usize, eps: f64) -> Result<UpperConstruction> {
    check_args(n, eps)?;
    let target = eps / 2.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    // deficit is increasing in t and exceeds 1/8 at t = 1
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if uniform_hexagon_deficit(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let seed_t = lo;
    debug_assert!(uniform_hexagon_deficit(seed_t) < target);

    let seed = build_hexagon(&hexagon_upper_family(seed_t)?)?;
    let mut chain = vec![seed];
    let mut insertions = Vec::with_capacity(n - 6);
    while chain.last().expect("non-empty").len() < n {
        let (next, ins) = append_vertex(chain.last().expect("non-empty"))?;
        chain.push(next);
        insertions.push(ins);
    }
    Ok(UpperConstruction {
        polygon: chain.last().expect("non-empty").clone(),
        seed_t,
        chain,
        insertions,
    })
}
