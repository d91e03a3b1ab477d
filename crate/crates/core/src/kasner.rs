//! m-Kasner descent: each vertex of the descendant divides an edge of the
//! parent in the ratio `m : (1 − m)`, walking counterclockwise.
//!
//! The area ratio `Δ(K′)/Δ(K)` is computed two ways: directly from the
//! descendant, and through the ear decomposition
//! `Δ(K′) = Δ(K) − r·Σ ears`, where `r = m(1 − m)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Polygon, Vec2};

/// Division ratio `m ∈ (0, 1)` together with `r = m(1 − m) ∈ (0, 1/4]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KasnerParams {
    m: f64,
    r: f64,
}

impl KasnerParams {
    pub fn new(m: f64) -> Result<Self> {
        if !(m > 0.0 && m < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "m must lie in the open interval (0, 1), got {m}"
            )));
        }
        Ok(KasnerParams {
            m,
            r: m * (1.0 - m),
        })
    }

    /// The midpoint rule, `m = 1/2`.
    pub fn midpoint() -> Self {
        KasnerParams { m: 0.5, r: 0.25 }
    }

    #[inline]
    pub fn m(&self) -> f64 {
        self.m
    }

    #[inline]
    pub fn r(&self) -> f64 {
        self.r
    }

    /// The mirrored division ratio `1 − m` (same `r`).
    pub fn mirrored(&self) -> Self {
        KasnerParams {
            m: 1.0 - self.m,
            r: self.r,
        }
    }
}

/// Theoretical range of `Δ(K′)/Δ(K)` over convex n-gons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundInterval {
    pub lower: f64,
    pub upper: f64,
    /// True when the interval collapses to a single attained value (n = 3, 4);
    /// false for the open intervals of n ≥ 5.
    pub attained: bool,
}

impl BoundInterval {
    /// Membership test. Open intervals are checked strictly; a collapsed
    /// interval accepts values within `rel_eps` of its single point.
    pub fn contains(&self, ratio: f64, rel_eps: f64) -> bool {
        if self.attained {
            (ratio - self.lower).abs() <= rel_eps * self.lower.abs().max(1.0)
        } else {
            self.lower < ratio && ratio < self.upper
        }
    }
}

/// Per-polygon summary of one descent step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub n: usize,
    pub m: f64,
    #[serde(rename = "area_K")]
    pub area_k: f64,
    #[serde(rename = "area_K_prime")]
    pub area_k_prime: f64,
    pub ratio: f64,
    pub ear_sum: f64,
    #[serde(rename = "lower")]
    pub lower_bound: f64,
    #[serde(rename = "upper")]
    pub upper_bound: f64,
    pub in_bounds: bool,
}

/// Vertices `B_i = A_i + m·(A_{i+1} − A_i)`.
pub fn descendant_points(points: &[Vec2], p: KasnerParams) -> Vec<Vec2> {
    let n = points.len();
    (0..n)
        .map(|i| {
            let a = points[i];
            let b = points[(i + 1) % n];
            a + p.m * (b - a)
        })
        .collect()
}

/// The first m-Kasner descendant `K′`.
pub fn descendant(k: &ConvexPolygon, p: KasnerParams) -> Result<ConvexPolygon> {
    ConvexPolygon::from_derived(descendant_points(k.vertices(), p))
}

/// `[K⁰ = K, K¹, …, K^t]`.
pub fn sequence(k: &ConvexPolygon, p: KasnerParams, t: usize) -> Result<Vec<ConvexPolygon>> {
    let mut out = Vec::with_capacity(t + 1);
    out.push(k.clone());
    for _ in 0..t {
        let next = descendant(out.last().expect("non-empty"), p)?;
        out.push(next);
    }
    Ok(out)
}

/// `K^t` computed with the vertex centroid moved to the origin. Descent
/// commutes with translations and fixes the centroid, so only the position
/// changes; the shrinking iterates keep their relative precision instead of
/// sinking below the rounding error of the centroid's coordinates.
pub fn centered_iterate(k: &ConvexPolygon, p: KasnerParams, t: usize) -> Result<ConvexPolygon> {
    let mut cur = k.translated(-k.centroid());
    for _ in 0..t {
        cur = descendant(&cur, p)?;
    }
    Ok(cur)
}

/// Largest distance of the vertex centroid of `K¹ … K^t` from that of `K`,
/// divided by the diameter of `K`. Iterates the vertex map directly, so
/// iterates that shrink below rounding resolution still count.
pub fn centroid_drift(k: &Polygon, p: KasnerParams, t: usize) -> f64 {
    let mean = |pts: &[Vec2]| (1.0 / pts.len() as f64) * pts.iter().fold(Vec2::ZERO, |a, &b| a + b);
    let c0 = mean(k.vertices());
    let mut pts = k.vertices().to_vec();
    let mut worst = 0.0f64;
    for _ in 0..t {
        pts = descendant_points(&pts, p);
        worst = worst.max((mean(&pts) - c0).norm());
    }
    worst / k.diameter()
}

pub fn area_ratio(k: &ConvexPolygon, p: KasnerParams) -> Result<RatioReport> {
    let child = descendant(k, p)?;
    let area_k = k.area();
    let area_k_prime = child.area();
    let ratio = area_k_prime / area_k;
    let bounds = bound_interval(k.len(), p)?;
    Ok(RatioReport {
        n: k.len(),
        m: p.m,
        area_k,
        area_k_prime,
        ratio,
        ear_sum: k.ear_areas().iter().sum(),
        lower_bound: bounds.lower,
        upper_bound: bounds.upper,
        in_bounds: bounds.contains(ratio, 1e-9),
    })
}

/// `1 − r·(Σ ears)/Δ(K)`, computed without building the descendant.
pub fn ear_decomposition_ratio(k: &ConvexPolygon, p: KasnerParams) -> f64 {
    let ears: f64 = k.ear_areas().iter().sum();
    1.0 - p.r * ears / k.area()
}

/// The constant ratio for triangles (`1 − 3r`) and quadrilaterals (`1 − 2r`).
pub fn closed_form_ratio(n: usize, p: KasnerParams) -> Result<f64> {
    match n {
        3 => Ok(1.0 - 3.0 * p.r),
        4 => Ok(1.0 - 2.0 * p.r),
        _ => Err(Error::Unsupported(format!(
            "the area ratio is constant only for n = 3, 4 (got n = {n})"
        ))),
    }
}

pub fn bound_interval(n: usize, p: KasnerParams) -> Result<BoundInterval> {
    let r = p.r;
    let interval = match n {
        0..=2 => {
            return Err(Error::InvalidParameter(format!(
                "polygons have at least 3 vertices, got n = {n}"
            )))
        }
        3 => BoundInterval {
            lower: 1.0 - 3.0 * r,
            upper: 1.0 - 3.0 * r,
            attained: true,
        },
        4 => BoundInterval {
            lower: 1.0 - 2.0 * r,
            upper: 1.0 - 2.0 * r,
            attained: true,
        },
        5 => BoundInterval {
            lower: 1.0 - 2.0 * r,
            upper: 1.0 - r,
            attained: false,
        },
        _ => BoundInterval {
            lower: 1.0 - 2.0 * r,
            upper: 1.0,
            attained: false,
        },
    };
    Ok(interval)
}

/// Coefficients of the pentagon recurrence
/// `Δ(K″) = c1·Δ(K′) − c2·Δ(K)`: `c1 = 2 − 5r`, `c2 = 1 − 5r + 5r²`.
pub fn pentagon_recurrence_coeffs(p: KasnerParams) -> (f64, f64) {
    let r = p.r;
    (2.0 - 5.0 * r, 1.0 - 5.0 * r + 5.0 * r * r)
}

/// `|Δ(K″) − c1·Δ(K′) + c2·Δ(K)| / Δ(K)` for a convex pentagon.
pub fn recurrence_residual(k: &ConvexPolygon, p: KasnerParams) -> Result<f64> {
    if k.len() != 5 {
        return Err(Error::WrongArity {
            expected: 5,
            actual: k.len(),
        });
    }
    let k1 = descendant(k, p)?;
    let k2 = descendant(&k1, p)?;
    let (c1, c2) = pentagon_recurrence_coeffs(p);
    let (a0, a1, a2) = (k.area(), k1.area(), k2.area());
    Ok((a2 - c1 * a1 + c2 * a0).abs() / a0)
}

/// Fraction of the (centred) vertex sequence's Fourier energy lying outside
/// harmonics 1 and n − 1. Zero exactly for affine images of regular n-gons.
pub fn affine_regularity_defect(points: &[Vec2]) -> Result<f64> {
    let n = points.len();
    if n < 3 {
        return Err(Error::Degenerate(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    let centre = points.iter().fold(Vec2::ZERO, |a, &b| a + b);
    let centre = (1.0 / n as f64) * centre;
    let z: Vec<Complex64> = points
        .iter()
        .map(|&p| {
            let d = p - centre;
            Complex64::new(d.x, d.y)
        })
        .collect();
    let magnitude = points
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()))
        .fold(0.0, f64::max);
    let spread = z.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if spread <= 1e-15 * magnitude || spread == 0.0 {
        return Err(Error::Degenerate("all vertices coincide".into()));
    }
    let energy: Vec<f64> = (0..n)
        .map(|j| {
            z.iter()
                .enumerate()
                .map(|(k, &zk)| {
                    let angle = -2.0 * PI * (j * k % n) as f64 / n as f64;
                    zk * Complex64::from_polar(1.0, angle)
                })
                .sum::<Complex64>()
                .norm_sqr()
        })
        .collect();
    let total: f64 = energy.iter().sum();
    let outside = total - energy[1] - energy[n - 1];
    Ok((outside / total).clamp(0.0, 1.0))
}
