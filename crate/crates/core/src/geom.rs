//! Planar primitives: the wedge product, polygons with a counterclockwise
//! vertex order, and the strictly convex refinement used by every descent
//! routine.
//!
//! Areas are expressed through the wedge `v ∧ u = (v.x·u.y − v.y·u.x)/2`,
//! i.e. the signed area of the triangle spanned by `v` and `u` (half the
//! usual 2D cross product).

use std::ops::{Add, AddAssign, Deref, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A displacement (or point) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    /// Checked constructor rejecting NaN and infinities.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Vec2 { x, y })
        } else {
            Err(Error::InvalidParameter(format!(
                "non-finite coordinate ({x}, {y})"
            )))
        }
    }

    #[inline]
    pub fn wedge(self, other: Vec2) -> f64 {
        wedge(self, other)
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self * rhs.x, self * rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, rhs: f64) -> Vec2 {
        rhs * self
    }
}

impl From<[f64; 2]> for Vec2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Vec2::new(x, y)
    }
}

impl From<(f64, f64)> for Vec2 {
    fn from((x, y): (f64, f64)) -> Self {
        Vec2::new(x, y)
    }
}

/// Signed area of the triangle spanned by `v` and `u`: `(v.x·u.y − v.y·u.x)/2`.
///
/// Positive when `u` lies counterclockwise from `v` (by less than a half turn).
#[inline]
pub fn wedge(v: Vec2, u: Vec2) -> f64 {
    (v.x * u.y - v.y * u.x) / 2.0
}

/// Signed area of a closed vertex loop as a fan of wedges anchored at the
/// first vertex. Positive for counterclockwise loops.
pub fn signed_area(points: &[Vec2]) -> f64 {
    let Some(&origin) = points.first() else {
        return 0.0;
    };
    points
        .windows(2)
        .skip(1)
        .map(|w| wedge(w[0] - origin, w[1] - origin))
        .sum()
}

/// Numerical tolerances shared by predicates and verification checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: 1e-9,
            rel_eps: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        if !(abs_eps > 0.0 && abs_eps.is_finite() && rel_eps > 0.0 && rel_eps.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "tolerances must be positive and finite, got abs={abs_eps} rel={rel_eps}"
            )));
        }
        Ok(Tolerance { abs_eps, rel_eps })
    }

    /// Same relative tolerance, different absolute one.
    pub fn with_abs(self, abs_eps: f64) -> Result<Self> {
        Tolerance::new(abs_eps, self.rel_eps)
    }

    /// `|a − b| ≤ abs_eps + rel_eps·max(|a|, |b|)`.
    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs_eps + self.rel_eps * a.abs().max(b.abs())
    }
}

/// A simple polygon stored in counterclockwise order.
///
/// Constructors accept either orientation. Clockwise input is reversed
/// (keeping the first vertex in place) and [`Polygon::flipped`] reports it.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vec2>,
    flipped: bool,
}

impl Polygon {
    /// Builds a polygon using the default [`Tolerance`].
    pub fn new(vertices: Vec<Vec2>) -> Result<Self> {
        Self::with_tolerance(vertices, &Tolerance::default())
    }

    pub fn with_tolerance(mut vertices: Vec<Vec2>, tol: &Tolerance) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Degenerate(format!(
                "a polygon needs at least 3 vertices, got {n}"
            )));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "non-finite vertex ({}, {})",
                p.x, p.y
            )));
        }
        for i in 0..n {
            let d = (vertices[(i + 1) % n] - vertices[i]).norm();
            if d <= tol.abs_eps {
                return Err(Error::Degenerate(format!(
                    "vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        let area = signed_area(&vertices);
        if area.abs() < tol.abs_eps {
            return Err(Error::Degenerate(format!(
                "area {area:e} is below tolerance"
            )));
        }
        let flipped = area < 0.0;
        if flipped {
            vertices[1..].reverse();
        }
        Ok(Polygon { vertices, flipped })
    }

    /// Trusted construction for vertices already known to be counterclockwise.
    pub(crate) fn from_ccw(vertices: Vec<Vec2>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Polygon {
            vertices,
            flipped: false,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; polygons hold at least three vertices.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// Vertex `i` taken cyclically.
    #[inline]
    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.vertices.len()]
    }

    pub fn into_vertices(self) -> Vec<Vec2> {
        self.vertices
    }

    /// Whether the input was clockwise and got reversed.
    pub fn flipped(&self) -> bool {
        self.flipped
    }

    /// Edge vectors `v_i = A_{i+1} − A_i`, cyclically.
    pub fn edge_vectors(&self) -> Vec<Vec2> {
        let n = self.len();
        (0..n)
            .map(|i| self.vertices[(i + 1) % n] - self.vertices[i])
            .collect()
    }

    /// Area as a fan of wedges from the first vertex; positive because the
    /// stored order is counterclockwise.
    pub fn area(&self) -> f64 {
        let first = self.vertices[0];
        let n = self.len();
        (1..n - 1)
            .map(|i| wedge(self.vertices[i] - first, self.vertices[i + 1] - first))
            .sum()
    }

    /// Arithmetic mean of the vertices.
    pub fn centroid(&self) -> Vec2 {
        let n = self.len() as f64;
        let sum = self.vertices.iter().fold(Vec2::ZERO, |acc, &p| acc + p);
        (1.0 / n) * sum
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        let mut best: f64 = 0.0;
        for (i, &p) in self.vertices.iter().enumerate() {
            for &q in &self.vertices[i + 1..] {
                best = best.max((p - q).norm());
            }
        }
        best
    }

    /// True iff every consecutive edge pair turns left by more than
    /// `tol.abs_eps` in wedge terms.
    pub fn is_convex_ccw(&self, tol: &Tolerance) -> bool {
        is_convex_ccw(&self.vertices, tol)
    }

    /// Consecutive-edge wedges `v_i ∧ v_{i+1}`; entry `i` is the area of the
    /// ear `A_i A_{i+1} A_{i+2}`.
    pub(crate) fn turn_wedges(&self) -> Vec<f64> {
        turn_wedges(&self.vertices)
    }

    /// The same polygon with its labels rotated so that vertex `k` comes first.
    pub fn rotated(&self, k: usize) -> Polygon {
        let n = self.len();
        let mut v = self.vertices.clone();
        v.rotate_left(k % n);
        Polygon {
            vertices: v,
            flipped: self.flipped,
        }
    }
}

fn turn_wedges(points: &[Vec2]) -> Vec<f64> {
    let n = points.len();
    (0..n)
        .map(|i| {
            let a = points[i];
            let b = points[(i + 1) % n];
            let c = points[(i + 2) % n];
            wedge(b - a, c - b)
        })
        .collect()
}

/// Raw-vertex convexity predicate: every consecutive edge-pair wedge exceeds
/// `tol.abs_eps`. Clockwise or reflex input returns false.
pub fn is_convex_ccw(points: &[Vec2], tol: &Tolerance) -> bool {
    points.len() >= 3 && turn_wedges(points).iter().all(|&w| w > tol.abs_eps)
}

/// Left turns alone also admit star polygons; a convex loop turns exactly once.
fn check_single_turn(points: &[Vec2]) -> Result<()> {
    let n = points.len();
    let total: f64 = (0..n)
        .map(|i| {
            let e0 = points[(i + 1) % n] - points[i];
            let e1 = points[(i + 2) % n] - points[(i + 1) % n];
            (e0.x * e1.y - e0.y * e1.x).atan2(e0.dot(e1))
        })
        .sum();
    if (total - 2.0 * std::f64::consts::PI).abs() > 1e-6 {
        return Err(Error::Convexity(format!(
            "vertex loop winds {:.3} times",
            total / (2.0 * std::f64::consts::PI)
        )));
    }
    Ok(())
}

/// A polygon validated as strictly convex and counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon(Polygon);

impl ConvexPolygon {
    pub fn new(vertices: Vec<Vec2>, tol: &Tolerance) -> Result<Self> {
        Self::from_polygon(Polygon::with_tolerance(vertices, tol)?, tol)
    }

    pub fn from_polygon(polygon: Polygon, tol: &Tolerance) -> Result<Self> {
        let wedges = polygon.turn_wedges();
        if let Some((i, w)) = wedges
            .iter()
            .enumerate()
            .find(|(_, &w)| w.partial_cmp(&tol.abs_eps) != Some(std::cmp::Ordering::Greater))
        {
            return Err(Error::Convexity(format!(
                "turn at vertex {} has wedge {w:e} (need > {:e})",
                (i + 1) % polygon.len(),
                tol.abs_eps
            )));
        }
        check_single_turn(polygon.vertices())?;
        Ok(ConvexPolygon(polygon))
    }

    /// Scale-free validation for polygons derived from an already validated
    /// one: every turn must be strictly positive and finite. Used along
    /// descent chains, whose areas shrink below any fixed absolute tolerance.
    pub(crate) fn from_derived(vertices: Vec<Vec2>) -> Result<Self> {
        let wedges = turn_wedges(&vertices);
        if let Some((i, w)) = wedges
            .iter()
            .enumerate()
            .find(|(_, &w)| !(w > 0.0 && w.is_finite()))
        {
            return Err(Error::Convexity(format!(
                "derived polygon lost convexity at vertex {} (wedge {w:e})",
                (i + 1) % vertices.len()
            )));
        }
        check_single_turn(&vertices)?;
        Ok(ConvexPolygon(Polygon::from_ccw(vertices)))
    }

    /// Ear areas `Δ(A_i A_{i+1} A_{i+2})`, starting with the ear at the
    /// second vertex (`ABC, BCD, …` for a polygon labelled `A, B, C, …`).
    pub fn ear_areas(&self) -> Vec<f64> {
        self.0.turn_wedges()
    }

    pub fn polygon(&self) -> &Polygon {
        &self.0
    }

    pub fn into_polygon(self) -> Polygon {
        self.0
    }

    pub fn rotated(&self, k: usize) -> ConvexPolygon {
        ConvexPolygon(self.0.rotated(k))
    }

    pub fn translated(&self, offset: Vec2) -> ConvexPolygon {
        ConvexPolygon(Polygon {
            vertices: self.0.vertices.iter().map(|&v| v + offset).collect(),
            flipped: self.0.flipped,
        })
    }
}

impl Deref for ConvexPolygon {
    type Target = Polygon;
    fn deref(&self) -> &Polygon {
        &self.0
    }
}

impl From<ConvexPolygon> for Polygon {
    fn from(p: ConvexPolygon) -> Polygon {
        p.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(f64, f64)]) -> Vec<Vec2> {
        raw.iter().map(|&p| p.into()).collect()
    }

    fn unit_square() -> Vec<Vec2> {
        pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge(Vec2::new(1.0, 0.0), Vec2::new(0.0, 2.0)), 1.0);
        assert_eq!(wedge(Vec2::new(3.0, 4.0), Vec2::new(3.0, 4.0)), 0.0);
        assert_eq!(wedge(Vec2::new(0.0, 1.0), Vec2::new(1.0, 0.0)), -0.5);
    }

    #[test]
    fn edge_vectors_of_square_and_triangle() {
        let sq = Polygon::new(unit_square()).unwrap();
        assert_eq!(
            sq.edge_vectors(),
            pts(&[(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)])
        );
        let tri = Polygon::new(pts(&[(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)])).unwrap();
        assert_eq!(
            tri.edge_vectors(),
            pts(&[(2.0, 0.0), (-2.0, 2.0), (0.0, -2.0)])
        );
    }

    #[test]
    fn areas() {
        assert_eq!(Polygon::new(unit_square()).unwrap().area(), 1.0);
        let tri = Polygon::new(pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])).unwrap();
        assert_eq!(tri.area(), 0.5);

        // shoelace oracle against (5/2)·sin 72°
        let pent: Vec<Vec2> = (0..5)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
                Vec2::new(t.cos(), t.sin())
            })
            .collect();
        let shoelace: f64 = (0..5)
            .map(|i| {
                let (p, q) = (pent[i], pent[(i + 1) % 5]);
                p.x * q.y - q.x * p.y
            })
            .sum::<f64>()
            / 2.0;
        let expected = 2.5 * (72f64).to_radians().sin();
        assert!((shoelace - expected).abs() < 1e-14);
        let area = Polygon::new(pent).unwrap().area();
        assert!((area - 2.377_641_290_737_884).abs() < 1e-14, "{area}");
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let collinear = pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert!(matches!(Polygon::new(collinear), Err(Error::Degenerate(_))));
        let dup = pts(&[(0.0, 0.0), (0.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert!(matches!(Polygon::new(dup), Err(Error::Degenerate(_))));
        assert!(Polygon::new(pts(&[(0.0, 0.0), (1.0, 0.0)])).is_err());
        let nan = pts(&[(0.0, 0.0), (f64::NAN, 0.0), (0.0, 1.0)]);
        assert!(matches!(Polygon::new(nan), Err(Error::InvalidParameter(_))));
        assert!(Vec2::try_new(f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn convexity_predicate() {
        let tol = Tolerance::default();
        let sq = unit_square();
        assert!(is_convex_ccw(&sq, &tol));
        let mut cw = sq.clone();
        cw.reverse();
        assert!(!is_convex_ccw(&cw, &tol));
        let reflex = pts(&[(0.0, 0.0), (2.0, 0.0), (1.0, 0.5), (1.0, 2.0)]);
        assert!(!is_convex_ccw(&reflex, &tol));
        assert!(matches!(
            ConvexPolygon::new(reflex, &tol),
            Err(Error::Convexity(_))
        ));
    }

    #[test]
    fn pentagram_is_not_convex() {
        let star: Vec<Vec2> = (0..5)
            .map(|k| {
                let t = 4.0 * std::f64::consts::PI * k as f64 / 5.0;
                Vec2::new(t.cos(), t.sin())
            })
            .collect();
        assert!(matches!(
            ConvexPolygon::new(star, &Tolerance::default()),
            Err(Error::Convexity(_))
        ));
    }

    #[test]
    fn clockwise_input_is_normalized() {
        let mut cw = unit_square();
        cw.reverse();
        let p = Polygon::new(cw).unwrap();
        assert!(p.flipped());
        assert_eq!(p.area(), 1.0);
        assert!(p.is_convex_ccw(&Tolerance::default()));
        assert_eq!(p.vertex(0), Vec2::new(0.0, 1.0));
    }

    #[test]
    fn centroids() {
        let sq = Polygon::new(unit_square()).unwrap();
        assert_eq!(sq.centroid(), Vec2::new(0.5, 0.5));
        let tri = Polygon::new(pts(&[(0.0, 0.0), (3.0, 0.0), (0.0, 3.0)])).unwrap();
        assert_eq!(tri.centroid(), Vec2::new(1.0, 1.0));
    }

    #[test]
    fn ear_areas() {
        let tol = Tolerance::default();
        let sq = ConvexPolygon::new(unit_square(), &tol).unwrap();
        assert_eq!(sq.ear_areas(), vec![0.5; 4]);
        let h = 3f64.sqrt() / 2.0;
        let eq = ConvexPolygon::new(pts(&[(0.0, 0.0), (1.0, 0.0), (0.5, h)]), &tol).unwrap();
        for e in eq.ear_areas() {
            assert!((e - 3f64.sqrt() / 4.0).abs() < 1e-15);
        }
    }

    #[test]
    fn quadrilateral_area_matches_both_triangulations() {
        let q = pts(&[(0.0, 0.0), (3.0, -0.5), (4.0, 2.0), (0.5, 3.0)]);
        let p = Polygon::new(q.clone()).unwrap();
        let v = p.edge_vectors();
        let split_ac = wedge(v[0], v[1]) + wedge(v[2], v[3]);
        let split_bd = wedge(v[1], v[2]) + wedge(v[3], v[0]);
        assert!((p.area() - split_ac).abs() < 1e-12);
        assert!((p.area() - split_bd).abs() < 1e-12);
    }

    #[test]
    fn tolerance_validation() {
        assert!(Tolerance::new(0.0, 1e-9).is_err());
        assert!(Tolerance::new(1e-9, -1.0).is_err());
        let t = Tolerance::default();
        assert!(t.close(1.0, 1.0 + 1e-10));
        assert!(!t.close(1.0, 1.0 + 1e-6));
    }
}
