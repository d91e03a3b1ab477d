//! Numerical checks of the identities and lemmas behind the area bounds, and
//! an empirical extremizer of the area ratio over convex n-gons.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{wedge, ConvexPolygon, Polygon, Tolerance, Vec2};
use crate::kasner::{bound_interval, descendant, KasnerParams};
use crate::parametric::{build_hexagon, HexagonParams};
use crate::sampler::{random_convex_polygon, SamplerConfig};

/// `|a₁₂a₃₄ − a₁₃a₂₄ + a₁₄a₂₃|` divided by the largest of the three products.
pub fn plucker_residual(vs: &[Vec2; 4]) -> Result<f64> {
    let a = |i: usize, j: usize| wedge(vs[i], vs[j]);
    let wedges = [a(0, 1), a(0, 2), a(0, 3), a(1, 2), a(1, 3), a(2, 3)];
    if wedges.iter().all(|w| *w == 0.0) {
        return Err(Error::Degenerate("all pairwise wedges vanish".into()));
    }
    let terms = [a(0, 1) * a(2, 3), a(0, 2) * a(1, 3), a(0, 3) * a(1, 2)];
    let scale = terms.iter().fold(0.0f64, |s, t| s.max(t.abs()));
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((terms[0] - terms[1] + terms[2]).abs() / scale)
}

fn edge_wedge(v: &[Vec2], i: usize, j: usize) -> f64 {
    let n = v.len();
    wedge(v[i % n], v[j % n])
}

/// `S = Σ a_{i,i+1}` and `T = Σ a_{i,i+2}` of a pentagon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PentagonAggregates {
    pub s: f64,
    pub t: f64,
}

fn raw_aggregates(k: &ConvexPolygon) -> Result<PentagonAggregates> {
    if k.len() != 5 {
        return Err(Error::WrongArity {
            expected: 5,
            actual: k.len(),
        });
    }
    let v = k.edge_vectors();
    Ok(PentagonAggregates {
        s: (0..5).map(|i| edge_wedge(&v, i, i + 1)).sum(),
        t: (0..5).map(|i| edge_wedge(&v, i, i + 2)).sum(),
    })
}

/// Computes `S` and `T`, checking `T = 5Δ − 3S` to `tol.rel_eps·Δ`.
pub fn pentagon_aggregates(k: &ConvexPolygon, tol: &Tolerance) -> Result<PentagonAggregates> {
    let g = raw_aggregates(k)?;
    let area = k.area();
    let residual = (g.t - (5.0 * area - 3.0 * g.s)).abs() / area;
    if residual > tol.rel_eps {
        return Err(Error::LemmaViolation(format!(
            "T = 5Δ − 3S fails with relative residual {residual:e}"
        )));
    }
    Ok(g)
}

/// Residuals of the pentagon identities for one `m`, each divided by `Δ(K)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PentagonIdentityResiduals {
    /// `Δ(K′) = Δ(K) − r·S`
    pub delta1: f64,
    /// `T = 5Δ(K) − 3S`
    pub tsd: f64,
    /// `S′ = (1 − 2r)·S + r·T`
    pub s_prime: f64,
    /// `Δ(K″) = Δ(K′) − r·S′` with `S′` predicted from `S` and `T`
    pub elimination: f64,
}

impl PentagonIdentityResiduals {
    pub fn max(&self) -> f64 {
        self.delta1
            .max(self.tsd)
            .max(self.s_prime)
            .max(self.elimination)
    }
}

pub fn pentagon_identity_residuals(
    k: &ConvexPolygon,
    p: KasnerParams,
) -> Result<PentagonIdentityResiduals> {
    let g = raw_aggregates(k)?;
    let r = p.r();
    let k1 = descendant(k, p)?;
    let k2 = descendant(&k1, p)?;
    let g1 = raw_aggregates(&k1)?;
    let (a0, a1, a2) = (k.area(), k1.area(), k2.area());
    let s_pred = (1.0 - 2.0 * r) * g.s + r * g.t;
    Ok(PentagonIdentityResiduals {
        delta1: (a1 - (a0 - r * g.s)).abs() / a0,
        tsd: (g.t - (5.0 * a0 - 3.0 * g.s)).abs() / a0,
        s_prime: (g1.s - s_pred).abs() / a0,
        elimination: (a2 - (a1 - r * s_pred)).abs() / a0,
    })
}

/// A window of four consecutive sides with
/// `a_{i+1,i+2} ≤ a_{i,i+2} + a_{i+1,i+3}`. `index` is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaWitness {
    pub index: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

/// First cyclic index `i` with `a_{i+1,i+2} ≤ a_{i,i+2} + a_{i+1,i+3} + abs_eps`.
pub fn lemma_four_sides_index(k: &ConvexPolygon, tol: &Tolerance) -> Result<LemmaWitness> {
    let n = k.len();
    if n < 6 {
        return Err(Error::InvalidParameter(format!(
            "four-sides lemma needs n >= 6, got {n}"
        )));
    }
    let v = k.edge_vectors();
    for i in 0..n {
        let lhs = edge_wedge(&v, i + 1, i + 2);
        let rhs = edge_wedge(&v, i, i + 2) + edge_wedge(&v, i + 1, i + 3);
        if lhs <= rhs + tol.abs_eps {
            return Ok(LemmaWitness {
                index: i,
                lhs,
                rhs,
                slack: rhs - lhs,
            });
        }
    }
    Err(Error::LemmaViolation(format!(
        "no four consecutive sides satisfy the inequality for n = {n}"
    )))
}

/// `(EF∧AB + FA∧BC) − 2·FA∧AB` for the hexagon `ABCDEF` as labelled.
pub fn hexagon_double_ear_inequality(k: &ConvexPolygon) -> Result<f64> {
    if k.len() != 6 {
        return Err(Error::WrongArity {
            expected: 6,
            actual: k.len(),
        });
    }
    let [a, b, c, _, e, f] = [0, 1, 2, 3, 4, 5].map(|i| k.vertex(i));
    let (ab, bc, ef, fa) = (b - a, c - b, f - e, a - f);
    Ok(wedge(ef, ab) + wedge(fa, bc) - 2.0 * wedge(fa, ab))
}

/// The same slack for the hexagon built from `p` after relabelling so that
/// `a` is the smallest parameter.
pub fn hexagon_double_ear_slack(p: &HexagonParams) -> Result<f64> {
    hexagon_double_ear_inequality(&build_hexagon(&p.min_first())?)
}

/// Outcome of [`remove_vertex_check`].
#[derive(Debug, Clone)]
pub struct VertexRemoval {
    /// `K` with the witness vertex removed.
    pub reduced: ConvexPolygon,
    /// 0-based index in `K` of the removed vertex.
    pub removed: usize,
    pub ratio_k: f64,
    pub ratio_l: f64,
    pub a13: f64,
    pub a23: f64,
    pub a24: f64,
    /// Area of the piece `K′ \ L′`.
    pub area_p: f64,
}

/// Removes the middle vertex of a four-sides witness window and checks the
/// area bookkeeping `Δ(L) = Δ(K) − a₂₃`, `Δ(P) = r(a₁₃ + a₂₄ − a₂₃) + a₂₃`,
/// `Δ(L′) = Δ(K′) − Δ(P)` together with `Δ(K′)/Δ(K) ≥ Δ(L′)/Δ(L)`.
pub fn remove_vertex_check(
    k: &ConvexPolygon,
    p: KasnerParams,
    tol: &Tolerance,
) -> Result<VertexRemoval> {
    let n = k.len();
    if n < 7 {
        return Err(Error::InvalidParameter(format!(
            "vertex removal needs at least 7 vertices, got {n}"
        )));
    }
    let w = lemma_four_sides_index(k, tol)?;
    let v = k.edge_vectors();
    let i = w.index;
    let (a13, a23, a24) = (
        edge_wedge(&v, i, i + 2),
        edge_wedge(&v, i + 1, i + 2),
        edge_wedge(&v, i + 1, i + 3),
    );
    let removed = (i + 2) % n;
    let mut pts = k.vertices().to_vec();
    pts.remove(removed);
    let reduced = ConvexPolygon::from_derived(pts)?;

    let r = p.r();
    let area_k = k.area();
    let area_l = reduced.area();
    let area_k1 = descendant(k, p)?.area();
    let area_l1 = descendant(&reduced, p)?.area();
    let area_p = r * (a13 + a24 - a23) + a23;
    let slack = tol.rel_eps * area_k;
    let violation = |what: &str, got: f64, want: f64| {
        Error::LemmaViolation(format!("{what}: got {got:e}, expected {want:e}"))
    };
    if (area_l - (area_k - a23)).abs() > slack {
        return Err(violation("Δ(L)", area_l, area_k - a23));
    }
    if (area_l1 - (area_k1 - area_p)).abs() > slack {
        return Err(violation("Δ(L′)", area_l1, area_k1 - area_p));
    }
    let (ratio_k, ratio_l) = (area_k1 / area_k, area_l1 / area_l);
    if ratio_k < ratio_l - tol.abs_eps {
        return Err(violation("ratio after removal", ratio_l, ratio_k));
    }
    Ok(VertexRemoval {
        reduced,
        removed,
        ratio_k,
        ratio_l,
        a13,
        a23,
        a24,
        area_p,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Min,
    Max,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Mode::Min),
            "max" => Ok(Mode::Max),
            other => Err(Error::Parse(format!(
                "mode must be min or max, got {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Extremum {
    pub ratio: f64,
    pub polygon: Polygon,
    /// Restart that produced the best value.
    pub restart: usize,
    pub evaluations: usize,
}

/// Minimum turn wedge, relative to area, for a point to count as convex.
const FEASIBLE_REL_WEDGE: f64 = 1e-10;
const POLISH_ROUNDS: usize = 12;

/// Multi-start Nelder–Mead over raw vertex coordinates, with non-convex
/// points rejected. Each of the `budget` restarts begins at a sampled
/// polygon; between rounds the incumbent is mapped by an affine whitening,
/// which leaves the ratio unchanged and keeps the simplex well scaled.
pub fn empirical_extremize(
    n: usize,
    p: KasnerParams,
    mode: Mode,
    budget: usize,
    seed: u64,
) -> Result<Extremum> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "extremizer needs n >= 5, got {n}"
        )));
    }
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be at least 1".into()));
    }
    let threads = std::thread::available_parallelism()
        .map(|t| t.get())
        .unwrap_or(1)
        .min(budget);
    type Best = Option<(f64, usize, Vec<Vec2>)>;
    let results: Vec<(Best, usize)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    let mut best: Best = None;
                    let mut evals = 0;
                    for restart in (t..budget).step_by(threads) {
                        let cfg = SamplerConfig::new(n, seed.wrapping_add(restart as u64));
                        let Ok(start) = random_convex_polygon(&cfg) else {
                            continue;
                        };
                        let (score, pts, used) = local_search(start.vertices(), p, mode);
                        evals += used;
                        if score.is_finite() && best.as_ref().is_none_or(|b| score < b.0) {
                            best = Some((score, restart, pts));
                        }
                    }
                    (best, evals)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("extremizer worker panicked"))
            .collect()
    });

    let evaluations = results.iter().map(|r| r.1).sum();
    // ties go to the lower restart index so the merge is order-independent
    let (score, restart, pts) = results
        .into_iter()
        .filter_map(|r| r.0)
        .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)))
        .ok_or(Error::BudgetExhausted(budget))?;
    let ratio = match mode {
        Mode::Min => score,
        Mode::Max => -score,
    };
    let polygon = ConvexPolygon::from_derived(pts)?.into_polygon();
    let bounds = bound_interval(n, p)?;
    if !(ratio > bounds.lower && ratio < bounds.upper) {
        return Err(Error::LemmaViolation(format!(
            "extremizer left the interval ({}, {}): {ratio}",
            bounds.lower, bounds.upper
        )));
    }
    Ok(Extremum {
        ratio,
        polygon,
        restart,
        evaluations,
    })
}

fn objective(pts: &[Vec2], p: KasnerParams, mode: Mode) -> f64 {
    let Some(ratio) = feasible_ratio(pts, p) else {
        return f64::INFINITY;
    };
    match mode {
        Mode::Min => ratio,
        Mode::Max => -ratio,
    }
}

fn feasible_ratio(pts: &[Vec2], p: KasnerParams) -> Option<f64> {
    let poly = ConvexPolygon::from_derived(pts.to_vec()).ok()?;
    let area = poly.area();
    let ears = poly.ear_areas();
    if area.is_nan() || area <= 0.0 || ears.iter().any(|&e| e <= FEASIBLE_REL_WEDGE * area) {
        return None;
    }
    let ear_sum: f64 = ears.iter().sum();
    Some(1.0 - p.r() * ear_sum / area)
}

/// Affine map sending the vertex mean to 0 and the vertex covariance to the
/// identity.
fn whiten(pts: &[Vec2]) -> Vec<Vec2> {
    let n = pts.len() as f64;
    let c = (1.0 / n) * pts.iter().fold(Vec2::ZERO, |a, &b| a + b);
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for q in pts {
        let d = *q - c;
        sxx += d.x * d.x / n;
        sxy += d.x * d.y / n;
        syy += d.y * d.y / n;
    }
    // inverse square root of [[sxx, sxy], [sxy, syy]]
    let det = sxx * syy - sxy * sxy;
    let tr = sxx + syy;
    let s = det.sqrt();
    let t = (tr + 2.0 * s).sqrt();
    if !(det > 0.0 && t > 0.0) {
        return pts.to_vec();
    }
    let k = 1.0 / (s * t);
    let (m11, m12, m22) = ((syy + s) * k, -sxy * k, (sxx + s) * k);
    pts.iter()
        .map(|q| {
            let d = *q - c;
            Vec2::new(m11 * d.x + m12 * d.y, m12 * d.x + m22 * d.y)
        })
        .collect()
}

fn local_search(start: &[Vec2], p: KasnerParams, mode: Mode) -> (f64, Vec<Vec2>, usize) {
    let mut pts = start.to_vec();
    let mut score = objective(&pts, p, mode);
    let mut evals = 1;
    let dim = 2 * pts.len();
    for round in 0..POLISH_ROUNDS {
        pts = whiten(&pts);
        let x0: Vec<f64> = pts.iter().flat_map(|q| [q.x, q.y]).collect();
        let step = 0.2 * 0.6f64.powi(round as i32);
        let f = |x: &[f64]| {
            let q: Vec<Vec2> = x.chunks(2).map(|c| Vec2::new(c[0], c[1])).collect();
            objective(&q, p, mode)
        };
        let (x, fx, used) = nelder_mead(f, &x0, step, 300 * dim);
        evals += used;
        if fx <= score {
            score = fx;
            pts = x.chunks(2).map(|c| Vec2::new(c[0], c[1])).collect();
        }
    }
    (score, pts, evals)
}

/// Standard Nelder–Mead with reflection, expansion, contraction and shrink.
fn nelder_mead(
    f: impl Fn(&[f64]) -> f64,
    x0: &[f64],
    step: f64,
    max_evals: usize,
) -> (Vec<f64>, f64, usize) {
    let dim = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..dim {
        let mut x = x0.to_vec();
        x[i] += step;
        let fx = f(&x);
        simplex.push((x, fx));
    }
    let mut evals = dim + 1;
    let lerp = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
        a.iter().zip(b).map(|(u, v)| u + t * (v - u)).collect()
    };
    while evals < max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (best, worst) = (simplex[0].1, simplex[dim].1);
        if worst.is_finite() && (worst - best).abs() <= 1e-15 * best.abs().max(1e-300) {
            break;
        }
        let mut centroid = vec![0.0; dim];
        for (x, _) in &simplex[..dim] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / dim as f64;
            }
        }
        let xr = lerp(&centroid, &simplex[dim].0, -1.0);
        let fr = f(&xr);
        evals += 1;
        if fr < simplex[0].1 {
            let xe = lerp(&centroid, &simplex[dim].0, -2.0);
            let fe = f(&xe);
            evals += 1;
            simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
        } else {
            let (xc, fc) = if fr < simplex[dim].1 {
                let xc = lerp(&centroid, &xr, 0.5);
                let fc = f(&xc);
                (xc, fc)
            } else {
                let xc = lerp(&centroid, &simplex[dim].0, 0.5);
                let fc = f(&xc);
                (xc, fc)
            };
            evals += 1;
            if fc < simplex[dim].1.min(fr) {
                simplex[dim] = (xc, fc);
            } else {
                let x_best = simplex[0].0.clone();
                for (x, fx) in simplex.iter_mut().skip(1) {
                    *x = lerp(&x_best, x, 0.5);
                    *fx = f(x);
                }
                evals += dim;
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, fx) = simplex.swap_remove(0);
    (x, fx, evals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kasner::area_ratio;
    use crate::parametric::{build_pentagon, hexagon_lower_family, PentagonParams};
    use crate::sampler::sample_many;

    fn regular(n: usize) -> ConvexPolygon {
        let pts = (0..n)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                Vec2::new(t.cos(), t.sin())
            })
            .collect();
        ConvexPolygon::new(pts, &Tolerance::default()).unwrap()
    }

    #[test]
    fn plucker_examples() {
        let vs = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (2.0, 3.0)].map(Vec2::from);
        assert!(plucker_residual(&vs).unwrap() < 1e-14);
        let vs = [(1.0, 2.0), (-3.0, 0.5), (1.0, 2.0), (0.3, 7.0)].map(Vec2::from);
        assert_eq!(plucker_residual(&vs).unwrap(), 0.0);
        let zero = [Vec2::ZERO; 4];
        assert!(matches!(plucker_residual(&zero), Err(Error::Degenerate(_))));
        let parallel = [(1.0, 1.0), (2.0, 2.0), (-1.0, -1.0), (0.5, 0.5)].map(Vec2::from);
        assert!(plucker_residual(&parallel).is_err());
    }

    #[test]
    fn aggregates_of_unit_pentagon() {
        let k = build_pentagon(&PentagonParams::new(1.0, 1.0, 1.0, 1.0).unwrap()).unwrap();
        let g = pentagon_aggregates(&k, &Tolerance::default()).unwrap();
        assert!((g.s - 7.0).abs() < 1e-13);
        assert!((g.t - (25.0 - 21.0)).abs() < 1e-13);
        let half = KasnerParams::midpoint();
        let ratio = area_ratio(&k, half).unwrap().ratio;
        assert!((ratio - (1.0 - 0.25 * g.s / 5.0)).abs() < 1e-14);
    }

    #[test]
    fn aggregates_of_regular_pentagon() {
        let k = regular(5);
        let g = pentagon_aggregates(&k, &Tolerance::default()).unwrap();
        let ear = k.ear_areas()[0];
        assert!((g.s - 5.0 * ear).abs() < 1e-14);
        assert!((g.t - (5.0 * k.area() - 3.0 * g.s)).abs() < 1e-13);
        assert!(pentagon_aggregates(&regular(6), &Tolerance::default()).is_err());
    }

    #[test]
    fn identity_residuals_on_samples() {
        for k in sample_many(5, 11, 200).unwrap() {
            for m in [0.1, 0.5, 0.9] {
                let res = pentagon_identity_residuals(&k, KasnerParams::new(m).unwrap()).unwrap();
                assert!(res.max() < 1e-12, "{res:?}");
            }
        }
    }

    #[test]
    fn four_sides_regular_hexagon() {
        let w = lemma_four_sides_index(&regular(6), &Tolerance::default()).unwrap();
        assert_eq!(w.index, 0);
        assert!(w.slack > 0.0);
        let k = build_hexagon(&hexagon_lower_family(100.0).unwrap()).unwrap();
        let w = lemma_four_sides_index(&k, &Tolerance::default()).unwrap();
        assert!(w.slack >= -1e-9);
        assert!(lemma_four_sides_index(&regular(5), &Tolerance::default()).is_err());
    }

    #[test]
    fn four_sides_on_samples() {
        let tol = Tolerance::default();
        for n in 6..=12 {
            for k in sample_many(n, 3 * n as u64, 100).unwrap() {
                let w = lemma_four_sides_index(&k, &tol).unwrap();
                assert!(w.slack >= -tol.abs_eps);
            }
        }
    }

    #[test]
    fn double_ear_examples() {
        let ones = HexagonParams::uniform(1.0).unwrap();
        assert!((hexagon_double_ear_slack(&ones).unwrap() - 1.0).abs() < 1e-13);
        let k = build_hexagon(&hexagon_lower_family(10.0).unwrap()).unwrap();
        assert!(hexagon_double_ear_inequality(&k).unwrap() >= 0.0);
        assert!(hexagon_double_ear_inequality(&regular(7)).is_err());
    }

    #[test]
    fn double_ear_matches_parametric_form() {
        // slack = 1 − 2a + c + f − 3ab + ac + ae − 3af + 4bf
        let p = HexagonParams::new(0.3, 0.9, 1.4, 2.0, 0.7, 0.5).unwrap();
        let k = build_hexagon(&p).unwrap();
        let HexagonParams { a, b, c, e, f, .. } = p;
        let expected =
            1.0 - 2.0 * a + c + f - 3.0 * a * b + a * c + a * e - 3.0 * a * f + 4.0 * b * f;
        assert!((hexagon_double_ear_inequality(&k).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn vertex_removal_regular_heptagon() {
        let k = regular(7);
        let out = remove_vertex_check(&k, KasnerParams::midpoint(), &Tolerance::default()).unwrap();
        assert_eq!(out.reduced.len(), 6);
        assert!(out.ratio_k >= out.ratio_l);
        assert!(out.area_p >= out.a23);
    }

    #[test]
    fn vertex_removal_on_octagons() {
        let tol = Tolerance::default();
        for k in sample_many(8, 99, 200).unwrap() {
            for m in [0.1, 0.3, 0.5, 0.8] {
                let out = remove_vertex_check(&k, KasnerParams::new(m).unwrap(), &tol).unwrap();
                assert!(out.ratio_k >= out.ratio_l - tol.abs_eps);
                assert!(out.area_p >= out.a23 - tol.abs_eps);
            }
        }
        assert!(remove_vertex_check(&regular(6), KasnerParams::midpoint(), &tol).is_err());
    }

    #[test]
    fn whitening_preserves_ratio() {
        let k = sample_many(7, 5, 1).unwrap().remove(0);
        let p = KasnerParams::new(0.3).unwrap();
        let before = feasible_ratio(k.vertices(), p).unwrap();
        let after = feasible_ratio(&whiten(k.vertices()), p).unwrap();
        assert!((before - after).abs() < 1e-13);
    }

    #[test]
    fn extremizer_small_budget() {
        let half = KasnerParams::midpoint();
        let lo = empirical_extremize(5, half, Mode::Min, 4, 1).unwrap();
        let hi = empirical_extremize(5, half, Mode::Max, 4, 1).unwrap();
        assert!(0.5 < lo.ratio && lo.ratio < hi.ratio && hi.ratio < 0.75);
        assert_eq!(lo.polygon.len(), 5);
        assert!(empirical_extremize(4, half, Mode::Min, 4, 1).is_err());
        assert!(empirical_extremize(5, half, Mode::Min, 0, 1).is_err());
    }
}
