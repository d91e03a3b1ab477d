//! Randomized verification suites over sampled polygons, aggregated into a
//! single pass/fail report.

use serde::{Deserialize, Serialize};

use crate::analysis::{
    hexagon_double_ear_slack, lemma_four_sides_index, pentagon_identity_residuals,
    plucker_residual, remove_vertex_check,
};
use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Tolerance};
use crate::kasner::{
    area_ratio, bound_interval, centroid_drift, closed_form_ratio, ear_decomposition_ratio,
    recurrence_residual, KasnerParams,
};
use crate::sampler::{random_convex_polygon, random_hexagon_params, SamplerConfig};

/// Relative tolerance for exact identities.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Relative tolerance for the pentagon recurrence, which compounds two steps.
pub const RECURRENCE_TOL: f64 = 1e-10;
/// Ratios must clear open bounds by more than this.
pub const BOUND_MARGIN: f64 = 1e-12;
/// Centroid drift allowed over a descent, relative to the diameter.
pub const CENTROID_TOL: f64 = 1e-9;
pub const CENTROID_STEPS: usize = 60;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub n: usize,
    pub samples: usize,
    pub m_grid: Vec<f64>,
    pub seed: u64,
    pub tol: Tolerance,
}

/// One named check. Passes iff `max_residual ≤ tolerance`; strict bound
/// checks report the worst signed excess over the bound and use a negative
/// tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub m_grid: Vec<f64>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

struct Acc {
    name: &'static str,
    samples: usize,
    max: f64,
    tolerance: f64,
}

impl Acc {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Acc {
            name,
            samples: 0,
            max: f64::NEG_INFINITY,
            tolerance,
        }
    }

    /// Errors and NaNs count as infinite residuals.
    fn record(&mut self, residual: Result<f64>) {
        self.samples += 1;
        let r = match residual {
            Ok(r) if !r.is_nan() => r,
            _ => f64::INFINITY,
        };
        self.max = self.max.max(r);
    }

    fn finish(self) -> Check {
        Check {
            name: self.name.to_string(),
            samples: self.samples,
            max_residual: self.max,
            tolerance: self.tolerance,
            pass: self.samples > 0 && self.max <= self.tolerance,
        }
    }
}

/// Parses `start:stop:count`. Endpoints equal to 0 or 1 are dropped and the
/// `count` points are spread over what remains, so `0:1:9` gives
/// `0.1, 0.2, …, 0.9`.
pub fn parse_m_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::Parse(format!("m-grid must be start:stop:count, got {spec:?}"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, count] = parts[..] else {
        return Err(bad());
    };
    let start: f64 = start.trim().parse().map_err(|_| bad())?;
    let stop: f64 = stop.trim().parse().map_err(|_| bad())?;
    let count: usize = count.trim().parse().map_err(|_| bad())?;
    if count == 0 || !start.is_finite() || !stop.is_finite() || start > stop {
        return Err(bad());
    }
    let skip_start = start == 0.0 || start == 1.0;
    let skip_stop = stop == 0.0 || stop == 1.0;
    let grid: Vec<f64> = if count == 1 && !skip_start {
        vec![start]
    } else {
        let gaps = (count - 1 + skip_start as usize + skip_stop as usize) as f64;
        let first = skip_start as usize;
        (0..count)
            .map(|k| start + (stop - start) * (k + first) as f64 / gaps)
            .collect()
    };
    for &m in &grid {
        KasnerParams::new(m)?;
    }
    Ok(grid)
}

fn bound_excess(k: &ConvexPolygon, p: KasnerParams) -> Result<f64> {
    let ratio = area_ratio(k, p)?.ratio;
    let b = bound_interval(k.len(), p)?;
    Ok((b.lower - ratio).max(ratio - b.upper))
}

/// Runs every suite that applies to `n`-gons.
pub fn run_suite(cfg: &VerifyConfig) -> Result<Report> {
    let n = cfg.n;
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    if cfg.m_grid.is_empty() {
        return Err(Error::InvalidParameter("m-grid is empty".into()));
    }
    let grid = cfg
        .m_grid
        .iter()
        .map(|&m| KasnerParams::new(m))
        .collect::<Result<Vec<_>>>()?;
    let abs = cfg.tol.abs_eps;

    let mut ear = Acc::new("ear_decomposition", IDENTITY_TOL);
    let mut centroid = Acc::new("centroid_invariance", CENTROID_TOL);
    let mut plucker = Acc::new("plucker", IDENTITY_TOL);
    let mut closed = Acc::new("closed_form", IDENTITY_TOL);
    let mut bounds = Acc::new("open_bounds", -BOUND_MARGIN);
    let mut recurrence = Acc::new("pentagon_recurrence", RECURRENCE_TOL);
    let mut delta1 = Acc::new("identity_delta1", IDENTITY_TOL);
    let mut tsd = Acc::new("identity_tsd", IDENTITY_TOL);
    let mut s_prime = Acc::new("identity_s_prime", IDENTITY_TOL);
    let mut elimination = Acc::new("identity_elimination", IDENTITY_TOL);
    let mut witness = Acc::new("four_sides_witness", abs);
    let mut double_ear = Acc::new("double_ear_inequality", abs);
    let mut monotone = Acc::new("vertex_removal_monotonicity", abs);
    let mut piece = Acc::new("vertex_removal_piece_area", abs);

    for i in 0..cfg.samples {
        let sample_seed = cfg.seed.wrapping_add(i as u64);
        let k = random_convex_polygon(&SamplerConfig::new(n, sample_seed))?;
        let v = k.edge_vectors();
        plucker.record(plucker_residual(&[v[0], v[1 % n], v[2 % n], v[3 % n]]));
        if n >= 6 {
            witness.record(lemma_four_sides_index(&k, &cfg.tol).map(|w| -w.slack));
        }
        if n == 6 {
            double_ear.record(
                random_hexagon_params(sample_seed)
                    .and_then(|p| hexagon_double_ear_slack(&p).map(|s| -s)),
            );
        }
        for (j, &p) in grid.iter().enumerate() {
            ear.record(
                area_ratio(&k, p)
                    .map(|rep| (rep.ratio - ear_decomposition_ratio(&k, p)).abs() / rep.ratio),
            );
            if j == 0 {
                centroid.record(Ok(centroid_drift(&k, p, CENTROID_STEPS)));
            }
            match n {
                3 | 4 => closed.record(area_ratio(&k, p).and_then(|rep| {
                    let c = closed_form_ratio(n, p)?;
                    Ok((rep.ratio - c).abs() / c)
                })),
                _ => bounds.record(bound_excess(&k, p)),
            }
            if n == 5 {
                recurrence.record(recurrence_residual(&k, p));
                match pentagon_identity_residuals(&k, p) {
                    Ok(res) => {
                        delta1.record(Ok(res.delta1));
                        tsd.record(Ok(res.tsd));
                        s_prime.record(Ok(res.s_prime));
                        elimination.record(Ok(res.elimination));
                    }
                    Err(e) => {
                        for acc in [&mut delta1, &mut tsd, &mut s_prime, &mut elimination] {
                            acc.record(Err(e.clone()));
                        }
                    }
                }
            }
            if n >= 7 {
                match remove_vertex_check(&k, p, &cfg.tol) {
                    Ok(out) => {
                        monotone.record(Ok(out.ratio_l - out.ratio_k));
                        piece.record(Ok((out.a23 - out.area_p) / k.area()));
                    }
                    Err(e) => {
                        monotone.record(Err(e.clone()));
                        piece.record(Err(e));
                    }
                }
            }
        }
    }

    let mut checks = vec![ear.finish(), centroid.finish(), plucker.finish()];
    match n {
        3 | 4 => checks.push(closed.finish()),
        5 => checks.extend([
            bounds.finish(),
            recurrence.finish(),
            delta1.finish(),
            tsd.finish(),
            s_prime.finish(),
            elimination.finish(),
        ]),
        _ => {
            checks.push(bounds.finish());
            checks.push(witness.finish());
            if n == 6 {
                checks.push(double_ear.finish());
            } else {
                checks.push(monotone.finish());
                checks.push(piece.finish());
            }
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(Report {
        n,
        seed: cfg.seed,
        samples: cfg.samples,
        m_grid: cfg.m_grid.clone(),
        checks,
        pass,
    })
}
