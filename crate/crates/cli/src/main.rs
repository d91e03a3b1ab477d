mod args;
mod svg;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use kasner_core::analysis::{empirical_extremize, Mode};
use kasner_core::io::{
    points_from_csv, points_from_json, polygon_to_json, to_json_string, SequenceJson,
};
use kasner_core::kasner::{
    area_ratio, bound_interval, pentagon_recurrence_coeffs, recurrence_residual, sequence,
};
use kasner_core::parametric::{
    build_hexagon, build_pentagon, hexagon_lower_family, hexagon_upper_family,
    ngon_lower_construction, ngon_upper_construction, pentagon_lower_family, pentagon_upper_family,
    ParamFile,
};
use kasner_core::sampler::random_convex_polygon;
use kasner_core::verify::{parse_m_grid, run_suite, VerifyConfig};
use kasner_core::{
    BoundInterval, ConvexPolygon, KasnerParams, Polygon, RatioReport, SamplerConfig, Tolerance,
};

use args::{Cli, Command, FamilyKind, ModeArg, Side};

const TOL_ENV: &str = "KASNER_TOL_ABS";

#[derive(Debug)]
enum Failure {
    /// Bad flags, input or parameters: exit 2.
    Invalid(String),
    /// A verification suite ran and failed: exit 3.
    Verification,
    /// Anything else: exit 1.
    Internal(String),
}

impl From<kasner_core::Error> for Failure {
    fn from(e: kasner_core::Error) -> Self {
        use kasner_core::Error as E;
        match e {
            E::LemmaViolation(_) | E::BudgetExhausted(_) | E::RetryExhausted(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn tolerance() -> Outcome<Tolerance> {
    let base = Tolerance::default();
    match std::env::var(TOL_ENV) {
        Err(_) => Ok(base),
        Ok(raw) => {
            let abs: f64 = raw
                .trim()
                .parse()
                .map_err(|_| Failure::Invalid(format!("{TOL_ENV}={raw:?} is not a number")))?;
            base.with_abs(abs)
                .map_err(|e| Failure::Invalid(format!("{TOL_ENV}: {e}")))
        }
    }
}

fn kasner(m: f64) -> Outcome<KasnerParams> {
    KasnerParams::new(m).map_err(|e| Failure::Invalid(format!("--m: {e}")))
}

fn read_polygon(path: &Path, tol: &Tolerance) -> Outcome<ConvexPolygon> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let points = match ext.as_deref() {
        Some("csv") => points_from_csv(&text)?,
        Some("json") => points_from_json(&text)?,
        _ => points_from_json(&text).or_else(|_| points_from_csv(&text))?,
    };
    let polygon = Polygon::with_tolerance(points, tol)?;
    Ok(ConvexPolygon::from_polygon(polygon, tol)?)
}

/// Writes via a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Outcome<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let io_err = |e: std::io::Error| Failure::Internal(format!("writing {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn emit(out: Option<&Path>, mut text: String) -> Outcome<()> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => write_atomic(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct BoundsOut {
    n: usize,
    m: f64,
    #[serde(flatten)]
    interval: BoundInterval,
}

#[derive(Serialize)]
struct RecurrenceOut {
    m: f64,
    c1: f64,
    c2: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<f64>,
}

#[derive(Serialize)]
struct RatioOut {
    #[serde(flatten)]
    report: RatioReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<f64>,
}

#[derive(Serialize)]
struct FamilyOut<P: Serialize> {
    kind: &'static str,
    param: f64,
    params: P,
    fraction: f64,
    closed_form: f64,
    #[serde(flatten)]
    report: RatioReport,
}

#[derive(Serialize)]
struct ExtremizeOut {
    n: usize,
    m: f64,
    mode: Mode,
    ratio: f64,
    lower: f64,
    upper: f64,
    restart: usize,
    evaluations: usize,
    polygon: kasner_core::io::PolygonJson,
}

fn family(
    kind: FamilyKind,
    param: f64,
    m: f64,
    polygon_out: Option<&Path>,
    out: Option<&Path>,
) -> Outcome<()> {
    let p = kasner(m)?;
    let (text, poly) = match kind {
        FamilyKind::PentagonLower | FamilyKind::PentagonUpper => {
            let (name, params) = if kind == FamilyKind::PentagonLower {
                ("pentagon-lower", pentagon_lower_family(param)?)
            } else {
                ("pentagon-upper", pentagon_upper_family(param)?)
            };
            let poly = build_pentagon(&params)?;
            let rec = FamilyOut {
                kind: name,
                param,
                params,
                fraction: params.fraction(),
                closed_form: ParamFile::Pentagon(params).closed_ratio(p)?,
                report: area_ratio(&poly, p)?,
            };
            (to_json_string(&rec), poly)
        }
        FamilyKind::HexagonLower | FamilyKind::HexagonUpper => {
            let (name, params) = if kind == FamilyKind::HexagonLower {
                ("hexagon-lower", hexagon_lower_family(param)?)
            } else {
                ("hexagon-upper", hexagon_upper_family(param)?)
            };
            let poly = build_hexagon(&params)?;
            let rec = FamilyOut {
                kind: name,
                param,
                params,
                fraction: params.fraction(),
                closed_form: ParamFile::Hexagon(params).closed_ratio(p)?,
                report: area_ratio(&poly, p)?,
            };
            (to_json_string(&rec), poly)
        }
    };
    if let Some(path) = polygon_out {
        write_atomic(path, &(polygon_to_json(&poly) + "\n"))?;
    }
    emit(out, text)
}

fn run(cli: Cli) -> Outcome<()> {
    let tol = tolerance()?;
    match cli.command {
        Command::Descend(a) => {
            let p = kasner(a.m)?;
            let k = read_polygon(&a.input, &tol)?;
            let seq = sequence(&k, p, a.t)?;
            let json = SequenceJson::from_polygons(seq.iter().map(|c| c.polygon()));
            emit(a.output.out.as_deref(), to_json_string(&json))
        }
        Command::Ratio(a) => {
            let p = kasner(a.m)?;
            let out = if let Some(path) = &a.source.input {
                RatioOut {
                    report: area_ratio(&read_polygon(path, &tol)?, p)?,
                    closed_form: None,
                }
            } else {
                let path = a.source.params.as_ref().expect("clap enforces one source");
                let text = fs::read_to_string(path).map_err(|e| {
                    Failure::Invalid(format!("cannot read {}: {e}", path.display()))
                })?;
                let params = ParamFile::from_json(&text)?;
                RatioOut {
                    report: area_ratio(&params.build()?, p)?,
                    closed_form: Some(params.closed_ratio(p)?),
                }
            };
            emit(a.output.out.as_deref(), to_json_string(&out))
        }
        Command::Bounds(a) => {
            let p = kasner(a.m)?;
            let interval = bound_interval(a.n, p)?;
            emit(
                None,
                to_json_string(&BoundsOut {
                    n: a.n,
                    m: a.m,
                    interval,
                }),
            )
        }
        Command::Recurrence(a) => {
            let p = kasner(a.m)?;
            let (c1, c2) = pentagon_recurrence_coeffs(p);
            let residual = match &a.input {
                Some(path) => Some(recurrence_residual(&read_polygon(path, &tol)?, p)?),
                None => None,
            };
            emit(
                None,
                to_json_string(&RecurrenceOut {
                    m: a.m,
                    c1,
                    c2,
                    residual,
                }),
            )
        }
        Command::PentagonFamily(a) => {
            let kind = match a.kind {
                Side::Lower => FamilyKind::PentagonLower,
                Side::Upper => FamilyKind::PentagonUpper,
            };
            family(
                kind,
                a.param,
                a.m,
                a.polygon.as_deref(),
                a.output.out.as_deref(),
            )
        }
        Command::HexagonFamily(a) => {
            let kind = match a.kind {
                Side::Lower => FamilyKind::HexagonLower,
                Side::Upper => FamilyKind::HexagonUpper,
            };
            family(
                kind,
                a.param,
                a.m,
                a.polygon.as_deref(),
                a.output.out.as_deref(),
            )
        }
        Command::Extremal(a) => family(
            a.kind,
            a.param,
            a.m,
            a.polygon.as_deref(),
            a.output.out.as_deref(),
        ),
        Command::ConstructLower(a) => {
            let c = ngon_lower_construction(a.n, a.eps)?;
            construction(c.polygon, a.m, a.output.out.as_deref())
        }
        Command::ConstructUpper(a) => {
            let c = ngon_upper_construction(a.n, a.eps)?;
            construction(c.polygon, a.m, a.output.out.as_deref())
        }
        Command::Sample(a) => {
            let mut text = String::new();
            for i in 0..a.count {
                let cfg = SamplerConfig::new(a.n, a.seed.wrapping_add(i as u64))
                    .with_scale(a.scale)
                    .with_anisotropy(a.anisotropy);
                let k = random_convex_polygon(&cfg).map_err(|e| match e {
                    kasner_core::Error::InvalidParameter(_) => Failure::Invalid(e.to_string()),
                    other => other.into(),
                })?;
                text.push_str(&polygon_to_json(&k));
                text.push('\n');
            }
            emit(a.output.out.as_deref(), text)
        }
        Command::Verify(a) => {
            let cfg = VerifyConfig {
                n: a.n,
                samples: a.samples,
                m_grid: parse_m_grid(&a.m_grid)?,
                seed: a.seed,
                tol,
            };
            let report = run_suite(&cfg)?;
            emit(a.output.out.as_deref(), to_json_string(&report))?;
            if report.pass {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Extremize(a) => {
            let p = kasner(a.m)?;
            let mode = match a.mode {
                ModeArg::Min => Mode::Min,
                ModeArg::Max => Mode::Max,
            };
            let b = bound_interval(a.n, p)?;
            let best = empirical_extremize(a.n, p, mode, a.budget, a.seed)?;
            let out = ExtremizeOut {
                n: a.n,
                m: a.m,
                mode,
                ratio: best.ratio,
                lower: b.lower,
                upper: b.upper,
                restart: best.restart,
                evaluations: best.evaluations,
                polygon: (&best.polygon).into(),
            };
            emit(a.output.out.as_deref(), to_json_string(&out))
        }
        Command::Render(a) => {
            let p = kasner(a.m)?;
            let k = read_polygon(&a.input, &tol)?;
            let seq: Vec<Polygon> = sequence(&k, p, a.t)?
                .into_iter()
                .map(ConvexPolygon::into_polygon)
                .collect();
            write_atomic(&a.out, &svg::render(&seq))
        }
    }
}

fn construction(poly: ConvexPolygon, m: Option<f64>, out: Option<&Path>) -> Outcome<()> {
    if let Some(m) = m {
        let report = area_ratio(&poly, kasner(m)?)?;
        eprintln!("{}", to_json_string(&report));
    }
    emit(out, polygon_to_json(&poly))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(3)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
