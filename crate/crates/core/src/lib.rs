//! Kasner polygon descent and the area ratio `Δ(K′)/Δ(K)` over convex polygons.
//!
//! * [`geom`]: wedge product, polygons, convexity.
//! * [`kasner`]: descendants, area ratios, closed forms, bounds, the pentagon
//!   recurrence and the affine-regularity defect.
//! * [`parametric`]: canonical pentagon and hexagon coordinates, extremal
//!   families, and the two n-gon constructions approaching the bounds.
//! * [`analysis`]: identity and lemma checks, plus an empirical extremizer.
//! * [`sampler`]: seeded random convex polygons.
//! * [`verify`]: aggregated verification suites with a JSON report.
//! * [`io`]: polygon JSON/CSV and fixed-precision JSON output.

pub mod analysis;
pub mod error;
pub mod geom;
pub mod io;
pub mod kasner;
pub mod parametric;
pub mod sampler;
pub mod verify;

pub use error::{Error, Result};
pub use geom::{wedge, ConvexPolygon, Polygon, Tolerance, Vec2};
pub use kasner::{BoundInterval, KasnerParams, RatioReport};
pub use sampler::SamplerConfig;
