//! Range of area ratios hit by sampled pentagons at m = 1/2, and the worst
//! closed-form error over sampled triangles and quadrilaterals.

use kasner_core::kasner::{area_ratio, closed_form_ratio};
use kasner_core::sampler::sample_many;
use kasner_core::KasnerParams;

fn main() -> kasner_core::Result<()> {
    let half = KasnerParams::midpoint();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for k in sample_many(5, 0, 10_000)? {
        let r = area_ratio(&k, half)?.ratio;
        lo = lo.min(r);
        hi = hi.max(r);
    }
    println!("pentagons at m = 1/2: [{lo:.4}, {hi:.4}]");

    for n in [3, 4] {
        let mut worst = 0.0f64;
        for k in sample_many(n, 0, 10_000)? {
            for j in 1..10 {
                let p = KasnerParams::new(j as f64 / 10.0)?;
                let c = closed_form_ratio(n, p)?;
                worst = worst.max((area_ratio(&k, p)?.ratio - c).abs() / c);
            }
        }
        println!("n = {n}: worst relative closed-form error {worst:e}");
    }
    Ok(())
}
