use std::fmt::Write;

use kasner_core::io::fmt_f64;
use kasner_core::Polygon;

const MARGIN: f64 = 0.05;

/// Overlay of `polys` in one SVG 1.1 document, y axis pointing up, one
/// stroke colour per generation and the first polygon's vertex centroid
/// marked.
pub fn render(polys: &[Polygon]) -> String {
    let pts = polys.iter().flat_map(|p| p.vertices().iter());
    let (mut x0, mut x1, mut y0, mut y1) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for v in pts {
        x0 = x0.min(v.x);
        x1 = x1.max(v.x);
        y0 = y0.min(-v.y);
        y1 = y1.max(-v.y);
    }
    let (w, h) = (x1 - x0, y1 - y0);
    let (mx, my) = (MARGIN * w, MARGIN * h);
    let view = [x0 - mx, y0 - my, w + 2.0 * mx, h + 2.0 * my];
    let size = view[2].max(view[3]);
    let stroke = size / 400.0;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{}\">",
        view.map(fmt_f64).join(" ")
    );
    let count = polys.len().max(1);
    for (i, p) in polys.iter().enumerate() {
        let hue = 360.0 * i as f64 / count as f64;
        let points: Vec<String> = p
            .vertices()
            .iter()
            .map(|v| format!("{},{}", fmt_f64(v.x), fmt_f64(-v.y)))
            .collect();
        let _ = writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"hsl({hue:.1}, 70%, 40%)\" stroke-width=\"{}\"/>",
            points.join(" "),
            fmt_f64(stroke)
        );
    }
    if let Some(first) = polys.first() {
        let c = first.centroid();
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>",
            fmt_f64(c.x),
            fmt_f64(-c.y),
            fmt_f64(3.0 * stroke)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use kasner_core::Vec2;

    #[test]
    fn view_box_has_margin() {
        let square = Polygon::new(vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(10.0, 0.0),
            Vec2::new(10.0, 10.0),
            Vec2::new(0.0, 10.0),
        ])
        .unwrap();
        let svg = render(&[square]);
        let expected = [-0.5, -10.5, 11.0, 11.0].map(fmt_f64).join(" ");
        assert!(svg.contains(&format!("viewBox=\"{expected}\"")), "{svg}");
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains("<circle"));
    }
}
