//! Static SVG plot of a canonical polygon over its point cloud.

use hn_codes::hn::CanonicalPolygon;
use hn_codes::Rational;
use std::fmt::Write;

const WIDTH: f64 = 560.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 56.0;

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn label(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders the polygon as a polyline with labelled vertices, the raw
/// `(rank, degree)` points as hollow markers, and integer ticks on both axes.
pub fn render(polygon: &CanonicalPolygon, points: &[(usize, i64)], title: &str) -> String {
    let xs = polygon.vertices().iter().map(|v| v.0 as f64).chain(points.iter().map(|p| p.0 as f64));
    let ys: Vec<f64> = polygon
        .vertices()
        .iter()
        .map(|v| to_f64(v.1))
        .chain(points.iter().map(|p| p.1 as f64))
        .collect();
    let x_max = xs.fold(1.0f64, f64::max).ceil();
    let y_min = ys.iter().copied().fold(0.0f64, f64::min).floor();
    let y_max = ys.iter().copied().fold(1.0f64, f64::max).ceil();
    let sx = |x: f64| MARGIN + x / x_max * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y_min) / (y_max - y_min) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="20" text-anchor="middle" font-size="13">{}</text>"#, WIDTH / 2.0, escape(title));
    // axes
    let (x0, y0) = (sx(0.0), sy(y_min.max(0.0).min(y_max)));
    let _ = writeln!(s, r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="black"/>"#, sx(x_max));
    let _ = writeln!(s, r#"<line x1="{x0:.2}" y1="{:.2}" x2="{x0:.2}" y2="{:.2}" stroke="black"/>"#, sy(y_min), sy(y_max));
    for i in 0..=x_max as i64 {
        let x = sx(i as f64);
        let _ = writeln!(s, r#"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#, y0 + 4.0);
        let _ = writeln!(s, r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{i}</text>"#, y0 + 16.0);
    }
    for j in y_min as i64..=y_max as i64 {
        let y = sy(j as f64);
        let _ = writeln!(s, r#"<line x1="{:.2}" y1="{y:.2}" x2="{x0:.2}" y2="{y:.2}" stroke="black"/>"#, x0 - 4.0);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{j}</text>"#, x0 - 7.0, y + 4.0);
    }
    let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">rank</text>"#, WIDTH / 2.0, HEIGHT - 12.0);
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">degree</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    // point cloud
    for &(x, y) in points {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="none" stroke="gray"/>"#,
            sx(x as f64),
            sy(y as f64)
        );
    }
    // polygon
    let path: Vec<String> = polygon
        .vertices()
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", sx(x as f64), sy(to_f64(y))))
        .collect();
    let _ = writeln!(s, r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#, path.join(" "));
    for &(x, y) in polygon.vertices() {
        let (cx, cy) = (sx(x as f64), sy(to_f64(y)));
        let _ = writeln!(s, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="3" fill="steelblue"/>"#);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">({x}, {})</text>"#, cx + 5.0, cy - 6.0, label(y));
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plot_has_polyline_markers_and_labels() {
        let p = CanonicalPolygon::from_vertices(vec![
            (0, Rational::from_integer(5)),
            (4, Rational::from_integer(3)),
            (7, Rational::from_integer(0)),
        ])
        .unwrap();
        let svg = render(&p, &[(0, 5), (1, 4), (4, 3), (7, 0)], "code polygon");
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches(r#"fill="none" stroke="gray""#).count(), 4);
        assert!(svg.contains(">(4, 3)</text>"));
        // ticks 0..=7 on x, 0..=5 on y
        assert!(svg.contains(">7</text>"));
        assert_eq!(render(&p, &[], "t"), render(&p, &[], "t"));
    }
}
