//! SVG rendering of a point set, its partition lines, and a tour.
//!
//! Fixed 1000 x 1000 canvas, viewport fitted to the bounding box with a 5%
//! margin; partition lines dashed, tour edges solid, any vertex failing the
//! angle predicate circled (never expected for constructed tours).

use acute_tours::geom::PointSet;
use acute_tours::partition::EquitablePartition;
use acute_tours::verify::VerificationReport;
use std::fmt::Write as _;

const CANVAS: f64 = 1000.0;

struct Viewport {
    min_x: f64,
    min_y: f64,
    scale: f64,
    offset_x: f64,
    offset_y: f64,
}

impl Viewport {
    fn fit(points: &PointSet) -> Viewport {
        let xs = points.points().iter().map(|p| p.x as f64);
        let ys = points.points().iter().map(|p| p.y as f64);
        let (min_x, max_x) = (xs.clone().fold(f64::INFINITY, f64::min), xs.fold(f64::NEG_INFINITY, f64::max));
        let (min_y, max_y) = (ys.clone().fold(f64::INFINITY, f64::min), ys.fold(f64::NEG_INFINITY, f64::max));
        let width = (max_x - min_x).max(1.0);
        let height = (max_y - min_y).max(1.0);
        let span = width.max(height) * 1.05;
        let scale = CANVAS / span;
        // Center the drawing on the canvas.
        let offset_x = (CANVAS - width * scale) / 2.0;
        let offset_y = (CANVAS - height * scale) / 2.0;
        Viewport { min_x, min_y, scale, offset_x, offset_y }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let cx = (x - self.min_x) * self.scale + self.offset_x;
        let cy = CANVAS - ((y - self.min_y) * self.scale + self.offset_y);
        (cx, cy)
    }
}

pub fn render(
    points: &PointSet,
    partition: &EquitablePartition,
    order: &[usize],
    report: &VerificationReport,
) -> String {
    let vp = Viewport::fit(points);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = CANVAS
    );
    let _ = writeln!(out, r#"<rect width="{c}" height="{c}" fill="white"/>"#, c = CANVAS);

    // Partition lines, dashed, drawn well past the viewport.
    let (ox, oy) = partition.frame().origin_f64();
    let reach = 4.0 * CANVAS / vp.scale;
    for dir in [partition.frame().u(), partition.frame().v()] {
        let len = ((dir.0 as f64).powi(2) + (dir.1 as f64).powi(2)).sqrt();
        let (dx, dy) = (dir.0 as f64 / len, dir.1 as f64 / len);
        let (x1, y1) = vp.map(ox - dx * reach, oy - dy * reach);
        let (x2, y2) = vp.map(ox + dx * reach, oy + dy * reach);
        let _ = writeln!(
            out,
            r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#888" stroke-width="1.5" stroke-dasharray="8 6"/>"##
        );
    }

    // Tour edges, solid, closed.
    let mut path = String::new();
    for &i in order {
        let p = points[i];
        let (x, y) = vp.map(p.x as f64, p.y as f64);
        let _ = write!(path, "{x:.2},{y:.2} ");
    }
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="none" stroke="#1f6fb2" stroke-width="1.5"/>"##,
        path.trim_end()
    );

    // Points.
    for p in points.points() {
        let (x, y) = vp.map(p.x as f64, p.y as f64);
        let _ = writeln!(out, r##"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="#222"/>"##);
    }

    // Vertices that failed the angle predicate, if any.
    for &(pos, _) in &report.violations {
        let p = points[order[pos]];
        let (x, y) = vp.map(p.x as f64, p.y as f64);
        let _ = writeln!(
            out,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="9" fill="none" stroke="#d43a2f" stroke-width="2.5"/>"##
        );
    }
    out.push_str("</svg>\n");
    out
}
