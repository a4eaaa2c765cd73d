//! A tiny SVG 1.1 writer. Shapes are collected in plot coordinates (y up)
//! and scaled into an 800×600 view box when rendered.

use std::fmt::Write;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 40.0;

enum Shape {
    Path {
        points: Vec<(f64, f64)>,
        class: &'static str,
    },
    Vertex {
        at: (f64, f64),
        label: String,
    },
}

pub struct Canvas {
    title: String,
    shapes: Vec<Shape>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

impl Canvas {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            shapes: Vec::new(),
        }
    }

    /// Adds a polyline; non-finite points split it into pieces.
    pub fn path(&mut self, points: impl IntoIterator<Item = (f64, f64)>, class: &'static str) {
        let mut run = Vec::new();
        for p in points {
            if p.0.is_finite() && p.1.is_finite() {
                run.push(p);
            } else if !run.is_empty() {
                self.push_run(std::mem::take(&mut run), class);
            }
        }
        self.push_run(run, class);
    }

    fn push_run(&mut self, points: Vec<(f64, f64)>, class: &'static str) {
        if points.len() >= 2 {
            self.shapes.push(Shape::Path { points, class });
        }
    }

    pub fn vertex(&mut self, label: impl Into<String>, at: (f64, f64)) {
        self.shapes.push(Shape::Vertex {
            at,
            label: label.into(),
        });
    }

    fn bounds(&self) -> (f64, f64, f64, f64) {
        let mut b = (
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        );
        let mut grow = |(x, y): (f64, f64)| {
            b = (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y));
        };
        for s in &self.shapes {
            match s {
                Shape::Path { points, .. } => points.iter().copied().for_each(&mut grow),
                Shape::Vertex { at, .. } => grow(*at),
            }
        }
        if !(b.0 < b.2) {
            b = (b.0 - 1.0, b.1, b.2 + 1.0, b.3);
        }
        if !(b.1 < b.3) {
            b = (b.0, b.1 - 1.0, b.2, b.3 + 1.0);
        }
        b
    }

    pub fn render(&self) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let sx = (WIDTH - 2.0 * MARGIN) / (x1 - x0);
        let sy = (HEIGHT - 2.0 * MARGIN) / (y1 - y0);
        let map = |(x, y): (f64, f64)| (MARGIN + (x - x0) * sx, HEIGHT - MARGIN - (y - y0) * sy);

        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
        );
        let _ = writeln!(out, "<title>{}</title>", escape(&self.title));
        out.push_str(concat!(
            "<style>",
            "path{fill:none;stroke-linejoin:round}",
            ".side{stroke:#111;stroke-width:1.6}",
            ".target{stroke:#1f5fa8;stroke-width:1.4;stroke-dasharray:6 3}",
            ".beta{stroke:#c0392b;stroke-width:1.4}",
            ".seam{stroke:#888;stroke-width:0.8;stroke-dasharray:3 3}",
            ".axis{stroke:#bbb;stroke-width:0.6}",
            ".grid{stroke:#2e8b57;stroke-width:0.5}",
            "text{font-family:sans-serif;font-size:12px}",
            "circle{fill:#111}",
            "</style>\n"
        ));
        for s in &self.shapes {
            match s {
                Shape::Path { points, class } => {
                    let mut d = String::new();
                    for (k, &p) in points.iter().enumerate() {
                        let (x, y) = map(p);
                        let _ = write!(d, "{}{x:.2},{y:.2}", if k == 0 { "M" } else { " L" });
                    }
                    let _ = writeln!(out, "<path class=\"{class}\" d=\"{d}\"/>");
                }
                Shape::Vertex { at, label } => {
                    let (x, y) = map(*at);
                    let label = escape(label);
                    let _ = writeln!(
                        out,
                        "<g class=\"vertex\" data-label=\"{label}\" data-x=\"{}\" data-y=\"{}\"><circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.5\"/><text x=\"{:.2}\" y=\"{:.2}\">{label}</text></g>",
                        at.0,
                        at.1,
                        x + 4.0,
                        y - 4.0
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}
