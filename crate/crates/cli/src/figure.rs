//! SVG figures of the hexagons, the sector `Ω` and the mapped grid.

use clap::ValueEnum;
use num_complex::Complex64;
use pantsqc_core::hyp::{fermi_from_uhp, uhp_from_fermi};
use pantsqc_core::pants::beta_point;
use pantsqc_core::qcmap::phi;
use pantsqc_core::{FermiCoord, HalfPlanePoint, MapAssembly, SurfacePoint, YPieceParams};

use crate::svg::Canvas;
use crate::Failure;

pub const DEFAULT_DENSITY: usize = 24;
const SAMPLES: usize = 160;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    /// Both hexagons in Fermi coordinates `(t, r)` of `c`.
    Fermi,
    /// Both hexagons in the upper half plane.
    Uhp,
    /// The part above `β` after the normalizing isometry.
    Omega,
    /// An `x`, `log y` grid of the source pushed forward by `φ`.
    GridImage,
}

type Curve = Vec<Complex64>;

/// The geodesic segment from `a` to `b`.
fn geodesic(a: Complex64, b: Complex64) -> Curve {
    let steps = SAMPLES;
    if (a.re - b.re).abs() <= 1e-12 * a.norm().max(b.norm()).max(1.0) {
        let r = b.im / a.im;
        return (0..=steps)
            .map(|k| Complex64::new(a.re, a.im * r.powf(k as f64 / steps as f64)))
            .collect();
    }
    let c = (b.norm_sqr() - a.norm_sqr()) / (2.0 * (b.re - a.re));
    let radius = (a - c).norm();
    let (ta, tb) = ((a - c).arg(), (b - c).arg());
    (0..=steps)
        .map(|k| {
            let th = ta + (tb - ta) * k as f64 / steps as f64;
            Complex64::new(c + radius * th.cos(), radius * th.sin())
        })
        .collect()
}

fn segment(a: Complex64, b: Complex64) -> Curve {
    (0..=SAMPLES)
        .map(|k| a + (b - a) * (k as f64 / SAMPLES as f64))
        .collect()
}

fn loop_of(
    vertices: &[Complex64],
    side: impl Fn(Complex64, Complex64, usize) -> Curve,
) -> Vec<Curve> {
    (0..vertices.len())
        .map(|k| side(vertices[k], vertices[(k + 1) % vertices.len()], k))
        .collect()
}

fn source_sides(asm: &MapAssembly) -> Vec<Curve> {
    let v: Vec<Complex64> = asm
        .hex
        .source_polygon()
        .iter()
        .map(|p| p.to_complex())
        .collect();
    loop_of(&v, |a, b, _| geodesic(a, b))
}

fn target_vertices(asm: &MapAssembly) -> [Complex64; 6] {
    let h = &asm.hex;
    let top = asm.top_height();
    [
        h.v_a1p.to_complex(),
        h.v_c1p.to_complex(),
        h.v_c2p.to_complex(),
        h.v_a2p.to_complex(),
        Complex64::new(h.a2, top),
        Complex64::new(h.a1, top),
    ]
}

fn target_sides(asm: &MapAssembly) -> Vec<Curve> {
    // The top side is a horocycle, drawn straight.
    loop_of(&target_vertices(asm), |a, b, k| {
        if k == 4 {
            segment(a, b)
        } else {
            geodesic(a, b)
        }
    })
}

fn beta_curve(asm: &MapAssembly) -> Curve {
    let (lo, hi) = asm.hex.beta_range();
    (0..=SAMPLES)
        .filter_map(|k| beta_point(&asm.hex, lo + (hi - lo) * k as f64 / SAMPLES as f64).ok())
        .map(|p| p.to_complex())
        .collect()
}

/// Fermi lines `t = −η₁, 0, η₂` up to `β`.
fn seams(asm: &MapAssembly) -> Vec<Curve> {
    let h = &asm.hex;
    [-h.eta1, 0.0, h.eta2]
        .iter()
        .map(|&t| {
            (0..=SAMPLES)
                .filter_map(|k| {
                    uhp_from_fermi(FermiCoord::new(t, h.lambda * k as f64 / SAMPLES as f64)).ok()
                })
                .map(|p| p.to_complex())
                .take_while(|&z| h.signed_dist_to_alpha3(z) < -h.w)
                .collect()
        })
        .collect()
}

fn source_labels(asm: &MapAssembly) -> Vec<(&'static str, HalfPlanePoint)> {
    let h = &asm.hex;
    vec![
        ("A1", h.v_a1),
        ("A2", h.v_a2),
        ("C1", h.v_c1),
        ("C2", h.v_c2),
        ("E0", h.v_e0),
        ("E1", h.v_e1),
        ("E2", h.v_e2),
        ("B1", h.v_b1),
        ("B2", h.v_b2),
        ("H1", h.v_h1),
        ("H2", h.v_h2),
        ("D0", h.v_d0),
        ("D1", h.v_d1),
        ("D2", h.v_d2),
    ]
}

fn target_labels(asm: &MapAssembly) -> Vec<(&'static str, HalfPlanePoint)> {
    let h = &asm.hex;
    vec![
        ("A'1", h.v_a1p),
        ("A'2", h.v_a2p),
        ("C'1", h.v_c1p),
        ("C'2", h.v_c2p),
    ]
}

fn hexagons(asm: &MapAssembly, title: &str, chart: impl Fn(Complex64) -> (f64, f64)) -> Canvas {
    let mut c = Canvas::new(title);
    for s in target_sides(asm) {
        c.path(s.into_iter().map(&chart), "target");
    }
    for s in source_sides(asm) {
        c.path(s.into_iter().map(&chart), "side");
    }
    for s in seams(asm) {
        c.path(s.into_iter().map(&chart), "seam");
    }
    c.path(beta_curve(asm).into_iter().map(&chart), "beta");
    for (label, p) in source_labels(asm).into_iter().chain(target_labels(asm)) {
        c.vertex(label, chart(p.to_complex()));
    }
    c
}

fn omega(asm: &MapAssembly) -> Canvas {
    let h = &asm.hex;
    let n = |z: Complex64| {
        let w = asm.n_map(z);
        (w.re, w.im)
    };
    let mut c = Canvas::new("The sector Omega");
    let inner = 1.0f64;
    let outer = (0.5 * h.eps).exp();
    let (b1, b2) = (n(h.v_b1.to_complex()), n(h.v_b2.to_complex()));
    for (radius, end) in [(inner, b1), (outer, b2)] {
        let t_end = end.1.atan2(end.0);
        let arc = (0..=SAMPLES).map(|k| {
            let th = std::f64::consts::FRAC_PI_2
                + (t_end - std::f64::consts::FRAC_PI_2) * k as f64 / SAMPLES as f64;
            (radius * th.cos(), radius * th.sin())
        });
        c.path(arc, "seam");
    }
    let e1 = h.v_e1.to_complex();
    let e2 = h.v_e2.to_complex();
    let (b1z, b2z) = (h.v_b1.to_complex(), h.v_b2.to_complex());
    c.path(geodesic(e1, e2).into_iter().map(n), "side");
    c.path(geodesic(b1z, e1).into_iter().map(n), "side");
    c.path(geodesic(b2z, e2).into_iter().map(n), "side");
    c.path(beta_curve(asm).into_iter().map(n), "beta");
    c.path([(0.0, 0.0), (0.0, outer)], "axis");
    c.path([(0.0, 0.0), b2], "axis");
    for (label, z) in [
        ("n(E1)", e1),
        ("n(E2)", e2),
        ("n(B1)", b1z),
        ("n(B2)", b2z),
        ("n(E0)", h.v_e0.to_complex()),
    ] {
        c.vertex(label, n(z));
    }
    c
}

fn grid_image(asm: &MapAssembly, density: usize) -> Canvas {
    let h = &asm.hex;
    let mut c = Canvas::new(format!(
        "Image of a {density}x{density} coordinate grid under phi"
    ));
    for s in target_sides(asm) {
        c.path(s.into_iter().map(|z| (z.re, z.im)), "target");
    }
    let corners: Vec<HalfPlanePoint> = h.source_polygon().into_iter().chain([h.v_e0]).collect();
    let (x0, x1) = corners
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |b, p| {
            (b.0.min(p.x()), b.1.max(p.x()))
        });
    let (y0, y1) = corners
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |b, p| {
            (b.0.min(p.y()), b.1.max(p.y()))
        });
    let image = |u: f64, v: f64| -> (f64, f64) {
        HalfPlanePoint::new(x0 + (x1 - x0) * u, y0 * (y1 / y0).powf(v))
            .ok()
            .filter(|&z| h.contains(z))
            .and_then(|z| phi(asm, SurfacePoint::front(z)).ok())
            .map(|q| (q.z.x(), q.z.y()))
            .unwrap_or((f64::NAN, f64::NAN))
    };
    let frac = |k: usize| (k as f64 + 0.5) / density as f64;
    let along = |k: usize| k as f64 / SAMPLES as f64;
    for k in 0..density {
        c.path((0..=SAMPLES).map(|j| image(frac(k), along(j))), "grid");
        c.path((0..=SAMPLES).map(|j| image(along(j), frac(k))), "grid");
    }
    let mid = asm.mid_height();
    c.path([(h.a1, mid), (h.a2, mid)], "beta");
    for (label, p) in target_labels(asm) {
        c.vertex(label, (p.x(), p.y()));
    }
    c.vertex("D'0", (0.0, 1.0));
    c
}

pub fn render(p: &YPieceParams, which: Which, density: usize) -> Result<String, Failure> {
    let asm = MapAssembly::new(p).map_err(Failure::usage)?;
    let canvas = match which {
        Which::Fermi => hexagons(&asm, "Hexagons in Fermi coordinates", |z| {
            let f = fermi_from_uhp(HalfPlanePoint::new(z.re, z.im).unwrap_or(HalfPlanePoint::I));
            (f.t, f.r)
        }),
        Which::Uhp => hexagons(&asm, "Hexagons in the upper half plane", |z| (z.re, z.im)),
        Which::Omega => omega(&asm),
        Which::GridImage => grid_image(&asm, density),
    };
    Ok(canvas.render())
}
