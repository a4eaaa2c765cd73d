//! Fixtures shared by the criterion benches.

use pantsqc_core::{HalfPlanePoint, MapAssembly, YPieceParams};

/// Parameter tuples spanning the verification grid corners.
pub const TUPLES: [(f64, f64, f64); 3] = [(1.0, 1.0, 0.25), (0.3, 6.0, 0.05), (6.0, 6.0, 0.5)];

pub fn assembly(l1: f64, l2: f64, eps: f64) -> MapAssembly {
    MapAssembly::new(&YPieceParams::new(l1, l2, eps).expect("grid tuple")).expect("grid tuple")
}

/// Points of the front hexagon: one per lower piece plus one above `β`.
pub fn probe_points(asm: &MapAssembly) -> Vec<HalfPlanePoint> {
    let h = &asm.hex;
    let top = pantsqc_core::hyp::fermi_from_uhp(h.v_b2).r.max(0.1);
    // Falls back towards `c` until the point is inside.
    let mid = |t: f64, frac: f64| {
        let mut r = frac * top;
        for _ in 0..60 {
            let z = pantsqc_core::hyp::uhp_from_fermi(pantsqc_core::FermiCoord::new(t, r))
                .expect("finite point");
            if h.contains(z) {
                return z;
            }
            r *= 0.5;
        }
        panic!("no probe point at t = {t}");
    };
    let mut pts = vec![
        mid(-0.5 * (h.c1 + h.eta1), 0.3),
        mid(-0.5 * h.eta1, 0.95),
        mid(0.5 * h.eta2, 0.95),
        mid(0.5 * (h.c2 + h.eta2), 0.3),
    ];
    let e0 = h.v_e0;
    pts.push(HalfPlanePoint::new(e0.x(), 0.99 * e0.y()).expect("below alpha3"));
    pts
}
