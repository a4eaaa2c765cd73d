use proptest::prelude::*;

use pantsqc_core::hyp::{fermi_from_uhp, hyp_dist, mobius_rgh, mobius_up, uhp_from_fermi};
use pantsqc_core::qcmap::{delta_cor4, phi, phi_inverse, sinc_ratio};
use pantsqc_core::verify::numeric_beltrami;
use pantsqc_core::{
    solve_hexagon, FermiCoord, HalfPlanePoint, MapAssembly, SurfacePoint, YPieceParams,
};

fn point() -> impl Strategy<Value = HalfPlanePoint> {
    (-3.0..3.0f64, -2.0..2.0f64).prop_map(|(x, ly)| HalfPlanePoint::new(x, 10f64.powf(ly)).unwrap())
}

fn params() -> impl Strategy<Value = YPieceParams> {
    (0.1..8.0f64, 0.1..8.0f64, 0.02..=0.5f64)
        .prop_map(|(l1, l2, e)| YPieceParams::new(l1, l2, e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mobius_maps_are_isometries(z in point(), w in point(), s in -3.0..3.0f64) {
        let d = hyp_dist(z, w);
        prop_assert!((hyp_dist(mobius_up(s, z), mobius_up(s, w)) - d).abs() <= 1e-9 * d.max(1.0));
        prop_assert!((hyp_dist(mobius_rgh(s, z), mobius_rgh(s, w)) - d).abs() <= 1e-9 * d.max(1.0));
    }

    #[test]
    fn fermi_chart_roundtrips(t in -4.0..4.0f64, r in -4.0..4.0f64) {
        let z = uhp_from_fermi(FermiCoord::new(t, r)).unwrap();
        let c = fermi_from_uhp(z);
        prop_assert!((c.t - t).abs() < 1e-10 && (c.r - r).abs() < 1e-10);
    }

    #[test]
    fn hexagons_satisfy_pentagon_relations(p in params()) {
        let h = solve_hexagon(&p).unwrap();
        prop_assert!(h.pentagon_residual() <= 1e-10);
        prop_assert!(h.delta1 >= 0.0 && h.delta2 >= 0.0);
        prop_assert!(h.delta1 / h.eta1 <= p.eps * p.eps / 3.0 + 1e-12);
        prop_assert!(h.delta2 / h.eta2 <= p.eps * p.eps / 3.0 + 1e-12);
    }

    #[test]
    fn phi_roundtrips_inside_the_hexagon(p in params(), u in 0.05..0.95f64, v in 0.02..0.98f64) {
        let asm = MapAssembly::new(&p).unwrap();
        let h = &asm.hex;
        // A point of the hexagon: interpolate along the Fermi line between Γ and its top.
        let t = -h.c1 + (h.c1 + h.c2) * u;
        let mut r_hi = 0.0;
        let mut r = 0.5;
        while h.contains(uhp_from_fermi(FermiCoord::new(t, r)).unwrap()) && r < 50.0 {
            r_hi = r;
            r *= 1.5;
        }
        prop_assume!(r_hi > 0.0);
        let z = uhp_from_fermi(FermiCoord::new(t, r_hi * v)).unwrap();
        prop_assume!(h.contains(z));
        let img = phi(&asm, SurfacePoint::front(z)).unwrap();
        prop_assert!(asm.target_contains(img.z));
        let back = phi_inverse(&asm, img).unwrap();
        prop_assert!(back.z.dist(&z) < 1e-9);
    }

    #[test]
    fn collar_delta_obeys_its_bracket(e in 0.01..=0.5f64, frac in 0.01..=1.0f64) {
        let eb = e * frac;
        let d = delta_cor4(e, eb).unwrap();
        let upper = 2.0 / std::f64::consts::PI * e * sinc_ratio(eb / e);
        prop_assert!(d <= upper + 1e-12);
        prop_assert!(d >= upper - e.powi(4) / 12.0 - 1e-12);
    }

    #[test]
    fn squeeze_dilatation_matches_closed_form(z in point(), d in 0.0..0.6f64) {
        let s = numeric_beltrami(
            |w| Ok(num_complex::Complex64::new(w.re, (1.0 - d) * w.im)),
            z,
            1e-6 * z.to_complex().norm().max(1.0),
        ).unwrap();
        prop_assert!((s.q - 1.0 / (1.0 - d)).abs() < 1e-8);
    }
}
