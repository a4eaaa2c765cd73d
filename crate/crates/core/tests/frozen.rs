//! Values frozen from 40-digit evaluation of the closed forms.

#![allow(clippy::excessive_precision)]

use pantsqc_core::hyp::{fermi_from_uhp, gamma_point, hyp_dist, mobius_up};
use pantsqc_core::pants::{collar_width, reduced_collar};
use pantsqc_core::qcmap::{delta_cor4, MapAssembly};
use pantsqc_core::{solve_hexagon, HalfPlanePoint, YPieceParams};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

struct Frozen {
    params: (f64, f64, f64),
    lambda: f64,
    eps: [f64; 2],
    c: [f64; 2],
    cp: [f64; 2],
    delta: [f64; 2],
    w: f64,
    k_eps: f64,
}

const FROZEN: [Frozen; 3] = [
    Frozen {
        params: (1.0, 1.0, 0.5),
        lambda: 2.8931743055498857,
        eps: [0.125, 0.125],
        c: [1.413745147995692, 1.413745147995692],
        cp: [1.4068291137472953, 1.4068291137472953],
        delta: [0.0069160342483966992, 0.0069160342483966992],
        w: 1.3862943611198906,
        k_eps: 1.0093786964850089,
    },
    Frozen {
        params: (3.0, 6.0, 0.25),
        lambda: 5.2905247217758774,
        eps: [0.023706508652265348, 0.10129349134773465],
        c: [0.45401519114756955, 0.10016652613716541],
        cp: [0.45389573690820641, 0.099656532516443645],
        delta: [0.00011945423936314182, 0.00050999362072176734],
        w: 2.0794415416798359,
        k_eps: 1.000976691773218,
    },
    Frozen {
        params: (0.3, 1.0, 0.05),
        lambda: 5.1423248264739707,
        eps: [0.011820042002240057, 0.013179957997759945],
        c: [2.5922087849484522, 1.4069061374590612],
        cp: [2.5921397083939109, 1.4068291137472953],
        delta: [6.9076554541325705e-5, 7.7023711765978743e-5],
        w: 3.6888794541139362,
        k_eps: 1.0000068469143279,
    },
];

#[test]
fn hexagon_constants_match_high_precision() {
    for f in &FROZEN {
        let (l1, l2, eps) = f.params;
        let h = solve_hexagon(&YPieceParams::new(l1, l2, eps).unwrap()).unwrap();
        assert!(close(h.lambda, f.lambda, 1e-12), "lambda {l1} {l2} {eps}");
        assert!(close(h.w, f.w, 1e-12));
        for (got, want) in [
            ([h.eps1, h.eps2], f.eps),
            ([h.c1, h.c2], f.c),
            ([h.cp1, h.cp2], f.cp),
        ] {
            for i in 0..2 {
                assert!(
                    close(got[i], want[i], 1e-12),
                    "{l1} {l2} {eps}: {} vs {}",
                    got[i],
                    want[i]
                );
            }
        }
        // δ is a small difference; compare relative to itself.
        for (got, want) in [h.delta1, h.delta2].into_iter().zip(f.delta) {
            assert!((got - want).abs() <= 1e-9 * want, "{got} vs {want}");
        }
        let asm = MapAssembly::from_hexagon(h);
        assert!((asm.k_eps - f.k_eps).abs() < 1e-13);
    }
}

#[test]
fn k_eps_at_half_sits_inside_its_bracket() {
    let asm = MapAssembly::new(&YPieceParams::new(1.0, 1.0, 0.5).unwrap()).unwrap();
    let cap = 1.0 + 0.125 * 1.5 / (6.0 * std::f64::consts::PI);
    assert!(asm.k_eps > 1.0 && asm.k_eps < cap);
    assert!((cap - 1.009947).abs() < 1e-6);
}

#[test]
fn geometry_kernel_examples() {
    let i = HalfPlanePoint::I;
    assert!((hyp_dist(i, mobius_up(1.0, i)) - 1.0).abs() < 1e-15);
    let g = gamma_point(1.0);
    assert!((g.x() - 0.7615941559557649).abs() < 1e-15);
    assert!((g.y() - 0.6480542736638855).abs() < 1e-15);
    let d = hyp_dist(i, HalfPlanePoint::new(1.0, 1.0).unwrap());
    assert!((d - 0.9624236501192069).abs() < 1e-15);
    let c = fermi_from_uhp(HalfPlanePoint::new(0.0, 2.0).unwrap());
    assert!(c.t.abs() < 1e-15);
    assert!((c.r - std::f64::consts::LN_2).abs() < 1e-15);
}

#[test]
fn collar_examples() {
    assert!((collar_width(1.0).unwrap() - 1.4068291137472953).abs() < 1e-14);
    assert!((collar_width(2.0 * 1f64.asinh()).unwrap() - 1f64.asinh()).abs() < 1e-14);
    let c = reduced_collar(0.5).unwrap();
    assert!((c.width - 4f64.ln()).abs() < 1e-15);
    assert!((c.boundary_length - 1.0625).abs() < 1e-15);
    assert_eq!(reduced_collar(0.0).unwrap().boundary_length, 1.0);
    assert_eq!(reduced_collar(3.0).unwrap().width, 0.0);
}

#[test]
fn collar_delta_examples() {
    assert!((delta_cor4(0.5, 0.25).unwrap() - 0.35224151781128674).abs() < 1e-15);
    assert!((delta_cor4(0.3, 0.1).unwrap() - 0.19977277028957714).abs() < 1e-15);
    assert!((delta_cor4(0.25, 0.25).unwrap() - 0.25).abs() < 1e-15);
}
