//! The claim suite. Each check samples deterministically (Halton lattices,
//! or a ChaCha stream seeded from [`VerifyConfig::seed`]) so that reruns give
//! identical reports.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use super::jacobian::{default_step, distortion_of, jacobian, numeric_beltrami, BeltramiSample};
use super::report::{BoundCheck, ParamTuple, VerificationReport};
use super::sampling::{
    lower_region, sample_region, seam_clearance, seeded, UnitSquare, SEAM_CLEARANCE,
};
use crate::error::Result;
use crate::hyp::{fermi_c, gamma_point, rgh, uhp_c, up, FermiCoord, HalfPlanePoint};
use crate::pants::Region;
use crate::qcmap::{delta_cor4, phi, phi_inverse, sinc_ratio, MapAssembly, Piece, SurfacePoint};

/// Absolute slack on bounds backed by finite differences.
pub const FD_SLACK: f64 = 1e-5;
/// Slack on analytic identities.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Tolerance for seam continuity and isometry checks.
pub const SEAM_TOL: f64 = 1e-9;
/// Tolerance for boundary coherence along `α_i` and the reduced boundary.
pub const COHERENCE_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub dilatation_points: usize,
    pub curve_samples: usize,
    pub inequality_samples: usize,
    pub coherence_samples: usize,
    pub seam_samples: usize,
    pub collar_pairs: usize,
    pub roundtrip_points: usize,
    pub distortion_points: usize,
    pub conformal_points: usize,
    /// Failure injection for exercising the failure path: replaces the
    /// dilatation bound by 1.
    #[doc(hidden)]
    pub corrupt_bound: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 20_140_801,
            dilatation_points: 10_000,
            curve_samples: 512,
            inequality_samples: 512,
            coherence_samples: 64,
            seam_samples: 128,
            collar_pairs: 100,
            roundtrip_points: 256,
            distortion_points: 4_000,
            conformal_points: 100,
            corrupt_bound: false,
        }
    }
}

fn params_of(asm: &MapAssembly) -> ParamTuple {
    ParamTuple::of(&asm.params())
}

fn point(z: Complex64) -> HalfPlanePoint {
    HalfPlanePoint::from_complex_unchecked(z)
}

fn max_of(v: impl IntoIterator<Item = f64>) -> f64 {
    v.into_iter().fold(f64::NEG_INFINITY, f64::max)
}

fn min_of(v: impl IntoIterator<Item = f64>) -> f64 {
    v.into_iter().fold(f64::INFINITY, f64::min)
}

fn hyp_dist_c(a: Complex64, b: Complex64) -> f64 {
    point(a).dist(&point(b))
}

/// Interior points of every piece, `per_piece` each.
fn piece_samples(asm: &MapAssembly, per_piece: usize) -> Vec<Complex64> {
    Region::ALL
        .iter()
        .flat_map(|&region| {
            let mut src = UnitSquare::halton();
            sample_region(asm, region, per_piece, SEAM_CLEARANCE, &mut src, |_| true)
        })
        .collect()
}

/// Maximal sampled dilatation of `φ` over interior points of every piece.
pub fn check_dilatation(asm: &MapAssembly, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let eps = asm.hex.eps;
    let per_piece = cfg.dilatation_points.div_ceil(Region::ALL.len());
    let pts = piece_samples(asm, per_piece);
    let samples: Vec<(Region, BeltramiSample)> = pts
        .par_iter()
        .map(|&z| {
            let piece = asm.piece_of(z);
            let s = numeric_beltrami(|w| asm.eval_piece(piece, w), point(z), default_step(z))?;
            Ok((asm.hex.region_of(z), s))
        })
        .collect::<Result<_>>()?;
    let bound = if cfg.corrupt_bound {
        1.0
    } else {
        1.0 + 2.0 * eps * eps
    };
    let n = samples.len();
    let q_max = max_of(samples.iter().map(|(_, s)| s.q));
    let q_min = min_of(samples.iter().map(|(_, s)| s.q));
    let mut items = vec![
        BoundCheck::le("q_max", q_max, bound, FD_SLACK).samples(n),
        BoundCheck::ge("q_min", q_min, 1.0, 0.0).samples(n),
        BoundCheck::ge(
            "interior_points",
            n as f64,
            cfg.dilatation_points as f64,
            0.0,
        )
        .samples(n),
    ];
    for region in Region::ALL {
        let qs: Vec<f64> = samples
            .iter()
            .filter(|(r, _)| *r == region)
            .map(|(_, s)| s.q)
            .collect();
        items.push(
            BoundCheck::le(
                format!("q_max.{region}"),
                max_of(qs.iter().copied()),
                bound,
                FD_SLACK,
            )
            .samples(qs.len()),
        );
    }
    Ok(
        VerificationReport::from_items("dilatation", params_of(asm), cfg.seed, items)
            .with_grid_density(n),
    )
}

/// `f` and `β̃₁'` bounds, with central differences of step `1e-6`.
pub fn check_curve_bounds(asm: &MapAssembly, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let h = &asm.hex;
    let eps2 = h.eps * h.eps;
    let n = cfg.curve_samples;
    let two_a = 2.0 * h.a;
    let xs: Vec<f64> = (0..n)
        .map(|k| h.a1 + h.a * (k as f64 + 0.5) / n as f64)
        .collect();
    let fx: Vec<(f64, f64)> = xs
        .par_iter()
        .map(|&x| {
            let step = 1e-6 * x.abs().max(1.0);
            let f = asm.eval_f(x)?;
            let df = (asm.f_unchecked(x + step)? - asm.f_unchecked(x - step)?) / (2.0 * step);
            Ok((f, df))
        })
        .collect::<Result<_>>()?;
    let (lo, hi) = h.beta_range();
    let db: Vec<f64> = (0..n)
        .map(|k| {
            let s = lo + (hi - lo) * (k as f64 + 0.5) / n as f64;
            let step = 1e-6 * s.abs().max(1.0);
            (asm.beta_tilde(s + step).re - asm.beta_tilde(s - step).re) / (2.0 * step)
        })
        .collect();
    let items = vec![
        BoundCheck::ge(
            "f.lower",
            min_of(fx.iter().map(|p| p.0)),
            two_a * (1.0 - eps2 / 8.0),
            FD_SLACK,
        ),
        BoundCheck::le(
            "f.upper",
            max_of(fx.iter().map(|p| p.0)),
            two_a * (1.0 + eps2 / 6.0),
            FD_SLACK,
        ),
        BoundCheck::le(
            "fprime.abs",
            max_of(fx.iter().map(|p| p.1.abs())),
            4.0 / 15.0 * eps2,
            FD_SLACK,
        ),
        BoundCheck::ge(
            "beta_tilde1prime.lower",
            min_of(db.iter().copied()),
            two_a * (1.0 - eps2 / 2.0),
            FD_SLACK,
        ),
        BoundCheck::le(
            "beta_tilde1prime.upper",
            max_of(db.iter().copied()),
            two_a * (1.0 + eps2 / 6.0),
            FD_SLACK,
        ),
    ]
    .into_iter()
    .map(|c| c.samples(n))
    .collect();
    Ok(VerificationReport::from_items(
        "curve_bounds",
        params_of(asm),
        cfg.seed,
        items,
    ))
}

/// `β(s)` and `β'(s)`.
fn beta_and_derivative(asm: &MapAssembly, s: f64) -> (Complex64, Complex64) {
    let h = &asm.hex;
    let (cw, sw) = (h.w.cosh(), h.w.sinh());
    let (sk, ck) = ((h.kappa * s).sinh(), (h.kappa * s).cosh());
    let el = h.lambda.exp();
    let num = Complex64::new(sk * cw, 1.0);
    let den = ck * cw + sw;
    let z = num / den * el;
    let dz = (Complex64::new(ck * den, 0.0) - num * sk) * (el * h.kappa * cw / (den * den));
    (z, dz)
}

/// The inequality ledger: constants of the solved hexagon, the shape of `β`
/// and `β̃`, `b₁'`, the `G_β` and `L_β` Jacobian entries and `k_ε`.
pub fn check_inequalities(asm: &MapAssembly, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let h = &asm.hex;
    let eps = h.eps;
    let eps2 = eps * eps;
    let n = cfg.inequality_samples;
    let rel = |x: f64| IDENTITY_TOL * x.abs().max(1.0);
    let mut items = Vec::new();
    for (i, delta, eta) in [(1, h.delta1, h.eta1), (2, h.delta2, h.eta2)] {
        items.push(BoundCheck::le(
            format!("delta_over_eta{i}"),
            delta / eta,
            eps2 / 3.0,
            IDENTITY_TOL,
        ));
    }

    let lam = 1.0 / (1.0 - (-2.0 * h.lambda).exp());
    items.push(BoundCheck::ge("lambda_ratio.lower", lam, 1.0, IDENTITY_TOL));
    items.push(BoundCheck::le(
        "lambda_ratio.upper",
        lam,
        1.0 + eps2 / 63.0,
        IDENTITY_TOL,
    ));

    let sigma1 = 0.5 * eps / (h.eps1.sinh() + h.eps2.sinh());
    let sinc_half = 0.5 * eps / (0.5 * eps).sinh();
    items.push(BoundCheck::le("sigma1.upper", sigma1, 1.0, 0.0));
    items.push(BoundCheck::ge(
        "sigma1.middle",
        sigma1,
        sinc_half,
        IDENTITY_TOL,
    ));
    items.push(BoundCheck::ge(
        "sigma1.lower",
        sinc_half,
        1.0 - eps2 / 24.0,
        IDENTITY_TOL,
    ));

    let sigma2 = lam * sigma1;
    let top = (h.lambda - h.w).exp();
    items.push(BoundCheck::le(
        "sigma2.identity",
        (top - 2.0 * h.a * sigma2).abs() / (2.0 * h.a),
        0.0,
        IDENTITY_TOL,
    ));
    items.push(BoundCheck::ge(
        "sigma2.lower",
        sigma2,
        1.0 - eps2 / 24.0,
        IDENTITY_TOL,
    ));
    items.push(BoundCheck::le(
        "sigma2.upper",
        sigma2,
        1.0 + eps2 / 63.0,
        IDENTITY_TOL,
    ));

    let sides = [
        (1, h.a1, h.eps1, h.eta1, h.delta1, h.v_b1),
        (2, h.a2, h.eps2, h.eta2, h.delta2, h.v_b2),
    ];
    for &(i, ai, ei, eta, delta, b) in &sides {
        let sx = lam * 2.0 / (ei.cosh() + h.w.tanh());
        let sy = sigma2 / ((ei.cosh() - 1.0) * h.w.cosh() / h.w.exp() + 1.0);
        items.push(BoundCheck::le(
            format!("sigma_x{i}.identity"),
            (b.x() - ai * sx).abs() / ai.abs(),
            0.0,
            1e-10,
        ));
        items.push(BoundCheck::ge(
            format!("sigma_x{i}.lower"),
            sx,
            1.0 + eps2 / 6.0,
            IDENTITY_TOL,
        ));
        items.push(BoundCheck::le(
            format!("sigma_x{i}.upper"),
            sx,
            1.0 + 2.0 * eps2 / 7.0,
            IDENTITY_TOL,
        ));
        items.push(BoundCheck::le(
            format!("sigma_y{i}.identity"),
            (b.y() - 2.0 * h.a * sy).abs() / (2.0 * h.a),
            0.0,
            1e-10,
        ));
        items.push(BoundCheck::ge(
            format!("sigma_y{i}.lower"),
            sy,
            1.0 - eps2 / 8.0,
            IDENTITY_TOL,
        ));
        items.push(BoundCheck::le(
            format!("sigma_y{i}.upper"),
            sy,
            1.0 + eps2 / 63.0,
            IDENTITY_TOL,
        ));

        let abs_ai = ai.abs();
        items.push(BoundCheck::ge(
            format!("eta{i}.lower"),
            eta,
            0.4 * abs_ai / (h.a * h.a),
            IDENTITY_TOL,
        ));
        let tanh_formula =
            2.0 * abs_ai * sx / (ai * ai * sx * sx + 4.0 * h.a * h.a * sy * sy + 1.0);
        items.push(BoundCheck::le(
            format!("tanh_eta{i}.identity"),
            (eta.tanh() - tanh_formula).abs(),
            0.0,
            1e-10,
        ));
        items.push(BoundCheck::le(
            format!("tanh_eta{i}.upper"),
            eta.tanh(),
            1.0 / 9.0 + eps2 / 16.0,
            IDENTITY_TOL,
        ));

        let disp = ei.sinh().powi(2) / (2.0 * abs_ai);
        items.push(BoundCheck::le(
            format!("delta{i}.displacement"),
            delta,
            disp,
            rel(disp),
        ));
        let cap = eps2 * abs_ai / (8.0 * sigma1 * sigma1 * h.a * h.a);
        items.push(BoundCheck::le(
            format!("delta{i}.upper"),
            delta,
            cap,
            rel(cap),
        ));
        items.push(BoundCheck::le(
            format!("delta{i}.uniform"),
            delta,
            eps2 / (16.0 * sigma1 * sigma1),
            IDENTITY_TOL,
        ));
    }

    // Shape of β and β̃ on a uniform parameter grid.
    let (lo, hi) = h.beta_range();
    let ss: Vec<f64> = (0..=n)
        .map(|k| lo + (hi - lo) * k as f64 / n as f64)
        .collect();
    let mut b2_min = f64::INFINITY;
    let mut b2_max = f64::NEG_INFINITY;
    let mut slope_ratio = 0.0f64;
    let mut log_slope_max = 0.0f64;
    let mut log_slope_min = f64::INFINITY;
    let mut tilde_min = f64::INFINITY;
    let mut tilde_max = f64::NEG_INFINITY;
    for &s in &ss {
        let (z, dz) = beta_and_derivative(asm, s);
        b2_min = b2_min.min(z.im);
        b2_max = b2_max.max(z.im);
        slope_ratio = slope_ratio.max((dz.im / dz.re).abs());
        let log_slope = dz.im / z.im;
        log_slope_max = log_slope_max.max(log_slope.abs());
        if s != 0.0 {
            log_slope_min = log_slope_min.min(-log_slope / s);
        }
        let ratio = asm.beta_tilde(s).im / z.im;
        tilde_min = tilde_min.min(ratio);
        tilde_max = tilde_max.max(ratio);
    }
    let ns = ss.len();
    items.push(
        BoundCheck::ge(
            "beta2.lower",
            b2_min,
            2.0 * h.a * (1.0 - eps2 / 8.0),
            rel(2.0 * h.a),
        )
        .samples(ns),
    );
    items.push(BoundCheck::le("beta2.top", b2_max, top, rel(top)).samples(ns));
    items.push(BoundCheck::le(
        "beta2.upper",
        top,
        2.0 * h.a * (1.0 + eps2 / 63.0),
        rel(top),
    ));
    items.push(
        BoundCheck::le(
            "beta_slope.ratio",
            slope_ratio,
            4.0 / 15.0 * eps2,
            IDENTITY_TOL,
        )
        .samples(ns),
    );
    items.push(
        BoundCheck::le(
            "beta_slope.log_upper",
            log_slope_max,
            0.5 * eps * (0.5 * eps).sinh(),
            IDENTITY_TOL,
        )
        .samples(ns),
    );
    items.push(
        BoundCheck::ge(
            "beta_slope.log_lower",
            log_slope_min,
            0.5 * eps2 * (1.0 - 5.0 / 16.0 * eps2),
            IDENTITY_TOL,
        )
        .samples(ns),
    );
    items.push(BoundCheck::ge("beta_tilde2.lower", tilde_min, 1.0, IDENTITY_TOL).samples(ns));
    items.push(
        BoundCheck::le(
            "beta_tilde2.upper",
            tilde_max,
            1.0 + eps2 / 7.0,
            IDENTITY_TOL,
        )
        .samples(ns),
    );

    // b₁', and the Jacobian entries of G_β and L_β.
    let ecw = eps * h.w.cosh();
    items.push(BoundCheck::le(
        "eps_cosh_w.identity",
        (ecw - (1.0 + eps2 / 4.0)).abs(),
        0.0,
        IDENTITY_TOL,
    ));
    let xs: Vec<f64> = (0..n)
        .map(|k| h.a1 + h.a * (k as f64 + 0.5) / n as f64)
        .collect();
    let rows: Vec<[f64; 5]> = xs
        .par_iter()
        .map(|&x| {
            let step = 1e-6 * x.abs().max(1.0);
            let b1 = asm.b1_unchecked(x);
            let db1 = (asm.b1_unchecked(x + step) - asm.b1_unchecked(x - step)) / (2.0 * step);
            let f = asm.f_unchecked(x)?;
            let df = (asm.f_unchecked(x + step)? - asm.f_unchecked(x - step)?) / (2.0 * step);
            let g_rho = h.a * df.abs() / (f - h.a);
            let g_sigma = (h.a / (f - h.a) - 1.0).abs();
            Ok([db1, (db1 - 1.0).abs(), (b1 - x).abs() / h.a, g_rho, g_sigma])
        })
        .collect::<Result<_>>()?;
    let col = |j: usize| rows.iter().map(move |r| r[j]);
    items.push(
        BoundCheck::ge(
            "b1prime.lower",
            min_of(col(0)),
            ecw * (1.0 - eps2 / 2.0),
            FD_SLACK,
        )
        .samples(n),
    );
    items.push(
        BoundCheck::le(
            "b1prime.upper",
            max_of(col(0)),
            ecw * (1.0 + eps2 / 6.0),
            FD_SLACK,
        )
        .samples(n),
    );
    items.push(BoundCheck::le("l_beta.sigma", max_of(col(1)), eps2 / 2.0, FD_SLACK).samples(n));
    items.push(BoundCheck::le("l_beta.rho", max_of(col(2)), eps2 / 4.0, FD_SLACK).samples(n));
    items.push(BoundCheck::le("g_beta.rho", max_of(col(3)), eps2 / 3.0, FD_SLACK).samples(n));
    items.push(BoundCheck::le("g_beta.sigma", max_of(col(4)), eps2 / 3.0, FD_SLACK).samples(n));

    let k = asm.k_eps;
    let k_closed = (eps / (1.0 + eps2 / 4.0)).acos() / (0.5 * PI - eps);
    let k_cap = 1.0 + eps.powi(3) * (1.0 + eps) / (6.0 * PI);
    items.push(BoundCheck::le(
        "k_eps.identity",
        (k - k_closed).abs(),
        0.0,
        IDENTITY_TOL,
    ));
    items.push(BoundCheck::ge("k_eps.lower", k, 1.0, 0.0));
    items.push(BoundCheck::le("k_eps.upper", k, k_cap, IDENTITY_TOL));
    items.push(BoundCheck::le(
        "k_eps.quadratic",
        k_cap,
        1.0 + eps2 / 25.0,
        0.0,
    ));

    Ok(VerificationReport::from_items(
        "inequalities",
        params_of(asm),
        cfg.seed,
        items,
    ))
}

/// Point at distance `d` from `α_i`, `u` along it from `c` (or `c'` when
/// `target`).
fn collar_point(asm: &MapAssembly, i: usize, u: f64, d: f64, target: bool) -> Complex64 {
    let h = &asm.hex;
    let (shift, side) = match (i, target) {
        (1, false) => (-h.c1, 1.0),
        (1, true) => (-h.cp1, 1.0),
        (_, false) => (h.c2, -1.0),
        (_, true) => (h.cp2, -1.0),
    };
    rgh(shift, up(u, gamma_point(side * d).to_complex()))
}

fn alpha_len(asm: &MapAssembly, i: usize) -> f64 {
    if i == 1 {
        asm.hex.alpha1
    } else {
        asm.hex.alpha2
    }
}

fn phi_c(asm: &MapAssembly, z: Complex64) -> Result<Complex64> {
    Ok(phi(asm, SurfacePoint::front(point(z)))?.z.to_complex())
}

/// Reduced Y-piece: boundary images, length distortion on the kernel and
/// isometry on the reduced collars of `γ₁`, `γ₂`.
pub fn check_reduced_piece(asm: &MapAssembly, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let h = &asm.hex;
    let eps2 = h.eps * h.eps;
    let two_a = 2.0 * h.a;
    let mut items = Vec::new();

    // The boundary curve β of Ĉ₃ goes to the height-2a horocycle.
    let n = cfg.seam_samples;
    let (lo, hi) = h.beta_range();
    let imgs: Vec<Complex64> = (0..=n)
        .map(|k| phi_c(asm, h.beta_c(lo + (hi - lo) * k as f64 / n as f64)))
        .collect::<Result<_>>()?;
    let height = max_of(imgs.iter().map(|q| (q.im / two_a).ln().abs()));
    let length: f64 = 2.0
        * imgs
            .windows(2)
            .map(|w| (w[1].re - w[0].re).abs())
            .sum::<f64>()
        / two_a;
    let speed = max_of(imgs.iter().enumerate().map(|(k, q)| {
        let s = lo + (hi - lo) * k as f64 / n as f64;
        (q.re - asm.reparam_inverse(s)).abs() / two_a
    }));
    items
        .push(BoundCheck::le("reduced_boundary.height", height, COHERENCE_TOL, 0.0).samples(n + 1));
    items.push(BoundCheck::le("reduced_boundary.speed", speed, COHERENCE_TOL, 0.0).samples(n + 1));
    items.push(
        BoundCheck::le(
            "reduced_boundary.length",
            (length - 1.0).abs(),
            COHERENCE_TOL,
            0.0,
        )
        .samples(n + 1),
    );
    items.push(BoundCheck::le(
        "reduced_boundary.source_length",
        (h.eps * h.w.cosh() - (1.0 + eps2 / 4.0)).abs(),
        0.0,
        IDENTITY_TOL,
    ));
    for i in 1..=2 {
        let width = asm.reduced_width(i);
        let name = format!("reduced_boundary.collar{i}");
        if width == 0.0 {
            items.push(BoundCheck::le(name, 0.0, COHERENCE_TOL, 0.0).samples(0));
            continue;
        }
        let m = cfg.coherence_samples;
        let err = (0..=m)
            .map(|k| {
                let u = alpha_len(asm, i) * k as f64 / m as f64;
                let img = phi_c(asm, collar_point(asm, i, u, width, false))?;
                Ok(hyp_dist_c(img, collar_point(asm, i, u, width, true)))
            })
            .collect::<Result<Vec<_>>>()?;
        items.push(BoundCheck::le(name, max_of(err), COHERENCE_TOL, 0.0).samples(m + 1));
    }

    // Length distortion on interior points of the kernel.
    let per_piece = cfg.distortion_points.div_ceil(4);
    let pts: Vec<Complex64> = Region::ALL
        .iter()
        .filter(|r| r.is_lower())
        .flat_map(|&region| {
            let mut src = UnitSquare::halton();
            sample_region(asm, region, per_piece, SEAM_CLEARANCE, &mut src, |z| {
                reduced_interior(asm, z)
            })
        })
        .collect();
    let ks: Vec<f64> = pts
        .par_iter()
        .map(|&z| {
            let piece = asm.piece_of(z);
            let map = |w| asm.eval_piece(piece, w);
            let jac = jacobian(map, z, default_step(z))?;
            distortion_of(&jac, z.im, map(z)?.im)
        })
        .collect::<Result<_>>()?;
    items.push(
        BoundCheck::le(
            "length_distortion",
            max_of(ks.iter().copied()),
            1.0 + 2.5 * eps2,
            FD_SLACK,
        )
        .samples(ks.len()),
    );

    // Distances inside Ĉ₁, Ĉ₂ are preserved.
    for i in 1..=2 {
        let width = asm.reduced_width(i);
        let name = format!("collar{i}.isometry");
        if width == 0.0 {
            items.push(BoundCheck::le(name, 0.0, SEAM_TOL, 0.0).samples(0));
            continue;
        }
        let mut rng = seeded(cfg.seed.wrapping_add(i as u64));
        let len = alpha_len(asm, i);
        let mut draw = || {
            collar_point(
                asm,
                i,
                len * rng.random::<f64>(),
                width * rng.random::<f64>(),
                false,
            )
        };
        let pairs: Vec<(Complex64, Complex64)> =
            (0..cfg.collar_pairs).map(|_| (draw(), draw())).collect();
        let err = pairs
            .iter()
            .map(|&(p, q)| {
                Ok((hyp_dist_c(phi_c(asm, p)?, phi_c(asm, q)?) - hyp_dist_c(p, q)).abs())
            })
            .collect::<Result<Vec<_>>>()?;
        items.push(BoundCheck::le(name, max_of(err), SEAM_TOL, 0.0).samples(pairs.len()));
    }

    Ok(
        VerificationReport::from_items("reduced_piece", params_of(asm), cfg.seed, items)
            .with_grid_density(pts.len()),
    )
}

/// Interior of the kernel `Ŷ`, kept `SEAM_CLEARANCE` away from the reduced
/// collar boundaries.
fn reduced_interior(asm: &MapAssembly, z: Complex64) -> bool {
    asm.in_reduced_piece(point(z))
        && (1..=2).all(|i| {
            let w = asm.reduced_width(i);
            w == 0.0 || asm.hex.dist_to_alpha(i, z) >= w + SEAM_CLEARANCE
        })
}

/// `φ(α_i(t)) = α'_i(t)` and the image of `γ₃`.
pub fn check_boundary_coherence(
    asm: &MapAssembly,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let h = &asm.hex;
    let n = cfg.coherence_samples;
    let mut items = Vec::new();
    for i in 1..=2 {
        let err = (0..=n)
            .map(|k| {
                let u = alpha_len(asm, i) * k as f64 / n as f64;
                let img = phi_c(asm, collar_point(asm, i, u, 0.0, false))?;
                Ok(hyp_dist_c(img, collar_point(asm, i, u, 0.0, true)))
            })
            .collect::<Result<Vec<_>>>()?;
        items.push(
            BoundCheck::le(format!("alpha{i}"), max_of(err), COHERENCE_TOL, 0.0).samples(n + 1),
        );
    }

    let top = asm.top_height();
    let el = h.lambda.exp();
    let vs: Vec<f64> = (0..=n)
        .map(|k| -h.eps1 + 0.5 * h.eps * k as f64 / n as f64)
        .collect();
    let imgs: Vec<Complex64> = vs
        .iter()
        .map(|&v| phi_c(asm, gamma_point(v).to_complex() * el))
        .collect::<Result<_>>()?;
    let height = max_of(imgs.iter().map(|q| (q.im / top).ln().abs()));
    let length = 2.0
        * imgs
            .windows(2)
            .map(|w| (w[1].re - w[0].re).abs())
            .sum::<f64>()
        / top;
    let speeds: Vec<f64> = imgs
        .windows(2)
        .zip(vs.windows(2))
        .map(|(q, v)| (q[1].re - q[0].re) / (v[1] - v[0]))
        .collect();
    let mean = speeds.iter().sum::<f64>() / speeds.len() as f64;
    let speed_dev = max_of(speeds.iter().map(|s| (s / mean - 1.0).abs()));
    items.push(BoundCheck::le("gamma3.height", height, SEAM_TOL, 0.0).samples(n + 1));
    items.push(
        BoundCheck::le(
            "gamma3.length",
            (length - h.eps_star()).abs(),
            SEAM_TOL,
            0.0,
        )
        .samples(n + 1),
    );
    items.push(BoundCheck::le("gamma3.speed", speed_dev, COHERENCE_TOL, 0.0).samples(n));
    Ok(VerificationReport::from_items(
        "boundary_coherence",
        params_of(asm),
        cfg.seed,
        items,
    ))
}

/// Two-sided evaluation across the Fermi lines `t = −η₁, 0, η₂`, the curve
/// `β` and the preimage of `y = a`.
pub fn check_seams(asm: &MapAssembly, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let h = &asm.hex;
    let n = cfg.seam_samples;
    let mut items = Vec::new();
    let frac = |k: usize| (k as f64 + 0.5) / n as f64;

    let t_seams = [
        (
            "t=-eta1",
            -h.eta1,
            Region::OuterLeft,
            Region::InnerLeft,
            fermi_c(h.v_b1.to_complex()).r,
        ),
        (
            "t=0",
            0.0,
            Region::InnerLeft,
            Region::InnerRight,
            h.lambda - h.w,
        ),
        (
            "t=eta2",
            h.eta2,
            Region::InnerRight,
            Region::OuterRight,
            fermi_c(h.v_b2.to_complex()).r,
        ),
    ];
    for (name, t0, left, right, r_top) in t_seams {
        let err = (0..n)
            .map(|k| {
                let z = uhp_c(FermiCoord::new(t0, r_top * frac(k)));
                let stretched = crate::qcmap::lower::f_beta_c(h, z).im > h.a;
                let l = asm.eval_piece(
                    Piece::Lower {
                        region: left,
                        stretched,
                    },
                    z,
                )?;
                let r = asm.eval_piece(
                    Piece::Lower {
                        region: right,
                        stretched,
                    },
                    z,
                )?;
                Ok((l - r).norm())
            })
            .collect::<Result<Vec<_>>>()?;
        items.push(BoundCheck::le(name, max_of(err), SEAM_TOL, 0.0).samples(n));
    }

    let (lo, hi) = h.beta_range();
    let err = (0..n)
        .map(|k| {
            let z = h.beta_c(lo + (hi - lo) * frac(k));
            let region = lower_region(asm, fermi_c(z).t);
            let below = asm.eval_piece(
                Piece::Lower {
                    region,
                    stretched: true,
                },
                z,
            )?;
            let above = asm.eval_piece(Piece::Upper, z)?;
            Ok((below - above).norm())
        })
        .collect::<Result<Vec<_>>>()?;
    items.push(BoundCheck::le("beta", max_of(err), SEAM_TOL, 0.0).samples(n));

    let err = (0..n)
        .map(|k| {
            let w = Complex64::new(h.a1 + h.a * frac(k), h.a);
            let z = uhp_c(crate::qcmap::lower::f_beta_inverse(h, fermi_c(w)));
            let region = lower_region(asm, fermi_c(z).t);
            let s = asm.eval_piece(
                Piece::Lower {
                    region,
                    stretched: true,
                },
                z,
            )?;
            let u = asm.eval_piece(
                Piece::Lower {
                    region,
                    stretched: false,
                },
                z,
            )?;
            Ok((s - u).norm())
        })
        .collect::<Result<Vec<_>>>()?;
    items.push(BoundCheck::le("y=a", max_of(err), SEAM_TOL, 0.0).samples(n));

    Ok(VerificationReport::from_items(
        "seams",
        params_of(asm),
        cfg.seed,
        items,
    ))
}

/// Random points of the target hexagon truncated at `2a/ε*`.
fn target_points(asm: &MapAssembly, n: usize, seed: u64) -> Vec<Complex64> {
    let h = &asm.hex;
    let y_lo = h.alpha1.sinh().min(h.alpha2.sinh()).min(1.0);
    let y_hi = asm.top_height();
    let mut rng = seeded(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = h.a1 + h.a * rng.random::<f64>();
        let y = y_lo * (y_hi / y_lo).powf(rng.random::<f64>());
        let q = Complex64::new(x, y);
        if asm.target_contains(point(q)) {
            out.push(q);
        }
    }
    out
}

/// `φ⁻¹ ∘ φ` and `φ ∘ φ⁻¹` on seeded random points.
pub fn check_roundtrip(asm: &MapAssembly, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let n = cfg.roundtrip_points;
    let per_piece = n.div_ceil(Region::ALL.len());
    let mut src = UnitSquare::random(cfg.seed);
    let mut pts: Vec<Complex64> = Region::ALL
        .iter()
        .flat_map(|&region| sample_region(asm, region, per_piece, 0.0, &mut src, |_| true))
        .collect();
    pts.truncate(n);
    let err = pts
        .iter()
        .map(|&z| {
            let img = phi(asm, SurfacePoint::front(point(z)))?;
            let back = phi_inverse(asm, img)?;
            Ok(back.z.dist(&point(z)))
        })
        .collect::<Result<Vec<_>>>()?;
    let targets = target_points(asm, n, cfg.seed.wrapping_add(1));
    let err_t = targets
        .iter()
        .map(|&q| {
            let pre = phi_inverse(asm, SurfacePoint::front(point(q)))?;
            Ok(phi(asm, pre)?.z.dist(&point(q)))
        })
        .collect::<Result<Vec<_>>>()?;
    let items = vec![
        BoundCheck::le("inverse_after_phi", max_of(err), SEAM_TOL, 0.0).samples(pts.len()),
        BoundCheck::le("phi_after_inverse", max_of(err_t), SEAM_TOL, 0.0).samples(targets.len()),
    ];
    Ok(VerificationReport::from_items(
        "roundtrip",
        params_of(asm),
        cfg.seed,
        items,
    ))
}

/// `F^β` is conformal and `φ^β` has dilatation `k_ε`; the Beltrami estimator
/// reproduces the closed form for `diag(1, 1 − d)`.
pub fn check_conformality(asm: &MapAssembly, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let mut src = UnitSquare::halton();
    let pts = sample_region(
        asm,
        Region::Upper,
        cfg.conformal_points,
        SEAM_CLEARANCE,
        &mut src,
        |_| true,
    );
    let samples: Vec<(f64, f64)> = pts
        .iter()
        .map(|&z| {
            let f = numeric_beltrami(|w| asm.f_upper_c(w), point(z), default_step(z))?;
            let g = numeric_beltrami(
                |w| asm.eval_piece(Piece::Upper, w),
                point(z),
                default_step(z),
            )?;
            Ok((f.mu_abs, (g.q - asm.k_eps).abs()))
        })
        .collect::<Result<_>>()?;
    let mut items = vec![
        BoundCheck::le("f_upper.mu", max_of(samples.iter().map(|s| s.0)), 1e-6, 0.0)
            .samples(pts.len()),
        BoundCheck::le(
            "phi_upper.q_minus_k",
            max_of(samples.iter().map(|s| s.1)),
            1e-6,
            0.0,
        )
        .samples(pts.len()),
    ];
    let z = HalfPlanePoint::new(0.25, 1.5)?;
    for d in [0.01, 0.1, 0.3] {
        let s = numeric_beltrami(
            |w: Complex64| Ok(Complex64::new(w.re, (1.0 - d) * w.im)),
            z,
            1e-6,
        )?;
        items.push(BoundCheck::le(
            format!("squeeze.d={d}"),
            (s.q - 1.0 / (1.0 - d)).abs(),
            1e-8,
            0.0,
        ));
    }
    Ok(VerificationReport::from_items(
        "conformality",
        params_of(asm),
        cfg.seed,
        items,
    ))
}

/// Length distortion and dilatation of `φ_ε̄⁻¹ ∘ φ_ε` on the kernel.
pub fn check_composition(
    asm_eps: &MapAssembly,
    asm_epsbar: &MapAssembly,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let (e, eb) = (asm_eps.hex.eps, asm_epsbar.hex.eps);
    let per_piece = cfg.distortion_points.div_ceil(4);
    let pts: Vec<(Complex64, Piece, Piece)> = Region::ALL
        .iter()
        .filter(|r| r.is_lower())
        .flat_map(|&region| {
            let mut src = UnitSquare::halton();
            sample_region(asm_eps, region, per_piece, SEAM_CLEARANCE, &mut src, |z| {
                reduced_interior(asm_eps, z)
            })
        })
        .filter_map(|z| {
            let first = asm_eps.piece_of(z);
            let mid = asm_eps.eval_piece(first, z).ok()?;
            let pre = asm_epsbar.phi_inverse_c(mid).ok()?;
            (seam_clearance(asm_epsbar, pre) >= SEAM_CLEARANCE)
                .then(|| (z, first, asm_epsbar.piece_of(pre)))
        })
        .collect();
    let rows: Vec<(f64, f64)> = pts
        .par_iter()
        .map(|&(z, first, second)| {
            let map = |w| asm_epsbar.eval_inverse_piece(second, asm_eps.eval_piece(first, w)?);
            let jac = jacobian(map, z, default_step(z))?;
            let k = distortion_of(&jac, z.im, map(z)?.im)?;
            Ok((k, BeltramiSample::from_jacobian(point(z), jac)?.q))
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    let items = vec![
        BoundCheck::le(
            "length_distortion",
            max_of(rows.iter().map(|r| r.0)),
            (1.0 + 2.5 * e * e) * (1.0 + 2.5 * eb * eb),
            FD_SLACK,
        )
        .samples(n),
        BoundCheck::le(
            "dilatation",
            max_of(rows.iter().map(|r| r.1)),
            (1.0 + 2.0 * e * e) * (1.0 + 2.0 * eb * eb),
            FD_SLACK,
        )
        .samples(n),
    ];
    let params = params_of(asm_eps).with_epsbar(eb);
    Ok(VerificationReport::from_items("composition", params, cfg.seed, items).with_grid_density(n))
}

/// The `δ` bracket on an `n × n` grid of `0 < ε̄ ≤ ε ≤ 1/2`.
pub fn check_collar_delta(n: usize, seed: u64) -> Result<VerificationReport> {
    let mut upper_excess = f64::NEG_INFINITY;
    let mut lower_excess = f64::INFINITY;
    let mut diagonal = 0.0f64;
    let mut count = 0;
    for i in 1..=n {
        let eps = 0.5 * i as f64 / n as f64;
        for j in 1..=i {
            let epsbar = 0.5 * j as f64 / n as f64;
            let delta = delta_cor4(eps, epsbar)?;
            let upper = 2.0 / PI * eps * sinc_ratio(epsbar / eps);
            let lower = upper - eps.powi(4) / 12.0;
            upper_excess = upper_excess.max(delta - upper);
            lower_excess = lower_excess.min(delta - lower);
            if i == j {
                diagonal = diagonal.max((delta - epsbar).abs());
            }
            count += 1;
        }
    }
    let items = vec![
        BoundCheck::le("delta.upper", upper_excess, 0.0, IDENTITY_TOL).samples(count),
        BoundCheck::ge("delta.lower", lower_excess, 0.0, IDENTITY_TOL).samples(count),
        BoundCheck::le("delta.diagonal", diagonal, 0.0, IDENTITY_TOL).samples(n),
    ];
    let params = ParamTuple {
        l1: None,
        l2: None,
        eps: None,
        epsbar: None,
    };
    Ok(VerificationReport::from_items(
        "collar_delta",
        params,
        seed,
        items,
    ))
}

/// Every per-tuple claim.
pub fn run_suite(asm: &MapAssembly, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        check_dilatation(asm, cfg)?,
        check_curve_bounds(asm, cfg)?,
        check_inequalities(asm, cfg)?,
        check_reduced_piece(asm, cfg)?,
        check_boundary_coherence(asm, cfg)?,
        check_seams(asm, cfg)?,
        check_roundtrip(asm, cfg)?,
        check_conformality(asm, cfg)?,
    ])
}
