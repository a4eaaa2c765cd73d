//! Acceptance run: ten criteria over the default parameter grid, one line
//! each. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use pantsqc_core::qcmap::MapAssembly;
use pantsqc_core::verify::{self, BoundCheck, Sense, VerificationReport, VerifyConfig};
use pantsqc_core::{Result, YPieceParams};

const LENGTHS: [f64; 4] = [0.3, 1.0, 3.0, 6.0];
const EPSILONS: [f64; 4] = [0.05, 0.1, 0.25, 0.5];
const COMPOSE_EPS: [f64; 3] = [0.1, 0.25, 0.5];
const COMPOSE_LENGTHS: [(f64, f64); 4] = [(0.3, 0.3), (1.0, 1.0), (6.0, 6.0), (0.3, 6.0)];

struct Grid {
    cfg: VerifyConfig,
    tuples: Vec<MapAssembly>,
}

impl Grid {
    fn new() -> Result<Self> {
        let mut tuples = Vec::new();
        for l1 in LENGTHS {
            for l2 in LENGTHS {
                for eps in EPSILONS {
                    tuples.push(MapAssembly::new(&YPieceParams::new(l1, l2, eps)?)?);
                }
            }
        }
        Ok(Self {
            cfg: VerifyConfig::default(),
            tuples,
        })
    }
}

/// Running tally for one criterion.
#[derive(Default)]
struct Tally {
    problems: Vec<String>,
    reports: usize,
    worst: Option<(String, f64, f64, f64)>,
}

impl Tally {
    fn fail(&mut self, msg: String) {
        self.problems.push(msg);
    }

    /// Records a report: every item must pass and the named items must
    /// carry exactly the given bound and slack.
    fn report(&mut self, r: &VerificationReport, pins: &[(&str, Sense, f64, f64)]) {
        self.reports += 1;
        for c in r.failures() {
            self.fail(format!(
                "{} {} {}: {} vs {}",
                r.claim, r.params, c.name, c.measured, c.bound
            ));
        }
        for &(name, sense, bound, slack) in pins {
            match r.items.iter().find(|c| c.name == name) {
                None => self.fail(format!("{} {}: missing item {name}", r.claim, r.params)),
                Some(c) => {
                    if c.sense != sense || !same(c.bound, bound) || c.slack != slack {
                        self.fail(format!(
                            "{} {} {name}: pinned {sense:?} {bound} ± {slack}, got {:?} {} ± {}",
                            r.claim, r.params, c.sense, c.bound, c.slack
                        ));
                    }
                    self.track(&format!("{} {}", r.params, name), c);
                }
            }
        }
    }

    /// Keeps the item with the least room left under its bound (slack
    /// included), relative to the bound's scale.
    fn track(&mut self, label: &str, c: &BoundCheck) {
        let room = (c.margin() + c.slack) / c.bound.abs().max(c.slack).max(f64::MIN_POSITIVE);
        if self.worst.as_ref().is_none_or(|w| room < w.3) {
            self.worst = Some((label.to_string(), c.measured, c.bound, room));
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= 4.0 * f64::EPSILON * a.abs().max(b.abs())
}

fn each_tuple(
    grid: &Grid,
    t: &mut Tally,
    mut f: impl FnMut(&MapAssembly, &VerifyConfig, &mut Tally) -> Result<()>,
) {
    for asm in &grid.tuples {
        if let Err(e) = f(asm, &grid.cfg, t) {
            let p = asm.params();
            t.fail(format!("({}, {}, {}): {e}", p.l1, p.l2, p.eps));
        }
    }
}

fn eps2(asm: &MapAssembly) -> f64 {
    asm.hex.eps * asm.hex.eps
}

fn dilatation(grid: &Grid, t: &mut Tally) {
    t.check(grid.tuples.len() == 64, || {
        format!("grid has {} tuples", grid.tuples.len())
    });
    each_tuple(grid, t, |asm, cfg, t| {
        let r = verify::check_dilatation(asm, cfg)?;
        t.check(r.n_samples >= 10_000, || {
            format!("{}: only {} interior points", r.params, r.n_samples)
        });
        t.report(&r, &[("q_max", Sense::Le, 1.0 + 2.0 * eps2(asm), 1e-5)]);
        Ok(())
    });
}

fn pentagons(grid: &Grid, t: &mut Tally) {
    for asm in &grid.tuples {
        let res = asm.hex.pentagon_residual();
        t.reports += 1;
        let c = BoundCheck::le("pentagon_residual", res, 1e-10, 0.0);
        t.check(c.pass, || {
            format!("{}: residual {res}", verify::ParamTuple::of(&asm.params()))
        });
        t.track(&format!("{}", verify::ParamTuple::of(&asm.params())), &c);
    }
}

fn coherence(grid: &Grid, t: &mut Tally) {
    each_tuple(grid, t, |asm, cfg, t| {
        t.check(cfg.coherence_samples == 64, || {
            "coherence samples not 64".into()
        });
        let r = verify::check_boundary_coherence(asm, cfg)?;
        t.report(
            &r,
            &[
                ("alpha1", Sense::Le, 1e-8, 0.0),
                ("alpha2", Sense::Le, 1e-8, 0.0),
                ("gamma3.height", Sense::Le, 1e-9, 0.0),
                ("gamma3.length", Sense::Le, 1e-9, 0.0),
            ],
        );
        Ok(())
    });
}

fn curve_bounds(grid: &Grid, t: &mut Tally) {
    each_tuple(grid, t, |asm, cfg, t| {
        t.check(cfg.curve_samples == 512, || "curve samples not 512".into());
        let r = verify::check_curve_bounds(asm, cfg)?;
        let (two_a, e2) = (2.0 * asm.hex.a, eps2(asm));
        t.report(
            &r,
            &[
                ("f.lower", Sense::Ge, two_a * (1.0 - e2 / 8.0), 1e-5),
                ("f.upper", Sense::Le, two_a * (1.0 + e2 / 6.0), 1e-5),
                ("fprime.abs", Sense::Le, 4.0 / 15.0 * e2, 1e-5),
                (
                    "beta_tilde1prime.lower",
                    Sense::Ge,
                    two_a * (1.0 - e2 / 2.0),
                    1e-5,
                ),
                (
                    "beta_tilde1prime.upper",
                    Sense::Le,
                    two_a * (1.0 + e2 / 6.0),
                    1e-5,
                ),
            ],
        );
        Ok(())
    });
}

fn inequalities(grid: &Grid, t: &mut Tally) {
    each_tuple(grid, t, |asm, cfg, t| {
        let r = verify::check_inequalities(asm, cfg)?;
        let e2 = eps2(asm);
        let names = [
            "lambda_ratio.upper",
            "sigma1.lower",
            "sigma2.lower",
            "sigma2.upper",
            "sigma_x1.lower",
            "sigma_x2.upper",
            "sigma_y1.lower",
            "sigma_y2.upper",
            "eta1.lower",
            "eta2.lower",
            "delta1.upper",
            "delta2.upper",
            "tanh_eta1.upper",
            "beta_slope.ratio",
            "beta_slope.log_upper",
            "beta_slope.log_lower",
            "beta_tilde2.upper",
            "b1prime.lower",
            "b1prime.upper",
            "k_eps.upper",
        ];
        for n in names {
            t.check(r.items.iter().any(|c| c.name == n), || {
                format!("{}: missing {n}", r.params)
            });
        }
        t.report(
            &r,
            &[
                ("delta_over_eta1", Sense::Le, e2 / 3.0, 1e-12),
                ("delta_over_eta2", Sense::Le, e2 / 3.0, 1e-12),
                ("tanh_eta2.upper", Sense::Le, 1.0 / 9.0 + e2 / 16.0, 1e-12),
                ("beta_tilde2.upper", Sense::Le, 1.0 + e2 / 7.0, 1e-12),
            ],
        );
        Ok(())
    });
}

fn reduced_piece(grid: &Grid, t: &mut Tally) {
    each_tuple(grid, t, |asm, cfg, t| {
        t.check(cfg.collar_pairs == 100, || "collar pairs not 100".into());
        let r = verify::check_reduced_piece(asm, cfg)?;
        for i in 1..=2 {
            let name = format!("collar{i}.isometry");
            let c = r.items.iter().find(|c| c.name == name);
            let expect = if asm.reduced_width(i) > 0.0 { 100 } else { 0 };
            t.check(
                c.is_some_and(|c| c.n_samples == expect && c.bound == 1e-9),
                || format!("{}: {name} not pinned", r.params),
            );
        }
        t.report(
            &r,
            &[
                ("reduced_boundary.height", Sense::Le, 1e-8, 0.0),
                ("reduced_boundary.length", Sense::Le, 1e-8, 0.0),
                ("length_distortion", Sense::Le, 1.0 + 2.5 * eps2(asm), 1e-5),
            ],
        );
        Ok(())
    });
}

fn conformality(grid: &Grid, t: &mut Tally) {
    each_tuple(grid, t, |asm, cfg, t| {
        t.check(cfg.conformal_points == 100, || {
            "conformal points not 100".into()
        });
        let r = verify::check_conformality(asm, cfg)?;
        t.report(
            &r,
            &[
                ("f_upper.mu", Sense::Le, 1e-6, 0.0),
                ("squeeze.d=0.01", Sense::Le, 1e-8, 0.0),
                ("squeeze.d=0.1", Sense::Le, 1e-8, 0.0),
                ("squeeze.d=0.3", Sense::Le, 1e-8, 0.0),
            ],
        );
        Ok(())
    });
}

fn seams_and_roundtrip(grid: &Grid, t: &mut Tally) {
    each_tuple(grid, t, |asm, cfg, t| {
        let r = verify::check_seams(asm, cfg)?;
        let pins: Vec<_> = ["t=-eta1", "t=0", "t=eta2", "beta", "y=a"]
            .iter()
            .map(|&n| (n, Sense::Le, 1e-9, 0.0))
            .collect();
        t.report(&r, &pins);
        let r = verify::check_roundtrip(asm, cfg)?;
        t.check(r.n_samples == 256, || {
            format!("{}: roundtrip used {} points", r.params, r.n_samples)
        });
        t.report(
            &r,
            &[
                ("inverse_after_phi", Sense::Le, 1e-9, 0.0),
                ("phi_after_inverse", Sense::Le, 1e-9, 0.0),
            ],
        );
        Ok(())
    });
}

fn composition(grid: &Grid, t: &mut Tally) {
    for (l1, l2) in COMPOSE_LENGTHS {
        for e in COMPOSE_EPS {
            for eb in COMPOSE_EPS {
                let run = || -> Result<VerificationReport> {
                    let a = MapAssembly::new(&YPieceParams::new(l1, l2, e)?)?;
                    let b = MapAssembly::new(&YPieceParams::new(l1, l2, eb)?)?;
                    verify::check_composition(&a, &b, &grid.cfg)
                };
                match run() {
                    Ok(r) => {
                        let bound = (1.0 + 2.5 * e * e) * (1.0 + 2.5 * eb * eb);
                        t.check(r.n_samples > 0, || format!("{}: no samples", r.params));
                        t.report(&r, &[("length_distortion", Sense::Le, bound, 1e-5)]);
                    }
                    Err(err) => t.fail(format!("({l1}, {l2}, {e}, {eb}): {err}")),
                }
            }
        }
    }
}

fn collar_delta(grid: &Grid, t: &mut Tally) {
    match verify::check_collar_delta(10, grid.cfg.seed) {
        Ok(r) => {
            t.check(r.n_samples == 55, || {
                format!("delta grid has {} points", r.n_samples)
            });
            t.report(
                &r,
                &[
                    ("delta.upper", Sense::Le, 0.0, 1e-12),
                    ("delta.lower", Sense::Ge, 0.0, 1e-12),
                    ("delta.diagonal", Sense::Le, 0.0, 1e-12),
                ],
            );
        }
        Err(e) => t.fail(e.to_string()),
    }
}

type Criterion = fn(&Grid, &mut Tally);

fn main() -> ExitCode {
    let grid = match Grid::new() {
        Ok(g) => g,
        Err(e) => {
            println!("FAIL grid construction: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: [(&str, Criterion); 10] = [
        (
            "dilatation q <= 1 + 2 eps^2 on the 64-tuple grid",
            dilatation,
        ),
        ("pentagon residuals <= 1e-10", pentagons),
        (
            "boundary coherence on alpha_1, alpha_2 and gamma_3",
            coherence,
        ),
        ("f and beta-tilde bounds at 512 samples", curve_bounds),
        ("hexagon and curve inequality ledger", inequalities),
        (
            "reduced piece: boundary, distortion, collar isometry",
            reduced_piece,
        ),
        (
            "conformality of the upper map and squeeze oracle",
            conformality,
        ),
        ("seam continuity and roundtrip <= 1e-9", seams_and_roundtrip),
        (
            "composition distortion over (eps, epsbar) pairs",
            composition,
        ),
        ("collar delta bracket on a 10x10 grid", collar_delta),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut t = Tally::default();
        run(&grid, &mut t);
        let secs = start.elapsed().as_secs_f64();
        let worst = t
            .worst
            .as_ref()
            .map(|(l, m, b, _)| format!("; tightest {l}: {m:.6e} vs {b:.6e}"))
            .unwrap_or_default();
        if t.problems.is_empty() {
            println!(
                "PASS [{:>2}] {title} ({} reports, {secs:.1}s{worst})",
                k + 1,
                t.reports
            );
        } else {
            failed += 1;
            println!(
                "FAIL [{:>2}] {title} ({} problems, {secs:.1}s)",
                k + 1,
                t.problems.len()
            );
            for p in t.problems.iter().take(10) {
                println!("       {p}");
            }
        }
    }
    println!("acceptance: {}/10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
