//! Right-angled hexagon of a Y-piece `Y_{l1,l2,ε}` and its collars.
//!
//! The hexagon is placed in the half plane with its side `c` on `Γ`, the
//! foot `D₀` of the common perpendicular `λ = D₀E₀` at `i`, and the side
//! `α₃` on the half-circle `|z| = e^λ`. `α₁` sits over `Γ(−c₁)` and `α₂`
//! over `Γ(c₂)`, so the hexagon lies on the `r > 0` side of `Γ`.
//!
//! The perpendicular `λ` cuts the hexagon into two right-angled pentagons
//! with sides `α_i, c_i, λ, ε_i, d_i`. They satisfy
//!
//! ```text
//! sinh(ε_i) sinh(λ)  = cosh(α_i)
//! sinh(α_i) sinh(c_i) = cosh(ε_i)
//! sinh(α_i) sinh(c'_i) = 1
//! ```
//!
//! where `c'_i` is the finite side of the pentagon with one ideal vertex
//! obtained by pushing `α₃` to infinity. `δ_i = c_i − c'_i`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyp::{
    dist_to_imaginary_axis, fermi_c, gamma_point, rgh, signed_dist_to_circle, up, FermiCoord,
    HalfPlanePoint,
};
use crate::roots;

/// Tolerance, in hyperbolic units, for membership in the closed hexagon.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Boundary lengths of the source Y-piece.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct YPieceParams {
    pub l1: f64,
    pub l2: f64,
    pub eps: f64,
}

impl YPieceParams {
    pub fn new(l1: f64, l2: f64, eps: f64) -> Result<Self> {
        for (index, l) in [(1, l1), (2, l2)] {
            if l == 0.0 {
                return Err(Error::Unsupported { index });
            }
            if !(l.is_finite() && l > 0.0) {
                return Err(Error::Domain {
                    name: if index == 1 { "l1" } else { "l2" },
                    value: l,
                    range: "(0, inf)",
                });
            }
        }
        if !(eps > 0.0 && eps <= 0.5) {
            return Err(Error::Domain {
                name: "eps",
                value: eps,
                range: "(0, 0.5]",
            });
        }
        Ok(Self { l1, l2, eps })
    }

    /// Length `(2/π)ε` of the horocycle that `γ₃` is sent to.
    pub fn eps_star(&self) -> f64 {
        2.0 * self.eps / std::f64::consts::PI
    }
}

/// Solved hexagon quantities and vertices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HexagonSolution {
    pub l1: f64,
    pub l2: f64,
    pub eps: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub lambda: f64,
    pub eps1: f64,
    pub eps2: f64,
    pub c1: f64,
    pub c2: f64,
    pub cp1: f64,
    pub cp2: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub eta1: f64,
    pub eta2: f64,
    pub w: f64,
    pub kappa: f64,
    pub a: f64,
    pub a1: f64,
    pub a2: f64,
    #[serde(rename = "A1")]
    pub v_a1: HalfPlanePoint,
    #[serde(rename = "A2")]
    pub v_a2: HalfPlanePoint,
    #[serde(rename = "C1")]
    pub v_c1: HalfPlanePoint,
    #[serde(rename = "C2")]
    pub v_c2: HalfPlanePoint,
    #[serde(rename = "E0")]
    pub v_e0: HalfPlanePoint,
    #[serde(rename = "E1")]
    pub v_e1: HalfPlanePoint,
    #[serde(rename = "E2")]
    pub v_e2: HalfPlanePoint,
    #[serde(rename = "B1")]
    pub v_b1: HalfPlanePoint,
    #[serde(rename = "B2")]
    pub v_b2: HalfPlanePoint,
    #[serde(rename = "H1")]
    pub v_h1: HalfPlanePoint,
    #[serde(rename = "H2")]
    pub v_h2: HalfPlanePoint,
    #[serde(rename = "D0")]
    pub v_d0: HalfPlanePoint,
    #[serde(rename = "D1")]
    pub v_d1: HalfPlanePoint,
    #[serde(rename = "D2")]
    pub v_d2: HalfPlanePoint,
    #[serde(rename = "A1p")]
    pub v_a1p: HalfPlanePoint,
    #[serde(rename = "A2p")]
    pub v_a2p: HalfPlanePoint,
    #[serde(rename = "C1p")]
    pub v_c1p: HalfPlanePoint,
    #[serde(rename = "C2p")]
    pub v_c2p: HalfPlanePoint,
}

/// Which piece of the hexagon a point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    /// Below `β`, `t ≤ −η₁`.
    OuterLeft,
    /// Below `β`, `−η₁ < t ≤ 0`.
    InnerLeft,
    /// Below `β`, `0 < t ≤ η₂`.
    InnerRight,
    /// Below `β`, `t > η₂`.
    OuterRight,
    /// Between `β` and `α₃` (closed at `β`).
    Upper,
}

impl Region {
    pub const ALL: [Region; 5] = [
        Region::OuterLeft,
        Region::InnerLeft,
        Region::InnerRight,
        Region::OuterRight,
        Region::Upper,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Region::OuterLeft => "outer-left",
            Region::InnerLeft => "inner-left",
            Region::InnerRight => "inner-right",
            Region::OuterRight => "outer-right",
            Region::Upper => "upper",
        }
    }

    pub fn is_lower(&self) -> bool {
        !matches!(self, Region::Upper)
    }
}

impl std::fmt::Display for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A collar or reduced collar around a boundary curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CollarSpec {
    pub width: f64,
    pub boundary_length: f64,
}

/// Half-width `arcsinh(1/sinh(l/2))` of the standard collar.
pub fn collar_width(l: f64) -> Result<f64> {
    if !(l.is_finite() && l > 0.0) {
        return Err(Error::Domain {
            name: "l",
            value: l,
            range: "(0, inf)",
        });
    }
    Ok((1.0 / (0.5 * l).sinh()).asinh())
}

/// Reduced collar of width `log(2/l)`; empty for `l ≥ 2`.
///
/// For `l = 0` the collar is the cusp region outside the horocycle of
/// length 1, which has no finite width; `width` is reported as infinity.
pub fn reduced_collar(l: f64) -> Result<CollarSpec> {
    if !(l.is_finite() && l >= 0.0) {
        return Err(Error::Domain {
            name: "l",
            value: l,
            range: "[0, inf)",
        });
    }
    Ok(if l == 0.0 {
        CollarSpec {
            width: f64::INFINITY,
            boundary_length: 1.0,
        }
    } else if l >= 2.0 {
        CollarSpec {
            width: 0.0,
            boundary_length: l,
        }
    } else {
        CollarSpec {
            width: (2.0 / l).ln(),
            boundary_length: 1.0 + 0.25 * l * l,
        }
    })
}

/// `asinh(u + d) − asinh(u)` without cancellation, for `u, d ≥ 0`.
fn asinh_increment(u: f64, d: f64) -> f64 {
    let x = u + d;
    let num = d * (u + x);
    let den = x * (1.0 + u * u).sqrt() + u * (1.0 + x * x).sqrt();
    (num / den).asinh()
}

/// Solve the hexagon of `Y_{l1,l2,ε}` and place it in the half plane.
pub fn solve_hexagon(p: &YPieceParams) -> Result<HexagonSolution> {
    let p = YPieceParams::new(p.l1, p.l2, p.eps)?;
    let alpha1 = 0.5 * p.l1;
    let alpha2 = 0.5 * p.l2;
    let half_eps = 0.5 * p.eps;
    let (ch1, ch2) = (alpha1.cosh(), alpha2.cosh());

    // λ ↦ ε₁(λ) + ε₂(λ) − ε/2 is strictly decreasing.
    let split = |lam: f64| {
        let s = lam.sinh();
        (ch1 / s).asinh() + (ch2 / s).asinh() - half_eps
    };
    let base = (ch1.max(ch2) / half_eps.sinh()).asinh();
    let lambda = roots::bisect(split, base - 1.0, base + 50.0, 1e-14)?;
    let sl = lambda.sinh();
    let eps1 = (ch1 / sl).asinh();
    let eps2 = (ch2 / sl).asinh();

    let (sa1, sa2) = (alpha1.sinh(), alpha2.sinh());
    let c1 = (eps1.cosh() / sa1).asinh();
    let c2 = (eps2.cosh() / sa2).asinh();
    let cp1 = (1.0 / sa1).asinh();
    let cp2 = (1.0 / sa2).asinh();
    let delta1 = asinh_increment(1.0 / sa1, 2.0 * (0.5 * eps1).sinh().powi(2) / sa1);
    let delta2 = asinh_increment(1.0 / sa2, 2.0 * (0.5 * eps2).sinh().powi(2) / sa2);

    let w = (2.0 / p.eps).ln();
    let kappa = 1.0 / w.cosh();
    let a1 = -ch1;
    let a2 = ch2;
    let a = ch1 + ch2;

    let el = lambda.exp();
    let pt = HalfPlanePoint::from_complex_unchecked;
    let b1 = beta_c(lambda, w, kappa, -eps1 * w.cosh());
    let b2 = beta_c(lambda, w, kappa, eps2 * w.cosh());
    let eta1 = fermi_c(b1).t.abs();
    let eta2 = fermi_c(b2).t.abs();

    let i = Complex64::i();
    Ok(HexagonSolution {
        l1: p.l1,
        l2: p.l2,
        eps: p.eps,
        alpha1,
        alpha2,
        alpha3: half_eps,
        lambda,
        eps1,
        eps2,
        c1,
        c2,
        cp1,
        cp2,
        delta1,
        delta2,
        eta1,
        eta2,
        w,
        kappa,
        a,
        a1,
        a2,
        v_a1: pt(rgh(-c1, up(alpha1, i))),
        v_a2: pt(rgh(c2, up(alpha2, i))),
        v_c1: gamma_point(-c1),
        v_c2: gamma_point(c2),
        v_e0: pt(i * el),
        v_e1: pt(gamma_point(-eps1).to_complex() * el),
        v_e2: pt(gamma_point(eps2).to_complex() * el),
        v_b1: pt(b1),
        v_b2: pt(b2),
        v_h1: gamma_point(-eta1),
        v_h2: gamma_point(eta2),
        v_d0: HalfPlanePoint::I,
        v_d1: gamma_point(-delta1),
        v_d2: gamma_point(delta2),
        v_a1p: pt(Complex64::new(a1, sa1)),
        v_a2p: pt(Complex64::new(a2, sa2)),
        v_c1p: gamma_point(-cp1),
        v_c2p: gamma_point(cp2),
    })
}

/// `β(s) = e^λ (sinh(κs) cosh w + i) / (cosh(κs) cosh w + sinh w)`.
#[inline]
pub(crate) fn beta_c(lambda: f64, w: f64, kappa: f64, s: f64) -> Complex64 {
    let (sk, ck) = ((kappa * s).sinh(), (kappa * s).cosh());
    let (sw, cw) = (w.sinh(), w.cosh());
    Complex64::new(sk * cw, 1.0) * (lambda.exp() / (ck * cw + sw))
}

impl HexagonSolution {
    pub fn params(&self) -> YPieceParams {
        YPieceParams {
            l1: self.l1,
            l2: self.l2,
            eps: self.eps,
        }
    }

    /// Largest residual of the right-angled pentagon relations on both
    /// halves, and of `ε₁ + ε₂ = ε/2`.
    pub fn pentagon_residual(&self) -> f64 {
        let mut r = (self.eps1 + self.eps2 - 0.5 * self.eps).abs();
        for (al, e, c, cp) in [
            (self.alpha1, self.eps1, self.c1, self.cp1),
            (self.alpha2, self.eps2, self.c2, self.cp2),
        ] {
            r = r
                .max((e.sinh() * self.lambda.sinh() - al.cosh()).abs())
                .max((al.sinh() * c.sinh() - e.cosh()).abs())
                .max((al.sinh() * cp.sinh() - 1.0).abs());
        }
        r
    }

    /// Parameter interval `[−ε₁ cosh w, ε₂ cosh w]` of the unit speed `β`.
    pub fn beta_range(&self) -> (f64, f64) {
        let cw = self.w.cosh();
        (-self.eps1 * cw, self.eps2 * cw)
    }

    pub(crate) fn beta_c(&self, s: f64) -> Complex64 {
        beta_c(self.lambda, self.w, self.kappa, s)
    }

    pub fn eps_star(&self) -> f64 {
        self.params().eps_star()
    }

    /// Signed distance to the geodesic carrying `α₃`, negative on the side
    /// of `Γ`.
    pub fn signed_dist_to_alpha3(&self, z: Complex64) -> f64 {
        signed_dist_to_circle(z, self.lambda.exp())
    }

    /// Distance to the geodesic carrying `α_i` (`i ∈ {1, 2}`) in the source.
    pub fn dist_to_alpha(&self, i: usize, z: Complex64) -> f64 {
        let shift = if i == 1 { self.c1 } else { -self.c2 };
        dist_to_imaginary_axis(rgh(shift, z))
    }

    /// Distance to the geodesic carrying `α'_i` in the cusped target.
    pub fn dist_to_target_alpha(&self, i: usize, z: Complex64) -> f64 {
        let shift = if i == 1 { self.cp1 } else { -self.cp2 };
        dist_to_imaginary_axis(rgh(shift, z))
    }

    /// Signed hyperbolic margins to each side, positive inside. Order:
    /// `c, α₁, α₂, α₃, d₁, d₂`.
    pub(crate) fn side_margins(&self, z: Complex64) -> [f64; 6] {
        let f = fermi_c(z);
        let to_d1 = rgh(self.delta1, z);
        let to_d2 = rgh(-self.delta2, z);
        [
            f.r,
            ((f.t + self.c1).sinh() * f.r.cosh()).asinh(),
            ((self.c2 - f.t).sinh() * f.r.cosh()).asinh(),
            -self.signed_dist_to_alpha3(z),
            ((to_d1.re - self.a1) / to_d1.im).asinh(),
            ((self.a2 - to_d2.re) / to_d2.im).asinh(),
        ]
    }

    /// Whether `z` lies in the closed hexagon, up to [`MEMBERSHIP_TOL`].
    pub fn contains(&self, z: HalfPlanePoint) -> bool {
        self.side_margins(z.to_complex())
            .iter()
            .all(|&m| m >= -MEMBERSHIP_TOL)
    }

    /// Region dispatch without the membership test.
    pub(crate) fn region_of(&self, z: Complex64) -> Region {
        if self.signed_dist_to_alpha3(z) >= -self.w {
            return Region::Upper;
        }
        let t = fermi_c(z).t;
        if t <= -self.eta1 {
            Region::OuterLeft
        } else if t <= 0.0 {
            Region::InnerLeft
        } else if t <= self.eta2 {
            Region::InnerRight
        } else {
            Region::OuterRight
        }
    }

    /// Vertices of the source hexagon in boundary order
    /// `A₁, C₁, C₂, A₂, E₂, E₁`.
    pub fn source_polygon(&self) -> [HalfPlanePoint; 6] {
        [
            self.v_a1, self.v_c1, self.v_c2, self.v_a2, self.v_e2, self.v_e1,
        ]
    }

    /// Fermi coordinates of a vertex, for plotting.
    pub fn fermi_of(&self, z: HalfPlanePoint) -> FermiCoord {
        fermi_c(z.to_complex())
    }
}

/// Unit speed parametrisation of the equidistant curve `β` at distance `w`
/// from `α₃`.
pub fn beta_point(hex: &HexagonSolution, s: f64) -> Result<HalfPlanePoint> {
    let (lo, hi) = hex.beta_range();
    let slack = 1e-12 * (hi - lo);
    if !(s >= lo - slack && s <= hi + slack) {
        return Err(Error::OutOfDomain {
            region: "the parameter range of beta",
            x: s,
            y: 0.0,
        });
    }
    Ok(HalfPlanePoint::from_complex_unchecked(hex.beta_c(s)))
}

/// Region tag of a point of the closed hexagon.
pub fn classify_region(hex: &HexagonSolution, z: HalfPlanePoint) -> Result<Region> {
    if !hex.contains(z) {
        return Err(Error::OutOfDomain {
            region: "the source hexagon",
            x: z.x(),
            y: z.y(),
        });
    }
    Ok(hex.region_of(z.to_complex()))
}
