//! Upper half-plane kernel.
//!
//! The metric is `ds² = (dx² + dy²)/y²`. Fermi coordinates `(t, r)` are taken
//! relative to the unit half-circle `Γ` through `i` with endpoints `±1`:
//! `t` is the signed arclength of the foot point (`Γ(0) = i`, increasing
//! towards `+1`) and `r` is the signed distance to `Γ`, positive outside the
//! unit circle. In these coordinates `ds² = cosh(r)² dt² + dr²`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point `x + iy` of the hyperbolic plane, `y > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct HalfPlanePoint {
    x: f64,
    y: f64,
}

impl HalfPlanePoint {
    pub const I: HalfPlanePoint = HalfPlanePoint { x: 0.0, y: 1.0 };

    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) || y <= 0.0 {
            return Err(Error::OutOfDomain {
                region: "the upper half plane",
                x,
                y,
            });
        }
        Ok(Self { x, y })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    /// Caller guarantees `y > 0` and finiteness.
    pub(crate) fn from_complex_unchecked(z: Complex64) -> Self {
        debug_assert!(z.im > 0.0 && z.re.is_finite() && z.im.is_finite());
        Self { x: z.re, y: z.im }
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    #[inline]
    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn dist(&self, other: &HalfPlanePoint) -> f64 {
        hyp_dist(*self, *other)
    }
}

impl TryFrom<[f64; 2]> for HalfPlanePoint {
    type Error = Error;

    fn try_from(v: [f64; 2]) -> Result<Self> {
        Self::new(v[0], v[1])
    }
}

impl From<HalfPlanePoint> for [f64; 2] {
    fn from(p: HalfPlanePoint) -> Self {
        [p.x, p.y]
    }
}

/// Fermi coordinates relative to `Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FermiCoord {
    pub t: f64,
    pub r: f64,
}

impl FermiCoord {
    pub fn new(t: f64, r: f64) -> Self {
        Self { t, r }
    }
}

/// A tangent vector `v` (Euclidean components) at `base`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector {
    pub base: HalfPlanePoint,
    pub v: Complex64,
}

impl TangentVector {
    pub fn new(base: HalfPlanePoint, vx: f64, vy: f64) -> Self {
        Self {
            base,
            v: Complex64::new(vx, vy),
        }
    }
}

/// `z ↦ e^s z`, translation by `s` along the imaginary axis.
pub fn mobius_up(s: f64, z: HalfPlanePoint) -> HalfPlanePoint {
    HalfPlanePoint::from_complex_unchecked(up(s, z.to_complex()))
}

/// Translation by `s` along `Γ`.
pub fn mobius_rgh(s: f64, z: HalfPlanePoint) -> HalfPlanePoint {
    HalfPlanePoint::from_complex_unchecked(rgh(s, z.to_complex()))
}

#[inline]
pub(crate) fn up(s: f64, z: Complex64) -> Complex64 {
    z * s.exp()
}

#[inline]
pub(crate) fn rgh(s: f64, z: Complex64) -> Complex64 {
    let (sh, ch) = ((0.5 * s).sinh(), (0.5 * s).cosh());
    (z * ch + sh) / (z * sh + ch)
}

/// `Γ(t) = rgh(t, i) = tanh(t) + i/cosh(t)`.
pub fn gamma_point(t: f64) -> HalfPlanePoint {
    HalfPlanePoint {
        x: t.tanh(),
        y: 1.0 / t.cosh(),
    }
}

/// Hyperbolic distance, via `2 asinh(|z₁ − z₂| / (2√(y₁y₂)))`.
pub fn hyp_dist(z1: HalfPlanePoint, z2: HalfPlanePoint) -> f64 {
    let d = (z1.to_complex() - z2.to_complex()).norm();
    2.0 * (0.5 * d / (z1.y * z2.y).sqrt()).asinh()
}

/// Fermi coordinates `(τ(z), ρ(z))` of `z` relative to `Γ`.
pub fn fermi_from_uhp(z: HalfPlanePoint) -> FermiCoord {
    fermi_c(z.to_complex())
}

#[inline]
pub(crate) fn fermi_c(z: Complex64) -> FermiCoord {
    // atanh(2x/(|z|²+1)) = log(|z+1|/|z-1|), which stays accurate near ±1.
    let t = ((z + 1.0).norm() / (z - 1.0).norm()).ln();
    let r = ((z.norm_sqr() - 1.0) / (2.0 * z.im)).asinh();
    FermiCoord { t, r }
}

/// Inverse of [`fermi_from_uhp`]: `z = rgh(t, up(r, i))`.
pub fn uhp_from_fermi(c: FermiCoord) -> Result<HalfPlanePoint> {
    if !(c.t.is_finite() && c.r.is_finite()) {
        return Err(Error::NumericRange("uhp_from_fermi"));
    }
    let z = uhp_c(c);
    if !(z.re.is_finite() && z.im.is_finite()) || z.im <= 0.0 {
        return Err(Error::NumericRange("uhp_from_fermi"));
    }
    Ok(HalfPlanePoint::from_complex_unchecked(z))
}

#[inline]
pub(crate) fn uhp_c(c: FermiCoord) -> Complex64 {
    rgh(c.t, Complex64::new(0.0, c.r.exp()))
}

/// Hyperbolic norm `|v| / y` of a tangent vector.
pub fn hyp_norm(v: TangentVector) -> f64 {
    v.v.norm() / v.base.y
}

/// Distance from `z` to the imaginary axis.
#[inline]
pub(crate) fn dist_to_imaginary_axis(z: Complex64) -> f64 {
    (z.re.abs() / z.im).asinh()
}

/// Signed distance from `z` to the geodesic `|z| = radius`, positive outside.
#[inline]
pub(crate) fn signed_dist_to_circle(z: Complex64, radius: f64) -> f64 {
    fermi_c(z / radius).r
}
