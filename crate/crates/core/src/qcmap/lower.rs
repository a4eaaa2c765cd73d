//! The map below `β`: `φ_β = H_β ∘ G_β ∘ F_β`.
//!
//! * `F_β` compresses the strips `−η₁ ≤ t ≤ η₂` horizontally in Fermi
//!   coordinates and translates the outer parts by `±δ_i`.
//! * `G_β` stretches `a ≤ y ≤ f(x)` affinely onto `a ≤ y ≤ 2a`, where the
//!   graph of `f` is `F_β ∘ β`.
//! * `H_β` is the inverse of the shear `L_β(x, y) = (x + ((y−a)/a)(b₁(x)−x), y)`
//!   which brings the image of `β` to constant speed.

use num_complex::Complex64;

use super::MapAssembly;
use crate::error::{Error, Result};
use crate::hyp::{fermi_c, uhp_c, FermiCoord};
use crate::pants::{HexagonSolution, Region};
use crate::roots;

/// Relative slack accepted at the ends of `[a₁, a₂]`.
const EDGE_SLACK: f64 = 1e-9;

/// `F_β` in Fermi coordinates.
pub fn f_beta(hex: &HexagonSolution, c: FermiCoord) -> FermiCoord {
    let t = c.t;
    let tp = if t <= -hex.eta1 {
        t + hex.delta1
    } else if t <= 0.0 {
        (1.0 - hex.delta1 / hex.eta1) * t
    } else if t <= hex.eta2 {
        (1.0 - hex.delta2 / hex.eta2) * t
    } else {
        t - hex.delta2
    };
    FermiCoord { t: tp, r: c.r }
}

/// `F_β` restricted to the branch of `region`, extended past the branch
/// boundaries by the same formula.
#[inline]
pub(crate) fn f_beta_branch(hex: &HexagonSolution, region: Region, t: f64) -> f64 {
    match region {
        Region::OuterLeft => t + hex.delta1,
        Region::InnerLeft => (1.0 - hex.delta1 / hex.eta1) * t,
        Region::InnerRight => (1.0 - hex.delta2 / hex.eta2) * t,
        Region::OuterRight => t - hex.delta2,
        Region::Upper => t,
    }
}

/// Inverse of [`f_beta_branch`].
#[inline]
pub(crate) fn f_beta_branch_inverse(hex: &HexagonSolution, region: Region, tp: f64) -> f64 {
    match region {
        Region::OuterLeft => tp - hex.delta1,
        Region::InnerLeft => tp / (1.0 - hex.delta1 / hex.eta1),
        Region::InnerRight => tp / (1.0 - hex.delta2 / hex.eta2),
        Region::OuterRight => tp + hex.delta2,
        Region::Upper => tp,
    }
}

pub(crate) fn f_beta_inverse(hex: &HexagonSolution, c: FermiCoord) -> FermiCoord {
    let tp = c.t;
    let t = if tp <= -hex.eta1 + hex.delta1 {
        tp - hex.delta1
    } else if tp <= 0.0 {
        tp / (1.0 - hex.delta1 / hex.eta1)
    } else if tp <= hex.eta2 - hex.delta2 {
        tp / (1.0 - hex.delta2 / hex.eta2)
    } else {
        tp + hex.delta2
    };
    FermiCoord { t, r: c.r }
}

#[inline]
pub(crate) fn f_beta_c(hex: &HexagonSolution, z: Complex64) -> Complex64 {
    uhp_c(f_beta(hex, fermi_c(z)))
}

impl MapAssembly {
    /// `β̃(s) = F_β(β(s))`.
    #[inline]
    pub(crate) fn beta_tilde(&self, s: f64) -> Complex64 {
        f_beta_c(&self.hex, self.hex.beta_c(s))
    }

    pub(crate) fn beta_tilde_derivative(&self, s: f64) -> Complex64 {
        let (lo, hi) = self.hex.beta_range();
        let h = 1e-7 * (hi - lo);
        (self.beta_tilde(s + h) - self.beta_tilde(s - h)) / (2.0 * h)
    }

    /// Parameter `s` of `β` with `Re β̃(s) = x`; no range check on `x`.
    pub(crate) fn beta_param_at(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.hex.beta_range();
        let pad = 0.05 * (hi - lo);
        roots::newton_bisect(
            |s| (self.beta_tilde(s).re - x, self.beta_tilde_derivative(s).re),
            lo - pad,
            hi + pad,
        )
    }

    pub(crate) fn f_unchecked(&self, x: f64) -> Result<f64> {
        let s = self.beta_param_at(x)?;
        Ok(self.beta_tilde(s).im)
    }

    fn check_abscissa(&self, x: f64) -> Result<()> {
        let h = &self.hex;
        let slack = EDGE_SLACK * h.a;
        if x >= h.a1 - slack && x <= h.a2 + slack {
            Ok(())
        } else {
            Err(Error::OutOfDomain {
                region: "[a1, a2]",
                x,
                y: 0.0,
            })
        }
    }

    /// The function whose graph is `F_β ∘ β`, on `[a₁, a₂]`.
    pub fn eval_f(&self, x: f64) -> Result<f64> {
        self.check_abscissa(x)?;
        self.f_unchecked(x.clamp(self.hex.a1, self.hex.a2))
    }

    /// Affine change of parameter `[a₁, a₂] → [−ε₁ cosh w, ε₂ cosh w]`.
    #[inline]
    pub(crate) fn reparam(&self, x: f64) -> f64 {
        let (lo, hi) = self.hex.beta_range();
        lo + (x - self.hex.a1) * (hi - lo) / self.hex.a
    }

    /// Inverse of [`Self::reparam`].
    #[inline]
    pub(crate) fn reparam_inverse(&self, s: f64) -> f64 {
        let (lo, hi) = self.hex.beta_range();
        self.hex.a1 + (s - lo) * self.hex.a / (hi - lo)
    }

    #[inline]
    pub(crate) fn b1_unchecked(&self, x: f64) -> f64 {
        self.beta_tilde(self.reparam(x)).re
    }

    /// Abscissa `b₁(x)` of `G_β ∘ F_β ∘ β` after the affine reparametrisation.
    pub fn eval_b1(&self, x: f64) -> Result<f64> {
        self.check_abscissa(x)?;
        Ok(self.b1_unchecked(x))
    }

    /// `G_β(x, y)`.
    pub fn g_beta(&self, x: f64, y: f64) -> Result<(f64, f64)> {
        let a = self.hex.a;
        if y <= a {
            return Ok((x, y));
        }
        let f = self.eval_f(x)?;
        if y > f * (1.0 + 1e-9) {
            return Err(Error::OutOfDomain {
                region: "the region below the graph of f",
                x,
                y,
            });
        }
        self.g_beta_with(x, y, f).map(|y| (x, y))
    }

    #[inline]
    pub(crate) fn g_beta_with(&self, _x: f64, y: f64, f: f64) -> Result<f64> {
        let a = self.hex.a;
        if f <= a {
            return Err(Error::Invariant(format!(
                "f(x) = {f} does not exceed a = {a}"
            )));
        }
        Ok(a * (1.0 + (y - a) / (f - a)))
    }

    pub(crate) fn g_beta_inverse_with(&self, y: f64, f: f64) -> f64 {
        let a = self.hex.a;
        a + (y / a - 1.0) * (f - a)
    }

    /// `L_β(x, y) = (x + ((y − a)/a)(b₁(x) − x), y)`.
    pub fn l_beta(&self, x: f64, y: f64) -> (f64, f64) {
        let a = self.hex.a;
        if y <= a {
            return (x, y);
        }
        let c = (y - a) / a;
        (x + c * (self.b1_unchecked(x) - x), y)
    }

    pub(crate) fn h_beta_unchecked(&self, xp: f64, y: f64) -> Result<f64> {
        let h = &self.hex;
        let a = h.a;
        if y <= a {
            return Ok(xp);
        }
        let c = (y - a) / a;
        let step = 1e-7 * a;
        let pad = 1e-3 * a;
        roots::newton_bisect(
            |x| {
                let val = x + c * (self.b1_unchecked(x) - x) - xp;
                let db = (self.b1_unchecked(x + step) - self.b1_unchecked(x - step)) / (2.0 * step);
                (val, 1.0 + c * (db - 1.0))
            },
            h.a1 - pad,
            h.a2 + pad,
        )
    }

    /// `H_β = L_β⁻¹` on the rectangle `[a₁, a₂] × [a, 2a]`, identity below.
    pub fn h_beta(&self, xp: f64, y: f64) -> Result<(f64, f64)> {
        self.check_abscissa(xp)?;
        if y > 2.0 * self.hex.a * (1.0 + 1e-9) {
            return Err(Error::OutOfDomain {
                region: "the rectangle a <= y <= 2a",
                x: xp,
                y,
            });
        }
        Ok((self.h_beta_unchecked(xp, y)?, y))
    }
}
