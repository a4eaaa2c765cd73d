//! The map above `β`: `φ^β = G^β ∘ F^β`.
//!
//! `n(z) = e^{ε₁}(z + e^λ)/(e^λ − z)` is an isometry sending `α₃` onto the
//! imaginary segment `[i, i e^{ε/2}]` and `β` onto the ray at angle `W`
//! from the imaginary axis. `ζ ↦ log(−iζ)` then straightens the sector to
//! the rectangle `[0, ε/2] × [−W, 0]`, which `F^β` scales onto
//! `[a₁, a₂] × [2a, 2a(1 + W/ε)]`. `G^β` squeezes the height down to
//! `2a/ε*`.

use num_complex::Complex64;

use super::MapAssembly;
use crate::error::{Error, Result};
use crate::hyp::HalfPlanePoint;

impl MapAssembly {
    /// The isometry `n`, taking the part above `β` to the sector `Ω`.
    #[inline]
    pub fn n_map(&self, z: Complex64) -> Complex64 {
        let el = self.hex.lambda.exp();
        (z + el) / (el - z) * self.hex.eps1.exp()
    }

    /// `F^β` on complex numbers, without the membership check.
    pub(crate) fn f_upper_c(&self, z: Complex64) -> Result<Complex64> {
        let h = &self.hex;
        let el = h.lambda.exp();
        if (z - el).norm() <= 1e-300 {
            return Err(Error::OutOfDomain {
                region: "the part of the hexagon above beta (pole of n)",
                x: z.re,
                y: z.im,
            });
        }
        let zeta = -Complex64::i() * self.n_map(z);
        // Principal branch; the sector lies in the right half plane.
        if zeta.re <= 0.0 {
            return Err(Error::Invariant(format!(
                "log argument {zeta} crosses the branch cut"
            )));
        }
        let scale = 2.0 * h.a / h.eps;
        Ok(zeta.ln() * scale + Complex64::new(h.a1, 2.0 * h.a * (1.0 + self.big_w / h.eps)))
    }

    pub(crate) fn f_upper_inverse_c(&self, q: Complex64) -> Complex64 {
        let h = &self.hex;
        let u = (q - Complex64::new(h.a1, 2.0 * h.a * (1.0 + self.big_w / h.eps)))
            * (h.eps / (2.0 * h.a));
        let m = Complex64::i() * u.exp() * (-h.eps1).exp();
        (m - 1.0) / (m + 1.0) * h.lambda.exp()
    }

    /// `F^β(z) = (2a/ε) log(−i n(z)) + a₁ + 2ia(1 + W/ε)`.
    pub fn f_upper(&self, z: HalfPlanePoint) -> Result<HalfPlanePoint> {
        let w = self.f_upper_c(z.to_complex())?;
        HalfPlanePoint::from_complex(w)
    }

    /// `G^β(x, y) = (x, (y − 2a)/k_ε + 2a)`.
    pub fn g_upper(&self, x: f64, y: f64) -> (f64, f64) {
        let m = 2.0 * self.hex.a;
        (x, (y - m) / self.k_eps + m)
    }

    pub(crate) fn g_upper_inverse(&self, x: f64, y: f64) -> (f64, f64) {
        let m = 2.0 * self.hex.a;
        (x, (y - m) * self.k_eps + m)
    }
}
