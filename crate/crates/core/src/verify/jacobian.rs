//! Central-difference Jacobians, Beltrami coefficients and hyperbolic
//! length distortion.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyp::{HalfPlanePoint, TangentVector};

/// Default step `h = 1e-6 · max(1, |z|)`.
pub fn default_step(z: Complex64) -> f64 {
    1e-6 * z.norm().max(1.0)
}

/// `[[u_x, u_y], [v_x, v_y]]` for `map = u + iv`.
pub fn jacobian<F>(map: F, z: Complex64, h: f64) -> Result<[[f64; 2]; 2]>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let dx = (map(z + h)? - map(z - h)?) / (2.0 * h);
    let dy = (map(z + Complex64::new(0.0, h))? - map(z - Complex64::new(0.0, h))?) / (2.0 * h);
    Ok([[dx.re, dy.re], [dx.im, dy.im]])
}

/// `(f_z, f_z̄)` from a real Jacobian.
pub fn wirtinger(jac: &[[f64; 2]; 2]) -> (Complex64, Complex64) {
    let [[ux, uy], [vx, vy]] = *jac;
    let fz = Complex64::new(ux + vy, vx - uy) * 0.5;
    let fzb = Complex64::new(ux - vy, vx + uy) * 0.5;
    (fz, fzb)
}

/// Singular values `(s_min, s_max)` of a 2×2 matrix.
pub fn singular_values(jac: &[[f64; 2]; 2]) -> (f64, f64) {
    let (fz, fzb) = wirtinger(jac);
    let (p, q) = (fz.norm(), fzb.norm());
    ((p - q).abs(), p + q)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeltramiSample {
    pub z: HalfPlanePoint,
    pub mu_abs: f64,
    pub q: f64,
    pub jac: [[f64; 2]; 2],
}

impl BeltramiSample {
    pub fn from_jacobian(z: HalfPlanePoint, jac: [[f64; 2]; 2]) -> Result<Self> {
        let (fz, fzb) = wirtinger(&jac);
        let mu_abs = if fz.norm() == 0.0 {
            f64::INFINITY
        } else {
            fzb.norm() / fz.norm()
        };
        if !(mu_abs < 1.0) {
            return Err(Error::Degenerate { mu_abs });
        }
        Ok(Self {
            z,
            mu_abs,
            q: (1.0 + mu_abs) / (1.0 - mu_abs),
            jac,
        })
    }
}

/// `μ = f_z̄ / f_z` and `q = (1 + |μ|)/(1 − |μ|)` by central differences.
pub fn numeric_beltrami<F>(map: F, z: HalfPlanePoint, h: f64) -> Result<BeltramiSample>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let jac = jacobian(map, z.to_complex(), h)?;
    BeltramiSample::from_jacobian(z, jac)
}

/// `‖dF(v)‖ / ‖v‖` in the hyperbolic metric.
pub fn length_distortion<F>(map: F, v: TangentVector, h: f64) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let z = v.base.to_complex();
    let image = map(z)?;
    if !(image.im > 0.0) {
        return Err(Error::NumericRange("image leaves the upper half plane"));
    }
    let jac = jacobian(&map, z, h)?;
    let [[ux, uy], [vx, vy]] = jac;
    let dv = Complex64::new(ux * v.v.re + uy * v.v.im, vx * v.v.re + vy * v.v.im);
    if v.v.norm() == 0.0 {
        return Err(Error::Degenerate { mu_abs: f64::NAN });
    }
    Ok((dv.norm() / image.im) / (v.v.norm() / z.im))
}

/// Worst two-sided hyperbolic length distortion `k` of a Jacobian at a
/// point of height `y` with image height `y_image`.
pub fn distortion_of(jac: &[[f64; 2]; 2], y: f64, y_image: f64) -> Result<f64> {
    let (smin, smax) = singular_values(jac);
    if !(smin > 0.0) {
        return Err(Error::Degenerate { mu_abs: 1.0 });
    }
    let scale = y / y_image;
    Ok((smax * scale).max(1.0 / (smin * scale)))
}

/// Worst two-sided hyperbolic length distortion of `map` at `z`.
pub fn max_length_distortion<F>(map: F, z: HalfPlanePoint, h: f64) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let zc = z.to_complex();
    let image = map(zc)?;
    let jac = jacobian(&map, zc, h)?;
    distortion_of(&jac, zc.im, image.im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp::up;

    fn linear(m: [[f64; 2]; 2]) -> impl Fn(Complex64) -> Result<Complex64> {
        move |z| {
            Ok(Complex64::new(
                m[0][0] * z.re + m[0][1] * z.im,
                m[1][0] * z.re + m[1][1] * z.im,
            ))
        }
    }

    #[test]
    fn identity_is_conformal() {
        let z = HalfPlanePoint::new(0.3, 1.7).unwrap();
        let s = numeric_beltrami(Ok, z, 1e-6).unwrap();
        assert!(s.mu_abs < 1e-9);
        assert!((s.q - 1.0).abs() < 1e-9);
        let v = TangentVector::new(z, 1.0, 2.0);
        let k = length_distortion(Ok, v, 1e-6).unwrap();
        assert!((k - 1.0).abs() < 1e-9);
    }

    #[test]
    fn squeeze_matches_closed_form() {
        let z = HalfPlanePoint::new(-0.4, 2.0).unwrap();
        for &d in &[0.01, 0.1, 0.3] {
            let s = numeric_beltrami(linear([[1.0, 0.0], [0.0, 1.0 - d]]), z, 1e-6).unwrap();
            assert!((s.q - 1.0 / (1.0 - d)).abs() < 1e-8, "d={d} q={}", s.q);
            assert!((s.q - (1.0 + s.mu_abs) / (1.0 - s.mu_abs)).abs() < 1e-12);
        }
    }

    #[test]
    fn isometry_preserves_lengths() {
        let z = HalfPlanePoint::new(0.2, 0.9).unwrap();
        for &s in &[-1.5, 0.3, 2.0] {
            for &(vx, vy) in &[(1.0, 0.0), (0.0, 1.0), (0.6, -0.8)] {
                let v = TangentVector::new(z, vx, vy);
                let k = length_distortion(|z| Ok(up(s, z)), v, 1e-6).unwrap();
                assert!((k - 1.0).abs() < 1e-8);
            }
            let k = max_length_distortion(|z| Ok(up(s, z)), z, 1e-6).unwrap();
            assert!((k - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn orientation_reversal_is_rejected() {
        let z = HalfPlanePoint::I;
        let err = numeric_beltrami(|z: Complex64| Ok(-z.conj()), z, 1e-6).unwrap_err();
        assert!(matches!(err, Error::Degenerate { .. }));
    }
}
