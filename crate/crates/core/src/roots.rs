//! Bracketed scalar root finders.
//!
//! Both solvers need `f(lo)` and `f(hi)` of opposite sign and keep the root
//! inside the bracket at every step, so they return a root of a continuous
//! `f` or fail loudly.

use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 200;
const NEWTON_BUDGET: usize = 40;

/// Plain bisection, run until the bracket cannot be halved any further or
/// `|f| ≤ ftol`.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, ftol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::Invariant(format!(
            "bisection bracket [{lo}, {hi}] does not straddle a root ({flo}, {fhi})"
        )));
    }
    for _ in 0..MAX_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= lo.max(hi) {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm.abs() <= ftol && (hi - lo).abs() <= 4.0 * f64::EPSILON * mid.abs().max(1.0) {
            return Ok(mid);
        }
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
    })
}

/// Newton iteration safeguarded by bisection.
///
/// `fdf` returns `(f(x), f'(x))`. A Newton step that leaves the current
/// bracket (or a vanishing derivative) is replaced by a bisection step.
/// Iterates until the step is below a few ulps of `x`.
pub fn newton_bisect<F>(mut fdf: F, lo: f64, hi: f64) -> Result<f64>
where
    F: FnMut(f64) -> (f64, f64),
{
    let (flo, _) = fdf(lo);
    let (fhi, _) = fdf(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::Invariant(format!(
            "newton bracket [{lo}, {hi}] does not straddle a root ({flo}, {fhi})"
        )));
    }
    // Orient so that f(neg) < 0 < f(pos).
    let (mut neg, mut pos) = if flo < 0.0 { (lo, hi) } else { (hi, lo) };
    let mut x = 0.5 * (lo + hi);
    for iter in 0..MAX_ITERATIONS {
        let (fx, dfx) = fdf(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx < 0.0 {
            neg = x;
        } else {
            pos = x;
        }
        let (a, b) = (neg.min(pos), neg.max(pos));
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            return Ok(x);
        }
        // Rounding noise in f can stall Newton a few ulps from the root;
        // past NEWTON_BUDGET steps plain bisection finishes the job.
        let newton = x - fx / dfx;
        let next =
            if iter < NEWTON_BUDGET && dfx != 0.0 && newton.is_finite() && newton > a && newton < b
            {
                newton
            } else {
                mid
            };
        let tol = 4.0 * f64::EPSILON * next.abs().max(f64::MIN_POSITIVE);
        if (next - x).abs() <= tol || b - a <= tol {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 0.0).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn bisect_decreasing_function() {
        let r = bisect(|x| 1.0 - x.exp(), -1.0, 3.0, 0.0).unwrap();
        assert!(r.abs() < 1e-15);
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn newton_matches_bisection() {
        let f = |x: f64| x.cos() - x;
        let r1 = bisect(f, 0.0, 1.0, 0.0).unwrap();
        let r2 = newton_bisect(|x| (x.cos() - x, -x.sin() - 1.0), 0.0, 1.0).unwrap();
        assert!((r1 - r2).abs() < 1e-15);
    }

    #[test]
    fn newton_survives_useless_derivative() {
        // Zero derivative everywhere forces pure bisection.
        let r = newton_bisect(|x| (x.powi(3) - 0.5, 0.0), 0.0, 1.0).unwrap();
        assert!((r - 0.5f64.cbrt()).abs() < 1e-14);
    }
}
