//! Sampled `f` and `b₁` with monotone cubic (Fritsch–Carlson) interpolation.
//!
//! Only used for drawing; the map itself always solves for `f` exactly.

use super::MapAssembly;

const NODES: usize = 1024;

#[derive(Debug, Clone)]
pub struct CurveTable {
    x: Vec<f64>,
    f: Vec<f64>,
    df: Vec<f64>,
    b1: Vec<f64>,
    db1: Vec<f64>,
}

fn slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let secant: Vec<f64> = (0..n - 1)
        .map(|k| (y[k + 1] - y[k]) / (x[k + 1] - x[k]))
        .collect();
    let mut m = vec![0.0; n];
    m[0] = secant[0];
    m[n - 1] = secant[n - 2];
    for k in 1..n - 1 {
        m[k] = if secant[k - 1] * secant[k] <= 0.0 {
            0.0
        } else {
            0.5 * (secant[k - 1] + secant[k])
        };
    }
    for k in 0..n - 1 {
        if secant[k] == 0.0 {
            m[k] = 0.0;
            m[k + 1] = 0.0;
            continue;
        }
        let a = m[k] / secant[k];
        let b = m[k + 1] / secant[k];
        let s = a * a + b * b;
        if s > 9.0 {
            let tau = 3.0 / s.sqrt();
            m[k] = tau * a * secant[k];
            m[k + 1] = tau * b * secant[k];
        }
    }
    m
}

impl CurveTable {
    pub(crate) fn build(asm: &MapAssembly) -> Self {
        let h = &asm.hex;
        let x: Vec<f64> = (0..NODES)
            .map(|k| h.a1 + h.a * k as f64 / (NODES - 1) as f64)
            .collect();
        let f: Vec<f64> = x
            .iter()
            .map(|&x| asm.f_unchecked(x).unwrap_or(f64::NAN))
            .collect();
        let b1: Vec<f64> = x.iter().map(|&x| asm.b1_unchecked(x)).collect();
        let df = slopes(&x, &f);
        let db1 = slopes(&x, &b1);
        Self { x, f, df, b1, db1 }
    }

    fn eval(&self, y: &[f64], m: &[f64], x: f64) -> f64 {
        let n = self.x.len();
        let x = x.clamp(self.x[0], self.x[n - 1]);
        let k = match self.x.binary_search_by(|v| v.total_cmp(&x)) {
            Ok(k) => return y[k],
            Err(k) => k.clamp(1, n - 1) - 1,
        };
        let h = self.x[k + 1] - self.x[k];
        let t = (x - self.x[k]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        (2.0 * t3 - 3.0 * t2 + 1.0) * y[k]
            + (t3 - 2.0 * t2 + t) * h * m[k]
            + (-2.0 * t3 + 3.0 * t2) * y[k + 1]
            + (t3 - t2) * h * m[k + 1]
    }

    pub fn f(&self, x: f64) -> f64 {
        self.eval(&self.f, &self.df, x)
    }

    pub fn b1(&self, x: f64) -> f64 {
        self.eval(&self.b1, &self.db1, x)
    }
}
