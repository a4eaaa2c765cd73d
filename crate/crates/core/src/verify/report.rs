//! Claim reports.

use serde::{Deserialize, Serialize};

/// Direction of a bound: `measured ≤ bound` or `measured ≥ bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Le,
    Ge,
}

/// Parameters a report was produced for.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamTuple {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsbar: Option<f64>,
}

impl ParamTuple {
    pub fn of(p: &crate::pants::YPieceParams) -> Self {
        Self {
            l1: Some(p.l1),
            l2: Some(p.l2),
            eps: Some(p.eps),
            epsbar: None,
        }
    }

    pub fn with_epsbar(mut self, epsbar: f64) -> Self {
        self.epsbar = Some(epsbar);
        self
    }
}

impl std::fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = [
            ("l1", self.l1),
            ("l2", self.l2),
            ("eps", self.eps),
            ("epsbar", self.epsbar),
        ]
        .iter()
        .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
        .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// One measured extremum against one stated bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub sense: Sense,
    pub measured: f64,
    pub bound: f64,
    pub slack: f64,
    pub pass: bool,
    pub n_samples: usize,
}

impl BoundCheck {
    pub fn new(
        name: impl Into<String>,
        sense: Sense,
        measured: f64,
        bound: f64,
        slack: f64,
    ) -> Self {
        let pass = match sense {
            Sense::Le => measured <= bound + slack,
            Sense::Ge => measured >= bound - slack,
        };
        Self {
            name: name.into(),
            sense,
            measured,
            bound,
            slack,
            pass,
            n_samples: 1,
        }
    }

    pub fn le(name: impl Into<String>, measured: f64, bound: f64, slack: f64) -> Self {
        Self::new(name, Sense::Le, measured, bound, slack)
    }

    pub fn ge(name: impl Into<String>, measured: f64, bound: f64, slack: f64) -> Self {
        Self::new(name, Sense::Ge, measured, bound, slack)
    }

    pub fn samples(mut self, n: usize) -> Self {
        self.n_samples = n;
        self
    }

    /// Distance to the bound, negative when violated before slack.
    pub fn margin(&self) -> f64 {
        match self.sense {
            Sense::Le => self.bound - self.measured,
            Sense::Ge => self.measured - self.bound,
        }
    }
}

/// Outcome of one claim. The top-level `measured`/`bound` pair is that of
/// the first failing item, or of the first (headline) item when all pass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: ParamTuple,
    pub bound: f64,
    pub measured: f64,
    pub slack: f64,
    pub pass: bool,
    pub n_samples: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_density: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<BoundCheck>,
}

impl VerificationReport {
    pub fn from_items(
        claim: impl Into<String>,
        params: ParamTuple,
        seed: u64,
        items: Vec<BoundCheck>,
    ) -> Self {
        let headline = items.iter().find(|c| !c.pass).or(items.first());
        let (bound, measured, slack) = headline
            .map(|c| (c.bound, c.measured, c.slack))
            .unwrap_or((0.0, 0.0, 0.0));
        Self {
            claim: claim.into(),
            params,
            bound,
            measured,
            slack,
            pass: items.iter().all(|c| c.pass),
            n_samples: items.iter().map(|c| c.n_samples).max().unwrap_or(0),
            seed,
            grid_density: None,
            items,
        }
    }

    pub fn with_grid_density(mut self, density: usize) -> Self {
        self.grid_density = Some(density);
        self
    }

    /// Items that failed.
    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.items.iter().filter(|c| !c.pass)
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        format!(
            "{} {} {} measured={:.6e} bound={:.6e} n={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.claim,
            self.params,
            self.measured,
            self.bound,
            self.n_samples,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ParamTuple {
        ParamTuple::of(&crate::pants::YPieceParams::new(1.0, 1.0, 0.25).unwrap())
    }

    #[test]
    fn pass_respects_slack() {
        assert!(BoundCheck::le("x", 1.0 + 5e-6, 1.0, 1e-5).pass);
        assert!(!BoundCheck::le("x", 1.0 + 2e-5, 1.0, 1e-5).pass);
        assert!(BoundCheck::ge("x", 1.0 - 5e-6, 1.0, 1e-5).pass);
        assert!(!BoundCheck::ge("x", 0.9, 1.0, 0.0).pass);
    }

    #[test]
    fn aggregate_reports_the_failing_item() {
        let r = VerificationReport::from_items(
            "demo",
            params(),
            7,
            vec![
                BoundCheck::le("ok", 0.5, 1.0, 0.0).samples(10),
                BoundCheck::le("bad", 2.0, 1.5, 0.0).samples(3),
            ],
        );
        assert!(!r.pass);
        assert_eq!((r.measured, r.bound), (2.0, 1.5));
        assert_eq!(r.n_samples, 10);
        assert_eq!(r.failures().count(), 1);
    }
}
