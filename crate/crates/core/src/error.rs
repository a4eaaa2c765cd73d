use thiserror::Error;

/// Errors raised by the geometry kernel, the map, and the verification engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} out of range {range}: got {value}")]
    Domain {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("cusped source boundary (l{index} = 0) is not supported")]
    Unsupported { index: usize },
    #[error("point ({x}, {y}) lies outside {region}")]
    OutOfDomain {
        region: &'static str,
        x: f64,
        y: f64,
    },
    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("numeric range exceeded in {0}")]
    NumericRange(&'static str),
    #[error("degenerate or orientation-reversing jacobian (|mu| = {mu_abs})")]
    Degenerate { mu_abs: f64 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
