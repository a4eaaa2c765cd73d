//! Numerical verification of the dilatation, distortion and curve bounds.

pub mod checks;
pub mod jacobian;
pub mod report;
pub mod sampling;

pub use checks::{
    check_boundary_coherence, check_collar_delta, check_composition, check_conformality,
    check_curve_bounds, check_dilatation, check_inequalities, check_reduced_piece, check_roundtrip,
    check_seams, run_suite, VerifyConfig,
};
pub use jacobian::{length_distortion, max_length_distortion, numeric_beltrami, BeltramiSample};
pub use report::{BoundCheck, ParamTuple, Sense, VerificationReport};
