//! Quasiconformal embeddings of a hyperbolic Y-piece with one short boundary
//! geodesic into the Y-piece with that boundary pinched to a cusp, plus a
//! numerical verification engine for the dilatation and distortion bounds.
//!
//! Modules, bottom-up:
//!
//! * [`hyp`]: upper half-plane points, isometries, Fermi coordinates.
//! * [`roots`]: bracketed scalar root finders.
//! * [`pants`]: hexagon/pentagon solver, collars, the equidistant curve `β`.
//! * [`qcmap`]: the piecewise map `φ`, its inverse and compositions.
//! * [`verify`]: finite-difference Beltrami estimates and claim checks.

pub mod error;
pub mod hyp;
pub mod pants;
pub mod qcmap;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
pub use hyp::{FermiCoord, HalfPlanePoint, TangentVector};
pub use pants::{
    classify_region, solve_hexagon, CollarSpec, HexagonSolution, Region, YPieceParams,
};
pub use qcmap::{MapAssembly, Sheet, SurfacePoint};
pub use verify::{BeltramiSample, VerificationReport};
