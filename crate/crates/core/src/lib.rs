//! Surface finite elements for linear parabolic equations on fixed, closed
//! 2-surfaces in R^3.
//!
//! The crate provides:
//! - implicit surface queries and closest-point lifts ([`geometry`])
//! - generated quasi-uniform triangle mesh families ([`mesh`])
//! - a small CSR / iterative-solver kernel ([`linalg`])
//! - P1 assembly with the three-point edge-midpoint quadrature rule and the
//!   discrete projection operators ([`fem`])
//! - the piecewise-constant-in-time (dG(0)) implicit scheme ([`timestepping`])
//! - manufactured problems, discrete norms and convergence studies
//!   ([`verification`])

pub mod fem;
pub mod geometry;
pub mod linalg;
pub mod mesh;
pub mod timestepping;
pub mod verification;

pub use fem::{CoefficientSet, P1Function};
pub use geometry::LevelSetSurface;
pub use linalg::{SparseMatrix, Vector};
pub use mesh::SurfaceMesh;
pub use timestepping::{Dg0Solution, TimeGrid};
pub use verification::{ConvergenceReport, ManufacturedProblem};
