//! Rigid representations of Dynkin quivers.
//!
//! For a quiver whose underlying graph is a simply laced Dynkin diagram,
//! every dimension vector admits a unique representation without self
//! extensions. This crate computes its decomposition into indecomposable
//! summands by a piecewise linear formula over the positive roots, and
//! ships independent checks: a brute force search over candidate
//! decompositions, closed formulas for type A orientations, and an exact
//! linear algebra route that verifies representations matrix by matrix
//! over the rationals or a prime field.

pub mod dimvec;
pub mod engine;
pub mod error;
pub mod euler;
pub mod linalg;
pub mod quiver;
pub mod rigid;
pub mod roots;
pub mod subquot;
pub mod typea;

pub use dimvec::DimVec;
pub use engine::Engine;
pub use error::{Error, Result};
pub use euler::{euler_form, EulerMatrix};
pub use quiver::{Family, Quiver};
pub use rigid::{MultiplicityFunction, BRUTE_FORCE_DEFAULT_BOUND};
pub use roots::RootSystem;
