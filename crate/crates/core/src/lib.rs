//! Coefficient-norm bounds for functions known on real wedges.
//!
//! The toolkit reconstructs power-series germs from evaluations restricted
//! to wedge-shaped real sets plus the upper and lower poly half-planes,
//! certifies coefficient growth with a dimension-recursive constant chain,
//! and estimates analytic-continuation radii for a zoo of test functions
//! with known singular sets.
//!
//! Modules:
//! - [`poly`]: sparse multivariate polynomials and the coefficient-sum norm
//! - [`interp`]: slice selection, Lagrange reconstruction, bound constants
//! - [`geometry`]: real wedges, cones, the induced gauge norm
//! - [`continuation`]: germ reconstruction and radius estimation
//! - [`zoo`]: ground-truth functions with known singular sets
//! - [`sampling`]: seeded substreams and Monte Carlo measure estimation

pub mod error;
pub mod geometry;
pub mod interp;
pub mod poly;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
