//! Random field theory toolkit: Euler-characteristic densities of Gaussian
//! and multivariate statistic fields, expected-EC P-value approximations and
//! familywise thresholds, numeric lattice Euler characteristics,
//! Lipschitz-Killing curvature estimation from residuals, and a Monte Carlo
//! engine that validates the formulas against simulated excursion sets.

pub mod ecd;
pub mod error;
pub mod geometry;
pub mod specfun;

pub use error::{Error, Result};
