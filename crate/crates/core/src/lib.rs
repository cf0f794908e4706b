//! Hyper-Cauchy distributions and the Cauchy-type laws that solve
//! higher-order Laplace equations.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure numerics:
//!
//! - [`special`]: Airy `Ai`, modified Bessel `I_{±1/3}` / `K_{1/3}`, the
//!   one-sided stable density series and the order-1/3 subordinator law.
//! - [`distributions`]: densities, CDFs, characteristic functions and modes
//!   of the hyper-Cauchy family `p_{2^n}`, its fold/symmetrize components,
//!   the asymmetric odd-order Cauchy laws and the sixth-order law.
//! - [`sampling`]: exact, seeded generators for every probability law above.
//! - [`numerics`]: improper-integral quadrature, central finite differences,
//!   golden-section maximisation and Kolmogorov-Smirnov statistics.
//! - [`verification`]: executable checks of every closed-form identity,
//!   PDE statement and initial condition, reported as [`CheckReport`]s.
//!
//! IO, the command-line interface and file formats live in the companion
//! `hypercauchy` crate.

#![no_std]
#![warn(missing_debug_implementations)]
#![allow(unused_imports)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod distributions;
mod error;
pub mod numerics;
pub mod sampling;
pub mod special;
pub mod verification;

pub use error::{Error, Result};
pub use verification::CheckReport;
