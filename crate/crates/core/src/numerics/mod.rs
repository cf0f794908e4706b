//! Quadrature, finite differences, optimization and goodness-of-fit tools.

pub mod fd;
mod grid;
pub mod ks;
pub mod optimize;
pub mod quadrature;

pub use fd::{finite_difference, partial_difference};
pub use grid::GridSpec;
pub use ks::{ks_critical_1pct, ks_statistic, ks_two_sample, ks_two_sample_critical_1pct};
pub use optimize::{find_local_max, local_maxima};
pub use quadrature::{
    integrate, integrate_fourier_half_line, integrate_half_line, integrate_real_line, Oscillation,
    QuadratureResult, Tolerance,
};
