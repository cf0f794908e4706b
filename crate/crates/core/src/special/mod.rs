//! Special functions: gamma, Airy `Ai`, modified Bessel `I_{±1/3}` and
//! `K_{1/3}`, and the one-sided stable densities built from them.

mod airy;
mod bessel;
mod dd;
mod gamma;
mod stable;

pub use airy::{airy_ai, airy_ai_bessel, airy_ai_series, airy_ai_tail_integral};
pub use bessel::{bessel_i, bessel_k_third};
pub use gamma::{gamma, ln_gamma};
pub use stable::{
    stable13_subordinator_cdf, stable13_subordinator_pdf, stable_density_series, third_order_kernel,
    SeriesControl, StableParams,
};
