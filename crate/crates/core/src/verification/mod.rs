//! Executable checks of the identities, equations and limits satisfied by
//! the laws in [`crate::distributions`].

mod airy;
mod cf;
mod identities;
mod initial;
mod modes;
mod normalization;
mod pde;
mod report;
mod sampling;
mod suite;

pub use airy::{
    bessel_product_closed_form, verify_airy_composition, verify_airy_integral, verify_bessel_chain,
    verify_bessel_product_integral, verify_kernel_mass, verify_stable_series, verify_subordinator_mass,
};
pub use cf::{numerical_cf, verify_cf_match};
pub use identities::{
    verify_component_integral, verify_halfline_mass, verify_printed_form, verify_product_cascade,
    verify_product_identity, verify_representations, verify_sixth_order_form,
};
pub(crate) use identities::sample_points;
pub use initial::{initial_derivative, verify_initial_conditions};
pub use modes::{verify_component_modes, verify_p4_modes, verify_p6_unimodal};
pub use normalization::verify_normalization;
pub use pde::{verify_pde_fd, verify_pde_fourier, FdLaw, PdeOrder};
pub use report::{CheckReport, ToleranceMode};
pub use sampling::{
    verify_positive_fraction, verify_sampler_ks, verify_stable_scaling, verify_symmetrization, SUITE_DRAWS,
    SUITE_SEED,
};
pub use suite::{run_suite, suite_checks, Check, Suite};
