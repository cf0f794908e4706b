//! Densities, distribution functions, characteristic functions and modes.

mod asym;
mod cauchy;
mod hyper;
mod law;

pub use asym::{
    asym_cauchy_cdf, asym_cauchy_cf, asym_cauchy_pdf, half_line_mass, p6_cdf, p6_pdf,
    p6_pdf_complex, third_order_cdf, third_order_pdf, third_order_pdf_rational, AsymCauchyParams,
    AsymKind,
};
pub use cauchy::{cauchy_cdf, cauchy_cdf_at, cauchy_pdf, cauchy_pdf_at};
pub use hyper::{
    component_cdf, component_pdf, disturbance_g, find_component_modes, find_modes, folded_cdf,
    folded_pdf, hyper_cauchy_cdf, hyper_cauchy_cf, hyper_cauchy_pdf, hyper_cauchy_pdf_complex,
    hyper_cauchy_pdf_product, p4_pdf, p8_pdf, ComponentSpec, HyperCauchy, HyperCauchyParams,
    MAX_N, MAX_N_EXPANDED, PRODUCT_RANGE,
};
pub use law::{Law, Support};
