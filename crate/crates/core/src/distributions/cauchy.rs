use core::f64::consts::{FRAC_1_PI, PI};
use num_traits::Float;

use crate::error::{ensure_finite, ensure_positive, Result};

/// Classical Cauchy density `t / (π (x² + t²))`.
pub fn cauchy_pdf(x: f64, t: f64) -> Result<f64> {
    cauchy_pdf_at(x, 0.0, t)
}

/// Classical Cauchy distribution function with scale `t`.
pub fn cauchy_cdf(x: f64, t: f64) -> Result<f64> {
    cauchy_cdf_at(x, 0.0, t)
}

/// Cauchy density with the given location and scale.
pub fn cauchy_pdf_at(x: f64, location: f64, scale: f64) -> Result<f64> {
    ensure_positive(scale, "Cauchy scale must be positive")?;
    ensure_finite(location, "Cauchy location must be finite")?;
    Ok(located_pdf(x, location, scale))
}

/// Cauchy distribution function with the given location and scale.
pub fn cauchy_cdf_at(x: f64, location: f64, scale: f64) -> Result<f64> {
    ensure_positive(scale, "Cauchy scale must be positive")?;
    ensure_finite(location, "Cauchy location must be finite")?;
    Ok(located_cdf(x, location, scale))
}

pub(crate) fn located_pdf(x: f64, location: f64, scale: f64) -> f64 {
    let z = (x - location) / scale;
    if z.abs() > 1e150 {
        let v = 1.0 / z;
        return FRAC_1_PI / scale * v * v / (1.0 + v * v);
    }
    FRAC_1_PI / (scale * (1.0 + z * z))
}

pub(crate) fn located_cdf(x: f64, location: f64, scale: f64) -> f64 {
    if x == f64::INFINITY {
        return 1.0;
    }
    if x == f64::NEG_INFINITY {
        return 0.0;
    }
    let z = (x - location) / scale;
    // Complementary arctangent keeps relative accuracy in the lower tail.
    if z < -1.0 {
        (-1.0 / z).atan() / PI
    } else {
        0.5 + z.atan() / PI
    }
}
