//! Small-time behaviour of the Cauchy density.

use alloc::format;
use core::f64::consts::PI;
use num_traits::Float;

use super::CheckReport;
use crate::distributions::cauchy_pdf;
use crate::error::{Error, Result};
use crate::numerics::{finite_difference, integrate_real_line, Tolerance};

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

/// Limit of `∂^k/∂t^k` of the Cauchy density as `t → 0⁺`:
/// `(-1)^k k! cos(π(k+1)/2) / (π |x|^{k+1})`.
pub fn initial_derivative(k: u32, x: f64) -> f64 {
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    // cos(π(k+1)/2) is exactly 0 or ±1.
    let c = match (k + 1) % 4 {
        0 => 1.0,
        2 => -1.0,
        _ => 0.0,
    };
    sign * factorial(k) * c / (PI * x.abs().powi(k as i32 + 1))
}

/// `k = 0`: the density vanishes off the origin as `t → 0⁺` while keeping
/// unit mass. `k = 1..=3`: the `t`-derivative at `t → 0⁺`, by central
/// differences at three small times and Richardson extrapolation.
pub fn verify_initial_conditions(k: u32, x: f64) -> Result<CheckReport> {
    if k > 3 {
        return Err(Error::Domain("derivative order k must be in 0..=3"));
    }
    if x == 0.0 || !x.is_finite() {
        return Err(Error::Domain("x must be finite and nonzero"));
    }
    if k == 0 {
        let t = 1e-8;
        let mass = integrate_real_line(|y| cauchy_pdf(y, t).unwrap_or(f64::NAN), Tolerance::new(1e-12, 1e-12));
        let mut r = CheckReport::absolute(
            format!("initial condition k=0 x={x}"),
            cauchy_pdf(x, t)?,
            0.0,
            1e-6,
            format!("density at t={t:e}; mass {:.10}", mass.value),
        );
        if (mass.value - 1.0).abs() > 1e-8 {
            r = CheckReport::absolute(
                format!("initial condition k=0 x={x}"),
                mass.value,
                1.0,
                1e-8,
                "mass not preserved at small t",
            );
        }
        return Ok(r);
    }
    let derivative = |tau: f64| -> Result<f64> {
        finite_difference(|t| cauchy_pdf(x, t).unwrap_or(f64::NAN), k, tau, 0.25 * tau)
    };
    let tau = 0.05 * x.abs();
    let d = [derivative(tau)?, derivative(0.5 * tau)?, derivative(0.25 * tau)?];
    // Eliminate the O(τ) then the O(τ²) term.
    let r1 = [2.0 * d[1] - d[0], 2.0 * d[2] - d[1]];
    let limit = (4.0 * r1[1] - r1[0]) / 3.0;
    let expected = initial_derivative(k, x);
    let magnitude = factorial(k) / (PI * x.abs().powi(k as i32 + 1));
    Ok(CheckReport::absolute(
        format!("initial condition k={k} x={x}"),
        limit,
        expected,
        1e-3 * magnitude,
        format!("extrapolated from tau={tau}, {}, {}", 0.5 * tau, 0.25 * tau),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert!((initial_derivative(1, 1.0) - 1.0 / PI).abs() < 1e-16);
        assert_eq!(initial_derivative(2, 1.0), 0.0);
        assert_eq!(initial_derivative(0, 3.0), 0.0);
        assert!((initial_derivative(3, 2.0) - (-6.0 / (16.0 * PI))).abs() < 1e-16);
    }

    #[test]
    fn extrapolated_limits_pass() {
        for k in 0..=3 {
            for x in [-2.0, 0.5, 1.0, 3.0] {
                let r = verify_initial_conditions(k, x).unwrap();
                assert!(r.passed(), "k={k} x={x}: {} vs {}", r.measured(), r.expected());
            }
        }
        assert!(verify_initial_conditions(4, 1.0).is_err());
        assert!(verify_initial_conditions(1, 0.0).is_err());
    }
}
