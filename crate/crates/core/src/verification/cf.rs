//! Characteristic functions against numerical Fourier transforms.

use alloc::format;
use num_complex::Complex64;

use super::CheckReport;
use crate::distributions::Law;
use crate::error::{Error, Result};
use crate::numerics::{integrate_fourier_half_line, Oscillation, Tolerance};

/// `∫ e^{iβx} p(x) dx` split into even and odd parts of the density.
pub fn numerical_cf(law: &Law, beta: f64) -> Complex64 {
    let tol = Tolerance::new(1e-11, 1e-10);
    let even = |x: f64| law.pdf(x).unwrap_or(f64::NAN) + law.pdf(-x).unwrap_or(f64::NAN);
    let odd = |x: f64| law.pdf(x).unwrap_or(f64::NAN) - law.pdf(-x).unwrap_or(f64::NAN);
    let re = integrate_fourier_half_line(even, beta, Oscillation::Cos, tol).value;
    let im = integrate_fourier_half_line(odd, beta, Oscillation::Sin, tol).value;
    Complex64::new(re, im)
}

/// Largest `|numerical - closed form|` over `betas`; tolerance `1e-6`.
pub fn verify_cf_match(law: &Law, betas: &[f64]) -> Result<CheckReport> {
    if betas.is_empty() {
        return Err(Error::Domain("beta grid must not be empty"));
    }
    let mut worst = 0.0;
    let mut at = betas[0];
    for &beta in betas {
        let exact = law.cf(beta).ok_or(Error::Domain("law has no closed-form characteristic function"))??;
        let dev = (numerical_cf(law, beta) - exact).norm();
        if !(dev <= worst) {
            worst = dev;
            at = beta;
        }
    }
    Ok(CheckReport::absolute(
        format!("characteristic function {law}"),
        worst,
        0.0,
        1e-6,
        format!("max deviation at beta={at} over {} points", betas.len()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::HyperCauchyParams;

    #[test]
    fn third_order_and_p4() {
        let betas = [-5.0, -1.3, 0.0, 0.7, 2.0, 5.0];
        let r = verify_cf_match(&Law::ThirdOrder { t: 1.0 }, &betas).unwrap();
        assert!(r.passed(), "{} {}", r.measured(), r.detail());
        let p4 = Law::HyperCauchy(HyperCauchyParams::new(2, 1.0).unwrap());
        let r = verify_cf_match(&p4, &betas).unwrap();
        assert!(r.passed(), "{} {}", r.measured(), r.detail());
    }

    #[test]
    fn unit_at_origin() {
        let z = numerical_cf(&Law::SixthOrder { t: 1.5 }, 0.0);
        assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    }
}
