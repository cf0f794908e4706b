//! The Airy/stable-subordinator chain behind the third-order law.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_traits::Float;

use super::CheckReport;
use crate::distributions::third_order_pdf;
use crate::error::{ensure_positive, Error, Result};
use crate::numerics::quadrature::{epsilon_extrapolate, integrate};
use crate::numerics::{integrate_half_line, Tolerance};
use crate::special::{
    airy_ai, bessel_k_third, stable13_subordinator_pdf, stable_density_series, third_order_kernel,
    SeriesControl, StableParams,
};

const NU: f64 = 1.0 / 3.0;

/// `∫_0^∞ Ai(w) dw = 1/3`.
pub fn verify_airy_integral() -> CheckReport {
    let r = integrate_half_line(|w| airy_ai(w).unwrap_or(f64::NAN), Tolerance::new(1e-13, 1e-13));
    CheckReport::absolute(
        "airy integral over [0, inf)",
        r.value,
        1.0 / 3.0,
        1e-8,
        format!("quadrature error estimate {:.1e}", r.error_estimate),
    )
}

/// Composition of the third-order kernel with the index-1/3 subordinator,
/// `∫_0^∞ u₃(x, s) P{S(t) ∈ ds}`, against the third-order law.
pub fn verify_airy_composition(x: f64, t: f64) -> Result<CheckReport> {
    ensure_positive(t, "time scale t must be positive")?;
    let integrand = |s: f64| {
        if s <= 0.0 {
            return 0.0;
        }
        let density = stable13_subordinator_pdf(s, t).unwrap_or(f64::NAN);
        if density == 0.0 {
            return 0.0;
        }
        third_order_kernel(x, s).unwrap_or(f64::NAN) * density
    };
    let r = integrate_half_line(integrand, Tolerance::new(1e-10, 1e-10));
    Ok(CheckReport::absolute(
        format!("airy composition x={x} t={t}"),
        r.value,
        third_order_pdf(x, t)?,
        1e-5,
        format!("quadrature error estimate {:.1e}, {} evaluations", r.error_estimate, r.evaluations),
    ))
}

/// `π (yz)^{-ν} (y^{2ν} - z^{2ν}) / (2 sin(πν) (y² - z²))`, `ν = 1/3`, with
/// its limit `πν / (2 sin(πν) y²)` at `y = z`.
pub fn bessel_product_closed_form(y: f64, z: f64) -> f64 {
    let s = (PI * NU).sin();
    if ((y - z) / (y + z)).abs() < 1e-8 {
        let m = 0.5 * (y + z);
        return PI * NU / (2.0 * s * m * m);
    }
    PI * (y * z).powf(-NU) * (y.powf(2.0 * NU) - z.powf(2.0 * NU)) / (2.0 * s * (y * y - z * z))
}

fn bessel_product_quadrature(y: f64, z: f64) -> f64 {
    let f = |s: f64| {
        if s <= 0.0 {
            return 0.0;
        }
        let a = bessel_k_third(y * s).unwrap_or(f64::NAN);
        let b = bessel_k_third(z * s).unwrap_or(f64::NAN);
        s * a * b
    };
    integrate_half_line(f, Tolerance::new(1e-13, 1e-12)).value
}

/// `∫_0^∞ s K_{1/3}(ys) K_{1/3}(zs) ds` by quadrature against its closed form.
pub fn verify_bessel_product_integral(y: f64, z: f64) -> Result<CheckReport> {
    ensure_positive(y, "y must be positive")?;
    ensure_positive(z, "z must be positive")?;
    Ok(CheckReport::relative(
        format!("bessel product integral y={y} z={z}"),
        bessel_product_quadrature(y, z),
        bessel_product_closed_form(y, z),
        1e-6,
        if y == z { "equal-argument limit" } else { "distinct arguments" },
    ))
}

/// The Bessel-K route to the third-order law for `x, t > 0`:
/// `(2 sqrt(x t³) / (9π²)) ∫_0^∞ r K(yr) K(zr) dr` with `y = c x^{3/2}`,
/// `z = c t^{3/2}`, `c = 2/3^{3/2}`.
pub fn verify_bessel_chain(x: f64, t: f64) -> Result<CheckReport> {
    ensure_positive(x, "x must be positive")?;
    ensure_positive(t, "time scale t must be positive")?;
    let c = 2.0 / 3f64.powf(1.5);
    let (y, z) = (c * x.powf(1.5), c * t.powf(1.5));
    let pre = 2.0 * (x * t * t * t).sqrt() / (9.0 * PI * PI);
    let quad = pre * bessel_product_quadrature(y, z);
    let closed = pre * bessel_product_closed_form(y, z);
    let target = third_order_pdf(x, t)?;
    let detail = format!("closed-form route gives {closed:.15e}");
    if ((closed - target) / target).abs() > 1e-12 {
        return Err(Error::Consistency { residue: closed - target, reference: target });
    }
    Ok(CheckReport::relative(format!("bessel chain x={x} t={t}"), quad, target, 1e-6, detail))
}

/// `∫_ℝ u₃(x, t) dx = 1`.
///
/// The positive half is a plain improper integral. On the negative half the
/// kernel oscillates with slowly decaying amplitude, so it is integrated lobe
/// by lobe between approximate Airy zeros and the partial sums are extrapolated.
pub fn verify_kernel_mass(t: f64) -> Result<CheckReport> {
    ensure_positive(t, "time scale t must be positive")?;
    let scale = (3.0 * t).cbrt();
    let tol = Tolerance::new(1e-13, 1e-12);
    let kernel = |x: f64| third_order_kernel(x, t).unwrap_or(f64::NAN);
    let positive = integrate_half_line(kernel, tol).value;
    let zero = |j: usize| -(3.0 * PI * (4 * j - 1) as f64 / 8.0).powf(2.0 / 3.0) * scale;
    let mut partial = Vec::new();
    let mut sum = 0.0;
    let mut right = 0.0;
    for j in 1..=80 {
        let left = zero(j);
        sum += integrate(kernel, left, right, tol).value;
        partial.push(sum);
        right = left;
    }
    let (negative, err) = epsilon_extrapolate(&partial);
    Ok(CheckReport::absolute(
        format!("third-order kernel mass t={t}"),
        positive + negative,
        1.0,
        1e-6,
        format!("positive half {positive:.12}, negative half {negative:.12} (extrapolation {err:.1e})"),
    ))
}

/// `∫_0^∞ P{S(t) ∈ ds} = 1`.
pub fn verify_subordinator_mass(t: f64) -> Result<CheckReport> {
    ensure_positive(t, "time scale t must be positive")?;
    let r = integrate_half_line(
        |s| if s > 0.0 { stable13_subordinator_pdf(s, t).unwrap_or(f64::NAN) } else { 0.0 },
        Tolerance::new(1e-12, 1e-12),
    );
    Ok(CheckReport::absolute(
        format!("subordinator mass t={t}"),
        r.value,
        1.0,
        1e-8,
        format!("quadrature error estimate {:.1e}", r.error_estimate),
    ))
}

/// The stable series with `α = γ = 1/3` against the Airy form of the
/// subordinator density, through `p(s; t) = t^{-3} p(s/t³; 1)`.
pub fn verify_stable_series(t: f64) -> Result<CheckReport> {
    ensure_positive(t, "time scale t must be positive")?;
    let p = StableParams::one_sided(NU, 1.0)?;
    let control = SeriesControl::default();
    let mut worst: f64 = 0.0;
    for i in 0..=100 {
        let s = 0.1 * 100f64.powf(i as f64 / 100.0);
        let series = stable_density_series(s / (t * t * t), &p, &control)? / (t * t * t);
        let airy = stable13_subordinator_pdf(s, t)?;
        worst = worst.max(((series - airy) / airy).abs());
    }
    Ok(CheckReport::absolute(
        format!("stable series vs airy form t={t}"),
        worst,
        0.0,
        1e-8,
        "max relative deviation for s in [0.1, 10]",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_reference_points() {
        for (x, t) in [(0.0, 1.0), (1.0, 1.0), (-2.0, 1.0)] {
            let r = verify_airy_composition(x, t).unwrap();
            assert!(r.passed(), "{} {} {}", r.check_name(), r.measured(), r.expected());
        }
        let s3 = 3f64.sqrt();
        assert!((verify_airy_composition(-2.0, 1.0).unwrap().expected() - s3 / (6.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn bessel_product() {
        let r = verify_bessel_product_integral(1.0, 2.0).unwrap();
        assert!(r.passed(), "{} vs {}", r.measured(), r.expected());
        assert!(verify_bessel_product_integral(1.5, 1.5).unwrap().passed());
        assert!(verify_bessel_chain(2.0, 1.0).unwrap().passed());
    }

    #[test]
    fn masses() {
        assert!(verify_airy_integral().passed());
        let r = verify_kernel_mass(1.0).unwrap();
        assert!(r.passed(), "{} {}", r.measured(), r.detail());
        assert!(verify_subordinator_mass(1.0).unwrap().passed());
        assert!(verify_stable_series(1.0).unwrap().passed());
    }
}
