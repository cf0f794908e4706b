//! Algebraic identities, representation equivalence and closed-form integrals.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
use num_traits::Float;

use super::CheckReport;
use crate::distributions::{
    asym_cauchy_pdf, half_line_mass, hyper_cauchy_pdf, hyper_cauchy_pdf_complex,
    hyper_cauchy_pdf_product, p4_pdf, p6_pdf, p6_pdf_complex, p8_pdf, AsymCauchyParams,
    ComponentSpec, HyperCauchyParams, MAX_N_EXPANDED, PRODUCT_RANGE,
};
use crate::error::{ensure_positive, Error, Result};
use crate::numerics::{integrate_half_line, integrate_real_line, GridSpec, Tolerance};

const TIGHT: Tolerance = Tolerance { abs: 1e-12, rel: 1e-12 };

fn product_guard(n: u32, x: f64, t: f64) -> Result<()> {
    if !(2..=MAX_N_EXPANDED).contains(&n) {
        return Err(Error::Range("product identity checked for 2 <= n <= 6"));
    }
    if !(x.abs() <= PRODUCT_RANGE) || !(t.abs() <= PRODUCT_RANGE) {
        return Err(Error::Range("product identity needs |x|, |t| <= 50"));
    }
    Ok(())
}

/// `∏_{odd k} (x² + (t e^{ikπ/2^n})²) = x^{2^n} + t^{2^n}` by complex arithmetic.
pub fn verify_product_identity(n: u32, x: f64, t: f64) -> Result<CheckReport> {
    product_guard(n, x, t)?;
    let half = 1i64 << (n - 1);
    let unit = PI / (1u64 << n) as f64;
    let x2 = Complex64::new(x * x, 0.0);
    let mut prod = Complex64::new(1.0, 0.0);
    let mut k = -(half - 1);
    while k < half {
        let z = Complex64::from_polar(t, k as f64 * unit);
        prod *= x2 + z * z;
        k += 2;
    }
    let order = 1i32 << n;
    let target = x.powi(order) + t.powi(order);
    let deviation = (prod - target).norm();
    Ok(CheckReport::relative(
        format!("product identity n={n} x={x} t={t}"),
        target + deviation,
        target,
        1e-9,
        format!("complex product {:e}{:+e}i", prod.re, prod.im),
    ))
}

/// The same identity after regrouping the factors level by level: at level
/// `m` the factors are `x^{2^m} + t^{2^m} + 2 x^{2^{m-1}} t^{2^{m-1}} cos(jπ/2^{n-m+1})`,
/// odd `j < 2^{n-m+1}`. Reports the worst level.
pub fn verify_product_cascade(n: u32, x: f64, t: f64) -> Result<CheckReport> {
    product_guard(n, x, t)?;
    let order = 1i32 << n;
    let target = x.powi(order) + t.powi(order);
    let mut worst: f64 = 0.0;
    for m in 2..=n {
        let (xm, tm) = (x.powi(1 << m), t.powi(1 << m));
        let (xh, th) = (x.powi(1 << (m - 1)), t.powi(1 << (m - 1)));
        let denom = (1u64 << (n - m + 1)) as f64;
        let mut prod = 1.0;
        let mut j = 1u64;
        while (j as f64) < denom {
            prod *= xm + tm + 2.0 * xh * th * (j as f64 * PI / denom).cos();
            j += 2;
        }
        worst = worst.max(((prod - target) / target).abs());
    }
    Ok(CheckReport::absolute(
        format!("product cascade n={n} x={x} t={t}"),
        worst,
        0.0,
        1e-9,
        "max relative deviation over regrouping levels",
    ))
}

/// `∫ (x² + t²) / (x⁴ + t⁴ + 2x²t² cos(kπ/2^{n-1})) dx = π / (t cos(kπ/2^n))`.
pub fn verify_component_integral(n: u32, k: u64, t: f64) -> Result<CheckReport> {
    let c = ComponentSpec::new(n, k, t)?;
    let ca = c.cos_angle();
    let r = integrate_real_line(
        |x| {
            let d = (x - t) * (x + t);
            let e = 2.0 * x * t * ca;
            (x * x + t * t) / (d * d + e * e)
        },
        TIGHT,
    );
    Ok(CheckReport::relative(
        format!("component integral n={n} k={k} t={t}"),
        r.value,
        PI / (t * ca),
        1e-8,
        format!("quadrature error estimate {:.1e}, {} evaluations", r.error_estimate, r.evaluations),
    ))
}

/// Maximum relative disagreement of the complex-sum, product and component
/// representations of `p_{2^n}` over a grid.
pub fn verify_representations(n: u32, t: f64, grid: &GridSpec) -> Result<CheckReport> {
    let p = HyperCauchyParams::new(n, t)?;
    let mut worst: f64 = 0.0;
    for x in grid.nodes() {
        let a = hyper_cauchy_pdf(x, &p)?;
        let b = hyper_cauchy_pdf_complex(x, &p)?;
        let c = hyper_cauchy_pdf_product(x, &p)?;
        worst = worst.max(((b - a) / a).abs()).max(((c - a) / a).abs());
    }
    Ok(CheckReport::absolute(
        format!("representations agree n={n} t={t}"),
        worst,
        0.0,
        1e-10,
        format!("max relative deviation on {} points in [{}, {}]", grid.len(), grid.x_min(), grid.x_max()),
    ))
}

/// The component sum against the printed closed forms of `p_4` (`n = 2`) and `p_8` (`n = 3`).
pub fn verify_printed_form(n: u32, t: f64, grid: &GridSpec) -> Result<CheckReport> {
    let printed: fn(f64, f64) -> Result<f64> = match n {
        2 => p4_pdf,
        3 => p8_pdf,
        _ => return Err(Error::Domain("printed closed forms exist for n = 2 and n = 3")),
    };
    let p = HyperCauchyParams::new(n, t)?;
    let mut worst: f64 = 0.0;
    for x in grid.nodes() {
        let a = hyper_cauchy_pdf(x, &p)?;
        let b = printed(x, t)?;
        worst = worst.max(((a - b) / b).abs());
    }
    Ok(CheckReport::absolute(
        format!("closed form p{} t={t}", 1u32 << n),
        worst,
        0.0,
        1e-12,
        format!("max relative deviation on {} points", grid.len()),
    ))
}

/// Sixth-order law: closed form against the average of two complex-time third-order laws.
pub fn verify_sixth_order_form(t: f64, grid: &GridSpec) -> Result<CheckReport> {
    ensure_positive(t, "time scale t must be positive")?;
    let mut worst: f64 = 0.0;
    for x in grid.nodes() {
        worst = worst.max((p6_pdf(x, t)? - p6_pdf_complex(x, t)?).abs());
    }
    Ok(CheckReport::absolute(
        format!("sixth-order complex form t={t}"),
        worst,
        0.0,
        1e-12,
        "max absolute deviation",
    ))
}

/// `∫_0^∞` of the skewed order-`(2k+1)` law against `(1/2)(1 + (-1)^k/(2k+1))`.
pub fn verify_halfline_mass(k: u32, t: f64) -> Result<CheckReport> {
    let p = AsymCauchyParams::composition(k, t)?;
    let r = integrate_half_line(|x| asym_cauchy_pdf(x, &p).unwrap_or(f64::NAN), TIGHT);
    Ok(CheckReport::absolute(
        format!("half-line mass k={k} t={t}"),
        r.value,
        half_line_mass(k),
        1e-8,
        format!("quadrature error estimate {:.1e}", r.error_estimate),
    ))
}

/// Deterministic pseudo-random points in `[lo, hi]²`.
pub(crate) fn sample_points(count: usize, lo: f64, hi: f64, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = crate::sampling::RngState::new(seed);
    (0..count)
        .map(|_| (lo + (hi - lo) * rng.uniform(), lo + (hi - lo) * rng.uniform()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_factor_product() {
        let r = verify_product_identity(2, 1.0, 1.0).unwrap();
        assert!(r.passed());
        assert!((r.measured() - 2.0).abs() < 1e-15);
        assert!(verify_product_identity(3, 1.7, 0.9).unwrap().passed());
        assert!(verify_product_identity(7, 1.0, 1.0).is_err());
        assert!(verify_product_identity(4, 51.0, 1.0).is_err());
    }

    #[test]
    fn cascade_levels() {
        for n in 2..=6 {
            assert!(verify_product_cascade(n, 1.3, 0.7).unwrap().passed(), "n={n}");
        }
    }

    #[test]
    fn component_integrals() {
        assert!(verify_component_integral(3, 1, 1.0).unwrap().passed());
        assert!(verify_component_integral(3, 3, 1.0).unwrap().passed());
        let r = verify_component_integral(2, 1, 2.0).unwrap();
        assert!(r.passed());
        assert!((r.expected() - PI / 2.0 / (PI / 4.0).cos()).abs() < 1e-15);
    }

    #[test]
    fn half_line_masses() {
        for k in [1, 2, 10] {
            assert!(verify_halfline_mass(k, 1.0).unwrap().passed(), "k={k}");
        }
    }
}
