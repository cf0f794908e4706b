//! Skewed Cauchy laws of odd-order Laplace-type equations, the third-order
//! law and the sixth-order law.

use core::f64::consts::{FRAC_1_PI, PI};
use num_complex::Complex64;
use num_traits::Float;

use super::cauchy::{located_cdf, located_pdf};
use crate::error::{ensure_finite, ensure_positive, Error, Result};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Which family member an [`AsymCauchyParams`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum AsymKind {
    /// Law of the order-`(2k+1)` pseudo-process at the matching stable time.
    Composition { k: u32 },
    /// Cauchy law solving the mixed second-order equation with parameter `m`.
    Generic { m: u32 },
}

/// Location and scale of a skewed Cauchy law.
///
/// `location` is the center (median and mode) of the law.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AsymCauchyParams {
    kind: AsymKind,
    t: f64,
    location: f64,
    scale: f64,
}

impl AsymCauchyParams {
    /// Order `2k + 1`: center `(-1)^k t sin(π/(2(2k+1)))`, scale `t cos(π/(2(2k+1)))`.
    pub fn composition(k: u32, t: f64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("k must be a positive integer"));
        }
        ensure_positive(t, "time scale t must be positive")?;
        let a = PI / (2.0 * (2 * k + 1) as f64);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        Ok(AsymCauchyParams {
            kind: AsymKind::Composition { k },
            t,
            location: sign * t * a.sin(),
            scale: t * a.cos(),
        })
    }

    /// Parameter `m >= 2`: center `-t sin(π/2m)`, scale `t cos(π/2m)`.
    pub fn generic(m: u32, t: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain("m must be at least 2"));
        }
        ensure_positive(t, "time scale t must be positive")?;
        let a = PI / (2.0 * m as f64);
        Ok(AsymCauchyParams { kind: AsymKind::Generic { m }, t, location: -t * a.sin(), scale: t * a.cos() })
    }

    pub fn kind(&self) -> AsymKind {
        self.kind
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn location(&self) -> f64 {
        self.location
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Angle `π/(2(2k+1))` or `π/2m`.
    pub fn angle(&self) -> f64 {
        match self.kind {
            AsymKind::Composition { k } => PI / (2.0 * (2 * k + 1) as f64),
            AsymKind::Generic { m } => PI / (2.0 * m as f64),
        }
    }

    /// Closed-form mass of `[0, ∞)`.
    pub fn half_line_mass(&self) -> f64 {
        match self.kind {
            AsymKind::Composition { k } => half_line_mass(k),
            AsymKind::Generic { .. } => 1.0 - located_cdf(0.0, self.location, self.scale),
        }
    }
}

/// `(1/2)(1 + (-1)^k / (2k+1))`.
pub fn half_line_mass(k: u32) -> f64 {
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    0.5 * (1.0 + sign / (2 * k + 1) as f64)
}

pub fn asym_cauchy_pdf(x: f64, p: &AsymCauchyParams) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    Ok(located_pdf(x, p.location, p.scale))
}

pub fn asym_cauchy_cdf(x: f64, p: &AsymCauchyParams) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    Ok(located_cdf(x, p.location, p.scale))
}

/// Characteristic function `exp(-t|β| cos a + iβ·center)` as `(re, im)`.
pub fn asym_cauchy_cf(beta: f64, p: &AsymCauchyParams) -> Result<Complex64> {
    ensure_finite(beta, "beta must be finite")?;
    Ok(Complex64::from_polar((-p.scale * beta.abs()).exp(), beta * p.location))
}

/// Third-order law `(√3/2π) t / (x² + xt + t²)`.
pub fn third_order_pdf(x: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    let u = x / t;
    let v = if u.abs() > 1e100 {
        let r = 1.0 / u;
        r * r / (1.0 + r + r * r)
    } else {
        1.0 / (u * u + u + 1.0)
    };
    Ok(SQRT_3 / (2.0 * PI * t) * v)
}

/// The third-order law written as `(√3 t/2π)(x - t)/(x³ - t³)`; singular at `x = t`.
pub fn third_order_pdf_rational(x: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    if x == t {
        return Err(Error::Domain("removable singularity at x = t"));
    }
    Ok(SQRT_3 * t / (2.0 * PI) * (x - t) / (x * x * x - t * t * t))
}

pub fn third_order_cdf(x: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    Ok(located_cdf(x, -0.5 * t, 0.5 * SQRT_3 * t))
}

/// Sixth-order law
/// `(√3/2π) t ((x²+t²) cos(π/6) + xt) / ((x²+t²+xt cos(π/6))² - 3x²t² sin²(π/6))`.
pub fn p6_pdf(x: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    let u = x / t;
    if u.abs() > 1e50 {
        return Ok(p6_mixture(x, t));
    }
    let c = 0.5 * SQRT_3;
    let q = u * u + 1.0;
    let a = q + u * c;
    let num = q * c + u;
    let den = a * a - 0.75 * u * u;
    Ok(SQRT_3 / (2.0 * PI * t) * num / den)
}

/// The sixth-order law as the average of two third-order laws at the complex
/// times `t e^{±iπ/6}`.
pub fn p6_pdf_complex(x: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    ensure_finite(x, "x must be finite")?;
    let mut sum = Complex64::new(0.0, 0.0);
    for sign in [1.0, -1.0] {
        let tc = Complex64::from_polar(t, sign * PI / 6.0);
        let shifted = x + tc * 0.5;
        sum += tc * (0.5 * SQRT_3) / (shifted * shifted + tc * tc * 0.75);
    }
    let v = sum * (0.5 * FRAC_1_PI);
    if v.im.abs() > 1e-9 * v.re.abs() {
        return Err(Error::Consistency { residue: v.im, reference: v.re });
    }
    Ok(v.re)
}

/// Equal mixture of `Cauchy(0, t)` and `Cauchy(-√3t/2, t/2)`.
fn p6_mixture(x: f64, t: f64) -> f64 {
    0.5 * (located_pdf(x, 0.0, t) + located_pdf(x, -0.5 * SQRT_3 * t, 0.5 * t))
}

/// Distribution function of the sixth-order law, through its two-Cauchy form.
pub fn p6_cdf(x: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    Ok(0.5 * (located_cdf(x, 0.0, t) + located_cdf(x, -0.5 * SQRT_3 * t, 0.5 * t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_parameters() {
        let p = AsymCauchyParams::composition(1, 1.0).unwrap();
        assert!((p.location() + 0.5).abs() < 1e-15);
        assert!((p.scale() - 0.5 * SQRT_3).abs() < 1e-15);
        let p = AsymCauchyParams::composition(2, 2.0).unwrap();
        assert!((p.location() - 2.0 * (PI / 10.0).sin()).abs() < 1e-15);
        assert!(AsymCauchyParams::composition(0, 1.0).is_err());
        assert!(AsymCauchyParams::generic(1, 1.0).is_err());
        assert!(AsymCauchyParams::composition(3, -1.0).is_err());
    }

    #[test]
    fn k1_is_third_order_law() {
        let p = AsymCauchyParams::composition(1, 1.3).unwrap();
        for i in 0..121 {
            let x = -6.0 + 0.1 * i as f64;
            let a = asym_cauchy_pdf(x, &p).unwrap();
            let b = third_order_pdf(x, 1.3).unwrap();
            assert!((a - b).abs() < 1e-15 * b.max(1.0), "x = {x}");
            assert!((asym_cauchy_cdf(x, &p).unwrap() - third_order_cdf(x, 1.3).unwrap()).abs() < 1e-15);
        }
    }

    #[test]
    fn half_line_masses() {
        assert!((half_line_mass(1) - 1.0 / 3.0).abs() < 1e-16);
        assert!((half_line_mass(2) - 0.6).abs() < 1e-16);
        for k in 1..=10 {
            let p = AsymCauchyParams::composition(k, 1.0).unwrap();
            let tail = 1.0 - asym_cauchy_cdf(0.0, &p).unwrap();
            assert!((tail - half_line_mass(k)).abs() < 1e-14, "k = {k}");
        }
    }

    #[test]
    fn approaches_classical_cauchy() {
        let mut last = f64::INFINITY;
        for k in [1, 4, 16, 64, 256] {
            let p = AsymCauchyParams::composition(k, 1.0).unwrap();
            let sup = (0..401)
                .map(|i| -10.0 + 0.05 * i as f64)
                .map(|x| (asym_cauchy_pdf(x, &p).unwrap() - FRAC_1_PI / (1.0 + x * x)).abs())
                .fold(0.0, f64::max);
            assert!(sup < last);
            last = sup;
        }
        assert!(last < 2e-3);
    }

    #[test]
    fn third_order_reference_points() {
        assert!((third_order_pdf(0.0, 1.0).unwrap() - SQRT_3 / (2.0 * PI)).abs() < 1e-16);
        let t = 2.5;
        assert!((third_order_pdf(t, t).unwrap() - SQRT_3 / (6.0 * PI * t)).abs() < 1e-16);
        let peak = third_order_pdf(-t / 2.0, t).unwrap();
        assert!((peak - 2.0 / (PI * t * SQRT_3)).abs() < 1e-15);
        assert!(third_order_pdf(-t / 2.0 + 1e-3, t).unwrap() < peak);
        assert!(third_order_pdf(-t / 2.0 - 1e-3, t).unwrap() < peak);
        for &x in &[-3.0, 0.2, 0.99, 4.0] {
            let r = third_order_pdf_rational(x, 1.0).unwrap();
            assert!((r - third_order_pdf(x, 1.0).unwrap()).abs() < 1e-14);
        }
        assert!(third_order_pdf_rational(1.0, 1.0).is_err());
    }

    #[test]
    fn p6_representations() {
        for &t in &[0.5, 1.0, 3.0] {
            for i in 0..201 {
                let x = -10.0 + 0.1 * i as f64;
                let a = p6_pdf(x, t).unwrap();
                assert!(a > 0.0);
                assert!((a - p6_pdf_complex(x, t).unwrap()).abs() < 1e-12);
                assert!((a - p6_mixture(x, t)).abs() < 1e-12);
            }
        }
        assert!(p6_pdf(1e150, 1.0).unwrap() > 0.0);
    }

    #[test]
    fn asym_cf_at_origin() {
        let p = AsymCauchyParams::generic(5, 1.0).unwrap();
        let z = asym_cauchy_cf(0.0, &p).unwrap();
        assert_eq!((z.re, z.im), (1.0, 0.0));
    }
}
