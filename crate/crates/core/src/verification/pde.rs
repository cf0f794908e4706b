//! Laplace-type equations, checked in the Fourier domain (exact up to
//! rounding) and by finite differences on the densities (order <= 6).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
use num_traits::Float;

use super::CheckReport;
use crate::distributions::{
    asym_cauchy_pdf, cauchy_pdf, p4_pdf, p6_pdf, third_order_pdf, AsymCauchyParams,
};
use crate::error::{ensure_positive, Error, Result};
use crate::numerics::partial_difference;

/// Which equation and which closed-form Fourier solutions to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdeOrder {
    /// `∂_t^{2^n} u + ∂_x^{2^n} u = 0` with roots `-|β| e^{ikπ/2^n}`, odd `k`.
    Dyadic { n: u32 },
    /// `∂_t^{2k+1} u + ∂_x^{2k+1} u = 0` on the skewed Cauchy law of order `2k+1`.
    Odd { k: u32 },
    /// `∂_t^6 u + ∂_x^6 u = 0` on both halves of the sixth-order law.
    Sixth,
    /// `∂_t^{2n} u = (-1)^n ∂_x^{2n} u` with all roots `-|β| e^{iπr/n}`, `r < 2n`.
    Even { n: u32 },
    /// `∂_t² f + ∂_x² f = 2 sin(π/2m) ∂_x ∂_t f`.
    Mixed { m: u32 },
}

impl PdeOrder {
    fn label(&self) -> String {
        match self {
            PdeOrder::Dyadic { n } => format!("order 2^{n}"),
            PdeOrder::Odd { k } => format!("order {} skewed", 2 * k + 1),
            PdeOrder::Sixth => "order 6".into(),
            PdeOrder::Even { n } => format!("order {} even-theorem roots", 2 * n),
            PdeOrder::Mixed { m } => format!("mixed second order m={m}"),
        }
    }
}

/// Symbol residuals `|Σ terms| / max |term|` of `U(β, t) = e^{λ t}` for
/// every root `λ`; returns the worst over `β ∈ [-10, 10]`.
fn worst_symbol_residual(order: PdeOrder) -> Result<f64> {
    let betas: Vec<f64> = (0..=200).map(|i| -10.0 + 0.1 * i as f64).collect();
    let mut worst: f64 = 0.0;
    for &beta in &betas {
        if beta == 0.0 {
            continue;
        }
        let a = beta.abs();
        let mib = Complex64::new(0.0, -beta);
        let residuals: Vec<(Complex64, Complex64)> = match order {
            PdeOrder::Dyadic { n } => {
                if !(1..=10).contains(&n) {
                    return Err(Error::Domain("dyadic order checked for 1 <= n <= 10"));
                }
                let order = 1i32 << n;
                let half = 1i64 << (n - 1);
                let unit = PI / (1u64 << n) as f64;
                let mut v = Vec::new();
                let mut k = -(half - 1);
                while k < half {
                    let lambda = -Complex64::from_polar(a, k as f64 * unit);
                    v.push((lambda.powi(order), mib.powi(order)));
                    k += 2;
                }
                v
            }
            PdeOrder::Odd { k } => {
                let p = AsymCauchyParams::composition(k, 1.0)?;
                let order = (2 * k + 1) as i32;
                let lambda = Complex64::new(-a * p.scale(), beta * p.location());
                vec![(lambda.powi(order), mib.powi(order))]
            }
            PdeOrder::Sixth => {
                let l1 = Complex64::new(-a, 0.0);
                let l2 = Complex64::new(-0.5 * a, -0.5 * 3f64.sqrt() * beta);
                vec![(l1.powi(6), mib.powi(6)), (l2.powi(6), mib.powi(6))]
            }
            PdeOrder::Even { n } => {
                if n == 0 {
                    return Err(Error::Domain("even order requires n >= 1"));
                }
                let order = (2 * n) as i32;
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                (0..2 * n)
                    .map(|r| {
                        let lambda = -Complex64::from_polar(a, PI * r as f64 / n as f64);
                        (lambda.powi(order), -mib.powi(order) * sign)
                    })
                    .collect()
            }
            PdeOrder::Mixed { m } => {
                let p = AsymCauchyParams::generic(m, 1.0)?;
                let s = p.angle().sin();
                let lambda = Complex64::new(-a * p.scale(), beta * p.location());
                // F'' + 2iβ s F' - β² F = 0, with the last two terms folded together.
                let rest = Complex64::new(0.0, 2.0 * beta * s) * lambda - beta * beta;
                vec![(lambda * lambda, rest)]
            }
        };
        for (lhs, rhs) in residuals {
            let scale = lhs.norm().max(rhs.norm());
            worst = worst.max((lhs + rhs).norm() / scale);
        }
    }
    Ok(worst)
}

/// Fourier-domain residual of the characteristic ODE on the closed-form
/// solutions, normalized by the largest term; exact up to rounding.
pub fn verify_pde_fourier(order: PdeOrder) -> Result<CheckReport> {
    let worst = worst_symbol_residual(order)?;
    Ok(CheckReport::absolute(
        format!("fourier residual {}", order.label()),
        worst,
        0.0,
        1e-12,
        "max normalized residual over beta in [-10, 10]",
    ))
}

/// Density and equation for the finite-difference checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdLaw {
    /// `p_4`, fourth-order Laplace equation.
    P4,
    /// Third-order law, `∂_t³ + ∂_x³`.
    ThirdOrder,
    /// Skewed law with parameter `m`, mixed second-order equation.
    Mixed { m: u32 },
    /// Sixth-order law, `∂_t⁶ + ∂_x⁶`.
    SixthOrder,
    /// Classical Cauchy density, `∂_t^{2n} = (-1)^n ∂_x^{2n}`, `n <= 3`.
    CauchyEven { n: u32 },
}

impl FdLaw {
    fn order(&self) -> u32 {
        match self {
            FdLaw::P4 => 4,
            FdLaw::ThirdOrder => 3,
            FdLaw::Mixed { .. } => 2,
            FdLaw::SixthOrder => 6,
            FdLaw::CauchyEven { n } => 2 * n,
        }
    }

    fn label(&self) -> String {
        match self {
            FdLaw::P4 => "p4 order 4".into(),
            FdLaw::ThirdOrder => "third-order law order 3".into(),
            FdLaw::Mixed { m } => format!("skewed law m={m} mixed order 2"),
            FdLaw::SixthOrder => "sixth-order law order 6".into(),
            FdLaw::CauchyEven { n } => format!("cauchy order {}", 2 * n),
        }
    }

    /// Terms of the equation at `(x, t)` with step `h`; the equation reads `Σ terms = 0`.
    fn terms(&self, x: f64, t: f64, h: f64) -> Result<Vec<f64>> {
        let d = |g: &dyn Fn(f64, f64) -> f64, ox: u32, ot: u32| partial_difference(g, ox, ot, x, t, h);
        Ok(match *self {
            FdLaw::P4 => {
                let g = |x: f64, t: f64| p4_pdf(x, t).unwrap_or(f64::NAN);
                vec![d(&g, 0, 4)?, d(&g, 4, 0)?]
            }
            FdLaw::ThirdOrder => {
                let g = |x: f64, t: f64| third_order_pdf(x, t).unwrap_or(f64::NAN);
                vec![d(&g, 0, 3)?, d(&g, 3, 0)?]
            }
            FdLaw::Mixed { m } => {
                AsymCauchyParams::generic(m, 1.0)?;
                let g = |x: f64, t: f64| {
                    AsymCauchyParams::generic(m, t)
                        .and_then(|p| asym_cauchy_pdf(x, &p))
                        .unwrap_or(f64::NAN)
                };
                let s = (PI / (2.0 * m as f64)).sin();
                vec![d(&g, 0, 2)?, d(&g, 2, 0)?, -2.0 * s * d(&g, 1, 1)?]
            }
            FdLaw::SixthOrder => {
                let g = |x: f64, t: f64| p6_pdf(x, t).unwrap_or(f64::NAN);
                vec![d(&g, 0, 6)?, d(&g, 6, 0)?]
            }
            FdLaw::CauchyEven { n } => {
                if !(1..=3).contains(&n) {
                    return Err(Error::Domain("finite differences limited to order <= 6"));
                }
                let g = |x: f64, t: f64| cauchy_pdf(x, t).unwrap_or(f64::NAN);
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                vec![d(&g, 0, 2 * n)?, -sign * d(&g, 2 * n, 0)?]
            }
        })
    }
}

fn normalized_residual(law: FdLaw, x: f64, t: f64, h: f64) -> Result<f64> {
    let terms = law.terms(x, t, h)?;
    let sum: f64 = terms.iter().sum();
    let scale = terms.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(sum.abs() / scale)
}

/// Finite-difference residual of the equation at `(x, t)` with steps `h`
/// and `h/2`.
///
/// Returns two reports: the normalized residual at `h` (tolerance `1e-2`)
/// and the empirical convergence order `log₂(r(h)/r(h/2))` (expected 2 ± 0.5).
pub fn verify_pde_fd(law: FdLaw, x: f64, t: f64, h: f64) -> Result<Vec<CheckReport>> {
    ensure_positive(h, "step h must be positive")?;
    ensure_positive(t, "time scale t must be positive")?;
    if t - (law.order() / 2 + 1) as f64 * h <= 0.0 {
        return Err(Error::Bracket("finite-difference stencil leaves t > 0"));
    }
    let r1 = normalized_residual(law, x, t, h)?;
    let r2 = normalized_residual(law, x, t, 0.5 * h)?;
    let rate = (r1 / r2).log2();
    let name = format!("fd residual {} at ({x}, {t})", law.label());
    Ok(vec![
        CheckReport::absolute(
            name.clone(),
            r1,
            0.0,
            1e-2,
            format!("h={h}: {r1:.3e}, h/2: {r2:.3e}"),
        ),
        CheckReport::absolute(
            format!("{name} convergence order"),
            rate,
            2.0,
            0.5,
            format!("residual ratio {:.3}", r1 / r2),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourier_residuals_vanish() {
        for order in [
            PdeOrder::Dyadic { n: 2 },
            PdeOrder::Dyadic { n: 6 },
            PdeOrder::Odd { k: 1 },
            PdeOrder::Odd { k: 2 },
            PdeOrder::Odd { k: 5 },
            PdeOrder::Sixth,
            PdeOrder::Even { n: 1 },
            PdeOrder::Even { n: 4 },
            PdeOrder::Mixed { m: 3 },
        ] {
            let r = verify_pde_fourier(order).unwrap();
            assert!(r.passed(), "{}: {:e}", r.check_name(), r.measured());
        }
    }

    #[test]
    fn wrong_center_sign_is_detected() {
        // The mirrored law does not solve the odd-order equation.
        let beta: f64 = 1.0;
        let p = AsymCauchyParams::composition(1, 1.0).unwrap();
        let lambda = Complex64::new(-p.scale(), -beta * p.location());
        let res = lambda.powi(3) + Complex64::new(0.0, -beta).powi(3);
        assert!(res.norm() > 0.1);
    }

    #[test]
    fn fd_residuals_converge() {
        for (law, x, t, h) in [
            (FdLaw::P4, 0.5, 1.0, 0.0125),
            (FdLaw::ThirdOrder, 0.3, 1.0, 0.0125),
            (FdLaw::Mixed { m: 3 }, 0.2, 1.0, 0.0125),
            (FdLaw::CauchyEven { n: 2 }, 0.4, 1.0, 0.0125),
        ] {
            let reps = verify_pde_fd(law, x, t, h).unwrap();
            for r in &reps {
                assert!(r.passed(), "{} {} {}", r.check_name(), r.measured(), r.detail());
            }
        }
    }

    #[test]
    fn sixth_order_converges() {
        let reps = verify_pde_fd(FdLaw::SixthOrder, 0.3, 1.0, 0.025).unwrap();
        assert!(reps[1].passed(), "{}", reps[1].detail());
        assert!(reps[0].measured() < 3e-2);
    }

    #[test]
    fn p4_coarse_step_truncation() {
        // Second-order stencils leave 6.77e-2 at h = 0.05 (40-digit reference).
        let r = &verify_pde_fd(FdLaw::P4, 0.5, 1.0, 0.05).unwrap()[0];
        assert!((r.measured() - 0.067_717_2).abs() < 1e-6);
        assert!(!r.passed());
    }

    #[test]
    fn stencil_domain() {
        assert!(matches!(verify_pde_fd(FdLaw::P4, 0.0, 0.1, 0.05), Err(Error::Bracket(_))));
    }
}
