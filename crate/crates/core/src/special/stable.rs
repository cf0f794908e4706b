//! One-sided stable densities and the order-1/3 subordinator.

use core::f64::consts::PI;
use num_traits::Float;

use super::airy::{airy_ai, airy_ai_tail_integral};
use super::gamma::ln_gamma;
use crate::error::{ensure_finite, ensure_positive, Error, Result};

/// Truncation control for power series.
///
/// A series stops at the first term whose magnitude is below `abs_tol` and
/// below `rel_tol` times the running sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub max_terms: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl { max_terms: 500, abs_tol: 1e-300, rel_tol: 1e-16 }
    }
}

impl SeriesControl {
    pub fn new(max_terms: usize, abs_tol: f64, rel_tol: f64) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1"));
        }
        ensure_positive(abs_tol, "abs_tol must be finite and positive")?;
        ensure_positive(rel_tol, "rel_tol must be finite and positive")?;
        Ok(SeriesControl { max_terms, abs_tol, rel_tol })
    }
}

/// Parameters of a stable law with characteristic function
/// `exp(-t |β|^α e^{-iπγ/2 · sgn β})`, `0 < α < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StableParams {
    alpha: f64,
    gamma: f64,
    t: f64,
}

impl StableParams {
    pub fn new(alpha: f64, gamma: f64, t: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Domain("stable index must lie in (0, 1)"));
        }
        ensure_finite(gamma, "skewness angle must be finite")?;
        ensure_positive(t, "stable time must be positive")?;
        let p = StableParams { alpha, gamma, t };
        if !(p.sigma() > 0.0) {
            return Err(Error::Domain("cos(πγ/2) must be positive"));
        }
        let theta = p.theta();
        if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&theta) {
            return Err(Error::Domain("skewness θ = cot(πα/2) tan(πγ/2) outside [-1, 1]"));
        }
        Ok(p)
    }

    /// Totally positively skewed law (`γ = α`, `θ = 1`).
    pub fn one_sided(alpha: f64, t: f64) -> Result<Self> {
        Self::new(alpha, alpha, t)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// `θ = cot(πα/2) tan(πγ/2)`.
    pub fn theta(&self) -> f64 {
        (0.5 * PI * self.gamma).tan() / (0.5 * PI * self.alpha).tan()
    }

    /// `σ = cos(πγ/2)`.
    pub fn sigma(&self) -> f64 {
        (0.5 * PI * self.gamma).cos()
    }
}

/// Stable density for `0 < α < 1` from the convergent series in `x^{-α}`:
///
/// `p_α(x; γ, 1) = (α/π) Σ_r (-1)^r Γ(α(r+1))/r! · x^{-α(r+1)-1} sin(π(γ+α)(r+1)/2)`,
///
/// rescaled to time `t` by `p_α(x; γ, t) = t^{-1/α} p_α(x t^{-1/α}; γ, 1)`.
///
/// The truncation rule is applied to the term envelope (the term without
/// its sine factor), since the sine vanishes periodically for rational α+γ.
pub fn stable_density_series(x: f64, p: &StableParams, control: &SeriesControl) -> Result<f64> {
    ensure_positive(x, "stable density series requires x > 0")?;
    let alpha = p.alpha;
    let scale = p.t.powf(1.0 / alpha);
    let y = x / scale;
    let ln_y = y.ln();
    let phase = 0.5 * PI * (p.gamma + alpha);
    let mut sum = 0.0;
    let mut ln_r_fact = 0.0;
    let mut last = f64::NAN;
    for r in 0..control.max_terms {
        let rf = r as f64;
        if r > 0 {
            ln_r_fact += rf.ln();
        }
        let a = alpha * (rf + 1.0);
        let envelope = alpha / PI * (ln_gamma(a) - ln_r_fact - (a + 1.0) * ln_y).exp();
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * envelope * (phase * (rf + 1.0)).sin();
        last = envelope;
        if r > 0 && envelope < control.abs_tol && envelope < control.rel_tol * sum.abs() {
            return Ok(sum / scale);
        }
    }
    Err(Error::Truncation { terms: control.max_terms, last_term: last })
}

/// Density of the one-sided stable subordinator of index 1/3 at time `t`:
/// `(t/s) (3s)^{-1/3} Ai(t (3s)^{-1/3})`.
pub fn stable13_subordinator_pdf(s: f64, t: f64) -> Result<f64> {
    ensure_positive(s, "subordinator density requires s > 0")?;
    ensure_positive(t, "subordinator density requires t > 0")?;
    let c = (3.0 * s).cbrt();
    let ai = airy_ai(t / c)?;
    // Ai underflows long before t/s overflows.
    if ai == 0.0 {
        return Ok(0.0);
    }
    Ok(t / s / c * ai)
}

/// Distribution function of the order-1/3 subordinator.
///
/// The substitution `w = t/(3s)^{1/3}` maps the density onto `3 Ai(w) dw`,
/// so `P{S(t) <= s} = 3 ∫_{t/(3s)^{1/3}}^∞ Ai(w) dw`.
pub fn stable13_subordinator_cdf(s: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "subordinator CDF requires t > 0")?;
    if s.is_nan() {
        return Err(Error::Domain("subordinator CDF argument is NaN"));
    }
    if s <= 0.0 {
        return Ok(0.0);
    }
    if s == f64::INFINITY {
        return Ok(1.0);
    }
    Ok((3.0 * airy_ai_tail_integral(t / (3.0 * s).cbrt())?).min(1.0))
}

/// Signed fundamental solution of `∂u/∂t = -∂³u/∂x³`:
/// `u₃(x, t) = (3t)^{-1/3} Ai(x (3t)^{-1/3})`.
pub fn third_order_kernel(x: f64, t: f64) -> Result<f64> {
    ensure_finite(x, "kernel argument must be finite")?;
    ensure_positive(t, "kernel time must be positive")?;
    let c = (3.0 * t).cbrt();
    Ok(airy_ai(x / c)? / c)
}
