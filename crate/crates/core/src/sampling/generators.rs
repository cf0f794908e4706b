//! Single-draw generators.

use core::f64::consts::PI;
use num_traits::Float;

use super::RngState;
use crate::distributions::{AsymCauchyParams, ComponentSpec, HyperCauchyParams};
use crate::error::{ensure_finite, ensure_positive, Result};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Cauchy draw by inversion, `location + scale tan(π(U - 1/2))`.
pub fn sample_cauchy(location: f64, scale: f64, rng: &mut RngState) -> Result<f64> {
    ensure_positive(scale, "Cauchy scale must be positive")?;
    ensure_finite(location, "Cauchy location must be finite")?;
    Ok(cauchy(location, scale, rng))
}

#[inline]
fn cauchy(location: f64, scale: f64, rng: &mut RngState) -> f64 {
    location + scale * (PI * (rng.uniform() - 0.5)).tan()
}

/// `|C - t sin θ|` with `C` Cauchy of scale `t cos θ`.
pub fn sample_folded(c: &ComponentSpec, rng: &mut RngState) -> f64 {
    (cauchy(0.0, c.cauchy_scale(), rng) - c.cauchy_location()).abs()
}

/// Half-difference `(W₁ - W₂)/2` of two independent folded draws.
pub fn sample_symmetrized(c: &ComponentSpec, rng: &mut RngState) -> f64 {
    let w1 = sample_folded(c, rng);
    let w2 = sample_folded(c, rng);
    0.5 * (w1 - w2)
}

/// A folded draw with an independent fair random sign.
pub fn sample_random_sign_fold(c: &ComponentSpec, rng: &mut RngState) -> f64 {
    let w = sample_folded(c, rng);
    if rng.coin() {
        w
    } else {
        -w
    }
}

/// Exact draw from `h_k`: a Cauchy centered at `±t sin θ` with scale `t cos θ`.
pub fn sample_component_exact(c: &ComponentSpec, rng: &mut RngState) -> f64 {
    let l = if rng.coin() { c.cauchy_location() } else { -c.cauchy_location() };
    cauchy(l, c.cauchy_scale(), rng)
}

/// Uniformly chosen component, then an exact component draw.
pub fn sample_hyper_cauchy(p: &HyperCauchyParams, rng: &mut RngState) -> f64 {
    let i = rng.below(p.component_count() as u64);
    // Indices come from the valid range, so construction cannot fail.
    let c = ComponentSpec::new(p.n(), 2 * i + 1, p.t()).expect("valid component index");
    sample_component_exact(&c, rng)
}

pub fn sample_asym_cauchy(p: &AsymCauchyParams, rng: &mut RngState) -> f64 {
    cauchy(p.location(), p.scale(), rng)
}

/// Third-order law: location `-t/2`, scale `√3 t/2`.
pub fn sample_third_order(t: f64, rng: &mut RngState) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    Ok(cauchy(-0.5 * t, 0.5 * SQRT_3 * t, rng))
}

/// Sixth-order law as the equal mixture of `Cauchy(0, t)` and `Cauchy(-√3t/2, t/2)`.
pub fn sample_sixth_order(t: f64, rng: &mut RngState) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    Ok(if rng.coin() { cauchy(0.0, t, rng) } else { cauchy(-0.5 * SQRT_3 * t, 0.5 * t, rng) })
}

/// One-sided stable subordinator of index 1/3 at time `t`, with Laplace
/// transform `exp(-t λ^{1/3})`, by Kanter's representation
/// `sin(U/3) sin(2U/3)² / (sin³ U · E²)` scaled by `t³`.
pub fn sample_stable13(t: f64, rng: &mut RngState) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    Ok(t * t * t * stable13_unit(rng))
}

#[inline]
fn stable13_unit(rng: &mut RngState) -> f64 {
    let u = PI * rng.uniform();
    let e = rng.exponential();
    let s = u.sin();
    let b = (2.0 * u / 3.0).sin() / e;
    (u / 3.0).sin() / (s * s * s) * b * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn degenerate_scale() {
        let mut r = RngState::new(3);
        let x = sample_cauchy(5.0, 1e-300, &mut r).unwrap();
        assert!((x - 5.0).abs() < 1e-200);
        assert!(sample_cauchy(0.0, 0.0, &mut r).is_err());
    }

    #[test]
    fn folded_and_stable_are_nonnegative() {
        let mut r = RngState::new(11);
        let c = ComponentSpec::new(3, 1, 1.0).unwrap();
        for _ in 0..10_000 {
            assert!(sample_folded(&c, &mut r) >= 0.0);
            assert!(sample_stable13(0.7, &mut r).unwrap() > 0.0);
        }
    }

    #[test]
    fn component_sign_balance() {
        let mut r = RngState::new(2);
        let c = ComponentSpec::new(2, 1, 1.0).unwrap();
        let n = 40_000;
        let pos = (0..n).filter(|_| sample_component_exact(&c, &mut r) > 0.0).count();
        assert!((pos as f64 - n as f64 / 2.0).abs() < 4.0 * (n as f64).sqrt());
    }

    #[test]
    fn cauchy_median() {
        let mut r = RngState::new(8);
        let n = 20_001;
        let mut xs: Vec<f64> = (0..n).map(|_| sample_cauchy(3.0, 2.0, &mut r).unwrap()).collect();
        xs.sort_by(f64::total_cmp);
        let bound = 3.0 * 2.0 * (PI / 2.0) / (n as f64).sqrt();
        assert!((xs[n / 2] - 3.0).abs() < bound);
    }
}
