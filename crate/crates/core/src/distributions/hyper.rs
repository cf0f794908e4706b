//! The hyper-Cauchy family `p_{2^n}` and its mixture components.
//!
//! With `θ_k = kπ/2^n` for odd `k < 2^{n-1}`, the density is the uniform
//! mixture of the `2^{n-2}` components
//!
//! `h_k(x, t) = t (x² + t²) cos θ_k / (π (x⁴ + t⁴ + 2x²t² cos 2θ_k))`,
//!
//! and each component is itself the equal-weight mixture of the Cauchy laws
//! centered at `±t sin θ_k` with scale `t cos θ_k`. The denominators are
//! evaluated as `(x² - t²)² + (2xt cos θ_k)²`, which is free of cancellation
//! near `|x| = t` where the components with `cos θ_k → 0` peak.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_1_PI, PI, SQRT_2};
use num_complex::Complex64;
use num_traits::Float;

use super::cauchy::located_cdf;
use crate::error::{ensure_finite, ensure_positive, Error, Result};
use crate::numerics::optimize::local_maxima;

/// Largest supported family index.
pub const MAX_N: u32 = 30;
/// Largest family index accepted by the complex and product representations.
pub const MAX_N_EXPANDED: u32 = 6;
/// Bound on `|x|` and `t` for the product representation.
pub const PRODUCT_RANGE: f64 = 50.0;

/// Family index `n` (the law has order `2^n`) and time scale `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HyperCauchyParams {
    n: u32,
    t: f64,
}

impl HyperCauchyParams {
    pub fn new(n: u32, t: f64) -> Result<Self> {
        if !(2..=MAX_N).contains(&n) {
            return Err(Error::Domain("hyper-Cauchy index n must lie in 2..=30"));
        }
        ensure_positive(t, "time scale t must be positive")?;
        Ok(HyperCauchyParams { n, t })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// Order `2^n` of the associated Laplace-type equation.
    pub fn order(&self) -> u64 {
        1u64 << self.n
    }

    pub fn component_count(&self) -> usize {
        1usize << (self.n - 2)
    }

    pub fn components(&self) -> Vec<ComponentSpec> {
        (0..self.component_count())
            .map(|i| ComponentSpec::build(self.n, 2 * i as u64 + 1, self.t))
            .collect()
    }
}

/// One odd-`k` component `h_k` of `p_{2^n}`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComponentSpec {
    n: u32,
    k: u64,
    t: f64,
    angle: f64,
    cos_angle: f64,
    sin_angle: f64,
    weight: f64,
}

impl ComponentSpec {
    pub fn new(n: u32, k: u64, t: f64) -> Result<Self> {
        HyperCauchyParams::new(n, t)?;
        if k % 2 == 0 || k >= 1u64 << (n - 1) {
            return Err(Error::Domain("component index k must be odd and below 2^(n-1)"));
        }
        Ok(Self::build(n, k, t))
    }

    fn build(n: u32, k: u64, t: f64) -> Self {
        let unit = PI / (1u64 << n) as f64;
        let j = (1u64 << (n - 1)) - k;
        // Both factors come from sines of exactly scaled small arguments.
        let sin_angle = (k as f64 * unit).sin();
        let cos_angle = (j as f64 * unit).sin();
        ComponentSpec {
            n,
            k,
            t,
            angle: k as f64 * unit,
            cos_angle,
            sin_angle,
            weight: 1.0 / (1u64 << (n - 2)) as f64,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// `θ = kπ/2^n`.
    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn cos_angle(&self) -> f64 {
        self.cos_angle
    }

    pub fn sin_angle(&self) -> f64 {
        self.sin_angle
    }

    /// Mixture weight `2^{-(n-2)}` inside `p_{2^n}`.
    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// `t sin θ`; the two Cauchy halves sit at `±` this value.
    pub fn cauchy_location(&self) -> f64 {
        self.t * self.sin_angle
    }

    /// `t cos θ`.
    pub fn cauchy_scale(&self) -> f64 {
        self.t * self.cos_angle
    }

    /// Closed-form maxima `±t sqrt(2 sin θ - 1)` when `sin θ > 1/2`, else `[0]`.
    pub fn mode_locations(&self) -> Vec<f64> {
        if self.sin_angle > 0.5 {
            let m = self.t * (2.0 * self.sin_angle - 1.0).sqrt();
            alloc::vec![-m, m]
        } else {
            alloc::vec![0.0]
        }
    }
}

/// `c (1 + u²) / ((1 - u²)² + (2uc)²)`; symmetric under `u ↦ 1/u` up to `u²`.
#[inline]
fn shape(u: f64, c: f64) -> f64 {
    let (num, d, q) = shape_factors(u);
    num * c / (d + q * c * c)
}

/// Returns `(prefactor, (1-u²)², 4u²)`, switching to `v = 1/u` for `|u| > 2`
/// so that nothing overflows.
#[inline]
fn shape_factors(u: f64) -> (f64, f64, f64) {
    let u = u.abs();
    if u <= 2.0 {
        let d = (1.0 - u) * (1.0 + u);
        (1.0 + u * u, d * d, 4.0 * u * u)
    } else {
        let v = 1.0 / u;
        let d = (1.0 - v) * (1.0 + v);
        (v * v * (1.0 + v * v), d * d, 4.0 * v * v)
    }
}

/// `p_{2^n}` with a precomputed component table, for repeated evaluation.
#[derive(Debug, Clone)]
pub struct HyperCauchy {
    params: HyperCauchyParams,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl HyperCauchy {
    pub fn new(params: HyperCauchyParams) -> Self {
        let comps = params.components();
        HyperCauchy {
            params,
            cos: comps.iter().map(|c| c.cos_angle).collect(),
            sin: comps.iter().map(|c| c.sin_angle).collect(),
        }
    }

    pub fn params(&self) -> HyperCauchyParams {
        self.params
    }

    pub fn pdf(&self, x: f64) -> f64 {
        let t = self.params.t;
        let (num, d, q) = shape_factors(x / t);
        let sum: f64 = self.cos.iter().map(|&c| c / (d + q * c * c)).sum();
        num * sum / (self.cos.len() as f64 * PI * t)
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x.is_infinite() {
            return if x > 0.0 { 1.0 } else { 0.0 };
        }
        let u = x / self.params.t;
        let sum: f64 = self
            .cos
            .iter()
            .zip(&self.sin)
            .map(|(&c, &s)| ((u + s) / c).atan() + ((u - s) / c).atan())
            .sum();
        (0.5 + sum / (2.0 * PI * self.cos.len() as f64)).clamp(0.0, 1.0)
    }

    pub fn cf(&self, beta: f64) -> f64 {
        let a = self.params.t * beta.abs();
        let sum: f64 = self
            .cos
            .iter()
            .zip(&self.sin)
            .map(|(&c, &s)| (-a * c).exp() * (a * s).cos())
            .sum();
        sum / self.cos.len() as f64
    }
}

/// `p_{2^n}(x, t)` through the real component sum.
pub fn hyper_cauchy_pdf(x: f64, p: &HyperCauchyParams) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    let u = x / p.t;
    let mut sum = 0.0;
    let count = p.component_count();
    for i in 0..count {
        let c = ComponentSpec::build(p.n, 2 * i as u64 + 1, p.t).cos_angle;
        sum += shape(u, c);
    }
    Ok(sum / (count as f64 * PI * p.t))
}

/// `p_{2^n}(x, t)` as the average of Cauchy densities at the complex times
/// `t e^{iπk/2^n}`, `k = ±1, ±3, …`.
///
/// Fails with a consistency error when the imaginary parts do not cancel.
pub fn hyper_cauchy_pdf_complex(x: f64, p: &HyperCauchyParams) -> Result<f64> {
    ensure_finite(x, "x must be finite")?;
    if p.n > MAX_N_EXPANDED {
        return Err(Error::Range("complex representation limited to n <= 6"));
    }
    let half = 1i64 << (p.n - 1);
    let unit = PI / (1u64 << p.n) as f64;
    let x2 = Complex64::new(x * x, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut k = -(half - 1);
    while k < half {
        let z = Complex64::from_polar(p.t, k as f64 * unit);
        sum += z / (x2 + z * z);
        k += 2;
    }
    let scale = FRAC_1_PI / half as f64;
    let (re, im) = (sum.re * scale, sum.im * scale);
    if im.abs() > 1e-9 * re.abs() {
        return Err(Error::Consistency { residue: im, reference: re });
    }
    Ok(re)
}

/// `p_{2^n}(x, t)` through the form with the common denominator `x^{2^n} + t^{2^n}`
/// and, per component, the product of the other components' quartic factors.
///
/// Requires `n <= 6` and `|x|, t <= 50`.
pub fn hyper_cauchy_pdf_product(x: f64, p: &HyperCauchyParams) -> Result<f64> {
    ensure_finite(x, "x must be finite")?;
    if p.n > MAX_N_EXPANDED || x.abs() > PRODUCT_RANGE || p.t > PRODUCT_RANGE {
        return Err(Error::Range("product representation needs n <= 6 and |x|, t <= 50"));
    }
    let t = p.t;
    let (x2, t2) = (x * x, t * t);
    let quartic = x2 * x2 + t2 * t2;
    let count = p.component_count();
    let unit = PI / (1u64 << p.n) as f64;
    let factors: Vec<f64> = (0..count)
        .map(|i| quartic + 2.0 * x2 * t2 * ((2 * i + 1) as f64 * 2.0 * unit).cos())
        .collect();
    let mut sum = 0.0;
    for i in 0..count {
        let mut prod = 1.0;
        for (j, f) in factors.iter().enumerate() {
            if j != i {
                prod *= f;
            }
        }
        sum += ((2 * i + 1) as f64 * unit).cos() * prod;
    }
    let order = 1i32 << p.n;
    let denom = x.powi(order) + t.powi(order);
    Ok(t * (x2 + t2) * sum / (PI * count as f64 * denom))
}

/// Characteristic function `E e^{iβX}`; real and even in `β`.
pub fn hyper_cauchy_cf(beta: f64, p: &HyperCauchyParams) -> Result<f64> {
    ensure_finite(beta, "beta must be finite")?;
    let a = p.t * beta.abs();
    let count = p.component_count();
    let mut sum = 0.0;
    for i in 0..count {
        let c = ComponentSpec::build(p.n, 2 * i as u64 + 1, p.t);
        sum += (-a * c.cos_angle).exp() * (a * c.sin_angle).cos();
    }
    Ok(sum / count as f64)
}

/// Distribution function of `p_{2^n}` from the two-Cauchy decomposition of
/// every component.
pub fn hyper_cauchy_cdf(x: f64, p: &HyperCauchyParams) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    Ok(HyperCauchy::new(*p).cdf(x))
}

/// Component density `h_k(w, t)` on the whole line.
pub fn component_pdf(w: f64, c: &ComponentSpec) -> Result<f64> {
    if w.is_nan() {
        return Err(Error::Domain("w must not be NaN"));
    }
    Ok(shape(w / c.t, c.cos_angle) / (PI * c.t))
}

/// Distribution function of `h_k`.
pub fn component_cdf(w: f64, c: &ComponentSpec) -> Result<f64> {
    if w.is_nan() {
        return Err(Error::Domain("w must not be NaN"));
    }
    let (l, s) = (c.cauchy_location(), c.cauchy_scale());
    Ok(0.5 * (located_cdf(w, -l, s) + located_cdf(w, l, s)))
}

/// Folded density `f_k(w, t) = 2 h_k(w, t)` for `w >= 0`.
pub fn folded_pdf(w: f64, c: &ComponentSpec) -> Result<f64> {
    if !(w >= 0.0) {
        return Err(Error::Domain("folded density is supported on w >= 0"));
    }
    Ok(2.0 * shape(w / c.t, c.cos_angle) / (PI * c.t))
}

/// Distribution function of the folded law, `P{|C - t sin θ| <= w}`.
pub fn folded_cdf(w: f64, c: &ComponentSpec) -> Result<f64> {
    if w.is_nan() {
        return Err(Error::Domain("w must not be NaN"));
    }
    if w <= 0.0 {
        return Ok(0.0);
    }
    let (l, s) = (c.cauchy_location(), c.cauchy_scale());
    Ok(located_cdf(w, -l, s) - located_cdf(-w, -l, s))
}

/// Disturbance factor `g_k = (x⁴+t⁴+2x²t²) / (x⁴+t⁴+2x²t² cos(kπ/2^{n-1}))`.
pub fn disturbance_g(x: f64, t: f64, k: u64, n: u32) -> Result<f64> {
    let c = ComponentSpec::new(n, k, t)?;
    if x.is_nan() {
        return Err(Error::Domain("x must not be NaN"));
    }
    let u = (x / t).abs();
    let u = if u > 2.0 { 1.0 / u } else { u };
    let d = (1.0 - u) * (1.0 + u);
    let e = 2.0 * u * c.cos_angle;
    let num = 1.0 + u * u;
    Ok(num * num / (d * d + e * e))
}

/// Printed closed form of `p_4`: `t (x² + t²) / (√2 π (x⁴ + t⁴))`.
pub fn p4_pdf(x: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    let (x2, t2) = (x * x, t * t);
    Ok(t * (x2 + t2) / (SQRT_2 * PI * (x2 * x2 + t2 * t2)))
}

/// Printed closed form of `p_8` with the `sin(π/8)` and `cos(π/8)` weights.
pub fn p8_pdf(x: f64, t: f64) -> Result<f64> {
    ensure_positive(t, "time scale t must be positive")?;
    let (x2, t2) = (x * x, t * t);
    let q = x2 * x2 + t2 * t2;
    let r = SQRT_2 * x2 * t2;
    let s = (PI / 8.0).sin();
    let c = (PI / 8.0).cos();
    Ok(t / (2.0 * PI) * ((x2 + t2) / (q - r) * s + (x2 + t2) / (q + r) * c))
}

/// Local maxima of an even density on `[-10t, 10t]`, located by a scan on
/// `[0, 10t]` and golden-section refinement.
pub(crate) fn symmetric_modes<F: Fn(f64) -> f64>(f: F, t: f64) -> Result<Vec<f64>> {
    let tol = 1e-9 * t;
    let positive = local_maxima(&f, 0.0, 10.0 * t, 4001, tol)?;
    let mut modes: Vec<f64> = positive.iter().rev().map(|&m| -m).collect();
    let probe = 1e-4 * t;
    if f(0.0) > f(probe) {
        modes.push(0.0);
    }
    modes.extend(positive);
    Ok(modes)
}

/// Maxima of `p_{2^n}(·, t)` on `[-10t, 10t]`, in increasing order.
pub fn find_modes(p: &HyperCauchyParams) -> Result<Vec<f64>> {
    let law = HyperCauchy::new(*p);
    let modes = symmetric_modes(|x| law.pdf(x), p.t)?;
    if modes.is_empty() {
        return Err(Error::NoConvergence { iterations: 0 });
    }
    Ok(modes)
}

/// Maxima of `h_k(·, t)` on `[-10t, 10t]`, in increasing order.
pub fn find_component_modes(c: &ComponentSpec) -> Result<Vec<f64>> {
    let modes = symmetric_modes(|w| shape(w / c.t, c.cos_angle), c.t)?;
    if modes.is_empty() {
        return Err(Error::NoConvergence { iterations: 0 });
    }
    Ok(modes)
}
