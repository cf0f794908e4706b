//! Central finite differences with fixed second-order stencils.

use num_traits::Float;

use crate::error::{ensure_finite, Error, Result};

// Coefficients for offsets -m..=m, divided by h^order.
const D1: [f64; 3] = [-0.5, 0.0, 0.5];
const D2: [f64; 3] = [1.0, -2.0, 1.0];
const D3: [f64; 5] = [-0.5, 1.0, 0.0, -1.0, 0.5];
const D4: [f64; 5] = [1.0, -4.0, 6.0, -4.0, 1.0];
const D5: [f64; 7] = [-0.5, 2.0, -2.5, 0.0, 2.5, -2.0, 0.5];
const D6: [f64; 7] = [1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0];

/// Stencil weights for a derivative of the given order, centered at index `len/2`.
pub fn stencil(order: u32) -> Result<&'static [f64]> {
    Ok(match order {
        1 => &D1,
        2 => &D2,
        3 => &D3,
        4 => &D4,
        5 => &D5,
        6 => &D6,
        _ => return Err(Error::Domain("derivative order must lie in 1..=6")),
    })
}

/// Central-difference approximation of `f^(order)(x0)` with `O(h²)` error.
pub fn finite_difference<F: Fn(f64) -> f64>(f: F, order: u32, x0: f64, h: f64) -> Result<f64> {
    ensure_finite(x0, "x0 must be finite")?;
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Domain("step h must be positive"));
    }
    let w = stencil(order)?;
    let m = (w.len() / 2) as i32;
    let mut acc = 0.0;
    for (i, &c) in w.iter().enumerate() {
        if c != 0.0 {
            acc += c * f(x0 + (i as i32 - m) as f64 * h);
        }
    }
    Ok(acc / h.powi(order as i32))
}

/// Derivative `∂^p_x ∂^q_t g(x0, t0)` as a tensor product of central stencils.
pub fn partial_difference<G: Fn(f64, f64) -> f64>(
    g: G,
    order_x: u32,
    order_t: u32,
    x0: f64,
    t0: f64,
    h: f64,
) -> Result<f64> {
    ensure_finite(x0, "x0 must be finite")?;
    ensure_finite(t0, "t0 must be finite")?;
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::Domain("step h must be positive"));
    }
    let one = [1.0];
    let wx: &[f64] = if order_x == 0 { &one } else { stencil(order_x)? };
    let wt: &[f64] = if order_t == 0 { &one } else { stencil(order_t)? };
    let mx = (wx.len() / 2) as i32;
    let mt = (wt.len() / 2) as i32;
    let mut acc = 0.0;
    for (i, &cx) in wx.iter().enumerate() {
        if cx == 0.0 {
            continue;
        }
        for (j, &ct) in wt.iter().enumerate() {
            if ct == 0.0 {
                continue;
            }
            let x = x0 + (i as i32 - mx) as f64 * h;
            let t = t0 + (j as i32 - mt) as f64 * h;
            acc += cx * ct * g(x, t);
        }
    }
    Ok(acc / h.powi((order_x + order_t) as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn cubic_third_derivative_is_exact() {
        for &(x0, h) in &[(0.0, 0.1), (1.7, 0.01), (-3.0, 0.5)] {
            let d = finite_difference(|x| x * x * x, 3, x0, h).unwrap();
            assert!((d - 6.0).abs() < 1e-6 / h.powi(3) * 1e-6 + 1e-6);
        }
    }

    #[test]
    fn cauchy_second_derivative_at_origin() {
        let f = |x: f64| 1.0 / (PI * (1.0 + x * x));
        let h = 1e-3;
        let d = finite_difference(f, 2, 0.0, h).unwrap();
        assert!((d + 2.0 / PI).abs() < 10.0 * h * h);
    }

    #[test]
    fn error_quarters_when_step_halves() {
        let e1 = (finite_difference(f64::exp, 4, 0.0, 0.1).unwrap() - 1.0).abs();
        let e2 = (finite_difference(f64::exp, 4, 0.0, 0.05).unwrap() - 1.0).abs();
        let ratio = e1 / e2;
        assert!((ratio - 4.0).abs() < 0.2, "ratio {ratio}");
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(finite_difference(f64::exp, 2, 0.0, 0.0).is_err());
        assert!(finite_difference(f64::exp, 2, 0.0, -1.0).is_err());
        assert!(finite_difference(f64::exp, 7, 0.0, 0.1).is_err());
        assert!(finite_difference(f64::exp, 0, 0.0, 0.1).is_err());
    }

    #[test]
    fn mixed_partial_of_product() {
        // ∂x ∂t (x² t³) = 6 x t².
        let d = partial_difference(|x, t| x * x * t * t * t, 1, 1, 1.5, 2.0, 1e-3).unwrap();
        assert!((d - 36.0).abs() < 1e-4);
    }
}
