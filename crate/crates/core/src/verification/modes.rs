//! Mode locations and unimodality.

use alloc::format;
use alloc::vec::Vec;
use num_traits::Float;

use super::CheckReport;
use crate::distributions::{find_component_modes, find_modes, p6_pdf, ComponentSpec, HyperCauchyParams};
use crate::error::{ensure_positive, Result};
use crate::numerics::local_maxima;

/// The quartic law has modes at `±t sqrt(√2 - 1)`.
pub fn verify_p4_modes(t: f64) -> Result<CheckReport> {
    let modes = find_modes(&HyperCauchyParams::new(2, t)?)?;
    let expected = t * (2f64.sqrt() - 1.0).sqrt();
    let positive: Vec<f64> = modes.iter().copied().filter(|&m| m > 0.0).collect();
    let measured = if positive.len() == 1 && modes.len() == 2 { positive[0] } else { f64::NAN };
    Ok(CheckReport::absolute(
        format!("p4 modes t={t}"),
        measured,
        expected,
        1e-6,
        format!("located modes {modes:?}"),
    ))
}

/// Component densities are bimodal exactly when `sin(kπ/2^n) > 1/2`, with
/// modes at `±t sqrt(2 sin(kπ/2^n) - 1)`; otherwise unimodal at 0.
pub fn verify_component_modes(n: u32, k: u64, t: f64) -> Result<CheckReport> {
    let c = ComponentSpec::new(n, k, t)?;
    let found = find_component_modes(&c)?;
    let predicted = c.mode_locations();
    let worst = if found.len() == predicted.len() {
        let mut f = found.clone();
        let mut p = predicted.clone();
        f.sort_by(f64::total_cmp);
        p.sort_by(f64::total_cmp);
        f.iter().zip(&p).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    Ok(CheckReport::absolute(
        format!("component modes n={n} k={k} t={t}"),
        worst,
        0.0,
        1e-6 * t,
        format!("sin={:.6}, found {found:?}, predicted {predicted:?}", c.sin_angle()),
    ))
}

/// The sixth-order law has a single maximum on `[-10t, 10t]`.
pub fn verify_p6_unimodal(t: f64) -> Result<CheckReport> {
    ensure_positive(t, "time scale t must be positive")?;
    let maxima = local_maxima(|x| p6_pdf(x, t).unwrap_or(f64::NAN), -10.0 * t, 10.0 * t, 4001, 1e-10 * t)?;
    Ok(CheckReport::absolute(
        format!("p6 unimodal t={t}"),
        maxima.len() as f64,
        1.0,
        0.0,
        format!("local maxima at {maxima:?}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_checks() {
        assert!(verify_p4_modes(1.0).unwrap().passed());
        assert!(verify_p4_modes(2.5).unwrap().passed());
        for k in [1, 3, 5, 7] {
            let r = verify_component_modes(4, k, 1.0).unwrap();
            assert!(r.passed(), "{}", r.detail());
        }
        let r = verify_p6_unimodal(1.0).unwrap();
        assert!(r.passed(), "{}", r.detail());
    }
}
