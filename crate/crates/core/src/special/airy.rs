//! Airy function `Ai` on the real line.
//!
//! Three regions:
//!
//! - `-8 <= w <= 4`: the Maclaurin series
//!   `Ai(w) = (3^{-2/3}/π) Σ_k (3^{1/3} w)^k / k! · sin(2π(k+1)/3) Γ((k+1)/3)`.
//!   Every third term vanishes and the remaining ones regroup into
//!   `Ai(0) f(w) + Ai'(0) g(w)` with rational recurrences; they are summed in
//!   double-double because the two halves cancel by up to `e^{(2/3)|w|^{3/2}}`.
//! - `w > 4`: `Ai(w) = (1/π) sqrt(w/3) K_{1/3}(ζ)`, `ζ = (2/3) w^{3/2}`, which is
//!   the `I_{∓1/3}` combination written without the cancellation.
//! - `w < -8`: the oscillatory Hankel-type expansion.

use core::f64::consts::{FRAC_PI_4, PI};
use num_traits::Float;

use super::bessel::scaled_bessel_k_third;
use super::dd::Dd;
use crate::error::{ensure_finite, Error, Result};
use crate::numerics::quadrature::{integrate_half_line, Tolerance};

/// `Ai(0) = 3^{-2/3} / Γ(2/3)` as a double-double.
const AI_0: Dd = Dd::new(0.355_028_053_887_817_2, 2.052_336_324_362_12e-17);
/// `-Ai'(0) = 3^{-1/3} / Γ(1/3)` as a double-double.
const MINUS_AI_PRIME_0: Dd = Dd::new(0.258_819_403_792_806_8, -2.522_243_111_610_832e-17);

const SERIES_MAX: f64 = 4.0;
const SERIES_MIN: f64 = -8.0;
const SERIES_DOMAIN: (f64, f64) = (-12.0, 8.0);
const MAX_TERMS: usize = 200;

/// The two regrouped power series `f(w) = Σ a_m`, `g(w) = Σ b_m`, optionally
/// integrated term by term from 0 to `w`.
fn maclaurin_parts(w: f64, integrated: bool) -> (Dd, Dd) {
    let w3 = Dd::square(w).mul_f64(w);
    let mut a = Dd::from_f64(1.0);
    let mut b = Dd::from_f64(w);
    let mut f = Dd::ZERO;
    let mut g = Dd::ZERO;
    for m in 0..MAX_TERMS {
        let k = 3.0 * m as f64;
        let (ta, tb) = if integrated {
            (a.mul_f64(w).div_f64(k + 1.0), b.mul_f64(w).div_f64(k + 2.0))
        } else {
            (a, b)
        };
        f = f + ta;
        g = g + tb;
        if m > 1 && ta.abs_hi() + tb.abs_hi() < 1e-34 * (f.abs_hi() + g.abs_hi()) {
            break;
        }
        a = (a * w3).div_f64((k + 2.0) * (k + 3.0));
        b = (b * w3).div_f64((k + 3.0) * (k + 4.0));
    }
    (f, g)
}

/// `Ai(w)` from its everywhere-convergent power series, valid for `-12 <= w <= 8`.
pub fn airy_ai_series(w: f64) -> Result<f64> {
    ensure_finite(w, "Airy argument must be finite")?;
    if w < SERIES_DOMAIN.0 || w > SERIES_DOMAIN.1 {
        return Err(Error::Domain("Airy series limited to -12 <= w <= 8"));
    }
    let (f, g) = maclaurin_parts(w, false);
    Ok((AI_0 * f - MINUS_AI_PRIME_0 * g).to_f64())
}

/// `Ai(w) = (√w/3) [I_{-1/3}(ζ) - I_{1/3}(ζ)] = (1/π) sqrt(w/3) K_{1/3}(ζ)`, `w > 0`.
pub fn airy_ai_bessel(w: f64) -> Result<f64> {
    if !(w > 0.0) || !w.is_finite() {
        return Err(Error::Domain("Bessel form of Ai requires finite w > 0"));
    }
    let zeta = 2.0 / 3.0 * w * w.sqrt();
    // Scaled K keeps the prefactor finite when e^{-ζ} underflows.
    Ok((w / 3.0).sqrt() / PI * scaled_bessel_k_third(zeta) * (-zeta).exp())
}

fn airy_ai_negative_asymptotic(w: f64) -> f64 {
    let x = -w;
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    // u_k = Γ(3k+1/2) / (54^k k! Γ(k+1/2)); even terms feed P, odd ones Q.
    let mut u = 1.0;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut prev = f64::INFINITY;
    let mut zpow = 1.0;
    for k in 0..40u32 {
        if k > 0 {
            let kf = k as f64;
            u *= (3.0 * kf - 0.5) * (3.0 * kf - 1.5) * (3.0 * kf - 2.5) / (54.0 * kf * (kf - 0.5));
            zpow *= zeta;
        }
        let term = u / zpow;
        if term >= prev {
            break;
        }
        prev = term;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if term < 1e-17 {
            break;
        }
    }
    let phase = zeta - FRAC_PI_4;
    (phase.cos() * p + phase.sin() * q) / (PI.sqrt() * x.powf(0.25))
}

/// The Airy function `Ai(w)` for finite real `w`.
///
/// Accuracy is better than `1e-12` relative on `[-8, 10]`; for `w < -8` the
/// absolute error is below `1e-13` times the envelope `π^{-1/2}|w|^{-1/4}`.
pub fn airy_ai(w: f64) -> Result<f64> {
    ensure_finite(w, "Airy argument must be finite")?;
    if w > SERIES_MAX {
        airy_ai_bessel(w)
    } else if w >= SERIES_MIN {
        airy_ai_series(w)
    } else {
        Ok(airy_ai_negative_asymptotic(w))
    }
}

/// `∫_w^∞ Ai(x) dx` for `w >= 0`.
///
/// Uses the term-by-term integrated series `1/3 - ∫_0^w Ai` up to `w = 8` and
/// adaptive quadrature of the super-exponentially decaying tail beyond.
pub fn airy_ai_tail_integral(w: f64) -> Result<f64> {
    ensure_finite(w, "Airy argument must be finite")?;
    if w < 0.0 {
        return Err(Error::Domain("Airy tail integral requires w >= 0"));
    }
    if w <= SERIES_DOMAIN.1 {
        let (f, g) = maclaurin_parts(w, true);
        let head = AI_0 * f - MINUS_AI_PRIME_0 * g;
        return Ok((Dd::from_f64(1.0).div_f64(3.0) - head).to_f64());
    }
    let tol = Tolerance { abs: 0.0, rel: 1e-13 };
    let r = integrate_half_line(|x| airy_ai(w + x).unwrap_or(0.0), tol);
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::gamma;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    // 20-digit reference values.
    const REFS: [(f64, f64); 10] = [
        (-20.0, -0.176_406_127_077_984_7),
        (-8.0, -0.052_705_050_356_386_2),
        (-5.0, 0.350_761_009_024_114_3),
        (-2.0, 0.227_407_428_201_685_6),
        (0.5, 0.231_693_606_480_833_5),
        (2.0, 0.034_924_130_423_274_38),
        (4.0, 9.515_638_512_048_019e-4),
        (4.5, 3.302_503_235_143_09e-4),
        (8.0, 4.692_207_616_099_231_6e-8),
        (10.0, 1.104_753_255_289_868_6e-10),
    ];

    #[test]
    fn value_at_origin_is_closed_form() {
        let closed = 3f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0);
        assert!(rel(airy_ai(0.0).unwrap(), closed) < 1e-14);
        assert!(rel(airy_ai(0.0).unwrap(), 0.355_028_053_887_817_2) < 1e-15);
    }

    #[test]
    fn value_at_one() {
        assert!(rel(airy_ai(1.0).unwrap(), 0.135_292_416_312_881_4) < 1e-13);
    }

    #[test]
    fn matches_reference_table() {
        for (w, v) in REFS {
            let tol = if w < -8.0 { 1e-11 } else { 1e-12 };
            assert!(rel(airy_ai(w).unwrap(), v) < tol, "Ai({w})");
        }
    }

    #[test]
    fn literal_series_with_gamma_matches_for_small_arguments() {
        // Direct transcription of the k-indexed series in plain doubles.
        let literal = |w: f64| {
            let z = 3f64.powf(1.0 / 3.0) * w;
            let mut sum = 0.0;
            let mut zk_over_kfact = 1.0;
            for k in 0..60 {
                if k > 0 {
                    zk_over_kfact *= z / k as f64;
                }
                let kp1 = (k + 1) as f64;
                sum += zk_over_kfact * (2.0 * PI / 3.0 * kp1).sin() * gamma(kp1 / 3.0);
            }
            3f64.powf(-2.0 / 3.0) / PI * sum
        };
        for &w in &[-1.5, -0.3, 0.0, 0.4, 1.0, 1.7] {
            let a = airy_ai(w).unwrap();
            assert!((a - literal(w)).abs() < 1e-13, "w = {w}");
        }
    }

    #[test]
    fn series_and_bessel_i_form_agree_at_four() {
        let w: f64 = 4.0;
        let zeta = 2.0 / 3.0 * w.powf(1.5);
        let i_minus = crate::special::bessel_i(-1.0 / 3.0, zeta).unwrap();
        let i_plus = crate::special::bessel_i(1.0 / 3.0, zeta).unwrap();
        let via_i = w.sqrt() / 3.0 * (i_minus - i_plus);
        assert!(rel(airy_ai_series(w).unwrap(), via_i) < 1e-9);
    }

    #[test]
    fn bessel_i_minus_third_reproduces_ai() {
        // ζ = 1 at w = (3/2)^{2/3}.
        let w = 1.5f64.powf(2.0 / 3.0);
        let via_i = w.sqrt() / 3.0
            * (crate::special::bessel_i(-1.0 / 3.0, 1.0).unwrap()
                - crate::special::bessel_i(1.0 / 3.0, 1.0).unwrap());
        assert!(rel(via_i, airy_ai(w).unwrap()) < 1e-12);
    }

    #[test]
    fn region_switches_are_continuous() {
        let s = airy_ai_series(SERIES_MAX).unwrap();
        let b = airy_ai_bessel(SERIES_MAX).unwrap();
        assert!(rel(s, b) < 5e-12, "{s} {b}");
        let s = airy_ai_series(SERIES_MIN).unwrap();
        let a = airy_ai_negative_asymptotic(SERIES_MIN);
        assert!((s - a).abs() < 1e-12, "{s} {a}");
        // Asymptotic and series overlap on [-12, -8].
        for &w in &[-8.5, -10.0, -12.0] {
            let s = airy_ai_series(w).unwrap();
            let a = airy_ai_negative_asymptotic(w);
            assert!((s - a).abs() < 1e-13, "w = {w}");
        }
    }

    #[test]
    fn tail_integral() {
        assert!((airy_ai_tail_integral(0.0).unwrap() - 1.0 / 3.0).abs() < 1e-16);
        assert!(rel(airy_ai_tail_integral(1.0).unwrap(), 0.097_015_991_416_223_55) < 1e-13);
        assert!(rel(airy_ai_tail_integral(3.0).unwrap(), 3.412_957_326_311_560_8e-3) < 1e-12);
        // Either side of the series/quadrature switch.
        let a = airy_ai_tail_integral(8.0).unwrap();
        let b = airy_ai_tail_integral(8.0 + 1e-9).unwrap();
        assert!(rel(a, b) < 1e-7);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(airy_ai(f64::NAN).is_err());
        assert!(airy_ai(f64::INFINITY).is_err());
        assert!(airy_ai_series(9.0).is_err());
    }
}
