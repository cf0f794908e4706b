//! Modified Bessel functions of order ±1/3.

use core::f64::consts::PI;
use num_traits::Float;

use super::gamma::gamma;
use crate::error::{ensure_positive, Error, Result};

const THIRD: f64 = 1.0 / 3.0;

/// Ascending series is used below this argument, the Hankel asymptotic above.
const I_ASYMPTOTIC_FROM: f64 = 30.0;
/// `K_{1/3}` from the `I` difference up to here.
const K_SERIES_UP_TO: f64 = 2.0;
/// `K_{1/3}` from its exponential-decay asymptotic expansion from here on.
const K_ASYMPTOTIC_FROM: f64 = 25.0;

fn check_order(nu: f64) -> Result<()> {
    if (nu.abs() - THIRD).abs() < 1e-15 {
        Ok(())
    } else {
        Err(Error::Domain("Bessel order must be ±1/3"))
    }
}

/// Modified Bessel function of the first kind `I_ν(x)` for `ν = ±1/3`, `x > 0`.
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    check_order(nu)?;
    ensure_positive(x, "Bessel I requires x > 0")?;
    Ok(if x < I_ASYMPTOTIC_FROM {
        bessel_i_series(nu, x)
    } else {
        bessel_i_asymptotic(nu, x)
    })
}

pub(crate) fn bessel_i_series(nu: f64, x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = (0.5 * x).powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= q / (k * (k + nu));
        sum += term;
        if term < 1e-17 * sum || k > 400.0 {
            return sum;
        }
    }
}

/// `e^x / sqrt(2πx) · Σ (-1)^k a_k(ν) / x^k`, stopped at the smallest term.
pub(crate) fn bessel_i_asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let odd = (2 * k - 1) as f64;
        term *= -(mu - odd * odd) / (k as f64 * 8.0 * x);
        if term.abs() >= prev {
            break;
        }
        sum += term;
        prev = term.abs();
        if prev < 1e-17 * sum.abs() {
            break;
        }
    }
    x.exp() / (2.0 * PI * x).sqrt() * sum
}

/// Modified Bessel function of the second kind `K_{1/3}(x)`, `x > 0`.
///
/// Small arguments use `K_ν = π (I_{-ν} - I_ν) / (2 sin πν)`. Beyond
/// `x = 2` the difference cancels badly, so the exponentially scaled integral
/// `e^x K_ν(x) = ∫_0^∞ exp(-x (cosh u - 1)) cosh(νu) du` is summed with the
/// trapezoidal rule (spectrally accurate for this entire integrand), and for
/// large `x` the decay asymptotic `sqrt(π/2x) e^{-x} Σ a_k(ν)/x^k` takes over.
pub fn bessel_k_third(x: f64) -> Result<f64> {
    ensure_positive(x, "Bessel K requires x > 0")?;
    Ok(if x <= K_SERIES_UP_TO {
        bessel_k_third_from_i(x)
    } else if x < K_ASYMPTOTIC_FROM {
        (-x).exp() * scaled_k_third_integral(x)
    } else {
        (-x).exp() * scaled_k_third_asymptotic(x)
    })
}

/// `e^x K_{1/3}(x)`, well defined for large arguments where `K` underflows.
pub(crate) fn scaled_bessel_k_third(x: f64) -> f64 {
    if x <= K_SERIES_UP_TO {
        x.exp() * bessel_k_third_from_i(x)
    } else if x < K_ASYMPTOTIC_FROM {
        scaled_k_third_integral(x)
    } else {
        scaled_k_third_asymptotic(x)
    }
}

pub(crate) fn bessel_k_third_from_i(x: f64) -> f64 {
    let diff = bessel_i_series(-THIRD, x) - bessel_i_series(THIRD, x);
    PI * diff / (2.0 * (PI * THIRD).sin())
}

pub(crate) fn scaled_k_third_integral(x: f64) -> f64 {
    const STEP: f64 = 0.1;
    // Stop once exp(-x (cosh u - 1)) < e^-46 (relative to the u = 0 value).
    let u_max = (1.0 + 46.0 / x).acosh();
    let n = (u_max / STEP).ceil() as usize;
    let mut sum = 0.5;
    for i in 1..=n {
        let u = i as f64 * STEP;
        sum += (-x * (u.cosh() - 1.0)).exp() * (THIRD * u).cosh();
    }
    sum * STEP
}

pub(crate) fn scaled_k_third_asymptotic(x: f64) -> f64 {
    let mu = 4.0 * THIRD * THIRD;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if term.abs() >= prev {
            break;
        }
        sum += term;
        prev = term.abs();
        if prev < 1e-17 {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    // Reference values to 20 digits.
    const K13: [(f64, f64); 5] = [
        (0.5, 0.989_031_074_246_724_3),
        (1.0, 0.438_430_633_441_534_4),
        (2.0, 0.116_544_961_296_165_25),
        (5.0, 3.728_875_096_053_588_4e-3),
        (10.0, 1.787_460_827_105_533_5e-5),
    ];

    #[test]
    fn i_matches_reference() {
        let refs = [
            (-THIRD, 0.5, 1.284_254_566_127_394_2),
            (THIRD, 0.5, 0.738_973_156_425_119_3),
            (-THIRD, 5.0, 26.899_608_905_856_238),
            (THIRD, 10.0, 2_799.239_609_705_679_4),
        ];
        for (nu, x, v) in refs {
            assert!(rel(bessel_i(nu, x).unwrap(), v) < 1e-13, "I_{nu}({x})");
        }
    }

    #[test]
    fn i_small_argument_leading_term() {
        let x = 1e-6;
        let lead = (0.5 * x).powf(THIRD) / gamma(4.0 / 3.0);
        assert!(rel(bessel_i(THIRD, x).unwrap(), lead) < 1e-11);
    }

    #[test]
    fn i_large_argument_asymptotic() {
        let x = 50.0;
        let lead = x.exp() / (2.0 * PI * x).sqrt();
        assert!(rel(bessel_i(THIRD, x).unwrap(), lead) < 0.01);
        // The two branches agree where they meet.
        let x = I_ASYMPTOTIC_FROM;
        assert!(rel(bessel_i_series(THIRD, x), bessel_i_asymptotic(THIRD, x)) < 1e-13);
    }

    #[test]
    fn k_matches_reference_on_every_branch() {
        for (x, v) in K13 {
            assert!(rel(bessel_k_third(x).unwrap(), v) < 1e-12, "K({x})");
        }
        let x = 40.0;
        let direct = (-x).exp() * scaled_k_third_integral(x);
        assert!(rel(bessel_k_third(x).unwrap(), direct) < 1e-13);
    }

    #[test]
    fn k_representations_agree_at_one() {
        let x = 1.0;
        let integral = (-x).exp() * scaled_k_third_integral(x);
        assert!(rel(integral, bessel_k_third_from_i(x)) < 1e-10);
    }

    #[test]
    fn k_branches_are_continuous() {
        for x in [K_SERIES_UP_TO, K_ASYMPTOTIC_FROM] {
            let below = bessel_k_third(x * (1.0 - 1e-12)).unwrap();
            let above = bessel_k_third(x * (1.0 + 1e-12)).unwrap();
            assert!(rel(below, above) < 1e-10, "x = {x}");
        }
    }

    #[test]
    fn k_decays_monotonically() {
        let mut prev = f64::INFINITY;
        for i in 1..400 {
            let v = bessel_k_third(0.1 * i as f64).unwrap();
            assert!(v < prev && v > 0.0);
            prev = v;
        }
        assert_eq!(bessel_k_third(2000.0).unwrap(), 0.0);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(bessel_i(0.5, 1.0).is_err());
        assert!(bessel_i(THIRD, 0.0).is_err());
        assert!(bessel_k_third(-1.0).is_err());
        assert!(bessel_k_third(f64::NAN).is_err());
    }
}
