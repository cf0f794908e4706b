//! Unit mass of every registered law.

use alloc::format;

use super::CheckReport;
use crate::distributions::{Law, Support};
use crate::numerics::{integrate_half_line, integrate_real_line, Tolerance};

/// `∫ p = 1` over the support, to `1e-8`.
pub fn verify_normalization(law: &Law) -> CheckReport {
    let tol = Tolerance::new(1e-12, 1e-11);
    let pdf = |x: f64| law.pdf(x).unwrap_or(f64::NAN);
    let r = match law.support() {
        Support::RealLine => integrate_real_line(pdf, tol),
        Support::HalfLine => integrate_half_line(pdf, tol),
    };
    CheckReport::absolute(
        format!("normalization {law}"),
        r.value,
        1.0,
        1e-8,
        format!("quadrature error estimate {:.1e}, {} evaluations", r.error_estimate, r.evaluations),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{AsymCauchyParams, ComponentSpec, HyperCauchyParams};

    #[test]
    fn all_laws_normalized() {
        let mut laws = alloc::vec![
            Law::Cauchy { t: 1.0 },
            Law::ThirdOrder { t: 1.0 },
            Law::SixthOrder { t: 2.0 },
            Law::Stable13 { t: 1.0 },
            Law::Asym(AsymCauchyParams::composition(2, 1.0).unwrap()),
            Law::Asym(AsymCauchyParams::generic(5, 0.5).unwrap()),
            Law::Component(ComponentSpec::new(3, 3, 1.0).unwrap()),
            Law::Folded(ComponentSpec::new(3, 1, 1.0).unwrap()),
        ];
        for n in 2..=6 {
            for t in [0.5, 1.0, 2.0] {
                laws.push(Law::HyperCauchy(HyperCauchyParams::new(n, t).unwrap()));
            }
        }
        for law in &laws {
            let r = verify_normalization(law);
            assert!(r.passed(), "{}: {} ({})", r.check_name(), r.measured(), r.detail());
        }
    }
}
