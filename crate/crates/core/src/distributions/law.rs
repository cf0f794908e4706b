use core::fmt;
use num_complex::Complex64;
use num_traits::Float;

use super::asym::{asym_cauchy_cdf, asym_cauchy_cf, asym_cauchy_pdf, p6_cdf, p6_pdf, third_order_cdf, third_order_pdf};
use super::cauchy::{cauchy_cdf, cauchy_pdf};
use super::hyper::{
    component_cdf, component_pdf, folded_cdf, folded_pdf, hyper_cauchy_cdf, hyper_cauchy_cf,
    hyper_cauchy_pdf,
};
use super::{AsymCauchyParams, ComponentSpec, HyperCauchyParams};
use crate::error::{ensure_finite, Result};
use crate::special::{stable13_subordinator_cdf, stable13_subordinator_pdf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    RealLine,
    /// `[0, ∞)`.
    HalfLine,
}

/// A probability law with a closed-form or quadrature-backed density and CDF.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "law", rename_all = "snake_case"))]
pub enum Law {
    Cauchy { t: f64 },
    HyperCauchy(HyperCauchyParams),
    Component(ComponentSpec),
    Folded(ComponentSpec),
    Asym(AsymCauchyParams),
    ThirdOrder { t: f64 },
    SixthOrder { t: f64 },
    Stable13 { t: f64 },
}

impl Law {
    pub fn support(&self) -> Support {
        match self {
            Law::Folded(_) | Law::Stable13 { .. } => Support::HalfLine,
            _ => Support::RealLine,
        }
    }

    /// Density at `x`; zero outside the support.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        if self.support() == Support::HalfLine && x < 0.0 {
            return Ok(0.0);
        }
        match *self {
            Law::Cauchy { t } => cauchy_pdf(x, t),
            Law::HyperCauchy(p) => hyper_cauchy_pdf(x, &p),
            Law::Component(c) => component_pdf(x, &c),
            Law::Folded(c) => folded_pdf(x, &c),
            Law::Asym(p) => asym_cauchy_pdf(x, &p),
            Law::ThirdOrder { t } => third_order_pdf(x, t),
            Law::SixthOrder { t } => p6_pdf(x, t),
            Law::Stable13 { t } => {
                if x == 0.0 {
                    Ok(0.0)
                } else {
                    stable13_subordinator_pdf(x, t)
                }
            }
        }
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        if self.support() == Support::HalfLine && x <= 0.0 {
            return Ok(0.0);
        }
        match *self {
            Law::Cauchy { t } => cauchy_cdf(x, t),
            Law::HyperCauchy(p) => hyper_cauchy_cdf(x, &p),
            Law::Component(c) => component_cdf(x, &c),
            Law::Folded(c) => folded_cdf(x, &c),
            Law::Asym(p) => asym_cauchy_cdf(x, &p),
            Law::ThirdOrder { t } => third_order_cdf(x, t),
            Law::SixthOrder { t } => p6_cdf(x, t),
            Law::Stable13 { t } => stable13_subordinator_cdf(x, t),
        }
    }
}

impl Law {
    /// Closed-form characteristic function `E e^{iβX}`, when one is available.
    pub fn cf(&self, beta: f64) -> Option<Result<Complex64>> {
        if let Err(e) = ensure_finite(beta, "beta must be finite") {
            return Some(Err(e));
        }
        let a = beta.abs();
        let located = |center: f64, scale: f64| Complex64::from_polar((-scale * a).exp(), beta * center);
        Some(Ok(match *self {
            Law::Cauchy { t } => located(0.0, t),
            Law::HyperCauchy(p) => return Some(hyper_cauchy_cf(beta, &p).map(|v| Complex64::new(v, 0.0))),
            Law::Component(c) => Complex64::new(
                (-c.cauchy_scale() * a).exp() * (beta * c.cauchy_location()).cos(),
                0.0,
            ),
            Law::Asym(p) => return Some(asym_cauchy_cf(beta, &p)),
            Law::ThirdOrder { t } => located(-0.5 * t, 0.5 * 3f64.sqrt() * t),
            Law::SixthOrder { t } => {
                (located(0.0, t) + located(-0.5 * 3f64.sqrt() * t, 0.5 * t)) * 0.5
            }
            Law::Folded(_) | Law::Stable13 { .. } => return None,
        }))
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::Cauchy { t } => write!(f, "cauchy(t={t})"),
            Law::HyperCauchy(p) => write!(f, "hyper(n={},t={})", p.n(), p.t()),
            Law::Component(c) => write!(f, "component(n={},k={},t={})", c.n(), c.k(), c.t()),
            Law::Folded(c) => write!(f, "folded(n={},k={},t={})", c.n(), c.k(), c.t()),
            Law::Asym(p) => match p.kind() {
                super::AsymKind::Composition { k } => write!(f, "asym(k={k},t={})", p.t()),
                super::AsymKind::Generic { m } => write!(f, "asym(m={m},t={})", p.t()),
            },
            Law::ThirdOrder { t } => write!(f, "third(t={t})"),
            Law::SixthOrder { t } => write!(f, "p6(t={t})"),
            Law::Stable13 { t } => write!(f, "stable13(t={t})"),
        }
    }
}
