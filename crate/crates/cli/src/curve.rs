//! Functions of `x` that the `pdf` and `figure` commands tabulate.

use anyhow::{bail, Result};
use hypercauchy_core::distributions::{
    asym_cauchy_pdf, cauchy_pdf, component_pdf, disturbance_g, folded_pdf, p6_pdf, third_order_pdf,
    AsymCauchyParams, ComponentSpec, HyperCauchy, HyperCauchyParams,
};
use hypercauchy_core::special::{stable13_subordinator_pdf, third_order_kernel};
use serde_json::{json, Value};

/// Law names accepted by `pdf`.
pub const CURVE_NAMES: [&str; 10] =
    ["hyper", "gk", "third", "cauchy", "asym", "p6", "component", "folded", "stable13", "kernel3"];

#[derive(Debug, Clone)]
pub enum Curve {
    Hyper(HyperCauchy),
    Disturbance { n: u32, k: u64, t: f64 },
    Third { t: f64 },
    Cauchy { t: f64 },
    Asym(AsymCauchyParams),
    Sixth { t: f64 },
    Component(ComponentSpec),
    Folded(ComponentSpec),
    Stable13 { t: f64 },
    Kernel3 { t: f64 },
}

/// Raw law parameters as given on the command line.
#[derive(Debug, Clone, Copy, Default)]
pub struct CurveArgs {
    pub n: Option<u32>,
    pub k: Option<u64>,
    pub m: Option<u32>,
    pub t: f64,
}

impl Curve {
    pub fn from_args(law: &str, a: CurveArgs) -> Result<Self> {
        let n = || a.n.ok_or_else(|| anyhow::anyhow!("law {law} needs --n"));
        let k = || a.k.ok_or_else(|| anyhow::anyhow!("law {law} needs --k"));
        Ok(match law {
            "hyper" => Curve::Hyper(HyperCauchy::new(HyperCauchyParams::new(n()?, a.t)?)),
            "gk" => {
                let (n, k) = (n()?, k()?);
                ComponentSpec::new(n, k, a.t)?;
                Curve::Disturbance { n, k, t: a.t }
            }
            "third" => Curve::Third { t: positive(a.t)? },
            "cauchy" => Curve::Cauchy { t: positive(a.t)? },
            "asym" => Curve::Asym(match (a.k, a.m) {
                (Some(k), None) => AsymCauchyParams::composition(u32::try_from(k)?, a.t)?,
                (None, Some(m)) => AsymCauchyParams::generic(m, a.t)?,
                _ => bail!("law asym needs exactly one of --k or --m"),
            }),
            "p6" => Curve::Sixth { t: positive(a.t)? },
            "component" => Curve::Component(ComponentSpec::new(n()?, k()?, a.t)?),
            "folded" => Curve::Folded(ComponentSpec::new(n()?, k()?, a.t)?),
            "stable13" => Curve::Stable13 { t: positive(a.t)? },
            "kernel3" => Curve::Kernel3 { t: positive(a.t)? },
            other => bail!("unknown law {other:?}; expected one of {}", CURVE_NAMES.join(", ")),
        })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Curve::Hyper(_) => "hyper",
            Curve::Disturbance { .. } => "gk",
            Curve::Third { .. } => "third",
            Curve::Cauchy { .. } => "cauchy",
            Curve::Asym(_) => "asym",
            Curve::Sixth { .. } => "p6",
            Curve::Component(_) => "component",
            Curve::Folded(_) => "folded",
            Curve::Stable13 { .. } => "stable13",
            Curve::Kernel3 { .. } => "kernel3",
        }
    }

    /// Parameter echo for machine-readable output.
    pub fn params(&self) -> Value {
        match self {
            Curve::Hyper(h) => json!({ "n": h.params().n(), "t": h.params().t() }),
            Curve::Disturbance { n, k, t } => json!({ "n": n, "k": k, "t": t }),
            Curve::Component(c) | Curve::Folded(c) => json!({ "n": c.n(), "k": c.k(), "t": c.t() }),
            Curve::Asym(p) => json!({
                "kind": p.kind(),
                "t": p.t(),
                "location": p.location(),
                "scale": p.scale(),
            }),
            Curve::Third { t }
            | Curve::Cauchy { t }
            | Curve::Sixth { t }
            | Curve::Stable13 { t }
            | Curve::Kernel3 { t } => json!({ "t": t }),
        }
    }

    /// Value at `x`; one-sided laws are 0 for `x < 0` (and at 0 where the density vanishes).
    pub fn eval(&self, x: f64) -> Result<f64> {
        Ok(match *self {
            Curve::Hyper(ref h) => h.pdf(x),
            Curve::Disturbance { n, k, t } => disturbance_g(x, t, k, n)?,
            Curve::Third { t } => third_order_pdf(x, t)?,
            Curve::Cauchy { t } => cauchy_pdf(x, t)?,
            Curve::Asym(p) => asym_cauchy_pdf(x, &p)?,
            Curve::Sixth { t } => p6_pdf(x, t)?,
            Curve::Component(c) => component_pdf(x, &c)?,
            Curve::Folded(_) if x < 0.0 => 0.0,
            Curve::Folded(c) => folded_pdf(x, &c)?,
            Curve::Stable13 { .. } if x <= 0.0 => 0.0,
            Curve::Stable13 { t } => stable13_subordinator_pdf(x, t)?,
            Curve::Kernel3 { t } => third_order_kernel(x, t)?,
        })
    }

    /// Time scale used for default grids.
    pub fn t(&self) -> f64 {
        match self {
            Curve::Hyper(h) => h.params().t(),
            Curve::Asym(p) => p.t(),
            Curve::Component(c) | Curve::Folded(c) => c.t(),
            Curve::Disturbance { t, .. }
            | Curve::Third { t }
            | Curve::Cauchy { t }
            | Curve::Sixth { t }
            | Curve::Stable13 { t }
            | Curve::Kernel3 { t } => *t,
        }
    }
}

fn positive(t: f64) -> Result<f64> {
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        bail!("time scale t must be positive and finite, got {t}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(n: Option<u32>, k: Option<u64>, t: f64) -> CurveArgs {
        CurveArgs { n, k, m: None, t }
    }

    #[test]
    fn builds_every_law() {
        for name in CURVE_NAMES {
            let c = Curve::from_args(name, args(Some(3), Some(1), 1.0)).unwrap();
            assert_eq!(c.tag(), name);
            assert!(c.eval(0.5).unwrap().is_finite());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Curve::from_args("hyper", args(None, None, 1.0)).is_err());
        assert!(Curve::from_args("hyper", args(Some(1), None, 1.0)).is_err());
        assert!(Curve::from_args("component", args(Some(3), Some(2), 1.0)).is_err());
        assert!(Curve::from_args("third", args(None, None, -1.0)).is_err());
        assert!(Curve::from_args("asym", args(None, None, 1.0)).is_err());
        assert!(Curve::from_args("bogus", args(None, None, 1.0)).is_err());
    }

    #[test]
    fn one_sided_laws_vanish_left_of_origin() {
        let f = Curve::from_args("folded", args(Some(3), Some(1), 1.0)).unwrap();
        assert_eq!(f.eval(-1.0).unwrap(), 0.0);
        let s = Curve::from_args("stable13", args(None, None, 1.0)).unwrap();
        assert_eq!(s.eval(-1.0).unwrap(), 0.0);
    }
}
