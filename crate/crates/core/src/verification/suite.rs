//! Named groups of checks.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::*;
use crate::distributions::{AsymCauchyParams, ComponentSpec, HyperCauchyParams, Law};
use crate::error::{Error, Result};
use crate::numerics::GridSpec;
use crate::sampling::Sampler;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Normalization,
    Identities,
    Pde,
    Airy,
    Initial,
    Cf,
    Modes,
    Sampling,
}

impl Suite {
    pub const NAMED: [Suite; 8] = [
        Suite::Normalization,
        Suite::Identities,
        Suite::Pde,
        Suite::Airy,
        Suite::Initial,
        Suite::Cf,
        Suite::Modes,
        Suite::Sampling,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Normalization => "normalization",
            Suite::Identities => "identities",
            Suite::Pde => "pde",
            Suite::Airy => "airy",
            Suite::Initial => "initial",
            Suite::Cf => "cf",
            Suite::Modes => "modes",
            Suite::Sampling => "sampling",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(Suite::All);
        }
        Suite::NAMED
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or(Error::Domain("unknown suite"))
    }
}

/// A deferred check; running it yields one or more reports.
pub struct Check {
    name: alloc::string::String,
    run: Box<dyn Fn() -> Vec<CheckReport> + Send + Sync>,
}

impl Check {
    fn single<F>(name: impl Into<alloc::string::String>, f: F) -> Self
    where
        F: Fn() -> Result<CheckReport> + Send + Sync + 'static,
    {
        let name = name.into();
        let label = name.clone();
        Check { name, run: Box::new(move || vec![f().unwrap_or_else(|e| CheckReport::errored(label.clone(), &e))]) }
    }

    fn many<F>(name: impl Into<alloc::string::String>, f: F) -> Self
    where
        F: Fn() -> Result<Vec<CheckReport>> + Send + Sync + 'static,
    {
        let name = name.into();
        let label = name.clone();
        Check { name, run: Box::new(move || f().unwrap_or_else(|e| vec![CheckReport::errored(label.clone(), &e)])) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn run(&self) -> Vec<CheckReport> {
        (self.run)()
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("name", &self.name).finish_non_exhaustive()
    }
}

fn normalization_checks() -> Vec<Check> {
    let mut laws = Vec::new();
    for n in 2..=6 {
        for t in [0.5, 1.0, 2.0] {
            laws.push(HyperCauchyParams::new(n, t).map(Law::HyperCauchy));
        }
    }
    for t in [0.5, 1.0, 2.0] {
        laws.push(Ok(Law::Cauchy { t }));
        laws.push(Ok(Law::ThirdOrder { t }));
        laws.push(Ok(Law::SixthOrder { t }));
    }
    for k in 1..=3 {
        laws.push(AsymCauchyParams::composition(k, 1.0).map(Law::Asym));
    }
    laws.push(AsymCauchyParams::generic(4, 1.0).map(Law::Asym));
    laws.push(ComponentSpec::new(3, 3, 1.0).map(Law::Component));
    laws.push(ComponentSpec::new(3, 1, 1.0).map(Law::Folded));
    laws.push(Ok(Law::Stable13 { t: 1.0 }));
    laws.into_iter()
        .enumerate()
        .map(|(i, law)| Check::single(format!("normalization #{i}"), move || law.clone().map(|l| verify_normalization(&l))))
        .collect()
}

fn identity_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 2..=6u32 {
        checks.push(Check::many(format!("product identity n={n}"), move || {
            sample_points(100, 0.1, 5.0, 0xC0FFEE + u64::from(n))
                .into_iter()
                .map(|(x, t)| verify_product_identity(n, x, t))
                .collect()
        }));
        checks.push(Check::single(format!("product cascade n={n}"), move || verify_product_cascade(n, 1.3, 0.7)));
    }
    for n in 1..=5u32 {
        for k in (1..(1u64 << (n - 1))).step_by(2) {
            for t in [1.0, 2.0] {
                checks.push(Check::single(format!("component integral n={n} k={k} t={t}"), move || {
                    verify_component_integral(n, k, t)
                }));
            }
        }
    }
    for n in 2..=6u32 {
        checks.push(Check::single(format!("representations n={n}"), move || {
            verify_representations(n, 1.0, &GridSpec::new(-5.0, 5.0, 101)?)
        }));
    }
    for n in [2, 3] {
        checks.push(Check::single(format!("printed form n={n}"), move || {
            verify_printed_form(n, 1.0, &GridSpec::new(-5.0, 5.0, 101)?)
        }));
    }
    checks.push(Check::single("sixth-order form", || verify_sixth_order_form(1.0, &GridSpec::new(-5.0, 5.0, 101)?)));
    for k in 1..=6 {
        checks.push(Check::single(format!("half-line mass k={k}"), move || verify_halfline_mass(k, 1.0)));
    }
    checks
}

/// Largest step at which the second-order stencils bring every residual below `1e-2`.
const FD_STEP: f64 = 0.0125;

fn pde_checks() -> Vec<Check> {
    let mut orders = Vec::new();
    orders.extend((1..=6).map(|n| PdeOrder::Dyadic { n }));
    orders.extend((1..=5).map(|k| PdeOrder::Odd { k }));
    orders.push(PdeOrder::Sixth);
    orders.extend((1..=4).map(|n| PdeOrder::Even { n }));
    orders.extend([2, 3, 5].map(|m| PdeOrder::Mixed { m }));
    let mut checks: Vec<Check> = orders
        .into_iter()
        .map(|o| Check::single(format!("{o:?}"), move || verify_pde_fourier(o)))
        .collect();
    let fd = [
        (FdLaw::P4, 0.5, 1.0),
        (FdLaw::ThirdOrder, 0.3, 1.0),
        (FdLaw::Mixed { m: 3 }, 0.2, 1.0),
        (FdLaw::CauchyEven { n: 2 }, 0.4, 1.0),
    ];
    for (law, x, t) in fd {
        checks.push(Check::many(format!("fd {law:?}"), move || verify_pde_fd(law, x, t, FD_STEP)));
    }
    checks
}

fn airy_checks() -> Vec<Check> {
    let mut checks = vec![Check::single("airy integral", || Ok(verify_airy_integral()))];
    for i in 0..20 {
        let x = -4.75 + 0.5 * i as f64;
        checks.push(Check::single(format!("airy composition x={x}"), move || verify_airy_composition(x, 1.0)));
    }
    checks.push(Check::single("airy composition t=2", || verify_airy_composition(0.7, 2.0)));
    checks.push(Check::single("bessel product 1,2", || verify_bessel_product_integral(1.0, 2.0)));
    checks.push(Check::single("bessel product 0.5,3", || verify_bessel_product_integral(0.5, 3.0)));
    checks.push(Check::single("bessel product equal", || verify_bessel_product_integral(1.5, 1.5)));
    checks.push(Check::single("bessel chain", || verify_bessel_chain(2.0, 1.0)));
    checks.push(Check::single("kernel mass", || verify_kernel_mass(1.0)));
    checks.push(Check::single("subordinator mass", || verify_subordinator_mass(1.0)));
    checks.push(Check::single("stable series", || verify_stable_series(1.0)));
    checks
}

fn initial_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 0..=3 {
        for x in [-2.0, 1.0, 3.0] {
            checks.push(Check::single(format!("initial k={k} x={x}"), move || verify_initial_conditions(k, x)));
        }
    }
    checks
}

fn cf_checks() -> Vec<Check> {
    let laws = [
        Ok(Law::ThirdOrder { t: 1.0 }),
        HyperCauchyParams::new(2, 1.0).map(Law::HyperCauchy),
        HyperCauchyParams::new(3, 1.0).map(Law::HyperCauchy),
        Ok(Law::SixthOrder { t: 1.0 }),
        AsymCauchyParams::composition(2, 1.0).map(Law::Asym),
        ComponentSpec::new(3, 3, 1.0).map(Law::Component),
        Ok(Law::Cauchy { t: 1.5 }),
    ];
    laws.into_iter()
        .enumerate()
        .map(|(i, law)| {
            Check::single(format!("cf #{i}"), move || {
                let betas: Vec<f64> = (0..=40).map(|j| -5.0 + 0.25 * j as f64).collect();
                verify_cf_match(&law.clone()?, &betas)
            })
        })
        .collect()
}

fn mode_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for t in [0.5, 1.0, 2.0] {
        checks.push(Check::single(format!("p4 modes t={t}"), move || verify_p4_modes(t)));
    }
    for n in 2..=5u32 {
        for k in (1..(1u64 << (n - 1))).step_by(2) {
            checks.push(Check::single(format!("component modes n={n} k={k}"), move || {
                verify_component_modes(n, k, 1.0)
            }));
        }
    }
    checks.push(Check::single("p6 unimodal", || verify_p6_unimodal(1.0)));
    checks
}

fn sampling_checks() -> Vec<Check> {
    let (draws, seed) = (SUITE_DRAWS, SUITE_SEED);
    let samplers = [
        HyperCauchyParams::new(2, 1.0).map(Sampler::HyperCauchy),
        HyperCauchyParams::new(4, 1.0).map(Sampler::HyperCauchy),
        AsymCauchyParams::composition(1, 1.0).map(Sampler::Asym),
        AsymCauchyParams::composition(2, 1.0).map(Sampler::Asym),
        Ok(Sampler::ThirdOrder { t: 1.0 }),
        Ok(Sampler::SixthOrder { t: 1.0 }),
        Ok(Sampler::Stable13 { t: 1.0 }),
        ComponentSpec::new(3, 1, 1.0).map(Sampler::ComponentExact),
        ComponentSpec::new(3, 1, 1.0).map(Sampler::Folded),
    ];
    let mut checks: Vec<Check> = samplers
        .into_iter()
        .enumerate()
        .map(|(i, s)| Check::single(format!("ks #{i}"), move || verify_sampler_ks(&s.clone()?, draws, seed)))
        .collect();
    for k in 1..=6 {
        checks.push(Check::single(format!("positive fraction k={k}"), move || {
            let p = AsymCauchyParams::composition(k, 1.0)?;
            verify_positive_fraction(&Sampler::Asym(p), p.half_line_mass(), draws, seed)
        }));
    }
    checks.push(Check::single("stable scaling", move || verify_stable_scaling(draws, seed)));
    checks.push(Check::single("symmetrization", move || {
        verify_symmetrization(&ComponentSpec::new(3, 1, 1.0)?, draws, seed)
    }));
    checks
}

/// The checks making up `suite`, in a fixed order.
pub fn suite_checks(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::All => Suite::NAMED.into_iter().flat_map(suite_checks).collect(),
        Suite::Normalization => normalization_checks(),
        Suite::Identities => identity_checks(),
        Suite::Pde => pde_checks(),
        Suite::Airy => airy_checks(),
        Suite::Initial => initial_checks(),
        Suite::Cf => cf_checks(),
        Suite::Modes => mode_checks(),
        Suite::Sampling => sampling_checks(),
    }
}

/// Runs every check of `suite` sequentially.
pub fn run_suite(suite: Suite) -> Vec<CheckReport> {
    suite_checks(suite).iter().flat_map(Check::run).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::NAMED.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn fast_suites_pass() {
        for suite in [Suite::Pde, Suite::Initial, Suite::Modes] {
            for r in run_suite(suite) {
                assert!(r.passed(), "{}: {} vs {} ({})", r.check_name(), r.measured(), r.expected(), r.detail());
            }
        }
    }
}
