//! Monte-Carlo checks of the samplers.

use alloc::format;
use alloc::vec::Vec;
use num_traits::Float;

use super::CheckReport;
use crate::distributions::ComponentSpec;
use crate::error::{Error, Result};
use crate::numerics::{ks_critical_1pct, ks_two_sample, ks_two_sample_critical_1pct};
use crate::sampling::{SampleBatch, Sampler};

/// Seed used by the default suite.
pub const SUITE_SEED: u64 = 20_261_019;
/// Draws per Monte-Carlo check in the default suite.
pub const SUITE_DRAWS: usize = 100_000;

/// One-sample KS statistic against the sampler's target law, passing below
/// the 1% critical value.
pub fn verify_sampler_ks(sampler: &Sampler, draws: usize, seed: u64) -> Result<CheckReport> {
    let law = sampler.target_law().ok_or(Error::Domain("sampler has no closed-form target law"))?;
    let batch = SampleBatch::generate(sampler, draws, seed)?;
    let d = batch.ks_statistic(|x| law.cdf(x).unwrap_or(f64::NAN));
    Ok(CheckReport::absolute(
        format!("ks {} ({} draws)", sampler.descriptor(), draws),
        d,
        0.0,
        ks_critical_1pct(draws),
        format!("seed {seed}, 1% critical value {:.5}", ks_critical_1pct(draws)),
    ))
}

/// Fraction of positive draws against `expected`, within a 3σ binomial band.
pub fn verify_positive_fraction(sampler: &Sampler, expected: f64, draws: usize, seed: u64) -> Result<CheckReport> {
    let batch = SampleBatch::generate(sampler, draws, seed)?;
    let sigma = (expected * (1.0 - expected) / draws as f64).sqrt();
    Ok(CheckReport::absolute(
        format!("positive fraction {} ({} draws)", sampler.descriptor(), draws),
        batch.positive_fraction(),
        expected,
        3.0 * sigma,
        format!("seed {seed}, binomial sigma {sigma:.2e}"),
    ))
}

/// Two-sample KS between the half-difference of two folded draws and exact
/// draws from the component density `h_k`.
pub fn verify_symmetrization(c: &ComponentSpec, draws: usize, seed: u64) -> Result<CheckReport> {
    let sym = SampleBatch::generate(&Sampler::Symmetrized(*c), draws, seed)?;
    let exact = SampleBatch::generate(&Sampler::ComponentExact(*c), draws, seed ^ 0x5eed)?;
    let d = ks_two_sample(sym.values(), exact.values());
    let crit = ks_two_sample_critical_1pct(draws, draws);
    Ok(CheckReport::absolute(
        format!("symmetrized vs exact component n={} k={} ({} draws each)", c.n(), c.k(), draws),
        d,
        0.0,
        crit,
        format!("seed {seed}, two-sample 1% critical value {crit:.5}"),
    ))
}

/// `S(2)` and `8 S(1)` have the same law for the index-1/3 subordinator.
pub fn verify_stable_scaling(draws: usize, seed: u64) -> Result<CheckReport> {
    let a = SampleBatch::generate(&Sampler::Stable13 { t: 2.0 }, draws, seed)?;
    let b: Vec<f64> = SampleBatch::generate(&Sampler::Stable13 { t: 1.0 }, draws, seed ^ 0x5eed)?
        .into_values()
        .into_iter()
        .map(|s| 8.0 * s)
        .collect();
    let d = ks_two_sample(a.values(), &b);
    let crit = ks_two_sample_critical_1pct(draws, draws);
    Ok(CheckReport::absolute(
        format!("stable13 self-similarity S(2) vs 8 S(1) ({draws} draws each)"),
        d,
        0.0,
        crit,
        format!("seed {seed}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{AsymCauchyParams, HyperCauchyParams};

    #[test]
    fn ks_small_batches() {
        let s = Sampler::HyperCauchy(HyperCauchyParams::new(2, 1.0).unwrap());
        assert!(verify_sampler_ks(&s, 20_000, SUITE_SEED).unwrap().passed());
        let s = Sampler::Asym(AsymCauchyParams::composition(1, 1.0).unwrap());
        assert!(verify_positive_fraction(&s, 1.0 / 3.0, 20_000, SUITE_SEED).unwrap().passed());
        assert!(verify_stable_scaling(20_000, SUITE_SEED).unwrap().passed());
        assert!(verify_sampler_ks(&Sampler::Symmetrized(ComponentSpec::new(2, 1, 1.0).unwrap()), 10, 1).is_err());
    }

    #[test]
    fn symmetrization_is_detectably_different() {
        let c = ComponentSpec::new(2, 1, 1.0).unwrap();
        let r = verify_symmetrization(&c, 20_000, SUITE_SEED).unwrap();
        assert!(!r.passed(), "D = {}", r.measured());
    }
}
