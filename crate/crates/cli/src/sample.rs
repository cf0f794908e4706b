//! Sampler selection and batch serialization.

use std::io::Write;

use anyhow::{bail, Result};
use hypercauchy_core::distributions::{AsymCauchyParams, ComponentSpec, HyperCauchyParams};
use hypercauchy_core::sampling::{chunk_count, chunk_len, sample_chunk, RngState, SampleBatch, Sampler};
use rayon::prelude::*;

use crate::curve::CurveArgs;
use crate::format::fmt_g;
use crate::output::Format;

pub const SAMPLER_NAMES: [&str; 10] =
    ["cauchy", "hyper", "component", "folded", "symmetrized", "signed_fold", "asym", "third", "p6", "stable13"];

pub fn sampler_from_args(law: &str, a: CurveArgs) -> Result<Sampler> {
    let n = || a.n.ok_or_else(|| anyhow::anyhow!("law {law} needs --n"));
    let k = || a.k.ok_or_else(|| anyhow::anyhow!("law {law} needs --k"));
    let component = || -> Result<ComponentSpec> { Ok(ComponentSpec::new(n()?, k()?, a.t)?) };
    let sampler = match law {
        "cauchy" => Sampler::Cauchy { location: 0.0, scale: a.t },
        "hyper" => Sampler::HyperCauchy(HyperCauchyParams::new(n()?, a.t)?),
        "component" => Sampler::ComponentExact(component()?),
        "folded" => Sampler::Folded(component()?),
        "symmetrized" => Sampler::Symmetrized(component()?),
        "signed_fold" => Sampler::RandomSignFold(component()?),
        "asym" => Sampler::Asym(match (a.k, a.m) {
            (Some(k), None) => AsymCauchyParams::composition(u32::try_from(k)?, a.t)?,
            (None, Some(m)) => AsymCauchyParams::generic(m, a.t)?,
            _ => bail!("law asym needs exactly one of --k or --m"),
        }),
        "third" => Sampler::ThirdOrder { t: a.t },
        "p6" => Sampler::SixthOrder { t: a.t },
        "stable13" => Sampler::Stable13 { t: a.t },
        other => bail!("unknown law {other:?}; expected one of {}", SAMPLER_NAMES.join(", ")),
    };
    sampler.validate()?;
    Ok(sampler)
}

/// Same draws as [`SampleBatch::generate`], with chunks spread over the
/// current rayon pool.
pub fn generate_parallel(sampler: &Sampler, size: usize, seed: u64) -> Result<SampleBatch> {
    if size == 0 {
        bail!("sample size must be positive");
    }
    let chunks: Vec<Vec<f64>> = RngState::streams(seed, chunk_count(size))
        .into_par_iter()
        .enumerate()
        .map(|(i, rng)| sample_chunk(sampler, rng, chunk_len(size, i)))
        .collect();
    Ok(SampleBatch::from_values(chunks.concat(), seed, sampler.descriptor())?)
}

pub fn write_batch<W: Write>(batch: &SampleBatch, format: Format, mut out: W) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "value")?;
            for v in batch.values() {
                writeln!(out, "{}", fmt_g(*v))?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut out, batch)?;
            writeln!(out)?;
        }
    }
    out.flush()
}
