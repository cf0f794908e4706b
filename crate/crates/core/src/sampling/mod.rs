//! Seeded generators for every probability law in [`crate::distributions`].

mod batch;
mod generators;
mod rng;

pub use batch::{chunk_count, chunk_len, sample_chunk, SampleBatch, Sampler, CHUNK_SIZE};
pub use generators::{
    sample_asym_cauchy, sample_cauchy, sample_component_exact, sample_folded, sample_hyper_cauchy,
    sample_random_sign_fold, sample_sixth_order, sample_stable13, sample_symmetrized,
    sample_third_order,
};
pub use rng::{RngState, RNG_ALGORITHM};
