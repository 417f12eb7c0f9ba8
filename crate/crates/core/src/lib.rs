//! Exact computation of plane-curve singularity invariants and polynomial
//! foliation invariants of the projective plane, plus mechanical checks of the
//! degree bounds relating them.

pub mod algebra;
pub mod bounds;
pub mod cli;
pub mod corpus;
pub mod curves;
pub mod foliations;
pub mod error;
pub mod groebner;
pub mod input;

pub use error::{Error, Result};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every randomized choice draws from a ChaCha stream fixed by the user seed
/// and a per-purpose stream number, so runs are reproducible.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
