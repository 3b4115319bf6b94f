//! Seeded inputs shared by the benchmarks.

use ejalab::{Element, JordanAlgebra, ScalarKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Two random elements of `H_3(K)`.
pub fn hermitian_pair(scalar: ScalarKind, seed: u64) -> (Element, Element) {
    let algebra = JordanAlgebra::hermitian_model(3, scalar).expect("k = 3 is valid for every scalar");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (algebra.random_element(&mut rng), algebra.random_element(&mut rng))
}
