//! Seeded, splittable randomness. Every random draw in the crate flows from
//! a single `u64` seed through `derive_rng(seed, stream, index)`, so results
//! do not depend on scheduling or worker count.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// A ChaCha stream keyed by `(seed, stream, index)`.
pub fn derive_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    let mut state = splitmix64(seed ^ splitmix64(stream ^ splitmix64(index)));
    for chunk in key.chunks_mut(8) {
        state = splitmix64(state);
        chunk.copy_from_slice(&state.to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// Uniform in [0, 1), 53-bit resolution.
pub fn uniform01(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform integer in `0..bound` by rejection.
pub fn below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % bound;
        }
    }
}

/// Standard exponential via inverse transform.
pub fn exponential(rng: &mut ChaCha8Rng) -> f64 {
    let u = uniform01(rng);
    -libm_ln(1.0 - u)
}

fn libm_ln(x: f64) -> f64 {
    num_traits::Float::ln(x)
}

/// A uniform (flat Dirichlet) point of the standard simplex of dimension `n`.
pub fn dirichlet_point(rng: &mut ChaCha8Rng, n: usize) -> alloc::vec::Vec<f64> {
    let mut w: alloc::vec::Vec<f64> = (0..n).map(|_| exponential(rng)).collect();
    let sum: f64 = w.iter().sum();
    if sum <= 0.0 {
        return alloc::vec![1.0 / n as f64; n];
    }
    for x in &mut w {
        *x /= sum;
    }
    w
}

/// A random permutation of `1..=n` (Fisher-Yates).
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> alloc::vec::Vec<u16> {
    let mut perm: alloc::vec::Vec<u16> = (1..=n as u16).collect();
    for i in (1..n).rev() {
        let j = below(rng, (i + 1) as u64) as usize;
        perm.swap(i, j);
    }
    perm
}

/// An r-graph on `[n]` including each possible edge independently with
/// probability `p`.
pub fn random_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    r: usize,
    p: f64,
) -> crate::hypergraph::Hypergraph {
    let mut edges = alloc::vec::Vec::new();
    for e in crate::enumerate::all_edges(n, r) {
        if uniform01(rng) < p {
            edges.push(e);
        }
    }
    crate::hypergraph::Hypergraph::new(r, n, edges).expect("universe edges are valid")
}
