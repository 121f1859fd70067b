//! Parallel-map capability injected by the caller.
//!
//! The library never spawns threads of its own. Heavy loops are expressed as
//! an index-space map whose results are collected in index order, so any
//! implementation (sequential or a work-stealing pool) produces identical
//! output for the same seed.

use alloc::vec::Vec;

/// Maps `f` over `0..len`, returning results in index order.
pub trait Executor: Sync {
    fn par_map<R, F>(&self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync;
}

/// Runs everything on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn par_map<R, F>(&self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync,
    {
        (0..len).map(f).collect()
    }
}
