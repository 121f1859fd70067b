//! Lagrangians of r-uniform hypergraphs: the maximum of the edge-monomial
//! polynomial over the standard simplex, together with the combinatorics
//! built around it — links, containment, canonical forms, parameterized
//! constructions, isomorph-free exhaustive search, and a ledger of
//! closed-form verification checks.
//!
//! The crate is `no_std`-compatible (`alloc` required); disable the default
//! `std` feature for embedded or wasm use. IO, file formats, and the CLI
//! live in the companion `hylag` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod clique;
pub mod constructions;
pub mod enumerate;
pub mod exec;
pub mod hypergraph;
pub mod iso;
pub mod rational;
pub mod rng;
pub mod search;
pub mod solver;
pub mod tol;
pub mod verify;

pub use exec::{Executor, Sequential};
pub use hypergraph::{Edge, ForbiddenFamily, GraphError, Hypergraph, Vertex};
pub use iso::{automorphism_orbits, canonical_form, contains, is_free, Embedding};
pub use rational::Rational;
pub use solver::{
    evaluate, exact_eval, gradient, lagrangian, local_ascend, symmetrize, Certificate, Method,
    SolveOptions, WeightVector,
};
