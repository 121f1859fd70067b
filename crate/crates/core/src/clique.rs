//! Exact maximum clique for 2-graphs, and the clique-number formula for
//! their Lagrangians: a graph with clique number `t` has Lagrangian
//! `(1 - 1/t) / 2`, attained by uniform weights on a maximum clique.

use alloc::vec::Vec;

use crate::hypergraph::{GraphError, Hypergraph, Vertex};
use crate::rational::Rational;

/// Largest clique of a 2-graph, as (size, vertices). Branch and bound with a
/// greedy coloring bound; vertices are handled in ascending order so the
/// reported clique is deterministic. The empty graph on n >= 1 vertices has
/// clique number 1.
pub fn maximum_clique(g: &Hypergraph) -> Result<(usize, Vec<Vertex>), GraphError> {
    if g.uniformity() != 2 {
        return Err(GraphError::UniformityMismatch { left: g.uniformity(), right: 2 });
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    if n > 64 {
        return Err(GraphError::VertexOutOfRange { v: 65, n: 64 });
    }
    let mut adj = alloc::vec![0u64; n];
    for e in g.edges() {
        let (a, b) = (e[0] as usize - 1, e[1] as usize - 1);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: u64 = 1; // any single vertex
    let mut best_size = 1usize;
    extend(&adj, all, 0, 0, &mut best, &mut best_size);
    let mut verts: Vec<Vertex> = Vec::new();
    let mut m = best;
    while m != 0 {
        let v = m.trailing_zeros() as u16;
        verts.push(v + 1);
        m &= m - 1;
    }
    Ok((best_size, verts))
}

fn color_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut classes: Vec<u64> = Vec::new();
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let bit = 1u64 << v;
        match classes.iter_mut().find(|c| **c & adj[v] == 0) {
            Some(c) => *c |= bit,
            None => classes.push(bit),
        }
    }
    classes.len()
}

fn extend(adj: &[u64], cand: u64, current: u64, size: usize, best: &mut u64, best_size: &mut usize) {
    if cand == 0 {
        if size > *best_size {
            *best_size = size;
            *best = current;
        }
        return;
    }
    if size + color_bound(adj, cand) <= *best_size {
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        if size + (rest.count_ones() as usize) <= *best_size {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        extend(adj, rest & adj[v], current | (1 << v), size + 1, best, best_size);
    }
}

/// Exact Lagrangian of a 2-graph: `(1 - 1/t)/2` with `t` the clique number.
pub fn two_graph_lambda(g: &Hypergraph) -> Result<Rational, GraphError> {
    if g.vertex_count() == 0 {
        if g.uniformity() != 2 {
            return Err(GraphError::UniformityMismatch { left: g.uniformity(), right: 2 });
        }
        return Ok(Rational::zero());
    }
    let (t, _) = maximum_clique(g)?;
    Ok(Rational::from_ratio((t - 1) as u64, 2 * t as u64))
}
