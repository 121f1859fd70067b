//! Isomorph-free exhaustive generation of r-graphs on a fixed labeled vertex
//! set, by orderly augmentation: edges are added in increasing lexicographic
//! rank, and a graph is kept only when its edge-rank word is the greatest
//! over all vertex relabelings. Removing the highest-rank edge of such a
//! word leaves another such word, so every isomorphism class is visited
//! exactly once, and pruning non-free graphs prunes whole subtrees soundly
//! (freeness is inherited downward).

use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::{Edge, ForbiddenFamily, GraphError, Hypergraph, Vertex};
use crate::iso;

/// Edge-rank budget accepted without `force`.
pub const DEFAULT_EDGE_SPACE: usize = 35;
/// Hard cap: edge-set words are stored in a u64.
pub const MAX_EDGE_SPACE: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    TooLarge { n: usize, r: usize, edge_space: usize, limit: usize, forceable: bool },
    Graph(GraphError),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::TooLarge { n, r, edge_space, limit, forceable } => {
                write!(
                    f,
                    "enumeration space for n={n}, r={r} has {edge_space} candidate edges \
                     (limit {limit}{})",
                    if *forceable { ", pass force to override" } else { "" }
                )
            }
            SearchError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SearchError {}

impl From<GraphError> for SearchError {
    fn from(e: GraphError) -> Self {
        SearchError::Graph(e)
    }
}

/// All r-subsets of [n] in lexicographic order.
pub fn all_edges(n: usize, r: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    if n < r || r == 0 {
        return out;
    }
    let mut cur: Vec<Vertex> = (1..=r as Vertex).collect();
    loop {
        out.push(cur.clone());
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < (n - (r - 1 - i)) as Vertex {
                cur[i] += 1;
                for j in i + 1..r {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Permutations of [n] in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur: Vec<Vertex> = (1..=n as Vertex).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let mut i = n.wrapping_sub(1);
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

struct Enumerator {
    n: usize,
    r: usize,
    universe: Vec<Edge>,
    /// For each non-identity permutation, the induced map on edge ranks.
    actions: Vec<Vec<u32>>,
}

impl Enumerator {
    fn new(n: usize, r: usize) -> Self {
        let universe = all_edges(n, r);
        let mut rank = alloc::collections::BTreeMap::new();
        for (i, e) in universe.iter().enumerate() {
            rank.insert(e.clone(), i as u32);
        }
        let mut actions = Vec::new();
        for perm in permutations(n) {
            if perm.iter().enumerate().all(|(i, &v)| v as usize == i + 1) {
                continue;
            }
            let map: Vec<u32> = universe
                .iter()
                .map(|e| {
                    let mut img: Edge = e.iter().map(|&v| perm[v as usize - 1]).collect();
                    img.sort_unstable();
                    rank[&img]
                })
                .collect();
            actions.push(map);
        }
        Enumerator { n, r, universe, actions }
    }

    /// Word order: the lowest differing rank decides, a set bit winning.
    /// Returns true when some relabeling strictly beats `mask`.
    fn beaten(&self, mask: u64) -> bool {
        for action in &self.actions {
            let mut mapped = 0u64;
            let mut m = mask;
            while m != 0 {
                let e = m.trailing_zeros() as usize;
                m &= m - 1;
                mapped |= 1u64 << action[e];
            }
            let diff = mapped ^ mask;
            if diff != 0 && mapped & (diff & diff.wrapping_neg()) != 0 {
                return true;
            }
        }
        false
    }

    fn graph_of(&self, mask: u64) -> Hypergraph {
        let mut edges = Vec::new();
        let mut m = mask;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            edges.push(self.universe[e].clone());
        }
        Hypergraph::new(self.r, self.n, edges).expect("universe edges are valid")
    }

    fn descend(
        &self,
        mask: u64,
        last: Option<usize>,
        family: Option<&ForbiddenFamily>,
        visit: &mut dyn FnMut(&Hypergraph, u64),
    ) {
        visit(&self.graph_of(mask), mask);
        let from = last.map_or(0, |l| l + 1);
        for e in from..self.universe.len() {
            let child = mask | (1u64 << e);
            if self.beaten(child) {
                continue;
            }
            if let Some(fam) = family {
                let g = self.graph_of(child);
                if !iso::is_free(&g, fam).unwrap_or(false) {
                    continue;
                }
            }
            self.descend(child, Some(e), family, visit);
        }
    }
}

fn guard(n: usize, r: usize, force: bool) -> Result<usize, SearchError> {
    let space = all_edges(n, r).len();
    let limit = if force { MAX_EDGE_SPACE } else { DEFAULT_EDGE_SPACE };
    if space > limit {
        return Err(SearchError::TooLarge {
            n,
            r,
            edge_space: space,
            limit,
            forceable: !force && space <= MAX_EDGE_SPACE,
        });
    }
    Ok(space)
}

/// Visits one representative per isomorphism class of (optionally F-free)
/// r-graphs on `[n]`, in augmentation order. Every visited graph is emitted
/// in its public canonical form.
pub fn enumerate_with(
    n: usize,
    r: usize,
    family: Option<&ForbiddenFamily>,
    force: bool,
    visit: &mut dyn FnMut(Hypergraph),
) -> Result<(), SearchError> {
    if let Some(fam) = family {
        if fam.uniformity() != r {
            return Err(GraphError::UniformityMismatch { left: r, right: fam.uniformity() }.into());
        }
    }
    guard(n, r, force)?;
    let enumerator = Enumerator::new(n, r);
    if let Some(fam) = family {
        // The empty root is always free, so pruning is sound from the start.
        debug_assert!(iso::is_free(&Hypergraph::empty(r, n), fam).unwrap_or(true));
    }
    enumerator.descend(0, None, family, &mut |g, _| visit(iso::canonical_form(g)));
    Ok(())
}

/// One canonical representative per isomorphism class on `[n]`.
pub fn enumerate(n: usize, r: usize, force: bool) -> Result<Vec<Hypergraph>, SearchError> {
    let mut out = Vec::new();
    enumerate_with(n, r, None, force, &mut |g| out.push(g))?;
    Ok(out)
}

/// F-free canonical graphs on `[n]` to which no edge can be added without
/// completing a family member.
pub fn maximal_free(
    n: usize,
    r: usize,
    family: &ForbiddenFamily,
    force: bool,
) -> Result<Vec<Hypergraph>, SearchError> {
    let mut free: Vec<Hypergraph> = Vec::new();
    enumerate_with(n, r, Some(family), force, &mut |g| free.push(g))?;
    let universe = all_edges(n, r);
    let mut out = Vec::new();
    for g in free {
        let maximal = universe.iter().all(|e| {
            if g.has_edge(e) {
                return true;
            }
            let extended = g.with_edge(e).expect("new edge is valid and absent");
            !iso::is_free(&extended, family).unwrap_or(true)
        });
        if maximal {
            out.push(g);
        }
    }
    Ok(out)
}

/// Count of isomorphism classes by brute force over all edge subsets; a test
/// oracle for the orderly enumeration, usable while the edge space is small.
pub fn class_count_brute_force(n: usize, r: usize) -> Result<u64, SearchError> {
    let space = all_edges(n, r).len();
    if space > 24 {
        return Err(SearchError::TooLarge {
            n,
            r,
            edge_space: space,
            limit: 24,
            forceable: false,
        });
    }
    let enumerator = Enumerator::new(n, r);
    let mut seen = alloc::collections::BTreeSet::new();
    for mask in 0..(1u64 << space) {
        // canonical representative: the greatest word over the group
        let mut best = mask;
        for action in &enumerator.actions {
            let mut mapped = 0u64;
            let mut m = mask;
            while m != 0 {
                let e = m.trailing_zeros() as usize;
                m &= m - 1;
                mapped |= 1u64 << action[e];
            }
            let diff = mapped ^ best;
            if diff != 0 && mapped & (diff & diff.wrapping_neg()) != 0 {
                best = mapped;
            }
        }
        seen.insert(best);
    }
    Ok(seen.len() as u64)
}

/// Upper bound on the number of nodes the augmentation visits (decoration
/// for reports): the count of free canonical graphs.
pub fn count_free(
    n: usize,
    r: usize,
    family: Option<&ForbiddenFamily>,
    force: bool,
) -> Result<u64, SearchError> {
    let mut count = 0u64;
    enumerate_with(n, r, family, force, &mut |_| count += 1)?;
    Ok(count)
}

