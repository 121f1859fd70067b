//! Subgraph containment, canonical labeling, and automorphism orbits.
//!
//! Containment is non-induced: an injective vertex map under which every
//! pattern edge lands on a host edge. Canonical labeling runs color
//! refinement and then branches on the smallest non-singleton cell, keeping
//! the lexicographically least relabeled edge list; automorphisms discovered
//! at equal leaves prune sibling branches.

use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::{Edge, ForbiddenFamily, GraphError, Hypergraph, Vertex};

/// Witness for containment: `map[k]` is the host image of pattern vertex `k+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<Vertex>,
}

impl Embedding {
    pub fn map(&self) -> &[Vertex] {
        &self.map
    }

    pub fn image_of(&self, pattern_vertex: Vertex) -> Vertex {
        self.map[pattern_vertex as usize - 1]
    }

    /// Checks the witness against a concrete host/pattern pair.
    pub fn is_valid(&self, host: &Hypergraph, pattern: &Hypergraph) -> bool {
        if self.map.len() != pattern.vertex_count() {
            return false;
        }
        let mut seen = vec![false; host.vertex_count() + 1];
        for &v in &self.map {
            if v == 0 || v as usize > host.vertex_count() || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        pattern.edges().iter().all(|e| {
            let img: Vec<Vertex> = e.iter().map(|&v| self.image_of(v)).collect();
            host.has_edge(&img)
        })
    }
}

/// Searches for the lexicographically least embedding of `pattern` in `host`.
pub fn contains(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Embedding>, GraphError> {
    if host.uniformity() != pattern.uniformity() {
        return Err(GraphError::UniformityMismatch {
            left: host.uniformity(),
            right: pattern.uniformity(),
        });
    }
    let pn = pattern.vertex_count();
    let hn = host.vertex_count();
    if pn > hn || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    // Sorted-degree dominance is necessary: the k-th largest pattern degree
    // cannot exceed the k-th largest host degree.
    let mut pdeg = pattern.degrees();
    let mut hdeg = host.degrees();
    pdeg.sort_unstable_by(|a, b| b.cmp(a));
    hdeg.sort_unstable_by(|a, b| b.cmp(a));
    if pdeg.iter().zip(&hdeg).any(|(p, h)| p > h) {
        return Ok(None);
    }

    let pattern_deg = pattern.degrees();
    let host_deg = host.degrees();
    // Pattern edges whose last (largest) vertex is v, checkable as soon as v
    // is assigned.
    let mut closing: Vec<Vec<&Edge>> = vec![Vec::new(); pn + 1];
    for e in pattern.edges() {
        closing[*e.last().expect("edges are non-empty") as usize].push(e);
    }

    let mut map = vec![0 as Vertex; pn];
    let mut used = vec![false; hn + 1];
    if search(host, &closing, &pattern_deg, &host_deg, &mut map, &mut used, 0) {
        Ok(Some(Embedding { map }))
    } else {
        Ok(None)
    }
}

fn search(
    host: &Hypergraph,
    closing: &[Vec<&Edge>],
    pattern_deg: &[usize],
    host_deg: &[usize],
    map: &mut Vec<Vertex>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    if depth == map.len() {
        return true;
    }
    for cand in 1..=host.vertex_count() as Vertex {
        if used[cand as usize] || host_deg[cand as usize - 1] < pattern_deg[depth] {
            continue;
        }
        map[depth] = cand;
        used[cand as usize] = true;
        let ok = closing[depth + 1].iter().all(|e| {
            let img: Vec<Vertex> = e.iter().map(|&v| map[v as usize - 1]).collect();
            host.has_edge(&img)
        });
        if ok && search(host, closing, pattern_deg, host_deg, map, used, depth + 1) {
            return true;
        }
        used[cand as usize] = false;
    }
    map[depth] = 0;
    false
}

/// True when no family member embeds into `host`.
pub fn is_free(host: &Hypergraph, family: &ForbiddenFamily) -> Result<bool, GraphError> {
    for m in family.members() {
        if contains(host, m)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Color refinement
// ---------------------------------------------------------------------------

/// Equitable partition: colors[v-1] is the cell index of v, with cells
/// numbered by their order in the final sort. Isomorphism-invariant.
fn refine(g: &Hypergraph, colors: &mut Vec<u32>) {
    let n = g.vertex_count();
    if n == 0 {
        return;
    }
    loop {
        // Signature of v: its color plus the sorted list of colored edge
        // residues through v.
        let mut sigs: Vec<(u32, Vec<Vec<u32>>)> = (0..n).map(|i| (colors[i], Vec::new())).collect();
        for e in g.edges() {
            for &v in e {
                let mut residue: Vec<u32> =
                    e.iter().filter(|&&u| u != v).map(|&u| colors[u as usize - 1]).collect();
                residue.sort_unstable();
                sigs[v as usize - 1].1.push(residue);
            }
        }
        for s in &mut sigs {
            s.1.sort_unstable();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut next = vec![0u32; n];
        let mut color = 0u32;
        for w in 0..n {
            if w > 0 && sigs[order[w]] != sigs[order[w - 1]] {
                color += 1;
            }
            next[order[w]] = color;
        }
        if next == *colors {
            return;
        }
        *colors = next;
    }
}

fn cells_of(colors: &[u32]) -> Vec<Vec<usize>> {
    let max = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); max];
    for (i, &c) in colors.iter().enumerate() {
        cells[c as usize].push(i);
    }
    cells
}

// ---------------------------------------------------------------------------
// Canonical labeling
// ---------------------------------------------------------------------------

struct CanonSearch<'a> {
    g: &'a Hypergraph,
    /// Best (lexicographically least) relabeled edge list seen so far.
    best: Option<Vec<Edge>>,
    /// Leaf labelings realizing `best`, as old-vertex-index -> new-label maps;
    /// used to derive automorphisms.
    best_leaves: Vec<Vec<Vertex>>,
    /// Discovered automorphisms (old-index -> old-index).
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> CanonSearch<'a> {
    fn run(g: &'a Hypergraph) -> Self {
        let n = g.vertex_count();
        let mut s = CanonSearch { g, best: None, best_leaves: Vec::new(), automorphisms: Vec::new() };
        let mut colors = vec![0u32; n];
        s.descend(&mut colors, &[]);
        s
    }

    fn descend(&mut self, colors: &mut Vec<u32>, individualized: &[usize]) {
        refine(self.g, colors);
        let cells = cells_of(colors);
        let target = cells.iter().find(|c| c.len() > 1);
        match target {
            None => self.leaf(colors),
            Some(cell) => {
                let cell = cell.clone();
                let mut tried: Vec<usize> = Vec::new();
                for &v in &cell {
                    if self.pruned_by_automorphism(v, &tried, individualized) {
                        continue;
                    }
                    tried.push(v);
                    let mut child = colors.clone();
                    // Split v off ahead of its own cell: shift every color at
                    // or above the cell's, then give v the freed slot.
                    let base = child[v];
                    for c in child.iter_mut() {
                        if *c >= base {
                            *c += 1;
                        }
                    }
                    child[v] = base;
                    let mut deeper: Vec<usize> = individualized.to_vec();
                    deeper.push(v);
                    self.descend(&mut child, &deeper);
                }
            }
        }
    }

    /// Skip `v` when a discovered automorphism fixing every previously
    /// individualized vertex maps some already-tried sibling onto it.
    fn pruned_by_automorphism(&self, v: usize, tried: &[usize], individualized: &[usize]) -> bool {
        if tried.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let fixing: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| individualized.iter().all(|&i| a[i] == i))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        // Orbit of the tried set under the subgroup generated by `fixing`.
        let n = self.g.vertex_count();
        let mut in_orbit = vec![false; n];
        let mut stack: Vec<usize> = tried.to_vec();
        for &t in tried {
            in_orbit[t] = true;
        }
        while let Some(u) = stack.pop() {
            for a in &fixing {
                let w = a[u];
                if !in_orbit[w] {
                    in_orbit[w] = true;
                    stack.push(w);
                }
            }
        }
        in_orbit[v]
    }

    fn leaf(&mut self, colors: &[u32]) {
        let n = self.g.vertex_count();
        // Discrete partition: color ranks give the new labels.
        let mut label = vec![0 as Vertex; n];
        for (i, &c) in colors.iter().enumerate() {
            label[i] = c as Vertex + 1;
        }
        let relabeled = self.g.relabel(&label).edges().to_vec();
        match &self.best {
            Some(best) if relabeled > *best => {}
            Some(best) if relabeled == *best => {
                if let Some(auto) = self.automorphism_from(&label) {
                    self.automorphisms.push(auto);
                }
                self.best_leaves.push(label);
            }
            _ => {
                self.best = Some(relabeled);
                self.best_leaves.clear();
                self.best_leaves.push(label);
            }
        }
    }

    /// Composes this leaf with the first best leaf to obtain an automorphism.
    fn automorphism_from(&self, label: &[Vertex]) -> Option<Vec<usize>> {
        let first = self.best_leaves.first()?;
        let n = label.len();
        let mut inv_first = vec![0usize; n + 1];
        for (i, &l) in first.iter().enumerate() {
            inv_first[l as usize] = i;
        }
        // v -> label[v] -> first^{-1}(label[v])
        let auto: Vec<usize> = (0..n).map(|v| inv_first[label[v] as usize]).collect();
        if auto.iter().enumerate().all(|(i, &j)| i == j) {
            None
        } else {
            Some(auto)
        }
    }
}

/// A relabeled isomorphic copy such that isomorphic inputs give identical
/// outputs: the lexicographically least edge list over refinement-compatible
/// labelings.
pub fn canonical_form(g: &Hypergraph) -> Hypergraph {
    if g.vertex_count() == 0 {
        return g.clone();
    }
    let search = CanonSearch::run(g);
    let leaf = search.best_leaves.first().expect("at least one leaf");
    g.relabel(leaf)
}

/// Vertex orbits under the automorphism group, each orbit sorted, orbits
/// ordered by their least vertex.
pub fn automorphism_orbits(g: &Hypergraph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    for v in 0..n {
        for w in v + 1..n {
            if colors[v] != colors[w] {
                continue;
            }
            if find(&mut parent, v) == find(&mut parent, w) {
                continue;
            }
            if exists_automorphism_mapping(g, v, w) {
                let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
                parent[rv.max(rw)] = rv.min(rw);
            }
        }
    }
    let mut orbit_map: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        let root = find(&mut parent, v);
        orbit_map[root].push((v + 1) as Vertex);
    }
    orbit_map.into_iter().filter(|o| !o.is_empty()).collect()
}

/// Whether some automorphism sends vertex index `src` to `dst`.
fn exists_automorphism_mapping(g: &Hypergraph, src: usize, dst: usize) -> bool {
    let n = g.vertex_count();
    let deg = g.degrees();
    if deg[src] != deg[dst] {
        return false;
    }
    let mut closing: Vec<Vec<&Edge>> = vec![Vec::new(); n + 1];
    for e in g.edges() {
        closing[*e.last().expect("edges are non-empty") as usize].push(e);
    }
    let mut map = vec![0 as Vertex; n];
    let mut used = vec![false; n + 1];
    auto_search(g, &closing, &deg, src, dst, &mut map, &mut used, 0)
}

#[allow(clippy::too_many_arguments)]
fn auto_search(
    g: &Hypergraph,
    closing: &[Vec<&Edge>],
    deg: &[usize],
    src: usize,
    dst: usize,
    map: &mut Vec<Vertex>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    if depth == map.len() {
        return true;
    }
    let forced = if depth == src { Some((dst + 1) as Vertex) } else { None };
    for cand in 1..=g.vertex_count() as Vertex {
        if let Some(f) = forced {
            if cand != f {
                continue;
            }
        }
        if used[cand as usize] || deg[cand as usize - 1] != deg[depth] {
            continue;
        }
        map[depth] = cand;
        used[cand as usize] = true;
        let ok = closing[depth + 1].iter().all(|e| {
            let img: Vec<Vertex> = e.iter().map(|&v| map[v as usize - 1]).collect();
            g.has_edge(&img)
        });
        if ok && auto_search(g, closing, deg, src, dst, map, used, depth + 1) {
            return true;
        }
        used[cand as usize] = false;
    }
    map[depth] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::rng::{derive_rng, random_graph, random_permutation};

    fn g(r: usize, n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::new(r, n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn f5() -> Hypergraph {
        constructions::generalized_triangle()
    }

    /// Oracle: all embeddings by brute force over injections, as maps.
    fn brute_force_embeddings(host: &Hypergraph, pattern: &Hypergraph) -> Vec<Vec<Vertex>> {
        let hn = host.vertex_count();
        let pn = pattern.vertex_count();
        let mut out = Vec::new();
        let mut map = vec![0 as Vertex; pn];
        let mut used = vec![false; hn + 1];
        fn rec(
            host: &Hypergraph,
            pattern: &Hypergraph,
            map: &mut Vec<Vertex>,
            used: &mut Vec<bool>,
            depth: usize,
            out: &mut Vec<Vec<Vertex>>,
        ) {
            if depth == map.len() {
                let ok = pattern.edges().iter().all(|e| {
                    let img: Vec<Vertex> = e.iter().map(|&v| map[v as usize - 1]).collect();
                    host.has_edge(&img)
                });
                if ok {
                    out.push(map.clone());
                }
                return;
            }
            for cand in 1..=host.vertex_count() as Vertex {
                if used[cand as usize] {
                    continue;
                }
                map[depth] = cand;
                used[cand as usize] = true;
                rec(host, pattern, map, used, depth + 1, out);
                used[cand as usize] = false;
            }
        }
        rec(host, pattern, &mut map, &mut used, 0, &mut out);
        out
    }

    #[test]
    fn containment_respects_vertex_count() {
        let k53 = constructions::complete(5, 3).unwrap();
        let c33 = constructions::linear_cycle(3).unwrap();
        assert_eq!(contains(&k53, &c33).unwrap(), None);
    }

    #[test]
    fn star_avoids_generalized_triangle() {
        let s6 = constructions::star(6).unwrap();
        assert_eq!(contains(&s6, &f5()).unwrap(), None);
        assert!(is_free(&s6, &ForbiddenFamily::single(f5(), None)).unwrap());
    }

    #[test]
    fn augmented_complete_graph_contains_triangle() {
        // complete 4-graph plus the edge {1,2,5}
        let mut edges: Vec<Edge> = constructions::complete(4, 3).unwrap().edges().to_vec();
        edges.push(vec![1, 2, 5]);
        let host = Hypergraph::new(3, 5, edges).unwrap();
        let found = contains(&host, &f5()).unwrap().expect("embedding exists");
        assert!(found.is_valid(&host, &f5()));
        // oracle cross-check: the backtracker returns the least embedding
        let all = brute_force_embeddings(&host, &f5());
        assert!(!all.is_empty());
        assert_eq!(found.map(), all.iter().min().unwrap().as_slice());
        // the first realizing map sends the shared pair onto {3,4}
        assert_eq!(found.map(), &[3, 4, 1, 2, 5]);
    }

    #[test]
    fn freeness_examples() {
        let k53 = constructions::complete(5, 3).unwrap();
        let c33 = ForbiddenFamily::single(constructions::linear_cycle(3).unwrap(), None);
        assert!(is_free(&k53, &c33).unwrap());

        let s6 = constructions::star(6).unwrap();
        assert!(is_free(&s6, &ForbiddenFamily::single(f5(), None)).unwrap());

        assert!(!is_free(&f5(), &ForbiddenFamily::single(f5(), None)).unwrap());
    }

    #[test]
    fn containment_reflexive_and_monotone() {
        let mut rng = derive_rng(7, 0x49534f, 0);
        for trial in 0..60 {
            let n = 4 + (crate::rng::below(&mut rng, 4) as usize);
            let g_full = random_graph(&mut rng, n, 3, 0.6);
            // reflexive
            let own = contains(&g_full, &g_full).unwrap();
            assert!(own.is_some(), "trial {trial}: graph must contain itself");
            // monotone: pattern inside h inside g
            let mut h = g_full.clone();
            while h.edge_count() > 1 {
                if crate::rng::below(&mut rng, 2) == 0 {
                    break;
                }
                let idx = crate::rng::below(&mut rng, h.edge_count() as u64) as usize;
                h = h.without_edge(idx);
            }
            if let Some(f_sub) = (h.edge_count() > 0).then(|| {
                let idx = crate::rng::below(&mut rng, h.edge_count() as u64) as usize;
                h.without_edge(idx)
            }) {
                if contains(&h, &f_sub).unwrap().is_some()
                    && contains(&g_full, &h).unwrap().is_some()
                {
                    assert!(contains(&g_full, &f_sub).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn uniformity_mismatch_is_an_error() {
        let k42 = constructions::complete(4, 2).unwrap();
        assert!(contains(&k42, &f5()).is_err());
    }

    #[test]
    fn canonical_form_is_stable_under_relabeling() {
        let mut rng = derive_rng(11, 0x43414e, 0);
        let base = canonical_form(&f5());
        for _ in 0..30 {
            let perm = random_permutation(&mut rng, 5);
            assert_eq!(canonical_form(&f5().relabel(&perm)), base);
        }
    }

    #[test]
    fn complete_graphs_are_canonical_fixed_points() {
        for t in 2..=6 {
            let k = constructions::complete(t, 3.min(t)).unwrap();
            assert_eq!(canonical_form(&k), k);
        }
    }

    #[test]
    fn paired_graph_relabelings_collide() {
        let o3 = constructions::paired_graph(3).unwrap();
        let mut rng = derive_rng(3, 0x4f33, 0);
        let p1 = random_permutation(&mut rng, 6);
        let p2 = random_permutation(&mut rng, 6);
        assert_eq!(canonical_form(&o3.relabel(&p1)), canonical_form(&o3.relabel(&p2)));
    }

    #[test]
    fn canonical_form_idempotent_on_random_graphs() {
        let mut rng = derive_rng(5, 0x494445, 0);
        for _ in 0..40 {
            let n = 2 + (crate::rng::below(&mut rng, 6) as usize);
            let g = random_graph(&mut rng, n, 3.min(n), 0.5);
            let c = canonical_form(&g);
            assert_eq!(canonical_form(&c), c);
        }
    }

    /// Oracle: orbits by brute force over all n! permutations.
    fn brute_force_orbits(g: &Hypergraph) -> Vec<Vec<Vertex>> {
        let n = g.vertex_count();
        let mut perm: Vec<Vertex> = (1..=n as Vertex).collect();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        loop {
            if g.relabel(&perm) == *g {
                for v in 0..n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, perm[v] as usize - 1));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
            // next permutation
            let mut i = n - 1;
            while i > 0 && perm[i - 1] >= perm[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = n - 1;
            while perm[j] <= perm[i - 1] {
                j -= 1;
            }
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        let mut orbits: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for v in 0..n {
            let root = find(&mut parent, v);
            orbits[root].push((v + 1) as Vertex);
        }
        orbits.into_iter().filter(|o| !o.is_empty()).collect()
    }

    #[test]
    fn orbit_examples() {
        let k53 = constructions::complete(5, 3).unwrap();
        assert_eq!(automorphism_orbits(&k53), vec![(1..=5).collect::<Vec<_>>()]);

        let s6 = constructions::star(6).unwrap();
        assert_eq!(automorphism_orbits(&s6), vec![vec![1], (2..=6).collect::<Vec<_>>()]);

        // computed against the factorial oracle, not asserted by hand
        assert_eq!(automorphism_orbits(&f5()), brute_force_orbits(&f5()));
    }

    #[test]
    fn orbits_match_oracle_on_random_graphs() {
        let mut rng = derive_rng(13, 0x4f5242, 0);
        for _ in 0..25 {
            let n = 3 + (crate::rng::below(&mut rng, 4) as usize); // 3..=6
            let g = random_graph(&mut rng, n, 3, 0.5);
            assert_eq!(automorphism_orbits(&g), brute_force_orbits(&g), "graph {g}");
        }
    }

    #[test]
    fn empty_pattern_embeds_anywhere() {
        let k53 = constructions::complete(5, 3).unwrap();
        let nothing = Hypergraph::empty(3, 0);
        assert!(contains(&k53, &nothing).unwrap().is_some());
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        // pattern: one edge plus one isolated vertex
        let pattern = g(3, 4, &[&[1, 2, 3]]);
        let tight = g(3, 3, &[&[1, 2, 3]]);
        assert!(contains(&tight, &pattern).unwrap().is_none());
        let roomy = g(3, 4, &[&[1, 2, 3]]);
        assert!(contains(&roomy, &pattern).unwrap().is_some());
    }
}
