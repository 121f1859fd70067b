//! r-uniform hypergraphs over vertex set `{1..n}` and the purely
//! combinatorial operations on them.
//!
//! Vertices are 1-based to keep constructions readable against the usual
//! notation. Isolated vertices are part of the structure: a graph on 6
//! vertices with 3 edges is a different object from the same edges on 5
//! vertices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// 1-based vertex label.
pub type Vertex = u16;

/// A sorted list of distinct vertices of length `r`.
pub type Edge = Vec<Vertex>;

/// Errors raised by graph construction and combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { v: Vertex, n: usize },
    EdgeSize { got: usize, expected: usize },
    RepeatedVertex { v: Vertex },
    DuplicateEdge,
    UniformityMismatch { left: usize, right: usize },
    UniformityTooSmall { r: usize, required: usize },
    SamePair { v: Vertex },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range 1..{n}")
            }
            GraphError::EdgeSize { got, expected } => {
                write!(f, "edge has {got} vertices, expected {expected}")
            }
            GraphError::RepeatedVertex { v } => write!(f, "vertex {v} repeated within an edge"),
            GraphError::DuplicateEdge => write!(f, "duplicate edge"),
            GraphError::UniformityMismatch { left, right } => {
                write!(f, "uniformity mismatch: {left} vs {right}")
            }
            GraphError::UniformityTooSmall { r, required } => {
                write!(f, "operation requires uniformity at least {required}, got {r}")
            }
            GraphError::SamePair { v } => write!(f, "expected two distinct vertices, got {v} twice"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An r-uniform hypergraph on vertex set `{1..n}`.
///
/// Edges are stored sorted within each edge and lexicographically as a list,
/// so equal values serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Builds a graph, validating and normalizing the edge list.
    pub fn new(r: usize, n: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if r == 0 {
            return Err(GraphError::UniformityTooSmall { r, required: 1 });
        }
        let mut norm: Vec<Edge> = Vec::with_capacity(edges.len());
        for mut e in edges {
            if e.len() != r {
                return Err(GraphError::EdgeSize { got: e.len(), expected: r });
            }
            e.sort_unstable();
            for i in 0..e.len() {
                let v = e[i];
                if v == 0 || v as usize > n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
                if i > 0 && e[i - 1] == v {
                    return Err(GraphError::RepeatedVertex { v });
                }
            }
            norm.push(e);
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge);
        }
        Ok(Hypergraph { r, n, edges: norm })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(r: usize, n: usize) -> Self {
        Hypergraph { r, n, edges: Vec::new() }
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True when `edge` (in any vertex order) is present.
    pub fn has_edge(&self, edge: &[Vertex]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    /// Number of edges through `v`.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v as usize - 1] += 1;
            }
        }
        deg
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(i, _)| (i + 1) as Vertex)
            .collect()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v as usize > self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    /// The link of `v`: the (r-1)-graph `{ e \ {v} : v ∈ e ∈ E }` on the same
    /// vertex set (with `v` left isolated).
    pub fn link(&self, v: Vertex) -> Result<Hypergraph, GraphError> {
        self.check_vertex(v)?;
        let mut edges = Vec::new();
        for e in &self.edges {
            if e.contains(&v) {
                edges.push(e.iter().copied().filter(|&u| u != v).collect::<Edge>());
            }
        }
        Hypergraph::new(self.r - 1, self.n, edges)
    }

    /// The pair link: all (r-2)-sets `S` with `S ∪ {a,b}` an edge.
    pub fn pair_link(&self, a: Vertex, b: Vertex) -> Result<Vec<Edge>, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SamePair { v: a });
        }
        let mut out = Vec::new();
        for e in &self.edges {
            if e.contains(&a) && e.contains(&b) {
                out.push(e.iter().copied().filter(|&u| u != a && u != b).collect::<Edge>());
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// True when every pair of distinct vertices lies in some edge.
    pub fn covers_pairs(&self) -> bool {
        self.uncovered_pairs().is_empty()
    }

    /// All pairs `{a,b}` not contained in any edge, in lexicographic order.
    pub fn uncovered_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut covered = vec![false; self.n * self.n];
        for e in &self.edges {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    let (a, b) = (e[i] as usize - 1, e[j] as usize - 1);
                    covered[a * self.n + b] = true;
                }
            }
        }
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !covered[a * self.n + b] {
                    out.push(((a + 1) as Vertex, (b + 1) as Vertex));
                }
            }
        }
        out
    }

    /// The one-sided link difference: (r-1)-sets `e` with `i ∉ e`,
    /// `e ∪ {j}` an edge and `e ∪ {i}` not an edge.
    pub fn link_difference(&self, j: Vertex, i: Vertex) -> Result<Vec<Edge>, GraphError> {
        self.check_vertex(j)?;
        self.check_vertex(i)?;
        if i == j {
            return Err(GraphError::SamePair { v: i });
        }
        let mut out = Vec::new();
        for full in &self.edges {
            if !full.contains(&j) || full.contains(&i) {
                continue;
            }
            let stub: Edge = full.iter().copied().filter(|&u| u != j).collect();
            let mut with_i = stub.clone();
            with_i.push(i);
            with_i.sort_unstable();
            if !self.has_edge(&with_i) {
                out.push(stub);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Disjoint union; the second operand's labels are shifted past `self.n`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph, GraphError> {
        if self.r != other.r {
            return Err(GraphError::UniformityMismatch { left: self.r, right: other.r });
        }
        let shift = self.n as Vertex;
        let mut edges = self.edges.clone();
        for e in &other.edges {
            edges.push(e.iter().map(|&v| v + shift).collect());
        }
        Hypergraph::new(self.r, self.n + other.n, edges)
    }

    /// For each pair of vertices not covered by an edge, adds r-2 fresh
    /// vertices and one edge through the pair and its fresh block. After this
    /// every pair of the *original* vertex set is covered.
    pub fn extension(&self) -> Result<Hypergraph, GraphError> {
        if self.r < 3 {
            return Err(GraphError::UniformityTooSmall { r: self.r, required: 3 });
        }
        let uncovered = self.uncovered_pairs();
        let mut edges = self.edges.clone();
        let mut next = self.n as Vertex + 1;
        for (a, b) in &uncovered {
            let mut e = vec![*a, *b];
            for _ in 0..self.r - 2 {
                e.push(next);
                next += 1;
            }
            edges.push(e);
        }
        Hypergraph::new(self.r, self.n + (self.r - 2) * uncovered.len(), edges)
    }

    /// Graph with the edge at `idx` removed (vertex set unchanged).
    pub fn without_edge(&self, idx: usize) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Hypergraph { r: self.r, n: self.n, edges }
    }

    /// Graph with an edge added; errors if it is already present.
    pub fn with_edge(&self, edge: &[Vertex]) -> Result<Hypergraph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push(edge.to_vec());
        Hypergraph::new(self.r, self.n, edges)
    }

    /// Removes vertex `v` (which must be isolated) and shifts higher labels
    /// down by one.
    pub fn without_isolated(&self, v: Vertex) -> Result<Hypergraph, GraphError> {
        self.check_vertex(v)?;
        debug_assert_eq!(self.degree(v), 0);
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&u| if u > v { u - 1 } else { u }).collect())
            .collect();
        Hypergraph::new(self.r, self.n - 1, edges)
    }

    /// Subgraph induced by `keep` (ascending labels), relabeled to `1..|keep|`.
    pub fn induced(&self, keep: &[Vertex]) -> Result<Hypergraph, GraphError> {
        let mut pos = vec![0 as Vertex; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            pos[v as usize] = (i + 1) as Vertex;
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            if e.iter().all(|&v| pos[v as usize] != 0) {
                edges.push(e.iter().map(|&v| pos[v as usize]).collect());
            }
        }
        Hypergraph::new(self.r, keep.len(), edges)
    }

    /// Relabels vertices through `perm`, where `perm[v-1]` is the new label
    /// of `v`. `perm` must be a permutation of `1..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Hypergraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                let mut img: Edge = e.iter().map(|&v| perm[v as usize - 1]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        edges.sort_unstable();
        Hypergraph { r: self.r, n: self.n, edges }
    }

    /// Good pairs to `a_set`: pairs `{a,b}` outside `a_set` whose pair links
    /// with every `k ∈ a_set` are exactly each other. Only meaningful for
    /// 3-graphs, where pair links are single vertices; with an empty `a_set`
    /// the list is empty by convention. Vertices outside `1..n` are ignored.
    pub fn good_pairs(&self, a_set: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        let anchors: Vec<Vertex> = {
            let mut a: Vec<Vertex> =
                a_set.iter().copied().filter(|&v| v >= 1 && v as usize <= self.n).collect();
            a.sort_unstable();
            a.dedup();
            a
        };
        if anchors.is_empty() {
            return Vec::new();
        }
        let outside: Vec<Vertex> = (1..=self.n as Vertex)
            .filter(|v| !anchors.contains(v))
            .collect();
        let mut out = Vec::new();
        for (ia, &a) in outside.iter().enumerate() {
            'pair: for &b in &outside[ia + 1..] {
                for &k in &anchors {
                    let la = self.pair_link(a, k).expect("anchors validated");
                    let lb = self.pair_link(b, k).expect("anchors validated");
                    if la != vec![vec![b]] || lb != vec![vec![a]] {
                        continue 'pair;
                    }
                }
                out.push((a, b));
            }
        }
        out
    }

    /// True when the vertices outside `a_set` split exactly into good pairs
    /// to `a_set`. An odd number of outside vertices can never split.
    pub fn is_good_graph_to(&self, a_set: &[Vertex]) -> bool {
        let mut anchors: Vec<Vertex> =
            a_set.iter().copied().filter(|&v| v >= 1 && v as usize <= self.n).collect();
        anchors.sort_unstable();
        anchors.dedup();
        let outside = self.n - anchors.len();
        if outside % 2 != 0 {
            return false;
        }
        let pairs = self.good_pairs(&anchors);
        let mut seen = vec![false; self.n + 1];
        let mut covered = 0usize;
        for (a, b) in pairs {
            if !seen[a as usize] && !seen[b as usize] {
                seen[a as usize] = true;
                seen[b as usize] = true;
                covered += 2;
            }
        }
        covered == outside
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Hypergraph", 3)?;
        s.serialize_field("r", &self.r)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            r: usize,
            n: usize,
            edges: Vec<Edge>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Hypergraph::new(raw.r, raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.r, self.n)?;
        for e in &self.edges {
            write!(f, "\n")?;
            for (i, v) in e.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// A non-empty family of forbidden patterns with a shared uniformity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenFamily {
    members: Vec<Hypergraph>,
    name: Option<alloc::string::String>,
}

impl ForbiddenFamily {
    pub fn new(
        members: Vec<Hypergraph>,
        name: Option<alloc::string::String>,
    ) -> Result<Self, GraphError> {
        let mut iter = members.iter();
        let first = iter.next().expect("family must be non-empty");
        for m in iter {
            if m.uniformity() != first.uniformity() {
                return Err(GraphError::UniformityMismatch {
                    left: first.uniformity(),
                    right: m.uniformity(),
                });
            }
        }
        Ok(ForbiddenFamily { members, name })
    }

    pub fn single(pattern: Hypergraph, name: Option<alloc::string::String>) -> Self {
        ForbiddenFamily { members: vec![pattern], name }
    }

    pub fn members(&self) -> &[Hypergraph] {
        &self.members
    }

    pub fn uniformity(&self) -> usize {
        self.members[0].uniformity()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    fn g(r: usize, n: usize, edges: &[&[Vertex]]) -> Hypergraph {
        Hypergraph::new(r, n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn f5() -> Hypergraph {
        g(3, 5, &[&[1, 2, 3], &[1, 2, 4], &[3, 4, 5]])
    }

    #[test]
    fn construction_normalizes_and_validates() {
        let a = Hypergraph::new(3, 4, vec![vec![3, 2, 1], vec![4, 2, 1]]).unwrap();
        let b = Hypergraph::new(3, 4, vec![vec![1, 2, 4], vec![1, 2, 3]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges(), &[vec![1, 2, 3], vec![1, 2, 4]]);

        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![1, 2, 5]]),
            Err(GraphError::VertexOutOfRange { v: 5, .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![1, 2, 2]]),
            Err(GraphError::RepeatedVertex { v: 2 })
        ));
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![1, 2, 3], vec![3, 2, 1]]),
            Err(GraphError::DuplicateEdge)
        ));
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![1, 2]]),
            Err(GraphError::EdgeSize { got: 2, expected: 3 })
        ));
    }

    #[test]
    fn link_of_complete_graph_is_complete() {
        let k43 = constructions::complete(4, 3).unwrap();
        let link = k43.link(1).unwrap();
        assert_eq!(link.uniformity(), 2);
        // K_3 on {2,3,4}; vertex 1 isolated but retained
        assert_eq!(link.vertex_count(), 4);
        assert_eq!(link.edges(), &[vec![2, 3], vec![2, 4], vec![3, 4]]);
    }

    #[test]
    fn link_of_star_apex_is_complete_two_graph() {
        let s6 = constructions::star(6).unwrap();
        let link = s6.link(1).unwrap();
        assert_eq!(link.edge_count(), 10);
        assert!(link.edges().iter().all(|e| !e.contains(&1)));
        // all pairs on {2..6}
        for i in 2..=6u16 {
            for j in i + 1..=6u16 {
                assert!(link.has_edge(&[i, j]));
            }
        }
    }

    #[test]
    fn link_of_triangle_vertex() {
        let link = f5().link(1).unwrap();
        assert_eq!(link.edges(), &[vec![2, 3], vec![2, 4]]);
        assert!(f5().link(9).is_err());
    }

    #[test]
    fn link_edge_count_equals_degree() {
        let graphs = [f5(), constructions::complete(5, 3).unwrap(), constructions::fano()];
        for g in &graphs {
            for v in 1..=g.vertex_count() as Vertex {
                assert_eq!(g.link(v).unwrap().edge_count(), g.degree(v));
            }
        }
    }

    #[test]
    fn pair_links_read_off_edges() {
        assert_eq!(f5().pair_link(1, 2).unwrap(), vec![vec![3], vec![4]]);
        assert_eq!(f5().pair_link(2, 5).unwrap(), Vec::<Edge>::new());
        let k53 = constructions::complete(5, 3).unwrap();
        assert_eq!(k53.pair_link(1, 2).unwrap(), vec![vec![3], vec![4], vec![5]]);
        assert!(f5().pair_link(2, 2).is_err());
    }

    #[test]
    fn covers_pairs_examples() {
        assert!(constructions::complete_minus(4, 3).unwrap().covers_pairs());
        assert!(constructions::fano().covers_pairs());
        assert!(!f5().covers_pairs());
        assert_eq!(f5().uncovered_pairs(), vec![(1, 5), (2, 5)]);
        // an isolated vertex kills pair coverage for n >= 2
        let lonely = g(3, 4, &[&[1, 2, 3]]);
        assert!(!lonely.covers_pairs());
        assert!(g(3, 3, &[&[1, 2, 3]]).covers_pairs());
    }

    #[test]
    fn link_difference_examples() {
        let two = g(3, 4, &[&[1, 2, 3], &[1, 2, 4]]);
        assert_eq!(two.link_difference(3, 4).unwrap(), Vec::<Edge>::new());
        assert_eq!(f5().link_difference(5, 2).unwrap(), vec![vec![3, 4]]);
        let single = g(3, 4, &[&[1, 2, 3]]);
        assert_eq!(single.link_difference(1, 4).unwrap(), vec![vec![2, 3]]);
        assert!(single.link_difference(1, 1).is_err());
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let e = g(3, 3, &[&[1, 2, 3]]);
        let m2 = e.disjoint_union(&e).unwrap();
        assert_eq!(m2.vertex_count(), 6);
        assert_eq!(m2.edges(), &[vec![1, 2, 3], vec![4, 5, 6]]);

        let empty = Hypergraph::empty(3, 0);
        assert_eq!(e.disjoint_union(&empty).unwrap(), e);

        // the union from the perfectness statement at t = 3, s = 3
        let f = constructions::book(3).unwrap().disjoint_union(&g(3, 3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(f.vertex_count(), 8);
        assert_eq!(f.edge_count(), 4);
        assert!(f.has_edge(&[6, 7, 8]));

        let two = constructions::complete(3, 2).unwrap();
        assert!(e.disjoint_union(&two).is_err());
    }

    #[test]
    fn extension_examples() {
        // covering pairs: fixed point
        let k43m = constructions::complete_minus(4, 3).unwrap();
        assert_eq!(k43m.extension().unwrap(), k43m);
        let single = g(3, 3, &[&[1, 2, 3]]);
        assert_eq!(single.extension().unwrap(), single);

        // matching of size 2: 9 uncovered cross-pairs, one fresh vertex each
        let m2 = single.disjoint_union(&single).unwrap();
        assert_eq!(m2.uncovered_pairs().len(), 9);
        let ext = m2.extension().unwrap();
        assert_eq!(ext.vertex_count(), 15);
        assert_eq!(ext.edge_count(), 11);
        // every original pair is now covered
        assert!(ext
            .uncovered_pairs()
            .iter()
            .all(|&(a, b)| a as usize > m2.vertex_count() || b as usize > m2.vertex_count()));

        let two_graph = constructions::complete(3, 2).unwrap();
        assert!(two_graph.extension().is_err());
    }

    #[test]
    fn good_pairs_examples() {
        // complete block on {1..5} plus a good pair {6,7}
        let mut edges: Vec<Edge> = constructions::complete(5, 3).unwrap().edges().to_vec();
        for k in 1..=5u16 {
            edges.push(vec![6, 7, k]);
        }
        let g = Hypergraph::new(3, 7, edges).unwrap();
        let a: Vec<Vertex> = (1..=5).collect();
        assert_eq!(g.good_pairs(&a), vec![(6, 7)]);
        assert!(g.is_good_graph_to(&a));

        let k53 = constructions::complete(5, 3).unwrap();
        assert_eq!(k53.good_pairs(&[1, 2, 3, 4, 5]), vec![]);
        assert!(k53.is_good_graph_to(&[1, 2, 3, 4, 5]));

        // empty anchor set: empty by convention
        let o2 = constructions::paired_graph(2).unwrap();
        assert_eq!(o2.good_pairs(&[]), vec![]);

        // odd outside part can never split into pairs
        assert!(!g.is_good_graph_to(&[1, 2, 3, 4]));
    }

    #[test]
    fn good_pairs_disjoint_on_anchored_instance() {
        // anchored complete-minus block with two good pairs, the shape used
        // by the long-cycle analysis
        let mut edges: Vec<Edge> = constructions::complete_minus(4, 3).unwrap().edges().to_vec();
        for (a, b) in [(5u16, 6u16), (7, 8)] {
            for k in 1..=4u16 {
                edges.push(vec![a, b, k]);
            }
        }
        // pair-to-pair edges as in the paired construction
        edges.extend([vec![5, 6, 7], vec![5, 6, 8], vec![7, 8, 5], vec![7, 8, 6]]);
        let g = Hypergraph::new(3, 8, edges).unwrap();
        let anchors = [1, 2, 3, 4];
        let pairs = g.good_pairs(&anchors);
        assert_eq!(pairs, vec![(5, 6), (7, 8)]);
        // pairwise disjoint and disjoint from the anchor set
        for (a, b) in &pairs {
            assert!(!anchors.contains(a) && !anchors.contains(b));
        }
        assert!(g.is_good_graph_to(&anchors));
    }

    #[test]
    fn induced_and_removal() {
        let k53 = constructions::complete(5, 3).unwrap();
        let sub = k53.induced(&[1, 2, 3, 4]).unwrap();
        assert_eq!(sub, constructions::complete(4, 3).unwrap());

        let lonely = g(3, 4, &[&[1, 2, 3]]);
        let trimmed = lonely.without_isolated(4).unwrap();
        assert_eq!(trimmed, g(3, 3, &[&[1, 2, 3]]));

        let with5 = g(3, 5, &[&[1, 2, 4], &[2, 4, 5]]);
        let dropped = with5.without_isolated(3).unwrap();
        assert_eq!(dropped, g(3, 4, &[&[1, 2, 3], &[2, 3, 4]]));
    }

    #[test]
    fn family_rejects_mixed_uniformity() {
        let e3 = g(3, 3, &[&[1, 2, 3]]);
        let e2 = constructions::complete(2, 2).unwrap();
        assert!(ForbiddenFamily::new(vec![e3.clone(), e2], None).is_err());
        let fam = ForbiddenFamily::single(e3, Some("edge".into()));
        assert_eq!(fam.uniformity(), 3);
        assert_eq!(fam.name(), Some("edge"));
    }
}
