//! Generators for the named hypergraphs used throughout: complete graphs,
//! stars, books, linear paths and cycles, the generalized triangle, the
//! paired construction `O_s`, the Fano plane, and the forbidden families
//! derived from two edges sharing all but one vertex.
//!
//! Labels follow the conventional presentations verbatim so embeddings found
//! in tests are readable by hand.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::{Edge, ForbiddenFamily, GraphError, Hypergraph, Vertex};
use crate::rational::Rational;

/// Complete r-graph on `t` vertices; empty edge set when `t < r`.
pub fn complete(t: usize, r: usize) -> Result<Hypergraph, GraphError> {
    let mut edges = Vec::new();
    if t >= r {
        let mut cur: Vec<Vertex> = (1..=r as Vertex).collect();
        loop {
            edges.push(cur.clone());
            // next r-combination of 1..=t in lexicographic order
            let mut i = r;
            loop {
                if i == 0 {
                    return Hypergraph::new(r, t, edges);
                }
                i -= 1;
                if cur[i] < (t - (r - 1 - i)) as Vertex {
                    cur[i] += 1;
                    for j in i + 1..r {
                        cur[j] = cur[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    Hypergraph::new(r, t, edges)
}

/// Complete r-graph on `t` vertices minus its lexicographically last edge.
pub fn complete_minus(t: usize, r: usize) -> Result<Hypergraph, GraphError> {
    if t < r {
        return Err(GraphError::EdgeSize { got: t, expected: r });
    }
    let full = complete(t, r)?;
    let last = full.edge_count() - 1;
    Ok(full.without_edge(last))
}

/// The 3-graph of all triples through vertex 1 on `[n]`.
pub fn star(n: usize) -> Result<Hypergraph, GraphError> {
    let mut edges = Vec::new();
    for i in 2..=n as Vertex {
        for j in i + 1..=n as Vertex {
            edges.push(vec![1, i, j]);
        }
    }
    Hypergraph::new(3, n, edges)
}

/// The r-graph of all r-sets through the core `{1..r-2}` on `[n]`; the
/// 3-uniform case is `star(n)`.
pub fn core_star(n: usize, r: usize) -> Result<Hypergraph, GraphError> {
    if r < 3 {
        return Err(GraphError::UniformityTooSmall { r, required: 3 });
    }
    let core: Vec<Vertex> = (1..=(r - 2) as Vertex).collect();
    let mut edges = Vec::new();
    for i in (r - 1) as Vertex..=n as Vertex {
        for j in i + 1..=n as Vertex {
            let mut e = core.clone();
            e.push(i);
            e.push(j);
            edges.push(e);
        }
    }
    Hypergraph::new(r, n, edges)
}

/// The book of `t` triples through the common pair `{1,2}`.
pub fn book(t: usize) -> Result<Hypergraph, GraphError> {
    let edges: Vec<Edge> = (1..=t as Vertex).map(|k| vec![1, 2, k + 2]).collect();
    Hypergraph::new(3, t + 2, edges)
}

/// 3-uniform linear path with `t` edges, consecutive edges sharing one vertex.
pub fn linear_path(t: usize) -> Result<Hypergraph, GraphError> {
    if t < 1 {
        return Err(GraphError::EdgeSize { got: t, expected: 1 });
    }
    let edges: Vec<Edge> = (0..t as Vertex)
        .map(|i| vec![2 * i + 1, 2 * i + 2, 2 * i + 3])
        .collect();
    Hypergraph::new(3, 2 * t + 1, edges)
}

/// 3-uniform linear cycle with `t` edges on `2t` vertices, closing at vertex 1.
pub fn linear_cycle(t: usize) -> Result<Hypergraph, GraphError> {
    if t < 2 {
        return Err(GraphError::EdgeSize { got: t, expected: 2 });
    }
    let mut edges: Vec<Edge> = (0..(t - 1) as Vertex)
        .map(|i| vec![2 * i + 1, 2 * i + 2, 2 * i + 3])
        .collect();
    edges.push(vec![2 * t as Vertex - 1, 2 * t as Vertex, 1]);
    Hypergraph::new(3, 2 * t, edges)
}

/// The generalized triangle `{123, 124, 345}`.
pub fn generalized_triangle() -> Hypergraph {
    Hypergraph::new(3, 5, vec![vec![1, 2, 3], vec![1, 2, 4], vec![3, 4, 5]])
        .expect("fixed edge list is valid")
}

/// The 3-graph on pairs `(a_i, b_i) = (2i-1, 2i)`, `1 ≤ i ≤ s`, with edges
/// `{a_i, b_i, a_j}` and `{a_i, b_i, b_j}` for all `i ≠ j`.
pub fn paired_graph(s: usize) -> Result<Hypergraph, GraphError> {
    if s < 2 {
        return Err(GraphError::EdgeSize { got: s, expected: 2 });
    }
    let a = |i: usize| (2 * i - 1) as Vertex;
    let b = |i: usize| (2 * i) as Vertex;
    let mut edges = Vec::new();
    for i in 1..=s {
        for j in 1..=s {
            if i != j {
                edges.push(vec![a(i), b(i), a(j)]);
                edges.push(vec![a(i), b(i), b(j)]);
            }
        }
    }
    Hypergraph::new(3, 2 * s, edges)
}

/// The Fano plane: 7 points, 7 lines, every pair covered exactly once.
pub fn fano() -> Hypergraph {
    // lines generated by the difference set {1,2,4} mod 7
    let mut edges = Vec::new();
    for k in 0..7u16 {
        edges.push(vec![(k % 7) + 1, ((k + 1) % 7) + 1, ((k + 3) % 7) + 1]);
    }
    Hypergraph::new(3, 7, edges).expect("fixed edge list is valid")
}

/// The family of r-graphs each consisting of two edges sharing all but one
/// vertex plus one closing edge. Member `i` (for `0 ≤ i ≤ r-3`) has edges
///   e1 = {1..r-2, a1, a2},  e2 = {1..r-2, a1, a3},
///   {a2, a3} ∪ {1..i} ∪ {m_1..m_{r-i-2}},
/// with `a1,a2,a3` labeled `r-1, r, r+1` and fresh vertices above them.
/// For r = 3 the single member is the generalized triangle.
pub fn closing_family(r: usize) -> Result<ForbiddenFamily, GraphError> {
    if r < 3 {
        return Err(GraphError::UniformityTooSmall { r, required: 3 });
    }
    let core: Vec<Vertex> = (1..=(r - 2) as Vertex).collect();
    let a1 = (r - 1) as Vertex;
    let a2 = r as Vertex;
    let a3 = (r + 1) as Vertex;
    let mut members = Vec::new();
    for i in 0..=(r - 3) {
        let fresh = r - i - 2;
        let n = r + 1 + fresh;
        let mut e1 = core.clone();
        e1.extend([a1, a2]);
        let mut e2 = core.clone();
        e2.extend([a1, a3]);
        let mut e3 = vec![a2, a3];
        e3.extend(core.iter().take(i));
        for k in 0..fresh {
            e3.push((r + 2 + k) as Vertex);
        }
        members.push(Hypergraph::new(r, n, vec![e1, e2, e3])?);
    }
    ForbiddenFamily::new(members, Some(format!("Fr{r}")))
}

/// A gallery construction, parsed from CLI names or built programmatically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// `K{t}_{r}`
    Complete { t: usize, r: usize },
    /// `K{t}_{r}-`
    CompleteMinus { t: usize, r: usize },
    /// `star{n}`: all triples through vertex 1
    Star { n: usize },
    /// `S2_{t}`: t triples through the pair {1,2}
    Book { t: usize },
    /// `P{t}_3`
    Path { t: usize },
    /// `C{t}_3`
    Cycle { t: usize },
    /// `F5`
    GeneralizedTriangle,
    /// `O{s}`
    Paired { s: usize },
    /// `fano`
    Fano,
}

impl Construction {
    pub fn build(&self) -> Result<Hypergraph, GraphError> {
        match *self {
            Construction::Complete { t, r } => complete(t, r),
            Construction::CompleteMinus { t, r } => complete_minus(t, r),
            Construction::Star { n } => star(n),
            Construction::Book { t } => book(t),
            Construction::Path { t } => linear_path(t),
            Construction::Cycle { t } => linear_cycle(t),
            Construction::GeneralizedTriangle => Ok(generalized_triangle()),
            Construction::Paired { s } => paired_graph(s),
            Construction::Fano => Ok(fano()),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Construction::Complete { t, r } => format!("K{t}_{r}"),
            Construction::CompleteMinus { t, r } => format!("K{t}_{r}-"),
            Construction::Star { n } => format!("star{n}"),
            Construction::Book { t } => format!("S2_{t}"),
            Construction::Path { t } => format!("P{t}_3"),
            Construction::Cycle { t } => format!("C{t}_3"),
            Construction::GeneralizedTriangle => "F5".to_string(),
            Construction::Paired { s } => format!("O{s}"),
            Construction::Fano => "fano".to_string(),
        }
    }
}

/// An exact Lagrangian attached to a construction, with a short provenance
/// note for the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownValue {
    pub construction: Construction,
    pub lambda: Rational,
    pub provenance: String,
}

/// The exact Lagrangian of a construction, where a closed form is forced:
/// complete r-graphs (uniform weights are optimal by pair symmetrization)
/// and the paired graphs `O_s` (the optimum concentrates on one pair of
/// pairs, a complete 4-vertex block). Derived values for other constructions
/// live in test fixtures, not here.
pub fn known_lambda(c: &Construction) -> Option<KnownValue> {
    match *c {
        Construction::Complete { t, r } => {
            if t < r || r == 0 || t == 0 {
                return None;
            }
            // C(t, r) / t^r
            let lambda = Rational::from_ratio(binomial(t as u64, r as u64), 1)
                / Rational::from_ratio(t as u64, 1).pow(r as u32);
            Some(KnownValue {
                construction: c.clone(),
                lambda,
                provenance: String::from(
                    "uniform weights are optimal on complete graphs: C(t,r)/t^r",
                ),
            })
        }
        Construction::Paired { s } if s >= 2 => Some(KnownValue {
            construction: c.clone(),
            lambda: Rational::from_ratio(1, 16),
            provenance: String::from(
                "optimum concentrates on two pairs, a complete 4-vertex block",
            ),
        }),
        _ => None,
    }
}

/// All gallery constructions carrying known exact values, at desk scale.
pub fn known_value_gallery() -> Vec<KnownValue> {
    let mut out = Vec::new();
    for t in 2..=8 {
        out.push(known_lambda(&Construction::Complete { t, r: 2 }).expect("t >= r"));
    }
    for t in 3..=9 {
        out.push(known_lambda(&Construction::Complete { t, r: 3 }).expect("t >= r"));
    }
    for t in 4..=6 {
        out.push(known_lambda(&Construction::Complete { t, r: 4 }).expect("t >= r"));
    }
    for s in 2..=5 {
        out.push(known_lambda(&Construction::Paired { s }).expect("s >= 2"));
    }
    out
}

/// Parses a gallery name such as `K5_3`, `K4_3-`, `star6`, `S2_3`, `P2_3`,
/// `C3_3`, `O3`, `F5`, or `fano`.
pub fn parse_construction(name: &str) -> Option<Construction> {
    if name.eq_ignore_ascii_case("fano") {
        return Some(Construction::Fano);
    }
    if name == "F5" {
        return Some(Construction::GeneralizedTriangle);
    }
    if let Some(rest) = name.strip_prefix("star") {
        return rest.parse().ok().map(|n| Construction::Star { n });
    }
    if let Some(rest) = name.strip_prefix("S2_") {
        return rest.parse().ok().map(|t| Construction::Book { t });
    }
    if let Some(rest) = name.strip_prefix('O') {
        return rest.parse().ok().map(|s| Construction::Paired { s });
    }
    for (prefix, minus) in [("K", false), ("P", false), ("C", false)] {
        let _ = minus;
        if let Some(rest) = name.strip_prefix(prefix) {
            let (body, removed) = match rest.strip_suffix('-') {
                Some(b) => (b, true),
                None => (rest, false),
            };
            let mut parts = body.split('_');
            let first: usize = parts.next()?.parse().ok()?;
            let second: usize = parts.next()?.parse().ok()?;
            if parts.next().is_some() {
                return None;
            }
            return match (prefix, removed) {
                ("K", false) => Some(Construction::Complete { t: first, r: second }),
                ("K", true) => Some(Construction::CompleteMinus { t: first, r: second }),
                ("P", false) if second == 3 => Some(Construction::Path { t: first }),
                ("C", false) if second == 3 => Some(Construction::Cycle { t: first }),
                _ => None,
            };
        }
    }
    None
}

/// Resolves a gallery name to a forbidden family: `Fr{r}` yields the closing
/// family, any other construction name a single-member family.
pub fn parse_family(name: &str) -> Option<ForbiddenFamily> {
    if let Some(rest) = name.strip_prefix("Fr") {
        let r: usize = rest.parse().ok()?;
        return closing_family(r).ok();
    }
    let c = parse_construction(name)?;
    let g = c.build().ok()?;
    Some(ForbiddenFamily::single(g, Some(c.name())))
}

/// One line per gallery entry with parameter ranges, for `construct --list`.
pub fn gallery_help() -> Vec<(&'static str, &'static str)> {
    vec![
        ("K{t}_{r}", "complete r-graph on t vertices (t >= 0, r >= 1)"),
        ("K{t}_{r}-", "complete r-graph minus its last edge (t >= r)"),
        ("star{n}", "all triples through vertex 1 on [n] (n >= 1)"),
        ("S2_{t}", "t triples through the pair {1,2} (t >= 1)"),
        ("P{t}_3", "3-uniform linear path with t edges (t >= 1)"),
        ("C{t}_3", "3-uniform linear cycle with t edges on 2t vertices (t >= 2)"),
        ("F5", "the generalized triangle {123, 124, 345}"),
        ("O{s}", "s vertex pairs, edges pair + one vertex of another pair (s >= 2)"),
        ("fano", "the Fano plane (7 points, 7 lines)"),
        ("Fr{r}", "family of two edges sharing r-1 vertices plus a closing edge (r >= 3)"),
    ]
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::canonical_form;

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete(5, 3).unwrap().edge_count(), 10);
        assert_eq!(complete(2, 3).unwrap().edge_count(), 0);
        assert_eq!(complete(4, 3).unwrap().edge_count(), 4);
        assert_eq!(complete(0, 3).unwrap().vertex_count(), 0);
        for t in 1..=9u64 {
            for r in 1..=4u64 {
                if t >= r {
                    assert_eq!(
                        complete(t as usize, r as usize).unwrap().edge_count() as u64,
                        binomial(t, r)
                    );
                }
            }
        }
    }

    #[test]
    fn complete_minus_drops_last_edge() {
        let k43m = complete_minus(4, 3).unwrap();
        assert_eq!(k43m.edges(), &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]]);
        assert_eq!(complete_minus(3, 3).unwrap().edge_count(), 0);
        assert!(complete_minus(2, 3).is_err());
        // the block used by the long-cycle theorem, up to relabeling:
        // removing the last edge is isomorphic to removing the first
        let k6m = complete_minus(6, 3).unwrap();
        assert_eq!(k6m.edge_count(), 19);
        assert!(!k6m.has_edge(&[4, 5, 6]));
        let dropped_first = {
            let edges: Vec<Vec<u16>> = complete(6, 3)
                .unwrap()
                .edges()
                .iter()
                .filter(|e| *e != &vec![1, 2, 3])
                .cloned()
                .collect();
            crate::hypergraph::Hypergraph::new(3, 6, edges).unwrap()
        };
        assert_eq!(canonical_form(&k6m), canonical_form(&dropped_first));
    }

    #[test]
    fn star_shapes() {
        assert_eq!(star(4).unwrap(), complete_minus(4, 3).unwrap());
        assert_eq!(star(6).unwrap().edge_count(), 10);
        assert_eq!(star(1).unwrap().edge_count(), 0);
        assert_eq!(star(2).unwrap().edge_count(), 0);
        assert!(star(6).unwrap().edges().iter().all(|e| e.contains(&1)));
    }

    #[test]
    fn book_shapes() {
        assert_eq!(book(1).unwrap().edges(), &[vec![1, 2, 3]]);
        let b3 = book(3).unwrap();
        assert_eq!(b3.vertex_count(), 5);
        assert_eq!(b3.edges(), &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5]]);
        for t in 2..=6 {
            assert!(!book(t).unwrap().covers_pairs(), "pair {{3,4}} is uncovered");
        }
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(linear_path(2).unwrap().edges(), &[vec![1, 2, 3], vec![3, 4, 5]]);
        let c3 = linear_cycle(3).unwrap();
        assert_eq!(c3.edges(), &[vec![1, 2, 3], vec![1, 5, 6], vec![3, 4, 5]]);
        for t in 2..=8 {
            let c = linear_cycle(t).unwrap();
            assert_eq!(c.vertex_count(), 2 * t);
            assert_eq!(c.edge_count(), t);
            let p = linear_path(t).unwrap();
            assert_eq!(p.vertex_count(), 2 * t + 1);
            assert_eq!(p.edge_count(), t);
        }
        // consecutive edges share exactly one vertex, all the way around
        for t in 3..=8usize {
            let c = linear_cycle(t).unwrap();
            let ring: Vec<Vec<u16>> = (0..t)
                .map(|i| {
                    if i + 1 < t {
                        vec![2 * i as u16 + 1, 2 * i as u16 + 2, 2 * i as u16 + 3]
                    } else {
                        vec![1, 2 * t as u16 - 1, 2 * t as u16]
                    }
                })
                .collect();
            for e in &ring {
                assert!(c.has_edge(e));
            }
            for i in 0..t {
                let a = &ring[i];
                let b = &ring[(i + 1) % t];
                let shared = a.iter().filter(|v| b.contains(v)).count();
                assert_eq!(shared, 1, "t = {t}, edges {i} and {}", (i + 1) % t);
            }
        }
    }

    #[test]
    fn paired_graph_shapes() {
        let o2 = paired_graph(2).unwrap();
        assert_eq!(canonical_form(&o2), canonical_form(&complete(4, 3).unwrap()));
        let o3 = paired_graph(3).unwrap();
        assert_eq!(o3.vertex_count(), 6);
        assert_eq!(o3.edge_count(), 12);
        assert!(paired_graph(1).is_err());
    }

    #[test]
    fn closing_family_shapes() {
        let f3 = closing_family(3).unwrap();
        assert_eq!(f3.members().len(), 1);
        assert_eq!(f3.members()[0], generalized_triangle());

        for r in 3..=6 {
            let fam = closing_family(r).unwrap();
            assert_eq!(fam.members().len(), r - 2);
            for m in fam.members() {
                assert_eq!(m.uniformity(), r);
                assert_eq!(m.edge_count(), 3);
                let e1 = &m.edges()[0];
                let e2 = &m.edges()[1];
                let shared = e1.iter().filter(|v| e2.contains(v)).count();
                assert_eq!(shared, r - 1);
            }
        }
        assert!(closing_family(2).is_err());
    }

    #[test]
    fn fano_covers_every_pair_once() {
        let f = fano();
        assert_eq!(f.vertex_count(), 7);
        assert_eq!(f.edge_count(), 7);
        for a in 1..=7u16 {
            for b in a + 1..=7u16 {
                assert_eq!(f.pair_link(a, b).unwrap().len(), 1, "pair ({a},{b})");
            }
        }
    }

    #[test]
    fn known_values() {
        let k53 = known_lambda(&Construction::Complete { t: 5, r: 3 }).unwrap();
        assert_eq!(k53.lambda, Rational::from_ratio(2, 25));
        let os = known_lambda(&Construction::Paired { s: 4 }).unwrap();
        assert_eq!(os.lambda, Rational::from_ratio(1, 16));
        // (2t-2)(2t-3) / (6 (2t-1)^2) for complete 3-graphs on odd counts
        for t in 2..=5u64 {
            let k = known_lambda(&Construction::Complete { t: (2 * t - 1) as usize, r: 3 })
                .unwrap();
            let expect =
                Rational::from_ratio((2 * t - 2) * (2 * t - 3), 6 * (2 * t - 1) * (2 * t - 1));
            assert_eq!(k.lambda, expect);
        }
        // (1/2)(1 - 1/t) for 2-graphs
        for t in 2..=8u64 {
            let k = known_lambda(&Construction::Complete { t: t as usize, r: 2 }).unwrap();
            assert_eq!(k.lambda, Rational::from_ratio(t - 1, 2 * t));
        }
        assert!(known_lambda(&Construction::Complete { t: 2, r: 3 }).is_none());
        assert!(known_lambda(&Construction::Fano).is_none());
        assert!(known_lambda(&Construction::Star { n: 6 }).is_none());
    }

    /// Oracle for the star Lagrangian: a dense grid over the apex weight a,
    /// the rest uniform; the apex pattern is forced by clone symmetry.
    fn star_lambda_grid(n: usize) -> f64 {
        let steps = 2_000_000usize;
        let mut best = 0.0f64;
        for i in 0..=steps {
            let a = i as f64 / steps as f64;
            let v = a * (1.0 - a) * (1.0 - a) * (n as f64 - 2.0) / (2.0 * (n as f64 - 1.0));
            if v > best {
                best = v;
            }
        }
        best
    }

    #[test]
    fn star_lambda_closed_form_matches_grid_oracle() {
        for n in 4..=8 {
            let closed = (2.0 / 27.0) * (n as f64 - 2.0) / (n as f64 - 1.0);
            let grid = star_lambda_grid(n);
            assert!((closed - grid).abs() < 1e-9, "n = {n}: {closed} vs {grid}");
        }
    }

    #[test]
    fn name_round_trips() {
        let cases = [
            Construction::Complete { t: 5, r: 3 },
            Construction::CompleteMinus { t: 4, r: 3 },
            Construction::Star { n: 6 },
            Construction::Book { t: 3 },
            Construction::Path { t: 2 },
            Construction::Cycle { t: 3 },
            Construction::GeneralizedTriangle,
            Construction::Paired { s: 3 },
            Construction::Fano,
        ];
        for c in cases {
            assert_eq!(parse_construction(&c.name()), Some(c.clone()), "{}", c.name());
        }
        assert!(parse_construction("nonsense").is_none());
        let fam = parse_family("Fr4").unwrap();
        assert_eq!(fam.members().len(), 2);
        assert_eq!(parse_family("C3_3").unwrap().members()[0], linear_cycle(3).unwrap());
    }
}
