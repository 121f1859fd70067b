//! The Lagrangian of a hypergraph: maximization of the edge-monomial
//! polynomial over the standard simplex.
//!
//! The global strategy combines three routes and keeps the best certificate:
//! seeded multistart ascent (a multiplicative growth transform, monotone for
//! polynomials with non-negative coefficients), exhaustive per-support ascent
//! for small vertex counts, and the exact clique-number formula for 2-graphs.
//! Ties are broken toward the lexicographically largest sorted weight vector,
//! so the result is independent of evaluation order and worker count.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::clique;
use crate::exec::Executor;
use crate::hypergraph::{Edge, GraphError, Hypergraph, Vertex};
use crate::iso::automorphism_orbits;
use crate::rational::{exact_poly, Rational};
use crate::rng::{derive_rng, dirichlet_point, exponential};
use crate::tol;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverError {
    DimensionMismatch { got: usize, expected: usize },
    NegativeWeight,
    WeightSumOffSimplex,
    Graph(GraphError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::DimensionMismatch { got, expected } => {
                write!(f, "weight vector has length {got}, expected {expected}")
            }
            SolverError::NegativeWeight => write!(f, "weights must be non-negative"),
            SolverError::WeightSumOffSimplex => write!(f, "weights must sum to 1"),
            SolverError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SolverError {}

impl From<GraphError> for SolverError {
    fn from(e: GraphError) -> Self {
        SolverError::Graph(e)
    }
}

/// A point of the standard simplex (all weights non-negative, summing to 1).
/// The empty vector is the unique weighting of the 0-vertex graph.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(w: Vec<f64>) -> Result<Self, SolverError> {
        if w.is_empty() {
            return Ok(WeightVector(w));
        }
        if w.iter().any(|&x| x < 0.0 || !x.is_finite()) {
            return Err(SolverError::NegativeWeight);
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > tol::SIMPLEX_SUM {
            return Err(SolverError::WeightSumOffSimplex);
        }
        Ok(WeightVector(w))
    }

    pub fn uniform(n: usize) -> Self {
        if n == 0 {
            return WeightVector(Vec::new());
        }
        WeightVector(vec![1.0 / n as f64; n])
    }

    /// Uniform weights on `support` (1-based), zero elsewhere.
    pub fn indicator(n: usize, support: &[Vertex]) -> Self {
        let mut w = vec![0.0; n];
        for &v in support {
            w[v as usize - 1] = 1.0 / support.len() as f64;
        }
        WeightVector(w)
    }

    pub fn weights(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => pairwise_sum(&xs[..n / 2]) + pairwise_sum(&xs[n / 2..]),
    }
}

/// Raw polynomial value at arbitrary non-negative coordinates (no simplex
/// check); terms are accumulated pairwise in sorted edge order.
pub fn evaluate_raw(g: &Hypergraph, w: &[f64]) -> f64 {
    let terms: Vec<f64> = g
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| w[v as usize - 1]).product())
        .collect();
    pairwise_sum(&terms)
}

/// The Lagrangian polynomial at a feasible weight vector.
pub fn evaluate(g: &Hypergraph, x: &WeightVector) -> Result<f64, SolverError> {
    if x.len() != g.vertex_count() {
        return Err(SolverError::DimensionMismatch { got: x.len(), expected: g.vertex_count() });
    }
    Ok(evaluate_raw(g, x.weights()))
}

fn gradient_raw(g: &Hypergraph, w: &[f64]) -> Vec<f64> {
    let mut grad = vec![0.0; w.len()];
    for e in g.edges() {
        for &v in e {
            let term: f64 = e.iter().filter(|&&u| u != v).map(|&u| w[u as usize - 1]).product();
            grad[v as usize - 1] += term;
        }
    }
    grad
}

/// Partial derivatives; component `i` is the link polynomial of vertex `i+1`.
pub fn gradient(g: &Hypergraph, x: &WeightVector) -> Result<Vec<f64>, SolverError> {
    if x.len() != g.vertex_count() {
        return Err(SolverError::DimensionMismatch { got: x.len(), expected: g.vertex_count() });
    }
    Ok(gradient_raw(g, x.weights()))
}

/// Deviation from the first-order condition: on the support every partial
/// derivative must equal `r * value`; off the support it must not exceed it.
pub fn kkt_residual(grad: &[f64], w: &[f64], r: usize, value: f64) -> f64 {
    let target = r as f64 * value;
    let mut on = 0.0f64;
    let mut off = 0.0f64;
    for (i, &wi) in w.iter().enumerate() {
        if wi > tol::SUPPORT_EPS {
            on = on.max((grad[i] - target).abs());
        } else {
            off = off.max((grad[i] - target).max(0.0));
        }
    }
    on + off
}

fn interior_residual(grad: &[f64], w: &[f64], r: usize, value: f64) -> f64 {
    let target = r as f64 * value;
    let mut on = 0.0f64;
    for (i, &wi) in w.iter().enumerate() {
        if wi > tol::SUPPORT_EPS {
            on = on.max((grad[i] - target).abs());
        }
    }
    on
}

/// One multiplicative growth step `w_i <- w_i * grad_i / (r * value)`;
/// `None` when the value is zero and the transform is undefined.
pub fn growth_step(g: &Hypergraph, w: &[f64]) -> Option<Vec<f64>> {
    let grad = gradient_raw(g, w);
    let value: f64 = w.iter().zip(&grad).map(|(a, b)| a * b).sum::<f64>() / g.uniformity() as f64;
    if value <= 0.0 {
        return None;
    }
    let target = g.uniformity() as f64 * value;
    let mut next: Vec<f64> = w.iter().zip(&grad).map(|(a, b)| a * b / target).collect();
    let sum: f64 = next.iter().sum();
    if sum > 0.0 {
        for x in &mut next {
            *x /= sum;
        }
    }
    Some(next)
}

/// Euclidean projection onto the simplex (used only to escape zero-value
/// starts, where the growth transform is undefined).
fn project_simplex(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    let mut sorted = v.to_vec();
    sorted.sort_unstable_by(|a, b| b.total_cmp(a));
    let mut acc = 0.0;
    let mut theta = 0.0;
    for (k, &x) in sorted.iter().enumerate() {
        acc += x;
        let t = (acc - 1.0) / (k + 1) as f64;
        if k + 1 == n || sorted[k + 1] <= t {
            theta = t;
            break;
        }
    }
    v.iter().map(|&x| (x - theta).max(0.0)).collect()
}

/// Result of a local ascent.
#[derive(Debug, Clone)]
pub struct AscentOutcome {
    pub point: WeightVector,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Interior stationarity residual at the final iterate.
    pub residual: f64,
}

/// Monotone ascent from `x0`: growth-transform steps, with a projected
/// gradient fallback while the value is zero. Stops when the interior
/// residual drops below `tol_residual` or after `max_iters` steps; the final
/// iterate is returned either way.
pub fn local_ascend(
    g: &Hypergraph,
    x0: &WeightVector,
    tol_residual: f64,
    max_iters: usize,
) -> Result<AscentOutcome, SolverError> {
    if x0.len() != g.vertex_count() {
        return Err(SolverError::DimensionMismatch { got: x0.len(), expected: g.vertex_count() });
    }
    let r = g.uniformity();
    let mut w = x0.weights().to_vec();
    let mut best_value = evaluate_raw(g, &w);
    let mut stall = 0usize;
    for iter in 0..max_iters {
        let grad = gradient_raw(g, &w);
        let value = evaluate_raw(g, &w);
        let res = interior_residual(&grad, &w, r, value);
        if res <= tol_residual {
            return Ok(AscentOutcome {
                point: WeightVector(w),
                value,
                iterations: iter,
                converged: true,
                residual: res,
            });
        }
        let next = if value > 0.0 {
            let target = r as f64 * value;
            let mut nw: Vec<f64> = w.iter().zip(&grad).map(|(a, b)| a * b / target).collect();
            let sum: f64 = nw.iter().sum();
            for x in &mut nw {
                *x /= sum;
            }
            nw
        } else {
            let gmax = grad.iter().cloned().fold(0.0f64, f64::max);
            if gmax <= 0.0 {
                // no edge is reachable from this face; the point is stationary
                return Ok(AscentOutcome {
                    point: WeightVector(w),
                    value,
                    iterations: iter,
                    converged: true,
                    residual: 0.0,
                });
            }
            let step: Vec<f64> = w.iter().zip(&grad).map(|(a, b)| a + b / gmax).collect();
            project_simplex(&step)
        };
        w = next;
        let new_value = evaluate_raw(g, &w);
        if new_value > best_value + 1e-18 {
            best_value = new_value;
            stall = 0;
        } else {
            stall += 1;
            if stall > 500 {
                break;
            }
        }
    }
    let grad = gradient_raw(g, &w);
    let value = evaluate_raw(g, &w);
    let res = interior_residual(&grad, &w, r, value);
    Ok(AscentOutcome {
        point: WeightVector(w),
        value,
        iterations: max_iters,
        converged: res <= tol_residual,
        residual: res,
    })
}

/// Averages weights over clone classes: vertices `i`, `j` are clones when
/// both one-sided link differences are empty, so averaging never decreases
/// the value. The result has equal weights on every clone pair.
pub fn symmetrize(g: &Hypergraph, x: &WeightVector) -> Result<WeightVector, SolverError> {
    if x.len() != g.vertex_count() {
        return Err(SolverError::DimensionMismatch { got: x.len(), expected: g.vertex_count() });
    }
    let n = g.vertex_count();
    let mut class = (0..n).collect::<Vec<usize>>();
    for i in 0..n {
        if class[i] != i {
            continue;
        }
        for j in i + 1..n {
            if class[j] != j {
                continue;
            }
            let a = (i + 1) as Vertex;
            let b = (j + 1) as Vertex;
            let ab = g.link_difference(a, b).expect("vertices in range");
            let ba = g.link_difference(b, a).expect("vertices in range");
            if ab.is_empty() && ba.is_empty() {
                class[j] = i;
            }
        }
    }
    let mut sums = vec![0.0f64; n];
    let mut counts = vec![0usize; n];
    for i in 0..n {
        sums[class[i]] += x.weights()[i];
        counts[class[i]] += 1;
    }
    let w: Vec<f64> = (0..n).map(|i| sums[class[i]] / counts[class[i]] as f64).collect();
    Ok(WeightVector(w))
}

/// Exact polynomial value at rational weights summing to exactly 1.
pub fn exact_eval(g: &Hypergraph, weights: &[Rational]) -> Result<Rational, SolverError> {
    if weights.len() != g.vertex_count() {
        return Err(SolverError::DimensionMismatch {
            got: weights.len(),
            expected: g.vertex_count(),
        });
    }
    let sum = weights.iter().fold(Rational::zero(), |acc, w| &acc + w);
    if sum != Rational::one() {
        return Err(SolverError::WeightSumOffSimplex);
    }
    Ok(exact_poly(g.edges(), weights))
}

/// How a certificate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Method {
    Ascent,
    SupportEnum,
    MotzkinStraus,
    ClosedForm,
}

/// Exact rational value together with the exact weights realizing it.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExactWitness {
    pub value: Rational,
    pub weights: Vec<Rational>,
}

/// Certified (locally optimal, globally best-found) maximum of the
/// Lagrangian polynomial.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub value: f64,
    pub weights: WeightVector,
    /// Vertices with positive weight; empty for edgeless graphs.
    pub support: Vec<Vertex>,
    pub kkt_residual: f64,
    pub method: Method,
    pub starts_used: usize,
    pub exact: Option<ExactWitness>,
    pub seed: u64,
}

/// Solver configuration. `starts = None` means `50 * n`.
#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub starts: Option<usize>,
    pub support_enum_threshold: usize,
    pub seed: u64,
    pub ascent_tol: f64,
    pub max_iters: usize,
    /// Use the exact clique-number formula as an extra route on 2-graphs.
    pub use_exact_two_graph: bool,
    pub dense_gap: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            starts: None,
            support_enum_threshold: 10,
            seed: 0,
            ascent_tol: tol::ASCENT_TOL,
            max_iters: 20_000,
            use_exact_two_graph: true,
            dense_gap: tol::DENSE_GAP,
        }
    }
}

impl SolveOptions {
    /// Support enumeration only: deterministic and exhaustive on small
    /// graphs, used by the extremal search.
    pub fn support_enum_only(n: usize) -> Self {
        SolveOptions {
            starts: Some(0),
            support_enum_threshold: n.max(1),
            ..SolveOptions::default()
        }
    }
}

struct Candidate {
    weights: Vec<f64>,
    value: f64,
    method: Method,
}

/// Orders candidates by value, then by sorted weights (largest first), so the
/// reduction over any partition of candidates is deterministic.
fn better(a: &Candidate, b: &Candidate) -> bool {
    match a.value.total_cmp(&b.value) {
        core::cmp::Ordering::Greater => return true,
        core::cmp::Ordering::Less => return false,
        core::cmp::Ordering::Equal => {}
    }
    let mut wa = a.weights.clone();
    let mut wb = b.weights.clone();
    wa.sort_unstable_by(|x, y| y.total_cmp(x));
    wb.sort_unstable_by(|x, y| y.total_cmp(x));
    for (x, y) in wa.iter().zip(&wb) {
        match x.total_cmp(y) {
            core::cmp::Ordering::Greater => return true,
            core::cmp::Ordering::Less => return false,
            core::cmp::Ordering::Equal => {}
        }
    }
    false
}

const STREAM_STARTS: u64 = 0x5354;

fn start_point(g: &Hypergraph, orbits: &[Vec<Vertex>], seed: u64, index: usize) -> Vec<f64> {
    let n = g.vertex_count();
    if index == 0 {
        return vec![1.0 / n as f64; n];
    }
    let mut rng = derive_rng(seed, STREAM_STARTS, index as u64);
    if index % 2 == 1 {
        return dirichlet_point(&mut rng, n);
    }
    // Orbit-collapsed point: one mass per orbit, split equally inside.
    let mut w = vec![0.0f64; n];
    let mut total = 0.0;
    for orbit in orbits {
        let mass = exponential(&mut rng);
        total += mass;
        for &v in orbit {
            w[v as usize - 1] = mass / orbit.len() as f64;
        }
    }
    if total <= 0.0 {
        return vec![1.0 / n as f64; n];
    }
    for x in &mut w {
        *x /= total;
    }
    w
}

fn snap_support(w: &mut [f64]) {
    let mut sum = 0.0;
    for x in w.iter_mut() {
        if *x < tol::SUPPORT_EPS {
            *x = 0.0;
        }
        sum += *x;
    }
    if sum > 0.0 {
        for x in w.iter_mut() {
            *x /= sum;
        }
    }
}

fn ascend_candidate(
    g: &Hypergraph,
    start: Vec<f64>,
    opts: &SolveOptions,
    method: Method,
) -> Candidate {
    let outcome = local_ascend(g, &WeightVector(start), opts.ascent_tol, opts.max_iters)
        .expect("dimensions match");
    let mut w = outcome.point.0;
    // Clone-class averaging never decreases the value and removes drift
    // between structurally equivalent vertices.
    let symmetric = symmetrize(g, &WeightVector(w.clone())).expect("dimensions match").0;
    if evaluate_raw(g, &symmetric) >= evaluate_raw(g, &w) {
        w = symmetric;
    }
    snap_support(&mut w);
    let value = evaluate_raw(g, &w);
    Candidate { weights: w, value, method }
}

fn certificate_from(g: &Hypergraph, cand: Candidate, starts_used: usize, seed: u64) -> Certificate {
    let grad = gradient_raw(g, &cand.weights);
    let residual = kkt_residual(&grad, &cand.weights, g.uniformity(), cand.value);
    let support: Vec<Vertex> = cand
        .weights
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > tol::SUPPORT_EPS)
        .map(|(i, _)| (i + 1) as Vertex)
        .collect();
    Certificate {
        value: cand.value,
        weights: WeightVector(cand.weights),
        support,
        kkt_residual: residual,
        method: cand.method,
        starts_used,
        exact: None,
        seed,
    }
}

/// Attempts to round the winning weights to small rationals and certify the
/// value exactly. The exact witness is attached only when its value is not
/// below the numeric one by more than `tol::VALUE`; when the exact point is
/// better, the certificate is moved onto it.
fn attach_exact(g: &Hypergraph, cert: &mut Certificate) {
    let mut rats: Vec<Rational> = Vec::with_capacity(cert.weights.len());
    for &w in cert.weights.weights() {
        match Rational::reconstruct(w, tol::RATIONAL_DEN_CAP) {
            Some(r) => rats.push(r),
            None => return,
        }
    }
    // Force the exact sum to 1 by adjusting the largest weight.
    let sum = rats.iter().fold(Rational::zero(), |acc, r| &acc + r);
    if sum != Rational::one() {
        let mut idx_max = 0;
        for (i, r) in rats.iter().enumerate() {
            if r > &rats[idx_max] {
                idx_max = i;
            }
        }
        let adjusted = &rats[idx_max] + &(&Rational::one() - &sum);
        if adjusted < Rational::zero() {
            return;
        }
        rats[idx_max] = adjusted;
    }
    let exact_value = exact_poly(g.edges(), &rats);
    let exact_f = exact_value.to_f64();
    if exact_f < cert.value - tol::VALUE {
        return;
    }
    if exact_f > cert.value {
        // The rational point is at least as good: report it.
        let w: Vec<f64> = rats.iter().map(|r| r.to_f64()).collect();
        let value = evaluate_raw(g, &w);
        let grad = gradient_raw(g, &w);
        cert.kkt_residual = kkt_residual(&grad, &w, g.uniformity(), value);
        cert.support = w
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > tol::SUPPORT_EPS)
            .map(|(i, _)| (i + 1) as Vertex)
            .collect();
        cert.value = value;
        cert.weights = WeightVector(w);
    }
    cert.exact = Some(ExactWitness { value: exact_value, weights: rats });
}

/// Best certificate over multistart ascent, support enumeration (when the
/// graph is small enough), and the exact 2-graph route.
pub fn lagrangian<E: Executor>(g: &Hypergraph, opts: &SolveOptions, exec: &E) -> Certificate {
    let n = g.vertex_count();
    if n == 0 || g.edge_count() == 0 {
        let weights = WeightVector::uniform(n);
        return Certificate {
            value: 0.0,
            weights,
            support: Vec::new(),
            kkt_residual: 0.0,
            method: Method::ClosedForm,
            starts_used: 0,
            exact: Some(ExactWitness {
                value: Rational::zero(),
                weights: vec![
                    if n == 0 { Rational::zero() } else { Rational::from_ratio(1, n as u64) };
                    n
                ],
            }),
            seed: opts.seed,
        };
    }

    let starts = opts.starts.unwrap_or(50 * n);
    let mut candidates: Vec<Candidate> = Vec::new();

    if starts > 0 {
        let orbits = automorphism_orbits(g);
        let seeded: Vec<Candidate> = exec.par_map(starts, |k| {
            let x0 = start_point(g, &orbits, opts.seed, k);
            ascend_candidate(g, x0, opts, Method::Ascent)
        });
        candidates.extend(seeded);
    }

    if n <= opts.support_enum_threshold && n <= 24 {
        let masks = (1usize << n) - 1;
        let enumerated: Vec<Option<Candidate>> = exec.par_map(masks, |m| {
            let mask = m + 1;
            let support: Vec<Vertex> =
                (0..n).filter(|i| mask & (1 << i) != 0).map(|i| (i + 1) as Vertex).collect();
            // Only supports carrying at least one full edge can improve on 0.
            if !g.edges().iter().any(|e| e.iter().all(|&v| mask & (1 << (v - 1)) != 0)) {
                return None;
            }
            let start = WeightVector::indicator(n, &support).0;
            Some(ascend_candidate(g, start, opts, Method::SupportEnum))
        });
        candidates.extend(enumerated.into_iter().flatten());
    }

    if g.uniformity() == 2 && opts.use_exact_two_graph && n <= 64 {
        if let Ok((size, verts)) = clique::maximum_clique(g) {
            if size >= 2 {
                let w = WeightVector::indicator(n, &verts).0;
                let value = evaluate_raw(g, &w);
                candidates.push(Candidate { weights: w, value, method: Method::MotzkinStraus });
            }
        }
    }

    let best = candidates
        .into_iter()
        .reduce(|a, b| if better(&b, &a) { b } else { a })
        .unwrap_or(Candidate {
            weights: vec![1.0 / n as f64; n],
            value: evaluate_raw(g, &vec![1.0 / n as f64; n]),
            method: Method::Ascent,
        });

    let mut cert = certificate_from(g, best, starts, opts.seed);
    if cert.method == Method::MotzkinStraus {
        // Uniform weights on a maximum clique are exactly optimal.
        if let Ok(exact) = clique::two_graph_lambda(g) {
            let rats: Vec<Rational> = cert
                .weights
                .weights()
                .iter()
                .map(|&w| {
                    if w > 0.0 {
                        Rational::from_ratio(1, cert.support.len() as u64)
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            cert.exact = Some(ExactWitness { value: exact, weights: rats });
        }
    } else {
        attach_exact(g, &mut cert);
    }
    cert
}

/// Why a graph failed the density test.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DenseWitness {
    IsolatedVertex(Vertex),
    /// Removing this edge keeps the Lagrangian within the gap.
    Edge { edge: Edge, sub_value: f64 },
}

#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DenseVerdict {
    pub dense: bool,
    pub value: f64,
    pub witness: Option<DenseWitness>,
}

/// A graph is dense when every proper subgraph has a strictly smaller
/// Lagrangian. By monotonicity it is enough that every single-edge removal
/// drops the value (by more than the configured gap) and that no vertex is
/// isolated (for n >= 2). Exact rational certificates refine borderline
/// comparisons when both sides reconstruct.
pub fn is_dense<E: Executor>(g: &Hypergraph, opts: &SolveOptions, exec: &E) -> DenseVerdict {
    if g.vertex_count() >= 2 {
        if let Some(&v) = g.isolated_vertices().first() {
            let full = lagrangian(g, opts, exec);
            return DenseVerdict {
                dense: false,
                value: full.value,
                witness: Some(DenseWitness::IsolatedVertex(v)),
            };
        }
    }
    let full = lagrangian(g, opts, exec);
    for idx in 0..g.edge_count() {
        let sub = g.without_edge(idx);
        let sub_cert = lagrangian(&sub, opts, exec);
        let edge = g.edges()[idx].clone();
        if let (Some(fe), Some(se)) = (&full.exact, &sub_cert.exact) {
            if se.value < fe.value {
                continue;
            }
            return DenseVerdict {
                dense: false,
                value: full.value,
                witness: Some(DenseWitness::Edge { edge, sub_value: sub_cert.value }),
            };
        }
        if sub_cert.value < full.value - opts.dense_gap {
            continue;
        }
        return DenseVerdict {
            dense: false,
            value: full.value,
            witness: Some(DenseWitness::Edge { edge, sub_value: sub_cert.value }),
        };
    }
    DenseVerdict { dense: true, value: full.value, witness: None }
}

/// A dense subgraph with the same Lagrangian (within the gap), obtained by
/// repeatedly removing isolated vertices and value-preserving edges. Being a
/// subgraph, it inherits freeness from `g`.
pub fn dense_reduction<E: Executor>(g: &Hypergraph, opts: &SolveOptions, exec: &E) -> Hypergraph {
    let mut current = g.clone();
    loop {
        if current.vertex_count() >= 2 {
            if let Some(&v) = current.isolated_vertices().first() {
                current = current.without_isolated(v).expect("isolated vertex exists");
                continue;
            }
        }
        let verdict = is_dense(&current, opts, exec);
        match verdict.witness {
            Some(DenseWitness::Edge { edge, .. }) => {
                let idx = current
                    .edges()
                    .iter()
                    .position(|e| *e == edge)
                    .expect("witness edge came from this graph");
                current = current.without_edge(idx);
            }
            Some(DenseWitness::IsolatedVertex(v)) => {
                current = current.without_isolated(v).expect("witness vertex is isolated");
            }
            None => return current,
        }
    }
}
