//! The verification ledger: every closed-form inequality, envelope function,
//! golden value, property suite, and desk-scale search bound, each as one
//! pass/fail/skipped entry with a witness on failure.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use crate::constructions::{self, Construction};
use crate::enumerate;
use crate::exec::Executor;
use crate::hypergraph::{ForbiddenFamily, GraphError, Hypergraph};
use crate::iso;
use crate::rational::Rational;
use crate::rng::derive_rng;
use crate::search::{self, SearchParams};
use crate::solver::{self, SolveOptions, WeightVector};
use crate::tol;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    Domain(&'static str),
    Graph(GraphError),
}

impl core::fmt::Display for VerifyError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            VerifyError::Domain(msg) => write!(f, "domain violation: {msg}"),
            VerifyError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for VerifyError {}

impl From<GraphError> for VerifyError {
    fn from(e: GraphError) -> Self {
        VerifyError::Graph(e)
    }
}

// ---------------------------------------------------------------------------
// Closed-form envelopes
// ---------------------------------------------------------------------------

/// Quadratic envelope bounding the Lagrangian of graphs excluding the
/// generalized triangle, in terms of the apex weight `c`, the weight `a` of
/// the clique-like block, and its size `k`:
/// `(c^2 + 2a^2 + 1 + 2kac - 2c - 2a) / (6(k+1))`.
pub fn envelope_f5(a: f64, c: f64, k: u32) -> Result<f64, VerifyError> {
    if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&c) || a + c > 1.0 + 1e-12 {
        return Err(VerifyError::Domain("need a, c >= 0 and a + c <= 1"));
    }
    if k < 3 {
        return Err(VerifyError::Domain("need k >= 3"));
    }
    let kf = k as f64;
    Ok((c * c + 2.0 * a * a + 1.0 + 2.0 * kf * a * c - 2.0 * c - 2.0 * a) / (6.0 * (kf + 1.0)))
}

pub fn envelope_f5_exact(a: &Rational, c: &Rational, k: u32) -> Rational {
    let two = Rational::from_int(2);
    let kf = Rational::from_int(k as i64);
    let num = &(&(&(&(&c.pow(2) + &(&two * &a.pow(2))) + &Rational::one())
        + &(&(&two * &kf) * &(a * c)))
        - &(&two * c))
        - &(&two * a);
    &num / &Rational::from_int(6 * (k as i64 + 1))
}

/// Exact Lagrangian of the complete 3-graph on `2t-1` vertices, the constant
/// `m` of the good-graph envelopes: `(2t-2)(2t-3) / (6(2t-1)^2)`.
pub fn clique_constant(t: u32) -> Rational {
    let t = t as u64;
    Rational::from_ratio((2 * t - 2) * (2 * t - 3), 6 * (2 * t - 1) * (2 * t - 1))
}

/// Cubic envelope for good graphs: `a^3/16 + a^2(1-a)/4 + m(1-a)^3`, where
/// `a` is the total weight of the paired part and `m` the Lagrangian of the
/// complete block.
pub fn envelope_good(a: f64, m: f64) -> Result<f64, VerifyError> {
    if !(0.0..=1.0).contains(&a) {
        return Err(VerifyError::Domain("need 0 <= a <= 1"));
    }
    Ok(a * a * a / 16.0 + a * a * (1.0 - a) / 4.0 + m * (1.0 - a) * (1.0 - a) * (1.0 - a))
}

pub fn envelope_good_exact(a: &Rational, m: &Rational) -> Rational {
    let one_minus = &Rational::one() - a;
    &(&(&a.pow(3) / &Rational::from_int(16))
        + &(&(&a.pow(2) * &one_minus) / &Rational::from_int(4)))
        + &(m * &one_minus.pow(3))
}

/// Relaxed variant with leading coefficient `1/12`, used when the block is
/// large enough that `m >= 5/49`.
pub fn envelope_good_relaxed(a: f64, m: f64) -> Result<f64, VerifyError> {
    if !(0.0..=1.0).contains(&a) {
        return Err(VerifyError::Domain("need 0 <= a <= 1"));
    }
    Ok(a * a * a / 12.0 + a * a * (1.0 - a) / 4.0 + m * (1.0 - a) * (1.0 - a) * (1.0 - a))
}

/// Cubic envelope for the disjoint-union bound: `2a^3 - 3a^2 + a +
/// m(1-2a)^3/6` with `m = (s-2)(s-3)/(s-1)^2`.
pub fn envelope_union(a: f64, s: u32) -> Result<f64, VerifyError> {
    if !(0.0..=0.5).contains(&a) {
        return Err(VerifyError::Domain("need 0 <= a <= 1/2"));
    }
    if s < 3 {
        return Err(VerifyError::Domain("need s >= 3"));
    }
    let m = union_constant(s).to_f64();
    let q = 1.0 - 2.0 * a;
    Ok(2.0 * a * a * a - 3.0 * a * a + a + m * q * q * q / 6.0)
}

/// `m = (s-2)(s-3)/(s-1)^2`.
pub fn union_constant(s: u32) -> Rational {
    let s = s as i64;
    Rational::from_signed_ratio((s - 2) * (s - 3), (s - 1) * (s - 1))
}

pub fn envelope_union_exact(a: &Rational, s: u32) -> Rational {
    let m = union_constant(s);
    let two = Rational::from_int(2);
    let q = &Rational::one() - &(&two * a);
    &(&(&(&two * &a.pow(3)) - &(&Rational::from_int(3) * &a.pow(2))) + a)
        + &(&(&m * &q.pow(3)) / &Rational::from_int(6))
}

/// Closed-form maximum of `envelope_union` over `(0, 1/2)`:
/// `(s-1) / (6 sqrt(s^2 + 4s - 9))`.
pub fn envelope_union_max(s: u32) -> f64 {
    let sf = s as f64;
    (sf - 1.0) / (6.0 * Float::sqrt(sf * sf + 4.0 * sf - 9.0))
}

/// Location of that maximum: `1/2 - sqrt(3-2m)/(6-4m)`.
pub fn envelope_union_argmax(s: u32) -> f64 {
    let m = union_constant(s).to_f64();
    0.5 - Float::sqrt(3.0 - 2.0 * m) / (6.0 - 4.0 * m)
}

/// The integer quartic `3s^4 + 38s^3 + 103s^2 - 140s - 580`, positive for all
/// `s >= 3`; its positivity is equivalent to the union envelope staying below
/// the next clique value.
pub fn quartic_gap(s: i64) -> i64 {
    3 * s * s * s * s + 38 * s * s * s + 103 * s * s - 140 * s - 580
}

/// `K_{t-1}^r` together with `r! * lambda(K_{t-1}^r)` as an exact rational,
/// where `t` is the vertex count of `F`; the complete graph is F-free by
/// vertex count, which is asserted. This is the trivial floor any
/// Lagrangian-density upper bound must clear.
pub fn perfectness_floor(f: &Hypergraph) -> Result<(Hypergraph, Rational), VerifyError> {
    let t = f.vertex_count();
    let r = f.uniformity();
    if t < r + 1 {
        return Err(VerifyError::Domain("pattern needs at least r+1 vertices"));
    }
    let k = constructions::complete(t - 1, r)?;
    let family = ForbiddenFamily::single(f.clone(), None);
    if !iso::is_free(&k, &family)? {
        return Err(VerifyError::Domain("complete graph unexpectedly contains the pattern"));
    }
    let r_factorial = (1..=r as u64).product::<u64>();
    let lambda = Rational::from_ratio(
        constructions::binomial((t - 1) as u64, r as u64),
        1,
    ) / Rational::from_ratio((t - 1) as u64, 1).pow(r as u32);
    Ok((k, Rational::from_ratio(r_factorial, 1) * lambda))
}

// ---------------------------------------------------------------------------
// Ledger
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum CheckKind {
    ClosedForm,
    GridInequality,
    SearchBound,
    Structural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LedgerEntry {
    pub id: String,
    /// What mathematical claim the entry checks.
    pub citation: String,
    pub kind: CheckKind,
    pub params: String,
    pub status: Status,
    /// Grid point or graph exhibiting a failure; always present on Fail.
    pub witness: Option<String>,
}

impl LedgerEntry {
    fn pass(id: &str, citation: &str, kind: CheckKind, params: String) -> Self {
        LedgerEntry {
            id: id.to_string(),
            citation: citation.to_string(),
            kind,
            params,
            status: Status::Pass,
            witness: None,
        }
    }

    fn fail(id: &str, citation: &str, kind: CheckKind, params: String, witness: String) -> Self {
        LedgerEntry {
            id: id.to_string(),
            citation: citation.to_string(),
            kind,
            params,
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    fn skipped(id: &str, citation: &str, rationale: &str) -> Self {
        LedgerEntry {
            id: id.to_string(),
            citation: citation.to_string(),
            kind: CheckKind::Structural,
            params: rationale.to_string(),
            status: Status::Skipped,
            witness: None,
        }
    }

    fn from_result(
        id: &str,
        citation: &str,
        kind: CheckKind,
        params: String,
        outcome: Result<(), String>,
    ) -> Self {
        match outcome {
            Ok(()) => LedgerEntry::pass(id, citation, kind, params),
            Err(w) => LedgerEntry::fail(id, citation, kind, params, w),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteLevel {
    Quick,
    Full,
}

/// An exact value the solver must reproduce.
#[derive(Debug, Clone)]
pub struct GoldenCase {
    pub name: String,
    pub graph: Hypergraph,
    pub expected: Rational,
}

pub fn default_goldens() -> Vec<GoldenCase> {
    constructions::known_value_gallery()
        .into_iter()
        .map(|kv| GoldenCase {
            name: kv.construction.name(),
            graph: kv.construction.build().expect("gallery builds"),
            expected: kv.lambda,
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub level: SuiteLevel,
    pub seed: u64,
    pub goldens: Vec<GoldenCase>,
}

impl SuiteConfig {
    pub fn new(level: SuiteLevel) -> Self {
        SuiteConfig { level, seed: 0, goldens: default_goldens() }
    }
}

/// Solver value for golden comparisons: exhaustive support enumeration.
fn certified_value<E: Executor>(g: &Hypergraph, seed: u64, exec: &E) -> solver::Certificate {
    let mut opts = SolveOptions::support_enum_only(g.vertex_count());
    opts.seed = seed;
    solver::lagrangian(g, &opts, exec)
}

/// Golden-value section: one entry per case.
pub fn run_goldens<E: Executor>(cases: &[GoldenCase], exec: &E) -> Vec<LedgerEntry> {
    let entries: Vec<LedgerEntry> = exec.par_map(cases.len(), |i| {
        let case = &cases[i];
        let cert = certified_value(&case.graph, 0, exec);
        let expected = case.expected.to_f64();
        let id = format!("golden-{}", case.name);
        let citation = "solver reproduces the known exact Lagrangian";
        let params = format!("expected {}", case.expected);
        if (cert.value - expected).abs() <= 1e-10 {
            LedgerEntry::pass(&id, citation, CheckKind::ClosedForm, params)
        } else {
            LedgerEntry::fail(
                &id,
                citation,
                CheckKind::ClosedForm,
                params,
                format!("solver value {:.15} differs from {}", cert.value, case.expected),
            )
        }
    });
    entries
}

// ---------------------------------------------------------------------------
// Property checks (shared between cargo tests and the ledger)
// ---------------------------------------------------------------------------

fn support_solve<E: Executor>(g: &Hypergraph, exec: &E) -> f64 {
    certified_value(g, 0, exec).value
}

/// Subgraphs never have a larger Lagrangian.
pub fn check_monotonicity<E: Executor>(samples: usize, seed: u64, exec: &E) -> Result<(), String> {
    let results: Vec<Option<String>> = exec.par_map(samples, |i| {
        let mut rng = derive_rng(seed, 0x4d4f4e4f, i as u64);
        let n = 3 + (crate::rng::below(&mut rng, 5) as usize); // 3..=7
        let g = crate::rng::random_graph(&mut rng, n, 3, 0.5);
        if g.edge_count() == 0 {
            return None;
        }
        let keep = crate::rng::below(&mut rng, g.edge_count() as u64) as usize;
        let mut h = g.clone();
        for _ in 0..g.edge_count() - keep.max(1) {
            let idx = crate::rng::below(&mut rng, h.edge_count() as u64) as usize;
            h = h.without_edge(idx);
        }
        let lg = support_solve(&g, &crate::exec::Sequential);
        let lh = support_solve(&h, &crate::exec::Sequential);
        if lh <= lg + tol::VALUE {
            None
        } else {
            Some(format!("subgraph value {lh} exceeds {lg} for {g}"))
        }
    });
    match results.into_iter().flatten().next() {
        None => Ok(()),
        Some(w) => Err(w),
    }
}

/// Clone-class averaging never decreases the value.
pub fn check_symmetrize(samples: usize, seed: u64) -> Result<(), String> {
    for i in 0..samples {
        let mut rng = derive_rng(seed, 0x53594d4d, i as u64);
        let n = 3 + (crate::rng::below(&mut rng, 5) as usize);
        let g = crate::rng::random_graph(&mut rng, n, 3, 0.5);
        let x = WeightVector::new(crate::rng::dirichlet_point(&mut rng, n))
            .expect("dirichlet point is feasible");
        let before = solver::evaluate(&g, &x).expect("dimensions match");
        let y = solver::symmetrize(&g, &x).expect("dimensions match");
        let after = solver::evaluate(&g, &y).expect("dimensions match");
        if after < before - 1e-12 {
            return Err(format!("averaging dropped {before} to {after} on {g}"));
        }
    }
    Ok(())
}

/// The growth transform never decreases the value along its iterates.
pub fn check_ascent_monotone(samples: usize, seed: u64) -> Result<(), String> {
    for i in 0..samples {
        let mut rng = derive_rng(seed, 0x41534345, i as u64);
        let n = 3 + (crate::rng::below(&mut rng, 5) as usize);
        let g = crate::rng::random_graph(&mut rng, n, 3, 0.6);
        let mut w = crate::rng::dirichlet_point(&mut rng, n);
        let mut value = solver::evaluate_raw(&g, &w);
        for _ in 0..200 {
            match solver::growth_step(&g, &w) {
                Some(next) => {
                    let next_value = solver::evaluate_raw(&g, &next);
                    if next_value < value - 1e-12 {
                        return Err(format!(
                            "growth step dropped {value} to {next_value} on {g}"
                        ));
                    }
                    value = next_value;
                    w = next;
                }
                None => break,
            }
        }
    }
    Ok(())
}

/// Analytic gradient against central finite differences.
pub fn check_gradient_fd(samples: usize, seed: u64) -> Result<(), String> {
    let h = 1e-6;
    for i in 0..samples {
        let mut rng = derive_rng(seed, 0x47524144, i as u64);
        let n = 3 + (crate::rng::below(&mut rng, 5) as usize);
        let g = crate::rng::random_graph(&mut rng, n, 3, 0.6);
        let w = crate::rng::dirichlet_point(&mut rng, n);
        let grad = solver::gradient(&g, &WeightVector::new(w.clone()).expect("feasible"))
            .expect("dimensions match");
        for j in 0..n {
            let mut up = w.clone();
            let mut dn = w.clone();
            up[j] += h;
            dn[j] -= h;
            let fd = (solver::evaluate_raw(&g, &up) - solver::evaluate_raw(&g, &dn)) / (2.0 * h);
            if (fd - grad[j]).abs() > 1e-6 {
                return Err(format!(
                    "component {j}: analytic {} vs central difference {fd} on {g}",
                    grad[j]
                ));
            }
        }
    }
    Ok(())
}

/// The uniform weighting is feasible, so `lambda(G) >= |E| / n^r`.
pub fn check_uniform_lower_bound<E: Executor>(
    samples: usize,
    seed: u64,
    exec: &E,
) -> Result<(), String> {
    let results: Vec<Option<String>> = exec.par_map(samples, |i| {
        let mut rng = derive_rng(seed, 0x554e4946, i as u64);
        let n = 3 + (crate::rng::below(&mut rng, 5) as usize);
        let g = crate::rng::random_graph(&mut rng, n, 3, 0.5);
        let uniform = solver::evaluate(&g, &WeightVector::uniform(n)).expect("dimensions match");
        let value = support_solve(&g, &crate::exec::Sequential);
        if value >= uniform - 1e-12 {
            None
        } else {
            Some(format!("value {value} below uniform bound {uniform} on {g}"))
        }
    });
    match results.into_iter().flatten().next() {
        None => Ok(()),
        Some(w) => Err(w),
    }
}

/// Whenever the certified optimum of a 3-graph puts weight >= 1/3 on a
/// vertex, the value is at most 2/27.
pub fn check_apex_bound<E: Executor>(
    random_samples: usize,
    seed: u64,
    exec: &E,
) -> Result<(), String> {
    let bound = 2.0 / 27.0 + tol::VALUE;
    let mut graphs: Vec<Hypergraph> = Vec::new();
    for n in 1..=5 {
        enumerate::enumerate_with(n, 3, None, false, &mut |g| graphs.push(g))
            .map_err(|e| format!("enumeration failed: {e}"))?;
    }
    let base = graphs.len();
    let results: Vec<Option<String>> = exec.par_map(base + random_samples, |i| {
        let g = if i < base {
            graphs[i].clone()
        } else {
            let mut rng = derive_rng(seed, 0x41504558, (i - base) as u64);
            let n = 4 + (crate::rng::below(&mut rng, 5) as usize); // 4..=8
            crate::rng::random_graph(&mut rng, n, 3, 0.5)
        };
        let cert = certified_value(&g, 0, &crate::exec::Sequential);
        let max_w = cert.weights.weights().iter().cloned().fold(0.0f64, f64::max);
        if max_w >= 1.0 / 3.0 - 1e-12 && cert.value > bound {
            Some(format!(
                "optimum with top weight {max_w} has value {} > 2/27 on {g}",
                cert.value
            ))
        } else {
            None
        }
    });
    match results.into_iter().flatten().next() {
        None => Ok(()),
        Some(w) => Err(w),
    }
}

/// Extension covers every pair of original vertices and obeys the size
/// formulas.
pub fn check_extension(samples: usize, seed: u64) -> Result<(), String> {
    for i in 0..samples {
        let mut rng = derive_rng(seed, 0x45585445, i as u64);
        let n = 3 + (crate::rng::below(&mut rng, 5) as usize);
        let g = crate::rng::random_graph(&mut rng, n, 3, 0.4);
        let uncovered = g.uncovered_pairs().len();
        let ext = g.extension().expect("r = 3");
        if ext.vertex_count() != g.vertex_count() + uncovered
            || ext.edge_count() != g.edge_count() + uncovered
        {
            return Err(format!("size formulas off for {g}"));
        }
        let still_uncovered = ext
            .uncovered_pairs()
            .into_iter()
            .any(|(a, b)| (a as usize) <= g.vertex_count() && (b as usize) <= g.vertex_count());
        if still_uncovered {
            return Err(format!("an original pair is uncovered in the extension of {g}"));
        }
    }
    Ok(())
}

/// Canonical form is isomorphism-invariant and idempotent.
pub fn check_canonical(samples: usize, seed: u64) -> Result<(), String> {
    for i in 0..samples {
        let mut rng = derive_rng(seed, 0x43414e4f, i as u64);
        let n = 2 + (crate::rng::below(&mut rng, 6) as usize); // 2..=7
        let g = crate::rng::random_graph(&mut rng, n, 3.min(n), 0.5);
        let canon = iso::canonical_form(&g);
        if iso::canonical_form(&canon) != canon {
            return Err(format!("canonical form not idempotent on {g}"));
        }
        let perm = crate::rng::random_permutation(&mut rng, n);
        let relabeled = g.relabel(&perm);
        if iso::canonical_form(&relabeled) != canon {
            return Err(format!("canonical form differs across relabeling of {g}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Suite sections
// ---------------------------------------------------------------------------

fn property_entries<E: Executor>(cfg: &SuiteConfig, exec: &E) -> Vec<LedgerEntry> {
    let seed = cfg.seed;
    vec![
        LedgerEntry::from_result(
            "prop-monotonicity",
            "subgraphs never increase the Lagrangian",
            CheckKind::Structural,
            format!("200 random pairs, n <= 7, seed {seed}"),
            check_monotonicity(200, seed, exec),
        ),
        LedgerEntry::from_result(
            "prop-symmetrization",
            "averaging clone-class weights never decreases the value",
            CheckKind::Structural,
            format!("200 random instances, seed {seed}"),
            check_symmetrize(200, seed),
        ),
        LedgerEntry::from_result(
            "prop-ascent-monotone",
            "growth-transform iterates are non-decreasing",
            CheckKind::Structural,
            format!("100 random instances, seed {seed}"),
            check_ascent_monotone(100, seed),
        ),
        LedgerEntry::from_result(
            "prop-gradient-fd",
            "analytic gradient matches central finite differences",
            CheckKind::Structural,
            format!("100 random points, h = 1e-6, seed {seed}"),
            check_gradient_fd(100, seed),
        ),
        LedgerEntry::from_result(
            "prop-uniform-lower-bound",
            "the uniform weighting lower-bounds the optimum",
            CheckKind::Structural,
            format!("200 random instances, seed {seed}"),
            check_uniform_lower_bound(200, seed, exec),
        ),
        LedgerEntry::from_result(
            "prop-apex-bound",
            "a 3-graph optimum with a weight >= 1/3 stays at or below 2/27",
            CheckKind::Structural,
            format!("all classes n <= 5 plus 500 random n <= 8, seed {seed}"),
            check_apex_bound(500, seed, exec),
        ),
        LedgerEntry::from_result(
            "prop-extension",
            "extension covers original pairs and obeys the size formulas",
            CheckKind::Structural,
            format!("100 random instances, seed {seed}"),
            check_extension(100, seed),
        ),
        LedgerEntry::from_result(
            "prop-canonical",
            "canonical labeling is idempotent and isomorphism-invariant",
            CheckKind::Structural,
            format!("100 random instances, seed {seed}"),
            check_canonical(100, seed),
        ),
    ]
}

fn envelope_triangle_entries(level: SuiteLevel) -> Vec<LedgerEntry> {
    let h = match level {
        SuiteLevel::Quick => 1e-3,
        SuiteLevel::Full => 1e-4,
    };
    let cap = 2.0 / 27.0 + tol::VALUE;
    let citation = "triangle-free envelope stays below 2/27, peaking at (2/3, 1/3)";
    let mut out = Vec::new();
    for k in 3..=8u32 {
        let id = format!("env-f5-k{k}");
        let params = format!("grid spacing {h}, domain a,c >= 0, a+c <= 1, c <= 1/3");
        let steps = (1.0 / h) as usize;
        let mut best = f64::MIN;
        let mut best_at = (0.0, 0.0);
        for ia in 0..=steps {
            let a = ia as f64 * h;
            let c_max = (1.0 - a).min(1.0 / 3.0);
            let c_steps = (c_max / h) as usize;
            for ic in 0..=c_steps {
                let c = ic as f64 * h;
                let v = envelope_f5(a, c, k).expect("grid point is in the domain");
                if v > best {
                    best = v;
                    best_at = (a, c);
                }
            }
        }
        // Exact value at the peak: 2k / (27(k+1)).
        let peak = envelope_f5_exact(
            &Rational::from_ratio(2, 3),
            &Rational::from_ratio(1, 3),
            k,
        );
        let expected_peak = Rational::from_ratio(2 * k as u64, 27 * (k as u64 + 1));
        let ok = best <= cap
            && (best_at.0 - 2.0 / 3.0).abs() <= 2.0 * h
            && (best_at.1 - 1.0 / 3.0).abs() <= 2.0 * h
            && peak == expected_peak;
        if ok {
            out.push(LedgerEntry::pass(&id, citation, CheckKind::GridInequality, params));
        } else {
            out.push(LedgerEntry::fail(
                &id,
                citation,
                CheckKind::GridInequality,
                params,
                format!("max {best} at ({}, {})", best_at.0, best_at.1),
            ));
        }
    }
    out
}

fn envelope_good_entries(level: SuiteLevel) -> Vec<LedgerEntry> {
    let h = match level {
        SuiteLevel::Quick => 1e-4,
        SuiteLevel::Full => 1e-5,
    };
    let mut out = Vec::new();

    // t = 3: the cubic with the exact 1/16 head; its maximum over [0,1] is
    // attained at a = 0 with value 2/25, the other candidate being the
    // larger critical point x2 = (196 + sqrt(7600)) / 321.
    {
        let m = clique_constant(3); // 2/25
        let mf = m.to_f64();
        let steps = (1.0 / h) as usize;
        let mut best = f64::MIN;
        let mut best_at = 0.0;
        for i in 0..=steps {
            let a = i as f64 * h;
            let v = envelope_good(a, mf).expect("grid point in domain");
            if v > best {
                best = v;
                best_at = a;
            }
        }
        let x2 = (196.0 + Float::sqrt(7600.0)) / 321.0;
        let g_x2 = envelope_good(x2, mf).expect("x2 in domain");
        let g_zero = envelope_good_exact(&Rational::zero(), &m);
        // derivative sign pattern: down, up, down around the two roots
        let x1 = (196.0 - Float::sqrt(7600.0)) / 321.0;
        let deriv = |a: f64| (-321.0 * a * a + 392.0 * a - 96.0) / 400.0;
        let mut signs_ok = true;
        for i in 0..=steps {
            let a = i as f64 * h;
            if (a - x1).abs() < 2.0 * h || (a - x2).abs() < 2.0 * h {
                continue;
            }
            let d = deriv(a);
            let expect_up = a > x1 && a < x2;
            if expect_up != (d > 0.0) {
                signs_ok = false;
                break;
            }
        }
        let ok = best <= mf + tol::VALUE
            && best_at <= 2.0 * h
            && g_x2 <= mf + tol::VALUE
            && g_zero == m
            && signs_ok;
        let citation = "good-graph envelope peaks at the complete block value 2/25";
        let params = format!("t = 3, grid spacing {h}");
        if ok {
            out.push(LedgerEntry::pass("env-good-t3", citation, CheckKind::GridInequality, params));
        } else {
            out.push(LedgerEntry::fail(
                "env-good-t3",
                citation,
                CheckKind::GridInequality,
                params,
                format!("max {best} at {best_at}, g(x2) = {g_x2}"),
            ));
        }
    }

    // t >= 4: the relaxed cubic's maximum over [0,1] is m, at a = 0, because
    // m >= 5/49 beats the other endpoint value 1/12; the derivative changes
    // sign once, at 6m/(6m+1).
    for t in 4..=5u32 {
        let m = clique_constant(t);
        let mf = m.to_f64();
        let steps = (1.0 / h) as usize;
        let mut best = f64::MIN;
        let mut best_at = 0.0;
        for i in 0..=steps {
            let a = i as f64 * h;
            let v = envelope_good_relaxed(a, mf).expect("grid point in domain");
            if v > best {
                best = v;
                best_at = a;
            }
        }
        let turn = 6.0 * mf / (6.0 * mf + 1.0);
        let deriv = |a: f64| -(0.5 + 3.0 * mf) * a * a + (6.0 * mf + 0.5) * a - 3.0 * mf;
        let mut signs_ok = true;
        for i in 0..=steps {
            let a = i as f64 * h;
            if (a - turn).abs() < 2.0 * h || a > 1.0 - 2.0 * h {
                continue;
            }
            let expect_up = a > turn;
            if expect_up != (deriv(a) > 0.0) {
                signs_ok = false;
                break;
            }
        }
        let ok = best <= mf + tol::VALUE && best_at <= 2.0 * h && mf >= 5.0 / 49.0 - 1e-15
            && signs_ok;
        let id = format!("env-good-t{t}");
        let citation = "relaxed good-graph envelope never exceeds the complete block value";
        let params = format!("t = {t}, m = {m}, grid spacing {h}");
        if ok {
            out.push(LedgerEntry::pass(&id, citation, CheckKind::GridInequality, params));
        } else {
            out.push(LedgerEntry::fail(
                &id,
                citation,
                CheckKind::GridInequality,
                params,
                format!("max {best} at {best_at}"),
            ));
        }
    }
    out
}

fn envelope_union_entries(level: SuiteLevel) -> Vec<LedgerEntry> {
    let h = match level {
        SuiteLevel::Quick => 1e-4,
        SuiteLevel::Full => 1e-5,
    };
    let mut out = Vec::new();
    for s in 3..=20u32 {
        let steps = (0.5 / h) as usize;
        let mut best = f64::MIN;
        let mut best_at = 0.0;
        for i in 0..=steps {
            let a = i as f64 * h;
            let v = envelope_union(a, s).expect("grid point in domain");
            if v > best {
                best = v;
                best_at = a;
            }
        }
        let closed_form = envelope_union_max(s);
        let argmax = envelope_union_argmax(s);
        let m = union_constant(s).to_f64();
        let deriv = |a: f64| (6.0 - 4.0 * m) * a * a + (4.0 * m - 6.0) * a + (1.0 - m);
        let mut signs_ok = true;
        for i in 0..=steps {
            let a = i as f64 * h;
            if (a - argmax).abs() < 2.0 * h {
                continue;
            }
            let expect_up = a < argmax;
            if expect_up != (deriv(a) > 0.0) {
                signs_ok = false;
                break;
            }
        }
        let ok =
            (best - closed_form).abs() <= 1e-6 && (best_at - argmax).abs() <= 2.0 * h && signs_ok;
        let id = format!("env-union-s{s}");
        let citation = "union envelope maximum matches (s-1)/(6 sqrt(s^2+4s-9))";
        let params = format!("s = {s}, grid spacing {h}");
        if ok {
            out.push(LedgerEntry::pass(&id, citation, CheckKind::GridInequality, params));
        } else {
            out.push(LedgerEntry::fail(
                &id,
                citation,
                CheckKind::GridInequality,
                params,
                format!("grid max {best} at {best_at}, closed form {closed_form} at {argmax}"),
            ));
        }
    }
    out
}

fn quartic_entries() -> Vec<LedgerEntry> {
    let mut out = Vec::new();
    // The quartic is the exact difference of the squared comparison, so
    // verify the polynomial identity at enough integer points, then its
    // positivity on the claimed range, then the inequality it certifies.
    let identity_ok = (0..=10i64).all(|s| {
        let lhs = (s * s - 2 * s + 1) * (s * s + 8 * s + 16) * (s * s + 8 * s + 16);
        let rhs = (s * s + 5 * s + 6) * (s * s + 5 * s + 6) * (s * s + 4 * s - 9);
        rhs - lhs == quartic_gap(s)
    });
    let positive = (3..=100i64).all(|s| quartic_gap(s) > 0);
    let at3 = quartic_gap(3) == 1196;
    let outcome = if identity_ok && positive && at3 {
        Ok(())
    } else {
        Err(format!(
            "identity {identity_ok}, positivity {positive}, value at 3 is {}",
            quartic_gap(3)
        ))
    };
    out.push(LedgerEntry::from_result(
        "env-quartic",
        "the quartic gap polynomial is positive for s >= 3",
        CheckKind::ClosedForm,
        "identity on 0..=10, positivity on 3..=100".to_string(),
        outcome,
    ));
    // The inequality the quartic certifies: the union envelope maximum stays
    // below the next complete-graph value.
    let mut bad: Option<String> = None;
    for s in 3..=100u32 {
        let sf = s as f64;
        let lhs = envelope_union_max(s);
        let rhs = (sf + 3.0) * (sf + 2.0) / (6.0 * (sf + 4.0) * (sf + 4.0));
        if lhs > rhs {
            bad = Some(format!("s = {s}: {lhs} > {rhs}"));
            break;
        }
    }
    out.push(LedgerEntry::from_result(
        "env-union-vs-clique",
        "union envelope maximum stays below the next complete-graph value",
        CheckKind::ClosedForm,
        "s in 3..=100".to_string(),
        match bad {
            None => Ok(()),
            Some(w) => Err(w),
        },
    ));
    out
}

fn floor_entries() -> Vec<LedgerEntry> {
    let mut out = Vec::new();
    let f5 = constructions::generalized_triangle();
    let c33 = constructions::linear_cycle(3).expect("t = 3 is valid");
    let cases = [
        ("floor-F5", f5, Rational::from_ratio(3, 8)),
        ("floor-C3_3", c33, Rational::from_ratio(12, 25)),
    ];
    for (id, f, expected) in cases {
        let outcome = match perfectness_floor(&f) {
            Ok((_, v)) if v == expected => Ok(()),
            Ok((_, v)) => Err(format!("got {v}, expected {expected}")),
            Err(e) => Err(format!("{e}")),
        };
        out.push(LedgerEntry::from_result(
            id,
            "scaled Lagrangian of the complete graph one vertex short",
            CheckKind::ClosedForm,
            format!("expected {expected}"),
            outcome,
        ));
    }
    // Every gallery pattern with at least r+1 vertices admits the floor; the
    // freeness assertion inside never fires by vertex count.
    let mut gallery: Vec<(String, Hypergraph)> = Vec::new();
    for c in [
        Construction::GeneralizedTriangle,
        Construction::Cycle { t: 3 },
        Construction::Cycle { t: 4 },
        Construction::Path { t: 2 },
        Construction::Book { t: 3 },
        Construction::Paired { s: 2 },
        Construction::Complete { t: 4, r: 3 },
        Construction::Fano,
    ] {
        gallery.push((c.name(), c.build().expect("gallery builds")));
    }
    let mut witness = None;
    for (name, g) in &gallery {
        if g.vertex_count() >= g.uniformity() + 1 {
            if let Err(e) = perfectness_floor(g) {
                witness = Some(format!("{name}: {e}"));
                break;
            }
        }
    }
    out.push(LedgerEntry::from_result(
        "floor-gallery",
        "the floor construction applies to every gallery pattern with t > r",
        CheckKind::Structural,
        "gallery patterns".to_string(),
        match witness {
            None => Ok(()),
            Some(w) => Err(w),
        },
    ));
    out
}

fn dense_small_entries<E: Executor>(exec: &E) -> Vec<LedgerEntry> {
    // One enumeration pass powers both facts: dense graphs cover pairs, and
    // dense 3-graphs on >= 4 vertices contain two edges sharing a pair.
    let pattern = Hypergraph::new(3, 4, vec![vec![1, 2, 3], vec![1, 2, 4]]).expect("valid");
    let mut cover_witness = None;
    let mut pattern_witness = None;
    for n in 2..=5 {
        let mut graphs = Vec::new();
        if enumerate::enumerate_with(n, 3, None, false, &mut |g| graphs.push(g)).is_err() {
            continue;
        }
        let verdicts: Vec<(usize, bool)> = exec.par_map(graphs.len(), |i| {
            let opts = SolveOptions::support_enum_only(n);
            (i, solver::is_dense(&graphs[i], &opts, &crate::exec::Sequential).dense)
        });
        for (i, dense) in verdicts {
            if !dense {
                continue;
            }
            let g = &graphs[i];
            if !g.covers_pairs() && cover_witness.is_none() {
                cover_witness = Some(format!("dense graph without covered pairs: {g}"));
            }
            if n >= 4
                && pattern_witness.is_none()
                && !matches!(iso::contains(g, &pattern), Ok(Some(_)))
            {
                pattern_witness = Some(format!("dense graph without a shared pair: {g}"));
            }
        }
    }
    vec![
        LedgerEntry::from_result(
            "dense-covers-pairs",
            "dense graphs cover pairs",
            CheckKind::Structural,
            "all classes, n <= 5".to_string(),
            match cover_witness {
                None => Ok(()),
                Some(w) => Err(w),
            },
        ),
        LedgerEntry::from_result(
            "dense-two-edge-pattern",
            "dense 3-graphs on >= 4 vertices contain two edges sharing a pair",
            CheckKind::Structural,
            "all classes, 4 <= n <= 5".to_string(),
            match pattern_witness {
                None => Ok(()),
                Some(w) => Err(w),
            },
        ),
    ]
}

fn fano_entries<E: Executor>(exec: &E) -> Vec<LedgerEntry> {
    let fano = constructions::fano();
    let covers = fano.covers_pairs();
    let opts = SolveOptions::support_enum_only(7);
    let verdict = solver::is_dense(&fano, &opts, exec);
    vec![
        LedgerEntry::from_result(
            "fano-covers-pairs",
            "the Fano plane covers pairs",
            CheckKind::Structural,
            "7 points, 7 lines".to_string(),
            if covers { Ok(()) } else { Err("a pair is uncovered".to_string()) },
        ),
        LedgerEntry::from_result(
            "fano-not-dense",
            "the Fano plane is not dense",
            CheckKind::Structural,
            "7 points, 7 lines".to_string(),
            if verdict.dense {
                Err("classified dense".to_string())
            } else {
                Ok(())
            },
        ),
    ]
}

fn search_entries<E: Executor>(cfg: &SuiteConfig, exec: &E) -> Vec<LedgerEntry> {
    let max_n = match cfg.level {
        SuiteLevel::Quick => 5,
        SuiteLevel::Full => 6,
    };
    let mut out = Vec::new();

    // Triangle-family searches: bound 2/27 at every n; at n = 5 the maximum
    // is exactly 1/16 and every achiever contains the complete 4-graph.
    let f5 = ForbiddenFamily::single(constructions::generalized_triangle(), Some("F5".to_string()));
    for n in 4..=max_n {
        let mut params = SearchParams::new(n, 3, Some(f5.clone()));
        params.bound = Some(Rational::from_ratio(2, 27));
        params.seed = cfg.seed;
        let id = format!("search-F5-n{n}");
        match search::max_lagrangian(&params, exec) {
            Ok(report) => {
                let bound_ok = report.bound.as_ref().map(|b| b.satisfied).unwrap_or(false);
                let mut ok = bound_ok;
                let mut detail = format!(
                    "max {} over {} maximal classes",
                    report.max_lambda, report.maximal_free
                );
                if n == 5 {
                    let k43 = constructions::complete(4, 3).expect("valid");
                    let value_ok = (report.max_lambda - 1.0 / 16.0).abs() <= tol::ACHIEVER;
                    let structure_ok = search::verify_extremal_structure(&report, &k43);
                    ok = ok && value_ok && structure_ok;
                    detail += &format!(", structure {}", structure_ok);
                }
                out.push(LedgerEntry::from_result(
                    &id,
                    "triangle-free maximum stays at or below 2/27",
                    CheckKind::SearchBound,
                    format!("n = {n}, seed {}", cfg.seed),
                    if ok { Ok(()) } else { Err(detail) },
                ));
            }
            Err(e) => out.push(LedgerEntry::fail(
                &id,
                "triangle-free maximum stays at or below 2/27",
                CheckKind::SearchBound,
                format!("n = {n}"),
                format!("{e}"),
            )),
        }
    }

    // Cycle-family searches: the maximum is 2/25, only on graphs containing
    // the complete 5-graph, with at least one non-achieving maximal class.
    let c33 = ForbiddenFamily::single(
        constructions::linear_cycle(3).expect("t = 3"),
        Some("C3_3".to_string()),
    );
    for n in 5..=max_n {
        let mut params = SearchParams::new(n, 3, Some(c33.clone()));
        params.bound = Some(Rational::from_ratio(2, 25));
        params.seed = cfg.seed;
        let id = format!("search-C3_3-n{n}");
        match search::max_lagrangian(&params, exec) {
            Ok(report) => {
                let k53 = constructions::complete(5, 3).expect("valid");
                let value_ok = (report.max_lambda - 0.08).abs() <= tol::ACHIEVER;
                let structure_ok = search::verify_extremal_structure(&report, &k53);
                let nonvacuous =
                    n < 6 || report.maximal_free > report.achievers.len() as u64;
                let ok = value_ok && structure_ok && nonvacuous;
                out.push(LedgerEntry::from_result(
                    &id,
                    "cycle-free maximum is 2/25, only above the complete 5-graph",
                    CheckKind::SearchBound,
                    format!("n = {n}, seed {}", cfg.seed),
                    if ok {
                        Ok(())
                    } else {
                        Err(format!(
                            "max {}, structure {structure_ok}, non-achievers present {nonvacuous}",
                            report.max_lambda
                        ))
                    },
                ));
            }
            Err(e) => out.push(LedgerEntry::fail(
                &id,
                "cycle-free maximum is 2/25, only above the complete 5-graph",
                CheckKind::SearchBound,
                format!("n = {n}"),
                format!("{e}"),
            )),
        }
    }

    // Complete-block lemma: dense triangle-free graphs containing the
    // complete 4-graph stay at or below 1/16. Density is reached through the
    // value-preserving reduction.
    {
        let k43 = constructions::complete(4, 3).expect("valid");
        let mut checked = 0usize;
        let mut witness = None;
        for n in 4..=max_n {
            let maximal = match enumerate::maximal_free(n, 3, &f5, false) {
                Ok(m) => m,
                Err(e) => {
                    witness = Some(format!("{e}"));
                    break;
                }
            };
            for g in maximal {
                if !matches!(iso::contains(&g, &k43), Ok(Some(_))) {
                    continue;
                }
                let opts = SolveOptions::support_enum_only(n);
                let reduced = solver::dense_reduction(&g, &opts, exec);
                if !matches!(iso::contains(&reduced, &k43), Ok(Some(_))) {
                    continue;
                }
                checked += 1;
                let opts = SolveOptions::support_enum_only(reduced.vertex_count());
                let cert = solver::lagrangian(&reduced, &opts, exec);
                if cert.value > 1.0 / 16.0 + tol::VALUE {
                    witness = Some(format!("value {} on {reduced}", cert.value));
                }
            }
        }
        let outcome = match witness {
            Some(w) => Err(w),
            None if checked == 0 => Err("no qualifying graph found".to_string()),
            None => Ok(()),
        };
        out.push(LedgerEntry::from_result(
            "k43-lemma",
            "dense triangle-free graphs containing the complete 4-graph stay at 1/16",
            CheckKind::SearchBound,
            format!("n <= {max_n}, {checked} graphs checked"),
            outcome,
        ));
    }
    out
}

fn closing_family_entries<E: Executor>(exec: &E) -> Vec<LedgerEntry> {
    let mut out = Vec::new();
    for r in 3..=5usize {
        let id = format!("closing-family-r{r}");
        let citation = "closing family is well-formed and avoided by the core star";
        let outcome = (|| -> Result<(), String> {
            let fam = constructions::closing_family(r).map_err(|e| format!("{e}"))?;
            if fam.members().len() != r - 2 {
                return Err(format!("expected {} members, got {}", r - 2, fam.members().len()));
            }
            for m in fam.members() {
                if m.uniformity() != r || m.edge_count() != 3 {
                    return Err(format!("malformed member {m}"));
                }
                // the two base edges share r-1 vertices
                let e1 = &m.edges()[0];
                let e2 = &m.edges()[1];
                let shared = e1.iter().filter(|v| e2.contains(v)).count();
                if shared != r - 1 {
                    return Err(format!("base edges share {shared} vertices in {m}"));
                }
            }
            if r == 3 && fam.members()[0] != constructions::generalized_triangle() {
                return Err("3-uniform member is not the generalized triangle".to_string());
            }
            // The core star avoids the family, and its value stays below the
            // 2 / r^r target the family is designed around.
            let n = r + 3;
            let star = constructions::core_star(n, r).map_err(|e| format!("{e}"))?;
            if !iso::is_free(&star, &fam).map_err(|e| format!("{e}"))? {
                return Err(format!("core star on {n} vertices contains a member"));
            }
            let opts = SolveOptions::support_enum_only(n);
            let cert = solver::lagrangian(&star, &opts, exec);
            let target = 2.0 / (r as f64).powi(r as i32);
            if cert.value > target + tol::VALUE {
                return Err(format!("core star value {} above {target}", cert.value));
            }
            Ok(())
        })();
        out.push(LedgerEntry::from_result(
            &id,
            citation,
            CheckKind::Structural,
            format!("r = {r}"),
            outcome,
        ));
    }
    out
}

fn skipped_entries() -> Vec<LedgerEntry> {
    vec![
        LedgerEntry::skipped(
            "skipped-density-suprema",
            "Lagrangian densities are suprema over all vertex counts",
            "not desk-verifiable: covered by the finite-n bounds, envelopes, and floors above",
        ),
        LedgerEntry::skipped(
            "skipped-union-perfectness",
            "perfectness of the book-plus-perfect-graph union",
            "asymptotic statement: its proof inequalities are checked by env-union-* and \
             env-quartic; the supremum itself is out of desk range",
        ),
        LedgerEntry::skipped(
            "skipped-closing-family-bound",
            "the 2/r^r bound for closing families with r >= 4",
            "the inductive bound is represented by construction and freeness checks \
             (closing-family-r*) plus the 3-uniform searches; r >= 4 search space is out of range",
        ),
        LedgerEntry::skipped(
            "skipped-long-cycles",
            "cycle-free bounds for cycles longer than 3",
            "requires complete blocks on 2t-2 >= 6 vertices inside searches past desk scale; \
             covered by the good-pair predicates and env-good-t4/t5",
        ),
    ]
}

/// Runs the whole ledger. Entries arrive in a fixed order; each entry is
/// independent, so sections can run on any executor without changing output.
pub fn run_suite<E: Executor>(cfg: &SuiteConfig, exec: &E) -> Vec<LedgerEntry> {
    let sections: Vec<Box<dyn Fn() -> Vec<LedgerEntry> + Sync + '_>> = vec![
        Box::new(|| run_goldens(&cfg.goldens, exec)),
        Box::new(|| property_entries(cfg, exec)),
        Box::new(|| envelope_triangle_entries(cfg.level)),
        Box::new(|| envelope_good_entries(cfg.level)),
        Box::new(|| envelope_union_entries(cfg.level)),
        Box::new(quartic_entries),
        Box::new(floor_entries),
        Box::new(|| dense_small_entries(exec)),
        Box::new(|| fano_entries(exec)),
        Box::new(|| search_entries(cfg, exec)),
        Box::new(|| closing_family_entries(exec)),
        Box::new(skipped_entries),
    ];
    let groups: Vec<Vec<LedgerEntry>> = exec.par_map(sections.len(), |i| sections[i]());
    groups.into_iter().flatten().collect()
}

/// True when nothing failed (skipped entries do not fail the suite).
pub fn all_passed(entries: &[LedgerEntry]) -> bool {
    entries.iter().all(|e| e.status != Status::Fail)
}
