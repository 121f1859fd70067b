//! Desk-scale extremal computations: the maximum Lagrangian over F-free
//! graphs on `[n]`, the graphs achieving it, and tiny Turán numbers.
//!
//! Only maximal F-free graphs are solved: every F-free graph extends to a
//! maximal one, and the Lagrangian is monotone under subgraphs, so the
//! maximum is attained there.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::enumerate::{self, SearchError};
use crate::exec::Executor;
use crate::hypergraph::{ForbiddenFamily, Hypergraph};
use crate::iso;
use crate::rational::Rational;
use crate::solver::{self, SolveOptions};
use crate::tol;

/// Inputs of an extremal search.
#[derive(Debug, Clone)]
pub struct SearchParams {
    pub n: usize,
    pub r: usize,
    /// `None` forbids nothing (sanity mode: the maximum is the complete graph).
    pub family: Option<ForbiddenFamily>,
    pub family_name: String,
    /// Optional upper bound the maximum is compared against.
    pub bound: Option<Rational>,
    pub compute_turan: bool,
    pub seed: u64,
    pub force: bool,
}

impl SearchParams {
    pub fn new(n: usize, r: usize, family: Option<ForbiddenFamily>) -> Self {
        let family_name = family
            .as_ref()
            .map(|f| f.name().unwrap_or("unnamed").to_string())
            .unwrap_or_else(|| "none".to_string());
        SearchParams {
            n,
            r,
            family,
            family_name,
            bound: None,
            compute_turan: false,
            seed: 0,
            force: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundCheck {
    pub bound: Rational,
    pub satisfied: bool,
}

/// Everything a search run reports. Serialization is stable: identical
/// parameters and seed give byte-identical reports for any worker count.
#[derive(Debug, Clone)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchReport {
    pub schema_version: u32,
    pub n: usize,
    pub r: usize,
    pub family: String,
    /// Free canonical graphs visited by the augmentation.
    pub enumerated: u64,
    pub maximal_free: u64,
    /// Enumerated-to-maximal reduction ratio.
    pub reduction_factor: f64,
    pub max_lambda: f64,
    pub max_lambda_exact: Option<Rational>,
    /// r! times the maximum, the density normalization.
    pub max_lambda_scaled: f64,
    pub achiever_tolerance: f64,
    pub achievers: Vec<Hypergraph>,
    pub bound: Option<BoundCheck>,
    pub turan_number: Option<u64>,
    pub seed: u64,
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

fn factorial(r: usize) -> f64 {
    (1..=r).map(|k| k as f64).product()
}

/// Runs the full pipeline: enumerate free graphs, filter to maximal ones,
/// solve each by support enumeration, and aggregate.
pub fn max_lagrangian<E: Executor>(
    params: &SearchParams,
    exec: &E,
) -> Result<SearchReport, SearchError> {
    let mut free: Vec<Hypergraph> = Vec::new();
    enumerate::enumerate_with(params.n, params.r, params.family.as_ref(), params.force, &mut |g| {
        free.push(g)
    })?;
    let enumerated = free.len() as u64;

    let universe = enumerate::all_edges(params.n, params.r);
    let maximal: Vec<Hypergraph> = {
        let flags: Vec<bool> = exec.par_map(free.len(), |i| {
            let g = &free[i];
            universe.iter().all(|e| {
                if g.has_edge(e) {
                    return true;
                }
                let extended = g.with_edge(e).expect("absent edge");
                match &params.family {
                    Some(fam) => !iso::is_free(&extended, fam).unwrap_or(true),
                    // nothing forbidden: only the complete graph is maximal
                    None => false,
                }
            })
        });
        free.into_iter().zip(flags).filter(|(_, keep)| *keep).map(|(g, _)| g).collect()
    };

    let mut opts = SolveOptions::support_enum_only(params.n);
    opts.seed = params.seed;
    let values: Vec<(f64, Option<Rational>)> = exec.par_map(maximal.len(), |i| {
        let cert = solver::lagrangian(&maximal[i], &opts, &crate::exec::Sequential);
        (cert.value, cert.exact.map(|e| e.value))
    });

    let mut max_lambda = 0.0f64;
    for (v, _) in &values {
        if *v > max_lambda {
            max_lambda = *v;
        }
    }
    let mut achievers: Vec<Hypergraph> = Vec::new();
    let mut max_exact: Option<Rational> = None;
    for (g, (v, exact)) in maximal.iter().zip(&values) {
        if *v >= max_lambda - tol::ACHIEVER {
            achievers.push(g.clone());
            if let Some(e) = exact {
                match &max_exact {
                    Some(cur) if cur >= e => {}
                    _ => max_exact = Some(e.clone()),
                }
            }
        }
    }
    achievers.sort();

    let turan_number = if params.compute_turan {
        Some(maximal.iter().map(|g| g.edge_count() as u64).max().unwrap_or(0))
    } else {
        None
    };

    let bound = params.bound.as_ref().map(|b| BoundCheck {
        bound: b.clone(),
        satisfied: max_lambda <= b.to_f64() + tol::VALUE,
    });

    let maximal_free = maximal.len() as u64;
    Ok(SearchReport {
        schema_version: REPORT_SCHEMA_VERSION,
        n: params.n,
        r: params.r,
        family: params.family_name.clone(),
        enumerated,
        maximal_free,
        reduction_factor: if maximal_free > 0 {
            enumerated as f64 / maximal_free as f64
        } else {
            0.0
        },
        max_lambda,
        max_lambda_exact: max_exact,
        max_lambda_scaled: factorial(params.r) * max_lambda,
        achiever_tolerance: tol::ACHIEVER,
        achievers,
        bound,
        turan_number,
        seed: params.seed,
    })
}

/// Maximum edge count of an F-free r-graph on `[n]`.
pub fn turan_number(
    n: usize,
    r: usize,
    family: &ForbiddenFamily,
    force: bool,
) -> Result<u64, SearchError> {
    let maximal = enumerate::maximal_free(n, r, family, force)?;
    Ok(maximal.iter().map(|g| g.edge_count() as u64).max().unwrap_or(0))
}

/// True when every achiever in the report contains `pattern`.
pub fn verify_extremal_structure(report: &SearchReport, pattern: &Hypergraph) -> bool {
    report
        .achievers
        .iter()
        .all(|g| matches!(iso::contains(g, pattern), Ok(Some(_))))
}

/// Text summary of a report, one line per field group.
pub fn summarize(report: &SearchReport) -> String {
    let exact = report
        .max_lambda_exact
        .as_ref()
        .map(|r| format!(" = {r}"))
        .unwrap_or_default();
    let mut s = format!(
        "search n={} r={} forbid={}\n  free classes: {}  maximal: {} (reduction x{:.1})\n  \
         max lambda: {:.12}{}  ({}! x lambda = {:.12})\n  achievers: {}",
        report.n,
        report.r,
        report.family,
        report.enumerated,
        report.maximal_free,
        report.reduction_factor,
        report.max_lambda,
        exact,
        report.r,
        report.max_lambda_scaled,
        report.achievers.len(),
    );
    if let Some(b) = &report.bound {
        s += &format!(
            "\n  bound {}: {}",
            b.bound,
            if b.satisfied { "satisfied" } else { "VIOLATED" }
        );
    }
    if let Some(t) = report.turan_number {
        s += &format!("\n  turan number: {t}");
    }
    s
}
