//! Pinned numeric tolerances.
//!
//! Every comparison threshold used by the solver, the search, and the
//! verification ledger is defined here. With at most a few hundred monomials
//! per polynomial, f64 rounding stays far below all of these.

/// Feasibility slack for weight vectors: |sum - 1| must stay below this.
pub const SIMPLEX_SUM: f64 = 1e-12;

/// First-order (stationarity) residual accepted at a reported optimum.
pub const STATIONARITY: f64 = 1e-8;

/// Tolerance for comparing Lagrangian values against known rationals.
pub const VALUE: f64 = 1e-9;

/// Gap below which an edge removal is considered value-preserving when
/// classifying a graph as dense.
pub const DENSE_GAP: f64 = 1e-7;

/// Achievers within this distance of the search maximum are reported as
/// extremal. Coarser than `VALUE` so equality cases survive ascent noise.
pub const ACHIEVER: f64 = 1e-7;

/// Weights below this are snapped to zero when the support is extracted.
pub const SUPPORT_EPS: f64 = 1e-12;

/// Denominator cap for continued-fraction reconstruction of rational optima.
pub const RATIONAL_DEN_CAP: u64 = 10_000;

/// Convergence target for the ascent stationarity residual.
pub const ASCENT_TOL: f64 = 1e-12;
