//! Spectral analysis of the Laplacian on differential forms over
//! warped-product ends.
//!
//! The end carries a metric f(t)dt² + g(t)dθ² on (c, ∞) × N with
//! f = e^{-2(a+1)t}, g = e^{-2bt}. The form Laplacian restricted to the
//! end splits into one-dimensional Sturm–Liouville problems indexed by
//! the eigenvalues of the cross-section Laplacian. This crate builds
//! those reduced operators symbolically ([`reduction`]), classifies
//! their essential spectrum in closed form ([`classifier`]), and
//! cross-checks the closed forms against finite-difference eigensolvers
//! on truncated intervals ([`numerics`]).

pub mod classifier;
pub mod model;
pub mod numerics;
pub mod reduction;
pub mod scalar;
pub mod symbolic;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("incomplete metric: a = {a} > -1 (the end metric is complete iff a <= -1)")]
    IncompleteMetric { a: f64 },
    #[error("{0}")]
    InvalidInput(String),
    #[error("the coupled pair requires lambda > 0: its construction divides by sqrt(lambda)")]
    ZeroLambdaCoupling,
    #[error(
        "b = 0 needs the cross-section eigenvalue lists for degrees {degrees:?}: \
         the spectrum bottom is min over those eigenvalues"
    )]
    MissingEigenvalues { degrees: Vec<i64> },
    #[error("potential overflow at x = {x}: |V| = {v:.3e} exceeds 1e12")]
    Overflow { x: f64, v: f64 },
    #[error("sample support [{lo}, {hi}] reaches the grid boundary")]
    SupportTouchesBoundary { lo: f64, hi: f64 },
    #[error("truncation sweep inconclusive: {0}")]
    Inconclusive(String),
}
