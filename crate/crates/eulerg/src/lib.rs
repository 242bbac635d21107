//! # eulerg
//!
//! Fundamental systems of solutions for the generalized Euler eigenvalue
//! equation, built on Meijer G-functions evaluated by Mellin–Barnes residue
//! summation — including the non-generic parameter regimes where the
//! integrand has higher-order poles and the solutions carry `ln ζ` terms —
//! plus the particular solution of the nonhomogeneous Euler equation.
//!
//! The equation in question is the equidimensional eigenvalue problem
//!
//! ```text
//! z^{-N} (z d/dz − λ_1) ⋯ (z d/dz − λ_N) y(z) = μ y(z),
//! ```
//!
//! which the substitution ζ = μ(z/N)^N turns into a Meijer-type equation
//! `[Π_j (θ − λ_j/N) − ζ] η = 0` with θ = ζ d/dζ. A fundamental system is
//! assembled from residue sums of gamma-product integrands; when exponents
//! coincide mod ℤ the poles confluesce and Laurent-jet arithmetic extracts
//! the residues at their full multiplicity, producing the log-power series
//! solutions directly.
//!
//! ## Layout
//!
//! - [`gamma`] — complex log-gamma / polygamma / Pochhammer kernels
//! - [`jet`] — truncated Laurent expansions and residue extraction
//! - [`series`] — symbolic log-power series and the θ-calculus
//! - [`hypergeo`] — generalized hypergeometric series `pFq` and their
//!   generic fundamental systems
//! - [`meijer`] — Meijer G evaluation and the log-power fundamental
//!   systems of `G^{m,0}_{0,q}`
//! - [`euler`] — the generalized Euler eigenvalue problem in the `z`
//!   variable, with Bessel I/K cross-check oracles
//! - [`nonhomo`] — the nonhomogeneous Euler equation (homogeneous basis,
//!   indicial polynomial, particular solution by nested quadrature)
//! - [`verify`] — seeded, deterministic invariant suites (also exposed by
//!   the `eulerg verify` subcommand)
//!
//! ## Quick example
//!
//! ```
//! use eulerg::euler::{EulerProblem, euler_fundamental_system, euler_eval};
//! use eulerg::Cplx;
//!
//! // N = 1, λ₁ = 0, μ = 1:  y(z) = e^{μz}
//! let problem = EulerProblem::new(vec![Cplx::new(0.0, 0.0)], Cplx::new(1.0, 0.0)).unwrap();
//! let sys = euler_fundamental_system(&problem, 24);
//! let y = euler_eval(&sys[0], Cplx::new(1.0, 0.0)).unwrap();
//! assert!((y - Cplx::new(1.0, 0.0).exp()).norm() < 1e-12);
//! ```

pub mod cplx;
pub mod euler;
pub mod expr;
pub mod gamma;
pub mod hypergeo;
pub mod jet;
pub mod meijer;
pub mod nonhomo;
pub mod output;
pub mod quad;
pub mod series;
pub mod verify;

pub use cplx::{format_cplx, parse_cplx, Cplx};
pub use hypergeo::SeriesEvalReport;
pub use series::{ArgSign, LogPowerSeries, LogTerm};

/// Errors shared across the crate. Each variant names the condition the
/// way callers are expected to match on it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("gamma pole: argument within tolerance of a nonpositive integer")]
    PoleOfGamma,
    #[error("jet centers differ")]
    CenterMismatch,
    #[error("jet is identically zero to working precision")]
    ZeroJet,
    #[error("zero base: 0^ω is undefined for the power jet")]
    ZeroBase,
    #[error("lower parameter β is a nonpositive integer; use the regularized series")]
    BetaAtPole,
    #[error("no convergence within {0} terms")]
    NoConvergence(usize),
    #[error("non-generic parameters: {0}")]
    NonGenericParameters(&'static str),
    #[error("invalid parameters: {0}")]
    InvalidParams(&'static str),
    #[error("prefix is not an initial segment of a sorted congruence class")]
    BadPrefix,
    #[error("series has no terms")]
    EmptySeries,
    #[error("spectral parameter μ = 0 degenerates the substitution; use the homogeneous Euler basis")]
    DegenerateSpectralParameter,
    #[error("evaluation point z = 0 is the regular singularity")]
    ZeroPoint,
    #[error("integrand is non-integrable at the origin (level {level}: Re exponent {exponent:.3} ≤ -1)")]
    NonIntegrableAtOrigin { level: usize, exponent: f64 },
    #[error("quadrature failed to meet tolerance: estimated relative error {0:.3e}")]
    QuadratureFailure(f64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(doctest)]
mod book;
