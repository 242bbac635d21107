//! Generalized hypergeometric series `rFs` with r ≤ s (entire case),
//! their regularized variant (each term divided by Π Γ(β_m + k), entire
//! in the lower parameters), and the generic fundamental system of the
//! order-(s+1) hypergeometric differential equation
//!
//! ```text
//! [ θ Π_m (θ + β_m − 1) − ζ Π_ℓ (θ + α_ℓ) ] u = 0 .
//! ```

use crate::cplx::{require_finite, Cplx};
use crate::gamma::{nonpos_int_near, pochhammer, recip_gamma};
use crate::series::{ArgSign, LogPowerSeries};
use crate::{Error, Result};

/// Cap on series terms unless overridden (`EULERG_MAX_TERMS` in the CLI).
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Tolerance for "is an integer" parameter tests (genericity checks).
pub const INT_TOL: f64 = 1e-9;

/// Upper parameters α₁…α_r and lower parameters β₁…β_s, r ≤ s.
#[derive(Debug, Clone, PartialEq)]
pub struct PhqParams {
    alphas: Vec<Cplx>,
    betas: Vec<Cplx>,
}

impl PhqParams {
    pub fn new(alphas: Vec<Cplx>, betas: Vec<Cplx>) -> Result<Self> {
        if alphas.len() > betas.len() {
            return Err(Error::InvalidParams("need r ≤ s for an entire series"));
        }
        for &a in alphas.iter().chain(betas.iter()) {
            require_finite(a, "hypergeometric parameter must be finite")?;
        }
        Ok(PhqParams { alphas, betas })
    }

    pub fn alphas(&self) -> &[Cplx] {
        &self.alphas
    }

    pub fn betas(&self) -> &[Cplx] {
        &self.betas
    }
}

/// Value plus truncation bookkeeping for an adaptive series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEvalReport {
    pub value: Cplx,
    pub terms_used: usize,
    pub est_error: f64,
}

impl SeriesEvalReport {
    pub fn exact(value: Cplx) -> Self {
        SeriesEvalReport { value, terms_used: 0, est_error: 0.0 }
    }
}

fn int_distance(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// True when z is within [`INT_TOL`] of an integer (any sign).
pub fn near_integer(z: Cplx) -> bool {
    z.im.abs() <= INT_TOL && int_distance(z.re) <= INT_TOL
}

/// Geometric safety factor applied to the first omitted term.
fn omitted_term_bound(next_mag: f64, last_mag: f64) -> f64 {
    let ratio = if last_mag > 0.0 { (next_mag / last_mag).min(0.75) } else { 0.0 };
    next_mag / (1.0 - ratio)
}

struct TermSum {
    partial: Cplx,
    run_max: f64,
    small_streak: usize,
    terms_used: usize,
}

impl TermSum {
    fn new() -> Self {
        TermSum { partial: Cplx::new(0.0, 0.0), run_max: 0.0, small_streak: 0, terms_used: 0 }
    }

    /// Adds a term; returns true once three consecutive terms fall below
    /// tol × (running max partial-sum magnitude).
    fn push(&mut self, term: Cplx, tol: f64) -> bool {
        self.partial += term;
        self.terms_used += 1;
        self.run_max = self.run_max.max(self.partial.norm());
        if term.norm() < tol * self.run_max {
            self.small_streak += 1;
        } else {
            self.small_streak = 0;
        }
        self.small_streak >= 3
    }
}

/// The series Σ_k Π(α)_k / Π(β)_k · ζ^k / k! with adaptive truncation.
///
/// `value(0) = 1` exactly. Errors: [`Error::BetaAtPole`] when some β is a
/// nonpositive integer (use [`phq_regularized`]), [`Error::NoConvergence`]
/// past the term cap.
pub fn phq(params: &PhqParams, zeta: Cplx, tol: f64) -> Result<SeriesEvalReport> {
    phq_with_cap(params, zeta, tol, DEFAULT_MAX_TERMS)
}

pub fn phq_with_cap(
    params: &PhqParams,
    zeta: Cplx,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesEvalReport> {
    assert!(tol > 0.0, "tolerance must be positive");
    require_finite(zeta, "ζ must be finite")?;
    for &b in params.betas() {
        if nonpos_int_near(b).is_some() {
            return Err(Error::BetaAtPole);
        }
    }
    if zeta == Cplx::new(0.0, 0.0) {
        return Ok(SeriesEvalReport { value: Cplx::new(1.0, 0.0), terms_used: 1, est_error: 0.0 });
    }
    let mut sum = TermSum::new();
    let mut term = Cplx::new(1.0, 0.0);
    let mut k = 0usize;
    loop {
        if sum.push(term, tol) {
            let next = next_ratio(params, k, zeta) * term;
            return Ok(SeriesEvalReport {
                value: sum.partial,
                terms_used: sum.terms_used,
                est_error: omitted_term_bound(next.norm(), term.norm()),
            });
        }
        if sum.terms_used >= max_terms {
            return Err(Error::NoConvergence(max_terms));
        }
        term *= next_ratio(params, k, zeta);
        k += 1;
    }
}

/// term_{k+1} / term_k = Π(α+k) / Π(β+k) · ζ/(k+1).
fn next_ratio(params: &PhqParams, k: usize, zeta: Cplx) -> Cplx {
    let mut r = zeta / (k as f64 + 1.0);
    for &a in params.alphas() {
        r *= a + k as f64;
    }
    for &b in params.betas() {
        r /= b + k as f64;
    }
    r
}

/// The regularized series Σ_k Π(α)_k / Π_m Γ(β_m + k) · ζ^k / k!,
/// entire in every β (terms where a Γ pole occurs are exactly zero).
pub fn phq_regularized(params: &PhqParams, zeta: Cplx, tol: f64) -> Result<SeriesEvalReport> {
    phq_regularized_with_cap(params, zeta, tol, DEFAULT_MAX_TERMS)
}

pub fn phq_regularized_with_cap(
    params: &PhqParams,
    zeta: Cplx,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesEvalReport> {
    assert!(tol > 0.0, "tolerance must be positive");
    require_finite(zeta, "ζ must be finite")?;
    // Past this index every β_m + k is clear of the Γ poles and the plain
    // term recurrence applies.
    let k_clear = params
        .betas()
        .iter()
        .map(|b| if b.im.abs() <= 1.0 { (2.0 - b.re).ceil().max(0.0) as usize } else { 0 })
        .max()
        .unwrap_or(0);
    let mut sum = TermSum::new();
    let mut alpha_poch = Cplx::new(1.0, 0.0); // Π (α)_k
    let mut zk_per_kfact = Cplx::new(1.0, 0.0); // ζ^k / k!
    let mut term = Cplx::new(0.0, 0.0);
    let mut k = 0usize;
    loop {
        if k <= k_clear {
            let mut t = alpha_poch * zk_per_kfact;
            for &b in params.betas() {
                t *= recip_gamma(b + k as f64);
            }
            term = t;
        } else {
            term *= next_ratio(params, k - 1, zeta);
        }
        // Zero terms (from Γ poles) neither trip nor reset the streak
        // meaningfully; they count toward it only when genuinely small
        // relative to the running sum, which they are.
        if sum.push(term, tol) && k > k_clear {
            let next = next_ratio(params, k, zeta) * term;
            return Ok(SeriesEvalReport {
                value: sum.partial,
                terms_used: sum.terms_used,
                est_error: omitted_term_bound(next.norm(), term.norm()),
            });
        }
        if sum.terms_used >= max_terms {
            return Err(Error::NoConvergence(max_terms));
        }
        if k < k_clear {
            alpha_poch = params
                .alphas()
                .iter()
                .fold(alpha_poch, |p, &a| p * (a + k as f64));
            zk_per_kfact = zk_per_kfact * zeta / (k as f64 + 1.0);
        }
        k += 1;
    }
}

/// The s+1 solutions of the generic hypergeometric equation: u₀ with
/// exponent 0 and u_m = ζ^{1−β_m}·(parameter-shifted series) for each m,
/// the self-shift entry omitted from the lower list.
///
/// Requires the generic condition: β_m − β_{m'} ∉ ℤ for m ≠ m' and no β
/// a nonpositive integer.
pub fn phq_fundamental_system(params: &PhqParams, trunc: usize) -> Result<Vec<LogPowerSeries>> {
    let betas = params.betas();
    for (m, &bm) in betas.iter().enumerate() {
        if nonpos_int_near(bm).is_some() {
            return Err(Error::NonGenericParameters("β at a nonpositive integer"));
        }
        for &bm2 in betas.iter().skip(m + 1) {
            if near_integer(bm - bm2) {
                return Err(Error::NonGenericParameters("β difference is an integer"));
            }
        }
    }
    let mut out = Vec::with_capacity(betas.len() + 1);
    out.push(series_solution(Cplx::new(0.0, 0.0), params.alphas(), betas, trunc));
    for (m, &bm) in betas.iter().enumerate() {
        let shift = Cplx::new(1.0, 0.0) - bm;
        let alphas: Vec<Cplx> = params.alphas().iter().map(|&a| a + shift).collect();
        let lower: Vec<Cplx> = betas
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != m)
            .map(|(_, &b)| b + shift)
            .collect();
        out.push(series_solution(shift, &alphas, &lower, trunc));
    }
    Ok(out)
}

/// ζ^{base} · rFs(alphas; lowers | ζ) as a truncated symbolic series.
fn series_solution(base: Cplx, alphas: &[Cplx], lowers: &[Cplx], trunc: usize) -> LogPowerSeries {
    let mut u = LogPowerSeries::new(base, ArgSign::Plus, trunc);
    let mut fact = 1.0;
    for k in 0..=trunc {
        if k > 0 {
            fact *= k as f64;
        }
        let mut c = Cplx::new(1.0 / fact, 0.0);
        for &a in alphas {
            c *= pochhammer(a, k as u32);
        }
        for &b in lowers {
            c /= pochhammer(b, k as u32);
        }
        u.add_term(k, 0, c);
    }
    u
}

/// Applies `[θ Π_m (θ + β_m − 1) − ζ Π_ℓ (θ + α_ℓ)]` to `u` symbolically
/// and returns the maximum residual coefficient magnitude over power
/// offsets below the truncation order.
pub fn hypergeo_ode_residual(params: &PhqParams, u: &LogPowerSeries) -> f64 {
    let mut left = u.theta();
    for &b in params.betas() {
        left = left.theta_minus(Cplx::new(1.0, 0.0) - b);
    }
    let mut right = u.clone();
    for &a in params.alphas() {
        right = right.theta_minus(-a);
    }
    let r = left.sub(&right.mul_zeta());
    r.max_abs_coeff_below(u.trunc_order())
}
