//! Symbolic log-power series: finite sums of terms
//! `coeff · x^{base+n} · (ln x)^k`, the exact representation of a solution
//! near the regular singularity at 0.
//!
//! Each series fixes an [`ArgSign`]: its variable is x = ±ζ. Solutions
//! built from a Mellin–Barnes integrand with argument −ζ keep that
//! argument literally, so evaluation takes principal-branch powers of the
//! actual complex number −ζ rather than baking an `e^{iπb}` phase into
//! the coefficients. The θ-calculus (θ = x d/dx = ζ d/dζ) acts term-wise:
//!
//! ```text
//! θ (x^e (ln x)^k) = e·x^e (ln x)^k + k·x^e (ln x)^{k−1}
//! ```
//!
//! and multiplication by ζ = sign·x shifts the power index by one and
//! scales by the sign.

use crate::cplx::Cplx;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Relates the series variable x to the equation variable ζ: x = sign·ζ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgSign {
    Plus,
    Minus,
}

impl ArgSign {
    pub fn factor(self) -> f64 {
        match self {
            ArgSign::Plus => 1.0,
            ArgSign::Minus => -1.0,
        }
    }

    pub fn from_parity(m: usize) -> Self {
        if m % 2 == 0 {
            ArgSign::Plus
        } else {
            ArgSign::Minus
        }
    }
}

/// One term of a log-power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogTerm {
    pub exponent: Cplx,
    pub log_power: usize,
    pub coeff: Cplx,
}

/// Finite sum Σ coeff · x^{base+n} (ln x)^k with n ≤ trunc, in the
/// variable x = sign·ζ.
#[derive(Debug, Clone, PartialEq)]
pub struct LogPowerSeries {
    base: Cplx,
    sign: ArgSign,
    trunc: usize,
    terms: BTreeMap<(usize, usize), Cplx>,
}

impl LogPowerSeries {
    pub fn new(base: Cplx, sign: ArgSign, trunc: usize) -> Self {
        LogPowerSeries { base, sign, trunc, terms: BTreeMap::new() }
    }

    pub fn base(&self) -> Cplx {
        self.base
    }

    pub fn sign(&self) -> ArgSign {
        self.sign
    }

    pub fn trunc_order(&self) -> usize {
        self.trunc
    }

    /// Adds `coeff · x^{base+offset} (ln x)^{log_power}`.
    pub fn add_term(&mut self, offset: usize, log_power: usize, coeff: Cplx) {
        if coeff == Cplx::new(0.0, 0.0) {
            return;
        }
        let slot = self.terms.entry((offset, log_power)).or_insert(Cplx::new(0.0, 0.0));
        *slot += coeff;
        if *slot == Cplx::new(0.0, 0.0) {
            self.terms.remove(&(offset, log_power));
        }
    }

    pub fn coeff(&self, offset: usize, log_power: usize) -> Cplx {
        self.terms.get(&(offset, log_power)).copied().unwrap_or(Cplx::new(0.0, 0.0))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// All terms, exponent = base + offset, ordered by (offset, log_power).
    pub fn terms(&self) -> Vec<LogTerm> {
        self.terms
            .iter()
            .map(|(&(o, k), &c)| LogTerm {
                exponent: self.base + o as f64,
                log_power: k,
                coeff: c,
            })
            .collect()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_log_power(&self) -> usize {
        self.terms.keys().map(|&(_, k)| k).max().unwrap_or(0)
    }

    /// Evaluates at ζ with principal branches of x^e and ln x, x = sign·ζ.
    pub fn eval(&self, zeta: Cplx) -> Result<Cplx> {
        if zeta == Cplx::new(0.0, 0.0) {
            return Err(Error::ZeroPoint);
        }
        let x = self.sign.factor() * zeta;
        let log_x = x.ln();
        let mut acc = Cplx::new(0.0, 0.0);
        for (&(o, k), &c) in &self.terms {
            let mut v = c * ((self.base + o as f64) * log_x).exp();
            for _ in 0..k {
                v *= log_x;
            }
            acc += v;
        }
        Ok(acc)
    }

    /// θ applied term-wise (θ = ζ d/dζ = x d/dx).
    pub fn theta(&self) -> Self {
        let mut out = LogPowerSeries::new(self.base, self.sign, self.trunc);
        for (&(o, k), &c) in &self.terms {
            out.add_term(o, k, c * (self.base + o as f64));
            if k > 0 {
                out.add_term(o, k - 1, c * k as f64);
            }
        }
        out
    }

    /// (θ − b)·self.
    pub fn theta_minus(&self, b: Cplx) -> Self {
        let mut out = self.theta();
        for (&(o, k), &c) in &self.terms {
            out.add_term(o, k, -b * c);
        }
        out
    }

    /// ζ·self = sign·x·self: power index up by one, coefficient scaled by
    /// the sign. Terms pushed past the truncation order are kept; residual
    /// checks only read offsets below it.
    pub fn mul_zeta(&self) -> Self {
        let mut out = LogPowerSeries::new(self.base, self.sign, self.trunc);
        let s = self.sign.factor();
        for (&(o, k), &c) in &self.terms {
            out.add_term(o + 1, k, s * c);
        }
        out
    }

    pub fn scaled(&self, factor: Cplx) -> Self {
        let mut out = LogPowerSeries::new(self.base, self.sign, self.trunc);
        for (&(o, k), &c) in &self.terms {
            out.add_term(o, k, factor * c);
        }
        out
    }

    /// self − other; both series must share base lattice and sign.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.sign, other.sign, "series variable mismatch");
        assert!(
            (self.base - other.base).norm() < 1e-9,
            "series base lattice mismatch"
        );
        let mut out = self.clone();
        for (&(o, k), &c) in &other.terms {
            out.add_term(o, k, -c);
        }
        out
    }

    /// Largest coefficient magnitude among terms with offset < limit.
    pub fn max_abs_coeff_below(&self, limit: usize) -> f64 {
        self.terms
            .iter()
            .filter(|(&(o, _), _)| o < limit)
            .map(|(_, c)| c.norm())
            .fold(0.0, f64::max)
    }

    /// The dominant term as ζ → 0: minimal Re(exponent), ties broken by
    /// the larger log power.
    pub fn leading(&self) -> Result<LogTerm> {
        // Offsets order the real parts along the lattice, so the dominant
        // term sits at the smallest offset present.
        let min_offset = self
            .terms
            .keys()
            .map(|&(o, _)| o)
            .min()
            .ok_or(Error::EmptySeries)?;
        let (&(o, k), &c) = self
            .terms
            .iter()
            .filter(|(&(o, _), _)| o == min_offset)
            .max_by_key(|(&(_, k), _)| k)
            .expect("offset present");
        Ok(LogTerm { exponent: self.base + o as f64, log_power: k, coeff: c })
    }

    /// Values of θ^i · self at ζ for i = 0..count.
    pub fn theta_derivative_values(&self, zeta: Cplx, count: usize) -> Result<Vec<Cplx>> {
        let mut out = Vec::with_capacity(count);
        let mut cur = self.clone();
        for i in 0..count {
            out.push(cur.eval(zeta)?);
            if i + 1 < count {
                cur = cur.theta();
            }
        }
        Ok(out)
    }
}

/// Residual coefficients of `[Π_j (θ − b_j) − ζ] u`, reported as the
/// maximum magnitude over power offsets below the truncation order.
pub fn theta_product_residual(b: &[Cplx], u: &LogPowerSeries) -> f64 {
    let mut v = u.clone();
    for &bj in b {
        v = v.theta_minus(bj);
    }
    let r = v.sub(&u.mul_zeta());
    r.max_abs_coeff_below(u.trunc_order())
}
