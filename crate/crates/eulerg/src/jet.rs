//! Truncated Laurent expansions ("jets") in one variable, used to extract
//! residues of gamma-product integrands at poles of any order.
//!
//! A jet at center ω₀ stores coefficients c_{−p}, …, c_K of powers of
//! t = ω − ω₀ with an explicit pole order p and shared truncation order K.
//! Zeros are structural: a jet reciprocal of a simple pole carries an
//! *exact* 0 constant term, so when a pole of Γ(b−ω) meets a zero of
//! 1/Γ(1−b'+ω) on the same ladder the multiplicities cancel in the Cauchy
//! product without any special-casing.

use crate::cplx::Cplx;
use crate::gamma::{self, nonpos_int_near};
use crate::{Error, Result};

/// Truncated Laurent expansion at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentJet {
    center: Cplx,
    pole_order: usize,
    order: usize,
    /// c_{−pole_order} … c_order, length pole_order + order + 1.
    coeffs: Vec<Cplx>,
}

impl LaurentJet {
    /// Builds a jet from raw coefficients; strips exactly-zero leading
    /// coefficients so the normal form (c_{−p} ≠ 0 when p > 0) holds.
    pub fn new(center: Cplx, pole_order: usize, order: usize, coeffs: Vec<Cplx>) -> Self {
        assert_eq!(coeffs.len(), pole_order + order + 1, "coefficient count");
        let mut jet = LaurentJet { center, pole_order, order, coeffs };
        jet.normalize();
        jet
    }

    /// Constant jet with the given value.
    pub fn constant(center: Cplx, value: Cplx, order: usize) -> Self {
        let mut coeffs = vec![Cplx::new(0.0, 0.0); order + 1];
        coeffs[0] = value;
        LaurentJet { center, pole_order: 0, order, coeffs }
    }

    /// Taylor jet with the given coefficients c_0..c_order.
    pub fn from_taylor(center: Cplx, coeffs: Vec<Cplx>) -> Self {
        let order = coeffs.len() - 1;
        LaurentJet { center, pole_order: 0, order, coeffs }
    }

    pub fn center(&self) -> Cplx {
        self.center
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    /// Coefficient of t^k (0 outside the stored range).
    pub fn coeff(&self, k: i64) -> Cplx {
        let idx = k + self.pole_order as i64;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Cplx::new(0.0, 0.0)
        } else {
            self.coeffs[idx as usize]
        }
    }

    fn normalize(&mut self) {
        while self.pole_order > 0 && self.coeffs[0] == Cplx::new(0.0, 0.0) {
            self.coeffs.remove(0);
            self.coeffs.push(Cplx::new(0.0, 0.0));
            self.pole_order -= 1;
        }
    }

    fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Every coefficient multiplied by a constant.
    pub fn scaled(&self, factor: Cplx) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= factor;
        }
        out
    }

    /// Drops Taylor coefficients beyond the new truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let keep = self.pole_order + order + 1;
        LaurentJet {
            center: self.center,
            pole_order: self.pole_order,
            order,
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Evaluates the jet as a Laurent polynomial at offset t from the center.
    pub fn eval_at_offset(&self, t: Cplx) -> Cplx {
        let mut acc = Cplx::new(0.0, 0.0);
        // Horner over the Taylor tail, then the pole part directly.
        for k in (0..=self.order).rev() {
            acc = acc * t + self.coeff(k as i64);
        }
        let mut tp = t;
        for k in 1..=self.pole_order {
            acc += self.coeff(-(k as i64)) / tp;
            tp *= t;
        }
        acc
    }
}

/// Cauchy product truncated at the shared order; pole orders add, and
/// exact leading-zero cancellations reduce the product's pole order.
pub fn jet_mul(x: &LaurentJet, y: &LaurentJet) -> Result<LaurentJet> {
    if x.center != y.center {
        return Err(Error::CenterMismatch);
    }
    if x.order != y.order {
        return Err(Error::CenterMismatch);
    }
    let p = x.pole_order + y.pole_order;
    let len = p + x.order + 1;
    let mut coeffs = vec![Cplx::new(0.0, 0.0); len];
    for (i, &xc) in x.coeffs.iter().enumerate() {
        if xc == Cplx::new(0.0, 0.0) {
            continue;
        }
        for (j, &yc) in y.coeffs.iter().enumerate() {
            let k = i + j;
            if k < len {
                coeffs[k] += xc * yc;
            }
        }
    }
    Ok(LaurentJet::new(x.center, p, x.order, coeffs))
}

/// Multiplicative inverse up to truncation. A zero of order p becomes a
/// pole of order p and vice versa.
pub fn jet_recip(x: &LaurentJet) -> Result<LaurentJet> {
    if x.max_abs() == 0.0 {
        return Err(Error::ZeroJet);
    }
    // Leading index L (power of t of the first structurally nonzero
    // coefficient), so x = c_L t^L (1 + u(t)).
    let lead = x
        .coeffs
        .iter()
        .position(|c| *c != Cplx::new(0.0, 0.0))
        .expect("nonzero jet");
    let lead_pow = lead as i64 - x.pole_order as i64;
    let c_lead = x.coeffs[lead];
    let k_terms = x.order + 1;
    // Normalized tail u: x / (c_L t^L) = 1 + u₁t + u₂t² + …
    let mut u = vec![Cplx::new(0.0, 0.0); k_terms];
    for (i, slot) in u.iter_mut().enumerate() {
        let idx = lead + i;
        if idx < x.coeffs.len() {
            *slot = x.coeffs[idx] / c_lead;
        }
    }
    // Power-series inverse of 1 + u.
    let mut inv = vec![Cplx::new(0.0, 0.0); k_terms];
    inv[0] = Cplx::new(1.0, 0.0);
    for k in 1..k_terms {
        let mut s = Cplx::new(0.0, 0.0);
        for i in 1..=k {
            s += u[i] * inv[k - i];
        }
        inv[k] = -s;
    }
    // Result = t^{−L}/c_L · inv; represent with pole order max(L, 0) and
    // structural zeros when L < 0.
    let pole = lead_pow.max(0) as usize;
    let mut coeffs = vec![Cplx::new(0.0, 0.0); pole + x.order + 1];
    for (k, &v) in inv.iter().enumerate() {
        // power of t is k − lead_pow
        let power = k as i64 - lead_pow;
        let idx = power + pole as i64;
        if idx >= 0 && (idx as usize) < coeffs.len() {
            coeffs[idx as usize] = v / c_lead;
        }
    }
    Ok(LaurentJet::new(x.center, pole, x.order, coeffs))
}

/// exp of a Taylor jet (no pole part), via e' = l'·e.
fn jet_exp_taylor(center: Cplx, l: &[Cplx]) -> LaurentJet {
    let n = l.len();
    let mut e = vec![Cplx::new(0.0, 0.0); n];
    e[0] = l[0].exp();
    for k in 1..n {
        let mut s = Cplx::new(0.0, 0.0);
        for i in 1..=k {
            s += (i as f64) * l[i] * e[k - i];
        }
        e[k] = s / (k as f64);
    }
    LaurentJet::from_taylor(center, e)
}

/// Taylor jet of t ↦ Γ(a + slope·t) at a *regular* point a, through
/// exp of the log-gamma Taylor series (polygamma supplies the
/// derivatives).
fn gamma_taylor_regular(center: Cplx, a: Cplx, slope: f64, order: usize) -> Result<LaurentJet> {
    let mut l = vec![Cplx::new(0.0, 0.0); order + 1];
    l[0] = gamma::log_gamma(a)?;
    let mut fact = 1.0;
    let mut slope_pow = 1.0;
    for (k, slot) in l.iter_mut().enumerate().skip(1) {
        fact *= k as f64;
        slope_pow *= slope;
        // d^k/dt^k lnΓ(a + s t) = s^k ψ^{(k−1)}(a)
        *slot = slope_pow * gamma::polygamma(k as u32 - 1, a)? / fact;
    }
    Ok(jet_exp_taylor(center, &l))
}

/// Jet of t ↦ Γ(a + slope·t), Laurent when a is (within tolerance) a
/// nonpositive integer −n. The pole case uses the recurrence-shifted
/// identity
///
/// ```text
/// Γ(−n + σt) = (−1)^n Γ(1+σt) Γ(1−σt) / (σt · Γ(n+1−σt)),
/// ```
///
/// whose gamma factors all sit at regular points; the simple pole comes
/// from an explicit division by σt, so its order is exact and no
/// factorial products can overflow on deep pole ladders.
fn gamma_jet_slope(center: Cplx, a: Cplx, slope: f64, order: usize) -> LaurentJet {
    match nonpos_int_near(a) {
        None => gamma_taylor_regular(center, a, slope, order)
            .expect("regular point by pole check"),
        Some(n) => {
            let ord = order.max(1);
            let one = Cplx::new(1.0, 0.0);
            let g_plus = gamma_taylor_regular(center, one, slope, ord)
                .expect("Γ(1+σt) is regular");
            let g_minus = gamma_taylor_regular(center, one, -slope, ord)
                .expect("Γ(1−σt) is regular");
            let g_shift = gamma_taylor_regular(center, Cplx::new(n as f64 + 1.0, 0.0), -slope, ord)
                .expect("Γ(n+1−σt) is regular");
            let zero = Cplx::new(0.0, 0.0);
            let mut lin = vec![zero; ord + 1];
            lin[1] = Cplx::new(slope, 0.0);
            let lin = LaurentJet::from_taylor(center, lin);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let num = jet_mul(&g_plus, &g_minus).expect("same center");
            let den = jet_mul(&lin, &g_shift).expect("same center");
            jet_mul(&num, &jet_recip(&den).expect("σt factor is nonzero"))
                .expect("same center")
                .scaled(Cplx::new(sign, 0.0))
                .truncated(order)
        }
    }
}

/// Laurent expansion of ω ↦ Γ(c − ω) at ω = center.
///
/// When c − center is a nonnegative-integer step −n below c (i.e.
/// center = c + n) the jet has pole order 1 with residue coefficient
/// c_{−1} = (−1)^{n+1}/n!.
pub fn gamma_jet(c: Cplx, center: Cplx, order: usize) -> LaurentJet {
    gamma_jet_slope(center, c - center, -1.0, order)
}

/// Taylor/Laurent expansion of ω ↦ Γ(c + ω) at ω = center.
pub fn gamma_jet_pos(c: Cplx, center: Cplx, order: usize) -> LaurentJet {
    gamma_jet_slope(center, c + center, 1.0, order)
}

/// Taylor expansion of ω ↦ 1/Γ(c + ω) at ω = center; entire, with a
/// structural simple zero when c + center is a nonpositive integer.
pub fn recip_gamma_jet(c: Cplx, center: Cplx, order: usize) -> LaurentJet {
    jet_recip(&gamma_jet_pos(c, center, order)).expect("Γ jet is never identically zero")
}

/// Taylor expansion of ω ↦ 1/Γ(c − ω) at ω = center.
pub fn recip_gamma_jet_neg(c: Cplx, center: Cplx, order: usize) -> LaurentJet {
    jet_recip(&gamma_jet(c, center, order)).expect("Γ jet is never identically zero")
}

/// Taylor expansion of ω ↦ ζ^ω at ω = center: coefficient of t^k is
/// ζ^center (ln ζ)^k / k!, principal logarithm.
pub fn power_jet(zeta: Cplx, center: Cplx, order: usize) -> Result<LaurentJet> {
    if zeta == Cplx::new(0.0, 0.0) {
        return Err(Error::ZeroBase);
    }
    let log_z = zeta.ln();
    let lead = (center * log_z).exp();
    let mut coeffs = vec![Cplx::new(0.0, 0.0); order + 1];
    let mut term = lead;
    coeffs[0] = term;
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        term = term * log_z / (k as f64);
        *slot = term;
    }
    Ok(LaurentJet::from_taylor(center, coeffs))
}

/// Residue: the coefficient c_{−1} (zero for a regular jet).
pub fn residue(x: &LaurentJet) -> Cplx {
    x.coeff(-1)
}
