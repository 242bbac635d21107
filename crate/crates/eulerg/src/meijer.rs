//! Meijer G-functions `G^{m,n}_{p,q}` with p < q, evaluated as sums of
//! residues of the Mellin–Barnes integrand
//!
//! ```text
//! Π_{j≤m} Γ(b_j−ω) Π_{k≤n} Γ(1−a_k+ω)
//! ───────────────────────────────────── · ζ^ω
//! Π_{j>m} Γ(1−b_j+ω) Π_{k>n} Γ(a_k−ω)
//! ```
//!
//! over the poles of the Γ(b_j−·) factors (the contour is negatively
//! oriented, giving one overall minus sign), plus the symbolic log-power
//! fundamental systems of the order-q equation `[Π_j (θ−b_j) − ζ] u = 0`.
//!
//! When several b_j are congruent mod ℤ their pole ladders merge and the
//! poles acquire higher multiplicity; residues are then extracted from
//! Laurent jets at the full multiplicity, which is where the `ln ζ`
//! powers of the non-generic fundamental solutions come from. Exponents
//! within 1e-9 of a common ℤ-lattice are snapped onto it so pole/zero
//! coincidences are decided once, by the congruence partition, not
//! per-jet.

use crate::cplx::{require_finite, Cplx};
use crate::gamma::{gamma, recip_gamma};
use crate::hypergeo::{self, near_integer, PhqParams, SeriesEvalReport};
use crate::jet::{gamma_jet, gamma_jet_pos, jet_mul, power_jet, recip_gamma_jet, recip_gamma_jet_neg, LaurentJet};
use crate::series::{ArgSign, LogPowerSeries, LogTerm};
use crate::{Error, Result};

/// Extra Taylor coefficients kept beyond each pole's multiplicity.
const JET_GUARD: usize = 4;

/// Cap on residue-ladder levels unless overridden.
pub const DEFAULT_MAX_LEVELS: usize = 10_000;

/// Validated (m, n, p, q, a, b) parameter block for `G^{m,n}_{p,q}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GParams {
    m: usize,
    n: usize,
    a: Vec<Cplx>,
    b: Vec<Cplx>,
}

impl GParams {
    /// Requires 0 ≤ n ≤ p, 0 ≤ m ≤ q, 1 ≤ q, p < q, and the
    /// pole-separation condition a_k − b_j ∉ ℕ for j ≤ m, k ≤ n.
    pub fn new(m: usize, n: usize, a: Vec<Cplx>, b: Vec<Cplx>) -> Result<Self> {
        let (p, q) = (a.len(), b.len());
        if q == 0 {
            return Err(Error::InvalidParams("q must be at least 1"));
        }
        if p >= q {
            return Err(Error::InvalidParams("need p < q"));
        }
        if m > q {
            return Err(Error::InvalidParams("need m ≤ q"));
        }
        if n > p {
            return Err(Error::InvalidParams("need n ≤ p"));
        }
        for &v in a.iter().chain(b.iter()) {
            require_finite(v, "G parameters must be finite")?;
        }
        for &bj in &b[..m] {
            for &ak in &a[..n] {
                let d = ak - bj;
                if near_integer(d) && d.re.round() >= 1.0 {
                    return Err(Error::InvalidParams(
                        "pole separation violated: a_k − b_j is a positive integer",
                    ));
                }
            }
        }
        Ok(GParams { m, n, a, b })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &[Cplx] {
        &self.a
    }

    pub fn b(&self) -> &[Cplx] {
        &self.b
    }

    /// Eq-2.11-style genericity among the first m exponents.
    pub fn is_generic_front(&self) -> bool {
        pairwise_nonintegral(&self.b[..self.m])
    }

    /// Genericity among all q exponents.
    pub fn is_generic_full(&self) -> bool {
        pairwise_nonintegral(&self.b)
    }
}

fn pairwise_nonintegral(vals: &[Cplx]) -> bool {
    for (i, &x) in vals.iter().enumerate() {
        for &y in vals.iter().skip(i + 1) {
            if near_integer(x - y) {
                return false;
            }
        }
    }
    true
}

/// Ordered partition of exponents into congruence classes mod ℤ; each
/// class lists (original index, value) sorted by non-increasing real
/// part. Classes are ordered by (fractional part of the representative's
/// real part, its imaginary part, smallest original index).
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceClasses {
    pub classes: Vec<Vec<(usize, Cplx)>>,
}

impl CongruenceClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Total number of partitioned exponents.
    pub fn total(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

/// Splits `b` into congruence classes mod ℤ (integer-difference tolerance
/// 1e-9), deterministically ordered.
pub fn congruence_partition(b: &[Cplx]) -> CongruenceClasses {
    let mut classes: Vec<Vec<(usize, Cplx)>> = Vec::new();
    for (i, &v) in b.iter().enumerate() {
        match classes.iter_mut().find(|c| near_integer(c[0].1 - v)) {
            Some(class) => class.push((i, v)),
            None => classes.push(vec![(i, v)]),
        }
    }
    for class in &mut classes {
        class.sort_by(|x, y| {
            y.1.re
                .partial_cmp(&x.1.re)
                .unwrap()
                .then(x.0.cmp(&y.0))
        });
    }
    classes.sort_by(|x, y| {
        let rep = |c: &Vec<(usize, Cplx)>| c.iter().min_by_key(|&&(i, _)| i).unwrap().1;
        let (rx, ry) = (rep(x), rep(y));
        let frac = |v: f64| v - v.floor();
        frac(rx.re)
            .partial_cmp(&frac(ry.re))
            .unwrap()
            .then(rx.im.partial_cmp(&ry.im).unwrap())
            .then_with(|| {
                let ix = x.iter().map(|&(i, _)| i).min().unwrap();
                let iy = y.iter().map(|&(i, _)| i).min().unwrap();
                ix.cmp(&iy)
            })
    });
    CongruenceClasses { classes }
}

/// Snaps every value onto the ℤ-lattice of its congruence class: the
/// class member with the smallest real part anchors the lattice and the
/// rest become exact integer offsets from it. Leaves non-congruent
/// values untouched.
fn snap_to_lattices(vals: &[Cplx]) -> Vec<Cplx> {
    let classes = congruence_partition(vals);
    let mut out = vals.to_vec();
    for class in &classes.classes {
        let anchor = class.last().unwrap().1; // smallest Re in the class
        for &(idx, v) in class {
            let offset = (v.re - anchor.re).round();
            out[idx] = anchor + offset;
        }
    }
    out
}

// ---------------------------------------------------------------------
// Residue summation (numeric evaluation of G at a point)
// ---------------------------------------------------------------------

struct Ladder {
    /// Smallest-Re exponent of the class: poles sit at base + ℕ₀.
    base: Cplx,
    /// Integer offsets of the class members above the base.
    member_offsets: Vec<usize>,
}

/// Sum over all poles of Π_{j≤m} Γ(b_j−ω) enclosed by the (negatively
/// oriented) contour, each residue computed by jets at the pole's full
/// multiplicity. `G^{0,n}` is exactly 0.
pub fn meijer_g_residue_sum(params: &GParams, zeta: Cplx, tol: f64) -> Result<SeriesEvalReport> {
    meijer_g_residue_sum_with_cap(params, zeta, tol, DEFAULT_MAX_LEVELS)
}

pub fn meijer_g_residue_sum_with_cap(
    params: &GParams,
    zeta: Cplx,
    tol: f64,
    max_levels: usize,
) -> Result<SeriesEvalReport> {
    assert!(tol > 0.0, "tolerance must be positive");
    require_finite(zeta, "ζ must be finite")?;
    if zeta == Cplx::new(0.0, 0.0) {
        return Err(Error::ZeroBase);
    }
    if params.m == 0 {
        return Ok(SeriesEvalReport::exact(Cplx::new(0.0, 0.0)));
    }
    // Snap the combined parameter list so pole/zero coincidences across
    // numerator and denominator factors are exact.
    let mut all: Vec<Cplx> = params.b.clone();
    all.extend_from_slice(&params.a);
    let all = snap_to_lattices(&all);
    let (b, a) = all.split_at(params.q());
    let ladders: Vec<Ladder> = congruence_partition(&b[..params.m])
        .classes
        .iter()
        .map(|class| {
            let base = class.last().unwrap().1;
            let member_offsets = class
                .iter()
                .map(|&(_, v)| (v.re - base.re).round() as usize)
                .collect();
            Ladder { base, member_offsets }
        })
        .collect();

    let mut partial = Cplx::new(0.0, 0.0);
    let mut run_max = 0.0f64;
    let mut small_streak = 0usize;
    let mut residues_computed = 0usize;
    let mut last_level_mag = 0.0f64;
    for level in 0..max_levels {
        let mut level_sum = Cplx::new(0.0, 0.0);
        for ladder in &ladders {
            let omega0 = ladder.base + level as f64;
            let mult = ladder
                .member_offsets
                .iter()
                .filter(|&&o| o <= level)
                .count();
            let order = mult + JET_GUARD;
            let mut f = power_jet(zeta, omega0, order)?;
            for &bj in &b[..params.m] {
                f = jet_mul(&f, &gamma_jet(bj, omega0, order))?;
            }
            for &ak in &a[..params.n] {
                f = jet_mul(&f, &gamma_jet_pos(Cplx::new(1.0, 0.0) - ak, omega0, order))?;
            }
            for &bj in &b[params.m..] {
                f = jet_mul(&f, &recip_gamma_jet(Cplx::new(1.0, 0.0) - bj, omega0, order))?;
            }
            for &ak in &a[params.n..] {
                f = jet_mul(&f, &recip_gamma_jet_neg(ak, omega0, order))?;
            }
            level_sum -= crate::jet::residue(&f);
            residues_computed += 1;
        }
        partial += level_sum;
        run_max = run_max.max(partial.norm());
        last_level_mag = level_sum.norm();
        if last_level_mag < tol * run_max.max(f64::MIN_POSITIVE) {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(SeriesEvalReport {
                    value: partial,
                    terms_used: residues_computed,
                    est_error: 2.0 * last_level_mag,
                });
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::NoConvergence(max_levels))
}

// ---------------------------------------------------------------------
// Generic finite expansion into hypergeometric series
// ---------------------------------------------------------------------

/// The finite sum of m gamma-weighted `pF(q−1)` terms valid when the
/// first m exponents are pairwise non-congruent; denominator gamma
/// entries are absorbed through the regularized series, so trailing
/// exponents may coincide freely.
pub fn meijer_g_generic(params: &GParams, zeta: Cplx, tol: f64) -> Result<SeriesEvalReport> {
    require_finite(zeta, "ζ must be finite")?;
    if params.m == 0 {
        return Ok(SeriesEvalReport::exact(Cplx::new(0.0, 0.0)));
    }
    if !params.is_generic_front() {
        return Err(Error::NonGenericParameters(
            "front exponents b_1..b_m must be pairwise non-congruent",
        ));
    }
    let (m, n, p, q) = (params.m, params.n, params.p(), params.q());
    let arg_sign = if (p + m + n) % 2 == 0 { 1.0 } else { -1.0 };
    let mut value = Cplx::new(0.0, 0.0);
    let mut est = 0.0f64;
    let mut terms = 0usize;
    for j in 0..m {
        let bj = params.b[j];
        let mut pref = Cplx::new(1.0, 0.0);
        for (jp, &bjp) in params.b.iter().enumerate().take(m) {
            if jp == j {
                continue;
            }
            pref *= gamma(bjp - bj)?;
            pref *= gamma(Cplx::new(1.0, 0.0) + bj - bjp)?;
        }
        for &ak in &params.a[..n] {
            pref *= gamma(Cplx::new(1.0, 0.0) + bj - ak)?;
        }
        for &ak in &params.a[n..] {
            pref *= recip_gamma(ak - bj);
        }
        let upper: Vec<Cplx> = params.a.iter().map(|&ak| Cplx::new(1.0, 0.0) + bj - ak).collect();
        let lower: Vec<Cplx> = params
            .b
            .iter()
            .enumerate()
            .filter(|&(jp, _)| jp != j)
            .map(|(_, &bjp)| Cplx::new(1.0, 0.0) + bj - bjp)
            .collect();
        debug_assert_eq!(lower.len(), q - 1);
        let f = hypergeo::phq_regularized(&PhqParams::new(upper, lower)?, arg_sign * zeta, tol)?;
        let weight = pref * zeta.powc(bj);
        value += weight * f.value;
        est += weight.norm() * f.est_error;
        terms += f.terms_used;
    }
    Ok(SeriesEvalReport { value, terms_used: terms, est_error: est })
}

/// Evaluates both sides of the expansion of `G^{m,n}` into `G^{1,p}`
/// pieces through two independent code paths (hypergeometric expansion
/// vs. residue summation) and returns the relative discrepancy.
pub fn g1p_identity_check(params: &GParams, zeta: Cplx) -> Result<f64> {
    let tol = 1e-12;
    let left = meijer_g_generic(params, zeta, tol)?;
    if params.m == 0 {
        return Ok(left.value.norm());
    }
    let (m, n, p) = (params.m, params.n, params.p());
    // argument sign for the G^{1,p} pieces
    let sigma = if (p + 1 + m + n) % 2 == 0 { 1.0 } else { -1.0 };
    let mut right = Cplx::new(0.0, 0.0);
    for j in 0..m {
        let bj = params.b[j];
        let mut pref = Cplx::new(1.0, 0.0);
        for (jp, &bjp) in params.b.iter().enumerate().take(m) {
            if jp == j {
                continue;
            }
            pref *= gamma(bjp - bj)?;
            pref *= gamma(Cplx::new(1.0, 0.0) + bj - bjp)?;
        }
        for &ak in &params.a[n..] {
            pref *= recip_gamma(ak - bj);
            pref *= recip_gamma(Cplx::new(1.0, 0.0) + bj - ak);
        }
        // principal-branch compensator for the argument sign: the series
        // carries (σζ)^{b_j} where the expansion wants ζ^{b_j}
        let compensator = zeta.powc(bj) / (sigma * zeta).powc(bj);
        let mut b_reordered = vec![bj];
        b_reordered.extend(
            params
                .b
                .iter()
                .enumerate()
                .filter(|&(jp, _)| jp != j)
                .map(|(_, &v)| v),
        );
        let sub = GParams::new(1, p, params.a.clone(), b_reordered)?;
        let g1p = meijer_g_residue_sum(&sub, sigma * zeta, tol)?;
        right += pref * compensator * g1p.value;
    }
    let denom = left.value.norm().max(right.value.norm()).max(f64::MIN_POSITIVE);
    Ok((left.value - right).norm() / denom)
}

// ---------------------------------------------------------------------
// Symbolic fundamental systems
// ---------------------------------------------------------------------

/// The q solutions `ζ^{b_j} · pF(q−1)(1+b_j−a; 1+b_j−b_{j'≠j} | wζ)`,
/// w = (−1)^{m+n−p}, of the G differential equation, valid when all q
/// exponents are pairwise non-congruent.
pub fn meijer_fundamental_system_generic(
    params: &GParams,
    trunc: usize,
) -> Result<Vec<LogPowerSeries>> {
    if !params.is_generic_full() {
        return Err(Error::NonGenericParameters(
            "exponents must be pairwise non-congruent mod ℤ",
        ));
    }
    let w = if (params.m + params.n + params.p()) % 2 == 0 { 1.0 } else { -1.0 };
    let mut out = Vec::with_capacity(params.q());
    for (j, &bj) in params.b.iter().enumerate() {
        let mut u = LogPowerSeries::new(bj, ArgSign::Plus, trunc);
        let mut fact = 1.0;
        let mut wk = 1.0;
        for k in 0..=trunc {
            if k > 0 {
                fact *= k as f64;
                wk *= w;
            }
            let mut c = Cplx::new(wk / fact, 0.0);
            for &ak in &params.a {
                c *= crate::gamma::pochhammer(Cplx::new(1.0, 0.0) + bj - ak, k as u32);
            }
            for (jp, &bjp) in params.b.iter().enumerate() {
                if jp != j {
                    c /= crate::gamma::pochhammer(Cplx::new(1.0, 0.0) + bj - bjp, k as u32);
                }
            }
            u.add_term(k, 0, c);
        }
        out.push(u);
    }
    Ok(out)
}

/// The symbolic log-power series of the prefix solution: the residue sum
/// of `Π_{j≤m'} Γ(b_j−ω) / Π_{j>m'} Γ(1−b_j+ω) · x^ω` over the merged
/// pole ladder, in the variable x = (−1)^{m'} ζ, truncated at power
/// offset `trunc` above the smallest prefix exponent.
///
/// The first `class_prefix_size` entries of `b` must be an initial
/// segment of one congruence class, sorted by non-increasing real part
/// as [`congruence_partition`] produces it.
pub fn g_m0_log_series(b: &[Cplx], class_prefix_size: usize, trunc: usize) -> Result<LogPowerSeries> {
    let mp = class_prefix_size;
    if mp == 0 || mp > b.len() {
        return Err(Error::BadPrefix);
    }
    for &v in b {
        require_finite(v, "exponent must be finite")?;
    }
    // prefix entries: one class, sorted by non-increasing Re
    for i in 0..mp {
        if !near_integer(b[i] - b[0]) {
            return Err(Error::BadPrefix);
        }
        if i > 0 && b[i].re > b[i - 1].re + 1e-9 {
            return Err(Error::BadPrefix);
        }
    }
    // no congruent entry may sit strictly above the prefix tail
    for &v in &b[mp..] {
        if near_integer(v - b[0]) && v.re > b[mp - 1].re + 1e-9 {
            return Err(Error::BadPrefix);
        }
    }
    let b = snap_to_lattices(b);
    let base = b[mp - 1];
    let offsets: Vec<usize> = b[..mp].iter().map(|v| (v.re - base.re).round() as usize).collect();

    let mut series = LogPowerSeries::new(base, ArgSign::from_parity(mp), trunc);
    for d in 0..=trunc {
        let omega0 = base + d as f64;
        let mult = offsets.iter().filter(|&&o| o <= d).count();
        let order = mult + JET_GUARD;
        let mut f = LaurentJet::constant(omega0, Cplx::new(1.0, 0.0), order);
        for &bj in &b[..mp] {
            f = jet_mul(&f, &gamma_jet(bj, omega0, order))?;
        }
        for &bj in &b[mp..] {
            f = jet_mul(&f, &recip_gamma_jet(Cplx::new(1.0, 0.0) - bj, omega0, order))?;
        }
        // residue of F(ω)·x^ω: Σ_k F_{−1−k} · x^{ω₀} (ln x)^k / k!
        let mut fact = 1.0;
        for k in 0..f.pole_order() {
            if k > 0 {
                fact *= k as f64;
            }
            series.add_term(d, k, -f.coeff(-1 - k as i64) / fact);
        }
    }
    Ok(series)
}

/// A fundamental system of `[Π_j (θ−b_j) − ζ] u = 0` for fully general
/// exponents: per congruence class of size n_s, the prefix solutions of
/// sizes 1…n_s over that class's members, the class's exponents ahead of
/// all others.
pub fn fundamental_system_0q(b: &[Cplx], trunc: usize) -> Vec<LogPowerSeries> {
    let classes = congruence_partition(b);
    let mut out = Vec::with_capacity(b.len());
    for class in &classes.classes {
        let mut reordered: Vec<Cplx> = class.iter().map(|&(_, v)| v).collect();
        let class_indices: Vec<usize> = class.iter().map(|&(i, _)| i).collect();
        for (i, &v) in b.iter().enumerate() {
            if !class_indices.contains(&i) {
                reordered.push(v);
            }
        }
        for prefix in 1..=class.len() {
            out.push(
                g_m0_log_series(&reordered, prefix, trunc)
                    .expect("partition output is a valid prefix"),
            );
        }
    }
    out
}

/// Max coefficient magnitude of `[Π_j (θ − b_j) − ζ] u` over power
/// offsets below the truncation order.
pub fn meijer_ode_residual(b: &[Cplx], u: &LogPowerSeries) -> f64 {
    crate::series::theta_product_residual(b, u)
}

/// The dominant term as ζ → 0: smallest Re(exponent), ties broken by the
/// larger log power.
pub fn leading_asymptotics(u: &LogPowerSeries) -> Result<LogTerm> {
    u.leading()
}

/// Determinant of the θ-derivative matrix [θ^i y_j(ζ₀)] together with
/// the product of its row norms; |det| well above zero relative to that
/// product certifies linear independence at ζ₀.
pub fn generalized_wronskian(sols: &[LogPowerSeries], zeta0: Cplx) -> Result<(Cplx, f64)> {
    let n = sols.len();
    let mut rows = vec![vec![Cplx::new(0.0, 0.0); n]; n];
    for (j, s) in sols.iter().enumerate() {
        let col = s.theta_derivative_values(zeta0, n)?;
        for (i, &v) in col.iter().enumerate() {
            rows[i][j] = v;
        }
    }
    let norm_product: f64 = rows
        .iter()
        .map(|r| r.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt())
        .product();
    // Gaussian elimination with partial pivoting.
    let mut m = rows;
    let mut det = Cplx::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].norm().partial_cmp(&m[j][col].norm()).unwrap())
            .unwrap();
        if m[pivot][col].norm() == 0.0 {
            return Ok((Cplx::new(0.0, 0.0), norm_product));
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                let sub = factor * m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    Ok((det, norm_product))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cplx {
        Cplx::new(re, im)
    }

    fn rel(a: Cplx, b: Cplx) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn partition_examples() {
        // (0.3, 1.3, 0.7) → [(1.3, 0.3)], [(0.7)]
        let p = congruence_partition(&[c(0.3, 0.0), c(1.3, 0.0), c(0.7, 0.0)]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.classes[0].iter().map(|&(i, _)| i).collect::<Vec<_>>(), vec![1, 0]);
        assert_eq!(p.classes[1][0].0, 2);
        // (0, 0) → one class, multiset with repetition
        let p = congruence_partition(&[c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.classes[0].len(), 2);
        // (i, 1+i, 0.5) → [(1+i, i)], [(0.5)]
        let p = congruence_partition(&[c(0.0, 1.0), c(1.0, 1.0), c(0.5, 0.0)]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.classes[0].iter().map(|&(i, _)| i).collect::<Vec<_>>(), vec![1, 0]);
    }

    #[test]
    fn partition_is_sound() {
        let b = [c(0.25, 0.5), c(1.25, 0.5), c(-0.75, 0.5), c(0.25, -0.5), c(0.3, 0.0)];
        let p = congruence_partition(&b);
        assert_eq!(p.total(), b.len());
        for class in &p.classes {
            for &(_, x) in class {
                for &(_, y) in class {
                    assert!(near_integer(x - y));
                }
            }
            for w in class.windows(2) {
                assert!(w[0].1.re >= w[1].1.re - 1e-12);
            }
        }
        for (i, ci) in p.classes.iter().enumerate() {
            for cj in p.classes.iter().skip(i + 1) {
                assert!(!near_integer(ci[0].1 - cj[0].1));
            }
        }
    }

    #[test]
    fn params_validation() {
        assert!(GParams::new(1, 0, vec![], vec![c(0.0, 0.0)]).is_ok());
        assert!(GParams::new(0, 0, vec![], vec![]).is_err()); // q = 0
        assert!(GParams::new(1, 1, vec![c(0.0, 0.0)], vec![c(0.5, 0.0)]).is_ok());
        // p ≥ q
        assert!(GParams::new(1, 1, vec![c(0.0, 0.0)], vec![]).is_err());
        // pole separation: a1 − b1 = 2 ∈ ℕ
        assert!(GParams::new(1, 1, vec![c(2.5, 0.0)], vec![c(0.5, 0.0), c(0.1, 0.0)]).is_err());
    }

    #[test]
    fn residue_sum_m0_is_exactly_zero() {
        let params = GParams::new(0, 0, vec![], vec![c(0.4, 0.2), c(-0.3, 0.0)]).unwrap();
        let rep = meijer_g_residue_sum(&params, c(1.3, 0.4), 1e-10).unwrap();
        assert_eq!(rep.value, c(0.0, 0.0));
    }

    // Frozen 50-digit external reference values for the residue sum.
    #[test]
    fn residue_sum_reference_values() {
        let cases: Vec<(GParams, Cplx, Cplx)> = vec![
            (
                GParams::new(1, 0, vec![], vec![c(0.0, 0.0)]).unwrap(),
                c(1.0, 0.0),
                c(0.36787944117144233, 0.0), // e^{−1}
            ),
            (
                GParams::new(1, 0, vec![], vec![c(0.7, 0.0)]).unwrap(),
                c(2.0, 1.0),
                c(0.18551679808740566, -0.14862827687186290),
            ),
            (
                GParams::new(2, 0, vec![], vec![c(0.3, 0.0), c(-0.2, 0.0)]).unwrap(),
                c(1.1, 0.0),
                c(0.21345808487105438, 0.0),
            ),
            (
                GParams::new(2, 0, vec![], vec![c(0.0, 0.0), c(0.0, 0.0)]).unwrap(),
                c(0.25, 0.0),
                c(0.84204887648141667, 0.0), // 2 K₀(1)
            ),
            (
                GParams::new(2, 0, vec![], vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap(),
                c(0.6, 0.3),
                c(0.37265011176212501, -0.11304906600910629),
            ),
            (
                GParams::new(3, 0, vec![], vec![c(0.5, 0.0), c(0.5, 0.0), c(-0.3, 0.0)]).unwrap(),
                c(0.8, 0.0),
                c(0.25482038981182088, 0.0),
            ),
            (
                GParams::new(
                    2,
                    1,
                    vec![c(0.3, 0.2)],
                    vec![c(0.1, 0.0), c(-0.4, 0.1), c(0.7, 0.0)],
                )
                .unwrap(),
                c(0.6, 0.3),
                c(-1.0494581450530832, 0.026229236685410511),
            ),
            (
                GParams::new(
                    2,
                    1,
                    vec![c(0.25, 0.0), c(1.8, 0.0)],
                    vec![c(0.4, 0.0), c(-0.15, 0.0), c(1.3, 0.0)],
                )
                .unwrap(),
                c(0.9, 0.0),
                c(-0.21840295368676774, 0.0),
            ),
        ];
        for (params, zeta, want) in cases {
            let rep = meijer_g_residue_sum(&params, zeta, 1e-13).unwrap();
            assert!(
                rel(rep.value, want) < 1e-11,
                "G^{{{},{}}} params {:?} at {zeta}: got {} want {want}",
                params.m(),
                params.n(),
                params.b(),
                rep.value
            );
        }
    }

    #[test]
    fn generic_expansion_matches_residue_sum() {
        let cases = vec![
            GParams::new(2, 0, vec![], vec![c(0.3, 0.0), c(-0.2, 0.4)]).unwrap(),
            GParams::new(
                2,
                1,
                vec![c(0.3, 0.2)],
                vec![c(0.1, 0.0), c(-0.4, 0.1), c(0.7, 0.3)],
            )
            .unwrap(),
            GParams::new(
                3,
                0,
                vec![c(0.9, -0.4)],
                vec![c(0.45, 0.0), c(-0.21, 0.7), c(0.13, -0.3), c(1.02, 0.11)],
            )
            .unwrap(),
        ];
        for params in cases {
            let zeta = c(0.8, 0.35);
            let lhs = meijer_g_generic(&params, zeta, 1e-12).unwrap();
            let rhs = meijer_g_residue_sum(&params, zeta, 1e-12).unwrap();
            assert!(
                rel(lhs.value, rhs.value) < 1e-10,
                "params {:?}: generic {} vs residue {}",
                params.b(),
                lhs.value,
                rhs.value
            );
        }
    }

    #[test]
    fn generic_expansion_rejects_congruent_front() {
        let params = GParams::new(2, 0, vec![], vec![c(0.3, 0.0), c(1.3, 0.0)]).unwrap();
        assert!(matches!(
            meijer_g_generic(&params, c(0.5, 0.0), 1e-10),
            Err(Error::NonGenericParameters(_))
        ));
    }

    #[test]
    fn g1p_identity_holds() {
        // m=1, n=0: collapses to the same single term
        let p1 = GParams::new(1, 0, vec![], vec![c(0.4, 0.0), c(-0.3, 0.2)]).unwrap();
        assert!(g1p_identity_check(&p1, c(0.7, 0.1)).unwrap() < 1e-12);
        // genuine multi-term case
        let p2 = GParams::new(
            2,
            1,
            vec![c(0.3, 0.2)],
            vec![c(0.1, 0.0), c(-0.4, 0.1), c(0.7, 0.3)],
        )
        .unwrap();
        assert!(g1p_identity_check(&p2, c(0.6, 0.25)).unwrap() < 1e-9);
        // m=0: both sides zero
        let p0 = GParams::new(0, 0, vec![], vec![c(0.4, 0.0)]).unwrap();
        assert!(g1p_identity_check(&p0, c(0.5, 0.0)).unwrap() == 0.0);
    }

    #[test]
    fn prefix_one_matches_hypergeometric_coefficients() {
        // the residue-built series must equal x^{b₁} Σ (−1)^k ζ^k /
        // (k! Π_{j≥2} Γ(1+b₁−b_j+k)) coefficient-wise
        let b = [c(0.4, 0.1), c(-0.3, 0.0), c(0.22, -0.5)];
        let s = g_m0_log_series(&b, 1, 10).unwrap();
        assert_eq!(s.sign(), ArgSign::Minus);
        let mut fact = 1.0;
        for k in 0..=10usize {
            if k > 0 {
                fact *= k as f64;
            }
            let mut want = Cplx::new(if k % 2 == 0 { 1.0 } else { -1.0 } / fact, 0.0);
            for &bj in &b[1..] {
                want *= recip_gamma(c(1.0, 0.0) + b[0] - bj + k as f64);
            }
            let got = s.coeff(k, 0);
            assert!(
                (got - want).norm() <= 1e-12 * want.norm(),
                "k={k}: got {got} want {want}"
            );
        }
    }

    #[test]
    fn double_pole_structure() {
        // b=(0,0), prefix 2: leading terms C·ln ζ + D with C ≠ 0
        let s = g_m0_log_series(&[c(0.0, 0.0), c(0.0, 0.0)], 2, 6).unwrap();
        assert_eq!(s.sign(), ArgSign::Plus);
        let lead = s.leading().unwrap();
        assert_eq!(lead.log_power, 1);
        assert!(lead.coeff.norm() > 0.1);
        assert!(s.max_log_power() == 1);
        // b=(1,0), prefix 2: ζ⁰ term carries C₂,₂ = Γ(b₁−b₂) = Γ(1) = 1
        let s = g_m0_log_series(&[c(1.0, 0.0), c(0.0, 0.0)], 2, 6).unwrap();
        let c00 = s.coeff(0, 0);
        assert!((c00 - c(1.0, 0.0)).norm() < 1e-13, "C₂,₂ = {c00}");
    }

    #[test]
    fn bad_prefix_rejected() {
        // prefix not sorted by non-increasing Re
        assert_eq!(
            g_m0_log_series(&[c(0.0, 0.0), c(1.0, 0.0)], 2, 4).unwrap_err(),
            Error::BadPrefix
        );
        // congruent entry above the prefix hiding in the tail
        assert_eq!(
            g_m0_log_series(&[c(0.0, 0.0), c(1.0, 0.0)], 1, 4).unwrap_err(),
            Error::BadPrefix
        );
        // prefix mixing congruence classes
        assert_eq!(
            g_m0_log_series(&[c(0.5, 0.0), c(0.0, 0.0)], 2, 4).unwrap_err(),
            Error::BadPrefix
        );
    }

    #[test]
    fn log_series_evaluates_to_reference_g_values() {
        // prefix solutions evaluated at ζ = 0.5−0.2i against 50-digit
        // values of the corresponding G functions at (−1)^{m'} ζ
        let zeta = c(0.5, -0.2);
        let trunc = 24;
        // y₁ = G^{1,0}_{0,3}(0.5; 0.5,−0.3 | −ζ)
        let y1 = g_m0_log_series(&[c(0.5, 0.0), c(0.5, 0.0), c(-0.3, 0.0)], 1, trunc).unwrap();
        let v1 = y1.eval(zeta).unwrap();
        assert!(rel(v1, c(0.28575287355666186, 0.97866271084944617)) < 1e-12, "y1 {v1}");
        // y₂ = G^{2,0}_{0,3}(0.5,0.5; −0.3 | +ζ)
        let y2 = g_m0_log_series(&[c(0.5, 0.0), c(0.5, 0.0), c(-0.3, 0.0)], 2, trunc).unwrap();
        let v2 = y2.eval(zeta).unwrap();
        assert!(rel(v2, c(0.39643777101485007, 0.081560612656771987)) < 1e-12, "y2 {v2}");
        // y₃ = G^{1,0}_{0,3}(−0.3; 0.5,0.5 | −ζ)
        let y3 = g_m0_log_series(&[c(-0.3, 0.0), c(0.5, 0.0), c(0.5, 0.0)], 1, trunc).unwrap();
        let v3 = y3.eval(zeta).unwrap();
        assert!(rel(v3, c(0.30619133486882336, -0.91013017908878494)) < 1e-12, "y3 {v3}");
        // triple coincidence: G^{3,0}_{0,3}(0.5,0.5,0.5 | −ζ)
        let y = g_m0_log_series(&[c(0.5, 0.0); 3], 3, trunc).unwrap();
        let v = y.eval(zeta).unwrap();
        assert!(rel(v, c(0.11889623058027206, -0.67568025923323907)) < 1e-12, "triple {v}");
        // unit-spaced class: G^{2,0}_{0,2}(1.2, 0.2 | +ζ)
        let y = g_m0_log_series(&[c(1.2, 0.0), c(0.2, 0.0)], 2, trunc).unwrap();
        let v = y.eval(zeta).unwrap();
        assert!(rel(v, c(0.38270384451588662, 0.052532751610315948)) < 1e-12, "spaced {v}");
    }

    #[test]
    fn fundamental_system_structure_and_residuals() {
        let cases: Vec<Vec<Cplx>> = vec![
            vec![c(0.4, 0.0), c(-0.35, 0.2)],                  // generic
            vec![c(0.0, 0.0), c(0.0, 0.0)],                    // double
            vec![c(1.0, 0.0), c(0.0, 0.0)],                    // unit spacing
            vec![c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0)],       // triple
            vec![c(0.3, 0.0), c(1.3, 0.0), c(-0.6, 0.4)],      // mixed
        ];
        for b in cases {
            let sys = fundamental_system_0q(&b, 12);
            assert_eq!(sys.len(), b.len());
            for u in &sys {
                let r = meijer_ode_residual(&b, u);
                let scale = u.max_abs_coeff();
                assert!(r <= 1e-10 * scale, "b={b:?}: residual {r} scale {scale}");
            }
            let (det, norms) = generalized_wronskian(&sys, c(0.7, 0.0)).unwrap();
            assert!(det.norm() > 1e-8 * norms.max(1e-300), "b={b:?}: det {det}");
            // log ceiling: max log power over the system = largest class size − 1
            let max_class = congruence_partition(&b)
                .classes
                .iter()
                .map(Vec::len)
                .max()
                .unwrap();
            let max_log = sys.iter().map(|u| u.max_log_power()).max().unwrap();
            assert_eq!(max_log, max_class - 1, "b={b:?}");
        }
    }

    #[test]
    fn generic_case_reduces_to_simple_ladders() {
        let b = vec![c(0.4, 0.0), c(-0.35, 0.2)];
        let sys = fundamental_system_0q(&b, 10);
        for u in &sys {
            assert_eq!(u.max_log_power(), 0);
            assert_eq!(u.sign(), ArgSign::Minus);
        }
        // leading exponents are the b's (class order may permute)
        let mut leads: Vec<f64> = sys.iter().map(|u| u.leading().unwrap().exponent.re).collect();
        leads.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((leads[0] - (-0.35)).abs() < 1e-12 && (leads[1] - 0.4).abs() < 1e-12);
    }

    #[test]
    fn generic_symbolic_system_solves_its_equation() {
        let params = GParams::new(
            2,
            0,
            vec![c(0.3, -0.2)],
            vec![c(0.45, 0.0), c(-0.21, 0.7), c(0.13, -0.3)],
        )
        .unwrap();
        let sys = meijer_fundamental_system_generic(&params, 12).unwrap();
        assert_eq!(sys.len(), 3);
        // these solve [Π(θ−b_j) − (−1)^{m+n−p} ζ Π(θ−a_k+1)] u = 0
        for u in &sys {
            let mut left = u.clone();
            for &bj in params.b() {
                left = left.theta_minus(bj);
            }
            let mut right = u.clone();
            for &ak in params.a() {
                right = right.theta_minus(ak - 1.0);
            }
            let w = if (params.m() + params.n() + params.p()) % 2 == 0 { 1.0 } else { -1.0 };
            let r = left.sub(&right.mul_zeta().scaled(c(w, 0.0)));
            let res = r.max_abs_coeff_below(u.trunc_order());
            assert!(res <= 1e-10 * u.max_abs_coeff(), "residual {res}");
        }
        let leads: Vec<Cplx> = sys.iter().map(|u| u.leading().unwrap().exponent).collect();
        for (j, &bj) in params.b().iter().enumerate() {
            assert!((leads[j] - bj).norm() < 1e-12);
        }
    }

    #[test]
    fn leading_asymptotics_rules() {
        let b = vec![c(0.2, 0.0), c(0.2, 0.0)];
        let sys = fundamental_system_0q(&b, 8);
        let l1 = leading_asymptotics(&sys[0]).unwrap();
        assert_eq!(l1.log_power, 0);
        assert!((l1.exponent - c(0.2, 0.0)).norm() < 1e-12);
        assert!(l1.coeff.norm() > 0.0);
        let l2 = leading_asymptotics(&sys[1]).unwrap();
        assert_eq!(l2.log_power, 1);
        assert!((l2.exponent - c(0.2, 0.0)).norm() < 1e-12);
    }
}
