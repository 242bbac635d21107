//! The nonhomogeneous Nth-order Euler equation
//!
//! ```text
//! z^{-N} (z d/dz − λ₁) ⋯ (z d/dz − λ_N) y(z) = z^{-N} f(z)
//! ```
//!
//! — homogeneous basis z^λ (ln z)^m from the indicial polynomial's root
//! multiplicities, and the particular solution as nested integrals
//!
//! ```text
//! u_j(w) = ∫₀¹ u_{j+1}(w t) t^{−λ_j−1} dt ,   u_{N+1} = f ,
//! ```
//!
//! evaluated level by level with singularity-graded adaptive quadrature
//! along the straight segment from 0 to z. The nested form converges
//! exactly when each level's integrand is integrable at 0, i.e. when
//! every Re(λ_j) lies below f's leading exponent there — probed rather
//! than assumed, since continuity of f alone does not guarantee it.

use crate::cplx::{require_finite, Cplx};
use crate::quad::{integrate, QuadratureConfig};
use crate::{Error, Result};

/// Grouping of exponents into pairwise distinct values with
/// multiplicities summing to N.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityGroups {
    pub groups: Vec<(Cplx, usize)>,
}

impl MultiplicityGroups {
    pub fn total(&self) -> usize {
        self.groups.iter().map(|&(_, m)| m).sum()
    }
}

/// Groups equal (within 1e-9) exponents, first-occurrence order.
pub fn group_multiplicities(lambdas: &[Cplx]) -> MultiplicityGroups {
    let mut groups: Vec<(Cplx, usize)> = Vec::new();
    for &l in lambdas {
        match groups.iter_mut().find(|(v, _)| (*v - l).norm() <= 1e-9) {
            Some((_, m)) => *m += 1,
            None => groups.push((l, 1)),
        }
    }
    MultiplicityGroups { groups }
}

/// P_N(λ) = Π_j (λ − λ_j).
pub fn indicial_polynomial(lambdas: &[Cplx], lambda: Cplx) -> Cplx {
    lambdas.iter().fold(Cplx::new(1.0, 0.0), |p, &lj| p * (lambda - lj))
}

/// The N pairs (λ, m), 0 ≤ m < multiplicity(λ); each stands for the
/// basis element z^λ (ln z)^m.
pub fn homogeneous_basis(lambdas: &[Cplx]) -> Vec<(Cplx, usize)> {
    let mut out = Vec::with_capacity(lambdas.len());
    for (value, mult) in group_multiplicities(lambdas).groups {
        for m in 0..mult {
            out.push((value, m));
        }
    }
    out
}

/// z^λ (ln z)^m with principal branches.
pub fn homogeneous_term_eval(exponent: Cplx, log_power: usize, z: Cplx) -> Result<Cplx> {
    if z == Cplx::new(0.0, 0.0) {
        return Err(Error::ZeroPoint);
    }
    let lz = z.ln();
    let mut v = (exponent * lz).exp();
    for _ in 0..log_power {
        v *= lz;
    }
    Ok(v)
}

/// Right-hand side f, continuous on the integration segment.
pub struct RhsFunction {
    evaluator: Box<dyn Fn(Cplx) -> Cplx + Send + Sync>,
}

impl RhsFunction {
    pub fn new(f: impl Fn(Cplx) -> Cplx + Send + Sync + 'static) -> Self {
        RhsFunction { evaluator: Box::new(f) }
    }

    pub fn eval(&self, z: Cplx) -> Cplx {
        (self.evaluator)(z)
    }
}

/// Estimated leading exponent of f at 0 along the segment towards z:
/// log-log slope over t ∈ {1e-4, 1e-6, 1e-8}. +∞ when f vanishes there.
fn leading_exponent_probe(f: &RhsFunction, z: Cplx) -> f64 {
    let probes = [1e-4f64, 1e-6, 1e-8];
    let mags: Vec<f64> = probes.iter().map(|&t| f.eval(z * t).norm()).collect();
    if mags.iter().all(|&m| m < 1e-280) {
        return f64::INFINITY;
    }
    if mags[0] < 1e-280 || mags[2] < 1e-280 {
        return f64::INFINITY;
    }
    (mags[0].ln() - mags[2].ln()) / (probes[0].ln() - probes[2].ln())
}

/// The particular solution at z: nested inner integrals along the
/// straight segment from 0 to z. For f(z) = z^k with k off the exponent
/// set this equals z^k / P_N(k).
///
/// Errors: [`Error::NonIntegrableAtOrigin`] when the probe finds a level
/// whose integrand exponent at 0 is ≤ −1, [`Error::QuadratureFailure`]
/// when the subdivision budget runs out short of tolerance.
pub fn particular_solution(
    lambdas: &[Cplx],
    f: &RhsFunction,
    z: Cplx,
    quad: &QuadratureConfig,
) -> Result<Cplx> {
    if z == Cplx::new(0.0, 0.0) {
        return Err(Error::ZeroPoint);
    }
    for &l in lambdas {
        require_finite(l, "λ must be finite")?;
    }
    let khat = leading_exponent_probe(f, z);
    for (level, &l) in lambdas.iter().enumerate() {
        // level integrand ~ t^{k̂ − λ − 1} near 0
        if l.re >= khat - 1e-6 {
            return Err(Error::NonIntegrableAtOrigin { level, exponent: khat - l.re - 1.0 });
        }
    }
    nested_level(lambdas, f, z, khat, quad, 0)
}

fn nested_level(
    lambdas: &[Cplx],
    f: &RhsFunction,
    w: Cplx,
    khat: f64,
    quad: &QuadratureConfig,
    level: usize,
) -> Result<Cplx> {
    if level == lambdas.len() {
        return Ok(f.eval(w));
    }
    let lam = lambdas[level];
    // graded substitution t = s^κ, chosen so the integrand gains a few
    // derivatives at the endpoint
    let kappa = match quad.grading {
        Some(k) => k,
        None => {
            if khat.is_infinite() {
                1.0
            } else {
                let a1 = khat - lam.re; // exponent + 1 of the raw integrand
                (3.0 / a1).ceil().clamp(1.0, 40.0)
            }
        }
    };
    // κ(−λ−1) + κ − 1 = −κλ − 1 on the s power after substitution
    let exponent = -kappa * lam - 1.0;
    let integrand = |s: f64| -> Cplx {
        if s <= 0.0 {
            return Cplx::new(0.0, 0.0);
        }
        let t = s.powf(kappa);
        match nested_level(lambdas, f, w * t, khat, quad, level + 1) {
            Ok(v) => v * kappa * (exponent * s.ln()).exp(),
            Err(_) => Cplx::new(f64::NAN, f64::NAN),
        }
    };
    integrate(&integrand, 0.0, 1.0, quad.rel_tol, quad.max_subdivisions).map(|(v, _)| v)
}

/// |τ_N y(z) − z^{−N} f(z)| with τ_N applied through 4th-order central
/// stencils for θ^k acting on g(t) = y(z e^t), step h = 1e-3.
pub fn nonhomo_residual(
    lambdas: &[Cplx],
    y: &dyn Fn(Cplx) -> Cplx,
    f: &RhsFunction,
    z: Cplx,
) -> f64 {
    let n = lambdas.len();
    assert!(n <= 4, "finite-difference stencils provided up to order 4");
    let h = 1e-3;
    let g = |t: f64| y(z * Cplx::new(t, 0.0).exp());
    // θ^k y(z) = g^{(k)}(0); 4th-order central stencils
    let theta_pows: Vec<Cplx> = (0..=n).map(|k| stencil_derivative(&g, k, h)).collect();
    // Π (θ − λ_j) expanded to monic coefficients c_k of θ^k
    let mut coeffs = vec![Cplx::new(1.0, 0.0)];
    for &l in lambdas {
        let mut next = vec![Cplx::new(0.0, 0.0); coeffs.len() + 1];
        for (k, &ck) in coeffs.iter().enumerate() {
            next[k + 1] += ck;
            next[k] -= l * ck;
        }
        coeffs = next;
    }
    let mut applied = Cplx::new(0.0, 0.0);
    for (k, &ck) in coeffs.iter().enumerate() {
        applied += ck * theta_pows[k];
    }
    let zn = z.powi(-(n as i32));
    (zn * applied - zn * f.eval(z)).norm()
}

fn stencil_derivative(g: &dyn Fn(f64) -> Cplx, k: usize, h: f64) -> Cplx {
    match k {
        0 => g(0.0),
        1 => {
            (g(-2.0 * h) - 8.0 * g(-h) + 8.0 * g(h) - g(2.0 * h)) / (12.0 * h)
        }
        2 => {
            (-g(-2.0 * h) + 16.0 * g(-h) - 30.0 * g(0.0) + 16.0 * g(h) - g(2.0 * h))
                / (12.0 * h * h)
        }
        3 => {
            (g(-3.0 * h) - 8.0 * g(-2.0 * h) + 13.0 * g(-h) - 13.0 * g(h) + 8.0 * g(2.0 * h)
                - g(3.0 * h))
                / (-8.0 * h * h * h)
        }
        4 => {
            (-g(-3.0 * h) / 6.0 + 2.0 * g(-2.0 * h) - 13.0 / 2.0 * g(-h) + 28.0 / 3.0 * g(0.0)
                - 13.0 / 2.0 * g(h)
                + 2.0 * g(2.0 * h)
                - g(3.0 * h) / 6.0)
                / (h * h * h * h)
        }
        _ => unreachable!("order capped at 4"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cplx {
        Cplx::new(re, im)
    }

    #[test]
    fn grouping() {
        let g = group_multiplicities(&[c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]);
        assert_eq!(g.groups, vec![(c(1.0, 0.0), 2), (c(2.0, 0.0), 1)]);
        assert_eq!(g.total(), 3);
        let g = group_multiplicities(&[c(0.0, 1.0); 3]);
        assert_eq!(g.groups, vec![(c(0.0, 1.0), 3)]);
        let g = group_multiplicities(&[c(0.5, 0.0)]);
        assert_eq!(g.groups.len(), 1);
    }

    #[test]
    fn indicial_values() {
        let l = [c(1.0, 0.0), c(2.0, 0.0)];
        assert_eq!(indicial_polynomial(&l, c(1.0, 0.0)), c(0.0, 0.0));
        assert_eq!(indicial_polynomial(&l, c(0.0, 0.0)), c(2.0, 0.0));
        let l = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        assert_eq!(indicial_polynomial(&l, c(4.0, 0.0)), c(6.0, 0.0));
    }

    #[test]
    fn basis_shapes() {
        assert_eq!(
            homogeneous_basis(&[c(1.0, 0.0), c(1.0, 0.0)]),
            vec![(c(1.0, 0.0), 0), (c(1.0, 0.0), 1)]
        );
        assert_eq!(homogeneous_basis(&[c(0.0, 0.0)]), vec![(c(0.0, 0.0), 0)]);
        assert_eq!(
            homogeneous_basis(&[c(2.0, 0.0), c(5.0, 0.0)]),
            vec![(c(2.0, 0.0), 0), (c(5.0, 0.0), 0)]
        );
    }

    #[test]
    fn stencils_reproduce_theta_powers() {
        // y = z^3: θ^k y = 3^k z^3
        let z = c(0.9, 0.4);
        let y = |w: Cplx| w.powu(3);
        let g = |t: f64| y(z * Cplx::new(t, 0.0).exp());
        for k in 0..=4usize {
            let want = 3.0f64.powi(k as i32) * y(z);
            let got = stencil_derivative(&g, k, 1e-3);
            assert!(
                (got - want).norm() < 1e-7 * want.norm(),
                "k={k}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn particular_polynomial_oracle() {
        // f = z^k: result z^k / P_N(k)
        let cfg = QuadratureConfig::default();
        let cases: Vec<(Vec<Cplx>, u32)> = vec![
            (vec![c(-1.0, 0.0)], 0),
            (vec![c(1.0, 0.0), c(2.0, 0.0)], 3),
            (vec![c(0.3, 0.0), c(-0.7, 0.0)], 1),
            (vec![c(0.2, 0.5), c(-0.5, -0.3), c(0.9, 0.0)], 2),
        ];
        for (lambdas, k) in cases {
            let f = RhsFunction::new(move |w: Cplx| w.powu(k));
            for z in [c(1.0, 0.0), c(0.6, 0.45)] {
                let got = particular_solution(&lambdas, &f, z, &cfg).unwrap();
                let want = z.powu(k) / indicial_polynomial(&lambdas, c(k as f64, 0.0));
                assert!(
                    (got - want).norm() < 1e-8 * want.norm().max(1e-10),
                    "λ={lambdas:?} k={k} z={z}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn particular_nonpolynomial_reference() {
        // λ=(−0.3,−0.5), f=exp, z=0.9: 40-digit nested-quadrature oracle
        let cfg = QuadratureConfig::default();
        let f = RhsFunction::new(|w: Cplx| w.exp());
        let got = particular_solution(&[c(-0.3, 0.0), c(-0.5, 0.0)], &f, c(0.9, 0.0), &cfg).unwrap();
        assert!((got - c(7.2107609123492925, 0.0)).norm() < 1e-7, "{got}");
    }

    #[test]
    fn zero_rhs_and_superposition() {
        let cfg = QuadratureConfig::default();
        let zero = RhsFunction::new(|_| c(0.0, 0.0));
        let lam = [c(-0.4, 0.0), c(-1.2, 0.0)];
        let v = particular_solution(&lam, &zero, c(0.8, 0.2), &cfg).unwrap();
        assert!(v.norm() < 1e-12);
        // linearity in f
        let f1 = RhsFunction::new(|w: Cplx| w.powu(1));
        let f2 = RhsFunction::new(|w: Cplx| w.powu(2) * c(0.0, 1.5));
        let fsum = RhsFunction::new(|w: Cplx| w.powu(1) + w.powu(2) * c(0.0, 1.5));
        let z = c(0.7, 0.1);
        let a = particular_solution(&lam, &f1, z, &cfg).unwrap();
        let b = particular_solution(&lam, &f2, z, &cfg).unwrap();
        let s = particular_solution(&lam, &fsum, z, &cfg).unwrap();
        assert!((a + b - s).norm() < 1e-8 * s.norm().max(1e-12));
    }

    #[test]
    fn non_integrable_detected() {
        let cfg = QuadratureConfig::default();
        // f(0) ≠ 0 with Re λ > 0: inner integrand t^{−λ−1} diverges
        let f = RhsFunction::new(|_| c(1.0, 0.0));
        let r = particular_solution(&[c(0.3, 0.0)], &f, c(1.0, 0.0), &cfg);
        assert!(matches!(r, Err(Error::NonIntegrableAtOrigin { .. })), "{r:?}");
        // resonance λ = k likewise trips the probe
        let f = RhsFunction::new(|w: Cplx| w.powu(2));
        let r = particular_solution(&[c(2.0, 0.0)], &f, c(1.0, 0.0), &cfg);
        assert!(matches!(r, Err(Error::NonIntegrableAtOrigin { .. })));
    }

    #[test]
    fn residual_checks() {
        let cfg = QuadratureConfig::default();
        // particular solution solves the equation
        let lam = vec![c(1.0, 0.0), c(2.0, 0.0)];
        let f = RhsFunction::new(|w: Cplx| w.powu(3));
        let z = c(1.0, 0.0);
        let lam2 = lam.clone();
        let cfg2 = cfg;
        let y = move |w: Cplx| {
            let f = RhsFunction::new(|u: Cplx| u.powu(3));
            particular_solution(&lam2, &f, w, &cfg2).unwrap()
        };
        let r = nonhomo_residual(&lam, &y, &f, z);
        assert!(r < 1e-6 * f.eval(z).norm().max(1.0), "residual {r}");
        // homogeneous basis elements have residual ≤ stencil noise with f=0
        let zero = RhsFunction::new(|_| c(0.0, 0.0));
        let lam = vec![c(1.0, 0.0), c(1.0, 0.0)];
        for (e, m) in homogeneous_basis(&lam) {
            let y = move |w: Cplx| homogeneous_term_eval(e, m, w).unwrap();
            let r = nonhomo_residual(&lam, &y, &zero, c(0.9, 0.3));
            assert!(r < 1e-6, "basis ({e},{m}): residual {r}");
        }
        // non-solution detected: y = z^{λ₁+1} with N=1, f=0
        let lam = vec![c(0.4, 0.0)];
        let y = |w: Cplx| w.powc(c(1.4, 0.0));
        let r = nonhomo_residual(&lam, &y, &zero, c(1.1, 0.0));
        assert!(r > 0.5);
    }
}
