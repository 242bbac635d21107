//! The generalized eigenvalue problem for the Nth-order equidimensional
//! operator
//!
//! ```text
//! z^{-N} (z d/dz − λ₁) ⋯ (z d/dz − λ_N) y = μ y ,
//! ```
//!
//! reduced through ζ = μ (z/N)^N to `[Π_j (θ − λ_j/N) − ζ] η = 0` and
//! solved by the log-power fundamental systems of [`crate::meijer`].
//! Bessel I/K oracles (built solely on the hypergeometric path) provide
//! independent cross-checks for the classical N = 2 special cases.

use crate::cplx::{require_finite, Cplx};
use crate::hypergeo::{self, near_integer, PhqParams};
use crate::meijer::{fundamental_system_0q, meijer_ode_residual};
use crate::series::LogPowerSeries;
use crate::{Error, Result};

/// Order, exponents λ₁…λ_N and spectral parameter μ.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerProblem {
    lambdas: Vec<Cplx>,
    mu: Cplx,
}

impl EulerProblem {
    pub fn new(lambdas: Vec<Cplx>, mu: Cplx) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::InvalidParams("need at least one exponent λ"));
        }
        for &l in &lambdas {
            require_finite(l, "λ must be finite")?;
        }
        require_finite(mu, "μ must be finite")?;
        Ok(EulerProblem { lambdas, mu })
    }

    pub fn order(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[Cplx] {
        &self.lambdas
    }

    pub fn mu(&self) -> Cplx {
        self.mu
    }

    /// The reduced exponents b_j = λ_j / N.
    pub fn meijer_exponents(&self) -> Vec<Cplx> {
        let n = self.order() as f64;
        self.lambdas.iter().map(|&l| l / n).collect()
    }

    /// True when (λ_j − λ_{j'})/N ∉ ℤ for every pair.
    pub fn is_generic(&self) -> bool {
        let b = self.meijer_exponents();
        for (i, &x) in b.iter().enumerate() {
            for &y in b.iter().skip(i + 1) {
                if near_integer(x - y) {
                    return false;
                }
            }
        }
        true
    }
}

/// The substitution ζ = μ (z/N)^N connecting the two variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubstitutionMap {
    pub order: usize,
    pub mu: Cplx,
}

impl SubstitutionMap {
    /// ζ(z), computed as exact products (no root extraction, so no branch
    /// choice is involved here).
    pub fn zeta(&self, z: Cplx) -> Cplx {
        self.mu * (z / self.order as f64).powu(self.order as u32)
    }
}

impl std::fmt::Display for SubstitutionMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "zeta = mu*(z/N)^N with N = {}, mu = {}; eta(zeta) = y(mu, z)",
            self.order,
            crate::cplx::format_cplx(self.mu)
        )
    }
}

/// Reduction to Meijer form: b_j = λ_j/N plus the variable map.
pub fn euler_to_meijer(problem: &EulerProblem) -> (Vec<Cplx>, SubstitutionMap) {
    (
        problem.meijer_exponents(),
        SubstitutionMap { order: problem.order(), mu: problem.mu },
    )
}

/// One member of a fundamental system, as a log-power series in ζ.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerSolution {
    pub series: LogPowerSeries,
    pub problem: EulerProblem,
}

/// N solutions assembled from the congruence classes of λ_j/N. In the
/// generic case every class is a singleton and the members reduce to the
/// classical power-times-hypergeometric closed forms.
pub fn euler_fundamental_system(problem: &EulerProblem, trunc: usize) -> Vec<EulerSolution> {
    let b = problem.meijer_exponents();
    fundamental_system_0q(&b, trunc)
        .into_iter()
        .map(|series| EulerSolution { series, problem: problem.clone() })
        .collect()
}

/// Evaluates a solution at z through ζ = μ(z/N)^N, principal branches.
pub fn euler_eval(solution: &EulerSolution, z: Cplx) -> Result<Cplx> {
    if solution.problem.mu == Cplx::new(0.0, 0.0) {
        return Err(Error::DegenerateSpectralParameter);
    }
    if z == Cplx::new(0.0, 0.0) {
        return Err(Error::ZeroPoint);
    }
    let (_, map) = euler_to_meijer(&solution.problem);
    solution.series.eval(map.zeta(z))
}

/// Symbolic ODE residual of the solution's series against
/// `[Π_j (θ − λ_j/N) − ζ]`.
pub fn euler_residual(problem: &EulerProblem, solution: &EulerSolution) -> f64 {
    meijer_ode_residual(&problem.meijer_exponents(), &solution.series)
}

/// Modified Bessel I_ν(x) = (x/2)^ν Σ_k (x²/4)^k / (k! Γ(ν+k+1)), built
/// solely from the regularized hypergeometric series (independent of the
/// residue-summation path). Well-defined for every ν, including negative
/// integers.
pub fn bessel_i_oracle(nu: Cplx, x: Cplx) -> Result<Cplx> {
    if x == Cplx::new(0.0, 0.0) {
        return Err(Error::ZeroPoint);
    }
    let params = PhqParams::new(vec![], vec![nu + 1.0])?;
    let f = hypergeo::phq_regularized(&params, x * x / 4.0, 1e-14)?;
    Ok((x / 2.0).powc(nu) * f.value)
}

/// Modified Bessel K_ν(x): π/(2 sin πν)·(I_{−ν} − I_ν) off the integers,
/// symmetric Richardson extrapolation over ν ± ε, ε ∈ {1e-3, 1e-4}, at
/// integer orders. Oracle accuracy ≈ 1e-7 at integer ν (series-exact
/// otherwise).
pub fn bessel_k_oracle(nu: Cplx, x: Cplx) -> Result<Cplx> {
    if x == Cplx::new(0.0, 0.0) {
        return Err(Error::ZeroPoint);
    }
    let direct = |v: Cplx| -> Result<Cplx> {
        let half_pi = std::f64::consts::PI / 2.0;
        Ok(half_pi / (std::f64::consts::PI * v).sin()
            * (bessel_i_oracle(-v, x)? - bessel_i_oracle(v, x)?))
    };
    if !near_integer(nu) {
        return direct(nu);
    }
    // K is even in ν, so the symmetric average kills the O(ε) term and
    // Richardson over ε² removes the next one.
    let sym = |eps: f64| -> Result<Cplx> {
        Ok((direct(nu + eps)? + direct(nu - eps)?) / 2.0)
    };
    let (e1, e2) = (1e-3, 1e-4);
    let (s1, s2) = (sym(e1)?, sym(e2)?);
    Ok((s2 * e1 * e1 - s1 * e2 * e2) / (e1 * e1 - e2 * e2))
}
