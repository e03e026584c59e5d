//! Normalized radial wave functions for bound states.
//!
//! A bound level `(n, l)` with quantization parameter `eps > 0` and edge
//! exponent `nu = (1 + a)/2` has
//!
//! ```text
//! u(r) = N e^{-eps r/b} (1 - e^{-r/b})^{nu} 2F1(-n, n + 2(eps+nu); 2 eps + 1; e^{-r/b})
//! ```
//!
//! which can equivalently be written through a Jacobi polynomial in
//! `1 - 2 e^{-r/b}`. The closed-form normalization constant is
//!
//! ```text
//! N = 1/Gamma(2 eps + 1) * sqrt( 2 eps (n+eps+nu) / (b (n+nu))
//!       * Gamma(n+2eps+1) Gamma(n+2eps+2nu) / (n! Gamma(n+2nu)) )
//! ```
//!
//! evaluated in log space. (Deriving N from the Jacobi orthogonality
//! integrals with the Jacobian `dr = b dx/(1-x)` of `x = 1 - 2 e^{-r/b}`
//! fixes the leading factor at `2 eps / b`; a quadrature of `u^2` is used as
//! an independent check throughout the tests.)

use crate::approx_scheme::ApproxScheme;
use crate::error::{Error, Result};
use crate::potential::{PotentialParams, QuantumState};
use crate::quadrature;
use crate::special::{factorial, hyp2f1_terminating, log_gamma, pochhammer};
use crate::spectrum;

/// Everything needed to evaluate one bound radial wave function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionSpec {
    pub params: PotentialParams,
    pub scheme: ApproxScheme,
    pub state: QuantumState,
    /// Quantization parameter; positive for bound states.
    pub epsilon: f64,
    /// Edge exponent `(1 + a)/2`.
    pub nu_l: f64,
    /// Closed-form normalization constant.
    pub norm_constant: f64,
}

/// The closed-form normalization constant for given `(b, n, eps, nu)`.
///
/// Computed through log-gamma differences so that large arguments (e.g.
/// `n + 2 eps` of order 40) stay in range.
pub fn normalization_constant(b: f64, n: u32, epsilon: f64, nu: f64) -> Result<f64> {
    if !(epsilon > 0.0) {
        return Err(Error::Unbound);
    }
    for arg in [
        2.0 * epsilon + 1.0,
        n as f64 + 2.0 * epsilon + 1.0,
        n as f64 + 2.0 * epsilon + 2.0 * nu,
        n as f64 + 2.0 * nu,
    ] {
        if !(arg > 0.0) {
            return Err(Error::NonPositiveGammaArgument(arg));
        }
    }
    let n_f = n as f64;
    let ln_ratio = log_gamma(n_f + 2.0 * epsilon + 1.0)?
        + log_gamma(n_f + 2.0 * epsilon + 2.0 * nu)?
        - log_gamma(n_f + 1.0)?
        - log_gamma(n_f + 2.0 * nu)?;
    let ln_front =
        (2.0 * epsilon).ln() + (n_f + epsilon + nu).ln() - b.ln() - (n_f + nu).ln();
    Ok((0.5 * (ln_front + ln_ratio) - log_gamma(2.0 * epsilon + 1.0)?).exp())
}

/// s-wave normalization constant, `alpha < 1/2` branch (`nu = 1 - alpha`).
pub fn normalization_constant_s_small_alpha(p: &PotentialParams, n: u32) -> Result<f64> {
    let eps = spectrum::s_wave_energy(p, n).epsilon;
    normalization_constant(p.b, n, eps, 1.0 - p.alpha)
}

/// s-wave normalization constant, `alpha > 1/2` branch (`nu = alpha`).
pub fn normalization_constant_s_large_alpha(p: &PotentialParams, n: u32) -> Result<f64> {
    let eps = spectrum::s_wave_energy(p, n).epsilon;
    normalization_constant(p.b, n, eps, p.alpha)
}

impl WavefunctionSpec {
    /// Builds the spec for a bound state; errors with [`Error::Unbound`] when
    /// the closed-form level is not bound.
    pub fn new(params: PotentialParams, scheme: ApproxScheme, state: QuantumState) -> Result<Self> {
        let inter = spectrum::intermediates(&params, &scheme, &state);
        let epsilon = spectrum::epsilon_nl(&params, &scheme, &state);
        if !(epsilon > 0.0) {
            return Err(Error::Unbound);
        }
        let norm_constant = normalization_constant(params.b, state.n, epsilon, inter.nu_l)?;
        Ok(Self { params, scheme, state, epsilon, nu_l: inter.nu_l, norm_constant })
    }

    /// Dimensionless energy of the state.
    pub fn energy_dimensionless(&self) -> f64 {
        let inter = spectrum::intermediates(&self.params, &self.scheme, &self.state);
        inter.delta_e_l - self.epsilon * self.epsilon
    }

    /// `u(r)` in terms of `z = e^{-r/b}` and `1 - z` supplied separately to
    /// avoid cancellation near `r = 0`.
    fn evaluate_z(&self, z: f64, one_minus_z: f64) -> Result<f64> {
        let n = self.state.n;
        let f = hyp2f1_terminating(
            n,
            n as f64 + 2.0 * (self.epsilon + self.nu_l),
            2.0 * self.epsilon + 1.0,
            z,
        )?;
        Ok(self.norm_constant * z.powf(self.epsilon) * one_minus_z.powf(self.nu_l) * f)
    }

    /// The radial wave function through the hypergeometric form.
    pub fn evaluate(&self, r: f64) -> Result<f64> {
        if r < 0.0 {
            return Err(Error::NegativeRadius(r));
        }
        let z = (-r / self.params.b).exp();
        let one_minus_z = -(-r / self.params.b).exp_m1();
        self.evaluate_z(z, one_minus_z)
    }

    /// The same wave function through the Jacobi-polynomial form
    /// `N n!/(2eps+1)_n z^eps (1-z)^nu P_n^{(2eps, 2nu-1)}(1-2z)`.
    pub fn evaluate_jacobi(&self, r: f64) -> Result<f64> {
        if r < 0.0 {
            return Err(Error::NegativeRadius(r));
        }
        let n = self.state.n;
        let z = (-r / self.params.b).exp();
        let one_minus_z = -(-r / self.params.b).exp_m1();
        let prefactor = factorial(n) / pochhammer(2.0 * self.epsilon + 1.0, n);
        let poly = crate::special::jacobi_p(n, 2.0 * self.epsilon, 2.0 * self.nu_l - 1.0, 1.0 - 2.0 * z);
        Ok(self.norm_constant
            * prefactor
            * z.powf(self.epsilon)
            * one_minus_z.powf(self.nu_l)
            * poly)
    }

    /// Quadrature of `u^2` over `(0, infinity)`, which is 1 for a correctly
    /// normalized state.
    ///
    /// Uses the change of variable `z = e^{-r/b}` (equivalently
    /// `x = 1 - 2 e^{-r/b}` up to an affine map), then `z = s^2` to soften the
    /// `z^{2 eps - 1}` edge, and Gauss-Legendre panels refined until two
    /// refinements agree.
    pub fn norm_quadrature(&self) -> f64 {
        let b = self.params.b;
        let f = |s: f64| {
            let z = s * s;
            let u = self.evaluate_z(z, 1.0 - z).unwrap_or(0.0);
            // u^2 dr = u^2 b dz/z ; dz = 2 s ds  =>  2 b u^2 / s ds
            if s == 0.0 {
                0.0
            } else {
                2.0 * b * u * u / s
            }
        };
        quadrature::integrate_refined(&f, 0.0, 1.0, 60, 1e-11)
    }

    /// Overlap `int u . other_u dr` between two states of the same potential.
    pub fn overlap(&self, other: &WavefunctionSpec) -> f64 {
        let b = self.params.b;
        let f = |s: f64| {
            let z = s * s;
            let ua = self.evaluate_z(z, 1.0 - z).unwrap_or(0.0);
            let ub = other.evaluate_z(z, 1.0 - z).unwrap_or(0.0);
            if s == 0.0 {
                0.0
            } else {
                2.0 * b * ua * ub / s
            }
        };
        quadrature::integrate_refined(&f, 0.0, 1.0, 60, 1e-11)
    }

    /// Default sampling radius: far enough out that `u` has decayed to
    /// numerical noise.
    pub fn default_r_max(&self) -> f64 {
        46.0 * self.params.b / self.epsilon
    }

    /// `(r, u)` samples: `r = 0` first, then `points - 1` log-spaced radii up
    /// to `r_max`.
    pub fn sample_log_grid(&self, points: usize, r_max: f64) -> Vec<(f64, f64)> {
        assert!(points >= 2);
        let r_min = r_max * 1e-5;
        let ratio = (r_max / r_min).ln();
        let mut out = Vec::with_capacity(points);
        out.push((0.0, 0.0));
        for i in 0..points - 1 {
            let t = i as f64 / (points - 2).max(1) as f64;
            let r = r_min * (ratio * t).exp();
            out.push((r, self.evaluate(r).unwrap()));
        }
        out
    }
}

/// Counts interior sign changes, ignoring samples below a noise floor of
/// `1e-12 * max|u|`.
pub fn count_nodes(samples: &[(f64, f64)]) -> u32 {
    let max_abs = samples.iter().map(|(_, u)| u.abs()).fold(0.0, f64::max);
    let floor = 1e-12 * max_abs;
    let mut count = 0;
    let mut last_sign = 0i8;
    for &(_, u) in samples {
        if u.abs() <= floor {
            continue;
        }
        let sign = if u > 0.0 { 1 } else { -1 };
        if last_sign != 0 && sign != last_sign {
            count += 1;
        }
        last_sign = sign;
    }
    count
}
