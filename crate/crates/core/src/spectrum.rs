//! Closed-form bound-state energies and their special cases.
//!
//! With a coefficient set `(D0, D1, D2)` for the centrifugal approximation,
//! the quantization parameter is
//!
//! ```text
//! a     = sqrt((1-2 alpha)^2 + 4 l(l+1) D2)
//! eps   = [A + alpha(alpha-1) + l(l+1)(D2-D1)] / (2n+1+a) - (2n+1+a)/4
//! E     = l(l+1) D0 - eps^2        (bound when eps > 0)
//! ```
//!
//! in units of `hbar^2/(2 mu b^2)`. Both `a` and `alpha(alpha-1)` are
//! invariant under `alpha -> 1 - alpha`, hence so is the whole spectrum.

use crate::approx_scheme::ApproxScheme;
use crate::potential::{PotentialParams, QuantumState};

/// Ingredients of the closed-form solution for one `(params, scheme, state)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumIntermediates {
    /// `sqrt((1-2 alpha)^2 + 4 l(l+1) D2)`.
    pub a: f64,
    /// `A - l(l+1) D1`.
    pub beta1: f64,
    /// `alpha(alpha-1) + l(l+1) D2`.
    pub beta2: f64,
    /// `l(l+1) D0`, the constant energy shift.
    pub delta_e_l: f64,
    /// `(1 + a)/2`, the wave-function edge exponent.
    pub nu_l: f64,
}

pub fn intermediates(p: &PotentialParams, s: &ApproxScheme, q: &QuantumState) -> SpectrumIntermediates {
    let ll1 = (q.l * (q.l + 1)) as f64;
    let one_minus_two_alpha = 1.0 - 2.0 * p.alpha;
    let a = (one_minus_two_alpha * one_minus_two_alpha + 4.0 * ll1 * s.d2()).sqrt();
    SpectrumIntermediates {
        a,
        beta1: p.a - ll1 * s.d1(),
        beta2: p.alpha_term() + ll1 * s.d2(),
        delta_e_l: ll1 * s.d0(),
        nu_l: 0.5 * (1.0 + a),
    }
}

/// The quantization parameter `eps_nl`; non-positive values signal that the
/// requested level is not bound.
pub fn epsilon_nl(p: &PotentialParams, s: &ApproxScheme, q: &QuantumState) -> f64 {
    let ll1 = (q.l * (q.l + 1)) as f64;
    let a = intermediates(p, s, q).a;
    let denom = 2.0 * q.n as f64 + 1.0 + a;
    (p.a + p.alpha_term() + ll1 * (s.d2() - s.d1())) / denom - 0.25 * denom
}

/// Outcome of an energy evaluation. Unbound levels are a value, not an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumResult {
    /// The quantization parameter; the level is bound iff it is positive.
    pub epsilon: f64,
    pub bound: bool,
    /// `l(l+1) D0 - epsilon^2` in `hbar^2/(2 mu b^2)` units; `None` when unbound.
    pub energy_dimensionless: Option<f64>,
}

impl SpectrumResult {
    fn from_epsilon(epsilon: f64, delta_e_l: f64) -> Self {
        if epsilon > 0.0 {
            Self { epsilon, bound: true, energy_dimensionless: Some(delta_e_l - epsilon * epsilon) }
        } else {
            Self { epsilon, bound: false, energy_dimensionless: None }
        }
    }

    /// Energy in Hartree for atomic-unit inputs (`hbar = mu = 1`), i.e.
    /// `energy_dimensionless / (2 b^2)`.
    pub fn energy_hartree(&self, b: f64) -> Option<f64> {
        self.energy_dimensionless.map(|e| e / (2.0 * b * b))
    }
}

/// Dimensionless energy to Hartree with `hbar = mu = 1`.
#[inline]
pub fn to_hartree(energy_dimensionless: f64, b: f64) -> f64 {
    energy_dimensionless / (2.0 * b * b)
}

pub fn energy(p: &PotentialParams, s: &ApproxScheme, q: &QuantumState) -> SpectrumResult {
    let inter = intermediates(p, s, q);
    SpectrumResult::from_epsilon(epsilon_nl(p, s, q), inter.delta_e_l)
}

/// Strength `A_c` at which the binding energy of level `q` vanishes:
///
/// ```text
/// A_c = (2n+1+a)^2/4 - alpha(alpha-1) - l(l+1)(D2-D1)
/// ```
pub fn critical_coupling(alpha: f64, s: &ApproxScheme, q: &QuantumState) -> f64 {
    let ll1 = (q.l * (q.l + 1)) as f64;
    let one_minus_two_alpha = 1.0 - 2.0 * alpha;
    let a = (one_minus_two_alpha * one_minus_two_alpha + 4.0 * ll1 * s.d2()).sqrt();
    let denom = 2.0 * q.n as f64 + 1.0 + a;
    0.25 * denom * denom - alpha * (alpha - 1.0) - ll1 * (s.d2() - s.d1())
}

/// Number sentinel for the highest bound s-wave level.
///
/// `n_max = floor(sqrt(A + alpha(alpha-1)) + alpha - 1)` for `alpha < 1/2` and
/// `floor(sqrt(A + alpha(alpha-1)) - alpha)` for `alpha > 1/2` (both branches
/// coincide at `alpha = 1/2`). Returns -1 when no s-wave level is bound,
/// including a negative radicand.
pub fn n_max(p: &PotentialParams) -> i64 {
    let radicand = p.a + p.alpha_term();
    if radicand < 0.0 {
        return -1;
    }
    let shift = if p.alpha < 0.5 { p.alpha - 1.0 } else { -p.alpha };
    (radicand.sqrt() + shift).floor() as i64
}

/// s-wave (`l = 0`) energy from the explicit branch formulas
///
/// ```text
/// eps_n = (A + alpha(alpha-1)) / (2x) - x/2,   E = -eps_n^2
/// ```
///
/// with `x = n + 1 - alpha` for `alpha < 1/2` and `x = n + alpha` for
/// `alpha > 1/2`. At `alpha = 1/2` the branches coincide and either is used.
/// Identical to [`energy`] at `l = 0` for every scheme, since all the
/// `D`-coefficients enter multiplied by `l(l+1)`.
pub fn s_wave_energy(p: &PotentialParams, n: u32) -> SpectrumResult {
    let x = if p.alpha < 0.5 { n as f64 + 1.0 - p.alpha } else { n as f64 + p.alpha };
    let eps = (p.a + p.alpha_term()) / (2.0 * x) - 0.5 * x;
    SpectrumResult::from_epsilon(eps, 0.0)
}

/// Hulthen-potential energy `E_nl` for strength `z_e2 = Z e^2` and screening
/// `delta`, with `hbar = 1`.
///
/// Obtained from the general spectrum through the identification
/// `A = 2 mu z_e2 / delta`, `b = 1/delta`, `alpha in {0, 1}`; the returned
/// energy carries the `delta^2/(2 mu)` unit restored.
pub fn hulthen_energy(
    z_e2: f64,
    delta: f64,
    mu: f64,
    s: &ApproxScheme,
    q: &QuantumState,
) -> f64 {
    let a_strength = 2.0 * mu * z_e2 / delta;
    let p = PotentialParams { alpha: 1.0, a: a_strength, b: 1.0 / delta };
    let eps = epsilon_nl(&p, s, q);
    let delta_e_l = (q.l * (q.l + 1)) as f64 * s.d0();
    delta * delta / (2.0 * mu) * (delta_e_l - eps * eps)
}

/// Closed form of the Hulthen energy for schemes with `D1 = D2 = 1`:
///
/// ```text
/// E = -mu (Z e^2)^2 / 2 [ 1/(n+l+1) - delta (n+l+1) / (2 mu Z e^2) ]^2
///     + l(l+1) delta^2 D0 / (2 mu)
/// ```
///
/// With `D0 = 0` this is the usual-scheme expression; a non-zero `D0` adds the
/// constant shift of the improved scheme.
pub fn hulthen_energy_closed_form(z_e2: f64, delta: f64, mu: f64, d0: f64, q: &QuantumState) -> f64 {
    let big_n = (q.n + q.l + 1) as f64;
    let bracket = 1.0 / big_n - delta * big_n / (2.0 * mu * z_e2);
    let ll1 = (q.l * (q.l + 1)) as f64;
    -mu * z_e2 * z_e2 / 2.0 * bracket * bracket + ll1 * delta * delta * d0 / (2.0 * mu)
}

/// Coulomb-limit (`delta -> 0`) energy `-eps0 / (n+l+1)^2` with
/// `eps0 = Z^2 mu / 2`, in Hartree-style units (`hbar = e = 1`, `mu` in
/// electron masses).
pub fn coulomb_limit_energy(z: f64, mu: f64, q: &QuantumState) -> f64 {
    let big_n = (q.n + q.l + 1) as f64;
    -z * z * mu / (2.0 * big_n * big_n)
}
