//! The Manning-Rosen potential and its effective radial form.
//!
//! All energies are measured in units of `hbar^2 / (2 mu b^2)` and lengths in
//! the same unit as the range parameter `b`. Physical-unit conversion lives in
//! [`crate::molecules`].

use crate::error::{Error, Result};

/// Parameters of the Manning-Rosen potential
///
/// ```text
/// V(r) = alpha(alpha-1) / (e^{r/b} - 1)^2 - A / (e^{r/b} - 1)
/// ```
///
/// `alpha` is dimensionless, `a` is the (dimensionless) strength `A` and `b`
/// the range. The potential is invariant under `alpha -> 1 - alpha`, and for
/// `alpha = 0` or `alpha = 1` it reduces to the Hulthen potential
/// `-A / (e^{r/b} - 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub alpha: f64,
    /// Strength `A`; positive for bound states.
    pub a: f64,
    /// Range `b > 0`.
    pub b: f64,
}

/// Advisory validity indicators for the closed-form solutions.
///
/// The approximation behind the closed forms is good for `r/b << 1`,
/// equivalently for a small positive coupling ratio `alpha(alpha-1)/A`.
/// These are recorded as advice, not enforced as preconditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityAdvisory {
    /// `alpha(alpha-1) / A`.
    pub coupling_ratio: f64,
    /// `|coupling_ratio|` below 0.1.
    pub ratio_small: bool,
    /// `coupling_ratio >= 0`.
    pub ratio_positive: bool,
}

impl PotentialParams {
    pub fn new(alpha: f64, a: f64, b: f64) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::InvalidParams(format!("range b must be positive, got {b}")));
        }
        if !alpha.is_finite() || !a.is_finite() {
            return Err(Error::InvalidParams("alpha and A must be finite".into()));
        }
        Ok(Self { alpha, a, b })
    }

    /// `alpha (alpha - 1)`, the coefficient of the repulsive/attractive core term.
    #[inline]
    pub fn alpha_term(&self) -> f64 {
        self.alpha * (self.alpha - 1.0)
    }

    /// Coefficient `C` of the alternate form `V = -(C e^{r/b} + D)/(e^{r/b}-1)^2`.
    #[inline]
    pub fn c_coefficient(&self) -> f64 {
        self.a
    }

    /// Coefficient `D` of the alternate form; `D = -A - alpha(alpha-1)`.
    #[inline]
    pub fn d_coefficient(&self) -> f64 {
        -self.a - self.alpha_term()
    }

    pub fn advisory(&self) -> ValidityAdvisory {
        let ratio = self.alpha_term() / self.a;
        ValidityAdvisory {
            coupling_ratio: ratio,
            ratio_small: ratio.abs() < 0.1,
            ratio_positive: ratio >= 0.0,
        }
    }
}

/// Radial and orbital quantum numbers `(n, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumState {
    /// Radial (vibrational) quantum number.
    pub n: u32,
    /// Orbital (rotational) quantum number.
    pub l: u32,
}

const ORBITAL_LETTERS: &[(char, u32)] = &[
    ('s', 0),
    ('p', 1),
    ('d', 2),
    ('f', 3),
    ('g', 4),
    ('h', 5),
    ('i', 6),
    ('k', 7),
];

impl QuantumState {
    pub fn new(n: u32, l: u32) -> Self {
        Self { n, l }
    }

    /// Parses a spectroscopic label like `"2p"` or `"6g"`.
    ///
    /// The leading integer `N` is the principal-style label; the radial
    /// quantum number is `n = N - l - 1`, which must be non-negative.
    pub fn from_spectroscopic(label: &str) -> Result<Self> {
        let label = label.trim();
        let err = || Error::InvalidLabel(label.to_string());
        let letter = label.chars().last().ok_or_else(err)?;
        let digits = &label[..label.len() - letter.len_utf8()];
        let big_n: u32 = digits.parse().map_err(|_| err())?;
        let l = ORBITAL_LETTERS
            .iter()
            .find(|(c, _)| *c == letter.to_ascii_lowercase())
            .map(|(_, l)| *l)
            .ok_or_else(err)?;
        if big_n < l + 1 {
            return Err(err());
        }
        Ok(Self { n: big_n - l - 1, l })
    }

    /// Spectroscopic label `Nℓ` with `N = n + l + 1`.
    pub fn label(&self) -> String {
        let letter = ORBITAL_LETTERS
            .iter()
            .find(|(_, l)| *l == self.l)
            .map(|(c, _)| *c)
            .unwrap_or('?');
        format!("{}{}", self.n + self.l + 1, letter)
    }
}

/// `e^{r/b} - 1` evaluated without cancellation near `r = 0`.
#[inline]
pub(crate) fn exp_ratio_minus_one(r: f64, b: f64) -> f64 {
    (r / b).exp_m1()
}

/// Potential value at radius `r > 0`, in units of `hbar^2/(2 mu b^2)`.
pub fn potential_value(p: &PotentialParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::NonPositiveRadius(r));
    }
    let y = exp_ratio_minus_one(r, p.b);
    Ok(p.alpha_term() / (y * y) - p.a / y)
}

/// Location and depth of the interior minimum.
///
/// Exists for `alpha < 0` or `alpha > 1` with `A > 0`:
///
/// ```text
/// r0 = b ln(1 + 2 alpha(alpha-1)/A),   V(r0) = -A^2 / (4 alpha(alpha-1))
/// ```
///
/// `V(r0)` is in the same `hbar^2/(2 mu b^2)` unit as [`potential_value`]
/// (physically `-hbar^2 A^2 / (8 mu b^2 alpha(alpha-1))`).
pub fn potential_minimum(p: &PotentialParams) -> Result<(f64, f64)> {
    if !((p.alpha < 0.0 || p.alpha > 1.0) && p.a > 0.0) {
        return Err(Error::NoMinimum { alpha: p.alpha });
    }
    let e1 = p.alpha_term();
    let r0 = p.b * (2.0 * e1 / p.a).ln_1p();
    let v0 = -p.a * p.a / (4.0 * e1);
    Ok((r0, v0))
}

/// Curvature of the potential at the minimum, measured in `hbar^2/(2 mu)`
/// energy units per squared length:
///
/// ```text
/// d^2V/dr^2 |_{r0} = A^2 [A + 2 alpha(alpha-1)]^2 / (8 b^4 alpha^3 (alpha-1)^3)
/// ```
pub fn force_constant(p: &PotentialParams) -> Result<f64> {
    if !((p.alpha < 0.0 || p.alpha > 1.0) && p.a > 0.0) {
        return Err(Error::NoMinimum { alpha: p.alpha });
    }
    let e1 = p.alpha_term();
    let s = p.a + 2.0 * e1;
    let b4 = p.b.powi(4);
    Ok(p.a * p.a * s * s / (8.0 * b4 * e1.powi(3)))
}

/// Effective radial potential with the exact centrifugal term,
/// `V(r) + l(l+1) (b/r)^2`, in `hbar^2/(2 mu b^2)` units.
pub fn effective_potential(p: &PotentialParams, l: u32, r: f64) -> Result<f64> {
    let v = potential_value(p, r)?;
    let ll1 = (l * (l + 1)) as f64;
    let ratio = p.b / r;
    Ok(v + ll1 * ratio * ratio)
}
