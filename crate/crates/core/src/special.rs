//! Special functions used by the wave-function layer: log-gamma, Pochhammer
//! symbols, terminating Gauss hypergeometric series and Jacobi polynomials.

use crate::error::{Error, Result};

/// Lanczos coefficients (g = 7, n = 9), the set used by the GNU Scientific
/// Library.
const LANCZOS_G: f64 = 7.0;
// Published coefficient set, kept digit-for-digit.
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const HALF_LOG_TWO_PI: f64 = 0.918938533204672741780329736406;

/// `ln Gamma(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::NonPositiveGammaArgument(x));
    }
    if x < 0.5 {
        // One recurrence step: ln Gamma(x) = ln Gamma(x+1) - ln x.
        return Ok(lanczos_log_gamma(x + 1.0) - x.ln());
    }
    Ok(lanczos_log_gamma(x))
}

fn lanczos_log_gamma(x: f64) -> f64 {
    let z = x - 1.0;
    let mut series = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LOG_TWO_PI + (z + 0.5) * t.ln() - t + series.ln()
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for k in 0..n {
        acc *= x + k as f64;
    }
    acc
}

/// `n!` as a float.
pub fn factorial(n: u32) -> f64 {
    pochhammer(1.0, n)
}

/// Terminating Gauss series `2F1(-n, b; c; z)`, a polynomial of degree `n`:
///
/// ```text
/// sum_{k=0}^{n} (-n)_k (b)_k / (c)_k * z^k / k!
/// ```
///
/// Errors if `(c)_k` hits zero before the series terminates.
pub fn hyp2f1_terminating(n: u32, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let ck = c + kf;
        if ck == 0.0 {
            return Err(Error::HypergeometricPole { k });
        }
        term *= (kf - n as f64) * (b + kf) / (ck * (kf + 1.0)) * z;
        sum += term;
    }
    Ok(sum)
}

/// Jacobi polynomial `P_n^{(nu, mu)}(x)` by the three-term recurrence.
pub fn jacobi_p(n: u32, nu: f64, mu: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p_prev = 1.0;
    let mut p = 0.5 * ((nu + mu + 2.0) * x + nu - mu);
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + nu + mu;
        let a1 = 2.0 * k * (k + nu + mu) * (c - 2.0);
        let a2 = (c - 1.0) * (nu * nu - mu * mu);
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (k + nu - 1.0) * (k + mu - 1.0) * c;
        let next = ((a2 + a3 * x) * p - a4 * p_prev) / a1;
        p_prev = p;
        p = next;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    #[test]
    fn log_gamma_known_values() {
        assert_abs_diff_eq!(log_gamma(1.0).unwrap(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(log_gamma(2.0).unwrap(), 0.0, epsilon = 1e-14);
        assert_relative_eq!(
            log_gamma(0.5).unwrap(),
            0.5 * std::f64::consts::PI.ln(),
            max_relative = 1e-13
        );
        // ln Gamma(10) = ln 9!.
        assert_relative_eq!(log_gamma(10.0).unwrap(), 362880f64.ln(), max_relative = 1e-13);
    }

    #[test]
    fn log_gamma_half_integer_recurrence_oracle() {
        // ln Gamma(21.5) = ln sqrt(pi) + sum_{k=0}^{20} ln(k + 0.5), an exact
        // identity independent of the Lanczos evaluation.
        let mut reference = 0.5 * std::f64::consts::PI.ln();
        for k in 0..21 {
            reference += (k as f64 + 0.5).ln();
        }
        assert_relative_eq!(log_gamma(21.5).unwrap(), reference, max_relative = 1e-13);
        assert_relative_eq!(log_gamma(21.5).unwrap(), 43.85192586067516, max_relative = 1e-13);
    }

    #[test]
    fn log_gamma_frozen_references() {
        for (x, expected) in [
            (1.5, -0.12078223763524543),
            (3.7, 1.4280723266653883),
            (41.25, 111.2467415414692),
            (0.1, 2.2527126517342055),
            (123.456, 469.60554712992956),
        ] {
            assert_relative_eq!(log_gamma(x).unwrap(), expected, max_relative = 1e-13);
        }
    }

    #[test]
    fn log_gamma_domain() {
        assert!(matches!(log_gamma(0.0), Err(Error::NonPositiveGammaArgument(_))));
        assert!(matches!(log_gamma(-3.2), Err(Error::NonPositiveGammaArgument(_))));
    }

    proptest! {
        #[test]
        fn log_gamma_recurrence_property(x in 0.05f64..80.0) {
            let lhs = log_gamma(x + 1.0).unwrap();
            let rhs = log_gamma(x).unwrap() + x.ln();
            // Absolute tolerance scaled by the magnitude involved.
            let scale = 1.0 + lhs.abs().max(rhs.abs());
            prop_assert!((lhs - rhs).abs() <= 1e-13 * scale);
        }
    }

    #[test]
    fn pochhammer_and_factorial() {
        assert_eq!(pochhammer(3.0, 0), 1.0);
        assert_eq!(pochhammer(3.0, 3), 3.0 * 4.0 * 5.0);
        assert_eq!(factorial(0), 1.0);
        assert_eq!(factorial(5), 120.0);
    }

    #[test]
    fn hyp2f1_simple_cases() {
        assert_eq!(hyp2f1_terminating(0, 4.2, 1.7, 0.9).unwrap(), 1.0);
        // n = 1: 1 - (b/c) z.
        assert_relative_eq!(hyp2f1_terminating(1, 2.0, 1.0, 0.5).unwrap(), 0.0);
        assert_relative_eq!(
            hyp2f1_terminating(1, 3.0, 2.0, 0.25).unwrap(),
            1.0 - 3.0 / 2.0 * 0.25,
            max_relative = 1e-15
        );
    }

    #[test]
    fn hyp2f1_pole_detection() {
        assert!(matches!(
            hyp2f1_terminating(3, 1.0, -1.0, 0.5),
            Err(Error::HypergeometricPole { k: 1 })
        ));
        // Termination before the pole is fine.
        assert!(hyp2f1_terminating(1, 1.0, -1.5, 0.5).is_ok());
    }

    #[test]
    fn jacobi_low_orders() {
        assert_eq!(jacobi_p(0, 0.3, 1.7, 0.4), 1.0);
        for &(nu, mu, x) in &[(0.3, 1.7, 0.4), (2.0, 0.5, -0.3), (1.0, 1.0, 0.9)] {
            let expected = 0.5 * ((nu + mu + 2.0) * x + nu - mu);
            assert_relative_eq!(jacobi_p(1, nu, mu, x), expected, max_relative = 1e-15);
        }
    }

    #[test]
    fn jacobi_frozen_references() {
        // Frozen from the explicit finite sum
        // P_n^{(a,b)}(x) = sum_k C(n,k)-style Gamma ratios ((x-1)/2)^k.
        assert_relative_eq!(jacobi_p(4, 0.3, 1.7, 0.4), 0.1728875, max_relative = 1e-10);
        assert_relative_eq!(jacobi_p(3, 2.0, 0.5, -0.3), 0.2758984375, max_relative = 1e-10);
    }

    #[test]
    fn jacobi_legendre_special_case() {
        // nu = mu = 0 gives Legendre polynomials: P_3(x) = (5x^3 - 3x)/2.
        for &x in &[-0.9f64, -0.2, 0.0, 0.5, 1.0] {
            let expected = 0.5 * (5.0 * x.powi(3) - 3.0 * x);
            assert_abs_diff_eq!(jacobi_p(3, 0.0, 0.0, x), expected, epsilon = 1e-14);
        }
    }

    proptest! {
        #[test]
        fn jacobi_matches_hypergeometric_route(
            n in 0u32..7,
            nu in 0.05f64..4.0,
            mu in -0.8f64..4.0,
            x in -0.95f64..0.95,
        ) {
            // 2F1(-n, n+nu+mu+1; nu+1; (1-x)/2) = n!/(nu+1)_n P_n^{(nu,mu)}(x).
            // The series terms are O(1)-to-O(100) and may cancel, so the
            // comparison is anchored to an absolute floor as well.
            let lhs = hyp2f1_terminating(n, n as f64 + nu + mu + 1.0, nu + 1.0, 0.5 * (1.0 - x)).unwrap();
            let rhs = factorial(n) / pochhammer(nu + 1.0, n) * jacobi_p(n, nu, mu, x);
            let scale = lhs.abs().max(rhs.abs()).max(0.1);
            prop_assert!((lhs - rhs).abs() <= 1e-10 * scale, "lhs={lhs} rhs={rhs}");
        }
    }

    #[test]
    fn hypergeometric_jacobi_identity_spot_check() {
        // n = 3, b = 4.2, c = 1.7, z = 0.3 maps to nu = 0.7, mu = -0.2,
        // x = 0.4 through b = n + nu + mu + 1, c = nu + 1, z = (1-x)/2.
        let lhs = hyp2f1_terminating(3, 4.2, 1.7, 0.3).unwrap();
        let nu = 0.7;
        let mu = 4.2 - 3.0 - nu - 1.0;
        let x = 1.0 - 2.0 * 0.3;
        let rhs = factorial(3) / pochhammer(nu + 1.0, 3) * jacobi_p(3, nu, mu, x);
        assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
    }
}
