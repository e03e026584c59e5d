//! Quadrature rules used by the normalization oracle and the integral-identity
//! tests: fixed-order Gauss-Legendre with panel refinement, and a tanh-sinh
//! rule for integrands with algebraic endpoint singularities.

use std::f64::consts::FRAC_PI_2;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// found by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "need at least a 2-point rule");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for k in 0..m {
        // Tricomi-style initial guess.
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by upward recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let j = j as f64;
                let p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[k] = -x;
        nodes[n - 1 - k] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[k] = w;
        weights[n - 1 - k] = w;
    }
    (nodes, weights)
}

/// Integral of `f` over `[a, b]` with a single `order`-point rule.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, order: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut sum = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        sum += w * f(mid + half * x);
    }
    half * sum
}

/// Composite Gauss-Legendre with panel doubling until two successive
/// refinements agree to `tol` (relative, floored at `tol` absolute).
pub fn integrate_refined<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, order: usize, tol: f64) -> f64 {
    let (nodes, weights) = gauss_legendre(order);
    let panel = |lo: f64, hi: f64| {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (lo + hi);
        let mut sum = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            sum += w * f(mid + half * x);
        }
        half * sum
    };
    let mut panels = 1usize;
    let mut prev = panel(a, b);
    for _ in 0..14 {
        panels *= 2;
        let h = (b - a) / panels as f64;
        let mut total = 0.0;
        for i in 0..panels {
            total += panel(a + i as f64 * h, a + (i + 1) as f64 * h);
        }
        if (total - prev).abs() <= tol * total.abs().max(1.0) {
            return total;
        }
        prev = total;
    }
    prev
}

/// Tanh-sinh quadrature over `(-1, 1)`.
///
/// The integrand receives `(x, 1 - x, 1 + x)` with the endpoint distances
/// computed without cancellation, so weights like `(1-x)^{nu-1}` can be
/// evaluated accurately arbitrarily close to the endpoints.
pub fn tanh_sinh<F: Fn(f64, f64, f64) -> f64>(f: F, tol: f64) -> f64 {
    let t_max = 5.0;
    let mut previous = f64::NAN;
    let mut result = f64::NAN;
    for level in 2..=13u32 {
        let h = 0.5f64.powi(level as i32);
        let steps = (t_max / h) as i64;
        let mut sum = 0.0;
        for k in -steps..=steps {
            let t = k as f64 * h;
            let u = FRAC_PI_2 * t.sinh();
            let x = u.tanh();
            let one_minus = 2.0 / ((2.0 * u).exp() + 1.0);
            let one_plus = 2.0 / ((-2.0 * u).exp() + 1.0);
            if one_minus == 0.0 || one_plus == 0.0 {
                continue;
            }
            let cosh_u = u.cosh();
            let w = FRAC_PI_2 * t.cosh() / (cosh_u * cosh_u);
            if w < 1e-300 {
                continue;
            }
            let v = f(x, one_minus, one_plus);
            if v.is_finite() {
                sum += w * v;
            }
        }
        result = sum * h;
        if (result - previous).abs() <= tol * result.abs().max(1.0) {
            return result;
        }
        previous = result;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::log_gamma;
    use approx::assert_relative_eq;

    #[test]
    fn exactness_for_polynomials() {
        // An n-point rule integrates degree 2n-1 exactly.
        let f = |x: f64| 5.0 * x.powi(9) - 3.0 * x.powi(4) + x;
        let exact = 5.0 / 10.0 * (1.0 - 0.0) - 3.0 / 5.0 + 0.5;
        assert_relative_eq!(integrate(&f, 0.0, 1.0, 5), exact, max_relative = 1e-14);
    }

    #[test]
    fn smooth_integral() {
        assert_relative_eq!(
            integrate(&|x: f64| x.sin(), 0.0, std::f64::consts::PI, 30),
            2.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            integrate_refined(&|x: f64| x.exp(), 0.0, 3.0, 16, 1e-13),
            3f64.exp() - 1.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn refinement_handles_peaked_integrand() {
        // Narrow Gaussian that a single low-order panel misses.
        let f = |x: f64| (-(x - 0.37).powi(2) / 1e-4).exp();
        let exact = (1e-4 * std::f64::consts::PI).sqrt();
        assert_relative_eq!(integrate_refined(&f, 0.0, 1.0, 20, 1e-11), exact, max_relative = 1e-9);
    }

    fn beta_integral(a: f64, b: f64) -> f64 {
        // int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1).
        let ln = (a + b + 1.0) * 2f64.ln() + log_gamma(a + 1.0).unwrap() + log_gamma(b + 1.0).unwrap()
            - log_gamma(a + b + 2.0).unwrap();
        ln.exp()
    }

    #[test]
    fn tanh_sinh_endpoint_singularities() {
        // (1-x)^{-1/2} integrates to 2 sqrt(2).
        let got = tanh_sinh(|_x, om, _op| om.powf(-0.5), 1e-13);
        assert_relative_eq!(got, 2.0 * 2f64.sqrt(), max_relative = 1e-12);

        for &(a, b) in &[(-0.5, 0.2), (0.5, -0.8), (2.3, 3.1), (0.0, 0.0)] {
            let got = tanh_sinh(|_x, om, op| om.powf(a) * op.powf(b), 1e-13);
            assert_relative_eq!(got, beta_integral(a, b), max_relative = 1e-11);
        }
    }
}
