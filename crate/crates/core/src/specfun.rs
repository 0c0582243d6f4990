//! Hermite polynomials, normalized oscillator eigenfunctions, and
//! Gauss–Hermite quadrature.
//!
//! Conventions are fixed here once and inherited by every other module:
//! physicists' Hermite polynomials with leading coefficient `2^n`, and
//! unit-norm eigenfunctions `φ_n(x) = (√π 2^n n!)^{-1/2} H_n(x) exp(-x²/2)`.

use crate::error::{Error, Result};

/// Largest supported oscillator excitation.
pub const MAX_DEGREE: usize = 512;

/// Largest supported Gauss–Hermite node count.
pub const MAX_QUAD_NODES: usize = 512;

/// Default node count used by the numerical modules. Chosen so that all
/// ground-state overlap integrals converge below 1e-12.
pub const DEFAULT_QUAD_NODES: usize = 128;

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence
/// `H_{n+1}(x) = 2x H_n(x) - 2n H_{n-1}(x)`.
///
/// Values overflow `f64` for large `n` and `|x|`; use
/// [`orthonormal_hermite`] when a normalized value is wanted.
pub fn hermite(n: usize, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0 * x,
        _ => {
            let mut prev = 1.0;
            let mut cur = 2.0 * x;
            for k in 1..n {
                let next = 2.0 * x * cur - 2.0 * (k as f64) * prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Orthonormal Hermite polynomial `H_n(x) / sqrt(√π 2^n n!)`.
///
/// Satisfies `∫ e^{-x²} p_n(x) p_m(x) dx = δ_nm`. The scaled recurrence
/// stays bounded where the raw polynomial would overflow.
pub fn orthonormal_hermite(n: usize, x: f64) -> f64 {
    scaled_hermite_seeded(n, x, std::f64::consts::PI.powf(-0.25))
}

/// `orthonormal_hermite(n, x) * exp(-x²/2)`, i.e. the eigenfunction value.
/// Folding the Gaussian into the seed keeps every intermediate representable.
fn weighted_hermite(n: usize, x: f64) -> f64 {
    let seed = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    scaled_hermite_seeded(n, x, seed)
}

fn scaled_hermite_seeded(n: usize, x: f64, seed: f64) -> f64 {
    if n == 0 {
        return seed;
    }
    let mut prev = seed;
    let mut cur = std::f64::consts::SQRT_2 * x * seed;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `ln(n!)`, exact enough for normalization constants up to [`MAX_DEGREE`].
pub fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Normalized one-dimensional oscillator eigenfunction `φ_n`.
///
/// `φ_n(x) = (√π 2^n n!)^{-1/2} H_n(x) exp(-x²/2)`, with `∫ φ_n² = 1` and
/// parity `φ_n(-x) = (-1)^n φ_n(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OscillatorEigenfunction {
    n: usize,
}

impl OscillatorEigenfunction {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: n,
                max: MAX_DEGREE,
            });
        }
        Ok(Self { n })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `φ_n(x)`.
    pub fn eval(&self, x: f64) -> f64 {
        weighted_hermite(self.n, x)
    }

    /// `φ_n(x) e^{x²/2}`, the polynomial factor alone. This is the right
    /// integrand for Gauss–Hermite rules, whose weight already carries the
    /// full Gaussian of a product of two eigenfunctions.
    pub fn eval_envelope_free(&self, x: f64) -> f64 {
        orthonormal_hermite(self.n, x)
    }
}

/// Convenience wrapper for a single eigenfunction value.
pub fn phi(n: usize, x: f64) -> Result<f64> {
    Ok(OscillatorEigenfunction::new(n)?.eval(x))
}

/// Gauss–Hermite rule: `∫ e^{-x²} f(x) dx ≈ Σ w_i f(x_i)`.
///
/// Nodes are the roots of `H_count`, symmetric about zero; all weights are
/// positive and sum to `√π`. The rule is exact for polynomials of degree
/// `2·count - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    // w_i e^{x_i²}, computed in factored form so it never overflows; used to
    // integrate functions that carry their own decay.
    total_weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `∫ e^{-x²} f(x) dx`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// `∫ f(x) dx` for an `f` that decays at least as fast as the Gaussian.
    pub fn integrate_direct<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.total_weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Node/total-weight pairs for direct integration of decaying functions.
    pub fn direct_pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes
            .iter()
            .copied()
            .zip(self.total_weights.iter().copied())
    }
}

/// Builds the `count`-node Gauss–Hermite rule.
///
/// Roots are found by Newton iteration on the Gaussian-weighted orthonormal
/// recurrence, largest root first, each polished to 1e-14; the iteration
/// failing to settle is reported as an error.
pub fn gauss_hermite(count: usize) -> Result<QuadratureRule> {
    if count == 0 {
        return Err(Error::InvalidParameter(
            "quadrature node count must be at least 1".into(),
        ));
    }
    if count > MAX_QUAD_NODES {
        return Err(Error::InvalidParameter(format!(
            "quadrature node count {count} exceeds the supported maximum {MAX_QUAD_NODES}"
        )));
    }

    let n = count;
    let nf = n as f64;
    let half = n.div_ceil(2);
    let mut upper_nodes = vec![0.0_f64; half];
    let mut upper_w = vec![0.0_f64; half];
    let mut upper_tw = vec![0.0_f64; half];

    for i in 0..half {
        // Standard cascade of initial guesses, largest root first.
        let mut z = match i {
            0 => {
                let a = (2.0 * nf + 1.0).sqrt();
                a - 1.85575 * (2.0 * nf + 1.0).powf(-1.0 / 6.0)
            }
            1 => upper_nodes[0] - 1.14 * nf.powf(0.426) / upper_nodes[0],
            2 => 1.86 * upper_nodes[1] - 0.86 * upper_nodes[0],
            3 => 1.91 * upper_nodes[2] - 0.91 * upper_nodes[1],
            _ => 2.0 * upper_nodes[i - 1] - upper_nodes[i - 2],
        };

        let mut converged = false;
        let mut last_below = f64::MAX;
        for _ in 0..100 {
            let (p, p_below) = weighted_pair(n, z);
            // h'_n = sqrt(2n) h_{n-1} - x h_n for the weighted recurrence.
            let dp = (2.0 * nf).sqrt() * p_below - z * p;
            let step = p / dp;
            z -= step;
            last_below = p_below;
            if step.abs() <= 1e-14 * z.abs().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::RootFindingFailed { count });
        }
        // Odd rules have an exact root at the origin.
        if n % 2 == 1 && i == half - 1 {
            z = 0.0;
            let (_, p_below) = weighted_pair(n, z);
            last_below = p_below;
        }
        upper_nodes[i] = z;
        // w = e^{-z²} / (n h_{n-1}(z)²) with the Gaussian folded into h.
        upper_tw[i] = 1.0 / (nf * last_below * last_below);
        upper_w[i] = upper_tw[i] * (-z * z).exp();
    }

    let mut nodes = vec![0.0_f64; n];
    let mut weights = vec![0.0_f64; n];
    let mut total_weights = vec![0.0_f64; n];
    for i in 0..half {
        // upper_nodes is descending; fill both tails toward the middle.
        nodes[n - 1 - i] = upper_nodes[i];
        nodes[i] = -upper_nodes[i];
        weights[n - 1 - i] = upper_w[i];
        weights[i] = upper_w[i];
        total_weights[n - 1 - i] = upper_tw[i];
        total_weights[i] = upper_tw[i];
    }

    Ok(QuadratureRule {
        nodes,
        weights,
        total_weights,
    })
}

/// `(h_n(x), h_{n-1}(x))` for the Gaussian-weighted orthonormal recurrence.
fn weighted_pair(n: usize, x: f64) -> (f64, f64) {
    let seed = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    if n == 0 {
        return (seed, 0.0);
    }
    let mut prev = seed;
    let mut cur = std::f64::consts::SQRT_2 * x * seed;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    /// Independent oracle: explicit coefficient sum
    /// `H_n(x) = n! Σ_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!)`.
    fn hermite_by_coefficients(n: usize, x: f64) -> f64 {
        let mut total = 0.0;
        for m in 0..=(n / 2) {
            let ln_term = ln_factorial(n) - ln_factorial(m) - ln_factorial(n - 2 * m);
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            total += sign * ln_term.exp() * (2.0 * x).powi((n - 2 * m) as i32);
        }
        total
    }

    #[test]
    fn hermite_low_orders() {
        assert_eq!(hermite(0, 1.7), 1.0);
        assert_eq!(hermite(1, 0.25), 0.5);
        assert_eq!(hermite(2, 1.0), 2.0);
    }

    #[test]
    fn hermite_matches_coefficient_sum() {
        // Frozen from the oracle: H_7(0.5) = 128 x^7 - 1344 x^5 + 3360 x^3 - 1680 x at x = 1/2.
        assert_abs_diff_eq!(hermite_by_coefficients(7, 0.5), -461.0, epsilon = 1e-9);
        assert_abs_diff_eq!(hermite(7, 0.5), -461.0, epsilon = 1e-10);
        for n in 0..=12 {
            for &x in &[-2.3, -0.9, 0.0, 0.4, 1.1, 3.7] {
                assert_relative_eq!(
                    hermite(n, x),
                    hermite_by_coefficients(n, x),
                    max_relative = 1e-11,
                    epsilon = 1e-11
                );
            }
        }
    }

    proptest! {
        #[test]
        fn hermite_recurrence_holds(n in 1usize..30, x in -10.0f64..10.0) {
            let lhs = hermite(n + 1, x);
            let rhs = 2.0 * x * hermite(n, x) - 2.0 * (n as f64) * hermite(n - 1, x);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(1.0));
        }

        #[test]
        fn phi_parity_is_exact(n in 0usize..40, x in 0.0f64..8.0) {
            let plus = phi(n, x).unwrap();
            let minus = phi(n, -x).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert_eq!(minus, sign * plus);
        }
    }

    #[test]
    fn phi_ground_state_peak() {
        assert_abs_diff_eq!(phi(0, 0.0).unwrap(), PI.powf(-0.25), epsilon = 1e-15);
        assert_abs_diff_eq!(phi(0, 0.0).unwrap(), 0.7511255444649425, epsilon = 1e-12);
    }

    #[test]
    fn phi_odd_state_vanishes_at_origin() {
        assert_eq!(phi(1, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn phi_composes_from_hermite() {
        // φ_3(1.2) = H_3(1.2) e^{-0.72} / sqrt(√π 2^3 3!)
        let norm = (PI.sqrt() * 8.0 * 6.0).sqrt();
        let expected = hermite_by_coefficients(3, 1.2) * (-0.72f64).exp() / norm;
        assert_relative_eq!(phi(3, 1.2).unwrap(), expected, max_relative = 1e-12);
    }

    #[test]
    fn phi_rejects_excessive_degree() {
        assert!(matches!(
            phi(MAX_DEGREE + 1, 0.0),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn orthonormal_hermite_stays_finite_at_high_degree() {
        let v = orthonormal_hermite(400, 5.0);
        assert!(v.is_finite());
    }

    #[test]
    fn quadrature_degree_one() {
        let rule = gauss_hermite(1).unwrap();
        assert_eq!(rule.nodes(), &[0.0]);
        assert_abs_diff_eq!(rule.weights()[0], PI.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn quadrature_degree_two() {
        // Roots of H_2 = 4x² - 2 are ±1/√2 with equal weights √π/2.
        let rule = gauss_hermite(2).unwrap();
        let inv_sqrt2 = 1.0 / std::f64::consts::SQRT_2;
        assert_abs_diff_eq!(rule.nodes()[0], -inv_sqrt2, epsilon = 1e-14);
        assert_abs_diff_eq!(rule.nodes()[1], inv_sqrt2, epsilon = 1e-14);
        assert_abs_diff_eq!(rule.weights()[0], PI.sqrt() / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(rule.weights()[1], PI.sqrt() / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn quadrature_degree_three_reference_values() {
        let rule = gauss_hermite(3).unwrap();
        let x_should = [-1.224_744_871_391_589, 0.0, 1.224_744_871_391_589];
        let w_should = [
            0.295_408_975_150_919_35,
            1.181_635_900_603_677_4,
            0.295_408_975_150_919_35,
        ];
        for i in 0..3 {
            assert_abs_diff_eq!(rule.nodes()[i], x_should[i], epsilon = 1e-14);
            assert_abs_diff_eq!(rule.weights()[i], w_should[i], epsilon = 1e-14);
        }
    }

    #[test]
    fn quadrature_weights_sum_to_sqrt_pi() {
        for count in [4, 17, 64, 128, 256] {
            let rule = gauss_hermite(count).unwrap();
            let total: f64 = rule.weights().iter().sum();
            assert_abs_diff_eq!(total, PI.sqrt(), epsilon = 1e-12);
        }
    }

    #[test]
    fn quadrature_integrates_even_moments_exactly() {
        // ∫ x^{2k} e^{-x²} dx = √π (2k-1)!! / 2^k, exact for 2k ≤ 2·count-1.
        let rule = gauss_hermite(8).unwrap();
        let mut expected = PI.sqrt();
        for k in 0..=7usize {
            if k > 0 {
                expected *= (2.0 * k as f64 - 1.0) / 2.0;
            }
            let got = rule.integrate(|x| x.powi(2 * k as i32));
            assert_relative_eq!(got, expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn quadrature_nodes_are_symmetric() {
        let rule = gauss_hermite(33).unwrap();
        let n = rule.count();
        for i in 0..n {
            assert_eq!(rule.nodes()[i], -rule.nodes()[n - 1 - i]);
            assert_eq!(rule.weights()[i], rule.weights()[n - 1 - i]);
        }
    }

    #[test]
    fn quadrature_rejects_invalid_counts() {
        assert!(gauss_hermite(0).is_err());
        assert!(gauss_hermite(MAX_QUAD_NODES + 1).is_err());
    }

    #[test]
    fn total_weights_integrate_plain_gaussian() {
        // ∫ e^{-x²/2} dx = √(2π), integrated without relying on the rule's own weight.
        let rule = gauss_hermite(96).unwrap();
        let got = rule.integrate_direct(|x| (-0.5 * x * x).exp());
        assert_relative_eq!(got, (2.0 * PI).sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn eigenfunctions_are_orthonormal_under_quadrature() {
        let rule = gauss_hermite(64).unwrap();
        let fns: Vec<_> = (0..=20)
            .map(|n| OscillatorEigenfunction::new(n).unwrap())
            .collect();
        for (i, fi) in fns.iter().enumerate() {
            for fj in &fns[i..] {
                let overlap = rule.integrate(|x| fi.eval_envelope_free(x) * fj.eval_envelope_free(x));
                let expected = if fi.degree() == fj.degree() { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(overlap, expected, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn ln_factorial_values() {
        assert_eq!(ln_factorial(0), 0.0);
        assert_eq!(ln_factorial(1), 0.0);
        assert_relative_eq!(ln_factorial(5), 120.0f64.ln(), max_relative = 1e-15);
        assert_relative_eq!(
            ln_factorial(170),
            7.257415615307999e306f64.ln(),
            max_relative = 1e-12
        );
    }
}
