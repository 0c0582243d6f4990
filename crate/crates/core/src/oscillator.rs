//! The covariant oscillator in the longitudinal/time-like separation plane.
//!
//! A boost along `z` with rapidity `η` acts on the light-cone combinations
//! `z_± = (z ± t)/√2` as the squeeze `z_+ → e^{-η} z_+`, `z_- → e^{η} z_-`,
//! so a boosted eigenstate is the unboosted one evaluated at the squeezed
//! point. The module provides the boosted wave functions in position and
//! momentum space, the two-mode expansion of the boosted ground state, the
//! invariant uncertainty products, and a finite-difference residual check of
//! the eigenvalue equation
//! `½(-∂²/∂z² + ∂²/∂t² + z² - t²) ψ_n = n ψ_n`.

use crate::error::{Error, Result};
use crate::specfun::{
    gauss_hermite, OscillatorEigenfunction, QuadratureRule, DEFAULT_QUAD_NODES,
};
use std::f64::consts::{PI, SQRT_2};

/// Dimensionless boost parameter; the boost velocity is `tanh η`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rapidity(f64);

impl Rapidity {
    pub fn new(eta: f64) -> Self {
        debug_assert!(eta.is_finite());
        Rapidity(eta)
    }

    pub fn eta(self) -> f64 {
        self.0
    }

    /// Boost velocity in units of `c`; always in `(-1, 1)`.
    pub fn velocity(self) -> f64 {
        self.0.tanh()
    }
}

impl std::ops::Neg for Rapidity {
    type Output = Rapidity;

    fn neg(self) -> Rapidity {
        Rapidity(-self.0)
    }
}

impl From<f64> for Rapidity {
    fn from(eta: f64) -> Self {
        Rapidity::new(eta)
    }
}

/// A point expressed in light-cone coordinates `z_± = (z ± t)/√2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightConePoint {
    pub plus: f64,
    pub minus: f64,
}

impl LightConePoint {
    pub fn from_zt(z: f64, t: f64) -> Self {
        LightConePoint {
            plus: (z + t) / SQRT_2,
            minus: (z - t) / SQRT_2,
        }
    }

    pub fn to_zt(self) -> (f64, f64) {
        (
            (self.plus + self.minus) / SQRT_2,
            (self.plus - self.minus) / SQRT_2,
        )
    }

    /// `z_+ z_- = (z² - t²)/2`, unchanged by any boost.
    pub fn invariant_product(self) -> f64 {
        self.plus * self.minus
    }

    /// The squeeze action of a boost: one axis contracts as `e^{-η}`, the
    /// other expands as `e^{η}`.
    pub fn boosted(self, eta: Rapidity) -> Self {
        LightConePoint {
            plus: (-eta.eta()).exp() * self.plus,
            minus: eta.eta().exp() * self.minus,
        }
    }
}

/// Coordinate substitution for boosting a wave function along `z`:
/// `(z, t) → (z cosh η - t sinh η, t cosh η - z sinh η)`.
pub fn boost_coords(z: f64, t: f64, eta: Rapidity) -> (f64, f64) {
    let c = eta.eta().cosh();
    let s = eta.eta().sinh();
    (z * c - t * s, t * c - z * s)
}

/// Boosted oscillator eigenstate `ψ_{n,η}(z, t)`, evaluable in closed form.
///
/// For `n = 0` this is the squeezed Gaussian
/// `(1/π)^{1/2} exp(-¼[e^{-2η}(z+t)² + e^{2η}(z-t)²])`; excited states carry
/// a Hermite factor in the boosted longitudinal coordinate while the
/// time-like factor stays in its ground state. The norm is fixed so that
/// `∫∫ |ψ|² dz dt = 1`: analytically for `n = 0`, by quadrature otherwise.
#[derive(Debug, Clone)]
pub struct ClosedFormWaveFn {
    n: usize,
    eta: Rapidity,
    longitudinal: OscillatorEigenfunction,
    temporal: OscillatorEigenfunction,
    scale: f64,
}

impl ClosedFormWaveFn {
    pub fn new(n: usize, eta: Rapidity) -> Result<Self> {
        let longitudinal = OscillatorEigenfunction::new(n)?;
        let temporal = OscillatorEigenfunction::new(0)?;
        let scale = if n == 0 {
            1.0
        } else {
            // The boost has unit Jacobian, so the norm integral separates in
            // the boosted axes; the rule is exact for this polynomial degree.
            let rule = gauss_hermite((n + 8).min(crate::specfun::MAX_QUAD_NODES))?;
            let long_sq = rule.integrate(|u| {
                let v = longitudinal.eval_envelope_free(u);
                v * v
            });
            let temp_sq = rule.integrate(|v| {
                let w = temporal.eval_envelope_free(v);
                w * w
            });
            1.0 / (long_sq * temp_sq).sqrt()
        };
        Ok(ClosedFormWaveFn {
            n,
            eta,
            longitudinal,
            temporal,
            scale,
        })
    }

    pub fn excitation(&self) -> usize {
        self.n
    }

    pub fn rapidity(&self) -> Rapidity {
        self.eta
    }

    pub fn evaluate(&self, z: f64, t: f64) -> f64 {
        let (zb, tb) = boost_coords(z, t, self.eta);
        self.scale * self.longitudinal.eval(zb) * self.temporal.eval(tb)
    }

    /// `∫∫ ψ² dz dt` by two-dimensional Gauss–Hermite quadrature along the
    /// scaled light-cone axes, where the squeezed Gaussian matches the
    /// quadrature weight for every rapidity.
    pub fn squared_norm(&self, nodes: usize) -> Result<f64> {
        let rule = gauss_hermite(nodes)?;
        let ep = self.eta.eta().exp();
        let em = (-self.eta.eta()).exp();
        let mut total = 0.0;
        for (p, wp) in rule.direct_pairs() {
            let z_plus = ep * p;
            let mut row = 0.0;
            for (m, wm) in rule.direct_pairs() {
                let z_minus = em * m;
                let z = (z_plus + z_minus) / SQRT_2;
                let t = (z_plus - z_minus) / SQRT_2;
                let v = self.evaluate(z, t);
                row += wm * v * v;
            }
            total += wp * row;
        }
        Ok(total)
    }
}

/// `ψ_{n,η}(z, t)` in one call.
pub fn psi(n: usize, eta: Rapidity, z: f64, t: f64) -> Result<f64> {
    Ok(ClosedFormWaveFn::new(n, eta)?.evaluate(z, t))
}

/// Ground-state wave function in momentum space,
/// `φ_η(q_z, q_0) = (1/π)^{1/2} exp(-½[e^{-2η} q_+² + e^{2η} q_-²])`
/// with `q_± = (q_0 ± q_z)/√2`. Same squeeze geometry as the position-space
/// Gaussian: both spread along their light-cone axes together.
#[derive(Debug, Clone, Copy)]
pub struct MomentumWaveFn {
    eta: Rapidity,
}

impl MomentumWaveFn {
    pub fn new(eta: Rapidity) -> Self {
        MomentumWaveFn { eta }
    }

    pub fn rapidity(&self) -> Rapidity {
        self.eta
    }

    pub fn evaluate(&self, q_z: f64, q_0: f64) -> f64 {
        let q_plus = (q_0 + q_z) / SQRT_2;
        let q_minus = (q_0 - q_z) / SQRT_2;
        let e2 = (2.0 * self.eta.eta()).exp();
        (1.0 / PI).sqrt() * (-0.5 * (q_plus * q_plus / e2 + e2 * q_minus * q_minus)).exp()
    }
}

/// Expansion coefficients of the boosted ground state over the two-mode
/// number basis: `ψ_η = Σ_n A_n φ_n(z) φ_n(t)` with
/// `A_n = (tanh η)^n / cosh η`. The squared coefficients sum to one.
pub fn expansion_coefficients(eta: Rapidity, max_n: usize) -> Vec<f64> {
    let tanh = eta.eta().tanh();
    let mut coeff = 1.0 / eta.eta().cosh();
    let mut out = Vec::with_capacity(max_n + 1);
    for _ in 0..=max_n {
        out.push(coeff);
        coeff *= tanh;
    }
    out
}

/// Maximum absolute deviation over `grid` between the closed-form boosted
/// ground state and its series truncated at `max_n`. Decays geometrically in
/// `max_n` at rate `tanh² η`.
pub fn verify_expansion(eta: Rapidity, max_n: usize, grid: &[(f64, f64)]) -> Result<f64> {
    assert!(!grid.is_empty(), "grid must be non-empty");
    let wavefn = ClosedFormWaveFn::new(0, eta)?;
    let coeffs = expansion_coefficients(eta, max_n);
    let basis: Vec<OscillatorEigenfunction> = (0..=max_n)
        .map(OscillatorEigenfunction::new)
        .collect::<Result<_>>()?;
    let mut worst = 0.0_f64;
    for &(z, t) in grid {
        let series: f64 = basis
            .iter()
            .zip(&coeffs)
            .map(|(f, &a)| a * f.eval(z) * f.eval(t))
            .sum();
        worst = worst.max((wavefn.evaluate(z, t) - series).abs());
    }
    Ok(worst)
}

/// One evaluation of the Fourier integral
/// `(1/2π) ∫∫ ψ_{0,η}(z, t) exp(i[q_z z - q_0 t]) dz dt`
/// with a fixed node count. The integrand is even, so only the cosine part
/// survives.
pub fn fourier_transform_value(eta: Rapidity, q_z: f64, q_0: f64, nodes: usize) -> Result<f64> {
    let rule = gauss_hermite(nodes)?;
    let wavefn = ClosedFormWaveFn::new(0, eta)?;
    let mut total = 0.0;
    for (z, wz) in rule.direct_pairs() {
        let mut row = 0.0;
        for (t, wt) in rule.direct_pairs() {
            row += wt * wavefn.evaluate(z, t) * (q_z * z - q_0 * t).cos();
        }
        total += wz * row;
    }
    Ok(total / (2.0 * PI))
}

/// Momentum-space wave function obtained numerically as the Fourier
/// transform of the position-space ground state. Refines the node count once
/// and reports non-convergence if the two evaluations disagree beyond 1e-6.
pub fn momentum_wavefn_via_fourier(eta: Rapidity, q_z: f64, q_0: f64) -> Result<f64> {
    let tolerance = 1e-6;
    let coarse = fourier_transform_value(eta, q_z, q_0, DEFAULT_QUAD_NODES)?;
    let fine = fourier_transform_value(eta, q_z, q_0, 2 * DEFAULT_QUAD_NODES)?;
    let delta = (coarse - fine).abs();
    if delta > tolerance {
        return Err(Error::QuadratureNotConverged { delta, tolerance });
    }
    Ok(fine)
}

/// Second moments of the boosted densities in the light-cone variables and
/// the two invariant uncertainty products built from them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyReport {
    pub mean_zplus_sq: f64,
    pub mean_zminus_sq: f64,
    pub mean_qplus_sq: f64,
    pub mean_qminus_sq: f64,
}

impl UncertaintyReport {
    /// `(⟨z_+²⟩⟨q_-²⟩, ⟨z_-²⟩⟨q_+²⟩)`; each conjugate pairing is
    /// η-independent and equals its rest-frame value of 1/4.
    pub fn products(&self) -> (f64, f64) {
        (
            self.mean_zplus_sq * self.mean_qminus_sq,
            self.mean_zminus_sq * self.mean_qplus_sq,
        )
    }
}

/// Computes `⟨z_±²⟩` against `|ψ_{0,η}|²` and `⟨q_±²⟩` against `|φ_η|²` by
/// quadrature along the scaled light-cone axes.
pub fn uncertainty_products(eta: Rapidity) -> Result<UncertaintyReport> {
    let rule = gauss_hermite(DEFAULT_QUAD_NODES)?;
    let ep = eta.eta().exp();
    let em = (-eta.eta()).exp();

    let wavefn = ClosedFormWaveFn::new(0, eta)?;
    let (zplus, zminus) = second_moments(&rule, ep, em, |plus, minus| {
        let z = (plus + minus) / SQRT_2;
        let t = (plus - minus) / SQRT_2;
        let v = wavefn.evaluate(z, t);
        v * v
    });

    // In momentum space the wide axis is q_+; q_± reconstruct as
    // q_0 = (q_+ + q_-)/√2, q_z = (q_+ - q_-)/√2.
    let momentum = MomentumWaveFn::new(eta);
    let (qplus, qminus) = second_moments(&rule, ep, em, |plus, minus| {
        let q_0 = (plus + minus) / SQRT_2;
        let q_z = (plus - minus) / SQRT_2;
        let v = momentum.evaluate(q_z, q_0);
        v * v
    });

    Ok(UncertaintyReport {
        mean_zplus_sq: zplus,
        mean_zminus_sq: zminus,
        mean_qplus_sq: qplus,
        mean_qminus_sq: qminus,
    })
}

/// `⟨plus²⟩, ⟨minus²⟩` for a density given in light-cone coordinates, where
/// the plus axis is stretched by `e^η` and the minus axis by `e^{-η}`.
fn second_moments<F: Fn(f64, f64) -> f64>(
    rule: &QuadratureRule,
    ep: f64,
    em: f64,
    density: F,
) -> (f64, f64) {
    let mut norm = 0.0;
    let mut plus_sq = 0.0;
    let mut minus_sq = 0.0;
    for (p, wp) in rule.direct_pairs() {
        let plus = ep * p;
        for (m, wm) in rule.direct_pairs() {
            let minus = em * m;
            let w = wp * wm * density(plus, minus);
            norm += w;
            plus_sq += w * plus * plus;
            minus_sq += w * minus * minus;
        }
    }
    // The scaled axes have unit Jacobian, so norm is already ≈ 1; divide to
    // make the moments insensitive to the residual quadrature error.
    (plus_sq / norm, minus_sq / norm)
}

/// Applies `½(-∂²/∂z² + ∂²/∂t² + z² - t²)` to `ψ_{n,η}` with central second
/// differences on the interior of a `|z|,|t| ≤ 6` grid and returns
/// `max |Op ψ - n ψ|`. The residual shrinks as the square of the spacing,
/// uniformly in the rapidity: the boosted state stays an eigenstate with
/// eigenvalue `n`.
pub fn eigenvalue_residual(n: usize, eta: Rapidity, grid_spacing: f64) -> Result<f64> {
    if !(grid_spacing > 0.0 && grid_spacing <= 0.1) {
        return Err(Error::InvalidParameter(format!(
            "grid spacing must lie in (0, 0.1], got {grid_spacing}"
        )));
    }
    const EXTENT: f64 = 6.0;
    let wavefn = ClosedFormWaveFn::new(n, eta)?;
    let h = grid_spacing;
    let steps = (2.0 * EXTENT / h).round() as usize;
    let coord = |i: usize| -EXTENT + h * i as f64;

    let mut values = vec![0.0_f64; (steps + 1) * (steps + 1)];
    for i in 0..=steps {
        let z = coord(i);
        for j in 0..=steps {
            values[i * (steps + 1) + j] = wavefn.evaluate(z, coord(j));
        }
    }
    let at = |i: usize, j: usize| values[i * (steps + 1) + j];

    let h2 = h * h;
    let lambda = n as f64;
    let mut worst = 0.0_f64;
    for i in 1..steps {
        let z = coord(i);
        for j in 1..steps {
            let t = coord(j);
            let center = at(i, j);
            let d2z = (at(i + 1, j) - 2.0 * center + at(i - 1, j)) / h2;
            let d2t = (at(i, j + 1) - 2.0 * center + at(i, j - 1)) / h2;
            let op = 0.5 * (-d2z + d2t + (z * z - t * t) * center);
            worst = worst.max((op - lambda * center).abs());
        }
    }
    Ok(worst)
}
