//! Elastic proton form factor from boosted oscillator wave functions.
//!
//! In the Breit frame the incoming and outgoing protons carry opposite
//! momenta, so the form factor is the overlap of a state boosted by `+η`
//! with one boosted by `-η`, weighted by the momentum-transfer phase. The
//! squeeze deformation of both wave functions keeps them overlapping at
//! large `Q²`, which turns the non-relativistic exponential cutoff into the
//! observed power-law (dipole) falloff.
//!
//! All formulas depend on `Q²` and the proton mass only through the ratio
//! `Q²/M²`; the oscillator length scale is set to one.

use crate::error::{Error, Result};
use crate::oscillator::Rapidity;
use crate::specfun::gauss_hermite;
use std::f64::consts::PI;

/// Breit-frame kinematics for momentum transfer `Q²` and proton mass `M`.
///
/// The boost of each proton satisfies `tanh² η = Q²/(Q² + 4M²)`, and the
/// longitudinal momentum is `P = √(Q²)/2` (so `Q² = 4P²`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kinematics {
    q_squared: f64,
    proton_mass: f64,
}

impl Kinematics {
    pub fn new(q_squared: f64, proton_mass: f64) -> Result<Self> {
        if q_squared.is_nan() || q_squared < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "momentum transfer squared must be non-negative, got {q_squared}"
            )));
        }
        if !proton_mass.is_finite() || proton_mass <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "proton mass must be positive, got {proton_mass}"
            )));
        }
        Ok(Kinematics {
            q_squared,
            proton_mass,
        })
    }

    pub fn q_squared(&self) -> f64 {
        self.q_squared
    }

    pub fn proton_mass(&self) -> f64 {
        self.proton_mass
    }

    /// `Q²/M²`, the only combination the physics depends on.
    pub fn q2_ratio(&self) -> f64 {
        self.q_squared / (self.proton_mass * self.proton_mass)
    }

    /// `tanh² η = Q²/(Q² + 4M²)`; zero at `Q² = 0`, approaching one as
    /// `Q² → ∞`.
    pub fn tanh_eta_squared(&self) -> f64 {
        let x = self.q2_ratio();
        x / (x + 4.0)
    }

    /// Boost rapidity of each proton in the Breit frame.
    pub fn rapidity(&self) -> Rapidity {
        Rapidity::new(self.tanh_eta_squared().sqrt().atanh())
    }

    /// Longitudinal momentum `P = √(Q²)/2` in oscillator units (mass `M`
    /// scaled to one).
    pub fn momentum(&self) -> f64 {
        self.q2_ratio().sqrt() / 2.0
    }

    /// `cosh 2η = (Q² + 2M²)/(2M²)`, the width of the overlap Gaussian.
    pub fn cosh_2eta(&self) -> f64 {
        1.0 + self.q2_ratio() / 2.0
    }
}

/// `η(Q²)`: the Breit-frame rapidity with `tanh² η = Q²/(Q² + 4M²)`.
pub fn eta_of_q2(q_squared: f64, proton_mass: f64) -> Result<Rapidity> {
    Ok(Kinematics::new(q_squared, proton_mass)?.rapidity())
}

/// Pointwise product of the receding and incoming ground states,
/// `ψ_{-η}(z, t) ψ_{η}(z, t) = (1/π) exp(-cosh(2η)(z² + t²))`.
/// The light-cone squeezes of the two factors combine into one isotropic
/// Gaussian whose width grows with the boost.
pub fn overlap_product(eta: Rapidity, z: f64, t: f64) -> f64 {
    (1.0 / PI) * (-(2.0 * eta.eta()).cosh() * (z * z + t * t)).exp()
}

/// Two-quark form factor in closed form,
/// `g(Q²) = (2M²/(Q² + 2M²)) exp(-Q²/(2(Q² + 2M²)))`.
/// Equals one at `Q² = 0` and falls off as `1/Q²`.
pub fn g_closed_form(q_squared: f64, proton_mass: f64) -> f64 {
    let m2 = proton_mass * proton_mass;
    let denom = q_squared + 2.0 * m2;
    (2.0 * m2 / denom) * (-q_squared / (2.0 * denom)).exp()
}

/// One evaluation of the Breit-frame overlap integral
/// `g(Q²) = (π cosh 2η)^{-1/2} ∫ e^{-2iPz} exp(-cosh(2η) z²) dz`
/// at a fixed node count, returned as `(real, imaginary)` parts. The
/// substitution `u = √(cosh 2η)·z` matches the Gaussian to the quadrature
/// weight, so only the bounded oscillatory factor is sampled.
pub fn g_overlap_integral(q_squared: f64, proton_mass: f64, nodes: usize) -> Result<(f64, f64)> {
    let kin = Kinematics::new(q_squared, proton_mass)?;
    let rule = gauss_hermite(nodes)?;
    let c = kin.cosh_2eta();
    let freq = 2.0 * kin.momentum() / c.sqrt();
    let re = rule.integrate(|u| (freq * u).cos());
    let im = rule.integrate(|u| -(freq * u).sin());
    let prefactor = 1.0 / ((PI * c).sqrt() * c.sqrt());
    Ok((prefactor * re, prefactor * im))
}

/// Two-quark form factor by numerical quadrature of the overlap integral.
///
/// Refines the node count once and reports non-convergence if the two
/// evaluations disagree beyond 1e-9; the imaginary part must vanish (the
/// integrand is even), and a sizable one is reported rather than dropped.
pub fn g_by_quadrature(q_squared: f64, proton_mass: f64, nodes: usize) -> Result<f64> {
    if nodes < 32 {
        return Err(Error::InvalidParameter(format!(
            "quadrature for the overlap integral needs at least 32 nodes, got {nodes}"
        )));
    }
    let tolerance = 1e-9;
    let (coarse, _) = g_overlap_integral(q_squared, proton_mass, nodes)?;
    let (fine, im) = g_overlap_integral(q_squared, proton_mass, 2 * nodes)?;
    let delta = (coarse - fine).abs();
    if delta > tolerance {
        return Err(Error::QuadratureNotConverged { delta, tolerance });
    }
    if im.abs() > 1e-12 {
        return Err(Error::SpuriousImaginaryPart {
            magnitude: im.abs(),
        });
    }
    Ok(fine)
}

/// Three-quark form factor,
/// `F(Q²) = (2M²/(Q² + 2M²))² exp(-Q²/(Q² + 2M²))`:
/// the two internal oscillator modes each contribute one squeezed overlap.
/// Equals one at `Q² = 0` and falls off as `1/Q⁴` (the dipole cutoff).
pub fn f_three_quark(q_squared: f64, proton_mass: f64) -> f64 {
    let m2 = proton_mass * proton_mass;
    let denom = q_squared + 2.0 * m2;
    let ratio = 2.0 * m2 / denom;
    ratio * ratio * (-q_squared / denom).exp()
}

/// Form factor of a static (unsqueezed) Gaussian source,
/// `g(Q²) = exp(-Q²/4)`: the exponential cutoff that the relativistic
/// calculation is measured against.
pub fn g_nonrelativistic(q_squared: f64) -> f64 {
    (-q_squared / 4.0).exp()
}

/// Ratio of the external interaction time to the internal oscillation
/// period for a proton boosted by `η`: `exp(-2η)`.
pub fn time_dilation_ratio(eta: Rapidity) -> f64 {
    (-2.0 * eta.eta()).exp()
}

/// Which form-factor formula a sampled curve follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormFactorVariant {
    TwoQuarkG,
    ThreeQuarkF,
    NonRelativistic,
}

impl FormFactorVariant {
    pub fn evaluate(&self, q_squared: f64, proton_mass: f64) -> f64 {
        match self {
            FormFactorVariant::TwoQuarkG => g_closed_form(q_squared, proton_mass),
            FormFactorVariant::ThreeQuarkF => f_three_quark(q_squared, proton_mass),
            FormFactorVariant::NonRelativistic => g_nonrelativistic(q_squared),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FormFactorVariant::TwoQuarkG => "two-quark-g",
            FormFactorVariant::ThreeQuarkF => "three-quark-F",
            FormFactorVariant::NonRelativistic => "nonrelativistic",
        }
    }
}

/// A sampled form-factor curve; every variant starts at exactly one.
#[derive(Debug, Clone, PartialEq)]
pub struct FormFactorCurve {
    pub variant: FormFactorVariant,
    pub samples: Vec<(f64, f64)>,
}

impl FormFactorCurve {
    pub fn sample(variant: FormFactorVariant, q_squared_values: &[f64], proton_mass: f64) -> Self {
        let samples = q_squared_values
            .iter()
            .map(|&q2| (q2, variant.evaluate(q2, proton_mass)))
            .collect();
        FormFactorCurve { variant, samples }
    }
}
