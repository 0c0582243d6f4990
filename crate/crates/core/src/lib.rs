//! Numerical toolkit for the covariant harmonic oscillator.
//!
//! The crate covers three connected layers of the same physical system:
//!
//! * [`oscillator`] — harmonic-oscillator wave functions in the longitudinal
//!   and time-like separation variables, Lorentz-boosted along the
//!   light-cone axes where a boost acts as a squeeze. Includes the two-mode
//!   expansion of the boosted ground state, momentum-space wave functions by
//!   Fourier transform, invariant uncertainty products, and a finite-difference
//!   eigenvalue check.
//! * [`formfactor`] — the elastic proton form factor computed from the overlap
//!   of two oppositely boosted ground states in the Breit frame, with closed
//!   forms for the two-quark and three-quark cases, the dipole large-`Q²`
//!   behavior, and the non-relativistic exponential cutoff for comparison.
//! * [`fockalg`] and [`desitter`] — the ten O(3,2) generators, once as
//!   quadratic forms of two-mode creation/annihilation operators on a
//!   truncated Fock space and once as 5×5 matrices acting on `(x, y, z, t, s)`,
//!   with exact commutator verification, a representation-equivalence check,
//!   and the Inönü–Wigner contraction that turns the four extra generators
//!   into space-time translations.
//!
//! [`specfun`] holds the shared special-function layer (Hermite polynomials,
//! normalized oscillator eigenfunctions, Gauss–Hermite quadrature) and
//! [`cmatrix`] a small dense complex-matrix type with the exponentials needed
//! by the algebra modules.
//!
//! Everything is pure and immutable after construction; all functions are safe
//! to call concurrently.

pub mod algebra;
pub mod cmatrix;
pub mod desitter;
pub mod error;
pub mod fockalg;
pub mod formfactor;
pub mod oscillator;
pub mod specfun;

pub use algebra::{CommutatorReport, GeneratorLabel};
pub use cmatrix::CMatrix;
pub use desitter::{ContractionParameter, FiveVector, MatrixGenerator, TranslationLabel};
pub use error::{Error, Result};
pub use fockalg::{GeneratorSet, ModeOperators};
pub use formfactor::{FormFactorCurve, FormFactorVariant, Kinematics};
pub use oscillator::{
    ClosedFormWaveFn, LightConePoint, MomentumWaveFn, Rapidity, UncertaintyReport,
};
pub use specfun::{OscillatorEigenfunction, QuadratureRule};
