//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Oscillator excitation above the supported maximum degree.
    #[error("oscillator degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    /// Newton iteration for quadrature nodes did not reach tolerance.
    #[error("Gauss-Hermite root finding did not converge for a {count}-node rule")]
    RootFindingFailed { count: usize },

    /// Two successive quadrature refinements disagree.
    #[error("quadrature did not converge: refinements differ by {delta:.3e} (tolerance {tolerance:.3e})")]
    QuadratureNotConverged { delta: f64, tolerance: f64 },

    /// An integral that must be real came back with a sizable imaginary part.
    #[error("spurious imaginary part {magnitude:.3e} in a real integral")]
    SpuriousImaginaryPart { magnitude: f64 },

    /// Fock-space truncation above the supported maximum dimension.
    #[error("truncation {truncation} exceeds the supported maximum {max}")]
    TruncationTooLarge { truncation: usize, max: usize },

    /// Fock-space truncation too small for the requested squeeze.
    #[error("truncation {truncation} too small: state norm deviates from 1 by {deviation:.3e}")]
    TruncationTooSmall { truncation: usize, deviation: f64 },

    /// A five-vector off the contracted carrier (fifth slot must be 1).
    #[error("five-vector is not on the contracted carrier: fifth component is {got}, expected 1")]
    InvalidCarrier { got: f64 },

    /// A precondition on an argument was violated.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
