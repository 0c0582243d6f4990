//! Shared inputs for the criterion benchmarks.

/// Momentum transfers covering the soft and hard regimes.
pub fn q2_sweep() -> Vec<f64> {
    (0..20).map(|i| 0.5 * (1.4f64).powi(i)).collect()
}
