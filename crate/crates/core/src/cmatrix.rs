//! Minimal dense complex matrix for the operator-algebra modules.
//!
//! Dimensions here are small (5×5 generators, truncated Fock spaces up to a
//! few thousand), but the generator matrices are extremely sparse, so the
//! product kernel skips zero entries of the left factor and the exponential
//! applied to a vector walks a precomputed nonzero list.

use num_complex::Complex64;

/// Dense, row-major, square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::ONE);
        }
        m
    }

    /// Builds from a sparse entry list; later duplicates accumulate.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Complex64)]) -> Self {
        let mut m = CMatrix::zeros(dim);
        for &(r, c, v) in entries {
            m.data[r * dim + c] += v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn dagger(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.at(r, c).conj());
            }
        }
        out
    }

    pub fn scaled(&self, factor: Complex64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == Complex64::ZERO {
                    continue;
                }
                let out_row = &mut out.data[i * n..(i + 1) * n];
                let other_row = &other.data[k * n..(k + 1) * n];
                for (o, b) in out_row.iter_mut().zip(other_row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &CMatrix) -> CMatrix {
        self.matmul(other).sub(&other.matmul(self))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest entry magnitude over the columns flagged in `mask`.
    pub fn max_abs_in_columns(&self, mask: &[bool]) -> f64 {
        assert_eq!(mask.len(), self.dim);
        let mut worst = 0.0_f64;
        for r in 0..self.dim {
            for (c, &keep) in mask.iter().enumerate() {
                if keep {
                    worst = worst.max(self.at(r, c).norm());
                }
            }
        }
        worst
    }

    /// `max_r |A - A†|` — zero for a Hermitian matrix.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.sub(&self.dagger()).max_abs()
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        self.data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    pub fn nonzeros(&self) -> Vec<(usize, usize, Complex64)> {
        let mut out = Vec::new();
        for r in 0..self.dim {
            for c in 0..self.dim {
                let v = self.at(r, c);
                if v != Complex64::ZERO {
                    out.push((r, c, v));
                }
            }
        }
        out
    }

    pub fn norm_one(&self) -> f64 {
        let mut worst = 0.0_f64;
        for c in 0..self.dim {
            let sum: f64 = (0..self.dim).map(|r| self.at(r, c).norm()).sum();
            worst = worst.max(sum);
        }
        worst
    }

    /// Matrix exponential by scaling and squaring with a Taylor series.
    pub fn expm(&self) -> CMatrix {
        let norm = self.norm_one();
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scaled(Complex64::new(0.5f64.powi(squarings as i32), 0.0));
        let mut result = CMatrix::identity(self.dim);
        let mut term = CMatrix::identity(self.dim);
        for k in 1..=40u32 {
            term = term.matmul(&scaled).scaled(Complex64::new(1.0 / k as f64, 0.0));
            result = result.add(&term);
            if term.max_abs() < 1e-18 {
                break;
            }
        }
        for _ in 0..squarings {
            result = result.matmul(&result);
        }
        result
    }

    /// `exp(A) v` without forming the exponential: the step count brings the
    /// per-step norm below one, and each step sums the Taylor series on the
    /// vector using the nonzero list of `A`.
    pub fn expm_apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        let entries = self.nonzeros();
        let steps = (self.norm_one().ceil() as usize).max(1);
        let inv_steps = Complex64::new(1.0 / steps as f64, 0.0);

        let mut state = v.to_vec();
        let mut term = vec![Complex64::ZERO; self.dim];
        let mut next = vec![Complex64::ZERO; self.dim];
        for _ in 0..steps {
            term.copy_from_slice(&state);
            for k in 1..=60u32 {
                next.iter_mut().for_each(|x| *x = Complex64::ZERO);
                for &(r, c, a) in &entries {
                    next[r] += a * term[c];
                }
                let factor = inv_steps / k as f64;
                let mut term_norm = 0.0_f64;
                for (t, nx) in term.iter_mut().zip(&next) {
                    *t = nx * factor;
                    term_norm += t.norm_sqr();
                }
                for (s, t) in state.iter_mut().zip(&term) {
                    *s += t;
                }
                if term_norm.sqrt() < 1e-18 {
                    break;
                }
            }
        }
        state
    }
}

/// Solves the dense complex system `A x = b` by Gaussian elimination with
/// partial pivoting. Intended for the small Gram systems of the
/// representation-equivalence check.
pub fn solve_dense(a: &CMatrix, b: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = a.dim();
    assert_eq!(b.len(), n);
    let mut m = a.clone();
    let mut rhs = b.to_vec();

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| {
                m.at(r1, col)
                    .norm()
                    .partial_cmp(&m.at(r2, col).norm())
                    .unwrap()
            })
            .unwrap();
        if m.at(pivot_row, col).norm() < 1e-300 {
            return None;
        }
        if pivot_row != col {
            for c in 0..n {
                let tmp = m.at(col, c);
                m.set(col, c, m.at(pivot_row, c));
                m.set(pivot_row, c, tmp);
            }
            rhs.swap(col, pivot_row);
        }
        let pivot = m.at(col, col);
        for row in (col + 1)..n {
            let factor = m.at(row, col) / pivot;
            if factor == Complex64::ZERO {
                continue;
            }
            for c in col..n {
                let v = m.at(row, c) - factor * m.at(col, c);
                m.set(row, c, v);
            }
            let pivot_rhs = rhs[col];
            rhs[row] -= factor * pivot_rhs;
        }
    }

    let mut x = vec![Complex64::ZERO; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for (c, xc) in x.iter().enumerate().skip(row + 1) {
            acc -= m.at(row, c) * xc;
        }
        x[row] = acc / m.at(row, row);
    }
    Some(x)
}
