//! The 5×5 matrix representation of the ten O(3,2) generators on
//! `(x, y, z, t, s)`, its exact commutator verification, the equivalence
//! check against the two-mode Fock representation, and the Inönü–Wigner
//! contraction that turns the four `s`-sector generators into space-time
//! translations of the inhomogeneous Lorentz group.

use crate::algebra::{verify_closure, CommutatorReport, GeneratorLabel};
use crate::cmatrix::{solve_dense, CMatrix};
use crate::error::{Error, Result};
use crate::fockalg::GeneratorSet;
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);
const DIM: usize = 5;

/// A point of the O(3,2) carrier space: three space-like and two time-like
/// coordinates. After contraction the fifth slot degenerates to the
/// constant 1 and the rest is an ordinary Minkowski four-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiveVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
    pub s: f64,
}

impl FiveVector {
    pub fn new(x: f64, y: f64, z: f64, t: f64, s: f64) -> Self {
        FiveVector { x, y, z, t, s }
    }

    /// The invariant `x² + y² + z² - t² - s²`.
    pub fn interval(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z - self.t * self.t - self.s * self.s
    }

    pub fn components(&self) -> [f64; 5] {
        [self.x, self.y, self.z, self.t, self.s]
    }

    pub fn from_components(c: [f64; 5]) -> Self {
        FiveVector::new(c[0], c[1], c[2], c[3], c[4])
    }
}

/// One named 5×5 generator.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixGenerator {
    pub label: GeneratorLabel,
    pub matrix: CMatrix,
}

/// The 5×5 matrix for one generator. Rows and columns are ordered
/// `(x, y, z, t, s)`; every entry is `±i`.
pub fn generator_matrix(label: GeneratorLabel) -> CMatrix {
    let entries: &[(usize, usize, Complex64)] = match label {
        GeneratorLabel::J1 => &[(1, 2, Complex64::new(0.0, -1.0)), (2, 1, I)],
        GeneratorLabel::J2 => &[(0, 2, I), (2, 0, Complex64::new(0.0, -1.0))],
        GeneratorLabel::J3 => &[(0, 1, Complex64::new(0.0, -1.0)), (1, 0, I)],
        GeneratorLabel::K1 => &[(0, 3, I), (3, 0, I)],
        GeneratorLabel::K2 => &[(1, 3, I), (3, 1, I)],
        GeneratorLabel::K3 => &[(2, 3, I), (3, 2, I)],
        GeneratorLabel::Q1 => &[(0, 4, I), (4, 0, I)],
        GeneratorLabel::Q2 => &[(1, 4, I), (4, 1, I)],
        GeneratorLabel::Q3 => &[(2, 4, I), (4, 2, I)],
        GeneratorLabel::S0 => &[(3, 4, Complex64::new(0.0, -1.0)), (4, 3, I)],
    };
    CMatrix::from_entries(DIM, entries)
}

/// All ten matrix generators in canonical label order.
pub fn build_matrix_generators() -> Vec<MatrixGenerator> {
    GeneratorLabel::ALL
        .iter()
        .map(|&label| MatrixGenerator {
            label,
            matrix: generator_matrix(label),
        })
        .collect()
}

/// Checks all 45 pairs of the 5×5 representation against the structure
/// table. The arithmetic is integer-valued, so the deviations are exactly
/// zero and any tolerance down to 1e-14 passes.
pub fn verify_matrix_algebra(tolerance: f64) -> Vec<CommutatorReport> {
    let generators: Vec<CMatrix> = GeneratorLabel::ALL.iter().map(|&l| generator_matrix(l)).collect();
    verify_closure(|label| &generators[label.index()], tolerance, None)
}

/// Hilbert–Schmidt inner product `tr(A† B)`, restricted to the columns in
/// `mask` when given.
fn projected_inner(a: &CMatrix, b: &CMatrix, mask: Option<&[bool]>) -> Complex64 {
    let n = a.dim();
    let mut total = Complex64::ZERO;
    for r in 0..n {
        for c in 0..n {
            if mask.is_none_or(|m| m[c]) {
                total += a.at(r, c).conj() * b.at(r, c);
            }
        }
    }
    total
}

/// Structure coefficients of one representation: for each unordered pair,
/// the expansion of `[G_a, G_b]` over the generator basis, obtained by
/// solving the Gram system of Hilbert–Schmidt inner products.
fn extracted_coefficients<'a, G>(
    generator: G,
    mask: Option<&[bool]>,
) -> Option<Vec<Vec<Complex64>>>
where
    G: Fn(GeneratorLabel) -> &'a CMatrix,
{
    let labels = GeneratorLabel::ALL;
    let mut gram = CMatrix::zeros(labels.len());
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate() {
            gram.set(i, j, projected_inner(generator(a), generator(b), mask));
        }
    }
    let mut all = Vec::with_capacity(45);
    for (ai, &a) in labels.iter().enumerate() {
        for &b in &labels[ai + 1..] {
            let comm = generator(a).commutator(generator(b));
            let rhs: Vec<Complex64> = labels
                .iter()
                .map(|&l| projected_inner(generator(l), &comm, mask))
                .collect();
            all.push(solve_dense(&gram, &rhs)?);
        }
    }
    Some(all)
}

/// Compares the structure coefficients extracted from the Fock commutators
/// with those of the 5×5 matrices, pair by pair, and returns the largest
/// discrepancy. Both representations realize the same algebra, so this
/// stays at rounding level.
pub fn representation_equivalence(fock: &GeneratorSet) -> Result<f64> {
    let mask = fock.space().safe_columns();
    let from_fock = extracted_coefficients(|l| fock.get(l), Some(&mask)).ok_or_else(|| {
        Error::InvalidParameter("Fock generator Gram system is singular".into())
    })?;

    let matrices: Vec<CMatrix> = GeneratorLabel::ALL.iter().map(|&l| generator_matrix(l)).collect();
    let from_matrix = extracted_coefficients(|l| &matrices[l.index()], None)
        .expect("5x5 generator Gram system is nonsingular");

    let mut worst = 0.0_f64;
    for (cf, cm) in from_fock.iter().zip(&from_matrix) {
        for (a, b) in cf.iter().zip(cm) {
            worst = worst.max((a - b).norm());
        }
    }
    Ok(worst)
}

/// The contraction scale `C = diag(1/ε, 1/ε, 1/ε, 1/ε, ε)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContractionParameter {
    epsilon: f64,
}

impl ContractionParameter {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "contraction parameter must be positive and finite, got {epsilon}"
            )));
        }
        Ok(ContractionParameter { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn matrix(&self) -> CMatrix {
        let mut c = CMatrix::zeros(DIM);
        for i in 0..4 {
            c.set(i, i, Complex64::new(1.0 / self.epsilon, 0.0));
        }
        c.set(4, 4, Complex64::new(self.epsilon, 0.0));
        c
    }

    pub fn inverse_matrix(&self) -> CMatrix {
        let mut c = CMatrix::zeros(DIM);
        for i in 0..4 {
            c.set(i, i, Complex64::new(self.epsilon, 0.0));
        }
        c.set(4, 4, Complex64::new(1.0 / self.epsilon, 0.0));
        c
    }
}

/// `C G C⁻¹` for the diagonal contraction matrix. Conjugating by a diagonal
/// matrix scales entry `(r, c)` by `d_r/d_c`, which is applied directly:
/// entries inside the first four rows and columns (and the corner) are
/// untouched, the fifth column picks up `1/ε²` and the fifth row `ε²`. The
/// rotations and `t`-boosts are therefore exact fixed points.
pub fn contract(generator: &MatrixGenerator, epsilon: f64) -> CMatrix {
    let eps_sq = epsilon * epsilon;
    let mut out = CMatrix::zeros(DIM);
    for r in 0..DIM {
        for c in 0..DIM {
            let v = generator.matrix.at(r, c);
            if v == Complex64::ZERO {
                continue;
            }
            let scaled = match (r == 4, c == 4) {
                (false, true) => v / eps_sq,
                (true, false) => v * eps_sq,
                _ => v,
            };
            out.set(r, c, scaled);
        }
    }
    out
}

/// The `ε → 0` limit of the contraction, with the diverging fifth-column
/// entries rescaled by `ε²` (keeping their coefficients) and the vanishing
/// fifth-row entries dropped. `J_i` and `K_i` come back unchanged; `Q_i`
/// and `S0` come back as the translation generators `P_i` and `P0`.
pub fn contraction_limit(generator: &MatrixGenerator) -> CMatrix {
    let mut out = CMatrix::zeros(DIM);
    for r in 0..DIM {
        for c in 0..DIM {
            if r == 4 && c < 4 {
                continue;
            }
            out.set(r, c, generator.matrix.at(r, c));
        }
    }
    out
}

/// Magnitude of the largest fifth-row entry of `C G C⁻¹` — the part that
/// dies as `ε²` in the contraction.
pub fn vanishing_entry_magnitude(generator: &MatrixGenerator, epsilon: f64) -> f64 {
    let conjugated = contract(generator, epsilon);
    (0..4)
        .map(|c| conjugated.at(4, c).norm())
        .fold(0.0, f64::max)
}

/// Names of the four translation generators of the contracted algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationLabel {
    P1,
    P2,
    P3,
    P0,
}

impl TranslationLabel {
    pub const ALL: [TranslationLabel; 4] = [
        TranslationLabel::P1,
        TranslationLabel::P2,
        TranslationLabel::P3,
        TranslationLabel::P0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TranslationLabel::P1 => "P1",
            TranslationLabel::P2 => "P2",
            TranslationLabel::P3 => "P3",
            TranslationLabel::P0 => "P0",
        }
    }

    /// The generator this translation is contracted from.
    pub fn parent(self) -> GeneratorLabel {
        match self {
            TranslationLabel::P1 => GeneratorLabel::Q1,
            TranslationLabel::P2 => GeneratorLabel::Q2,
            TranslationLabel::P3 => GeneratorLabel::Q3,
            TranslationLabel::P0 => GeneratorLabel::S0,
        }
    }
}

impl std::fmt::Display for TranslationLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Translation generator: a single `±i` entry in the fifth column, nilpotent
/// of order two.
pub fn translation_generator(label: TranslationLabel) -> CMatrix {
    let entries: &[(usize, usize, Complex64)] = match label {
        TranslationLabel::P1 => &[(0, 4, I)],
        TranslationLabel::P2 => &[(1, 4, I)],
        TranslationLabel::P3 => &[(2, 4, I)],
        TranslationLabel::P0 => &[(3, 4, Complex64::new(0.0, -1.0))],
    };
    CMatrix::from_entries(DIM, entries)
}

/// Finite translation `exp(-i[a P1 + b P2 + c P3 - d P0])`.
///
/// The time component enters through the Minkowski pairing (space parts
/// minus the time part), which is what makes the matrix carry `(a, b, c, d)`
/// in its fifth column and act as `t → t + d`. The generators are nilpotent
/// and commute, so the exponential terminates at the linear term exactly.
pub fn translation_matrix(a: f64, b: f64, c: f64, d: f64) -> CMatrix {
    let minus_i = Complex64::new(0.0, -1.0);
    let x = translation_generator(TranslationLabel::P1)
        .scaled(minus_i * a)
        .add(&translation_generator(TranslationLabel::P2).scaled(minus_i * b))
        .add(&translation_generator(TranslationLabel::P3).scaled(minus_i * c))
        .add(&translation_generator(TranslationLabel::P0).scaled(I * d));
    x.expm()
}

/// Translates a carrier point `(x, y, z, t, 1)` by `(a, b, c, d)`.
pub fn translate(a: f64, b: f64, c: f64, d: f64, v: &FiveVector) -> Result<FiveVector> {
    if (v.s - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidCarrier { got: v.s });
    }
    let (moved, max_imag) = apply_real(&translation_matrix(a, b, c, d), v);
    debug_assert!(max_imag == 0.0);
    Ok(moved)
}

/// `exp(-i θ G)` for one generator — a finite rotation or boost of the
/// carrier space. Real for every generator in the set.
pub fn group_element(label: GeneratorLabel, parameter: f64) -> CMatrix {
    generator_matrix(label)
        .scaled(Complex64::new(0.0, -parameter))
        .expm()
}

/// Applies a matrix to a real five-vector, returning the real image and the
/// largest stray imaginary part.
pub fn apply_real(matrix: &CMatrix, v: &FiveVector) -> (FiveVector, f64) {
    let complex_in: Vec<Complex64> = v
        .components()
        .iter()
        .map(|&x| Complex64::new(x, 0.0))
        .collect();
    let out = matrix.apply(&complex_in);
    let max_imag = out.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    let mut components = [0.0; 5];
    for (slot, value) in components.iter_mut().zip(&out) {
        *slot = value.re;
    }
    (FiveVector::from_components(components), max_imag)
}
