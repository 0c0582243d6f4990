//! Two-mode truncated Fock space: ladder matrices, the ten O(3,2)
//! generators as quadratic forms, exact commutator verification on the safe
//! subspace, and the two-mode squeezed vacuum.
//!
//! The basis is `|n1, n2⟩ ↦ index n1·(N+1) + n2` for truncation `N`.
//! Quadratic-form commutators computed with truncated ladder matrices are
//! exact on states with `n1 + n2 ≤ N - 2`; all verification is restricted to
//! those columns.

use crate::algebra::{verify_closure, CommutatorReport, GeneratorLabel};
use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::oscillator::Rapidity;
use num_complex::Complex64;

/// Largest supported truncation (dense matrices grow as `(N+1)⁴`).
pub const MAX_TRUNCATION: usize = 48;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Index bookkeeping for the truncated two-mode number basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    truncation: usize,
}

impl FockSpace {
    pub fn new(truncation: usize) -> Self {
        FockSpace { truncation }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dim(&self) -> usize {
        (self.truncation + 1) * (self.truncation + 1)
    }

    pub fn index(&self, n1: usize, n2: usize) -> usize {
        debug_assert!(n1 <= self.truncation && n2 <= self.truncation);
        n1 * (self.truncation + 1) + n2
    }

    pub fn occupations(&self, index: usize) -> (usize, usize) {
        (index / (self.truncation + 1), index % (self.truncation + 1))
    }

    /// Columns on which quadratic-form commutators carry no truncation
    /// artifacts: total excitation at most `N - 2`.
    pub fn safe_columns(&self) -> Vec<bool> {
        (0..self.dim())
            .map(|idx| {
                let (n1, n2) = self.occupations(idx);
                n1 + n2 + 2 <= self.truncation
            })
            .collect()
    }

    pub fn vacuum(&self) -> Vec<Complex64> {
        let mut v = vec![Complex64::ZERO; self.dim()];
        v[0] = Complex64::ONE;
        v
    }
}

/// Truncated ladder matrices for both modes.
#[derive(Debug, Clone)]
pub struct ModeOperators {
    pub space: FockSpace,
    pub a1: CMatrix,
    pub a1_dag: CMatrix,
    pub a2: CMatrix,
    pub a2_dag: CMatrix,
}

/// Builds `a_1, a_1†, a_2, a_2†` with the usual `√n` matrix elements;
/// `[a_i, a_j†] = δ_ij` holds exactly wherever the raised state fits in the
/// truncation.
pub fn build_mode_operators(truncation: usize) -> Result<ModeOperators> {
    if truncation < 2 {
        return Err(Error::InvalidParameter(format!(
            "mode operators need truncation >= 2, got {truncation}"
        )));
    }
    if truncation > MAX_TRUNCATION {
        return Err(Error::TruncationTooLarge {
            truncation,
            max: MAX_TRUNCATION,
        });
    }
    let space = FockSpace::new(truncation);
    let n = truncation;

    let mut lower1 = Vec::new();
    let mut lower2 = Vec::new();
    for n1 in 0..=n {
        for n2 in 0..=n {
            let col = space.index(n1, n2);
            if n1 > 0 {
                lower1.push((space.index(n1 - 1, n2), col, Complex64::new((n1 as f64).sqrt(), 0.0)));
            }
            if n2 > 0 {
                lower2.push((space.index(n1, n2 - 1), col, Complex64::new((n2 as f64).sqrt(), 0.0)));
            }
        }
    }
    let a1 = CMatrix::from_entries(space.dim(), &lower1);
    let a2 = CMatrix::from_entries(space.dim(), &lower2);
    let a1_dag = a1.dagger();
    let a2_dag = a2.dagger();
    Ok(ModeOperators {
        space,
        a1,
        a1_dag,
        a2,
        a2_dag,
    })
}

/// The ten generators in the two-mode representation.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    space: FockSpace,
    generators: Vec<CMatrix>,
}

impl GeneratorSet {
    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn truncation(&self) -> usize {
        self.space.truncation()
    }

    pub fn get(&self, label: GeneratorLabel) -> &CMatrix {
        &self.generators[label.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorLabel, &CMatrix)> {
        GeneratorLabel::ALL
            .iter()
            .map(move |&l| (l, &self.generators[l.index()]))
    }
}

/// Assembles the ten quadratic forms:
///
/// ```text
/// J1 =  ½ (a1† a2 + a2† a1)          K1 =  ¼ (a1†a1† + a1a1 - a2†a2† - a2a2)
/// J2 = -i/2 (a1† a2 - a2† a1)        K2 = -i/4 (a1†a1† - a1a1 + a2†a2† - a2a2)
/// J3 =  ½ (a1† a1 - a2† a2)          K3 = -½ (a1† a2† + a1 a2)
/// Q1 = -i/4 (a1†a1† - a1a1 - a2†a2† + a2a2)
/// Q2 = -¼ (a1†a1† + a1a1 + a2†a2† + a2a2)
/// Q3 =  i/2 (a1† a2† - a1 a2)        S0 =  ½ (a1† a1 + a2 a2†)
/// ```
///
/// The overall sign of the `K_i` is fixed so that the boost sector closes as
/// `[K_i, Q_j] = -i δ_ij S0`, `[K_i, S0] = -i Q_i`, `[Q_i, S0] = i K_i`
/// alongside the squeeze convention `exp(-2iη Q3)`; with the opposite sign
/// those three rows of the structure table flip.
pub fn build_generators(truncation: usize) -> Result<GeneratorSet> {
    if truncation < 4 {
        return Err(Error::InvalidParameter(format!(
            "generator set needs truncation >= 4, got {truncation}"
        )));
    }
    let ops = build_mode_operators(truncation)?;
    let ModeOperators {
        space,
        a1,
        a1_dag,
        a2,
        a2_dag,
    } = ops;

    let half = Complex64::new(0.5, 0.0);
    let quarter = Complex64::new(0.25, 0.0);

    let cross_raise = a1_dag.matmul(&a2); // a1† a2
    let cross_lower = a2_dag.matmul(&a1); // a2† a1
    let n1 = a1_dag.matmul(&a1);
    let n2 = a2_dag.matmul(&a2);
    let raise1_sq = a1_dag.matmul(&a1_dag);
    let lower1_sq = a1.matmul(&a1);
    let raise2_sq = a2_dag.matmul(&a2_dag);
    let lower2_sq = a2.matmul(&a2);
    let pair_raise = a1_dag.matmul(&a2_dag);
    let pair_lower = a1.matmul(&a2);
    // a2 a2† truncates faithfully as a2† a2 + 1; the product of truncated
    // ladder matrices would lose the diagonal entry at n2 = N.
    let anti_n2 = n2.add(&CMatrix::identity(space.dim()));

    let j1 = cross_raise.add(&cross_lower).scaled(half);
    let j2 = cross_raise.sub(&cross_lower).scaled(-I * half);
    let j3 = n1.sub(&n2).scaled(half);

    let k1 = raise1_sq
        .add(&lower1_sq)
        .sub(&raise2_sq)
        .sub(&lower2_sq)
        .scaled(quarter);
    let k2 = raise1_sq
        .sub(&lower1_sq)
        .add(&raise2_sq)
        .sub(&lower2_sq)
        .scaled(-I * quarter);
    let k3 = pair_raise.add(&pair_lower).scaled(-half);

    let q1 = raise1_sq
        .sub(&lower1_sq)
        .sub(&raise2_sq)
        .add(&lower2_sq)
        .scaled(-I * quarter);
    let q2 = raise1_sq
        .add(&lower1_sq)
        .add(&raise2_sq)
        .add(&lower2_sq)
        .scaled(-quarter);
    let q3 = pair_raise.sub(&pair_lower).scaled(I * half);

    let s0 = n1.add(&anti_n2).scaled(half);

    Ok(GeneratorSet {
        space,
        generators: vec![j1, j2, j3, k1, k2, k3, q1, q2, q3, s0],
    })
}

/// Checks all 45 commutator pairs against the structure table on the safe
/// subspace.
pub fn verify_algebra(set: &GeneratorSet, tolerance: f64) -> Vec<CommutatorReport> {
    let mask = set.space.safe_columns();
    verify_closure(|label| set.get(label), tolerance, Some(&mask))
}

/// Worst Hermiticity deviation among the ten generators.
pub fn hermiticity_deviation(set: &GeneratorSet) -> f64 {
    set.iter()
        .map(|(_, g)| g.hermiticity_deviation())
        .fold(0.0, f64::max)
}

/// Two-mode squeezed vacuum `exp(-2iη Q3)|0,0⟩` by matrix exponential.
///
/// The result lives on the paired states `|n,n⟩` with components
/// `(tanh η)^n / cosh η`; anything off that diagonal is a numerical artifact.
/// Builds only `Q3`, so larger truncations than the full generator set
/// supports stay cheap.
pub fn squeeze_vacuum(eta: Rapidity, truncation: usize) -> Result<Vec<Complex64>> {
    let ops = build_mode_operators(truncation)?;
    let space = ops.space;
    let q3 = {
        let pair_raise = ops.a1_dag.matmul(&ops.a2_dag);
        let pair_lower = ops.a1.matmul(&ops.a2);
        drop(ops);
        pair_raise.sub(&pair_lower).scaled(I * Complex64::new(0.5, 0.0))
    };
    let exponent = q3.scaled(Complex64::new(0.0, -2.0 * eta.eta()));
    drop(q3);
    let state = exponent.expm_apply(&space.vacuum());

    let norm_sq: f64 = state.iter().map(|c| c.norm_sqr()).sum();
    let deviation = (norm_sq.sqrt() - 1.0).abs();
    if deviation > 1e-8 {
        return Err(Error::TruncationTooSmall {
            truncation,
            deviation,
        });
    }
    Ok(state)
}

/// Components of a state along the paired basis `|n,n⟩`.
pub fn diagonal_components(space: FockSpace, state: &[Complex64]) -> Vec<Complex64> {
    (0..=space.truncation())
        .map(|n| state[space.index(n, n)])
        .collect()
}

/// Largest component magnitude away from the paired diagonal.
pub fn max_offdiagonal(space: FockSpace, state: &[Complex64]) -> f64 {
    state
        .iter()
        .enumerate()
        .filter(|(idx, _)| {
            let (n1, n2) = space.occupations(*idx);
            n1 != n2
        })
        .map(|(_, c)| c.norm())
        .fold(0.0, f64::max)
}
