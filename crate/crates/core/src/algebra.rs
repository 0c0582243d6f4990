//! The ten-generator O(3,2) structure table and the commutator verifier
//! shared by the Fock-space and 5×5 matrix representations.

use crate::cmatrix::CMatrix;
use num_complex::Complex64;

/// Names of the ten generators: rotations `J_i`, boosts `K_i` with respect
/// to `t`, boosts `Q_i` with respect to the second time-like direction, and
/// the rotation `S0` between the two time-like directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorLabel {
    J1,
    J2,
    J3,
    K1,
    K2,
    K3,
    Q1,
    Q2,
    Q3,
    S0,
}

impl GeneratorLabel {
    pub const ALL: [GeneratorLabel; 10] = [
        GeneratorLabel::J1,
        GeneratorLabel::J2,
        GeneratorLabel::J3,
        GeneratorLabel::K1,
        GeneratorLabel::K2,
        GeneratorLabel::K3,
        GeneratorLabel::Q1,
        GeneratorLabel::Q2,
        GeneratorLabel::Q3,
        GeneratorLabel::S0,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&l| l == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneratorLabel::J1 => "J1",
            GeneratorLabel::J2 => "J2",
            GeneratorLabel::J3 => "J3",
            GeneratorLabel::K1 => "K1",
            GeneratorLabel::K2 => "K2",
            GeneratorLabel::K3 => "K3",
            GeneratorLabel::Q1 => "Q1",
            GeneratorLabel::Q2 => "Q2",
            GeneratorLabel::Q3 => "Q3",
            GeneratorLabel::S0 => "S0",
        }
    }

    /// Splits into (family, 1-based component); `S0` is component 0 of its
    /// own family.
    fn family(self) -> (Family, usize) {
        match self {
            GeneratorLabel::J1 => (Family::J, 1),
            GeneratorLabel::J2 => (Family::J, 2),
            GeneratorLabel::J3 => (Family::J, 3),
            GeneratorLabel::K1 => (Family::K, 1),
            GeneratorLabel::K2 => (Family::K, 2),
            GeneratorLabel::K3 => (Family::K, 3),
            GeneratorLabel::Q1 => (Family::Q, 1),
            GeneratorLabel::Q2 => (Family::Q, 2),
            GeneratorLabel::Q3 => (Family::Q, 3),
            GeneratorLabel::S0 => (Family::S, 0),
        }
    }
}

impl std::fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    J,
    K,
    Q,
    S,
}

fn vector_label(family: Family, component: usize) -> GeneratorLabel {
    match (family, component) {
        (Family::J, 1) => GeneratorLabel::J1,
        (Family::J, 2) => GeneratorLabel::J2,
        (Family::J, 3) => GeneratorLabel::J3,
        (Family::K, 1) => GeneratorLabel::K1,
        (Family::K, 2) => GeneratorLabel::K2,
        (Family::K, 3) => GeneratorLabel::K3,
        (Family::Q, 1) => GeneratorLabel::Q1,
        (Family::Q, 2) => GeneratorLabel::Q2,
        (Family::Q, 3) => GeneratorLabel::Q3,
        _ => unreachable!("no vector label for component {component}"),
    }
}

/// Levi-Civita symbol on 1-based indices.
fn epsilon(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Expected commutator `[a, b]` as a linear combination of generators:
///
/// ```text
/// [J_i, J_j] =  i ε_ijk J_k      [J_i, K_j] =  i ε_ijk K_k
/// [K_i, K_j] = -i ε_ijk J_k      [J_i, Q_j] =  i ε_ijk Q_k
/// [Q_i, Q_j] = -i ε_ijk J_k      [K_i, Q_j] = -i δ_ij S0
/// [J_i, S0]  =  0                [K_i, S0]  = -i Q_i
/// [Q_i, S0]  =  i K_i
/// ```
///
/// The `J`/`K` rows close the Lorentz algebra, `J`/`Q` a second copy of it,
/// and the full set the O(3,2) algebra.
pub fn structure_constants(
    a: GeneratorLabel,
    b: GeneratorLabel,
) -> Vec<(Complex64, GeneratorLabel)> {
    use Family::*;
    let (fa, i) = a.family();
    let (fb, j) = b.family();

    // [b, a] = -[a, b]: normalize so the family pair is in canonical order.
    let canonical = [(J, J), (J, K), (J, Q), (J, S), (K, K), (K, Q), (K, S), (Q, Q), (Q, S), (S, S)];
    let flipped = !canonical.contains(&(fa, fb));
    let (fa, i, fb, j) = if flipped { (fb, j, fa, i) } else { (fa, i, fb, j) };
    let sign = if flipped { -1.0 } else { 1.0 };

    let mut terms: Vec<(Complex64, GeneratorLabel)> = Vec::new();
    match (fa, fb) {
        (J, J) | (J, K) | (J, Q) => {
            let target = match fb {
                J => J,
                K => K,
                Q => Q,
                S => unreachable!(),
            };
            for k in 1..=3 {
                let e = epsilon(i, j, k);
                if e != 0.0 {
                    terms.push((I * e * sign, vector_label(target, k)));
                }
            }
        }
        (K, K) | (Q, Q) => {
            for k in 1..=3 {
                let e = epsilon(i, j, k);
                if e != 0.0 {
                    terms.push((-I * e * sign, vector_label(J, k)));
                }
            }
        }
        (K, Q) => {
            if i == j {
                terms.push((-I * sign, GeneratorLabel::S0));
            }
        }
        (J, S) | (S, S) => {}
        (K, S) => terms.push((-I * sign, vector_label(Q, i))),
        (Q, S) => terms.push((I * sign, vector_label(K, i))),
        _ => unreachable!(),
    }
    terms
}

/// Outcome of checking one commutator pair against the structure table.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub pair: (GeneratorLabel, GeneratorLabel),
    /// Rendering of the expected right-hand side, e.g. `i J3` or `0`.
    pub expected: String,
    pub max_deviation: f64,
    pub pass: bool,
}

fn render_expected(terms: &[(Complex64, GeneratorLabel)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (coeff, label)) in terms.iter().enumerate() {
        let (sign, body) = if coeff.im >= 0.0 {
            ("+", format!("i {label}"))
        } else {
            ("-", format!("i {label}"))
        };
        if idx == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Checks all 45 unordered generator pairs of a representation against the
/// structure table. `column_mask` restricts the deviation measurement to the
/// columns where the representation is exact (the safe subspace of a
/// truncated Fock space); pass `None` to measure everywhere.
pub fn verify_closure<'a, G>(
    generator: G,
    tolerance: f64,
    column_mask: Option<&[bool]>,
) -> Vec<CommutatorReport>
where
    G: Fn(GeneratorLabel) -> &'a CMatrix,
{
    let labels = GeneratorLabel::ALL;
    let mut reports = Vec::with_capacity(45);
    for (ai, &a) in labels.iter().enumerate() {
        for &b in &labels[ai + 1..] {
            let expected_terms = structure_constants(a, b);
            let mut deviation_matrix = generator(a).commutator(generator(b));
            for (coeff, label) in &expected_terms {
                deviation_matrix = deviation_matrix.sub(&generator(*label).scaled(*coeff));
            }
            let max_deviation = match column_mask {
                Some(mask) => deviation_matrix.max_abs_in_columns(mask),
                None => deviation_matrix.max_abs(),
            };
            reports.push(CommutatorReport {
                pair: (a, b),
                expected: render_expected(&expected_terms),
                max_deviation,
                pass: max_deviation <= tolerance,
            });
        }
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_covers_all_pairs() {
        let mut count = 0;
        for (ai, &a) in GeneratorLabel::ALL.iter().enumerate() {
            for &b in &GeneratorLabel::ALL[ai + 1..] {
                let _ = structure_constants(a, b);
                count += 1;
            }
        }
        assert_eq!(count, 45);
    }

    #[test]
    fn rotation_subalgebra_closes() {
        let terms = structure_constants(GeneratorLabel::J1, GeneratorLabel::J2);
        assert_eq!(terms, vec![(I, GeneratorLabel::J3)]);
    }

    #[test]
    fn boost_commutators_close_into_rotations() {
        let terms = structure_constants(GeneratorLabel::K1, GeneratorLabel::K2);
        assert_eq!(terms, vec![(-I, GeneratorLabel::J3)]);
        let terms = structure_constants(GeneratorLabel::Q1, GeneratorLabel::Q2);
        assert_eq!(terms, vec![(-I, GeneratorLabel::J3)]);
    }

    #[test]
    fn mixed_boost_pairs() {
        assert_eq!(
            structure_constants(GeneratorLabel::K3, GeneratorLabel::Q3),
            vec![(-I, GeneratorLabel::S0)]
        );
        assert!(structure_constants(GeneratorLabel::K1, GeneratorLabel::Q2).is_empty());
    }

    #[test]
    fn time_rotation_pairs() {
        assert!(structure_constants(GeneratorLabel::J2, GeneratorLabel::S0).is_empty());
        assert_eq!(
            structure_constants(GeneratorLabel::K2, GeneratorLabel::S0),
            vec![(-I, GeneratorLabel::Q2)]
        );
        assert_eq!(
            structure_constants(GeneratorLabel::Q1, GeneratorLabel::S0),
            vec![(I, GeneratorLabel::K1)]
        );
    }

    #[test]
    fn antisymmetry_of_reversed_pairs() {
        let forward = structure_constants(GeneratorLabel::J1, GeneratorLabel::K2);
        let backward = structure_constants(GeneratorLabel::K2, GeneratorLabel::J1);
        assert_eq!(forward.len(), backward.len());
        for ((cf, lf), (cb, lb)) in forward.iter().zip(&backward) {
            assert_eq!(lf, lb);
            assert_eq!(*cf, -cb);
        }
    }

    #[test]
    fn rendering_is_compact() {
        assert_eq!(
            render_expected(&structure_constants(GeneratorLabel::J1, GeneratorLabel::J2)),
            "i J3"
        );
        assert_eq!(
            render_expected(&structure_constants(GeneratorLabel::K3, GeneratorLabel::Q3)),
            "-i S0"
        );
        assert_eq!(
            render_expected(&structure_constants(GeneratorLabel::J1, GeneratorLabel::S0)),
            "0"
        );
    }
}
