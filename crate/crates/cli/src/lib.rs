//! Report generation behind the `covosc` binary.
//!
//! Every subcommand produces a [`report::Report`] — a deterministic table
//! plus named checks — and the process exit status encodes the outcome:
//! `0` all checks pass, `1` a check failed or a computation did not
//! converge, `2` invalid parameters or configuration.

pub mod config;
pub mod report;

use clap::{Parser, Subcommand};
use config::FileConfig;
use covosc::algebra::GeneratorLabel;
use covosc::desitter::{self, MatrixGenerator, TranslationLabel};
use covosc::error::Error as CoreError;
use covosc::fockalg;
use covosc::formfactor::{f_three_quark, g_by_quadrature, g_closed_form, g_nonrelativistic};
use covosc::oscillator::{
    expansion_coefficients, uncertainty_products, verify_expansion, ClosedFormWaveFn, Rapidity,
};
use report::{Cell, Check, OutputFormat, Report};
use std::f64::consts::PI;
use std::path::PathBuf;

/// Default output-directory environment variable; `--output` and the config
/// file both override it.
pub const OUTPUT_DIR_ENV: &str = "COVOSC_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "covosc",
    version,
    about = "Covariant-oscillator reports: wave-function grids, form factors, algebra checks, contraction sweeps"
)]
pub struct Cli {
    /// Config file with `key = value` defaults (format, output_dir, nodes,
    /// truncation, tolerance); flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Report file; defaults to `<output_dir>/<command>.<format>` when an
    /// output directory is configured, otherwise stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a boosted oscillator state on a (z, t) grid.
    Wavefunction {
        /// Boost rapidity.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        eta: f64,
        /// Longitudinal excitation.
        #[arg(long, default_value_t = 0)]
        excitation: usize,
        /// Half-width of the square grid.
        #[arg(long, default_value_t = 2.0)]
        grid: f64,
        /// Grid spacing.
        #[arg(long, default_value_t = 0.5)]
        step: f64,
    },
    /// Tabulate the two-quark, three-quark, and non-relativistic form factors.
    Formfactor {
        /// Largest momentum transfer squared, in units of the squared mass.
        #[arg(long = "q2-max", default_value_t = 100.0)]
        q2_max: f64,
        /// Number of samples, linearly spaced from zero.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Proton mass in oscillator units.
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        /// Quadrature nodes for the overlap-integral cross-check.
        #[arg(long)]
        nodes: Option<usize>,
    },
    /// Verify the ten-generator algebra in both representations.
    Algebra {
        /// Fock-space truncation.
        #[arg(long)]
        truncation: Option<usize>,
        /// Pass tolerance for the Fock-representation commutators.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Sweep the contraction parameter and verify rates and limits.
    Contract {
        /// Contraction parameters to sample.
        #[arg(long, value_delimiter = ',', default_values_t = [1e-1, 1e-2, 1e-3, 1e-4])]
        epsilons: Vec<f64>,
    },
    /// Two-mode expansion coefficients against the squeezed vacuum.
    Expansion {
        /// Boost rapidity.
        #[arg(long, allow_hyphen_values = true)]
        eta: f64,
        /// Highest expansion order reported.
        #[arg(long = "max-n", default_value_t = 20)]
        max_n: usize,
        /// Fock truncation used for the squeezed-vacuum cross-check.
        #[arg(long)]
        truncation: Option<usize>,
        /// Pass tolerance for the squeeze-match check. Strong squeezes need
        /// a truncation well above max-n to meet the default.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Light-cone second moments and invariant uncertainty products.
    Uncertainty {
        /// Rapidities to sample.
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.5, 1.0, 2.0], allow_hyphen_values = true)]
        etas: Vec<f64>,
        /// Pass tolerance for the invariance check.
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Wavefunction { .. } => "wavefunction",
            Command::Formfactor { .. } => "formfactor",
            Command::Algebra { .. } => "algebra",
            Command::Contract { .. } => "contract",
            Command::Expansion { .. } => "expansion",
            Command::Uncertainty { .. } => "uncertainty",
        }
    }
}

#[derive(Debug)]
pub enum RunError {
    /// Bad parameters or configuration → exit 2.
    Validation(String),
    /// A numerical routine refused to converge → exit 1.
    Numeric(String),
    /// Filesystem trouble → exit 2.
    Io(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Validation(_) | RunError::Io(_) => 2,
            RunError::Numeric(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            RunError::Validation(m) | RunError::Numeric(m) | RunError::Io(m) => m,
        }
    }
}

fn map_core(err: CoreError) -> RunError {
    match err {
        CoreError::InvalidParameter(_)
        | CoreError::DegreeTooLarge { .. }
        | CoreError::TruncationTooLarge { .. } => RunError::Validation(err.to_string()),
        _ => RunError::Numeric(err.to_string()),
    }
}

/// Builds the report for one command with config-file defaults applied.
pub fn build_report(command: &Command, file_config: &FileConfig) -> Result<Report, RunError> {
    match command {
        Command::Wavefunction {
            eta,
            excitation,
            grid,
            step,
        } => wavefunction_report(*eta, *excitation, *grid, *step),
        Command::Formfactor {
            q2_max,
            samples,
            mass,
            nodes,
        } => formfactor_report(*q2_max, *samples, *mass, nodes.or(file_config.nodes).unwrap_or(128)),
        Command::Algebra {
            truncation,
            tolerance,
        } => algebra_report(
            truncation.or(file_config.truncation).unwrap_or(8),
            tolerance.or(file_config.tolerance).unwrap_or(1e-10),
        ),
        Command::Contract { epsilons } => contract_report(epsilons),
        Command::Expansion {
            eta,
            max_n,
            truncation,
            tolerance,
        } => expansion_report(
            *eta,
            *max_n,
            truncation.or(file_config.truncation).unwrap_or(40),
            tolerance.or(file_config.tolerance).unwrap_or(1e-8),
        ),
        Command::Uncertainty { etas, tolerance } => {
            uncertainty_report(etas, tolerance.or(file_config.tolerance).unwrap_or(1e-10))
        }
    }
}

fn wavefunction_report(eta: f64, excitation: usize, grid: f64, step: f64) -> Result<Report, RunError> {
    if !(grid > 0.0 && grid.is_finite()) {
        return Err(RunError::Validation(format!("grid half-width must be positive, got {grid}")));
    }
    if !(step > 0.0 && step <= grid) {
        return Err(RunError::Validation(format!(
            "step must lie in (0, grid], got {step}"
        )));
    }
    let rapidity = Rapidity::new(eta);
    let wavefn = ClosedFormWaveFn::new(excitation, rapidity).map_err(map_core)?;

    let count = (2.0 * grid / step).round() as usize;
    let mut rows = Vec::new();
    let mut closed_form_dev = 0.0_f64;
    for i in 0..=count {
        let z = -grid + step * i as f64;
        for j in 0..=count {
            let t = -grid + step * j as f64;
            let value = wavefn.evaluate(z, t);
            if excitation == 0 {
                let reference = (1.0 / PI).sqrt()
                    * (-0.25
                        * ((-2.0 * eta).exp() * (z + t).powi(2)
                            + (2.0 * eta).exp() * (z - t).powi(2)))
                    .exp();
                closed_form_dev = closed_form_dev.max((value - reference).abs());
            }
            rows.push(vec![
                Cell::Num(z),
                Cell::Num(t),
                Cell::Num(value),
                Cell::Num(value * value),
            ]);
        }
    }

    let norm = wavefn.squared_norm(64).map_err(map_core)?;
    let mut checks = vec![Check::new("unit-norm", (norm - 1.0).abs(), 1e-8)];
    if excitation == 0 {
        checks.push(Check::new("squeezed-gaussian-closed-form", closed_form_dev, 1e-12));
    }

    Ok(Report {
        command: "wavefunction".into(),
        parameters: vec![
            ("eta".into(), eta.to_string()),
            ("excitation".into(), excitation.to_string()),
            ("grid".into(), grid.to_string()),
            ("step".into(), step.to_string()),
        ],
        columns: vec!["z".into(), "t".into(), "psi".into(), "psi_sq".into()],
        rows,
        checks,
    })
}

fn formfactor_report(q2_max: f64, samples: usize, mass: f64, nodes: usize) -> Result<Report, RunError> {
    if !(q2_max > 0.0 && q2_max.is_finite()) {
        return Err(RunError::Validation(format!(
            "q2-max must be positive, got {q2_max}"
        )));
    }
    if samples < 2 {
        return Err(RunError::Validation(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(RunError::Validation(format!("mass must be positive, got {mass}")));
    }

    let mut rows = Vec::new();
    let mut quad_dev = 0.0_f64;
    let mut max_increment = f64::NEG_INFINITY;
    let mut previous: Option<(f64, f64, f64)> = None;
    for i in 0..samples {
        let q2 = q2_max * i as f64 / (samples - 1) as f64;
        let g = g_closed_form(q2, mass);
        let f = f_three_quark(q2, mass);
        let g_nr = g_nonrelativistic(q2);
        let quad = g_by_quadrature(q2, mass, nodes).map_err(map_core)?;
        quad_dev = quad_dev.max((quad - g).abs());
        if let Some((pg, pf, pn)) = previous {
            max_increment = max_increment.max(g - pg).max(f - pf).max(g_nr - pn);
        }
        previous = Some((g, f, g_nr));
        rows.push(vec![
            Cell::Num(q2),
            Cell::Num(g),
            Cell::Num(f),
            Cell::Num(g_nr),
        ]);
    }

    let boundary_dev = (g_closed_form(0.0, mass) - 1.0)
        .abs()
        .max((f_three_quark(0.0, mass) - 1.0).abs())
        .max((g_nonrelativistic(0.0) - 1.0).abs());

    Ok(Report {
        command: "formfactor".into(),
        parameters: vec![
            ("q2_max".into(), q2_max.to_string()),
            ("samples".into(), samples.to_string()),
            ("mass".into(), mass.to_string()),
            ("nodes".into(), nodes.to_string()),
        ],
        columns: vec!["q2".into(), "g".into(), "f".into(), "g_nonrel".into()],
        rows,
        checks: vec![
            Check::new("quadrature-matches-closed-form", quad_dev, 1e-10),
            Check::new("boundary-normalization", boundary_dev, 0.0),
            Check::new("monotone-decay", max_increment, 0.0),
        ],
    })
}

fn algebra_report(truncation: usize, tolerance: f64) -> Result<Report, RunError> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(RunError::Validation(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let set = fockalg::build_generators(truncation).map_err(map_core)?;

    let fock_reports = fockalg::verify_algebra(&set, tolerance);
    let matrix_reports = desitter::verify_matrix_algebra(1e-14);
    let equivalence = desitter::representation_equivalence(&set).map_err(map_core)?;
    let hermiticity = fockalg::hermiticity_deviation(&set);

    let mut rows = Vec::new();
    let mut fock_worst = 0.0_f64;
    let mut matrix_worst = 0.0_f64;
    for (representation, reports, worst) in [
        ("fock", &fock_reports, &mut fock_worst),
        ("matrix", &matrix_reports, &mut matrix_worst),
    ] {
        for r in reports.iter() {
            *worst = worst.max(r.max_deviation);
            rows.push(vec![
                Cell::Text(representation.into()),
                Cell::Text(format!("[{}, {}]", r.pair.0, r.pair.1)),
                Cell::Text(r.expected.clone()),
                Cell::Num(r.max_deviation),
                Cell::Flag(r.pass),
            ]);
        }
    }

    Ok(Report {
        command: "algebra".into(),
        parameters: vec![
            ("truncation".into(), truncation.to_string()),
            ("tolerance".into(), tolerance.to_string()),
        ],
        columns: vec![
            "representation".into(),
            "pair".into(),
            "expected".into(),
            "max_deviation".into(),
            "pass".into(),
        ],
        rows,
        checks: vec![
            Check::new("fock-closure", fock_worst, tolerance),
            Check::new("matrix-closure", matrix_worst, 1e-14),
            Check::new("representation-equivalence", equivalence, 1e-10),
            Check::new("generator-hermiticity", hermiticity, 1e-12),
        ],
    })
}

fn contract_report(epsilons: &[f64]) -> Result<Report, RunError> {
    if epsilons.len() < 2 {
        return Err(RunError::Validation(
            "need at least two contraction parameters for a rate fit".into(),
        ));
    }
    if epsilons.iter().any(|&e| !(e > 0.0 && e.is_finite())) {
        return Err(RunError::Validation(format!(
            "contraction parameters must be positive, got {epsilons:?}"
        )));
    }

    let contracted = [
        TranslationLabel::P1,
        TranslationLabel::P2,
        TranslationLabel::P3,
        TranslationLabel::P0,
    ];
    let mut rows = Vec::new();
    let mut slope_dev = 0.0_f64;
    let mut limit_dev = 0.0_f64;
    for translation in contracted {
        let parent = MatrixGenerator {
            label: translation.parent(),
            matrix: desitter::generator_matrix(translation.parent()),
        };
        let mut points = Vec::new();
        for &eps in epsilons {
            let magnitude = desitter::vanishing_entry_magnitude(&parent, eps);
            points.push((eps.ln(), magnitude.ln()));
            rows.push(vec![
                Cell::Text(parent.label.name().into()),
                Cell::Num(eps),
                Cell::Num(magnitude),
            ]);
        }
        slope_dev = slope_dev.max((least_squares_slope(&points) - 2.0).abs());
        limit_dev = limit_dev.max(
            desitter::contraction_limit(&parent)
                .sub(&desitter::translation_generator(translation))
                .max_abs(),
        );
    }

    let mut fixed_point_dev = 0.0_f64;
    for label in [
        GeneratorLabel::J1,
        GeneratorLabel::J2,
        GeneratorLabel::J3,
        GeneratorLabel::K1,
        GeneratorLabel::K2,
        GeneratorLabel::K3,
    ] {
        let g = MatrixGenerator {
            label,
            matrix: desitter::generator_matrix(label),
        };
        for &eps in epsilons {
            fixed_point_dev =
                fixed_point_dev.max(desitter::contract(&g, eps).sub(&g.matrix).max_abs());
        }
    }

    Ok(Report {
        command: "contract".into(),
        parameters: vec![(
            "epsilons".into(),
            epsilons
                .iter()
                .map(f64::to_string)
                .collect::<Vec<_>>()
                .join(","),
        )],
        columns: vec!["generator".into(), "epsilon".into(), "vanishing_entry".into()],
        rows,
        checks: vec![
            Check::new("contraction-rate-slope-2", slope_dev, 0.01),
            Check::new("translation-limits-exact", limit_dev, 0.0),
            Check::new("rotation-boost-fixed-points", fixed_point_dev, 0.0),
        ],
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

fn expansion_report(
    eta: f64,
    max_n: usize,
    truncation: usize,
    tolerance: f64,
) -> Result<Report, RunError> {
    if truncation < max_n.max(2) {
        return Err(RunError::Validation(format!(
            "truncation {truncation} must be at least max-n = {max_n}"
        )));
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(RunError::Validation(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let rapidity = Rapidity::new(eta);
    let coefficients = expansion_coefficients(rapidity, max_n);
    let state = fockalg::squeeze_vacuum(rapidity, truncation).map_err(map_core)?;
    let space = fockalg::FockSpace::new(truncation);
    let diagonal = fockalg::diagonal_components(space, &state);

    let mut rows = Vec::new();
    let mut squeeze_dev = 0.0_f64;
    for (n, &coefficient) in coefficients.iter().enumerate() {
        let component = diagonal[n];
        squeeze_dev = squeeze_dev
            .max((component.re - coefficient).abs())
            .max(component.im.abs());
        rows.push(vec![
            Cell::Int(n as i64),
            Cell::Num(coefficient),
            Cell::Num(component.re),
        ]);
    }

    let sum_sq: f64 = coefficients.iter().map(|a| a * a).sum();
    let tanh = eta.tanh();
    let sum_rule_dev = (sum_sq - (1.0 - tanh.abs().powi(2 * (max_n as i32 + 1)))).abs();

    let grid: Vec<(f64, f64)> = {
        let mut g = Vec::new();
        for i in 0..=8 {
            for j in 0..=8 {
                g.push((-2.0 + 0.5 * i as f64, -2.0 + 0.5 * j as f64));
            }
        }
        g
    };
    let reconstruction_dev = verify_expansion(rapidity, max_n, &grid).map_err(map_core)?;
    let a = tanh.abs();
    let tail_bound = if a > 0.0 {
        0.6 * a.powi(max_n as i32 + 1) / ((1.0 - a) * eta.cosh())
    } else {
        0.0
    };

    Ok(Report {
        command: "expansion".into(),
        parameters: vec![
            ("eta".into(), eta.to_string()),
            ("max_n".into(), max_n.to_string()),
            ("truncation".into(), truncation.to_string()),
            ("tolerance".into(), tolerance.to_string()),
        ],
        columns: vec!["n".into(), "coefficient".into(), "squeeze_component".into()],
        rows,
        checks: vec![
            Check::new("squeeze-match", squeeze_dev, tolerance),
            Check::new("sum-rule", sum_rule_dev, 1e-12),
            Check::new(
                "series-reconstruction",
                reconstruction_dev,
                tail_bound.max(1e-12),
            ),
        ],
    })
}

fn uncertainty_report(etas: &[f64], tolerance: f64) -> Result<Report, RunError> {
    if etas.is_empty() {
        return Err(RunError::Validation("need at least one rapidity".into()));
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(RunError::Validation(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let mut rows = Vec::new();
    let mut invariance_dev = 0.0_f64;
    for &eta in etas {
        let moments = uncertainty_products(Rapidity::new(eta)).map_err(map_core)?;
        let (p1, p2) = moments.products();
        invariance_dev = invariance_dev.max((p1 - 0.25).abs()).max((p2 - 0.25).abs());
        rows.push(vec![
            Cell::Num(eta),
            Cell::Num(moments.mean_zplus_sq),
            Cell::Num(moments.mean_zminus_sq),
            Cell::Num(moments.mean_qplus_sq),
            Cell::Num(moments.mean_qminus_sq),
            Cell::Num(p1),
            Cell::Num(p2),
        ]);
    }

    Ok(Report {
        command: "uncertainty".into(),
        parameters: vec![
            (
                "etas".into(),
                etas.iter().map(f64::to_string).collect::<Vec<_>>().join(","),
            ),
            ("tolerance".into(), tolerance.to_string()),
        ],
        columns: vec![
            "eta".into(),
            "zplus_sq".into(),
            "zminus_sq".into(),
            "qplus_sq".into(),
            "qminus_sq".into(),
            "product_zplus_qminus".into(),
            "product_zminus_qplus".into(),
        ],
        rows,
        checks: vec![Check::new("product-invariance", invariance_dev, tolerance)],
    })
}

/// Where the rendered report goes.
pub fn resolve_output(
    explicit: Option<&PathBuf>,
    file_config: &FileConfig,
    command: &str,
    format: OutputFormat,
) -> Option<PathBuf> {
    if let Some(path) = explicit {
        return Some(path.clone());
    }
    let dir = file_config
        .output_dir
        .clone()
        .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))?;
    Some(dir.join(format!("{command}.{}", format.extension())))
}

/// Runs a parsed invocation end to end and returns the process exit code.
pub fn execute(cli: Cli) -> i32 {
    let file_config = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(c) => c,
            Err(message) => {
                eprintln!("error: {message}");
                return 2;
            }
        },
        None => FileConfig::default(),
    };

    let format = cli.format.or(file_config.format).unwrap_or(OutputFormat::Csv);

    let report = match build_report(&cli.command, &file_config) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("error: {}", err.message());
            return err.exit_code();
        }
    };

    let rendered = report.render(format);
    match resolve_output(cli.output.as_ref(), &file_config, &report.command, format) {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    if let Err(e) = std::fs::create_dir_all(parent) {
                        eprintln!("error: cannot create {}: {e}", parent.display());
                        return 2;
                    }
                }
            }
            if let Err(e) = std::fs::write(&path, rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
            eprintln!("report written to {}", path.display());
        }
        None => print!("{rendered}"),
    }

    for check in &report.checks {
        eprintln!(
            "check {}: {} (deviation {:.3e}, tolerance {:.3e})",
            check.name,
            if check.pass { "PASS" } else { "FAIL" },
            check.max_deviation,
            check.tolerance
        );
    }

    if report.pass() {
        0
    } else {
        1
    }
}
