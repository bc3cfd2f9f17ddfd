//! Curve generation: generic observable sweeps over the partition
//! position, per-mode spectrum sweeps over frequency, and the seven
//! standard figure curve sets.

use crate::casimir::{planck_energy, planck_entropy, planck_force, rj_entropy, Cavity};
use crate::error::{Error, Result};
use crate::modesum::BoundaryPair;
use crate::output::{Column, CurveSet};
use crate::spectra::{energy_per_mode, ModePoint, SpectrumModel};

pub const UNITS_NOTE: &str = "hbar=c=kB=1";

/// Fraction of the box excised at each wall; observables diverge there.
pub const DEFAULT_CLIP: f64 = 0.02;
pub const DEFAULT_POINTS: usize = 201;

/// Evenly spaced partition positions on [clip L, (1 - clip) L].
pub fn x_grid(length: f64, points: usize, clip: f64) -> Result<Vec<f64>> {
    if !(length > 0.0 && length.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "length must be positive, got {length}"
        )));
    }
    if points < 2 {
        return Err(Error::InvalidConfig(format!(
            "need at least 2 grid points, got {points}"
        )));
    }
    if !(clip >= Cavity::NEAR_WALL_FRACTION && clip < 0.5) {
        return Err(Error::InvalidConfig(format!(
            "clip fraction must lie in [1e-6, 0.5), got {clip}"
        )));
    }
    let lo = clip * length;
    let hi = (1.0 - clip) * length;
    Ok((0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect())
}

/// Which Casimir observable a position sweep reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    Energy,
    Force,
    Entropy,
}

impl Observable {
    pub fn label(self) -> &'static str {
        match self {
            Observable::Energy => "energy",
            Observable::Force => "force",
            Observable::Entropy => "entropy",
        }
    }

    fn column_prefix(self) -> &'static str {
        match self {
            Observable::Energy => "dU",
            Observable::Force => "dX",
            Observable::Entropy => "dS",
        }
    }

    fn eval(self, cav: &Cavity, bc: BoundaryPair, t: f64) -> Result<f64> {
        match self {
            Observable::Energy => planck_energy(cav, bc, t),
            Observable::Force => planck_force(cav, bc, t),
            Observable::Entropy => planck_entropy(cav, bc, t),
        }
    }
}

/// A generic x/T sweep of one Planck-spectrum observable.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub observable: Observable,
    pub bc: BoundaryPair,
    pub length: f64,
    pub temperatures: Vec<f64>,
    pub points: usize,
    pub clip: f64,
}

fn check_temperatures(temps: &[f64]) -> Result<()> {
    if temps.is_empty() {
        return Err(Error::InvalidConfig("temperature list is empty".into()));
    }
    if !temps.iter().all(|t| t.is_finite() && *t >= 0.0) {
        return Err(Error::InvalidConfig(
            "temperatures must be non-negative and finite".into(),
        ));
    }
    Ok(())
}

/// Compact temperature label for column names and meta values.
pub fn temp_label(t: f64) -> String {
    format!("{t}")
}

/// Runs a position sweep; the spec-facing generic query operation.
pub fn sweep(cfg: &SweepConfig) -> Result<CurveSet> {
    check_temperatures(&cfg.temperatures)?;
    let xs = x_grid(cfg.length, cfg.points, cfg.clip)?;
    let mut columns = vec![Column::new("x", xs.clone())];
    for &t in &cfg.temperatures {
        let mut values = Vec::with_capacity(xs.len());
        for &x in &xs {
            let cav = Cavity::new(cfg.length, x)?;
            values.push(cfg.observable.eval(&cav, cfg.bc, t)?);
        }
        columns.push(Column::new(
            format!("{}_T{}", cfg.observable.column_prefix(), temp_label(t)),
            values,
        ));
    }
    let meta = vec![
        ("command".into(), cfg.observable.label().into()),
        ("bc".into(), cfg.bc.label().into()),
        ("length".into(), temp_label(cfg.length)),
        ("temps".into(), join_temps(&cfg.temperatures)),
        ("points".into(), cfg.points.to_string()),
        ("clip".into(), temp_label(cfg.clip)),
        ("units".into(), UNITS_NOTE.into()),
    ];
    CurveSet::new(meta, columns)
}

fn join_temps(temps: &[f64]) -> String {
    temps
        .iter()
        .map(|t| temp_label(*t))
        .collect::<Vec<_>>()
        .join(",")
}

/// Spectrum family tag for per-mode sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerModeSpectrum {
    ZeroPoint,
    RayleighJeans,
    Planck,
}

impl PerModeSpectrum {
    pub fn label(self) -> &'static str {
        match self {
            PerModeSpectrum::ZeroPoint => "zp",
            PerModeSpectrum::RayleighJeans => "rj",
            PerModeSpectrum::Planck => "planck",
        }
    }
}

/// Per-mode energy vs frequency for a spectrum family.
#[derive(Debug, Clone, PartialEq)]
pub struct PerModeConfig {
    pub spectrum: PerModeSpectrum,
    pub temperatures: Vec<f64>,
    pub omega_max: f64,
    pub points: usize,
    pub clip: f64,
}

pub fn per_mode_sweep(cfg: &PerModeConfig) -> Result<CurveSet> {
    check_temperatures(&cfg.temperatures)?;
    if !(cfg.omega_max > 0.0 && cfg.omega_max.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "omega-max must be positive, got {}",
            cfg.omega_max
        )));
    }
    if cfg.points < 2 || !(cfg.clip > 0.0 && cfg.clip < 0.5) {
        return Err(Error::InvalidConfig(
            "need at least 2 points and a clip fraction in (0, 0.5)".into(),
        ));
    }
    let lo = cfg.clip * cfg.omega_max;
    let omegas: Vec<f64> = (0..cfg.points)
        .map(|i| lo + (cfg.omega_max - lo) * i as f64 / (cfg.points - 1) as f64)
        .collect();
    let mut columns = vec![Column::new("omega", omegas.clone())];
    match cfg.spectrum {
        PerModeSpectrum::ZeroPoint => {
            let values = omegas.iter().map(|w| 0.5 * w).collect();
            columns.push(Column::new("zero_point", values));
        }
        PerModeSpectrum::RayleighJeans => {
            for &t in &cfg.temperatures {
                if t == 0.0 {
                    return Err(Error::InvalidConfig(
                        "the equipartition spectrum needs positive temperatures".into(),
                    ));
                }
                columns.push(Column::new(
                    format!("rj_T{}", temp_label(t)),
                    vec![t; omegas.len()],
                ));
            }
        }
        PerModeSpectrum::Planck => {
            for &t in &cfg.temperatures {
                let mut values = Vec::with_capacity(omegas.len());
                for &w in &omegas {
                    values.push(energy_per_mode(
                        SpectrumModel::PlanckZp,
                        ModePoint::new(w, t)?,
                    )?);
                }
                columns.push(Column::new(format!("planck_T{}", temp_label(t)), values));
            }
        }
    }
    let meta = vec![
        ("command".into(), "permode".into()),
        ("spectrum".into(), cfg.spectrum.label().into()),
        ("temps".into(), join_temps(&cfg.temperatures)),
        ("omega_max".into(), temp_label(cfg.omega_max)),
        ("points".into(), cfg.points.to_string()),
        ("units".into(), UNITS_NOTE.into()),
    ];
    CurveSet::new(meta, columns)
}

/// Grid overrides accepted by [`emit_figure`]; the physics parameters of
/// each figure (boundary pair, temperatures, box length) are fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureOptions {
    pub points: usize,
    pub clip: f64,
}

impl Default for FigureOptions {
    fn default() -> Self {
        FigureOptions {
            points: DEFAULT_POINTS,
            clip: DEFAULT_CLIP,
        }
    }
}

const FIGURE_LENGTH: f64 = 3.0;

/// The seven standard curve sets.
///
/// 1: per-mode Planck energy vs frequency for T in {0, 1, 2} plus the two
///    equipartition horizontals. 2/3: Casimir energy vs x at T in
///    {0, 1, 3}, like/unlike. 4/5: Casimir force, same temperatures.
///    6: Casimir entropy, like, T in {0.25, 0.5, 1, 2}, plus the
///    temperature-independent high-T limit curve. 7: Casimir entropy,
///    unlike, T in {0.1, 0.2, 0.5, 1}.
pub fn emit_figure(index: u32, opts: &FigureOptions) -> Result<CurveSet> {
    match index {
        1 => figure_one(opts),
        2 => observable_figure(index, Observable::Energy, BoundaryPair::Like, &[0.0, 1.0, 3.0], opts),
        3 => observable_figure(index, Observable::Energy, BoundaryPair::Unlike, &[0.0, 1.0, 3.0], opts),
        4 => observable_figure(index, Observable::Force, BoundaryPair::Like, &[0.0, 1.0, 3.0], opts),
        5 => observable_figure(index, Observable::Force, BoundaryPair::Unlike, &[0.0, 1.0, 3.0], opts),
        6 => figure_six(opts),
        7 => observable_figure(
            index,
            Observable::Entropy,
            BoundaryPair::Unlike,
            &[0.1, 0.2, 0.5, 1.0],
            opts,
        ),
        other => Err(Error::FigureIndex(other)),
    }
}

fn figure_meta(index: u32, bc: Option<BoundaryPair>, temps: &[f64], opts: &FigureOptions) -> Vec<(String, String)> {
    let mut meta = vec![
        ("command".into(), "figure".into()),
        ("figure".into(), index.to_string()),
    ];
    if let Some(bc) = bc {
        meta.push(("bc".into(), bc.label().into()));
        meta.push(("length".into(), temp_label(FIGURE_LENGTH)));
    }
    meta.push(("temps".into(), join_temps(temps)));
    meta.push(("points".into(), opts.points.to_string()));
    meta.push(("clip".into(), temp_label(opts.clip)));
    meta.push(("units".into(), UNITS_NOTE.into()));
    meta
}

fn figure_one(opts: &FigureOptions) -> Result<CurveSet> {
    let temps = [0.0, 1.0, 2.0];
    let omega_max = 6.0;
    let lo = opts.clip * omega_max;
    let omegas: Vec<f64> = (0..opts.points.max(2))
        .map(|i| lo + (omega_max - lo) * i as f64 / (opts.points.max(2) - 1) as f64)
        .collect();
    let mut columns = vec![Column::new("omega", omegas.clone())];
    for &t in &temps {
        let mut values = Vec::with_capacity(omegas.len());
        for &w in &omegas {
            values.push(energy_per_mode(
                SpectrumModel::PlanckZp,
                ModePoint::new(w, t)?,
            )?);
        }
        columns.push(Column::new(format!("planck_T{}", temp_label(t)), values));
    }
    for &t in &[1.0, 2.0] {
        columns.push(Column::new(
            format!("rj_T{}", temp_label(t)),
            vec![t; omegas.len()],
        ));
    }
    let mut meta = figure_meta(1, None, &temps, opts);
    meta.insert(2, ("omega_max".into(), temp_label(omega_max)));
    CurveSet::new(meta, columns)
}

fn observable_figure(
    index: u32,
    observable: Observable,
    bc: BoundaryPair,
    temps: &[f64],
    opts: &FigureOptions,
) -> Result<CurveSet> {
    let sweep_cfg = SweepConfig {
        observable,
        bc,
        length: FIGURE_LENGTH,
        temperatures: temps.to_vec(),
        points: opts.points,
        clip: opts.clip,
    };
    let curves = sweep(&sweep_cfg)?;
    CurveSet::new(
        figure_meta(index, Some(bc), temps, opts),
        curves.columns().to_vec(),
    )
}

fn figure_six(opts: &FigureOptions) -> Result<CurveSet> {
    let temps = [0.25, 0.5, 1.0, 2.0];
    let curves = observable_figure(6, Observable::Entropy, BoundaryPair::Like, &temps, opts)?;
    let mut columns = curves.columns().to_vec();
    let limit = columns[0]
        .values
        .iter()
        .map(|&x| Cavity::new(FIGURE_LENGTH, x).map(|c| rj_entropy(&c, BoundaryPair::Like)))
        .collect::<Result<Vec<f64>>>()?;
    columns.push(Column::new("rj_limit", limit));
    CurveSet::new(curves.meta().to_vec(), columns)
}
