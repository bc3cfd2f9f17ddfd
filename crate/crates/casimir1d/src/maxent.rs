//! Spectrum selection by minimum ensemble Casimir energy.
//!
//! Over an ensemble of boxes with uniformly spaced partitions, the spectrum
//! that minimizes the integrated magnitude of the Casimir energy within the
//! two-parameter Wien-compatible family is the Planck spectrum with
//! zero-point term, (c1, c2) = (1, 1). The integrand |dU| has a kink
//! wherever dU changes sign; the quadrature splits at those roots to keep
//! Simpson's convergence order.

use rayon::prelude::*;

use crate::casimir::{zp_energy, Cavity};
use crate::error::{Error, Result};
use crate::modesum::{sum_modes, tail_guard, BoundaryPair};
use crate::quad;
use crate::spectra;

/// Search domain for the interpolation parameters, bracketing the Planck
/// point by a factor of four each way.
pub const PARAM_MIN: f64 = 0.25;
pub const PARAM_MAX: f64 = 4.0;

/// Lattice resolution of the grid search.
pub const GRID_POINTS: usize = 25;

/// Configuration of the ensemble functional.
///
/// The defaults (L = 3, T = 2, delta = 0.2 L) put the box well into the
/// regime where the thermal crossover sits inside the integration window;
/// at much lower T L, or with the window extended toward the walls, the
/// functional is dominated by the spectrum-independent zero-point
/// divergence and its minimum drifts away from the Planck point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxEntConfig {
    pub length: f64,
    pub temperature: f64,
    pub delta: f64,
    pub panels: usize,
    pub bc: BoundaryPair,
}

impl MaxEntConfig {
    pub fn new(
        length: f64,
        temperature: f64,
        delta: f64,
        panels: usize,
        bc: BoundaryPair,
    ) -> Result<Self> {
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "length must be positive, got {length}"
            )));
        }
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "temperature must be positive, got {temperature}"
            )));
        }
        if !(delta > 0.0 && delta < 0.5 * length) {
            return Err(Error::InvalidConfig(format!(
                "delta must lie in (0, length/2), got {delta}"
            )));
        }
        if panels < 16 || panels % 2 != 0 {
            return Err(Error::InvalidConfig(format!(
                "panels must be even and at least 16, got {panels}"
            )));
        }
        Ok(MaxEntConfig {
            length,
            temperature,
            delta,
            panels,
            bc,
        })
    }

    pub fn with_defaults(bc: BoundaryPair) -> Self {
        MaxEntConfig {
            length: 3.0,
            temperature: 2.0,
            delta: 0.6,
            panels: 64,
            bc,
        }
    }
}

/// Result of a spectrum-parameter search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Optimum {
    pub c1: f64,
    pub c2: f64,
    pub objective: f64,
    pub iterations: u32,
    pub converged: bool,
}

/// How [`minimize`] explores the parameter box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Exhaustive evaluation on the logarithmic lattice only.
    Grid,
    /// Lattice argmin refined by simplex descent in log-parameter space.
    GridThenLocal,
}

fn check_params(c1: f64, c2: f64) -> Result<()> {
    if !(c1 > 0.0 && c1.is_finite() && c2 > 0.0 && c2.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "interpolation parameters must be positive, got c1={c1}, c2={c2}"
        )));
    }
    Ok(())
}

/// Casimir energy for the interpolated spectrum: the zero-point part plus
/// the convergent sums of the thermal part, which decays like
/// exp(-c2 omega / T).
pub fn interpolated_casimir_energy(
    cav: &Cavity,
    bc: BoundaryPair,
    temperature: f64,
    c1: f64,
    c2: f64,
) -> Result<f64> {
    check_params(c1, c2)?;
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "temperature must be positive, got {temperature}"
        )));
    }
    let sum = |l: f64| -> Result<f64> {
        let n_min = tail_guard(temperature, l, c2.min(1.0));
        sum_modes(l, bc, n_min, |w| {
            spectra::interpolated_thermal(w, temperature, c1, c2)
        })
    };
    let near = sum(cav.partition())?;
    let far = sum(cav.far_side())?;
    let center = sum(cav.half())?;
    Ok(zp_energy(cav, bc) + near + far - 2.0 * center)
}

/// Builds |dU(x)| as a plain closure, stashing the first library error so
/// the quadrature loops stay simple.
struct EnergyProfile<'a> {
    cfg: &'a MaxEntConfig,
    c1: f64,
    c2: f64,
    error: Option<Error>,
}

impl<'a> EnergyProfile<'a> {
    fn new(cfg: &'a MaxEntConfig, c1: f64, c2: f64) -> Self {
        EnergyProfile {
            cfg,
            c1,
            c2,
            error: None,
        }
    }

    fn signed(&mut self, x: f64) -> f64 {
        let result = Cavity::new(self.cfg.length, x).and_then(|cav| {
            interpolated_casimir_energy(&cav, self.cfg.bc, self.cfg.temperature, self.c1, self.c2)
        });
        match result {
            Ok(v) => v,
            Err(e) => {
                self.error.get_or_insert(e);
                0.0
            }
        }
    }

    fn take_error(self) -> Result<()> {
        match self.error {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}

/// The ensemble functional: integral of |dU(x, L, T)| over partition
/// positions x in [delta, L/2], by composite Simpson split at the sign
/// changes of dU.
pub fn objective(cfg: &MaxEntConfig, c1: f64, c2: f64) -> Result<f64> {
    check_params(c1, c2)?;
    let a = cfg.delta;
    let b = 0.5 * cfg.length;
    let mut profile = EnergyProfile::new(cfg, c1, c2);

    // locate the kinks of |dU| on the panel grid
    let n = cfg.panels;
    let h = (b - a) / n as f64;
    let grid: Vec<f64> = (0..=n)
        .map(|i| profile.signed(a + i as f64 * h))
        .collect();
    let mut cuts = vec![a];
    for i in 0..n {
        if grid[i] * grid[i + 1] < 0.0 {
            let left = a + i as f64 * h;
            let root = quad::bisect_root(
                &mut |x| profile.signed(x),
                left,
                left + h,
                grid[i],
                1e-9 * (b - a),
            );
            cuts.push(root);
        }
    }
    cuts.push(b);

    let mut total = 0.0;
    for seg in cuts.windows(2) {
        let len = seg[1] - seg[0];
        if len <= 0.0 {
            continue;
        }
        let mut panels = ((n as f64 * len / (b - a)).ceil() as usize).max(4);
        panels += panels % 2;
        total += quad::simpson(
            &mut |x| profile.signed(x).abs(),
            seg[0],
            seg[1],
            panels,
        );
    }
    profile.take_error()?;
    Ok(total)
}

/// Independent quadrature route for [`objective`]: adaptive trapezoid on
/// the same integrand, no kink splitting.
pub fn objective_reference(cfg: &MaxEntConfig, c1: f64, c2: f64) -> Result<f64> {
    check_params(c1, c2)?;
    let mut profile = EnergyProfile::new(cfg, c1, c2);
    let value = quad::adaptive_trapezoid(
        &mut |x| profile.signed(x).abs(),
        cfg.delta,
        0.5 * cfg.length,
        1e-9,
    );
    profile.take_error()?;
    Ok(value)
}

fn log_lattice() -> Vec<f64> {
    let lo = PARAM_MIN.ln();
    let hi = PARAM_MAX.ln();
    (0..GRID_POINTS)
        .map(|i| (lo + (hi - lo) * i as f64 / (GRID_POINTS - 1) as f64).exp())
        .collect()
}

/// Search the parameter box for the spectrum minimizing [`objective`].
pub fn minimize(cfg: &MaxEntConfig, strategy: SearchStrategy) -> Result<Optimum> {
    let lattice = log_lattice();
    let evals: Vec<Result<f64>> = (0..lattice.len() * lattice.len())
        .into_par_iter()
        .map(|k| {
            let c1 = lattice[k / lattice.len()];
            let c2 = lattice[k % lattice.len()];
            objective(cfg, c1, c2)
        })
        .collect();

    let mut best_k = 0;
    let mut best = f64::INFINITY;
    for (k, eval) in evals.iter().enumerate() {
        let v = eval.clone()?;
        if v < best {
            best = v;
            best_k = k;
        }
    }
    let c1 = lattice[best_k / lattice.len()];
    let c2 = lattice[best_k % lattice.len()];

    match strategy {
        SearchStrategy::Grid => Ok(Optimum {
            c1,
            c2,
            objective: best,
            iterations: 0,
            converged: true,
        }),
        SearchStrategy::GridThenLocal => {
            let step = (PARAM_MAX.ln() - PARAM_MIN.ln()) / (GRID_POINTS - 1) as f64;
            nelder_mead(cfg, (c1.ln(), c2.ln()), step)
        }
    }
}

/// Improvement below which the simplex is considered converged.
const SIMPLEX_TOL: f64 = 1e-8;
const SIMPLEX_MAX_ITER: u32 = 500;

/// Two-dimensional Nelder-Mead in log-parameter space, which keeps both
/// parameters positive without explicit bounds.
fn nelder_mead(cfg: &MaxEntConfig, start: (f64, f64), step: f64) -> Result<Optimum> {
    let f = |p: (f64, f64)| -> Result<f64> { objective(cfg, p.0.exp(), p.1.exp()) };

    let mut simplex = [
        (start, f(start)?),
        ((start.0 + step, start.1), f((start.0 + step, start.1))?),
        ((start.0, start.1 + step), f((start.0, start.1 + step))?),
    ];

    let mut iterations = 0;
    let mut converged = false;
    while iterations < SIMPLEX_MAX_ITER {
        iterations += 1;
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (best, second, worst) = (simplex[0], simplex[1], simplex[2]);
        if worst.1 - best.1 < SIMPLEX_TOL {
            converged = true;
            break;
        }
        let centroid = (
            0.5 * (best.0 .0 + second.0 .0),
            0.5 * (best.0 .1 + second.0 .1),
        );
        let reflect = |scale: f64| {
            (
                centroid.0 + scale * (centroid.0 - worst.0 .0),
                centroid.1 + scale * (centroid.1 - worst.0 .1),
            )
        };

        let xr = reflect(1.0);
        let fr = f(xr)?;
        if fr < best.1 {
            let xe = reflect(2.0);
            let fe = f(xe)?;
            simplex[2] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < second.1 {
            simplex[2] = (xr, fr);
        } else {
            let xc = reflect(-0.5);
            let fc = f(xc)?;
            if fc < worst.1 {
                simplex[2] = (xc, fc);
            } else {
                // shrink toward the best vertex
                for vertex in simplex.iter_mut().skip(1) {
                    vertex.0 = (
                        0.5 * (vertex.0 .0 + best.0 .0),
                        0.5 * (vertex.0 .1 + best.0 .1),
                    );
                    vertex.1 = f(vertex.0)?;
                }
            }
        }
    }

    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(Optimum {
        c1: simplex[0].0 .0.exp(),
        c2: simplex[0].0 .1.exp(),
        objective: simplex[0].1,
        iterations,
        converged,
    })
}

/// Discrete-ensemble form of the functional: midpoint samples of |dU|
/// scaled by the spacing. Converges to [`objective`] as the spacing
/// shrinks.
pub fn ensemble_sum(cfg: &MaxEntConfig, c1: f64, c2: f64, partitions: usize) -> Result<f64> {
    check_params(c1, c2)?;
    if partitions == 0 {
        return Err(Error::InvalidConfig("need at least one partition".into()));
    }
    let a = cfg.delta;
    let h = (0.5 * cfg.length - a) / partitions as f64;
    let mut profile = EnergyProfile::new(cfg, c1, c2);
    let mut total = 0.0;
    for i in 0..partitions {
        let x = a + (i as f64 + 0.5) * h;
        total += profile.signed(x).abs();
    }
    profile.take_error()?;
    Ok(total * h)
}
