//! Casimir differences of a partitioned cavity relative to the centered
//! partition: energy, Helmholtz free energy, force on the partition and
//! entropy, for both boundary pairs and all spectra.
//!
//! Closed forms are used where they exist; the thermal parts are convergent
//! mode sums from [`crate::modesum`]. Each closed form has an independent
//! cutoff-ladder oracle (`*_via_ladder`) for cross-checking.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::modesum::{
    convergent_thermal_sum, extrapolate_ladder, geometric_cutoff_sum, regularized_zp_sum,
    BoundaryPair, CutoffFamily, CutoffSpec, RegularizedValue, ThermalKernel,
};
use crate::quad;
use crate::spectra::SpectrumModel;

/// A box of length L with a partition at distance x from the left wall.
///
/// Observables diverge at the walls (1/x for energies, 1/x^2 for forces),
/// so the partition must stay at least `NEAR_WALL_FRACTION * length` away
/// from either wall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cavity {
    length: f64,
    partition: f64,
}

impl Cavity {
    pub const NEAR_WALL_FRACTION: f64 = 1e-6;

    pub fn new(length: f64, partition: f64) -> Result<Self> {
        let guard = Self::NEAR_WALL_FRACTION * length;
        if !(length > 0.0 && length.is_finite())
            || !partition.is_finite()
            || partition < guard
            || length - partition < guard
        {
            return Err(Error::InvalidCavity { length, partition });
        }
        Ok(Cavity { length, partition })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Distance from the left wall to the partition.
    pub fn partition(&self) -> f64 {
        self.partition
    }

    /// Length of the other sub-cavity, L - x.
    pub fn far_side(&self) -> f64 {
        self.length - self.partition
    }

    /// The centered reference position L/2.
    pub fn half(&self) -> f64 {
        0.5 * self.length
    }
}

/// 1/x + 1/(L-x) - 4/L, the geometry factor of the zero-point energy.
fn energy_geometry(cav: &Cavity) -> f64 {
    1.0 / cav.partition() + 1.0 / cav.far_side() - 4.0 / cav.length()
}

/// 1/x^2 - 1/(L-x)^2, the geometry factor of the zero-point force.
fn force_geometry(cav: &Cavity) -> f64 {
    let x = cav.partition();
    let y = cav.far_side();
    1.0 / (x * x) - 1.0 / (y * y)
}

/// Zero-point Casimir energy. Negative for like pairs (attraction),
/// positive and exactly half the magnitude for unlike pairs (repulsion):
/// the boundary coefficient 1/24 - alpha/8 + alpha^2/16 equals 1/24 at
/// alpha = 0 and -1/48 at alpha = 1.
pub fn zp_energy(cav: &Cavity, bc: BoundaryPair) -> f64 {
    let g = energy_geometry(cav);
    match bc {
        BoundaryPair::Like => -(PI / 24.0) * g,
        BoundaryPair::Unlike => (PI / 48.0) * g,
    }
}

/// Zero-point Casimir force on the partition, -d(zp_energy)/dx.
pub fn zp_force(cav: &Cavity, bc: BoundaryPair) -> f64 {
    let g = force_geometry(cav);
    match bc {
        BoundaryPair::Like => -(PI / 24.0) * g,
        BoundaryPair::Unlike => (PI / 48.0) * g,
    }
}

/// Casimir energy of the equipartition spectrum: identically zero for both
/// boundary pairs. The cutoff-ladder oracle [`rj_energy_via_ladder`]
/// confirms the cancellation numerically.
pub fn rj_energy(_cav: &Cavity, _bc: BoundaryPair, temperature: f64) -> Result<f64> {
    require_positive_temperature(temperature)?;
    Ok(0.0)
}

/// Casimir force of the equipartition spectrum: -(T/2)(1/x - 1/(L-x)) for
/// like pairs, identically zero for unlike pairs.
pub fn rj_force(cav: &Cavity, bc: BoundaryPair, temperature: f64) -> Result<f64> {
    require_positive_temperature(temperature)?;
    match bc {
        BoundaryPair::Like => {
            Ok(-(0.5 * temperature) * (1.0 / cav.partition() - 1.0 / cav.far_side()))
        }
        BoundaryPair::Unlike => Ok(0.0),
    }
}

/// Temperature-independent Casimir entropy of the equipartition spectrum.
///
/// Like pairs: (1/2) ln[(L/2)^2 / (x (L-x))], obtained by integrating the
/// equipartition force over an isothermal displacement of the partition
/// from the center; the same value falls out of the regularized entropy
/// mode sum. Unlike pairs: zero (no energy change and no force, so no heat
/// flows when the partition moves).
pub fn rj_entropy(cav: &Cavity, bc: BoundaryPair) -> f64 {
    match bc {
        BoundaryPair::Like => {
            let half = cav.half();
            0.5 * ((half * half) / (cav.partition() * cav.far_side())).ln()
        }
        BoundaryPair::Unlike => 0.0,
    }
}

fn require_positive_temperature(t: f64) -> Result<f64> {
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(Error::InvalidParameter(format!(
            "temperature must be positive, got {t}"
        )))
    }
}

fn require_temperature(t: f64) -> Result<f64> {
    if t >= 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(Error::InvalidParameter(format!(
            "temperature must be non-negative, got {t}"
        )))
    }
}

/// x-side + far-side - 2 * centered thermal sums for the given kernel.
fn thermal_delta(cav: &Cavity, bc: BoundaryPair, t: f64, kernel: ThermalKernel) -> Result<f64> {
    let near = convergent_thermal_sum(cav.partition(), bc, t, kernel)?;
    let far = convergent_thermal_sum(cav.far_side(), bc, t, kernel)?;
    let center = convergent_thermal_sum(cav.half(), bc, t, kernel)?;
    Ok(near + far - 2.0 * center)
}

/// Casimir energy of the Planck spectrum with zero-point term. Reduces to
/// [`zp_energy`] at T = 0; the thermal part is a convergent sum.
pub fn planck_energy(cav: &Cavity, bc: BoundaryPair, temperature: f64) -> Result<f64> {
    let t = require_temperature(temperature)?;
    let zp = zp_energy(cav, bc);
    if t == 0.0 {
        return Ok(zp);
    }
    Ok(zp + thermal_delta(cav, bc, t, ThermalKernel::ThermalEnergy)?)
}

/// Casimir Helmholtz free energy of the Planck spectrum. Its zero-point
/// part is identical to the zero-point energy.
pub fn planck_free_energy(cav: &Cavity, bc: BoundaryPair, temperature: f64) -> Result<f64> {
    let t = require_temperature(temperature)?;
    let zp = zp_energy(cav, bc);
    if t == 0.0 {
        return Ok(zp);
    }
    Ok(zp + thermal_delta(cav, bc, t, ThermalKernel::ThermalFreeEnergy)?)
}

/// Casimir force of the Planck spectrum on the partition: the zero-point
/// force plus the difference of the two sub-cavities' thermal radiation
/// pressures.
pub fn planck_force(cav: &Cavity, bc: BoundaryPair, temperature: f64) -> Result<f64> {
    let t = require_temperature(temperature)?;
    let zp = zp_force(cav, bc);
    if t == 0.0 {
        return Ok(zp);
    }
    let near = convergent_thermal_sum(cav.partition(), bc, t, ThermalKernel::ThermalForce)?;
    let far = convergent_thermal_sum(cav.far_side(), bc, t, ThermalKernel::ThermalForce)?;
    Ok(zp + near - far)
}

/// Casimir entropy of the Planck spectrum. Zero at T = 0 (the continuous
/// limit); approaches [`rj_entropy`] as T grows.
pub fn planck_entropy(cav: &Cavity, bc: BoundaryPair, temperature: f64) -> Result<f64> {
    let t = require_temperature(temperature)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    thermal_delta(cav, bc, t, ThermalKernel::Entropy)
}

/// The four Planck-spectrum observables of one configuration, validated
/// against the first law before being returned.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasimirReport {
    pub delta_u: f64,
    pub delta_f: f64,
    pub delta_x: f64,
    pub delta_s: f64,
    pub cavity: Cavity,
    pub temperature: f64,
    pub bc: BoundaryPair,
    pub spectrum: SpectrumModel,
}

/// First-law tolerance |dF - (dU - T dS)| enforced by [`report`].
pub const FIRST_LAW_TOL: f64 = 1e-8;

pub fn report(cav: &Cavity, bc: BoundaryPair, temperature: f64) -> Result<CasimirReport> {
    let t = require_temperature(temperature)?;
    let delta_u = planck_energy(cav, bc, t)?;
    let delta_f = planck_free_energy(cav, bc, t)?;
    let delta_x = planck_force(cav, bc, t)?;
    let delta_s = planck_entropy(cav, bc, t)?;
    let residual = (delta_f - (delta_u - t * delta_s)).abs();
    if !(residual <= FIRST_LAW_TOL) {
        return Err(Error::ConsistencyViolation { residual });
    }
    if ![delta_u, delta_f, delta_x, delta_s].iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidParameter("non-finite report field".into()));
    }
    Ok(CasimirReport {
        delta_u,
        delta_f,
        delta_x,
        delta_s,
        cavity: *cav,
        temperature: t,
        bc,
        spectrum: SpectrumModel::PlanckZp,
    })
}

/// Default extrapolation ladder for a cavity: {0.08, 0.04, 0.02, 0.01}
/// scaled by the smaller sub-cavity.
pub fn default_cutoff(cav: &Cavity, family: CutoffFamily) -> Result<CutoffSpec> {
    CutoffSpec::default_ladder(family, cav.partition().min(cav.far_side()))
}

/// Oracle route for [`zp_energy`]: evaluate the cutoff-weighted zero-point
/// sums of the three configurations on the ladder, difference them, and
/// extrapolate the cutoff to zero.
pub fn zp_energy_via_ladder(
    cav: &Cavity,
    bc: BoundaryPair,
    cutoff: &CutoffSpec,
) -> Result<RegularizedValue> {
    let mut points = Vec::with_capacity(cutoff.ladder().len());
    for &lambda in cutoff.ladder() {
        let at = cutoff.at_lambda(lambda)?;
        let near = regularized_zp_sum(cav.partition(), bc, &at)?.value;
        let far = regularized_zp_sum(cav.far_side(), bc, &at)?.value;
        let center = regularized_zp_sum(cav.half(), bc, &at)?.value;
        points.push((lambda, near + far - 2.0 * center));
    }
    extrapolate_ladder(&points)
}

/// Oracle route for [`rj_energy`]: cutoff-weighted equipartition sums,
/// differenced and extrapolated. Extrapolates to zero for both pairs.
pub fn rj_energy_via_ladder(
    cav: &Cavity,
    bc: BoundaryPair,
    temperature: f64,
    cutoff: &CutoffSpec,
) -> Result<RegularizedValue> {
    let t = require_positive_temperature(temperature)?;
    let mut points = Vec::with_capacity(cutoff.ladder().len());
    for &lambda in cutoff.ladder() {
        let at = cutoff.at_lambda(lambda)?;
        let near = geometric_cutoff_sum(cav.partition(), bc, &at)?;
        let far = geometric_cutoff_sum(cav.far_side(), bc, &at)?;
        let center = geometric_cutoff_sum(cav.half(), bc, &at)?;
        points.push((lambda, t * (near + far - 2.0 * center)));
    }
    extrapolate_ladder(&points)
}

/// Oracle route for [`rj_force`]: the equipartition radiation pressure
/// T/length per mode, cutoff-weighted and extrapolated.
pub fn rj_force_via_ladder(
    cav: &Cavity,
    bc: BoundaryPair,
    temperature: f64,
    cutoff: &CutoffSpec,
) -> Result<RegularizedValue> {
    let t = require_positive_temperature(temperature)?;
    let mut points = Vec::with_capacity(cutoff.ladder().len());
    for &lambda in cutoff.ladder() {
        let at = cutoff.at_lambda(lambda)?;
        let near = geometric_cutoff_sum(cav.partition(), bc, &at)? / cav.partition();
        let far = geometric_cutoff_sum(cav.far_side(), bc, &at)? / cav.far_side();
        points.push((lambda, t * (near - far)));
    }
    extrapolate_ladder(&points)
}

/// Oracle route for [`rj_entropy`]: integrate force/T over an isothermal
/// displacement of the partition from the center to x.
pub fn rj_entropy_via_force_integral(cav: &Cavity, bc: BoundaryPair) -> Result<f64> {
    let length = cav.length();
    let mut integrand = move |u: f64| match bc {
        BoundaryPair::Like => -0.5 * (1.0 / u - 1.0 / (length - u)),
        BoundaryPair::Unlike => 0.0,
    };
    Ok(quad::simpson_converged(
        &mut integrand,
        cav.half(),
        cav.partition(),
        1e-12,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cav(x: f64, l: f64) -> Cavity {
        Cavity::new(l, x).unwrap()
    }

    #[test]
    fn cavity_validation() {
        assert!(Cavity::new(3.0, 0.0).is_err());
        assert!(Cavity::new(3.0, 3.0).is_err());
        assert!(Cavity::new(3.0, -1.0).is_err());
        assert!(Cavity::new(-3.0, 1.0).is_err());
        assert!(Cavity::new(3.0, 2.0e-6).is_err());
        assert!(Cavity::new(3.0, 4.0e-6).is_ok());
        assert!(Cavity::new(3.0, f64::NAN).is_err());
    }

    #[test]
    fn zp_energy_closed_forms() {
        // centered partition is the reference point
        assert_eq!(zp_energy(&cav(1.5, 3.0), BoundaryPair::Like), 0.0);
        assert_eq!(zp_energy(&cav(1.5, 3.0), BoundaryPair::Unlike), 0.0);
        // -(pi/24)(1 + 1/2 - 4/3) = -pi/144, oracle-checked in the
        // extrapolation tests and the acceptance suite
        let like = zp_energy(&cav(1.0, 3.0), BoundaryPair::Like);
        assert!((like + PI / 144.0).abs() < 1e-15);
        let unlike = zp_energy(&cav(1.0, 3.0), BoundaryPair::Unlike);
        assert!((unlike - PI / 288.0).abs() < 1e-15);
        // unlike is exactly -1/2 of like
        assert_eq!(unlike, -0.5 * like);
    }

    #[test]
    fn zp_energy_sign_structure() {
        for &x in &[0.3, 0.9, 1.4, 1.6, 2.4] {
            let c = cav(x, 3.0);
            let like = zp_energy(&c, BoundaryPair::Like);
            let unlike = zp_energy(&c, BoundaryPair::Unlike);
            assert!(like < 0.0 && unlike > 0.0);
            assert_eq!(unlike, -0.5 * like);
        }
    }

    #[test]
    fn zp_force_closed_forms_and_finite_difference() {
        assert_eq!(zp_force(&cav(1.5, 3.0), BoundaryPair::Like), 0.0);
        let like = zp_force(&cav(1.0, 3.0), BoundaryPair::Like);
        assert!((like + PI / 32.0).abs() < 1e-15);
        let unlike = zp_force(&cav(1.0, 3.0), BoundaryPair::Unlike);
        assert!((unlike - PI / 64.0).abs() < 1e-15);
        // force = -dU/dx by central difference
        let h = 1e-6;
        for bc in [BoundaryPair::Like, BoundaryPair::Unlike] {
            let fd = -(zp_energy(&cav(1.0 + h, 3.0), bc) - zp_energy(&cav(1.0 - h, 3.0), bc))
                / (2.0 * h);
            let f = zp_force(&cav(1.0, 3.0), bc);
            assert!((fd - f).abs() <= 1e-6 * f.abs(), "bc={bc:?}");
        }
    }

    #[test]
    fn rj_energy_is_null() {
        assert_eq!(
            rj_energy(&cav(1.0, 3.0), BoundaryPair::Like, 2.0).unwrap(),
            0.0
        );
        assert_eq!(
            rj_energy(&cav(0.2, 3.0), BoundaryPair::Unlike, 5.0).unwrap(),
            0.0
        );
        assert!(rj_energy(&cav(1.0, 3.0), BoundaryPair::Like, 0.0).is_err());
    }

    #[test]
    fn rj_force_values() {
        let f = rj_force(&cav(1.0, 3.0), BoundaryPair::Like, 2.0).unwrap();
        assert!((f + 0.5).abs() < 1e-15);
        assert_eq!(
            rj_force(&cav(1.0, 3.0), BoundaryPair::Unlike, 2.0).unwrap(),
            0.0
        );
        assert_eq!(
            rj_force(&cav(1.5, 3.0), BoundaryPair::Like, 7.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn rj_entropy_values_and_first_law_oracle() {
        // frozen via the force-integral oracle below
        let s = rj_entropy(&cav(1.0, 3.0), BoundaryPair::Like);
        assert!((s - 0.058_891_517_828_191_73).abs() < 1e-15);
        assert_eq!(rj_entropy(&cav(1.5, 3.0), BoundaryPair::Like), 0.0);
        assert_eq!(rj_entropy(&cav(0.3, 3.0), BoundaryPair::Unlike), 0.0);
        for &x in &[0.4, 1.0, 2.2] {
            for bc in [BoundaryPair::Like, BoundaryPair::Unlike] {
                let closed = rj_entropy(&cav(x, 3.0), bc);
                let integral = rj_entropy_via_force_integral(&cav(x, 3.0), bc).unwrap();
                assert!(
                    (closed - integral).abs() < 1e-8,
                    "x={x} bc={bc:?}: closed={closed} integral={integral}"
                );
            }
        }
        // symmetric in x <-> L-x and positive away from the center
        let a = rj_entropy(&cav(0.7, 3.0), BoundaryPair::Like);
        let b = rj_entropy(&cav(2.3, 3.0), BoundaryPair::Like);
        assert!((a - b).abs() < 1e-12 && a > 0.0);
    }

    #[test]
    fn planck_energy_limits() {
        let c = cav(1.0, 3.0);
        assert_eq!(
            planck_energy(&c, BoundaryPair::Like, 0.0).unwrap(),
            zp_energy(&c, BoundaryPair::Like)
        );
        // the T=3 curve hugs the axis: far smaller than the zero-point value
        let hot = planck_energy(&c, BoundaryPair::Like, 3.0).unwrap();
        assert!(hot.abs() < 0.1 * (PI / 144.0));
        assert_eq!(
            planck_energy(&cav(1.5, 3.0), BoundaryPair::Unlike, 1.0).unwrap(),
            0.0
        );
        // frozen against the independent python double-sum oracle
        let t1 = planck_energy(&c, BoundaryPair::Like, 1.0).unwrap();
        assert!((t1 + 4.357_848_848_435_264e-5).abs() < 1e-12);
    }

    #[test]
    fn planck_force_temperature_trend() {
        let c = cav(1.0, 3.0);
        let like: Vec<f64> = [0.0, 0.5, 1.0, 2.0, 3.0]
            .iter()
            .map(|&t| planck_force(&c, BoundaryPair::Like, t).unwrap())
            .collect();
        for w in like.windows(2) {
            assert!(w[1] < w[0], "like force must grow more attractive: {like:?}");
        }
        assert!(like[4] < -(PI / 32.0));
        let unlike: Vec<f64> = [0.0, 0.5, 1.0, 2.0, 3.0]
            .iter()
            .map(|&t| planck_force(&c, BoundaryPair::Unlike, t).unwrap())
            .collect();
        for w in unlike.windows(2) {
            assert!(w[1] < w[0], "unlike force must decay: {unlike:?}");
        }
        assert!(unlike[4] > 0.0 && unlike[4] < PI / 64.0);
        // antisymmetry at the center
        assert_eq!(planck_force(&cav(1.5, 3.0), BoundaryPair::Like, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn planck_free_energy_duality() {
        let h = 1e-5;
        for bc in [BoundaryPair::Like, BoundaryPair::Unlike] {
            let fd = -(planck_free_energy(&cav(1.0 + h, 3.0), bc, 1.0).unwrap()
                - planck_free_energy(&cav(1.0 - h, 3.0), bc, 1.0).unwrap())
                / (2.0 * h);
            let f = planck_force(&cav(1.0, 3.0), bc, 1.0).unwrap();
            assert!(
                (fd - f).abs() <= 1e-6 * f.abs(),
                "bc={bc:?}: fd={fd} force={f}"
            );
        }
        assert_eq!(
            planck_free_energy(&cav(1.0, 3.0), BoundaryPair::Like, 0.0).unwrap(),
            zp_energy(&cav(1.0, 3.0), BoundaryPair::Like)
        );
        assert_eq!(
            planck_free_energy(&cav(1.5, 3.0), BoundaryPair::Unlike, 2.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn planck_entropy_limits() {
        let c = cav(1.0, 3.0);
        assert_eq!(planck_entropy(&c, BoundaryPair::Like, 0.0).unwrap(), 0.0);
        // high-temperature limit is the equipartition entropy
        let hot = planck_entropy(&c, BoundaryPair::Like, 50.0).unwrap();
        assert!((hot - rj_entropy(&c, BoundaryPair::Like)).abs() < 1e-3);
        let hot_unlike = planck_entropy(&c, BoundaryPair::Unlike, 50.0).unwrap();
        assert!(hot_unlike.abs() < 1e-3);
        assert_eq!(planck_entropy(&cav(1.5, 3.0), BoundaryPair::Like, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn planck_entropy_non_monotone_for_unlike() {
        let c = cav(1.0, 3.0);
        let s_low = planck_entropy(&c, BoundaryPair::Unlike, 0.05).unwrap();
        let s_mid = planck_entropy(&c, BoundaryPair::Unlike, 0.2).unwrap();
        let s_high = planck_entropy(&c, BoundaryPair::Unlike, 1.0).unwrap();
        assert!(s_mid > s_low, "rises from zero: {s_low} -> {s_mid}");
        assert!(s_high < s_mid, "falls back: {s_mid} -> {s_high}");
    }

    #[test]
    fn entropy_matches_temperature_derivative_of_free_energy() {
        let c = cav(1.0, 3.0);
        for bc in [BoundaryPair::Like, BoundaryPair::Unlike] {
            for &t in &[0.5, 1.0, 3.0] {
                let h = 1e-5 * t;
                let fd = -(planck_free_energy(&c, bc, t + h).unwrap()
                    - planck_free_energy(&c, bc, t - h).unwrap())
                    / (2.0 * h);
                let s = planck_entropy(&c, bc, t).unwrap();
                assert!(
                    (fd - s).abs() <= 1e-6 * s.abs().max(1e-8),
                    "bc={bc:?} t={t}: fd={fd} s={s}"
                );
            }
        }
    }

    #[test]
    fn report_satisfies_first_law() {
        let r = report(&cav(1.0, 3.0), BoundaryPair::Like, 1.0).unwrap();
        let residual = (r.delta_f - (r.delta_u - r.temperature * r.delta_s)).abs();
        assert!(residual < 1e-8);

        let centered = report(&cav(1.5, 3.0), BoundaryPair::Like, 1.0).unwrap();
        assert_eq!(centered.delta_u, 0.0);
        assert_eq!(centered.delta_f, 0.0);
        assert_eq!(centered.delta_x, 0.0);
        assert_eq!(centered.delta_s, 0.0);

        let cold = report(&cav(1.0, 3.0), BoundaryPair::Unlike, 0.0).unwrap();
        assert!((cold.delta_u - PI / 288.0).abs() < 1e-15);
        assert_eq!(cold.delta_u, cold.delta_f);
        assert_eq!(cold.delta_s, 0.0);
    }

    #[test]
    fn mirror_symmetry_and_antisymmetry() {
        let l = 3.0;
        for bc in [BoundaryPair::Like, BoundaryPair::Unlike] {
            for &t in &[0.0, 0.5, 1.0, 3.0] {
                for i in 1..25 {
                    let x = 0.06 + (i as f64) * (l - 0.12) / 49.0;
                    let a = cav(x, l);
                    let b = cav(l - x, l);
                    let du = planck_energy(&a, bc, t).unwrap()
                        - planck_energy(&b, bc, t).unwrap();
                    assert!(du.abs() < 1e-10, "energy mirror bc={bc:?} t={t} x={x}");
                    let df = planck_free_energy(&a, bc, t).unwrap()
                        - planck_free_energy(&b, bc, t).unwrap();
                    assert!(df.abs() < 1e-10, "free energy mirror");
                    let dx = planck_force(&a, bc, t).unwrap()
                        + planck_force(&b, bc, t).unwrap();
                    assert!(dx.abs() < 1e-10, "force antisymmetry bc={bc:?} t={t} x={x}");
                    let ds = planck_entropy(&a, bc, t).unwrap()
                        - planck_entropy(&b, bc, t).unwrap();
                    assert!(ds.abs() < 1e-10, "entropy mirror");
                }
            }
        }
    }

    #[test]
    fn ladder_oracles_match_closed_forms() {
        for bc in [BoundaryPair::Like, BoundaryPair::Unlike] {
            for &(x, l) in &[(1.0, 3.0), (0.5, 3.0), (1.2, 3.0)] {
                let c = cav(x, l);
                for family in [CutoffFamily::Exponential, CutoffFamily::Gaussian] {
                    let cutoff = default_cutoff(&c, family).unwrap();
                    let zp = zp_energy_via_ladder(&c, bc, &cutoff).unwrap();
                    assert!(
                        (zp.value - zp_energy(&c, bc)).abs() < 1e-6,
                        "zp {family:?} {bc:?} ({x},{l}): {} vs {}",
                        zp.value,
                        zp_energy(&c, bc)
                    );
                    let rj = rj_force_via_ladder(&c, bc, 2.0, &cutoff).unwrap();
                    assert!(
                        (rj.value - rj_force(&c, bc, 2.0).unwrap()).abs() < 1e-6,
                        "rj force {family:?} {bc:?} ({x},{l})"
                    );
                }
            }
        }
    }
}
