//! Per-normal-mode thermodynamics: energy, Helmholtz free energy, entropy
//! and force contribution for each spectrum family.
//!
//! Everything is expressed in natural units hbar = c = k_B = 1. Hyperbolic
//! forms are rewritten in terms of `exp_m1`/`ln_1p` so that nothing
//! overflows for omega/T beyond ~700.

use crate::error::{Error, Result};

/// Per-mode energy law selecting one of the four spectrum families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumModel {
    /// U = omega / 2, the zero-temperature limit.
    ZeroPoint,
    /// U = T, classical equipartition.
    RayleighJeans,
    /// U = (omega/2) coth(omega / 2T), Planck spectrum with zero-point term.
    PlanckZp,
    /// Two-parameter Wien-compatible interpolation
    /// U = c1 omega exp(-c2 omega/T) / (1 - exp(-c1 omega/T)) + omega/2.
    /// Reduces to `PlanckZp` at c1 = c2 = 1.
    Interpolated { c1: f64, c2: f64 },
}

impl SpectrumModel {
    /// Interpolated variant with validated positive shape parameters.
    pub fn interpolated(c1: f64, c2: f64) -> Result<Self> {
        if !(c1 > 0.0 && c1.is_finite() && c2 > 0.0 && c2.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "interpolation parameters must be positive, got c1={c1}, c2={c2}"
            )));
        }
        Ok(SpectrumModel::Interpolated { c1, c2 })
    }

    fn check(&self) -> Result<()> {
        if let SpectrumModel::Interpolated { c1, c2 } = *self {
            SpectrumModel::interpolated(c1, c2)?;
        }
        Ok(())
    }
}

/// A single (omega, T) evaluation point. omega > 0, T >= 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModePoint {
    omega: f64,
    temperature: f64,
}

impl ModePoint {
    pub fn new(omega: f64, temperature: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "mode frequency must be positive and finite, got {omega}"
            )));
        }
        if !(temperature >= 0.0 && temperature.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "temperature must be non-negative and finite, got {temperature}"
            )));
        }
        Ok(ModePoint { omega, temperature })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    fn require_thermal(&self) -> Result<f64> {
        if self.temperature > 0.0 {
            Ok(self.temperature)
        } else {
            Err(Error::InvalidParameter(
                "temperature must be positive for this spectrum".into(),
            ))
        }
    }
}

/// omega / (e^{omega/t} - 1), the thermal occupation energy of one mode.
/// Decays to zero (without overflow) as omega/t grows.
pub(crate) fn bose_energy(omega: f64, t: f64) -> f64 {
    omega / (omega / t).exp_m1()
}

/// t ln(1 - e^{-omega/t}), the thermal part of the mode free energy.
pub(crate) fn thermal_free_energy(omega: f64, t: f64) -> f64 {
    t * (-(-omega / t).exp()).ln_1p()
}

/// Planck entropy of one mode, -ln[2 sinh(y/2)] + (y/2) coth(y/2) with
/// y = omega/t, rewritten as -ln(1 - e^{-y}) + y/(e^y - 1).
pub(crate) fn planck_entropy(omega: f64, t: f64) -> f64 {
    let y = omega / t;
    -(-(-y).exp()).ln_1p() + y / y.exp_m1()
}

/// Thermal part of the interpolated family,
/// c1 omega e^{-c2 omega/t} / (1 - e^{-c1 omega/t}).
pub(crate) fn interpolated_thermal(omega: f64, t: f64, c1: f64, c2: f64) -> f64 {
    let y = omega / t;
    c1 * omega * (-c2 * y).exp() / -(-c1 * y).exp_m1()
}

/// Average energy per normal mode for the given spectrum.
pub fn energy_per_mode(model: SpectrumModel, p: ModePoint) -> Result<f64> {
    model.check()?;
    match model {
        SpectrumModel::ZeroPoint => Ok(0.5 * p.omega),
        SpectrumModel::RayleighJeans => p.require_thermal(),
        SpectrumModel::PlanckZp => {
            if p.temperature == 0.0 {
                Ok(0.5 * p.omega)
            } else {
                Ok(bose_energy(p.omega, p.temperature) + 0.5 * p.omega)
            }
        }
        SpectrumModel::Interpolated { c1, c2 } => {
            let t = p.require_thermal()?;
            Ok(interpolated_thermal(p.omega, t, c1, c2) + 0.5 * p.omega)
        }
    }
}

/// Energy per mode with the omega/2 zero-point part removed. This is the
/// piece whose mode sums converge without regularization.
pub fn thermal_energy_per_mode(model: SpectrumModel, p: ModePoint) -> Result<f64> {
    model.check()?;
    let t = p.require_thermal()?;
    match model {
        SpectrumModel::ZeroPoint => Err(Error::InvalidParameter(
            "the zero-point spectrum has no thermal part".into(),
        )),
        SpectrumModel::RayleighJeans => Ok(t),
        SpectrumModel::PlanckZp => Ok(bose_energy(p.omega, t)),
        SpectrumModel::Interpolated { c1, c2 } => Ok(interpolated_thermal(p.omega, t, c1, c2)),
    }
}

/// Helmholtz free energy per mode for the Planck spectrum with zero-point
/// term: T ln[2 sinh(omega/2T)] = omega/2 + T ln(1 - e^{-omega/T}).
pub fn free_energy_per_mode(p: ModePoint) -> f64 {
    if p.temperature == 0.0 {
        return 0.5 * p.omega;
    }
    0.5 * p.omega + thermal_free_energy(p.omega, p.temperature)
}

/// Entropy per mode (units of k_B).
pub fn entropy_per_mode(model: SpectrumModel, p: ModePoint) -> Result<f64> {
    model.check()?;
    match model {
        SpectrumModel::ZeroPoint => Ok(0.0),
        SpectrumModel::RayleighJeans => {
            let t = p.require_thermal()?;
            Ok(1.0 - (p.omega / t).ln())
        }
        SpectrumModel::PlanckZp => {
            let t = p.require_thermal()?;
            Ok(planck_entropy(p.omega, t))
        }
        // No entropy law is defined for the interpolating family; the energy
        // expression alone does not determine one.
        SpectrumModel::Interpolated { .. } => Err(Error::InvalidParameter(
            "entropy is not defined for the interpolated family".into(),
        )),
    }
}

/// Force exerted on a cavity boundary by a single mode of the Planck
/// spectrum: (omega/2L) coth(omega/2T); omega/2L at T = 0. The thermal
/// part equals (omega/L)/(e^{omega/T} - 1).
pub fn force_per_mode(p: ModePoint, length: f64) -> Result<f64> {
    if !(length > 0.0 && length.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "length must be positive and finite, got {length}"
        )));
    }
    let zp = 0.5 * p.omega / length;
    if p.temperature == 0.0 {
        return Ok(zp);
    }
    Ok(zp + bose_energy(p.omega, p.temperature) / length)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(omega: f64, t: f64) -> ModePoint {
        ModePoint::new(omega, t).unwrap()
    }

    // Independent route: direct hyperbolic evaluation, only valid away from
    // overflow. Used to cross-check the exp_m1/ln_1p rewrites.
    fn planck_energy_hyperbolic(omega: f64, t: f64) -> f64 {
        0.5 * omega * (0.5 * omega / t).tanh().recip()
    }

    fn free_energy_hyperbolic(omega: f64, t: f64) -> f64 {
        t * (2.0 * (0.5 * omega / t).sinh()).ln()
    }

    fn entropy_hyperbolic(omega: f64, t: f64) -> f64 {
        let y = 0.5 * omega / t;
        -(2.0 * y.sinh()).ln() + y * y.tanh().recip()
    }

    #[test]
    fn planck_energy_matches_all_three_forms() {
        // omega=1, T=1: 1/(e-1) + 1/2
        let u = energy_per_mode(SpectrumModel::PlanckZp, pt(1.0, 1.0)).unwrap();
        assert!((u - 1.081_976_706_869_326_5).abs() < 1e-15);
        // the three algebraically equivalent forms agree
        for &(w, t) in &[(1.0, 1.0), (0.3, 2.0), (7.5, 0.9), (20.0, 1.0)] {
            let a = energy_per_mode(SpectrumModel::PlanckZp, pt(w, t)).unwrap();
            let b = planck_energy_hyperbolic(w, t);
            let c = w * (-w / t).exp() / (1.0 - (-w / t).exp()) + 0.5 * w;
            assert!((a - b).abs() <= 1e-12 * a.abs(), "coth form at ({w},{t})");
            assert!((a - c).abs() <= 1e-12 * a.abs(), "exp form at ({w},{t})");
        }
    }

    #[test]
    fn planck_energy_zero_temperature_is_zero_point() {
        let u = energy_per_mode(SpectrumModel::PlanckZp, pt(1.0, 0.0)).unwrap();
        assert_eq!(u, 0.5);
    }

    #[test]
    fn interpolated_at_unit_parameters_is_planck() {
        let p = pt(2.3, 0.7);
        let a = energy_per_mode(SpectrumModel::Interpolated { c1: 1.0, c2: 1.0 }, p).unwrap();
        let b = energy_per_mode(SpectrumModel::PlanckZp, p).unwrap();
        assert!((a - b).abs() <= 1e-14 * b.abs());
        let ta = thermal_energy_per_mode(SpectrumModel::Interpolated { c1: 1.0, c2: 1.0 }, p)
            .unwrap();
        let tb = thermal_energy_per_mode(SpectrumModel::PlanckZp, p).unwrap();
        assert!((ta - tb).abs() <= 1e-14 * tb.abs());
    }

    #[test]
    fn rayleigh_jeans_is_equipartition() {
        let u = energy_per_mode(SpectrumModel::RayleighJeans, pt(5.0, 2.0)).unwrap();
        assert_eq!(u, 2.0);
    }

    #[test]
    fn thermal_energy_values() {
        let v = thermal_energy_per_mode(SpectrumModel::PlanckZp, pt(1.0, 1.0)).unwrap();
        assert!((v - 0.581_976_706_869_326_5).abs() < 1e-15);
        let tail = thermal_energy_per_mode(SpectrumModel::PlanckZp, pt(40.0, 1.0)).unwrap();
        assert!(tail > 0.0 && tail < 1e-15);
    }

    #[test]
    fn thermal_energy_rejects_zero_point() {
        assert!(thermal_energy_per_mode(SpectrumModel::ZeroPoint, pt(1.0, 1.0)).is_err());
    }

    #[test]
    fn free_energy_both_forms_agree() {
        // omega=1, T=1: 0.5 + ln(1 - 1/e) = ln(2 sinh 1/2)
        let f = free_energy_per_mode(pt(1.0, 1.0));
        assert!((f - 0.041_324_854_612_918_07).abs() < 1e-15);
        for &(w, t) in &[(1.0, 1.0), (0.05, 3.0), (12.0, 2.5)] {
            let a = free_energy_per_mode(pt(w, t));
            let b = free_energy_hyperbolic(w, t);
            assert!((a - b).abs() < 1e-12, "sinh form at ({w},{t})");
        }
        assert_eq!(free_energy_per_mode(pt(1.0, 0.0)), 0.5);
        // classical limit: negative and decreasing in T
        let f1 = free_energy_per_mode(pt(1.0, 50.0));
        let f2 = free_energy_per_mode(pt(1.0, 100.0));
        assert!(f1 < 0.0 && f2 < f1);
    }

    #[test]
    fn free_energy_no_overflow_at_extreme_ratio() {
        let f = free_energy_per_mode(pt(2000.0, 1.0));
        assert_eq!(f, 1000.0);
    }

    #[test]
    fn entropy_values_and_limits() {
        // frozen via S = (U - F)/T with the oracle-checked U and F above
        let s = entropy_per_mode(SpectrumModel::PlanckZp, pt(1.0, 1.0)).unwrap();
        assert!((s - 1.040_651_852_256_408_3).abs() < 1e-14);
        // high-frequency limit
        let s_hi = entropy_per_mode(SpectrumModel::PlanckZp, pt(20.0, 1.0)).unwrap();
        assert!(s_hi > 0.0 && s_hi < 1e-7);
        // Rayleigh-Jeans limit at low frequency
        let s_lo = entropy_per_mode(SpectrumModel::PlanckZp, pt(0.001, 1.0)).unwrap();
        let rj = entropy_per_mode(SpectrumModel::RayleighJeans, pt(0.001, 1.0)).unwrap();
        assert!((s_lo - rj).abs() <= 1e-4 * rj.abs());
        // hyperbolic form as a second route
        for &(w, t) in &[(1.0, 1.0), (0.4, 2.0), (9.0, 1.3)] {
            let a = entropy_per_mode(SpectrumModel::PlanckZp, pt(w, t)).unwrap();
            assert!((a - entropy_hyperbolic(w, t)).abs() < 1e-12);
        }
        assert_eq!(
            entropy_per_mode(SpectrumModel::ZeroPoint, pt(3.0, 0.0)).unwrap(),
            0.0
        );
        assert!(entropy_per_mode(SpectrumModel::Interpolated { c1: 1.0, c2: 1.0 }, pt(1.0, 1.0))
            .is_err());
    }

    #[test]
    fn force_values_and_decomposition() {
        assert_eq!(force_per_mode(pt(1.0, 0.0), 1.0).unwrap(), 0.5);
        // omega=1, L=2, T=1: (1/4) coth(1/2), cross-checked against the
        // zero-point + thermal decomposition
        let x = force_per_mode(pt(1.0, 1.0), 2.0).unwrap();
        assert!((x - 0.540_988_353_434_663_2).abs() < 1e-15);
        let decomposed = 0.25 + bose_energy(1.0, 1.0) / 2.0;
        assert!((x - decomposed).abs() < 1e-16);
        // omega -> 0 at T=1, L=1: approaches equipartition T/L = 1
        let x_lo = force_per_mode(pt(1e-9, 1.0), 1.0).unwrap();
        assert!((x_lo - 1.0).abs() < 1e-8);
    }

    #[test]
    fn wien_scaling_of_planck_law() {
        // U(omega, T)/omega depends only on omega/T
        for &(w, t) in &[(1.3, 0.8), (4.0, 2.0)] {
            let base = energy_per_mode(SpectrumModel::PlanckZp, pt(w, t)).unwrap() / w;
            for &lam in &[0.5, 2.0, 10.0] {
                let scaled =
                    energy_per_mode(SpectrumModel::PlanckZp, pt(lam * w, lam * t)).unwrap()
                        / (lam * w);
                assert!((scaled - base).abs() <= 1e-12 * base.abs());
            }
        }
    }

    #[test]
    fn interpolated_limits_over_parameter_box() {
        // -> T as omega/T -> 0 and -> omega/2 as omega/T -> infinity
        for &c1 in &[0.25, 1.0, 4.0] {
            for &c2 in &[0.25, 1.0, 4.0] {
                let m = SpectrumModel::interpolated(c1, c2).unwrap();
                let low = energy_per_mode(m, pt(1e-7, 1.0)).unwrap();
                assert!((low - 1.0).abs() < 1e-4, "low-freq limit at ({c1},{c2})");
                let w = 5000.0;
                let high = energy_per_mode(m, pt(w, 1.0)).unwrap();
                assert!(
                    (high - 0.5 * w).abs() <= 1e-12 * w,
                    "high-freq limit at ({c1},{c2})"
                );
            }
        }
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(ModePoint::new(0.0, 1.0).is_err());
        assert!(ModePoint::new(-1.0, 1.0).is_err());
        assert!(ModePoint::new(1.0, -0.5).is_err());
        assert!(ModePoint::new(f64::NAN, 1.0).is_err());
        assert!(SpectrumModel::interpolated(0.0, 1.0).is_err());
        assert!(SpectrumModel::interpolated(1.0, -2.0).is_err());
        assert!(energy_per_mode(SpectrumModel::RayleighJeans, pt(1.0, 0.0)).is_err());
        assert!(force_per_mode(pt(1.0, 1.0), 0.0).is_err());
    }
}
