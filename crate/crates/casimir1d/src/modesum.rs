//! Normal-mode enumeration, cutoff-regularized summation of divergent
//! series, polynomial extrapolation of the cutoff to zero, and truncated
//! summation of convergent thermal series.
//!
//! This module is the oracle layer: every closed form in [`crate::casimir`]
//! can be re-derived here by brute numerics.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::spectra;

/// Relative size at which a term is considered negligible in a convergent
/// mode sum.
const TERM_EPS: f64 = 1e-14;

/// Hard cap on summed terms; exceeding it signals pathological parameters.
const MAX_TERMS: u64 = 100_000_000;

/// Boundary-condition pairing between the partition and the outer walls.
///
/// Like pairs (both Dirichlet or both Neumann) carry wavenumbers
/// k_n = n pi / L; unlike pairs carry k_n = (n - 1/2) pi / L.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryPair {
    Like,
    Unlike,
}

impl BoundaryPair {
    /// The mode-offset parameter: 0 for like, 1 for unlike pairs.
    pub fn alpha(self) -> f64 {
        match self {
            BoundaryPair::Like => 0.0,
            BoundaryPair::Unlike => 1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BoundaryPair::Like => "like",
            BoundaryPair::Unlike => "unlike",
        }
    }
}

/// Angular frequency of mode `n` (n >= 1) in a cavity of the given length.
pub fn mode_frequency(n: u64, length: f64, bc: BoundaryPair) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("mode index starts at 1".into()));
    }
    if !(length > 0.0 && length.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "length must be positive and finite, got {length}"
        )));
    }
    Ok((n as f64 - 0.5 * bc.alpha()) * PI / length)
}

/// Shape of the smooth cutoff weight applied to each mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutoffFamily {
    /// weight = exp(-lambda omega)
    Exponential,
    /// weight = exp(-(lambda omega)^2)
    Gaussian,
}

impl CutoffFamily {
    pub fn label(self) -> &'static str {
        match self {
            CutoffFamily::Exponential => "exp",
            CutoffFamily::Gaussian => "gauss",
        }
    }
}

/// A cutoff family together with a strictly decreasing ladder of cutoff
/// lengths; the last ladder entry is the working lambda.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffSpec {
    family: CutoffFamily,
    ladder: Vec<f64>,
}

impl CutoffSpec {
    pub fn new(family: CutoffFamily, ladder: Vec<f64>) -> Result<Self> {
        if ladder.is_empty() {
            return Err(Error::InvalidParameter("empty cutoff ladder".into()));
        }
        for pair in ladder.windows(2) {
            if !(pair[1] < pair[0]) {
                return Err(Error::InvalidParameter(
                    "cutoff ladder must be strictly decreasing".into(),
                ));
            }
        }
        if !ladder.iter().all(|&l| l > 0.0 && l.is_finite()) {
            return Err(Error::InvalidParameter(
                "cutoff lambdas must be positive and finite".into(),
            ));
        }
        Ok(CutoffSpec { family, ladder })
    }

    /// Ladder {0.08, 0.04, 0.02, 0.01} scaled by the smallest dimension of
    /// the system, which keeps every lambda below the geometry it probes.
    pub fn default_ladder(family: CutoffFamily, min_dimension: f64) -> Result<Self> {
        if !(min_dimension > 0.0 && min_dimension.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "min dimension must be positive, got {min_dimension}"
            )));
        }
        let ladder = [0.08, 0.04, 0.02, 0.01]
            .iter()
            .map(|s| s * min_dimension)
            .collect();
        CutoffSpec::new(family, ladder)
    }

    /// Working cutoff length (the smallest ladder entry).
    pub fn lambda(&self) -> f64 {
        *self.ladder.last().unwrap()
    }

    pub fn ladder(&self) -> &[f64] {
        &self.ladder
    }

    pub fn family(&self) -> CutoffFamily {
        self.family
    }

    /// Same ladder evaluated at a single lambda.
    pub fn at_lambda(&self, lambda: f64) -> Result<Self> {
        CutoffSpec::new(self.family, vec![lambda])
    }
}

/// Cutoff-regularized value of a mode sum.
///
/// For [`extrapolate_ladder`] the `value` is the polynomial extrapolant of
/// the ladder at lambda = 0 and `error_estimate` the difference of the two
/// highest-order extrapolants. For [`regularized_zp_sum`], which does not
/// extrapolate, `value` is the finite-lambda sum and `error_estimate` is 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizedValue {
    pub value: f64,
    pub lambda_used: f64,
    pub error_estimate: f64,
}

fn first_frequency_and_spacing(length: f64, bc: BoundaryPair) -> (f64, f64) {
    let spacing = PI / length;
    (spacing * (1.0 - 0.5 * bc.alpha()), spacing)
}

/// Sum of the bare cutoff weights over all modes,
/// sum_n F(lambda omega_n).
///
/// Exponential weights sum as a geometric series in closed form; Gaussian
/// weights are summed directly with a tail bound below 1e-14 of the total.
/// The small-lambda expansion is length/(lambda pi) + (alpha - 1)/2 + O(lambda)
/// for the exponential family.
pub fn geometric_cutoff_sum(length: f64, bc: BoundaryPair, cutoff: &CutoffSpec) -> Result<f64> {
    geometric_cutoff_sum_at(length, bc, cutoff.family, cutoff.lambda())
}

fn geometric_cutoff_sum_at(
    length: f64,
    bc: BoundaryPair,
    family: CutoffFamily,
    lambda: f64,
) -> Result<f64> {
    if !(length > 0.0 && length.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "length must be positive and finite, got {length}"
        )));
    }
    let (first, spacing) = first_frequency_and_spacing(length, bc);
    match family {
        CutoffFamily::Exponential => {
            let s = lambda * spacing;
            if s > 700.0 {
                return Err(Error::DegenerateCutoff { lambda, length });
            }
            Ok((-lambda * first).exp() / -(-s).exp_m1())
        }
        CutoffFamily::Gaussian => {
            if (lambda * first).powi(2) > 700.0 {
                return Err(Error::DegenerateCutoff { lambda, length });
            }
            let mut sum = 0.0;
            let mut n = 1u64;
            loop {
                let omega = first + (n - 1) as f64 * spacing;
                let z = lambda * omega;
                let term = (-z * z).exp();
                sum += term;
                // integral tail bound: sum_{k>n} <= term * L/(2 lambda^2 pi omega_n)
                let tail = term * length / (2.0 * lambda * lambda * PI * omega);
                if tail <= 1e-14 * sum {
                    return Ok(sum);
                }
                n += 1;
                if n > MAX_TERMS {
                    return Err(Error::NoConvergence { terms: n });
                }
            }
        }
    }
}

/// Cutoff-weighted zero-point energy sum, sum_n (omega_n / 2) F(lambda omega_n),
/// at the working lambda of `cutoff`.
///
/// The result diverges as lambda -> 0 (leading term length/(2 pi lambda^2)
/// for the exponential family); it is meaningful only inside differences of
/// cavity configurations, where the divergent parts cancel. No
/// extrapolation is performed here.
pub fn regularized_zp_sum(
    length: f64,
    bc: BoundaryPair,
    cutoff: &CutoffSpec,
) -> Result<RegularizedValue> {
    let lambda = cutoff.lambda();
    let value = match cutoff.family {
        CutoffFamily::Exponential => zp_sum_exponential_closed(length, bc, lambda)?,
        CutoffFamily::Gaussian => zp_sum_direct(length, bc, CutoffFamily::Gaussian, lambda)?,
    };
    Ok(RegularizedValue {
        value,
        lambda_used: lambda,
        error_estimate: 0.0,
    })
}

/// Closed form obtained from -(1/2) d/d lambda of the geometric series.
fn zp_sum_exponential_closed(length: f64, bc: BoundaryPair, lambda: f64) -> Result<f64> {
    if !(length > 0.0 && length.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "length must be positive and finite, got {length}"
        )));
    }
    let (first, spacing) = first_frequency_and_spacing(length, bc);
    let s = lambda * spacing;
    if s > 700.0 {
        return Err(Error::DegenerateCutoff { lambda, length });
    }
    let one_minus_q = -(-s).exp_m1();
    let qa = (-lambda * first).exp();
    Ok(0.5 * qa * (first / one_minus_q + spacing * (-s).exp() / (one_minus_q * one_minus_q)))
}

/// Direct truncated summation; the second, independent evaluation path.
pub(crate) fn zp_sum_direct(
    length: f64,
    bc: BoundaryPair,
    family: CutoffFamily,
    lambda: f64,
) -> Result<f64> {
    let (first, spacing) = first_frequency_and_spacing(length, bc);
    if lambda * first > 700.0 || (lambda * first).powi(2) > 700.0 {
        return Err(Error::DegenerateCutoff { lambda, length });
    }
    let mut sum = 0.0;
    let mut n = 1u64;
    loop {
        let omega = first + (n - 1) as f64 * spacing;
        let (term, tail) = match family {
            CutoffFamily::Exponential => {
                let term = 0.5 * omega * (-lambda * omega).exp();
                // geometric bound on the remaining terms
                let r = (-lambda * spacing).exp();
                (term, term * r / (1.0 - r) * (1.0 + spacing / (lambda * omega)))
            }
            CutoffFamily::Gaussian => {
                let z = lambda * omega;
                let term = 0.5 * omega * (-z * z).exp();
                (term, (-z * z).exp() * length / (4.0 * lambda * lambda * PI))
            }
        };
        sum += term;
        if tail <= 1e-14 * sum {
            return Ok(sum);
        }
        n += 1;
        if n > MAX_TERMS {
            return Err(Error::NoConvergence { terms: n });
        }
    }
}

/// Which convergent per-mode function a thermal mode sum accumulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThermalKernel {
    /// omega/(e^{omega/T} - 1)
    ThermalEnergy,
    /// T ln(1 - e^{-omega/T})
    ThermalFreeEnergy,
    /// Planck per-mode entropy
    Entropy,
    /// (omega/length)/(e^{omega/T} - 1)
    ThermalForce,
}

/// Truncated sum of a convergent per-mode function over all modes of one
/// cavity.
///
/// Truncation starts only past n_min = ceil(10 T length / pi), since terms
/// may be non-monotone before the exponential tail sets in; after that the
/// sum stops once a term falls below 1e-14 of the running total.
pub fn convergent_thermal_sum(
    length: f64,
    bc: BoundaryPair,
    temperature: f64,
    kernel: ThermalKernel,
) -> Result<f64> {
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "temperature must be positive, got {temperature}"
        )));
    }
    let n_min = tail_guard(temperature, length, 1.0);
    match kernel {
        ThermalKernel::ThermalEnergy => sum_modes(length, bc, n_min, |w| {
            spectra::bose_energy(w, temperature)
        }),
        ThermalKernel::ThermalFreeEnergy => sum_modes(length, bc, n_min, |w| {
            spectra::thermal_free_energy(w, temperature)
        }),
        ThermalKernel::Entropy => sum_modes(length, bc, n_min, |w| {
            spectra::planck_entropy(w, temperature)
        }),
        ThermalKernel::ThermalForce => sum_modes(length, bc, n_min, |w| {
            spectra::bose_energy(w, temperature) / length
        }),
    }
}

/// Index below which truncation must not trigger: ten times the mode count
/// at the thermal turnover omega ~ T, scaled by the kernel decay rate.
pub(crate) fn tail_guard(temperature: f64, length: f64, decay_scale: f64) -> u64 {
    let guard = (10.0 * temperature * length / (PI * decay_scale)).ceil();
    (guard as u64).max(1)
}

/// Generic convergent-sum engine shared by the thermal kernels and the
/// interpolated-spectrum sums.
pub(crate) fn sum_modes(
    length: f64,
    bc: BoundaryPair,
    n_min: u64,
    kernel: impl Fn(f64) -> f64,
) -> Result<f64> {
    if !(length > 0.0 && length.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "length must be positive and finite, got {length}"
        )));
    }
    let (first, spacing) = first_frequency_and_spacing(length, bc);
    let mut sum = 0.0;
    let mut n = 1u64;
    loop {
        let omega = first + (n - 1) as f64 * spacing;
        let term = kernel(omega);
        sum += term;
        if n > n_min && term.abs() <= TERM_EPS * sum.abs() {
            return Ok(sum);
        }
        n += 1;
        if n > MAX_TERMS {
            return Err(Error::NoConvergence { terms: n });
        }
    }
}

/// Polynomial (Richardson) extrapolation of ladder values to lambda = 0.
///
/// `points` holds (lambda, value) pairs with strictly decreasing lambdas.
/// The error estimate is the difference between the two highest-order
/// extrapolants; the ladder is rejected as ill-conditioned when those
/// extrapolants grow instead of settling.
pub fn extrapolate_ladder(points: &[(f64, f64)]) -> Result<RegularizedValue> {
    if points.len() < 3 {
        return Err(Error::InvalidParameter(
            "ladder extrapolation needs at least 3 points".into(),
        ));
    }
    let lambdas: Vec<f64> = points.iter().map(|p| p.0).collect();
    for pair in lambdas.windows(2) {
        if !(pair[1] < pair[0]) {
            return Err(Error::InvalidParameter(
                "ladder lambdas must be strictly decreasing".into(),
            ));
        }
    }
    if !lambdas.iter().all(|&l| l > 0.0 && l.is_finite()) {
        return Err(Error::InvalidParameter(
            "ladder lambdas must be positive and finite".into(),
        ));
    }

    // Neville's scheme evaluated at lambda = 0; diag[k] is the extrapolant
    // through the first k+1 ladder points.
    let n = points.len();
    let mut table: Vec<f64> = points.iter().map(|p| p.1).collect();
    let mut diag = vec![table[0]];
    for j in 1..n {
        for i in (j..n).rev() {
            let num = (table[i] - table[i - 1]) * (0.0 - lambdas[i]);
            table[i] += num / (lambdas[i] - lambdas[i - j]);
        }
        diag.push(table[j]);
    }

    if diag.iter().any(|d| !d.is_finite()) {
        return Err(Error::IllConditionedLadder);
    }
    let diffs: Vec<f64> = diag.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    if diffs.len() >= 3 {
        let last = diffs[diffs.len() - 1];
        let prev = diffs[diffs.len() - 2];
        let prev2 = diffs[diffs.len() - 3];
        let scale = 1e-9 * (1.0 + diag[n - 1].abs());
        if last > 2.5 * prev && prev > 2.5 * prev2 && last > scale {
            return Err(Error::IllConditionedLadder);
        }
    }

    Ok(RegularizedValue {
        value: diag[n - 1],
        lambda_used: lambdas[n - 1],
        error_estimate: *diffs.last().unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn mode_frequencies() {
        let f = mode_frequency(1, 3.0, BoundaryPair::Like).unwrap();
        assert!((f - PI / 3.0).abs() < 1e-15);
        let f = mode_frequency(1, 3.0, BoundaryPair::Unlike).unwrap();
        assert!((f - PI / 6.0).abs() < 1e-15);
        let f = mode_frequency(2, 1.0, BoundaryPair::Like).unwrap();
        assert!((f - 2.0 * PI).abs() < 1e-15);
        assert!(mode_frequency(0, 1.0, BoundaryPair::Like).is_err());
    }

    #[test]
    fn frequencies_increase_and_interlace() {
        for n in 1..200u64 {
            let like_n = mode_frequency(n, 2.7, BoundaryPair::Like).unwrap();
            let like_next = mode_frequency(n + 1, 2.7, BoundaryPair::Like).unwrap();
            let unlike_n = mode_frequency(n, 2.7, BoundaryPair::Unlike).unwrap();
            let unlike_next = mode_frequency(n + 1, 2.7, BoundaryPair::Unlike).unwrap();
            assert!(like_n < like_next);
            assert!(unlike_n < like_n && like_n < unlike_next);
        }
    }

    #[test]
    fn geometric_sum_matches_geometric_series() {
        // lambda pi / L = ln 2 makes the weights 2^{-n}, which sum to 1
        let lambda = LN_2 / PI;
        let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![lambda]).unwrap();
        let v = geometric_cutoff_sum(1.0, BoundaryPair::Like, &spec).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn geometric_sum_closed_form_vs_brute_force() {
        let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![0.01]).unwrap();
        let v = geometric_cutoff_sum(1.0, BoundaryPair::Like, &spec).unwrap();
        let mut brute = 0.0;
        for n in 1..=1_000_000u64 {
            brute += (-0.01 * PI * n as f64).exp();
        }
        assert!((v - brute).abs() <= 1e-12 * brute);
        // frozen value, 1/(0.01 pi) - 1/2 + O(lambda)
        assert!((v - 31.333_606_569_193_766).abs() < 1e-12);
    }

    #[test]
    fn geometric_sum_constant_term_is_alpha_minus_one_half() {
        // fit value - L/(lambda pi) at shrinking lambda; the remainder tends
        // to (alpha - 1)/2
        for (bc, expected) in [(BoundaryPair::Like, -0.5), (BoundaryPair::Unlike, 0.0)] {
            for &lambda in &[1e-2, 1e-3, 1e-4] {
                let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![lambda]).unwrap();
                let v = geometric_cutoff_sum(2.0, bc, &spec).unwrap();
                let constant = v - 2.0 / (lambda * PI);
                assert!(
                    (constant - expected).abs() < 2.0 * lambda,
                    "bc={bc:?} lambda={lambda}: constant={constant}"
                );
            }
        }
    }

    #[test]
    fn unlike_exceeds_like_by_one_half() {
        let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![0.01]).unwrap();
        let like = geometric_cutoff_sum(1.0, BoundaryPair::Like, &spec).unwrap();
        let unlike = geometric_cutoff_sum(1.0, BoundaryPair::Unlike, &spec).unwrap();
        assert!((unlike - like - 0.5).abs() < 0.01);
    }

    #[test]
    fn gaussian_sum_matches_brute_force() {
        let spec = CutoffSpec::new(CutoffFamily::Gaussian, vec![0.02]).unwrap();
        let v = geometric_cutoff_sum(1.0, BoundaryPair::Unlike, &spec).unwrap();
        let mut brute = 0.0;
        for n in 1..=1_000_000u64 {
            let z = 0.02 * (n as f64 - 0.5) * PI;
            brute += (-z * z).exp();
        }
        assert!((v - brute).abs() <= 1e-13 * brute);
    }

    #[test]
    fn degenerate_cutoff_is_reported() {
        let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![300.0]).unwrap();
        assert!(matches!(
            geometric_cutoff_sum(1.0, BoundaryPair::Like, &spec),
            Err(Error::DegenerateCutoff { .. })
        ));
    }

    #[test]
    fn zp_sum_closed_form_vs_direct() {
        for bc in [BoundaryPair::Like, BoundaryPair::Unlike] {
            let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![0.1]).unwrap();
            let closed = regularized_zp_sum(1.0, bc, &spec).unwrap().value;
            let direct = zp_sum_direct(1.0, bc, CutoffFamily::Exponential, 0.1).unwrap();
            assert!(
                (closed - direct).abs() <= 1e-10 * closed.abs(),
                "bc={bc:?}: closed={closed} direct={direct}"
            );
        }
    }

    #[test]
    fn zp_sum_leading_divergence() {
        // value * lambda^2 -> L/(2 pi); the extrapolation oracle for the
        // final Casimir coefficients pins the normalization
        for &lambda in &[1e-2, 1e-3] {
            let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![lambda]).unwrap();
            let v = regularized_zp_sum(1.0, BoundaryPair::Like, &spec).unwrap();
            let leading = v.value * lambda * lambda;
            assert!(
                (leading - 1.0 / (2.0 * PI)).abs() < lambda,
                "lambda={lambda}: {leading}"
            );
        }
    }

    #[test]
    fn zp_difference_of_equal_cavities_vanishes() {
        let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![0.05]).unwrap();
        let a = regularized_zp_sum(1.0, BoundaryPair::Like, &spec).unwrap();
        let b = regularized_zp_sum(1.0, BoundaryPair::Like, &spec).unwrap();
        assert_eq!(a.value - b.value, 0.0);
    }

    #[test]
    fn thermal_sum_frozen_at_low_temperature() {
        let v = convergent_thermal_sum(1.0, BoundaryPair::Like, 0.01, ThermalKernel::ThermalEnergy)
            .unwrap();
        assert!(v.abs() < 1e-10);
    }

    #[test]
    fn thermal_sum_vs_brute_force() {
        let v = convergent_thermal_sum(3.0, BoundaryPair::Like, 1.0, ThermalKernel::ThermalEnergy)
            .unwrap();
        let mut brute = 0.0;
        for n in 1..=1_000_000u64 {
            let y = n as f64 * PI / 3.0;
            if y > 700.0 {
                break;
            }
            brute += y / y.exp_m1();
        }
        assert!((v - brute).abs() <= 1e-12 * brute, "v={v} brute={brute}");
        // frozen from the brute-force route
        assert!((v - 1.114_429_558_094_753).abs() < 1e-12);
    }

    #[test]
    fn entropy_sum_equals_energy_minus_free_energy_over_t() {
        for bc in [BoundaryPair::Like, BoundaryPair::Unlike] {
            let t = 0.8;
            let s = convergent_thermal_sum(2.0, bc, t, ThermalKernel::Entropy).unwrap();
            let u = convergent_thermal_sum(2.0, bc, t, ThermalKernel::ThermalEnergy).unwrap();
            let f = convergent_thermal_sum(2.0, bc, t, ThermalKernel::ThermalFreeEnergy).unwrap();
            assert!((s - (u - f) / t).abs() < 1e-10);
        }
    }

    #[test]
    fn thermal_kernels_have_expected_signs() {
        let t = 1.3;
        let u = convergent_thermal_sum(2.0, BoundaryPair::Like, t, ThermalKernel::ThermalEnergy)
            .unwrap();
        let f =
            convergent_thermal_sum(2.0, BoundaryPair::Like, t, ThermalKernel::ThermalFreeEnergy)
                .unwrap();
        let x = convergent_thermal_sum(2.0, BoundaryPair::Like, t, ThermalKernel::ThermalForce)
            .unwrap();
        assert!(u >= 0.0 && x >= 0.0 && f <= 0.0);
    }

    #[test]
    fn extrapolation_is_exact_on_polynomials() {
        let ladder = [0.08, 0.04, 0.02, 0.01];
        let linear: Vec<(f64, f64)> = ladder.iter().map(|&l| (l, 3.5 + 2.0 * l)).collect();
        let r = extrapolate_ladder(&linear).unwrap();
        assert!((r.value - 3.5).abs() < 1e-13);
        assert!(r.error_estimate < 1e-12);

        let constant: Vec<(f64, f64)> = ladder.iter().map(|&l| (l, 7.25)).collect();
        let r = extrapolate_ladder(&constant).unwrap();
        assert_eq!(r.value, 7.25);
        assert_eq!(r.error_estimate, 0.0);
    }

    #[test]
    fn extrapolation_reproduces_zero_point_casimir_energy() {
        // three-point ladder {0.04, 0.02, 0.01} for (x=1, L=3), like pair
        let lams = [0.04, 0.02, 0.01];
        let diff = |lambda: f64| -> f64 {
            let spec = CutoffSpec::new(CutoffFamily::Exponential, vec![lambda]).unwrap();
            let zp = |l: f64| {
                regularized_zp_sum(l, BoundaryPair::Like, &spec)
                    .unwrap()
                    .value
            };
            zp(1.0) + zp(2.0) - 2.0 * zp(1.5)
        };
        let pts: Vec<(f64, f64)> = lams.iter().map(|&l| (l, diff(l))).collect();
        let r = extrapolate_ladder(&pts).unwrap();
        assert!(
            (r.value + PI / 144.0).abs() < 1e-6,
            "extrapolant {} vs {}",
            r.value,
            -PI / 144.0
        );
    }

    #[test]
    fn diverging_ladder_is_rejected() {
        let pts: Vec<(f64, f64)> = [0.08f64, 0.04, 0.02, 0.01, 0.005]
            .iter()
            .map(|&l| (l, l.powi(-3)))
            .collect();
        assert!(matches!(
            extrapolate_ladder(&pts),
            Err(Error::IllConditionedLadder)
        ));
    }

    #[test]
    fn ladder_input_validation() {
        assert!(extrapolate_ladder(&[(0.1, 1.0), (0.05, 1.0)]).is_err());
        assert!(extrapolate_ladder(&[(0.1, 1.0), (0.1, 1.0), (0.05, 1.0)]).is_err());
        assert!(extrapolate_ladder(&[(0.1, 1.0), (0.2, 1.0), (0.05, 1.0)]).is_err());
        assert!(CutoffSpec::new(CutoffFamily::Exponential, vec![]).is_err());
        assert!(CutoffSpec::new(CutoffFamily::Exponential, vec![0.1, 0.2]).is_err());
    }
}
