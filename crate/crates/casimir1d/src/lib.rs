//! One-dimensional Casimir thermodynamics for a partitioned box.
//!
//! A partition placed at x inside a box of length L changes the normal-mode
//! structure of the wave field; the resulting shifts in energy, Helmholtz
//! free energy, force and entropy relative to the centered partition are
//! Casimir quantities. This crate evaluates them for like and unlike
//! boundary pairs (Dirichlet/Neumann combinations) under the zero-point,
//! Rayleigh-Jeans and Planck-with-zero-point spectra, and recovers the
//! Planck spectrum from a minimum-ensemble-Casimir-energy principle over a
//! two-parameter Wien-compatible family.
//!
//! # Units
//!
//! All quantities use natural units hbar = c = k_B = 1. To restore
//! dimensional constants with lengths measured in a unit l0: multiply
//! energies by hbar c / l0, forces by hbar c / l0^2, entropies by k_B, and
//! convert a physical temperature T_phys to the dimensionless
//! T = k_B T_phys l0 / (hbar c).
//!
//! # Layout
//!
//! [`spectra`] holds the closed-form per-mode laws; [`modesum`] the
//! cutoff-regularized and convergent mode sums plus the Richardson-style
//! ladder extrapolation; [`casimir`] the partitioned-cavity observables
//! with their ladder oracles; [`maxent`] the spectrum-selection functional
//! and its minimizer; [`figures`] and [`output`] the curve generation and
//! serialization behind the CLI; [`verify`] the invariant suite.

pub mod casimir;
pub mod error;
pub mod figures;
pub mod maxent;
pub mod modesum;
pub mod output;
pub mod spectra;
pub mod verify;

mod quad;

pub use casimir::{CasimirReport, Cavity};
pub use error::{Error, Result};
pub use modesum::{BoundaryPair, CutoffFamily, CutoffSpec, RegularizedValue, ThermalKernel};
pub use spectra::{ModePoint, SpectrumModel};
