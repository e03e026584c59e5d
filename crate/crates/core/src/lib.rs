//! Bound states of the Manning-Rosen potential.
//!
//! The potential, in units of `hbar^2 / (2 mu b^2)` for energy and with
//! lengths measured in the same unit as the range parameter `b`, is
//!
//! ```text
//! V(r) = alpha(alpha-1) / (e^{r/b} - 1)^2 - A / (e^{r/b} - 1)
//! ```
//!
//! For `l != 0` the centrifugal term `l(l+1)/r^2` is replaced by an
//! exponential approximation so that the radial equation becomes solvable in
//! closed form. This crate provides:
//!
//! * the closed-form energy eigenvalues and normalized radial wave functions
//!   for the usual, improved and Wei-Dong centrifugal approximations,
//! * special cases (s-wave branches, Hulthen reduction, Coulomb limit),
//! * an independent Numerov eigensolver for the radial equation with the
//!   exact centrifugal term, plus a residual diagnostic,
//! * a diatomic molecule registry for converting dimensionless spectra to eV,
//! * data-parallel batch drivers (rayon, behind the `parallel` feature).

// Validation guards use `!(x > 0.0)` rather than `x <= 0.0` so that NaN
// inputs are rejected instead of slipping through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx_scheme;
pub mod batch;
pub mod error;
pub mod molecules;
pub mod numerov;
pub mod potential;
pub mod quadrature;
pub mod special;
pub mod spectrum;
pub mod wavefunction;

pub use approx_scheme::{ApproxScheme, SchemeVariant};
pub use error::{Error, Result};
pub use molecules::{Molecule, MoleculeRegistry, UnitContext};
pub use numerov::{NumericalEigenvalue, SolverConfig};
pub use potential::{PotentialParams, QuantumState};
pub use spectrum::SpectrumResult;
pub use wavefunction::WavefunctionSpec;
