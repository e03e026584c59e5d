//! Data-parallel batch drivers for spectrum sweeps, eigenvalue solves and
//! normalization checks.
//!
//! With the `parallel` feature (default) the plural entry points fan out over
//! rayon; the `*_seq` variants are always available and are what the
//! benchmarks compare against. Results come back in input order either way.

use crate::approx_scheme::ApproxScheme;
use crate::error::Result;
use crate::numerov::{self, NumericalEigenvalue, SolverConfig};
use crate::potential::{PotentialParams, QuantumState};
use crate::spectrum::{self, SpectrumResult};
use crate::wavefunction::WavefunctionSpec;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// One closed-form energy evaluation request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyCell {
    pub params: PotentialParams,
    pub scheme: ApproxScheme,
    pub state: QuantumState,
}

pub fn energies_seq(cells: &[EnergyCell]) -> Vec<SpectrumResult> {
    cells.iter().map(|c| spectrum::energy(&c.params, &c.scheme, &c.state)).collect()
}

#[cfg(feature = "parallel")]
pub fn energies(cells: &[EnergyCell]) -> Vec<SpectrumResult> {
    cells.par_iter().map(|c| spectrum::energy(&c.params, &c.scheme, &c.state)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn energies(cells: &[EnergyCell]) -> Vec<SpectrumResult> {
    energies_seq(cells)
}

/// One Numerov eigenvalue solve request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenvalueJob {
    pub params: PotentialParams,
    pub l: u32,
    pub target_nodes: u32,
    pub cfg: SolverConfig,
}

pub fn eigenvalues_seq(jobs: &[EigenvalueJob]) -> Vec<Result<NumericalEigenvalue>> {
    jobs.iter()
        .map(|j| numerov::find_eigenvalue(&j.params, j.l, j.target_nodes, &j.cfg))
        .collect()
}

#[cfg(feature = "parallel")]
pub fn eigenvalues(jobs: &[EigenvalueJob]) -> Vec<Result<NumericalEigenvalue>> {
    jobs.par_iter()
        .map(|j| numerov::find_eigenvalue(&j.params, j.l, j.target_nodes, &j.cfg))
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub fn eigenvalues(jobs: &[EigenvalueJob]) -> Vec<Result<NumericalEigenvalue>> {
    eigenvalues_seq(jobs)
}

pub fn norm_quadratures_seq(specs: &[WavefunctionSpec]) -> Vec<f64> {
    specs.iter().map(|s| s.norm_quadrature()).collect()
}

#[cfg(feature = "parallel")]
pub fn norm_quadratures(specs: &[WavefunctionSpec]) -> Vec<f64> {
    specs.par_iter().map(|s| s.norm_quadrature()).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn norm_quadratures(specs: &[WavefunctionSpec]) -> Vec<f64> {
    norm_quadratures_seq(specs)
}
