//! Diatomic molecule registry and conversion of dimensionless spectra to eV.
//!
//! A dimensionless energy `E` (in `hbar^2/(2 mu b^2)` units) converts to eV as
//!
//! ```text
//! E_eV = E * (hbar c)^2 / (2 mu c^2 b^2)
//! ```
//!
//! with `hbar c` in eV pm, `mu c^2` in eV and `b` in pm.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// 1 Hartree in eV (CODATA).
pub const HARTREE_TO_EV: f64 = 27.211386245988;

/// A diatomic species with its reduced mass in atomic mass units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Molecule {
    pub name: String,
    pub reduced_mass_amu: f64,
}

/// Physical constants used for the eV conversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitContext {
    /// `hbar c` in eV pm.
    pub hbar_c_ev_pm: f64,
    /// Rest energy of 1 amu in eV.
    pub amu_to_ev: f64,
}

impl Default for UnitContext {
    fn default() -> Self {
        Self {
            // 1973.29 eV Angstrom expressed per picometre.
            hbar_c_ev_pm: 197_329.0,
            // CODATA 2014 value; the reference spectra pin this to ~1e-5.
            amu_to_ev: 931.494_095_4e6,
        }
    }
}

/// Dimensionless energy to eV for a molecule at range `b` (in pm).
pub fn energy_to_ev(
    energy_dimensionless: f64,
    mol: &Molecule,
    b_pm: f64,
    ctx: &UnitContext,
) -> f64 {
    let mu_c2 = mol.reduced_mass_amu * ctx.amu_to_ev;
    energy_dimensionless * ctx.hbar_c_ev_pm * ctx.hbar_c_ev_pm / (2.0 * mu_c2 * b_pm * b_pm)
}

/// Immutable name -> molecule table, preloaded with the ten reference species
/// and overridable from a JSON file of `[{ "name", "reduced_mass_amu" }]`
/// records.
#[derive(Debug, Clone)]
pub struct MoleculeRegistry {
    entries: Vec<Molecule>,
}

const BUILTIN: &str = include_str!("../data/molecules.json");

impl MoleculeRegistry {
    pub fn builtin() -> Self {
        Self::from_json_str(BUILTIN).expect("builtin molecule table must parse")
    }

    pub fn from_json_str(json: &str) -> Result<Self> {
        let entries: Vec<Molecule> =
            serde_json::from_str(json).map_err(|e| Error::MoleculeData(e.to_string()))?;
        for m in &entries {
            if !(m.reduced_mass_amu > 0.0) {
                return Err(Error::MoleculeData(format!(
                    "molecule {:?} has non-positive reduced mass {}",
                    m.name, m.reduced_mass_amu
                )));
            }
        }
        let mut names: Vec<&str> = entries.iter().map(|m| m.name.as_str()).collect();
        names.sort_unstable();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MoleculeData("duplicate molecule names".into()));
        }
        Ok(Self { entries })
    }

    pub fn from_json_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::MoleculeData(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    pub fn lookup(&self, name: &str) -> Result<&Molecule> {
        self.entries.iter().find(|m| m.name == name).ok_or_else(|| Error::UnknownMolecule {
            name: name.to_string(),
            known: self.entries.iter().map(|m| m.name.clone()).collect(),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = &Molecule> {
        self.entries.iter()
    }
}
