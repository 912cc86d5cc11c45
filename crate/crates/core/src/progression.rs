//! Arithmetic-progression dissections `F(q) = Σ_j q^j F_j(q^m)` and the
//! restriction operator `R: Σ h(n) q^n ↦ Σ h(4n+1) q^n`.

use alloc::vec::Vec;
use core::fmt;

use crate::fps::{Coefficient, Series};

/// The exponents `residue + n·modulus`, `n ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Progression {
    residue: usize,
    modulus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProgressionError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("residue {residue} is not in [0, {modulus})")]
    ResidueOutOfRange { residue: usize, modulus: usize },
}

impl Progression {
    pub fn new(residue: usize, modulus: usize) -> Result<Self, ProgressionError> {
        if modulus == 0 {
            return Err(ProgressionError::ZeroModulus);
        }
        if residue >= modulus {
            return Err(ProgressionError::ResidueOutOfRange { residue, modulus });
        }
        Ok(Progression { residue, modulus })
    }

    pub fn residue(&self) -> usize {
        self.residue
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Members below `bound`, ascending.
    pub fn members(&self, bound: usize) -> impl Iterator<Item = usize> {
        (self.residue..bound).step_by(self.modulus)
    }

    /// Number of members below `bound`.
    pub fn count_below(&self, bound: usize) -> usize {
        bound.saturating_sub(self.residue).div_ceil(self.modulus)
    }

    /// Whether every member of `self` is a member of `coarser`.
    pub fn is_refinement_of(&self, coarser: &Progression) -> bool {
        self.modulus.is_multiple_of(coarser.modulus)
            && self.residue % coarser.modulus == coarser.residue
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}n+{}", self.modulus, self.residue)
    }
}

/// Component `F_j` of the `m`-dissection, known to `ceil((prec - j)/m)` terms.
pub fn component<C: Coefficient>(f: &Series<C>, m: usize, j: usize) -> Series<C> {
    assert!(m >= 1 && j < m, "component index out of range");
    Series::from_coeffs(f.coeffs().iter().skip(j).step_by(m).cloned().collect())
}

/// All `m` components `F_0 .. F_{m-1}` of `f = Σ_j q^j F_j(q^m)`.
pub fn dissect<C: Coefficient>(f: &Series<C>, m: usize) -> Vec<Series<C>> {
    assert!(m >= 1, "dissection modulus must be positive");
    (0..m).map(|j| component(f, m, j)).collect()
}

/// `Σ_j q^j F_j(q^m)`, at the precision the components determine.
pub fn reassemble<C: Coefficient>(parts: &[Series<C>]) -> Series<C> {
    let m = parts.len();
    let prec = parts
        .iter()
        .enumerate()
        .map(|(j, p)| p.prec() * m + j)
        .min()
        .unwrap_or(0);
    let mut coeffs = Vec::with_capacity(prec);
    for n in 0..prec {
        coeffs.push(parts[n % m].coeffs()[n / m].clone());
    }
    Series::from_coeffs(coeffs)
}

/// `Σ_{n≥0} h(4n+1) q^n`.
pub fn restrict_r<C: Coefficient>(f: &Series<C>) -> Series<C> {
    component(f, 4, 1)
}

/// `[coeff(f, r + n·m)]` for every member below the precision.
pub fn coeffs_on<C: Coefficient>(f: &Series<C>, p: Progression) -> Vec<C> {
    p.members(f.prec()).map(|n| f.coeffs()[n].clone()).collect()
}
