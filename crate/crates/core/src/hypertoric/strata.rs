//! Flat stratification and codimension-two slices.

use alloc::vec::Vec;

use super::{HypertoricDatum, HypertoricError};
use crate::linalg::{cokernel_matrix, integer_kernel};
use crate::util::bits;

/// A flat `F` of the multi-arrangement `H_B` together with its stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatStratum {
    /// Indices into the reduced `B`.
    pub flat: Vec<usize>,
    /// Codimension of `H_F`.
    pub rank: usize,
    /// `2(n − d − rank F)`.
    pub stratum_dim: usize,
    /// `Y(A_F, 0)`, the normal slice to the stratum.
    pub slice: HypertoricDatum,
}

/// A parallel class with `ℓ ≥ 2`; its stratum has codimension two and
/// transversal slice of type `A_{ℓ−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codim2Slice {
    pub class_index: usize,
    pub flat: Vec<usize>,
    pub multiplicity: usize,
}

impl Codim2Slice {
    /// `m` in the slice type `A_m`.
    pub fn slice_type(&self) -> usize {
        self.multiplicity - 1
    }
}

impl HypertoricDatum {
    /// All flats of `H_B`, by rank and then by index set.
    pub fn flats(&self) -> Result<Vec<FlatStratum>, HypertoricError> {
        let m = self.gale_matroid()?;
        let k = self.b.cols();
        m.flats()
            .into_iter()
            .map(|mask| {
                let flat: Vec<usize> = bits(mask).collect();
                let rank = m.rank_of(mask);
                Ok(FlatStratum {
                    slice: self.slice(&flat),
                    stratum_dim: 2 * (k - rank),
                    rank,
                    flat,
                })
            })
            .collect()
    }

    /// Slice datum of the flat `F`: `B_F` is the saturation of the
    /// projection of `Im B` onto the coordinates in `F`.
    pub fn slice(&self, flat: &[usize]) -> HypertoricDatum {
        let bf = self.b.select_rows(flat);
        let af = cokernel_matrix(&bf);
        let kernel = integer_kernel(&af);
        HypertoricDatum::from_pair(af, kernel)
    }

    pub fn codim2_slices(&self) -> Vec<Codim2Slice> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.multiplicity() >= 2)
            .map(|(k, c)| Codim2Slice {
                class_index: k,
                flat: c.members.clone(),
                multiplicity: c.multiplicity(),
            })
            .collect()
    }
}
