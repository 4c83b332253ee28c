//! Recognizing products of minimal nilpotent orbit closures of type `A`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{HypertoricDatum, HypertoricError};
use crate::linalg::{lattice_contains, lattices_equal, IntMatrix};
use crate::matroid::Matroid;
use crate::util::UnionFind;

impl HypertoricDatum {
    /// `(Im B)₂`: lattice vectors of the form `±e_i ± e_j`, `i < j`.
    pub fn degree_two_vectors(&self) -> Result<Vec<Vec<BigInt>>, HypertoricError> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = alloc::vec![BigInt::from(0); n];
                    v[i] = BigInt::from(si);
                    v[j] = BigInt::from(sj);
                    if lattice_contains(&self.b, &v)? {
                        out.push(v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// When `Im B` is generated by `(Im B)₂`, returns the multiset
    /// `{ℓ₁, …, ℓ_s}` (descending, zeros omitted) with
    /// `Y ≅ Ômin_{A_{ℓ₁}} × ⋯ × Ômin_{A_{ℓ_s}}`; otherwise `None`.
    pub fn degree_two_test(&self) -> Result<Option<Vec<usize>>, HypertoricError> {
        let n = self.n();
        let two = self.degree_two_vectors()?;
        let generated = IntMatrix::from_columns(&two, n)?;
        if !lattices_equal(&self.b, &generated) {
            return Ok(None);
        }
        let mut uf = UnionFind::new(n);
        for v in &two {
            let support: Vec<usize> = (0..n).filter(|&i| v[i] != BigInt::from(0)).collect();
            uf.union(support[0], support[1]);
        }
        let blocks = uf.blocks();

        // M(A) must match the block matrix of all-ones rows
        let mut block_matrix = IntMatrix::zeros(0, 0);
        for b in &blocks {
            let row = alloc::vec![1i64; b.len()];
            let ones = IntMatrix::from_rows(&[row], b.len())?;
            block_matrix = block_matrix.direct_sum(&ones);
        }
        let expected = Matroid::from_matrix(&block_matrix)?;
        if self.matroid()?.is_isomorphic(&expected)?.is_none() {
            return Err(HypertoricError::VerificationFailed(
                "degree-two lattice does not match a block all-ones matrix",
            ));
        }
        let mut ells: Vec<usize> = blocks
            .iter()
            .map(|b| b.len() - 1)
            .filter(|&l| l > 0)
            .collect();
        ells.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Some(ells))
    }
}
