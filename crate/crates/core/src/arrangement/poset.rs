//! Intersection poset and Möbius function.
//!
//! Flats are generated rank by rank: each cover of a flat `Y` is the
//! closure of `Y ∩ H` for a hyperplane `H ⊉ Y`, and the covers of `Y`
//! partition the hyperplanes not containing it. Möbius values come from
//! Weisner's identity: for any hyperplane `h ⊇ X`,
//! `μ(X) = −Σ μ(Y)` over the flats `Y` covered by `X` with `h ⊉ Y`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Arrangement, ArrangementError, CharPoly};
use crate::linalg::{to_small, Echelon, ExactInt, RationalSubspace};
use crate::util::bits128;

/// Default cap on the number of flats before giving up on the poset.
pub const DEFAULT_FLAT_CAP: usize = 2_000_000;

/// One element of `L(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Bitset of the hyperplanes containing the flat.
    pub mask: u128,
    /// Codimension.
    pub rank: usize,
    pub dim: usize,
    pub mobius: i64,
}

impl Flat {
    pub fn hyperplanes(&self) -> Vec<usize> {
        bits128(self.mask).collect()
    }
}

/// Flats of an arrangement ordered by rank and then by hyperplane bitset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoset {
    ambient_dim: usize,
    flats: Vec<Flat>,
}

impl IntersectionPoset {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// `Σ μ(x) t^{dim x}`.
    pub fn char_poly(&self) -> CharPoly {
        let mut c = alloc::vec![BigInt::from(0); self.ambient_dim + 1];
        for f in &self.flats {
            c[f.dim] += BigInt::from(f.mobius);
        }
        CharPoly::from_coefficients(c)
    }

    /// Number of flats of each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.flats.iter().map(|f| f.rank).max().unwrap_or(0);
        let mut out = alloc::vec![0; top + 1];
        for f in &self.flats {
            out[f.rank] += 1;
        }
        out
    }

    /// The subspace `x ⊆ R^d` of a flat.
    pub fn subspace(&self, arr: &Arrangement, flat: &Flat) -> RationalSubspace {
        let normals = arr.normals();
        let span = RationalSubspace::span(
            self.ambient_dim,
            bits128(flat.mask).map(|h| normals[h].as_slice()),
        )
        .expect("normals have the ambient length");
        span.orthogonal_complement()
    }
}

struct Level<T> {
    flats: Vec<(u128, Echelon<T>)>,
}

impl Arrangement {
    pub fn intersection_poset(&self) -> Result<IntersectionPoset, ArrangementError> {
        self.intersection_poset_with_cap(DEFAULT_FLAT_CAP)
    }

    pub fn intersection_poset_with_cap(
        &self,
        cap: usize,
    ) -> Result<IntersectionPoset, ArrangementError> {
        if self.len() > 128 {
            return Err(ArrangementError::TooManyHyperplanes {
                count: self.len(),
                limit: 128,
            });
        }
        let small: Option<Vec<Vec<i64>>> = self.normals().iter().map(|n| to_small(n)).collect();
        if let Some(small) = small {
            if let Some(p) = build::<i64>(self.dim(), &small, cap)? {
                return Ok(p);
            }
        }
        Ok(build::<BigInt>(self.dim(), self.normals(), cap)?.expect("BigInt cannot overflow"))
    }
}

/// `Ok(None)` when the `i64` instantiation overflows.
fn build<T: ExactInt>(
    dim: usize,
    normals: &[Vec<T>],
    cap: usize,
) -> Result<Option<IntersectionPoset>, ArrangementError> {
    let m = normals.len();
    let mut flats = alloc::vec![Flat {
        mask: 0,
        rank: 0,
        dim,
        mobius: 1,
    }];
    let mut level = Level {
        flats: alloc::vec![(0u128, Echelon::<T>::new(dim))],
    };
    let mut level_mu: Vec<i64> = alloc::vec![1];
    let mut rank = 0;
    while !level.flats.is_empty() {
        let mut index: BTreeMap<u128, usize> = BTreeMap::new();
        let mut next: Vec<(u128, Echelon<T>)> = Vec::new();
        let mut acc: Vec<i64> = Vec::new();
        for (y, (ymask, ech)) in level.flats.iter().enumerate() {
            let mut covered = *ymask;
            for h in 0..m {
                if covered >> h & 1 == 1 {
                    continue;
                }
                let mut e = ech.clone();
                let Some(_) = e.insert(&normals[h]) else {
                    return Ok(None);
                };
                let mut xmask = *ymask | 1u128 << h;
                for (h2, normal) in normals.iter().enumerate() {
                    if xmask >> h2 & 1 == 0 {
                        match e.contains(normal) {
                            Some(true) => xmask |= 1u128 << h2,
                            Some(false) => {}
                            None => return Ok(None),
                        }
                    }
                }
                covered |= xmask;
                let slot = *index.entry(xmask).or_insert_with(|| {
                    next.push((xmask, e));
                    acc.push(0);
                    next.len() - 1
                });
                let h0 = xmask.trailing_zeros();
                if ymask >> h0 & 1 == 0 {
                    acc[slot] = acc[slot]
                        .checked_add(level_mu[y])
                        .ok_or(ArrangementError::Overflow)?;
                }
            }
        }
        rank += 1;
        // order the new level by bitset
        let mut order: Vec<usize> = (0..next.len()).collect();
        order.sort_by_key(|&i| next[i].0);
        let mut sorted = Vec::with_capacity(next.len());
        let mut mu = Vec::with_capacity(next.len());
        let mut slots: Vec<Option<(u128, Echelon<T>)>> = next.into_iter().map(Some).collect();
        for i in order {
            let (mask, e) = slots[i].take().expect("each slot taken once");
            let value = acc[i].checked_neg().ok_or(ArrangementError::Overflow)?;
            flats.push(Flat {
                mask,
                rank,
                dim: dim - rank,
                mobius: value,
            });
            mu.push(value);
            sorted.push((mask, e));
        }
        if flats.len() > cap {
            return Err(ArrangementError::TooManyFlats { cap });
        }
        level = Level { flats: sorted };
        level_mu = mu;
    }
    Ok(Some(IntersectionPoset {
        ambient_dim: dim,
        flats,
    }))
}
