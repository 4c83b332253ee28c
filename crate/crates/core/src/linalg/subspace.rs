use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::exact::{cross, leading_index, make_primitive, normalize_sign, ExactInt};
use super::LinalgError;

/// Fraction-free reduced echelon basis over the rationals.
///
/// Each row is the corresponding row of the rational RREF scaled to a
/// primitive integer vector with positive pivot, so the row list is a
/// canonical description of the span. Every operation returns `None` when an
/// `i64` instantiation overflows; callers retry with `BigInt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Echelon<T> {
    dim: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: ExactInt> Echelon<T> {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Eliminates the pivot columns of `v`. The result is primitive and is
    /// zero exactly when `v` lies in the span.
    pub fn reduce(&self, v: &[T]) -> Option<Vec<T>> {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let g = row[p].gcd(&w[p]);
            let a = row[p].div_floor(&g);
            let b = w[p].div_floor(&g);
            for (x, r) in w.iter_mut().zip(row) {
                *x = cross(&a, x, &b, r)?;
            }
        }
        make_primitive(&mut w);
        Some(w)
    }

    pub fn contains(&self, v: &[T]) -> Option<bool> {
        Some(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &[T]) -> Option<bool> {
        let mut w = self.reduce(v)?;
        let Some(p) = leading_index(&w) else {
            return Some(false);
        };
        normalize_sign(&mut w);
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let g = w[p].gcd(&row[p]);
            let a = w[p].div_floor(&g);
            let b = row[p].div_floor(&g);
            for (x, r) in row.iter_mut().zip(&w) {
                *x = cross(&a, x, &b, r)?;
            }
            make_primitive(row);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, w);
        self.pivots.insert(at, p);
        Some(true)
    }

    /// Basis of `{ y : y · v = 0 for every v in the span }`, canonicalized.
    pub fn orthogonal_complement(&self) -> Option<Echelon<T>> {
        let mut out = Echelon::new(self.dim);
        let mut is_pivot = alloc::vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.dim).filter(|&f| !is_pivot[f]) {
            let mut l = T::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    l = l.lcm(&row[p]);
                }
            }
            let mut y = alloc::vec![T::zero(); self.dim];
            y[f] = l.clone();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    let scale = l.div_floor(&row[p]);
                    y[p] = -(row[f].checked_mul(&scale)?);
                }
            }
            out.insert(&y)?;
        }
        Some(out)
    }

    pub fn to_big(&self) -> Echelon<BigInt> {
        Echelon {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(ExactInt::to_big).collect())
                .collect(),
            pivots: self.pivots.clone(),
        }
    }
}

/// A rational subspace of `Q^n` stored by its canonical integer basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSubspace {
    inner: Echelon<BigInt>,
}

impl RationalSubspace {
    pub fn zero(ambient_dim: usize) -> Self {
        RationalSubspace {
            inner: Echelon::new(ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut s = Self::zero(ambient_dim);
        for i in 0..ambient_dim {
            let mut e = alloc::vec![BigInt::zero(); ambient_dim];
            e[i] = BigInt::one();
            s.inner.insert(&e);
        }
        s
    }

    pub fn span<'a, I>(ambient_dim: usize, generators: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = &'a [BigInt]>,
    {
        let mut s = Self::zero(ambient_dim);
        for g in generators {
            s.add(g)?;
        }
        Ok(s)
    }

    /// Adds a generator; returns whether the dimension grew.
    pub fn add(&mut self, v: &[BigInt]) -> Result<bool, LinalgError> {
        self.check_len(v)?;
        Ok(self.inner.insert(v).expect("BigInt elimination cannot overflow"))
    }

    pub fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.inner.rank()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        self.inner.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.inner.pivots()
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool, LinalgError> {
        self.check_len(v)?;
        Ok(self.inner.contains(v).expect("BigInt elimination cannot overflow"))
    }

    pub fn is_subspace_of(&self, other: &RationalSubspace) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.basis().iter().all(|b| other.contains(b).unwrap_or(false))
    }

    pub fn orthogonal_complement(&self) -> RationalSubspace {
        RationalSubspace {
            inner: self
                .inner
                .orthogonal_complement()
                .expect("BigInt elimination cannot overflow"),
        }
    }

    pub fn sum(&self, other: &RationalSubspace) -> Result<RationalSubspace, LinalgError> {
        let mut s = self.clone();
        for b in other.basis() {
            s.add(b)?;
        }
        Ok(s)
    }

    pub fn intersection(&self, other: &RationalSubspace) -> Result<RationalSubspace, LinalgError> {
        let perp = self
            .orthogonal_complement()
            .sum(&other.orthogonal_complement())?;
        Ok(perp.orthogonal_complement())
    }

    fn check_len(&self, v: &[BigInt]) -> Result<(), LinalgError> {
        if v.len() != self.ambient_dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.len(),
            });
        }
        Ok(())
    }
}
