//! Exact integer linear algebra: normal forms, kernels, minors, and
//! unimodularity tests. Nothing in here touches floating point.

mod exact;
mod matrix;
mod normal_form;
mod subspace;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use exact::ExactInt;
pub(crate) use exact::{make_primitive, to_small};
pub use matrix::IntMatrix;
pub use normal_form::{hermite_rows, smith_form, SmithDecomposition};
pub use subspace::{Echelon, RationalSubspace};

use crate::util::Combinations;

/// Minor enumeration refuses matrices wider than this unless told otherwise.
pub const DEFAULT_MINOR_COLUMN_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not surjective over Z")]
    NotSurjective,
    #[error("matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("minor enumeration over {cols} columns exceeds the limit of {limit}")]
    TooLarge { cols: usize, limit: usize },
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.row_vecs();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Inverse of a square matrix with determinant ±1, read off from the
/// Hermite form of `[M | I]`.
pub fn inverse_unimodular(m: &IntMatrix) -> Option<IntMatrix> {
    if m.rows() != m.cols() || !det(m).abs().is_one() {
        return None;
    }
    let k = m.rows();
    let mut aug = IntMatrix::zeros(k, 2 * k);
    for i in 0..k {
        for j in 0..k {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, k + i, BigInt::one());
    }
    let h = hermite_rows(&aug);
    Some(h.select_columns(&(k..2 * k).collect::<Vec<_>>()))
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    let mut e = Echelon::<BigInt>::new(m.cols());
    for i in 0..m.rows() {
        e.insert(m.row(i)).expect("BigInt elimination cannot overflow");
    }
    e.rank()
}

pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    smith_form(m).invariant_factors()
}

/// True iff `A : Z^n -> Z^d` is onto, i.e. all `d` invariant factors are 1.
pub fn is_surjective_over_z(a: &IntMatrix) -> bool {
    let f = smith_invariants(a);
    f.len() == a.rows() && f.iter().all(One::is_one)
}

/// Saturated integer kernel `ker(A) ∩ Z^n`, one basis vector per column,
/// arranged so that the transpose is in reduced Hermite form.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let sd = smith_form(a);
    let r = sd.rank();
    let n = a.cols();
    let basis: Vec<usize> = (r..n).collect();
    let k = sd.v.select_columns(&basis);
    let h = hermite_rows(&k.transpose());
    if h.rows() == 0 {
        return IntMatrix::zeros(n, 0);
    }
    h.transpose()
}

/// Gale dual: an `n × (n−d)` matrix `B` whose columns generate `ker A`,
/// making `0 → Z^{n−d} → Z^n → Z^d → 0` exact.
pub fn kernel_basis(a: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    if !is_surjective_over_z(a) {
        return Err(LinalgError::NotSurjective);
    }
    Ok(integer_kernel(a))
}

/// A matrix whose rows span the saturated left kernel of `b`,
/// i.e. `A` with `A · B = 0` and `ker A = (Q-span of B) ∩ Z^n`.
pub fn cokernel_matrix(b: &IntMatrix) -> IntMatrix {
    let k = integer_kernel(&b.transpose());
    k.transpose()
}

fn check_width(cols: usize, limit: usize) -> Result<(), LinalgError> {
    if cols > limit {
        return Err(LinalgError::TooLarge { cols, limit });
    }
    Ok(())
}

/// All maximal minors lie in {−1, 0, 1}. Requires full row rank.
pub fn is_unimodular(a: &IntMatrix) -> Result<bool, LinalgError> {
    is_unimodular_with_limit(a, DEFAULT_MINOR_COLUMN_LIMIT)
}

pub fn is_unimodular_with_limit(a: &IntMatrix, limit: usize) -> Result<bool, LinalgError> {
    let r = rank(a);
    if r != a.rows() {
        return Err(LinalgError::RankDeficient { rank: r, rows: a.rows() });
    }
    check_width(a.cols(), limit)?;
    for cols in Combinations::new(a.cols(), a.rows()) {
        if det(&a.select_columns(&cols)).abs() > BigInt::one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every square submatrix has determinant in {−1, 0, 1}.
pub fn is_totally_unimodular(c: &IntMatrix) -> Result<bool, LinalgError> {
    check_width(c.cols().max(c.rows()), DEFAULT_MINOR_COLUMN_LIMIT)?;
    if c.max_abs_entry() > BigInt::one() {
        return Ok(false);
    }
    for k in 2..=c.rows().min(c.cols()) {
        for rows in Combinations::new(c.rows(), k) {
            let sub = c.select_rows(&rows);
            for cols in Combinations::new(c.cols(), k) {
                if det(&sub.select_columns(&cols)).abs() > BigInt::one() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Membership of `v` in the column lattice of `b`.
pub fn lattice_contains(b: &IntMatrix, v: &[BigInt]) -> Result<bool, LinalgError> {
    if v.len() != b.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: b.rows(),
            found: v.len(),
        });
    }
    let h = hermite_rows(&b.transpose());
    Ok(reduce_by_hermite(&h, v))
}

pub(crate) fn reduce_by_hermite(h: &IntMatrix, v: &[BigInt]) -> bool {
    let mut w = v.to_vec();
    for (i, p) in normal_form::pivot_columns(h).into_iter().enumerate() {
        let pivot = h.get(i, p);
        let (q, r) = w[p].div_rem(pivot);
        if !r.is_zero() {
            return false;
        }
        if !q.is_zero() {
            for (x, y) in w.iter_mut().zip(h.row(i)) {
                *x -= &q * y;
            }
        }
    }
    w.iter().all(Zero::is_zero)
}

/// Column lattices of `b1` and `b2` coincide.
pub fn lattices_equal(b1: &IntMatrix, b2: &IntMatrix) -> bool {
    b1.rows() == b2.rows() && hermite_rows(&b1.transpose()) == hermite_rows(&b2.transpose())
}

/// `true` when every entry is in {−1, 0, 1} and the matrix is square with det ±1
/// and exactly one nonzero per row and column.
pub fn is_signed_permutation(d: &IntMatrix) -> bool {
    if d.rows() != d.cols() {
        return false;
    }
    let n = d.rows();
    let mut col_seen = alloc::vec![false; n];
    for i in 0..n {
        let nz: Vec<usize> = (0..n).filter(|&j| !d.get(i, j).is_zero()).collect();
        if nz.len() != 1 || !d.get(i, nz[0]).abs().is_one() || col_seen[nz[0]] {
            return false;
        }
        col_seen[nz[0]] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn amsurf(m: usize) -> IntMatrix {
        // rows e_i - e_{m+1}
        let mut a = IntMatrix::zeros(m, m + 1);
        for i in 0..m {
            a.set(i, i, BigInt::one());
            a.set(i, m, BigInt::from(-1));
        }
        a
    }

    #[test]
    fn surjectivity() {
        assert!(is_surjective_over_z(&IntMatrix::from_array([[1, 1, 1]])));
        assert!(!is_surjective_over_z(&IntMatrix::from_array([[2]])));
        assert!(is_surjective_over_z(&amsurf(3)));
        assert!(!is_surjective_over_z(&IntMatrix::from_array([[1, 1], [1, 1]])));
        assert!(is_surjective_over_z(&IntMatrix::zeros(0, 3)));
    }

    #[test]
    fn gale_dual_of_all_ones() {
        let a = IntMatrix::from_array([[1, 1, 1]]);
        let b = kernel_basis(&a).unwrap();
        assert_eq!(b, IntMatrix::from_array([[1, 0], [0, 1], [-1, -1]]));
        assert!(a.mul(&b).unwrap().is_zero());
        let expected = IntMatrix::from_array([[1, 0], [0, 1], [-1, -1]]);
        assert!(lattices_equal(&b, &expected));
        assert!(smith_invariants(&b).iter().all(One::is_one));
    }

    #[test]
    fn gale_dual_of_identity_is_empty() {
        let b = kernel_basis(&IntMatrix::identity(3)).unwrap();
        assert_eq!((b.rows(), b.cols()), (3, 0));
    }

    #[test]
    fn gale_dual_of_surface_chain() {
        let b = kernel_basis(&amsurf(2)).unwrap();
        assert!(lattices_equal(&b, &IntMatrix::from_array([[1], [1], [1]])));
    }

    #[test]
    fn kernel_requires_surjectivity() {
        assert_eq!(
            kernel_basis(&IntMatrix::from_array([[2, 0]])),
            Err(LinalgError::NotSurjective)
        );
    }

    #[test]
    fn unimodularity() {
        assert!(is_unimodular(&IntMatrix::from_array([[1, 1, 1]])).unwrap());
        assert!(!is_unimodular(&IntMatrix::from_array([[1, 1, 0], [0, 2, 1]])).unwrap());
        assert_eq!(
            is_unimodular(&IntMatrix::from_array([[1, 1], [2, 2]])),
            Err(LinalgError::RankDeficient { rank: 1, rows: 2 })
        );
        let wide = IntMatrix::from_rows(&[alloc::vec![1i64; 30]], 30).unwrap();
        assert!(matches!(is_unimodular(&wide), Err(LinalgError::TooLarge { .. })));
        assert!(is_unimodular_with_limit(&wide, 40).unwrap());
    }

    #[test]
    fn total_unimodularity() {
        // signed incidence matrix of the 4-cycle
        let c4 = IntMatrix::from_array([
            [1, 0, 0, -1],
            [-1, 1, 0, 0],
            [0, -1, 1, 0],
            [0, 0, -1, 1],
        ]);
        assert!(is_totally_unimodular(&c4).unwrap());
        assert!(!is_totally_unimodular(&IntMatrix::from_array([[1, 1], [-1, 1]])).unwrap());
    }

    #[test]
    fn lattice_membership() {
        let b = kernel_basis(&IntMatrix::from_array([[1, 1, 1]])).unwrap();
        assert!(lattice_contains(&b, &big(&[1, 0, -1])).unwrap());
        assert!(!lattice_contains(&b, &big(&[1, 0, 0])).unwrap());
        assert!(lattice_contains(&b, &big(&[0, 0, 0])).unwrap());
        assert!(lattice_contains(&b, &big(&[0, 0])).is_err());
        let doubled = IntMatrix::from_array([[2], [2]]);
        assert!(!lattice_contains(&doubled, &big(&[1, 1])).unwrap());
        assert!(lattice_contains(&doubled, &big(&[4, 4])).unwrap());
    }

    #[test]
    fn lattice_equality() {
        let b = IntMatrix::from_array([[1, 0], [0, 1], [-1, -1]]);
        assert!(lattices_equal(&b, &b));
        let doubled = IntMatrix::from_array([[2, 0], [0, 1], [-2, -1]]);
        assert!(!lattices_equal(&b, &doubled));
        let u = IntMatrix::from_array([[2, 1], [1, 1]]);
        assert!(lattices_equal(&b, &b.mul(&u).unwrap()));
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMatrix::from_array([[2, 1], [7, 4]]);
        let inv = inverse_unimodular(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(2));
        assert!(inverse_unimodular(&IntMatrix::from_array([[2, 0], [0, 1]])).is_none());
        assert_eq!(inverse_unimodular(&IntMatrix::zeros(0, 0)), Some(IntMatrix::zeros(0, 0)));
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&IntMatrix::from_array([[2, 1], [7, 4]])), BigInt::from(1));
        assert_eq!(
            det(&IntMatrix::from_array([[0, 1, 2], [3, 4, 5], [6, 7, 9]])),
            BigInt::from(-3)
        );
        assert_eq!(det(&IntMatrix::zeros(0, 0)), BigInt::one());
    }
}
