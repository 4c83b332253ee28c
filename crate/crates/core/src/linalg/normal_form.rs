//! Smith and Hermite normal forms over the integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `U · M · V = S` with `S` diagonal, nonnegative, and each diagonal entry
/// dividing the next. `U` and `V` are unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `S` (length `min(rows, cols)`), including zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s.get(i, i).clone()).collect()
    }

    /// The nonzero invariant factors.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Position of the smallest nonzero |entry| in the lower-right block starting at `(t, t)`.
fn smallest_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = s.get(i, j);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().map_or(true, |(_, _, b)| a < *b) {
                let unit = a.is_one();
                best = Some((i, j, a));
                if unit {
                    let (bi, bj, _) = best.unwrap();
                    return Some((bi, bj));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_pivot(&s, t) else {
                return finish(s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_columns(t, pj);
            v.swap_columns(t, pj);

            let pivot = s.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let x = s.get(i, t).clone();
                if x.is_zero() {
                    continue;
                }
                let q = -x.div_floor(&pivot);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !s.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let x = s.get(t, j).clone();
                if x.is_zero() {
                    continue;
                }
                let q = -x.div_floor(&pivot);
                s.add_column_multiple(j, t, &q);
                v.add_column_multiple(j, t, &q);
                if !s.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(s, u, v)
}

fn finish(s: IntMatrix, u: IntMatrix, v: IntMatrix) -> SmithDecomposition {
    SmithDecomposition { s, u, v }
}

/// Row-style reduced Hermite normal form of the row lattice of `m`.
///
/// Zero rows are dropped, pivots are positive and strictly increasing in
/// column, and entries above a pivot lie in `[0, pivot)`. Two matrices have
/// the same row lattice iff their forms are identical.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    let (rows, cols) = (h.rows(), h.cols());
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c at or below pr
            let mut best: Option<(usize, BigInt)> = None;
            for i in pr..rows {
                let x = h.get(i, c);
                if !x.is_zero() {
                    let a = x.abs();
                    if best.as_ref().map_or(true, |(_, b)| a < *b) {
                        best = Some((i, a));
                    }
                }
            }
            let Some((bi, _)) = best else { break };
            h.swap_rows(pr, bi);
            let pivot = h.get(pr, c).clone();
            let mut done = true;
            for i in pr + 1..rows {
                let x = h.get(i, c).clone();
                if x.is_zero() {
                    continue;
                }
                let q = -x.div_floor(&pivot);
                h.add_row_multiple(i, pr, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                if h.get(pr, c).is_negative() {
                    h.negate_row(pr);
                }
                pivots.push((pr, c));
                pr += 1;
                break;
            }
        }
    }
    // reduce entries above each pivot
    for &(r, c) in &pivots {
        let pivot = h.get(r, c).clone();
        for i in 0..r {
            let x = h.get(i, c).clone();
            let q = -x.div_floor(&pivot);
            h.add_row_multiple(i, r, &q);
        }
    }
    h.select_rows(&(0..pr).collect::<Vec<_>>())
}

/// Pivot column of each row of a matrix already in row echelon form.
pub(crate) fn pivot_columns(h: &IntMatrix) -> Vec<usize> {
    (0..h.rows())
        .map(|i| h.row(i).iter().position(|x| !x.is_zero()).unwrap_or(h.cols()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let sd = smith_form(m);
        assert_eq!(sd.u.mul(m).unwrap().mul(&sd.v).unwrap(), sd.s);
        let diag = sd.diagonal();
        for i in 0..sd.s.rows() {
            for j in 0..sd.s.cols() {
                if i != j {
                    assert!(sd.s.get(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            } else {
                assert!(w[1].is_zero());
            }
        }
        assert!(super::super::det(&sd.u).abs().is_one());
        assert!(super::super::det(&sd.v).abs().is_one());
        sd
    }

    #[test]
    fn identity_is_its_own_smith_form() {
        let sd = check(&IntMatrix::identity(3));
        assert_eq!(sd.s, IntMatrix::identity(3));
        assert_eq!(sd.u, IntMatrix::identity(3));
        assert_eq!(sd.v, IntMatrix::identity(3));
    }

    #[test]
    fn coprime_diagonal_collapses() {
        let sd = check(&IntMatrix::from_array([[2, 0], [0, 3]]));
        assert_eq!(sd.diagonal(), [BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn all_ones_row() {
        let sd = check(&IntMatrix::from_array([[1, 1, 1]]));
        assert_eq!(sd.s, IntMatrix::from_array([[1, 0, 0]]));
    }

    #[test]
    fn rank_deficient_and_empty() {
        let sd = check(&IntMatrix::from_array([[2, 4], [1, 2]]));
        assert_eq!(sd.diagonal(), [BigInt::from(1), BigInt::zero()]);
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(2, 0));
        check(&IntMatrix::zeros(2, 2));
    }

    #[test]
    fn hermite_is_canonical_under_row_mixing() {
        let m = IntMatrix::from_array([[1, 0, -1], [0, 1, -1]]);
        let mixed = IntMatrix::from_array([[1, 1, -2], [2, 3, -5], [3, 4, -7]]);
        assert_eq!(hermite_rows(&m), hermite_rows(&mixed));
        assert_eq!(hermite_rows(&m), m);
    }

    #[test]
    fn hermite_reduces_above_pivots() {
        let h = hermite_rows(&IntMatrix::from_array([[1, 5], [0, 3]]));
        assert_eq!(h, IntMatrix::from_array([[1, 2], [0, 3]]));
    }
}
