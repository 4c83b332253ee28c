//! The affine hypertoric variety `Y(A, 0)` through its combinatorial data.
//!
//! A [`HypertoricDatum`] holds a unimodular `A` (d × n) together with a
//! Gale dual `B` (n × (n−d)), the reduced pair obtained by discarding zero
//! rows of `B`, and the grouping of the remaining rows into parallel
//! classes up to sign.

mod nilpotent;
mod ring;
mod strata;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arrangement::{Arrangement, ArrangementError};
use crate::graph::{Graph, GraphError};
use crate::linalg::{
    self, cokernel_matrix, integer_kernel, is_surjective_over_z, is_unimodular, IntMatrix,
    LinalgError,
};
use crate::matroid::{Matroid, MatroidError};

pub use ring::{poisson_bracket, BracketTerm, RingGenerator, RingGenerators, RingWarning};
pub use strata::{Codim2Slice, FlatStratum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypertoricError {
    #[error("A is not surjective over Z")]
    NotSurjective,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("B does not have full column rank")]
    NotFullColumnRank,
    #[error("the cokernel of B is not free")]
    CokernelNotFree,
    #[error("generator is neither z_k w_k nor of the form f_beta")]
    UnsupportedGeneratorForm,
    #[error("internal consistency check failed: {0}")]
    VerificationFailed(&'static str),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u128 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// Rows of the reduced `B` that agree up to sign. `direction` is primitive
/// with first nonzero entry positive; row `members[i]` equals
/// `signs[i] * direction`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParallelClass {
    pub direction: Vec<BigInt>,
    pub members: Vec<usize>,
    pub signs: Vec<i8>,
}

impl ParallelClass {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

/// `𝔖_{ℓ₁} × ⋯ × 𝔖_{ℓ_s}`, recorded by its multiplicities (descending).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NamikawaWeyl {
    pub multiplicities: Vec<usize>,
    pub order: BigInt,
}

impl NamikawaWeyl {
    pub fn from_multiplicities(mut multiplicities: Vec<usize>) -> Self {
        multiplicities.sort_unstable_by(|a, b| b.cmp(a));
        let order = multiplicities
            .iter()
            .map(|&l| factorial(l))
            .fold(BigInt::one(), |acc, f| acc * f);
        NamikawaWeyl {
            multiplicities,
            order,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypertoricDatum {
    original_a: IntMatrix,
    original_b: IntMatrix,
    dropped_rows: Vec<usize>,
    kept_rows: Vec<usize>,
    a: IntMatrix,
    b: IntMatrix,
    classes: Vec<ParallelClass>,
}

impl HypertoricDatum {
    /// Validates `A` and takes its saturated kernel as `B`.
    pub fn from_matrix_a(a: &IntMatrix) -> Result<Self, HypertoricError> {
        if !is_surjective_over_z(a) {
            return Err(HypertoricError::NotSurjective);
        }
        if !is_unimodular(a)? {
            return Err(HypertoricError::NotUnimodular);
        }
        Ok(Self::from_pair(a.clone(), integer_kernel(a)))
    }

    /// Starts from `B`; any `A` completing the exact sequence will do, and
    /// the saturated left kernel is used.
    pub fn from_matrix_b(b: &IntMatrix) -> Result<Self, HypertoricError> {
        if linalg::rank(b) != b.cols() {
            return Err(HypertoricError::NotFullColumnRank);
        }
        if !is_surjective_over_z(&b.transpose()) {
            return Err(HypertoricError::CokernelNotFree);
        }
        let a = cokernel_matrix(b);
        if !is_unimodular(&a)? {
            return Err(HypertoricError::NotUnimodular);
        }
        Ok(Self::from_pair(a, b.clone()))
    }

    /// Quiver datum of a connected multigraph. Incidence matrices are
    /// totally unimodular, so no minor enumeration is needed.
    pub fn from_graph(g: &Graph) -> Result<Self, HypertoricError> {
        if g.vertex_count() < 2 {
            return Err(GraphError::TooFewVertices.into());
        }
        let components = g.components().len();
        if components > 1 {
            return Err(GraphError::Disconnected { components }.into());
        }
        let a = g.quiver_matrix();
        let b = integer_kernel(&a);
        Ok(Self::from_pair(a, b))
    }

    /// Builds the datum from an exact pair without re-validating it.
    pub(crate) fn from_pair(a: IntMatrix, b: IntMatrix) -> Self {
        let n = b.rows();
        let (dropped_rows, kept_rows): (Vec<usize>, Vec<usize>) =
            (0..n).partition(|&i| b.row_is_zero(i));
        let (ra, rb) = if dropped_rows.is_empty() {
            (a.clone(), b.clone())
        } else {
            let rb = b.select_rows(&kept_rows);
            (cokernel_matrix(&rb), rb)
        };
        let classes = reduced_expression(&rb);
        HypertoricDatum {
            original_a: a,
            original_b: b,
            dropped_rows,
            kept_rows,
            a: ra,
            b: rb,
            classes,
        }
    }

    /// `A` as given (before discarding coordinates with zero Gale row).
    pub fn original_a(&self) -> &IntMatrix {
        &self.original_a
    }

    pub fn original_b(&self) -> &IntMatrix {
        &self.original_b
    }

    /// Reduced `Ā`.
    pub fn a(&self) -> &IntMatrix {
        &self.a
    }

    /// Reduced `B̄`: no zero rows.
    pub fn b(&self) -> &IntMatrix {
        &self.b
    }

    pub fn dropped_rows(&self) -> &[usize] {
        &self.dropped_rows
    }

    /// Original index of each reduced coordinate.
    pub fn kept_rows(&self) -> &[usize] {
        &self.kept_rows
    }

    /// Reduced `n`.
    pub fn n(&self) -> usize {
        self.b.rows()
    }

    /// Reduced `d`.
    pub fn d(&self) -> usize {
        self.b.rows() - self.b.cols()
    }

    pub fn reduced_expression(&self) -> &[ParallelClass] {
        &self.classes
    }

    pub fn dimension(&self) -> usize {
        2 * self.b.cols()
    }

    pub fn namikawa_weyl(&self) -> NamikawaWeyl {
        NamikawaWeyl::from_multiplicities(self.classes.iter().map(|c| c.multiplicity()).collect())
    }

    /// `M(Ā)`, the matroid deciding the isomorphism class.
    pub fn matroid(&self) -> Result<Matroid, HypertoricError> {
        Ok(Matroid::from_matrix(&self.a)?)
    }

    /// `M(B̄ᵀ)`, whose flats index the strata.
    pub fn gale_matroid(&self) -> Result<Matroid, HypertoricError> {
        Ok(Matroid::from_matrix(&self.b.transpose())?)
    }

    /// The Lawrence lift `[[B, I], [0, I]]` of the reduced `B`.
    pub fn lawrence_lift(&self) -> IntMatrix {
        let n = self.n();
        let k = self.b.cols();
        let mut m = IntMatrix::zeros(2 * n, k + n);
        for i in 0..n {
            for j in 0..k {
                m.set(i, j, self.b.get(i, j).clone());
            }
            m.set(i, k + i, BigInt::one());
            m.set(n + i, k + i, BigInt::one());
        }
        m
    }

    /// `α ∈ Z^d` avoids every hyperplane of `H_A` (for the original `A`).
    pub fn is_generic(&self, alpha: &[BigInt]) -> Result<bool, HypertoricError> {
        let d = self.original_a.rows();
        if alpha.len() != d {
            return Err(HypertoricError::DimensionMismatch {
                expected: d,
                found: alpha.len(),
            });
        }
        let arr = Arrangement::from_columns(&self.original_a)?;
        Ok(arr.is_generic(alpha)?)
    }
}

/// Parallel classes of the rows of a zero-row-free `B`, sorted by direction.
fn reduced_expression(b: &IntMatrix) -> Vec<ParallelClass> {
    let mut classes: Vec<ParallelClass> = Vec::new();
    for i in 0..b.rows() {
        let row = b.row(i).to_vec();
        let mut dir = row.clone();
        linalg::make_primitive(&mut dir);
        let lead = dir.iter().find(|x| !x.is_zero()).cloned().unwrap_or_default();
        if lead.is_negative() {
            dir.iter_mut().for_each(|x| *x = -core::mem::take(x));
        }
        let sign: i8 = if row.iter().zip(&dir).all(|(r, d)| r == d) {
            1
        } else {
            -1
        };
        match classes.iter_mut().find(|c| c.direction == dir) {
            Some(c) => {
                c.members.push(i);
                c.signs.push(sign);
            }
            None => classes.push(ParallelClass {
                direction: dir,
                members: alloc::vec![i],
                signs: alloc::vec![sign],
            }),
        }
    }
    classes.sort_by(|x, y| x.direction.cmp(&y.direction));
    classes
}
