//! Isomorphism classes of affine hypertoric varieties.
//!
//! `Y(A, 0) ≅ Y(A′, 0)` exactly when the vector matroids of the reduced
//! matrices are isomorphic, so every decision here is a matroid
//! computation. In dimensions four and six the classes are further matched
//! against a fixed catalog of reduced Gale matrices `B̄₁, …, B̄₇`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::graph::Graph;
use crate::hypertoric::{HypertoricDatum, HypertoricError};
use crate::linalg::{self, integer_kernel, IntMatrix};
use crate::matroid::{GroundBijection, Matroid, MatroidError};
use crate::util::bits;

/// Default cap on the (bijection, sign pattern) pairs tried by
/// [`equivalence_witness`].
pub const DEFAULT_WITNESS_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("invalid input: {0}")]
    InvalidInput(#[from] HypertoricError),
    #[error("expected a 4-dimensional variety, got dimension {dimension}")]
    NotDimensionFour { dimension: usize },
    #[error("expected a 6-dimensional variety, got dimension {dimension}")]
    NotDimensionSix { dimension: usize },
    #[error("no catalog entry matches; the input is not regular")]
    NoCatalogMatch,
    #[error("witness search exceeded the budget of {budget} candidates")]
    BudgetExceeded { budget: u128 },
    #[error("catalog entries {0} and {1} are isomorphic")]
    CatalogCollision(usize, usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Canonical name of an isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// `S_{A_{ℓ₁−1}} × S_{A_{ℓ₂−1}}`, from `B̄₁`; `l1 ≥ l2`.
    SurfaceProduct { l1: usize, l2: usize },
    /// `Ômin({ℓ₁, ℓ₂, ℓ₃})`, from `B̄₂`; sorted descending.
    OminTriple { l1: usize, l2: usize, l3: usize },
    /// `B̄_index` for `index ∈ 3..=7`; `multiplicities[i]` belongs to row
    /// `i` of the catalog matrix, chosen lexicographically greatest over
    /// the symmetries of that matrix.
    Catalog6 { index: u8, multiplicities: Vec<usize> },
    /// Any other dimension, named by a permutation-invariant summary of the
    /// reduced matroid.
    Other { fingerprint: String },
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::SurfaceProduct { l1, l2 } => write!(f, "SurfaceProduct{{{l1},{l2}}}"),
            ClassLabel::OminTriple { l1, l2, l3 } => write!(f, "OminTriple{{{l1},{l2},{l3}}}"),
            ClassLabel::Catalog6 {
                index,
                multiplicities,
            } => {
                write!(f, "Catalog6{{{index}; ")?;
                for (i, l) in multiplicities.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{l}")?;
                }
                f.write_str("}")
            }
            ClassLabel::Other { fingerprint } => write!(f, "Other{{{fingerprint}}}"),
        }
    }
}

/// `A′ = P · A · D` with `P ∈ GL_d(Z)` and `D` a signed permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub p: IntMatrix,
    pub d: IntMatrix,
}

impl EquivalenceWitness {
    pub fn verify(&self, a: &IntMatrix, a2: &IntMatrix) -> bool {
        let det = linalg::det(&self.p);
        if !det.abs().is_one() || !linalg::is_signed_permutation(&self.d) {
            return false;
        }
        match self.p.mul(a).and_then(|pa| pa.mul(&self.d)) {
            Ok(m) => &m == a2,
            Err(_) => false,
        }
    }
}

/// Validates both matrices and compares the matroids of their reductions.
/// Returns a ground bijection between reduced coordinates when isomorphic.
pub fn isomorphic(a: &IntMatrix, a2: &IntMatrix) -> Result<Option<GroundBijection>, ClassifyError> {
    let h1 = HypertoricDatum::from_matrix_a(a)?;
    let h2 = HypertoricDatum::from_matrix_a(a2)?;
    isomorphic_data(&h1, &h2)
}

pub fn isomorphic_data(
    h1: &HypertoricDatum,
    h2: &HypertoricDatum,
) -> Result<Option<GroundBijection>, ClassifyError> {
    if h1.n() != h2.n() || h1.d() != h2.d() {
        return Ok(None);
    }
    Ok(h1.matroid()?.is_isomorphic(&h2.matroid()?)?)
}

/// Both graphs give isomorphic quiver varieties. Disconnected graphs are
/// allowed: each component contributes its own block.
pub fn quiver_iso(g1: &Graph, g2: &Graph) -> Result<bool, ClassifyError> {
    let data = |g: &Graph| {
        let a = g.quiver_matrix();
        let b = integer_kernel(&a);
        HypertoricDatum::from_pair(a, b)
    };
    Ok(isomorphic_data(&data(g1), &data(g2))?.is_some())
}

/// Searches for `(P, D)` with `A′ = P · A · D`.
///
/// Every matroid isomorphism `σ: M(A) → M(A′)` is tried with every sign
/// pattern on a basis `J` of `A′`; `P` is then forced on `J` and the signs
/// of the remaining columns are forced by `P`. `Ok(None)` is a proof that
/// no witness exists; hitting `budget` is an error.
pub fn equivalence_witness(
    a: &IntMatrix,
    a2: &IntMatrix,
    budget: u128,
) -> Result<Option<EquivalenceWitness>, ClassifyError> {
    if a.rows() != a2.rows() || a.cols() != a2.cols() {
        return Ok(None);
    }
    let (d, n) = (a.rows(), a.cols());
    let m1 = Matroid::from_matrix(a)?;
    let m2 = Matroid::from_matrix(a2)?;
    if m1.rank() != d || m2.rank() != d {
        return Err(HypertoricError::NotSurjective.into());
    }
    let Some(&basis) = m2.bases().first() else {
        return Ok(None);
    };
    let j: Vec<usize> = bits(basis).collect();
    let a2_j = a2.select_columns(&j);
    let mut spent = 0u128;
    let mut found = None;
    let mut exhausted = false;
    m1.for_each_isomorphism(&m2, |sigma| {
        let inv = sigma.inverse();
        let pre: Vec<usize> = j.iter().map(|&k| inv.map[k]).collect();
        // fixing the first sign loses nothing: (−P, −D) is also a witness
        for pattern in 0..1u64 << d.saturating_sub(1) {
            if spent >= budget {
                exhausted = true;
                return false;
            }
            spent += 1;
            let signs: Vec<i64> = (0..d)
                .map(|t| if t > 0 && pattern >> (t - 1) & 1 == 1 { -1 } else { 1 })
                .collect();
            if let Some(w) = try_candidate(a, a2, &a2_j, sigma, &pre, &signs, n) {
                found = Some(w);
                return false;
            }
        }
        true
    })?;
    match found {
        Some(w) => Ok(Some(w)),
        None if exhausted => Err(ClassifyError::BudgetExceeded { budget }),
        None => Ok(None),
    }
}

fn try_candidate(
    a: &IntMatrix,
    a2: &IntMatrix,
    a2_j: &IntMatrix,
    sigma: &GroundBijection,
    pre: &[usize],
    signs: &[i64],
    n: usize,
) -> Option<EquivalenceWitness> {
    let mut src = a.select_columns(pre);
    for (t, &s) in signs.iter().enumerate() {
        if s < 0 {
            src.negate_column(t);
        }
    }
    let inv = linalg::inverse_unimodular(&src)?;
    let p = a2_j.mul(&inv).ok()?;
    if !linalg::det(&p).abs().is_one() {
        return None;
    }
    let mut dm = IntMatrix::zeros(n, n);
    for i in 0..n {
        let k = sigma.map[i];
        let image = p.mul_vec(&a.column(i)).ok()?;
        let target = a2.column(k);
        let sign = if image == target {
            1
        } else if image.iter().zip(&target).all(|(x, y)| *x == -y) {
            -1
        } else {
            return None;
        };
        dm.set(i, k, BigInt::from(sign));
    }
    let w = EquivalenceWitness { p, d: dm };
    w.verify(a, a2).then_some(w)
}

/// `B̄ᵢ` for `i ∈ 1..=7`, rows as listed in the catalog.
pub fn catalog_matrix(i: usize) -> Option<IntMatrix> {
    let rows: &[&[i64]] = match i {
        1 => &[&[1, 0], &[0, 1]],
        2 => &[&[1, 0], &[0, 1], &[1, 1]],
        3 => &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        4 => &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0]],
        5 => &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        6 => &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1]],
        7 => &[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[1, 1, 1],
        ],
        _ => return None,
    };
    let cols = rows[0].len();
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    Some(IntMatrix::from_rows(&rows, cols).expect("rows have equal length"))
}

/// The graph `H̄ᵢ` with `M(H̄ᵢ) ≅ M(B̄ᵢᵀ)`.
pub fn catalog_graph(i: usize) -> Option<Graph> {
    let edges: &[(usize, usize)] = match i {
        1 => &[(0, 1), (1, 2)],
        2 => &[(0, 1), (1, 2), (2, 0)],
        3 => &[(0, 1), (1, 2), (2, 3)],
        4 => &[(0, 1), (1, 2), (1, 3), (2, 3)],
        5 => &[(0, 1), (1, 3), (3, 2), (2, 0)],
        6 => &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)],
        7 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        _ => return None,
    };
    Some(Graph::from_edges(edges).expect("catalog graphs have no self-loops"))
}

/// `M(B̄ᵢᵀ)` for `i = 1..=7`, checked to be pairwise non-isomorphic.
#[derive(Clone, Debug)]
pub struct Catalog {
    matroids: Vec<Matroid>,
}

impl Catalog {
    pub fn new() -> Result<Self, ClassifyError> {
        let mut matroids = Vec::new();
        for i in 1..=7 {
            let b = catalog_matrix(i).expect("index in range");
            matroids.push(Matroid::from_matrix(&b.transpose())?);
        }
        for i in 0..7 {
            for j in i + 1..7 {
                if matroids[i].ground_size() == matroids[j].ground_size()
                    && matroids[i].is_isomorphic(&matroids[j])?.is_some()
                {
                    return Err(ClassifyError::CatalogCollision(i + 1, j + 1));
                }
            }
        }
        Ok(Catalog { matroids })
    }

    /// `M(B̄ᵢᵀ)`, for `i ∈ 1..=7`.
    pub fn matroid(&self, i: usize) -> &Matroid {
        &self.matroids[i - 1]
    }
}

/// Matroid on the class directions, with one multiplicity per element.
fn simple_gale(h: &HypertoricDatum) -> Result<(Matroid, Vec<usize>), ClassifyError> {
    let classes = h.reduced_expression();
    let k = h.b().cols();
    let dirs: Vec<Vec<BigInt>> = classes.iter().map(|c| c.direction.clone()).collect();
    let m = IntMatrix::from_rows(&dirs, k).map_err(HypertoricError::from)?;
    let mults = classes.iter().map(|c| c.multiplicity()).collect();
    Ok((Matroid::from_matrix(&m.transpose())?, mults))
}

/// Lexicographically greatest transport of `mults` onto `target` along
/// an isomorphism, or `None` if there is none.
fn transport(
    source: &Matroid,
    mults: &[usize],
    target: &Matroid,
) -> Result<Option<Vec<usize>>, ClassifyError> {
    if source.ground_size() != target.ground_size() {
        return Ok(None);
    }
    let mut best: Option<Vec<usize>> = None;
    source.for_each_isomorphism(target, |sigma| {
        let mut v = alloc::vec![0; mults.len()];
        for (j, &l) in mults.iter().enumerate() {
            v[sigma.map[j]] = l;
        }
        if best.as_ref().map_or(true, |b| v > *b) {
            best = Some(v);
        }
        true
    })?;
    Ok(best)
}

/// Four-dimensional classes: `S_{A_{ℓ₁−1}} × S_{A_{ℓ₂−1}}` or
/// `Ômin({ℓ₁, ℓ₂, ℓ₃})`.
pub fn classify4(h: &HypertoricDatum) -> Result<ClassLabel, ClassifyError> {
    if h.dimension() != 4 {
        return Err(ClassifyError::NotDimensionFour {
            dimension: h.dimension(),
        });
    }
    let catalog = Catalog::new()?;
    let (simple, mults) = simple_gale(h)?;
    if let Some(v) = transport(&simple, &mults, catalog.matroid(1))? {
        return Ok(ClassLabel::SurfaceProduct { l1: v[0], l2: v[1] });
    }
    if let Some(v) = transport(&simple, &mults, catalog.matroid(2))? {
        return Ok(ClassLabel::OminTriple {
            l1: v[0],
            l2: v[1],
            l3: v[2],
        });
    }
    Err(ClassifyError::NoCatalogMatch)
}

/// Six-dimensional classes: catalog entries `B̄₃, …, B̄₇`.
pub fn classify6(h: &HypertoricDatum) -> Result<ClassLabel, ClassifyError> {
    if h.dimension() != 6 {
        return Err(ClassifyError::NotDimensionSix {
            dimension: h.dimension(),
        });
    }
    let catalog = Catalog::new()?;
    let (simple, mults) = simple_gale(h)?;
    for index in 3..=7u8 {
        if let Some(v) = transport(&simple, &mults, catalog.matroid(index as usize))? {
            return Ok(ClassLabel::Catalog6 {
                index,
                multiplicities: v,
            });
        }
    }
    Err(ClassifyError::NoCatalogMatch)
}

/// Catalog label in dimensions four and six, a fingerprint otherwise.
pub fn classify(h: &HypertoricDatum) -> Result<ClassLabel, ClassifyError> {
    match h.dimension() {
        4 => classify4(h),
        6 => classify6(h),
        _ => Ok(ClassLabel::Other {
            fingerprint: h.matroid()?.fingerprint().to_string(),
        }),
    }
}
