//! Central hyperplane arrangements over the rationals: the arrangement
//! `H_A` spanned by the columns of `A`, intersection posets, characteristic
//! polynomials, and chamber counts.

mod charpoly;
mod count;
mod poset;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::hypertoric::HypertoricDatum;
use crate::linalg::{self, Echelon, IntMatrix, LinalgError, RationalSubspace};
use crate::util::{binomial, Combinations};

pub use charpoly::CharPoly;
pub use count::{is_prime, FiniteFieldCount, DEFAULT_POINT_BUDGET};
pub use poset::{Flat, IntersectionPoset, DEFAULT_FLAT_CAP};

/// Refuse to enumerate more column subsets than this in `from_columns`.
pub const MAX_COLUMN_SUBSETS: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("columns span a space of rank {rank}, expected {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("hyperplane normal is zero")]
    ZeroNormal,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{count} hyperplanes exceed the poset limit of {limit}")]
    TooManyHyperplanes { count: usize, limit: usize },
    #[error("intersection poset exceeds {cap} flats")]
    TooManyFlats { cap: usize },
    #[error("enumeration over {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("Möbius value overflowed")]
    Overflow,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("chamber count {chambers} is not divisible by |W| = {order}")]
    NotDivisible { chambers: BigInt, order: BigInt },
    #[error("closed form only covers l3 in {{1, 2}}, got {0}")]
    UnsupportedL3(usize),
    #[error("multiplicities must be positive")]
    InvalidMultiplicity,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Central arrangement in `R^d` given by primitive integer normals whose
/// first nonzero entry is positive. Duplicate hyperplanes are merged.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrangement {
    dim: usize,
    normals: Vec<Vec<BigInt>>,
}

/// Where a point sits relative to an arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ChamberSide {
    /// Sign of `⟨normal, α⟩` for each hyperplane, in order.
    Chamber(Vec<i8>),
    OnWall,
}

fn canonical_normal(v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut w = v.to_vec();
    linalg::make_primitive(&mut w);
    let lead = w.iter().find(|x| !x.is_zero())?.clone();
    if lead.is_negative() {
        w.iter_mut().for_each(|x| *x = -core::mem::take(x));
    }
    Some(w)
}

impl Arrangement {
    pub fn new(dim: usize, normals: Vec<Vec<BigInt>>) -> Result<Self, ArrangementError> {
        let mut arr = Arrangement {
            dim,
            normals: Vec::new(),
        };
        for n in normals {
            if n.len() != dim {
                return Err(ArrangementError::DimensionMismatch {
                    expected: dim,
                    found: n.len(),
                });
            }
            let c = canonical_normal(&n).ok_or(ArrangementError::ZeroNormal)?;
            arr.push(c);
        }
        Ok(arr)
    }

    pub fn from_i64(dim: usize, normals: &[&[i64]]) -> Result<Self, ArrangementError> {
        Self::new(
            dim,
            normals
                .iter()
                .map(|n| n.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    fn push(&mut self, canonical: Vec<BigInt>) {
        if !self.normals.contains(&canonical) {
            self.normals.push(canonical);
        }
    }

    /// `H_A`: every hyperplane of `R^d` spanned by columns of `A`.
    pub fn from_columns(a: &IntMatrix) -> Result<Self, ArrangementError> {
        let d = a.rows();
        let r = linalg::rank(a);
        if r != d {
            return Err(ArrangementError::RankDeficient { rank: r, rows: d });
        }
        let mut arr = Arrangement {
            dim: d,
            normals: Vec::new(),
        };
        if d == 0 {
            return Ok(arr);
        }
        // one representative per direction keeps the enumeration small
        let mut directions: Vec<Vec<BigInt>> = Vec::new();
        for col in a.column_vecs() {
            if let Some(c) = canonical_normal(&col) {
                if !directions.contains(&c) {
                    directions.push(c);
                }
            }
        }
        let needed = binomial(directions.len(), d - 1);
        if needed > MAX_COLUMN_SUBSETS {
            return Err(ArrangementError::BudgetExceeded {
                needed,
                budget: MAX_COLUMN_SUBSETS,
            });
        }
        for subset in Combinations::new(directions.len(), d - 1) {
            let mut e = Echelon::<BigInt>::new(d);
            for &j in &subset {
                e.insert(&directions[j]).expect("BigInt cannot overflow");
            }
            if e.rank() != d - 1 {
                continue;
            }
            let perp = e.orthogonal_complement().expect("BigInt cannot overflow");
            arr.push(perp.rows()[0].clone());
        }
        Ok(arr)
    }

    /// `x_i + y_j + z_k = 0` for all `i, j, k`, followed by the difference
    /// hyperplanes `x_a = x_b`, `y_a = y_b`, `z_a = z_b`, in
    /// `R^{ℓ₁+ℓ₂+ℓ₃}` with coordinates `(x, y, z)`.
    pub fn edelman_reiner(l1: usize, l2: usize, l3: usize) -> Self {
        let d = l1 + l2 + l3;
        let mut normals: Vec<Vec<BigInt>> = Vec::new();
        let unit = |idx: &[(usize, i64)]| {
            let mut v = alloc::vec![BigInt::zero(); d];
            for &(i, c) in idx {
                v[i] = BigInt::from(c);
            }
            v
        };
        for i in 0..l1 {
            for j in 0..l2 {
                for k in 0..l3 {
                    normals.push(unit(&[(i, 1), (l1 + j, 1), (l1 + l2 + k, 1)]));
                }
            }
        }
        for (offset, len) in [(0, l1), (l1, l2), (l1 + l2, l3)] {
            for a in 0..len {
                for b in a + 1..len {
                    normals.push(unit(&[(offset + a, 1), (offset + b, -1)]));
                }
            }
        }
        Self::new(d, normals).expect("normals are nonzero")
    }

    /// `x_i = x_j` for `i < j` in `R^n`.
    pub fn braid(n: usize) -> Self {
        let mut normals = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = alloc::vec![BigInt::zero(); n];
                v[i] = BigInt::one();
                v[j] = BigInt::from(-1);
                normals.push(v);
            }
        }
        Self::new(n, normals).expect("normals are nonzero")
    }

    /// The `d` coordinate hyperplanes.
    pub fn coordinate(d: usize) -> Self {
        let normals = (0..d)
            .map(|i| {
                let mut v = alloc::vec![BigInt::zero(); d];
                v[i] = BigInt::one();
                v
            })
            .collect();
        Self::new(d, normals).expect("normals are nonzero")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[Vec<BigInt>] {
        &self.normals
    }

    /// Same set of hyperplanes, ignoring order.
    pub fn same_hyperplanes(&self, other: &Arrangement) -> bool {
        let mut a = self.normals.clone();
        let mut b = other.normals.clone();
        a.sort();
        b.sort();
        self.dim == other.dim && a == b
    }

    /// Rank of the normals, i.e. the codimension of the center.
    pub fn rank(&self) -> usize {
        let s = RationalSubspace::span(self.dim, self.normals.iter().map(Vec::as_slice))
            .expect("normals have the ambient length");
        s.dim()
    }

    /// The arrangement without hyperplane `k`.
    pub fn deletion(&self, k: usize) -> Arrangement {
        let mut normals = self.normals.clone();
        normals.remove(k);
        Arrangement {
            dim: self.dim,
            normals,
        }
    }

    /// The arrangement induced on hyperplane `k`, written in the basis of
    /// `H_k ∩ Z^d` given by the saturated kernel of its normal.
    pub fn restriction(&self, k: usize) -> Arrangement {
        let normal = IntMatrix::from_rows(&[self.normals[k].clone()], self.dim)
            .expect("normal has the ambient length");
        let basis = linalg::integer_kernel(&normal);
        let mut arr = Arrangement {
            dim: self.dim - 1,
            normals: Vec::new(),
        };
        for (i, n) in self.normals.iter().enumerate() {
            if i == k {
                continue;
            }
            let image = basis.transpose().mul_vec(n).expect("shapes agree");
            if let Some(c) = canonical_normal(&image) {
                arr.push(c);
            }
        }
        arr
    }

    pub fn chamber_of(&self, alpha: &[BigInt]) -> Result<ChamberSide, ArrangementError> {
        if alpha.len() != self.dim {
            return Err(ArrangementError::DimensionMismatch {
                expected: self.dim,
                found: alpha.len(),
            });
        }
        let mut signs = Vec::with_capacity(self.len());
        for n in &self.normals {
            let dot: BigInt = n.iter().zip(alpha).map(|(a, b)| a * b).sum();
            if dot.is_zero() {
                return Ok(ChamberSide::OnWall);
            }
            signs.push(if dot.is_positive() { 1 } else { -1 });
        }
        Ok(ChamberSide::Chamber(signs))
    }

    pub fn is_generic(&self, alpha: &[BigInt]) -> Result<bool, ArrangementError> {
        Ok(matches!(self.chamber_of(alpha)?, ChamberSide::Chamber(_)))
    }

    /// `⌊√(∏ of the d largest squared row norms)⌋`, which bounds every
    /// square minor of the normal matrix by Hadamard's inequality.
    pub fn hadamard_bound(&self) -> BigInt {
        let mut norms: Vec<BigInt> = self
            .normals
            .iter()
            .map(|n| n.iter().map(|x| x * x).sum())
            .collect();
        norms.sort_by(|a, b| b.cmp(a));
        let product = norms
            .iter()
            .take(self.dim)
            .fold(BigInt::one(), |acc, x| acc * x);
        product.sqrt()
    }

    /// Poset method, falling back to deletion–restriction when the poset
    /// is too large.
    pub fn char_poly(&self) -> Result<CharPoly, ArrangementError> {
        match self.intersection_poset() {
            Ok(p) => Ok(p.char_poly()),
            Err(ArrangementError::TooManyFlats { .. } | ArrangementError::TooManyHyperplanes { .. }) => {
                Ok(self.char_poly_deletion_restriction())
            }
            Err(e) => Err(e),
        }
    }

    /// Number of chambers, `(−1)^d χ(−1)`.
    pub fn chamber_count(&self) -> Result<BigInt, ArrangementError> {
        Ok(chambers_from_poly(&self.char_poly()?, self.dim))
    }
}

pub fn chambers_from_poly(chi: &CharPoly, dim: usize) -> BigInt {
    let v = chi.eval(&BigInt::from(-1));
    if dim % 2 == 0 {
        v
    } else {
        -v
    }
}

/// The matrix `A_{ℓ₁,ℓ₂,ℓ₃}` of `Ômin({ℓ₁, ℓ₂, ℓ₃})`: rows indexed by the
/// `ℓ₁−1`, `ℓ₂−1`, `ℓ₃` coordinates, first two columns `(−1,0)`, `(0,−1)`,
/// `(1,1)` blockwise, followed by an identity.
pub fn omin_matrix(l1: usize, l2: usize, l3: usize) -> Result<IntMatrix, ArrangementError> {
    if l1 == 0 || l2 == 0 || l3 == 0 {
        return Err(ArrangementError::InvalidMultiplicity);
    }
    let d = l1 + l2 + l3 - 2;
    let n = d + 2;
    let mut a = IntMatrix::zeros(d, n);
    for r in 0..d {
        let (c0, c1) = if r < l1 - 1 {
            (-1, 0)
        } else if r < l1 + l2 - 2 {
            (0, -1)
        } else {
            (1, 1)
        };
        a.set(r, 0, BigInt::from(c0));
        a.set(r, 1, BigInt::from(c1));
        a.set(r, 2 + r, BigInt::one());
    }
    Ok(a)
}

/// Closed forms for `A_{ℓ₁,ℓ₂,ℓ₃}` with `ℓ₃ ∈ {1, 2}`: the characteristic
/// polynomial and the chamber count.
pub fn er_closed_form(l1: usize, l2: usize, l3: usize) -> Result<(CharPoly, BigInt), ArrangementError> {
    if l1 == 0 || l2 == 0 {
        return Err(ArrangementError::InvalidMultiplicity);
    }
    let (a, b) = (l1 as i64, l2 as i64);
    let t2 = CharPoly::monomial(2);
    match l3 {
        1 => {
            let chi = &t2 * &CharPoly::from_roots(1..a + b);
            Ok((chi, crate::hypertoric::factorial(l1 + l2)))
        }
        2 => {
            let roots = core::iter::once(1)
                .chain(a + 1..=a + b)
                .chain(b + 1..a + b);
            let chi = &t2 * &CharPoly::from_roots(roots);
            let m = l1 + l2 + 1;
            let num = BigInt::from(2)
                * BigInt::from(binomial(m, l1))
                * BigInt::from(binomial(m, l2))
                * crate::hypertoric::factorial(l1)
                * crate::hypertoric::factorial(l2);
            let (q, r) = num.div_rem(&BigInt::from(m));
            debug_assert!(r.is_zero());
            Ok((chi, q))
        }
        other => Err(ArrangementError::UnsupportedL3(other)),
    }
}

/// Chamber count of `H_A`, `|W_B|`, and their quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionCount {
    pub chambers: BigInt,
    pub weyl_order: BigInt,
    pub count: BigInt,
}

/// `r(H_Ā) / |W_B|` for the reduced matrix `Ā`.
pub fn crepant_resolution_count(datum: &HypertoricDatum) -> Result<ResolutionCount, ArrangementError> {
    let chambers = Arrangement::from_columns(datum.a())?.chamber_count()?;
    let weyl_order = datum.namikawa_weyl().order;
    let (count, rem) = chambers.div_rem(&weyl_order);
    if !rem.is_zero() {
        return Err(ArrangementError::NotDivisible {
            chambers,
            order: weyl_order,
        });
    }
    Ok(ResolutionCount {
        chambers,
        weyl_order,
        count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn canonical_normals_dedupe() {
        let arr = Arrangement::from_i64(2, &[&[2, -4], &[-1, 2], &[0, -3]]).unwrap();
        assert_eq!(arr.normals(), &[v(&[1, -2]), v(&[0, 1])]);
        assert_eq!(
            Arrangement::from_i64(2, &[&[0, 0]]),
            Err(ArrangementError::ZeroNormal)
        );
    }

    #[test]
    fn from_columns_small() {
        let a = Arrangement::from_columns(&IntMatrix::from_array([[1, 1, 1]])).unwrap();
        assert_eq!(a.normals(), &[v(&[1])]);
        let i2 = Arrangement::from_columns(&IntMatrix::identity(2)).unwrap();
        assert!(i2.same_hyperplanes(&Arrangement::coordinate(2)));
        assert!(matches!(
            Arrangement::from_columns(&IntMatrix::from_array([[1, 1], [1, 1]])),
            Err(ArrangementError::RankDeficient { .. })
        ));
    }

    #[test]
    fn omin_211_hyperplanes() {
        let a = omin_matrix(2, 1, 1).unwrap();
        assert_eq!(a, IntMatrix::from_array([[-1, 0, 1, 0], [1, 1, 0, 1]]));
        let h = Arrangement::from_columns(&a).unwrap();
        let expected = Arrangement::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(h.same_hyperplanes(&expected));
    }

    #[test]
    fn er_counts() {
        assert_eq!(Arrangement::edelman_reiner(1, 1, 1).len(), 1);
        let e = Arrangement::edelman_reiner(2, 1, 1);
        let expected = Arrangement::from_i64(4, &[&[1, 0, 1, 1], &[0, 1, 1, 1], &[1, -1, 0, 0]]).unwrap();
        assert!(e.same_hyperplanes(&expected));
        for (l1, l2, l3) in [(2, 3, 1), (3, 3, 3), (1, 2, 4)] {
            let c2 = |l: usize| l * (l - 1) / 2;
            assert_eq!(
                Arrangement::edelman_reiner(l1, l2, l3).len(),
                l1 * l2 * l3 + c2(l1) + c2(l2) + c2(l3)
            );
        }
    }

    #[test]
    fn restriction_of_braid() {
        // restricting the braid arrangement in R^3 to x_1 = x_2 leaves two lines
        let b = Arrangement::braid(3);
        let r = b.restriction(0);
        assert_eq!(r.dim(), 2);
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn chambers_and_walls() {
        let c = Arrangement::coordinate(2);
        assert_eq!(c.chamber_of(&v(&[0, 0])).unwrap(), ChamberSide::OnWall);
        let p = c.chamber_of(&v(&[3, -2])).unwrap();
        let q = c.chamber_of(&v(&[-3, 2])).unwrap();
        assert_eq!(p, ChamberSide::Chamber(alloc::vec![1, -1]));
        assert_eq!(q, ChamberSide::Chamber(alloc::vec![-1, 1]));
        assert!(c.chamber_of(&v(&[1])).is_err());
    }

    #[test]
    fn closed_forms() {
        let (chi, r) = er_closed_form(1, 1, 1).unwrap();
        assert_eq!(chi, CharPoly::from_roots([0, 0, 1]));
        assert_eq!(r, BigInt::from(2));
        assert_eq!(er_closed_form(2, 2, 1).unwrap().1, BigInt::from(24));
        let (chi, r) = er_closed_form(2, 2, 2).unwrap();
        assert_eq!(r, BigInt::from(160));
        assert_eq!(chambers_from_poly(&chi, 6), r);
        assert_eq!(er_closed_form(1, 1, 3), Err(ArrangementError::UnsupportedL3(3)));
    }

    #[test]
    fn hadamard() {
        assert_eq!(Arrangement::braid(3).hadamard_bound(), BigInt::from(2));
        assert_eq!(Arrangement::coordinate(4).hadamard_bound(), BigInt::one());
    }
}
