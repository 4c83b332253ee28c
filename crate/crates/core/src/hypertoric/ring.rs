//! Minimal generators of `C[Y(A, 0)]` and their Poisson brackets.
//!
//! The invariant ring of the doubled space is the semigroup ring of
//! `{(z, w) ∈ Z^{2n}_{≥0} : z − w ∈ Im B}`. Its irreducible elements are the
//! quadrics `z_i w_i` (unless `e_i ∈ Im B`) and the monomials `f_β` for `β`
//! conformally primitive in `Im B`; those are found by bounded search.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use num_traits::Signed;

use super::{HypertoricDatum, HypertoricError};
use crate::linalg::{self, to_small, IntMatrix};
use crate::util::{binomial, Combinations};

/// Refuse bounded searches over more lattice points than this.
pub const RING_SEARCH_BUDGET: u128 = 50_000_000;

/// The monomial `∏ z_i^{z[i]} w_i^{w[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingGenerator {
    pub z: Vec<u32>,
    pub w: Vec<u32>,
}

impl RingGenerator {
    pub fn quadric(n: usize, k: usize) -> Self {
        let mut z = alloc::vec![0; n];
        z[k] = 1;
        RingGenerator { w: z.clone(), z }
    }

    /// `f_β = ∏_{β_i>0} z_i^{β_i} ∏_{β_i<0} w_i^{−β_i}`.
    pub fn monomial(beta: &[i64]) -> Self {
        RingGenerator {
            z: beta.iter().map(|&b| b.max(0) as u32).collect(),
            w: beta.iter().map(|&b| (-b).max(0) as u32).collect(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.z.iter().chain(&self.w).map(|&e| u64::from(e)).sum()
    }

    /// `z − w`, the lattice vector of the monomial.
    pub fn difference(&self) -> Vec<i64> {
        self.z
            .iter()
            .zip(&self.w)
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    /// `Some(k)` when this is `z_k w_k`.
    pub fn quadric_index(&self) -> Option<usize> {
        let support: Vec<usize> = (0..self.z.len())
            .filter(|&i| self.z[i] != 0 || self.w[i] != 0)
            .collect();
        match support[..] {
            [k] if self.z[k] == 1 && self.w[k] == 1 => Some(k),
            _ => None,
        }
    }

    /// `Some(β)` when this is `f_β`, i.e. no `z_i w_i` divides it.
    pub fn beta(&self) -> Option<Vec<i64>> {
        if self.z.iter().zip(&self.w).any(|(&a, &b)| a != 0 && b != 0) {
            return None;
        }
        Some(self.difference())
    }

    /// `f_{−β}` for `f_β`; fixes quadrics.
    pub fn swapped(&self) -> Self {
        RingGenerator {
            z: self.w.clone(),
            w: self.z.clone(),
        }
    }

    fn sort_key(&self) -> (u64, Reverse<Exponents>) {
        (self.degree(), Reverse((self.z.clone(), self.w.clone())))
    }
}

type Exponents = (Vec<u32>, Vec<u32>);

impl fmt::Display for RingGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (name, exps) in [("z", &self.z), ("w", &self.w)] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => out.push_str(&alloc::format!("{name}{}", i + 1)),
                    _ => out.push_str(&alloc::format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        f.write_str(&out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingWarning {
    /// `Im B ≠ 0` but no `f_β` has degree within the bound.
    BoundTooSmall { bound: usize },
    /// Some irreducible element sits exactly at the bound, so larger ones
    /// may have been cut off.
    BoundaryIrreducible { bound: usize, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingGenerators {
    pub bound: usize,
    pub generators: Vec<RingGenerator>,
    pub warnings: Vec<RingWarning>,
}

/// `Im B` in coordinates: `β = M · β_J` for a unimodular row block `J`.
pub(crate) struct ImageLattice {
    m: Vec<Vec<i64>>,
    basis_rows: Vec<usize>,
}

impl ImageLattice {
    pub(crate) fn new(b: &IntMatrix) -> Result<Self, HypertoricError> {
        let (n, k) = (b.rows(), b.cols());
        for rows in Combinations::new(n, k) {
            let block = b.select_rows(&rows);
            let Some(inv) = linalg::inverse_unimodular(&block) else {
                continue;
            };
            let m = b.mul(&inv)?;
            let m: Option<Vec<Vec<i64>>> = m.row_vecs().iter().map(|r| to_small(r)).collect();
            let m = m.ok_or(HypertoricError::VerificationFailed("coordinate matrix overflows"))?;
            return Ok(ImageLattice { m, basis_rows: rows });
        }
        Err(HypertoricError::NotUnimodular)
    }

    pub(crate) fn rank(&self) -> usize {
        self.basis_rows.len()
    }

    pub(crate) fn point(&self, y: &[i64]) -> Vec<i64> {
        self.m
            .iter()
            .map(|row| row.iter().zip(y).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub(crate) fn contains(&self, v: &[i64]) -> bool {
        let y: Vec<i64> = self.basis_rows.iter().map(|&j| v[j]).collect();
        self.point(&y) == v
    }

    /// Calls `visit` on every `y ∈ Z^k` with `‖y‖₁ ≤ radius`.
    pub(crate) fn for_each_coordinate<F: FnMut(&[i64])>(&self, radius: usize, mut visit: F) {
        fn rec<F: FnMut(&[i64])>(y: &mut Vec<i64>, pos: usize, left: i64, visit: &mut F) {
            if pos == y.len() {
                visit(y);
                return;
            }
            for v in -left..=left {
                y[pos] = v;
                rec(y, pos + 1, left - v.abs(), visit);
            }
            y[pos] = 0;
        }
        let mut y = alloc::vec![0i64; self.rank()];
        rec(&mut y, 0, radius as i64, &mut visit);
    }
}

/// Lattice points of `Z^k` in the cross-polytope of the given radius.
fn cross_polytope_points(k: usize, radius: usize) -> u128 {
    (0..=k.min(radius))
        .map(|i| (1u128 << i) * binomial(k, i) * binomial(radius, i))
        .sum()
}

/// No nonzero `γ ≠ β` in the lattice with `γ ⊑ β` (same signs, smaller
/// absolute values). One of `γ`, `β − γ` has at most half the norm.
fn is_conformally_primitive(lattice: &ImageLattice, beta: &[i64]) -> bool {
    let support: Vec<usize> = (0..beta.len()).filter(|&i| beta[i] != 0).collect();
    let half = beta.iter().map(|b| b.abs()).sum::<i64>() / 2;
    let mut gamma = alloc::vec![0i64; beta.len()];
    let mut norm = 0i64;
    // odometer over 0 ≤ |γ_i| ≤ |β_i| on the support
    loop {
        let mut pos = 0;
        loop {
            if pos == support.len() {
                return true;
            }
            let i = support[pos];
            if gamma[i].abs() < beta[i].abs() {
                gamma[i] += beta[i].signum();
                norm += 1;
                break;
            }
            norm -= gamma[i].abs();
            gamma[i] = 0;
            pos += 1;
        }
        if norm <= half && lattice.contains(&gamma) {
            return false;
        }
    }
}

impl HypertoricDatum {
    /// `2 · max ℓ + 2`.
    pub fn default_degree_bound(&self) -> usize {
        let lmax = self
            .classes
            .iter()
            .map(|c| c.multiplicity())
            .max()
            .unwrap_or(0);
        2 * lmax + 2
    }

    /// Conformally primitive `β ∈ Im B` with `‖β‖₁ ≤ bound`, sorted. Uses
    /// the original coordinates, so discarded ones carry `β_i = 0`.
    pub fn graver_elements(&self, bound: usize) -> Result<Vec<Vec<i64>>, HypertoricError> {
        if self.original_b.cols() == 0 {
            return Ok(Vec::new());
        }
        let lattice = ImageLattice::new(&self.original_b)?;
        if cross_polytope_points(lattice.rank(), bound) > RING_SEARCH_BUDGET {
            return Err(HypertoricError::BudgetExceeded {
                budget: RING_SEARCH_BUDGET,
            });
        }
        let mut out = Vec::new();
        lattice.for_each_coordinate(bound, |y| {
            if y.iter().all(|&v| v == 0) {
                return;
            }
            let beta = lattice.point(y);
            let norm: i64 = beta.iter().map(|b| b.abs()).sum();
            if norm as usize <= bound && is_conformally_primitive(&lattice, &beta) {
                out.push(beta);
            }
        });
        out.sort();
        Ok(out)
    }

    /// Irreducible elements of the semigroup up to the given degree, in
    /// the original `n` coordinates, sorted by degree and then by
    /// descending exponent vector.
    pub fn ring_generators(&self, bound: usize) -> Result<RingGenerators, HypertoricError> {
        let n = self.original_b.rows();
        let graver = self.graver_elements(bound)?;
        let mut generators: Vec<RingGenerator> = Vec::new();
        let mut warnings = Vec::new();
        for i in 0..n {
            let reducible = graver
                .iter()
                .any(|b| b[i].abs() == 1 && b.iter().filter(|&&x| x != 0).count() == 1);
            if !reducible && bound >= 2 {
                generators.push(RingGenerator::quadric(n, i));
            }
        }
        let at_boundary = graver
            .iter()
            .filter(|b| b.iter().map(|x| x.unsigned_abs() as usize).sum::<usize>() == bound)
            .count();
        if graver.is_empty() && self.original_b.cols() > 0 {
            warnings.push(RingWarning::BoundTooSmall { bound });
        }
        if at_boundary > 0 {
            warnings.push(RingWarning::BoundaryIrreducible {
                bound,
                count: at_boundary,
            });
        }
        generators.extend(graver.iter().map(|b| RingGenerator::monomial(b)));
        generators.sort_by_key(RingGenerator::sort_key);
        Ok(RingGenerators {
            bound,
            generators,
            warnings,
        })
    }
}

/// One term `coefficient · (∏ numerator) / (z_j w_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTerm {
    pub coefficient: i64,
    pub numerator: Vec<RingGenerator>,
    pub denominator: Option<usize>,
}

impl BracketTerm {
    /// The monomial after cancelling the denominator.
    pub fn monomial(&self) -> RingGenerator {
        let n = self.numerator[0].z.len();
        let mut m = RingGenerator {
            z: alloc::vec![0; n],
            w: alloc::vec![0; n],
        };
        for g in &self.numerator {
            for i in 0..n {
                m.z[i] += g.z[i];
                m.w[i] += g.w[i];
            }
        }
        if let Some(j) = self.denominator {
            m.z[j] -= 1;
            m.w[j] -= 1;
        }
        m
    }
}

impl fmt::Display for BracketTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        for g in &self.numerator {
            write!(f, "*{g}")?;
        }
        if let Some(j) = self.denominator {
            write!(f, "/(z{0}w{0})", j + 1)?;
        }
        Ok(())
    }
}

enum Shape {
    Quadric(usize),
    Monomial(Vec<i64>),
}

fn shape(g: &RingGenerator) -> Result<Shape, HypertoricError> {
    if let Some(k) = g.quadric_index() {
        return Ok(Shape::Quadric(k));
    }
    match g.beta() {
        Some(b) if b.iter().any(|&x| x != 0) => Ok(Shape::Monomial(b)),
        _ => Err(HypertoricError::UnsupportedGeneratorForm),
    }
}

/// `{z_j w_j, z_k w_k} = 0`, `{f_β, z_k w_k} = β_k f_β`, and
/// `{f_β, f_γ} = Σ_{β_j γ_j < 0} β_j |γ_j| f_β f_γ / (z_j w_j)`.
pub fn poisson_bracket(
    g1: &RingGenerator,
    g2: &RingGenerator,
) -> Result<Vec<BracketTerm>, HypertoricError> {
    if g1.z.len() != g2.z.len() {
        return Err(HypertoricError::DimensionMismatch {
            expected: g1.z.len(),
            found: g2.z.len(),
        });
    }
    let s1 = shape(g1)?;
    let s2 = shape(g2)?;
    let single = |c: i64, g: &RingGenerator| {
        if c == 0 {
            Vec::new()
        } else {
            alloc::vec![BracketTerm {
                coefficient: c,
                numerator: alloc::vec![g.clone()],
                denominator: None,
            }]
        }
    };
    Ok(match (s1, s2) {
        (Shape::Quadric(_), Shape::Quadric(_)) => Vec::new(),
        (Shape::Monomial(b), Shape::Quadric(k)) => single(b[k], g1),
        (Shape::Quadric(k), Shape::Monomial(b)) => single(-b[k], g2),
        (Shape::Monomial(b), Shape::Monomial(c)) => (0..b.len())
            .filter(|&j| b[j] * c[j] < 0)
            .map(|j| BracketTerm {
                coefficient: b[j] * c[j].abs(),
                numerator: alloc::vec![g1.clone(), g2.clone()],
                denominator: Some(j),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    fn datum(a: IntMatrix) -> HypertoricDatum {
        HypertoricDatum::from_matrix_a(&a).unwrap()
    }

    fn labels(g: &RingGenerators) -> Vec<String> {
        let mut v: Vec<String> = g.generators.iter().map(|x| alloc::format!("{x}")).collect();
        v.sort();
        v
    }

    #[test]
    fn omin_111_in_degree_two() {
        let h = datum(IntMatrix::from_array([[1, 1, 1]]));
        let g = h.ring_generators(2).unwrap();
        let mut expected: Vec<String> = [
            "z1w1", "z2w2", "z3w3", "z1w2", "z1w3", "z2w3", "z2w1", "z3w1", "z3w2",
        ]
        .iter()
        .map(|s| String::from(*s))
        .collect();
        expected.sort();
        assert_eq!(labels(&g), expected);
        // nothing new in higher degree
        assert_eq!(h.ring_generators(6).unwrap().generators, g.generators);
    }

    #[test]
    fn surface_a1() {
        let h = HypertoricDatum::from_matrix_b(&IntMatrix::from_array([[1], [1]])).unwrap();
        let g = h.ring_generators(2).unwrap();
        let mut expected = alloc::vec!["w1w2", "z1w1", "z1z2", "z2w2"];
        expected.sort();
        assert_eq!(labels(&g), expected);
    }

    #[test]
    fn empty_b_gives_quadrics() {
        let g = datum(IntMatrix::identity(2)).ring_generators(4).unwrap();
        assert_eq!(labels(&g), ["z1w1", "z2w2"]);
        assert!(g.warnings.is_empty());
        let h = datum(IntMatrix::from_array([[1, 1, 1]]).direct_sum(&IntMatrix::identity(1)));
        let g = h.ring_generators(2).unwrap();
        assert_eq!(g.generators.len(), 10);
        assert!(g.generators.contains(&RingGenerator::quadric(4, 3)));
    }

    #[test]
    fn generators_pair_under_swap() {
        let h = datum(IntMatrix::from_array([[-1, 0, 1, 0], [1, 1, 0, 1]]));
        let g = h.ring_generators(h.default_degree_bound()).unwrap();
        for x in &g.generators {
            assert!(g.generators.contains(&x.swapped()));
        }
    }

    #[test]
    fn small_bound_warns() {
        let h = datum(IntMatrix::from_array([[1, 1, 1]]));
        let g = h.ring_generators(1).unwrap();
        assert!(g.warnings.contains(&RingWarning::BoundTooSmall { bound: 1 }));
        assert!(g.generators.is_empty());
    }

    #[test]
    fn brackets() {
        let q1 = RingGenerator::quadric(3, 0);
        let q2 = RingGenerator::quadric(3, 1);
        assert!(poisson_bracket(&q1, &q2).unwrap().is_empty());
        let f = RingGenerator::monomial(&[1, -1, 0]);
        let t = poisson_bracket(&f, &q1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].coefficient, 1);
        assert_eq!(poisson_bracket(&q1, &f).unwrap()[0].coefficient, -1);
        assert!(poisson_bracket(&f, &f).unwrap().is_empty());
        let g = RingGenerator::monomial(&[-1, 0, 1]);
        let t = poisson_bracket(&f, &g).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].coefficient, 1);
        assert_eq!(t[0].denominator, Some(0));
        assert_eq!(alloc::format!("{}", t[0].monomial()), "z3w2");
        let r = poisson_bracket(&g, &f).unwrap();
        assert_eq!(r[0].coefficient, -1);
        let mixed = RingGenerator {
            z: alloc::vec![2, 0, 0],
            w: alloc::vec![1, 0, 0],
        };
        assert_eq!(
            poisson_bracket(&mixed, &q1),
            Err(HypertoricError::UnsupportedGeneratorForm)
        );
    }
}
