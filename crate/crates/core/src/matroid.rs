//! Represented matroids on ground sets of at most 64 elements.
//!
//! Bases are stored explicitly as sorted bitsets. That is fine for the
//! desk-scale ground sets these varieties produce (`n ≤ 14` gives at most
//! 3432 bases); the expensive part is isomorphism search.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{self, Echelon, ExactInt, IntMatrix};
use crate::util::{binomial, bits, Combinations, UnionFind};

/// Refuse to enumerate more candidate subsets than this.
pub const MAX_SUBSET_ENUMERATION: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground sets differ in size: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },
    #[error("ground set of {n} elements is too large")]
    TooLarge { n: usize },
    #[error("not a matroid: {0}")]
    Invalid(&'static str),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u64>,
    representation: Option<IntMatrix>,
}

/// `map[i]` is the element of the target matroid that `i` is sent to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundBijection {
    pub map: Vec<usize>,
}

impl GroundBijection {
    pub fn identity(n: usize) -> Self {
        GroundBijection {
            map: (0..n).collect(),
        }
    }

    pub fn apply(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |m, i| m | (1u64 << self.map[i]))
    }

    pub fn inverse(&self) -> GroundBijection {
        let mut inv = alloc::vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        GroundBijection { map: inv }
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = alloc::vec![false; self.map.len()];
        self.map
            .iter()
            .all(|&j| j < seen.len() && !core::mem::replace(&mut seen[j], true))
    }
}

/// Parallel classes of the non-loop elements, plus the loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClasses {
    pub classes: Vec<Vec<usize>>,
    pub loops: Vec<usize>,
}

/// Permutation-invariant summary used to prune isomorphism search and to
/// label matroids that fall outside the known catalogs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub n: usize,
    pub rank: usize,
    pub basis_count: usize,
    pub loops: usize,
    pub basis_degree_profile: Vec<usize>,
    pub parallel_profile: Vec<usize>,
    pub circuit_sizes: Vec<usize>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| alloc::format!("{x}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "n={};r={};bases={};loops={};degrees=[{}];parallel=[{}];circuits=[{}]",
            self.n,
            self.rank,
            self.basis_count,
            self.loops,
            join(&self.basis_degree_profile),
            join(&self.parallel_profile),
            join(&self.circuit_sizes)
        )
    }
}

fn nonzero_maximal_minor<T: ExactInt>(rows: &[Vec<T>], cols: &[usize]) -> Option<bool> {
    let mut e = Echelon::<T>::new(rows.len());
    for &c in cols {
        let column: Vec<T> = rows.iter().map(|r| r[c].clone()).collect();
        if !e.insert(&column)? {
            return Some(false);
        }
    }
    Some(true)
}

impl Matroid {
    /// Builds a matroid from an explicit basis list, checking the axioms.
    pub fn from_bases(n: usize, bases: Vec<u64>) -> Result<Self, MatroidError> {
        if n > 64 {
            return Err(MatroidError::TooLarge { n });
        }
        let m = Self::from_bases_unchecked(n, bases, None)?;
        if !m.satisfies_basis_exchange() {
            return Err(MatroidError::Invalid("basis exchange fails"));
        }
        Ok(m)
    }

    fn from_bases_unchecked(
        n: usize,
        mut bases: Vec<u64>,
        representation: Option<IntMatrix>,
    ) -> Result<Self, MatroidError> {
        bases.sort_unstable();
        bases.dedup();
        let Some(&first) = bases.first() else {
            return Err(MatroidError::Invalid("no bases"));
        };
        let rank = first.count_ones() as usize;
        if bases.iter().any(|b| b.count_ones() as usize != rank) {
            return Err(MatroidError::Invalid("bases of different sizes"));
        }
        if n < 64 && bases.iter().any(|b| b >> n != 0) {
            return Err(MatroidError::Invalid("basis outside ground set"));
        }
        Ok(Matroid {
            n,
            rank,
            bases,
            representation,
        })
    }

    /// Vector matroid of the columns of `a` over the rationals.
    pub fn from_matrix(a: &IntMatrix) -> Result<Self, MatroidError> {
        let n = a.cols();
        if n > 64 {
            return Err(MatroidError::TooLarge { n });
        }
        // a basis of the row space has the same column matroid
        let mut rowspace = Echelon::<BigInt>::new(n);
        for i in 0..a.rows() {
            rowspace.insert(a.row(i)).expect("BigInt elimination cannot overflow");
        }
        let r = rowspace.rank();
        if binomial(n, r) > MAX_SUBSET_ENUMERATION {
            return Err(MatroidError::TooLarge { n });
        }
        let big_rows: Vec<Vec<BigInt>> = rowspace.rows().to_vec();
        let small_rows: Option<Vec<Vec<i64>>> =
            big_rows.iter().map(|r| linalg::to_small(r)).collect();
        let mut bases = Vec::new();
        for cols in Combinations::new(n, r) {
            let independent = small_rows
                .as_ref()
                .and_then(|s| nonzero_maximal_minor(s, &cols))
                .unwrap_or_else(|| {
                    nonzero_maximal_minor(&big_rows, &cols).expect("BigInt cannot overflow")
                });
            if independent {
                bases.push(crate::util::mask_of(&cols));
            }
        }
        Self::from_bases_unchecked(n, bases, Some(a.clone()))
    }

    /// Cycle matroid of a multigraph, via its signed incidence matrix.
    pub fn from_graph(g: &Graph) -> Result<Self, MatroidError> {
        Self::from_matrix(&g.signed_incidence())
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn representation(&self) -> Option<&IntMatrix> {
        self.representation.as_ref()
    }

    pub fn ground_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn is_basis(&self, mask: u64) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    pub fn rank_of(&self, mask: u64) -> usize {
        self.bases
            .iter()
            .map(|b| (b & mask).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        self.bases.iter().any(|b| b & mask == mask)
    }

    pub fn closure(&self, mask: u64) -> u64 {
        let r = self.rank_of(mask);
        (0..self.n)
            .filter(|&e| mask >> e & 1 == 1 || self.rank_of(mask | 1 << e) == r)
            .fold(0, |m, e| m | 1 << e)
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground_mask();
        let bases = self.bases.iter().map(|b| full & !b).collect();
        Self::from_bases_unchecked(self.n, bases, None).expect("complements of bases form a matroid")
    }

    pub fn loops(&self) -> Vec<usize> {
        let union = self.bases.iter().fold(0u64, |m, b| m | b);
        (0..self.n).filter(|&e| union >> e & 1 == 0).collect()
    }

    pub fn coloops(&self) -> Vec<usize> {
        let inter = self.bases.iter().fold(self.ground_mask(), |m, b| m & b);
        bits(inter).collect()
    }

    pub fn parallel_classes(&self) -> ParallelClasses {
        let loops = self.loops();
        let is_loop = |e: usize| loops.binary_search(&e).is_ok();
        let mut uf = UnionFind::new(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !is_loop(i) && !is_loop(j) && self.rank_of(1 << i | 1 << j) <= 1 {
                    uf.union(i, j);
                }
            }
        }
        let classes = uf
            .blocks()
            .into_iter()
            .filter(|b| !is_loop(b[0]))
            .collect();
        ParallelClasses { classes, loops }
    }

    /// Connected components, found by merging the fundamental circuits of a
    /// single basis.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        let base = self.bases[0];
        for e in (0..self.n).filter(|&e| base >> e & 1 == 0) {
            for b in bits(base) {
                if self.is_basis((base & !(1 << b)) | 1 << e) {
                    uf.union(e, b);
                }
            }
        }
        uf.blocks()
    }

    /// Restriction to `elements`, re-indexed in the given order.
    pub fn restrict(&self, elements: &[usize]) -> Matroid {
        let mask = crate::util::mask_of(elements);
        let r = self.rank_of(mask);
        let mut bases: Vec<u64> = self
            .bases
            .iter()
            .map(|b| b & mask)
            .filter(|b| b.count_ones() as usize == r)
            .map(|b| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| b >> e & 1 == 1)
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        bases.sort_unstable();
        bases.dedup();
        let representation = self
            .representation
            .as_ref()
            .map(|a| a.select_columns(elements));
        Self::from_bases_unchecked(elements.len(), bases, representation)
            .expect("restriction of a matroid is a matroid")
    }

    /// Restriction to one representative (the smallest) of each parallel
    /// class, with loops removed.
    pub fn simplification(&self) -> (Matroid, ParallelClasses) {
        let pc = self.parallel_classes();
        let reps: Vec<usize> = pc.classes.iter().map(|c| c[0]).collect();
        (self.restrict(&reps), pc)
    }

    /// All flats, sorted by rank and then by bitset.
    pub fn flats(&self) -> Vec<u64> {
        let mut by_rank: Vec<Vec<u64>> = alloc::vec![Vec::new(); self.rank + 1];
        let bottom = self.closure(0);
        by_rank[self.rank_of(bottom)].push(bottom);
        for r in 0..self.rank {
            let mut level = core::mem::take(&mut by_rank[r]);
            level.sort_unstable();
            level.dedup();
            for &f in &level {
                let mut covered = f;
                for e in 0..self.n {
                    if covered >> e & 1 == 1 {
                        continue;
                    }
                    let g = self.closure(f | 1 << e);
                    covered |= g;
                    by_rank[r + 1].push(g);
                }
            }
            by_rank[r] = level;
        }
        let top = by_rank.last_mut().unwrap();
        top.sort_unstable();
        top.dedup();
        by_rank.into_iter().flatten().collect()
    }

    /// All circuits as bitsets, sorted by size then value.
    pub fn circuits(&self) -> Result<Vec<u64>, MatroidError> {
        if self.n > 24 {
            return Err(MatroidError::TooLarge { n: self.n });
        }
        let mut out = Vec::new();
        for k in 1..=self.rank + 1 {
            for subset in Combinations::new(self.n, k) {
                let mask = crate::util::mask_of(&subset);
                if self.is_independent(mask) {
                    continue;
                }
                if bits(mask).all(|e| self.is_independent(mask & !(1 << e))) {
                    out.push(mask);
                }
            }
        }
        Ok(out)
    }

    pub fn satisfies_basis_exchange(&self) -> bool {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in bits(b1 & !b2) {
                    let ok = bits(b2 & !b1).any(|y| self.is_basis((b1 & !(1 << x)) | 1 << y));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Number of bases containing each element.
    pub fn basis_degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.n];
        for &b in &self.bases {
            for e in bits(b) {
                deg[e] += 1;
            }
        }
        deg
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut degrees = self.basis_degrees();
        degrees.sort_unstable();
        let pc = self.parallel_classes();
        let mut parallel: Vec<usize> = pc.classes.iter().map(Vec::len).collect();
        parallel.sort_unstable();
        let mut circuit_sizes = alloc::vec![0; self.rank + 2];
        if let Ok(circuits) = self.circuits() {
            for c in circuits {
                circuit_sizes[c.count_ones() as usize] += 1;
            }
        }
        Fingerprint {
            n: self.n,
            rank: self.rank,
            basis_count: self.bases.len(),
            loops: pc.loops.len(),
            basis_degree_profile: degrees,
            parallel_profile: parallel,
            circuit_sizes,
        }
    }

    /// Per-element invariant used to restrict candidate images.
    fn element_colors(&self) -> Vec<(bool, usize, usize)> {
        let deg = self.basis_degrees();
        let pc = self.parallel_classes();
        let mut class_size = alloc::vec![0; self.n];
        for c in &pc.classes {
            for &e in c {
                class_size[e] = c.len();
            }
        }
        (0..self.n)
            .map(|e| (deg[e] == 0, deg[e], class_size[e]))
            .collect()
    }

    /// First isomorphism onto `other` in the fixed search order, if any.
    pub fn is_isomorphic(&self, other: &Matroid) -> Result<Option<GroundBijection>, MatroidError> {
        let mut found = None;
        self.for_each_isomorphism(other, |b| {
            found = Some(b.clone());
            false
        })?;
        Ok(found)
    }

    /// Calls `visit` on every isomorphism `self → other` in search order
    /// until it returns `false`.
    pub fn for_each_isomorphism<F>(&self, other: &Matroid, mut visit: F) -> Result<(), MatroidError>
    where
        F: FnMut(&GroundBijection) -> bool,
    {
        if self.n != other.n {
            return Err(MatroidError::GroundSizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.rank != other.rank || self.bases.len() != other.bases.len() {
            return Ok(());
        }
        let c1 = self.element_colors();
        let c2 = other.element_colors();
        let mut s1 = c1.clone();
        let mut s2 = c2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return Ok(());
        }
        let mut color_count: BTreeMap<(bool, usize, usize), usize> = BTreeMap::new();
        for c in &c1 {
            *color_count.entry(*c).or_default() += 1;
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&e| (color_count[&c1[e]], c1[e], e));

        let mut search = IsoSearch {
            left: self,
            right: other,
            c1: &c1,
            c2: &c2,
            order,
            map: alloc::vec![usize::MAX; self.n],
            used: 0,
        };
        search.extend(0, &mut visit);
        Ok(())
    }
}

struct IsoSearch<'a> {
    left: &'a Matroid,
    right: &'a Matroid,
    c1: &'a [(bool, usize, usize)],
    c2: &'a [(bool, usize, usize)],
    order: Vec<usize>,
    map: Vec<usize>,
    used: u64,
}

impl IsoSearch<'_> {
    /// Returns `false` once the visitor asks to stop.
    fn extend<F: FnMut(&GroundBijection) -> bool>(&mut self, depth: usize, visit: &mut F) -> bool {
        if depth == self.order.len() {
            return visit(&GroundBijection {
                map: self.map.clone(),
            });
        }
        let x = self.order[depth];
        for y in 0..self.right.n {
            if self.used >> y & 1 == 1 || self.c2[y] != self.c1[x] {
                continue;
            }
            self.map[x] = y;
            self.used |= 1 << y;
            if self.consistent(depth + 1) && !self.extend(depth + 1, visit) {
                return false;
            }
            self.used &= !(1 << y);
            self.map[x] = usize::MAX;
        }
        true
    }

    /// The traces of the bases on the assigned elements must correspond.
    fn consistent(&self, assigned: usize) -> bool {
        let dom: u64 = self.order[..assigned].iter().fold(0, |m, &e| m | 1 << e);
        let img = self.used;
        let mut left: Vec<u64> = self
            .left
            .bases
            .iter()
            .map(|b| bits(b & dom).fold(0u64, |m, e| m | 1 << self.map[e]))
            .collect();
        let mut right: Vec<u64> = self.right.bases.iter().map(|b| b & img).collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        left == right
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bases: Vec<String> = self
            .bases
            .iter()
            .map(|b| {
                let items: Vec<String> = bits(*b).map(|e| alloc::format!("{e}")).collect();
                alloc::format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "Matroid(n={}, r={}, bases=[{}])", self.n, self.rank, bases.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kernel_basis;

    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return alloc::vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Exhaustive oracle: does some permutation carry bases onto bases?
    fn brute_isomorphic(m1: &Matroid, m2: &Matroid) -> bool {
        perms(m1.n).into_iter().any(|p| {
            let g = GroundBijection { map: p };
            let mut img: Vec<u64> = m1.bases.iter().map(|&b| g.apply(b)).collect();
            img.sort_unstable();
            img == m2.bases
        })
    }

    #[test]
    fn all_ones_row_is_uniform_rank_one() {
        let m = Matroid::from_matrix(&IntMatrix::from_array([[1, 1, 1]])).unwrap();
        assert_eq!(m.bases(), &[0b001, 0b010, 0b100]);
        let d = m.dual();
        assert_eq!(d.rank(), 2);
        assert_eq!(d.bases(), &[0b011, 0b101, 0b110]);
        assert_eq!(d.dual(), Matroid { representation: None, ..m.clone() });
        let b = kernel_basis(&IntMatrix::from_array([[1, 1, 1]])).unwrap();
        let mb = Matroid::from_matrix(&b.transpose()).unwrap();
        assert_eq!(mb.bases(), d.bases());
    }

    #[test]
    fn identity_has_one_basis() {
        let m = Matroid::from_matrix(&IntMatrix::identity(3)).unwrap();
        assert_eq!(m.bases(), &[0b111]);
        assert_eq!(m.parallel_classes().classes.len(), 3);
        assert_eq!(m.coloops(), [0, 1, 2]);
    }

    #[test]
    fn triangle_graph_bases_are_pairs() {
        let g = Graph::from_edges(&[(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = Matroid::from_graph(&g).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bases(), &[0b011, 0b101, 0b110]);
        let tree = Matroid::from_graph(&Graph::from_edges(&[(0, 1), (1, 2), (1, 3)]).unwrap()).unwrap();
        assert_eq!(tree.bases(), &[0b111]);
        let doubled = Matroid::from_graph(&Graph::from_edges(&[(0, 1), (0, 1)]).unwrap()).unwrap();
        assert_eq!(doubled.parallel_classes().classes, [alloc::vec![0, 1]]);
    }

    #[test]
    fn parallel_classes_of_gale_rows() {
        let b = IntMatrix::from_array([[1, 0], [1, 0], [0, 1], [-1, -1]]);
        let m = Matroid::from_matrix(&b.transpose()).unwrap();
        let pc = m.parallel_classes();
        assert_eq!(pc.classes, [alloc::vec![0, 1], alloc::vec![2], alloc::vec![3]]);
        assert!(pc.loops.is_empty());
        let surf = Matroid::from_matrix(&IntMatrix::from_array([[1, 1, 1]])).unwrap();
        assert_eq!(surf.parallel_classes().classes, [alloc::vec![0, 1, 2]]);
    }

    #[test]
    fn components() {
        let a = IntMatrix::from_array([[1, 1, 1]]).direct_sum(&IntMatrix::from_array([[1, 1, 1]]));
        let m = Matroid::from_matrix(&a).unwrap();
        assert_eq!(m.connected_components(), [alloc::vec![0, 1, 2], alloc::vec![3, 4, 5]]);
        let one = Matroid::from_matrix(&IntMatrix::from_array([[1, 1, 1]])).unwrap();
        assert_eq!(one.connected_components().len(), 1);
        let with_loop = Matroid::from_matrix(&IntMatrix::from_array([[1, 1, 0]])).unwrap();
        assert_eq!(with_loop.loops(), [2]);
        assert_eq!(with_loop.connected_components(), [alloc::vec![0, 1], alloc::vec![2]]);
    }

    #[test]
    fn flats_of_triangle() {
        let b = IntMatrix::from_array([[1, 0], [0, 1], [-1, -1]]);
        let m = Matroid::from_matrix(&b.transpose()).unwrap();
        assert_eq!(m.flats(), [0, 0b001, 0b010, 0b100, 0b111]);
    }

    #[test]
    fn circuits_of_k4() {
        let k4 = Graph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let m = Matroid::from_graph(&k4).unwrap();
        let c = m.circuits().unwrap();
        // 4 triangles and 3 four-cycles
        assert_eq!(c.iter().filter(|c| c.count_ones() == 3).count(), 4);
        assert_eq!(c.iter().filter(|c| c.count_ones() == 4).count(), 3);
        assert_eq!(m.bases().len(), 16);
    }

    #[test]
    fn isomorphism_against_relabeling() {
        let k4 = Graph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let m = Matroid::from_graph(&k4).unwrap();
        let relabel = GroundBijection {
            map: alloc::vec![3, 5, 0, 1, 4, 2],
        };
        let bases = m.bases().iter().map(|&b| relabel.apply(b)).collect();
        let m2 = Matroid::from_bases(6, bases).unwrap();
        let witness = m.is_isomorphic(&m2).unwrap().unwrap();
        let mut image: Vec<u64> = m.bases().iter().map(|&b| witness.apply(b)).collect();
        image.sort_unstable();
        assert_eq!(image, m2.bases());
        assert!(witness.is_bijection());
    }

    #[test]
    fn isomorphism_agrees_with_exhaustive_search() {
        let graphs: [&[(usize, usize)]; 6] = [
            &[(0, 1), (1, 2), (2, 3), (3, 0)],
            &[(0, 1), (1, 2), (2, 0), (2, 3)],
            &[(0, 1), (0, 1), (1, 2), (2, 0)],
            &[(0, 1), (1, 2), (2, 3), (3, 4)],
            &[(0, 1), (0, 1), (0, 1), (1, 2)],
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
        ];
        let ms: Vec<Matroid> = graphs
            .iter()
            .map(|e| Matroid::from_graph(&Graph::from_edges(e).unwrap()).unwrap())
            .collect();
        for a in &ms {
            for b in &ms {
                if a.ground_size() != b.ground_size() {
                    assert!(a.is_isomorphic(b).is_err());
                    continue;
                }
                assert_eq!(a.is_isomorphic(b).unwrap().is_some(), brute_isomorphic(a, b));
            }
        }
    }

    #[test]
    fn rejects_non_matroid() {
        // {0,1} and {2,3} violate exchange
        assert!(Matroid::from_bases(4, alloc::vec![0b0011, 0b1100]).is_err());
    }
}
