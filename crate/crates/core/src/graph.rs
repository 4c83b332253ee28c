//! Finite undirected multigraphs and their signed incidence matrices.

use alloc::vec::Vec;

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::IntMatrix;
use crate::util::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} is a self-loop at vertex {vertex}")]
    SelfLoopPresent { edge: usize, vertex: usize },
    #[error("edge {edge} uses vertex {vertex} but the graph has {vertex_count} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("graph has {components} connected components")]
    Disconnected { components: usize },
    #[error("graph needs at least two vertices")]
    TooFewVertices,
}

/// A multigraph on vertices `0..vertex_count`. Each edge `(u, v)` is
/// oriented `u → v`; repeated pairs are parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for (k, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        edge: k,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoopPresent { edge: k, vertex: u });
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    /// Vertex count is one more than the largest label used.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Self::new(n, edges.to_vec())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.blocks()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Same graph with every edge reversed where `flip[k]` is set.
    pub fn reoriented(&self, flip: &[bool]) -> Graph {
        let edges = self
            .edges
            .iter()
            .zip(flip.iter().chain(core::iter::repeat(&false)))
            .map(|(&(u, v), &f)| if f { (v, u) } else { (u, v) })
            .collect();
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Vertex-by-edge matrix; the column of `u → v` is `e_v − e_u`.
    pub fn signed_incidence(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.vertex_count, self.edges.len());
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            m.set(v, k, BigInt::from(1));
            m.set(u, k, BigInt::from(-1));
        }
        m
    }

    /// The map `e ↦ v_head − v_tail` written in the basis
    /// `v_r − v_x` (x ≠ r) of the sum-zero lattice of each component, where
    /// `r` is the component's smallest vertex. For a connected graph this is
    /// the `(V−1) × E` quiver matrix with `v_0` as base vertex; for several
    /// components it is block diagonal.
    pub fn quiver_matrix(&self) -> IntMatrix {
        let comps = self.components();
        let mut coord = alloc::vec![None; self.vertex_count];
        let mut next = 0;
        for comp in &comps {
            for &x in &comp[1..] {
                coord[x] = Some(next);
                next += 1;
            }
        }
        let mut m = IntMatrix::zeros(next, self.edges.len());
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            // v_v − v_u = (v_r − v_u) − (v_r − v_v)
            if let Some(i) = coord[u] {
                m.set(i, k, BigInt::from(1));
            }
            if let Some(i) = coord[v] {
                m.set(i, k, BigInt::from(-1));
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{is_surjective_over_z, is_totally_unimodular, rank};

    #[test]
    fn rejects_self_loops() {
        assert_eq!(
            Graph::from_edges(&[(0, 1), (2, 2)]),
            Err(GraphError::SelfLoopPresent { edge: 1, vertex: 2 })
        );
    }

    #[test]
    fn quiver_matrix_of_triangle() {
        let g = Graph::from_edges(&[(0, 1), (1, 2), (0, 2)]).unwrap();
        let a = g.quiver_matrix();
        assert_eq!(a, IntMatrix::from_array([[-1, 1, 0], [0, -1, -1]]));
        assert!(is_surjective_over_z(&a));
        assert!(is_totally_unimodular(&g.signed_incidence()).unwrap());
    }

    #[test]
    fn disconnected_graph_gives_block_matrix() {
        let g = Graph::new(5, alloc::vec![(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(g.components().len(), 2);
        let a = g.quiver_matrix();
        assert_eq!((a.rows(), a.cols()), (3, 4));
        assert_eq!(rank(&a), 3);
    }
}
