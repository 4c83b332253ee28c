//! Random inputs for property tests: graphs, unimodular matrices, and the
//! moves `A ↦ P · A · D` that preserve the isomorphism class.

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::linalg::{integer_kernel, IntMatrix};

/// Connected multigraph on `vertices ≥ 1` vertices with `edges ≥ vertices − 1`
/// edges: a random spanning tree plus random extra edges, randomly oriented.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, vertices: usize, edges: usize) -> Graph {
    assert!(vertices >= 1 && edges + 1 >= vertices);
    let mut order: Vec<usize> = (0..vertices).collect();
    order.shuffle(rng);
    let mut list = Vec::with_capacity(edges);
    for i in 1..vertices {
        let parent = order[rng.gen_range(0..i)];
        list.push((parent, order[i]));
    }
    while list.len() < edges {
        if vertices < 2 {
            break;
        }
        let u = rng.gen_range(0..vertices);
        let mut v = rng.gen_range(0..vertices - 1);
        if v >= u {
            v += 1;
        }
        list.push((u, v));
    }
    list.shuffle(rng);
    for e in &mut list {
        if rng.gen_bool(0.5) {
            *e = (e.1, e.0);
        }
    }
    Graph::new(vertices, list).expect("no self-loops are generated")
}

/// A surjective unimodular `d × n` matrix (`n ≥ d`): either the quiver
/// matrix of a random graph or the transpose of a Gale dual of one.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, d: usize, n: usize) -> IntMatrix {
    assert!(n >= d);
    if d == 0 {
        return IntMatrix::zeros(0, n);
    }
    // cographic: the graph has n edges and n − d independent cycles
    if n > d && rng.gen_bool(0.5) {
        let vertices = n - d + 1;
        let g = random_connected_graph(rng, vertices, n);
        return integer_kernel(&g.quiver_matrix()).transpose();
    }
    random_connected_graph(rng, d + 1, n).quiver_matrix()
}

/// A random element of `GL_d(Z)` built from `steps` elementary moves with
/// multipliers in `-2..=2`, row swaps, and sign changes.
pub fn random_gl<R: Rng + ?Sized>(rng: &mut R, d: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(d);
    if d == 0 {
        return m;
    }
    for _ in 0..steps {
        match rng.gen_range(0..4) {
            0 if d > 1 => {
                let (i, j) = distinct_pair(rng, d);
                m.swap_rows(i, j);
            }
            1 => m.negate_row(rng.gen_range(0..d)),
            _ if d > 1 => {
                let (i, j) = distinct_pair(rng, d);
                let factor = BigInt::from(rng.gen_range(-2i64..=2));
                m.add_row_multiple(i, j, &factor);
            }
            _ => {}
        }
    }
    m
}

fn distinct_pair<R: Rng + ?Sized>(rng: &mut R, d: usize) -> (usize, usize) {
    let i = rng.gen_range(0..d);
    let mut j = rng.gen_range(0..d - 1);
    if j >= i {
        j += 1;
    }
    (i, j)
}

/// A uniformly random `n × n` signed permutation matrix.
pub fn random_signed_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> IntMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut m = IntMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        m.set(i, j, BigInt::from(s));
    }
    m
}

/// `(P, D, P · A · D)` for random `P` and `D`.
pub fn random_equivalent<R: Rng + ?Sized>(rng: &mut R, a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let p = random_gl(rng, a.rows(), 3 * a.rows() + 2);
    let d = random_signed_permutation(rng, a.cols());
    let pad = p
        .mul(a)
        .and_then(|pa| pa.mul(&d))
        .expect("shapes agree");
    (p, d, pad)
}
