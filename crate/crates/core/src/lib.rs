//! Combinatorial invariants of affine hypertoric varieties.
//!
//! Starting from a unimodular integer matrix `A` (or a graph), this crate
//! computes the Gale dual `B`, the reduced expression of `B` and its
//! Namikawa–Weyl group, the flat stratification, coordinate-ring
//! generators, isomorphism classes through regular matroids, and the
//! number of projective crepant resolutions via chamber counting of the
//! arrangement spanned by the columns of `A`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod arrangement;
pub mod classify;
pub mod graph;
pub mod hypertoric;
pub mod linalg;
pub mod matroid;
pub mod sample;
mod util;

pub use arrangement::{Arrangement, CharPoly, IntersectionPoset};
pub use classify::ClassLabel;
pub use graph::Graph;
pub use hypertoric::HypertoricDatum;
pub use linalg::{IntMatrix, RationalSubspace};
pub use matroid::Matroid;
