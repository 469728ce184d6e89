//! Finite combinatorial machinery for Hom and box complexes of graphs:
//! graphs and folds, (equivariant) posets and strong collapse, simplicial
//! complexes with barycentric subdivision and NDR neighborhoods, the
//! graph/complex bridge functors, and GF(2) homology as the verification
//! oracle. Everything is desk scale, pure, and deterministic.

pub mod bridge;
pub mod complex;
pub mod error;
pub mod graph;
pub mod group;
pub mod hom;
pub mod homology;
pub mod io;
pub mod poset;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::{Graph, GraphHom};
pub use group::{Action, FiniteGroup, Side};
pub use poset::Poset;
