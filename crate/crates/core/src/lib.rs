//! Exact-arithmetic computation in the graph of monomial ideals.
//!
//! Vertices of the graph are monomial ideals in K[x1..xn]; two vertices are
//! adjacent when a single ideal degenerates to exactly those two under all
//! term orders. The crate decides adjacency, constructs the affine schemes of
//! edge ideals, builds the graph of partitions for two variables, and carries
//! out the generalized bistellar flip calculus on simplicial complexes.
//!
//! All arithmetic is exact: rationals of arbitrary precision or GF(p).

pub mod edges;
pub mod error;
pub mod field;
pub mod gb;
pub mod hilbert;
pub mod ideal;
pub mod intpoly;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod partitions;
pub mod poly;
pub mod schubert;
pub mod simplicial;

pub use error::{Error, Result};
pub use field::{Coeff, Field};
pub use ideal::MonomialIdeal;
pub use monomial::{Direction, Monomial};
pub use order::TermOrder;
pub use poly::Polynomial;
