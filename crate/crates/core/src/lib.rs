//! Exact combinatorics for torus quotients of Schubert and Richardson
//! varieties in the Grassmannian `G(r, n)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`weyl`]: Plücker index tuples `I(r, n)`, permutations, reduced words,
//!   weights, and the minimal Schubert / Richardson data.
//! * [`tableau`]: rectangular semistandard tableaux (standard monomials) and
//!   enumeration of torus-invariant bases.
//! * [`pluecker`]: exact polynomials in Plücker coordinates, straightening,
//!   and an evaluation oracle on matrices.
//! * [`rewriting`]: commutative rewriting with overlap (diamond lemma) checks.
//! * [`deodhar`]: subexpressions, Deodhar cell matrices, and restriction of
//!   sections to cells.
//! * [`projnorm`]: degree-one generation of the invariant ring of `G(2, n)`.
//!
//! All arithmetic is exact (`BigRational`).

pub mod deodhar;
pub mod error;
pub mod g37;
pub mod linalg;
pub mod mpoly;
pub mod pluecker;
pub mod projnorm;
pub mod rewriting;
pub mod tableau;
pub mod weyl;

pub use error::{Error, Result};
pub use mpoly::MPoly;
pub use pluecker::{PlueckerPoly, PointMatrix};
pub use rewriting::RewriteSystem;
pub use tableau::{ContentVector, Tableau};
pub use weyl::{ColumnTuple, Permutation, ReducedWord, Weight};

/// Exact rational scalar used throughout.
pub type Q = num_rational::BigRational;
