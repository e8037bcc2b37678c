//! Exact-arithmetic computer algebra for finite-dimensional dendriform
//! algebras presented by structure constants.
//!
//! The crate covers, over the rationals or a prime field GF(p) with
//! p < 2^16:
//!
//! - the dendriform axioms, sub-adjacent associative products, and the
//!   associated pre-Lie and Lie structures ([`algebra`]);
//! - representations on finite-dimensional spaces, semidirect products,
//!   actions, and homomorphism checks ([`rep`]);
//! - dendriform D-bialgebras, coboundary structures induced by a two-tensor
//!   r, the D-equation, classification up to factorizability, and the
//!   dendriform double ([`bialgebra`]);
//! - (relative) Rota-Baxter operators of any weight, descendent products,
//!   quadratic Rota-Baxter algebras with invariant Connes cocycles, and the
//!   two-way correspondence with factorizable r-matrices ([`rota_baxter`]);
//! - exhaustive prime-field searches with an independent verification oracle
//!   ([`search`]).
//!
//! All arithmetic is exact; nothing is floating point. Checks report every
//! violation with basis-indexed witnesses instead of stopping at the first.

pub mod algebra;
pub mod bialgebra;
pub mod error;
pub mod matrix;
pub mod rep;
pub mod rota_baxter;
pub mod samples;
pub mod scalar;
pub mod search;
pub mod tensor;

pub use algebra::{AssociativeAlgebra, DendriformAlgebra};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use tensor::Tensor3;
