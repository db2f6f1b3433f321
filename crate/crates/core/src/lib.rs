//! Exact census of connected unramified Galois covers of a genus-g curve
//! whose Galois group is a non-abelian semidirect product
//! Z/mZ x| Z/nZ with gcd(m, n) = 1.
//!
//! The crate computes three counts in closed form — the refinement count
//! of a fixed cyclic n-cover, the number of cyclic n-covers, and their
//! product — and verifies them independently by building the deck
//! transformation matrix on first homology and counting its primitive
//! eigen-directions over Z/mZ, either by full enumeration or by
//! per-eigenvalue kernel computations over Z/p^eZ.
//!
//! Module map:
//! - [`modular`]: factored moduli, primitive vectors, CRT.
//! - [`poly`]: polynomials over Z and Z/p^eZ, cyclotomics, Hensel lifting.
//! - [`matrix`]: deck matrices, characteristic/minimal polynomials,
//!   similarity over residue fields.
//! - [`counting`]: the closed-form counts, exact-rational evaluation.
//! - [`oracle`]: the independent eigenvector-counting verification engine.
//! - [`symplectic`]: adapted symplectic bases certifying the reduction of
//!   any surjection Z^2g -> Z/nZ to the standard one.

pub mod counting;
pub mod error;
pub mod matrix;
pub mod modular;
pub mod oracle;
pub mod poly;
pub mod symplectic;

pub use error::{Error, Result};
