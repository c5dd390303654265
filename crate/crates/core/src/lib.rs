//! Exact-arithmetic toolkit for rank-2 bundles on complete intersection
//! surfaces built from linear spaces on special hypersurfaces.

pub mod bundle;
pub mod cayley_bacharach;
pub mod error;
pub mod fano;
pub mod field;
pub mod hilbert;
pub mod linalg;
pub mod poly;
pub mod primes;
pub mod report;
pub mod subspace;
pub mod univariate;

pub use error::{Error, Result};
pub use field::{Field, FieldScalar, PrimeField, Rationals, Residue};
pub use linalg::ExactMatrix;
pub use poly::{monomial_basis, Monomial, MultiPoly};
pub use subspace::LinearSubspace;
