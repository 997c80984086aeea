//! Exact-arithmetic toolkit for symplectic reflection algebras.
//!
//! The crate implements rational Cherednik algebras over the rationals:
//! PBW normal forms and products, Dunkl-operator representations,
//! Calogero-Moser matrix spaces, finite-dimensional module verification,
//! rational-coefficient differential operators (spherical images, shift
//! operators), the matrix Weyl algebra with normal ordering, and a CLI of
//! reproducible verification suites over all of it.
//!
//! Everything is computed exactly over arbitrary-precision rationals;
//! floating point appears only where smoothness/dimension diagnostics are
//! numeric by nature (moment-map Jacobian ranks and the Newton point
//! finder).

pub mod error;
pub mod exact;
pub mod field;
pub mod cmspace;
pub mod dunkl;
pub mod groups;
pub mod radial;
pub mod repcheck;
pub mod sra;
pub mod linalg;

pub use error::{CherednikError, Result};
