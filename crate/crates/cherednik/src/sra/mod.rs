//! The symplectic reflection algebra engine: PBW normal forms, products,
//! the PBW/Jacobi criterion, partial Poisson brackets, centrality checks,
//! endomorphism and derivation actions, and trigonometric elements.

pub mod element;
pub mod ops;
pub mod parse;

pub use element::{normal_form, Algebra, Gen, PbwMonomial, SraElement};
