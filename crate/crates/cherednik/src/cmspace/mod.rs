//! Calogero-Moser matrix spaces: rank-one commutator conditions, the
//! diagonal normal form and its inverse, trace invariants, and the
//! wreath-product membership test with its numeric diagnostics.

pub mod numeric;
pub mod point;
pub mod wreath;

pub use point::{kks_point, p_matrix, rank_one_check, wilson_map, CmPoint};
pub use wreath::{wreath_membership, WreathPoint};
