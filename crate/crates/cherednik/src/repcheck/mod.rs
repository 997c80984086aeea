//! Verification and analysis of finite-dimensional modules: relation
//! checking, characters, simplicity, matrix-space extraction, and the
//! special six-dimensional dihedral modules.

pub mod cm_match;
pub mod irreps1;
pub mod rep;
pub mod special;

pub use cm_match::cm_match;
pub use irreps1::lemma_irreps1_check;
pub use rep::{RelationFailure, Representation};
pub use special::{dihedral_module, g2_modules, DihedralModule, Variant};
