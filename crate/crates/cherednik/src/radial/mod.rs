//! Differential operators with rational-function coefficients: the
//! Calogero-Moser operator, spherical images, shift operators, the
//! rank-one example, weight modules on Laurent expressions, small
//! representations, and the exterior-to-symmetric projection.

pub mod kostant;
pub mod ops;
pub mod ratdiffop;
pub mod vk;

pub use ops::{
    cm_operator, cm_operator_rank_one, shift_intertwine_check, shift_operator,
    spherical_image, sl2_eta,
};
pub use ratdiffop::{RatDiffOp, SmashOp};
