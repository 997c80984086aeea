//! Reflection groups and group-algebra data: the symmetric, dihedral and
//! wreath-product families, their symplectic reflections and conjugacy
//! classes, and the deformation pairing kappa.

pub mod algebra;
pub mod element;
pub mod kappa;
pub mod spec;

pub use algebra::GroupAlgebra;
pub use element::GroupElement;
pub use kappa::{build_kappa, reflection_form, ClassFunction, KappaPairing};
pub use spec::{GroupFamily, GroupSpec, ReflectionClass};
