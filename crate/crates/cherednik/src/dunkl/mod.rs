//! Dunkl operators and the representations they generate: the polynomial
//! representation, the t = 0 homomorphism into functions on the regular
//! locus smashed with W, and the |W|-dimensional evaluation modules.

pub mod eval;
pub mod operator;
pub mod theta0;

pub use eval::evaluation_module;
pub use operator::{dunkl_apply, dunkl_commutator_check, RootSystem};
pub use theta0::{theta0_image, SmashPoly};
