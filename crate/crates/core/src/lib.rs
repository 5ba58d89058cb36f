//! Exact truncated arithmetic for the group G(S′) ⋊ G_J attached to a Borcherds
//! algebra whose negative part contains a free Lie subalgebra.

pub mod action;
pub mod algebra;
pub mod error;
pub mod km;
pub mod lie;
pub mod linalg;
pub mod magnus;
pub mod models;
pub mod scalar;
pub mod semidirect;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
