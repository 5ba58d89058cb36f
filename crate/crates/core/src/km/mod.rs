//! Symmetric Kac–Moody machinery: roots, multiplicities, n⁻ and highest-weight modules.

pub mod gcm;
pub mod module;
pub mod nminus;
pub mod roots;
pub mod tits;

pub use gcm::{Coeffs, Gcm};
pub use module::{build_irreducible, IntegrabilityReport, IrreducibleModuleTruncation, ModuleVector};
pub use nminus::{serre_quotient_nminus, serre_quotient_raw, NminusPresentation, NminusSummary};
pub use roots::{peterson_mult, real_roots, real_roots_vec, RealRoots, RootDatum, RootEntry};
pub use tits::{is_prenilpotent, Tits};
