//! Builders for the example algebras and the q-series that size them.

pub mod borcherds;
pub mod gnome;
pub mod kac_moody;
pub mod qseries;
pub mod spec;

pub use borcherds::{block_index, build_fricke, build_monster, monster_label, monster_root_sets, CoefficientTable, RootSets};
pub use gnome::{build_gnome, simple_multiplicities, vprime_character};
#[cfg(test)]
pub(crate) use kac_moody::{build_from_modules, extend};
pub use kac_moody::{build_e10, build_h3, e10_bcm, e10_delta, e10_gcm, h3_bcm, h3_gcm, lambda_index, module_label};
pub use qseries::{gnome_mult, j_coefficients, j_coefficients_eisenstein, partition_p, partitions_upto, two_one};
pub use spec::{Block, Caps, ModelKind, ModelReport, ModelSpec, ModelSpecJson};
