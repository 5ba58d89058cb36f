//! g_J acting on A(S′) by derivations, their exponentials, and G_J words.

pub mod check;
pub mod derive;
pub mod table;
pub mod word;

pub use check::{check_commutation, CommutationReport};
pub use derive::{derive, exp_derivation, torus_apply, UEnvElement};
pub use table::{e_label, f_label, h_label, ActionRow, ActionTableJson, GeneratorActionTable, LinearImage, RowKind};
pub use word::{ad_group, KmLetter, KmWord, WindowComparison};
