//! Free Lie algebra in Lyndon coordinates, with exp/log/BCH.

pub mod dsw;
pub mod expmap;
pub mod lyndon;
pub mod series;

pub use dsw::{dsw_project, is_lie};
pub use expmap::{bch, exp, log};
pub use lyndon::{bracket_expansion, bracketing, is_lyndon, lyndon_words, lyndon_words_over, LyndonWord};
pub use series::{LieJson, LieSeries, LieTermJson};
