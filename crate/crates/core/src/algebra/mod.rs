//! Free associative algebra on a graded alphabet.

pub mod alphabet;
pub mod poly;
pub mod root;

pub use alphabet::{Alphabet, GenId, GeneratorSymbol, Word};
pub use poly::{NcPolynomial, PolyJson, TermJson};
pub use root::{BcmCondition, BcmReport, BcmViolation, BorcherdsCartanMatrix, RootVector};
