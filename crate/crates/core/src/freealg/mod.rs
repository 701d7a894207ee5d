//! Free algebras on slotted generators, oriented rewriting to normal forms,
//! and the text form of polynomials.

mod expr;
mod poly;
mod rewrite;

pub use expr::{Alphabet, ExprError};
pub use poly::{word, Gen, NcPoly, Word};
pub use rewrite::{CentralReduction, OverlapFailure, RewriteError, RewriteSystem, Rule, TermOrder};
