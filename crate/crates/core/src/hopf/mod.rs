//! Hopf structure over presentations: multi-slot algebras with the tensor
//! coalgebra, bilinear forms (skew pairings, brackets, convolutions,
//! pullbacks), cocycle twists, algebra maps and axiom verification.

mod algebra;
mod forms;
mod maps;
mod presentation;
mod twist;
mod verify;

pub use algebra::{Algebra, Interaction, Sweedler, Sweedler3};
pub use forms::{Bracket, Convolution, FnForm, Form, FormRef, InverseViaAntipode, Pullback, SkewPairing, TensorForm, Transposed, Trivial};
pub use maps::HopfMap;
pub use presentation::{HopfPresentation, Relation};
pub use twist::{Product, TwistedAlgebra};
pub use verify::{
    check_inverse, compare_forms, pairs_up_to, verify_braided_commutativity, verify_cocycle, verify_cocycle_on, verify_hopf,
    verify_skew_pairing,
};
