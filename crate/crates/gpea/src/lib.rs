//! Finite generalized pseudoeffect algebras as partial-addition tables.
//!
//! The toolkit validates tables against the defining axioms, derives the
//! order structure, computes the exocenter (the Boolean algebra of direct
//! summands), the center, exocentral covers, type-determining closures and
//! type decompositions, and runs an executable law suite that checks every
//! supported algebraic identity on concrete models by exhaustive
//! quantification.
//!
//! Models are small by design: everything is table-driven and checks are
//! exhaustive, so carriers beyond a few dozen elements get expensive fast.

pub mod algebra;
pub mod axioms;
pub mod center;
pub mod cli;
pub mod construct;
pub mod cover;
pub mod exocenter;
pub mod laws;
pub mod set;
pub mod typetheory;

pub use algebra::{Elem, FiniteGpea, SumTable};
pub use set::ElementSet;
