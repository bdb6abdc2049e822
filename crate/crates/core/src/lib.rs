//! Computational left-orderability toolkit.
//!
//! The crate is organised around one question: given a finitely generated
//! group with a decidable word problem, can we refute left-orderability by
//! exhibiting, for every sign assignment on a finite list of elements, a
//! product of the signed elements that collapses to the identity?  The
//! supporting cast — free-group words, Stallings subgroup graphs, the
//! shift-lattice groups Γₙ, a polycyclic Heisenberg extension, unipotent
//! matrix orders and Britton reduction for HNN extensions — provides the
//! base groups, the subgroup membership oracles, and the word problems the
//! cone search runs on.

pub mod cone;
pub mod gamma;
pub mod group;
pub mod heis;
pub mod hnf;
pub mod hnn;
pub mod report;
pub mod runner;
pub mod scenario;
pub mod stallings;
pub mod suite;
pub mod unipotent;
pub mod word;

pub use group::Group;
pub use report::{Report, Verdict};
pub use word::{Alphabet, SignedSubset, Word};
