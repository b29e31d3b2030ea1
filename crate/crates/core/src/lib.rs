//! A workbench for finite-valued matrix logics in subset semantics.
//!
//! Truth values are subsets of the classical values `{1, 0}`: a formula can
//! be just true (`T = {1}`), both true and false (`B = {1, 0}`), neither
//! (`N = {}`), or just false (`F = {0}`). A [`kernel::Logic`] is a matrix
//! `⟨V, D, ops⟩` over these values; the crate ships the usual three-valued
//! paraconsistent suspects (LP, M3V, CSL3, cCSL3, Sette's P1 and its
//! relatives) as built-in fixtures.
//!
//! On top of the kernel sit:
//!
//! * [`syntax`] — formula/schema ASTs with a signature-driven parser and a
//!   canonical printer,
//! * [`engine`] — exhaustive-valuation validity and consequence checking
//!   with three-way verdicts and countermodel extraction,
//! * [`properties`] — the catalog of connexive thesis schemas, logic
//!   classification, standard-paraconsistent-negation enumeration, and
//!   connexive stability of a conditional,
//! * [`definability`] — clone closure of a signature and exact
//!   term-definability decisions with witness terms.

pub mod definability;
pub mod engine;
pub mod kernel;
pub mod properties;
pub mod syntax;

pub use engine::{ConsequenceFlavor, Verdict};
pub use kernel::{Connective, Logic, TruthValue, Valuation};
pub use syntax::{Formula, Schema, Sequent};
