//! Toolkit for first-order theories over a membership relation and its dual.
//!
//! The crate parses formulas and Hilbert proofs written as s-expressions,
//! checks proofs against the five first-order axiom schemas with Modus Ponens
//! and Generalization, dualizes formulas, theories and proofs by swapping
//! `mem` with `dmem` (and `set` with `sed` sorts), and evaluates formulas on
//! finite complement-structures to check the induced isomorphism.

pub mod corpus;
pub mod dual;
pub mod error;
pub mod gen;
pub mod kernel;
pub mod model;
pub mod sexp;
pub mod suite;
pub mod syntax;

pub use error::{CaptureError, DualError, EvalError, GenerateError, MacroError, ParseError};
pub use syntax::{
    alpha_equiv, elaborate_sorts, free_vars, parse_formula, print_formula, substitute, Formula, Language,
    MacroTable, Quantifier, Signature, Sort, Term, Var,
};
