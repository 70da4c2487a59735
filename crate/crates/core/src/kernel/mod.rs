//! Hilbert-style proof checking.
//!
//! The logical axioms are the five first-order schemas
//!
//! - A1: `B -> (C -> B)`
//! - A2: `(B -> (C -> D)) -> ((B -> C) -> (B -> D))`
//! - A3: `(~C -> ~B) -> ((~C -> B) -> C)`
//! - A4: `(forall x B) -> B[x:=t]`, with `t` free for `x` in `B`
//! - A5: `(forall x (B -> C)) -> (B -> forall x C)`, with `x` not free in `B`
//!
//! and the rules are Modus Ponens and Generalization. There are no equality
//! axioms; theories that need them list them as hypotheses. Every formula is
//! normalized (macro expansion, sort elaboration, desugaring) before it is
//! compared, so proofs may be written over surface syntax.

mod check;
mod format;
mod generate;
mod schema;

use std::fmt;

pub use check::{check_proof, check_proof_in};
pub use format::{parse_proof, parse_proof_in, print_proof};
pub use generate::{generate_proof, mutate_step, Mutation};
pub use schema::match_schema;

use crate::syntax::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Schema {
    A1,
    A2,
    A3,
    A4,
    A5,
}

impl Schema {
    pub const ALL: [Schema; 5] = [Schema::A1, Schema::A2, Schema::A3, Schema::A4, Schema::A5];

    pub fn name(self) -> &'static str {
        match self {
            Schema::A1 => "A1",
            Schema::A2 => "A2",
            Schema::A3 => "A3",
            Schema::A4 => "A4",
            Schema::A5 => "A5",
        }
    }

    pub fn from_name(s: &str) -> Option<Schema> {
        Schema::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Justification {
    Axiom(Schema),
    /// Zero-based index into the proof's theory.
    Hypothesis(usize),
    /// `ModusPonens(i, j)`: step `j` is `(imp <step i> <this step>)`.
    ModusPonens(usize, usize),
    /// `Generalization(i, x)`: this step is `(forall x <step i>)`.
    Generalization(usize, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Proof {
    pub theory: Vec<Formula>,
    pub goal: Formula,
    pub steps: Vec<Step>,
}

impl Proof {
    pub fn step(&self, index: usize) -> Option<&Step> {
        self.steps.iter().find(|s| s.index == index)
    }

    /// The five-step derivation of `(imp b b)`: A1, A2, MP, A1, MP.
    pub fn identity(b: &Formula) -> Proof {
        let bb = Formula::imp(b.clone(), b.clone());
        let s1 = Formula::imp(b.clone(), Formula::imp(bb.clone(), b.clone()));
        let s4 = Formula::imp(b.clone(), bb.clone());
        let s3 = Formula::imp(s4.clone(), bb.clone());
        let s2 = Formula::imp(s1.clone(), s3.clone());
        let step = |index, formula, justification| Step { index, formula, justification };
        Proof {
            theory: vec![],
            goal: bb.clone(),
            steps: vec![
                step(1, s1, Justification::Axiom(Schema::A1)),
                step(2, s2, Justification::Axiom(Schema::A2)),
                step(3, s3, Justification::ModusPonens(1, 2)),
                step(4, s4, Justification::Axiom(Schema::A1)),
                step(5, bb, Justification::ModusPonens(4, 3)),
            ],
        }
    }

    /// Applies `f` to the theory, the goal and every step formula.
    pub fn map_formulas(&self, mut f: impl FnMut(&Formula) -> Formula) -> Proof {
        Proof {
            theory: self.theory.iter().map(&mut f).collect(),
            goal: f(&self.goal),
            steps: self
                .steps
                .iter()
                .map(|s| Step { index: s.index, formula: f(&s.formula), justification: s.justification.clone() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    /// The first failing step. Step 0 is used for failures that belong to
    /// no step (an empty proof, a malformed theory member or goal).
    Rejected { step: usize, reason: String },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }

    pub fn rejected_step(&self) -> Option<usize> {
        match self {
            Verdict::Accepted => None,
            Verdict::Rejected { step, .. } => Some(*step),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accepted => f.write_str("accepted"),
            Verdict::Rejected { step, reason } => write!(f, "rejected step {step}: {reason}"),
        }
    }
}
