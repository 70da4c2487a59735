//! Proof files:
//!
//! ```text
//! (proof (axioms formula*) (goal formula)
//!   (steps (step N formula (axiom A1|A2|A3|A4|A5)) | (step N formula (hyp K))
//!          | (step N formula (mp I J)) | (step N formula (gen I VAR)) ...))
//! ```

use std::fmt::Write;

use super::{Justification, Proof, Schema, Step};
use crate::error::ParseError;
use crate::sexp::{self, Sexp};
use crate::syntax::{is_ident, Language};

pub fn parse_proof(text: &str) -> Result<Proof, ParseError> {
    parse_proof_in(&Language::default(), text)
}

fn number(e: &Sexp) -> Result<usize, ParseError> {
    let s = e.expect_atom("a number")?;
    s.parse().map_err(|_| ParseError::syntax(e.pos, format!("`{s}` is not a non-negative integer")))
}

pub fn parse_proof_in(lang: &Language, text: &str) -> Result<Proof, ParseError> {
    let top = sexp::read_one(text)?;
    let parts = top.expect_tagged("proof")?;
    if parts.len() != 3 {
        return Err(ParseError::syntax(top.pos, "expected (proof (axioms ...) (goal ...) (steps ...))"));
    }
    let theory = parts[0]
        .expect_tagged("axioms")?
        .iter()
        .map(|f| lang.formula_from_sexp(f))
        .collect::<Result<Vec<_>, _>>()?;
    let goal = match parts[1].expect_tagged("goal")? {
        [g] => lang.formula_from_sexp(g)?,
        _ => return Err(ParseError::syntax(parts[1].pos, "expected (goal formula)")),
    };
    let steps = parts[2]
        .expect_tagged("steps")?
        .iter()
        .map(|s| parse_step(lang, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Proof { theory, goal, steps })
}

fn parse_step(lang: &Language, e: &Sexp) -> Result<Step, ParseError> {
    let [n, f, j] = e.expect_tagged("step")? else {
        return Err(ParseError::syntax(e.pos, "expected (step N formula justification)"));
    };
    let index = number(n)?;
    let formula = lang.formula_from_sexp(f)?;
    let items = j.expect_list("a justification")?;
    let head = items.first().map(|h| h.expect_atom("a justification kind")).transpose()?;
    let args = items.get(1..).unwrap_or(&[]);
    let justification = match (head, args) {
        (Some("axiom"), [s]) => {
            let name = s.expect_atom("a schema name")?;
            Justification::Axiom(
                Schema::from_name(name)
                    .ok_or_else(|| ParseError::syntax(s.pos, format!("unknown schema `{name}`")))?,
            )
        }
        (Some("hyp"), [k]) => Justification::Hypothesis(number(k)?),
        (Some("mp"), [i, j]) => Justification::ModusPonens(number(i)?, number(j)?),
        (Some("gen"), [i, v]) => {
            let name = v.expect_atom("a variable")?;
            if !is_ident(name) {
                return Err(ParseError::syntax(v.pos, format!("`{name}` is not a valid identifier")));
            }
            Justification::Generalization(number(i)?, name.to_string())
        }
        _ => return Err(ParseError::syntax(j.pos, "expected (axiom A), (hyp K), (mp I J) or (gen I VAR)")),
    };
    Ok(Step { index, formula, justification })
}

/// Canonical multi-line text of a proof.
pub fn print_proof(proof: &Proof) -> String {
    let mut out = String::from("(proof\n  (axioms");
    for f in &proof.theory {
        write!(out, "\n    {f}").unwrap();
    }
    write!(out, ")\n  (goal {})\n  (steps", proof.goal).unwrap();
    for s in &proof.steps {
        let j = match &s.justification {
            Justification::Axiom(a) => format!("(axiom {a})"),
            Justification::Hypothesis(k) => format!("(hyp {k})"),
            Justification::ModusPonens(i, j) => format!("(mp {i} {j})"),
            Justification::Generalization(i, v) => format!("(gen {i} {v})"),
        };
        write!(out, "\n    (step {} {} {j})", s.index, s.formula).unwrap();
    }
    out.push_str("))\n");
    out
}
