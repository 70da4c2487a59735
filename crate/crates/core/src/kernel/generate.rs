//! Seeded generation of valid proofs, and single-step corruptions of them.
//!
//! A generated proof is a chain: every step except the last is cited by a
//! later one. Deleting or corrupting any step therefore breaks the proof at
//! a predictable place.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{check_proof_in, match_schema, Justification, Proof, Schema, Step};
use crate::error::GenerateError;
use crate::gen::{FormulaGen, Vocabulary};
use crate::syntax::{all_var_names, fresh_name, is_free_in, substitute, Connective, Formula, Language, Quantifier, Term, Var};

const ATTEMPTS: u64 = 32;

/// A step formula in surface form together with its normal form.
#[derive(Clone)]
struct Line {
    surface: Formula,
    core: Formula,
}

struct Builder<'a> {
    lang: &'a Language,
    gen: FormulaGen,
    theory: &'a [Formula],
    steps: Vec<Step>,
}

impl<'a> Builder<'a> {
    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        let index = self.steps.len() + 1;
        self.steps.push(Step { index, formula, justification });
        index
    }

    fn line(&self, surface: Formula) -> Option<Line> {
        let core = self.lang.normalize(&surface).ok()?;
        Some(Line { surface, core })
    }

    fn random_line(&mut self, depth: usize) -> Option<Line> {
        let f = self.gen.formula(depth);
        self.line(f)
    }

    fn random_term(&mut self) -> Term {
        self.gen.term(1)
    }

    fn base(&mut self) -> Option<(usize, Line)> {
        let roll = self.gen.rng().gen_range(0..if self.theory.is_empty() { 5 } else { 6 });
        let (f, schema) = match roll {
            0 => {
                let (b, c) = (self.gen.formula(2), self.gen.formula(2));
                (Formula::imp(b.clone(), Formula::imp(c, b)), Schema::A1)
            }
            1 => {
                let (b, c, d) = (self.gen.formula(1), self.gen.formula(1), self.gen.formula(1));
                (a2_instance(b, c, d), Schema::A2)
            }
            2 => {
                let (b, c) = (self.gen.formula(2), self.gen.formula(2));
                let (nb, nc) = (Formula::not(b.clone()), Formula::not(c.clone()));
                let f = Formula::imp(Formula::imp(nc.clone(), nb), Formula::imp(Formula::imp(nc, b), c));
                (f, Schema::A3)
            }
            3 => {
                let body = self.random_line(2)?.core;
                let x = Var::class(self.gen.var_name());
                let t = self.random_term();
                let inst = substitute(&body, &x, &t).ok()?;
                (Formula::imp(Formula::forall(x, body), inst), Schema::A4)
            }
            4 => {
                let x = Var::class(self.gen.var_name());
                let b = self.random_line(2)?.core;
                if is_free_in(&x.name, &b) {
                    return None;
                }
                let c = self.random_line(2)?.core;
                let lhs = Formula::forall(x.clone(), Formula::imp(b.clone(), c.clone()));
                (Formula::imp(lhs, Formula::imp(b, Formula::forall(x, c))), Schema::A5)
            }
            _ => {
                let k = self.gen.rng().gen_range(0..self.theory.len());
                let line = self.line(self.theory[k].clone())?;
                return Some((self.push(line.surface.clone(), Justification::Hypothesis(k)), line));
            }
        };
        let line = self.line(f)?;
        Some((self.push(line.surface.clone(), Justification::Axiom(schema)), line))
    }

    /// Axiom `major` is `(imp <cur> result)`; derives `result` by MP.
    fn detach(&mut self, cur: usize, major: Formula, schema: Schema, result: Formula) -> Option<(usize, Line)> {
        let major_line = self.line(major)?;
        if !match_schema(&major_line.core, schema) {
            return None;
        }
        let j = self.push(major_line.surface, Justification::Axiom(schema));
        let line = self.line(result)?;
        Some((self.push(line.surface.clone(), Justification::ModusPonens(cur, j)), line))
    }

    fn extend(&mut self, cur: usize, line: &Line) -> Option<(usize, Line)> {
        let mut ops = vec![0, 1];
        if as_imp(&line.core).is_some_and(|(_, r)| as_imp(r).is_some()) {
            ops.push(2);
        }
        if as_imp(&line.core).is_some_and(|(l, r)| matches!((l, r), (Formula::Not(_), Formula::Not(_)))) {
            ops.push(3);
        }
        if as_forall(&line.core).is_some() {
            ops.extend([4, 4]);
        }
        if as_forall(&line.core).is_some_and(|(x, b)| as_imp(b).is_some_and(|(p, _)| !is_free_in(&x.name, p))) {
            ops.push(5);
        }
        if !self.theory.is_empty() {
            ops.push(6);
        }
        match *ops.choose(self.gen.rng()).unwrap() {
            0 => {
                let x = Var::class(self.gen.var_name());
                let f = Formula::Quant(Quantifier::Forall, x.clone(), Box::new(line.surface.clone()));
                let next = self.line(f)?;
                Some((self.push(next.surface.clone(), Justification::Generalization(cur, x.name)), next))
            }
            1 => {
                let c = self.gen.formula(2);
                let result = Formula::imp(c, line.surface.clone());
                let major = Formula::imp(line.surface.clone(), result.clone());
                self.detach(cur, major, Schema::A1, result)
            }
            2 => {
                let (b, cd) = as_imp(&line.core)?;
                let (c, d) = as_imp(cd)?;
                let result = Formula::imp(Formula::imp(b.clone(), c.clone()), Formula::imp(b.clone(), d.clone()));
                self.detach(cur, Formula::imp(line.core.clone(), result.clone()), Schema::A2, result)
            }
            3 => {
                let (not_c, not_b) = as_imp(&line.core)?;
                let (Formula::Not(c), Formula::Not(b)) = (not_c, not_b) else { return None };
                let result = Formula::imp(Formula::imp(not_c.clone(), (**b).clone()), (**c).clone());
                self.detach(cur, Formula::imp(line.core.clone(), result.clone()), Schema::A3, result)
            }
            4 => {
                let (x, body) = as_forall(&line.core)?;
                let t = self.random_term();
                let inst = substitute(body, x, &t).ok()?;
                self.detach(cur, Formula::imp(line.core.clone(), inst.clone()), Schema::A4, inst)
            }
            5 => {
                let (x, body) = as_forall(&line.core)?;
                let (b, c) = as_imp(body)?;
                let result = Formula::imp(b.clone(), Formula::forall(x.clone(), c.clone()));
                self.detach(cur, Formula::imp(line.core.clone(), result.clone()), Schema::A5, result)
            }
            _ => {
                // h; h -> (cur -> h); cur -> h; h
                let k = self.gen.rng().gen_range(0..self.theory.len());
                let h = self.line(self.theory[k].clone())?;
                let hi = self.push(h.surface.clone(), Justification::Hypothesis(k));
                let result = Formula::imp(line.surface.clone(), h.surface.clone());
                let (ri, _) = self.detach(hi, Formula::imp(h.surface.clone(), result.clone()), Schema::A1, result)?;
                Some((self.push(h.surface.clone(), Justification::ModusPonens(cur, ri)), h))
            }
        }
    }
}

fn a2_instance(b: Formula, c: Formula, d: Formula) -> Formula {
    Formula::imp(
        Formula::imp(b.clone(), Formula::imp(c.clone(), d.clone())),
        Formula::imp(Formula::imp(b.clone(), c), Formula::imp(b, d)),
    )
}

fn as_imp(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Binary(Connective::Imp, a, b) => Some((a, b)),
        _ => None,
    }
}

fn as_forall(f: &Formula) -> Option<(&Var, &Formula)> {
    match f {
        Formula::Quant(Quantifier::Forall, v, b) => Some((v, b)),
        _ => None,
    }
}

fn attempt(lang: &Language, seed: u64, depth: usize, theory: &[Formula]) -> Option<Proof> {
    let mut b = Builder { lang, gen: FormulaGen::new(seed, Vocabulary::standard()), theory, steps: Vec::new() };
    let (mut cur, mut line) = (0..8).find_map(|_| b.base())?;
    for _ in 1..depth {
        let mark = b.steps.len();
        let next = (0..8).find_map(|_| {
            b.steps.truncate(mark);
            b.extend(cur, &line)
        })?;
        (cur, line) = next;
    }
    let proof = Proof { theory: theory.to_vec(), goal: line.surface, steps: b.steps };
    check_proof_in(lang, &proof).is_accepted().then_some(proof)
}

/// A valid proof over `theory` built from `depth` rounds: a schema instance
/// or hypothesis, then `depth - 1` extensions by Gen or by MP against a
/// fresh axiom or hypothesis. Deterministic in `seed`.
pub fn generate_proof(seed: u64, depth: usize, theory: &[Formula]) -> Result<Proof, GenerateError> {
    if depth == 0 {
        return Err(GenerateError::BadDepth);
    }
    let lang = Language::default();
    (0..ATTEMPTS)
        .find_map(|i| attempt(&lang, seed.wrapping_add(i.wrapping_mul(0x9E37_79B9_7F4A_7C15)), depth, theory))
        .ok_or(GenerateError::GenerationExhausted { attempts: ATTEMPTS as usize })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Replace the step formula by its negation.
    Formula,
    /// Point the justification somewhere it cannot hold.
    Justification,
}

/// Corrupts the step labelled `index`. On a proof where every step is
/// correct, the corrupted proof is rejected exactly at `index`.
pub fn mutate_step(proof: &Proof, index: usize, mutation: Mutation) -> Proof {
    let mut out = proof.clone();
    let Some(step) = out.steps.iter_mut().find(|s| s.index == index) else {
        return out;
    };
    match mutation {
        Mutation::Formula => step.formula = Formula::not(step.formula.clone()),
        Mutation::Justification => {
            step.justification = match &step.justification {
                Justification::Axiom(s) => {
                    let core = Language::default().normalize(&step.formula).ok();
                    let pos = Schema::ALL.iter().position(|x| x == s).unwrap();
                    (1..5)
                        .map(|k| Schema::ALL[(pos + k) % 5])
                        .find(|t| core.as_ref().is_some_and(|f| !match_schema(f, *t)))
                        .map(Justification::Axiom)
                        .unwrap_or(Justification::Hypothesis(proof.theory.len()))
                }
                Justification::Hypothesis(_) => Justification::Hypothesis(proof.theory.len()),
                Justification::ModusPonens(i, j) => Justification::ModusPonens(*j, *i),
                Justification::Generalization(i, v) => {
                    let mut avoid: BTreeSet<String> = all_var_names(&step.formula);
                    avoid.insert(v.clone());
                    Justification::Generalization(*i, fresh_name(v, &avoid))
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_proof, Verdict};
    use crate::syntax::parse_formula;

    fn ac() -> Formula {
        parse_formula("(forall a (iff (mem a X) (not (mem a (comp X)))))").unwrap()
    }

    #[test]
    fn depth_one_without_theory_is_a_single_axiom() {
        let p = generate_proof(1, 1, &[]).unwrap();
        assert_eq!(p.steps.len(), 1);
        assert!(matches!(p.steps[0].justification, Justification::Axiom(_)));
        assert_eq!(check_proof(&p), Verdict::Accepted);
    }

    #[test]
    fn deeper_proofs_over_a_theory_are_accepted() {
        let p = generate_proof(7, 5, &[ac()]).unwrap();
        assert!(p.steps.len() >= 5);
        assert_eq!(check_proof(&p), Verdict::Accepted);
        assert_eq!(generate_proof(7, 5, &[ac()]).unwrap(), p);
    }

    #[test]
    fn zero_depth_is_an_error() {
        assert!(matches!(generate_proof(0, 0, &[]), Err(GenerateError::BadDepth)));
    }

    #[test]
    fn every_mutation_is_rejected_at_its_step() {
        for seed in 0..40 {
            let p = generate_proof(seed, 4, &[ac()]).unwrap();
            for s in &p.steps {
                for m in [Mutation::Formula, Mutation::Justification] {
                    let bad = mutate_step(&p, s.index, m);
                    assert_eq!(check_proof(&bad).rejected_step(), Some(s.index), "seed {seed} step {} {m:?}", s.index);
                }
            }
        }
    }

    #[test]
    fn every_non_final_step_is_cited() {
        for seed in 0..40 {
            let p = generate_proof(seed, 6, &[ac()]).unwrap();
            for s in &p.steps[..p.steps.len() - 1] {
                let mut cut = p.clone();
                cut.steps.retain(|t| t.index != s.index);
                assert!(!check_proof(&cut).is_accepted(), "seed {seed} without step {}", s.index);
            }
        }
    }
}
