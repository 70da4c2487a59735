use std::collections::HashMap;

use super::{match_schema, Justification, Proof, Verdict};
use crate::syntax::{Formula, Language, Quantifier};

/// Checks `proof` over the default language.
pub fn check_proof(proof: &Proof) -> Verdict {
    check_proof_in(&Language::default(), proof)
}

fn reject(step: usize, reason: impl Into<String>) -> Verdict {
    Verdict::Rejected { step, reason: reason.into() }
}

pub fn check_proof_in(lang: &Language, proof: &Proof) -> Verdict {
    let mut theory = Vec::with_capacity(proof.theory.len());
    for (k, f) in proof.theory.iter().enumerate() {
        match lang.normalize(f) {
            Ok(n) => theory.push(n),
            Err(e) => return reject(0, format!("theory member {k}: {e}")),
        }
    }
    let goal = match lang.normalize(&proof.goal) {
        Ok(g) => g,
        Err(e) => return reject(0, format!("goal: {e}")),
    };
    if proof.steps.is_empty() {
        return reject(0, "proof has no steps");
    }

    let mut proved: HashMap<usize, Formula> = HashMap::new();
    let mut last_index = None;
    for step in &proof.steps {
        let n = step.index;
        if last_index.is_some_and(|prev| n <= prev) {
            return reject(n, "step indices must be strictly increasing");
        }
        last_index = Some(n);
        let current = match lang.normalize(&step.formula) {
            Ok(f) => f,
            Err(e) => return reject(n, e.to_string()),
        };
        let cited = |i: usize| proved.get(&i).ok_or_else(|| reject(n, format!("cites step {i}, which does not precede it")));
        let verdict = match &step.justification {
            Justification::Axiom(schema) => {
                if match_schema(&current, *schema) {
                    None
                } else {
                    Some(reject(n, format!("not an instance of {schema}")))
                }
            }
            Justification::Hypothesis(k) => match theory.get(*k) {
                None => Some(reject(n, format!("hypothesis {k} is out of range"))),
                Some(h) if *h == current => None,
                Some(_) => Some(reject(n, format!("not theory member {k}"))),
            },
            Justification::ModusPonens(i, j) => match (cited(*i), cited(*j)) {
                (Err(v), _) | (_, Err(v)) => Some(v),
                (Ok(minor), Ok(major)) => {
                    let ok = matches!(major, Formula::Binary(crate::syntax::Connective::Imp, a, b)
                        if **a == *minor && **b == current);
                    (!ok).then(|| reject(n, "not MP of cited steps"))
                }
            },
            Justification::Generalization(i, var) => match cited(*i) {
                Err(v) => Some(v),
                Ok(premise) => {
                    let ok = matches!(&current, Formula::Quant(Quantifier::Forall, v, body)
                        if v.name == *var && **body == *premise);
                    (!ok).then(|| reject(n, "not Gen of cited step"))
                }
            },
        };
        if let Some(v) = verdict {
            return v;
        }
        proved.insert(n, current);
    }

    let last = proof.steps.last().unwrap();
    if proved[&last.index] != goal {
        return reject(last.index, "last step does not prove the goal");
    }
    Verdict::Accepted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Schema, Step};
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn step(index: usize, f: &str, j: Justification) -> Step {
        Step { index, formula: p(f), justification: j }
    }

    fn identity_proof() -> Proof {
        Proof::identity(&p("(mem x y)"))
    }

    #[test]
    fn accepts_identity_derivation() {
        assert_eq!(check_proof(&identity_proof()), Verdict::Accepted);
    }

    #[test]
    fn rejects_corrupted_mp_step() {
        let mut proof = identity_proof();
        proof.steps[2].formula = p("(imp (imp (mem x y) (imp (mem x y) (mem x y))) (mem x y))");
        assert_eq!(check_proof(&proof), Verdict::Rejected { step: 3, reason: "not MP of cited steps".into() });
    }

    #[test]
    fn accepts_single_hypothesis_step() {
        let ac = p("(forall a (iff (mem a X) (not (mem a (comp X)))))");
        let proof = Proof {
            theory: vec![ac.clone()],
            goal: ac.clone(),
            steps: vec![Step { index: 1, formula: ac, justification: Justification::Hypothesis(0) }],
        };
        assert_eq!(check_proof(&proof), Verdict::Accepted);
    }

    #[test]
    fn rejects_bookkeeping_errors() {
        let mut proof = identity_proof();
        proof.steps[4].justification = Justification::ModusPonens(4, 6);
        assert_eq!(proof_step(&proof), Some(5));

        let mut proof = identity_proof();
        proof.steps[1].index = 1;
        assert_eq!(proof_step(&proof), Some(1));

        let mut proof = identity_proof();
        proof.goal = p("(mem x y)");
        assert_eq!(proof_step(&proof), Some(5));

        let mut proof = identity_proof();
        proof.steps[0].justification = Justification::Hypothesis(0);
        assert_eq!(proof_step(&proof), Some(1));

        let empty = Proof { theory: vec![], goal: p("(mem x y)"), steps: vec![] };
        assert_eq!(proof_step(&empty), Some(0));
    }

    fn proof_step(p: &Proof) -> Option<usize> {
        check_proof(p).rejected_step()
    }

    #[test]
    fn generalization_checks_variable_and_body() {
        let ac = p("(mem x x)");
        let mk = |var: &str, f: &str| Proof {
            theory: vec![ac.clone()],
            goal: p(f),
            steps: vec![
                Step { index: 1, formula: ac.clone(), justification: Justification::Hypothesis(0) },
                Step { index: 2, formula: p(f), justification: Justification::Generalization(1, var.into()) },
            ],
        };
        assert!(check_proof(&mk("x", "(forall x (mem x x))")).is_accepted());
        assert!(!check_proof(&mk("y", "(forall x (mem x x))")).is_accepted());
        assert!(!check_proof(&mk("x", "(forall x (mem x V))")).is_accepted());
    }

    #[test]
    fn surface_connectives_are_desugared_before_checking() {
        // (exists x A) -> ... is stored as (not (forall x (not A))).
        let f = "(imp (and (mem x y) (exists z (mem z z))) (imp (= x x) (and (mem x y) (exists z (mem z z)))))";
        let proof = Proof {
            theory: vec![],
            goal: p(f),
            steps: vec![step(1, f, Justification::Axiom(Schema::A1))],
        };
        assert!(check_proof(&proof).is_accepted());
        let desugared = proof.map_formulas(|g| Language::default().normalize(g).unwrap());
        assert!(check_proof(&desugared).is_accepted());
    }
}
