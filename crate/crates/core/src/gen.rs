//! Seeded random formulas for property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Connective, Formula, Quantifier, Sort, Term, Var};

const VAR_NAMES: [&str; 6] = ["x", "y", "z", "u", "X", "Y"];

/// Symbol pool for random formulas.
#[derive(Clone, Debug)]
pub struct Vocabulary {
    pub relations: Vec<(&'static str, usize)>,
    pub functions: Vec<(&'static str, usize)>,
    pub constants: Vec<&'static str>,
    pub macros: Vec<(&'static str, usize)>,
    pub unique_binder: bool,
}

impl Vocabulary {
    /// `mem`, `dmem`, `comp` and `V`.
    pub fn standard() -> Self {
        Vocabulary {
            relations: vec![("mem", 2), ("dmem", 2)],
            functions: vec![("comp", 1)],
            constants: vec!["V"],
            macros: vec![],
            unique_binder: false,
        }
    }

    /// Symbols a finite complement-structure interprets.
    pub fn model() -> Self {
        Vocabulary { constants: vec![], ..Vocabulary::standard() }
    }

    /// Every symbol of the corpus language, macros included.
    pub fn corpus() -> Self {
        Vocabulary {
            relations: vec![("mem", 2), ("dmem", 2), ("Part", 2), ("Part+", 2), ("Tot", 2), ("Tot+", 2)],
            functions: vec![
                ("comp", 1),
                ("opair", 2),
                ("opair+", 2),
                ("union", 2),
                ("dunion", 2),
                ("singleton", 1),
                ("dsingleton", 1),
            ],
            constants: vec!["V", "emptyset"],
            macros: vec![("subset", 2), ("subsed", 2), ("isSet", 1), ("isSed", 1)],
            unique_binder: true,
        }
    }
}

pub struct FormulaGen {
    rng: ChaCha8Rng,
    vocab: Vocabulary,
}

impl FormulaGen {
    pub fn new(seed: u64, vocab: Vocabulary) -> Self {
        FormulaGen { rng: ChaCha8Rng::seed_from_u64(seed), vocab }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn var_name(&mut self) -> &'static str {
        VAR_NAMES.choose(&mut self.rng).unwrap()
    }

    pub fn sort(&mut self) -> Sort {
        *Sort::ALL.choose(&mut self.rng).unwrap()
    }

    pub fn term(&mut self, depth: usize) -> Term {
        let roll = self.rng.gen_range(0..10);
        if depth > 0 && roll < 2 && !self.vocab.functions.is_empty() {
            let (head, arity) = *self.vocab.functions.choose(&mut self.rng).unwrap();
            let args = (0..arity).map(|_| self.term(depth - 1)).collect();
            Term::app(head, args)
        } else if roll == 2 && !self.vocab.constants.is_empty() {
            Term::constant(*self.vocab.constants.choose(&mut self.rng).unwrap())
        } else {
            Term::var(self.var_name())
        }
    }

    pub fn atom(&mut self) -> Formula {
        let roll = self.rng.gen_range(0..10);
        if roll == 0 {
            return Formula::eq(self.term(1), self.term(1));
        }
        let pool = if roll == 1 && !self.vocab.macros.is_empty() { &self.vocab.macros } else { &self.vocab.relations };
        let (rel, arity) = *pool.choose(&mut self.rng).unwrap();
        let args = (0..arity).map(|_| self.term(1)).collect();
        Formula::atom(rel, args)
    }

    /// A well-formed formula of nesting depth at most `depth`.
    pub fn formula(&mut self, depth: usize) -> Formula {
        if depth == 0 || self.rng.gen_bool(0.2) {
            return self.atom();
        }
        match self.rng.gen_range(0..6) {
            0 => Formula::not(self.formula(depth - 1)),
            1 | 2 => {
                let c = *Connective::ALL.choose(&mut self.rng).unwrap();
                let a = self.formula(depth - 1);
                Formula::binary(c, a, self.formula(depth - 1))
            }
            _ => {
                let q = if self.vocab.unique_binder && self.rng.gen_bool(0.1) {
                    Quantifier::ExistsUnique
                } else if self.rng.gen_bool(0.5) {
                    Quantifier::Forall
                } else {
                    Quantifier::Exists
                };
                let var = Var::new(self.var_name(), self.sort());
                let body = self.formula(depth - 1);
                Formula::quant(q, var, body)
            }
        }
    }
}

/// `count` formulas from one seed, each of depth at most `max_depth`.
pub fn formula_sample(seed: u64, count: usize, max_depth: usize, vocab: Vocabulary) -> Vec<Formula> {
    let mut g = FormulaGen::new(seed, vocab);
    (0..count).map(|_| g.formula(max_depth)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Language;

    #[test]
    fn samples_are_well_formed_and_deterministic() {
        let lang = Language::default();
        let a = formula_sample(11, 200, 8, Vocabulary::corpus());
        let b = formula_sample(11, 200, 8, Vocabulary::corpus());
        assert_eq!(a, b);
        for f in &a {
            lang.check_well_formed(f).unwrap_or_else(|e| panic!("{f}: {e}"));
        }
    }
}
