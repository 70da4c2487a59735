use std::collections::BTreeMap;

use super::{DualModel, Model};
use crate::error::EvalError;
use crate::syntax::{Connective, Formula, Quantifier, Sort, Term};

/// Precomputed tables for evaluation: both membership relations, `comp`,
/// the two sort ranges and the constants.
#[derive(Clone, Debug)]
pub struct Interpretation {
    pub mem: Vec<Vec<bool>>,
    pub dmem: Vec<Vec<bool>>,
    pub comp: Vec<usize>,
    pub set_range: Vec<bool>,
    pub sed_range: Vec<bool>,
    constants: BTreeMap<String, usize>,
}

fn through_comp(table: &[Vec<bool>], comp: &[usize]) -> Vec<Vec<bool>> {
    let n = table.len();
    (0..n).map(|a| (0..n).map(|b| table[comp[a]][comp[b]]).collect()).collect()
}

impl Interpretation {
    fn new(mem: Vec<Vec<bool>>, dmem: Vec<Vec<bool>>, comp: Vec<usize>, explicit: &BTreeMap<String, usize>) -> Self {
        let n = mem.len();
        let set_range: Vec<bool> = (0..n).map(|u| mem[u].iter().any(|&b| b)).collect();
        let sed_range = (0..n).map(|u| set_range[comp[u]]).collect();
        let mut constants = explicit.clone();
        let ext = |x: usize| (0..n).filter(|&a| mem[a][x]).count();
        if let Some(v) = (0..n).find(|&x| ext(x) == n) {
            constants.entry("V".into()).or_insert(v);
        }
        if let Some(e) = (0..n).find(|&x| ext(x) == 0) {
            constants.entry("emptyset".into()).or_insert(e);
        }
        Interpretation { mem, dmem, comp, set_range, sed_range, constants }
    }

    pub fn of_model(m: &Model) -> Result<Self, EvalError> {
        let comp: Vec<usize> =
            m.comp.iter().copied().collect::<Option<_>>().ok_or_else(|| EvalError::Uninterpreted("comp".into()))?;
        let dmem = through_comp(&m.mem, &comp);
        Ok(Interpretation::new(m.mem.clone(), dmem, comp, &m.constants))
    }

    /// `dmem` is read from the dual model; `mem` is recovered through the
    /// complements the same way.
    pub fn of_dual(d: &DualModel) -> Self {
        let mem = through_comp(&d.dmem, &d.comp);
        Interpretation::new(mem, d.dmem.clone(), d.comp.clone(), &d.constants)
    }

    fn size(&self) -> usize {
        self.mem.len()
    }

    fn in_range(&self, sort: Sort, u: usize) -> bool {
        match sort {
            Sort::Class => true,
            Sort::Set => self.set_range[u],
            Sort::Sed => self.sed_range[u],
        }
    }

    fn term(&self, t: &Term, env: &mut Env) -> Result<usize, EvalError> {
        match t {
            Term::Var(v) => env.lookup(&v.name).ok_or_else(|| EvalError::UnboundVariable(v.name.clone())),
            Term::Const(c) => self.constants.get(c).copied().ok_or_else(|| EvalError::Uninterpreted(c.clone())),
            Term::App(h, args) if h == "comp" && args.len() == 1 => Ok(self.comp[self.term(&args[0], env)?]),
            Term::App(h, _) => Err(EvalError::Uninterpreted(h.clone())),
        }
    }

    fn formula(&self, f: &Formula, env: &mut Env) -> Result<bool, EvalError> {
        Ok(match f {
            Formula::Atom(r, args) if args.len() == 2 && (r == "mem" || r == "dmem") => {
                let (a, b) = (self.term(&args[0], env)?, self.term(&args[1], env)?);
                if r == "mem" { self.mem[a][b] } else { self.dmem[a][b] }
            }
            Formula::Atom(r, _) => return Err(EvalError::Uninterpreted(r.clone())),
            Formula::Eq(a, b) => self.term(a, env)? == self.term(b, env)?,
            Formula::Not(g) => !self.formula(g, env)?,
            Formula::Binary(c, a, b) => {
                let a = self.formula(a, env)?;
                let b = self.formula(b, env)?;
                match c {
                    Connective::Imp => !a || b,
                    Connective::And => a && b,
                    Connective::Or => a || b,
                    Connective::Iff => a == b,
                }
            }
            Formula::Quant(q, v, g) => {
                let mut hits = 0;
                for u in (0..self.size()).filter(|&u| self.in_range(v.sort, u)) {
                    env.stack.push((v.name.clone(), u));
                    let r = self.formula(g, env);
                    env.stack.pop();
                    if r? {
                        hits += 1;
                        if *q == Quantifier::Exists {
                            return Ok(true);
                        }
                    } else if *q == Quantifier::Forall {
                        return Ok(false);
                    }
                }
                match q {
                    Quantifier::Forall => true,
                    Quantifier::Exists => false,
                    Quantifier::ExistsUnique => hits == 1,
                }
            }
        })
    }

    pub fn eval(&self, f: &Formula, env: &BTreeMap<String, usize>) -> Result<bool, EvalError> {
        self.formula(f, &mut Env { outer: env, stack: Vec::new() })
    }
}

struct Env<'a> {
    outer: &'a BTreeMap<String, usize>,
    stack: Vec<(String, usize)>,
}

impl Env<'_> {
    fn lookup(&self, name: &str) -> Option<usize> {
        self.stack.iter().rev().find(|(n, _)| n == name).map(|(_, u)| *u).or_else(|| self.outer.get(name).copied())
    }
}

/// Truth of `f` in `m` under `env` (element indices).
pub fn evaluate(m: &Model, f: &Formula, env: &BTreeMap<String, usize>) -> Result<bool, EvalError> {
    Interpretation::of_model(m)?.eval(f, env)
}

/// Truth of `f` in the dual model, whose `dmem` is the primary relation.
pub fn evaluate_dual(d: &DualModel, f: &Formula, env: &BTreeMap<String, usize>) -> Result<bool, EvalError> {
    Interpretation::of_dual(d).eval(f, env)
}
