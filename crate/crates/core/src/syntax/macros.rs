//! Definitional macros: `subset`, `subsed`, `isSet`, `isSed` and the
//! `existsUnique` binder.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    all_var_names, fresh_name, is_ident, rename_bound, substitute_unchecked, term_vars, Formula, Language, Quantifier,
    Signature, Term, Var,
};
use crate::error::MacroError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacroDef {
    pub name: String,
    pub params: Vec<String>,
    pub body: Formula,
}

/// Macro definitions in definition order. A body may only use macros defined
/// before it, so expansion always terminates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MacroTable {
    defs: Vec<MacroDef>,
}

const BUILTIN: [(&str, &[&str], &str); 4] = [
    ("subset", &["X", "Y"], "(forall z (imp (mem z X) (mem z Y)))"),
    ("subsed", &["X", "Y"], "(forall z (imp (dmem z X) (dmem z Y)))"),
    ("isSet", &["x"], "(exists w (mem x w))"),
    ("isSed", &["x"], "(exists w (dmem x w))"),
];

impl MacroTable {
    pub fn empty() -> Self {
        MacroTable::default()
    }

    pub fn builtin() -> Self {
        let lang = Language { signature: Signature::standard(), macros: MacroTable::empty() };
        let mut table = MacroTable::empty();
        for (name, params, body) in BUILTIN {
            let body = lang.parse_formula(body).expect("built-in macro body parses");
            table
                .define(name, params.iter().map(|p| p.to_string()).collect(), body)
                .expect("built-in macros are well-formed");
        }
        table
    }

    pub fn define(&mut self, name: &str, params: Vec<String>, body: Formula) -> Result<(), MacroError> {
        if self.get(name).is_some() {
            return Err(MacroError::Duplicate(name.to_string()));
        }
        let distinct: BTreeSet<_> = params.iter().collect();
        if !is_ident(name) || distinct.len() != params.len() || !params.iter().all(|p| is_ident(p)) {
            return Err(MacroError::Arity { name: name.to_string(), expected: distinct.len(), found: params.len() });
        }
        if let Some(r) = body.atom_names().into_iter().find(|r| *r == name) {
            return Err(MacroError::Undefined { name: name.to_string(), refers_to: r.to_string() });
        }
        self.defs.push(MacroDef { name: name.to_string(), params, body });
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&MacroDef> {
        self.defs.iter().find(|d| d.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &MacroDef> {
        self.defs.iter()
    }

    fn check_atom(&self, name: &str, sig: &Signature) -> Result<Option<&MacroDef>, MacroError> {
        if sig.relation_arity(name).is_some() {
            return Ok(None);
        }
        self.get(name).map(Some).ok_or_else(|| MacroError::UnknownMacro(name.to_string()))
    }

    /// Expands every macro atom and `existsUnique` binder.
    ///
    /// Bound variables of an instantiated body are renamed apart from the
    /// parameters and the variables of the arguments only. That is enough to
    /// avoid capture, and it makes the expansion of a subformula independent
    /// of its context.
    pub fn expand(&self, f: &Formula, sig: &Signature) -> Result<Formula, MacroError> {
        Ok(match f {
            Formula::Atom(name, args) => match self.check_atom(name, sig)? {
                None => f.clone(),
                Some(def) => self.expand(&instantiate(def, args)?, sig)?,
            },
            Formula::Eq(..) => f.clone(),
            Formula::Not(g) => Formula::not(self.expand(g, sig)?),
            Formula::Binary(c, a, b) => Formula::binary(*c, self.expand(a, sig)?, self.expand(b, sig)?),
            Formula::Quant(Quantifier::ExistsUnique, v, g) => unique_to_exists(v, &self.expand(g, sig)?),
            Formula::Quant(q, v, g) => Formula::Quant(*q, v.clone(), Box::new(self.expand(g, sig)?)),
        })
    }

    /// Number of macro atoms and `existsUnique` binders in `f`.
    pub fn occurrences(&self, f: &Formula, sig: &Signature) -> usize {
        f.subformulas()
            .into_iter()
            .filter(|g| match g {
                Formula::Atom(name, _) => sig.relation_arity(name).is_none(),
                Formula::Quant(q, ..) => *q == Quantifier::ExistsUnique,
                _ => false,
            })
            .count()
    }

    /// Expands only the `index`-th macro occurrence of `f` (pre-order),
    /// one level deep. Repeating this until no occurrence is left gives a
    /// result alpha-equivalent to [`MacroTable::expand`].
    pub fn expand_step(&self, f: &Formula, sig: &Signature, index: usize) -> Result<Formula, MacroError> {
        let mut counter = index;
        self.step(f, sig, &mut counter)
    }

    fn step(&self, f: &Formula, sig: &Signature, counter: &mut usize) -> Result<Formula, MacroError> {
        Ok(match f {
            Formula::Atom(name, args) => match self.check_atom(name, sig)? {
                Some(def) => {
                    if *counter == 0 {
                        *counter = usize::MAX;
                        instantiate(def, args)?
                    } else {
                        *counter = counter.saturating_sub(1);
                        f.clone()
                    }
                }
                None => f.clone(),
            },
            Formula::Eq(..) => f.clone(),
            Formula::Not(g) => Formula::not(self.step(g, sig, counter)?),
            Formula::Binary(c, a, b) => {
                let a = self.step(a, sig, counter)?;
                Formula::binary(*c, a, self.step(b, sig, counter)?)
            }
            Formula::Quant(Quantifier::ExistsUnique, v, g) if *counter == 0 => {
                *counter = usize::MAX;
                unique_to_exists(v, g)
            }
            Formula::Quant(q, v, g) => {
                if *q == Quantifier::ExistsUnique {
                    *counter = counter.saturating_sub(1);
                }
                Formula::Quant(*q, v.clone(), Box::new(self.step(g, sig, counter)?))
            }
        })
    }
}

fn instantiate(def: &MacroDef, args: &[Term]) -> Result<Formula, MacroError> {
    if def.params.len() != args.len() {
        return Err(MacroError::Arity { name: def.name.clone(), expected: def.params.len(), found: args.len() });
    }
    let mut avoid: BTreeSet<String> = def.params.iter().cloned().collect();
    avoid.extend(args.iter().flat_map(term_vars).map(|v| v.name));
    let body = rename_bound(&def.body, &mut avoid);
    let map: BTreeMap<String, Term> = def.params.iter().cloned().zip(args.iter().cloned()).collect();
    Ok(substitute_unchecked(&body, &map))
}

/// `(existsUnique x A)` to `(exists x (and A (forall y (imp A[x:=y] (= y x)))))`.
fn unique_to_exists(x: &Var, body: &Formula) -> Formula {
    let mut avoid = all_var_names(body);
    avoid.insert(x.name.clone());
    let y = Var::new(fresh_name(&x.name, &avoid), x.sort);
    let mut map = BTreeMap::new();
    map.insert(x.name.clone(), Term::Var(y.clone()));
    let renamed = substitute_unchecked(body, &map);
    let uniqueness = Formula::Quant(
        Quantifier::Forall,
        y.clone(),
        Box::new(Formula::imp(renamed, Formula::eq(Term::Var(y), Term::Var(x.clone())))),
    );
    Formula::Quant(Quantifier::Exists, x.clone(), Box::new(Formula::and(body.clone(), uniqueness)))
}
