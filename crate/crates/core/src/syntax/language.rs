use std::collections::{BTreeMap, BTreeSet};

use super::{Formula, MacroTable, Sort, Term};
use crate::error::{MacroError, ParseError};

/// Relation, function and constant symbols with their arities.
///
/// Equality is built in and never part of a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    relations: BTreeMap<String, usize>,
    functions: BTreeMap<String, usize>,
    constants: BTreeSet<String>,
}

impl Default for Signature {
    fn default() -> Self {
        Signature::standard()
    }
}

impl Signature {
    pub fn empty() -> Self {
        Signature { relations: BTreeMap::new(), functions: BTreeMap::new(), constants: BTreeSet::new() }
    }

    /// `mem/2`, `dmem/2`, `comp/1` and the constant `V`.
    pub fn standard() -> Self {
        let mut sig = Signature::empty();
        sig.add_relation("mem", 2).unwrap();
        sig.add_relation("dmem", 2).unwrap();
        sig.add_function("comp", 1).unwrap();
        sig.add_constant("V").unwrap();
        sig
    }

    /// The standard signature plus every symbol used by the axiom corpus.
    pub fn extended() -> Self {
        let mut sig = Signature::standard();
        for (name, arity) in [
            ("opair+", 2),
            ("opair", 2),
            ("dpair", 2),
            ("pair", 2),
            ("dunion", 2),
            ("union", 2),
            ("dsingleton", 1),
            ("singleton", 1),
        ] {
            sig.add_function(name, arity).unwrap();
        }
        for name in ["Part", "Tot", "Part+", "Tot+"] {
            sig.add_relation(name, 2).unwrap();
        }
        sig.add_constant("emptyset").unwrap();
        sig
    }

    fn check_fresh(&self, name: &str) -> Result<(), String> {
        if !super::is_ident(name) {
            return Err(format!("`{name}` is not an identifier"));
        }
        if self.contains(name) {
            return Err(format!("symbol `{name}` is already declared"));
        }
        Ok(())
    }

    pub fn add_relation(&mut self, name: &str, arity: usize) -> Result<(), String> {
        self.check_fresh(name)?;
        self.relations.insert(name.to_string(), arity);
        Ok(())
    }

    pub fn add_function(&mut self, name: &str, arity: usize) -> Result<(), String> {
        self.check_fresh(name)?;
        if arity == 0 {
            return Err(format!("function `{name}` needs at least one argument"));
        }
        self.functions.insert(name.to_string(), arity);
        Ok(())
    }

    pub fn add_constant(&mut self, name: &str) -> Result<(), String> {
        self.check_fresh(name)?;
        self.constants.insert(name.to_string());
        Ok(())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.relations.contains_key(name) || self.functions.contains_key(name) || self.constants.contains(name)
    }

    pub fn relation_arity(&self, name: &str) -> Option<usize> {
        self.relations.get(name).copied()
    }

    pub fn function_arity(&self, name: &str) -> Option<usize> {
        self.functions.get(name).copied()
    }

    pub fn is_constant(&self, name: &str) -> bool {
        self.constants.contains(name)
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, usize)> {
        self.relations.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn functions(&self) -> impl Iterator<Item = (&str, usize)> {
        self.functions.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn constants(&self) -> impl Iterator<Item = &str> {
        self.constants.iter().map(String::as_str)
    }
}

/// A signature together with the macros that may appear as atoms.
#[derive(Clone, Debug)]
pub struct Language {
    pub signature: Signature,
    pub macros: MacroTable,
}

impl Default for Language {
    /// The extended signature with the built-in macros.
    fn default() -> Self {
        Language { signature: Signature::extended(), macros: MacroTable::builtin() }
    }
}

impl Language {
    pub fn new(signature: Signature, macros: MacroTable) -> Result<Self, String> {
        for def in macros.iter() {
            if signature.contains(&def.name) {
                return Err(format!("macro `{}` clashes with a signature symbol", def.name));
            }
        }
        Ok(Language { signature, macros })
    }

    /// Arity of a relation or macro atom.
    pub fn atom_arity(&self, name: &str) -> Option<usize> {
        self.signature
            .relation_arity(name)
            .or_else(|| self.macros.get(name).map(|m| m.params.len()))
    }

    pub fn parse_formula(&self, text: &str) -> Result<Formula, ParseError> {
        super::parse::parse_with(self, text)
    }

    pub fn formula_from_sexp(&self, e: &crate::sexp::Sexp) -> Result<Formula, ParseError> {
        super::parse::formula_from_sexp(self, e)
    }

    /// Replaces every macro atom and `existsUnique` binder.
    pub fn expand_macros(&self, f: &Formula) -> Result<Formula, MacroError> {
        self.macros.expand(f, &self.signature)
    }

    /// Macro expansion, sort elaboration and desugaring: the form the proof
    /// kernel works on.
    pub fn normalize(&self, f: &Formula) -> Result<Formula, MacroError> {
        let expanded = self.expand_macros(f)?;
        Ok(super::desugar(&super::elaborate_sorts(&expanded)))
    }

    /// Checks symbols, arities and sort consistency. A formula that passes
    /// prints to text that parses back to the same tree.
    pub fn check_well_formed(&self, f: &Formula) -> Result<(), String> {
        self.check_formula(f, &mut Vec::new())
    }

    fn check_formula(&self, f: &Formula, scope: &mut Vec<(String, Sort)>) -> Result<(), String> {
        match f {
            Formula::Atom(rel, args) => {
                let arity = self.atom_arity(rel).ok_or_else(|| format!("unknown relation `{rel}`"))?;
                if arity != args.len() {
                    return Err(format!("`{rel}` expects {arity} argument(s), found {}", args.len()));
                }
                args.iter().try_for_each(|t| self.check_term(t, scope))
            }
            Formula::Eq(a, b) => {
                self.check_term(a, scope)?;
                self.check_term(b, scope)
            }
            Formula::Not(g) => self.check_formula(g, scope),
            Formula::Binary(_, a, b) => {
                self.check_formula(a, scope)?;
                self.check_formula(b, scope)
            }
            Formula::Quant(_, v, g) => {
                if !super::is_ident(&v.name) {
                    return Err(format!("`{}` is not an identifier", v.name));
                }
                scope.push((v.name.clone(), v.sort));
                let r = self.check_formula(g, scope);
                scope.pop();
                r
            }
        }
    }

    fn check_term(&self, t: &Term, scope: &[(String, Sort)]) -> Result<(), String> {
        match t {
            Term::Var(v) => {
                if !super::is_ident(&v.name) {
                    return Err(format!("`{}` is not an identifier", v.name));
                }
                match scope.iter().rev().find(|(n, _)| *n == v.name) {
                    Some((_, sort)) if *sort != v.sort => Err(format!(
                        "occurrence of `{}` has sort {} but its binder has sort {}",
                        v.name, v.sort, sort
                    )),
                    Some(_) => Ok(()),
                    None if v.sort != Sort::Class => {
                        Err(format!("free variable `{}` must be class-sorted", v.name))
                    }
                    None if self.signature.is_constant(&v.name) => {
                        Err(format!("free variable `{}` clashes with a constant", v.name))
                    }
                    None => Ok(()),
                }
            }
            Term::Const(c) => {
                if self.signature.is_constant(c) {
                    Ok(())
                } else {
                    Err(format!("unknown constant `{c}`"))
                }
            }
            Term::App(head, args) => {
                let arity = self
                    .signature
                    .function_arity(head)
                    .ok_or_else(|| format!("unknown function `{head}`"))?;
                if arity != args.len() {
                    return Err(format!("`{head}` expects {arity} argument(s), found {}", args.len()));
                }
                args.iter().try_for_each(|a| self.check_term(a, scope))
            }
        }
    }
}
