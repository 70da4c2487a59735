//! Formula and term syntax over a membership signature.
//!
//! Variables carry an explicit sort tag (`class`, `set` or `sed`). A bound
//! occurrence shares the sort of its binder; free occurrences default to
//! `class`. Binding is by name: a quantifier over `x` shadows every occurrence
//! of `x` in its body whatever sort tag the occurrence carries.

mod desugar;
mod elaborate;
mod language;
mod macros;
mod parse;
mod print;
mod vars;

use std::fmt;

pub use desugar::{desugar, is_core};
pub use elaborate::{elaborate_sorts, is_set_guard, is_sed_guard};
pub use language::{Language, Signature};
pub use macros::{MacroDef, MacroTable};
pub use parse::parse_formula;
pub use vars::{
    all_var_names, alpha_equiv, fresh_name, free_vars, is_free_in, rename_bound, retag_free,
    substitute, substitute_unchecked, term_vars,
};

/// Sort tag of a variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    #[default]
    Class,
    Set,
    Sed,
}

impl Sort {
    pub const ALL: [Sort; 3] = [Sort::Class, Sort::Set, Sort::Sed];

    pub fn keyword(self) -> &'static str {
        match self {
            Sort::Class => "class",
            Sort::Set => "set",
            Sort::Sed => "sed",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Sort> {
        match s {
            "class" => Some(Sort::Class),
            "set" => Some(Sort::Set),
            "sed" => Some(Sort::Sed),
            _ => None,
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub name: String,
    pub sort: Sort,
}

impl Var {
    pub fn new(name: impl Into<String>, sort: Sort) -> Self {
        Var { name: name.into(), sort }
    }

    pub fn class(name: impl Into<String>) -> Self {
        Var::new(name, Sort::Class)
    }

    pub fn with_sort(&self, sort: Sort) -> Self {
        Var { name: self.name.clone(), sort }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Var),
    Const(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(Var::class(name))
    }

    pub fn sorted(name: impl Into<String>, sort: Sort) -> Self {
        Term::Var(Var::new(name, sort))
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::Const(name.into())
    }

    pub fn app(head: impl Into<String>, args: Vec<Term>) -> Self {
        Term::App(head.into(), args)
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    Imp,
    And,
    Or,
    Iff,
}

impl Connective {
    pub const ALL: [Connective; 4] = [Connective::Imp, Connective::And, Connective::Or, Connective::Iff];

    pub fn keyword(self) -> &'static str {
        match self {
            Connective::Imp => "imp",
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Iff => "iff",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Connective::ALL.into_iter().find(|c| c.keyword() == s)
    }
}

/// `ExistsUnique` is surface syntax only; macro expansion removes it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantifier {
    Forall,
    Exists,
    ExistsUnique,
}

impl Quantifier {
    pub const ALL: [Quantifier; 3] = [Quantifier::Forall, Quantifier::Exists, Quantifier::ExistsUnique];

    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
            Quantifier::ExistsUnique => "existsUnique",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Quantifier::ALL.into_iter().find(|q| q.keyword() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// Relation or macro atom.
    Atom(String, Vec<Term>),
    Eq(Term, Term),
    Not(Box<Formula>),
    Binary(Connective, Box<Formula>, Box<Formula>),
    Quant(Quantifier, Var, Box<Formula>),
}

impl Formula {
    pub fn atom(rel: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Atom(rel.into(), args)
    }

    pub fn eq(lhs: Term, rhs: Term) -> Self {
        Formula::Eq(lhs, rhs)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn binary(c: Connective, lhs: Formula, rhs: Formula) -> Self {
        Formula::Binary(c, Box::new(lhs), Box::new(rhs))
    }

    pub fn imp(lhs: Formula, rhs: Formula) -> Self {
        Formula::binary(Connective::Imp, lhs, rhs)
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::binary(Connective::And, lhs, rhs)
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::binary(Connective::Or, lhs, rhs)
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Self {
        Formula::binary(Connective::Iff, lhs, rhs)
    }

    /// Builds `(q var body)`, retagging the free occurrences of `var` in
    /// `body` with the binder's sort.
    pub fn quant(q: Quantifier, var: Var, body: Formula) -> Self {
        let body = retag_free(&body, &var.name, var.sort);
        Formula::Quant(q, var, Box::new(body))
    }

    pub fn forall(var: Var, body: Formula) -> Self {
        Formula::quant(Quantifier::Forall, var, body)
    }

    pub fn exists(var: Var, body: Formula) -> Self {
        Formula::quant(Quantifier::Exists, var, body)
    }

    /// Number of formula and term nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
            Formula::Eq(a, b) => 1 + a.size() + b.size(),
            Formula::Not(f) => 1 + f.size(),
            Formula::Binary(_, a, b) => 1 + a.size() + b.size(),
            Formula::Quant(_, _, f) => 2 + f.size(),
        }
    }

    /// Pre-order traversal of every subformula, including `self`.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            out.push(f);
            match f {
                Formula::Atom(..) | Formula::Eq(..) => {}
                Formula::Not(g) | Formula::Quant(_, _, g) => stack.push(g),
                Formula::Binary(_, a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        out
    }

    /// Names of every relation/macro atom that occurs.
    pub fn atom_names(&self) -> Vec<&str> {
        self.subformulas()
            .into_iter()
            .filter_map(|f| match f {
                Formula::Atom(r, _) => Some(r.as_str()),
                _ => None,
            })
            .collect()
    }

    /// Sorts of every binder, in pre-order.
    pub fn binder_sorts(&self) -> Vec<Sort> {
        self.subformulas()
            .into_iter()
            .filter_map(|f| match f {
                Formula::Quant(_, v, _) => Some(v.sort),
                _ => None,
            })
            .collect()
    }

    /// Applies `f` to every term position (atom and equality arguments).
    pub fn map_terms(&self, f: &mut impl FnMut(&Term) -> Term) -> Formula {
        match self {
            Formula::Atom(r, args) => Formula::Atom(r.clone(), args.iter().map(&mut *f).collect()),
            Formula::Eq(a, b) => Formula::Eq(f(a), f(b)),
            Formula::Not(g) => Formula::not(g.map_terms(f)),
            Formula::Binary(c, a, b) => Formula::binary(*c, a.map_terms(f), b.map_terms(f)),
            Formula::Quant(q, v, g) => Formula::Quant(*q, v.clone(), Box::new(g.map_terms(f))),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_term(f, self)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_formula(f, self)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        print::write_binder(f, self)
    }
}

/// Canonical text of a formula.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

/// `[A-Za-z][A-Za-z0-9_+]*`
pub fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '+')
}
