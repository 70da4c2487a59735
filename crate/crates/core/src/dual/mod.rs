//! The duality operator: swapping `mem` with `dmem`, `set` with `sed`, and
//! optionally constants and term formers with their duals.

mod dcet;
mod map;

pub use dcet::{dcet_instance, CorrespondencePair};
pub use map::{parse_dualmap, DualityMap, DualityMapFileError};

use crate::kernel::Proof;
use crate::syntax::{Formula, Term};

fn dualize_term(t: &Term, d: &DualityMap) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::Const(c) => Term::Const(d.symbol(c).to_string()),
        Term::App(h, args) => Term::App(d.symbol(h).to_string(), args.iter().map(|a| dualize_term(a, d)).collect()),
    }
}

/// Renames relation atoms and swapped symbols. Variables, their sorts,
/// equality, connectives and quantifiers are left alone.
pub fn dualize_formula(f: &Formula, d: &DualityMap) -> Formula {
    match f {
        Formula::Atom(r, args) => Formula::Atom(d.relation(r).to_string(), args.iter().map(|t| dualize_term(t, d)).collect()),
        Formula::Eq(a, b) => Formula::Eq(dualize_term(a, d), dualize_term(b, d)),
        Formula::Not(g) => Formula::not(dualize_formula(g, d)),
        Formula::Binary(c, a, b) => Formula::binary(*c, dualize_formula(a, d), dualize_formula(b, d)),
        Formula::Quant(q, v, g) => Formula::Quant(*q, v.clone(), Box::new(dualize_formula(g, d))),
    }
}

/// Swaps the sort of every bound variable (binder and occurrences). Free
/// variables keep their tags.
pub fn flip_sorts(f: &Formula, d: &DualityMap) -> Formula {
    flip(f, d, &mut Vec::new())
}

fn flip(f: &Formula, d: &DualityMap, bound: &mut Vec<String>) -> Formula {
    match f {
        Formula::Quant(q, v, g) => {
            bound.push(v.name.clone());
            let body = flip(g, d, bound);
            bound.pop();
            Formula::Quant(*q, v.with_sort(d.sort(v.sort)), Box::new(body))
        }
        Formula::Not(g) => Formula::not(flip(g, d, bound)),
        Formula::Binary(c, a, b) => Formula::binary(*c, flip(a, d, bound), flip(b, d, bound)),
        Formula::Atom(..) | Formula::Eq(..) => f.map_terms(&mut |t| flip_term(t, d, bound)),
    }
}

fn flip_term(t: &Term, d: &DualityMap, bound: &[String]) -> Term {
    match t {
        Term::Var(v) if bound.contains(&v.name) => Term::Var(v.with_sort(d.sort(v.sort))),
        Term::Var(_) | Term::Const(_) => t.clone(),
        Term::App(h, args) => Term::App(h.clone(), args.iter().map(|a| flip_term(a, d, bound)).collect()),
    }
}

/// The full operator: `dualize_formula ∘ flip_sorts`.
pub fn dual(f: &Formula, d: &DualityMap) -> Formula {
    dualize_formula(&flip_sorts(f, d), d)
}

pub fn dualize_theory(theory: &[Formula], d: &DualityMap) -> Vec<Formula> {
    theory.iter().map(|f| dual(f, d)).collect()
}

/// Maps every formula of the proof through [`dual`]; justifications are
/// kept verbatim.
pub fn dualize_proof(p: &Proof, d: &DualityMap) -> Proof {
    p.map_formulas(|f| dual(f, d))
}
