//! Relativization of set- and sed-sorted quantifiers to class quantifiers.

use std::collections::BTreeSet;

use super::{fresh_name, Formula, Quantifier, Sort, Term, Var};

/// `(exists w (mem x w))`
pub fn is_set_guard(x: &Var, w: &str) -> Formula {
    guard("mem", x, w)
}

/// `(exists w (dmem x w))`
pub fn is_sed_guard(x: &Var, w: &str) -> Formula {
    guard("dmem", x, w)
}

fn guard(rel: &str, x: &Var, w: &str) -> Formula {
    Formula::Quant(
        Quantifier::Exists,
        Var::class(w),
        Box::new(Formula::atom(rel, vec![Term::Var(x.clone()), Term::var(w)])),
    )
}

/// Replaces every sorted quantifier with a class quantifier guarded by the
/// sort predicate: `forall` by implication, `exists` and `existsUnique` by
/// conjunction. The result only contains class-sorted variables.
///
/// The guard's bound variable only has to differ from the quantified one, so
/// the translation of a subformula does not depend on its context.
pub fn elaborate_sorts(f: &Formula) -> Formula {
    erase_sorts(&relativize(f))
}

fn relativize(f: &Formula) -> Formula {
    match f {
        Formula::Atom(..) | Formula::Eq(..) => f.clone(),
        Formula::Not(g) => Formula::not(relativize(g)),
        Formula::Binary(c, a, b) => Formula::binary(*c, relativize(a), relativize(b)),
        Formula::Quant(q, v, g) => {
            let body = relativize(g);
            let w = &fresh_name("w", &BTreeSet::from([v.name.clone()]));
            let guard = match v.sort {
                Sort::Class => return Formula::Quant(*q, v.clone(), Box::new(body)),
                Sort::Set => is_set_guard(&v.with_sort(Sort::Class), w),
                Sort::Sed => is_sed_guard(&v.with_sort(Sort::Class), w),
            };
            let body = match q {
                Quantifier::Forall => Formula::imp(guard, body),
                Quantifier::Exists | Quantifier::ExistsUnique => Formula::and(guard, body),
            };
            Formula::Quant(*q, v.with_sort(Sort::Class), Box::new(body))
        }
    }
}

fn erase_term(t: &Term) -> Term {
    match t {
        Term::Var(v) => Term::Var(v.with_sort(Sort::Class)),
        Term::Const(_) => t.clone(),
        Term::App(h, args) => Term::App(h.clone(), args.iter().map(erase_term).collect()),
    }
}

fn erase_sorts(f: &Formula) -> Formula {
    f.map_terms(&mut erase_term)
}
