use std::collections::{BTreeMap, BTreeSet};

use super::{Formula, Sort, Term, Var};
use crate::error::CaptureError;

/// Variables of a term, with the sort tags they carry.
pub fn term_vars(t: &Term) -> BTreeSet<Var> {
    let mut out = BTreeSet::new();
    collect_term_vars(t, &mut out);
    out
}

fn collect_term_vars(t: &Term, out: &mut BTreeSet<Var>) {
    match t {
        Term::Var(v) => {
            out.insert(v.clone());
        }
        Term::Const(_) => {}
        Term::App(_, args) => args.iter().for_each(|a| collect_term_vars(a, out)),
    }
}

/// Variables with at least one free occurrence.
pub fn free_vars(f: &Formula) -> BTreeSet<Var> {
    let mut out = BTreeSet::new();
    collect_free(f, &mut Vec::new(), &mut out);
    out
}

fn collect_free<'a>(f: &'a Formula, bound: &mut Vec<&'a str>, out: &mut BTreeSet<Var>) {
    let visit = |t: &Term, bound: &Vec<&str>, out: &mut BTreeSet<Var>| {
        for v in term_vars(t) {
            if !bound.contains(&v.name.as_str()) {
                out.insert(v);
            }
        }
    };
    match f {
        Formula::Atom(_, args) => args.iter().for_each(|t| visit(t, bound, out)),
        Formula::Eq(a, b) => {
            visit(a, bound, out);
            visit(b, bound, out);
        }
        Formula::Not(g) => collect_free(g, bound, out),
        Formula::Binary(_, a, b) => {
            collect_free(a, bound, out);
            collect_free(b, bound, out);
        }
        Formula::Quant(_, v, g) => {
            bound.push(&v.name);
            collect_free(g, bound, out);
            bound.pop();
        }
    }
}

/// Whether a variable named `name` occurs free in `f`.
pub fn is_free_in(name: &str, f: &Formula) -> bool {
    free_vars(f).iter().any(|v| v.name == name)
}

/// Every variable name occurring in `f`, free or bound, binders included.
pub fn all_var_names(f: &Formula) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for sub in f.subformulas() {
        match sub {
            Formula::Atom(_, args) => args.iter().flat_map(term_vars).for_each(|v| {
                out.insert(v.name);
            }),
            Formula::Eq(a, b) => term_vars(a).into_iter().chain(term_vars(b)).for_each(|v| {
                out.insert(v.name);
            }),
            Formula::Quant(_, v, _) => {
                out.insert(v.name.clone());
            }
            Formula::Not(_) | Formula::Binary(..) => {}
        }
    }
    out
}

/// `base` if unused, otherwise `base1`, `base2`, ...
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    if !avoid.contains(base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}{i}"))
        .find(|cand| !avoid.contains(cand))
        .unwrap()
}

/// Replaces every free occurrence of `x` (matched by name) with `t`.
///
/// Fails instead of renaming when `t` is not free for `x`.
pub fn substitute(f: &Formula, x: &Var, t: &Term) -> Result<Formula, CaptureError> {
    let t_names: BTreeSet<String> = term_vars(t).into_iter().map(|v| v.name).collect();
    subst_checked(f, &x.name, t, &t_names, &mut Vec::new())
}

fn subst_term(term: &Term, x: &str, t: &Term) -> (Term, bool) {
    match term {
        Term::Var(v) if v.name == x => (t.clone(), true),
        Term::Var(_) | Term::Const(_) => (term.clone(), false),
        Term::App(h, args) => {
            let mut hit = false;
            let args = args
                .iter()
                .map(|a| {
                    let (a, h) = subst_term(a, x, t);
                    hit |= h;
                    a
                })
                .collect();
            (Term::App(h.clone(), args), hit)
        }
    }
}

fn subst_checked(
    f: &Formula,
    x: &str,
    t: &Term,
    t_names: &BTreeSet<String>,
    binders: &mut Vec<String>,
) -> Result<Formula, CaptureError> {
    let check = |hit: bool, binders: &Vec<String>| -> Result<(), CaptureError> {
        if hit {
            if let Some(b) = binders.iter().rev().find(|b| t_names.contains(*b)) {
                return Err(CaptureError { bound_var: b.clone() });
            }
        }
        Ok(())
    };
    Ok(match f {
        Formula::Atom(r, args) => {
            let mut out = Vec::with_capacity(args.len());
            for a in args {
                let (a, hit) = subst_term(a, x, t);
                check(hit, binders)?;
                out.push(a);
            }
            Formula::Atom(r.clone(), out)
        }
        Formula::Eq(a, b) => {
            let (a, ha) = subst_term(a, x, t);
            let (b, hb) = subst_term(b, x, t);
            check(ha || hb, binders)?;
            Formula::Eq(a, b)
        }
        Formula::Not(g) => Formula::not(subst_checked(g, x, t, t_names, binders)?),
        Formula::Binary(c, a, b) => Formula::binary(
            *c,
            subst_checked(a, x, t, t_names, binders)?,
            subst_checked(b, x, t, t_names, binders)?,
        ),
        Formula::Quant(q, v, g) => {
            if v.name == x {
                f.clone()
            } else {
                binders.push(v.name.clone());
                let g = subst_checked(g, x, t, t_names, binders);
                binders.pop();
                Formula::Quant(*q, v.clone(), Box::new(g?))
            }
        }
    })
}

/// Simultaneous substitution by name with no capture check. Callers must
/// ensure the replacement terms are free for their variables.
pub fn substitute_unchecked(f: &Formula, map: &BTreeMap<String, Term>) -> Formula {
    fn term(t: &Term, map: &BTreeMap<String, Term>, shadow: &[String]) -> Term {
        match t {
            Term::Var(v) if !shadow.contains(&v.name) => map.get(&v.name).cloned().unwrap_or_else(|| t.clone()),
            Term::Var(_) | Term::Const(_) => t.clone(),
            Term::App(h, args) => Term::App(h.clone(), args.iter().map(|a| term(a, map, shadow)).collect()),
        }
    }
    fn go(f: &Formula, map: &BTreeMap<String, Term>, shadow: &mut Vec<String>) -> Formula {
        match f {
            Formula::Atom(r, args) => Formula::Atom(r.clone(), args.iter().map(|a| term(a, map, shadow)).collect()),
            Formula::Eq(a, b) => Formula::Eq(term(a, map, shadow), term(b, map, shadow)),
            Formula::Not(g) => Formula::not(go(g, map, shadow)),
            Formula::Binary(c, a, b) => Formula::binary(*c, go(a, map, shadow), go(b, map, shadow)),
            Formula::Quant(q, v, g) => {
                shadow.push(v.name.clone());
                let g = go(g, map, shadow);
                shadow.pop();
                Formula::Quant(*q, v.clone(), Box::new(g))
            }
        }
    }
    go(f, map, &mut Vec::new())
}

/// Renames every binder of `f` to a name not in `avoid`, recording the new
/// names in `avoid`.
pub fn rename_bound(f: &Formula, avoid: &mut BTreeSet<String>) -> Formula {
    match f {
        Formula::Atom(..) | Formula::Eq(..) => f.clone(),
        Formula::Not(g) => Formula::not(rename_bound(g, avoid)),
        Formula::Binary(c, a, b) => {
            let a = rename_bound(a, avoid);
            Formula::binary(*c, a, rename_bound(b, avoid))
        }
        Formula::Quant(q, v, g) => {
            let new_name = fresh_name(&v.name, avoid);
            avoid.insert(new_name.clone());
            let new_var = Var::new(new_name, v.sort);
            let mut map = BTreeMap::new();
            map.insert(v.name.clone(), Term::Var(new_var.clone()));
            let body = substitute_unchecked(g, &map);
            Formula::Quant(*q, new_var, Box::new(rename_bound(&body, avoid)))
        }
    }
}

/// Sets the sort tag of every free occurrence of `name` to `sort`.
pub fn retag_free(f: &Formula, name: &str, sort: Sort) -> Formula {
    let mut map = BTreeMap::new();
    map.insert(name.to_string(), Term::Var(Var::new(name, sort)));
    substitute_unchecked(f, &map)
}

/// Equality up to consistent renaming of bound variables. Binder sorts and
/// quantifier kinds must agree; free variables compare by name and sort.
pub fn alpha_equiv(f: &Formula, g: &Formula) -> bool {
    alpha(f, g, &mut Vec::new(), &mut Vec::new())
}

fn lookup(stack: &[String], name: &str) -> Option<usize> {
    stack.iter().rev().position(|n| n == name)
}

fn alpha_term(a: &Term, b: &Term, sa: &[String], sb: &[String]) -> bool {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => match (lookup(sa, &x.name), lookup(sb, &y.name)) {
            (Some(i), Some(j)) => i == j,
            (None, None) => x == y,
            _ => false,
        },
        (Term::Const(c), Term::Const(d)) => c == d,
        (Term::App(h, xs), Term::App(k, ys)) => {
            h == k && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| alpha_term(x, y, sa, sb))
        }
        _ => false,
    }
}

fn alpha(f: &Formula, g: &Formula, sf: &mut Vec<String>, sg: &mut Vec<String>) -> bool {
    match (f, g) {
        (Formula::Atom(r, xs), Formula::Atom(s, ys)) => {
            r == s && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| alpha_term(x, y, sf, sg))
        }
        (Formula::Eq(a, b), Formula::Eq(c, d)) => alpha_term(a, c, sf, sg) && alpha_term(b, d, sf, sg),
        (Formula::Not(a), Formula::Not(b)) => alpha(a, b, sf, sg),
        (Formula::Binary(c, a, b), Formula::Binary(d, x, y)) => {
            c == d && alpha(a, x, sf, sg) && alpha(b, y, sf, sg)
        }
        (Formula::Quant(q, v, a), Formula::Quant(r, w, b)) => {
            if q != r || v.sort != w.sort {
                return false;
            }
            sf.push(v.name.clone());
            sg.push(w.name.clone());
            let ok = alpha(a, b, sf, sg);
            sf.pop();
            sg.pop();
            ok
        }
        _ => false,
    }
}
