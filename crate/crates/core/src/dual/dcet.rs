use std::collections::BTreeSet;

use crate::error::DualError;
use crate::syntax::{all_var_names, fresh_name, free_vars, Formula, Sort, Term, Var};

/// A classical sentence and its dual counterpart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondencePair {
    pub name: String,
    pub classic: Formula,
    pub dual: Formula,
    /// Where the pair comes from, free text.
    pub section: String,
}

/// `x1` for one variable, otherwise left-nested pairs built with `pair`.
fn tuple(vars: &[String], pair: &str) -> Term {
    let mut it = vars.iter().map(Term::var);
    let first = it.next().expect("at least one tuple variable");
    it.fold(first, |acc, v| Term::app(pair, vec![acc, v]))
}

fn check_dwf(f: &Formula) -> Result<(), DualError> {
    for sub in f.subformulas() {
        match sub {
            Formula::Atom(r, _) if r != "dmem" => {
                return Err(DualError::NotDwf(format!("relation `{r}` is not allowed, only `=` and `dmem`")))
            }
            Formula::Quant(_, v, _) if v.sort != Sort::Sed => {
                return Err(DualError::NotDwf(format!("bound variable `{}` is not sed-sorted", v.name)))
            }
            _ => {}
        }
    }
    Ok(())
}

/// Φ⁺: `dmem` becomes `mem` and bound sed variables become set variables.
fn plus(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_, args) => Formula::atom("mem", args.iter().map(plus_term).collect()),
        Formula::Eq(a, b) => Formula::Eq(plus_term(a), plus_term(b)),
        Formula::Not(g) => Formula::not(plus(g)),
        Formula::Binary(c, a, b) => Formula::binary(*c, plus(a), plus(b)),
        Formula::Quant(q, v, g) => Formula::Quant(*q, v.with_sort(Sort::Set), Box::new(plus(g))),
    }
}

fn plus_term(t: &Term) -> Term {
    match t {
        Term::Var(v) if v.sort == Sort::Sed => Term::Var(v.with_sort(Sort::Set)),
        Term::Var(_) | Term::Const(_) => t.clone(),
        Term::App(h, args) => Term::App(h.clone(), args.iter().map(plus_term).collect()),
    }
}

fn class_existence(z: &str, xs: &[String], sort: Sort, rel: &str, pair: &str, body: Formula) -> Formula {
    let member = Formula::atom(rel, vec![tuple(xs, pair), Term::var(z)]);
    let inner = xs
        .iter()
        .rev()
        .fold(Formula::iff(member, body), |acc, x| Formula::forall(Var::new(x.clone(), sort), acc));
    Formula::exists(Var::class(z), inner)
}

/// The dual class-existence sentence for the dwf formula `phi`
///
/// `(exists Z (forall (x1 sed) ... (iff (dmem <<x1,...,xm>> Z) phi)))`
///
/// paired with the classical instance over Φ⁺ (`mem`, `opair`, set
/// variables). `tuple_vars` are the free variables of `phi` that become
/// tuple components; `params` are the remaining free variables.
pub fn dcet_instance(phi: &Formula, tuple_vars: &[&str], params: &[&str]) -> Result<CorrespondencePair, DualError> {
    if tuple_vars.is_empty() {
        return Err(DualError::NotDwf("at least one tuple variable is required".into()));
    }
    check_dwf(phi)?;
    let allowed: BTreeSet<&str> = tuple_vars.iter().chain(params).copied().collect();
    if let Some(v) = free_vars(phi).into_iter().find(|v| !allowed.contains(v.name.as_str())) {
        return Err(DualError::StrayFreeVariable(v.name));
    }
    let mut avoid = all_var_names(phi);
    avoid.extend(allowed.iter().map(|s| s.to_string()));
    let z = fresh_name("Z", &avoid);
    let xs: Vec<String> = tuple_vars.iter().map(|s| s.to_string()).collect();
    let dual = class_existence(&z, &xs, Sort::Sed, "dmem", "opair+", phi.clone());
    let classic = class_existence(&z, &xs, Sort::Set, "mem", "opair", plus(phi));
    Ok(CorrespondencePair {
        name: format!("DCET[{}]", xs.join(",")),
        classic,
        dual,
        section: "dual class existence".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::{dual, DualityMap};
    use crate::syntax::{alpha_equiv, parse_formula};

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn single_variable_instance() {
        let pair = dcet_instance(&p("(dmem x1 Y1)"), &["x1"], &["Y1"]).unwrap();
        assert_eq!(pair.dual, p("(exists Z (forall (x1 sed) (iff (dmem x1 Z) (dmem x1 Y1))))"));
        assert_eq!(pair.classic, p("(exists Z (forall (x1 set) (iff (mem x1 Z) (mem x1 Y1))))"));
        assert!(alpha_equiv(&dual(&pair.dual, &DualityMap::corpus()), &pair.classic));
    }

    #[test]
    fn pairs_and_triples_use_nested_dual_pairs() {
        let pair = dcet_instance(&p("(dmem x1 x2)"), &["x1", "x2"], &[]).unwrap();
        assert_eq!(
            pair.dual,
            p("(exists Z (forall (x1 sed) (forall (x2 sed) (iff (dmem (opair+ x1 x2) Z) (dmem x1 x2)))))")
        );
        let phi = p("(exists (w sed) (and (dmem w Z) (dmem x3 w)))");
        let triple = dcet_instance(&phi, &["x1", "x2", "x3"], &["Z"]).unwrap();
        let s = triple.dual.to_string();
        assert!(s.starts_with("(exists Z1 "), "{s}");
        assert!(s.contains("(opair+ (opair+ x1 x2) x3)"), "{s}");
        assert!(alpha_equiv(&dual(&triple.dual, &DualityMap::corpus()), &triple.classic));
    }

    #[test]
    fn rejects_non_dwf_input() {
        assert!(matches!(dcet_instance(&p("(mem x1 Y)"), &["x1"], &["Y"]), Err(DualError::NotDwf(_))));
        assert!(matches!(
            dcet_instance(&p("(exists (w set) (dmem w x1))"), &["x1"], &[]),
            Err(DualError::NotDwf(_))
        ));
        assert!(matches!(dcet_instance(&p("(dmem x1 Y)"), &[], &["Y"]), Err(DualError::NotDwf(_))));
        assert_eq!(
            dcet_instance(&p("(dmem x1 Y)"), &["x1"], &[]),
            Err(DualError::StrayFreeVariable("Y".into()))
        );
    }
}
