use super::{Connective, Formula, Quantifier};

/// Rewrites `and`, `or`, `iff` and `exists` into the `{not, imp, forall}`
/// core with the classical abbreviations:
///
/// - `(and A B)`    = `(not (imp A (not B)))`
/// - `(or A B)`     = `(imp (not A) B)`
/// - `(iff A B)`    = `(and (imp A B) (imp B A))`
/// - `(exists x A)` = `(not (forall x (not A)))`
///
/// `existsUnique` must already be expanded; it is left in place otherwise.
pub fn desugar(f: &Formula) -> Formula {
    match f {
        Formula::Atom(..) | Formula::Eq(..) => f.clone(),
        Formula::Not(g) => Formula::not(desugar(g)),
        Formula::Binary(c, a, b) => {
            let a = desugar(a);
            let b = desugar(b);
            match c {
                Connective::Imp => Formula::imp(a, b),
                Connective::And => core_and(a, b),
                Connective::Or => Formula::imp(Formula::not(a), b),
                Connective::Iff => core_and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a)),
            }
        }
        Formula::Quant(Quantifier::Exists, v, g) => Formula::not(Formula::Quant(
            Quantifier::Forall,
            v.clone(),
            Box::new(Formula::not(desugar(g))),
        )),
        Formula::Quant(q, v, g) => Formula::Quant(*q, v.clone(), Box::new(desugar(g))),
    }
}

fn core_and(a: Formula, b: Formula) -> Formula {
    Formula::not(Formula::imp(a, Formula::not(b)))
}

/// Whether `f` only uses atoms, equality, `not`, `imp` and `forall`.
pub fn is_core(f: &Formula) -> bool {
    f.subformulas().into_iter().all(|g| match g {
        Formula::Binary(c, ..) => *c == Connective::Imp,
        Formula::Quant(q, ..) => *q == Quantifier::Forall,
        _ => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn fixed_abbreviations() {
        assert_eq!(desugar(&p("(and (mem a b) (mem b a))")), p("(not (imp (mem a b) (not (mem b a))))"));
        assert_eq!(desugar(&p("(or (mem a b) (mem b a))")), p("(imp (not (mem a b)) (mem b a))"));
        assert_eq!(desugar(&p("(exists x (mem x x))")), p("(not (forall x (not (mem x x))))"));
        assert_eq!(
            desugar(&p("(iff (mem a b) (mem b a))")),
            p("(not (imp (imp (mem a b) (mem b a)) (not (imp (mem b a) (mem a b)))))")
        );
    }

    #[test]
    fn output_is_core_and_desugar_is_idempotent() {
        let f = p("(forall X (iff (exists y (or (mem y X) (= y X))) (and (dmem X X) (not (mem X X)))))");
        let d = desugar(&f);
        assert!(is_core(&d));
        assert!(!is_core(&f));
        assert_eq!(desugar(&d), d);
    }
}
