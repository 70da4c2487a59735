use super::Schema;
use crate::syntax::{is_free_in, substitute, Connective, Formula, Quantifier, Term, Var};

fn as_imp(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Binary(Connective::Imp, a, b) => Some((a, b)),
        _ => None,
    }
}

fn as_not(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Not(a) => Some(a),
        _ => None,
    }
}

fn as_forall(f: &Formula) -> Option<(&Var, &Formula)> {
    match f {
        Formula::Quant(Quantifier::Forall, v, body) => Some((v, body)),
        _ => None,
    }
}

/// Whether `f` is an instance of `schema`. Expects a core formula; the
/// match is purely structural and never looks at symbol names, so it is
/// invariant under any consistent renaming of relation symbols.
pub fn match_schema(f: &Formula, schema: Schema) -> bool {
    match schema {
        Schema::A1 => a1(f),
        Schema::A2 => a2(f),
        Schema::A3 => a3(f),
        Schema::A4 => a4(f),
        Schema::A5 => a5(f),
    }
    .is_some()
}

fn a1(f: &Formula) -> Option<()> {
    let (b, rest) = as_imp(f)?;
    let (_c, b2) = as_imp(rest)?;
    (b == b2).then_some(())
}

fn a2(f: &Formula) -> Option<()> {
    let (lhs, rhs) = as_imp(f)?;
    let (b, cd) = as_imp(lhs)?;
    let (c, d) = as_imp(cd)?;
    let (bc, bd) = as_imp(rhs)?;
    let (b2, c2) = as_imp(bc)?;
    let (b3, d2) = as_imp(bd)?;
    (b == b2 && b == b3 && c == c2 && d == d2).then_some(())
}

fn a3(f: &Formula) -> Option<()> {
    let (lhs, rhs) = as_imp(f)?;
    let (not_c, not_b) = as_imp(lhs)?;
    let c = as_not(not_c)?;
    let b = as_not(not_b)?;
    let (premise, c3) = as_imp(rhs)?;
    let (not_c2, b2) = as_imp(premise)?;
    let c2 = as_not(not_c2)?;
    (c == c2 && c == c3 && b == b2).then_some(())
}

fn a4(f: &Formula) -> Option<()> {
    let (lhs, instance) = as_imp(f)?;
    let (x, body) = as_forall(lhs)?;
    match witness(body, instance, &x.name, &mut Vec::new()) {
        // x has no free occurrence that lines up with a term: B[x:=t] = B.
        None => (body == instance).then_some(()),
        // substitute enforces "t free for x".
        Some(t) => (substitute(body, x, &t).ok()? == *instance).then_some(()),
    }
}

/// The term found in `g` at the first free occurrence of `x` in `f`.
fn witness(f: &Formula, g: &Formula, x: &str, bound: &mut Vec<String>) -> Option<Term> {
    fn term_witness(s: &Term, t: &Term, x: &str) -> Option<Term> {
        match (s, t) {
            (Term::Var(v), _) if v.name == x => Some(t.clone()),
            (Term::App(h, xs), Term::App(k, ys)) if h == k && xs.len() == ys.len() => {
                xs.iter().zip(ys).find_map(|(a, b)| term_witness(a, b, x))
            }
            _ => None,
        }
    }
    let shadowed = bound.iter().any(|b| b == x);
    match (f, g) {
        (Formula::Atom(r, xs), Formula::Atom(s, ys)) if !shadowed && r == s && xs.len() == ys.len() => {
            xs.iter().zip(ys).find_map(|(a, b)| term_witness(a, b, x))
        }
        (Formula::Eq(a, b), Formula::Eq(c, d)) if !shadowed => {
            term_witness(a, c, x).or_else(|| term_witness(b, d, x))
        }
        (Formula::Not(a), Formula::Not(b)) => witness(a, b, x, bound),
        (Formula::Binary(c, a, b), Formula::Binary(d, p, q)) if c == d => {
            witness(a, p, x, bound).or_else(|| witness(b, q, x, bound))
        }
        (Formula::Quant(q, v, a), Formula::Quant(r, w, b)) if q == r && v == w => {
            bound.push(v.name.clone());
            let out = witness(a, b, x, bound);
            bound.pop();
            out
        }
        _ => None,
    }
}

fn a5(f: &Formula) -> Option<()> {
    let (lhs, rhs) = as_imp(f)?;
    let (x, body) = as_forall(lhs)?;
    let (b, c) = as_imp(body)?;
    let (b2, all_c) = as_imp(rhs)?;
    let (x2, c2) = as_forall(all_c)?;
    (x == x2 && b == b2 && c == c2 && !is_free_in(&x.name, b)).then_some(())
}
