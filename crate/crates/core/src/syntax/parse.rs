use super::{is_ident, Connective, Formula, Language, Quantifier, Sort, Term, Var};
use crate::error::ParseError;
use crate::sexp::{self, Sexp, SexpKind};

/// Parses one formula over the default language.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    Language::default().parse_formula(text)
}

pub(super) fn parse_with(lang: &Language, text: &str) -> Result<Formula, ParseError> {
    let e = sexp::read_one(text)?;
    formula_from_sexp(lang, &e)
}

pub(super) fn formula_from_sexp(lang: &Language, e: &Sexp) -> Result<Formula, ParseError> {
    Parser { lang, scope: Vec::new() }.formula(e)
}

struct Parser<'a> {
    lang: &'a Language,
    /// Enclosing binders, innermost last.
    scope: Vec<Var>,
}

fn ident<'e>(e: &'e Sexp, what: &str) -> Result<&'e str, ParseError> {
    let name = e.expect_atom(what)?;
    if !is_ident(name) {
        return Err(ParseError::syntax(e.pos, format!("`{name}` is not a valid identifier")));
    }
    Ok(name)
}

fn arity(symbol: &str, expected: usize, found: usize) -> ParseError {
    ParseError::Arity { symbol: symbol.to_string(), expected, found }
}

impl Parser<'_> {
    fn formula(&mut self, e: &Sexp) -> Result<Formula, ParseError> {
        let items = match &e.kind {
            SexpKind::List(items) if !items.is_empty() => items,
            _ => return Err(ParseError::syntax(e.pos, "expected a formula")),
        };
        let head = items[0].expect_atom("a formula head")?;
        let args = &items[1..];
        if head == "=" {
            if args.len() != 2 {
                return Err(arity("=", 2, args.len()));
            }
            return Ok(Formula::Eq(self.term(&args[0])?, self.term(&args[1])?));
        }
        if head == "not" {
            if args.len() != 1 {
                return Err(arity("not", 1, args.len()));
            }
            return Ok(Formula::not(self.formula(&args[0])?));
        }
        if let Some(c) = Connective::from_keyword(head) {
            if args.len() != 2 {
                return Err(arity(head, 2, args.len()));
            }
            let lhs = self.formula(&args[0])?;
            let rhs = self.formula(&args[1])?;
            return Ok(Formula::binary(c, lhs, rhs));
        }
        if let Some(q) = Quantifier::from_keyword(head) {
            if args.len() != 2 {
                return Err(arity(head, 2, args.len()));
            }
            let var = self.binder(&args[0])?;
            self.scope.push(var.clone());
            let body = self.formula(&args[1]);
            self.scope.pop();
            return Ok(Formula::Quant(q, var, Box::new(body?)));
        }
        let expected = self.lang.atom_arity(head).ok_or_else(|| {
            ParseError::syntax(items[0].pos, format!("unknown relation or macro `{head}`"))
        })?;
        if expected != args.len() {
            return Err(arity(head, expected, args.len()));
        }
        let terms = args.iter().map(|a| self.term(a)).collect::<Result<_, _>>()?;
        Ok(Formula::Atom(head.to_string(), terms))
    }

    fn binder(&self, e: &Sexp) -> Result<Var, ParseError> {
        match &e.kind {
            SexpKind::Atom(_) => Ok(Var::class(ident(e, "a variable")?)),
            SexpKind::List(items) if items.len() == 2 => {
                let name = ident(&items[0], "a variable name")?;
                let sort_word = items[1].expect_atom("a sort")?;
                let sort = Sort::from_keyword(sort_word).ok_or_else(|| {
                    ParseError::syntax(items[1].pos, format!("unknown sort `{sort_word}`"))
                })?;
                Ok(Var::new(name, sort))
            }
            _ => Err(ParseError::syntax(e.pos, "expected a variable or (variable sort)")),
        }
    }

    fn term(&self, e: &Sexp) -> Result<Term, ParseError> {
        match &e.kind {
            SexpKind::Atom(_) => {
                let name = ident(e, "a term")?;
                if let Some(v) = self.scope.iter().rev().find(|v| v.name == name) {
                    Ok(Term::Var(v.clone()))
                } else if self.lang.signature.is_constant(name) {
                    Ok(Term::Const(name.to_string()))
                } else {
                    Ok(Term::var(name))
                }
            }
            SexpKind::List(items) if !items.is_empty() => {
                let head = ident(&items[0], "a function symbol")?;
                let expected = self.lang.signature.function_arity(head).ok_or_else(|| {
                    ParseError::syntax(items[0].pos, format!("unknown function `{head}`"))
                })?;
                let args = &items[1..];
                if expected != args.len() {
                    return Err(arity(head, expected, args.len()));
                }
                let args = args.iter().map(|a| self.term(a)).collect::<Result<_, _>>()?;
                Ok(Term::App(head.to_string(), args))
            }
            _ => Err(ParseError::syntax(e.pos, "expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::print_formula;

    fn atom(rel: &str, args: Vec<Term>) -> Formula {
        Formula::atom(rel, args)
    }

    #[test]
    fn parses_complement_axiom_body() {
        let f = parse_formula("(forall a (iff (mem a X) (not (mem a (comp X)))))").unwrap();
        let expected = Formula::forall(
            Var::class("a"),
            Formula::iff(
                atom("mem", vec![Term::var("a"), Term::var("X")]),
                Formula::not(atom("mem", vec![Term::var("a"), Term::app("comp", vec![Term::var("X")])])),
            ),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn parses_smallest_equality() {
        assert_eq!(parse_formula("(= X X)").unwrap(), Formula::eq(Term::var("X"), Term::var("X")));
    }

    #[test]
    fn rejects_arity_violation() {
        let err = parse_formula("(mem x)").unwrap_err();
        assert_eq!(err, ParseError::Arity { symbol: "mem".into(), expected: 2, found: 1 });
        assert!(matches!(parse_formula("(mem (comp x y) z)"), Err(ParseError::Arity { .. })));
    }

    #[test]
    fn rejects_unknown_symbols() {
        assert!(matches!(parse_formula("(foo x y)"), Err(ParseError::Syntax { position: 1, .. })));
        assert!(matches!(parse_formula("(mem (bar x) y)"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_formula("(forall (x big) (mem x x))"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_formula("(mem x 1y)"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn bound_occurrences_take_binder_sort() {
        let f = parse_formula("(forall (u sed) (dmem u z))").unwrap();
        let Formula::Quant(_, _, body) = &f else { panic!() };
        assert_eq!(
            **body,
            atom("dmem", vec![Term::sorted("u", Sort::Sed), Term::var("z")])
        );
    }

    #[test]
    fn constants_resolve_unless_shadowed() {
        let f = parse_formula("(mem V x)").unwrap();
        assert_eq!(f, atom("mem", vec![Term::constant("V"), Term::var("x")]));
        let g = parse_formula("(forall V (mem V x))").unwrap();
        assert_eq!(g, Formula::forall(Var::class("V"), atom("mem", vec![Term::var("V"), Term::var("x")])));
    }

    #[test]
    fn whitespace_and_comments_are_ignored() {
        let a = parse_formula("(forall a\n  ; body\n  (iff (mem a X)\t(not (mem a (comp X)))))").unwrap();
        let b = parse_formula("(forall a (iff (mem a X) (not (mem a (comp X)))))").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn complement_axiom_is_a_print_fixpoint() {
        let src = "(forall a (iff (mem a X) (not (mem a (comp X)))))";
        assert_eq!(print_formula(&parse_formula(src).unwrap()), src);
    }

    #[test]
    fn parses_macro_atoms_and_unique_binder() {
        let f = parse_formula("(forall X (existsUnique Z (forall (y sed) (iff (dmem y Z) (subsed y X)))))").unwrap();
        assert!(f.atom_names().contains(&"subsed"));
        assert!(matches!(parse_formula("(subsed y)"), Err(ParseError::Arity { .. })));
    }
}
