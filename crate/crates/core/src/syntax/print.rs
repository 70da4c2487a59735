use std::fmt::{self, Write};

use super::{Formula, Sort, Term, Var};

pub(super) fn write_term(out: &mut impl Write, t: &Term) -> fmt::Result {
    match t {
        Term::Var(v) => out.write_str(&v.name),
        Term::Const(c) => out.write_str(c),
        Term::App(head, args) => {
            write!(out, "({head}")?;
            for a in args {
                out.write_char(' ')?;
                write_term(out, a)?;
            }
            out.write_char(')')
        }
    }
}

pub(super) fn write_binder(out: &mut impl Write, v: &Var) -> fmt::Result {
    if v.sort == Sort::Class {
        out.write_str(&v.name)
    } else {
        write!(out, "({} {})", v.name, v.sort)
    }
}

pub(super) fn write_formula(out: &mut impl Write, f: &Formula) -> fmt::Result {
    match f {
        Formula::Atom(rel, args) => {
            write!(out, "({rel}")?;
            for a in args {
                out.write_char(' ')?;
                write_term(out, a)?;
            }
            out.write_char(')')
        }
        Formula::Eq(a, b) => {
            out.write_str("(= ")?;
            write_term(out, a)?;
            out.write_char(' ')?;
            write_term(out, b)?;
            out.write_char(')')
        }
        Formula::Not(g) => {
            out.write_str("(not ")?;
            write_formula(out, g)?;
            out.write_char(')')
        }
        Formula::Binary(c, a, b) => {
            write!(out, "({} ", c.keyword())?;
            write_formula(out, a)?;
            out.write_char(' ')?;
            write_formula(out, b)?;
            out.write_char(')')
        }
        Formula::Quant(q, v, g) => {
            write!(out, "({} ", q.keyword())?;
            write_binder(out, v)?;
            out.write_char(' ')?;
            write_formula(out, g)?;
            out.write_char(')')
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn prints_equality() {
        let f = Formula::eq(Term::var("X"), Term::var("Y"));
        assert_eq!(print_formula(&f), "(= X Y)");
    }

    #[test]
    fn prints_sorted_binder() {
        let f = Formula::forall(
            Var::new("u", Sort::Sed),
            Formula::atom("dmem", vec![Term::var("u"), Term::var("z")]),
        );
        assert_eq!(print_formula(&f), "(forall (u sed) (dmem u z))");
    }
}
