use std::collections::BTreeMap;
use std::fmt;

use crate::error::{DualError, ParseError};
use crate::sexp;
use crate::syntax::{Language, Sort};

/// Three involutive renamings: relations (atoms, macro atoms included),
/// sorts, and constant/function symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualityMap {
    relations: BTreeMap<String, String>,
    sorts: BTreeMap<Sort, Sort>,
    symbols: BTreeMap<String, String>,
    // pairs in insertion order, for printing
    order: Vec<(Kind, String, String)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Rel,
    Sort,
    Sym,
}

impl Kind {
    fn keyword(self) -> &'static str {
        match self {
            Kind::Rel => "rel",
            Kind::Sort => "sort",
            Kind::Sym => "sym",
        }
    }
}

fn insert_pair(map: &mut BTreeMap<String, String>, a: &str, b: &str) -> Result<(), DualError> {
    for n in [a, b] {
        if map.contains_key(n) {
            return Err(DualError::InvalidMap(format!("`{n}` appears in more than one pair")));
        }
    }
    if a == b {
        return Err(DualError::InvalidMap(format!("`{a}` is paired with itself")));
    }
    map.insert(a.into(), b.into());
    map.insert(b.into(), a.into());
    Ok(())
}

impl DualityMap {
    pub fn empty() -> Self {
        DualityMap::default()
    }

    /// `mem <-> dmem` and `set <-> sed`.
    pub fn standard() -> Self {
        let mut d = DualityMap::empty();
        d.swap_relation("mem", "dmem").unwrap();
        d.swap_sort(Sort::Set, Sort::Sed).unwrap();
        d
    }

    /// The standard map plus the dual constants, term formers, relations and
    /// macros of the corpus.
    pub fn corpus() -> Self {
        let mut d = DualityMap::standard();
        for (a, b) in [("subset", "subsed"), ("isSet", "isSed")] {
            d.swap_relation(a, b).unwrap();
        }
        for (a, b) in [
            ("V", "emptyset"),
            ("dpair", "pair"),
            ("dunion", "union"),
            ("dsingleton", "singleton"),
            ("Part+", "Part"),
            ("Tot+", "Tot"),
            ("opair+", "opair"),
        ] {
            d.swap_symbol(a, b).unwrap();
        }
        d
    }

    pub fn swap_relation(&mut self, a: &str, b: &str) -> Result<(), DualError> {
        if a == "=" || b == "=" {
            return Err(DualError::InvalidMap("equality cannot be swapped".into()));
        }
        if self.symbols.contains_key(a) || self.symbols.contains_key(b) {
            return Err(DualError::InvalidMap(format!("`{a}`/`{b}` already swapped as symbols")));
        }
        insert_pair(&mut self.relations, a, b)?;
        self.order.push((Kind::Rel, a.into(), b.into()));
        Ok(())
    }

    /// Constants, function symbols, and relation symbols that are renamed
    /// together with their dual term formers.
    pub fn swap_symbol(&mut self, a: &str, b: &str) -> Result<(), DualError> {
        if a == "=" || b == "=" {
            return Err(DualError::InvalidMap("equality cannot be swapped".into()));
        }
        if self.relations.contains_key(a) || self.relations.contains_key(b) {
            return Err(DualError::InvalidMap(format!("`{a}`/`{b}` already swapped as relations")));
        }
        insert_pair(&mut self.symbols, a, b)?;
        self.order.push((Kind::Sym, a.into(), b.into()));
        Ok(())
    }

    pub fn swap_sort(&mut self, a: Sort, b: Sort) -> Result<(), DualError> {
        if a == Sort::Class || b == Sort::Class {
            return Err(DualError::InvalidMap("the class sort cannot be swapped".into()));
        }
        if a == b || self.sorts.contains_key(&a) || self.sorts.contains_key(&b) {
            return Err(DualError::InvalidMap(format!("sort pair {a}/{b} is not disjoint from the others")));
        }
        self.sorts.insert(a, b);
        self.sorts.insert(b, a);
        self.order.push((Kind::Sort, a.keyword().into(), b.keyword().into()));
        Ok(())
    }

    pub fn relation<'a>(&'a self, name: &'a str) -> &'a str {
        self.relations.get(name).or_else(|| self.symbols.get(name)).map_or(name, String::as_str)
    }

    pub fn symbol<'a>(&'a self, name: &'a str) -> &'a str {
        self.symbols.get(name).map_or(name, String::as_str)
    }

    pub fn sort(&self, s: Sort) -> Sort {
        self.sorts.get(&s).copied().unwrap_or(s)
    }

    pub fn uses_symbol_swaps(&self) -> bool {
        !self.symbols.is_empty()
    }

    /// Checks that every swapped name is known to `lang` with the same kind
    /// and arity as its partner.
    pub fn check_against(&self, lang: &Language) -> Result<(), DualError> {
        let sig = &lang.signature;
        let kind = |n: &str| {
            if let Some(a) = lang.atom_arity(n) {
                Some(("relation", a))
            } else if let Some(a) = sig.function_arity(n) {
                Some(("function", a))
            } else if sig.is_constant(n) {
                Some(("constant", 0))
            } else {
                None
            }
        };
        for (k, a, b) in &self.order {
            if *k == Kind::Sort {
                continue;
            }
            let ka = kind(a).ok_or_else(|| DualError::InvalidMap(format!("unknown symbol `{a}`")))?;
            let kb = kind(b).ok_or_else(|| DualError::InvalidMap(format!("unknown symbol `{b}`")))?;
            if ka != kb {
                return Err(DualError::InvalidMap(format!(
                    "`{a}` ({} of arity {}) and `{b}` ({} of arity {}) cannot be swapped",
                    ka.0, ka.1, kb.0, kb.1
                )));
            }
            if *k == Kind::Rel && ka.0 != "relation" {
                return Err(DualError::InvalidMap(format!("`{a}` is not a relation")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for DualityMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(dualmap")?;
        for (k, a, b) in &self.order {
            write!(f, " ({} {a} {b})", k.keyword())?;
        }
        f.write_str(")")
    }
}

/// Reads `(dualmap (rel mem dmem) (sort set sed) (sym V emptyset) ...)` and
/// checks it against `lang`.
pub fn parse_dualmap(text: &str, lang: &Language) -> Result<DualityMap, DualityMapFileError> {
    let top = sexp::read_one(text)?;
    let mut d = DualityMap::empty();
    for entry in top.expect_tagged("dualmap")? {
        let items = entry.expect_list("a swap pair")?;
        let [k, a, b] = items else {
            return Err(ParseError::syntax(entry.pos, "expected (rel|sort|sym A B)").into());
        };
        let (a, b) = (a.expect_atom("a name")?, b.expect_atom("a name")?);
        match k.expect_atom("rel, sort or sym")? {
            "rel" => d.swap_relation(a, b)?,
            "sym" => d.swap_symbol(a, b)?,
            "sort" => {
                let s = |n: &str| Sort::from_keyword(n).ok_or_else(|| DualError::InvalidMap(format!("unknown sort `{n}`")));
                d.swap_sort(s(a)?, s(b)?)?
            }
            other => return Err(ParseError::syntax(k.pos, format!("unknown pair kind `{other}`")).into()),
        }
    }
    d.check_against(lang)?;
    Ok(d)
}

#[derive(Debug, thiserror::Error)]
pub enum DualityMapFileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] DualError),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_maps_are_valid() {
        let lang = Language::default();
        DualityMap::standard().check_against(&lang).unwrap();
        DualityMap::corpus().check_against(&lang).unwrap();
    }

    #[test]
    fn print_then_parse_round_trips() {
        let lang = Language::default();
        let d = DualityMap::corpus();
        assert_eq!(parse_dualmap(&d.to_string(), &lang).unwrap(), d);
        assert_eq!(DualityMap::standard().to_string(), "(dualmap (rel mem dmem) (sort set sed))");
    }

    #[test]
    fn rejects_bad_pairs() {
        let lang = Language::default();
        for bad in [
            "(dualmap (rel mem =))",
            "(dualmap (rel mem dmem) (rel dmem mem))",
            "(dualmap (rel mem comp))",
            "(dualmap (sym comp opair))",
            "(dualmap (sort class set))",
            "(dualmap (rel mem nosuch))",
            "(dualmap (swap mem dmem))",
        ] {
            assert!(parse_dualmap(bad, &lang).is_err(), "{bad}");
        }
    }
}
