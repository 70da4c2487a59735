//! The bundled classic/dual axiom pairs and their verification.
//!
//! Each entry lives in its own file under `data/corpus`:
//!
//! ```text
//! (entry "NAME" (section "TEXT") (note "TEXT")? (dual FORMULA) (classic FORMULA))
//! ```

mod report;

use std::collections::BTreeSet;

pub use report::{first_difference, Report, Row, RowStatus};

use crate::dual::{dual, CorrespondencePair, DualityMap};
use crate::error::{CorpusParseError, ParseError};
use crate::sexp;
use crate::syntax::{alpha_equiv, Formula, Language, Term};

const FILES: [(&str, &str); 16] = [
    ("01-dual-axiom-t.sexp", include_str!("../../data/corpus/01-dual-axiom-t.sexp")),
    ("02-dual-pairing-axiom.sexp", include_str!("../../data/corpus/02-dual-pairing-axiom.sexp")),
    ("03-dual-null-set.sexp", include_str!("../../data/corpus/03-dual-null-set.sexp")),
    ("04-dual-membership-relation.sexp", include_str!("../../data/corpus/04-dual-membership-relation.sexp")),
    (
        "05-dual-existence-of-intersections.sexp",
        include_str!("../../data/corpus/05-dual-existence-of-intersections.sexp"),
    ),
    ("06-dual-notion-of-complement.sexp", include_str!("../../data/corpus/06-dual-notion-of-complement.sexp")),
    ("07-dual-existence-of-domains.sexp", include_str!("../../data/corpus/07-dual-existence-of-domains.sexp")),
    ("08-dual-class-existence-1.sexp", include_str!("../../data/corpus/08-dual-class-existence-1.sexp")),
    ("09-dual-class-existence-2.sexp", include_str!("../../data/corpus/09-dual-class-existence-2.sexp")),
    ("10-dual-class-existence-3.sexp", include_str!("../../data/corpus/10-dual-class-existence-3.sexp")),
    ("11-dual-notion-of-power-class.sexp", include_str!("../../data/corpus/11-dual-notion-of-power-class.sexp")),
    ("12-dual-axiom-u.sexp", include_str!("../../data/corpus/12-dual-axiom-u.sexp")),
    ("13-dual-axiom-w.sexp", include_str!("../../data/corpus/13-dual-axiom-w.sexp")),
    ("14-dual-axiom-of-infinity.sexp", include_str!("../../data/corpus/14-dual-axiom-of-infinity.sexp")),
    ("15-dual-axiom-of-regularity.sexp", include_str!("../../data/corpus/15-dual-axiom-of-regularity.sexp")),
    ("16-dual-axiom-of-choice.sexp", include_str!("../../data/corpus/16-dual-axiom-of-choice.sexp")),
];

/// Axioms whose duals are only described in prose; reported as skipped.
pub const SKIPPED: [(&str, &str); 2] = [
    ("S+", "stated as straightforward, no formula given"),
    ("R+", "stated as straightforward, no formula given"),
];

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub file: String,
    pub pair: CorrespondencePair,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub language: Language,
    pub map: DualityMap,
}

fn string_field(e: &sexp::Sexp, tag: &str) -> Result<String, ParseError> {
    match e.expect_tagged(tag)? {
        [s] => s
            .string()
            .map(str::to_string)
            .ok_or_else(|| ParseError::syntax(s.pos, format!("expected a string in ({tag} ...)"))),
        _ => Err(ParseError::syntax(e.pos, format!("expected ({tag} \"...\")"))),
    }
}

fn formula_field(lang: &Language, e: &sexp::Sexp, tag: &str) -> Result<Formula, ParseError> {
    match e.expect_tagged(tag)? {
        [f] => lang.formula_from_sexp(f),
        _ => Err(ParseError::syntax(e.pos, format!("expected ({tag} formula)"))),
    }
}

/// Parses one entry file.
pub fn parse_entry(lang: &Language, text: &str) -> Result<(CorrespondencePair, Option<String>), ParseError> {
    let top = sexp::read_one(text)?;
    let parts = top.expect_tagged("entry")?;
    let (name, rest) = parts.split_first().ok_or_else(|| ParseError::syntax(top.pos, "entry without a name"))?;
    let name = name.string().ok_or_else(|| ParseError::syntax(name.pos, "entry name must be a string"))?;
    let (section, note, dual, classic) = match rest {
        [s, d, c] => (s, None, d, c),
        [s, n, d, c] => (s, Some(string_field(n, "note")?), d, c),
        _ => return Err(ParseError::syntax(top.pos, "expected (entry NAME (section ..) (note ..)? (dual ..) (classic ..))")),
    };
    let pair = CorrespondencePair {
        name: name.to_string(),
        section: string_field(section, "section")?,
        dual: formula_field(lang, dual, "dual")?,
        classic: formula_field(lang, classic, "classic")?,
    };
    Ok((pair, note))
}

/// The sixteen bundled entries, in source order.
pub fn load_corpus() -> Result<Corpus, CorpusParseError> {
    let language = Language::default();
    let mut entries = Vec::with_capacity(FILES.len());
    let mut names = BTreeSet::new();
    for (file, text) in FILES {
        let err = |source| CorpusParseError { file: file.to_string(), source };
        let (pair, note) = parse_entry(&language, text).map_err(err)?;
        if !names.insert(pair.name.clone()) {
            return Err(err(ParseError::syntax(0, format!("duplicate entry name `{}`", pair.name))));
        }
        entries.push(CorpusEntry { file: file.to_string(), pair, note });
    }
    Ok(Corpus { entries, language, map: DualityMap::corpus() })
}

impl Corpus {
    pub fn get(&self, name: &str) -> Option<&CorrespondencePair> {
        self.entries.iter().map(|e| &e.pair).find(|p| p.name == name)
    }

    pub fn classic_theory(&self) -> Vec<Formula> {
        self.entries.iter().map(|e| e.pair.classic.clone()).collect()
    }

    pub fn dual_theory(&self) -> Vec<Formula> {
        self.entries.iter().map(|e| e.pair.dual.clone()).collect()
    }
}

/// Whether the dual of `pair.dual` is alpha-equivalent to `pair.classic`,
/// both sides macro-expanded. On failure, describes the first difference.
pub fn verify_pair(lang: &Language, map: &DualityMap, pair: &CorrespondencePair) -> Result<(), String> {
    let expand = |f: &Formula| lang.expand_macros(f).map_err(|e| e.to_string());
    let lhs = dual(&expand(&pair.dual)?, map);
    let rhs = expand(&pair.classic)?;
    if alpha_equiv(&lhs, &rhs) {
        Ok(())
    } else {
        Err(first_difference(&lhs, &rhs))
    }
}

/// Names of swapped non-relation symbols that occur in `f`.
fn swapped_symbols(f: &Formula, map: &DualityMap) -> BTreeSet<String> {
    fn term(t: &Term, map: &DualityMap, out: &mut BTreeSet<String>) {
        match t {
            Term::Var(_) => {}
            Term::Const(c) => {
                if map.symbol(c) != c {
                    out.insert(c.clone());
                }
            }
            Term::App(h, args) => {
                if map.symbol(h) != h {
                    out.insert(h.clone());
                }
                args.iter().for_each(|a| term(a, map, out));
            }
        }
    }
    let mut out = BTreeSet::new();
    for sub in f.subformulas() {
        match sub {
            Formula::Atom(r, args) => {
                if map.symbol(r) != r {
                    out.insert(r.clone());
                }
                args.iter().for_each(|a| term(a, map, &mut out));
            }
            Formula::Eq(a, b) => {
                term(a, map, &mut out);
                term(b, map, &mut out);
            }
            _ => {}
        }
    }
    out
}

/// Checks every entry; one row per entry plus the skipped axioms.
pub fn verify_corpus(c: &Corpus) -> Report {
    let mut rows = Vec::new();
    for e in &c.entries {
        let status = match verify_pair(&c.language, &c.map, &e.pair) {
            Ok(()) => RowStatus::Pass,
            Err(diff) => RowStatus::Fail(diff),
        };
        let used = swapped_symbols(&e.pair.dual, &c.map);
        let note = (!used.is_empty()).then(|| {
            format!("uses symbol swaps: {}", used.iter().map(|s| format!("{s}<->{}", c.map.symbol(s))).collect::<Vec<_>>().join(", "))
        });
        rows.push(Row { name: e.pair.name.clone(), section: e.pair.section.clone(), status, note });
    }
    for (name, why) in SKIPPED {
        rows.push(Row { name: name.into(), section: String::new(), status: RowStatus::Skip(why.into()), note: None });
    }
    Report { rows }
}
