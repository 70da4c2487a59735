//! Finite complement-structures: a membership table on a finite universe
//! together with a complement map, evaluated as models of the language
//! `{mem, dmem, =, comp, V}`.

mod battery;
mod enumerate;
mod eval;

use std::collections::BTreeMap;
use std::fmt;

pub use battery::{battery, BATTERY};
pub use enumerate::{enumerate_models, models_of_size};
pub use eval::{evaluate, evaluate_dual, Interpretation};

use crate::dual::{dual, DualityMap};
use crate::error::{EvalError, ParseError};
use crate::sexp;
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub universe: Vec<String>,
    /// `mem[a][b]`: `a` is a member of `b`.
    pub mem: Vec<Vec<bool>>,
    /// `None` where the complement is not given.
    pub comp: Vec<Option<usize>>,
    /// Explicit constant interpretations; `V` and `emptyset` default to the
    /// elements with full and empty extension.
    pub constants: BTreeMap<String, usize>,
}

/// `mem` read through complements: `dmem[a][b] = mem[comp a][comp b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualModel {
    pub universe: Vec<String>,
    pub dmem: Vec<Vec<bool>>,
    pub comp: Vec<usize>,
    pub constants: BTreeMap<String, usize>,
}

impl DualModel {
    /// The same tables, with `dmem` read as a plain membership relation.
    pub fn as_model(&self) -> Model {
        Model {
            universe: self.universe.clone(),
            mem: self.dmem.clone(),
            comp: self.comp.iter().copied().map(Some).collect(),
            constants: BTreeMap::new(),
        }
    }

    pub fn dmem_pairs(&self) -> Vec<(usize, usize)> {
        pairs(&self.dmem)
    }
}

fn pairs(table: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = table.len();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| table[a][b]).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    CompNotTotal,
    CompNotInvolutive,
    /// `mem(a, X)` and `mem(a, comp X)` agree for some `a`, `X`.
    ComplementAxiom,
    ExtensionsNotInjective,
    NotIsomorphism,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::CompNotTotal => "comp is not total",
            Violation::CompNotInvolutive => "comp is not an involution",
            Violation::ComplementAxiom => "A_c",
            Violation::ExtensionsNotInjective => "extensions are not injective",
            Violation::NotIsomorphism => "comp is not an isomorphism onto the dual model",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelVerdict {
    Accepted,
    Rejected { violation: Violation, witness: String },
}

impl ModelVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, ModelVerdict::Accepted)
    }
}

impl fmt::Display for ModelVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelVerdict::Accepted => f.write_str("accepted"),
            ModelVerdict::Rejected { violation, witness } => write!(f, "rejected {violation}: witness {witness}"),
        }
    }
}

impl Model {
    /// Builds a model from named pairs. Panics on unknown names; use
    /// [`parse_model`] for untrusted input.
    pub fn from_pairs(universe: &[&str], mem: &[(&str, &str)], comp: &[(&str, &str)]) -> Model {
        let idx = |s: &str| universe.iter().position(|u| *u == s).unwrap_or_else(|| panic!("unknown element {s}"));
        let n = universe.len();
        let mut m = Model {
            universe: universe.iter().map(|s| s.to_string()).collect(),
            mem: vec![vec![false; n]; n],
            comp: vec![None; n],
            constants: BTreeMap::new(),
        };
        for (a, b) in mem {
            m.mem[idx(a)][idx(b)] = true;
        }
        for (a, b) in comp {
            m.comp[idx(a)] = Some(idx(b));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.universe.len()
    }

    pub fn mem_pairs(&self) -> Vec<(usize, usize)> {
        pairs(&self.mem)
    }

    /// `ext(x)` as a bit mask over the universe (sizes up to 64).
    pub fn extension(&self, x: usize) -> u64 {
        (0..self.size()).filter(|&a| self.mem[a][x]).fold(0, |acc, a| acc | 1 << a)
    }

    fn comp_total(&self) -> Option<Vec<usize>> {
        self.comp.iter().copied().collect()
    }

    /// The element whose extension is the whole universe.
    pub fn full_element(&self) -> Option<usize> {
        let full = if self.size() == 64 { u64::MAX } else { (1u64 << self.size()) - 1 };
        (0..self.size()).find(|&x| self.extension(x) == full)
    }

    pub fn empty_element(&self) -> Option<usize> {
        (0..self.size()).find(|&x| self.extension(x) == 0)
    }

    /// Interpretation of a constant symbol, if any.
    pub fn constant(&self, name: &str) -> Option<usize> {
        match self.constants.get(name) {
            Some(&e) => Some(e),
            None if name == "V" => self.full_element(),
            None if name == "emptyset" => self.empty_element(),
            None => None,
        }
    }
}

/// Checks, in order: `comp` total, `comp` involutive, the complement axiom,
/// and injectivity of extensions. Reports the first violation.
pub fn check_complement_structure(m: &Model) -> ModelVerdict {
    let name = |i: usize| m.universe[i].as_str();
    let reject = |violation, witness: String| ModelVerdict::Rejected { violation, witness };
    let Some(comp) = m.comp_total() else {
        let x = m.comp.iter().position(Option::is_none).unwrap();
        return reject(Violation::CompNotTotal, name(x).into());
    };
    if let Some(x) = (0..m.size()).find(|&x| comp[comp[x]] != x) {
        return reject(Violation::CompNotInvolutive, name(x).into());
    }
    for a in 0..m.size() {
        for (x, &cx) in comp.iter().enumerate() {
            if m.mem[a][x] == m.mem[a][cx] {
                return reject(Violation::ComplementAxiom, format!("{}, X={}", name(a), name(x)));
            }
        }
    }
    let mut seen = BTreeMap::new();
    for x in 0..m.size() {
        if let Some(y) = seen.insert(m.extension(x), x) {
            return reject(Violation::ExtensionsNotInjective, format!("{} {}", name(y), name(x)));
        }
    }
    ModelVerdict::Accepted
}

/// `dmem(A, B) <=> mem(comp A, comp B)`. Expects an accepted model.
pub fn build_dual_model(m: &Model) -> DualModel {
    let comp: Vec<usize> = m.comp.iter().map(|c| c.expect("comp must be total")).collect();
    let n = m.size();
    let dmem = (0..n).map(|a| (0..n).map(|b| m.mem[comp[a]][comp[b]]).collect()).collect();
    DualModel { universe: m.universe.clone(), dmem, comp, constants: m.constants.clone() }
}

/// Checks that `comp` is a bijection of the universe with
/// `dmem(A, B) <=> mem(comp A, comp B)` against the built dual model.
pub fn check_isomorphism(m: &Model) -> ModelVerdict {
    let reject = |witness: String| ModelVerdict::Rejected { violation: Violation::NotIsomorphism, witness };
    let Some(comp) = m.comp_total() else {
        return reject("comp is partial".into());
    };
    let mut image = comp.clone();
    image.sort_unstable();
    image.dedup();
    if image.len() != m.size() {
        return reject("comp is not a bijection".into());
    }
    let d = build_dual_model(m);
    for a in 0..m.size() {
        for b in 0..m.size() {
            if d.dmem[a][b] != m.mem[comp[a]][comp[b]] {
                return reject(format!("({}, {})", m.universe[a], m.universe[b]));
            }
        }
    }
    ModelVerdict::Accepted
}

/// Whether `f` holds in `m` exactly when its dual holds in the dual model.
/// Always true on accepted models; `false` signals a bug.
pub fn check_duality_equivalence(m: &Model, f: &Formula, d: &DualityMap) -> Result<bool, EvalError> {
    let classic = evaluate(m, f, &BTreeMap::new())?;
    let dualized = evaluate_dual(&build_dual_model(m), &dual(f, d), &BTreeMap::new())?;
    Ok(classic == dualized)
}

/// Reads `(model (universe e0 e1 ...) (mem (a b) ...) (comp (a b) ...) (const V e)*)`.
pub fn parse_model(text: &str) -> Result<Model, ParseError> {
    let top = sexp::read_one(text)?;
    let parts = top.expect_tagged("model")?;
    let mut universe: Vec<String> = Vec::new();
    let mut mem = Vec::new();
    let mut comp = Vec::new();
    let mut consts = Vec::new();
    for part in parts {
        let items = part.expect_list("a model section")?;
        let head = items.first().ok_or_else(|| ParseError::syntax(part.pos, "empty section"))?;
        let rest = &items[1..];
        match head.expect_atom("a section name")? {
            "universe" => {
                for e in rest {
                    let name = e.expect_atom("an element name")?;
                    if universe.iter().any(|u| u == name) {
                        return Err(ParseError::syntax(e.pos, format!("duplicate element `{name}`")));
                    }
                    universe.push(name.to_string());
                }
            }
            "mem" | "comp" => {
                for pair in rest {
                    let [a, b] = pair.expect_list("a pair")? else {
                        return Err(ParseError::syntax(pair.pos, "expected a pair (a b)"));
                    };
                    let target = if head.atom() == Some("mem") { &mut mem } else { &mut comp };
                    target.push((a.clone(), b.clone()));
                }
            }
            "const" => {
                let [c, e] = rest else {
                    return Err(ParseError::syntax(part.pos, "expected (const NAME element)"));
                };
                consts.push((c.expect_atom("a constant")?.to_string(), e.clone()));
            }
            other => return Err(ParseError::syntax(head.pos, format!("unknown section `{other}`"))),
        }
    }
    let idx = |e: &sexp::Sexp| -> Result<usize, ParseError> {
        let name = e.expect_atom("an element name")?;
        universe
            .iter()
            .position(|u| u == name)
            .ok_or_else(|| ParseError::syntax(e.pos, format!("`{name}` is not in the universe")))
    };
    let n = universe.len();
    let mut m = Model { universe: universe.clone(), mem: vec![vec![false; n]; n], comp: vec![None; n], constants: BTreeMap::new() };
    for (a, b) in &mem {
        m.mem[idx(a)?][idx(b)?] = true;
    }
    for (a, b) in &comp {
        let (i, j) = (idx(a)?, idx(b)?);
        if m.comp[i].is_some_and(|k| k != j) {
            return Err(ParseError::syntax(a.pos, format!("two complements for `{}`", universe[i])));
        }
        m.comp[i] = Some(j);
    }
    for (c, e) in &consts {
        m.constants.insert(c.clone(), idx(e)?);
    }
    Ok(m)
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(model (universe {})", self.universe.join(" "))?;
        f.write_str(" (mem")?;
        for (a, b) in self.mem_pairs() {
            write!(f, " ({} {})", self.universe[a], self.universe[b])?;
        }
        f.write_str(") (comp")?;
        for (a, c) in self.comp.iter().enumerate() {
            if let Some(b) = c {
                write!(f, " ({} {})", self.universe[a], self.universe[*b])?;
            }
        }
        f.write_str(")")?;
        for (c, e) in &self.constants {
            write!(f, " (const {c} {})", self.universe[*e])?;
        }
        f.write_str(")")
    }
}
