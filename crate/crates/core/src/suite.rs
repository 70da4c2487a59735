//! The property suites behind `suite run`: corpus verification, involution,
//! proof transport, the finite-model checks, commutation with sort
//! elaboration and the null-sed witness.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::{load_corpus, verify_corpus, Corpus, Report};
use crate::dual::{dual, dualize_formula, dualize_proof, flip_sorts, DualityMap};
use crate::gen::{formula_sample, Vocabulary};
use crate::kernel::{check_proof_in, generate_proof, mutate_step, Mutation};
use crate::model::{
    battery, check_complement_structure, check_duality_equivalence, check_isomorphism, enumerate_models, Interpretation,
};
use crate::syntax::{elaborate_sorts, parse_formula, Formula};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub formulas: usize,
    pub formula_depth: usize,
    pub proofs: usize,
    pub proof_depth: usize,
    pub max_model_size: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 2024, formulas: 1000, formula_depth: 8, proofs: 200, proof_depth: 6, max_model_size: 4 }
    }
}

/// At most this many failure descriptions are kept per suite.
const KEPT_FAILURES: usize = 5;

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

struct Tally {
    passed: usize,
    total: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { passed: 0, total: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < KEPT_FAILURES {
            self.failures.push(what());
        }
    }

    fn finish(self, name: &'static str, start: Instant) -> SuiteResult {
        SuiteResult { name, passed: self.passed, total: self.total, failures: self.failures, elapsed: start.elapsed() }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub corpus: Report,
    pub suites: Vec<SuiteResult>,
    /// `(size, number of models)` for every enumerated size.
    pub model_counts: Vec<(usize, usize)>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for s in &self.suites {
            write!(out, "{}  {:<12} {}/{}", if s.ok() { "PASS" } else { "FAIL" }, s.name, s.passed, s.total).unwrap();
            if timings {
                write!(out, "  {:.3}s", s.elapsed.as_secs_f64()).unwrap();
            }
            out.push('\n');
            for f in &s.failures {
                writeln!(out, "      {f}").unwrap();
            }
        }
        let counts: Vec<String> = self.model_counts.iter().map(|(n, c)| format!("size {n}: {c}")).collect();
        writeln!(out, "models: {}", counts.join(", ")).unwrap();
        out
    }

    pub fn to_sexp(&self, timings: bool) -> String {
        let mut out = String::from("(suites");
        for s in &self.suites {
            write!(out, "\n  (suite {} {} (passed {}) (total {})", s.name, if s.ok() { "pass" } else { "fail" }, s.passed, s.total)
                .unwrap();
            if timings {
                write!(out, " (seconds {:.3})", s.elapsed.as_secs_f64()).unwrap();
            }
            for f in &s.failures {
                out.push_str(" (failure ");
                crate::sexp::write_string(&mut out, f).unwrap();
                out.push(')');
            }
            out.push(')');
        }
        out.push_str("\n  (models");
        for (n, c) in &self.model_counts {
            write!(out, " (size {n} {c})").unwrap();
        }
        out.push_str("))\n");
        out
    }
}

pub fn corpus_suite(c: &Corpus) -> (SuiteResult, Report) {
    let start = Instant::now();
    let report = verify_corpus(c);
    let mut t = Tally::new();
    for row in &report.rows {
        match &row.status {
            crate::corpus::RowStatus::Pass => t.check(true, String::new),
            crate::corpus::RowStatus::Fail(d) => t.check(false, || format!("{}: {d}", row.name)),
            crate::corpus::RowStatus::Skip(_) => {}
        }
    }
    (t.finish("corpus", start), report)
}

pub fn involution_suite(cfg: &SuiteConfig, d: &DualityMap) -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::new();
    for f in formula_sample(cfg.seed, cfg.formulas, cfg.formula_depth, Vocabulary::corpus()) {
        let g = dual(&f, d);
        let ok = dual(&g, d) == f
            && dualize_formula(&dualize_formula(&f, d), d) == f
            && flip_sorts(&flip_sorts(&f, d), d) == f
            && g.size() == f.size();
        t.check(ok, || f.to_string());
    }
    t.finish("involution", start)
}

/// A theory of one to three corpus sentences, all classic or all dual.
fn corpus_theory(rng: &mut ChaCha8Rng, c: &Corpus) -> Vec<Formula> {
    let side = if rng.gen_bool(0.5) { c.classic_theory() } else { c.dual_theory() };
    let k = rng.gen_range(1..=3);
    side.choose_multiple(rng, k).cloned().collect()
}

pub fn transport_suite(cfg: &SuiteConfig, c: &Corpus) -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.proofs {
        let theory = corpus_theory(&mut rng, c);
        let depth = rng.gen_range(1..=cfg.proof_depth);
        let seed = rng.gen();
        let proof = match generate_proof(seed, depth, &theory) {
            Ok(p) => p,
            Err(e) => {
                t.check(false, || format!("proof {i}: {e}"));
                continue;
            }
        };
        let moved = dualize_proof(&proof, &c.map);
        let step = proof.steps.choose(&mut rng).unwrap().index;
        let mutation = if rng.gen_bool(0.5) { Mutation::Formula } else { Mutation::Justification };
        let bad = mutate_step(&proof, step, mutation);
        let verdicts = (
            check_proof_in(&c.language, &proof),
            check_proof_in(&c.language, &moved),
            check_proof_in(&c.language, &bad).rejected_step(),
            check_proof_in(&c.language, &dualize_proof(&bad, &c.map)).rejected_step(),
        );
        let ok = verdicts.0.is_accepted()
            && verdicts.1.is_accepted()
            && verdicts.2 == Some(step)
            && verdicts.3 == Some(step)
            && dualize_proof(&moved, &c.map) == proof;
        t.check(ok, || format!("proof {i} (seed {seed}, depth {depth}, {mutation:?} at {step}): {verdicts:?}"));
    }
    t.finish("transport", start)
}

pub fn model_suite(cfg: &SuiteConfig) -> (SuiteResult, Vec<(usize, usize)>) {
    let start = Instant::now();
    let mut t = Tally::new();
    let d = DualityMap::standard();
    let formulas = battery();
    let mut counts: BTreeMap<usize, usize> = (1..=cfg.max_model_size).map(|n| (n, 0)).collect();
    for m in enumerate_models(cfg.max_model_size) {
        *counts.get_mut(&m.size()).unwrap() += 1;
        let involutive = (0..m.size()).all(|x| m.comp[x].and_then(|y| m.comp[y]) == Some(x));
        let ok = check_complement_structure(&m).is_accepted()
            && involutive
            && check_isomorphism(&m).is_accepted()
            && formulas.iter().all(|f| check_duality_equivalence(&m, f, &d) == Ok(true));
        t.check(ok, || m.to_string());
    }
    (t.finish("models", start), counts.into_iter().collect())
}

pub fn commutation_suite(cfg: &SuiteConfig, c: &Corpus) -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let d = &c.map;
    let mut formulas: Vec<Formula> = c.classic_theory().into_iter().chain(c.dual_theory()).collect();
    formulas.extend(formula_sample(cfg.seed ^ 0x5eed, cfg.formulas, cfg.formula_depth, Vocabulary::corpus()));
    for f in &formulas {
        let guards_only = elaborate_sorts(&flip_sorts(f, d)) == dualize_formula(&elaborate_sorts(&dualize_formula(f, d)), d);
        let whole = match (c.language.normalize(&dual(f, d)), c.language.normalize(f)) {
            (Ok(a), Ok(b)) => a == dual(&b, d),
            _ => false,
        };
        t.check(guards_only && whole, || f.to_string());
    }
    t.finish("commutation", start)
}

pub fn null_sed_suite(cfg: &SuiteConfig) -> SuiteResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let body = parse_formula("(forall Y (not (dmem Y X)))").unwrap();
    for m in enumerate_models(cfg.max_model_size) {
        let Some(full) = m.full_element() else { continue };
        let i = Interpretation::of_model(&m).expect("enumerated models have total comp");
        let witnesses: Vec<usize> = (0..m.size())
            .filter(|&x| i.eval(&body, &BTreeMap::from([("X".to_string(), x)])) == Ok(true))
            .collect();
        t.check(witnesses == [full], || format!("{m}: witnesses {witnesses:?}, V = {full}"));
    }
    t.finish("null-sed", start)
}

pub fn run_suites(cfg: &SuiteConfig) -> SuiteReport {
    let c = load_corpus().expect("bundled corpus parses");
    let (corpus, report) = corpus_suite(&c);
    let (models, model_counts) = model_suite(cfg);
    let suites = vec![
        corpus,
        involution_suite(cfg, &c.map),
        transport_suite(cfg, &c),
        models,
        commutation_suite(cfg, &c),
        null_sed_suite(cfg),
    ];
    SuiteReport { corpus: report, suites, model_counts }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_configuration_passes() {
        let cfg = SuiteConfig { formulas: 50, proofs: 20, max_model_size: 2, ..SuiteConfig::default() };
        let r = run_suites(&cfg);
        assert!(r.ok(), "{}", r.to_text(false));
        assert_eq!(r.model_counts, vec![(1, 0), (2, 4)]);
        assert!(r.to_text(false).starts_with("PASS  corpus       16/16\n"));
    }
}
