//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails. Time limits are generous wall-clock bounds for a debug
//! build.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dualfol::corpus::{load_corpus, verify_corpus};
use dualfol::dual::{dual, DualityMap};
use dualfol::gen::{formula_sample, Vocabulary};
use dualfol::model::{
    battery, build_dual_model, check_complement_structure, check_isomorphism, enumerate_models, evaluate,
    evaluate_dual, Model,
};
use dualfol::suite::{commutation_suite, transport_suite, SuiteConfig};
use dualfol::syntax::Connective;
use dualfol::{parse_formula, Formula, Quantifier, Sort, Term};

const CORPUS_LIMIT: Duration = Duration::from_secs(1);
const INVOLUTION_LIMIT: Duration = Duration::from_secs(5);
const TRANSPORT_LIMIT: Duration = Duration::from_secs(30);
const MODELS_LIMIT: Duration = Duration::from_secs(60);
const COMMUTATION_LIMIT: Duration = Duration::from_secs(30);
const EVALUATOR_LIMIT: Duration = Duration::from_secs(30);
const NULL_SED_LIMIT: Duration = Duration::from_secs(10);

const SEED: u64 = 2024;
const FORMULAS: usize = 1000;
const FORMULA_DEPTH: usize = 8;
const PROOFS: usize = 200;
const PROOF_DEPTH: usize = 6;

/// Number of complement-structures of each size 1..=4.
const EXPECTED_COUNTS: [usize; 4] = [0, 4, 0, 672];

const CORPUS_NAMES: [&str; 16] = [
    "T+",
    "P+",
    "N+",
    "eps-relation",
    "dintersection",
    "domplement",
    "d-domain",
    "class-existence-1",
    "class-existence-2",
    "class-existence-3",
    "Dower",
    "U+",
    "W+",
    "I+",
    "D+",
    "D-Zorn",
];

struct Outcome {
    ok: bool,
    detail: String,
}

fn criterion(name: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = body();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let pass = out.ok && in_time;
    let timing = if in_time {
        format!("{:.3}s", elapsed.as_secs_f64())
    } else {
        format!("{:.3}s exceeds {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64())
    };
    println!("{}  {name}: {} ({timing})", if pass { "PASS" } else { "FAIL" }, out.detail);
    pass
}

fn corpus() -> Outcome {
    let c = load_corpus().expect("corpus parses");
    let report = verify_corpus(&c);
    let names: Vec<&str> = c.entries.iter().map(|e| e.pair.name.as_str()).collect();
    Outcome {
        ok: report.passed() == 16 && report.failed() == 0 && names == CORPUS_NAMES,
        detail: format!("{}/{} entries verified, {} skipped", report.passed(), c.entries.len(), report.skipped()),
    }
}

fn depth(f: &Formula) -> usize {
    match f {
        Formula::Atom(..) | Formula::Eq(..) => 0,
        Formula::Not(g) | Formula::Quant(_, _, g) => 1 + depth(g),
        Formula::Binary(_, a, b) => 1 + depth(a).max(depth(b)),
    }
}

fn nodes(f: &Formula) -> usize {
    match f {
        Formula::Atom(..) | Formula::Eq(..) => 1,
        Formula::Not(g) | Formula::Quant(_, _, g) => 1 + nodes(g),
        Formula::Binary(_, a, b) => 1 + nodes(a) + nodes(b),
    }
}

fn involution() -> Outcome {
    let d = DualityMap::corpus();
    let sample = formula_sample(SEED, FORMULAS, FORMULA_DEPTH, Vocabulary::corpus());
    let good = sample
        .iter()
        .filter(|f| depth(f) <= FORMULA_DEPTH)
        .filter(|f| {
            let g = dual(f, &d);
            dual(&g, &d) == **f && nodes(&g) == nodes(f)
        })
        .count();
    Outcome { ok: sample.len() >= FORMULAS && good == sample.len(), detail: format!("{good}/{} formulas", sample.len()) }
}

fn transport() -> Outcome {
    let c = load_corpus().expect("corpus parses");
    let cfg = SuiteConfig { seed: SEED, proofs: PROOFS, proof_depth: PROOF_DEPTH, ..SuiteConfig::default() };
    let r = transport_suite(&cfg, &c);
    let mut detail = format!("{}/{} proofs transported, mutations rejected at their step", r.passed, r.total);
    if let Some(f) = r.failures.first() {
        detail.push_str(&format!("; first failure: {f}"));
    }
    Outcome { ok: r.ok() && r.total >= PROOFS, detail }
}

/// Every `mem` table on `n` elements whose extensions are pairwise distinct
/// and closed under complement, as row-major bit masks.
fn brute_force_tables(n: usize) -> BTreeSet<Vec<bool>> {
    let mut out = BTreeSet::new();
    for bits in 0u32..1 << (n * n) {
        // extension of x = {a : mem(a, x)} = bits (a*n + x)
        let ext: Vec<u32> = (0..n).map(|x| (0..n).filter(|a| bits >> (a * n + x) & 1 == 1).map(|a| 1 << a).sum()).collect();
        let distinct = ext.iter().collect::<BTreeSet<_>>().len() == n;
        let full = (1u32 << n) - 1;
        if distinct && ext.iter().all(|e| ext.contains(&(full ^ e))) {
            out.insert((0..n * n).map(|i| bits >> i & 1 == 1).collect());
        }
    }
    out
}

fn table(m: &Model) -> Vec<bool> {
    m.mem.iter().flatten().copied().collect()
}

fn models() -> Outcome {
    let all: Vec<Model> = enumerate_models(4).collect();
    let mut problems = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=4 {
        let ours: Vec<Vec<bool>> = all.iter().filter(|m| m.size() == n).map(table).collect();
        let unique: BTreeSet<Vec<bool>> = ours.iter().cloned().collect();
        let oracle = brute_force_tables(n);
        if unique.len() != ours.len() {
            problems.push(format!("size {n}: duplicate models"));
        }
        if unique != oracle {
            problems.push(format!("size {n}: {} enumerated, {} by brute force", unique.len(), oracle.len()));
        }
        counts.push(ours.len());
    }
    if counts != EXPECTED_COUNTS {
        problems.push(format!("counts {counts:?}, expected {EXPECTED_COUNTS:?}"));
    }
    for m in &all {
        let comp: Vec<usize> = m.comp.iter().map(|c| c.expect("total comp")).collect();
        let involutive = (0..m.size()).all(|x| comp[comp[x]] == x);
        if !(involutive && check_complement_structure(m).is_accepted() && check_isomorphism(m).is_accepted()) {
            problems.push(format!("{m} fails a structural check"));
            break;
        }
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() { format!("counts {counts:?} match brute force") } else { problems.join("; ") },
    }
}

fn commutation() -> Outcome {
    let c = load_corpus().expect("corpus parses");
    let cfg = SuiteConfig { seed: SEED, formulas: FORMULAS, formula_depth: FORMULA_DEPTH, ..SuiteConfig::default() };
    let r = commutation_suite(&cfg, &c);
    Outcome { ok: r.ok(), detail: format!("{}/{} formulas", r.passed, r.total) }
}

/// A direct reading of the semantics, kept apart from the library evaluator:
/// `dmem a b` iff `mem (comp a) (comp b)`, set = member of something,
/// sed = complement of a set, class = anything.
struct Naive<'a> {
    mem: &'a [Vec<bool>],
    comp: Vec<usize>,
}

impl Naive<'_> {
    fn term(&self, t: &Term, env: &BTreeMap<String, usize>) -> usize {
        match t {
            Term::Var(v) => env[&v.name],
            Term::App(f, args) if f == "comp" && args.len() == 1 => self.comp[self.term(&args[0], env)],
            other => panic!("naive evaluator has no meaning for {other}"),
        }
    }

    fn mem(&self, a: usize, b: usize) -> bool {
        self.mem[a][b]
    }

    fn in_sort(&self, s: Sort, x: usize) -> bool {
        let is_set = |u: usize| (0..self.mem.len()).any(|y| self.mem(u, y));
        match s {
            Sort::Class => true,
            Sort::Set => is_set(x),
            Sort::Sed => is_set(self.comp[x]),
        }
    }

    fn holds(&self, f: &Formula, env: &mut BTreeMap<String, usize>) -> bool {
        match f {
            Formula::Atom(r, args) => {
                let a = self.term(&args[0], env);
                let b = self.term(&args[1], env);
                match r.as_str() {
                    "mem" => self.mem(a, b),
                    "dmem" => self.mem(self.comp[a], self.comp[b]),
                    other => panic!("naive evaluator has no relation {other}"),
                }
            }
            Formula::Eq(a, b) => self.term(a, env) == self.term(b, env),
            Formula::Not(g) => !self.holds(g, env),
            Formula::Binary(c, a, b) => {
                let (x, y) = (self.holds(a, env), self.holds(b, env));
                match c {
                    Connective::Imp => !x || y,
                    Connective::And => x && y,
                    Connective::Or => x || y,
                    Connective::Iff => x == y,
                }
            }
            Formula::Quant(q, v, body) => {
                let saved = env.get(&v.name).copied();
                let mut hits = 0;
                for x in 0..self.mem.len() {
                    if !self.in_sort(v.sort, x) {
                        continue;
                    }
                    env.insert(v.name.clone(), x);
                    if self.holds(body, env) {
                        hits += 1;
                    }
                }
                let in_range = (0..self.mem.len()).filter(|&x| self.in_sort(v.sort, x)).count();
                match saved {
                    Some(x) => env.insert(v.name.clone(), x),
                    None => env.remove(&v.name),
                };
                match q {
                    Quantifier::Forall => hits == in_range,
                    Quantifier::Exists => hits > 0,
                    Quantifier::ExistsUnique => hits == 1,
                }
            }
        }
    }
}

fn naive(m: &Model) -> Naive<'_> {
    Naive { mem: &m.mem, comp: m.comp.iter().map(|c| c.expect("total comp")).collect() }
}

fn evaluator() -> Outcome {
    let d = DualityMap::standard();
    let formulas = battery();
    let mut checks = 0;
    let mut problems = Vec::new();
    let empty = BTreeMap::new();
    for m in enumerate_models(3) {
        let oracle = naive(&m);
        let dm = build_dual_model(&m);
        for f in &formulas {
            let g = dual(f, &d);
            let want = oracle.holds(f, &mut BTreeMap::new());
            let got = (evaluate(&m, f, &empty), oracle.holds(&g, &mut BTreeMap::new()), evaluate_dual(&dm, &g, &empty));
            checks += 1;
            if got != (Ok(want), want, Ok(want)) {
                problems.push(format!("{f} on {m}: naive {want}, library {got:?}"));
            }
        }
    }
    Outcome {
        ok: problems.is_empty() && checks > 0,
        detail: problems.first().cloned().unwrap_or_else(|| format!("{checks} model/formula pairs agree")),
    }
}

fn null_sed() -> Outcome {
    let body = parse_formula("(forall Y (not (dmem Y X)))").unwrap();
    let unique = parse_formula("(existsUnique X (forall Y (not (dmem Y X))))").unwrap();
    let mut checked = 0;
    let mut problems = Vec::new();
    for m in enumerate_models(4) {
        let oracle = naive(&m);
        let n = m.size();
        let full: Vec<usize> = (0..n).filter(|&x| (0..n).all(|a| m.mem[a][x])).collect();
        if full.is_empty() {
            // no V, hence no null sed to look for
            continue;
        }
        let witnesses: Vec<usize> = (0..n)
            .filter(|&x| oracle.holds(&body, &mut BTreeMap::from([("X".to_string(), x)])))
            .collect();
        checked += 1;
        if full.len() != 1 || witnesses != full || !oracle.holds(&unique, &mut BTreeMap::new()) {
            problems.push(format!("{m}: witnesses {witnesses:?}, full extension {full:?}"));
        }
    }
    Outcome {
        ok: problems.is_empty() && checked > 0,
        detail: problems.first().cloned().unwrap_or_else(|| format!("unique witness is V in all {checked} models that have V")),
    }
}

fn main() -> ExitCode {
    let results = [
        criterion("corpus", CORPUS_LIMIT, corpus),
        criterion("involution", INVOLUTION_LIMIT, involution),
        criterion("transport", TRANSPORT_LIMIT, transport),
        criterion("models", MODELS_LIMIT, models),
        criterion("commutation", COMMUTATION_LIMIT, commutation),
        criterion("evaluator", EVALUATOR_LIMIT, evaluator),
        criterion("null-sed", NULL_SED_LIMIT, null_sed),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
