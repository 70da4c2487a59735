use std::fmt::Write;

use crate::sexp::write_string;
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    /// Carries a description of the first structural difference.
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub name: String,
    pub section: String,
    pub status: RowStatus,
    pub note: Option<String>,
}

/// Verification result, one row per entry in a fixed order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    fn count(&self, pred: impl Fn(&RowStatus) -> bool) -> usize {
        self.rows.iter().filter(|r| pred(&r.status)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|s| *s == RowStatus::Pass)
    }

    pub fn failed(&self) -> usize {
        self.count(|s| matches!(s, RowStatus::Fail(_)))
    }

    pub fn skipped(&self) -> usize {
        self.count(|s| matches!(s, RowStatus::Skip(_)))
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_text(&self) -> String {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for r in &self.rows {
            let (tag, detail) = match &r.status {
                RowStatus::Pass => ("PASS", r.section.clone()),
                RowStatus::Fail(diff) => ("FAIL", format!("{}: {diff}", r.section)),
                RowStatus::Skip(why) => ("SKIP", why.clone()),
            };
            write!(out, "{tag}  {:width$}  {detail}", r.name).unwrap();
            if let Some(note) = &r.note {
                write!(out, " [{note}]").unwrap();
            }
            out.push('\n');
        }
        let checked = self.passed() + self.failed();
        writeln!(out, "corpus: {}/{checked} passed, {} skipped", self.passed(), self.skipped()).unwrap();
        out
    }

    pub fn to_sexp(&self) -> String {
        let mut out = String::from("(report");
        for r in &self.rows {
            out.push_str("\n  (entry ");
            write_string(&mut out, &r.name).unwrap();
            match &r.status {
                RowStatus::Pass => out.push_str(" pass"),
                RowStatus::Fail(diff) => {
                    out.push_str(" fail (diff ");
                    write_string(&mut out, diff).unwrap();
                    out.push(')');
                }
                RowStatus::Skip(why) => {
                    out.push_str(" skip (reason ");
                    write_string(&mut out, why).unwrap();
                    out.push(')');
                }
            }
            if let Some(note) = &r.note {
                out.push_str(" (note ");
                write_string(&mut out, note).unwrap();
                out.push(')');
            }
            out.push(')');
        }
        write!(
            out,
            "\n  (summary (passed {}) (failed {}) (skipped {})))\n",
            self.passed(),
            self.failed(),
            self.skipped()
        )
        .unwrap();
        out
    }
}

/// Describes where two formulas first differ, as a path of node labels
/// from the root followed by the two differing subtrees.
pub fn first_difference(got: &Formula, want: &Formula) -> String {
    let mut path = Vec::new();
    match diff(got, want, &mut path) {
        Some((a, b)) => {
            let at = if path.is_empty() { "root".to_string() } else { path.join(" > ") };
            format!("at {at}: got {a}, expected {b}")
        }
        None => "formulas are identical".into(),
    }
}

fn label(f: &Formula) -> String {
    match f {
        Formula::Atom(r, _) => r.clone(),
        Formula::Eq(..) => "=".into(),
        Formula::Not(_) => "not".into(),
        Formula::Binary(c, ..) => c.keyword().into(),
        Formula::Quant(q, v, _) => format!("{} {v}", q.keyword()),
    }
}

/// The two differing subtrees, rendered.
type Difference = Option<(String, String)>;

fn diff(a: &Formula, b: &Formula, path: &mut Vec<String>) -> Difference {
    let mut under = |step: String, f: &mut dyn FnMut(&mut Vec<String>) -> Difference| {
        path.push(step);
        let out = f(path);
        if out.is_none() {
            path.pop();
        }
        out
    };
    match (a, b) {
        (Formula::Not(x), Formula::Not(y)) => under("not".into(), &mut |p| diff(x, y, p)),
        (Formula::Binary(c, x1, x2), Formula::Binary(d, y1, y2)) if c == d => {
            under(c.keyword().into(), &mut |p| diff(x1, y1, p).or_else(|| diff(x2, y2, p)))
        }
        (Formula::Quant(q, v, x), Formula::Quant(r, w, y)) if q == r && v == w => under(label(a), &mut |p| diff(x, y, p)),
        (Formula::Atom(r, xs), Formula::Atom(s, ys)) if r == s && xs.len() == ys.len() => {
            let (x, y) = xs.iter().zip(ys).find(|(x, y)| x != y)?;
            path.push(r.clone());
            Some((x.to_string(), y.to_string()))
        }
        _ if a == b => None,
        _ => Some((a.to_string(), b.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    #[test]
    fn reports_the_innermost_difference() {
        let a = parse_formula("(forall (x sed) (and (mem x Y) (mem x x)))").unwrap();
        let b = parse_formula("(forall (x sed) (and (mem x Y) (mem x Y)))").unwrap();
        assert_eq!(first_difference(&a, &b), "at forall (x sed) > and > mem: got x, expected Y");
        let c = parse_formula("(forall (x set) (mem x Y))").unwrap();
        assert!(first_difference(&c, &a).starts_with("at root: got (forall (x set)"));
    }

    #[test]
    fn text_and_sexp_summaries() {
        let r = Report {
            rows: vec![
                Row { name: "A".into(), section: "One".into(), status: RowStatus::Pass, note: None },
                Row { name: "BB".into(), section: "Two".into(), status: RowStatus::Fail("d".into()), note: Some("n".into()) },
                Row { name: "C".into(), section: String::new(), status: RowStatus::Skip("why".into()), note: None },
            ],
        };
        assert_eq!(r.to_text(), "PASS  A   One\nFAIL  BB  Two: d [n]\nSKIP  C   why\ncorpus: 1/2 passed, 1 skipped\n");
        assert!(r.to_sexp().ends_with("(summary (passed 1) (failed 1) (skipped 1)))\n"));
        assert!(!r.all_passed());
    }
}
