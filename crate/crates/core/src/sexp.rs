//! Minimal s-expression reader used by every file format in the crate.
//!
//! Atoms are maximal runs of non-delimiter characters, strings are
//! double-quoted with `\"` and `\\` escapes, and `;` starts a comment that
//! runs to the end of the line. Every node remembers the byte offset where it
//! starts so parse errors can point back into the source.

use std::fmt;

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SexpKind {
    Atom(String),
    Str(String),
    List(Vec<Sexp>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sexp {
    pub kind: SexpKind,
    /// Byte offset of the first character of this node.
    pub pos: usize,
}

impl Sexp {
    pub fn atom(&self) -> Option<&str> {
        match &self.kind {
            SexpKind::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn string(&self) -> Option<&str> {
        match &self.kind {
            SexpKind::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn list(&self) -> Option<&[Sexp]> {
        match &self.kind {
            SexpKind::List(items) => Some(items),
            _ => None,
        }
    }

    /// Returns the items of a list whose head is the atom `head`.
    pub fn tagged(&self, head: &str) -> Option<&[Sexp]> {
        let items = self.list()?;
        match items.first().and_then(Sexp::atom) {
            Some(h) if h == head => Some(&items[1..]),
            _ => None,
        }
    }

    pub fn expect_atom(&self, what: &str) -> Result<&str, ParseError> {
        self.atom()
            .ok_or_else(|| ParseError::syntax(self.pos, format!("expected {what}")))
    }

    pub fn expect_list(&self, what: &str) -> Result<&[Sexp], ParseError> {
        self.list()
            .ok_or_else(|| ParseError::syntax(self.pos, format!("expected {what}")))
    }

    pub fn expect_tagged(&self, head: &str) -> Result<&[Sexp], ParseError> {
        self.tagged(head)
            .ok_or_else(|| ParseError::syntax(self.pos, format!("expected ({head} ...)")))
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SexpKind::Atom(a) => f.write_str(a),
            SexpKind::Str(s) => write_string(f, s),
            SexpKind::List(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Writes `s` as a double-quoted string literal readable by [`read_all`].
pub fn write_string(out: &mut impl fmt::Write, s: &str) -> fmt::Result {
    out.write_char('"')?;
    for c in s.chars() {
        match c {
            '"' => out.write_str("\\\"")?,
            '\\' => out.write_str("\\\\")?,
            '\n' => out.write_str("\\n")?,
            c => out.write_char(c)?,
        }
    }
    out.write_char('"')
}

fn is_delimiter(c: char) -> bool {
    c.is_whitespace() || matches!(c, '(' | ')' | '"' | ';')
}

struct Reader<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<Sexp, ParseError> {
        self.skip_trivia();
        let start = self.pos;
        match self.peek() {
            None => Err(ParseError::syntax(start, "unexpected end of input")),
            Some(')') => Err(ParseError::syntax(start, "unbalanced ')'")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.peek() {
                        None => return Err(ParseError::syntax(start, "unclosed '('")),
                        Some(')') => {
                            self.bump();
                            break;
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
                Ok(Sexp { kind: SexpKind::List(items), pos: start })
            }
            Some('"') => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        None => return Err(ParseError::syntax(start, "unterminated string")),
                        Some('"') => break,
                        Some('\\') => match self.bump() {
                            Some('n') => s.push('\n'),
                            Some(c @ ('"' | '\\')) => s.push(c),
                            _ => return Err(ParseError::syntax(self.pos, "bad string escape")),
                        },
                        Some(c) => s.push(c),
                    }
                }
                Ok(Sexp { kind: SexpKind::Str(s), pos: start })
            }
            Some(_) => {
                while let Some(c) = self.peek() {
                    if is_delimiter(c) {
                        break;
                    }
                    self.bump();
                }
                Ok(Sexp {
                    kind: SexpKind::Atom(self.text[start..self.pos].to_string()),
                    pos: start,
                })
            }
        }
    }
}

/// Reads every top-level s-expression in `text`.
pub fn read_all(text: &str) -> Result<Vec<Sexp>, ParseError> {
    let mut reader = Reader { text, pos: 0 };
    let mut out = Vec::new();
    loop {
        reader.skip_trivia();
        if reader.peek().is_none() {
            return Ok(out);
        }
        out.push(reader.read()?);
    }
}

/// Reads exactly one top-level s-expression.
pub fn read_one(text: &str) -> Result<Sexp, ParseError> {
    let mut all = read_all(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(ParseError::syntax(0, "empty input")),
        _ => Err(ParseError::syntax(all[1].pos, "trailing input after expression")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_nested_lists_and_comments() {
        let e = read_one("; header\n(a (b c) \"s t\") ; tail").unwrap();
        let items = e.list().unwrap();
        assert_eq!(items[0].atom(), Some("a"));
        assert_eq!(items[1].list().unwrap().len(), 2);
        assert_eq!(items[2].string(), Some("s t"));
        assert_eq!(e.pos, 9);
    }

    #[test]
    fn reports_positions() {
        let err = read_one("(a (b c)").unwrap_err();
        assert_eq!(err, ParseError::syntax(0, "unclosed '('"));
        let err = read_one("a)").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { position: 1, .. }));
    }

    #[test]
    fn display_round_trips() {
        let src = "(x \"q\\\"uote\" (y z))";
        let e = read_one(src).unwrap();
        assert_eq!(e.to_string(), src);
    }
}
