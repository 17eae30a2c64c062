use loag::{parse_rational, GroupElem};
use thiserror::Error;

use crate::{Algebra, Elem, Ext, Node};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{0}")]
    Shape(String),
}

#[derive(Debug)]
enum Term {
    Atom(String),
    Tuple(Vec<Term>),
}

struct Reader<'a> {
    src: &'a str,
    pos: usize,
}

impl Reader<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn err(&self, msg: &str) -> LiteralError {
        LiteralError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn term(&mut self) -> Result<Term, LiteralError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with('(') {
            self.pos += 1;
            let mut items = vec![self.term()?];
            loop {
                self.skip_ws();
                match self.src[self.pos..].chars().next() {
                    Some(',') => {
                        self.pos += 1;
                        items.push(self.term()?);
                    }
                    Some(')') => {
                        self.pos += 1;
                        return Ok(Term::Tuple(items));
                    }
                    _ => return Err(self.err("expected ',' or ')'")),
                }
            }
        }
        let start = self.pos;
        let rest = &self.src[start..];
        let len =
            rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '-' || c == '+' || c == '/')).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected a number, T, B or '('"));
        }
        self.pos += len;
        Ok(Term::Atom(rest[..len].to_string()))
    }
}

fn shape(msg: String) -> LiteralError {
    LiteralError::Shape(msg)
}

fn interpret(a: &Algebra, t: &Term) -> Result<Elem, LiteralError> {
    match a.node() {
        Node::GroupLeaf(g) => {
            let atoms: Vec<&Term> = match t {
                Term::Tuple(ts) if g.dims() > 1 || ts.len() == 1 => ts.iter().collect(),
                _ => vec![t],
            };
            if atoms.len() != g.dims() {
                return Err(shape(format!("{g} needs {} coordinates", g.dims())));
            }
            let mut coords = Vec::new();
            for t in atoms {
                let Term::Atom(s) = t else {
                    return Err(shape(format!("nested tuple inside an element of {g}")));
                };
                coords.push(parse_rational(s).ok_or_else(|| shape(format!("'{s}' is not a rational")))?);
            }
            Ok(Elem::Leaf(GroupElem::new(coords)))
        }
        _ => {
            let (x, y) = a.parts();
            let Term::Tuple(ts) = t else {
                return Err(shape(format!("an element of {a} is a pair")));
            };
            if ts.len() != 2 {
                return Err(shape(format!("an element of {a} is a pair, got {} entries", ts.len())));
            }
            let first = interpret(x, &ts[0])?;
            let second = match &ts[1] {
                Term::Atom(s) if s == "T" => Ext::Top,
                Term::Atom(s) if s == "B" => Ext::Bot,
                other => Ext::mid(interpret(y, other)?),
            };
            Ok(Elem::Pair(Box::new(first), second))
        }
    }
}

/// Parse an element literal such as `(3, 1/2)`, `(3, T)` or `((0, T), B)`,
/// reading its shape off the algebra. The result is checked for membership.
pub fn parse_elem(a: &Algebra, src: &str) -> Result<Elem, LiteralError> {
    let (e, end) = parse_elem_prefix(a, src)?;
    if !src[end..].trim().is_empty() {
        return Err(LiteralError::Syntax { pos: end, msg: "trailing input".into() });
    }
    Ok(e)
}

/// Parse one literal at the start of `src`; returns it with the byte offset
/// just past it.
pub fn parse_elem_prefix(a: &Algebra, src: &str) -> Result<(Elem, usize), LiteralError> {
    let mut r = Reader { src, pos: 0 };
    let t = r.term()?;
    let e = interpret(a, &t)?;
    if !a.is_valid_elem(&e) {
        return Err(shape(format!("{e} is not an element of {a}")));
    }
    Ok((e, r.pos))
}
