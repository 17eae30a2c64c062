use std::sync::Arc;

use chain_core::{Algebra, HDesc};
use loag::{parse_rational, Coord, GroupDesc, SubSpec, SubgroupDesc};
use thiserror::Error;

use crate::{build_sublex, build_type, PlexError, SublexKind, TypeKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Build(#[from] PlexError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Ident(String),
    Num(String),
    Punct(char),
}

#[derive(Debug, Clone)]
struct Tok {
    kind: Kind,
    line: usize,
    col: usize,
}

/// Token stream over spec text, shared by the algebra, subgroup and `H`
/// grammars.
#[derive(Debug, Clone)]
pub struct Tokens {
    toks: Vec<Tok>,
    pos: usize,
    end: (usize, usize),
}

impl Tokens {
    pub fn new(text: &str) -> Result<Tokens, SyntaxError> {
        let mut toks = Vec::new();
        let (mut line, mut col) = (1, 1);
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let start = (line, col);
            if c == '\n' {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            if c.is_whitespace() {
                col += 1;
                i += 1;
                continue;
            }
            let mut j = i + 1;
            let kind = if "(),=:".contains(c) {
                Kind::Punct(c)
            } else if c.is_ascii_alphabetic() {
                while j < chars.len() && chars[j].is_ascii_alphanumeric() {
                    j += 1;
                }
                Kind::Ident(chars[i..j].iter().collect())
            } else if c.is_ascii_digit() || c == '-' || c == '+' {
                while j < chars.len() && (chars[j].is_ascii_digit() || chars[j] == '/') {
                    j += 1;
                }
                Kind::Num(chars[i..j].iter().collect())
            } else {
                return Err(SyntaxError { line, col, msg: format!("unexpected character '{c}'") });
            };
            col += j - i;
            i = j;
            toks.push(Tok { kind, line: start.0, col: start.1 });
        }
        Ok(Tokens { toks, pos: 0, end: (line, col) })
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.col))
    }

    pub fn error(&self, msg: impl Into<String>) -> SyntaxError {
        let (line, col) = self.here();
        SyntaxError { line, col, msg: msg.into() }
    }

    fn peek(&self) -> Option<&Kind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn expect_end(&self) -> Result<(), SyntaxError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub fn punct(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.peek() == Some(&Kind::Punct(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub fn eat_punct(&mut self, c: char) -> bool {
        self.punct(c).is_ok()
    }

    pub fn ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(Kind::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error("expected a name")),
        }
    }

    pub fn keyword(&mut self, k: &str) -> Result<(), SyntaxError> {
        match self.peek() {
            Some(Kind::Ident(s)) if s == k => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected '{k}'"))),
        }
    }

    pub fn number(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Some(Kind::Num(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error("expected a number")),
        }
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, SyntaxError>) -> Result<Vec<T>, SyntaxError> {
        self.punct('(')?;
        let mut out = vec![item(self)?];
        while self.eat_punct(',') {
            out.push(item(self)?);
        }
        self.punct(')')?;
        Ok(out)
    }

    fn coords(&mut self) -> Result<Vec<Coord>, SyntaxError> {
        match self.peek() {
            Some(Kind::Num(s)) if s == "1" => {
                self.pos += 1;
                Ok(vec![Coord::Triv])
            }
            Some(Kind::Ident(s)) if s == "Z" || s == "Q" => {
                let c = if s == "Z" { Coord::Int } else { Coord::Rat };
                self.pos += 1;
                Ok(vec![c])
            }
            Some(Kind::Ident(s)) if s == "Lex" => {
                self.pos += 1;
                Ok(self.list(Self::coords)?.concat())
            }
            _ => Err(self.error("expected a group: Z, Q, 1 or Lex(...)")),
        }
    }

    pub fn group(&mut self) -> Result<GroupDesc, SyntaxError> {
        let is_lex = matches!(self.peek(), Some(Kind::Ident(s)) if s == "Lex");
        let cs = self.coords()?;
        Ok(if is_lex { GroupDesc::Lex(cs) } else { GroupDesc::from_coords(cs) })
    }

    fn spec(&mut self) -> Result<SubSpec, SyntaxError> {
        match self.ident()?.as_str() {
            "full" => Ok(SubSpec::Full),
            "triv" => Ok(SubSpec::Trivial),
            "idx" => {
                let n = self.number()?;
                match n.parse::<u64>() {
                    Ok(m) if m >= 1 => Ok(SubSpec::Index(m)),
                    _ => Err(self.error(format!("index must be a positive integer, got {n}"))),
                }
            }
            other => Err(self.error(format!("expected full, triv or idx, got '{other}'"))),
        }
    }

    pub fn sub(&mut self) -> Result<SubgroupDesc, SyntaxError> {
        if self.peek() == Some(&Kind::Punct('(')) {
            Ok(SubgroupDesc::Coords(self.list(Self::spec)?))
        } else {
            Ok(SubgroupDesc::Scalar(self.spec()?))
        }
    }

    pub fn h(&mut self) -> Result<HDesc, SyntaxError> {
        match self.ident()?.as_str() {
            "fullH" => Ok(HDesc::FullH),
            "prodH" => {
                self.punct('(')?;
                let a = self.sub()?;
                self.punct(',')?;
                let b = self.sub()?;
                self.punct(')')?;
                Ok(HDesc::ProdH(a, b))
            }
            "graphH" => {
                self.punct('(')?;
                let n = self.number()?;
                let c = parse_rational(&n).ok_or_else(|| self.error(format!("'{n}' is not a rational")))?;
                self.punct(')')?;
                Ok(HDesc::GraphH(c))
            }
            other => Err(self.error(format!("expected fullH, prodH or graphH, got '{other}'"))),
        }
    }

    pub fn algebra(&mut self) -> Result<Algebra, SpecError> {
        let head = match self.peek() {
            Some(Kind::Ident(s)) => s.clone(),
            _ => return Ok(Algebra::group(self.group()?)),
        };
        if matches!(head.as_str(), "Z" | "Q" | "Lex") {
            return Ok(Algebra::group(self.group()?));
        }
        let start = self.pos;
        self.pos += 1;
        self.punct('(')?;
        let built = match head.as_str() {
            "I" => {
                let x = self.arg_alg()?;
                let z = self.sub()?;
                self.punct(',')?;
                let y = self.last_alg()?;
                build_type(TypeKind::I, x, Some(z), None, y)
            }
            "II" => {
                let x = self.arg_alg()?;
                let y = self.last_alg()?;
                build_type(TypeKind::II, x, None, None, y)
            }
            "III" => {
                let x = self.arg_alg()?;
                let z = self.sub()?;
                self.punct(',')?;
                let v = self.sub()?;
                self.punct(',')?;
                let y = self.last_alg()?;
                build_type(TypeKind::III, x, Some(z), Some(v), y)
            }
            "IV" => {
                let x = self.arg_alg()?;
                let v = self.sub()?;
                self.punct(',')?;
                let y = self.last_alg()?;
                build_type(TypeKind::IV, x, None, Some(v), y)
            }
            "SLI" => {
                let x = self.arg_alg()?;
                let z = self.sub()?;
                self.punct(',')?;
                let y = self.arg_alg()?;
                let h = self.h()?;
                self.punct(')')?;
                build_sublex(SublexKind::I, x, Some(z), y, h)
            }
            "SLII" => {
                let x = self.arg_alg()?;
                let y = self.arg_alg()?;
                let h = self.h()?;
                self.punct(')')?;
                build_sublex(SublexKind::II, x, None, y, h)
            }
            other => {
                self.pos = start;
                return Err(self.error(format!("unknown construction '{other}'")).into());
            }
        };
        Ok(built?)
    }

    fn arg_alg(&mut self) -> Result<Arc<Algebra>, SpecError> {
        let a = self.algebra()?;
        self.punct(',')?;
        Ok(Arc::new(a))
    }

    fn last_alg(&mut self) -> Result<Arc<Algebra>, SpecError> {
        let a = self.algebra()?;
        self.punct(')')?;
        Ok(Arc::new(a))
    }
}

/// Parse and build a whole spec, e.g. `I(II(Z, Q), full, Q)`.
pub fn parse_algebra(text: &str) -> Result<Algebra, SpecError> {
    let mut t = Tokens::new(text)?;
    let a = t.algebra()?;
    t.expect_end()?;
    Ok(a)
}

pub fn parse_group(text: &str) -> Result<GroupDesc, SyntaxError> {
    let mut t = Tokens::new(text)?;
    let g = t.group()?;
    t.expect_end()?;
    Ok(g)
}

pub fn parse_sub(text: &str) -> Result<SubgroupDesc, SyntaxError> {
    let mut t = Tokens::new(text)?;
    let s = t.sub()?;
    t.expect_end()?;
    Ok(s)
}

pub fn parse_h(text: &str) -> Result<HDesc, SyntaxError> {
    let mut t = Tokens::new(text)?;
    let h = t.h()?;
    t.expect_end()?;
    Ok(h)
}
