use std::fmt;

use chain_core::{parse_elem_prefix, Algebra, Chain, Elem, Monoid};

use crate::CliError;

/// Result of an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Elem(Elem),
    Bool(bool),
    List(Vec<Elem>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Elem(e) => write!(f, "{e}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::List(xs) => {
                f.write_str("[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
        }
    }
}

const OPS: [(&str, usize); 9] =
    [("mul", 2), ("res", 2), ("comp", 1), ("tau", 1), ("le", 2), ("down", 1), ("up", 1), ("unit", 0), ("idems", 0)];

struct Parser<'a> {
    a: &'a Algebra,
    src: &'a str,
    pos: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse(format!("expression error at byte {pos}: {}", msg.into()))
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn word(&self) -> Option<&str> {
        let r = self.rest();
        let n = r.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(r.len());
        (n > 0).then(|| &r[..n])
    }

    /// Operator starting at the cursor, possibly after an opening paren.
    fn op_after(&self, paren: bool) -> Option<(&'static str, usize)> {
        let mut p = Parser { a: self.a, src: self.src, pos: self.pos };
        if paren {
            p.pos += 1;
            p.skip_ws();
        }
        let w = p.word()?;
        OPS.iter().find(|(name, _)| *name == w).copied()
    }

    fn expr(&mut self) -> Result<Value, CliError> {
        self.skip_ws();
        if self.rest().starts_with('(') && self.op_after(true).is_some() {
            self.pos += 1;
            let v = self.expr()?;
            self.skip_ws();
            if !self.rest().starts_with(')') {
                return Err(syntax(self.pos, "expected )"));
            }
            self.pos += 1;
            return Ok(v);
        }
        if let Some((op, arity)) = self.op_after(false) {
            self.pos += op.len();
            let mut args = Vec::with_capacity(arity);
            for _ in 0..arity {
                let at = self.pos;
                match self.expr()? {
                    Value::Elem(e) => args.push(e),
                    v => return Err(syntax(at, format!("{op} expects an element, got {v}"))),
                }
            }
            return Ok(self.apply(op, &args));
        }
        if self.rest().is_empty() {
            return Err(syntax(self.pos, "unexpected end of expression"));
        }
        let (e, n) = parse_elem_prefix(self.a, self.rest()).map_err(|e| match e {
            chain_core::LiteralError::Syntax { pos, msg } => syntax(self.pos + pos, msg),
            other => CliError::Parse(other.to_string()),
        })?;
        self.pos += n;
        Ok(Value::Elem(e))
    }

    fn apply(&self, op: &str, x: &[Elem]) -> Value {
        let a = self.a;
        match op {
            "mul" => Value::Elem(a.mul(&x[0], &x[1])),
            "res" => Value::Elem(a.res(&x[0], &x[1])),
            "comp" => Value::Elem(a.comp(&x[0])),
            "tau" => Value::Elem(a.tau(&x[0])),
            "le" => Value::Bool(a.le(&x[0], &x[1])),
            "down" => Value::Elem(a.x_down(&x[0])),
            "up" => Value::Elem(a.x_up(&x[0])),
            "unit" => Value::Elem(a.unit()),
            _ => Value::List(a.positive_idempotents()),
        }
    }
}

/// Evaluate `mul e e | res e e | comp e | tau e | le e e | down e | up e |
/// unit | idems`, where `e` is an element literal or a nested expression,
/// optionally parenthesized.
pub fn eval(a: &Algebra, src: &str) -> Result<Value, CliError> {
    let mut p = Parser { a, src, pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(syntax(p.pos, "trailing input"));
    }
    Ok(v)
}
