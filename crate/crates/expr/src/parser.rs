//! Recursive-descent parser for scalar expressions and vector fields.
//!
//! Grammar:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' exponent)?
//! exponent:= ['-'] INT | '(' ['-'] INT ')'
//! primary := INT | NAME | FUNC '(' expr ')' | '(' expr ')' | 'd/d' COORD
//! ```
//!
//! `d/d<coord>` is only recognized when parsing a vector field.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::chart::Chart;
use crate::error::ExprError;
use crate::expr::Expr;
use crate::poly::{Func, Rat};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(message: impl Into<String>, line: usize, column: usize) -> ExprError {
    ExprError::Syntax {
        message: message.into(),
        line,
        column,
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token {
                tok,
                line: tl,
                column: tc,
            });
            i += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                return Err(syntax(
                    "decimal literals are not supported; write a fraction",
                    tl,
                    tc,
                ));
            }
            if i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '_') {
                return Err(syntax("identifier cannot start with a digit", tl, tc));
            }
            let digits: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("digits")),
                line: tl,
                column: tc,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - start;
            out.push(Token {
                tok: Tok::Name(chars[start..i].iter().collect()),
                line: tl,
                column: tc,
            });
            continue;
        }
        if c == '.' {
            return Err(syntax(
                "decimal literals are not supported; write a fraction",
                tl,
                tc,
            ));
        }
        return Err(syntax(format!("unexpected character '{c}'"), tl, tc));
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

/// Parser value: a scalar, or a vector field given by its components.
#[derive(Debug, Clone)]
enum Value {
    Scalar(Expr),
    Vector(Vec<Expr>),
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    chart: &'a Chart,
    vector_mode: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn advance(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token, ExprError> {
        let t = self.peek().clone();
        if t.tok == tok {
            Ok(self.advance())
        } else {
            Err(syntax(
                format!("expected {what}, found {}", describe(&t.tok)),
                t.line,
                t.column,
            ))
        }
    }

    fn parse_all(&mut self) -> Result<Value, ExprError> {
        let v = self.expr()?;
        let t = self.peek().clone();
        if t.tok != Tok::End {
            return Err(syntax(
                format!("unexpected {}", describe(&t.tok)),
                t.line,
                t.column,
            ));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.term()?;
        loop {
            let t = self.peek().clone();
            let negate = match t.tok {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            self.advance();
            let rhs = self.term()?;
            acc = combine_add(acc, rhs, negate, &t)?;
        }
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.unary()?;
        loop {
            let t = self.peek().clone();
            match t.tok {
                Tok::Star => {
                    self.advance();
                    let rhs = self.unary()?;
                    acc = combine_mul(acc, rhs, &t)?;
                }
                Tok::Slash => {
                    self.advance();
                    let rhs = self.unary()?;
                    acc = combine_div(acc, rhs, &t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value, ExprError> {
        match self.peek().tok {
            Tok::Minus => {
                self.advance();
                Ok(match self.unary()? {
                    Value::Scalar(e) => Value::Scalar(-e),
                    Value::Vector(v) => Value::Vector(v.into_iter().map(|e| -e).collect()),
                })
            }
            Tok::Plus => {
                self.advance();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value, ExprError> {
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.advance();
        let exponent = self.exponent()?;
        match base {
            Value::Scalar(e) => e
                .pow(exponent)
                .map(Value::Scalar)
                .map_err(|err| positioned(err, &caret)),
            Value::Vector(_) => Err(syntax(
                "a vector field cannot be raised to a power",
                caret.line,
                caret.column,
            )),
        }
    }

    fn exponent(&mut self) -> Result<i64, ExprError> {
        let paren = self.peek().tok == Tok::LParen;
        if paren {
            self.advance();
        }
        let mut sign = 1;
        match self.peek().tok {
            Tok::Minus => {
                self.advance();
                sign = -1;
            }
            Tok::Plus => {
                self.advance();
            }
            _ => {}
        }
        let t = self.advance();
        let n = match &t.tok {
            Tok::Int(n) => n
                .to_i64()
                .filter(|v| *v <= i64::from(u32::MAX))
                .ok_or_else(|| syntax("exponent too large", t.line, t.column))?,
            other => {
                return Err(syntax(
                    format!("exponent must be an integer literal, found {}", describe(other)),
                    t.line,
                    t.column,
                ))
            }
        };
        if paren {
            self.expect(Tok::RParen, "')'")?;
        }
        Ok(sign * n)
    }

    fn primary(&mut self) -> Result<Value, ExprError> {
        let t = self.advance();
        match t.tok.clone() {
            Tok::Int(n) => Ok(Value::Scalar(Expr::rat(Rat::from_integer(n)))),
            Tok::LParen => {
                let v = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(v)
            }
            Tok::Name(name) => {
                if self.vector_mode && name == "d" && self.peek().tok == Tok::Slash {
                    if let Tok::Name(next) = self.peek_at(1).clone() {
                        if let Some(idx) = next
                            .strip_prefix('d')
                            .and_then(|c| self.chart.coordinate_index(c))
                        {
                            self.advance();
                            self.advance();
                            let mut comps = vec![Expr::zero(); self.chart.dim()];
                            comps[idx] = Expr::one();
                            return Ok(Value::Vector(comps));
                        }
                    }
                }
                if let Some(func) = Func::from_name(&name) {
                    self.expect(Tok::LParen, &format!("'(' after {name}"))?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    let arg = match arg {
                        Value::Scalar(e) => e,
                        Value::Vector(_) => {
                            return Err(syntax(
                                format!("{name} of a vector field"),
                                t.line,
                                t.column,
                            ))
                        }
                    };
                    return Expr::apply(func, arg)
                        .map(Value::Scalar)
                        .map_err(|err| positioned(err, &t));
                }
                if self.chart.is_declared(&name) {
                    return Ok(Value::Scalar(Expr::symbol(&name)));
                }
                Err(ExprError::UnknownIdentifier {
                    name,
                    line: t.line,
                    column: t.column,
                })
            }
            other => Err(syntax(
                format!("expected an operand, found {}", describe(&other)),
                t.line,
                t.column,
            )),
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Int(n) => format!("number {n}"),
        Tok::Name(s) => format!("'{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn positioned(err: ExprError, at: &Token) -> ExprError {
    match err {
        ExprError::DivisionByZero => syntax("division by zero", at.line, at.column),
        ExprError::Domain(m) => syntax(format!("outside the domain: {m}"), at.line, at.column),
        ExprError::Overflow => syntax("exponent too large", at.line, at.column),
        other => other,
    }
}

fn combine_add(a: Value, b: Value, negate: bool, at: &Token) -> Result<Value, ExprError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(if negate {
            &x - &y
        } else {
            &x + &y
        })),
        (Value::Vector(x), Value::Vector(y)) => Ok(Value::Vector(
            x.iter()
                .zip(&y)
                .map(|(p, q)| if negate { p - q } else { p + q })
                .collect(),
        )),
        _ => Err(syntax(
            "cannot add a scalar and a vector field",
            at.line,
            at.column,
        )),
    }
}

fn combine_mul(a: Value, b: Value, at: &Token) -> Result<Value, ExprError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
        (Value::Scalar(s), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(s)) => {
            Ok(Value::Vector(v.iter().map(|c| &s * c).collect()))
        }
        (Value::Vector(_), Value::Vector(_)) => Err(syntax(
            "cannot multiply two vector fields",
            at.line,
            at.column,
        )),
    }
}

fn combine_div(a: Value, b: Value, at: &Token) -> Result<Value, ExprError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => x
            .try_div(&y)
            .map(Value::Scalar)
            .map_err(|e| positioned(e, at)),
        (Value::Vector(v), Value::Scalar(s)) => {
            let inv = s.inv().map_err(|e| positioned(e, at))?;
            Ok(Value::Vector(v.iter().map(|c| c * &inv).collect()))
        }
        (_, Value::Vector(_)) => Err(syntax(
            "cannot divide by a vector field",
            at.line,
            at.column,
        )),
    }
}

/// Parses a scalar expression over the chart.
pub fn parse_expr(text: &str, chart: &Chart) -> Result<Expr, ExprError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        chart,
        vector_mode: false,
    };
    match p.parse_all()? {
        Value::Scalar(e) => Ok(e),
        Value::Vector(_) => unreachable!("vector tokens are disabled in scalar mode"),
    }
}

/// Parses a vector field written with `d/d<coord>` basis fields; returns its
/// components in chart-coordinate order.
pub fn parse_vector_field(text: &str, chart: &Chart) -> Result<Vec<Expr>, ExprError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        chart,
        vector_mode: true,
    };
    match p.parse_all()? {
        Value::Vector(v) => Ok(v),
        Value::Scalar(e) if e.is_literal_zero() => Ok(vec![Expr::zero(); chart.dim()]),
        Value::Scalar(_) => Err(syntax(
            "expected a vector field (use d/dx, d/dy, ...)",
            1,
            1,
        )),
    }
}
