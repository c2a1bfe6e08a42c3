//! Expression text shared by every parser: integers, identifiers, bracketed
//! digit vectors `[a0,a1,...]`, `+ - * / ^` and parentheses. Juxtaposed
//! factors such as `(Y - u)(Y + u)` or `2T` multiply.

use num_bigint::BigInt;

use super::Ring;
use crate::error::{HitError, Result};

const MAX_EXPONENT: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Leaf {
    Num(BigInt),
    Var(String),
    Digits(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Leaf(Leaf),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

impl Expr {
    /// Evaluates into `ring`, resolving leaves and divisions through callbacks.
    pub fn eval<R: Ring>(
        &self,
        ring: &R,
        leaf: &dyn Fn(&Leaf) -> Result<R::Elem>,
        div: &dyn Fn(&R::Elem, &R::Elem) -> Result<R::Elem>,
    ) -> Result<R::Elem> {
        Ok(match self {
            Expr::Leaf(l) => leaf(l)?,
            Expr::Neg(a) => ring.neg(&a.eval(ring, leaf, div)?),
            Expr::Add(a, b) => ring.add(&a.eval(ring, leaf, div)?, &b.eval(ring, leaf, div)?),
            Expr::Sub(a, b) => ring.sub(&a.eval(ring, leaf, div)?, &b.eval(ring, leaf, div)?),
            Expr::Mul(a, b) => ring.mul(&a.eval(ring, leaf, div)?, &b.eval(ring, leaf, div)?),
            Expr::Div(a, b) => div(&a.eval(ring, leaf, div)?, &b.eval(ring, leaf, div)?)?,
            Expr::Pow(a, e) => ring.pow(&a.eval(ring, leaf, div)?, *e),
        })
    }

    /// Identifiers appearing in the expression.
    pub fn vars(&self) -> Vec<String> {
        let mut out = vec![];
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Leaf(Leaf::Var(v)) => out.push(v.clone()),
            Expr::Leaf(_) => {}
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Digits(Vec<u64>),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = vec![];
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if c == '[' {
            let end = chars[i..]
                .iter()
                .position(|&x| x == ']')
                .ok_or_else(|| HitError::Parse("unclosed '['".into()))?;
            let body: String = chars[i + 1..i + end].iter().collect();
            let digits = body
                .split(',')
                .map(|d| {
                    d.trim().parse::<u64>().map_err(|_| {
                        HitError::Parse(format!("bad digit '{}' in [{body}]", d.trim()))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(Tok::Digits(digits));
            i += end + 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(HitError::Parse(format!(
                "unexpected character '{c}' at offset {i}"
            )));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat('/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
            } else if matches!(
                self.peek(),
                Some(Tok::Op('(')) | Some(Tok::Ident(_)) | Some(Tok::Digits(_))
            ) {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        if self.eat('+') {
            return self.factor();
        }
        let base = self.primary()?;
        if self.eat('^') {
            let e = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => n.clone(),
                _ => {
                    return Err(HitError::Parse(
                        "exponent must be a nonnegative integer".into(),
                    ))
                }
            };
            self.pos += 1;
            let e: u64 = u64::try_from(&e)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| HitError::Parse(format!("exponent {e} too large")))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let tok = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| HitError::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Expr::Leaf(Leaf::Num(n))),
            Tok::Ident(v) => Ok(Expr::Leaf(Leaf::Var(v))),
            Tok::Digits(d) => Ok(Expr::Leaf(Leaf::Digits(d))),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(HitError::Parse("expected ')'".into()));
                }
                Ok(e)
            }
            Tok::Op(c) => Err(HitError::Parse(format!("unexpected '{c}'"))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(HitError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(HitError::Parse(format!(
            "trailing input after token {}",
            p.pos
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, Frac, Integers, PolyRing};

    fn eval_q_poly(s: &str) -> Vec<crate::arith::FracElem<BigInt>> {
        let q = Frac::new(Integers);
        let r = PolyRing::new(q.clone(), "x");
        let e = parse_expr(s).unwrap();
        e.eval(
            &r,
            &|l| match l {
                Leaf::Num(n) => Ok(r.constant(q.from_bigint(n))),
                Leaf::Var(v) if v == "x" => Ok(r.x()),
                _ => Err(HitError::Parse("leaf".into())),
            },
            &|a, b| {
                if b.len() != 1 {
                    return Err(HitError::Parse("non-constant divisor".into()));
                }
                Ok(r.scale(a, &q.inv(&b[0]).unwrap()))
            },
        )
        .unwrap()
    }

    #[test]
    fn precedence_and_juxtaposition() {
        let q = Frac::new(Integers);
        let r = PolyRing::new(q.clone(), "x");
        assert_eq!(r.fmt_elem(&eval_q_poly("-x^2 + 2*x - 1")), "-x^2 + 2*x - 1");
        assert_eq!(r.fmt_elem(&eval_q_poly("(x - 1)(x + 1)")), "x^2 - 1");
        assert_eq!(r.fmt_elem(&eval_q_poly("3x/2")), "(3/2)*x");
        assert_eq!(r.fmt_elem(&eval_q_poly("2^3 - x^0")), "7");
    }

    #[test]
    fn errors() {
        assert!(parse_expr("x +").is_err());
        assert!(parse_expr("(x").is_err());
        assert!(parse_expr("x ^ y").is_err());
        assert!(parse_expr("x $ 2").is_err());
        assert!(parse_expr("").is_err());
        assert_eq!(
            parse_expr("[1,2]").unwrap(),
            Expr::Leaf(Leaf::Digits(vec![1, 2]))
        );
    }
}
