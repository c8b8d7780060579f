//! Text grammar and JSON object form for tower elements.
//!
//! Grammar: integers, the variable `s`, `+ - * /`, parentheses and `^` with
//! a non-negative integer exponent. The variable may also carry a fractional
//! exponent `s^(a/b)` or `s^{a/b}` with `b` a power of `p`, which places the
//! element in the tower. Juxtaposition (`3s`) multiplies.

use super::{is_prime, Field, Fp, Poly, TowerElement};
use crate::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// `{"p":5,"level":0,"num":"s^2 + 3","den":"s + 1"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerJson {
    pub p: u64,
    pub level: u32,
    pub num: String,
    pub den: String,
}

impl TowerJson {
    pub fn from_element(x: &TowerElement) -> Self {
        TowerJson {
            p: x.p(),
            level: x.level(),
            num: format_poly(x.num(), x.p(), x.level()),
            den: format_poly(x.den(), x.p(), x.level()),
        }
    }

    pub fn to_element(&self) -> Result<TowerElement> {
        let num = parse_element(&self.num, self.p)?;
        let den = parse_element(&self.den, self.p)?;
        let x = num.div(&den).ok_or(Error::DivisionByZero)?.descend();
        if x.level() > self.level {
            return Err(Error::InvalidArgument(format!(
                "element needs level {} but level {} was given",
                x.level(),
                self.level
            )));
        }
        Ok(x.lift(self.level))
    }
}

fn format_monomial(k: usize, p: u64, level: u32) -> String {
    if k == 0 {
        return String::new();
    }
    let denom = (p as usize).pow(level);
    let g = k.gcd(&denom);
    let (a, b) = (k / g, denom / g);
    match (a, b) {
        (1, 1) => "s".to_string(),
        (a, 1) => format!("s^{a}"),
        (a, b) => format!("s^({a}/{b})"),
    }
}

pub(crate) fn format_poly(poly: &Poly<Fp>, p: u64, level: u32) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<String> = poly
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let mono = format_monomial(k, p, level);
            match (mono.is_empty(), c.value()) {
                (true, v) => v.to_string(),
                (false, 1) => mono,
                (false, v) => format!("{v}*{mono}"),
            }
        })
        .collect();
    terms.join(" + ")
}

pub(crate) fn format_element(x: &TowerElement) -> String {
    let num = format_poly(x.num(), x.p(), x.level());
    if x.den().is_one() {
        return num;
    }
    let den = format_poly(x.den(), x.p(), x.level());
    let wrap = |t: String, multi: bool| if multi { format!("({t})") } else { t };
    let num_multi =
        x.num().coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || num.contains('*');
    let den_multi = x.den().coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
    format!("{}/{}", wrap(num, num_multi), wrap(den, den_multi))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open(char),
    Close(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(chars[start..i].iter().collect())));
                continue;
            }
            's' => Tok::Var,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' | '{' => Tok::Open(c),
            ')' | '}' => Tok::Close(c),
            other => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    p: u64,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(i, _)| *i)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expect_close(&mut self) -> Result<()> {
        match self.peek() {
            Some(Tok::Close(_)) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err("expected closing bracket"),
        }
    }

    fn expr(&mut self) -> Result<TowerElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TowerElement> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.unary()?;
                    acc = acc.div(&d).ok_or(Error::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                }
                Some(Tok::Num(_)) | Some(Tok::Var) | Some(Tok::Open(_)) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<TowerElement> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        match self.peek().cloned() {
            Some(Tok::Num(digits)) => {
                let v = digits
                    .parse::<u64>()
                    .or_else(|_| self.err("exponent too large"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn power(&mut self) -> Result<TowerElement> {
        let is_var = matches!(self.peek(), Some(Tok::Var));
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.pos += 1;
        if let Some(Tok::Open(_)) = self.peek() {
            self.pos += 1;
            let a = self.integer()?;
            let b = if matches!(self.peek(), Some(Tok::Slash)) {
                self.pos += 1;
                let at = self.here();
                let b = self.integer()?;
                if b == 0 {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "zero denominator in exponent".into(),
                    });
                }
                b
            } else {
                1
            };
            self.expect_close()?;
            if b == 1 {
                return Ok(base.pow(a));
            }
            if !is_var {
                return self.err("fractional exponents are only allowed on s");
            }
            let g = a.gcd(&b);
            let (a, mut b) = (a / g, b / g);
            let mut level = 0u32;
            while b > 1 && b % self.p == 0 {
                b /= self.p;
                level += 1;
            }
            if b != 1 {
                return self.err(format!("exponent denominator is not a power of {}", self.p));
            }
            return Ok(TowerElement::generator(self.p, level).pow(a));
        }
        let e = self.integer()?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<TowerElement> {
        match self.peek().cloned() {
            Some(Tok::Num(digits)) => {
                self.pos += 1;
                let r = digits.bytes().fold(0u128, |acc, d| {
                    (acc * 10 + (d - b'0') as u128) % self.p as u128
                });
                Ok(TowerElement::from_int(r as i64, self.p))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                Ok(TowerElement::s(self.p))
            }
            Some(Tok::Open(_)) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_close()?;
                Ok(e)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an element of the tower over `F_p(s)`.
pub fn parse_element(text: &str, p: u64) -> Result<TowerElement> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        p,
    };
    let value = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(value)
}
