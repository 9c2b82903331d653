//! Text grammar for Laurent polynomials.
//!
//! ```text
//! poly := term (('+'|'-') term)*
//! term := [integer]['*']? [var['^'int]]*
//! ```
//!
//! Whitespace is insignificant. Formatting emits terms in ascending lex
//! exponent order with explicit signs, e.g. `1 - x*y^-1 + 3*x^2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly1, LaurentPoly2};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        let found = self
            .peek()
            .map(|c| format!("'{c}'"))
            .unwrap_or_else(|| "end of input".into());
        Error::Parse(format!("{what} at position {}, found {found}", self.pos))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        if paren && !self.eat(')') {
            return Err(self.err("expected ')'"));
        }
        let v: i64 = d
            .parse()
            .map_err(|_| Error::Parse(format!("exponent {d} too large")))?;
        Ok(if neg { -v } else { v })
    }
}

fn parse_term(cur: &mut Cursor, vars: [char; 2]) -> Result<((i64, i64), BigInt)> {
    let mut coeff = BigInt::one();
    let mut exps = [0i64; 2];
    let mut seen = false;
    if let Some(d) = cur.digits() {
        coeff = d.parse().expect("ascii digits");
        seen = true;
        if cur.eat('*') && !cur.peek().is_some_and(|c| vars.contains(&c)) {
            return Err(cur.err("expected variable after '*'"));
        }
    }
    while let Some(v) = cur.peek().and_then(|c| vars.iter().position(|&w| w == c)) {
        cur.bump();
        seen = true;
        exps[v] += if cur.eat('^') { cur.exponent()? } else { 1 };
        if cur.eat('*') && !cur.peek().is_some_and(|c| vars.contains(&c)) {
            return Err(cur.err("expected variable after '*'"));
        }
    }
    if !seen {
        return Err(cur.err("expected term"));
    }
    Ok(((exps[0], exps[1]), coeff))
}

/// Parses a polynomial in the variables `vars[0]`, `vars[1]`.
pub fn parse_poly2(text: &str, vars: [char; 2]) -> Result<LaurentPoly2> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (k, c) = parse_term(&mut cur, vars)?;
        terms.push((k, if negative { -c } else { c }));
        match cur.bump() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(_) => {
                cur.pos -= 1;
                return Err(cur.err("expected '+' or '-'"));
            }
        }
    }
    Ok(LaurentPoly2::from_terms(terms))
}

/// Parses a polynomial in a single variable.
pub fn parse_poly1(text: &str, var: char) -> Result<LaurentPoly1> {
    // '\0' never survives the cursor, so the second slot is unused.
    let p = parse_poly2(text, [var, '\0'])?;
    Ok(LaurentPoly1::from_terms(
        p.terms().map(|((e, _), c)| (e, c.clone())),
    ))
}

fn push_term(out: &mut String, first: bool, c: &BigInt, mono: &str) {
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else {
        out.push_str(if c.is_negative() { " - " } else { " + " });
    }
    let a = c.abs();
    if mono.is_empty() {
        out.push_str(&a.to_string());
    } else if a.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&format!("{a}*{mono}"));
    }
}

fn power(var: char, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

pub fn format_poly2(p: &LaurentPoly2, vars: [char; 2]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, ((a, b), c)) in p.terms().enumerate() {
        let mono: Vec<String> = [power(vars[0], a), power(vars[1], b)]
            .into_iter()
            .flatten()
            .collect();
        push_term(&mut out, i == 0, c, &mono.join("*"));
    }
    out
}

pub fn format_poly1(p: &LaurentPoly1, var: char) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        push_term(&mut out, i == 0, c, &power(var, e).unwrap_or_default());
    }
    out
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly2(self, ['x', 'y']))
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly1(self, 't'))
    }
}

impl FromStr for LaurentPoly2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly2(s, ['x', 'y'])
    }
}

impl FromStr for LaurentPoly1 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly1(s, 't')
    }
}
