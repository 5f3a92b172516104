//! Text syntax for polynomials.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ('^' integer)?
//! primary := integer ('/' integer)? | name | '(' expr ')'
//! ```
//!
//! `1` denotes the empty word. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::polynomial::{Coefficient, NcPolynomial};
use crate::words::{Alphabet, Word, WordOrder};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("`{n}`"),
            Tok::Name(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    line: usize,
    col_offset: usize,
    alphabet: &'a Alphabet,
    ord: &'a dyn WordOrder,
}

fn tokenize(text: &str, line: usize, col_offset: usize) -> Result<(Vec<(Tok, usize)>, usize)> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, col));
            k += 1;
        } else if c.is_ascii_digit() {
            let s = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[s..k].iter().collect();
            toks.push((Tok::Int(digits.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            toks.push((Tok::Name(chars[s..k].iter().collect()), col));
        } else {
            return Err(Error::Parse {
                line,
                column: col + col_offset,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok((toks, chars.len() + 1))
}

impl Parser<'_> {
    fn err<T>(&self, column: usize, message: String) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            column: column + self.col_offset,
            message,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T> {
        match self.peek() {
            Some(t) => self.err(
                self.col(),
                format!("expected {wanted}, found {}", t.describe()),
            ),
            None => self.err(self.col(), format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<NcPolynomial> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t, self.ord);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t, self.ord);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NcPolynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f, self.ord);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcPolynomial> {
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let col = self.col();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let k: u32 = match u32::try_from(&n) {
                        Ok(k) if k <= 1 << 16 => k,
                        _ => return self.err(col, format!("exponent `{n}` too large")),
                    };
                    return Ok(base.pow(k, self.ord));
                }
                _ => {
                    self.pos -= 1;
                    return self.unexpected("an integer exponent");
                }
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<NcPolynomial> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let dcol = self.col();
                    match self.bump() {
                        Some(Tok::Int(d)) if d.is_positive() => Ok(NcPolynomial::monomial(
                            Coefficient::new(n, d),
                            Word::empty(),
                        )),
                        Some(Tok::Int(_)) => self.err(dcol, "zero denominator".into()),
                        _ => {
                            self.pos -= 1;
                            self.unexpected("a denominator")
                        }
                    }
                } else {
                    Ok(NcPolynomial::monomial(
                        Coefficient::from_integer(n),
                        Word::empty(),
                    ))
                }
            }
            Some(Tok::Name(s)) => match self.alphabet.letter(&s) {
                Some(l) => Ok(NcPolynomial::monomial(
                    Coefficient::one(),
                    Word::from_letters(vec![l]),
                )),
                None => self.err(col, format!("unknown variable `{s}`")),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => self.unexpected("`)`"),
                }
            }
            Some(_) => {
                self.pos -= 1;
                self.unexpected("a coefficient, variable or `(`")
            }
            None => self.unexpected("a coefficient, variable or `(`"),
        }
    }
}

/// Parses `text` as a polynomial. Error positions are reported relative to
/// `line` and shifted by `col_offset` columns.
pub fn parse_polynomial_at(
    text: &str,
    alphabet: &Alphabet,
    ord: &dyn WordOrder,
    line: usize,
    col_offset: usize,
) -> Result<NcPolynomial> {
    let (toks, end_col) = tokenize(text, line, col_offset)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col,
        line,
        col_offset,
        alphabet,
        ord,
    };
    if p.peek().is_none() {
        return p.err(1, "empty polynomial".into());
    }
    let f = p.expr()?;
    if p.peek().is_some() {
        return p.unexpected("an operator or end of input");
    }
    Ok(f)
}

pub fn parse_polynomial(
    text: &str,
    alphabet: &Alphabet,
    ord: &dyn WordOrder,
) -> Result<NcPolynomial> {
    parse_polynomial_at(text, alphabet, ord, 1, 0)
}

/// Renders terms in descending order, e.g. `a*b^2 - 1/2*b + 3`.
pub fn format_polynomial(f: &NcPolynomial, alphabet: &Alphabet) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (w, c)) in f.terms().iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if w.is_empty() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push_str(&alphabet.render(w));
        }
    }
    out
}
