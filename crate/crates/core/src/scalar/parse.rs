//! Text grammar for scalars.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := number | 'q' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::qrational::QRational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn decimal(s: &str) -> Option<BigRational> {
    let (int_part, frac_part) = match s.split_once('.') {
        Some((a, b)) => (a, b),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let d = num_traits::pow(BigInt::from(10), frac_part.len());
    Some(BigRational::new(n, d))
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => {}
            '+' => out.push(Tok::Plus),
            '-' | '\u{2212}' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            'q' => out.push(Tok::Q),
            d if d.is_ascii_digit() || d == '.' => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_digit() || chars[i + 1] == '.') {
                    i += 1;
                }
                let text: String = chars[start..=i].iter().collect();
                let v = decimal(&text).ok_or_else(|| Error::Parse(format!("bad number {text:?}")))?;
                out.push(Tok::Num(v));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
        i += 1;
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

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<QRational> {
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

    fn term(&mut self) -> Result<QRational> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                Some(Tok::Num(_)) | Some(Tok::Q) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QRational> {
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

    fn power(&mut self) -> Result<QRational> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = match self.next() {
            Some(Tok::Num(v)) if v.is_integer() => v.to_integer(),
            other => return Err(Error::Parse(format!("expected integer exponent, found {other:?}"))),
        };
        let e: i32 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
        base.pow(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<QRational> {
        match self.next() {
            Some(Tok::Num(v)) => Ok(QRational::from_rational(v)),
            Some(Tok::Q) => Ok(QRational::q()),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(v),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a rational function of `q`, e.g. `"(q-1)/(q^2+1)"` or `"3/2*q"`.
pub fn parse_qrational(s: &str) -> Result<QRational> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

/// Parse a plain rational: `"3"`, `"-1/2"`, `"0.25"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let v = parse_qrational(s)?;
    v.as_rational().ok_or_else(|| Error::Parse(format!("{s:?} depends on q")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn parses_arithmetic() {
        let v = parse_qrational("(q-1)/(q^2-1)").unwrap();
        assert_eq!(v.to_string(), "1/(q + 1)");
        assert_eq!(parse_qrational("2q - q").unwrap(), QRational::q());
        assert_eq!(parse_qrational("q^-1 * q").unwrap(), QRational::one());
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
    }

    #[test]
    fn display_round_trips() {
        for s in ["(q-1)/q", "3/(2*q^2 + 1)", "-q/(q-5)", "7", "-1/3"] {
            let v = parse_qrational(s).unwrap();
            assert_eq!(parse_qrational(&v.to_string()).unwrap(), v, "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_qrational("").is_err());
        assert!(parse_qrational("q +").is_err());
        assert!(parse_qrational("(q").is_err());
        assert!(parse_qrational("x").is_err());
        assert!(parse_qrational("1/(q-q)").is_err());
        assert!(parse_rational("q").is_err());
    }
}
