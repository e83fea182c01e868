//! Text grammar for Hecke algebra elements.
//!
//! A sum of terms; each term is a `*`-separated product of factors, where a
//! factor is `T[2 1 3]`, `th[(1,0,-1)]` or a scalar expression in `q`.
//! Factors are multiplied in the order written.

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::scalar::{parse_qrational, QRational};

#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    T(Permutation),
    Theta(Vec<i64>),
}

/// A term: scalar coefficient times an ordered product of basis factors.
pub type Term = (QRational, Vec<Factor>);

pub fn parse_terms(s: &str) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    for (negate, text) in split_top_level(s, &['+', '-'])? {
        let mut coeff = QRational::one();
        let mut factors = Vec::new();
        let mut scalar_parts = Vec::new();
        for (_, f) in split_top_level(&text, &['*'])? {
            let f = f.trim();
            if let Some(inner) = f.strip_prefix("T[").and_then(|r| r.strip_suffix(']')) {
                factors.push(Factor::T(inner.parse()?));
            } else if let Some(inner) = f.strip_prefix("th[").and_then(|r| r.strip_suffix(']')) {
                factors.push(Factor::Theta(parse_vector(inner)?));
            } else if f.is_empty() {
                return Err(Error::Parse(format!("empty factor in {text:?}")));
            } else {
                scalar_parts.push(f.to_string());
            }
        }
        if !scalar_parts.is_empty() {
            coeff = parse_qrational(&scalar_parts.join("*"))?;
        }
        if negate {
            coeff = coeff.neg();
        }
        out.push((coeff, factors));
    }
    Ok(out)
}

pub fn parse_vector(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad vector entry {t:?}"))))
        .collect()
}

pub fn render_vector(x: &[i64]) -> String {
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Render `coeff * basis` in the grammar above.
pub fn render_term(coeff: &QRational, basis: &str) -> String {
    if coeff.is_one() {
        return basis.to_string();
    }
    if coeff.neg().is_one() {
        return format!("-{basis}");
    }
    format!("{basis} * ({coeff})")
}

pub fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

/// Split at separators outside parentheses and brackets. For `+`/`-`, a
/// separator directly after an operator or at the start is a sign, not a
/// split point. Returns `(preceded_by_minus, piece)` pairs.
fn split_top_level(s: &str, seps: &[char]) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negate = false;
    let mut last_sig: Option<char> = None;
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
        }
        let is_sep = depth == 0 && seps.contains(&c);
        let is_sign = matches!(c, '+' | '-');
        let after_operator = matches!(last_sig, None | Some('*') | Some('/') | Some('^') | Some('('));
        if is_sep && !(is_sign && after_operator) {
            if cur.trim().is_empty() {
                return Err(Error::Parse(format!("dangling operator in {s:?}")));
            }
            out.push((negate, std::mem::take(&mut cur)));
            negate = c == '-';
        } else if is_sep && is_sign && last_sig.is_none() {
            // leading sign of the first term
            negate ^= c == '-';
        } else {
            cur.push(c);
        }
        if !c.is_whitespace() {
            last_sig = Some(c);
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse(format!("empty expression {s:?}")));
    }
    out.push((negate, cur));
    Ok(out)
}
