//! Text syntax for forms, vectors and structure equations.
//!
//! Forms are signed sums of terms `c*e^{i...}` where `c` is an optional rational such
//! as `3/2`; a bare rational is a 0-form. Inside braces a compact sum distributes the
//! term's coefficient, so `e^{14-25}` reads as `e^{14}-e^{25}`. Vectors use `E_i`
//! instead of `e^{...}`. Whitespace is ignored everywhere. Positions in errors are byte
//! offsets into the input.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exterior::{Form, Vector, MAX_DIM};
use crate::scalar::{parse_scalar, render, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Basis {
    Coform,
    Vector,
}

#[derive(Debug, Clone)]
struct RawTerm {
    coeff: Scalar,
    indices: Vec<u8>,
    position: usize,
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", byte as char)))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        let pos = {
            self.skip_ws();
            self.pos
        };
        match self.text.get(pos) {
            Some(&b) if b.is_ascii() => {
                ParseError::new(pos, format!("expected {wanted}, found '{}'", b as char))
            }
            Some(_) => ParseError::new(pos, format!("expected {wanted}, found non-ASCII input")),
            None => ParseError::new(pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn digits(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        let mut out = String::new();
        loop {
            self.skip_ws();
            match self.text.get(self.pos) {
                Some(b) if b.is_ascii_digit() => {
                    out.push(*b as char);
                    self.pos += 1;
                }
                _ => break,
            }
        }
        (!out.is_empty()).then_some((start, out))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn index_digits(start: usize, digits: &str) -> Result<Vec<u8>, ParseError> {
    digits
        .bytes()
        .enumerate()
        .map(|(i, b)| match b - b'0' {
            0 => Err(ParseError::new(start + i, "frame indices start at 1")),
            d => Ok(d),
        })
        .collect()
}

/// Parses `e^{...}` / `e^D...` (or `E_i`), returning one `(sign, indices)` per summand
/// of a compact brace sum.
fn parse_basis(cur: &mut Cursor, basis: Basis) -> Result<Vec<(bool, Vec<u8>)>, ParseError> {
    match basis {
        Basis::Coform => {
            cur.expect(b'e')?;
            cur.expect(b'^')?;
            if cur.eat(b'{') {
                let mut out = Vec::new();
                let mut negative = false;
                loop {
                    let (start, digits) =
                        cur.digits().ok_or_else(|| cur.unexpected("index digits"))?;
                    out.push((negative, index_digits(start, &digits)?));
                    if cur.eat(b'+') {
                        negative = false;
                    } else if cur.eat(b'-') {
                        negative = true;
                    } else {
                        break;
                    }
                }
                cur.expect(b'}')?;
                Ok(out)
            } else {
                let (start, digits) = cur
                    .digits()
                    .ok_or_else(|| cur.unexpected("'{' or index digits"))?;
                Ok(vec![(false, index_digits(start, &digits)?)])
            }
        }
        Basis::Vector => {
            cur.expect(b'E')?;
            cur.expect(b'_')?;
            let braced = cur.eat(b'{');
            let (start, digits) = cur.digits().ok_or_else(|| cur.unexpected("frame index"))?;
            if braced {
                cur.expect(b'}')?;
            }
            if digits.len() != 1 {
                return Err(ParseError::new(
                    start,
                    "a vector term names a single frame index",
                ));
            }
            Ok(vec![(false, index_digits(start, &digits)?)])
        }
    }
}

fn starts_basis(byte: Option<u8>, basis: Basis) -> bool {
    matches!(
        (byte, basis),
        (Some(b'e'), Basis::Coform) | (Some(b'E'), Basis::Vector)
    )
}

fn parse_term(cur: &mut Cursor, basis: Basis, negative: bool) -> Result<Vec<RawTerm>, ParseError> {
    cur.skip_ws();
    let position = cur.pos;
    let mut coeff = Scalar::one();
    let mut has_basis = true;
    if let Some((start, num)) = cur.digits() {
        let mut literal = num;
        if cur.eat(b'/') {
            let (_, den) = cur.digits().ok_or_else(|| cur.unexpected("denominator"))?;
            literal = format!("{literal}/{den}");
        }
        coeff = parse_scalar(&literal).ok_or_else(|| ParseError::new(start, "zero denominator"))?;
        if !cur.eat(b'*') {
            has_basis = false;
        }
    } else if !starts_basis(cur.peek(), basis) {
        return Err(cur.unexpected("a coefficient or basis element"));
    }
    if negative {
        coeff = -coeff;
    }
    if !has_basis {
        return Ok(vec![RawTerm {
            coeff,
            indices: Vec::new(),
            position,
        }]);
    }
    Ok(parse_basis(cur, basis)?
        .into_iter()
        .map(|(neg, indices)| RawTerm {
            coeff: if neg { -coeff.clone() } else { coeff.clone() },
            indices,
            position,
        })
        .collect())
}

/// Signed sum of terms, stopping before any byte in `stop` or at end of input.
fn parse_sum(cur: &mut Cursor, basis: Basis, stop: &[u8]) -> Result<Vec<RawTerm>, ParseError> {
    let mut terms = Vec::new();
    let mut negative = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        terms.extend(parse_term(cur, basis, negative)?);
        match cur.peek() {
            Some(b'+') => {
                cur.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                cur.pos += 1;
                negative = true;
            }
            Some(b) if stop.contains(&b) => break,
            None => break,
            Some(_) => return Err(cur.unexpected("'+', '-' or end of term list")),
        }
    }
    Ok(terms)
}

fn check_indices(terms: &[RawTerm], dim: usize) -> Result<(), ParseError> {
    for term in terms {
        if let Some(&index) = term.indices.iter().find(|&&i| i as usize > dim) {
            return Err(ParseError::new(
                term.position,
                format!("index {index} exceeds dimension {dim}"),
            ));
        }
    }
    Ok(())
}

fn assemble(terms: &[RawTerm], dim: usize, degree: usize) -> Result<Form, ParseError> {
    let mut form = Form::zero(dim, degree);
    for term in terms {
        if term.indices.is_empty() && term.coeff.is_zero() {
            continue;
        }
        if term.indices.len() != degree {
            return Err(ParseError::new(
                term.position,
                format!(
                    "term of degree {} in a form of degree {degree}",
                    term.indices.len()
                ),
            ));
        }
        let piece = Form::monomial(dim, &term.indices, term.coeff.clone())
            .map_err(|e| ParseError::new(term.position, e.to_string()))?;
        form = &form + &piece;
    }
    Ok(form)
}

/// Parses a form literal in dimension `dim`. The degree is inferred from the terms; a
/// literal with no basis terms (such as `0`) needs `degree` to be supplied.
pub fn parse_form(text: &str, dim: usize, degree: Option<usize>) -> Result<Form, ParseError> {
    if dim > MAX_DIM {
        return Err(ParseError::new(
            0,
            format!("dimension {dim} exceeds {MAX_DIM}"),
        ));
    }
    let mut cur = Cursor::new(text);
    let terms = parse_sum(&mut cur, Basis::Coform, &[])?;
    if !cur.at_end() {
        return Err(cur.unexpected("end of input"));
    }
    check_indices(&terms, dim)?;
    let inferred = terms
        .iter()
        .find(|t| !(t.indices.is_empty() && t.coeff.is_zero()))
        .map(|t| t.indices.len());
    let degree = match (degree, inferred) {
        (Some(d), _) => d,
        (None, Some(d)) => d,
        (None, None) => {
            return Err(ParseError::new(
                0,
                "cannot infer the degree of a zero literal",
            ))
        }
    };
    if degree > dim {
        return Err(ParseError::new(
            0,
            format!("degree {degree} exceeds dimension {dim}"),
        ));
    }
    assemble(&terms, dim, degree)
}

/// Parses a vector literal such as `2*E_1-E_{3}` in dimension `dim`.
pub fn parse_vector(text: &str, dim: usize) -> Result<Vector, ParseError> {
    let mut cur = Cursor::new(text);
    let terms = parse_sum(&mut cur, Basis::Vector, &[])?;
    if !cur.at_end() {
        return Err(cur.unexpected("end of input"));
    }
    check_indices(&terms, dim)?;
    let mut coords = vec![Scalar::zero(); dim];
    for term in terms {
        match term.indices.as_slice() {
            [i] => coords[*i as usize - 1] += term.coeff,
            [] if term.coeff.is_zero() => {}
            _ => return Err(ParseError::new(term.position, "expected a multiple of E_i")),
        }
    }
    Vector::new(coords).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses structure equations `(de^1, ..., de^n)`; `n` is the number of entries.
pub(crate) fn parse_structure_equations(text: &str) -> Result<Vec<Form>, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect(b'(')?;
    let mut entries = Vec::new();
    loop {
        entries.push(parse_sum(&mut cur, Basis::Coform, b",)")?);
        if cur.eat(b',') {
            continue;
        }
        cur.expect(b')')?;
        break;
    }
    if !cur.at_end() {
        return Err(cur.unexpected("end of input"));
    }
    let dim = entries.len();
    if dim > MAX_DIM {
        return Err(ParseError::new(
            0,
            format!("{dim} entries; at most {MAX_DIM} are supported"),
        ));
    }
    entries
        .iter()
        .map(|terms| {
            check_indices(terms, dim)?;
            assemble(terms, dim, 2)
        })
        .collect()
}

fn write_terms<'a, I>(out: &mut String, terms: I, mut basis: impl FnMut(&mut String, usize))
where
    I: Iterator<Item = (usize, &'a Scalar, bool)>,
{
    let mut first = true;
    for (key, coeff, has_basis) in terms {
        if coeff.is_negative() {
            out.push('-');
        } else if !first {
            out.push('+');
        }
        first = false;
        let magnitude = coeff.abs();
        if !has_basis {
            out.push_str(&render(&magnitude));
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&render(&magnitude));
            out.push('*');
        }
        basis(out, key);
    }
    if first {
        out.push('0');
    }
}

/// Canonical literal: lexicographic term order, unit coefficients omitted, no compact
/// brace sums. `parse_form(&format_form(f), f.dim(), Some(f.degree())) == f`.
pub fn format_form(form: &Form) -> String {
    let terms: Vec<_> = form.terms().collect();
    let mut out = String::new();
    write_terms(
        &mut out,
        terms
            .iter()
            .enumerate()
            .map(|(i, (t, c))| (i, *c, !t.is_empty())),
        |out, i| {
            out.push_str("e^{");
            out.push_str(&terms[i].0.digits());
            out.push('}');
        },
    );
    out
}

pub fn format_vector(vector: &Vector) -> String {
    let mut out = String::new();
    write_terms(
        &mut out,
        vector
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c, true)),
        |out, i| {
            out.push_str("E_");
            out.push_str(&(i + 1).to_string());
        },
    );
    out
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_form(self))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(self))
    }
}
