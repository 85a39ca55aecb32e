//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expression := ('+'|'-')? term (('+'|'-') term)*
//! term       := coeff ('*' factor)* | factor ('*' factor)*
//! factor     := var ('^' uint)?
//! var        := 'x' uint
//! coeff      := uint ('/' uint)?        (the '/' form only over the rationals)
//! ```
//!
//! Whitespace between tokens is insignificant. A `/` is consumed as part of
//! a coefficient only when it immediately follows the integer digits and is
//! immediately followed by a digit; any other `/` terminates the expression,
//! which is how `num/den` affine components are split.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldScalar, FieldSpec};
use crate::poly::{Monomial, Polynomial};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.bytes.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn uint(&mut self) -> Result<usize> {
        let start = self.pos;
        let text = self.digits()?;
        text.parse()
            .map_err(|_| Error::parse(start, format!("integer '{text}' out of range")))
    }
}

fn parse_factor(cur: &mut Cursor, nvars: usize, exps: &mut [u32]) -> Result<()> {
    let start = cur.pos;
    match cur.bump() {
        Some(b'x') => {}
        _ => return Err(Error::parse(start, "expected a variable 'x<i>'")),
    }
    let index = cur.uint()?;
    if index >= nvars {
        return Err(Error::parse(
            start,
            format!("variable x{index} out of range (nvars = {nvars})"),
        ));
    }
    let mut exp = 1usize;
    if cur.peek() == Some(b'^') {
        cur.bump();
        exp = cur.uint()?;
        if exp > u32::MAX as usize {
            return Err(Error::parse(cur.pos, "exponent out of range"));
        }
    }
    exps[index] = exps[index]
        .checked_add(exp as u32)
        .ok_or_else(|| Error::parse(start, "exponent overflow"))?;
    Ok(())
}

/// Unsigned coefficient. Over the rationals a `/` immediately followed by a
/// digit continues the token as `num/den`.
fn parse_coeff(cur: &mut Cursor, spec: FieldSpec) -> Result<FieldScalar> {
    let start = cur.pos;
    let num: BigInt = cur.digits()?.parse().expect("digits parse as BigInt");
    if spec.is_rationals()
        && cur.peek() == Some(b'/')
        && cur.peek_at(1).map(|b| b.is_ascii_digit()).unwrap_or(false)
    {
        cur.bump();
        let den: BigInt = cur.digits()?.parse().expect("digits parse as BigInt");
        return FieldScalar::from_big_ratio(spec, num, den)
            .map_err(|_| Error::parse(start, "zero denominator in coefficient"));
    }
    Ok(FieldScalar::from_bigint(spec, num))
}

fn parse_term(cur: &mut Cursor, spec: FieldSpec, nvars: usize, negate: bool) -> Result<(FieldScalar, Monomial)> {
    cur.skip_ws();
    let start = cur.pos;
    let mut exps = vec![0u32; nvars];
    let coeff = match cur.peek() {
        Some(b) if b.is_ascii_digit() => {
            let c = parse_coeff(cur, spec)?;
            loop {
                let mark = cur.pos;
                cur.skip_ws();
                if cur.peek() == Some(b'*') {
                    cur.bump();
                    cur.skip_ws();
                    parse_factor(cur, nvars, &mut exps)?;
                } else {
                    cur.pos = mark;
                    break;
                }
            }
            c
        }
        Some(b'x') => {
            parse_factor(cur, nvars, &mut exps)?;
            loop {
                let mark = cur.pos;
                cur.skip_ws();
                if cur.peek() == Some(b'*') {
                    cur.bump();
                    cur.skip_ws();
                    parse_factor(cur, nvars, &mut exps)?;
                } else {
                    cur.pos = mark;
                    break;
                }
            }
            spec.one()
        }
        _ => return Err(Error::parse(start, "expected a coefficient or variable")),
    };
    let coeff = if negate { coeff.neg() } else { coeff };
    Ok((coeff, Monomial::new(exps)))
}

/// Parses one polynomial expression, stopping at the first byte that cannot
/// continue it. Returns the polynomial and the stop position.
fn parse_expression(cur: &mut Cursor, spec: FieldSpec, nvars: usize) -> Result<Polynomial> {
    cur.skip_ws();
    let mut negate = false;
    match cur.peek() {
        Some(b'-') => {
            cur.bump();
            negate = true;
        }
        Some(b'+') => {
            cur.bump();
        }
        _ => {}
    }
    let mut poly = Polynomial::zero(spec, nvars);
    loop {
        let (coeff, mono) = parse_term(cur, spec, nvars, negate)?;
        poly = poly.add(&Polynomial::from_terms(
            spec,
            nvars,
            [(coeff, mono.exponents().to_vec())],
        )?)?;
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
                negate = false;
            }
            Some(b'-') => {
                cur.bump();
                negate = true;
            }
            _ => break,
        }
    }
    Ok(poly)
}

pub(crate) fn parse_polynomial(spec: FieldSpec, nvars: usize, text: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let poly = parse_expression(&mut cur, spec, nvars)?;
    cur.skip_ws();
    if let Some(b) = cur.peek() {
        return Err(Error::parse(
            cur.pos,
            format!("unexpected character '{}'", b as char),
        ));
    }
    Ok(poly)
}

/// Parses an affine component `num` or `num/den`, where the `/` separating
/// numerator from denominator is any slash that does not continue a
/// rational coefficient.
pub(crate) fn parse_affine_component(
    spec: FieldSpec,
    nvars: usize,
    text: &str,
) -> Result<(Polynomial, Polynomial)> {
    let mut cur = Cursor::new(text);
    let num = parse_expression(&mut cur, spec, nvars)?;
    cur.skip_ws();
    match cur.peek() {
        None => Ok((num, Polynomial::one(spec, nvars))),
        Some(b'/') => {
            cur.bump();
            let den = parse_expression(&mut cur, spec, nvars)?;
            cur.skip_ws();
            if let Some(b) = cur.peek() {
                return Err(Error::parse(
                    cur.pos,
                    format!("unexpected character '{}'", b as char),
                ));
            }
            Ok((num, den))
        }
        Some(b) => Err(Error::parse(
            cur.pos,
            format!("unexpected character '{}'", b as char),
        )),
    }
}
