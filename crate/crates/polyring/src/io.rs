//! Textual polynomial and ideal-file formats.
//!
//! Polynomials are written with the ring's variable names, `^` for powers,
//! `*` between factors and exact rational coefficients, e.g.
//! `t5*t7 - 2/3*t9 + 1`. Ideal files carry a header naming the arity and
//! the monomial order, then one generator per line:
//!
//! ```text
//! arity: 13
//! order: lex
//! t13
//! t8 - t12
//! ```

use crate::error::PolyError;
use crate::monomial::{Exponents, Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};
use num::{BigInt, BigRational, One};
use std::str::FromStr;

/// Parses a polynomial in the format produced by [`Ring::to_text`].
pub fn parse_polynomial(ring: &Ring, input: &str) -> Result<Polynomial, PolyError> {
    parse_polynomial_at_line(ring, input, 1)
}

fn err(line: usize, message: impl Into<String>) -> PolyError {
    PolyError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_polynomial_at_line(
    ring: &Ring,
    input: &str,
    line: usize,
) -> Result<Polynomial, PolyError> {
    let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
    let mut rest = input.trim();
    if rest.is_empty() {
        return Err(err(line, "empty polynomial"));
    }
    let mut sign = BigRational::one();
    let mut first = true;
    while !rest.is_empty() {
        // Optional leading sign / separator between terms.
        if let Some(r) = rest.strip_prefix('+') {
            sign = BigRational::one();
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -BigRational::one();
            rest = r.trim_start();
        } else if !first {
            return Err(err(line, format!("expected '+' or '-' before `{rest}`")));
        }
        first = false;
        let (term, r) = parse_term(ring, rest, line)?;
        let (m, c) = term;
        terms.push((m, c * &sign));
        sign = BigRational::one();
        rest = r.trim_start();
    }
    Ok(ring.polynomial(terms))
}

/// Parses one term: `coefficient`, `monomial` or `coefficient*monomial`.
fn parse_term<'a>(
    ring: &Ring,
    input: &'a str,
    line: usize,
) -> Result<((Monomial, BigRational), &'a str), PolyError> {
    let mut coeff = BigRational::one();
    let mut exps = Exponents::from_elem(0, ring.arity());
    let mut rest = input;
    loop {
        rest = rest.trim_start();
        if rest.starts_with(|c: char| c.is_ascii_digit()) {
            let end = rest
                .find(|c: char| !c.is_ascii_digit() && c != '/')
                .unwrap_or(rest.len());
            let lit = &rest[..end];
            let value = parse_rational(lit).ok_or_else(|| err(line, format!("bad number `{lit}`")))?;
            coeff *= value;
            rest = &rest[end..];
        } else if rest.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            let end = rest
                .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
                .unwrap_or(rest.len());
            let name = &rest[..end];
            let var = (0..ring.arity())
                .find(|&v| ring.variable_name(v) == name)
                .ok_or_else(|| err(line, format!("unknown variable `{name}`")))?;
            rest = &rest[end..];
            let mut power: u16 = 1;
            if let Some(r) = rest.trim_start().strip_prefix('^') {
                let r = r.trim_start();
                let end = r
                    .find(|c: char| !c.is_ascii_digit())
                    .unwrap_or(r.len());
                power = r[..end]
                    .parse()
                    .map_err(|_| err(line, "bad exponent"))?;
                rest = &r[end..];
            }
            exps[var] += power;
        } else {
            return Err(err(line, format!("unexpected input `{rest}`")));
        }
        let trimmed = rest.trim_start();
        if let Some(r) = trimmed.strip_prefix('*') {
            rest = r;
        } else {
            rest = trimmed;
            break;
        }
    }
    Ok(((Monomial::from_exponents(exps), coeff), rest))
}

fn parse_rational(lit: &str) -> Option<BigRational> {
    match lit.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).ok()?;
            let d = BigInt::from_str(d).ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(BigInt::from_str(lit).ok()?)),
    }
}

/// Renders an ideal file: header plus one generator per line.
pub fn ideal_to_text(ring: &Ring, generators: &[Polynomial]) -> String {
    let mut out = format!("arity: {}\norder: {}\n", ring.arity(), ring.order());
    for g in generators {
        out.push_str(&ring.to_text(g));
        out.push('\n');
    }
    out
}

/// Parses an ideal file produced by [`ideal_to_text`]. Returns the ring
/// described by the header and the generator list.
pub fn parse_ideal_text(input: &str) -> Result<(Ring, Vec<Polynomial>), PolyError> {
    let mut lines = input.lines().enumerate();
    let (mut arity, mut order) = (None, None);
    let mut gens = Vec::new();
    let mut ring: Option<Ring> = None;
    for (idx, raw) in &mut lines {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(v) = line.strip_prefix("arity:") {
            arity = Some(
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| err(line_no, "bad arity"))?,
            );
            continue;
        }
        if let Some(v) = line.strip_prefix("order:") {
            order = Some(
                MonomialOrder::parse(v.trim())
                    .ok_or_else(|| err(line_no, format!("unknown order `{}`", v.trim())))?,
            );
            continue;
        }
        let ring = match &ring {
            Some(r) => r,
            None => {
                let a = arity.ok_or_else(|| err(line_no, "missing `arity:` header"))?;
                let o = order.ok_or_else(|| err(line_no, "missing `order:` header"))?;
                ring = Some(Ring::new(a, o));
                ring.as_ref().unwrap()
            }
        };
        gens.push(parse_polynomial_at_line(ring, line, line_no)?);
    }
    let ring = match ring {
        Some(r) => r,
        None => Ring::new(
            arity.ok_or_else(|| err(1, "missing `arity:` header"))?,
            order.ok_or_else(|| err(1, "missing `order:` header"))?,
        ),
    };
    Ok((ring, gens))
}
