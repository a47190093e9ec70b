//! Octonion literal syntax: `c0+c1e1+...+c7e7`.
//!
//! A literal is a sequence of signed terms. Each term is a rational `p` or
//! `p/q`, optionally followed by a unit `e1`..`e7`; a bare unit means a
//! coefficient of one. The formatter emits the canonical whitespace-free
//! form, which the parser reads back exactly.

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::octonion::Octonion;

pub fn format_octonion(x: &Octonion) -> String {
    let mut out = String::new();
    for (i, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.signum() < 0;
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if i == 0 || mag != Rational::ONE {
            out.push_str(&mag.to_string());
        }
        if i > 0 {
            out.push('e');
            out.push(char::from(b'0' + i as u8));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn parse_octonion(literal: &str) -> Result<Octonion> {
    let bytes = literal.as_bytes();
    let fail = |position: usize, message: &str| Error::Parse { position, message: message.to_owned() };
    if bytes.is_empty() {
        return Err(fail(0, "empty literal"));
    }
    let mut coeffs = [Rational::ZERO; 8];
    let mut seen = [false; 8];
    let mut pos = 0;
    while pos < bytes.len() {
        let term_start = pos;
        let negative = match bytes[pos] {
            b'-' => {
                pos += 1;
                true
            }
            b'+' if pos > 0 => {
                pos += 1;
                false
            }
            _ if pos > 0 => return Err(fail(pos, "expected `+` or `-` between terms")),
            _ => false,
        };
        let num_start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let coefficient = if pos > num_start {
            literal[num_start..pos]
                .parse::<Rational>()
                .map_err(|_| fail(num_start, "malformed rational coefficient"))?
        } else {
            Rational::ONE
        };
        let index = if pos < bytes.len() && bytes[pos] == b'e' {
            pos += 1;
            let d = bytes.get(pos).copied();
            match d {
                Some(d @ b'1'..=b'7') => {
                    pos += 1;
                    if bytes.get(pos).is_some_and(u8::is_ascii_digit) {
                        return Err(fail(pos - 2, "unit index must be e1..e7"));
                    }
                    usize::from(d - b'0')
                }
                _ => return Err(fail(pos - 1, "unit index must be e1..e7")),
            }
        } else if pos == num_start {
            return Err(fail(pos, "expected a rational or a unit e1..e7"));
        } else {
            0
        };
        if seen[index] {
            return Err(fail(term_start, "repeated basis component"));
        }
        seen[index] = true;
        coeffs[index] = if negative { -coefficient } else { coefficient };
    }
    Ok(Octonion::new(coeffs))
}
