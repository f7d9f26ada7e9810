//! Text input and output for forms, coefficient lists and points.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! form   := term (('+' | '-') term)*
//! term   := [coef '*'] factor ('*' factor)*
//! factor := ('x' | 'y') ['^' uint]
//! coef   := ['-'] uint ['/' uint]
//! ```
//!
//! A leading sign before the first term is also accepted, so `-x^6` parses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{parse_rational, rational_into, Field};
use crate::form::{BinaryForm, ProjPoint};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an unsigned integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.uint()?;
        usize::try_from(n).map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })
    }

    /// `factor ('*' factor)*` after an optional coefficient; returns (coef, x-exp, y-exp).
    fn term(&mut self, negate: bool) -> Result<(BigRational, usize, usize)> {
        let mut coef = BigRational::one();
        let mut ex = 0usize;
        let mut ey = 0usize;
        let mut need_factor = true;
        match self.peek() {
            Some(b'-') | Some(b'0'..=b'9') => {
                let neg = self.eat(b'-');
                let num = self.uint()?;
                let den = if self.eat(b'/') { self.uint()? } else { BigInt::one() };
                if den.is_zero() {
                    return self.err("zero denominator");
                }
                coef = BigRational::new(if neg { -num } else { num }, den);
                if !self.eat(b'*') {
                    return self.err("expected '*' after coefficient");
                }
            }
            _ => {}
        }
        while need_factor {
            match self.peek() {
                Some(c @ (b'x' | b'X' | b'y' | b'Y')) => {
                    self.pos += 1;
                    let e = if self.eat(b'^') { self.small_uint()? } else { 1 };
                    if c.eq_ignore_ascii_case(&b'x') {
                        ex += e;
                    } else {
                        ey += e;
                    }
                }
                _ => return self.err("expected 'x' or 'y'"),
            }
            need_factor = self.eat(b'*');
        }
        if negate {
            coef = -coef;
        }
        Ok((coef, ex, ey))
    }
}

/// Parse `text` as a form of the given degree over `field`.
pub fn parse_form<F: Field>(text: &str, degree: usize, field: F) -> Result<BinaryForm<F>> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut acc = vec![BigRational::zero(); degree + 1];
    let mut negate = false;
    if lx.peek() == Some(b'-') {
        let save = lx.pos;
        lx.pos += 1;
        // a digit after '-' belongs to the coefficient
        if matches!(lx.peek(), Some(b'0'..=b'9')) {
            lx.pos = save;
        } else {
            negate = true;
        }
    } else if lx.eat(b'+') {
        // tolerated
    }
    loop {
        let (c, ex, ey) = lx.term(negate)?;
        if ex + ey != degree {
            return Err(Error::NonHomogeneous {
                expected: degree,
                found: ex + ey,
            });
        }
        acc[ey] += c;
        match lx.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(_) => return lx.err("expected '+' or '-'"),
        }
        lx.pos += 1;
    }
    let coeffs = acc
        .iter()
        .map(|q| rational_into(&field, q))
        .collect::<Result<Vec<_>>>()?;
    BinaryForm::new(field, coeffs)
}

/// Parse `a0, a1, ..., ad`; the degree is the list length minus one.
pub fn parse_coeff_list<F: Field>(text: &str, field: F) -> Result<BinaryForm<F>> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let q = parse_rational(piece).ok_or_else(|| Error::Syntax {
            pos: offset,
            msg: format!("`{}` is not a rational number", piece.trim()),
        })?;
        coeffs.push(rational_into(&field, &q)?);
        offset += piece.len() + 1;
    }
    BinaryForm::new(field, coeffs)
}

/// Parse `inf`, `∞`, a rational `t` (meaning `(t : 1)`), or `x:y`.
pub fn parse_point<F: Field>(text: &str, field: &F) -> Result<ProjPoint<F::Elem>> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("inf") || t == "∞" {
        return Ok(ProjPoint::infinity(field));
    }
    let conv = |s: &str| -> Result<F::Elem> {
        let q = parse_rational(s).ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: format!("`{}` is not a point", t),
        })?;
        rational_into(field, &q)
    };
    match t.split_once(':') {
        Some((x, y)) => ProjPoint::new(field, conv(x)?, conv(y)?),
        None => Ok(ProjPoint::finite(field, conv(t)?)),
    }
}

/// Comma-separated list of points.
pub fn parse_points<F: Field>(text: &str, field: &F) -> Result<Vec<ProjPoint<F::Elem>>> {
    text.split(',').map(|p| parse_point(p, field)).collect()
}

/// Comma-separated list of scalars.
pub fn parse_scalars<F: Field>(text: &str, field: &F) -> Result<Vec<F::Elem>> {
    text.split(',')
        .map(|s| {
            let q = parse_rational(s).ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: format!("`{}` is not a rational number", s.trim()),
            })?;
            rational_into(field, &q)
        })
        .collect()
}

/// Render a form in the input grammar; round-trips through [`parse_form`]
/// for rational coefficients and residues alike.
pub fn format_form<F: Field>(form: &BinaryForm<F>) -> String {
    let field = form.field();
    let d = form.degree();
    let mut out = String::new();
    for (j, c) in form.coeffs().iter().enumerate() {
        if field.is_zero(c) {
            continue;
        }
        let mut text = field.format(c);
        let neg = text.starts_with('-');
        if neg {
            text.remove(0);
        }
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        for (v, e) in [("x", d - j), ("y", j)] {
            match e {
                0 => {}
                1 => factors.push(v.to_string()),
                _ => factors.push(format!("{v}^{e}")),
            }
        }
        if text != "1" {
            out.push_str(&text);
            out.push('*');
        }
        out.push_str(&factors.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Comma-separated coefficient list, the alternative input format.
pub fn format_coeff_list<F: Field>(form: &BinaryForm<F>) -> String {
    let field = form.field();
    form.coeffs()
        .iter()
        .map(|c| field.format(c))
        .collect::<Vec<_>>()
        .join(",")
}
