//! Resultants, discriminants and root-multiplicity profiles of binary forms.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::form::{BinaryForm, Matrix2};
use crate::upoly;

/// Determinant by Gaussian elimination.
pub fn determinant<F: Field>(f: &F, mut m: Vec<Vec<F::Elem>>) -> F::Elem {
    let n = m.len();
    let mut det = f.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !f.is_zero(&m[r][col])) else {
            return f.zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = f.neg(&det);
        }
        let p = m[col][col].clone();
        det = f.mul(&det, &p);
        let ip = f.inv(&p).expect("nonzero pivot");
        for r in col + 1..n {
            if f.is_zero(&m[r][col]) {
                continue;
            }
            let factor = f.mul(&m[r][col], &ip);
            for c in col..n {
                let t = f.mul(&factor, &m[col][c]);
                m[r][c] = f.sub(&m[r][c], &t);
            }
        }
    }
    det
}

/// Sylvester matrix of coefficient lists (highest power first), `a`-block on top.
pub fn sylvester_matrix<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![f.zero(); size];
        row[shift..shift + m + 1].clone_from_slice(a);
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![f.zero(); size];
        row[shift..shift + n + 1].clone_from_slice(b);
        rows.push(row);
    }
    rows
}

/// Sylvester resultant with `f`-rows first, `a0` first in each row.
pub fn resultant<F: Field>(f: &BinaryForm<F>, g: &BinaryForm<F>) -> F::Elem {
    let field = f.field();
    determinant(field, sylvester_matrix(field, f.coeffs(), g.coeffs()))
}

/// `(-1)^(n(n-1)/2) Res(f, ∂f/∂X) / a0`, made shape-independent by an
/// SL2 shear when `a0 = 0`. For cubics this is
/// `a1²a2² - 4a0a2³ - 4a1³a3 - 27a0²a3² + 18a0a1a2a3`.
pub fn discriminant<F: Field>(form: &BinaryForm<F>) -> Result<F::Elem> {
    let field = form.field();
    let n = form.degree();
    if n < 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            found: n,
        });
    }
    if form.is_zero() {
        return Ok(field.zero());
    }
    let shifted;
    let g = if field.is_zero(form.coeff(0)) {
        // X -> X, Y -> tX + Y moves a nonzero value f(1, t) into a0
        let t = (1..=n as i64)
            .map(|t| field.from_i64(t))
            .find(|t| !field.is_zero(&form.eval(&field.one(), t)))
            .ok_or(Error::InadmissibleCharacteristic {
                characteristic: field.characteristic(),
                context: "discriminant",
            })?;
        let shear = Matrix2::new(field.one(), field.zero(), t, field.one());
        shifted = form.act(&shear)?;
        &shifted
    } else {
        form
    };
    let c = g.coeffs();
    let deriv: Vec<_> = (0..n)
        .map(|j| field.mul(&field.from_i64((n - j) as i64), &c[j]))
        .collect();
    let res = determinant(field, sylvester_matrix(field, c, &deriv));
    let mut d = field.div(&res, &c[0]).expect("nonzero a0");
    if (n * (n - 1) / 2) % 2 == 1 {
        d = field.neg(&d);
    }
    Ok(d)
}

/// Root multiplicities over the algebraic closure, sorted descending.
pub fn squarefree_profile<F: Field>(form: &BinaryForm<F>) -> Result<Vec<usize>> {
    if form.is_zero() {
        return Err(Error::ZeroForm("root multiplicities"));
    }
    let field = form.field();
    let k = form.infinity_multiplicity();
    // f(x, 1) with ascending powers of x
    let affine: Vec<_> = form.coeffs().iter().rev().cloned().collect();
    let mut out: Vec<usize> = upoly::squarefree_factors(field, &affine)
        .into_iter()
        .flat_map(|(g, m)| std::iter::repeat_n(m, g.len() - 1))
        .collect();
    if k > 0 {
        out.push(k);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Largest root multiplicity, or `None` for the zero form.
pub fn max_multiplicity<F: Field>(form: &BinaryForm<F>) -> Option<usize> {
    squarefree_profile(form).ok().map(|p| p[0])
}
