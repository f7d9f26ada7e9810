//! Dense univariate polynomials, lowest degree first, always trimmed.

use crate::field::Field;

pub(crate) type UPoly<E> = Vec<E>;

pub(crate) fn trim<F: Field>(f: &F, mut p: UPoly<F::Elem>) -> UPoly<F::Elem> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

pub(crate) fn degree<E>(p: &UPoly<E>) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn derivative<F: Field>(f: &F, p: &UPoly<F::Elem>) -> UPoly<F::Elem> {
    let d: Vec<_> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
        .collect();
    trim(f, d)
}

pub(crate) fn monic<F: Field>(f: &F, p: UPoly<F::Elem>) -> UPoly<F::Elem> {
    match p.last() {
        None => p,
        Some(lc) => {
            let inv = f.inv(lc).expect("nonzero leading coefficient");
            p.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

/// Quotient and remainder.
pub(crate) fn divrem<F: Field>(
    f: &F,
    a: &UPoly<F::Elem>,
    b: &UPoly<F::Elem>,
) -> (UPoly<F::Elem>, UPoly<F::Elem>) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let inv_lc = f.inv(&b[db]).expect("nonzero leading coefficient");
    let mut q = vec![f.zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = f.mul(&r[k + db], &inv_lc);
        if f.is_zero(&c) {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            r[k + i] = f.sub(&r[k + i], &f.mul(&c, bi));
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(f, q), trim(f, r))
}

pub(crate) fn div_exact<F: Field>(f: &F, a: &UPoly<F::Elem>, b: &UPoly<F::Elem>) -> UPoly<F::Elem> {
    let (q, r) = divrem(f, a, b);
    debug_assert!(r.is_empty());
    q
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub(crate) fn gcd<F: Field>(f: &F, a: &UPoly<F::Elem>, b: &UPoly<F::Elem>) -> UPoly<F::Elem> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = divrem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

fn is_one<F: Field>(f: &F, p: &UPoly<F::Elem>) -> bool {
    p.len() == 1 && f.is_one(&p[0])
}

/// Squarefree decomposition `p = lc * ∏ g_i^i` as pairs `(g_i, i)`,
/// valid in every characteristic (p-th roots are taken when `p' = 0`).
pub(crate) fn squarefree_factors<F: Field>(f: &F, p: &UPoly<F::Elem>) -> Vec<(UPoly<F::Elem>, usize)> {
    let p = monic(f, trim(f, p.clone()));
    let mut out = Vec::new();
    if degree(&p).unwrap_or(0) == 0 {
        return out;
    }
    let dp = derivative(f, &p);
    let mut c = gcd(f, &p, &dp);
    let mut w = div_exact(f, &p, &c);
    let mut i = 1;
    while !is_one(f, &w) {
        let y = gcd(f, &w, &c);
        let fac = div_exact(f, &w, &y);
        if degree(&fac).unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = div_exact(f, &c, &w);
        i += 1;
    }
    if !is_one(f, &c) {
        let ch = f.characteristic() as usize;
        assert!(ch > 0, "zero derivative in characteristic 0");
        // c is a polynomial in x^p; in F_p every coefficient is its own p-th root
        let root: Vec<_> = c.iter().step_by(ch).cloned().collect();
        for (g, m) in squarefree_factors(f, &root) {
            out.push((g, m * ch));
        }
    }
    out
}
