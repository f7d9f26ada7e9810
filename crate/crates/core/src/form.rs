//! Binary forms, 2x2 matrices and points of the projective line.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;

/// `a0 X^d + a1 X^(d-1) Y + ... + ad Y^d` over `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> BinaryForm<F> {
    /// Coefficients `a0..ad`; at least two are required (degree >= 1).
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::WrongDegree {
                expected: 1,
                found: coeffs.len().saturating_sub(1),
            });
        }
        Ok(BinaryForm { field, coeffs })
    }

    pub fn from_i64(field: F, coeffs: &[i64]) -> Result<Self> {
        let c = coeffs.iter().map(|&n| field.from_i64(n)).collect();
        Self::new(field, c)
    }

    pub fn zero(field: F, degree: usize) -> Self {
        let coeffs = vec![field.zero(); degree + 1];
        BinaryForm { field, coeffs }
    }

    /// The monomial `c X^(d-j) Y^j`.
    pub fn monomial(field: F, degree: usize, j: usize, c: F::Elem) -> Self {
        let mut f = Self::zero(field, degree);
        f.coeffs[j] = c;
        f
    }

    pub fn random<R: Rng + ?Sized>(field: F, degree: usize, rng: &mut R) -> Self {
        let coeffs = (0..=degree).map(|_| field.random(rng)).collect();
        BinaryForm { field, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &F::Elem {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn require_degree(&self, d: usize) -> Result<()> {
        if self.degree() != d {
            return Err(Error::WrongDegree {
                expected: d,
                found: self.degree(),
            });
        }
        Ok(())
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of the root (1, 0).
    pub fn infinity_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .take_while(|c| self.field.is_zero(c))
            .count()
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        BinaryForm {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::WrongDegree {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f.add(a, b))
            .collect();
        Ok(BinaryForm {
            field: f.clone(),
            coeffs,
        })
    }

    /// Product of forms; degrees add.
    pub fn product(&self, other: &Self) -> Self {
        BinaryForm {
            field: self.field.clone(),
            coeffs: poly_mul(&self.field, &self.coeffs, &other.coeffs),
        }
    }

    pub fn eval(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let f = &self.field;
        let d = self.degree();
        let xp = powers(f, x, d);
        let yp = powers(f, y, d);
        self.coeffs.iter().enumerate().fold(f.zero(), |acc, (j, a)| {
            let t = f.mul(a, &f.mul(&xp[d - j], &yp[j]));
            f.add(&acc, &t)
        })
    }

    /// `f(aX + bY, cX + dY)`. Composition law: `(f∘M)∘N = f∘(MN)`.
    pub fn act(&self, m: &Matrix2<F::Elem>) -> Result<Self> {
        let f = &self.field;
        if f.is_zero(&m.det(f)) {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute(m))
    }

    /// Substitution without the determinant check.
    pub(crate) fn substitute(&self, m: &Matrix2<F::Elem>) -> Self {
        let f = &self.field;
        let d = self.degree();
        // coefficient vectors indexed by the power of Y
        let lx = vec![m.a.clone(), m.b.clone()];
        let ly = vec![m.c.clone(), m.d.clone()];
        let px = poly_powers(f, &lx, d);
        let py = poly_powers(f, &ly, d);
        let mut out = vec![f.zero(); d + 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            let term = poly_mul(f, &px[d - j], &py[j]);
            for (k, t) in term.iter().enumerate() {
                out[k] = f.add(&out[k], &f.mul(a, t));
            }
        }
        BinaryForm {
            field: f.clone(),
            coeffs: out,
        }
    }

    /// `∏ (y_i X - x_i Y)`.
    pub fn from_roots(field: F, roots: &[ProjPoint<F::Elem>]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::WrongRootCount {
                expected: 1,
                found: 0,
            });
        }
        let mut acc = vec![field.one()];
        for r in roots {
            acc = poly_mul(&field, &acc, &[r.y.clone(), field.neg(&r.x)]);
        }
        Ok(BinaryForm { field, coeffs: acc })
    }

    /// Whether `other = u * self` for some nonzero `u`; returns `u`.
    pub fn proportional(&self, other: &Self) -> Option<F::Elem> {
        if self.degree() != other.degree() {
            return None;
        }
        let f = &self.field;
        let pivot = self.coeffs.iter().position(|c| !f.is_zero(c))?;
        let u = f.div(&other.coeffs[pivot], &self.coeffs[pivot])?;
        if f.is_zero(&u) {
            return None;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| f.mul(a, &u) == *b)
            .then_some(u)
    }

    /// Convert coefficients into another field.
    pub fn map_field<G: Field>(&self, target: G, conv: impl Fn(&F::Elem) -> G::Elem) -> BinaryForm<G> {
        BinaryForm {
            field: target,
            coeffs: self.coeffs.iter().map(conv).collect(),
        }
    }
}

impl<F: Field> fmt::Display for BinaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_form(self))
    }
}

fn powers<F: Field>(f: &F, x: &F::Elem, n: usize) -> Vec<F::Elem> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(f.one());
    for i in 0..n {
        out.push(f.mul(&out[i], x));
    }
    out
}

fn poly_powers<F: Field>(f: &F, p: &[F::Elem], n: usize) -> Vec<Vec<F::Elem>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(vec![f.one()]);
    for i in 0..n {
        let next = poly_mul(f, &out[i], p);
        out.push(next);
    }
    out
}

pub(crate) fn poly_mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

/// `[[a, b], [c, d]]`, acting on forms by `X -> aX + bY, Y -> cX + dY`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E: Clone> Matrix2<E> {
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Matrix2 { a, b, c, d }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F) -> Self {
        Matrix2::new(f.one(), f.zero(), f.zero(), f.one())
    }

    pub fn from_i64<F: Field<Elem = E>>(f: &F, e: [i64; 4]) -> Self {
        Matrix2::new(f.from_i64(e[0]), f.from_i64(e[1]), f.from_i64(e[2]), f.from_i64(e[3]))
    }

    pub fn det<F: Field<Elem = E>>(&self, f: &F) -> E {
        f.sub(&f.mul(&self.a, &self.d), &f.mul(&self.b, &self.c))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let dot = |p: &E, q: &E, r: &E, s: &E| f.add(&f.mul(p, q), &f.mul(r, s));
        Matrix2::new(
            dot(&self.a, &o.a, &self.b, &o.c),
            dot(&self.a, &o.b, &self.b, &o.d),
            dot(&self.c, &o.a, &self.d, &o.c),
            dot(&self.c, &o.b, &self.d, &o.d),
        )
    }

    pub fn inverse<F: Field<Elem = E>>(&self, f: &F) -> Result<Self> {
        let idet = f.inv(&self.det(f)).ok_or(Error::SingularMatrix)?;
        Ok(Matrix2::new(
            f.mul(&self.d, &idet),
            f.neg(&f.mul(&self.b, &idet)),
            f.neg(&f.mul(&self.c, &idet)),
            f.mul(&self.a, &idet),
        ))
    }

    /// Random invertible matrix.
    pub fn random_gl2<F: Field<Elem = E>, R: Rng + ?Sized>(f: &F, rng: &mut R) -> Self {
        loop {
            let m = Matrix2::new(f.random(rng), f.random(rng), f.random(rng), f.random(rng));
            if !f.is_zero(&m.det(f)) {
                return m;
            }
        }
    }

    /// Random matrix of determinant one.
    pub fn random_sl2<F: Field<Elem = E>, R: Rng + ?Sized>(f: &F, rng: &mut R) -> Self {
        let m = Self::random_gl2(f, rng);
        let idet = f.inv(&m.det(f)).expect("invertible");
        Matrix2::new(f.mul(&m.a, &idet), f.mul(&m.b, &idet), m.c, m.d)
    }
}

/// A point `(x : y)` of the projective line.
#[derive(Clone, Debug)]
pub struct ProjPoint<E> {
    pub x: E,
    pub y: E,
}

impl<E: Clone + PartialEq> ProjPoint<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, x: E, y: E) -> Result<Self> {
        if f.is_zero(&x) && f.is_zero(&y) {
            return Err(Error::ZeroPoint);
        }
        Ok(ProjPoint { x, y })
    }

    /// `(t : 1)`.
    pub fn finite<F: Field<Elem = E>>(f: &F, t: E) -> Self {
        ProjPoint { x: t, y: f.one() }
    }

    /// `(1 : 0)`.
    pub fn infinity<F: Field<Elem = E>>(f: &F) -> Self {
        ProjPoint {
            x: f.one(),
            y: f.zero(),
        }
    }

    pub fn is_infinity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        f.is_zero(&self.y)
    }

    /// `Some(x / y)`, or `None` at infinity.
    pub fn affine<F: Field<Elem = E>>(&self, f: &F) -> Option<E> {
        f.div(&self.x, &self.y)
    }

    /// Canonical representative: `(t : 1)` or `(1 : 0)`.
    pub fn normalized<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.affine(f) {
            Some(t) => ProjPoint::finite(f, t),
            None => ProjPoint::infinity(f),
        }
    }

    pub fn same_point<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> bool {
        f.mul(&self.x, &o.y) == f.mul(&o.x, &self.y)
    }

    pub fn random<F: Field<Elem = E>, R: Rng + ?Sized>(f: &F, rng: &mut R) -> Self {
        loop {
            let (x, y) = (f.random(rng), f.random(rng));
            if !(f.is_zero(&x) && f.is_zero(&y)) {
                return ProjPoint { x, y };
            }
        }
    }

    pub fn format<F: Field<Elem = E>>(&self, f: &F) -> String {
        match self.affine(f) {
            Some(t) => f.format(&t),
            None => "inf".to_string(),
        }
    }
}

/// `D(p, q) = x_p y_q - x_q y_p`.
pub fn bracket<F: Field>(f: &F, p: &ProjPoint<F::Elem>, q: &ProjPoint<F::Elem>) -> F::Elem {
    f.sub(&f.mul(&p.x, &q.y), &f.mul(&q.x, &p.y))
}
