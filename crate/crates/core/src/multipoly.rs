//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<F: Field> {
    field: F,
    vars: Vec<String>,
    terms: BTreeMap<Exponents, F::Elem>,
}

/// Outcome of comparing two polynomials monomial by monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatioCheck<E> {
    /// `self = lambda * other` with identical support.
    Constant(E),
    SupportMismatch,
    NonConstant,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: F, vars: &[&str]) -> Self {
        MultiPoly {
            field,
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    fn like(&self) -> Self {
        MultiPoly {
            field: self.field.clone(),
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: F, vars: &[&str], c: F::Elem) -> Self {
        let mut p = Self::zero(field, vars);
        let n = p.vars.len();
        p.add_term(vec![0; n], c);
        p
    }

    pub fn var(field: F, vars: &[&str], i: usize) -> Self {
        let one = field.one();
        let mut p = Self::zero(field, vars);
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.add_term(e, one);
        p
    }

    pub fn from_terms(
        field: F,
        vars: &[&str],
        terms: impl IntoIterator<Item = (Exponents, F::Elem)>,
    ) -> Self {
        let mut p = Self::zero(field, vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, F::Elem> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> F::Elem {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Adds `c * x^e`, dropping the entry if it cancels.
    pub fn add_term(&mut self, e: Exponents, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = self.field.add(old, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut r = self.like();
        for (e, a) in &self.terms {
            r.add_term(e.clone(), self.field.mul(a, c));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = self.like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, self.field.mul(c1, c2));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant_like(self, self.field.one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let f = &self.field;
        self.terms.iter().fold(f.zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = f.mul(&t, &f.pow(x, k as u64));
                }
            }
            f.add(&acc, &t)
        })
    }

    /// Replace variable `i` by `images[i]`; all images share one variable list.
    pub fn substitute(&self, images: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target = &images[0];
        let mut out = target.like();
        let mut cache: Vec<Vec<MultiPoly<F>>> = images
            .iter()
            .map(|p| vec![MultiPoly::constant_like(p, self.field.one())])
            .collect();
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant_like(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().expect("nonempty").mul(&images[i]);
                    cache[i].push(next);
                }
                if k > 0 {
                    t = t.mul(&cache[i][k as usize]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    fn constant_like(p: &MultiPoly<F>, c: F::Elem) -> MultiPoly<F> {
        let mut r = p.like();
        r.add_term(vec![0; p.vars.len()], c);
        r
    }

    pub fn total_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|e| e.iter().sum())
    }

    /// Whether every monomial has total degree `deg` and weight `Σ w_i e_i = weight`.
    pub fn is_isobaric(&self, weights: &[u32], deg: u32, weight: u32) -> bool {
        self.terms.keys().all(|e| {
            e.iter().sum::<u32>() == deg
                && e.iter().zip(weights).map(|(a, w)| a * w).sum::<u32>() == weight
        })
    }

    /// Compare with `other`: a single constant `λ` with `self = λ · other`?
    pub fn ratio_to(&self, other: &Self) -> RatioCheck<F::Elem> {
        if self.terms.len() != other.terms.len()
            || self.terms.keys().zip(other.terms.keys()).any(|(a, b)| a != b)
        {
            return RatioCheck::SupportMismatch;
        }
        let f = &self.field;
        let mut lambda = None;
        for (e, c) in &self.terms {
            let r = f.div(c, &other.terms[e]).expect("stored coefficients are nonzero");
            match &lambda {
                None => lambda = Some(r),
                Some(l) if *l == r => {}
                Some(_) => return RatioCheck::NonConstant,
            }
        }
        match lambda {
            Some(l) => RatioCheck::Constant(l),
            None => RatioCheck::SupportMismatch,
        }
    }

    pub fn map_field<G: Field>(&self, target: G, conv: impl Fn(&F::Elem) -> G::Elem) -> MultiPoly<G> {
        let mut r = MultiPoly {
            field: target,
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            r.add_term(e.clone(), conv(c));
        }
        r
    }

    pub fn compile(&self) -> CompiledPoly<F> {
        let n = self.vars.len();
        let mut max_exp = vec![0u32; n];
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let factors: Vec<(usize, usize)> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        max_exp[i] = max_exp[i].max(k);
                        (i, k as usize)
                    })
                    .collect();
                (c.clone(), factors)
            })
            .collect();
        CompiledPoly {
            field: self.field.clone(),
            max_exp,
            terms,
        }
    }
}

impl MultiPoly<Rationals> {
    /// Embed an integer or rational polynomial into `target`.
    pub fn to_field<G: Field>(&self, target: G) -> Result<MultiPoly<G>> {
        for c in self.terms.values() {
            target
                .from_rational(c)
                .ok_or_else(|| Error::NotRepresentable(Rationals.format(c)))?;
        }
        let t = target.clone();
        Ok(self.map_field(target, move |c| t.from_rational(c).expect("checked")))
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn integer_terms(&self) -> Vec<(Exponents, BigInt)> {
        self.terms
            .iter()
            .map(|(e, c)| (e.clone(), c.to_integer()))
            .collect()
    }

    /// Parse the compact notation `-20 a1 a5 + 8 a2 a4 - 3 a3^2`; variables are
    /// resolved against `vars` and integer coefficients precede them.
    pub fn parse_compact(text: &str, vars: &[&str]) -> Result<Self> {
        let syntax = |msg: String| Error::Syntax { pos: 0, msg };
        let mut p = Self::zero(Rationals, vars);
        let mut sign = 1i64;
        let mut coef: Option<BigInt> = None;
        let mut exps = vec![0u32; vars.len()];
        let mut started = false;
        let flush = |p: &mut Self, sign: i64, coef: &mut Option<BigInt>, exps: &mut Vec<u32>| {
            let c = coef.take().unwrap_or_else(|| BigInt::from(1)) * sign;
            p.add_term(std::mem::replace(exps, vec![0; vars.len()]), Rationals.from_bigint(&c));
        };
        for tok in text.split_whitespace() {
            match tok {
                "+" | "-" => {
                    if started {
                        flush(&mut p, sign, &mut coef, &mut exps);
                    }
                    sign = if tok == "-" { -1 } else { 1 };
                    started = false;
                }
                _ => {
                    let mut t = tok;
                    if !started {
                        if let Some(rest) = t.strip_prefix('-') {
                            sign = -sign;
                            t = rest;
                        }
                    }
                    if t.is_empty() {
                        continue;
                    }
                    started = true;
                    if t.bytes().all(|b| b.is_ascii_digit()) {
                        coef = Some(t.parse().expect("digits"));
                        continue;
                    }
                    let (name, e) = match t.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| syntax(format!("bad exponent in `{t}`")))?),
                        None => (t, 1),
                    };
                    let i = vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| syntax(format!("unknown variable `{name}`")))?;
                    exps[i] += e;
                }
            }
        }
        if started {
            flush(&mut p, sign, &mut coef, &mut exps);
        }
        Ok(p)
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut s = self.field.format(c);
            let neg = s.starts_with('-');
            if neg {
                s.remove(0);
            }
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mons: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if mons.is_empty() {
                write!(f, "{s}")?;
            } else if s == "1" {
                write!(f, "{}", mons.join(" "))?;
            } else {
                write!(f, "{s} {}", mons.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Flattened polynomial for repeated evaluation.
#[derive(Clone, Debug)]
pub struct CompiledPoly<F: Field> {
    field: F,
    max_exp: Vec<u32>,
    terms: Vec<(F::Elem, Vec<(usize, usize)>)>,
}

impl<F: Field> CompiledPoly<F> {
    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        let pows: Vec<Vec<F::Elem>> = point
            .iter()
            .zip(&self.max_exp)
            .map(|(x, &m)| {
                let mut v = Vec::with_capacity(m as usize + 1);
                v.push(f.one());
                for i in 0..m as usize {
                    v.push(f.mul(&v[i], x));
                }
                v
            })
            .collect();
        let mut acc = f.zero();
        for (c, factors) in &self.terms {
            let mut t = c.clone();
            for &(i, k) in factors {
                t = f.mul(&t, &pows[i][k]);
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    pub fn num_vars(&self) -> usize {
        self.max_exp.len()
    }
}
