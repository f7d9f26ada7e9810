//! Sextic invariants, the multiplicity classifier, absolute invariants and
//! the geometric conjugacy test.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::form::BinaryForm;
use crate::invgen::{standard_tables, TableName, TableSet};
use crate::multipoly::CompiledPoly;
use crate::reference;

/// Sextics need `char ∉ {2, 3, 5}`.
pub const EXCLUDED_CHARACTERISTICS: [u64; 3] = [2, 3, 5];

#[derive(Clone, Debug, PartialEq)]
pub struct SexticInvariants<F: Field> {
    pub field: F,
    pub i2: F::Elem,
    pub i4: F::Elem,
    pub i6: F::Elem,
    pub i10: F::Elem,
}

impl<F: Field> SexticInvariants<F> {
    pub fn new(field: F, v: [F::Elem; 4]) -> Self {
        let [i2, i4, i6, i10] = v;
        SexticInvariants { field, i2, i4, i6, i10 }
    }

    pub fn to_array(&self) -> [F::Elem; 4] {
        [self.i2.clone(), self.i4.clone(), self.i6.clone(), self.i10.clone()]
    }

    pub fn all_zero(&self) -> bool {
        self.to_array().iter().all(|x| self.field.is_zero(x))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SexticClass {
    /// Six distinct roots.
    Simple,
    /// Some double root, nothing worse.
    MaxMultTwo,
    /// A root of multiplicity exactly three.
    TripleRoot,
    MultiplicityAtLeastFour,
}

impl SexticClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SexticClass::Simple => "Simple",
            SexticClass::MaxMultTwo => "MaxMultTwo",
            SexticClass::TripleRoot => "TripleRoot",
            SexticClass::MultiplicityAtLeastFour => "MultiplicityAtLeastFour",
        }
    }

    /// The class a maximal root multiplicity belongs to.
    pub fn from_max_multiplicity(m: usize) -> Self {
        match m {
            0 | 1 => SexticClass::Simple,
            2 => SexticClass::MaxMultTwo,
            3 => SexticClass::TripleRoot,
            _ => SexticClass::MultiplicityAtLeastFour,
        }
    }
}

impl fmt::Display for SexticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tables compiled for one field, plus the triple-root constants.
#[derive(Clone, Debug)]
pub struct SexticEvaluator<F: Field> {
    field: F,
    polys: [CompiledPoly<F>; 4],
    kappa4: F::Elem,
    kappa6: F::Elem,
}

impl<F: Field> SexticEvaluator<F> {
    pub fn new(field: F, tables: &TableSet) -> Result<Self> {
        field.ensure_char_not_in(&EXCLUDED_CHARACTERISTICS, "sextic invariants")?;
        let compile = |name| {
            tables
                .poly(name)
                .to_field(field.clone())
                .map(|p| p.compile())
        };
        let polys = [
            compile(TableName::I2)?,
            compile(TableName::I4)?,
            compile(TableName::I6)?,
            compile(TableName::I10)?,
        ];
        let mut ev = SexticEvaluator {
            kappa4: field.zero(),
            kappa6: field.zero(),
            field,
            polys,
        };
        // X^3 Y^3 has a triple root at each of 0 and infinity
        let f = &ev.field;
        let probe = BinaryForm::monomial(f.clone(), 6, 3, f.one());
        let [i2, i4, i6, _] = ev.raw(probe.coeffs());
        let i2sq = f.mul(&i2, &i2);
        ev.kappa4 = f.div(&i4, &i2sq).ok_or_else(|| Error::Table("I2(X^3 Y^3) vanishes".into()))?;
        ev.kappa6 = f.div(&i6, &f.mul(&i2sq, &i2)).expect("I2 is nonzero");
        Ok(ev)
    }

    /// Evaluator over the process-wide generated tables.
    pub fn standard(field: F) -> Result<Self> {
        Self::new(field, standard_tables())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `(κ4, κ6)` with `I4 = κ4 I2²`, `I6 = κ6 I2³` on forms with a triple root.
    pub fn kappa(&self) -> (&F::Elem, &F::Elem) {
        (&self.kappa4, &self.kappa6)
    }

    fn raw(&self, a: &[F::Elem]) -> [F::Elem; 4] {
        [0, 1, 2, 3].map(|k| self.polys[k].eval(a))
    }

    pub fn invariants(&self, f: &BinaryForm<F>) -> Result<SexticInvariants<F>> {
        f.require_degree(6)?;
        if f.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(SexticInvariants::new(self.field.clone(), self.raw(f.coeffs())))
    }

    pub fn classify_invariants(&self, inv: &SexticInvariants<F>) -> SexticClass {
        let f = &self.field;
        if !f.is_zero(&inv.i10) {
            return SexticClass::Simple;
        }
        if inv.all_zero() {
            return SexticClass::MultiplicityAtLeastFour;
        }
        let i2sq = f.mul(&inv.i2, &inv.i2);
        let triple = !f.is_zero(&inv.i2)
            && inv.i4 == f.mul(&self.kappa4, &i2sq)
            && inv.i6 == f.mul(&self.kappa6, &f.mul(&i2sq, &inv.i2));
        if triple {
            SexticClass::TripleRoot
        } else {
            SexticClass::MaxMultTwo
        }
    }

    pub fn classify(&self, f: &BinaryForm<F>) -> Result<SexticClass> {
        if f.is_zero() {
            return Err(Error::ZeroForm("root multiplicity class"));
        }
        Ok(self.classify_invariants(&self.invariants(f)?))
    }

    /// All four basic invariants vanish.
    pub fn null_cone(&self, f: &BinaryForm<F>) -> Result<bool> {
        Ok(self.invariants(f)?.all_zero())
    }

    /// Equality of `U1..U8`: conjugacy over the algebraic closure.
    pub fn conjugate(&self, f: &BinaryForm<F>, g: &BinaryForm<F>) -> Result<bool> {
        let uf = u_invariants(&self.invariants(f)?)?;
        let ug = u_invariants(&self.invariants(g)?)?;
        Ok(uf == ug)
    }
}

pub fn sextic_invariants<F: Field>(f: &BinaryForm<F>) -> Result<SexticInvariants<F>> {
    SexticEvaluator::standard(f.field().clone())?.invariants(f)
}

pub fn classify_sextic<F: Field>(f: &BinaryForm<F>) -> Result<SexticClass> {
    SexticEvaluator::standard(f.field().clone())?.classify(f)
}

pub fn null_cone_member<F: Field>(f: &BinaryForm<F>) -> Result<bool> {
    SexticEvaluator::standard(f.field().clone())?.null_cone(f)
}

pub fn sextic_conjugate<F: Field>(f: &BinaryForm<F>, g: &BinaryForm<F>) -> Result<bool> {
    SexticEvaluator::standard(f.field().clone())?.conjugate(f, g)
}

/// Exponents `(a, b, c, d)` of `U_k = I2^a I4^b I6^c / I10^d`.
pub const U_EXPONENTS: [[u32; 4]; 8] = [
    [5, 0, 0, 1],
    [3, 1, 0, 1],
    [2, 0, 1, 1],
    [0, 5, 0, 2],
    [0, 1, 1, 1],
    [0, 0, 5, 3],
    [1, 2, 0, 1],
    [1, 0, 3, 2],
];

/// `T1 = I4/I2²`, `T2 = I6/I2³`, `T3 = I10/I2⁵`.
pub fn t_invariants<F: Field>(inv: &SexticInvariants<F>) -> Result<[F::Elem; 3]> {
    let f = &inv.field;
    let i2 = f.inv(&inv.i2).ok_or(Error::VanishingDenominator("I2"))?;
    let i2_2 = f.mul(&i2, &i2);
    let i2_3 = f.mul(&i2_2, &i2);
    let i2_5 = f.mul(&i2_3, &i2_2);
    Ok([
        f.mul(&inv.i4, &i2_2),
        f.mul(&inv.i6, &i2_3),
        f.mul(&inv.i10, &i2_5),
    ])
}

/// `U1..U8`.
pub fn u_invariants<F: Field>(inv: &SexticInvariants<F>) -> Result<[F::Elem; 8]> {
    let f = &inv.field;
    if f.is_zero(&inv.i10) {
        return Err(Error::VanishingDenominator("I10"));
    }
    Ok(U_EXPONENTS.map(|e| {
        eval_ratio(f, &[&inv.i2, &inv.i4, &inv.i6], &inv.i10, e).expect("I10 is nonzero")
    }))
}

/// `x1^e0 x2^e1 x3^e2 / den^e3`.
pub(crate) fn eval_ratio<F: Field>(f: &F, num: &[&F::Elem], den: &F::Elem, e: [u32; 4]) -> Option<F::Elem> {
    let top = num
        .iter()
        .zip(&e[..num.len()])
        .fold(f.one(), |acc, (x, &k)| f.mul(&acc, &f.pow(x, k as u64)));
    f.div(&top, &f.pow(den, e[num.len()] as u64))
}

/// Absolute invariants; components whose denominator vanishes are `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct AbsoluteSextic<E> {
    pub t: Option<[E; 3]>,
    pub u: Option<[E; 8]>,
}

pub fn absolute_invariants<F: Field>(inv: &SexticInvariants<F>) -> AbsoluteSextic<F::Elem> {
    AbsoluteSextic {
        t: t_invariants(inv).ok(),
        u: u_invariants(inv).ok(),
    }
}

/// Multiset of indices (1-based, ascending) whose exponent vectors sum to `target`.
pub(crate) fn decompose(target: [u32; 4], basis: &[[u32; 4]], order: &[usize]) -> Option<Vec<usize>> {
    fn rec(
        rest: [u32; 4],
        basis: &[[u32; 4]],
        order: &[usize],
        from: usize,
        acc: &mut Vec<usize>,
        dead: &mut std::collections::HashSet<([u32; 4], usize)>,
    ) -> bool {
        if rest == [0; 4] {
            return true;
        }
        if dead.contains(&(rest, from)) {
            return false;
        }
        for pos in from..order.len() {
            let v = basis[order[pos]];
            if (0..4).all(|k| v[k] <= rest[k]) {
                let next = [0, 1, 2, 3].map(|k| rest[k] - v[k]);
                acc.push(order[pos] + 1);
                if rec(next, basis, order, pos, acc, dead) {
                    return true;
                }
                acc.pop();
            }
        }
        dead.insert((rest, from));
        false
    }
    let mut acc = Vec::new();
    let mut dead = std::collections::HashSet::new();
    if rec(target, basis, order, 0, &mut acc, &mut dead) {
        acc.sort_unstable();
        Some(acc)
    } else {
        None
    }
}

/// Write `I2^a I4^b I6^c / I10^d` as a product of `U_k`, given `a + 2b + 3c = 5d`.
pub fn decompose_u_monomial(a: u32, b: u32, c: u32, d: u32) -> Result<Vec<usize>> {
    if a + 2 * b + 3 * c != 5 * d {
        return Err(Error::WeightCondition {
            a,
            b,
            c,
            d,
            condition: "a + 2b + 3c = 5d",
        });
    }
    decompose([a, b, c, d], &U_EXPONENTS, &[0, 1, 2, 3, 4, 5, 6, 7]).ok_or(Error::WeightCondition {
        a,
        b,
        c,
        d,
        condition: "a product of U1..U8",
    })
}

/// Printed `J2, J4, J6, J10` at `(1, B1, B2, B3)`.
pub fn b_form_j<F: Field>(field: &F, b1: &F::Elem, b2: &F::Elem, b3: &F::Elem) -> Result<[F::Elem; 4]> {
    field.ensure_char_not_in(&EXCLUDED_CHARACTERISTICS, "B-form polynomials")?;
    let point = [field.one(), b1.clone(), b2.clone(), b3.clone()];
    let polys = reference::j_polys();
    let mut out = Vec::with_capacity(4);
    for p in polys {
        out.push(p.to_field(field.clone())?.eval(&point));
    }
    Ok(out.try_into().expect("four polynomials"))
}

/// `XY(X - Y)(X³ - B1 X²Y + B2 XY² - B3 Y³)`.
pub fn b_form<F: Field>(field: F, b1: &F::Elem, b2: &F::Elem, b3: &F::Elem) -> BinaryForm<F> {
    let f = &field;
    let cubic = [f.one(), f.neg(b1), b2.clone(), f.neg(b3)];
    let mut c = vec![f.zero(); 7];
    for (k, x) in cubic.iter().enumerate() {
        c[k + 1] = f.add(&c[k + 1], x);
        c[k + 2] = f.sub(&c[k + 2], x);
    }
    BinaryForm::new(field, c).expect("degree six")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn examples() {
        let q = Rationals;
        let ev = SexticEvaluator::standard(q).unwrap();
        let x6 = BinaryForm::monomial(q, 6, 0, q.one());
        assert!(ev.invariants(&x6).unwrap().all_zero());
        let x3y3 = BinaryForm::monomial(q, 6, 3, q.one());
        let inv = ev.invariants(&x3y3).unwrap();
        assert_eq!(inv.i2, q.from_i64(6));
        assert_eq!(inv.i10, q.zero());
        assert_eq!(ev.classify(&x3y3).unwrap(), SexticClass::TripleRoot);
        assert!(!ev.null_cone(&x3y3).unwrap());
        let x4y2 = BinaryForm::monomial(q, 6, 2, q.one());
        assert_eq!(ev.classify(&x4y2).unwrap(), SexticClass::MultiplicityAtLeastFour);
        assert!(ev.null_cone(&x4y2).unwrap());
        assert!(ev.null_cone(&BinaryForm::zero(q, 6)).unwrap());
        assert!(matches!(ev.classify(&BinaryForm::zero(q, 6)), Err(Error::ZeroForm(_))));
    }

    #[test]
    fn kappa_constants() {
        let q = Rationals;
        let ev = SexticEvaluator::standard(q).unwrap();
        let (k4, k6) = ev.kappa();
        assert_eq!(*k4, q.from_i64(9));
        assert_eq!(*k6, crate::field::parse_rational("1/27").unwrap());
    }

    #[test]
    fn inadmissible_characteristic() {
        let f5 = PrimeField::new(5).unwrap();
        assert!(matches!(
            SexticEvaluator::standard(f5),
            Err(Error::InadmissibleCharacteristic { characteristic: 5, .. })
        ));
    }

    #[test]
    fn u_examples() {
        let q = Rationals;
        let inv = SexticInvariants::new(q, [1, 0, 0, 1].map(|n| q.from_i64(n)));
        let u = u_invariants(&inv).unwrap();
        let mut expect = [0; 8].map(|n| q.from_i64(n));
        expect[0] = q.one();
        assert_eq!(u, expect);
        let abs = absolute_invariants(&SexticInvariants::new(q, [0, 1, 1, 0].map(|n| q.from_i64(n))));
        assert!(abs.t.is_none() && abs.u.is_none());
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decompose_u_monomial(5, 0, 0, 1).unwrap(), vec![1]);
        assert_eq!(decompose_u_monomial(0, 1, 1, 1).unwrap(), vec![5]);
        assert_eq!(decompose_u_monomial(8, 1, 0, 2).unwrap(), vec![1, 2]);
        assert!(matches!(
            decompose_u_monomial(1, 0, 0, 1),
            Err(Error::WeightCondition { .. })
        ));
        assert_eq!(decompose_u_monomial(0, 0, 0, 0).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn every_small_legal_tuple_decomposes() {
        for a in 0..=10 {
            for b in 0..=10 {
                for c in 0..=10 {
                    let w = a + 2 * b + 3 * c;
                    if w % 5 == 0 {
                        decompose_u_monomial(a, b, c, w / 5).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn b_form_layout() {
        let q = Rationals;
        let g = b_form(q, &q.from_i64(9), &q.from_i64(26), &q.from_i64(24));
        // roots 0, 1, inf, 2, 3, 4
        for t in [0, 1, 2, 3, 4] {
            assert_eq!(g.eval(&q.from_i64(t), &q.one()), q.zero());
        }
        assert_eq!(g.infinity_multiplicity(), 1);
    }
}
