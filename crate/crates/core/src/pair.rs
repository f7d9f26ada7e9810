//! Invariants of ordered pairs of binary cubics.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::form::{BinaryForm, ProjPoint};
use crate::multipoly::CompiledPoly;
use crate::reference;
use crate::resultant::squarefree_profile;

pub const EXCLUDED_CHARACTERISTICS: [u64; 2] = [2, 3];

#[derive(Clone, Debug, PartialEq)]
pub struct CubicPair<F: Field> {
    pub f: BinaryForm<F>,
    pub g: BinaryForm<F>,
}

impl<F: Field> CubicPair<F> {
    pub fn new(f: BinaryForm<F>, g: BinaryForm<F>) -> Result<Self> {
        f.require_degree(3)?;
        g.require_degree(3)?;
        if f.field() != g.field() {
            return Err(Error::FieldMismatch);
        }
        f.field()
            .ensure_char_not_in(&EXCLUDED_CHARACTERISTICS, "cubic pairs")?;
        Ok(CubicPair { f, g })
    }

    pub fn field(&self) -> &F {
        self.f.field()
    }

    /// Pull both cubics back by the same matrix.
    pub fn act(&self, m: &crate::form::Matrix2<F::Elem>) -> Result<Self> {
        Ok(CubicPair {
            f: self.f.act(m)?,
            g: self.g.act(m)?,
        })
    }

    pub fn swapped(&self) -> Self {
        CubicPair {
            f: self.g.clone(),
            g: self.f.clone(),
        }
    }

    fn coords(&self) -> Vec<F::Elem> {
        self.f.coeffs().iter().chain(self.g.coeffs()).cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairInvariants<F: Field> {
    pub field: F,
    pub h: F::Elem,
    pub i: F::Elem,
    pub r: F::Elem,
    pub d: F::Elem,
}

impl<F: Field> PairInvariants<F> {
    pub fn new(field: F, v: [F::Elem; 4]) -> Self {
        let [h, i, r, d] = v;
        PairInvariants { field, h, i, r, d }
    }

    pub fn to_array(&self) -> [F::Elem; 4] {
        [self.h.clone(), self.i.clone(), self.r.clone(), self.d.clone()]
    }

    pub fn all_zero(&self) -> bool {
        self.to_array().iter().all(|x| self.field.is_zero(x))
    }
}

/// The printed `H, I, R, D` compiled for one field.
#[derive(Clone, Debug)]
pub struct PairEvaluator<F: Field> {
    field: F,
    polys: [CompiledPoly<F>; 4],
}

impl<F: Field> PairEvaluator<F> {
    pub fn new(field: F) -> Result<Self> {
        field.ensure_char_not_in(&EXCLUDED_CHARACTERISTICS, "cubic pairs")?;
        let src = reference::pair_polys();
        let mut polys = Vec::with_capacity(4);
        for p in src {
            polys.push(p.to_field(field.clone())?.compile());
        }
        Ok(PairEvaluator {
            field,
            polys: polys.try_into().expect("four polynomials"),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn invariants(&self, p: &CubicPair<F>) -> Result<PairInvariants<F>> {
        if p.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let x = p.coords();
        Ok(PairInvariants::new(
            self.field.clone(),
            [0, 1, 2, 3].map(|k| self.polys[k].eval(&x)),
        ))
    }

    pub fn null_cone(&self, p: &CubicPair<F>) -> Result<PairNullCone> {
        let member = self.invariants(p)?.all_zero();
        let product = p.f.product(&p.g);
        let max_multiplicity = squarefree_profile(&product).ok().map(|m| m[0]);
        Ok(PairNullCone {
            member,
            product_zero: max_multiplicity.is_none(),
            max_multiplicity,
        })
    }

    /// Equality of `V1..V6`: conjugacy under GL2 × Γ over the algebraic closure.
    pub fn conjugate(&self, p: &CubicPair<F>, q: &CubicPair<F>) -> Result<bool> {
        let vp = v_invariants(&self.invariants(p)?)?;
        let vq = v_invariants(&self.invariants(q)?)?;
        Ok(vp == vq)
    }
}

pub fn pair_invariants<F: Field>(p: &CubicPair<F>) -> Result<PairInvariants<F>> {
    PairEvaluator::new(p.field().clone())?.invariants(p)
}

pub fn pair_null_cone<F: Field>(p: &CubicPair<F>) -> Result<PairNullCone> {
    PairEvaluator::new(p.field().clone())?.null_cone(p)
}

pub fn pair_conjugate<F: Field>(p: &CubicPair<F>, q: &CubicPair<F>) -> Result<bool> {
    PairEvaluator::new(p.field().clone())?.conjugate(p, q)
}

/// Null-cone membership together with the root-level explanation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairNullCone {
    /// `H = I = R = D = 0`.
    pub member: bool,
    /// `f g = 0`.
    pub product_zero: bool,
    /// Largest root multiplicity of `f g`, when nonzero.
    pub max_multiplicity: Option<usize>,
}

impl PairNullCone {
    /// The root-level prediction: `f g = 0` or a root of multiplicity at least four.
    pub fn degenerate(&self) -> bool {
        self.product_zero || self.max_multiplicity.is_some_and(|m| m >= 4)
    }
}

/// `(f, g) -> (c f, c⁻¹ g)`, followed by the swap when `swapped`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaElement<E> {
    pub scale: E,
    pub swapped: bool,
}

pub fn gamma_act<F: Field>(gamma: &GammaElement<F::Elem>, p: &CubicPair<F>) -> Result<CubicPair<F>> {
    let field = p.field();
    let inv = field.inv(&gamma.scale).ok_or(Error::ZeroScale)?;
    let out = CubicPair {
        f: p.f.scale(&gamma.scale),
        g: p.g.scale(&inv),
    };
    Ok(if gamma.swapped { out.swapped() } else { out })
}

/// Exponents `(a, b, c, d)` of `V_k = H^a I^b / (R^c D^d)`.
pub const V_EXPONENTS: [[u32; 4]; 6] = [
    [1, 1, 1, 0],
    [3, 0, 1, 0],
    [4, 0, 0, 1],
    [0, 2, 0, 1],
    [0, 3, 2, 0],
    [2, 1, 0, 1],
];

fn monomial<F: Field>(inv: &PairInvariants<F>, e: [u32; 4]) -> Option<F::Elem> {
    let f = &inv.field;
    let top = f.mul(&f.pow(&inv.h, e[0] as u64), &f.pow(&inv.i, e[1] as u64));
    let bottom = f.mul(&f.pow(&inv.r, e[2] as u64), &f.pow(&inv.d, e[3] as u64));
    f.div(&top, &bottom)
}

/// `R1 = H²/I`, `R2 = H³/R`, `R3 = H⁴/D`.
pub fn r_invariants<F: Field>(inv: &PairInvariants<F>) -> [Option<F::Elem>; 3] {
    let f = &inv.field;
    let h2 = f.mul(&inv.h, &inv.h);
    let h3 = f.mul(&h2, &inv.h);
    let h4 = f.mul(&h3, &inv.h);
    [f.div(&h2, &inv.i), f.div(&h3, &inv.r), f.div(&h4, &inv.d)]
}

/// `V1..V6`, defined when `R D ≠ 0`.
pub fn v_invariants<F: Field>(inv: &PairInvariants<F>) -> Result<[F::Elem; 6]> {
    let f = &inv.field;
    if f.is_zero(&inv.r) {
        return Err(Error::VanishingDenominator("R"));
    }
    if f.is_zero(&inv.d) {
        return Err(Error::VanishingDenominator("D"));
    }
    Ok(V_EXPONENTS.map(|e| monomial(inv, e).expect("R D is nonzero")))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AbsolutePair<E> {
    pub r: [Option<E>; 3],
    pub v: Option<[E; 6]>,
}

pub fn absolute_pair<F: Field>(inv: &PairInvariants<F>) -> AbsolutePair<F::Elem> {
    AbsolutePair {
        r: r_invariants(inv),
        v: v_invariants(inv).ok(),
    }
}

/// Write `H^a I^b / (R^c D^d)` as a product of `V_k`, given `a + 2b = 3c + 4d`.
///
/// Powers of `V2`, `V3` are extracted first, then `V4`, `V5`; the remainder
/// is one of the residual cases covered by `V1` and `V6`.
pub fn decompose_v_monomial(a: u32, b: u32, c: u32, d: u32) -> Result<Vec<usize>> {
    if a + 2 * b != 3 * c + 4 * d {
        return Err(Error::WeightCondition {
            a,
            b,
            c,
            d,
            condition: "a + 2b = 3c + 4d",
        });
    }
    crate::sextic::decompose([a, b, c, d], &V_EXPONENTS, &[1, 2, 3, 4, 0, 5]).ok_or(
        Error::WeightCondition {
            a,
            b,
            c,
            d,
            condition: "a product of V1..V6",
        },
    )
}

/// Printed `H~, I~, R~, D~` at `(1, B1, B2, B3)`.
pub fn tilde_specialize<F: Field>(field: &F, b1: &F::Elem, b2: &F::Elem, b3: &F::Elem) -> Result<[F::Elem; 4]> {
    field.ensure_char_not_in(&EXCLUDED_CHARACTERISTICS, "cubic pairs")?;
    let point = [field.one(), b1.clone(), b2.clone(), b3.clone()];
    let mut out = Vec::with_capacity(4);
    for p in reference::tilde_polys() {
        out.push(p.to_field(field.clone())?.eval(&point));
    }
    Ok(out.try_into().expect("four polynomials"))
}

/// `(XY(X - Y), X³ + B1 X²Y + B2 XY² + B3 Y³)`.
pub fn tilde_pair<F: Field>(field: F, b1: &F::Elem, b2: &F::Elem, b3: &F::Elem) -> Result<CubicPair<F>> {
    let f = BinaryForm::from_i64(field.clone(), &[0, 1, -1, 0])?;
    let g = BinaryForm::new(field.clone(), vec![field.one(), b1.clone(), b2.clone(), b3.clone()])?;
    CubicPair::new(f, g)
}

/// The pair whose cubics vanish on the two triples.
pub fn pair_from_threesets<F: Field>(
    field: F,
    p: &[ProjPoint<F::Elem>],
    q: &[ProjPoint<F::Elem>],
) -> Result<CubicPair<F>> {
    for set in [p, q] {
        if set.len() != 3 {
            return Err(Error::WrongRootCount {
                expected: 3,
                found: set.len(),
            });
        }
    }
    let all: Vec<_> = p.iter().chain(q).collect();
    for i in 0..6 {
        for j in i + 1..6 {
            if all[i].same_point(&field, all[j]) {
                return Err(Error::NotDisjoint);
            }
        }
    }
    CubicPair::new(
        BinaryForm::from_roots(field.clone(), p)?,
        BinaryForm::from_roots(field, q)?,
    )
}

/// Whether `{P, Q}` and `{P', Q'}` are PGL2-equivalent over the closure.
pub fn threeset_pairs_conjugate<F: Field>(
    field: F,
    p: &[ProjPoint<F::Elem>],
    q: &[ProjPoint<F::Elem>],
    p2: &[ProjPoint<F::Elem>],
    q2: &[ProjPoint<F::Elem>],
) -> Result<bool> {
    let a = pair_from_threesets(field.clone(), p, q)?;
    let b = pair_from_threesets(field, p2, q2)?;
    pair_conjugate(&a, &b)
}
