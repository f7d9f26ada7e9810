//! Six-point configurations on the projective line, the S6 action on
//! normalized coordinates, orbit enumeration, and brute-force conjugacy
//! witnesses over tiny prime fields.

use std::collections::{BTreeSet, VecDeque};

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::form::{bracket, BinaryForm, Matrix2, ProjPoint};
use crate::pair::{pair_from_threesets, CubicPair};

/// `(0, 1, ∞, c1, c2, c3)` with the `c_i` distinct and outside `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CTuple<E> {
    pub c: [E; 3],
}

impl<E: Clone + PartialEq> CTuple<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, c: [E; 3]) -> Result<Self> {
        for (i, x) in c.iter().enumerate() {
            if field.is_zero(x) || field.is_one(x) {
                return Err(Error::InvalidTuple(format!(
                    "c{} = {} collides with 0 or 1",
                    i + 1,
                    field.format(x)
                )));
            }
        }
        if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
            return Err(Error::InvalidTuple("coordinates must be distinct".into()));
        }
        Ok(CTuple { c })
    }

    pub fn random<F: Field<Elem = E>, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Self {
        loop {
            let c = [field.random(rng), field.random(rng), field.random(rng)];
            if let Ok(t) = CTuple::new(field, c) {
                return t;
            }
        }
    }

    /// The six points `0, 1, ∞, c1, c2, c3`.
    pub fn points<F: Field<Elem = E>>(&self, field: &F) -> [ProjPoint<E>; 6] {
        [
            ProjPoint::finite(field, field.zero()),
            ProjPoint::finite(field, field.one()),
            ProjPoint::infinity(field),
            ProjPoint::finite(field, self.c[0].clone()),
            ProjPoint::finite(field, self.c[1].clone()),
            ProjPoint::finite(field, self.c[2].clone()),
        ]
    }

    /// Elementary symmetric functions `(e1, e2, e3)`.
    pub fn elementary<F: Field<Elem = E>>(&self, field: &F) -> [E; 3] {
        let f = field;
        let [a, b, c] = &self.c;
        let e1 = f.add(&f.add(a, b), c);
        let e2 = f.add(&f.add(&f.mul(a, b), &f.mul(a, c)), &f.mul(b, c));
        let e3 = f.mul(&f.mul(a, b), c);
        [e1, e2, e3]
    }

    pub fn format<F: Field<Elem = E>>(&self, field: &F) -> [String; 3] {
        self.c.clone().map(|x| field.format(&x))
    }
}

/// A permutation of `{1..6}` given by its images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: [u8; 6],
}

impl Permutation {
    pub fn new(images: [u8; 6]) -> Result<Self> {
        let mut seen = [false; 6];
        for &i in &images {
            if !(1..=6).contains(&i) || std::mem::replace(&mut seen[i as usize - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..6")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity() -> Self {
        Permutation { images: [1, 2, 3, 4, 5, 6] }
    }

    /// The transposition `(i i+1)`, `1 <= i <= 5`.
    pub fn adjacent(i: usize) -> Self {
        assert!((1..=5).contains(&i), "adjacent transposition index");
        let mut images = [1, 2, 3, 4, 5, 6];
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn images(&self) -> [u8; 6] {
        self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation {
            images: other.images.map(|i| self.images[i as usize - 1]),
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut images = [1, 2, 3, 4, 5, 6];
        for i in (1..6).rev() {
            images.swap(i, rng.gen_range(0..=i));
        }
        Permutation { images }
    }

    /// Adjacent transpositions `i` (meaning `(i i+1)`) whose successive
    /// application as position swaps turns `[1..6]` into `[τ(1)..τ(6)]`.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        let mut arr = self.images;
        let mut swaps = Vec::new();
        // bubble sort the target back to the identity, then reverse
        for pass in 0..6 {
            for j in 0..5 - pass {
                if arr[j] > arr[j + 1] {
                    arr.swap(j, j + 1);
                    swaps.push(j + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }
}

/// The Möbius map sending `p1, p2, p3` to `0, 1, ∞`, applied to `p4, p5, p6`.
pub fn normalize_config<F: Field>(field: &F, points: &[ProjPoint<F::Elem>]) -> Result<CTuple<F::Elem>> {
    if points.len() != 6 {
        return Err(Error::WrongRootCount {
            expected: 6,
            found: points.len(),
        });
    }
    for i in 0..6 {
        for j in i + 1..6 {
            if points[i].same_point(field, &points[j]) {
                return Err(Error::CoincidentPoints);
            }
        }
    }
    let f = field;
    let (p1, p2, p3) = (&points[0], &points[1], &points[2]);
    let k_num = bracket(f, p2, p3);
    let k_den = bracket(f, p2, p1);
    let image = |z: &ProjPoint<F::Elem>| {
        let num = f.mul(&bracket(f, z, p1), &k_num);
        let den = f.mul(&bracket(f, z, p3), &k_den);
        f.div(&num, &den).expect("distinct points map to finite values")
    };
    CTuple::new(f, [image(&points[3]), image(&points[4]), image(&points[5])])
}

/// One printed adjacent-transposition map.
fn apply_adjacent<F: Field>(field: &F, i: usize, t: &CTuple<F::Elem>) -> CTuple<F::Elem> {
    let f = field;
    let one = f.one();
    let [c1, c2, c3] = &t.c;
    let div = |a: &F::Elem, b: &F::Elem| f.div(a, b).expect("valid tuples avoid poles");
    let c = match i {
        1 => t.c.clone().map(|x| f.sub(&one, &x)),
        2 => t.c.clone().map(|x| div(&x, &f.sub(&x, &one))),
        3 => {
            let u = f.sub(&one, c1);
            [
                u.clone(),
                div(&f.mul(c2, &u), &f.sub(c2, c1)),
                div(&f.mul(c3, &u), &f.sub(c3, c1)),
            ]
        }
        4 => [c2.clone(), c1.clone(), c3.clone()],
        5 => [c1.clone(), c3.clone(), c2.clone()],
        _ => unreachable!("adjacent transposition index"),
    };
    debug_assert!(CTuple::new(f, c.clone()).is_ok());
    CTuple { c }
}

/// `τ` acting on normalized coordinates through the adjacent-transposition maps.
///
/// Convention: the configuration `(p1..p6)` goes to `(p_τ(1)..p_τ(6))`,
/// renormalized; applying `σ` then `τ` equals applying `σ ∘ τ`.
pub fn s6_apply<F: Field>(field: &F, tau: &Permutation, c: &CTuple<F::Elem>) -> CTuple<F::Elem> {
    tau.adjacent_factorization()
        .into_iter()
        .fold(c.clone(), |acc, i| apply_adjacent(field, i, &acc))
}

/// Same action computed by permuting the six points and renormalizing.
pub fn s6_apply_via_points<F: Field>(field: &F, tau: &Permutation, c: &CTuple<F::Elem>) -> CTuple<F::Elem> {
    let p = c.points(field);
    let q: Vec<_> = (1..=6).map(|i| p[tau.apply(i) - 1].clone()).collect();
    normalize_config(field, &q).expect("a permutation keeps points distinct")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitGroup {
    S6,
    /// `S3 ≀ Z2`: permutations preserving `{1,2,3} | {4,5,6}`.
    Wreath,
}

impl OrbitGroup {
    pub fn generators(self) -> Vec<Permutation> {
        match self {
            OrbitGroup::S6 => (1..=5).map(Permutation::adjacent).collect(),
            OrbitGroup::Wreath => vec![
                Permutation::adjacent(1),
                Permutation::adjacent(2),
                Permutation::adjacent(4),
                Permutation::adjacent(5),
                Permutation::new([4, 5, 6, 1, 2, 3]).expect("block swap"),
            ],
        }
    }

    pub fn order(self) -> usize {
        match self {
            OrbitGroup::S6 => 720,
            OrbitGroup::Wreath => 72,
        }
    }
}

/// Breadth-first closure of `c` under the group's generators.
pub fn orbit<F: Field>(field: &F, c: &CTuple<F::Elem>, group: OrbitGroup) -> BTreeSet<CTuple<F::Elem>> {
    let gens = group.generators();
    let mut seen = BTreeSet::from([c.clone()]);
    let mut queue = VecDeque::from([c.clone()]);
    while let Some(t) = queue.pop_front() {
        for g in &gens {
            let u = s6_apply(field, g, &t);
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}

pub fn s6_orbit<F: Field>(field: &F, c: &CTuple<F::Elem>) -> BTreeSet<CTuple<F::Elem>> {
    orbit(field, c, OrbitGroup::S6)
}

pub fn wreath_orbit<F: Field>(field: &F, c: &CTuple<F::Elem>) -> BTreeSet<CTuple<F::Elem>> {
    orbit(field, c, OrbitGroup::Wreath)
}

pub fn orbit_conjugate_oracle<F: Field>(
    field: &F,
    c: &CTuple<F::Elem>,
    c2: &CTuple<F::Elem>,
    group: OrbitGroup,
) -> bool {
    orbit(field, c, group).contains(c2)
}

/// The sextic with roots `0, 1, ∞, c1, c2, c3`.
pub fn ctuple_sextic<F: Field>(field: F, c: &CTuple<F::Elem>) -> BinaryForm<F> {
    let pts = c.points(&field);
    BinaryForm::from_roots(field, &pts).expect("six roots")
}

/// The cubic pair with root triples `{0, 1, ∞}` and `{c1, c2, c3}`.
pub fn ctuple_pair<F: Field>(field: F, c: &CTuple<F::Elem>) -> Result<CubicPair<F>> {
    let pts = c.points(&field);
    pair_from_threesets(field, &pts[..3], &pts[3..])
}

/// `g = scale · (f ∘ matrix)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormWitness {
    pub matrix: Matrix2<u64>,
    pub scale: u64,
}

/// `q = (u · (p.f ∘ M), v · (p.g ∘ M))`, with the cubics exchanged first when `swapped`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub matrix: Matrix2<u64>,
    pub swapped: bool,
    pub scales: (u64, u64),
}

pub const SEARCH_PRIME_LIMIT: u64 = 13;

fn invertible_matrices(field: &PrimeField) -> Result<Vec<Matrix2<u64>>> {
    let p = field.modulus();
    if p > SEARCH_PRIME_LIMIT {
        return Err(Error::PrimeTooLarge(p));
    }
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = Matrix2::new(a, b, c, d);
                    if m.det(field) != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Scan GL2(F_p) for a matrix carrying `f` to a multiple of `g`.
pub fn exhaustive_matrix_search(
    f: &BinaryForm<PrimeField>,
    g: &BinaryForm<PrimeField>,
) -> Result<Option<FormWitness>> {
    let field = *f.field();
    if g.field() != &field {
        return Err(Error::FieldMismatch);
    }
    if f.degree() != g.degree() {
        return Err(Error::WrongDegree {
            expected: f.degree(),
            found: g.degree(),
        });
    }
    let mats = invertible_matrices(&field)?;
    Ok(mats.par_iter().find_map_first(|m| {
        let h = f.substitute(m);
        h.proportional(g).map(|scale| FormWitness {
            matrix: m.clone(),
            scale,
        })
    }))
}

/// Scan GL2(F_p) and the swap for a witness relating two cubic pairs.
pub fn exhaustive_pair_search(
    p: &CubicPair<PrimeField>,
    q: &CubicPair<PrimeField>,
) -> Result<Option<PairWitness>> {
    let field = *p.field();
    if q.field() != &field {
        return Err(Error::FieldMismatch);
    }
    let mats = invertible_matrices(&field)?;
    Ok(mats.par_iter().find_map_first(|m| {
        let (f, g) = (p.f.substitute(m), p.g.substitute(m));
        for swapped in [false, true] {
            let (a, b) = if swapped { (&g, &f) } else { (&f, &g) };
            if let (Some(u), Some(v)) = (a.proportional(&q.f), b.proportional(&q.g)) {
                return Some(PairWitness {
                    matrix: m.clone(),
                    swapped,
                    scales: (u, v),
                });
            }
        }
        None
    }))
}
