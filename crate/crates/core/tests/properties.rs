use std::sync::OnceLock;

use invario_core::config::{normalize_config, s6_apply, s6_apply_via_points, CTuple, Permutation};
use invario_core::pair::{pair_invariants, CubicPair};
use invario_core::resultant::{discriminant, max_multiplicity, resultant, squarefree_profile};
use invario_core::sextic::SexticEvaluator;
use invario_core::{BinaryForm, Field, Matrix2, PrimeField, ProjPoint, Rationals};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f1009() -> PrimeField {
    PrimeField::new(1009).unwrap()
}

fn evaluator() -> &'static SexticEvaluator<PrimeField> {
    static CELL: OnceLock<SexticEvaluator<PrimeField>> = OnceLock::new();
    CELL.get_or_init(|| SexticEvaluator::standard(f1009()).unwrap())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_matrix() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-5i64..=5).prop_filter("invertible", |m| m[0] * m[3] - m[1] * m[2] != 0)
}

proptest! {
    #[test]
    fn action_composes(c in prop::collection::vec(-9i64..=9, 5), m in small_matrix(), n in small_matrix()) {
        let q = Rationals;
        let f = BinaryForm::from_i64(q, &c).unwrap();
        let (m, n) = (Matrix2::from_i64(&q, m), Matrix2::from_i64(&q, n));
        let lhs = f.act(&m).unwrap().act(&n).unwrap();
        let rhs = f.act(&m.mul(&q, &n)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn profile_matches_root_multiplicities(
        roots in prop::sample::subsequence((0u64..101).collect::<Vec<_>>(), 1..=4),
        mults in prop::collection::vec(1usize..=3, 4),
        with_infinity in any::<bool>(),
    ) {
        let p = PrimeField::new(101).unwrap();
        let mut pts = Vec::new();
        let mut expect = Vec::new();
        for (k, &r) in roots.iter().enumerate() {
            let pt = if with_infinity && k == 0 { ProjPoint::infinity(&p) } else { ProjPoint::finite(&p, r) };
            pts.extend(std::iter::repeat_n(pt, mults[k]));
            expect.push(mults[k]);
        }
        expect.sort_unstable_by(|a, b| b.cmp(a));
        let f = BinaryForm::from_roots(p, &pts).unwrap();
        prop_assert_eq!(squarefree_profile(&f).unwrap(), expect.clone());
        prop_assume!(f.degree() >= 2);
        let disc_zero = discriminant(&f).unwrap() == 0;
        prop_assert_eq!(disc_zero, expect[0] >= 2);
    }

    #[test]
    fn resultant_vanishes_iff_common_root(seed in any::<u64>(), share in any::<bool>()) {
        let p = PrimeField::new(101).unwrap();
        let mut r = rng(seed);
        let mut roots_f: Vec<_> = (0..3).map(|_| ProjPoint::random(&p, &mut r)).collect();
        let mut roots_g: Vec<_> = (0..3).map(|_| ProjPoint::random(&p, &mut r)).collect();
        if share {
            roots_g[0] = roots_f[1].clone();
        } else {
            // keep the two root sets apart
            roots_f.retain(|a| !roots_g.iter().any(|b| a.same_point(&p, b)));
            roots_g.truncate(3);
            prop_assume!(roots_f.len() == 3);
        }
        let f = BinaryForm::from_roots(p, &roots_f).unwrap();
        let g = BinaryForm::from_roots(p, &roots_g).unwrap();
        prop_assert_eq!(resultant(&f, &g) == 0, share);
    }

    #[test]
    fn sextic_invariants_are_sl2_invariant(seed in any::<u64>()) {
        let p = f1009();
        let mut r = rng(seed);
        let ev = evaluator();
        let f = BinaryForm::random(p, 6, &mut r);
        let m = Matrix2::random_sl2(&p, &mut r);
        prop_assert_eq!(ev.invariants(&f).unwrap(), ev.invariants(&f.act(&m).unwrap()).unwrap());
    }

    #[test]
    fn sextic_covariance_weights(seed in any::<u64>()) {
        let p = f1009();
        let mut r = rng(seed);
        let ev = evaluator();
        let f = BinaryForm::random(p, 6, &mut r);
        let m = Matrix2::random_gl2(&p, &mut r);
        let c = p.random_nonzero(&mut r);
        let a = ev.invariants(&f).unwrap().to_array();
        let b = ev.invariants(&f.act(&m).unwrap()).unwrap().to_array();
        let s = ev.invariants(&f.scale(&c)).unwrap().to_array();
        let det = m.det(&p);
        for (k, deg) in [2u64, 4, 6, 10].into_iter().enumerate() {
            prop_assert_eq!(b[k], p.mul(&p.pow(&det, 3 * deg), &a[k]));
            prop_assert_eq!(s[k], p.mul(&p.pow(&c, deg), &a[k]));
        }
    }

    #[test]
    fn classifier_matches_profile(seed in any::<u64>(), pattern in 0usize..7) {
        let p = f1009();
        let mut r = rng(seed);
        let shapes: [&[usize]; 7] = [&[1; 6], &[2, 1, 1, 1, 1], &[2, 2, 2], &[3, 1, 1, 1], &[3, 3], &[4, 2], &[6]];
        let mut pts: Vec<ProjPoint<u64>> = Vec::new();
        for &m in shapes[pattern] {
            let pt = loop {
                let pt = ProjPoint::random(&p, &mut r);
                if !pts.iter().any(|q| q.same_point(&p, &pt)) { break pt; }
            };
            pts.extend(std::iter::repeat_n(pt, m));
        }
        let f = BinaryForm::from_roots(p, &pts).unwrap().act(&Matrix2::random_gl2(&p, &mut r)).unwrap();
        let class = evaluator().classify(&f).unwrap();
        prop_assert_eq!(class, invario_core::SexticClass::from_max_multiplicity(max_multiplicity(&f).unwrap()));
    }

    #[test]
    fn pair_invariants_transform(seed in any::<u64>()) {
        let p = f1009();
        let mut r = rng(seed);
        let pair = CubicPair::new(BinaryForm::random(p, 3, &mut r), BinaryForm::random(p, 3, &mut r)).unwrap();
        let m = Matrix2::random_gl2(&p, &mut r);
        let det = m.det(&p);
        let base = pair_invariants(&pair).unwrap().to_array();
        let moved = pair_invariants(&pair.act(&m).unwrap()).unwrap().to_array();
        for (k, w) in [3u64, 6, 9, 12].into_iter().enumerate() {
            prop_assert_eq!(moved[k], p.mul(&p.pow(&det, w), &base[k]));
        }
        // ν: swapping flips the odd-weight invariants
        let swapped = pair_invariants(&pair.swapped()).unwrap().to_array();
        prop_assert_eq!(swapped, [p.neg(&base[0]), base[1], p.neg(&base[2]), base[3]]);
        // δ: (c f, g / c) changes nothing
        let c = p.random_nonzero(&mut r);
        let scaled = CubicPair::new(pair.f.scale(&c), pair.g.scale(&p.inv(&c).unwrap())).unwrap();
        prop_assert_eq!(pair_invariants(&scaled).unwrap().to_array(), base);
    }

    #[test]
    fn normalization_is_mobius_invariant(seed in any::<u64>()) {
        let q = Rationals;
        let mut r = rng(seed);
        let c = CTuple::random(&q, &mut r);
        let m = Matrix2::random_gl2(&q, &mut r);
        let moved: Vec<_> = c
            .points(&q)
            .iter()
            .map(|pt| ProjPoint::new(&q, q.add(&q.mul(&m.a, &pt.x), &q.mul(&m.b, &pt.y)), q.add(&q.mul(&m.c, &pt.x), &q.mul(&m.d, &pt.y))).unwrap())
            .collect();
        prop_assert_eq!(normalize_config(&q, &moved).unwrap(), c);
    }

    #[test]
    fn s6_action_is_a_group_action(seed in any::<u64>()) {
        let q = Rationals;
        let mut r = rng(seed);
        let c: CTuple<BigRational> = CTuple::random(&q, &mut r);
        let (s, t) = (Permutation::random(&mut r), Permutation::random(&mut r));
        prop_assert_eq!(s6_apply(&q, &s, &c), s6_apply_via_points(&q, &s, &c));
        let step = s6_apply(&q, &t, &s6_apply(&q, &s, &c));
        prop_assert_eq!(step, s6_apply(&q, &s.compose(&t), &c));
    }

    #[test]
    fn word_times_inverse_is_identity(seed in any::<u64>(), len in 1usize..12) {
        let q = Rationals;
        let mut r = rng(seed);
        let c: CTuple<BigRational> = CTuple::random(&q, &mut r);
        let word: Vec<usize> = (0..len).map(|_| rand::Rng::gen_range(&mut r, 1..=5)).collect();
        let mut t = c.clone();
        for &i in word.iter().chain(word.iter().rev()) {
            t = s6_apply(&q, &Permutation::adjacent(i), &t);
        }
        prop_assert_eq!(t, c);
    }
}

#[test]
fn tau34_matches_renormalization() {
    let q = Rationals;
    let mut r = rng(34);
    for _ in 0..50 {
        let c: CTuple<BigRational> = CTuple::random(&q, &mut r);
        let tau = Permutation::adjacent(3);
        assert_eq!(s6_apply(&q, &tau, &c), s6_apply_via_points(&q, &tau, &c));
    }
}
