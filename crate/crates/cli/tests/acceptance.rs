//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are reproduced faithfully and are
//! expected to fail; the run aborts if anything else fails, or if a known
//! failure starts passing.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use invario_core::config::{self, ctuple_pair, ctuple_sextic, CTuple, OrbitGroup, Permutation};
use invario_core::invgen::{self, MatchStatus, Recipe, RootSum, TableSet};
use invario_core::pair::{self, gamma_act, CubicPair, GammaElement, PairEvaluator};
use invario_core::resultant::{discriminant, max_multiplicity, resultant};
use invario_core::sextic::{self, SexticClass, SexticEvaluator, SexticInvariants};
use invario_core::{BinaryForm, Field, Matrix2, PrimeField, ProjPoint, Rationals};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// The printed J10 is not a B-form invariant; see the decisions ledger.
const KNOWN_FAILURES: [u32; 2] = [1, 2];

type Outcome = Result<String, String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// First index where `f` fails, searched in parallel.
fn first_failure<T: Send>(n: u64, f: impl Fn(u64) -> Option<T> + Sync + Send) -> Option<(u64, T)> {
    (0..n).into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)))
}

// ---------------------------------------------------------------- 1

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let tables = invgen::generate_sextic_tables().map_err(|e| e.to_string())?;
    let report = invgen::verify_tables(&tables).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let summary: Vec<String> = report
        .entries
        .iter()
        .map(|e| match &e.lambda {
            Some(l) => format!("{}={}", e.label, l),
            None => format!("{}:{:?}", e.label, e.status),
        })
        .collect();
    let detail = format!("{} in {:.1}s", summary.join(" "), elapsed.as_secs_f64());
    check(elapsed < Duration::from_secs(60), || format!("too slow: {detail}"))?;
    if report.entries.iter().all(|e| e.status == MatchStatus::Match) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

// ---------------------------------------------------------------- 2

fn c_product(f: &Rationals, c: &[BigRational; 3]) -> BigRational {
    let one = f.one();
    let mut acc = f.one();
    for x in c {
        let t = f.mul(x, &f.sub(x, &one));
        acc = f.mul(&acc, &f.mul(&t, &t));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let d = f.sub(&c[i], &c[j]);
        acc = f.mul(&acc, &f.mul(&d, &d));
    }
    acc
}

fn criterion_2() -> Outcome {
    let q = Rationals;
    let mut r = rng(2);
    let ev = SexticEvaluator::standard(q).map_err(|e| e.to_string())?;
    let (mut printed, mut ours) = (BTreeSet::new(), BTreeSet::new());
    for _ in 0..100 {
        let t = CTuple::random(&q, &mut r);
        let [e1, e2, e3] = t.elementary(&q);
        let j10 = sextic::b_form_j(&q, &e1, &e2, &e3).map_err(|e| e.to_string())?[3].clone();
        let target = c_product(&q, &t.c);
        printed.insert(q.div(&j10, &target).unwrap());
        let i10 = ev.invariants(&sextic::b_form(q, &e1, &e2, &e3)).unwrap().i10;
        ours.insert(q.div(&i10, &target).unwrap());
    }
    let own = if ours.len() == 1 {
        format!("table I10 factors with lambda {}", ours.iter().next().unwrap())
    } else {
        format!("table I10 gives {} ratios", ours.len())
    };
    if printed.len() == 1 {
        Ok(format!("printed J10 lambda {}; {own}", printed.iter().next().unwrap()))
    } else {
        Err(format!("printed J10 gives {} distinct ratios over 100 triples; {own}", printed.len()))
    }
}

// ---------------------------------------------------------------- 3

fn invariance_on<F: Field>(field: F, cases: u64, seed: u64) -> Result<(), String> {
    let ev = SexticEvaluator::standard(field.clone()).map_err(|e| e.to_string())?;
    let pe = PairEvaluator::new(field.clone()).map_err(|e| e.to_string())?;
    let bad = first_failure(cases, |i| {
        let f = &field;
        let mut r = rng(seed ^ i.wrapping_mul(0x9e37_79b9));
        let m = Matrix2::random_sl2(f, &mut r);
        let s = BinaryForm::random(f.clone(), 6, &mut r);
        let base = ev.invariants(&s).unwrap().to_array();
        if ev.invariants(&s.act(&m).unwrap()).unwrap().to_array() != base {
            return Some("sextic SL2");
        }
        let c = f.random_nonzero(&mut r);
        let scaled = ev.invariants(&s.scale(&c)).unwrap().to_array();
        for (k, deg) in [2u64, 4, 6, 10].into_iter().enumerate() {
            if scaled[k] != f.mul(&f.pow(&c, deg), &base[k]) {
                return Some("sextic scaling");
            }
        }
        let p = CubicPair::new(BinaryForm::random(f.clone(), 3, &mut r), BinaryForm::random(f.clone(), 3, &mut r)).unwrap();
        let pb = pe.invariants(&p).unwrap().to_array();
        if pe.invariants(&p.act(&m).unwrap()).unwrap().to_array() != pb {
            return Some("pair SL2");
        }
        let sw = pe.invariants(&p.swapped()).unwrap().to_array();
        let expect = [f.neg(&pb[0]), pb[1].clone(), f.neg(&pb[2]), pb[3].clone()];
        if sw != expect {
            return Some("pair swap parity");
        }
        None
    });
    match bad {
        None => Ok(()),
        Some((i, what)) => Err(format!("{what} broken in case {i} over {:?}", field.spec())),
    }
}

fn criterion_3() -> Outcome {
    invariance_on(Rationals, 1000, 31)?;
    invariance_on(fp(101), 1000, 32)?;
    invariance_on(fp(1009), 1000, 33)?;
    Ok("1000 cases each over Q, F101, F1009".into())
}

// ---------------------------------------------------------------- 4

fn class_mismatch<F: Field>(ev: &SexticEvaluator<F>, s: &BinaryForm<F>) -> bool {
    let oracle = SexticClass::from_max_multiplicity(max_multiplicity(s).unwrap());
    ev.classify(s).unwrap() != oracle
}

/// Random forms plus random root patterns, so the degenerate classes are hit.
fn random_sextic<F: Field>(f: &F, r: &mut ChaCha8Rng, i: u64) -> BinaryForm<F> {
    if i.is_multiple_of(2) {
        return BinaryForm::random(f.clone(), 6, r);
    }
    let shapes: [&[usize]; 8] = [
        &[1; 6],
        &[2, 1, 1, 1, 1],
        &[2, 2, 1, 1],
        &[2, 2, 2],
        &[3, 1, 1, 1],
        &[3, 2, 1],
        &[3, 3],
        &[4, 1, 1],
    ];
    let mut pts: Vec<ProjPoint<F::Elem>> = Vec::new();
    let shape = shapes[r.gen_range(0..shapes.len())];
    for &m in shape {
        let pt = loop {
            let pt = ProjPoint::random(f, r);
            if !pts.iter().any(|q| q.same_point(f, &pt)) {
                break pt;
            }
        };
        pts.extend(std::iter::repeat_n(pt, m));
    }
    let u = f.random_nonzero(r);
    BinaryForm::from_roots(f.clone(), &pts).unwrap().scale(&u)
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let f7 = fp(7);
    let ev = SexticEvaluator::standard(f7).map_err(|e| e.to_string())?;
    let total = 7u64.pow(7);
    let bad = first_failure(total - 1, |n| {
        let mut k = n + 1;
        let coeffs: Vec<u64> = (0..7)
            .map(|_| {
                let d = k % 7;
                k /= 7;
                d
            })
            .collect();
        let s = BinaryForm::new(f7, coeffs).unwrap();
        class_mismatch(&ev, &s).then_some(())
    });
    if let Some((n, _)) = bad {
        return Err(format!("F7 mismatch at form index {}", n + 1));
    }
    let f1009 = fp(1009);
    let ev = SexticEvaluator::standard(f1009).unwrap();
    if let Some((i, _)) = first_failure(10_000, |i| {
        let mut r = rng(0x4000 + i);
        class_mismatch(&ev, &random_sextic(&f1009, &mut r, i)).then_some(())
    }) {
        return Err(format!("F1009 mismatch in case {i}"));
    }
    let ev = SexticEvaluator::standard(Rationals).unwrap();
    if let Some((i, _)) = first_failure(1000, |i| {
        let mut r = rng(0x5000 + i);
        class_mismatch(&ev, &random_sextic(&Rationals, &mut r, i)).then_some(())
    }) {
        return Err(format!("Q mismatch in case {i}"));
    }
    Ok(format!(
        "{} forms over F7, 10^4 over F1009, 10^3 over Q, 0 mismatches, {:.1}s",
        total - 1,
        start.elapsed().as_secs_f64()
    ))
}

// ---------------------------------------------------------------- 5

fn nullcone_mismatch<F: Field>(pe: &PairEvaluator<F>, p: &CubicPair<F>) -> bool {
    let nc = pe.null_cone(p).unwrap();
    nc.member != nc.degenerate()
}

fn random_cubic_pair<F: Field>(f: &F, r: &mut ChaCha8Rng, i: u64) -> CubicPair<F> {
    let cubic = |r: &mut ChaCha8Rng, shape: &[usize]| {
        let mut pts: Vec<ProjPoint<F::Elem>> = Vec::new();
        for &m in shape {
            pts.extend(std::iter::repeat_n(ProjPoint::random(f, r), m));
        }
        BinaryForm::from_roots(f.clone(), &pts).unwrap()
    };
    match i % 4 {
        0 => CubicPair::new(BinaryForm::random(f.clone(), 3, r), BinaryForm::random(f.clone(), 3, r)).unwrap(),
        // share a root so that multiplicities pile up in f g
        1 => {
            let t = ProjPoint::random(f, r);
            let a = BinaryForm::from_roots(f.clone(), &[t.clone(), t.clone(), ProjPoint::random(f, r)]).unwrap();
            let b = BinaryForm::from_roots(f.clone(), &[t.clone(), ProjPoint::random(f, r), ProjPoint::random(f, r)]).unwrap();
            CubicPair::new(a, b).unwrap()
        }
        2 => CubicPair::new(cubic(r, &[3]), cubic(r, &[2, 1])).unwrap(),
        _ => CubicPair::new(cubic(r, &[1, 1, 1]), BinaryForm::zero(f.clone(), 3)).unwrap(),
    }
}

fn criterion_5() -> Outcome {
    let f101 = fp(101);
    let pe = PairEvaluator::new(f101).unwrap();
    if let Some((i, _)) = first_failure(100_000, |i| {
        let mut r = rng(0x6000 + i);
        nullcone_mismatch(&pe, &random_cubic_pair(&f101, &mut r, i)).then_some(())
    }) {
        return Err(format!("F101 mismatch in case {i}"));
    }
    let f5 = fp(5);
    let pe = PairEvaluator::new(f5).unwrap();
    let cubic = |n: u64| {
        let c: Vec<u64> = (0..4).map(|k| (n / 5u64.pow(k)) % 5).collect();
        BinaryForm::new(f5, c).unwrap()
    };
    let members = std::sync::atomic::AtomicU64::new(0);
    if let Some((n, _)) = first_failure(625 * 625, |n| {
        let p = CubicPair::new(cubic(n / 625), cubic(n % 625)).unwrap();
        let nc = pe.null_cone(&p).unwrap();
        if nc.member {
            members.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        (nc.member != nc.degenerate()).then_some(())
    }) {
        return Err(format!("F5 mismatch at pair index {n}"));
    }
    Ok(format!(
        "10^5 pairs over F101 and all 390625 over F5 ({} null-cone members), 0 mismatches",
        members.into_inner()
    ))
}

// ---------------------------------------------------------------- 6

fn sextic_orbit_agreement<F: Field>(field: F, seed: u64) -> Result<(), String> {
    let ev = SexticEvaluator::standard(field.clone()).map_err(|e| e.to_string())?;
    let f = &field;
    let mut r = rng(seed);
    let mut done = 0;
    while done < 500 {
        let s = BinaryForm::random(f.clone(), 6, &mut r);
        if f.is_zero(&ev.invariants(&s).unwrap().i10) {
            continue;
        }
        let m = Matrix2::random_gl2(f, &mut r);
        let g = s.act(&m).unwrap().scale(&f.random_nonzero(&mut r));
        check(ev.conjugate(&s, &g).unwrap(), || format!("(f, f∘M) rejected over {:?}", f.spec()))?;
        done += 1;
    }
    let pe = PairEvaluator::new(field.clone()).unwrap();
    let mut done = 0;
    while done < 500 {
        let p = CubicPair::new(BinaryForm::random(f.clone(), 3, &mut r), BinaryForm::random(f.clone(), 3, &mut r)).unwrap();
        let inv = pe.invariants(&p).unwrap();
        if f.is_zero(&inv.r) || f.is_zero(&inv.d) {
            continue;
        }
        let gamma = GammaElement { scale: f.random_nonzero(&mut r), swapped: r.gen() };
        let q = gamma_act(&gamma, &p.act(&Matrix2::random_gl2(f, &mut r)).unwrap()).unwrap();
        check(pe.conjugate(&p, &q).unwrap(), || format!("(p, γ·p∘M) rejected over {:?}", f.spec()))?;
        done += 1;
    }
    for k in 0..200 {
        let c = CTuple::random(f, &mut r);
        let c2 = if k % 2 == 0 {
            config::s6_apply(f, &Permutation::random(&mut r), &c)
        } else {
            CTuple::random(f, &mut r)
        };
        let oracle = config::orbit_conjugate_oracle(f, &c, &c2, OrbitGroup::S6);
        let decider = ev.conjugate(&ctuple_sextic(f.clone(), &c), &ctuple_sextic(f.clone(), &c2)).unwrap();
        check(oracle == decider, || format!("S6 oracle {oracle} vs decider {decider} over {:?}", f.spec()))?;
        let c3 = if k % 2 == 0 {
            let w = OrbitGroup::Wreath.generators();
            let mut t = c.clone();
            for _ in 0..r.gen_range(1..8) {
                t = config::s6_apply(f, &w[r.gen_range(0..w.len())], &t);
            }
            t
        } else {
            c2.clone()
        };
        let oracle = config::orbit_conjugate_oracle(f, &c, &c3, OrbitGroup::Wreath);
        let decider = pe
            .conjugate(&ctuple_pair(f.clone(), &c).unwrap(), &ctuple_pair(f.clone(), &c3).unwrap())
            .unwrap();
        check(oracle == decider, || format!("wreath oracle {oracle} vs decider {decider} over {:?}", f.spec()))?;
    }
    Ok(())
}

fn all_tuples(f: &PrimeField) -> Vec<CTuple<u64>> {
    let p = f.modulus();
    let mut out = Vec::new();
    for a in 2..p {
        for b in 2..p {
            for c in 2..p {
                if let Ok(t) = CTuple::new(f, [a, b, c]) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    sextic_orbit_agreement(Rationals, 61)?;
    sextic_orbit_agreement(fp(1009), 62)?;
    let f7 = fp(7);
    let ev = SexticEvaluator::standard(f7).unwrap();
    let pe = PairEvaluator::new(f7).unwrap();
    let tuples = all_tuples(&f7);
    let n = tuples.len() as u64;
    let counts = std::sync::Mutex::new([0u32; 4]);
    if let Some((i, msg)) = first_failure(n * n, |i| {
        let (c, c2) = (&tuples[(i / n) as usize], &tuples[(i % n) as usize]);
        let (s, s2) = (ctuple_sextic(f7, c), ctuple_sextic(f7, c2));
        let decided = ev.conjugate(&s, &s2).unwrap();
        let witness = config::exhaustive_matrix_search(&s, &s2).unwrap().is_some();
        let (p, p2) = (ctuple_pair(f7, c).unwrap(), ctuple_pair(f7, c2).unwrap());
        let pdecided = pe.conjugate(&p, &p2).unwrap();
        let pwitness = config::exhaustive_pair_search(&p, &p2).unwrap().is_some();
        let mut k = counts.lock().unwrap();
        k[0] += (!decided) as u32;
        k[1] += decided as u32;
        k[2] += (!pdecided) as u32;
        k[3] += pdecided as u32;
        if !decided && witness {
            return Some("sextic decider false but a witness exists");
        }
        if !pdecided && pwitness {
            return Some("pair decider false but a witness exists");
        }
        None
    }) {
        return Err(format!("F7 tuple pair {i}: {msg}"));
    }
    let k = counts.into_inner().unwrap();
    // split sextics over F7 are all equivalent, so also sweep general forms
    let general = std::sync::Mutex::new([0u32; 2]);
    if let Some((i, msg)) = first_failure(600, |i| {
        let mut r = rng(0x6600 + i);
        let s = loop {
            let s = BinaryForm::random(f7, 6, &mut r);
            if ev.invariants(&s).unwrap().i10 != 0 {
                break s;
            }
        };
        let s2 = if i % 3 == 0 {
            s.act(&Matrix2::random_gl2(&f7, &mut r)).unwrap().scale(&f7.random_nonzero(&mut r))
        } else {
            loop {
                let g = BinaryForm::random(f7, 6, &mut r);
                if ev.invariants(&g).unwrap().i10 != 0 {
                    break g;
                }
            }
        };
        let decided = ev.conjugate(&s, &s2).unwrap();
        let witness = config::exhaustive_matrix_search(&s, &s2).unwrap().is_some();
        general.lock().unwrap()[decided as usize] += 1;
        if !decided && witness {
            return Some("decider false but a witness exists");
        }
        (i % 3 == 0 && !witness).then_some("constructed witness missed")
    }) {
        return Err(format!("F7 general sextic case {i}: {msg}"));
    }
    let g = general.into_inner().unwrap();
    Ok(format!(
        "500 (f, f∘M) and 200 tuple pairs per field over Q, F1009; F7 sweep of {} tuple pairs: sextic {}/{} and pair {}/{} decider-false/true; 600 general F7 sextic pairs {}/{}; no stray witnesses",
        n * n, k[0], k[1], k[2], k[3], g[0], g[1]
    ))
}

// ---------------------------------------------------------------- 7

fn random_roots(q: &Rationals, r: &mut ChaCha8Rng, k: u64) -> Vec<ProjPoint<BigRational>> {
    (0..6)
        .map(|i| {
            if k.is_multiple_of(3) && i == (k % 6) as usize {
                ProjPoint::infinity(q)
            } else {
                ProjPoint::new(q, q.random(r), q.random_nonzero(r)).unwrap()
            }
        })
        .collect()
}

fn single_ratio<F: Field>(f: &F, pairs: &[(F::Elem, F::Elem)]) -> Result<F::Elem, String> {
    let mut ratios = BTreeSet::new();
    for (a, b) in pairs {
        if f.is_zero(b) {
            if !f.is_zero(a) {
                return Err("nonzero over zero".into());
            }
            continue;
        }
        ratios.insert(f.div(a, b).unwrap());
    }
    match ratios.len() {
        1 => Ok(ratios.into_iter().next().unwrap()),
        n => Err(format!("{n} distinct ratios")),
    }
}

fn criterion_7() -> Outcome {
    let q = Rationals;
    let mut r = rng(7);
    let pe = PairEvaluator::new(q).unwrap();
    let mut rs = Vec::new();
    let mut ds = Vec::new();
    for _ in 0..500 {
        let p = CubicPair::new(BinaryForm::random(q, 3, &mut r), BinaryForm::random(q, 3, &mut r)).unwrap();
        let inv = pe.invariants(&p).unwrap();
        rs.push((inv.r, resultant(&p.f, &p.g)));
        let dd = q.mul(&discriminant(&p.f).unwrap(), &discriminant(&p.g).unwrap());
        ds.push((inv.d, dd));
    }
    let lr = single_ratio(&q, &rs).map_err(|e| format!("R vs resultant: {e}"))?;
    let ld = single_ratio(&q, &ds).map_err(|e| format!("D vs disc·disc: {e}"))?;
    let ev = SexticEvaluator::standard(q).unwrap();
    let bad = first_failure(500, |k| {
        let mut r = rng(0x7000 + k);
        let roots = random_roots(&q, &mut r, k);
        let u = q.random_nonzero(&mut r);
        let s = BinaryForm::from_roots(q, &roots).unwrap().scale(&u);
        let table = ev.invariants(&s).unwrap().to_array();
        let direct = invgen::invariants_from_roots(&q, &roots, Recipe::Artifact).unwrap();
        let prod = invgen::symmetrized_value(&q, RootSum::I10, &roots).unwrap();
        let u10 = q.pow(&u, 10);
        if table[3] != q.mul(&u10, &prod) {
            return Some("I10 vs root product");
        }
        for (k, deg) in [2u64, 4, 6, 10].into_iter().enumerate() {
            if table[k] != q.mul(&q.pow(&u, deg), &direct[k]) {
                return Some("table vs roots");
            }
        }
        None
    });
    if let Some((k, what)) = bad {
        return Err(format!("{what} on split sextic {k}"));
    }
    Ok(format!(
        "R = {} · resultant, D = {} · disc(f)disc(g) on 500 pairs; I10 and all tables match root formulas on 500 split sextics",
        q.format(&lr),
        q.format(&ld)
    ))
}

// ---------------------------------------------------------------- 8

fn legal_tuples(weights: impl Fn([u32; 4]) -> bool) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..=10 {
        for b in 0..=10 {
            for c in 0..=10 {
                for d in 0..=10 {
                    let t = [a, b, c, d];
                    if t != [0; 4] && weights(t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let q = Rationals;
    let mut r = rng(8);
    let pow = |x: &BigRational, e: u32| q.pow(x, e as u64);
    let u_legal = legal_tuples(|[a, b, c, d]| a + 2 * b + 3 * c == 5 * d);
    let v_legal = legal_tuples(|[a, b, c, d]| a + 2 * b == 3 * c + 4 * d);
    for _ in 0..200 {
        let [a, b, c, d] = u_legal[r.gen_range(0..u_legal.len())];
        let idx = sextic::decompose_u_monomial(a, b, c, d).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let v: [BigRational; 4] = std::array::from_fn(|_| q.random_nonzero(&mut r));
            let inv = SexticInvariants::new(q, v.clone());
            let u = sextic::u_invariants(&inv).unwrap();
            let product = idx.iter().fold(q.one(), |acc, &k| q.mul(&acc, &u[k - 1]));
            let mono = q.div(&q.mul(&q.mul(&pow(&v[0], a), &pow(&v[1], b)), &pow(&v[2], c)), &pow(&v[3], d)).unwrap();
            check(product == mono, || format!("U decomposition of {:?}", [a, b, c, d]))?;
        }
        let [a, b, c, d] = v_legal[r.gen_range(0..v_legal.len())];
        let idx = pair::decompose_v_monomial(a, b, c, d).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let v: [BigRational; 4] = std::array::from_fn(|_| q.random_nonzero(&mut r));
            let inv = pair::PairInvariants::new(q, v.clone());
            let vv = pair::v_invariants(&inv).unwrap();
            let product = idx.iter().fold(q.one(), |acc, &k| q.mul(&acc, &vv[k - 1]));
            let mono = q.div(&q.mul(&pow(&v[0], a), &pow(&v[1], b)), &q.mul(&pow(&v[2], c), &pow(&v[3], d))).unwrap();
            check(product == mono, || format!("V decomposition of {:?}", [a, b, c, d]))?;
        }
    }
    Ok(format!(
        "200 U tuples (of {}) and 200 V tuples (of {}) with entries <= 10, 20 vectors each",
        u_legal.len(),
        v_legal.len()
    ))
}

// ---------------------------------------------------------------- 9

fn rank(f: &Rationals, mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut row = 0;
    for col in 0..cols {
        let Some(piv) = (row..m.len()).find(|&i| !f.is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(row, piv);
        let inv = f.inv(&m[row][col]).unwrap();
        for i in 0..m.len() {
            if i != row && !f.is_zero(&m[i][col]) {
                let factor = f.mul(&m[i][col], &inv);
                for j in col..cols {
                    let t = f.mul(&factor, &m[row][j]);
                    m[i][j] = f.sub(&m[i][j], &t);
                }
            }
        }
        row += 1;
    }
    row
}

fn criterion_9() -> Outcome {
    let q = Rationals;
    let mut r = rng(9);
    let c = CTuple::random(&q, &mut r);
    let s6 = config::s6_orbit(&q, &c);
    let wr = config::wreath_orbit(&q, &c);
    check(s6.len() == 720 && wr.len() == 72, || format!("orbit sizes {} and {}", s6.len(), wr.len()))?;
    let ev = SexticEvaluator::standard(q).unwrap();
    let u_of = |t: &CTuple<BigRational>| sextic::u_invariants(&ev.invariants(&ctuple_sextic(q, t)).unwrap()).unwrap();
    let u0 = u_of(&c);
    let distinct_u = s6.par_iter().filter(|t| u_of(t) != u0).count();
    check(distinct_u == 0, || format!("{distinct_u} S6 orbit members change U"))?;
    let v_of = |t: &CTuple<BigRational>| pair::v_invariants(&pair::pair_invariants(&ctuple_pair(q, t).unwrap()).unwrap()).unwrap();
    let v0 = v_of(&c);
    let distinct_v = wr.iter().filter(|t| v_of(t) != v0).count();
    check(distinct_v == 0, || format!("{distinct_v} wreath orbit members change V"))?;
    let rows: Vec<Vec<BigRational>> = (0..30)
        .map(|_| {
            let s = BinaryForm::random(q, 6, &mut r);
            let [t1, t2, t3] = sextic::t_invariants(&ev.invariants(&s).unwrap()).unwrap();
            let t = [t1, t2, t3];
            let mut row = vec![q.one(), t[0].clone(), t[1].clone(), t[2].clone()];
            for i in 0..3 {
                for j in i..3 {
                    row.push(q.mul(&t[i], &t[j]));
                }
            }
            row
        })
        .collect();
    let rk = rank(&q, rows);
    check(rk == 10, || format!("degree-2 monomials in T have rank {rk} < 10"))?;
    Ok("orbit sizes 720 and 72; U constant on the S6 orbit, V on the wreath orbit; T rank 10/10 on 30 samples".into())
}

// ---------------------------------------------------------------- 10

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

fn cli(tables: &Path, args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_invario"))
        .arg("--tables")
        .arg(tables)
        .args(args)
        .output()
        .expect("run invario");
    out.stdout
}

fn read_dir_bytes(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap())
        })
        .collect();
    files.sort();
    files
}

fn criterion_10() -> Outcome {
    let (a, b) = (scratch("accept-tables-a"), scratch("accept-tables-b"));
    cli(&a, &["gen-tables"]);
    cli(&b, &["gen-tables"]);
    let (fa, fb) = (read_dir_bytes(&a), read_dir_bytes(&b));
    check(!fa.is_empty() && fa == fb, || "gen-tables caches differ".into())?;
    let in_memory = TableSet::read_cache(&a).map_err(|e| e.to_string())?.0;
    let fresh = invgen::generate_sextic_tables().unwrap();
    check(
        in_memory.iter().zip(fresh.iter()).all(|(x, y)| x.to_text() == y.to_text()),
        || "in-process generation differs from the cache".into(),
    )?;
    let commands: Vec<Vec<&str>> = vec![
        vec!["verify-tables"],
        vec!["sextic", "invariants", "x^3*y^3"],
        vec!["sextic", "invariants", "--field", "fp:1009", "--coeffs", "1,2,3,4,5,6,7"],
        vec!["sextic", "classify", "x^4*y^2 + y^6"],
        vec!["sextic", "conjugate", "--field", "fp:1009", "x^6 + 3*x*y^5 + y^6", "x^6 + 2*x^5*y + 7*y^6"],
        vec!["sextic", "from-roots", "--roots", "0,1,inf,2,3,4"],
        vec!["sextic", "jform", "2,3,5"],
        vec!["pair", "invariants", "x^3", "y^3"],
        vec!["pair", "conjugate", "x^3 + y^3", "x^2*y", "x^3 - y^3", "x*y^2"],
        vec!["pair", "nullcone", "--roots", "0,0,1", "0,0,inf"],
        vec!["pair", "threesets", "0,1,inf", "2,3,4", "0,1,inf", "2,3,5"],
        vec!["orbit", "s6", "2,3,5"],
        vec!["orbit", "wreath", "--field", "fp:1009", "2,3,5"],
        vec!["orbit", "member", "--group", "wreath", "2,3,5", "3,2,5"],
        vec!["search", "exhaustive", "--field", "fp:7", "x^6 + x*y^5 + y^6", "x^6 + 2*x*y^5 + y^6"],
        vec!["search", "exhaustive", "--pair", "--field", "fp:7", "x^3 + y^3", "x*y^2", "x^3 + 2*y^3", "x*y^2"],
        vec!["genus2", "iso", "x^6 - y^6", "x^5*y - x*y^5"],
        vec!["sextic", "conjugate", "x^6", "y^6"],
    ];
    for c in &commands {
        let first = cli(&a, c);
        check(!first.is_empty() && first == cli(&a, c), || format!("`{}` is not deterministic", c.join(" ")))?;
    }
    Ok(format!("two gen-tables caches byte-identical; {} commands byte-identical across runs", commands.len()))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "table calibration", criterion_1),
        (2, "J10 factorization", criterion_2),
        (3, "invariance suite", criterion_3),
        (4, "classifier vs oracle", criterion_4),
        (5, "pair null cone", criterion_5),
        (6, "conjugacy deciders", criterion_6),
        (7, "cross-oracle identities", criterion_7),
        (8, "decompositions", criterion_8),
        (9, "orbits and independence", criterion_9),
        (10, "determinism", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.contains(&n);
        match &outcome {
            Ok(d) => println!("criterion {n:>2} [{name}]: PASS ({d}) [{secs:.1}s]"),
            Err(d) => println!(
                "criterion {n:>2} [{name}]: FAIL ({d}) [{secs:.1}s]{}",
                if known { " [known, see ledger]" } else { "" }
            ),
        }
        if outcome.is_ok() == known {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
