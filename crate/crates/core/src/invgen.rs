//! Coefficient-form tables for the sextic invariants.
//!
//! Root-space sums are evaluated on split forms and the coefficient form is
//! recovered by interpolation over the isobaric monomials of the right
//! degree and weight. The linear systems are solved modulo large primes and
//! lifted to integers by CRT; the result is then checked exactly over Q on
//! held-out forms with points at infinity and non-unit `y` coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{is_prime, symmetric_residue, Field, PrimeField, Rationals};
use crate::form::{bracket, BinaryForm, ProjPoint};
use crate::multipoly::{MultiPoly, RatioCheck};
use crate::reference;

pub const SEXTIC_VARS: [&str; 7] = ["a0", "a1", "a2", "a3", "a4", "a5", "a6"];
const SEXTIC_WEIGHTS: [u32; 7] = [0, 1, 2, 3, 4, 5, 6];
pub const CACHE_VERSION: &str = "v1";
pub const CALIBRATION_FILE: &str = "calibration.txt";

/// Root-space building blocks, with `D_ij = x_i y_j - x_j y_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootSum {
    /// Sum over the 15 perfect matchings of `D² D² D²`.
    I2,
    /// Sum over the 10 splits into two triangles of the squared triangle products.
    B,
    /// Sum over the 60 labelled prisms: two triangles plus a matching between them.
    C,
    /// `∏_{i<j} D_ij²`.
    I10,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableName {
    I2,
    I4,
    I6,
    I10,
    B,
    C,
}

impl TableName {
    pub const ALL: [TableName; 6] = [
        TableName::I2,
        TableName::I4,
        TableName::I6,
        TableName::I10,
        TableName::B,
        TableName::C,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableName::I2 => "I2",
            TableName::I4 => "I4",
            TableName::I6 => "I6",
            TableName::I10 => "I10",
            TableName::B => "B",
            TableName::C => "C",
        }
    }

    pub fn degree(self) -> u32 {
        match self {
            TableName::I2 => 2,
            TableName::I4 | TableName::B => 4,
            TableName::I6 | TableName::C => 6,
            TableName::I10 => 10,
        }
    }

    pub fn weight(self) -> u32 {
        3 * self.degree()
    }

    pub fn file_name(self) -> String {
        format!("{}.tbl", self.as_str())
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableName::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Table(format!("unknown table `{s}`")))
    }
}

/// How `I4` and `I6` are assembled from `I2`, `B` and `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `I4 = 9 I2² - 320 B`, `I6 = I2³/27 + (80/27) I2 B - (200/9) C`;
    /// agrees with the printed closed forms up to one constant each.
    Artifact,
    /// `I4 = 4 I2² - B`, `I6 = 8 I2³ - 160 I2 I4 - C`, read verbatim.
    Literal,
}

impl Recipe {
    /// `(I4, I6)` from the building blocks.
    pub fn combine<F: Field>(self, f: &F, s: &F::Elem, b: &F::Elem, c: &F::Elem) -> (F::Elem, F::Elem) {
        let q = |n: i64, d: i64| {
            f.from_rational(&BigRational::new(n.into(), d.into()))
                .expect("denominators are units in admissible fields")
        };
        let s2 = f.mul(s, s);
        let s3 = f.mul(&s2, s);
        match self {
            Recipe::Artifact => {
                let i4 = f.sub(&f.mul(&q(9, 1), &s2), &f.mul(&q(320, 1), b));
                let i6 = f.add(
                    &f.mul(&q(1, 27), &s3),
                    &f.sub(&f.mul(&q(80, 27), &f.mul(s, b)), &f.mul(&q(200, 9), c)),
                );
                (i4, i6)
            }
            Recipe::Literal => {
                let i4 = f.sub(&f.mul(&q(4, 1), &s2), b);
                let i6 = f.sub(
                    &f.sub(&f.mul(&q(8, 1), &s3), &f.mul(&q(160, 1), &f.mul(s, &i4))),
                    c,
                );
                (i4, i6)
            }
        }
    }

    fn combine_polys(self, s: &MultiPoly<Rationals>, b: &MultiPoly<Rationals>, c: &MultiPoly<Rationals>) -> [MultiPoly<Rationals>; 2] {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let s2 = s.mul(s);
        let s3 = s2.mul(s);
        match self {
            Recipe::Artifact => {
                let i4 = s2.scale(&q(9, 1)).sub(&b.scale(&q(320, 1)));
                let i6 = s3
                    .scale(&q(1, 27))
                    .add(&s.mul(b).scale(&q(80, 27)))
                    .sub(&c.scale(&q(200, 9)));
                [i4, i6]
            }
            Recipe::Literal => {
                let i4 = s2.scale(&q(4, 1)).sub(b);
                let i6 = s3.scale(&q(8, 1)).sub(&s.mul(&i4).scale(&q(160, 1))).sub(c);
                [i4, i6]
            }
        }
    }
}

fn perfect_matchings() -> &'static Vec<[(usize, usize); 3]> {
    static CELL: OnceLock<Vec<[(usize, usize); 3]>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for j in 1..6 {
            let rest: Vec<usize> = (1..6).filter(|&k| k != j).collect();
            for k in 1..4 {
                let others: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != rest[k]).collect();
                out.push([(0, j), (rest[0], rest[k]), (others[0], others[1])]);
            }
        }
        out
    })
}

/// The 10 unordered splits into two triangles, first triangle containing 0.
fn triangle_splits() -> &'static Vec<([usize; 3], [usize; 3])> {
    static CELL: OnceLock<Vec<([usize; 3], [usize; 3])>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for i in 1..6 {
            for j in i + 1..6 {
                let rest: Vec<usize> = (1..6).filter(|&k| k != i && k != j).collect();
                out.push(([0, i, j], [rest[0], rest[1], rest[2]]));
            }
        }
        out
    })
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Exact value of a root-space sum on six points.
pub fn symmetrized_value<F: Field>(field: &F, kind: RootSum, roots: &[ProjPoint<F::Elem>]) -> Result<F::Elem> {
    if roots.len() != 6 {
        return Err(Error::WrongRootCount {
            expected: 6,
            found: roots.len(),
        });
    }
    let f = field;
    let mut d2 = vec![vec![f.zero(); 6]; 6];
    for i in 0..6 {
        for j in i + 1..6 {
            let d = bracket(f, &roots[i], &roots[j]);
            let sq = f.mul(&d, &d);
            d2[i][j] = sq.clone();
            d2[j][i] = sq;
        }
    }
    let prod = |pairs: &mut dyn Iterator<Item = (usize, usize)>| {
        pairs.fold(f.one(), |acc, (i, j)| f.mul(&acc, &d2[i][j]))
    };
    let tri = |t: &[usize; 3]| {
        f.mul(&f.mul(&d2[t[0]][t[1]], &d2[t[1]][t[2]]), &d2[t[2]][t[0]])
    };
    let value = match kind {
        RootSum::I2 => perfect_matchings().iter().fold(f.zero(), |acc, m| {
            f.add(&acc, &prod(&mut m.iter().copied()))
        }),
        RootSum::I10 => prod(&mut (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j)))),
        RootSum::B => triangle_splits()
            .iter()
            .fold(f.zero(), |acc, (t, u)| f.add(&acc, &f.mul(&tri(t), &tri(u)))),
        RootSum::C => triangle_splits().iter().fold(f.zero(), |acc, (t, u)| {
            let base = f.mul(&tri(t), &tri(u));
            let links = PERMS3.iter().fold(f.zero(), |a, s| {
                let l = prod(&mut (0..3).map(|k| (t[k], u[s[k]])));
                f.add(&a, &l)
            });
            f.add(&acc, &f.mul(&base, &links))
        }),
    };
    Ok(value)
}

/// `(I2, I4, I6, I10)` straight from the roots.
pub fn invariants_from_roots<F: Field>(
    field: &F,
    roots: &[ProjPoint<F::Elem>],
    recipe: Recipe,
) -> Result<[F::Elem; 4]> {
    let s = symmetrized_value(field, RootSum::I2, roots)?;
    let b = symmetrized_value(field, RootSum::B, roots)?;
    let c = symmetrized_value(field, RootSum::C, roots)?;
    let i10 = symmetrized_value(field, RootSum::I10, roots)?;
    let (i4, i6) = recipe.combine(field, &s, &b, &c);
    Ok([s, i4, i6, i10])
}

/// Exponent vectors in `a0..a6` of total degree `deg` and weight `weight`, ascending.
pub fn isobaric_monomials(deg: u32, weight: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, deg: u32, weight: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == 6 {
            if weight == 6 * deg {
                cur.push(deg);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for e in 0..=deg {
            if i as u32 * e > weight {
                break;
            }
            cur.push(e);
            rec(i + 1, deg - e, weight - i as u32 * e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, deg, weight, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Primes just below 2^61, descending.
fn interpolation_primes() -> impl Iterator<Item = u64> {
    ((1u64 << 60)..(1u64 << 61)).rev().filter(|&n| is_prime(n))
}

fn solve_mod(f: &PrimeField, mut rows: Vec<Vec<u64>>, ncols: usize) -> Result<Vec<u64>> {
    // rows are augmented: last entry is the right-hand side
    let nrows = rows.len();
    let mut r = 0;
    for col in 0..ncols {
        let piv = (r..nrows)
            .find(|&i| rows[i][col] != 0)
            .ok_or_else(|| Error::Table("interpolation system is singular".into()))?;
        rows.swap(r, piv);
        let inv = f.inv(&rows[r][col]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        rows.par_iter_mut().enumerate().for_each(|(i, row)| {
            if i != r && row[col] != 0 {
                let k = row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = f.sub(x, &f.mul(&k, p));
                }
            }
        });
        r += 1;
    }
    if rows[ncols..].iter().any(|row| row[ncols] != 0) {
        return Err(Error::Table("interpolation system is inconsistent".into()));
    }
    Ok(rows[..ncols].iter().map(|row| row[ncols]).collect())
}

fn interpolate_mod(kind: RootSum, monos: &[Vec<u32>], p: u64, seed: u64) -> Result<Vec<u64>> {
    let f = PrimeField::new(p)?;
    let n = monos.len() + 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<Vec<u64>> = (0..n)
        .map(|_| (0..6).map(|_| rng.gen_range(0..p)).collect())
        .collect();
    let rows: Vec<Vec<u64>> = samples
        .par_iter()
        .map(|ts| {
            let roots: Vec<_> = ts.iter().map(|&t| ProjPoint::finite(&f, t)).collect();
            let form = BinaryForm::from_roots(f, &roots).expect("six roots");
            let a = form.coeffs();
            let mut row: Vec<u64> = monos
                .iter()
                .map(|e| {
                    e.iter()
                        .enumerate()
                        .fold(1, |acc, (j, &k)| f.mul(&acc, &f.pow(&a[j], k as u64)))
                })
                .collect();
            row.push(symmetrized_value(&f, kind, &roots).expect("six roots"));
            row
        })
        .collect();
    solve_mod(&f, rows, monos.len())
}

/// Integer coefficient form of a root-space sum.
pub fn generate_root_sum_table(kind: RootSum) -> Result<MultiPoly<Rationals>> {
    let deg = match kind {
        RootSum::I2 => 2,
        RootSum::B => 4,
        RootSum::C => 6,
        RootSum::I10 => 10,
    };
    let monos = isobaric_monomials(deg, 3 * deg);
    let mut modulus = BigInt::one();
    let mut residues = vec![BigInt::zero(); monos.len()];
    let mut previous: Option<Vec<BigInt>> = None;
    for (k, p) in interpolation_primes().take(8).enumerate() {
        let sol = interpolate_mod(kind, &monos, p, 0x5eed_0000 + 97 * deg as u64 + k as u64)?;
        let pb = BigInt::from(p);
        // CRT: x = r (mod m), x = s (mod p)
        let inv_m = {
            let m_mod = PrimeField::new(p)?.from_bigint(&modulus);
            BigInt::from(PrimeField::new(p)?.inv(&m_mod).expect("coprime moduli"))
        };
        for (r, &s) in residues.iter_mut().zip(&sol) {
            let delta = (BigInt::from(s) - &*r) * &inv_m;
            let t = ((delta % &pb) + &pb) % &pb;
            *r += &modulus * t;
        }
        modulus *= &pb;
        let lifted: Vec<BigInt> = residues.iter().map(|r| symmetric_residue(r, &modulus)).collect();
        if previous.as_ref() == Some(&lifted) {
            let terms = monos
                .iter()
                .zip(&lifted)
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e.clone(), BigRational::from_integer(c.clone())));
            return Ok(MultiPoly::from_terms(Rationals, &SEXTIC_VARS, terms));
        }
        previous = Some(lifted);
    }
    Err(Error::Table("CRT lift did not stabilise".into()))
}

/// One coefficient-form invariant with integer coefficients in `a0..a6`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantTable {
    pub name: TableName,
    pub poly: MultiPoly<Rationals>,
}

impl InvariantTable {
    pub fn degree(&self) -> u32 {
        self.name.degree()
    }

    pub fn weight(&self) -> u32 {
        self.name.weight()
    }

    pub fn is_isobaric(&self) -> bool {
        self.poly
            .is_isobaric(&SEXTIC_WEIGHTS, self.degree(), self.weight())
    }

    /// Cache file contents.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "invario-tables {} {} degree={} weight={} field=integers\n",
            CACHE_VERSION,
            self.name,
            self.degree(),
            self.weight()
        );
        for (e, c) in self.poly.integer_terms() {
            let exps: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            s.push_str(&exps.join(" "));
            s.push(' ');
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: String| Error::Table(m);
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty table file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 6 || fields[0] != "invario-tables" {
            return Err(bad(format!("malformed header `{header}`")));
        }
        if fields[1] != CACHE_VERSION {
            return Err(bad(format!("unsupported cache version `{}`", fields[1])));
        }
        let name: TableName = fields[2].parse()?;
        let expect = [
            format!("degree={}", name.degree()),
            format!("weight={}", name.weight()),
            "field=integers".to_string(),
        ];
        if fields[3..] != expect {
            return Err(bad(format!("header does not match table {name}")));
        }
        let mut terms = Vec::new();
        let mut last: Option<Vec<u32>> = None;
        for (n, line) in lines.enumerate() {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 8 {
                return Err(bad(format!("{name}: line {} has {} fields", n + 2, parts.len())));
            }
            let e = parts[..7]
                .iter()
                .map(|x| x.parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad(format!("{name}: bad exponent on line {}", n + 2)))?;
            let c: BigInt = parts[7]
                .parse()
                .map_err(|_| bad(format!("{name}: bad coefficient on line {}", n + 2)))?;
            if c.is_zero() || last.as_ref().is_some_and(|l| *l >= e) {
                return Err(bad(format!("{name}: terms not canonical at line {}", n + 2)));
            }
            last = Some(e.clone());
            terms.push((e, BigRational::from_integer(c)));
        }
        let table = InvariantTable {
            name,
            poly: MultiPoly::from_terms(Rationals, &SEXTIC_VARS, terms),
        };
        if !table.is_isobaric() {
            return Err(bad(format!("{name}: a term is not isobaric")));
        }
        Ok(table)
    }
}

/// The six generated tables.
#[derive(Clone, Debug, PartialEq)]
pub struct TableSet {
    tables: BTreeMap<TableName, InvariantTable>,
}

impl TableSet {
    pub fn get(&self, name: TableName) -> &InvariantTable {
        &self.tables[&name]
    }

    pub fn poly(&self, name: TableName) -> &MultiPoly<Rationals> {
        &self.tables[&name].poly
    }

    pub fn iter(&self) -> impl Iterator<Item = &InvariantTable> {
        self.tables.values()
    }

    /// `I4`, `I6` rebuilt from `I2`, `B`, `C` under a recipe.
    pub fn recipe_polys(&self, recipe: Recipe) -> [MultiPoly<Rationals>; 2] {
        recipe.combine_polys(
            self.poly(TableName::I2),
            self.poly(TableName::B),
            self.poly(TableName::C),
        )
    }

    pub fn write_cache(&self, dir: &Path, report: &CalibrationReport) -> Result<()> {
        fs::create_dir_all(dir)?;
        for t in self.iter() {
            fs::write(dir.join(t.name.file_name()), t.to_text())?;
        }
        fs::write(dir.join(CALIBRATION_FILE), report.to_text())?;
        Ok(())
    }

    /// Read a cache without checking it against the calibration.
    pub fn read_cache(dir: &Path) -> Result<(TableSet, CalibrationReport)> {
        let mut tables = BTreeMap::new();
        for name in TableName::ALL {
            let path = dir.join(name.file_name());
            let text = fs::read_to_string(&path).map_err(|e| {
                Error::Table(format!("cannot read {}: {e}", path.display()))
            })?;
            let t = InvariantTable::from_text(&text)?;
            if t.name != name {
                return Err(Error::Table(format!("{} holds table {}", path.display(), t.name)));
            }
            tables.insert(name, t);
        }
        let path = dir.join(CALIBRATION_FILE);
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::Table(format!("cannot read {}: {e}", path.display())))?;
        Ok((TableSet { tables }, CalibrationReport::from_text(&text)?))
    }

    /// Read a cache and re-verify it: structure, round-trip against the
    /// root sums, and calibration constants equal to the stored report.
    pub fn load_verified(dir: &Path) -> Result<TableSet> {
        let (set, stored) = Self::read_cache(dir)?;
        set.check_round_trip(4, 0x10ad)?;
        let fresh = verify_tables(&set)?;
        if fresh != stored {
            return Err(Error::Table(
                "calibration constants differ from the stored report".into(),
            ));
        }
        Ok(set)
    }

    /// Evaluate every table on random split forms over Q, including points at
    /// infinity and non-unit `y`, and compare with the root sums.
    pub fn check_round_trip(&self, samples: usize, seed: u64) -> Result<()> {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..samples {
            let roots: Vec<ProjPoint<BigRational>> = (0..6)
                .map(|i| {
                    if k % 2 == 0 && i == k % 6 {
                        ProjPoint::infinity(&q)
                    } else {
                        ProjPoint::new(&q, q.random(&mut rng), q.random_nonzero(&mut rng))
                            .expect("nonzero y")
                    }
                })
                .collect();
            let form = BinaryForm::from_roots(q, &roots)?;
            let a = form.coeffs();
            let s = symmetrized_value(&q, RootSum::I2, &roots)?;
            let b = symmetrized_value(&q, RootSum::B, &roots)?;
            let c = symmetrized_value(&q, RootSum::C, &roots)?;
            let i10 = symmetrized_value(&q, RootSum::I10, &roots)?;
            let (i4, i6) = Recipe::Artifact.combine(&q, &s, &b, &c);
            let expect = [
                (TableName::I2, s),
                (TableName::I4, i4),
                (TableName::I6, i6),
                (TableName::I10, i10),
                (TableName::B, b),
                (TableName::C, c),
            ];
            for (name, v) in expect {
                if self.poly(name).eval(a) != v {
                    return Err(Error::Table(format!(
                        "table {name} disagrees with the root sum on a held-out sample"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Generate all six tables and verify them exactly on held-out samples.
pub fn generate_sextic_tables() -> Result<TableSet> {
    let kinds = [RootSum::I2, RootSum::B, RootSum::C, RootSum::I10];
    let polys = kinds
        .iter()
        .map(|&k| generate_root_sum_table(k))
        .collect::<Result<Vec<_>>>()?;
    let [s, b, c, i10]: [MultiPoly<Rationals>; 4] = polys.try_into().expect("four tables");
    let [i4, i6] = Recipe::Artifact.combine_polys(&s, &b, &c);
    if !i4.is_integral() || !i6.is_integral() {
        return Err(Error::Table("recipe produced non-integer coefficients".into()));
    }
    let mut tables = BTreeMap::new();
    for (name, poly) in [
        (TableName::I2, s),
        (TableName::I4, i4),
        (TableName::I6, i6),
        (TableName::I10, i10),
        (TableName::B, b),
        (TableName::C, c),
    ] {
        let t = InvariantTable { name, poly };
        if !t.is_isobaric() {
            return Err(Error::Table(format!("{name} is not isobaric")));
        }
        tables.insert(name, t);
    }
    let set = TableSet { tables };
    set.check_round_trip(12, 0xc0ffee)?;
    Ok(set)
}

/// Tables generated once per process.
pub fn standard_tables() -> &'static TableSet {
    static CELL: OnceLock<TableSet> = OnceLock::new();
    CELL.get_or_init(|| generate_sextic_tables().expect("table generation is deterministic and self-checking"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchStatus {
    Match,
    SupportMismatch,
    NonConstantRatio,
}

impl MatchStatus {
    fn as_str(&self) -> &'static str {
        match self {
            MatchStatus::Match => "match",
            MatchStatus::SupportMismatch => "support-mismatch",
            MatchStatus::NonConstantRatio => "non-constant-ratio",
        }
    }
}

/// One comparison between a table specialization and a printed polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationEntry {
    /// `I2@a0=0`, `I10@bform`, ...
    pub label: String,
    pub status: MatchStatus,
    /// `table = lambda * printed` when the status is `Match`.
    pub lambda: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationReport {
    pub entries: Vec<CalibrationEntry>,
}

impl CalibrationReport {
    pub fn entry(&self, label: &str) -> Option<&CalibrationEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn all_match(&self) -> bool {
        self.entries.iter().all(|e| e.status == MatchStatus::Match)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("invario-calibration {CACHE_VERSION}\n");
        for e in &self.entries {
            let lambda = e
                .lambda
                .as_ref()
                .map(|l| Rationals.format(l))
                .unwrap_or_else(|| "-".into());
            s.push_str(&format!("{} {} {}\n", e.label, e.status.as_str(), lambda));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Table(format!("calibration report: {m}"));
        let mut lines = text.lines();
        if lines.next() != Some(&format!("invario-calibration {CACHE_VERSION}")) {
            return Err(bad("bad header"));
        }
        let mut entries = Vec::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(bad("malformed line"));
            }
            let status = match parts[1] {
                "match" => MatchStatus::Match,
                "support-mismatch" => MatchStatus::SupportMismatch,
                "non-constant-ratio" => MatchStatus::NonConstantRatio,
                _ => return Err(bad("unknown status")),
            };
            let lambda = match parts[2] {
                "-" => None,
                t => Some(crate::field::parse_rational(t).ok_or_else(|| bad("bad constant"))?),
            };
            entries.push(CalibrationEntry {
                label: parts[0].to_string(),
                status,
                lambda,
            });
        }
        Ok(CalibrationReport { entries })
    }
}

/// Drop `a0` after setting it to zero.
pub fn specialize_a0_zero(p: &MultiPoly<Rationals>) -> MultiPoly<Rationals> {
    let terms = p
        .terms()
        .iter()
        .filter(|(e, _)| e[0] == 0)
        .map(|(e, c)| (e[1..].to_vec(), c.clone()));
    MultiPoly::from_terms(Rationals, &reference::A0_VARS, terms)
}

/// Substitute the coefficients of `XY(X-Y)(B0 X³ - B1 X²Y + B2 XY² - B3 Y³)`.
pub fn specialize_b_form(p: &MultiPoly<Rationals>) -> MultiPoly<Rationals> {
    let q = Rationals;
    let vars = reference::B_VARS;
    let b: Vec<_> = (0..4).map(|i| MultiPoly::var(q, &vars, i)).collect();
    let zero = MultiPoly::zero(q, &vars);
    let cubic = [b[0].clone(), b[1].neg(), b[2].clone(), b[3].neg()];
    // X²Y - XY² times the cubic
    let mut coeffs = vec![zero.clone(); 7];
    for (k, c) in cubic.iter().enumerate() {
        coeffs[k + 1] = coeffs[k + 1].add(c);
        coeffs[k + 2] = coeffs[k + 2].sub(c);
    }
    p.substitute(&coeffs)
}

fn compare(label: &str, table: &MultiPoly<Rationals>, printed: &MultiPoly<Rationals>) -> CalibrationEntry {
    let (status, lambda) = match table.ratio_to(printed) {
        RatioCheck::Constant(l) => (MatchStatus::Match, Some(l)),
        RatioCheck::SupportMismatch => (MatchStatus::SupportMismatch, None),
        RatioCheck::NonConstant => (MatchStatus::NonConstantRatio, None),
    };
    CalibrationEntry {
        label: label.to_string(),
        status,
        lambda,
    }
}

/// Compare the tables' specializations with the printed closed forms.
pub fn verify_tables(tables: &TableSet) -> Result<CalibrationReport> {
    for t in tables.iter() {
        if t.poly.is_zero() {
            return Err(Error::Table(format!("table {} is the zero polynomial", t.name)));
        }
    }
    let printed_a0 = reference::sextic_a0();
    let printed_j = reference::j_polys();
    let mut entries = Vec::new();
    for (k, name) in [TableName::I2, TableName::I4, TableName::I6].into_iter().enumerate() {
        let spec = specialize_a0_zero(tables.poly(name));
        entries.push(compare(&format!("{name}@a0=0"), &spec, &printed_a0[k]));
    }
    let names = [TableName::I2, TableName::I4, TableName::I6, TableName::I10];
    let specs: Vec<_> = names
        .par_iter()
        .map(|&n| specialize_b_form(tables.poly(n)))
        .collect();
    for (k, name) in names.into_iter().enumerate() {
        entries.push(compare(&format!("{name}@bform"), &specs[k], &printed_j[k]));
    }
    Ok(CalibrationReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(f: &Rationals, spec: &[Option<i64>]) -> Vec<ProjPoint<BigRational>> {
        spec.iter()
            .map(|s| match s {
                Some(t) => ProjPoint::finite(f, f.from_i64(*t)),
                None => ProjPoint::infinity(f),
            })
            .collect()
    }

    #[test]
    fn index_sets_have_expected_sizes() {
        assert_eq!(perfect_matchings().len(), 15);
        assert_eq!(triangle_splits().len(), 10);
        let mut seen = std::collections::BTreeSet::new();
        for m in perfect_matchings() {
            let mut v: Vec<_> = m.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            v.sort();
            assert!(seen.insert(v));
        }
    }

    #[test]
    fn root_sum_examples() {
        let q = Rationals;
        let r = pts(&q, &[None, None, None, Some(0), Some(0), Some(0)]);
        assert_eq!(symmetrized_value(&q, RootSum::I2, &r).unwrap(), q.from_i64(6));
        let r = pts(&q, &[Some(0), Some(1), None, Some(2), Some(3), Some(4)]);
        assert_eq!(symmetrized_value(&q, RootSum::I10, &r).unwrap(), q.from_i64(82944));
        let r = pts(&q, &[Some(0), Some(1), Some(1), Some(2), Some(3), Some(4)]);
        assert_eq!(symmetrized_value(&q, RootSum::I10, &r).unwrap(), q.zero());
        assert!(matches!(
            symmetrized_value(&q, RootSum::I2, &r[..5]),
            Err(Error::WrongRootCount { expected: 6, found: 5 })
        ));
    }

    #[test]
    fn candidate_counts() {
        let counts: Vec<usize> = [2, 4, 6, 10]
            .iter()
            .map(|&d| isobaric_monomials(d, 3 * d).len())
            .collect();
        assert_eq!(counts, vec![4, 18, 58, 338]);
        let i2: Vec<Vec<u32>> = isobaric_monomials(2, 6);
        assert_eq!(
            i2,
            vec![
                vec![0, 0, 0, 2, 0, 0, 0],
                vec![0, 0, 1, 0, 1, 0, 0],
                vec![0, 1, 0, 0, 0, 1, 0],
                vec![1, 0, 0, 0, 0, 0, 1],
            ]
        );
    }

    #[test]
    fn i2_table_support() {
        let t = standard_tables().poly(TableName::I2);
        let support: Vec<_> = t.terms().keys().cloned().collect();
        assert_eq!(support, isobaric_monomials(2, 6));
    }

    #[test]
    fn cache_text_round_trip() {
        let set = standard_tables();
        for t in set.iter() {
            let text = t.to_text();
            assert_eq!(InvariantTable::from_text(&text).unwrap(), *t);
        }
        let bad = "invario-tables v2 I2 degree=2 weight=6 field=integers\n";
        assert!(InvariantTable::from_text(bad).is_err());
        let bad = "invario-tables v1 I2 degree=2 weight=6 field=integers\n0 1 0 0 0 0 0 5\n";
        assert!(InvariantTable::from_text(bad).is_err());
    }

    #[test]
    fn literal_recipe_is_not_a_constant_multiple_of_the_printed_forms() {
        let set = standard_tables();
        let [i4, _] = set.recipe_polys(Recipe::Literal);
        let spec = specialize_a0_zero(&i4);
        assert_eq!(spec.ratio_to(&reference::sextic_a0()[1]), RatioCheck::NonConstant);
    }

    #[test]
    fn report_text_round_trip() {
        let report = verify_tables(standard_tables()).unwrap();
        assert_eq!(CalibrationReport::from_text(&report.to_text()).unwrap(), report);
    }
}
