use std::fs;
use std::path::Path;

use invario_core::config::{self, CTuple, OrbitGroup};
use invario_core::invgen::{self, CalibrationReport, TableName, TableSet};
use invario_core::pair::{self, CubicPair, PairEvaluator, PairInvariants};
use invario_core::parse::{format_coeff_list, format_form, parse_coeff_list, parse_form, parse_points, parse_scalars};
use invario_core::resultant::squarefree_profile;
use invario_core::sextic::{self, SexticClass, SexticEvaluator, SexticInvariants};
use invario_core::{with_field, BinaryForm, Error, Field, FieldSpec, PrimeField};
use serde_json::{json, Value};

use crate::render::CliError;
use crate::InputMode;

type Res = Result<(Value, Value), CliError>;

/// Inline text, or the contents of the file it names.
fn read_arg(arg: &str) -> Result<String, CliError> {
    let p = Path::new(arg);
    if p.is_file() {
        Ok(fs::read_to_string(p).map_err(Error::from)?.trim().to_string())
    } else {
        Ok(arg.to_string())
    }
}

fn read_form<F: Field>(field: &F, mode: InputMode, arg: &str, degree: usize) -> Result<BinaryForm<F>, CliError> {
    let text = read_arg(arg)?;
    let form = if mode.coeffs {
        parse_coeff_list(&text, field.clone())?
    } else if mode.roots {
        BinaryForm::from_roots(field.clone(), &parse_points(&text, field)?)?
    } else {
        parse_form(&text, degree, field.clone())?
    };
    form.require_degree(degree)?;
    Ok(form)
}

fn elems<F: Field>(f: &F, xs: &[F::Elem]) -> Value {
    xs.iter().map(|x| Value::String(f.format(x))).collect()
}

fn form_json<F: Field>(form: &BinaryForm<F>) -> Value {
    json!({ "text": format_form(form), "coeffs": format_coeff_list(form) })
}

fn tuple<F: Field>(field: &F, text: &str) -> Result<CTuple<F::Elem>, CliError> {
    let v = parse_scalars(&read_arg(text)?, field)?;
    let c: [F::Elem; 3] = v
        .try_into()
        .map_err(|_| Error::InvalidTuple("expected three coordinates c1,c2,c3".into()))?;
    Ok(CTuple::new(field, c)?)
}

pub fn load_tables(dir: &Path) -> Result<TableSet, CliError> {
    if !dir.join(TableName::I2.file_name()).is_file() {
        return Err(CliError::TablesMissing(dir.to_path_buf()));
    }
    Ok(TableSet::load_verified(dir)?)
}

fn tables_json(tables: &TableSet, report: &CalibrationReport) -> Value {
    let list: Vec<Value> = tables
        .iter()
        .map(|t| {
            json!({
                "name": t.name.as_str(),
                "degree": t.degree(),
                "weight": t.weight(),
                "terms": t.poly.terms().len(),
            })
        })
        .collect();
    let cal: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "label": e.label,
                "status": format!("{:?}", e.status),
                "lambda": e.lambda.as_ref().map(|l| l.to_string()),
            })
        })
        .collect();
    json!({ "tables": list, "calibration": cal, "all_match": report.all_match() })
}

pub fn gen_tables(dir: &Path) -> Res {
    let tables = invgen::generate_sextic_tables()?;
    let report = invgen::verify_tables(&tables)?;
    tables.write_cache(dir, &report)?;
    let mut result = tables_json(&tables, &report);
    result["written"] = json!(true);
    Ok((json!({ "dir": dir.display().to_string() }), result))
}

pub fn verify_tables(dir: &Path, tables: &TableSet) -> Res {
    let report = invgen::verify_tables(tables)?;
    let mut result = tables_json(tables, &report);
    result["verified"] = json!(true);
    Ok((json!({ "dir": dir.display().to_string() }), result))
}

fn sextic_json<F: Field>(f: &F, inv: &SexticInvariants<F>, class: SexticClass) -> Value {
    let abs = sextic::absolute_invariants(inv);
    json!({
        "i2": f.format(&inv.i2),
        "i4": f.format(&inv.i4),
        "i6": f.format(&inv.i6),
        "i10": f.format(&inv.i10),
        "class": class.as_str(),
        "null_cone": inv.all_zero(),
        "t": abs.t.map(|t| elems(f, &t)),
        "u": abs.u.map(|u| elems(f, &u)),
    })
}

pub fn sextic_invariants(spec: FieldSpec, tables: &TableSet, mode: InputMode, arg: &str) -> Res {
    fn go<F: Field>(field: F, tables: &TableSet, mode: InputMode, arg: &str) -> Res {
        let ev = SexticEvaluator::new(field.clone(), tables)?;
        let form = read_form(&field, mode, arg, 6)?;
        let inv = ev.invariants(&form)?;
        let class = ev.classify_invariants(&inv);
        Ok((json!({ "form": form_json(&form) }), sextic_json(&field, &inv, class)))
    }
    with_field!(spec, |f| go(f, tables, mode, arg))
}

pub fn sextic_classify(spec: FieldSpec, tables: &TableSet, mode: InputMode, arg: &str) -> Res {
    fn go<F: Field>(field: F, tables: &TableSet, mode: InputMode, arg: &str) -> Res {
        let ev = SexticEvaluator::new(field.clone(), tables)?;
        let form = read_form(&field, mode, arg, 6)?;
        let class = ev.classify(&form)?;
        let profile = squarefree_profile(&form)?;
        let oracle = SexticClass::from_max_multiplicity(profile[0]);
        Ok((
            json!({ "form": form_json(&form) }),
            json!({
                "class": class.as_str(),
                "profile": profile,
                "profile_class": oracle.as_str(),
                "agree": class == oracle,
            }),
        ))
    }
    with_field!(spec, |f| go(f, tables, mode, arg))
}

pub fn sextic_conjugate(spec: FieldSpec, tables: &TableSet, mode: InputMode, f: &str, g: &str) -> Res {
    fn go<F: Field>(field: F, tables: &TableSet, mode: InputMode, f: &str, g: &str) -> Res {
        let ev = SexticEvaluator::new(field.clone(), tables)?;
        let a = read_form(&field, mode, f, 6)?;
        let b = read_form(&field, mode, g, 6)?;
        let conj = ev.conjugate(&a, &b)?;
        Ok((
            json!({ "f": form_json(&a), "g": form_json(&b) }),
            json!({ "conjugate": conj, "sense": "geometric" }),
        ))
    }
    with_field!(spec, |fld| go(fld, tables, mode, f, g))
}

pub fn sextic_from_roots(spec: FieldSpec, tables: &TableSet, roots: &str) -> Res {
    fn go<F: Field>(field: F, tables: &TableSet, roots: &str) -> Res {
        let ev = SexticEvaluator::new(field.clone(), tables)?;
        let pts = parse_points(&read_arg(roots)?, &field)?;
        let form = BinaryForm::from_roots(field.clone(), &pts)?;
        form.require_degree(6)?;
        let inv = ev.invariants(&form)?;
        let direct = invgen::invariants_from_roots(&field, &pts, invgen::Recipe::Artifact)?;
        let class = ev.classify_invariants(&inv);
        let roots: Vec<String> = pts.iter().map(|p| p.format(&field)).collect();
        Ok((
            json!({ "roots": roots }),
            json!({
                "form": form_json(&form),
                "invariants": sextic_json(&field, &inv, class),
                "from_roots": elems(&field, &direct),
                "agree": inv.to_array() == direct,
            }),
        ))
    }
    with_field!(spec, |f| go(f, tables, roots))
}

pub fn sextic_jform(spec: FieldSpec, tables: &TableSet, b: &str) -> Res {
    fn go<F: Field>(field: F, tables: &TableSet, b: &str) -> Res {
        let ev = SexticEvaluator::new(field.clone(), tables)?;
        let v = parse_scalars(&read_arg(b)?, &field)?;
        let [b1, b2, b3]: [F::Elem; 3] = v
            .try_into()
            .map_err(|_| CliError::Usage("expected three values B1,B2,B3".into()))?;
        let form = sextic::b_form(field.clone(), &b1, &b2, &b3);
        let inv = ev.invariants(&form)?;
        let j = sextic::b_form_j(&field, &b1, &b2, &b3)?;
        let class = ev.classify_invariants(&inv);
        Ok((
            json!({ "b": elems(&field, &[b1, b2, b3]) }),
            json!({
                "form": form_json(&form),
                "invariants": sextic_json(&field, &inv, class),
                "printed_j": elems(&field, &j),
            }),
        ))
    }
    with_field!(spec, |f| go(f, tables, b))
}

fn pair_json<F: Field>(f: &F, inv: &PairInvariants<F>) -> Value {
    let abs = pair::absolute_pair(inv);
    let r: Vec<Value> = abs.r.iter().map(|x| x.as_ref().map(|x| f.format(x)).into()).collect();
    json!({
        "h": f.format(&inv.h),
        "i": f.format(&inv.i),
        "r": f.format(&inv.r),
        "d": f.format(&inv.d),
        "null_cone": inv.all_zero(),
        "r_ratios": r,
        "v": abs.v.map(|v| elems(f, &v)),
    })
}

fn read_pair<F: Field>(field: &F, mode: InputMode, f: &str, g: &str) -> Result<CubicPair<F>, CliError> {
    Ok(CubicPair::new(read_form(field, mode, f, 3)?, read_form(field, mode, g, 3)?)?)
}

fn pair_input<F: Field>(p: &CubicPair<F>) -> Value {
    json!({ "f": form_json(&p.f), "g": form_json(&p.g) })
}

pub fn pair_invariants(spec: FieldSpec, mode: InputMode, f: &str, g: &str) -> Res {
    fn go<F: Field>(field: F, mode: InputMode, f: &str, g: &str) -> Res {
        let p = read_pair(&field, mode, f, g)?;
        let inv = PairEvaluator::new(field.clone())?.invariants(&p)?;
        Ok((pair_input(&p), pair_json(&field, &inv)))
    }
    with_field!(spec, |fld| go(fld, mode, f, g))
}

pub fn pair_conjugate(spec: FieldSpec, mode: InputMode, args: [&String; 4]) -> Res {
    fn go<F: Field>(field: F, mode: InputMode, a: [&String; 4]) -> Res {
        let p = read_pair(&field, mode, a[0], a[1])?;
        let q = read_pair(&field, mode, a[2], a[3])?;
        let conj = PairEvaluator::new(field.clone())?.conjugate(&p, &q)?;
        Ok((
            json!({ "first": pair_input(&p), "second": pair_input(&q) }),
            json!({ "conjugate": conj, "sense": "geometric" }),
        ))
    }
    with_field!(spec, |f| go(f, mode, args))
}

pub fn pair_nullcone(spec: FieldSpec, mode: InputMode, f: &str, g: &str) -> Res {
    fn go<F: Field>(field: F, mode: InputMode, f: &str, g: &str) -> Res {
        let p = read_pair(&field, mode, f, g)?;
        let nc = PairEvaluator::new(field.clone())?.null_cone(&p)?;
        Ok((
            pair_input(&p),
            json!({
                "member": nc.member,
                "product_zero": nc.product_zero,
                "max_multiplicity": nc.max_multiplicity,
                "degenerate": nc.degenerate(),
                "agree": nc.member == nc.degenerate(),
            }),
        ))
    }
    with_field!(spec, |fld| go(fld, mode, f, g))
}

pub fn pair_threesets(spec: FieldSpec, p: &str, q: &str, p2: Option<&str>, q2: Option<&str>) -> Res {
    fn go<F: Field>(field: F, p: &str, q: &str, rest: Option<(&str, &str)>) -> Res {
        let pts = |s: &str| -> Result<_, CliError> { Ok(parse_points(&read_arg(s)?, &field)?) };
        let names = |v: &[invario_core::ProjPoint<F::Elem>]| -> Vec<String> {
            v.iter().map(|x| x.format(&field)).collect()
        };
        let (a, b) = (pts(p)?, pts(q)?);
        let first = pair::pair_from_threesets(field.clone(), &a, &b)?;
        match rest {
            None => {
                let inv = pair::pair_invariants(&first)?;
                Ok((
                    json!({ "p": names(&a), "q": names(&b) }),
                    json!({ "pair": pair_input(&first), "invariants": pair_json(&field, &inv) }),
                ))
            }
            Some((p2, q2)) => {
                let (c, d) = (pts(p2)?, pts(q2)?);
                let conj = pair::threeset_pairs_conjugate(field.clone(), &a, &b, &c, &d)?;
                Ok((
                    json!({ "p": names(&a), "q": names(&b), "p2": names(&c), "q2": names(&d) }),
                    json!({ "conjugate": conj, "sense": "geometric" }),
                ))
            }
        }
    }
    let rest = match (p2, q2) {
        (None, None) => None,
        (Some(a), Some(b)) => Some((a, b)),
        _ => return Err(CliError::Usage("give either two or four triples".into())),
    };
    with_field!(spec, |f| go(f, p, q, rest))
}

fn group_name(g: OrbitGroup) -> &'static str {
    match g {
        OrbitGroup::S6 => "s6",
        OrbitGroup::Wreath => "wreath",
    }
}

pub fn orbit(spec: FieldSpec, group: OrbitGroup, c: &str) -> Res {
    fn go<F: Field>(field: F, group: OrbitGroup, c: &str) -> Res {
        let t = tuple(&field, c)?;
        let orbit = config::orbit(&field, &t, group);
        let members: Vec<Value> = orbit.iter().map(|m| elems(&field, &m.c)).collect();
        Ok((
            json!({ "c": elems(&field, &t.c), "group": group_name(group) }),
            json!({ "size": orbit.len(), "group_order": group.order(), "members": members }),
        ))
    }
    with_field!(spec, |f| go(f, group, c))
}

pub fn orbit_member(spec: FieldSpec, group: OrbitGroup, c: &str, c2: &str) -> Res {
    fn go<F: Field>(field: F, group: OrbitGroup, c: &str, c2: &str) -> Res {
        let (a, b) = (tuple(&field, c)?, tuple(&field, c2)?);
        let orbit = config::orbit(&field, &a, group);
        Ok((
            json!({ "c": elems(&field, &a.c), "c2": elems(&field, &b.c), "group": group_name(group) }),
            json!({ "member": orbit.contains(&b), "orbit_size": orbit.len() }),
        ))
    }
    with_field!(spec, |f| go(f, group, c, c2))
}

fn matrix_json(f: &PrimeField, m: &invario_core::Matrix2<u64>) -> Value {
    elems(f, &[m.a, m.b, m.c, m.d])
}

pub fn search(spec: FieldSpec, tables: &TableSet, mode: InputMode, pair: bool, forms: &[String]) -> Res {
    let FieldSpec::PrimeField(p) = spec else {
        return Err(Error::NeedsPrimeField.into());
    };
    let field = PrimeField::new(p)?;
    if p > config::SEARCH_PRIME_LIMIT {
        return Err(Error::PrimeTooLarge(p).into());
    }
    let expected = if pair { 4 } else { 2 };
    if forms.len() != expected {
        return Err(CliError::Usage(format!("expected {expected} forms, got {}", forms.len())));
    }
    if pair {
        let a = read_pair(&field, mode, &forms[0], &forms[1])?;
        let b = read_pair(&field, mode, &forms[2], &forms[3])?;
        let w = config::exhaustive_pair_search(&a, &b)?;
        let decider = pair::pair_conjugate(&a, &b).ok();
        let witness = w.map(|w| {
            json!({
                "matrix": matrix_json(&field, &w.matrix),
                "swapped": w.swapped,
                "scales": elems(&field, &[w.scales.0, w.scales.1]),
            })
        });
        Ok((
            json!({ "first": pair_input(&a), "second": pair_input(&b) }),
            json!({ "found": witness.is_some(), "witness": witness, "decider": decider }),
        ))
    } else {
        let f = read_form(&field, mode, &forms[0], 6)?;
        let g = read_form(&field, mode, &forms[1], 6)?;
        let w = config::exhaustive_matrix_search(&f, &g)?;
        let decider = SexticEvaluator::new(field, tables)
            .and_then(|ev| ev.conjugate(&f, &g))
            .ok();
        let witness = w.map(|w| json!({ "matrix": matrix_json(&field, &w.matrix), "scale": field.format(&w.scale) }));
        Ok((
            json!({ "f": form_json(&f), "g": form_json(&g) }),
            json!({ "found": witness.is_some(), "witness": witness, "decider": decider }),
        ))
    }
}
