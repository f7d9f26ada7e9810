//! Python bindings. Scalars cross the boundary as exact strings (`"p/q"` or a
//! residue); inputs may be ints or strings.

use std::collections::BTreeMap;

use invario_core::config::{self, CTuple, OrbitGroup};
use invario_core::pair::{self, CubicPair};
use invario_core::parse::{format_form, parse_form, parse_point, parse_scalars};
use invario_core::resultant::{discriminant, squarefree_profile};
use invario_core::sextic::{self, SexticEvaluator};
use invario_core::{BinaryForm, Error, Field, FieldSpec, Matrix2, PrimeField, Rationals};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.code()))
}

#[derive(FromPyObject)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn text(&self) -> String {
        match self {
            Scalar::Int(n) => n.to_string(),
            Scalar::Text(s) => s.clone(),
        }
    }
}

fn scalar<F: Field>(f: &F, s: &Scalar) -> PyResult<F::Elem> {
    let v = parse_scalars(&s.text(), f).map_err(err)?;
    match <[F::Elem; 1]>::try_from(v) {
        Ok([x]) => Ok(x),
        Err(_) => Err(PyValueError::new_err("expected a single scalar")),
    }
}

fn spec(field: &str) -> PyResult<FieldSpec> {
    field.parse().map_err(err)
}

#[derive(Clone, PartialEq)]
enum AnyForm {
    Q(BinaryForm<Rationals>),
    P(BinaryForm<PrimeField>),
}

/// Run `$body` with `$f` bound to the concrete form.
macro_rules! on_form {
    ($form:expr, |$f:ident| $body:expr) => {
        match $form {
            AnyForm::Q($f) => $body,
            AnyForm::P($f) => $body,
        }
    };
}

/// A binary form over `q` or `fp:<p>`.
#[pyclass(name = "BinaryForm", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyForm {
    inner: AnyForm,
}

impl PyForm {
    fn build(
        field: &str,
        q: impl FnOnce(Rationals) -> invario_core::Result<BinaryForm<Rationals>>,
        p: impl FnOnce(PrimeField) -> invario_core::Result<BinaryForm<PrimeField>>,
    ) -> PyResult<Self> {
        let inner = match spec(field)? {
            FieldSpec::Rationals => AnyForm::Q(q(Rationals).map_err(err)?),
            FieldSpec::PrimeField(n) => AnyForm::P(p(PrimeField::new(n).map_err(err)?).map_err(err)?),
        };
        Ok(PyForm { inner })
    }
}

fn coeff_form<F: Field>(f: F, coeffs: &[Scalar]) -> invario_core::Result<BinaryForm<F>> {
    let text: Vec<String> = coeffs.iter().map(Scalar::text).collect();
    invario_core::parse::parse_coeff_list(&text.join(","), f)
}

fn root_form<F: Field>(f: F, roots: &[String]) -> invario_core::Result<BinaryForm<F>> {
    let pts = roots.iter().map(|r| parse_point(r, &f)).collect::<invario_core::Result<Vec<_>>>()?;
    BinaryForm::from_roots(f, &pts)
}

fn act<F: Field>(form: &BinaryForm<F>, m: &[Scalar; 4]) -> PyResult<BinaryForm<F>> {
    let f = form.field();
    let m = Matrix2::new(scalar(f, &m[0])?, scalar(f, &m[1])?, scalar(f, &m[2])?, scalar(f, &m[3])?);
    form.act(&m).map_err(err)
}

fn sextic_dict<F: Field>(form: &BinaryForm<F>) -> PyResult<BTreeMap<String, String>> {
    let f = form.field();
    let ev = SexticEvaluator::standard(f.clone()).map_err(err)?;
    let inv = ev.invariants(form).map_err(err)?;
    let mut out = BTreeMap::new();
    for (k, v) in ["I2", "I4", "I6", "I10"].iter().zip(inv.to_array()) {
        out.insert(k.to_string(), f.format(&v));
    }
    out.insert("class".into(), ev.classify_invariants(&inv).as_str().into());
    Ok(out)
}

#[pymethods]
impl PyForm {
    /// Parse polynomial text such as `"x^6 - 3*x*y^5 + y^6"`.
    #[new]
    #[pyo3(signature = (text, degree, field = "q"))]
    fn new(text: &str, degree: usize, field: &str) -> PyResult<Self> {
        Self::build(field, |f| parse_form(text, degree, f), |f| parse_form(text, degree, f))
    }

    /// Coefficients `a0..ad` of `sum a_j x^(d-j) y^j`.
    #[staticmethod]
    #[pyo3(signature = (coeffs, field = "q"))]
    fn from_coeffs(coeffs: Vec<Scalar>, field: &str) -> PyResult<Self> {
        Self::build(field, |f| coeff_form(f, &coeffs), |f| coeff_form(f, &coeffs))
    }

    /// Product of linear factors vanishing at the points (`"inf"`, `"t"`, `"x:y"`).
    #[staticmethod]
    #[pyo3(signature = (roots, field = "q"))]
    fn from_roots(roots: Vec<String>, field: &str) -> PyResult<Self> {
        Self::build(field, |f| root_form(f, &roots), |f| root_form(f, &roots))
    }

    #[getter]
    fn degree(&self) -> usize {
        on_form!(&self.inner, |f| f.degree())
    }

    #[getter]
    fn field(&self) -> String {
        on_form!(&self.inner, |f| f.field().spec().to_string())
    }

    #[getter]
    fn coeffs(&self) -> Vec<String> {
        on_form!(&self.inner, |f| f.coeffs().iter().map(|c| f.field().format(c)).collect())
    }

    /// `f(a x + b y, c x + d y)`.
    fn act(&self, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> PyResult<Self> {
        let m = [a, b, c, d];
        let inner = match &self.inner {
            AnyForm::Q(f) => AnyForm::Q(act(f, &m)?),
            AnyForm::P(f) => AnyForm::P(act(f, &m)?),
        };
        Ok(PyForm { inner })
    }

    fn scale(&self, c: Scalar) -> PyResult<Self> {
        let inner = match &self.inner {
            AnyForm::Q(f) => AnyForm::Q(f.scale(&scalar(f.field(), &c)?)),
            AnyForm::P(f) => AnyForm::P(f.scale(&scalar(f.field(), &c)?)),
        };
        Ok(PyForm { inner })
    }

    fn discriminant(&self) -> PyResult<String> {
        on_form!(&self.inner, |f| discriminant(f).map(|d| f.field().format(&d)).map_err(err))
    }

    /// Root multiplicities over the algebraic closure, largest first.
    fn squarefree_profile(&self) -> PyResult<Vec<usize>> {
        on_form!(&self.inner, |f| squarefree_profile(f).map_err(err))
    }

    /// `{"I2", "I4", "I6", "I10", "class"}` for a sextic.
    fn sextic_invariants(&self) -> PyResult<BTreeMap<String, String>> {
        on_form!(&self.inner, |f| sextic_dict(f))
    }

    fn classify(&self) -> PyResult<String> {
        on_form!(&self.inner, |f| sextic::classify_sextic(f).map(|c| c.as_str().to_string()).map_err(err))
    }

    fn __str__(&self) -> String {
        on_form!(&self.inner, |f| format_form(f))
    }

    fn __repr__(&self) -> String {
        format!("BinaryForm({:?}, {}, field={:?})", self.__str__(), self.degree(), self.field())
    }
}

fn same_field2(a: &PyForm, b: &PyForm) -> PyResult<()> {
    match (&a.inner, &b.inner) {
        (AnyForm::Q(_), AnyForm::Q(_)) => Ok(()),
        (AnyForm::P(x), AnyForm::P(y)) if x.field() == y.field() => Ok(()),
        _ => Err(err(Error::FieldMismatch)),
    }
}

/// Geometric conjugacy of two sextics with nonzero `I10`.
#[pyfunction]
fn sextic_conjugate(f: &PyForm, g: &PyForm) -> PyResult<bool> {
    same_field2(f, g)?;
    match (&f.inner, &g.inner) {
        (AnyForm::Q(a), AnyForm::Q(b)) => sextic::sextic_conjugate(a, b).map_err(err),
        (AnyForm::P(a), AnyForm::P(b)) => sextic::sextic_conjugate(a, b).map_err(err),
        _ => unreachable!(),
    }
}

fn pair_of<F: Field>(f: &BinaryForm<F>, g: &BinaryForm<F>) -> PyResult<CubicPair<F>> {
    CubicPair::new(f.clone(), g.clone()).map_err(err)
}

fn pair_dict<F: Field>(p: &CubicPair<F>) -> PyResult<BTreeMap<String, String>> {
    let inv = pair::pair_invariants(p).map_err(err)?;
    let f = p.field();
    Ok(["H", "I", "R", "D"]
        .iter()
        .zip(inv.to_array())
        .map(|(k, v)| (k.to_string(), f.format(&v)))
        .collect())
}

/// `{"H", "I", "R", "D"}` of a pair of cubics.
#[pyfunction]
fn pair_invariants(f: &PyForm, g: &PyForm) -> PyResult<BTreeMap<String, String>> {
    same_field2(f, g)?;
    match (&f.inner, &g.inner) {
        (AnyForm::Q(a), AnyForm::Q(b)) => pair_dict(&pair_of(a, b)?),
        (AnyForm::P(a), AnyForm::P(b)) => pair_dict(&pair_of(a, b)?),
        _ => unreachable!(),
    }
}

/// `(member, degenerate)`: invariants all vanish, and `fg = 0` or a root of multiplicity >= 4.
#[pyfunction]
fn pair_null_cone(f: &PyForm, g: &PyForm) -> PyResult<(bool, bool)> {
    same_field2(f, g)?;
    let nc = match (&f.inner, &g.inner) {
        (AnyForm::Q(a), AnyForm::Q(b)) => pair::pair_null_cone(&pair_of(a, b)?),
        (AnyForm::P(a), AnyForm::P(b)) => pair::pair_null_cone(&pair_of(a, b)?),
        _ => unreachable!(),
    }
    .map_err(err)?;
    Ok((nc.member, nc.degenerate()))
}

#[pyfunction]
fn pair_conjugate(f1: &PyForm, g1: &PyForm, f2: &PyForm, g2: &PyForm) -> PyResult<bool> {
    same_field2(f1, g1)?;
    same_field2(f1, f2)?;
    same_field2(f1, g2)?;
    match (&f1.inner, &g1.inner, &f2.inner, &g2.inner) {
        (AnyForm::Q(a), AnyForm::Q(b), AnyForm::Q(c), AnyForm::Q(d)) => {
            pair::pair_conjugate(&pair_of(a, b)?, &pair_of(c, d)?).map_err(err)
        }
        (AnyForm::P(a), AnyForm::P(b), AnyForm::P(c), AnyForm::P(d)) => {
            pair::pair_conjugate(&pair_of(a, b)?, &pair_of(c, d)?).map_err(err)
        }
        _ => unreachable!(),
    }
}

fn tuple<F: Field>(f: &F, c: &[Scalar]) -> PyResult<CTuple<F::Elem>> {
    let v = c.iter().map(|s| scalar(f, s)).collect::<PyResult<Vec<_>>>()?;
    let c: [F::Elem; 3] = v
        .try_into()
        .map_err(|_| PyValueError::new_err("expected three coordinates"))?;
    CTuple::new(f, c).map_err(err)
}

fn fmt3<F: Field>(f: &F, t: &CTuple<F::Elem>) -> Vec<String> {
    t.c.iter().map(|x| f.format(x)).collect()
}

/// The Möbius normalization `(p1, p2, p3) -> (0, 1, inf)` of six points.
#[pyfunction]
#[pyo3(signature = (points, field = "q"))]
fn normalize_config(points: Vec<String>, field: &str) -> PyResult<Vec<String>> {
    fn go<F: Field>(f: F, points: &[String]) -> PyResult<Vec<String>> {
        let pts = points.iter().map(|p| parse_point(p, &f)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        Ok(fmt3(&f, &config::normalize_config(&f, &pts).map_err(err)?))
    }
    match spec(field)? {
        FieldSpec::Rationals => go(Rationals, &points),
        FieldSpec::PrimeField(p) => go(PrimeField::new(p).map_err(err)?, &points),
    }
}

fn group(name: &str) -> PyResult<OrbitGroup> {
    match name {
        "s6" => Ok(OrbitGroup::S6),
        "wreath" => Ok(OrbitGroup::Wreath),
        _ => Err(PyValueError::new_err("group must be 's6' or 'wreath'")),
    }
}

/// Orbit of `(c1, c2, c3)` under `"s6"` or `"wreath"`, sorted.
#[pyfunction]
#[pyo3(signature = (c, group_name = "s6", field = "q"))]
fn orbit(c: Vec<Scalar>, group_name: &str, field: &str) -> PyResult<Vec<Vec<String>>> {
    fn go<F: Field>(f: F, c: &[Scalar], g: OrbitGroup) -> PyResult<Vec<Vec<String>>> {
        let t = tuple(&f, c)?;
        Ok(config::orbit(&f, &t, g).iter().map(|m| fmt3(&f, m)).collect())
    }
    let g = group(group_name)?;
    match spec(field)? {
        FieldSpec::Rationals => go(Rationals, &c, g),
        FieldSpec::PrimeField(p) => go(PrimeField::new(p).map_err(err)?, &c, g),
    }
}

/// Brute-force `(matrix, scale)` with `g = scale * f(matrix)` over `fp:p`, `p <= 13`.
#[pyfunction]
fn exhaustive_search(f: &PyForm, g: &PyForm) -> PyResult<Option<(Vec<u64>, u64)>> {
    same_field2(f, g)?;
    match (&f.inner, &g.inner) {
        (AnyForm::P(a), AnyForm::P(b)) => Ok(config::exhaustive_matrix_search(a, b)
            .map_err(err)?
            .map(|w| (vec![w.matrix.a, w.matrix.b, w.matrix.c, w.matrix.d], w.scale))),
        _ => Err(err(Error::NeedsPrimeField)),
    }
}

#[pymodule]
fn invario(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyForm>()?;
    m.add_function(wrap_pyfunction!(sextic_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(pair_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(pair_null_cone, m)?)?;
    m.add_function(wrap_pyfunction!(pair_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_config, m)?)?;
    m.add_function(wrap_pyfunction!(orbit, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_search, m)?)?;
    Ok(())
}
