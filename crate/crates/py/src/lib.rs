//! Python bindings. Polynomials cross the boundary as `Poly` objects or as
//! strings in the text grammar; results that are certificates keep their
//! Rust types and can be dumped as JSON.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use gforge::arith::parse::{parse_elem, parse_param, parse_poly};
use gforge::arith::{discriminant, discriminant_y, factor, is_separable, FieldSpec, ParamPoly, UniPoly};
use gforge::construct::cert::GroupCertificateDoc;
use gforge::construct::{bb_construct, split_trinomial, verify_bb_certificate, BbBudgets, BbCertificate};
use gforge::galois::{self, GroupCertificate};
use gforge::skew::{
    center_test, left_divide, normalizer_quotient, ore_witness, parse_skew, right_divide, AnySkewRing, Perm, PermGroup,
};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Field", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyField {
    inner: FieldSpec,
}

#[pymethods]
impl PyField {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(PyField { inner: spec.parse().map_err(err)? })
    }

    #[getter]
    fn characteristic(&self) -> u64 {
        self.inner.characteristic()
    }

    #[getter]
    fn order(&self) -> Option<u64> {
        self.inner.order_u64()
    }

    /// Parse a polynomial in `Y`.
    fn poly(&self, text: &str) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: parse_poly(&self.inner, text).map_err(err)? })
    }

    /// Parse a family `A(T, Y)`, monic in `Y`.
    fn family(&self, text: &str) -> PyResult<PyFamily> {
        Ok(PyFamily { inner: parse_param(&self.inner, text).map_err(err)? })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Field('{}')", self.inner)
    }
}

#[pyclass(name = "Poly", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPoly {
    inner: UniPoly,
}

impl PyPoly {
    fn same_field(&self, other: &PyPoly) -> PyResult<()> {
        if self.inner.field() != other.inner.field() {
            return Err(err("polynomials live over different fields"));
        }
        Ok(())
    }
}

#[pymethods]
impl PyPoly {
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField { inner: self.inner.field().clone() }
    }

    /// Monic irreducible factors with multiplicities.
    fn factor(&self) -> PyResult<Vec<(String, usize)>> {
        let f = factor(&self.inner).map_err(err)?;
        Ok(f.factors.iter().map(|(g, m)| (g.to_string(), *m)).collect())
    }

    fn is_separable(&self) -> bool {
        is_separable(&self.inner)
    }

    fn discriminant(&self) -> PyResult<String> {
        let d = discriminant(&self.inner).map_err(err)?;
        Ok(self.inner.field().format_elem(&d))
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.same_field(other)?;
        Ok(PyPoly { inner: self.inner.add_poly(&other.inner) })
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.same_field(other)?;
        Ok(PyPoly { inner: self.inner.sub_poly(&other.inner) })
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.same_field(other)?;
        Ok(PyPoly { inner: self.inner.mul_poly(&other.inner) })
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}', field='{}')", self.inner, self.inner.field())
    }
}

#[pyclass(name = "Family", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFamily {
    inner: ParamPoly,
}

#[pymethods]
impl PyFamily {
    fn fiber(&self, at: &str) -> PyResult<PyPoly> {
        let t0 = parse_elem(self.inner.field(), at).map_err(err)?;
        Ok(PyPoly { inner: self.inner.eval_t(&t0) })
    }

    /// `disc_Y A` as a polynomial in `T`.
    fn discriminant(&self) -> PyResult<String> {
        Ok(discriminant_y(&self.inner).map_err(err)?.to_string_in("T"))
    }

    /// Fiber data at `T = at`: `{"t0", "unramified", "fibers": [(factor, degree, multiplicity)]}`.
    fn specialize<'py>(&self, py: Python<'py>, at: &str) -> PyResult<Bound<'py, PyDict>> {
        let k = self.inner.field();
        let t0 = parse_elem(k, at).map_err(err)?;
        let rep = galois::specialize_at(&self.inner, &t0).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("t0", k.format_elem(&rep.t0))?;
        d.set_item("unramified", rep.unramified)?;
        let fibers: Vec<(String, usize, usize)> =
            rep.fibers.iter().map(|f| (f.factor.to_string(), f.residue_degree, f.multiplicity)).collect();
        d.set_item("fibers", fibers)?;
        Ok(d)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Family('{}', field='{}')", self.inner, self.inner.field())
    }
}

#[pyclass(name = "GroupCertificate", frozen)]
struct PyGroupCertificate {
    inner: GroupCertificate,
}

#[pymethods]
impl PyGroupCertificate {
    #[getter]
    fn group(&self) -> String {
        self.inner.group.to_string()
    }

    fn is_symmetric(&self) -> bool {
        self.inner.is_symmetric()
    }

    fn is_inconclusive(&self) -> bool {
        self.inner.is_inconclusive()
    }

    /// `(prime, cycle type)` pairs cited as evidence.
    fn cycle_types(&self) -> Vec<(u64, Vec<usize>)> {
        self.inner.cycle_types().map(|(p, c)| (p, c.to_vec())).collect()
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GroupCertificateDoc::from_cert(&self.inner)).expect("plain data serializes")
    }

    fn __repr__(&self) -> String {
        format!("GroupCertificate(group='{}', polynomial='{}')", self.inner.group, self.inner.polynomial)
    }
}

#[pyclass(name = "BbCertificate", frozen)]
struct PyBbCertificate {
    inner: BbCertificate,
}

#[pymethods]
impl PyBbCertificate {
    #[getter(R)]
    fn r(&self) -> String {
        self.inner.r.to_string()
    }

    #[getter]
    fn node_a(&self) -> String {
        self.inner.r.field().format_elem(&self.inner.node_a)
    }

    #[getter]
    fn fibers(&self) -> (String, String, String) {
        (self.inner.fiber0.to_string(), self.inner.fiber1.to_string(), self.inner.fiber_a.to_string())
    }

    #[getter]
    fn assumptions(&self) -> Vec<String> {
        self.inner.assumptions.clone()
    }

    /// `(ok, reasons)`
    fn verify(&self) -> (bool, Vec<String>) {
        let v = verify_bb_certificate(&self.inner);
        (v.ok, v.reasons)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyBbCertificate { inner: BbCertificate::from_json(text).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("BbCertificate(stem='{}', n={})", self.inner.input_stem, self.inner.target_n)
    }
}

/// Skew polynomial arithmetic over a ring given by a descriptor such as
/// `"GF(4);frob"` or `"H;conj(i)"`. Operands and results are strings.
#[pyclass(name = "SkewRing", frozen)]
struct PySkewRing {
    inner: AnySkewRing,
}

macro_rules! with_ring {
    ($self:expr, $r:ident => $body:expr) => {
        match &$self.inner {
            AnySkewRing::Field($r) => $body,
            AnySkewRing::Quaternion($r) => $body,
        }
    };
}

#[pymethods]
impl PySkewRing {
    #[new]
    fn new(descriptor: &str) -> PyResult<Self> {
        Ok(PySkewRing { inner: descriptor.parse().map_err(err)? })
    }

    #[getter]
    fn twist_order(&self) -> usize {
        with_ring!(self, r => r.order())
    }

    fn mul(&self, a: &str, b: &str) -> PyResult<String> {
        with_ring!(self, r => {
            let (a, b) = (parse_skew(r, a).map_err(err)?, parse_skew(r, b).map_err(err)?);
            Ok(a.mul(&b).to_string())
        })
    }

    /// `(q, rem)` with `a = q*b + rem`.
    fn right_divide(&self, a: &str, b: &str) -> PyResult<(String, String)> {
        with_ring!(self, r => {
            let (a, b) = (parse_skew(r, a).map_err(err)?, parse_skew(r, b).map_err(err)?);
            let (q, rem) = right_divide(&a, &b).map_err(err)?;
            Ok((q.to_string(), rem.to_string()))
        })
    }

    /// `(q, rem)` with `a = b*q + rem`.
    fn left_divide(&self, a: &str, b: &str) -> PyResult<(String, String)> {
        with_ring!(self, r => {
            let (a, b) = (parse_skew(r, a).map_err(err)?, parse_skew(r, b).map_err(err)?);
            let (q, rem) = left_divide(&a, &b).map_err(err)?;
            Ok((q.to_string(), rem.to_string()))
        })
    }

    /// `(r, s)` with `a*r = b*s` nonzero.
    fn ore_witness(&self, a: &str, b: &str) -> PyResult<(String, String)> {
        with_ring!(self, r => {
            let (a, b) = (parse_skew(r, a).map_err(err)?, parse_skew(r, b).map_err(err)?);
            let (x, y) = ore_witness(&a, &b).map_err(err)?;
            Ok((x.to_string(), y.to_string()))
        })
    }

    fn is_central(&self, a: &str) -> PyResult<bool> {
        with_ring!(self, r => Ok(center_test(&parse_skew(r, a).map_err(err)?)))
    }

    fn __repr__(&self) -> String {
        format!("SkewRing('{}')", self.inner)
    }
}

#[pyfunction]
#[pyo3(signature = (poly, budget = 500))]
fn certify_sn(poly: &PyPoly, budget: u64) -> PyResult<PyGroupCertificate> {
    Ok(PyGroupCertificate { inner: galois::certify_sn(&poly.inner, budget).map_err(err)? })
}

#[pyfunction]
fn cubic_galois_group(poly: &PyPoly) -> PyResult<PyGroupCertificate> {
    Ok(PyGroupCertificate { inner: galois::cubic_galois_group(&poly.inner).map_err(err)? })
}

#[pyfunction]
fn stem_field_root_count(poly: &PyPoly) -> PyResult<usize> {
    galois::stem_field_root_count(&poly.inner).map_err(err)
}

#[pyfunction]
#[pyo3(name = "bb_construct", signature = (stem, n, prime_budget = 500, attempt_budget = 2000, fiber_a = None))]
fn py_bb_construct(
    stem: &PyPoly,
    n: usize,
    prime_budget: u64,
    attempt_budget: usize,
    fiber_a: Option<&PyPoly>,
) -> PyResult<PyBbCertificate> {
    let budgets = BbBudgets { prime_budget, attempt_budget };
    let cert = bb_construct(&stem.inner, n, &budgets, fiber_a.map(|f| &f.inner)).map_err(err)?;
    Ok(PyBbCertificate { inner: cert })
}

/// `(a, roots)` for a split trinomial `Y^3 + aY + a`.
#[pyfunction]
#[pyo3(name = "split_trinomial")]
fn py_split_trinomial(field: &PyField) -> PyResult<(String, Vec<String>)> {
    let st = split_trinomial(&field.inner).map_err(err)?;
    let k = &field.inner;
    Ok((k.format_elem(&st.a), st.roots.iter().map(|r| k.format_elem(r)).collect()))
}

/// `|N_G(K)/K|`; `G` is the symmetric group when `group` is empty.
#[pyfunction]
#[pyo3(signature = (degree, sub, group = Vec::new()))]
fn normalizer_quotient_order(degree: usize, sub: Vec<String>, group: Vec<String>) -> PyResult<usize> {
    let gens = |v: &[String]| v.iter().map(|s| Perm::parse(s, degree)).collect::<Result<Vec<_>, _>>();
    let g = if group.is_empty() {
        PermGroup::symmetric(degree).map_err(err)?
    } else {
        PermGroup::generate(degree, gens(&group).map_err(err)?).map_err(err)?
    };
    let k = PermGroup::generate(degree, gens(&sub).map_err(err)?).map_err(err)?;
    Ok(normalizer_quotient(&g, &k).map_err(err)?.order)
}

#[pymodule]
#[pyo3(name = "gforge")]
fn gforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", gforge::VERSION)?;
    m.add_class::<PyField>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyFamily>()?;
    m.add_class::<PyGroupCertificate>()?;
    m.add_class::<PyBbCertificate>()?;
    m.add_class::<PySkewRing>()?;
    m.add_function(wrap_pyfunction!(certify_sn, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_galois_group, m)?)?;
    m.add_function(wrap_pyfunction!(stem_field_root_count, m)?)?;
    m.add_function(wrap_pyfunction!(py_bb_construct, m)?)?;
    m.add_function(wrap_pyfunction!(py_split_trinomial, m)?)?;
    m.add_function(wrap_pyfunction!(normalizer_quotient_order, m)?)?;
    Ok(())
}
