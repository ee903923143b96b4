//! Python bindings.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use triquad_core::chow::{divisor_product, intersect_dc};
use triquad_core::cohomology as cohom;
use triquad_core::conformance::{self, Scope};
use triquad_core::delpezzo as dp;
use triquad_core::enumerate as en;
use triquad_core::golden::Golden;
use triquad_core::invariants as inv;
use triquad_core::{BundleData, Coeff, CurveClass, DivisorClass, Error, Perm};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn perm(images: [usize; 3]) -> PyResult<Perm> {
    Perm::new(images).ok_or_else(|| PyValueError::new_err(format!("{images:?} is not a permutation of (0, 1, 2)")))
}

/// A divisor class `a h1 + b h2 + c h3`.
#[pyclass(name = "DivisorClass", module = "triquad", frozen, eq, hash, ord, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyDivisor(DivisorClass);

#[pymethods]
impl PyDivisor {
    #[new]
    fn new(a: Coeff, b: Coeff, c: Coeff) -> Self {
        PyDivisor(DivisorClass::new(a, b, c))
    }

    #[getter]
    fn coeffs(&self) -> (Coeff, Coeff, Coeff) {
        let [a, b, c] = self.0 .0;
        (a, b, c)
    }

    fn permuted(&self, images: [usize; 3]) -> PyResult<Self> {
        Ok(PyDivisor(self.0.permuted(&perm(images)?)))
    }

    fn sorted(&self) -> Self {
        PyDivisor(self.0.sorted())
    }

    fn is_effective(&self) -> bool {
        self.0.is_effective()
    }

    /// `D + t h`
    fn twist(&self, t: Coeff) -> PyResult<Self> {
        self.0.twist_by_hyperplane(t).map(PyDivisor).map_err(py_err)
    }

    fn intersect(&self, c: PyCurve) -> PyResult<Coeff> {
        intersect_dc(&self.0, &c.0).map_err(py_err)
    }

    fn __add__(&self, other: PyDivisor) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(PyDivisor).map_err(py_err)
    }

    fn __sub__(&self, other: PyDivisor) -> PyResult<Self> {
        self.0.checked_sub(&other.0).map(PyDivisor).map_err(py_err)
    }

    fn __neg__(&self) -> PyResult<Self> {
        self.0.checked_neg().map(PyDivisor).map_err(py_err)
    }

    fn __mul__(&self, other: PyDivisor) -> PyResult<PyCurve> {
        divisor_product(&self.0, &other.0).map(PyCurve).map_err(py_err)
    }

    fn __str__(&self) -> String {
        if self.0.is_zero() { "0".into() } else { self.0.to_string() }
    }

    fn __repr__(&self) -> String {
        let [a, b, c] = self.0 .0;
        format!("DivisorClass({a}, {b}, {c})")
    }
}

/// A curve class `a h2h3 + b h1h3 + c h1h2`.
#[pyclass(name = "CurveClass", module = "triquad", frozen, eq, hash, ord, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyCurve(CurveClass);

#[pymethods]
impl PyCurve {
    #[new]
    fn new(a: Coeff, b: Coeff, c: Coeff) -> Self {
        PyCurve(CurveClass::new(a, b, c))
    }

    #[getter]
    fn coeffs(&self) -> (Coeff, Coeff, Coeff) {
        let [a, b, c] = self.0 .0;
        (a, b, c)
    }

    /// Degree against the hyperplane class.
    fn degree(&self) -> PyResult<Coeff> {
        self.0.degree().map_err(py_err)
    }

    fn permuted(&self, images: [usize; 3]) -> PyResult<Self> {
        Ok(PyCurve(self.0.permuted(&perm(images)?)))
    }

    fn __add__(&self, other: PyCurve) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(PyCurve).map_err(py_err)
    }

    fn __sub__(&self, other: PyCurve) -> PyResult<Self> {
        self.0.checked_sub(&other.0).map(PyCurve).map_err(py_err)
    }

    fn __str__(&self) -> String {
        if self.0.is_zero() { "0".into() } else { self.0.to_string() }
    }

    fn __repr__(&self) -> String {
        let [a, b, c] = self.0 .0;
        format!("CurveClass({a}, {b}, {c})")
    }
}

/// Chern data `(c1, c2)` of a rank-2 bundle.
#[pyclass(name = "Bundle", module = "triquad", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq)]
struct PyBundle(BundleData);

#[pymethods]
impl PyBundle {
    #[new]
    fn new(c1: PyDivisor, c2: PyCurve) -> Self {
        PyBundle(BundleData::new(c1.0, c2.0))
    }

    #[staticmethod]
    fn split(l1: PyDivisor, l2: PyDivisor) -> PyResult<Self> {
        BundleData::split(&l1.0, &l2.0).map(PyBundle).map_err(py_err)
    }

    #[getter]
    fn c1(&self) -> PyDivisor {
        PyDivisor(self.0.c1)
    }

    #[getter]
    fn c2(&self) -> PyCurve {
        PyCurve(self.0.c2)
    }

    fn chi(&self) -> PyResult<Coeff> {
        inv::chi_rank2(&self.0).map_err(py_err)
    }

    /// Euler characteristic through the general Riemann-Roch expression.
    fn chi_direct(&self) -> PyResult<Coeff> {
        inv::chi_rank2_direct(&self.0, &inv::F).map_err(py_err)
    }

    fn twist(&self, d: PyDivisor) -> PyResult<Self> {
        inv::twist(&self.0, &d.0).map(PyBundle).map_err(py_err)
    }

    fn dual(&self) -> PyResult<Self> {
        inv::dual(&self.0).map(PyBundle).map_err(py_err)
    }

    /// `(degree, arithmetic genus)` of the zero locus of a section.
    fn zero_locus(&self) -> PyResult<(Coeff, Coeff)> {
        inv::zero_locus_invariants(&self.0).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        let [a1, a2, a3] = self.0.c1.0;
        let [b1, b2, b3] = self.0.c2.0;
        format!("Bundle(DivisorClass({a1}, {a2}, {a3}), CurveClass({b1}, {b2}, {b3}))")
    }
}

/// The class `a l - b1 e1 - b2 e2 - b3 e3` on the del Pezzo surface.
#[pyclass(name = "SurfaceClass", module = "triquad", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PySurface(dp::SurfaceClass);

#[pymethods]
impl PySurface {
    #[new]
    fn new(a: Coeff, b1: Coeff, b2: Coeff, b3: Coeff) -> Self {
        PySurface(dp::SurfaceClass::new(a, [b1, b2, b3]))
    }

    #[getter]
    fn a(&self) -> Coeff {
        self.0.a
    }

    #[getter]
    fn b(&self) -> (Coeff, Coeff, Coeff) {
        let [x, y, z] = self.0.b;
        (x, y, z)
    }

    fn degree(&self) -> Coeff {
        dp::s_degree(&self.0)
    }

    fn genus(&self) -> PyResult<Coeff> {
        dp::s_genus(&self.0).map_err(py_err)
    }

    fn intersect(&self, other: PySurface) -> Coeff {
        dp::s_intersect(&self.0, &other.0)
    }

    fn cremona(&self) -> Self {
        PySurface(dp::cremona(&self.0))
    }

    fn pushforward(&self) -> PyCurve {
        PyCurve(dp::pushforward(&self.0))
    }

    /// `(chi(O_S(C)), chi(N))` for rational and elliptic curves.
    fn normal_chi(&self) -> PyResult<(Coeff, Coeff)> {
        dp::normal_chi(&self.0).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let [x, y, z] = self.0.b;
        format!("SurfaceClass({}, {x}, {y}, {z})", self.0.a)
    }
}

/// `(h0, h1, h2, h3)` of `O(D)`.
#[pyfunction]
fn cohomology(d: PyDivisor) -> (u64, u64, u64, u64) {
    let v = cohom::cohomology(&d.0);
    (v.h0, v.h1, v.h2, v.h3)
}

#[pyfunction]
fn is_acm_line(d: PyDivisor) -> bool {
    cohom::is_acm_line(&d.0)
}

#[pyfunction]
fn initialized_acm_line_bundles() -> Vec<PyDivisor> {
    cohom::initialized_acm_line_bundles().into_iter().map(PyDivisor).collect()
}

/// `dim Ext1(O(target), O(sub))`.
#[pyfunction]
fn ext1(target: PyDivisor, sub: PyDivisor) -> u64 {
    cohom::ext1_line(&target.0, &sub.0)
}

#[pyfunction]
fn chi_line(d: PyDivisor) -> PyResult<Coeff> {
    inv::chi_line(&d.0).map_err(py_err)
}

#[pyfunction]
fn divisorial_table(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let rows = en::divisorial_table().map_err(py_err)?;
    rows.iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("alpha", PyDivisor(r.alpha))?;
            d.set_item("delta", PyDivisor(r.delta))?;
            d.set_item("e", r.e)?;
            d.set_item("beta", PyCurve(r.beta))?;
            d.set_item("class_e", PyCurve(r.class_e))?;
            d.set_item("verdict", r.verdict.name())?;
            Ok(d)
        })
        .collect()
}

#[pyfunction]
fn intermediate_table(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let rows = en::intermediate_table().map_err(py_err)?;
    rows.iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("label", &r.label)?;
            d.set_item("alpha", PyDivisor(r.alpha))?;
            d.set_item("beta", PyCurve(r.beta))?;
            d.set_item("deg", r.deg)?;
            d.set_item("pa", r.pa)?;
            d.set_item("verdict", r.verdict.kind())?;
            let split = match r.verdict {
                en::IntermediateVerdict::Decomposable(a, b) => Some((PyDivisor(a), PyDivisor(b))),
                _ => None,
            };
            d.set_item("split", split)?;
            Ok(d)
        })
        .collect()
}

/// Theorem A membership and the Theorem B verdict for `(c1, c2)`.
#[pyfunction]
fn classify(py: Python<'_>, c1: PyDivisor, c2: PyCurve) -> PyResult<Bound<'_, PyDict>> {
    let v = en::theorem_b_verdict(&c1.0, &c2.0).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("theorem_a", en::theorem_a_filter(&c1.0))?;
    d.set_item("admissible", v.is_admissible())?;
    d.set_item("curve", v.curve.description())?;
    d.set_item("c1_sorted", PyDivisor(v.c1_sorted))?;
    d.set_item("c2_canonical", PyCurve(v.c2_canonical))?;
    d.set_item("allowed_c2", v.allowed_c2.into_iter().map(PyCurve).collect::<Vec<_>>())?;
    d.set_item("indecomposability_condition", v.indecomposability_condition)?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (c1, h0_total=None, c2_target=None))]
fn decomposable_candidates(
    c1: PyDivisor,
    h0_total: Option<u64>,
    c2_target: Option<PyCurve>,
) -> PyResult<Vec<(PyDivisor, PyDivisor)>> {
    let target = c2_target.map(|c| c.0);
    en::decomposable_candidates(&c1.0, h0_total, target.as_ref())
        .map(|v| v.into_iter().map(|(a, b)| (PyDivisor(a), PyDivisor(b))).collect())
        .map_err(py_err)
}

#[pyfunction]
fn curve_classes(degree: Coeff, genus: Coeff) -> PyResult<Vec<PySurface>> {
    if degree < 1 {
        return Err(PyValueError::new_err("degree must be at least 1"));
    }
    Ok(dp::curve_classes(degree, genus).into_iter().map(PySurface).collect())
}

#[pyfunction]
fn orbit_reduce(classes: Vec<PySurface>) -> Vec<PySurface> {
    let raw: Vec<_> = classes.into_iter().map(|c| c.0).collect();
    dp::orbit_reduce(&raw).into_iter().map(PySurface).collect()
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(xs) => {
            let items = xs.iter().map(|x| to_py(py, x)).collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

/// The conformance report as a dict; `only` restricts it to one scope.
#[pyfunction]
#[pyo3(signature = (only=None))]
fn verify<'py>(py: Python<'py>, only: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let scope = only.map(str::parse::<Scope>).transpose().map_err(PyValueError::new_err)?;
    let golden = Golden::load().map_err(py_err)?;
    let report = conformance::run(&golden, scope);
    let value = serde_json::to_value(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &value)
}

#[pymodule]
fn triquad(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDivisor>()?;
    m.add_class::<PyCurve>()?;
    m.add_class::<PyBundle>()?;
    m.add_class::<PySurface>()?;
    m.add_function(wrap_pyfunction!(cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(is_acm_line, m)?)?;
    m.add_function(wrap_pyfunction!(initialized_acm_line_bundles, m)?)?;
    m.add_function(wrap_pyfunction!(ext1, m)?)?;
    m.add_function(wrap_pyfunction!(chi_line, m)?)?;
    m.add_function(wrap_pyfunction!(divisorial_table, m)?)?;
    m.add_function(wrap_pyfunction!(intermediate_table, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(decomposable_candidates, m)?)?;
    m.add_function(wrap_pyfunction!(curve_classes, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
