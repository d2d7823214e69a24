//! Python bindings: partitions, counting, generating functions, the maps and
//! the verification reports. Reports are handed over as plain dicts.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use partition_lab::maps::{self, TransformOutcome};
use partition_lab::verify::{self, IdentityId, MapId, Mode, VerifyConfig};
use partition_lab::{
    enumerate_family, family_gf as gf, is_triangular as triangular, member, Ceiling, Color, ColoredPartition,
    FamilyId, GfId, Overpartition, StatFilter,
};

fn value_error(e: partition_lab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family(name: &str) -> PyResult<FamilyId> {
    name.parse().map_err(value_error)
}

/// A two-color partition in canonical order (decreasing value, Blue first).
#[pyclass(name = "ColoredPartition", module = "partition_lab", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyColoredPartition {
    inner: ColoredPartition,
}

impl From<ColoredPartition> for PyColoredPartition {
    fn from(inner: ColoredPartition) -> Self {
        PyColoredPartition { inner }
    }
}

#[pymethods]
impl PyColoredPartition {
    /// Parses `"8b,1b"`; bare values are Blue and `""` is empty.
    #[new]
    #[pyo3(signature = (spec = ""))]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse::<ColoredPartition>().map(Self::from).map_err(value_error)
    }

    /// Builds from `(value, color)` pairs, color `"b"` or `"g"`.
    #[staticmethod]
    fn from_parts(parts: Vec<(u32, String)>) -> PyResult<Self> {
        let parts = parts
            .into_iter()
            .map(|(v, c)| match c.to_ascii_lowercase().as_str() {
                "b" | "blue" => Ok((v, Color::Blue)),
                "g" | "green" => Ok((v, Color::Green)),
                _ => Err(PyValueError::new_err(format!("unknown color {c:?}"))),
            })
            .collect::<PyResult<Vec<_>>>()?;
        ColoredPartition::canonicalize(parts).map(Self::from).map_err(value_error)
    }

    fn parts(&self) -> Vec<(u32, &'static str)> {
        self.inner
            .parts()
            .iter()
            .map(|p| (p.value, if p.color == Color::Blue { "b" } else { "g" }))
            .collect()
    }

    #[getter]
    fn weight(&self) -> u64 {
        self.inner.weight()
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.inner.stats();
        let d = PyDict::new_bound(py);
        d.set_item("n_parts", s.n_parts)?;
        d.set_item("n_even_parts", s.n_even_parts)?;
        d.set_item("n_odd_parts", s.n_odd_parts)?;
        d.set_item("n_blue_parts", s.n_blue_parts)?;
        d.set_item("n_blue_even_parts", s.n_blue_even_parts)?;
        d.set_item("n_green_parts", s.n_green_parts)?;
        d.set_item("sign", s.sign)?;
        Ok(d)
    }

    fn is_member(&self, family_name: &str) -> PyResult<bool> {
        Ok(member(family(family_name)?, &self.inner))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ColoredPartition('{}')", self.inner)
    }
}

/// Members of `family` of weight `n` passing `filter`; signed for `K`.
#[pyfunction]
#[pyo3(signature = (family_name, n, filter = "all"))]
fn count(family_name: &str, n: u32, filter: &str) -> PyResult<i64> {
    let filter: StatFilter = filter.parse().map_err(value_error)?;
    partition_lab::count(family(family_name)?, n, filter, Ceiling::from_env()).map_err(value_error)
}

/// Every member of `family` of weight `n`, as partition strings.
#[pyfunction]
fn enumerate(family_name: &str, n: u32) -> PyResult<Vec<String>> {
    let list = enumerate_family(family(family_name)?, n, Ceiling::from_env()).map_err(value_error)?;
    Ok(list.iter().map(ToString::to_string).collect())
}

/// Coefficients of a named generating function up to `q^trunc`.
#[pyfunction]
#[pyo3(signature = (name, trunc = 200))]
fn family_gf(name: &str, trunc: usize) -> PyResult<Vec<BigInt>> {
    let id: GfId = name.parse().map_err(value_error)?;
    Ok(gf(id, trunc).coeffs().to_vec())
}

#[pyfunction]
#[pyo3(signature = (signed, trunc = 200))]
fn staircase_series(signed: bool, trunc: usize) -> Vec<BigInt> {
    partition_lab::staircase_series(signed, trunc).coeffs().to_vec()
}

#[pyfunction]
fn is_triangular(n: u64) -> Option<u64> {
    triangular(n)
}

fn lift(r: partition_lab::Result<ColoredPartition>) -> PyResult<PyColoredPartition> {
    r.map(PyColoredPartition::from).map_err(value_error)
}

#[pyfunction]
fn phi(p: &PyColoredPartition) -> PyResult<PyColoredPartition> {
    lift(maps::phi(&p.inner))
}

/// The branch of the case analysis `phi` takes on `p`.
#[pyfunction]
fn phi_case(p: &PyColoredPartition) -> PyResult<String> {
    maps::phi_traced(&p.inner).map(|(_, c)| c.to_string()).map_err(value_error)
}

#[pyfunction]
fn theta(p: &PyColoredPartition) -> PyResult<PyColoredPartition> {
    lift(maps::theta(&p.inner))
}

#[pyfunction]
fn strip_colors(p: &PyColoredPartition) -> PyResult<PyColoredPartition> {
    lift(maps::strip_colors(&p.inner))
}

#[pyfunction]
fn paint_colors(p: &PyColoredPartition) -> PyResult<PyColoredPartition> {
    lift(maps::paint_colors(&p.inner))
}

#[pyfunction]
fn pair_merge(p: &PyColoredPartition) -> PyResult<PyColoredPartition> {
    lift(maps::pair_merge(&p.inner))
}

#[pyfunction]
fn pair_split(p: &PyColoredPartition) -> PyResult<PyColoredPartition> {
    lift(maps::pair_split(&p.inner))
}

/// The overpartition as a string, overlined parts marked `o`.
#[pyfunction]
fn to_overpartition(p: &PyColoredPartition) -> PyResult<String> {
    maps::to_overpartition(&p.inner).map(|o| o.to_string()).map_err(value_error)
}

#[pyfunction]
fn from_overpartition(spec: &str) -> PyResult<PyColoredPartition> {
    let beta: Overpartition = spec.parse().map_err(value_error)?;
    lift(maps::from_overpartition(&beta))
}

/// `(lambda_e, lambda_c1, lambda_c3)`.
#[pyfunction]
fn modular_diagram(p: &PyColoredPartition) -> PyResult<(Vec<u32>, Vec<u32>, Vec<u32>)> {
    let d = maps::to_modular_diagram(&p.inner).map_err(value_error)?;
    Ok((d.lambda_e, d.lambda_c1, d.lambda_c3))
}

/// `(image, None)` when the input moves, `(None, (kind, k))` at a staircase.
#[pyfunction]
fn modular4_transform(p: &PyColoredPartition) -> PyResult<(Option<PyColoredPartition>, Option<(String, u32)>)> {
    Ok(match maps::modular4_transform(&p.inner).map_err(value_error)? {
        TransformOutcome::Moved(m) => (Some(m.into()), None),
        TransformOutcome::FixedStaircase { kind, k } => (None, Some((kind.to_string(), k))),
    })
}

fn to_python<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<PyObject> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import_bound("json")?.call_method1("loads", (text,))?.unbind())
}

fn config() -> VerifyConfig {
    VerifyConfig {
        ceiling: Ceiling::from_env(),
        ..VerifyConfig::default()
    }
}

/// Identity report as a dict; big integers appear as decimal strings.
#[pyfunction]
#[pyo3(signature = (identity, n_max, mode = "enum"))]
fn check_identity(py: Python<'_>, identity: &str, n_max: u32, mode: &str) -> PyResult<PyObject> {
    let id: IdentityId = identity.parse().map_err(value_error)?;
    let mode: Mode = mode.parse().map_err(value_error)?;
    to_python(py, &verify::check_identity(id, n_max, mode, &config()).map_err(value_error)?)
}

#[pyfunction]
fn check_map(py: Python<'_>, map: &str, n_max: u32) -> PyResult<PyObject> {
    let id: MapId = map.parse().map_err(value_error)?;
    to_python(py, &verify::check_map(id, n_max, &config()).map_err(value_error)?)
}

#[pyfunction]
#[pyo3(signature = (n_max_enum = 20, n_max_series = 200))]
fn full_suite(py: Python<'_>, n_max_enum: u32, n_max_series: u32) -> PyResult<PyObject> {
    to_python(py, &verify::full_suite(n_max_enum, n_max_series, &config()).map_err(value_error)?)
}

#[pymodule]
#[pyo3(name = "partition_lab")]
fn partition_lab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyColoredPartition>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(family_gf, m)?)?;
    m.add_function(wrap_pyfunction!(staircase_series, m)?)?;
    m.add_function(wrap_pyfunction!(is_triangular, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_case, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(strip_colors, m)?)?;
    m.add_function(wrap_pyfunction!(paint_colors, m)?)?;
    m.add_function(wrap_pyfunction!(pair_merge, m)?)?;
    m.add_function(wrap_pyfunction!(pair_split, m)?)?;
    m.add_function(wrap_pyfunction!(to_overpartition, m)?)?;
    m.add_function(wrap_pyfunction!(from_overpartition, m)?)?;
    m.add_function(wrap_pyfunction!(modular_diagram, m)?)?;
    m.add_function(wrap_pyfunction!(modular4_transform, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity, m)?)?;
    m.add_function(wrap_pyfunction!(check_map, m)?)?;
    m.add_function(wrap_pyfunction!(full_suite, m)?)?;
    Ok(())
}
