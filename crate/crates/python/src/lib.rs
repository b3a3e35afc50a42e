//! Python bindings: `import pyghostkernel`.

use ghostkernel::bounds;
use ghostkernel::cli::{run_suite, Suite};
use ghostkernel::homspace::{self, HomSpace as CoreHomSpace};
use ghostkernel::steenrod::total_power;
use ghostkernel::{BiPoly, Error, PrimeModulus};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn modulus(p: u64) -> PyResult<PrimeModulus> {
    PrimeModulus::new(p).map_err(py_err)
}

/// Element of F_p[t, x].
#[pyclass(
    name = "Poly",
    module = "pyghostkernel",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyPoly(BiPoly);

#[pymethods]
impl PyPoly {
    #[new]
    fn new(text: &str, p: u64) -> PyResult<Self> {
        Ok(PyPoly(BiPoly::parse(text, modulus(p)?).map_err(py_err)?))
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.modulus().get()
    }

    /// Total degree, or None for the zero polynomial.
    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The total Steenrod power P.
    fn total_power(&self) -> Self {
        PyPoly(total_power(&self.0))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyPoly(self.0.checked_add(&other.0).map_err(py_err)?))
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyPoly(self.0.checked_sub(&other.0).map_err(py_err)?))
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyPoly(self.0.checked_mul(&other.0).map_err(py_err)?))
    }

    fn __pow__(&self, n: u64, _modulo: Option<u64>) -> Self {
        PyPoly(self.0.pow(n))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}', p={})", self.0, self.p())
    }
}

/// A solved kernel: dimension and reduced echelon basis.
#[pyclass(name = "HomSpace", module = "pyghostkernel", frozen)]
pub struct PyHomSpace(CoreHomSpace);

#[pymethods]
impl PyHomSpace {
    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.problem().modulus().get()
    }

    #[getter]
    fn a(&self) -> Option<u32> {
        self.0.a()
    }

    #[getter]
    fn delta(&self) -> u32 {
        self.0.problem().delta()
    }

    #[getter]
    fn f(&self) -> PyPoly {
        PyPoly(self.0.problem().f().clone())
    }

    #[getter]
    fn basis(&self) -> Vec<PyPoly> {
        self.0.basis().iter().cloned().map(PyPoly).collect()
    }

    fn contains(&self, m: &PyPoly) -> PyResult<bool> {
        self.0.contains(&m.0).map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.0.dim()
    }

    fn __repr__(&self) -> String {
        format!(
            "HomSpace(p={}, delta={}, dim={})",
            self.p(),
            self.delta(),
            self.dim()
        )
    }
}

/// M_a for the prime p.
#[pyfunction]
fn ma_space(p: u64, a: u32) -> PyResult<PyHomSpace> {
    Ok(PyHomSpace(
        homspace::ma_space(modulus(p)?, a).map_err(py_err)?,
    ))
}

/// The explicit elements of M_2, one per k = 0..(p-1)/2.
#[pyfunction]
fn family(p: u64) -> PyResult<Vec<PyPoly>> {
    Ok(homspace::family(modulus(p)?)
        .into_iter()
        .map(PyPoly)
        .collect())
}

/// Rows of the filtration table as dicts with keys k, rep_dim, hom_dim, ext11.
#[pyfunction]
fn filtration<'py>(py: Python<'py>, p: u64, a: u32) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let table = bounds::filtration_table(modulus(p)?, a).map_err(py_err)?;
    table
        .rows
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("k", r.k)?;
            d.set_item("rep_dim", r.rep_dim)?;
            d.set_item("hom_dim", r.hom_dim)?;
            d.set_item("ext11", r.ext11)?;
            Ok(d)
        })
        .collect()
}

#[pyfunction]
fn pre_filtration(p: u64, a: u32) -> PyResult<Vec<usize>> {
    bounds::pre_filtration_dims(modulus(p)?, a).map_err(py_err)
}

#[pyfunction]
fn rank_report<'py>(py: Python<'py>, p: u64, a: u32) -> PyResult<Bound<'py, PyDict>> {
    let r = bounds::rank_report(modulus(p)?, a).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("p", r.p)?;
    d.set_item("a", r.a)?;
    d.set_item("dim_ma", r.dim_ma)?;
    d.set_item("ext11", r.ext11)?;
    d.set_item("rank_lower", r.rank_lower)?;
    d.set_item("rank_upper", r.rank_upper)?;
    d.set_item("rank_e2", r.rank_e2)?;
    d.set_item("conjecture_zp", r.conjecture_zp)?;
    Ok(d)
}

/// Sweep over all (p, a) with p a <= max_pa; returns the report as JSON text.
#[pyfunction]
#[pyo3(signature = (max_pa, jobs = 1))]
fn sweep(py: Python<'_>, max_pa: u32, jobs: usize) -> PyResult<String> {
    let report = py.detach(|| bounds::sweep(max_pa, jobs)).map_err(py_err)?;
    Ok(report.to_json())
}

/// Runs a verification suite; returns (name, passed, detail) triples.
#[pyfunction]
#[pyo3(signature = (p, suite = "all"))]
fn verify(p: u64, suite: &str) -> PyResult<Vec<(String, bool, String)>> {
    let suite = match suite {
        "family" => Suite::Family,
        "qr" => Suite::Qr,
        "klemma" => Suite::Klemma,
        "subst" => Suite::Subst,
        "shift" => Suite::Shift,
        "all" => Suite::All,
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    };
    Ok(run_suite(modulus(p)?, suite)
        .into_iter()
        .map(|c| (c.name, c.passed, c.detail))
        .collect())
}

#[pymodule]
fn pyghostkernel(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyHomSpace>()?;
    m.add_function(wrap_pyfunction!(ma_space, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(filtration, m)?)?;
    m.add_function(wrap_pyfunction!(pre_filtration, m)?)?;
    m.add_function(wrap_pyfunction!(rank_report, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
