use std::path::PathBuf;
use std::sync::Arc;

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use coring_lab_cli::catalog;
use coring_lab_cli::commands::{self, ReportDocument};
use coring_lab_cli::fixture::{self, LoadError, Mode, ReportConfig};
use coring_lab_core::algebra::{check_algebra, Algebra as CoreAlgebra};
use coring_lab_core::linalg::{format_rational, parse_rational, Vector};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn load_error(e: LoadError) -> PyErr {
    value_error(e)
}

fn parse(v: &[String]) -> PyResult<Vector> {
    v.iter().map(|s| parse_rational(s).map_err(value_error)).collect()
}

fn to_dict(py: Python<'_>, doc: &ReportDocument) -> PyResult<Py<PyAny>> {
    let json = PyModule::import(py, "json")?;
    Ok(json.call_method1("loads", (doc.to_json(),))?.unbind())
}

/// A finite-dimensional algebra over Q with rationals passed as "p/q" strings.
#[pyclass(frozen)]
struct Algebra {
    inner: Arc<CoreAlgebra>,
}

#[pymethods]
impl Algebra {
    /// `products[i * dim + j]` is `e_i · e_j`.
    #[new]
    #[pyo3(signature = (dim, products, unit=None))]
    fn new(dim: usize, products: Vec<Vec<String>>, unit: Option<Vec<String>>) -> PyResult<Self> {
        let mut structure = Vec::new();
        for p in &products {
            structure.extend(parse(p)?);
        }
        let unit = unit.as_deref().map(parse).transpose()?;
        let inner = CoreAlgebra::new(dim, structure, unit).map_err(value_error)?;
        Ok(Algebra { inner: Arc::new(inner) })
    }

    #[staticmethod]
    fn scalars() -> Self {
        Algebra { inner: Arc::new(CoreAlgebra::scalars()) }
    }

    #[staticmethod]
    fn quadratic_field(d: i64) -> Self {
        Algebra { inner: Arc::new(CoreAlgebra::quadratic_field(d)) }
    }

    #[staticmethod]
    fn cyclic_group_algebra(n: usize) -> Self {
        Algebra { inner: Arc::new(CoreAlgebra::cyclic_group_algebra(n)) }
    }

    #[staticmethod]
    fn matrix_algebra(n: usize) -> Self {
        Algebra { inner: Arc::new(CoreAlgebra::matrix_algebra(n)) }
    }

    #[staticmethod]
    fn truncated_polynomial(n: usize) -> Self {
        Algebra { inner: Arc::new(CoreAlgebra::truncated_polynomial(n)) }
    }

    #[staticmethod]
    fn row_matrices(n: usize) -> Self {
        Algebra { inner: Arc::new(CoreAlgebra::row_matrices(n)) }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn is_unital(&self) -> bool {
        self.inner.is_unital()
    }

    #[getter]
    fn unit(&self) -> Option<Vec<String>> {
        self.inner.unit().map(|u| u.iter().map(format_rational).collect())
    }

    fn multiply(&self, a: Vec<String>, b: Vec<String>) -> PyResult<Vec<String>> {
        let (a, b) = (parse(&a)?, parse(&b)?);
        let n = self.inner.dim();
        if a.len() != n || b.len() != n {
            return Err(value_error(format!("expected vectors of length {n}")));
        }
        Ok(self.inner.multiply(&a, &b).iter().map(format_rational).collect())
    }

    /// List of `(check, passed, witness)`.
    fn check(&self) -> Vec<(String, bool, Option<String>)> {
        check_algebra(&self.inner).checks.into_iter().map(|c| (c.name, c.passed, c.witness)).collect()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, unital={})", self.inner.dim(), self.inner.is_unital())
    }
}

/// A loaded, validated fixture. Commands return report documents as dicts.
#[pyclass(frozen)]
struct Fixture {
    inner: fixture::Fixture,
}

fn mode(strict: bool) -> Mode {
    if strict {
        Mode::Strict
    } else {
        Mode::Lenient
    }
}

#[pymethods]
impl Fixture {
    #[staticmethod]
    #[pyo3(signature = (path, strict=true))]
    fn load(path: PathBuf, strict: bool) -> PyResult<Self> {
        Ok(Fixture { inner: fixture::load_fixture(&path, mode(strict)).map_err(load_error)? })
    }

    #[staticmethod]
    #[pyo3(signature = (text, strict=true))]
    fn from_json(text: &str, strict: bool) -> PyResult<Self> {
        Ok(Fixture { inner: fixture::load_str(text, mode(strict)).map_err(load_error)? })
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let e = catalog::entry(name).ok_or_else(|| PyKeyError::new_err(name.to_string()))?;
        Self::from_json(&e.fixture.to_canonical_json(), !name.contains("broken"))
    }

    #[getter]
    fn digest(&self) -> String {
        self.inner.digest.clone()
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.inner.warnings.iter().map(|w| w.to_string()).collect()
    }

    /// Object names grouped by kind.
    fn names(&self) -> Vec<(String, Vec<String>)> {
        let f = &self.inner;
        vec![
            ("algebras".into(), f.algebras.keys().cloned().collect()),
            ("subalgebras".into(), f.subalgebras.keys().cloned().collect()),
            ("modules".into(), f.modules.keys().cloned().collect()),
            ("corings".into(), f.corings.keys().cloned().collect()),
            ("grouplikes".into(), f.grouplikes.keys().cloned().collect()),
            ("comodules".into(), f.comodules.keys().cloned().collect()),
            ("morphisms".into(), f.morphisms.keys().cloned().collect()),
        ]
    }

    fn coring_dim(&self, name: &str) -> PyResult<usize> {
        Ok(self.inner.coring(name).map_err(value_error)?.dim())
    }

    #[pyo3(signature = (object=None))]
    fn check(&self, py: Python<'_>, object: Option<&str>) -> PyResult<Py<PyAny>> {
        to_dict(py, &commands::check(&self.inner, object).map_err(load_error)?)
    }

    fn sweedler(&self, py: Python<'_>, algebra: &str, subalgebra: &str) -> PyResult<Py<PyAny>> {
        to_dict(py, &commands::sweedler(&self.inner, algebra, subalgebra).map_err(load_error)?)
    }

    fn comatrix(&self, py: Python<'_>, sigma: &str) -> PyResult<Py<PyAny>> {
        to_dict(py, &commands::comatrix(&self.inner, sigma).map_err(load_error)?)
    }

    #[pyo3(signature = (sigma, coring=None))]
    fn can(&self, py: Python<'_>, sigma: &str, coring: Option<&str>) -> PyResult<Py<PyAny>> {
        to_dict(py, &commands::can(&self.inner, sigma, coring).map_err(load_error)?)
    }

    #[pyo3(signature = (sigma, coring=None))]
    fn galois(&self, py: Python<'_>, sigma: &str, coring: Option<&str>) -> PyResult<Py<PyAny>> {
        to_dict(py, &commands::galois(&self.inner, sigma, coring).map_err(load_error)?)
    }

    fn cotensor(&self, py: Python<'_>, comodule: &str, sigma: &str) -> PyResult<Py<PyAny>> {
        to_dict(py, &commands::cotensor_cmd(&self.inner, comodule, sigma).map_err(load_error)?)
    }

    #[pyo3(signature = (sigma, comodules=vec![], bmodules=vec![], morphisms=vec![]))]
    fn report(
        &self,
        py: Python<'_>,
        sigma: String,
        comodules: Vec<String>,
        bmodules: Vec<String>,
        morphisms: Vec<String>,
    ) -> PyResult<Py<PyAny>> {
        let cfg = ReportConfig { sigma, comodules, bmodules, morphisms };
        to_dict(py, &commands::report(&self.inner, &cfg).map_err(load_error)?)
    }
}

type ConfigTuple = (String, Vec<String>, Vec<String>, Vec<String>);

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::NAMES.to_vec()
}

/// Canonical JSON of a shipped fixture.
#[pyfunction]
fn catalog_json(name: &str) -> PyResult<String> {
    catalog::entry(name)
        .map(|e| e.fixture.to_canonical_json())
        .ok_or_else(|| PyKeyError::new_err(name.to_string()))
}

/// `(sigma, comodules, bmodules, morphisms)` of a shipped report config.
#[pyfunction]
fn catalog_config(name: &str) -> PyResult<Option<ConfigTuple>> {
    let e = catalog::entry(name).ok_or_else(|| PyKeyError::new_err(name.to_string()))?;
    Ok(e.config.map(|c| (c.sigma, c.comodules, c.bmodules, c.morphisms)))
}

#[pymodule]
fn coring_lab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", commands::VERSION)?;
    m.add_class::<Algebra>()?;
    m.add_class::<Fixture>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_json, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_config, m)?)?;
    Ok(())
}
