//! Python bindings: the main types and operations of `starlike-radii`.
//!
//! Build with `cargo build -p starlike-radii-py --release`; the produced
//! `libstarlike_radii_py.so` imports as the module `starlike_radii_py`
//! (see `python/smoke_test.py` in the repository root).

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use starlike_radii::analytic as an;
use starlike_radii::bounds;
use starlike_radii::harness;
use starlike_radii::radii;
use starlike_radii::regions;

fn value_error(err: starlike_radii::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_family(token: &str) -> PyResult<an::Family> {
    an::Family::parse(token).map_err(value_error)
}

/// A self-map of the unit disc fixing 0: rotation times a Blaschke product.
#[pyclass(name = "SchwarzMap", from_py_object)]
#[derive(Clone)]
struct PySchwarzMap {
    inner: an::SchwarzMap,
}

#[pymethods]
impl PySchwarzMap {
    #[new]
    #[pyo3(signature = (phase=0.0, params=Vec::new()))]
    fn new(phase: f64, params: Vec<Complex64>) -> PyResult<Self> {
        Ok(PySchwarzMap {
            inner: an::SchwarzMap::new(phase, params).map_err(value_error)?,
        })
    }

    #[staticmethod]
    fn identity() -> Self {
        PySchwarzMap {
            inner: an::SchwarzMap::identity(),
        }
    }

    fn eval(&self, z: Complex64) -> PyResult<Complex64> {
        self.inner.eval(z).map_err(value_error)
    }

    fn deriv(&self, z: Complex64) -> PyResult<Complex64> {
        self.inner.eval_deriv(z).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "SchwarzMap(phase={}, params={:?})",
            self.inner.phase(),
            self.inner.blaschke_params()
        )
    }
}

/// A class member `f(z) = z p(z) p1(z) p2(z)`.
#[pyclass(name = "ClassMember")]
struct PyClassMember {
    inner: an::ClassMember,
}

#[pymethods]
impl PyClassMember {
    #[new]
    fn new(
        family: &str,
        p: PySchwarzMap,
        p1: PySchwarzMap,
        p2: PySchwarzMap,
    ) -> PyResult<Self> {
        Ok(PyClassMember {
            inner: an::ClassMember::new(parse_family(family)?, p.inner, p1.inner, p2.inner),
        })
    }

    /// The extremal member: `z (1+z)^{3/2}` for t1, `z e^{3z}` for t2.
    #[staticmethod]
    fn extremal(family: &str) -> PyResult<Self> {
        Ok(PyClassMember {
            inner: an::ClassMember::extremal(parse_family(family)?),
        })
    }

    fn eval(&self, z: Complex64) -> PyResult<Complex64> {
        self.inner.eval(z).map_err(value_error)
    }

    /// `z f'(z)/f(z)` (equals 1 at the origin).
    fn log_derivative(&self, z: Complex64) -> PyResult<Complex64> {
        self.inner.log_derivative(z).map_err(value_error)
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family().token()
    }
}

/// A catalog target region.
#[pyclass(name = "Region", from_py_object)]
#[derive(Clone)]
struct PyRegion {
    inner: regions::Region,
}

#[pymethods]
impl PyRegion {
    /// Region by token: halfplane, disc, janowski, parabola, exp, cardioid,
    /// sine, lune, rational, nephroid, sigmoid. `alpha` parametrizes
    /// halfplane/disc, `a`/`b` the janowski disc.
    #[new]
    #[pyo3(signature = (token, alpha=0.0, a=1.0, b=-1.0))]
    fn new(token: &str, alpha: f64, a: f64, b: f64) -> PyResult<Self> {
        Ok(PyRegion {
            inner: regions::Region::from_token(token, alpha, a, b).map_err(value_error)?,
        })
    }

    fn contains(&self, w: Complex64) -> bool {
        self.inner.contains(w)
    }

    fn boundary_point(&self, theta: f64) -> PyResult<Complex64> {
        self.inner.boundary_point(theta).map_err(value_error)
    }

    fn inradius_about_one(&self) -> f64 {
        self.inner.inradius_about_one()
    }

    fn boundary_distance(&self, w: Complex64) -> f64 {
        self.inner.boundary_distance(w)
    }

    fn disc_in_region(&self, center: Complex64, rho: f64) -> PyResult<bool> {
        self.inner.disc_in_region(center, rho).map_err(value_error)
    }

    #[getter]
    fn token(&self) -> &'static str {
        self.inner.token()
    }

    fn __repr__(&self) -> String {
        let params = self.inner.params_label();
        if params.is_empty() {
            format!("Region({:?})", self.inner.token())
        } else {
            format!("Region({:?}, {})", self.inner.token(), params)
        }
    }
}

#[pyfunction]
fn member_bound(family: &str, r: f64) -> PyResult<f64> {
    bounds::member_bound(parse_family(family)?, r).map_err(value_error)
}

#[pyfunction]
fn invert_member_bound(family: &str, delta: f64) -> PyResult<f64> {
    bounds::invert_member_bound(parse_family(family)?, delta).map_err(value_error)
}

#[pyfunction]
fn factor_bound(family: &str, r: f64) -> PyResult<f64> {
    bounds::factor_bound(parse_family(family)?.factor_kind(), r).map_err(value_error)
}

#[pyfunction]
fn growth_range(family: &str, r: f64) -> PyResult<(f64, f64)> {
    let range = bounds::member_growth_range(parse_family(family)?, r).map_err(value_error)?;
    Ok((range.lo, range.hi))
}

#[pyfunction]
fn factor_modulus_range(family: &str, r: f64) -> PyResult<(f64, f64)> {
    let range =
        bounds::factor_modulus_range(parse_family(family)?.factor_kind(), r).map_err(value_error)?;
    Ok((range.lo, range.hi))
}

#[pyfunction]
fn closed_form_radius(family: &str, region: PyRegion) -> PyResult<Option<f64>> {
    Ok(radii::closed_form_radius(&radii::RadiusQuery::new(
        parse_family(family)?,
        region.inner,
    )))
}

#[pyfunction]
#[pyo3(signature = (family, region, tol=1e-10))]
fn numeric_radius(family: &str, region: PyRegion, tol: f64) -> PyResult<f64> {
    radii::numeric_radius(
        &radii::RadiusQuery::new(parse_family(family)?, region.inner),
        tol,
    )
    .map_err(value_error)
}

#[pyfunction]
fn janowski_radius(family: &str, a: f64, b: f64) -> PyResult<(f64, &'static str)> {
    let (radius, exactness) =
        radii::janowski_radius(parse_family(family)?, a, b).map_err(value_error)?;
    Ok((radius, exactness.token()))
}

#[pyfunction]
fn univalence_witness(family: &str) -> PyResult<f64> {
    Ok(radii::univalence_witness(parse_family(family)?))
}

#[pyfunction]
fn disc_in_disc(c: Complex64, d: f64, a: Complex64, b: f64) -> bool {
    regions::disc_in_disc(c, d, a, b)
}

#[pyfunction]
fn sharpness_witnesses<'py>(
    py: Python<'py>,
    family: &str,
    region: PyRegion,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let query = radii::RadiusQuery::new(parse_family(family)?, region.inner);
    let points = radii::sharpness_witnesses(&query).map_err(value_error)?;
    points
        .into_iter()
        .map(|p| {
            let dict = PyDict::new(py);
            dict.set_item("z", p.z)?;
            dict.set_item("value", p.value)?;
            dict.set_item("boundary_residual", p.boundary_residual)?;
            Ok(dict)
        })
        .collect()
}

#[pyfunction]
#[pyo3(signature = (family, region, tol=1e-10))]
fn radius_report<'py>(
    py: Python<'py>,
    family: &str,
    region: PyRegion,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let query = radii::RadiusQuery::new(parse_family(family)?, region.inner);
    let report = radii::radius_report(&query, tol).map_err(value_error)?;
    let dict = PyDict::new(py);
    dict.set_item("family", report.family.token())?;
    dict.set_item("region", report.region.token())?;
    dict.set_item("params", report.region.params_label())?;
    dict.set_item("closed_form", report.closed_form)?;
    dict.set_item("closed_form_expr", report.closed_form_expr)?;
    dict.set_item("numeric", report.numeric)?;
    dict.set_item("witness_z", report.witness_z)?;
    dict.set_item("witness_value", report.witness_value)?;
    dict.set_item("boundary_residual", report.boundary_residual)?;
    dict.set_item("exactness", report.exactness.token())?;
    Ok(dict)
}

/// Runs a verification suite group and returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (suite="all", seed=42, samples=1000, boundary_samples=64,
                    radius_tol=1e-8, residual_tol=1e-9, dominance_slack=1e-10))]
#[allow(clippy::too_many_arguments)]
fn verify_json(
    suite: &str,
    seed: u64,
    samples: usize,
    boundary_samples: usize,
    radius_tol: f64,
    residual_tol: f64,
    dominance_slack: f64,
) -> PyResult<String> {
    let config = harness::VerificationConfig {
        seed,
        samples_per_family: samples,
        boundary_samples,
        radius_tol,
        residual_tol,
        dominance_slack,
    };
    let report = match suite.to_ascii_lowercase().as_str() {
        "all" => harness::verify_all(&config),
        "radii" => harness::verify_radii(&config),
        "lemmas" => harness::verify_lemmas(&config),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown suite: {other} (expected all, radii, or lemmas)"
            )))
        }
    };
    Ok(report.to_json())
}

/// Emits the 20-row catalog table ("json", "csv", or "text").
#[pyfunction]
#[pyo3(signature = (format="json"))]
fn table(format: &str) -> PyResult<String> {
    let format = harness::TableFormat::parse(format).ok_or_else(|| {
        PyValueError::new_err(format!(
            "unknown format: {format} (expected json, csv, or text)"
        ))
    })?;
    Ok(harness::emit_table(format))
}

#[pymodule]
fn starlike_radii_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySchwarzMap>()?;
    m.add_class::<PyClassMember>()?;
    m.add_class::<PyRegion>()?;
    m.add_function(wrap_pyfunction!(member_bound, m)?)?;
    m.add_function(wrap_pyfunction!(invert_member_bound, m)?)?;
    m.add_function(wrap_pyfunction!(factor_bound, m)?)?;
    m.add_function(wrap_pyfunction!(growth_range, m)?)?;
    m.add_function(wrap_pyfunction!(factor_modulus_range, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_radius, m)?)?;
    m.add_function(wrap_pyfunction!(numeric_radius, m)?)?;
    m.add_function(wrap_pyfunction!(janowski_radius, m)?)?;
    m.add_function(wrap_pyfunction!(univalence_witness, m)?)?;
    m.add_function(wrap_pyfunction!(disc_in_disc, m)?)?;
    m.add_function(wrap_pyfunction!(sharpness_witnesses, m)?)?;
    m.add_function(wrap_pyfunction!(radius_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    Ok(())
}
