//! Python bindings for `hexid-core`.
//!
//! Vertices cross the boundary as `(x, y)` tuples and densities as
//! `fractions.Fraction`, so results stay exact on the Python side.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use hexid_core::density::{self, Rational};
use hexid_core::{lattice, verifier, CodeParams, Line, Vertex, Window, WithoutSeparator};

type Pair = (i64, i64);

fn vx((x, y): Pair) -> Vertex {
    Vertex::new(x, y)
}

fn pair(v: Vertex) -> Pair {
    (v.x, v.y)
}

fn value_error(e: hexid_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    let num: BigInt = q.numer().clone();
    let den: BigInt = q.denom().clone();
    cls.call1((num, den))
}

#[pyfunction]
fn neighbors(v: Pair) -> Vec<Pair> {
    lattice::neighbors(vx(v)).into_iter().map(pair).collect()
}

#[pyfunction]
fn l1_distance(u: Pair, v: Pair) -> u64 {
    lattice::l1_distance(vx(u), vx(v))
}

#[pyfunction]
fn distance(u: Pair, v: Pair) -> u64 {
    lattice::distance(vx(u), vx(v))
}

#[pyfunction]
fn bfs_distance(u: Pair, v: Pair) -> u64 {
    lattice::bfs_distance(vx(u), vx(v))
}

#[pyfunction]
fn line_distance(v: Pair, k: i64) -> u64 {
    lattice::line_distance(vx(v), Line::new(k))
}

/// Sorted (row-major) list of the vertices within distance `r` of `v`.
#[pyfunction]
fn ball(v: Pair, r: u64) -> PyResult<Vec<Pair>> {
    if r == 0 {
        return Err(PyValueError::new_err("r must be positive"));
    }
    Ok(lattice::ball(vx(v), r).into_iter().map(pair).collect())
}

#[pyfunction]
fn ball_row_segment(v: Pair, k: i64, r: u64) -> PyResult<Vec<Pair>> {
    let seg = lattice::ball_row_segment(vx(v), Line::new(k), r).map_err(value_error)?;
    Ok(seg.into_iter().map(pair).collect())
}

/// The code for a fixed radius.
#[pyclass(name = "Code", frozen)]
struct PyCode {
    inner: CodeParams,
}

#[pymethods]
impl PyCode {
    #[new]
    fn new(r: i64) -> PyResult<Self> {
        CodeParams::new(r).map(|inner| PyCode { inner }).map_err(value_error)
    }

    #[getter]
    fn r(&self) -> u64 {
        self.inner.r
    }

    /// `(px, py)` translation periods.
    #[getter]
    fn periods(&self) -> Pair {
        (self.inner.period_x, self.inner.period_y)
    }

    #[getter]
    fn line_modulus(&self) -> i64 {
        self.inner.line_modulus
    }

    #[getter]
    fn separator_modulus(&self) -> i64 {
        self.inner.separator_modulus
    }

    #[getter]
    fn excluded(&self) -> Vec<i64> {
        self.inner.excluded.iter().copied().collect()
    }

    fn is_codeword(&self, v: Pair) -> bool {
        self.inner.is_codeword(vx(v))
    }

    fn in_line_part(&self, v: Pair) -> bool {
        self.inner.in_line_part(vx(v))
    }

    fn in_separator_part(&self, v: Pair) -> bool {
        self.inner.in_separator_part(vx(v))
    }

    fn codewords_in_window(&self, x0: i64, x1: i64, y0: i64, y1: i64) -> PyResult<Vec<Pair>> {
        let w = Window::new(x0, x1, y0, y1).map_err(value_error)?;
        let words = self.inner.codewords_in_window(&w).map_err(value_error)?;
        Ok(words.into_iter().map(pair).collect())
    }

    fn identifying_set(&self, v: Pair) -> Vec<Pair> {
        verifier::identifying_set(&self.inner, vx(v)).into_iter().map(pair).collect()
    }

    /// Exhaustive check over one period. Releases the GIL while running.
    #[pyo3(signature = (drop_separator=false))]
    fn verify(&self, py: Python<'_>, drop_separator: bool) -> Report {
        let report = py.detach(|| {
            if drop_separator {
                verifier::verify(&WithoutSeparator(&self.inner))
            } else {
                verifier::verify(&self.inner)
            }
        });
        Report { inner: report }
    }

    fn check_claim9(&self) -> bool {
        verifier::check_claim9(&self.inner)
    }

    fn check_nearby_uniqueness(&self) -> bool {
        verifier::check_nearby_uniqueness(&self.inner)
    }

    fn density_exact<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &density::density_exact(&self.inner))
    }

    fn density_components<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyTuple>> {
        let (a, b) = density::density_components(&self.inner);
        PyTuple::new(py, [fraction(py, &a)?, fraction(py, &b)?])
    }

    fn density_empirical<'py>(&self, py: Python<'py>, m: u64) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &density::density_empirical(&self.inner, m))
    }

    fn __repr__(&self) -> String {
        format!("Code(r={})", self.inner.r)
    }
}

#[pyclass(name = "VerificationReport", frozen)]
struct Report {
    inner: verifier::VerificationReport,
}

#[pymethods]
impl Report {
    #[getter]
    fn valid(&self) -> bool {
        self.inner.valid
    }

    #[getter]
    fn coverage_failures(&self) -> Vec<Pair> {
        self.inner.coverage_failures.iter().copied().map(pair).collect()
    }

    #[getter]
    fn confusion_pairs(&self) -> Vec<(Pair, Pair)> {
        self.inner.confusion_pairs.iter().map(|&(u, v)| (pair(u), pair(v))).collect()
    }

    #[getter]
    fn confusion_count(&self) -> u64 {
        self.inner.confusion_count
    }

    #[getter]
    fn vertices_checked(&self) -> u64 {
        self.inner.vertices_checked
    }

    #[getter]
    fn pairs_checked(&self) -> u64 {
        self.inner.pairs_checked
    }

    fn __repr__(&self) -> String {
        hexid_core::cli::format_report(&self.inner).lines().next().unwrap_or_default().to_string()
    }
}

#[pyfunction]
fn density_theorem(py: Python<'_>, r: u64) -> PyResult<Bound<'_, PyAny>> {
    let q = density::density_theorem(r).map_err(value_error)?;
    fraction(py, &q)
}

/// One row of the density table, as printed by `hexid density`.
#[pyfunction]
#[pyo3(signature = (r, with_literature=false))]
fn density_row(r: u64, with_literature: bool) -> PyResult<String> {
    if r == 0 {
        return Err(PyValueError::new_err("r must be positive"));
    }
    Ok(hexid_core::cli::density_row(r, with_literature))
}

#[pymodule]
fn hexid(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCode>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(neighbors, m)?)?;
    m.add_function(wrap_pyfunction!(l1_distance, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(bfs_distance, m)?)?;
    m.add_function(wrap_pyfunction!(line_distance, m)?)?;
    m.add_function(wrap_pyfunction!(ball, m)?)?;
    m.add_function(wrap_pyfunction!(ball_row_segment, m)?)?;
    m.add_function(wrap_pyfunction!(density_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(density_row, m)?)?;
    Ok(())
}
