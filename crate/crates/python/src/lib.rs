//! Python bindings: polyominoes, zig-zag walks, ideals and classification.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use polyideal::algebra::{buchberger, Binomial, TermOrder};
use polyideal::classify::{serialize_record, WalkRecord};
use polyideal::enumerate::{self, Class};
use polyideal::geometry::{fixtures, Polyomino as CorePolyomino};
use polyideal::grid::{self, GridSpec};
use polyideal::text::{self, binomial_to_string};
use polyideal::toric;
use polyideal::walks::{self, SearchMode};

fn value_error<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, s: &str) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

#[pyclass(name = "Polyomino", module = "polyideal_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPolyomino {
    inner: CorePolyomino,
}

impl PyPolyomino {
    fn strings(&self, gens: &[Binomial]) -> Vec<String> {
        gens.iter().map(|g| binomial_to_string(g, &self.inner)).collect()
    }
}

#[pymethods]
impl PyPolyomino {
    /// Builds a polyomino from `(x, y)` cell coordinates; the result is translated to start at (1, 1).
    #[new]
    fn new(cells: Vec<(i32, i32)>) -> PyResult<Self> {
        CorePolyomino::new(&cells).map(|inner| PyPolyomino { inner }).map_err(value_error)
    }

    /// Parses the grid form (`#`/`.` rows) or the `poly{ (x,y);... }` form.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text::parse_polyomino(text).map(|inner| PyPolyomino { inner }).map_err(value_error)
    }

    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        fixtures::by_name(name)
            .map(|inner| PyPolyomino { inner })
            .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn cells(&self) -> Vec<(i32, i32)> {
        self.inner.cell_coords()
    }

    #[getter]
    fn vertices(&self) -> Vec<(i32, i32)> {
        self.inner.vertices().iter().map(|v| (v.x, v.y)).collect()
    }

    /// Lower-left corners of the holes, in vertex order.
    #[getter]
    fn holes(&self) -> Vec<(i32, i32)> {
        self.inner.holes().iter().map(|h| (h.lower_left_corner.x, h.lower_left_corner.y)).collect()
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    fn canonical_key(&self) -> String {
        self.inner.canonical_key()
    }

    fn canonical(&self) -> Self {
        PyPolyomino { inner: self.inner.canonical() }
    }

    fn render(&self) -> String {
        text::render(&self.inner)
    }

    fn inner_2_minors(&self) -> Vec<String> {
        self.strings(&self.inner.inner_2_minors())
    }

    /// Reduced degrevlex basis of the polyomino ideal.
    fn ideal_basis(&self) -> Vec<String> {
        let order = TermOrder::degrevlex(self.inner.vertices().len());
        self.strings(buchberger(&self.inner.inner_2_minors(), &order).elements())
    }

    /// Reduced degrevlex basis of the toric ideal.
    fn toric_basis(&self) -> Vec<String> {
        self.strings(toric::toric_ideal(&self.inner).elements())
    }

    /// True iff the binomial `m1 - m2` lies in the toric ideal, by the exponent-matrix test.
    fn toric_member(&self, binomial: &str) -> PyResult<bool> {
        let b = text::parse_binomial(binomial, &self.inner).map_err(value_error)?;
        Ok(toric::toric_member_binomial(&toric::build_alpha_matrix(&self.inner), &b))
    }

    fn __repr__(&self) -> String {
        format!("Polyomino({})", text::cell_list(&self.inner))
    }

    fn __str__(&self) -> String {
        text::render(&self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.cell_coords().hash(&mut h);
        h.finish()
    }
}

/// Zig-zag walks as dicts with `intervals`, `v`, `z`, `u` and `f_W`.
#[pyfunction]
#[pyo3(signature = (p, all = false))]
fn find_zigzag(py: Python<'_>, p: &PyPolyomino, all: bool) -> PyResult<Vec<Py<PyAny>>> {
    let mode = if all { SearchMode::All } else { SearchMode::First };
    walks::find_zigzag(&p.inner, mode)
        .iter()
        .map(|w| {
            let f = walks::walk_binomial(&p.inner, w).map_err(value_error)?;
            let mut value = serde_json::to_value(WalkRecord::from(w)).map_err(value_error)?;
            value["f_W"] = binomial_to_string(&f, &p.inner).into();
            json_to_py(py, &value.to_string())
        })
        .collect()
}

/// Classification record as a dict with the JSONL schema.
#[pyfunction]
fn classify(py: Python<'_>, p: &PyPolyomino) -> PyResult<Py<PyAny>> {
    let rec = py.detach(|| polyideal::classify::classify(&p.inner));
    json_to_py(py, &serialize_record(&rec))
}

#[pyfunction]
fn count_by_class(py: Python<'_>, rank: usize) -> PyResult<Py<PyAny>> {
    let counts = py.detach(|| enumerate::count_by_class(rank)).map_err(value_error)?;
    json_to_py(py, &serde_json::to_string(&counts).map_err(value_error)?)
}

#[pyfunction]
#[pyo3(signature = (rank, class_ = "all"))]
fn enumerate_free(py: Python<'_>, rank: usize, class_: &str) -> PyResult<Vec<PyPolyomino>> {
    let class = match class_ {
        "all" => Class::All,
        "simple" => Class::Simple,
        "holey" => Class::MultiplyConnected,
        other => return Err(PyValueError::new_err(format!("unknown class {other:?}"))),
    };
    let shapes = py.detach(|| enumerate::enumerate_free(rank, class)).map_err(value_error)?;
    Ok(shapes.into_iter().map(|inner| PyPolyomino { inner }).collect())
}

#[pyfunction]
fn make_grid(m: i32, n: i32, cols: Vec<(i32, i32)>, rows: Vec<(i32, i32)>) -> PyResult<PyPolyomino> {
    grid::make_grid(&GridSpec::new(m, n, cols, rows))
        .map(|inner| PyPolyomino { inner })
        .map_err(value_error)
}

/// `(m, n, cols, rows)` if the polyomino is a grid polyomino.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn recognize_grid(p: &PyPolyomino) -> Option<(i32, i32, Vec<(i32, i32)>, Vec<(i32, i32)>)> {
    grid::recognize_grid(&p.inner).map(|s| (s.m, s.n, s.col_blocks, s.row_blocks))
}

#[pymodule]
fn polyideal_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolyomino>()?;
    m.add_function(wrap_pyfunction!(find_zigzag, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(count_by_class, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_free, m)?)?;
    m.add_function(wrap_pyfunction!(make_grid, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_grid, m)?)?;
    Ok(())
}
