//! Python bindings. Graphs cross the boundary as `Graph` objects or as the
//! JSON interchange format; colourings come back already verified.

use nonrep::blocking::{self, BlockingSet};
use nonrep::colour::{self, PeelingLayering};
use nonrep::gen::{self, GenKind, GenSpec};
use nonrep::{verify, words, EmbeddedGraph, Error};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

create_exception!(nonrep, NonrepError, PyException);
create_exception!(nonrep, ParseError, NonrepError);
create_exception!(nonrep, ClassMismatch, NonrepError);
create_exception!(nonrep, VerificationError, NonrepError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Malformed(_)
        | Error::DartOutOfRange(_)
        | Error::NotPlanar { .. }
        | Error::Json(_)
        | Error::PartialColouring { .. }
        | Error::InvalidSpec(_) => ParseError::new_err(msg),
        Error::NotOuterplane
        | Error::NotSimple
        | Error::NotBiconnected
        | Error::HasBridge
        | Error::NotATree
        | Error::NotCactus
        | Error::OddCycle(_)
        | Error::MultipleBlocks(_)
        | Error::GuardExceeded { .. }
        | Error::CycleTooShort(_)
        | Error::NotOuterEdge(..) => ClassMismatch::new_err(msg),
        Error::Unverified(_) => VerificationError::new_err(msg),
        _ => NonrepError::new_err(msg),
    }
}

/// A plane multigraph given by a rotation system.
#[pyclass(name = "Graph", module = "nonrep", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: EmbeddedGraph,
}

#[pymethods]
impl PyGraph {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        EmbeddedGraph::from_json_str(text).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    /// Some plane embedding of the edge list; only meaningful for forests
    /// and other graphs whose embedding doesn't matter.
    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        EmbeddedGraph::from_edges_any_embedding(n, edges).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    /// The `n`-gon `0..n` with extra chords.
    #[staticmethod]
    #[pyo3(signature = (n, chords=Vec::new()))]
    fn polygon(n: usize, chords: Vec<(usize, usize)>) -> PyResult<Self> {
        gen::try_polygon_with_chords(n, &chords).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    /// Vertex sequences of the face walks, outer faces first.
    fn faces(&self) -> Vec<Vec<usize>> {
        let g = &self.inner;
        let mut ids: Vec<usize> = g.outer_faces().collect();
        ids.extend(g.inner_faces());
        ids.into_iter().map(|f| g.face_vertices(f)).collect()
    }

    fn is_outerplane(&self) -> bool {
        self.inner.is_outerplane()
    }

    fn is_biconnected(&self) -> bool {
        self.inner.is_biconnected()
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={}, faces={})",
            self.inner.vertex_count(),
            self.inner.edge_count(),
            self.inner.face_count()
        )
    }
}

#[pyclass(name = "Colouring", module = "nonrep", frozen)]
struct PyColouring {
    #[pyo3(get)]
    colours: Vec<usize>,
    #[pyo3(get)]
    palette_max: usize,
    #[pyo3(get)]
    verified: bool,
}

#[pymethods]
impl PyColouring {
    fn distinct_colours(&self) -> usize {
        let mut c = self.colours.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    fn to_json(&self) -> String {
        serde_json::json!({"colours": self.colours, "palette_max": self.palette_max, "verified": self.verified})
            .to_string()
    }

    fn __len__(&self) -> usize {
        self.colours.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Colouring(distinct={}, palette_max={}, verified={})",
            self.distinct_colours(),
            self.palette_max,
            self.verified
        )
    }
}

impl From<colour::Colouring> for PyColouring {
    fn from(c: colour::Colouring) -> Self {
        PyColouring { colours: c.colours, palette_max: c.palette_max, verified: c.verified }
    }
}

#[pyclass(name = "Counterexample", module = "nonrep", frozen)]
struct PyCounterexample {
    #[pyo3(get)]
    face: usize,
    #[pyo3(get)]
    vertices: Vec<usize>,
    #[pyo3(get)]
    colours: Vec<usize>,
}

#[pymethods]
impl PyCounterexample {
    fn __repr__(&self) -> String {
        format!("Counterexample(face={}, vertices={:?}, colours={:?})", self.face, self.vertices, self.colours)
    }
}

fn run_colouring(
    py: Python<'_>,
    g: &PyGraph,
    f: fn(&EmbeddedGraph) -> nonrep::Result<colour::Colouring>,
) -> PyResult<PyColouring> {
    let g = g.inner.clone();
    py.detach(move || f(&g)).map(PyColouring::from).map_err(to_py)
}

/// At most 11 colours.
#[pyfunction]
fn colour_outerplane(py: Python<'_>, g: &PyGraph) -> PyResult<PyColouring> {
    run_colouring(py, g, colour::colour_outerplane)
}

/// At most 22 colours.
#[pyfunction]
fn colour_plane(py: Python<'_>, g: &PyGraph) -> PyResult<PyColouring> {
    run_colouring(py, g, colour::colour_plane)
}

/// At most 7 colours for cacti whose cycles are all even.
#[pyfunction]
fn colour_cactus_even(py: Python<'_>, g: &PyGraph) -> PyResult<PyColouring> {
    run_colouring(py, g, colour::colour_cactus_even)
}

/// At most 7 colours for outerplane graphs with at most one 2-connected
/// component.
#[pyfunction]
fn colour_outerplane_single_block(py: Python<'_>, g: &PyGraph) -> PyResult<PyColouring> {
    run_colouring(py, g, colour::colour_outerplane_single_block)
}

/// `None` if every facial path is nonrepetitively coloured.
#[pyfunction]
fn verify_colouring(g: &PyGraph, colours: Vec<usize>) -> PyResult<Option<PyCounterexample>> {
    let cx = verify::verify_facial_nonrepetitive(&g.inner, &colours).map_err(to_py)?;
    Ok(cx.map(|c| PyCounterexample { face: c.face, vertices: c.vertices, colours: c.colours }))
}

#[pyfunction]
fn facial_paths(g: &PyGraph) -> Vec<Vec<usize>> {
    verify::facial_paths(&g.inner).into_iter().map(|p| p.vertices).collect()
}

#[pyfunction]
fn exact_pi_f(g: &PyGraph, max_colours: usize) -> PyResult<Option<usize>> {
    verify::exact_pi_f(&g.inner, max_colours).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (kind, n, seed=0, chord_prob=None, attach_prob=None))]
fn generate(kind: &str, n: usize, seed: u64, chord_prob: Option<f64>, attach_prob: Option<f64>) -> PyResult<PyGraph> {
    let kind: GenKind = kind.parse().map_err(to_py)?;
    let mut spec = GenSpec::new(kind, n, seed);
    if let Some(p) = chord_prob {
        spec.chord_prob = p;
    }
    if let Some(p) = attach_prob {
        spec.attach_prob = p;
    }
    gen::generate(&spec).map(|inner| PyGraph { inner }).map_err(to_py)
}

#[pyfunction]
fn blocking_set_even(g: &PyGraph) -> PyResult<Vec<usize>> {
    blocking::blocking_set_even(&g.inner).map(|b| b.vertices().to_vec()).map_err(to_py)
}

#[pyfunction]
fn blocking_set_good_size(g: &PyGraph) -> PyResult<Vec<usize>> {
    blocking::blocking_set_good_size(&g.inner).map(|b| b.vertices().to_vec()).map_err(to_py)
}

/// Violations of the blocking-set conditions as JSON strings; empty when
/// the set is valid.
#[pyfunction]
fn validate_blocking_set(g: &PyGraph, b: Vec<usize>) -> Vec<String> {
    let report = blocking::validate_blocking_set(&g.inner, &BlockingSet::new(b));
    report.violations.iter().map(|v| serde_json::to_string(v).unwrap()).collect()
}

/// The blocking graph and, per vertex of it, the original vertex.
#[pyfunction]
fn blocking_graph(g: &PyGraph, b: Vec<usize>) -> PyResult<(PyGraph, Vec<usize>)> {
    let bg = blocking::blocking_graph(&g.inner, &BlockingSet::new(b)).map_err(to_py)?;
    Ok((PyGraph { inner: bg.graph }, bg.host_vertex))
}

#[pyfunction]
fn peeling_layering(g: &PyGraph) -> Vec<usize> {
    let PeelingLayering { layer } = colour::peeling_layering(&g.inner);
    layer
}

#[pyfunction]
fn is_nonrepetitive(seq: Vec<i64>) -> bool {
    words::is_nonrepetitive(&seq)
}

#[pyfunction]
fn ternary_nonrepetitive(n: usize) -> Vec<usize> {
    words::ternary_nonrepetitive(n)
}

#[pyfunction]
fn cycle_colouring(n: usize) -> PyResult<Vec<usize>> {
    words::cycle_colouring(n).map_err(to_py)
}

#[pymodule]
#[pyo3(name = "nonrep")]
pub fn nonrep_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyGraph>()?;
    m.add_class::<PyColouring>()?;
    m.add_class::<PyCounterexample>()?;
    m.add("NonrepError", py.get_type::<NonrepError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("ClassMismatch", py.get_type::<ClassMismatch>())?;
    m.add("VerificationError", py.get_type::<VerificationError>())?;
    m.add_function(wrap_pyfunction!(colour_outerplane, m)?)?;
    m.add_function(wrap_pyfunction!(colour_plane, m)?)?;
    m.add_function(wrap_pyfunction!(colour_cactus_even, m)?)?;
    m.add_function(wrap_pyfunction!(colour_outerplane_single_block, m)?)?;
    m.add_function(wrap_pyfunction!(verify_colouring, m)?)?;
    m.add_function(wrap_pyfunction!(facial_paths, m)?)?;
    m.add_function(wrap_pyfunction!(exact_pi_f, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(blocking_set_even, m)?)?;
    m.add_function(wrap_pyfunction!(blocking_set_good_size, m)?)?;
    m.add_function(wrap_pyfunction!(validate_blocking_set, m)?)?;
    m.add_function(wrap_pyfunction!(blocking_graph, m)?)?;
    m.add_function(wrap_pyfunction!(peeling_layering, m)?)?;
    m.add_function(wrap_pyfunction!(is_nonrepetitive, m)?)?;
    m.add_function(wrap_pyfunction!(ternary_nonrepetitive, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_colouring, m)?)?;
    m.add("PALETTE_OUTERPLANE", colour::OUTERPLANE_PALETTE)?;
    m.add("PALETTE_PLANE", colour::PLANE_PALETTE)?;
    Ok(())
}
