//! Python bindings. Structured results come back as plain dicts and lists.

use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use rainbow_core::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyOSError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Converts any serializable value into the matching Python object.
fn to_py<'py>(py: Python<'py>, value: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json_string(value)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn serde_json_string(value: &impl serde::Serialize) -> PyResult<String> {
    serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
mod rainbow {
    use super::*;
    use rainbow_core::analysis::{attack_with_budget, verify_local, AttackPattern};
    use rainbow_core::colorings::{self, ColoringFamily as CoreFamily};
    use rainbow_core::hypergraph::{self, UniformHypergraph, VertexOrder};
    use rainbow_core::{claims, locality, solver};

    /// An r-uniform hypergraph on vertices `0..n`.
    #[pyclass(frozen, eq, hash, from_py_object)]
    #[derive(Clone, PartialEq, Eq, Hash)]
    pub struct Hypergraph {
        pub(crate) inner: UniformHypergraph,
    }

    #[pymethods]
    impl Hypergraph {
        #[new]
        fn new(r: usize, n: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
            Ok(Hypergraph {
                inner: UniformHypergraph::new(r, n, edges).map_err(py_err)?,
            })
        }

        /// Builds a named family such as `"sp3"` or `"sunflower(1,4)"`.
        #[staticmethod]
        #[pyo3(signature = (id, r = 3))]
        fn family(id: &str, r: usize) -> PyResult<Self> {
            Ok(Hypergraph {
                inner: hypergraph::make_family(id, r).map_err(py_err)?,
            })
        }

        #[staticmethod]
        fn from_json(text: &str) -> PyResult<Self> {
            let inner = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
            Ok(Hypergraph { inner })
        }

        fn to_json(&self) -> PyResult<String> {
            serde_json_string(&self.inner)
        }

        #[getter]
        fn r(&self) -> usize {
            self.inner.r()
        }

        #[getter]
        fn n(&self) -> usize {
            self.inner.n()
        }

        #[getter]
        fn edges(&self) -> Vec<Vec<usize>> {
            self.inner.edges().to_vec()
        }

        fn canonical(&self) -> Self {
            Hypergraph {
                inner: hypergraph::canonical_form(&self.inner).0,
            }
        }

        fn is_isomorphic(&self, other: &Hypergraph) -> bool {
            hypergraph::is_isomorphic(&self.inner, &other.inner)
        }

        fn with_isolated(&self, count: usize) -> PyResult<Self> {
            Ok(Hypergraph {
                inner: self.inner.with_isolated(count).map_err(py_err)?,
            })
        }

        fn __repr__(&self) -> String {
            format!("Hypergraph(r={}, n={}, edges={:?})", self.inner.r(), self.inner.n(), self.inner.edges())
        }
    }

    /// One edge coloring of the complete r-graph per host vertex.
    #[pyclass(frozen, from_py_object)]
    #[derive(Clone)]
    pub struct ColoringFamily {
        pub(crate) inner: CoreFamily,
    }

    #[pymethods]
    impl ColoringFamily {
        #[staticmethod]
        fn constant(n: usize, r: usize) -> PyResult<Self> {
            wrap(CoreFamily::constant(n, r))
        }

        /// Reads an RLCF file.
        #[staticmethod]
        fn load(path: &str) -> PyResult<Self> {
            let mut file = std::fs::File::open(path).map_err(|e| PyOSError::new_err(e.to_string()))?;
            wrap(CoreFamily::read_from(&mut file))
        }

        fn save(&self, path: &str) -> PyResult<()> {
            std::fs::write(path, self.inner.to_bytes()).map_err(|e| PyOSError::new_err(e.to_string()))
        }

        #[staticmethod]
        fn from_bytes(data: &[u8]) -> PyResult<Self> {
            wrap(CoreFamily::from_bytes(data))
        }

        fn to_bytes(&self) -> Vec<u8> {
            self.inner.to_bytes()
        }

        #[getter]
        fn n(&self) -> usize {
            self.inner.n()
        }

        #[getter]
        fn r(&self) -> usize {
            self.inner.r()
        }

        #[getter]
        fn k(&self) -> u32 {
            self.inner.k()
        }

        #[getter]
        fn seed(&self) -> u64 {
            self.inner.provenance.seed
        }

        /// `f_v(edge)`; the edge is sorted first.
        fn color(&self, v: usize, edge: Vec<usize>) -> PyResult<u32> {
            let mut e = edge;
            e.sort_unstable();
            if v >= self.inner.n() || e.len() != self.inner.r() || e.iter().any(|&x| x >= self.inner.n()) || e.windows(2).any(|w| w[0] == w[1]) {
                return Err(PyValueError::new_err("vertex or edge out of range"));
            }
            Ok(self.inner.color_of(v, &e))
        }

        fn __repr__(&self) -> String {
            format!("ColoringFamily(n={}, r={}, k={})", self.inner.n(), self.inner.r(), self.inner.k())
        }
    }

    fn wrap(f: rainbow_core::Result<CoreFamily>) -> PyResult<ColoringFamily> {
        Ok(ColoringFamily { inner: f.map_err(py_err)? })
    }

    fn order(seq: Option<Vec<usize>>, n: usize) -> PyResult<VertexOrder> {
        match seq {
            Some(s) => VertexOrder::from_sequence(&s).map_err(py_err),
            None => Ok(VertexOrder::identity(n)),
        }
    }

    /// `{"status", "witness", "orders_examined"}`; the witness lists ranks.
    #[pyfunction]
    fn decide_2ll<'py>(py: Python<'py>, h: &Hypergraph) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &locality::decide_2ll(&h.inner))
    }

    /// Whether the order, given from the lowest rank up, makes `h` 2LL.
    #[pyfunction]
    fn is_2ll_under(h: &Hypergraph, sequence: Vec<usize>) -> PyResult<bool> {
        let o = VertexOrder::from_sequence(&sequence).map_err(py_err)?;
        if o.len() != h.inner.n() {
            return Err(PyValueError::new_err("order length differs from n"));
        }
        Ok(locality::is_2ll_under(&h.inner, &o))
    }

    #[pyfunction]
    fn classify_all<'py>(py: Python<'py>, r: usize, m: usize) -> PyResult<Bound<'py, PyAny>> {
        let records = py.detach(|| locality::classify_all(r, m));
        to_py(py, &records)
    }

    #[pyfunction]
    #[pyo3(signature = (n, r = 3, order_sequence = None))]
    fn deterministic_family(n: usize, r: usize, order_sequence: Option<Vec<usize>>) -> PyResult<ColoringFamily> {
        wrap(colorings::deterministic_family(n, r, &order(order_sequence, n)?))
    }

    #[pyfunction]
    #[pyo3(signature = (n, r, h, seed = 0, k = None, budget = None))]
    fn lll_sample(n: usize, r: usize, h: usize, seed: u64, k: Option<u32>, budget: Option<u64>) -> PyResult<ColoringFamily> {
        let res = match k {
            Some(k) => colorings::lll_sample_with_k(n, r, h, k, seed, budget),
            None => colorings::lll_sample(n, r, h, seed, budget),
        };
        wrap(res.map(|(f, _)| f))
    }

    #[pyfunction]
    fn lll_k(n: usize, r: usize, h: usize) -> PyResult<u32> {
        colorings::lll_k(n, r, h).map_err(py_err)
    }

    #[pyfunction]
    fn product_lift(family: &ColoringFamily, anchors: Vec<usize>) -> PyResult<ColoringFamily> {
        wrap(colorings::product_lift(&family.inner, &anchors))
    }

    /// Searches for the two (p,q)-colorings and combines them.
    #[pyfunction]
    #[pyo3(signature = (n, seed = 0, budget = 2_000_000))]
    fn tce_family(n: usize, seed: u64, budget: u64) -> PyResult<ColoringFamily> {
        let missing = || PyValueError::new_err("no suitable (p,q)-coloring found");
        let gamma = claims::find_pq_coloring(n, 3, 4, 3, seed, budget).map_err(py_err)?.ok_or_else(missing)?;
        let rho = claims::find_pq_coloring(n, 4, 5, 4, seed, budget).map_err(py_err)?.ok_or_else(missing)?;
        wrap(colorings::tce_family(n, &gamma, &rho))
    }

    /// `{"lower", "upper"}` for the least number of colors of a (p,q)-coloring.
    #[pyfunction]
    #[pyo3(signature = (n, t, p, q, seed = 0, budget = 2_000_000))]
    fn min_pq_colors<'py>(py: Python<'py>, n: usize, t: usize, p: usize, q: usize, seed: u64, budget: u64) -> PyResult<Bound<'py, PyAny>> {
        let res = colorings::min_pq_colors(n, t, p, q, seed, budget).map_err(py_err)?;
        to_py(py, &serde_json_value_pair(res.lower, res.upper))
    }

    fn serde_json_value_pair(lower: u32, upper: Option<u32>) -> std::collections::BTreeMap<&'static str, Option<u32>> {
        [("lower", Some(lower)), ("upper", upper)].into_iter().collect()
    }

    /// `{"result": "ok", "copies"}` or `{"result": "violated", "witness"}`.
    #[pyfunction]
    fn verify_local_coloring<'py>(py: Python<'py>, family: &ColoringFamily, pattern: &Hypergraph) -> PyResult<Bound<'py, PyAny>> {
        let res = py.detach(|| verify_local(&family.inner, &pattern.inner)).map_err(py_err)?;
        to_py(py, &res)
    }

    /// A violation witness dict, or `None` when the search gives up.
    #[pyfunction]
    #[pyo3(signature = (family, pattern, budget = 200_000))]
    fn attack<'py>(py: Python<'py>, family: &ColoringFamily, pattern: &str, budget: u64) -> PyResult<Bound<'py, PyAny>> {
        let p: AttackPattern = pattern.parse().map_err(py_err)?;
        let w = py.detach(|| attack_with_budget(&family.inner, p, budget)).map_err(py_err)?;
        to_py(py, &w)
    }

    /// Certificate dict; the satisfying family, if any, is returned alongside.
    #[pyfunction]
    #[pyo3(signature = (n, r, pattern, k, budget = 10_000_000))]
    fn solve<'py>(py: Python<'py>, n: usize, r: usize, pattern: &Hypergraph, k: u32, budget: u64) -> PyResult<(Bound<'py, PyAny>, Option<ColoringFamily>)> {
        let cert = py.detach(|| solver::exists_local_coloring(n, r, &pattern.inner, k, budget)).map_err(py_err)?;
        let family = cert.family.clone().map(|inner| ColoringFamily { inner });
        Ok((to_py(py, &cert)?, family))
    }

    #[pyfunction]
    #[pyo3(signature = (n, r, pattern, k_max = 8, budget = 10_000_000))]
    fn min_colors<'py>(py: Python<'py>, n: usize, r: usize, pattern: &Hypergraph, k_max: u32, budget: u64) -> PyResult<Bound<'py, PyAny>> {
        let res = py.detach(|| solver::min_colors(n, r, &pattern.inner, k_max, budget)).map_err(py_err)?;
        to_py(py, &res)
    }

    /// `{"core", "petals"}` or `None`.
    #[pyfunction]
    fn find_sunflower<'py>(py: Python<'py>, h: &Hypergraph, m: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &hypergraph::find_sunflower(&h.inner, m))
    }

    #[pyfunction]
    fn cube_bridge(vectors: Vec<String>) -> PyResult<Hypergraph> {
        Ok(Hypergraph {
            inner: hypergraph::cube_bridge(&vectors).map_err(py_err)?,
        })
    }

    /// `{"id", "passed", "detail"}` for a registered claim.
    #[pyfunction]
    #[pyo3(signature = (id, seed = 0))]
    fn reproduce<'py>(py: Python<'py>, id: &str, seed: u64) -> PyResult<Bound<'py, PyAny>> {
        let report = py.detach(|| claims::run_claim(id, seed)).map_err(py_err)?;
        to_py(py, &report)
    }

    #[pymodule_init]
    fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
        m.add("CLAIM_IDS", claims::CLAIM_IDS.to_vec())
    }
}
