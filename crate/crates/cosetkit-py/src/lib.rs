//! Python bindings: groups with their coset machinery, hypergraphs, the
//! dual construction, coverings, and the verification suites.

use cosetkit::acyclicity;
use cosetkit::budget::Budget;
use cosetkit::catalog;
use cosetkit::covering;
use cosetkit::dual::Dual;
use cosetkit::group::{Group as CoreGroup, GroupSpec};
use cosetkit::hypergraph::Hypergraph as CoreHypergraph;
use cosetkit::mask::Mask;
use cosetkit::paths::{self, Constraint};
use cosetkit::verify::{self, Status};
use cosetkit::{Cayley, Error};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn budget(n: Option<u64>) -> Budget {
    match n {
        Some(n) => Budget::new(n),
        None => Budget::from_env(),
    }
}

/// A finite group over involutive generators, together with its Cayley
/// graph and coset partitions.
#[pyclass(name = "Group")]
struct PyGroup {
    g: Cayley,
}

impl PyGroup {
    fn mask(&self, labels: &[String]) -> PyResult<Mask> {
        let mut m = Mask::EMPTY;
        for l in labels {
            m = m.with(self.g.group.label_index(l).map_err(err)?);
        }
        Ok(m)
    }

    fn vertex(&self, word: &str) -> PyResult<u32> {
        Ok(self.g.group.eval(&self.g.group.parse_word(word).map_err(err)?))
    }

    fn words(&self, vs: &[u32]) -> Vec<String> {
        vs.iter().map(|&v| self.g.group.vertex_name(v)).collect()
    }
}

#[pymethods]
impl PyGroup {
    /// Build from a group spec in JSON form.
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        let spec = GroupSpec::from_json(json).map_err(err)?;
        Ok(PyGroup { g: Cayley::new(CoreGroup::build(&spec).map_err(err)?) })
    }

    /// Build a named catalog family instance, e.g. ("elementary_abelian", [2]).
    #[staticmethod]
    fn from_catalog(family: &str, params: Vec<usize>) -> PyResult<Self> {
        let spec = catalog::make(family, &params).map_err(err)?;
        Ok(PyGroup { g: Cayley::new(CoreGroup::build(&spec).map_err(err)?) })
    }

    #[getter]
    fn name(&self) -> String {
        self.g.group.name.clone()
    }

    #[getter]
    fn size(&self) -> usize {
        self.g.size()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.g.group.labels().to_vec()
    }

    /// Canonical word for the element a word denotes.
    fn element(&self, word: &str) -> PyResult<String> {
        Ok(self.g.group.vertex_name(self.vertex(word)?))
    }

    fn girth(&self) -> Option<usize> {
        acyclicity::girth(&self.g)
    }

    fn is_two_acyclic(&self) -> bool {
        self.g.is_two_acyclic()
    }

    /// (level, is_lower_bound): one less than the shortest coset cycle, or
    /// the search cap with is_lower_bound=True if none exists below it.
    #[pyo3(signature = (max_cycle_len = 8, budget_nodes = None))]
    fn acyclicity_level(
        &self,
        max_cycle_len: usize,
        budget_nodes: Option<u64>,
    ) -> PyResult<(usize, bool)> {
        let b = budget(budget_nodes);
        match acyclicity::find_coset_cycle(&self.g, max_cycle_len, &b).map_err(err)? {
            Some(c) => Ok((c.len() - 1, false)),
            None => Ok((max_cycle_len, true)),
        }
    }

    /// Members of the coset of `word` under the listed generators, as
    /// canonical words.
    fn coset(&self, word: &str, labels: Vec<String>) -> PyResult<Vec<String>> {
        let v = self.vertex(word)?;
        let m = self.mask(&labels)?;
        Ok(self.words(self.g.members(v, m)))
    }

    fn same_coset(&self, a: &str, b: &str, labels: Vec<String>) -> PyResult<bool> {
        Ok(self.g.same(self.vertex(a)?, self.vertex(b)?, self.mask(&labels)?))
    }

    /// The unique minimal generator subset whose coset joins all the given
    /// elements (requires 2-acyclicity).
    fn gen_set(&self, words: Vec<String>) -> PyResult<Vec<String>> {
        let vs: Vec<u32> = words.iter().map(|w| self.vertex(w)).collect::<PyResult<_>>()?;
        let m = self.g.gen_set(&vs).map_err(err)?;
        Ok(m.iter().map(|e| self.g.group.labels()[e].clone()).collect())
    }

    /// Minimal coset-path length between two vertices under a path class
    /// ("any", "nontrivial", "inner", "non-t"; the last needs gamma).
    #[pyo3(signature = (frm, to, constraint = "nontrivial", gamma = None, budget_nodes = None))]
    fn distance(
        &self,
        frm: &str,
        to: &str,
        constraint: &str,
        gamma: Option<Vec<String>>,
        budget_nodes: Option<u64>,
    ) -> PyResult<Option<usize>> {
        let v = self.vertex(frm)?;
        let u = self.vertex(to)?;
        let gm = gamma.map(|g| self.mask(&g)).transpose()?;
        let cons = match constraint {
            "any" => Constraint::Any,
            "nontrivial" => Constraint::NonTrivial,
            "inner" => Constraint::Inner,
            "non-t" => Constraint::NonT(
                gm.ok_or_else(|| PyValueError::new_err("constraint non-t needs gamma"))?,
            ),
            other => return Err(PyValueError::new_err(format!("unknown constraint '{other}'"))),
        };
        let max_len = self.g.size().saturating_sub(1).max(2);
        let b = budget(budget_nodes);
        Ok(paths::find_min_path(&self.g, v, u, cons, max_len, &b)
            .map_err(err)?
            .map(|p| p.len()))
    }

    /// (avoiding_distance, dual_distance, consistent) for the family
    /// anchored at `frm` over the generators `gamma`.
    #[pyo3(signature = (frm, to, gamma, budget_nodes = None))]
    fn two_distances(
        &self,
        frm: &str,
        to: &str,
        gamma: Vec<String>,
        budget_nodes: Option<u64>,
    ) -> PyResult<(Option<usize>, Option<usize>, bool)> {
        let b = budget(budget_nodes);
        let d = Dual::build(&self.g, &b).map_err(err)?;
        let r = d
            .check_two_distances(&self.g, self.vertex(frm)?, self.vertex(to)?, self.mask(&gamma)?, &b)
            .map_err(err)?;
        Ok((r.path_distance, r.dual_distance, r.consistent))
    }

    /// The dual hypergraph: one vertex per coset, one hyperedge per element.
    #[pyo3(signature = (budget_nodes = None))]
    fn dual(&self, budget_nodes: Option<u64>) -> PyResult<PyHypergraph> {
        let d = Dual::build(&self.g, &budget(budget_nodes)).map_err(err)?;
        Ok(PyHypergraph { h: d.hypergraph().clone() })
    }

    /// Convex closure of cosets given as (word, [labels]) pairs; returns
    /// (closure as (labels, members) pairs, contained_in_dual_closure).
    #[pyo3(signature = (cosets, bound = 3, budget_nodes = None))]
    fn convex_closure(
        &self,
        cosets: Vec<(String, Vec<String>)>,
        bound: usize,
        budget_nodes: Option<u64>,
    ) -> PyResult<(Vec<(Vec<String>, Vec<String>)>, bool)> {
        let b = budget(budget_nodes);
        let set: Vec<_> = cosets
            .iter()
            .map(|(w, ls)| Ok(self.g.coset(self.vertex(w)?, self.mask(ls)?)))
            .collect::<PyResult<_>>()?;
        let d = Dual::build(&self.g, &b).map_err(err)?;
        let r = d.convex_closure_cayley(&self.g, &set, bound, &b).map_err(err)?;
        let out = r
            .cosets
            .iter()
            .map(|&c| {
                let labels = c.mask.iter().map(|e| self.g.group.labels()[e].clone()).collect();
                (labels, self.words(self.g.coset_members(c)))
            })
            .collect();
        Ok((out, r.contained_in_dual))
    }
}

/// A finite hypergraph with named vertices.
#[pyclass(name = "Hypergraph")]
struct PyHypergraph {
    h: CoreHypergraph,
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(names: Vec<String>, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyHypergraph { h: CoreHypergraph::new(names, edges).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyHypergraph { h: CoreHypergraph::from_json(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        self.h.to_json()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.h.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.h.edge_count()
    }

    fn is_alpha_acyclic(&self) -> bool {
        self.h.is_alpha_acyclic()
    }

    #[pyo3(signature = (n, budget_nodes = None))]
    fn is_n_acyclic(&self, n: usize, budget_nodes: Option<u64>) -> PyResult<bool> {
        self.h.is_n_acyclic(n, &budget(budget_nodes)).map_err(err)
    }

    #[pyo3(signature = (vertices, bound, budget_nodes = None))]
    fn convex_closure(
        &self,
        vertices: Vec<usize>,
        bound: usize,
        budget_nodes: Option<u64>,
    ) -> PyResult<Vec<usize>> {
        self.h.convex_closure(&vertices, bound, &budget(budget_nodes)).map_err(err)
    }
}

/// Check whether `source` covers `target`: returns a dict with keys
/// compatible, witness_word, fiber_size, covering_verified.
#[pyfunction]
fn covers<'py>(
    py: Python<'py>,
    source: &PyGroup,
    target: &PyGroup,
) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    let compat = covering::check_compatible(&source.g.group, &target.g.group).map_err(err)?;
    out.set_item("compatible", compat.compatible)?;
    out.set_item("witness_word", compat.witness.clone())?;
    if compat.compatible {
        let m = covering::covering_map(&source.g.group, &target.g.group).map_err(err)?;
        out.set_item("fiber_size", source.g.size() / target.g.size())?;
        let (ok, _) = covering::verify_covering(&m);
        out.set_item("covering_verified", ok)?;
    }
    Ok(out)
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::Refuted => "refuted",
        Status::UnverifiedGuard => "unverified-guard",
        Status::BudgetExceeded => "budget-exceeded",
    }
}

/// Run one verification suite over the standard catalog.
#[pyfunction]
#[pyo3(signature = (suite, budget_nodes = None))]
fn run_suite<'py>(
    py: Python<'py>,
    suite: &str,
    budget_nodes: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let b = budget(budget_nodes);
    let r = verify::run_suite(suite, &b).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("suite", r.suite)?;
    out.set_item("status", status_str(r.status))?;
    out.set_item("cases", r.cases)?;
    out.set_item("unverified", r.unverified)?;
    out.set_item("skipped", r.skipped)?;
    out.set_item("witness", r.witness)?;
    out.set_item("instances", r.instances)?;
    Ok(out)
}

/// Names of all verification suites.
#[pyfunction]
fn suites() -> Vec<&'static str> {
    verify::SUITES.to_vec()
}

/// Catalog family names.
#[pyfunction]
fn families() -> Vec<&'static str> {
    catalog::FAMILIES.to_vec()
}

#[pymodule]
fn cosetkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(covers, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    Ok(())
}
