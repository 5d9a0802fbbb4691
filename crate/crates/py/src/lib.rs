//! Python bindings. Errors surface as `ValueError` carrying the library message.

// pyo3 0.22's generated wrappers trip this lint on every fallible method
#![allow(clippy::useless_conversion)]

use std::collections::BTreeSet;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use jtlab::algebra::{annihilator, quotient, GradedIdeal};
use jtlab::codes::{
    cell_dimension, dim_gt, enumerate_cijt, enumerate_diagonal_partitions, hook_code_direct, iota,
    is_cijt, partition_to_branch_label,
};
use jtlab::hessians::{
    cijt_from_hessian_subset, generic_jordan_type, predicted_nonvanishing_set, GenericWhich,
};
use jtlab::partition::{ci_hilbert_of, dominance_leq, is_symmetric_jdt};
use jtlab::poly::parse_poly_list;
use jtlab::realize::{
    construct_ci, realize_all, verify_realization, LambdaSource, RealizationReport,
};

/// `(partition, generators, all_passed, [(check, passed)])`
type ReportTuple = (String, Vec<String>, bool, Vec<(String, bool)>);

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Partition", module = "jtlab", frozen, eq, ord, hash)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPartition(jtlab::Partition);

#[pymethods]
impl PyPartition {
    /// Accepts a list of parts or a string such as "6,4,1^2".
    #[new]
    fn new(spec: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = spec.extract::<String>() {
            return s.parse().map(PyPartition).map_err(err);
        }
        let parts: Vec<usize> = spec.extract()?;
        jtlab::Partition::new(parts).map(PyPartition).map_err(err)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn diagonal_lengths(&self) -> Vec<usize> {
        self.0.diagonal_lengths()
    }

    /// The CI-shaped Hilbert function whose diagonals match, if any.
    fn hilbert(&self) -> PyResult<PyHilbert> {
        ci_hilbert_of(&self.0).map(PyHilbert).map_err(err)
    }

    fn dominated_by(&self, other: &PyPartition) -> PyResult<bool> {
        dominance_leq(&self.0, &other.0).map_err(err)
    }

    fn is_cijt(&self) -> PyResult<bool> {
        is_cijt(&self.0).map_err(err)
    }

    fn is_symmetric(&self) -> PyResult<bool> {
        let t = ci_hilbert_of(&self.0).map_err(err)?;
        is_symmetric_jdt(&self.0, &t).map_err(err)
    }

    fn branch_label(&self) -> PyResult<String> {
        partition_to_branch_label(&self.0)
            .map(|b| b.to_string())
            .map_err(err)
    }

    /// Traditional and subscripted forms of the hook code.
    fn hook_code(&self) -> PyResult<(String, String)> {
        let h = hook_code_direct(&self.0).map_err(err)?;
        Ok((h.traditional_string(), h.subscripted_string()))
    }

    fn cell_dimension(&self) -> usize {
        cell_dimension(&self.0)
    }

    /// Hessian orders that do not vanish for a linear form with this Jordan type.
    fn nonvanishing_hessians(&self) -> PyResult<BTreeSet<usize>> {
        predicted_nonvanishing_set(&self.0).map_err(err)
    }

    fn iota(&self) -> PyResult<Self> {
        iota(&self.0).map(PyPartition).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.0)
    }
}

#[pyclass(name = "HilbertFunction", module = "jtlab", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyHilbert(jtlab::HilbertFunction);

#[pymethods]
impl PyHilbert {
    #[new]
    fn new(values: &Bound<'_, PyAny>) -> PyResult<Self> {
        let values: Vec<usize> = match values.extract::<String>() {
            Ok(s) => jtlab::partition::parse_caret_list(&s).map_err(err)?,
            Err(_) => values.extract()?,
        };
        jtlab::HilbertFunction::new(values)
            .map(PyHilbert)
            .map_err(err)
    }

    #[staticmethod]
    fn from_dk(d: usize, k: usize) -> PyResult<Self> {
        jtlab::HilbertFunction::from_dk(d, k)
            .map(PyHilbert)
            .map_err(err)
    }

    #[getter]
    fn values(&self) -> Vec<usize> {
        self.0.values().to_vec()
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn j(&self) -> usize {
        self.0.j()
    }

    fn active_hessians(&self) -> Vec<usize> {
        jtlab::hessians::active_hessian_indices(&self.0)
    }

    fn dim_gt(&self) -> usize {
        dim_gt(&self.0)
    }

    #[pyo3(signature = (cijt_only = false))]
    fn partitions(&self, cijt_only: bool) -> PyResult<Vec<PyPartition>> {
        let v = if cijt_only {
            enumerate_cijt(&self.0)
        } else {
            enumerate_diagonal_partitions(&self.0)
        };
        Ok(v.map_err(err)?.into_iter().map(PyPartition).collect())
    }

    fn partition_for_hessians(&self, nonvanishing: BTreeSet<usize>) -> PyResult<PyPartition> {
        cijt_from_hessian_subset(&self.0, &nonvanishing)
            .map(PyPartition)
            .map_err(err)
    }

    /// `which` is "sl", "top" or an order i.
    fn generic_type(&self, which: &Bound<'_, PyAny>) -> PyResult<PyPartition> {
        let w = match which.extract::<usize>() {
            Ok(i) => GenericWhich::Order(i),
            Err(_) => match which.extract::<String>()?.as_str() {
                "sl" => GenericWhich::StrongLefschetz,
                "top" => GenericWhich::Top,
                other => {
                    return Err(PyValueError::new_err(format!(
                        "unknown generic type {other:?}"
                    )))
                }
            },
        };
        generic_jordan_type(&self.0, w)
            .map(PyPartition)
            .map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HilbertFunction('{}')", self.0)
    }
}

fn report_tuple(r: &RealizationReport, gens: Vec<String>) -> ReportTuple {
    let checks = r
        .checks
        .iter()
        .map(|c| (c.name.to_string(), c.passed))
        .collect();
    (r.partition.to_string(), gens, r.all_passed(), checks)
}

/// Builds and verifies a CI realizing `p`. With no seed the free parameters are zero.
///
/// Returns `(partition, generators, all_passed, [(check, passed)])`.
#[pyfunction]
#[pyo3(signature = (p, seed = None))]
fn realize(p: &PyPartition, seed: Option<u64>) -> PyResult<ReportTuple> {
    let source = seed.map_or(LambdaSource::Zero, LambdaSource::Seed);
    let r = construct_ci(&p.0, &source).map_err(err)?;
    let gens = r.ideal.generators().iter().map(|g| g.to_string()).collect();
    Ok(report_tuple(&verify_realization(&r), gens))
}

/// Realizes every CIJT partition of `t`.
#[pyfunction]
fn realize_every(t: &PyHilbert, seed: u64) -> PyResult<Vec<ReportTuple>> {
    let all = realize_all(&t.0, seed).map_err(err)?;
    Ok(all
        .iter()
        .map(|(r, rep)| {
            report_tuple(
                rep,
                r.ideal.generators().iter().map(|g| g.to_string()).collect(),
            )
        })
        .collect())
}

/// Jordan type of `ell` on R/I, with I given as comma separated generators.
#[pyfunction]
#[pyo3(signature = (ideal, ell = "x"))]
fn jordan_type(ideal: &str, ell: &str) -> PyResult<PyPartition> {
    let ideal = GradedIdeal::new(parse_poly_list(ideal).map_err(err)?).map_err(err)?;
    let alg = quotient(&ideal).map_err(err)?;
    alg.jordan_type(&ell.parse().map_err(err)?)
        .map(PyPartition)
        .map_err(err)
}

/// Jordan type of `ell` on R/Ann F for a form F in X, Y.
#[pyfunction]
#[pyo3(signature = (f, ell = "x"))]
fn jordan_type_of_dual(f: &str, ell: &str) -> PyResult<PyPartition> {
    let alg = quotient(&annihilator(&f.parse().map_err(err)?).map_err(err)?).map_err(err)?;
    alg.jordan_type(&ell.parse().map_err(err)?)
        .map(PyPartition)
        .map_err(err)
}

/// Generators of Ann F.
#[pyfunction]
fn annihilator_of(f: &str) -> PyResult<Vec<String>> {
    let ann = annihilator(&f.parse().map_err(err)?).map_err(err)?;
    Ok(ann.generators().iter().map(|g| g.to_string()).collect())
}

/// A figure table as a JSON string.
#[pyfunction]
fn table_json(id: &str) -> PyResult<String> {
    let t = jtlab::tables::figure_table(id).map_err(err)?;
    serde_json::to_string(&t).map_err(err)
}

#[pymodule]
#[pyo3(name = "jtlab")]
fn jtlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyHilbert>()?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(realize_every, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_type, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_type_of_dual, m)?)?;
    m.add_function(wrap_pyfunction!(annihilator_of, m)?)?;
    m.add_function(wrap_pyfunction!(table_json, m)?)?;
    Ok(())
}
