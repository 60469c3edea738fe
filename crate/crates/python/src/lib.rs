//! Python extension module over the core engine.
//!
//! Built as `_rigidq`; see python/smoke_test.py for a usage example.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rigidq_core::engine::Engine as CoreEngine;
use rigidq_core::linalg::{PrimeField, DEFAULT_PRIME};
use rigidq_core::quiver::parse_quiver;
use rigidq_core::typea::{all_intervals, build_rigid_rep, interval_data, path_ranks, TypeAQuiver};
use rigidq_core::{DimVec, MultiplicityFunction};

fn err(e: rigidq_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn dims(v: Vec<i64>) -> DimVec {
    DimVec::new(v)
}

/// Decomposition engine for one Dynkin quiver.
///
/// Construct from a descriptor such as "A3", "A4:><>", "D5", "E6", or from
/// the text of a quiver file ("vertices n" and "arrow i j" lines).
#[pyclass(frozen)]
struct Engine {
    inner: CoreEngine,
}

#[pymethods]
impl Engine {
    #[new]
    fn new(source: &str) -> PyResult<Self> {
        let q = parse_quiver(source).map_err(err)?;
        Ok(Engine {
            inner: CoreEngine::new(q).map_err(err)?,
        })
    }

    /// Number of vertices.
    #[getter]
    fn n(&self) -> usize {
        self.inner.quiver().vertex_count()
    }

    /// Dynkin type of each connected component, joined with " + ".
    #[getter]
    fn label(&self) -> String {
        let labels: Vec<String> = self
            .inner
            .quiver()
            .dynkin_types()
            .iter()
            .map(|t| t.label())
            .collect();
        labels.join(" + ")
    }

    /// All positive roots as dimension vectors, in sorted order.
    fn roots(&self) -> Vec<Vec<i64>> {
        self.inner
            .roots()
            .roots()
            .iter()
            .map(|r| r.entries().to_vec())
            .collect()
    }

    /// Decompose the rigid representation of `d` into (root, multiplicity)
    /// pairs with positive multiplicities.
    fn decompose(&self, d: Vec<i64>) -> PyResult<Vec<(Vec<i64>, i64)>> {
        let mult = self.inner.rigid(&dims(d)).map_err(err)?;
        Ok(mult
            .iter()
            .map(|(root, &m)| (root.entries().to_vec(), m))
            .collect())
    }

    /// Dimension of the generic hom space from the indecomposable at `root`
    /// to the rigid representation of `d`.
    fn hom(&self, root: Vec<i64>, d: Vec<i64>) -> PyResult<i64> {
        self.inner.hom_root_to(&dims(root), &dims(d)).map_err(err)
    }

    /// Check a proposed decomposition of `d`; returns (sum_ok, ext_free).
    fn check(&self, d: Vec<i64>, summands: Vec<(Vec<i64>, i64)>) -> PyResult<(bool, bool)> {
        let mut mult = MultiplicityFunction::new();
        for (root, m) in summands {
            *mult.entry(dims(root)).or_insert(0) += m;
        }
        let check = self.inner.check(&dims(d), &mult).map_err(err)?;
        Ok((check.sum_ok, check.ext_free))
    }

    /// Dimension vectors of subrepresentations of the indecomposable at
    /// `root` (nonzero ones, the root itself included).
    fn subs(&self, root: Vec<i64>) -> PyResult<Vec<Vec<i64>>> {
        let sets = self.inner.sub_quot(&dims(root)).map_err(err)?;
        Ok(sets.subs.iter().map(|v| v.entries().to_vec()).collect())
    }

    /// Dimension vectors of quotients of the indecomposable at `root`.
    fn quots(&self, root: Vec<i64>) -> PyResult<Vec<Vec<i64>>> {
        let sets = self.inner.sub_quot(&dims(root)).map_err(err)?;
        Ok(sets.quots.iter().map(|v| v.entries().to_vec()).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Engine({:?}, {} roots)",
            self.label(),
            self.inner.roots().len()
        )
    }
}

/// Interval rank data for a type A quiver: a list of (i, j, target, path)
/// rows in path coordinates.  `target` is the rank of the rigid
/// representation on the interval matrix; `path` is the rank of the
/// composite map along the path, present only for single-sink orientations.
#[pyfunction]
fn type_a_ranks(source: &str, d: Vec<i64>) -> PyResult<Vec<(usize, usize, i64, Option<i64>)>> {
    let q = parse_quiver(source).map_err(err)?;
    let (taq, order) = TypeAQuiver::from_quiver(&q).map_err(err)?;
    if d.len() != taq.n() {
        return Err(PyValueError::new_err(format!(
            "dimension vector has {} entries, quiver has {} vertices",
            d.len(),
            taq.n()
        )));
    }
    let d_std = DimVec::new(order.iter().map(|&v| d[v]).collect());
    let engine = CoreEngine::new(taq.quiver().clone()).map_err(err)?;
    let f = PrimeField::new(DEFAULT_PRIME).map_err(err)?;
    let path_col = if taq.sink_position().is_some() {
        let rep = build_rigid_rep(&taq, engine.euler(), engine.roots(), engine.cache(), &d_std)
            .map_err(err)?;
        Some(path_ranks(&f, &taq, &rep.lift(&f)).map_err(err)?)
    } else {
        None
    };
    let n = taq.n();
    let mut rows = Vec::new();
    for iv in all_intervals(n) {
        let target = if iv.i == iv.j {
            d_std[iv.i - 1]
        } else {
            let data = interval_data(&taq, iv.i, iv.j);
            let source_sum: i64 = data.sources.iter().map(|&l| d_std[l - 1]).sum();
            source_sum - engine.hom_root_to(&iv.vector(n), &d_std).map_err(err)?
        };
        rows.push((iv.i, iv.j, target, path_col.as_ref().map(|m| m[&(iv.i, iv.j)])));
    }
    Ok(rows)
}

#[pymodule]
fn _rigidq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Engine>()?;
    m.add_function(wrap_pyfunction!(type_a_ranks, m)?)?;
    Ok(())
}
