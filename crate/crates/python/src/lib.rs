//! Python module `projrep`: groups, multipliers, character tables and irreps.

use std::sync::Arc;

use projrep::burnside::{character_table_float as float_table, FloatOptions};
use projrep::decompose::{all_irreps_regular, DecomposeOptions};
use projrep::dixon::character_table_exact as exact_table;
use projrep::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use projrep::{Complex64, Error};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl Into<Error>) -> PyErr {
    let e: Error = e.into();
    PyValueError::new_err(format!("{e} (exit code {})", e.exit_code()))
}

#[pyclass(module = "projrep")]
struct Group {
    inner: Arc<FiniteGroup>,
}

#[pymethods]
impl Group {
    #[staticmethod]
    fn from_cayley(table: Vec<Vec<usize>>) -> PyResult<Self> {
        let g = FiniteGroup::from_cayley_table(&table).map_err(err)?;
        Ok(Self { inner: Arc::new(g) })
    }

    #[staticmethod]
    #[pyo3(signature = (generators, max_order = DEFAULT_MAX_ORDER))]
    fn from_permutations(generators: Vec<Vec<usize>>, max_order: usize) -> PyResult<Self> {
        let g =
            FiniteGroup::from_permutation_generators_capped(&generators, max_order).map_err(err)?;
        Ok(Self { inner: Arc::new(g) })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.inner.cayley_table()
    }

    /// Conjugacy classes as lists of element indices.
    fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        self.inner
            .conjugacy_classes()
            .iter()
            .map(|c| c.elements.clone())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Group(order={})", self.inner.order())
    }
}

/// `α(x, y) = exp(2πi exponents[x][y] / root_order)`.
#[pyclass(module = "projrep")]
struct Multiplier {
    inner: Arc<projrep::Multiplier>,
}

#[pymethods]
impl Multiplier {
    #[new]
    fn new(group: &Group, root_order: u64, exponents: Vec<Vec<i64>>) -> PyResult<Self> {
        let m =
            projrep::Multiplier::new(group.inner.clone(), root_order, &exponents).map_err(err)?;
        Ok(Self { inner: Arc::new(m) })
    }

    #[staticmethod]
    fn trivial(group: &Group) -> Self {
        Self {
            inner: Arc::new(projrep::Multiplier::trivial(group.inner.clone())),
        }
    }

    #[getter]
    fn root_order(&self) -> u64 {
        self.inner.root_order()
    }

    /// Exponent `e` of the regular classes.
    #[getter]
    fn exponent(&self) -> u64 {
        self.inner.exponent()
    }

    fn exponents(&self) -> Vec<Vec<u64>> {
        self.inner.exponent_table()
    }

    /// Representatives of the α-regular classes.
    fn regular_classes(&self) -> PyResult<Vec<usize>> {
        Ok(self
            .inner
            .regular_class_data()
            .map_err(err)?
            .representatives())
    }

    fn __repr__(&self) -> String {
        format!(
            "Multiplier(order={}, root_order={})",
            self.inner.group().order(),
            self.inner.root_order()
        )
    }
}

/// Float table: `(class_reps, class_sizes, [(degree, [χ(c)...])...])`.
#[pyfunction]
#[pyo3(signature = (mult, seed = 0))]
#[allow(clippy::type_complexity)]
fn character_table_float(
    mult: &Multiplier,
    seed: u64,
) -> PyResult<(Vec<usize>, Vec<usize>, Vec<(usize, Vec<Complex64>)>)> {
    let opts = FloatOptions {
        seed,
        ..FloatOptions::default()
    };
    let t = float_table(&mult.inner, &opts).map_err(err)?;
    let rows = t.irreps.into_iter().map(|r| (r.degree, r.chars)).collect();
    Ok((t.class_reps, t.class_sizes, rows))
}

/// Exact table: `(e, p, z, class_reps, [(degree, [multiplicities per class])...])`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn character_table_exact(
    mult: &Multiplier,
) -> PyResult<(u64, u64, u64, Vec<usize>, Vec<(u64, Vec<Vec<u64>>)>)> {
    let t = exact_table(&mult.inner).map_err(err)?;
    let rows = t.multiplicity_rows();
    Ok((t.e, t.p, t.z, t.regular_class_reps, rows))
}

/// Exact table values as complex numbers, one list per irrep.
#[pyfunction]
fn character_values(mult: &Multiplier) -> PyResult<Vec<Vec<Complex64>>> {
    Ok(exact_table(&mult.inner).map_err(err)?.complex_values())
}

/// Irreps from the regular representation: `[(multiplicity, [matrix per element])...]`,
/// each matrix a list of rows of complex numbers.
#[pyfunction]
#[pyo3(signature = (mult, seed = 0))]
#[allow(clippy::type_complexity)]
fn irreps(
    mult: &Multiplier,
    seed: u64,
) -> PyResult<Vec<(Option<usize>, Vec<Vec<Vec<Complex64>>>)>> {
    let set =
        all_irreps_regular(mult.inner.clone(), &DecomposeOptions::with_seed(seed)).map_err(err)?;
    Ok(set
        .irreps
        .iter()
        .map(|e| {
            let mats = e
                .rep
                .matrices()
                .iter()
                .map(|m| {
                    (0..m.nrows())
                        .map(|i| m.row(i).iter().copied().collect())
                        .collect()
                })
                .collect();
            (e.multiplicity, mats)
        })
        .collect())
}

#[pymodule]
#[pyo3(name = "projrep")]
fn projrep_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<Multiplier>()?;
    m.add_function(wrap_pyfunction!(character_table_float, m)?)?;
    m.add_function(wrap_pyfunction!(character_table_exact, m)?)?;
    m.add_function(wrap_pyfunction!(character_values, m)?)?;
    m.add_function(wrap_pyfunction!(irreps, m)?)?;
    Ok(())
}
