//! Python module `grrforge`.

use grrforge::classical::{Family, GroupSpec as Spec};
use grrforge::experiment::{self, Measure, TrialConfig};
use grrforge::grr;
use grrforge::numthy;
use grrforge::perm::{InvolutionMode, PermGroup, Permutation, RngState};
use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_error(e: grrforge::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_mode(mode: Option<&str>) -> PyResult<Option<InvolutionMode>> {
    mode.map(|m| m.parse().map_err(value_error)).transpose()
}

/// A finite simple classical group, e.g. `GroupSpec("psl", 3, 3)`.
#[pyclass(
    name = "GroupSpec",
    module = "grrforge",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGroupSpec {
    inner: Spec,
}

#[pymethods]
impl PyGroupSpec {
    #[new]
    fn new(family: &str, n: u32, q: u64) -> PyResult<Self> {
        let family: Family = family.parse().map_err(value_error)?;
        let inner = Spec::new(family, n, q).map_err(value_error)?;
        Ok(PyGroupSpec { inner })
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family().id()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.q()
    }

    fn order(&self) -> BigUint {
        self.inner.group_order()
    }

    /// The exponent `e` with `x` of order in `ppd(p, e·f)`.
    fn ppd_exponent(&self) -> u32 {
        self.inner.ppd_exponent()
    }

    fn ppd_primes(&self) -> PyResult<Vec<u128>> {
        self.inner.ppd_primes().map_err(value_error)
    }

    fn normalizer_order(&self) -> PyResult<BigUint> {
        self.inner.normalizer_order_formula().map_err(value_error)
    }

    /// Lower bound on the number of involutions, as a `fractions.Fraction`.
    fn involution_lower_bound<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let bound = self.inner.involution_lower_bound();
        let (num, den): (BigInt, BigInt) = (bound.numer().clone(), bound.denom().clone());
        py.import("fractions")?
            .getattr("Fraction")?
            .call1((num, den))
    }

    fn involution_upper_bound_aut(&self) -> BigUint {
        self.inner.involution_upper_bound_aut()
    }

    fn min_subgroup_index(&self) -> PyResult<BigUint> {
        self.inner.min_subgroup_index().map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GroupSpec({:?}, {}, {})", self.family(), self.n(), self.q())
    }
}

fn group(spec: &PyGroupSpec) -> PyResult<PermGroup> {
    PermGroup::new(&spec.inner).map_err(value_error)
}

fn element<'py>(py: Python<'py>, g: &Permutation) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("order", g.order())?;
    d.set_item("descriptor", experiment::describe(g))?;
    d.set_item("cycles", g.to_string())?;
    Ok(d)
}

/// Primitive prime divisors of `a**m - 1`.
#[pyfunction]
fn ppd(a: u64, m: u32) -> PyResult<Vec<u128>> {
    numthy::ppd(a, m).map_err(value_error)
}

/// `[(prime, exponent), ...]` for `n > 0`.
#[pyfunction]
fn factorize(n: u128) -> PyResult<Vec<(u128, u32)>> {
    Ok(numthy::factorize(n)
        .map_err(value_error)?
        .factors()
        .to_vec())
}

/// An element of order `r` (default: the largest ppd prime).
#[pyfunction]
#[pyo3(signature = (spec, r=None, seed=1))]
fn sample_ppd_element<'py>(
    py: Python<'py>,
    spec: &PyGroupSpec,
    r: Option<u128>,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let r = experiment::resolve_r(&spec.inner, r).map_err(value_error)?;
    let g = group(spec)?;
    let x = py
        .detach(|| g.find_ppd_element(r, &mut RngState::new(seed)))
        .map_err(value_error)?;
    element(py, &x)
}

/// A random involution; `mode` is "uniform" or "power".
#[pyfunction]
#[pyo3(signature = (spec, seed=1, mode=None))]
fn sample_involution<'py>(
    py: Python<'py>,
    spec: &PyGroupSpec,
    seed: u64,
    mode: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let g = group(spec)?;
    let mode = parse_mode(mode)?.unwrap_or_else(|| experiment::default_involution_mode(&g));
    let y = g
        .sample_involution(mode, &mut RngState::new(seed))
        .map_err(value_error)?;
    element(py, &y)
}

/// Sample `x` of order `x_order` and an involution `y`, and decide whether
/// Cay(G, {x, x^-1, y}) is a GRR.
#[pyfunction]
#[pyo3(signature = (spec, x_order=None, seed=1, mode=None))]
fn grr_check<'py>(
    py: Python<'py>,
    spec: &PyGroupSpec,
    x_order: Option<u128>,
    seed: u64,
    mode: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let r = experiment::resolve_r(&spec.inner, x_order).map_err(value_error)?;
    let g = group(spec)?;
    let mode = parse_mode(mode)?.unwrap_or_else(|| experiment::default_involution_mode(&g));
    let (x, y, v) = py
        .detach(|| -> grrforge::Result<_> {
            let mut rng = RngState::new(seed);
            let x = g.find_ppd_element(r, &mut rng)?;
            let y = g.sample_involution(mode, &mut rng)?;
            let v = grr::grr_verdict(&g, &x, &y)?;
            Ok((x, y, v))
        })
        .map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("x", element(py, &x)?)?;
    d.set_item("y", element(py, &y)?)?;
    d.set_item("connected", v.connected)?;
    d.set_item("components", v.components)?;
    d.set_item("aut_order", v.aut_order)?;
    d.set_item("stabilizer_order", v.stabilizer_order)?;
    d.set_item("is_grr", v.is_grr)?;
    d.set_item("k_holds", v.k_holds)?;
    d.set_item("l_holds", v.l_holds)?;
    d.set_item("godsil_applicable", v.godsil_applicable)?;
    Ok(d)
}

/// Monte Carlo estimate; `measure` is "generation", "grr" or "k_and_l".
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (spec, trials=1000, seed=1, measure="generation", mode=None, r=None, fix_x=None))]
fn estimate<'py>(
    py: Python<'py>,
    spec: &PyGroupSpec,
    trials: usize,
    seed: u64,
    measure: &str,
    mode: Option<&str>,
    r: Option<u128>,
    fix_x: Option<u64>,
) -> PyResult<Bound<'py, PyDict>> {
    let measure: Measure = measure.parse().map_err(value_error)?;
    let config = TrialConfig {
        r,
        involution_mode: parse_mode(mode)?,
        fix_x,
        ..TrialConfig::new(spec.inner, trials, seed, measure)
    };
    let s = py
        .detach(|| experiment::run_experiment(&config))
        .map_err(value_error)?
        .summary;
    let d = PyDict::new(py);
    d.set_item("spec", s.spec.to_string())?;
    d.set_item("r", s.r)?;
    d.set_item("measure", s.measure.id())?;
    d.set_item("involution_mode", s.involution_mode.id())?;
    d.set_item("seed", s.seed)?;
    d.set_item("trials", s.trials)?;
    d.set_item("successes", s.successes)?;
    d.set_item("estimate", s.point_estimate)?;
    d.set_item("ci95", s.wilson_ci_95)?;
    d.set_item("q_pow_n", s.q_to_the_n)?;
    Ok(d)
}

#[pymodule]
#[pyo3(name = "grrforge")]
fn grrforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroupSpec>()?;
    m.add_function(wrap_pyfunction!(ppd, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(sample_ppd_element, m)?)?;
    m.add_function(wrap_pyfunction!(sample_involution, m)?)?;
    m.add_function(wrap_pyfunction!(grr_check, m)?)?;
    m.add_function(wrap_pyfunction!(estimate, m)?)?;
    Ok(())
}
