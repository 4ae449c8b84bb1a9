//! Python bindings for `flagorbits`.

#![allow(clippy::useless_conversion)]

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use flagorbits::branching::{self, Partition};
use flagorbits::classifier;
use flagorbits::cli::{default_qlist, parse_group, parse_parabolic};
use flagorbits::error::Error;
use flagorbits::fforacle::{self, DEFAULT_BUDGET};
use flagorbits::liecomb::{self, DiagramAction, KParabolicSpec, ParabolicSpec, SymmetricPairSpec};

create_exception!(flagorbits_py, BudgetExceeded, PyRuntimeError);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json_of<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialize")
}

fn pair_inputs(pair: &str, n: Option<usize>, p: &str, q: &str) -> Result<(SymmetricPairSpec, ParabolicSpec, KParabolicSpec), Error> {
    let pair = SymmetricPairSpec::parse(pair, n)?;
    let p = parse_parabolic(pair.group(), p)?;
    let q = KParabolicSpec::parse(&pair, q)?;
    Ok((pair, p, q))
}

fn partition(s: &str) -> PyResult<Partition> {
    s.parse().map_err(py_err)
}

/// Verdict for a triple flag variety.
#[pyclass(frozen, module = "flagorbits_py")]
struct TripleVerdict {
    #[pyo3(get)]
    finite: bool,
    #[pyo3(get)]
    matched_rows: Vec<String>,
    #[pyo3(get)]
    normalized_triple: Vec<Vec<usize>>,
    #[pyo3(get)]
    notes: Vec<String>,
}

#[pymethods]
impl TripleVerdict {
    fn __repr__(&self) -> String {
        format!("TripleVerdict(finite={}, matched_rows={:?})", self.finite, self.matched_rows)
    }
}

/// Double flag verdict from both criteria and the summary tables.
#[pyclass(frozen, module = "flagorbits_py")]
struct Classification {
    inner: classifier::Classification,
}

#[pymethods]
impl Classification {
    /// `FiniteProven`, `InfiniteProven` or `Unknown`.
    #[getter]
    fn status(&self) -> String {
        format!("{:?}", self.inner.status)
    }

    #[getter]
    fn consistent(&self) -> bool {
        self.inner.consistent
    }

    #[getter]
    fn via_triple(&self) -> String {
        format!("{:?}", self.inner.via_triple.status)
    }

    #[getter]
    fn via_intersection(&self) -> String {
        format!("{:?}", self.inner.via_intersection.status)
    }

    #[getter]
    fn summary_rows(&self) -> Vec<String> {
        self.inner.summary_rows.iter().map(|r| r.citation.clone()).collect()
    }

    fn to_json(&self) -> String {
        json_of(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Classification({} P=({}) Q=({}): {:?})", self.inner.pair, self.inner.p, self.inner.q, self.inner.status)
    }
}

/// Orbit counts for several field sizes.
#[pyclass(frozen, module = "flagorbits_py")]
struct OrbitReport {
    inner: fforacle::OrbitCountReport,
}

#[pymethods]
impl OrbitReport {
    /// `(q, points, orbits)` per field size.
    #[getter]
    fn counts(&self) -> Vec<(u64, u128, u64)> {
        self.inner.counts.iter().map(|c| (c.q, c.points, c.orbits)).collect()
    }

    /// `Bounded`, `Growing` or `Irregular`.
    #[getter]
    fn hint(&self) -> String {
        self.inner.hint.to_string()
    }

    fn to_json(&self) -> String {
        json_of(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("OrbitReport({}, {:?}, {})", self.inner.subject, self.counts(), self.inner.hint)
    }
}

#[pyfunction]
fn mwz_classify(family: &str, n: usize, triple: [String; 3]) -> PyResult<TripleVerdict> {
    let g = parse_group(family, n).map_err(py_err)?;
    let p: Vec<ParabolicSpec> = triple.iter().map(|s| parse_parabolic(g, s)).collect::<Result<_, _>>().map_err(py_err)?;
    let v = match g.family {
        liecomb::Family::GeneralLinear => {
            let c: Vec<_> = p.iter().map(|x| x.shape().as_a().cloned().expect("type A shape")).collect();
            classifier::mwz_classify_a(&c[0], &c[1], &c[2])
        }
        liecomb::Family::Symplectic => {
            let c: Vec<_> = p.iter().map(|x| x.shape().as_c().cloned().expect("type C shape")).collect();
            classifier::mwz_classify_c(&c[0], &c[1], &c[2])
        }
    }
    .map_err(py_err)?;
    Ok(TripleVerdict {
        finite: v.finite,
        matched_rows: v.matched_rows.iter().map(ToString::to_string).collect(),
        normalized_triple: v.normalized_triple,
        notes: v.notes,
    })
}

#[pyfunction]
#[pyo3(signature = (pair, p, q, n=None))]
fn classify(pair: &str, p: &str, q: &str, n: Option<usize>) -> PyResult<Classification> {
    let (pair, p, q) = pair_inputs(pair, n, p, q).map_err(py_err)?;
    let inner = classifier::classify(&pair, &p, &q).map_err(py_err)?;
    Ok(Classification { inner })
}

/// Case label of the AIII Borel table (`i` to `v`, or `Infinite`). Requires `q >= p`.
#[pyfunction]
fn aiii_borel(p: usize, q: usize, q1: &str, q2: &str) -> PyResult<String> {
    let a = q1.parse().map_err(py_err)?;
    let b = q2.parse().map_err(py_err)?;
    Ok(classifier::classify_aiii_borel(p, q, &a, &b).map_err(py_err)?.label())
}

#[pyfunction]
#[pyo3(signature = (pair, p, q, field, n=None, budget=DEFAULT_BUDGET))]
fn count_k_orbits(pair: &str, p: &str, q: &str, field: u64, n: Option<usize>, budget: u128) -> PyResult<u64> {
    let (pair, p, q) = pair_inputs(pair, n, p, q).map_err(py_err)?;
    Ok(fforacle::count_k_orbits(&pair, &p, &q, field, budget).map_err(py_err)?.orbits)
}

#[pyfunction]
#[pyo3(signature = (pair, p, q, qlist=None, n=None, budget=DEFAULT_BUDGET))]
fn growth_probe(pair: &str, p: &str, q: &str, qlist: Option<Vec<u64>>, n: Option<usize>, budget: u128) -> PyResult<OrbitReport> {
    let (pair, p, q) = pair_inputs(pair, n, p, q).map_err(py_err)?;
    let qs = qlist.unwrap_or_else(|| default_qlist(&pair));
    let inner = fforacle::growth_probe(&pair, &p, &q, &qs, budget).map_err(py_err)?;
    Ok(OrbitReport { inner })
}

#[pyfunction]
#[pyo3(signature = (family, n, shapes, field, budget=DEFAULT_BUDGET))]
fn count_triple_orbits(family: &str, n: usize, shapes: Vec<String>, field: u64, budget: u128) -> PyResult<u64> {
    let g = parse_group(family, n).map_err(py_err)?;
    let ps: Vec<ParabolicSpec> = shapes.iter().map(|s| parse_parabolic(g, s)).collect::<Result<_, _>>().map_err(py_err)?;
    Ok(fforacle::count_triple_orbits(g, &ps, field, budget).map_err(py_err)?.orbits)
}

#[pyfunction]
fn bruhat_double_cosets(family: &str, n: usize, p: &str, p2: &str) -> PyResult<usize> {
    let g = parse_group(family, n).map_err(py_err)?;
    let a = parse_parabolic(g, p).map_err(py_err)?;
    let b = parse_parabolic(g, p2).map_err(py_err)?;
    Ok(liecomb::bruhat_double_cosets(&a, &b).map_err(py_err)?.count)
}

#[pyfunction]
fn enumerate_clans(p: usize, q: usize) -> PyResult<Vec<String>> {
    Ok(liecomb::enumerate_clans(p, q).map_err(py_err)?.iter().map(ToString::to_string).collect())
}

#[pyfunction]
#[pyo3(signature = (family, n, flip=false))]
fn twisted_involutions(family: &str, n: usize, flip: bool) -> PyResult<Vec<String>> {
    let g = parse_group(family, n).map_err(py_err)?;
    let action = if flip { DiagramAction::flip(g) } else { DiagramAction::identity(g) };
    Ok(liecomb::twisted_involutions(g, &action).map_err(py_err)?.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn lr_coefficient(outer: &str, inner1: &str, inner2: &str) -> PyResult<u64> {
    Ok(branching::lr_coefficient(&partition(outer)?, &partition(inner1)?, &partition(inner2)?))
}

#[pyfunction]
fn tensor_decompose(lam: &str, mu: &str, n: usize) -> PyResult<BTreeMap<String, u64>> {
    let d = branching::tensor_decompose(&partition(lam)?, &partition(mu)?, n).map_err(py_err)?;
    Ok(d.terms().iter().map(|(k, &v)| (k.to_string(), v)).collect())
}

/// Keys are `(μ, ν)` partition strings for `GL_p × GL_q`.
#[pyfunction]
fn restrict_to_levi(lam: &str, p: usize, q: usize) -> PyResult<BTreeMap<(String, String), u64>> {
    let d = branching::restrict_to_levi(&partition(lam)?, p, q).map_err(py_err)?;
    Ok(d.terms().iter().map(|(w, &v)| ((w.0.to_string(), w.1.to_string()), v)).collect())
}

#[pyfunction]
fn weyl_dim(lam: &str, n: usize) -> PyResult<u128> {
    branching::weyl_dim_gl(&partition(lam)?, n).map_err(py_err)
}

/// `(tensor_holds, restriction_holds)`; the second is `None` unless the pair is AIII.
#[pyfunction]
#[pyo3(signature = (pair, p, n=None, k_max=3, l_max=3))]
fn spherical_probe(pair: &str, p: &str, n: Option<usize>, k_max: u32, l_max: u32) -> PyResult<(bool, Option<bool>)> {
    let pair = SymmetricPairSpec::parse(pair, n).map_err(py_err)?;
    let p = parse_parabolic(pair.group(), p).map_err(py_err)?;
    let t = branching::spherical_probe_tensor(&p, &pair, k_max, l_max).map_err(py_err)?;
    let r = match pair.kind() {
        liecomb::PairKind::AIII { p: a, q: b } => {
            Some(branching::spherical_probe_restriction(&p, a, b, k_max).map_err(py_err)?.holds)
        }
        _ => None,
    };
    Ok((t.holds, r))
}

/// Runs the command line front end; returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let out = flagorbits::cli::run_args(std::iter::once("flagorbits".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
pub fn flagorbits_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BudgetExceeded", m.py().get_type_bound::<BudgetExceeded>())?;
    m.add("DEFAULT_BUDGET", DEFAULT_BUDGET)?;
    m.add_class::<TripleVerdict>()?;
    m.add_class::<Classification>()?;
    m.add_class::<OrbitReport>()?;
    m.add_function(wrap_pyfunction!(mwz_classify, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(aiii_borel, m)?)?;
    m.add_function(wrap_pyfunction!(count_k_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(growth_probe, m)?)?;
    m.add_function(wrap_pyfunction!(count_triple_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(bruhat_double_cosets, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_clans, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_involutions, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(restrict_to_levi, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(spherical_probe, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
