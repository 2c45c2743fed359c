//! Python bindings: thin wrappers over the `antiassoc` library.
//!
//! Rationals cross the boundary as strings in lowest terms ("p/q" or "p"),
//! so every value is exact on both sides.

use antiassoc::algebra::{Algebra as CoreAlgebra, IdentityKind, IdentityReport, Nilindex};
use antiassoc::cohomology::{
    delta3_after_delta2_vanishing, jj_delta3_after_delta2_vanishing, jj_symmetric_two_cocycles,
    standard_cohomology_dims,
};
use antiassoc::error::CoreError;
use antiassoc::fixtures;
use antiassoc::free::{free_anti_associative, free_anticommutative_aa, free_commutative_aa};
use antiassoc::homology::{homology_report, SignConvention};
use antiassoc::io::{algebra_from_json, algebra_to_json};
use antiassoc::jj;
use antiassoc::operads::{
    component_dim, koszul_sign_test, preset, quadratic_dual, GeneratorSymmetry, Tree,
};
use antiassoc::operators::{
    derivation_space_dim, inner_anti_derivations, lie_multiplication_algebra,
    multiplication_algebra, OperatorAlgebraReport,
};
use antiassoc::polar::check_polarization_identities;
use antiassoc::rat::{parse_rat, rat_to_string, Rat};
use antiassoc::series::{KoszulVerdict, PowerSeries};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use std::str::FromStr;

fn err(e: CoreError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat_to_string).collect()
}

fn nilindex_py(n: &Nilindex) -> Option<usize> {
    match n {
        Nilindex::Finite(m) => Some(*m),
        Nilindex::Infinite => None,
    }
}

fn identity_report_py<'py>(py: Python<'py>, r: &IdentityReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("kind", r.kind.name())?;
    d.set_item("holds", r.holds)?;
    match &r.witness {
        Some(w) => {
            let wd = PyDict::new(py);
            wd.set_item("indices", w.indices.clone())?;
            wd.set_item("defect", rat_strings(&w.defect))?;
            d.set_item("witness", wd)?;
        }
        None => d.set_item("witness", py.None())?,
    }
    Ok(d)
}

fn operator_report_py<'py>(
    py: Python<'py>,
    r: &OperatorAlgebraReport,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("dim", r.dim)?;
    d.set_item("nilindex", nilindex_py(&r.nilindex))?;
    d.set_item("derived_dim", r.derived_dim)?;
    d.set_item("two_step_nilpotent", r.two_step_nilpotent)?;
    Ok(d)
}

fn tree_string(t: &Tree) -> String {
    match t {
        Tree::Leaf(i) => format!("x{i}"),
        Tree::Node(l, r) => format!("({} {})", tree_string(l), tree_string(r)),
    }
}

fn relation_string(rel: &[(Rat, Tree)]) -> String {
    let mut out = String::new();
    for (idx, (c, t)) in rel.iter().enumerate() {
        let coeff = rat_to_string(c);
        if idx == 0 {
            if coeff == "1" {
                out.push_str(&tree_string(t));
            } else if coeff == "-1" {
                out.push_str(&format!("-{}", tree_string(t)));
            } else {
                out.push_str(&format!("{coeff}*{}", tree_string(t)));
            }
            continue;
        }
        if coeff.starts_with('-') {
            let trimmed = coeff.trim_start_matches('-');
            if trimmed == "1" {
                out.push_str(&format!(" - {}", tree_string(t)));
            } else {
                out.push_str(&format!(" - {trimmed}*{}", tree_string(t)));
            }
        } else if coeff == "1" {
            out.push_str(&format!(" + {}", tree_string(t)));
        } else {
            out.push_str(&format!(" + {coeff}*{}", tree_string(t)));
        }
    }
    out
}

fn symmetry_name(s: GeneratorSymmetry) -> &'static str {
    match s {
        GeneratorSymmetry::NonSymmetric => "non-symmetric",
        GeneratorSymmetry::Commutative => "commutative",
        GeneratorSymmetry::AntiCommutative => "anticommutative",
    }
}

/// A finite-dimensional algebra over the rationals, given by structure
/// constants.
#[pyclass(name = "Algebra")]
struct PyAlgebra {
    inner: CoreAlgebra,
}

#[pymethods]
impl PyAlgebra {
    /// Parse the JSON file format: {"dim": n, "basis": [...], "table": [[[..]]]}.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: algebra_from_json(text).map_err(err)?,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.inner.basis.clone()
    }

    fn to_json(&self) -> String {
        algebra_to_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, basis={:?})", self.inner.dim, self.inner.basis)
    }

    /// Product of two basis elements, as exact rational coordinates.
    fn multiply_basis(&self, i: usize, j: usize) -> PyResult<Vec<String>> {
        let n = self.inner.dim;
        if i >= n || j >= n {
            return Err(PyValueError::new_err(format!(
                "basis indices ({i}, {j}) out of range for dimension {n}"
            )));
        }
        let unit = |p: usize| -> Vec<Rat> {
            (0..n).map(|q| parse_rat(if q == p { "1" } else { "0" }).unwrap()).collect()
        };
        Ok(rat_strings(&self.inner.multiply(&unit(i), &unit(j))))
    }

    /// Check one polynomial identity by name (e.g. "anti-associative",
    /// "jacobi-jordan"); returns {kind, holds, witness}.
    fn check_identity<'py>(&self, py: Python<'py>, kind: &str) -> PyResult<Bound<'py, PyDict>> {
        let kind = IdentityKind::from_str(kind).map_err(err)?;
        identity_report_py(py, &self.inner.check_identity(kind))
    }

    /// All nine identity checks at once: {name: holds}.
    fn check_all<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for kind in IdentityKind::ALL {
            d.set_item(kind.name(), self.inner.check_identity(kind).holds)?;
        }
        Ok(d)
    }

    /// Nilindex of the descending power chain; None means not nilpotent.
    fn nilindex(&self) -> Option<usize> {
        nilindex_py(&self.inner.nilindex())
    }

    /// Dimension of the derivation space (anti=False) or the
    /// anti-derivation space (anti=True).
    #[pyo3(signature = (anti = false))]
    fn derivation_dim(&self, anti: bool) -> usize {
        derivation_space_dim(&self.inner, anti)
    }

    /// Dimension of the inner anti-derivation space; requires an
    /// anti-associative product.
    fn inner_anti_derivation_dim(&self) -> PyResult<usize> {
        Ok(inner_anti_derivations(&self.inner).map_err(err)?.dim())
    }

    /// The multiplication algebra M(A): {dim, nilindex, ...}.
    fn multiplication_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        operator_report_py(py, &multiplication_algebra(&self.inner))
    }

    /// The Lie closure L(A) of the multiplication operators.
    fn lie_multiplication_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        operator_report_py(py, &lie_multiplication_algebra(&self.inner))
    }

    /// Degree-0 or degree-1 homology in the symmetric convention:
    /// {chain_dim, ker_dim, im_dim, homology_dim, containment_holds, warnings}.
    #[pyo3(signature = (degree = 1))]
    fn homology<'py>(&self, py: Python<'py>, degree: usize) -> PyResult<Bound<'py, PyDict>> {
        let r = homology_report(&self.inner, degree, SignConvention::Symmetric).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("degree", r.degree)?;
        d.set_item("chain_dim", r.chain_dim)?;
        d.set_item("ker_dim", r.ker_dim)?;
        d.set_item("im_dim", r.im_dim)?;
        d.set_item("homology_dim", r.homology_dim)?;
        d.set_item("containment_holds", r.containment_holds)?;
        d.set_item("warnings", r.warnings.clone())?;
        Ok(d)
    }

    /// Standard cohomology dimensions {h1, h2, z3} for an anti-associative
    /// product.
    fn cohomology_dims<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = standard_cohomology_dims(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("h1", c.h1)?;
        d.set_item("h2", c.h2)?;
        d.set_item("z3", c.z3)?;
        Ok(d)
    }

    /// Component-wise vanishing of the third differential composed with the
    /// second, evaluated on a spanning set of 2-cochains.
    fn delta3_after_delta2(&self) -> PyResult<Vec<bool>> {
        Ok(delta3_after_delta2_vanishing(&self.inner).map_err(err)?.to_vec())
    }

    /// Dimension of the space of symmetric 2-cocycles for the
    /// Jacobi-Jordan differential; requires a commutative product.
    fn jj_symmetric_cocycle_dim(&self) -> PyResult<usize> {
        Ok(jj_symmetric_two_cocycles(&self.inner).map_err(err)?.dim())
    }

    /// Component-wise vanishing of the Jacobi-Jordan third differential
    /// composed with the second.
    fn jj_delta3_after_delta2(&self) -> PyResult<Vec<bool>> {
        Ok(jj_delta3_after_delta2_vanishing(&self.inner).map_err(err)?.to_vec())
    }

    /// The four polarization identity checks: {name: holds}.
    fn polarization_checks<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let checks = check_polarization_identities(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        for c in checks {
            d.set_item(c.name, c.holds)?;
        }
        Ok(d)
    }
}

/// Names of every fixture in the catalog.
#[pyfunction]
fn fixture_names() -> Vec<String> {
    fixtures::catalog().iter().map(|f| f.name.to_string()).collect()
}

/// Load one catalog fixture by name.
#[pyfunction]
fn fixture(name: &str) -> PyResult<PyAlgebra> {
    fixtures::fixture(name)
        .map(|f| PyAlgebra { inner: f.algebra })
        .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
}

/// The free anti-associative algebra on k generators.
#[pyfunction]
fn free_aa(k: usize) -> PyResult<PyAlgebra> {
    Ok(PyAlgebra {
        inner: free_anti_associative(k).map_err(err)?.algebra,
    })
}

/// Degree-component dimensions of the free anti-associative algebra.
#[pyfunction]
fn free_aa_component_dims(k: usize) -> PyResult<Vec<usize>> {
    Ok(free_anti_associative(k).map_err(err)?.component_dims())
}

/// The free commutative anti-associative algebra on p generators.
#[pyfunction]
fn free_commutative(p: usize) -> PyResult<PyAlgebra> {
    Ok(PyAlgebra {
        inner: free_commutative_aa(p).map_err(err)?.algebra,
    })
}

/// The free anticommutative anti-associative algebra on p generators.
#[pyfunction]
fn free_anticommutative(p: usize) -> PyResult<PyAlgebra> {
    Ok(PyAlgebra {
        inner: free_anticommutative_aa(p).map_err(err)?.algebra,
    })
}

/// Dimension of the degree-d component of the free Jacobi-Jordan algebra
/// on p generators.
#[pyfunction]
fn free_jj_component_dim(p: usize, d: usize) -> PyResult<usize> {
    jj::free_jj_component_dim(p, d).map_err(err)
}

/// Dimension of the nested-word stage of the free Jacobi-Jordan algebra.
#[pyfunction]
fn jj_nested_stage_dim(p: usize) -> usize {
    jj::jj_nested_stage_dim(p)
}

/// Component dimensions of an operad preset ("aass", "jajo", "jajo-dual",
/// "free") for arities 1..=max_arity.
#[pyfunction]
#[pyo3(signature = (name, max_arity = 5))]
fn operad_component_dims(name: &str, max_arity: usize) -> PyResult<Vec<usize>> {
    let p = preset(name).map_err(err)?;
    (1..=max_arity)
        .map(|n| component_dim(&p, n).map_err(err))
        .collect()
}

/// The quadratic dual of an operad preset: {symmetry, relations}.
#[pyfunction]
fn operad_quadratic_dual<'py>(py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyDict>> {
    let dual = quadratic_dual(&preset(name).map_err(err)?);
    let d = PyDict::new(py);
    d.set_item("symmetry", symmetry_name(dual.symmetry))?;
    let rels: Vec<String> = dual.relations.iter().map(|r| relation_string(r)).collect();
    d.set_item("relations", rels)?;
    Ok(d)
}

/// Generating-series Koszulness test for an operad preset.
#[pyfunction]
#[pyo3(signature = (name, order = 9))]
fn koszul<'py>(py: Python<'py>, name: &str, order: usize) -> PyResult<Bound<'py, PyDict>> {
    let report = koszul_sign_test(&preset(name).map_err(err)?, order).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("primal_dims", report.primal_dims.clone())?;
    d.set_item("dual_dims", report.dual_dims.clone())?;
    d.set_item("inverse_coeffs", rat_strings(report.inverse.coeffs()))?;
    d.set_item("implied_dims", rat_strings(&report.implied_dims))?;
    match &report.verdict {
        KoszulVerdict::NotKoszul { order, implied_dim } => {
            d.set_item("verdict", "not-koszul")?;
            d.set_item("obstruction_order", *order)?;
            d.set_item("implied_dim", rat_to_string(implied_dim))?;
        }
        KoszulVerdict::Inconclusive { checked_order } => {
            d.set_item("verdict", "inconclusive")?;
            d.set_item("checked_order", *checked_order)?;
        }
    }
    d.set_item(
        "obstruction_within_certified",
        report.obstruction_within_certified,
    )?;
    Ok(d)
}

/// Compositional inverse of a power series given by the coefficients of
/// t^1, t^2, ... as rational strings; returns the coefficients of
/// t^0..t^order of the inverse.
#[pyfunction]
fn series_compositional_inverse(coeffs: Vec<String>, order: usize) -> PyResult<Vec<String>> {
    let mut s = PowerSeries::zero(order);
    for (i, c) in coeffs.iter().enumerate() {
        s.set_coeff(i + 1, parse_rat(c).map_err(err)?);
    }
    let inv = s.compositional_inverse().map_err(err)?;
    Ok(rat_strings(inv.coeffs()))
}

#[pymodule]
fn antiassoc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(free_aa, m)?)?;
    m.add_function(wrap_pyfunction!(free_aa_component_dims, m)?)?;
    m.add_function(wrap_pyfunction!(free_commutative, m)?)?;
    m.add_function(wrap_pyfunction!(free_anticommutative, m)?)?;
    m.add_function(wrap_pyfunction!(free_jj_component_dim, m)?)?;
    m.add_function(wrap_pyfunction!(jj_nested_stage_dim, m)?)?;
    m.add_function(wrap_pyfunction!(operad_component_dims, m)?)?;
    m.add_function(wrap_pyfunction!(operad_quadratic_dual, m)?)?;
    m.add_function(wrap_pyfunction!(koszul, m)?)?;
    m.add_function(wrap_pyfunction!(series_compositional_inverse, m)?)?;
    Ok(())
}
