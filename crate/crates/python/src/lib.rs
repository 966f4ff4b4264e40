//! Python bindings. Words are lists of 1-based generator indices, polynomials
//! are lists of integer coefficients in ascending degree.

use std::sync::Arc;

use hecke::eset::e_set;
use hecke::flag::FlagSpace;
use hecke::hecke::HeckeAlgebra;
use hecke::{CoxeterSystem, Element, Error, IntPoly};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn coeffs(p: &IntPoly) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

/// A Coxeter group given by its type, e.g. `"A3"`, `"B4"`, `"F4"`, `"I2(5)"`, `"I2(inf)"`.
#[pyclass(name = "CoxeterGroup", module = "coxeter_hecke", frozen)]
pub struct PyCoxeterGroup {
    sys: Arc<CoxeterSystem>,
}

impl PyCoxeterGroup {
    fn elt(&self, word: &[usize]) -> PyResult<Element> {
        self.sys.normal_form(word).map_err(py_err)
    }

    fn words(&self, es: impl IntoIterator<Item = Element>) -> Vec<Vec<usize>> {
        es.into_iter().map(|e| self.sys.word(e)).collect()
    }
}

#[pymethods]
impl PyCoxeterGroup {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let sys = CoxeterSystem::build(spec).map_err(py_err)?;
        Ok(Self { sys: Arc::new(sys) })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.sys.rank()
    }

    /// Group order, or `None` for an infinite group.
    #[getter]
    fn order(&self) -> Option<usize> {
        self.sys.order()
    }

    #[getter]
    fn is_finite(&self) -> bool {
        self.sys.is_finite()
    }

    fn __repr__(&self) -> String {
        format!("CoxeterGroup('{}')", self.sys.coxeter_type())
    }

    /// The canonical reduced word of the element spelled by `word`.
    fn normal_form(&self, word: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self.sys.word(self.elt(&word)?))
    }

    fn length(&self, word: Vec<usize>) -> PyResult<usize> {
        Ok(self.sys.length(self.elt(&word)?))
    }

    fn multiply(&self, a: Vec<usize>, b: Vec<usize>) -> PyResult<Vec<usize>> {
        let (x, y) = (self.elt(&a)?, self.elt(&b)?);
        Ok(self.sys.word(self.sys.multiply(x, y)))
    }

    fn inverse(&self, word: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self.sys.word(self.sys.inverse(self.elt(&word)?)))
    }

    fn longest_element(&self) -> PyResult<Vec<usize>> {
        Ok(self.sys.word(self.sys.longest_element().map_err(py_err)?))
    }

    /// Elements in ShortLex order; `max_len` is required for infinite groups.
    #[pyo3(signature = (max_len=None))]
    fn elements(&self, max_len: Option<usize>) -> PyResult<Vec<Vec<usize>>> {
        Ok(self.words(self.sys.enumerate(max_len).map_err(py_err)?))
    }

    fn bruhat_leq(&self, a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
        Ok(self.sys.bruhat_leq(self.elt(&a)?, self.elt(&b)?))
    }

    fn coxeter_elements(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(self.words(self.sys.coxeter_elements().map_err(py_err)?))
    }

    /// Nonzero `N(w, w', w'')` as `(w'', coefficients)` pairs.
    fn structure_constants(
        &self,
        w: Vec<usize>,
        wp: Vec<usize>,
    ) -> PyResult<Vec<(Vec<usize>, Vec<BigInt>)>> {
        let (x, y) = (self.elt(&w)?, self.elt(&wp)?);
        let prod = HeckeAlgebra::new(&self.sys).basis_product(x, y);
        Ok(prod
            .terms()
            .map(|(z, c)| (self.sys.word(z), coeffs(c)))
            .collect())
    }

    fn structure_constant(
        &self,
        w: Vec<usize>,
        wp: Vec<usize>,
        wpp: Vec<usize>,
    ) -> PyResult<Vec<BigInt>> {
        let (x, y, z) = (self.elt(&w)?, self.elt(&wp)?, self.elt(&wpp)?);
        Ok(coeffs(
            &HeckeAlgebra::new(&self.sys).structure_constant(x, y, z),
        ))
    }

    /// Trace of left multiplication by `T_w`; finite groups only.
    fn regular_trace(&self, w: Vec<usize>) -> PyResult<Vec<BigInt>> {
        let x = self.elt(&w)?;
        Ok(coeffs(
            &HeckeAlgebra::new(&self.sys)
                .regular_trace(x)
                .map_err(py_err)?,
        ))
    }

    /// `E(w)` with `d` and `E'`, as a dict; `max_len` is required for infinite groups.
    #[pyo3(signature = (w, max_len=None))]
    fn e_set<'py>(
        &self,
        py: Python<'py>,
        w: Vec<usize>,
        max_len: Option<usize>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let x = self.elt(&w)?;
        let report = e_set(&self.sys, x, max_len).map_err(py_err)?;
        let out = PyDict::new(py);
        out.set_item("w", self.sys.word(report.w))?;
        out.set_item("truncation", report.truncation)?;
        let members = PyList::empty(py);
        for m in &report.members {
            let d = PyDict::new(py);
            d.set_item("z", self.sys.word(m.z))?;
            d.set_item("N", coeffs(&m.n))?;
            d.set_item("deg", m.deg)?;
            members.append(d)?;
        }
        out.set_item("members", members)?;
        out.set_item("d", report.d)?;
        out.set_item("e_prime", self.words(report.e_prime.iter().copied()))?;
        Ok(out)
    }
}

/// Complete flags in `F_q^n` with point counts against the Hecke side.
#[pyclass(name = "FlagSpace", module = "coxeter_hecke", frozen)]
pub struct PyFlagSpace {
    space: FlagSpace,
}

#[pymethods]
impl PyFlagSpace {
    #[new]
    fn new(n: usize, q: u32) -> PyResult<Self> {
        Ok(Self {
            space: FlagSpace::build(n, q).map_err(py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.space.n()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.space.q()
    }

    #[getter]
    fn num_flags(&self) -> usize {
        self.space.flags().len()
    }

    fn __repr__(&self) -> String {
        format!("FlagSpace(n={}, q={})", self.space.n(), self.space.q())
    }

    /// Number of flags `B` with `pos(B, sB) = w` for the default regular torus element `s`.
    fn count_y_total(&self, w: Vec<usize>) -> PyResult<u64> {
        let weyl = self.space.weyl();
        let x = weyl.normal_form(&w).map_err(py_err)?;
        let s = self.space.default_torus_element();
        self.space.count_y_total(&s, x).map_err(py_err)
    }

    /// Observed and predicted counts; `z` is `None` on the per-`w` total rows.
    fn count_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let out = PyList::empty(py);
        for row in self.space.count_report().map_err(py_err)? {
            let d = PyDict::new(py);
            d.set_item("w", row.w)?;
            d.set_item("z", row.z)?;
            d.set_item("observed", row.observed)?;
            let predicted: BigInt = row
                .predicted
                .parse()
                .map_err(|_| PyValueError::new_err("unparsable prediction"))?;
            d.set_item("predicted", predicted)?;
            d.set_item("z_count", row.z_count)?;
            d.set_item("matched", row.matched)?;
            out.append(d)?;
        }
        Ok(out)
    }
}

/// Value of a coefficient list at an integer.
#[pyfunction]
fn evaluate(coeffs: Vec<BigInt>, x: BigInt) -> BigInt {
    IntPoly::from_big(coeffs).eval(x)
}

#[pymodule]
pub fn coxeter_hecke(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCoxeterGroup>()?;
    m.add_class::<PyFlagSpace>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    Ok(())
}
