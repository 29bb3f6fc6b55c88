//! Python bindings for `braidnorm`.

use braidnorm::bennequin::{
    bennequin_number, cable_pair, relative_bennequin_all, relative_bennequin_subset,
    thurston_bracket, LowerSource, UpperSource,
};
use braidnorm::diagram::{band_seifert_euler, closure_profile, linking_matrix, seifert_euler};
use braidnorm::homfly::{homfly_report, mfw_check, HomflyReport, SkeinOracle, DEFAULT_BUDGET};
use braidnorm::{BraidWord, CohClass, Error, MultiPoly};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(pybraidnorm, BudgetExceeded, PyException);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded(_) => BudgetExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A braid word on `n` strands.
#[pyclass(name = "Braid", frozen)]
struct PyBraid(BraidWord);

#[pymethods]
impl PyBraid {
    #[new]
    #[pyo3(signature = (word, n))]
    fn new(word: &str, n: usize) -> PyResult<Self> {
        BraidWord::parse(word, n).map(Self).map_err(py_err)
    }

    #[staticmethod]
    fn from_generators(n: usize, gens: Vec<i64>) -> PyResult<Self> {
        BraidWord::from_signed(n, &gens).map(Self).map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Braid({:?}, {})", self.0.to_string(), self.0.n())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        if self.0.n() != other.0.n() {
            return Err(PyValueError::new_err("strand counts differ"));
        }
        Ok(Self(self.0.concat(&other.0)))
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// Expands band letters into standard generators.
    fn to_standard(&self) -> Self {
        Self(self.0.band_to_standard())
    }

    fn generators(&self) -> Vec<i64> {
        self.0.signed_generators()
    }

    #[getter]
    fn is_homogeneous(&self) -> bool {
        self.0.generator_profile().homogeneous
    }

    #[getter]
    fn components(&self) -> usize {
        closure_profile(&self.0).r
    }

    /// Component id (1-based) of each strand position.
    #[getter]
    fn strand_components(&self) -> Vec<usize> {
        closure_profile(&self.0).comp
    }

    fn crossing_matrix(&self) -> Vec<Vec<i64>> {
        closure_profile(&self.0).cr
    }

    fn linking_matrix(&self) -> PyResult<Vec<Vec<i64>>> {
        linking_matrix(&closure_profile(&self.0)).map_err(py_err)
    }

    #[pyo3(signature = (subset=None))]
    fn bennequin(&self, subset: Option<Vec<usize>>) -> PyResult<i64> {
        bennequin_number(&self.0, subset.as_deref()).map_err(py_err)
    }

    fn relative_bennequin(&self) -> PyResult<Vec<i64>> {
        relative_bennequin_all(&self.0).map_err(py_err)
    }

    /// `(chi, chi_minus)` of the Seifert surface.
    fn seifert_euler(&self) -> (i64, i64) {
        let e = seifert_euler(&self.0);
        (e.chi, e.chi_minus)
    }

    /// `(chi, chi_minus)` of the band Seifert surface of the word as written.
    fn band_seifert_euler(&self) -> (i64, i64) {
        let e = band_seifert_euler(&self.0);
        (e.chi, e.chi_minus)
    }

    fn bounds(&self, class: Vec<i64>) -> PyResult<Bracket> {
        let b = thurston_bracket(&self.0, &CohClass(class)).map_err(py_err)?;
        Ok(Bracket {
            lower: b.lower,
            upper: b.upper,
            determined: b.determined,
            lower_source: lower_name(b.lower_source),
            upper_source: upper_name(b.upper_source),
        })
    }

    fn cable(&self, py: Python<'_>, class: Vec<i64>) -> PyResult<Cable> {
        let pair = cable_pair(&self.0, &CohClass(class)).map_err(py_err)?;
        let inner = relative_bennequin_subset(&pair.lprime, &pair.subset).map_err(py_err)?;
        Ok(Cable {
            braid: Py::new(py, PyBraid(pair.lprime.clone()))?,
            subset: pair.subset,
            origin: pair.origin,
            twist: pair.twist,
            relative_bennequin: inner,
        })
    }

    /// HOMFLY data from the trace evaluator, or from the skein oracle.
    #[pyo3(signature = (oracle=false, budget=None))]
    fn homfly(&self, py: Python<'_>, oracle: bool, budget: Option<usize>) -> PyResult<Homfly> {
        let w = &self.0;
        let report = py
            .detach(|| {
                if oracle {
                    let p = SkeinOracle::new(budget.unwrap_or(DEFAULT_BUDGET)).evaluate(w)?;
                    HomflyReport::from_p(w, p)
                } else {
                    homfly_report(w)
                }
            })
            .map_err(py_err)?;
        let mfw = mfw_check(w).map_err(py_err)?;
        Ok(Homfly {
            p: report.p.sorted_terms(),
            h: report.h.sorted_terms(),
            conway: report.conway.sorted_terms(),
            e: report.e,
            e_p: report.e_p,
            beta_t: report.beta_t,
            mfw_holds: mfw.holds,
        })
    }
}

fn lower_name(s: LowerSource) -> String {
    match s {
        LowerSource::Corollary => "corollary",
        LowerSource::Scholium => "scholium",
        LowerSource::Direct => "direct",
    }
    .into()
}

fn upper_name(s: UpperSource) -> String {
    match s {
        UpperSource::GeneralizedSeifert => "generalized_seifert",
        UpperSource::SeminormSum => "seminorm_sum",
    }
    .into()
}

/// Lower and upper bounds for the Thurston norm of a class.
#[pyclass(frozen, get_all)]
struct Bracket {
    lower: i64,
    upper: i64,
    determined: bool,
    lower_source: String,
    upper_source: String,
}

#[pymethods]
impl Bracket {
    fn __repr__(&self) -> String {
        format!(
            "Bracket(lower={}, upper={}, determined={})",
            self.lower,
            self.upper,
            if self.determined { "True" } else { "False" }
        )
    }
}

/// The cabled diagram of a class and the relative Bennequin number of its cable part.
#[pyclass(frozen, get_all)]
struct Cable {
    braid: Py<PyBraid>,
    subset: Vec<usize>,
    origin: Vec<usize>,
    twist: Vec<i64>,
    relative_bennequin: i64,
}

/// Polynomials are lists of `(coeff, v_exp, z_exp)` in ascending exponent order.
#[pyclass(frozen, get_all)]
struct Homfly {
    p: Vec<(BigInt, i32, i32)>,
    h: Vec<(BigInt, i32, i32)>,
    conway: Vec<(BigInt, i32, i32)>,
    e: i64,
    e_p: i64,
    beta_t: i64,
    mfw_holds: bool,
}

/// Alexander norm of a polynomial given as `(coeff, [e1, ..., er])` terms.
#[pyfunction]
fn alexander_norm(terms: Vec<(BigInt, Vec<i32>)>, class: Vec<i64>) -> PyResult<i64> {
    let nvars = terms.first().map_or(class.len(), |t| t.1.len());
    let p = MultiPoly::from_terms(nvars, terms).map_err(py_err)?;
    p.alexander_norm(&class).map_err(py_err)
}

/// Alexander norm of a polynomial in the line-based file format.
#[pyfunction]
fn alexander_norm_text(text: &str, class: Vec<i64>) -> PyResult<i64> {
    let p = MultiPoly::parse(text).map_err(py_err)?;
    p.alexander_norm(&class).map_err(py_err)
}

#[pymodule]
fn pybraidnorm(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add_class::<Bracket>()?;
    m.add_class::<Cable>()?;
    m.add_class::<Homfly>()?;
    m.add_function(wrap_pyfunction!(alexander_norm, m)?)?;
    m.add_function(wrap_pyfunction!(alexander_norm_text, m)?)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    Ok(())
}
