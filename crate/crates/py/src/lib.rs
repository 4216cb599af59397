//! Python bindings.
//!
//! Families are passed as the integers 60 and 120. Triples can be given
//! as `Triple` objects or as `(a, b, c)` tuples.

use pyo3::create_exception;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use eisenstein as core;
use eisenstein::{Error, Family, GenMatrix};

create_exception!(eisenstein_py, TriangleError, PyValueError);

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Overflow => PyOverflowError::new_err(e.to_string()),
        other => TriangleError::new_err(other.to_string()),
    }
}

fn family(deg: u32) -> PyResult<Family> {
    Family::from_degrees(deg).ok_or_else(|| PyValueError::new_err(format!("family must be 60 or 120, got {deg}")))
}

/// Integer triangle sides `(a, b, c)`, `a` opposite the distinguished angle.
#[pyclass(name = "Triple", module = "eisenstein_py", frozen, eq, hash, ord, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyTriple(core::Triple);

#[pymethods]
impl PyTriple {
    #[new]
    fn new(a: i64, b: i64, c: i64) -> PyResult<Self> {
        core::Triple::new(a, b, c).map(PyTriple).map_err(to_py_err)
    }

    #[getter]
    fn a(&self) -> i64 {
        self.0.a()
    }

    #[getter]
    fn b(&self) -> i64 {
        self.0.b()
    }

    #[getter]
    fn c(&self) -> i64 {
        self.0.c()
    }

    fn canonical(&self) -> Self {
        PyTriple(self.0.canonical())
    }

    fn astuple(&self) -> (i64, i64, i64) {
        (self.0.a(), self.0.b(), self.0.c())
    }

    fn __repr__(&self) -> String {
        format!("Triple({}, {}, {})", self.0.a(), self.0.b(), self.0.c())
    }
}

#[derive(FromPyObject)]
enum TripleLike {
    Obj(PyTriple),
    Tuple((i64, i64, i64)),
}

impl TripleLike {
    fn get(self) -> PyResult<core::Triple> {
        match self {
            TripleLike::Obj(t) => Ok(t.0),
            TripleLike::Tuple((a, b, c)) => core::Triple::new(a, b, c).map_err(to_py_err),
        }
    }
}

/// Seed, generator letters (outermost first) and twin flag of a tree node.
#[pyclass(name = "DerivationWord", module = "eisenstein_py", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyDerivationWord(core::DerivationWord);

#[pymethods]
impl PyDerivationWord {
    #[new]
    #[pyo3(signature = (seed, letters, twin=false))]
    fn new(seed: &str, letters: Vec<u8>, twin: bool) -> PyResult<Self> {
        let seed = match seed {
            "S1" => core::SeedId::S1,
            "S2" => core::SeedId::S2,
            other => return Err(PyValueError::new_err(format!("seed must be S1 or S2, got {other}"))),
        };
        if let Some(bad) = letters.iter().find(|l| !(1..=5).contains(*l)) {
            return Err(PyValueError::new_err(format!("letter {bad} is not in 1..=5")));
        }
        Ok(Self(core::DerivationWord::new(seed, letters, twin)))
    }

    #[getter]
    fn seed(&self) -> &'static str {
        self.0.seed.name()
    }

    #[getter]
    fn letters(&self) -> Vec<u32> {
        self.0.letters.iter().map(|&l| u32::from(l)).collect()
    }

    #[getter]
    fn twin(&self) -> bool {
        self.0.twin
    }

    fn __repr__(&self) -> String {
        format!("DerivationWord('{}', {:?}, twin={})", self.0.seed, self.0.letters, self.0.twin)
    }
}

/// A validated `(m, n)` pair with its 60-degree variant (`"PLUS"`/`"MINUS"`).
#[pyclass(name = "ParamPair", module = "eisenstein_py", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq)]
struct PyParamPair(core::ParamPair);

#[pymethods]
impl PyParamPair {
    #[new]
    #[pyo3(signature = (m, n, variant="PLUS"))]
    fn new(m: i64, n: i64, variant: &str) -> PyResult<Self> {
        let p = core::validate_params(m, n).map_err(to_py_err)?;
        Ok(Self(p.with_variant(parse_variant(variant)?)))
    }

    #[getter]
    fn m(&self) -> i64 {
        self.0.m()
    }

    #[getter]
    fn n(&self) -> i64 {
        self.0.n()
    }

    #[getter]
    fn variant(&self) -> &'static str {
        self.0.variant().name()
    }

    fn __repr__(&self) -> String {
        format!("ParamPair({}, {}, '{}')", self.0.m(), self.0.n(), self.0.variant().name())
    }
}

fn parse_variant(v: &str) -> PyResult<core::Variant> {
    match v {
        "PLUS" => Ok(core::Variant::Plus),
        "MINUS" => Ok(core::Variant::Minus),
        other => Err(PyValueError::new_err(format!("variant must be PLUS or MINUS, got {other}"))),
    }
}

type Rows = [[i64; 3]; 3];

#[pyfunction]
fn form_value(fam: u32, b: i64, c: i64) -> PyResult<i64> {
    core::form_value(family(fam)?, b, c).map_err(to_py_err)
}

#[pyfunction]
fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    core::gcd3(a, b, c)
}

#[pyfunction]
fn is_member(fam: u32, t: TripleLike) -> PyResult<bool> {
    core::is_member(family(fam)?, t.get()?).map_err(to_py_err)
}

#[pyfunction]
fn is_primitive(fam: u32, t: TripleLike) -> PyResult<bool> {
    core::is_primitive(family(fam)?, t.get()?).map_err(to_py_err)
}

/// 60, 120 or None.
#[pyfunction]
fn classify(t: TripleLike) -> PyResult<Option<u32>> {
    Ok(core::classify(t.get()?).map_err(to_py_err)?.map(Family::degrees))
}

#[pyfunction]
fn canonicalize(t: TripleLike) -> PyResult<PyTriple> {
    Ok(PyTriple(t.get()?.canonical()))
}

#[pyfunction]
fn validate_params(m: i64, n: i64) -> PyResult<PyParamPair> {
    core::validate_params(m, n).map(PyParamPair).map_err(to_py_err)
}

#[pyfunction]
fn eisenstein_from_params(p: PyParamPair) -> PyResult<PyTriple> {
    core::eisenstein_from_params(p.0).map(PyTriple).map_err(to_py_err)
}

#[pyfunction]
fn sub_eisenstein_from_params(p: PyParamPair) -> PyResult<PyTriple> {
    core::sub_eisenstein_from_params(p.0).map(PyTriple).map_err(to_py_err)
}

#[pyfunction]
fn params_from_triple(fam: u32, t: TripleLike) -> PyResult<Option<PyParamPair>> {
    Ok(core::params_from_triple(family(fam)?, t.get()?).map_err(to_py_err)?.map(PyParamPair))
}

#[pyfunction]
fn twin_60(t: TripleLike) -> PyResult<PyTriple> {
    core::twin_60(t.get()?).map(PyTriple).map_err(to_py_err)
}

#[pyfunction]
fn swap_120(t: TripleLike) -> PyResult<PyTriple> {
    Ok(PyTriple(core::swap_120(t.get()?)))
}

#[pyfunction]
fn to_sub(t: TripleLike) -> PyResult<PyTriple> {
    core::to_sub(t.get()?).map(PyTriple).map_err(to_py_err)
}

#[pyfunction]
fn from_sub(t: TripleLike) -> PyResult<PyTriple> {
    core::from_sub(t.get()?).map(PyTriple).map_err(to_py_err)
}

/// `S · M · S⁻¹` for a 3×3 nested list.
#[pyfunction]
fn conjugate(m: Rows) -> PyResult<Rows> {
    core::conjugate(&GenMatrix::new(m)).map(|g| g.0).map_err(to_py_err)
}

#[pyfunction]
fn apply_matrix(m: Rows, t: TripleLike) -> PyResult<PyTriple> {
    core::apply_matrix(&GenMatrix::new(m), t.get()?).map(PyTriple).map_err(to_py_err)
}

/// `(generators, seeds)` of one family's tree.
#[pyfunction]
fn matrix_set(fam: u32) -> PyResult<(Vec<Rows>, Vec<PyTriple>)> {
    let set = core::tree::matrix_set(family(fam)?);
    Ok((set.generators.iter().map(|g| g.0).collect(), set.seeds.iter().map(|&t| PyTriple(t)).collect()))
}

#[pyfunction]
fn apply_word(w: PyDerivationWord, fam: u32) -> PyResult<PyTriple> {
    core::apply_word(&w.0, family(fam)?).map(PyTriple).map_err(to_py_err)
}

/// Breadth-first tree output as `(Triple, DerivationWord | None)` pairs.
#[pyfunction]
#[pyo3(signature = (fam, max_a, include_twins=false, include_equilateral=false))]
fn enumerate(
    fam: u32,
    max_a: i64,
    include_twins: bool,
    include_equilateral: bool,
) -> PyResult<Vec<(PyTriple, Option<PyDerivationWord>)>> {
    core::TreeEnumerator::new(family(fam)?, max_a)
        .map_err(to_py_err)?
        .with_twins(include_twins)
        .with_equilateral(include_equilateral)
        .map(|n| {
            n.map(|n| (PyTriple(n.triple), n.word.map(PyDerivationWord)))
                .map_err(to_py_err)
        })
        .collect()
}

#[pyfunction]
fn derive_word(t: TripleLike) -> PyResult<Option<PyDerivationWord>> {
    Ok(core::derive_word(t.get()?).map_err(to_py_err)?.map(PyDerivationWord))
}

#[pyfunction]
fn brute_force(py: Python<'_>, fam: u32, max_a: i64) -> PyResult<Vec<PyTriple>> {
    let fam = family(fam)?;
    let found = py.detach(|| core::brute_force(fam, max_a)).map_err(to_py_err)?;
    Ok(found.into_iter().map(PyTriple).collect())
}

/// Certification report as a dict (same layout as the CLI's JSON).
#[pyfunction]
fn certify(py: Python<'_>, fam: u32, max_a: i64) -> PyResult<Py<PyAny>> {
    let fam = family(fam)?;
    let report = py.detach(|| core::certify(fam, max_a)).map_err(to_py_err)?;
    let text = serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

#[pymodule]
fn eisenstein_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TriangleError", m.py().get_type::<TriangleError>())?;
    m.add_class::<PyTriple>()?;
    m.add_class::<PyDerivationWord>()?;
    m.add_class::<PyParamPair>()?;
    m.add("S", core::S.0)?;
    m.add("S_INV", core::S_INV.0)?;
    m.add_function(wrap_pyfunction!(form_value, m)?)?;
    m.add_function(wrap_pyfunction!(gcd3, m)?)?;
    m.add_function(wrap_pyfunction!(is_member, m)?)?;
    m.add_function(wrap_pyfunction!(is_primitive, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(canonicalize, m)?)?;
    m.add_function(wrap_pyfunction!(validate_params, m)?)?;
    m.add_function(wrap_pyfunction!(eisenstein_from_params, m)?)?;
    m.add_function(wrap_pyfunction!(sub_eisenstein_from_params, m)?)?;
    m.add_function(wrap_pyfunction!(params_from_triple, m)?)?;
    m.add_function(wrap_pyfunction!(twin_60, m)?)?;
    m.add_function(wrap_pyfunction!(swap_120, m)?)?;
    m.add_function(wrap_pyfunction!(to_sub, m)?)?;
    m.add_function(wrap_pyfunction!(from_sub, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(apply_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(matrix_set, m)?)?;
    m.add_function(wrap_pyfunction!(apply_word, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(derive_word, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    Ok(())
}
