//! Python bindings. Tableaux cross the boundary as text literals
//! (`"1,3,-1;3,-3;-3"`, `.` for inner cells) together with `n`.

use ::kntab as core;
use core::cocrystal::{cocrystal_keys, generate_cocrystal};
use core::crystal::generate_crystal;
use core::rsk::{dual_rsk, Biword};
use core::{keys, sjdt, Letter, Partition, SkewTableau};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse(n: usize, literal: &str) -> PyResult<SkewTableau> {
    SkewTableau::parse(n, literal).map_err(err)
}

fn shape(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

/// `None` when the literal is a KN tableau, otherwise the reason it is not.
#[pyfunction]
fn validate(n: usize, literal: &str) -> PyResult<Option<String>> {
    Ok(parse(n, literal)?.validate_kn().err().map(|v| v.to_string()))
}

#[pyfunction]
fn split(n: usize, literal: &str) -> PyResult<String> {
    Ok(parse(n, literal)?.split_form().map_err(err)?.to_string())
}

#[pyfunction]
fn rectify(n: usize, literal: &str) -> PyResult<String> {
    Ok(sjdt::rectify(&parse(n, literal)?).map_err(err)?.to_string())
}

#[pyfunction]
#[pyo3(signature = (n, literal, lengths))]
fn reshape(n: usize, literal: &str, lengths: Vec<usize>) -> PyResult<String> {
    Ok(sjdt::reshape(&parse(n, literal)?, &lengths).map_err(err)?.to_string())
}

fn key(n: usize, literal: &str, right: bool, method: &str) -> PyResult<String> {
    let t = parse(n, literal)?;
    let k = match (right, method) {
        (true, "direct") => keys::right_key_direct(&t),
        (true, "sjdt") => keys::right_key_sjdt(&t),
        (false, "direct") => keys::left_key_direct(&t),
        (false, "sjdt") => keys::left_key_sjdt(&t),
        _ => return Err(PyValueError::new_err(format!("unknown method {:?}", method))),
    };
    Ok(k.map_err(err)?.to_string())
}

#[pyfunction]
#[pyo3(signature = (n, literal, method = "direct"))]
fn right_key(n: usize, literal: &str, method: &str) -> PyResult<String> {
    key(n, literal, true, method)
}

#[pyfunction]
#[pyo3(signature = (n, literal, method = "direct"))]
fn left_key(n: usize, literal: &str, method: &str) -> PyResult<String> {
    key(n, literal, false, method)
}

/// Every vertex of B(λ) as a literal, in generation order.
#[pyfunction]
fn crystal(parts: Vec<usize>, n: usize) -> PyResult<Vec<String>> {
    let g = generate_crystal(&shape(parts)?, n).map_err(err)?;
    Ok(g.vertices().iter().map(|t| t.to_string()).collect())
}

/// The character of B(λ), or of the Demazure crystal for `v` when given,
/// as a dict from exponent tuples to coefficients.
#[pyfunction]
#[pyo3(signature = (parts, n, v = None))]
fn character<'py>(
    py: Python<'py>,
    parts: Vec<usize>,
    n: usize,
    v: Option<Vec<i32>>,
) -> PyResult<Bound<'py, PyDict>> {
    let g = generate_crystal(&shape(parts)?, n).map_err(err)?;
    let p = match v {
        Some(v) => g.demazure_character(&v).map_err(err)?,
        None => g.character(),
    };
    let out = PyDict::new(py);
    for (e, c) in p.terms() {
        out.set_item(PyTuple::new(py, e)?, c)?;
    }
    Ok(out)
}

#[pyfunction]
fn cocrystal(n: usize, literal: &str, r: usize) -> PyResult<Vec<String>> {
    let cc = generate_cocrystal(&parse(n, literal)?, r).map_err(err)?;
    Ok((0..cc.len()).map(|v| cc.vertex(v).to_string()).collect())
}

#[pyfunction]
#[pyo3(name = "cocrystal_keys")]
fn py_cocrystal_keys(n: usize, literal: &str, r: usize) -> PyResult<Vec<String>> {
    let ks = cocrystal_keys(&parse(n, literal)?, r).map_err(err)?;
    Ok(ks.iter().map(|t| t.to_string()).collect())
}

/// Dual RSK of a list of `(top, bottom)` pairs; returns `(P, Q)`.
#[pyfunction]
fn rsk(n: usize, biword: Vec<(u32, i32)>) -> PyResult<(String, String)> {
    let letters = biword
        .into_iter()
        .map(|(a, b)| Letter::new(b).map(|l| (a, l)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let (p, q) = dual_rsk(n, &Biword::new(letters).map_err(err)?).map_err(err)?;
    Ok((p.to_string(), q.to_string()))
}

#[pymodule]
#[pyo3(name = "kntab")]
fn kntab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(split, m)?)?;
    m.add_function(wrap_pyfunction!(rectify, m)?)?;
    m.add_function(wrap_pyfunction!(reshape, m)?)?;
    m.add_function(wrap_pyfunction!(right_key, m)?)?;
    m.add_function(wrap_pyfunction!(left_key, m)?)?;
    m.add_function(wrap_pyfunction!(crystal, m)?)?;
    m.add_function(wrap_pyfunction!(character, m)?)?;
    m.add_function(wrap_pyfunction!(cocrystal, m)?)?;
    m.add_function(wrap_pyfunction!(py_cocrystal_keys, m)?)?;
    m.add_function(wrap_pyfunction!(rsk, m)?)?;
    Ok(())
}
