//! Python bindings: the decompositions, the correspondences and the
//! domino construction over plain lists and tuples.
//!
//! Tableaux cross the boundary as `(inner, rows)` data — straight
//! tableaux simply have an empty `inner` — and tables as lists of
//! `(nu, s2, s11)` triples in reverse-lexicographic order on `nu`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use plethyx_core::error::Error;
use plethyx_core::partition::{Composition, Partition};
use plethyx_core::rsk::{Biword, BurgeWord};
use plethyx_core::sign::{self, Basis, SignedKostkaTable};
use plethyx_core::symfunc::{self, SymFunc};
use plethyx_core::tableau::{self, SkewShape, Tableau};
use plethyx_core::{domino, jdt};

/// Entry rows of a straight tableau.
type Rows = Vec<Vec<u32>>;
/// A skew tableau as `(inner, rows)`.
type SkewRows = (Vec<u32>, Rows);
/// Schur terms as `(nu, coefficient)`.
type SchurTerms = Vec<(Vec<u32>, u64)>;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn basis(tag: &str) -> PyResult<Basis> {
    tag.parse().map_err(err)
}

fn tableau(inner: Vec<u32>, rows: Vec<Vec<u32>>) -> PyResult<Tableau> {
    Tableau::from_skew_rows(partition(inner)?, rows).map_err(err)
}

fn tableau_out(t: &Tableau) -> SkewRows {
    (t.shape().inner().parts().to_vec(), t.rows().to_vec())
}

fn table_out(table: &SignedKostkaTable) -> Vec<(Vec<u32>, u64, u64)> {
    table
        .rows()
        .map(|(nu, s2, s11)| (nu.parts().to_vec(), s2, s11))
        .collect()
}

/// λ' — rows become columns.
#[pyfunction]
fn conjugate(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(partition(parts)?.conjugate().parts().to_vec())
}

/// λ² — every part repeated twice.
#[pyfunction]
fn double(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(partition(parts)?.double().parts().to_vec())
}

/// The Kostka number: semistandard tableaux of `shape` and `content`.
#[pyfunction]
fn kostka(shape: Vec<u32>, content: Vec<u32>) -> PyResult<u64> {
    Ok(tableau::kostka(
        &partition(shape)?,
        &Composition::new(content),
    ))
}

/// All semistandard fillings as `(inner, rows)` pairs, row-reading
/// lexicographic order.
#[pyfunction]
#[pyo3(signature = (shape, content, inner=None))]
fn enumerate_ssyt(
    shape: Vec<u32>,
    content: Vec<u32>,
    inner: Option<Vec<u32>>,
) -> PyResult<Vec<SkewRows>> {
    let skew = SkewShape::new(partition(shape)?, partition(inner.unwrap_or_default())?)
        .map_err(err)?;
    Ok(tableau::enumerate_ssyt(&skew, &Composition::new(content))
        .iter()
        .map(tableau_out)
        .collect())
}

/// Jeu de taquin rectification of a skew tableau given as `inner` plus
/// entry rows; returns the straight rows.
#[pyfunction]
#[pyo3(signature = (rows, inner=None))]
fn rectify(rows: Vec<Vec<u32>>, inner: Option<Vec<u32>>) -> PyResult<Vec<Vec<u32>>> {
    let t = tableau(inner.unwrap_or_default(), rows)?;
    if !t.is_semistandard() {
        return Err(PyValueError::new_err("tableau is not semistandard"));
    }
    Ok(jdt::rectify(&t).rows().to_vec())
}

/// The tableau product `Rect(a ∗ b)` of two straight tableaux.
#[pyfunction]
fn tableau_product(a: Vec<Vec<u32>>, b: Vec<Vec<u32>>) -> PyResult<Vec<Vec<u32>>> {
    let a = Tableau::from_rows(a).map_err(err)?;
    let b = Tableau::from_rows(b).map_err(err)?;
    if !a.is_semistandard() || !b.is_semistandard() {
        return Err(PyValueError::new_err("operands must be semistandard"));
    }
    Ok(jdt::product(&a, &b).rows().to_vec())
}

/// The insertion correspondence on a lexicographically ordered biword;
/// returns the rows of the insertion and recording tableaux.
#[pyfunction]
fn rsk(u: Vec<u32>, v: Vec<u32>) -> PyResult<(Rows, Rows)> {
    let w = Biword::from_words(u, v).map_err(err)?;
    let pair = plethyx_core::rsk::rsk(&w);
    Ok((pair.p.rows().to_vec(), pair.q.rows().to_vec()))
}

/// The Burge-word variant; the recording tableau is conjugate
/// semistandard.
#[pyfunction]
fn rsk_tilde(u: Vec<u32>, v: Vec<u32>) -> PyResult<(Rows, Rows)> {
    let w = BurgeWord::from_words(u, v).map_err(err)?;
    let pair = plethyx_core::rsk::rsk_tilde(&w);
    Ok((pair.p.rows().to_vec(), pair.q.rows().to_vec()))
}

/// The sign of a recording tableau of content λ² (`+1` or `−1`).
#[pyfunction]
#[pyo3(signature = (rows, lambda, inner=None))]
fn sign_h(rows: Vec<Vec<u32>>, lambda: Vec<u32>, inner: Option<Vec<u32>>) -> PyResult<i32> {
    let t = tableau(inner.unwrap_or_default(), rows)?;
    sign::sign_h(&t, &partition(lambda)?).map_err(err)
}

/// The conjugate sign of a conjugate semistandard tableau of content
/// λ².
#[pyfunction]
#[pyo3(signature = (rows, lambda, inner=None))]
fn sign_e(rows: Vec<Vec<u32>>, lambda: Vec<u32>, inner: Option<Vec<u32>>) -> PyResult<i32> {
    let t = tableau(inner.unwrap_or_default(), rows)?;
    sign::sign_e(&t, &partition(lambda)?).map_err(err)
}

/// The signed Kostka table for `h_λ²`/`e_λ²` (μ adds the skew product
/// `s_μ·…`): a list of `(nu, s2_count, s11_count)`.
#[pyfunction]
#[pyo3(signature = (basis_tag, lambda, mu=None))]
fn decompose(
    basis_tag: &str,
    lambda: Vec<u32>,
    mu: Option<Vec<u32>>,
) -> PyResult<Vec<(Vec<u32>, u64, u64)>> {
    let table = sign::decompose_square(
        basis(basis_tag)?,
        &partition(mu.unwrap_or_default())?,
        &partition(lambda)?,
    );
    Ok(table_out(&table))
}

/// The independent power-sum route: Schur expansions of the symmetric
/// and anti-symmetric part of `h_λ²` or `e_λ²` as
/// `(sym_terms, antisym_terms)` lists of `(nu, coefficient)`.
#[pyfunction]
fn split_square_schur(
    basis_tag: &str,
    lambda: Vec<u32>,
) -> PyResult<(SchurTerms, SchurTerms)> {
    let la = partition(lambda)?;
    let g = match basis(basis_tag)? {
        Basis::H => SymFunc::h(&la),
        Basis::E => SymFunc::e(&la),
    };
    let (sym, antisym) = symfunc::split_square(&g);
    let flatten = |f: &SymFunc| -> PyResult<SchurTerms> {
        let mut out: Vec<(Vec<u32>, u64)> = f
            .schur_expand()
            .into_iter()
            .map(|(nu, c)| {
                if !c.is_integer() {
                    return Err(PyValueError::new_err("non-integral Schur coefficient"));
                }
                let n: u64 = c
                    .to_integer()
                    .try_into()
                    .map_err(|_| PyValueError::new_err("negative Schur coefficient"))?;
                Ok((nu.parts().to_vec(), n))
            })
            .collect::<PyResult<_>>()?;
        out.reverse(); // reverse-lexicographic, matching decompose
        Ok(out)
    };
    Ok((flatten(&sym)?, flatten(&antisym)?))
}

/// The domino route for the one-row/one-column case: content
/// partitions of Yamanouchi domino tableaux bucketed by cospin parity.
#[pyfunction]
fn littlewood_domino(n: u32, basis_tag: &str) -> PyResult<Vec<(Vec<u32>, u64, u64)>> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(table_out(&domino::littlewood_via_domino(n, basis(basis_tag)?)))
}

#[pymodule]
fn plethyx(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(double, m)?)?;
    m.add_function(wrap_pyfunction!(kostka, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ssyt, m)?)?;
    m.add_function(wrap_pyfunction!(rectify, m)?)?;
    m.add_function(wrap_pyfunction!(tableau_product, m)?)?;
    m.add_function(wrap_pyfunction!(rsk, m)?)?;
    m.add_function(wrap_pyfunction!(rsk_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(sign_h, m)?)?;
    m.add_function(wrap_pyfunction!(sign_e, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(split_square_schur, m)?)?;
    m.add_function(wrap_pyfunction!(littlewood_domino, m)?)?;
    Ok(())
}
