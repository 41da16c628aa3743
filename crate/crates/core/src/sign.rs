//! The sign statistic on recording tableaux and the signed Kostka
//! tables splitting `h_λ²` and `e_λ²` into symmetric and anti-symmetric
//! parts.
//!
//! For a tableau `Q` of content `λ²`, rectifying the subtableau on
//! entries `2i−1, 2i` gives a two-row shape `(2λ_i−j_i, j_i)`; the sign
//! of `Q` is `∏ (−1)^{j_i}`. Positive tableaux count the copies of
//! `s_ν` inside `s_2[h_λ]`, negative ones inside `s_11[h_λ]`. On the
//! elementary side the same dissection is applied to conjugate
//! tableaux, with hook shapes `(2^{λ_i−j_i}, 1^{2j_i})` read through
//! conjugation. Skew tables cover the products `s_μ·h_λ²` and
//! `s_μ·e_λ²`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jdt::rectify;
use crate::partition::{Composition, Partition};
use crate::rsk::subtableau;
use crate::tableau::{enumerate_ssyt, SkewShape, Tableau};

/// Which family of symmetric functions a table refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    H,
    E,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::H => write!(f, "h"),
            Basis::E => write!(f, "e"),
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h" => Ok(Basis::H),
            "e" => Ok(Basis::E),
            _ => Err(Error::Parse(format!("basis must be h or e, got {s:?}"))),
        }
    }
}

/// For each `ν`, the number of positive- and negative-sign tableaux of
/// shape `ν/μ` (conjugated shapes on the `e` side) and content `λ²`:
/// the multiplicities of `s_ν` in the symmetric and anti-symmetric part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedKostkaTable {
    basis: Basis,
    lambda: Partition,
    mu: Partition,
    entries: BTreeMap<Partition, (u64, u64)>,
}

impl SignedKostkaTable {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// The skew inner shape; empty for the straight case.
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// `(K⁺, K⁻)` for a given `ν`; `(0, 0)` when `ν` does not occur.
    pub fn counts(&self, nu: &Partition) -> (u64, u64) {
        self.entries.get(nu).copied().unwrap_or((0, 0))
    }

    /// Rows `(ν, K⁺, K⁻)` in reverse-lexicographic order on `ν`.
    pub fn rows(&self) -> impl Iterator<Item = (&Partition, u64, u64)> {
        self.entries.iter().rev().map(|(nu, &(p, m))| (nu, p, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity `K⁺ + K⁻` per `ν` — the plain Kostka number.
    pub fn totals(&self) -> BTreeMap<Partition, u64> {
        self.entries
            .iter()
            .map(|(nu, &(p, m))| (nu.clone(), p + m))
            .collect()
    }

    /// Aligned text rendering, one row per `ν`.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let mu = if self.mu.is_empty() {
            String::new()
        } else {
            format!(" mu={}", self.mu)
        };
        out.push_str(&format!(
            "basis={} lambda={}{}\n",
            self.basis, self.lambda, mu
        ));
        let width = self
            .rows()
            .map(|(nu, _, _)| nu.to_string().len())
            .max()
            .unwrap_or(2)
            .max(2);
        out.push_str(&format!("{:<width$}  {:>6}  {:>6}\n", "nu", "s2", "s11"));
        for (nu, plus, minus) in self.rows() {
            out.push_str(&format!(
                "{:<width$}  {:>6}  {:>6}\n",
                nu.to_string(),
                plus,
                minus
            ));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TableTerm {
    nu: Vec<u32>,
    s2: u64,
    s11: u64,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    basis: Basis,
    lambda: Vec<u32>,
    mu: Vec<u32>,
    terms: Vec<TableTerm>,
}

impl Serialize for SignedKostkaTable {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        TableRepr {
            basis: self.basis,
            lambda: self.lambda.parts().to_vec(),
            mu: self.mu.parts().to_vec(),
            terms: self
                .rows()
                .map(|(nu, s2, s11)| TableTerm {
                    nu: nu.parts().to_vec(),
                    s2,
                    s11,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedKostkaTable {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let repr = TableRepr::deserialize(deserializer)?;
        let lambda = Partition::new(repr.lambda).map_err(serde::de::Error::custom)?;
        let mu = Partition::new(repr.mu).map_err(serde::de::Error::custom)?;
        let mut entries = BTreeMap::new();
        for t in repr.terms {
            let nu = Partition::new(t.nu).map_err(serde::de::Error::custom)?;
            entries.insert(nu, (t.s2, t.s11));
        }
        Ok(SignedKostkaTable {
            basis: repr.basis,
            lambda,
            mu,
            entries,
        })
    }
}

fn check_content(q: &Tableau, lambda: &Partition) -> Result<()> {
    let expected = Composition::from(&lambda.double());
    if q.content() != expected {
        return Err(Error::ContentMismatch(format!(
            "tableau content {} is not λ² = {expected}",
            q.content()
        )));
    }
    Ok(())
}

/// The sign of a (possibly skew) tableau of content `λ²`: the product
/// over `i` of `(−1)^{j_i}` where `(2λ_i−j_i, j_i)` is the shape of the
/// rectified subtableau on entries `2i−1, 2i`.
pub fn sign_h(q: &Tableau, lambda: &Partition) -> Result<i32> {
    check_content(q, lambda)?;
    let mut sign = 1;
    for i in 1..=lambda.len() as u32 {
        let sub = subtableau(q, i)?;
        let qi = rectify(&sub);
        let shape = qi.shape().outer();
        let li = lambda.part(i as usize - 1);
        if shape.len() > 2 || shape.part(0) + shape.part(1) != 2 * li {
            return Err(Error::ShapeMismatch(format!(
                "rectified subtableau {i} has shape ({shape}), not a two-row shape of size {}",
                2 * li
            )));
        }
        let ji = shape.part(1);
        if ji % 2 == 1 {
            sign = -sign;
        }
    }
    Ok(sign)
}

/// The conjugate sign of a conjugate semistandard tableau of content
/// `λ²`: subtableaux are conjugated, rectified and conjugated back,
/// giving hook shapes `(2^{λ_i−j_i}, 1^{2j_i})`; the sign is
/// `∏ (−1)^{j_i}`.
pub fn sign_e(q: &Tableau, lambda: &Partition) -> Result<i32> {
    if !q.is_conjugate_semistandard() {
        return Err(Error::InvalidTableau(
            "sign_e needs a conjugate semistandard tableau".into(),
        ));
    }
    check_content(q, lambda)?;
    let mut sign = 1;
    for i in 1..=lambda.len() as u32 {
        let sub = subtableau(q, i)?;
        let qi = rectify(&sub.conjugate()).conjugate();
        let shape = qi.shape().outer();
        let li = lambda.part(i as usize - 1);
        // hooks (2^a, 1^b): a twos then b ones
        let twos = shape.parts().iter().filter(|&&p| p == 2).count() as u32;
        let ones = shape.parts().iter().filter(|&&p| p == 1).count() as u32;
        if shape.part(0) > 2 || twos + ones != shape.len() as u32 || !ones.is_multiple_of(2) {
            return Err(Error::ShapeMismatch(format!(
                "conjugate-rectified subtableau {i} has shape ({shape}), not (2^a,1^2j)"
            )));
        }
        let ji = ones / 2;
        if twos + ji != li {
            return Err(Error::ShapeMismatch(format!(
                "hook ({shape}) does not match size 2·{li}"
            )));
        }
        if ji % 2 == 1 {
            sign = -sign;
        }
    }
    Ok(sign)
}

fn decompose(basis: Basis, mu: &Partition, lambda: &Partition) -> SignedKostkaTable {
    let content = Composition::from(&lambda.double());
    let degree = 2 * lambda.size() + mu.size();
    let candidates: Vec<Partition> = Partition::all_of(degree)
        .into_iter()
        .filter(|nu| nu.contains(mu))
        .collect();
    let counted: Vec<(Partition, (u64, u64))> = candidates
        .into_par_iter()
        .filter_map(|nu| {
            let (plus, minus) = match basis {
                Basis::H => {
                    let shape = SkewShape::new(nu.clone(), mu.clone()).expect("mu ⊆ nu");
                    count_signs(&shape, &content, lambda, false)
                }
                Basis::E => {
                    // enumerate the conjugated recording tableaux:
                    // fillings of ν'/μ' are the Q̃', conjugation gives
                    // the Q̃
                    let shape =
                        SkewShape::new(nu.conjugate(), mu.conjugate()).expect("mu' ⊆ nu'");
                    count_signs(&shape, &content, lambda, true)
                }
            };
            (plus + minus > 0).then_some((nu, (plus, minus)))
        })
        .collect();
    SignedKostkaTable {
        basis,
        lambda: lambda.clone(),
        mu: mu.clone(),
        entries: counted.into_iter().collect(),
    }
}

fn count_signs(
    shape: &SkewShape,
    content: &Composition,
    lambda: &Partition,
    conjugated: bool,
) -> (u64, u64) {
    let mut plus = 0;
    let mut minus = 0;
    for filling in enumerate_ssyt(shape, content) {
        let sign = if conjugated {
            sign_e(&filling.conjugate(), lambda)
        } else {
            sign_h(&filling, lambda)
        }
        .expect("enumerated fillings satisfy the sign preconditions");
        if sign > 0 {
            plus += 1;
        } else {
            minus += 1;
        }
    }
    (plus, minus)
}

/// Splits `h_λ² = Σ_ν K^ν_{λ²} s_ν` by the sign statistic.
pub fn decompose_h_square(lambda: &Partition) -> SignedKostkaTable {
    decompose(Basis::H, &Partition::empty(), lambda)
}

/// Splits `e_λ² = Σ_ν K^{ν'}_{λ²} s_ν` by the conjugate sign statistic.
pub fn decompose_e_square(lambda: &Partition) -> SignedKostkaTable {
    decompose(Basis::E, &Partition::empty(), lambda)
}

/// Splits `s_μ·h_λ² = Σ_ν K^{ν/μ}_{λ²} s_ν` by the sign statistic on
/// skew tableaux.
pub fn decompose_skew_h_square(mu: &Partition, lambda: &Partition) -> SignedKostkaTable {
    decompose(Basis::H, mu, lambda)
}

/// Skew analogue on the elementary side.
pub fn decompose_skew_e_square(mu: &Partition, lambda: &Partition) -> SignedKostkaTable {
    decompose(Basis::E, mu, lambda)
}

/// Convenience dispatch on [`Basis`].
pub fn decompose_square(basis: Basis, mu: &Partition, lambda: &Partition) -> SignedKostkaTable {
    decompose(basis, mu, lambda)
}

/// The closed-form table for the one-part case: on the `h` side
/// `K⁺ = 1` exactly on `ν = (2n−2j, 2j)` and `K⁻ = 1` exactly on
/// `ν = (2n−2j−1, 2j+1)`; on the `e` side the duals with hooks
/// `(2^{n−j}, 1^{2j})`.
pub fn littlewood_closed_form(basis: Basis, n: u32) -> SignedKostkaTable {
    let mut entries = BTreeMap::new();
    for j in 0..=n {
        let nu = match basis {
            Basis::H => Partition::new(vec![2 * n - j, j]).unwrap(),
            Basis::E => {
                let mut parts = vec![2u32; (n - j) as usize];
                parts.extend(vec![1u32; 2 * j as usize]);
                Partition::new(parts).unwrap()
            }
        };
        let counts = if j % 2 == 0 { (1, 0) } else { (0, 1) };
        entries.insert(nu, counts);
    }
    SignedKostkaTable {
        basis,
        lambda: Partition::new(vec![n]).unwrap(),
        mu: Partition::empty(),
        entries,
    }
}

/// Builds a straight-case table from raw counts; zero-total rows are
/// dropped. Used by the domino construction to report its bucketing.
pub(crate) fn table_from_counts(
    basis: Basis,
    lambda: Partition,
    entries: BTreeMap<Partition, (u64, u64)>,
) -> SignedKostkaTable {
    SignedKostkaTable {
        basis,
        lambda,
        mu: Partition::empty(),
        entries: entries
            .into_iter()
            .filter(|&(_, (p, m))| p + m > 0)
            .collect(),
    }
}
