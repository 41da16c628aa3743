//! Exact symmetric-function arithmetic: basis generators, products,
//! plethysm through power sums, and Schur expansion.
//!
//! Values are stored in the power-sum basis with arbitrary-precision
//! rational coefficients, where multiplication is multiset union of
//! indices and plethysm is index scaling. Schur expansion goes through
//! the monomial basis — faithful for a degree-`d` symmetric function in
//! `d` variables — and eliminates leading terms in reverse-lexicographic
//! order using the unitriangularity of the Kostka matrix. The monomial
//! coefficients of a Schur function are obtained from Jacobi–Trudi
//! determinants, not from tableau enumeration, so this module shares no
//! counting path with the combinatorial side it is used to verify.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Basis tags for [`generators`] and serialization.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymBasis {
    H,
    E,
    P,
    S,
}

/// A symmetric function as an exact rational combination of power-sum
/// basis elements `p_λ`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BigRational>,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    /// The constant 1 = `p_∅`.
    pub fn one() -> Self {
        SymFunc::from_term(Partition::empty(), BigRational::one())
    }

    pub fn from_term(la: Partition, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(la, coeff);
        }
        SymFunc { terms }
    }

    /// The power-sum generator `p_λ`.
    pub fn p(la: &Partition) -> Self {
        SymFunc::from_term(la.clone(), BigRational::one())
    }

    /// The complete homogeneous generator `h_λ`, converted to the
    /// power-sum basis by Newton's identities.
    pub fn h(la: &Partition) -> Self {
        let table = h_table(la.part(0));
        la.parts()
            .iter()
            .fold(SymFunc::one(), |acc, &k| &acc * &table[k as usize])
    }

    /// The elementary generator `e_λ`.
    pub fn e(la: &Partition) -> Self {
        let table = e_table(la.part(0));
        la.parts()
            .iter()
            .fold(SymFunc::one(), |acc, &k| &acc * &table[k as usize])
    }

    /// The Schur generator `s_λ` via a Jacobi–Trudi determinant (the
    /// `h`- or `e`-sided one, whichever matrix is smaller).
    pub fn s(la: &Partition) -> Self {
        schur_in_p(la)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, la: &Partition) -> BigRational {
        self.terms
            .get(la)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scaled(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(la, x)| (la.clone(), x * c))
                .collect(),
        }
    }

    /// Largest degree among the terms (0 for the zero function).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|la| la.size()).max().unwrap_or(0)
    }

    fn insert_add(&mut self, la: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(la) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// The plethysm `self[g]`, computed by expanding `self` in power
    /// sums and substituting `p_k ↦ p_k[g]`, where `p_k[g]` scales every
    /// power-sum index of `g` by `k`.
    pub fn plethysm(&self, g: &SymFunc) -> SymFunc {
        let mut cache: HashMap<u32, SymFunc> = HashMap::new();
        let mut out = SymFunc::zero();
        for (la, c) in &self.terms {
            let mut term = SymFunc::one();
            for &k in la.parts() {
                let pk = cache.entry(k).or_insert_with(|| p_plethysm(k, g)).clone();
                term = &term * &pk;
            }
            out = &out + &term.scaled(c);
        }
        out
    }

    /// Expands into the monomial basis, keyed by partition (terms of
    /// every degree are merged into one map; degrees never collide).
    pub fn monomial_expansion(&self) -> BTreeMap<Partition, BigRational> {
        let mut by_degree: BTreeMap<u32, Vec<(&Partition, &BigRational)>> = BTreeMap::new();
        for (la, c) in &self.terms {
            by_degree.entry(la.size()).or_default().push((la, c));
        }
        let mut out = BTreeMap::new();
        for (n, terms) in by_degree {
            for mu in Partition::all_of(n) {
                let mut acc = BigRational::zero();
                for &(la, c) in &terms {
                    let count = assignment_count(la, &mu);
                    if count != 0 {
                        acc += c * BigRational::from_integer(BigInt::from(count));
                    }
                }
                if !acc.is_zero() {
                    out.insert(mu, acc);
                }
            }
        }
        out
    }

    /// Exact Schur coefficients. Panics if the elimination leaves a
    /// nonzero remainder, which would indicate an internal error — every
    /// symmetric function expands in the Schur basis.
    pub fn schur_expand(&self) -> BTreeMap<Partition, BigRational> {
        let mut mvec = self.monomial_expansion();
        let mut degrees: Vec<u32> = mvec.keys().map(|la| la.size()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut schur_cache: HashMap<Partition, BTreeMap<Partition, BigRational>> = HashMap::new();
        let mut out = BTreeMap::new();
        for n in degrees {
            for nu in Partition::all_of(n) {
                let Some(c) = mvec.get(&nu).cloned() else {
                    continue;
                };
                if c.is_zero() {
                    continue;
                }
                let snu = schur_cache
                    .entry(nu.clone())
                    .or_insert_with(|| schur_in_p(&nu).monomial_expansion());
                for (mu, k) in snu.iter() {
                    let entry = mvec.entry(mu.clone()).or_insert_with(BigRational::zero);
                    *entry -= &c * k;
                }
                out.insert(nu, c);
            }
        }
        assert!(
            mvec.values().all(|c| c.is_zero()),
            "nonzero remainder after Schur elimination"
        );
        out
    }
}

/// The named basis element as a `SymFunc`.
pub fn generators(basis: SymBasis, la: &Partition) -> SymFunc {
    match basis {
        SymBasis::H => SymFunc::h(la),
        SymBasis::E => SymFunc::e(la),
        SymBasis::P => SymFunc::p(la),
        SymBasis::S => SymFunc::s(la),
    }
}

/// `(sym, antisym)` parts of `g²`: `((g² + p_2[g])/2, (g² − p_2[g])/2)`.
pub fn split_square(g: &SymFunc) -> (SymFunc, SymFunc) {
    let square = g * g;
    let twisted = p_plethysm(2, g);
    let half = ratio(1, 2);
    let sym = (&square + &twisted).scaled(&half);
    let antisym = (&square - &twisted).scaled(&half);
    (sym, antisym)
}

/// Checks the product expansion of the symmetric and anti-symmetric
/// parts of a square: summing over index subsets of even (respectively
/// odd) size, the product of the chosen anti-symmetric and remaining
/// symmetric parts recovers the two parts of `(g_1⋯g_n)²`.
pub fn verify_symantisym(gs: &[SymFunc]) -> bool {
    let product = gs.iter().fold(SymFunc::one(), |acc, g| &acc * g);
    let (sym, antisym) = split_square(&product);
    let splits: Vec<(SymFunc, SymFunc)> = gs.iter().map(split_square).collect();

    let mut even = SymFunc::zero();
    let mut odd = SymFunc::zero();
    for mask in 0u32..(1 << gs.len()) {
        let mut term = SymFunc::one();
        for (i, split) in splits.iter().enumerate() {
            let factor = if mask & (1 << i) != 0 {
                &split.1
            } else {
                &split.0
            };
            term = &term * factor;
        }
        if mask.count_ones() % 2 == 0 {
            even = &even + &term;
        } else {
            odd = &odd + &term;
        }
    }
    sym == even && antisym == odd
}

/// `p_k[g]`: every power-sum index of `g` scaled by `k`.
fn p_plethysm(k: u32, g: &SymFunc) -> SymFunc {
    let terms = g
        .terms
        .iter()
        .map(|(la, c)| {
            let scaled = Partition::new(la.parts().iter().map(|&m| k * m).collect())
                .expect("scaling preserves partitions");
            (scaled, c.clone())
        })
        .collect();
    SymFunc { terms }
}

/// `h_0..h_n` in the power-sum basis: `k·h_k = Σ_{i=1}^{k} p_i·h_{k−i}`.
fn h_table(n: u32) -> Vec<SymFunc> {
    let mut table = vec![SymFunc::one()];
    for k in 1..=n as usize {
        let mut acc = SymFunc::zero();
        for i in 1..=k {
            let pi = SymFunc::p(&Partition::new(vec![i as u32]).unwrap());
            acc = &acc + &(&pi * &table[k - i]);
        }
        table.push(acc.scaled(&ratio(1, k as i64)));
    }
    table
}

/// `e_0..e_n` in the power-sum basis:
/// `k·e_k = Σ_{i=1}^{k} (−1)^{i−1} p_i·e_{k−i}`.
fn e_table(n: u32) -> Vec<SymFunc> {
    let mut table = vec![SymFunc::one()];
    for k in 1..=n as usize {
        let mut acc = SymFunc::zero();
        for i in 1..=k {
            let pi = SymFunc::p(&Partition::new(vec![i as u32]).unwrap());
            let term = &pi * &table[k - i];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        table.push(acc.scaled(&ratio(1, k as i64)));
    }
    table
}

/// `s_ν` in the power-sum basis through the smaller of the two
/// Jacobi–Trudi determinants: `det(h_{ν_i − i + j})` over the rows of
/// `ν`, or `det(e_{ν'_i − i + j})` over the rows of `ν'`.
fn schur_in_p(nu: &Partition) -> SymFunc {
    if nu.is_empty() {
        return SymFunc::one();
    }
    let (index, use_h) = if nu.len() as u32 <= nu.part(0) {
        (nu.clone(), true)
    } else {
        (nu.conjugate(), false)
    };
    let k = index.len();
    let max_index = index.part(0) + k as u32;
    let table = if use_h {
        h_table(max_index)
    } else {
        e_table(max_index)
    };
    // matrix[i][j] = table index of g_{index_i − i + j}; g_{<0} is absent
    let matrix: Vec<Vec<Option<usize>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let m = index.part(i) as i64 - i as i64 + j as i64;
                    (m >= 0).then_some(m as usize)
                })
                .collect()
        })
        .collect();
    fn minor(
        i: usize,
        used: u32,
        matrix: &[Vec<Option<usize>>],
        table: &[SymFunc],
        memo: &mut HashMap<(usize, u32), SymFunc>,
    ) -> SymFunc {
        let k = matrix.len();
        if i == k {
            return SymFunc::one();
        }
        if let Some(hit) = memo.get(&(i, used)) {
            return hit.clone();
        }
        let mut acc = SymFunc::zero();
        let mut sign = false;
        for j in 0..k {
            if used & (1 << j) != 0 {
                continue;
            }
            if let Some(m) = matrix[i][j] {
                let sub = minor(i + 1, used | (1 << j), matrix, table, memo);
                let term = &table[m] * &sub;
                acc = if sign { &acc - &term } else { &acc + &term };
            }
            sign = !sign;
        }
        memo.insert((i, used), acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    minor(0, 0, &matrix, &table, &mut memo)
}

/// The coefficient of the monomial `x^μ` in `p_λ`: the number of ways
/// to assign the parts of `λ` (as distinguishable factors) to the
/// positions of `μ` so that each position receives its exact load.
/// Counted with binomial factors over grouped equal parts, never by
/// walking individual assignments.
fn assignment_count(la: &Partition, mu: &Partition) -> u128 {
    if la.size() != mu.size() {
        return 0;
    }
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for &p in la.parts() {
        match groups.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => groups.push((p, 1)),
        }
    }

    fn binomial(n: u32, k: u32) -> u128 {
        let k = k.min(n - k);
        let mut acc: u128 = 1;
        for i in 0..k as u128 {
            acc = acc * (n as u128 - i) / (i + 1);
        }
        acc
    }

    /// All ways to take `c_g ≤ remaining_g` parts from each group with
    /// `Σ c_g·value_g = target`; yields the leftover counts and the
    /// product of choice binomials.
    fn choices(
        groups: &[(u32, u32)],
        remaining: &[u32],
        g: usize,
        target: u32,
        factor: u128,
        leftover: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, u128)>,
    ) {
        if g == groups.len() {
            if target == 0 {
                out.push((leftover.clone(), factor));
            }
            return;
        }
        let value = groups[g].0;
        let max_take = (target / value).min(remaining[g]);
        for c in 0..=max_take {
            leftover.push(remaining[g] - c);
            choices(
                groups,
                remaining,
                g + 1,
                target - c * value,
                factor * binomial(remaining[g], c),
                leftover,
                out,
            );
            leftover.pop();
        }
    }

    fn rec(groups: &[(u32, u32)], remaining: &[u32], mu: &Partition, pos: usize) -> u128 {
        if pos == mu.len() {
            return if remaining.iter().all(|&m| m == 0) { 1 } else { 0 };
        }
        let mut outs = Vec::new();
        choices(
            groups,
            remaining,
            0,
            mu.part(pos),
            1,
            &mut Vec::new(),
            &mut outs,
        );
        let mut total = 0u128;
        for (leftover, factor) in outs {
            total += factor * rec(groups, &leftover, mu, pos + 1);
        }
        total
    }

    let remaining: Vec<u32> = groups.iter().map(|&(_, m)| m).collect();
    rec(&groups, &remaining, mu, 0)
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (la, c) in &rhs.terms {
            out.insert_add(la.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (la, c) in &rhs.terms {
            out.insert_add(la.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scaled(&-BigRational::one())
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (la, a) in &self.terms {
            for (mu, b) in &rhs.terms {
                let mut parts: Vec<u32> = la.parts().to_vec();
                parts.extend_from_slice(mu.parts());
                parts.sort_unstable_by(|x, y| y.cmp(x));
                out.insert_add(
                    Partition::new(parts).expect("sorted parts form a partition"),
                    a * b,
                );
            }
        }
        out
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (la, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·p({la})")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    basis: SymBasis,
    partition: Vec<u32>,
    numerator: String,
    denominator: String,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(la, c)| TermRepr {
                basis: SymBasis::P,
                partition: la.parts().to_vec(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut out = SymFunc::zero();
        for t in terms {
            let la = Partition::new(t.partition).map_err(serde::de::Error::custom)?;
            let numer: BigInt = t
                .numerator
                .parse()
                .map_err(|_| serde::de::Error::custom("bad numerator"))?;
            let denom: BigInt = t
                .denominator
                .parse()
                .map_err(|_| serde::de::Error::custom("bad denominator"))?;
            if denom.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            let gen = generators(t.basis, &la);
            out = &out + &gen.scaled(&BigRational::new(numer, denom));
        }
        Ok(out)
    }
}

/// Parses a basis tag used by the text interfaces.
impl std::str::FromStr for SymBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h" => Ok(SymBasis::H),
            "e" => Ok(SymBasis::E),
            "p" => Ok(SymBasis::P),
            "s" => Ok(SymBasis::S),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn schur_map(pairs: &[(&[u32], i64)]) -> BTreeMap<Partition, BigRational> {
        pairs.iter().map(|&(p, c)| (pt(p), int(c))).collect()
    }

    #[test]
    fn power_sum_products_are_multiset_unions() {
        let p2 = SymFunc::p(&pt(&[2]));
        let p3 = SymFunc::p(&pt(&[3]));
        assert_eq!(&p2 * &p3, SymFunc::p(&pt(&[3, 2])));
        let p11 = &SymFunc::p(&pt(&[1])) * &SymFunc::p(&pt(&[1]));
        assert_eq!(p11, SymFunc::p(&pt(&[1, 1])));
    }

    #[test]
    fn schur_two_cell_generators() {
        // s_2 = (p_1² + p_2)/2, e_2 = (p_1² − p_2)/2
        let s2 = SymFunc::s(&pt(&[2]));
        let mut expected = SymFunc::p(&pt(&[1, 1])).scaled(&ratio(1, 2));
        expected = &expected + &SymFunc::p(&pt(&[2])).scaled(&ratio(1, 2));
        assert_eq!(s2, expected);
        assert_eq!(s2, SymFunc::h(&pt(&[2])));

        let e2 = SymFunc::e(&pt(&[2]));
        let mut expected = SymFunc::p(&pt(&[1, 1])).scaled(&ratio(1, 2));
        expected = &expected - &SymFunc::p(&pt(&[2])).scaled(&ratio(1, 2));
        assert_eq!(e2, expected);
        assert_eq!(SymFunc::s(&pt(&[1, 1])), e2);
    }

    #[test]
    fn single_variable_specialization_of_h_is_one() {
        // h_λ(1, 0, 0, …) = 1: every p_k specializes to 1, so the sum
        // of the coefficients must be 1.
        for la in [pt(&[2, 1]), pt(&[3, 2, 1]), pt(&[4])] {
            let h = SymFunc::h(&la);
            let total: BigRational = h.terms().values().cloned().sum();
            assert_eq!(total, BigRational::one(), "h_({la})");
        }
    }

    #[test]
    fn h_squared_schur_expansion() {
        let h22 = SymFunc::h(&pt(&[2, 2]));
        assert_eq!(
            h22.schur_expand(),
            schur_map(&[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)])
        );
    }

    #[test]
    fn schur_expand_of_schur_is_delta() {
        for n in 0..=7u32 {
            for nu in Partition::all_of(n) {
                let s = SymFunc::s(&nu);
                let exp = s.schur_expand();
                assert_eq!(exp.len(), 1, "s_({nu})");
                assert_eq!(exp.get(&nu), Some(&BigRational::one()));
            }
        }
    }

    #[test]
    fn schur_expand_of_p2() {
        let p2 = SymFunc::p(&pt(&[2]));
        assert_eq!(p2.schur_expand(), schur_map(&[(&[2], 1), (&[1, 1], -1)]));
    }

    #[test]
    fn p2_plethysm_alternating_formulas() {
        for n in 1..=6u32 {
            // p_2[h_n] = Σ_j (−1)^j s_(2n−j, j)
            let p2 = SymFunc::p(&pt(&[2]));
            let hn = SymFunc::h(&pt(&[n]));
            let expanded = p2.plethysm(&hn).schur_expand();
            let expected: BTreeMap<Partition, BigRational> = (0..=n)
                .map(|j| {
                    let nu = Partition::new(vec![2 * n - j, j]).unwrap();
                    (nu, if j % 2 == 0 { int(1) } else { int(-1) })
                })
                .collect();
            assert_eq!(expanded, expected, "p2[h_{n}]");

            // p_2[e_n] = Σ_j (−1)^j s_(2^{n−j}, 1^{2j})
            let en = SymFunc::e(&pt(&[n]));
            let expanded = p2.plethysm(&en).schur_expand();
            let expected: BTreeMap<Partition, BigRational> = (0..=n)
                .map(|j| {
                    let mut parts = vec![2u32; (n - j) as usize];
                    parts.extend(vec![1u32; 2 * j as usize]);
                    (
                        Partition::new(parts).unwrap(),
                        if j % 2 == 0 { int(1) } else { int(-1) },
                    )
                })
                .collect();
            assert_eq!(expanded, expected, "p2[e_{n}]");
        }
    }

    #[test]
    fn p1_plethysm_is_identity() {
        let p1 = SymFunc::p(&pt(&[1]));
        for g in [
            SymFunc::h(&pt(&[2, 1])),
            SymFunc::e(&pt(&[3])),
            &SymFunc::s(&pt(&[2, 2])) + &SymFunc::p(&pt(&[4, 1])).scaled(&ratio(-3, 7)),
        ] {
            assert_eq!(p1.plethysm(&g), g);
            assert_eq!(g.plethysm(&p1), g);
        }
    }

    #[test]
    fn plethysm_axioms_on_samples() {
        let f = SymFunc::h(&pt(&[2]));
        let g = SymFunc::e(&pt(&[2, 1]));
        let h = &SymFunc::p(&pt(&[2, 1])).scaled(&ratio(2, 3)) + &SymFunc::s(&pt(&[1, 1]));
        let pk = SymFunc::p(&pt(&[3]));

        // p_k[f + g] = p_k[f] + p_k[g]
        assert_eq!(pk.plethysm(&(&f + &g)), &pk.plethysm(&f) + &pk.plethysm(&g));
        // p_k[f·g] = p_k[f]·p_k[g]
        assert_eq!(pk.plethysm(&(&f * &g)), &pk.plethysm(&f) * &pk.plethysm(&g));
        // (f + g)[h] = f[h] + g[h]
        assert_eq!((&f + &g).plethysm(&h), &f.plethysm(&h) + &g.plethysm(&h));
        // (f·g)[h] = f[h]·g[h]
        assert_eq!((&f * &g).plethysm(&h), &f.plethysm(&h) * &g.plethysm(&h));
        // p_k[p_m] = p_km
        assert_eq!(
            SymFunc::p(&pt(&[2])).plethysm(&SymFunc::p(&pt(&[3]))),
            SymFunc::p(&pt(&[6]))
        );
    }

    #[test]
    fn split_square_examples() {
        // g = h_2: sym = s_4 + s_22, antisym = s_31
        let (sym, antisym) = split_square(&SymFunc::h(&pt(&[2])));
        assert_eq!(sym.schur_expand(), schur_map(&[(&[4], 1), (&[2, 2], 1)]));
        assert_eq!(antisym.schur_expand(), schur_map(&[(&[3, 1], 1)]));

        // g = p_1: sym = s_2, antisym = s_11
        let (sym, antisym) = split_square(&SymFunc::p(&pt(&[1])));
        assert_eq!(sym, SymFunc::s(&pt(&[2])));
        assert_eq!(antisym, SymFunc::s(&pt(&[1, 1])));
    }

    #[test]
    fn split_square_sums_to_square() {
        let gs = [
            SymFunc::h(&pt(&[2, 1])),
            SymFunc::e(&pt(&[3, 1])),
            SymFunc::s(&pt(&[2, 2])),
            &SymFunc::h(&pt(&[2])) + &SymFunc::e(&pt(&[1, 1])).scaled(&ratio(-5, 2)),
        ];
        for g in gs {
            let (sym, antisym) = split_square(&g);
            assert_eq!(&sym + &antisym, &g * &g);
        }
    }

    #[test]
    fn symantisym_identities() {
        let h1 = SymFunc::h(&pt(&[1]));
        let h2 = SymFunc::h(&pt(&[2]));
        let e2 = SymFunc::e(&pt(&[2]));
        let e3 = SymFunc::e(&pt(&[3]));
        assert!(verify_symantisym(&[h1.clone(), h1.clone()]));
        assert!(verify_symantisym(&[h2.clone(), h1.clone(), h1]));
        assert!(verify_symantisym(&[e2.clone(), e3]));
        assert!(verify_symantisym(&[h2, e2]));
    }

    #[test]
    fn multiply_against_monomial_oracle() {
        // multiply in the p basis, then compare monomial expansions with
        // the coefficientwise polynomial product (test-only convolution)
        fn poly(f: &SymFunc, vars: usize) -> HashMap<Vec<u32>, BigRational> {
            fn orbit(mu: &Partition, vars: usize) -> Vec<Vec<u32>> {
                let mut exps = vec![0u32; vars];
                for (i, &p) in mu.parts().iter().enumerate() {
                    exps[i] = p;
                }
                exps.sort_unstable();
                let mut out = Vec::new();
                loop {
                    out.push(exps.clone());
                    let pivot = (0..exps.len().saturating_sub(1))
                        .rev()
                        .find(|&i| exps[i] < exps[i + 1]);
                    let Some(i) = pivot else { break };
                    let j = (i + 1..exps.len())
                        .rev()
                        .find(|&j| exps[j] > exps[i])
                        .unwrap();
                    exps.swap(i, j);
                    exps[i + 1..].reverse();
                }
                out
            }
            let mut out: HashMap<Vec<u32>, BigRational> = HashMap::new();
            for (mu, c) in f.monomial_expansion() {
                for exps in orbit(&mu, vars) {
                    out.insert(exps, c.clone());
                }
            }
            out
        }

        let f = SymFunc::h(&pt(&[2, 1]));
        let g = SymFunc::e(&pt(&[2]));
        let prod = &f * &g;
        let vars = (f.degree() + g.degree()) as usize;
        let pf = poly(&f, vars);
        let pg = poly(&g, vars);
        let mut expected: HashMap<Vec<u32>, BigRational> = HashMap::new();
        for (ea, ca) in &pf {
            for (eb, cb) in &pg {
                let key: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *expected.entry(key).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        expected.retain(|_, c| !c.is_zero());
        assert_eq!(poly(&prod, vars), expected);
    }

    #[test]
    fn pieri_rule_for_h_and_e() {
        // s_λ·h_n has 0/1 coefficients exactly on the horizontal-strip
        // extensions of λ; s_λ·e_n dually on vertical strips.
        fn horizontal_strip(nu: &Partition, la: &Partition) -> bool {
            nu.contains(la) && (1..nu.len()).all(|i| nu.part(i) <= la.part(i - 1))
        }
        fn vertical_strip(nu: &Partition, la: &Partition) -> bool {
            nu.contains(la) && (0..nu.len()).all(|i| nu.part(i) - la.part(i) <= 1)
        }
        for w in 1..=5u32 {
            for la in Partition::all_of(w) {
                for n in 1..=3u32 {
                    let sl = SymFunc::s(&la);
                    let lh = (&sl * &SymFunc::h(&pt(&[n]))).schur_expand();
                    for nu in Partition::all_of(w + n) {
                        let expected = if horizontal_strip(&nu, &la) { 1 } else { 0 };
                        assert_eq!(
                            lh.get(&nu).cloned().unwrap_or_else(BigRational::zero),
                            int(expected),
                            "s_({la})·h_{n} at {nu}"
                        );
                    }
                    let le = (&sl * &SymFunc::e(&pt(&[n]))).schur_expand();
                    for nu in Partition::all_of(w + n) {
                        let expected = if vertical_strip(&nu, &la) { 1 } else { 0 };
                        assert_eq!(
                            le.get(&nu).cloned().unwrap_or_else(BigRational::zero),
                            int(expected),
                            "s_({la})·e_{n} at {nu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_foreign_basis_terms() {
        let f = &SymFunc::h(&pt(&[2, 1])) + &SymFunc::p(&pt(&[3])).scaled(&ratio(-1, 2));
        let s = serde_json::to_string(&f).unwrap();
        let back: SymFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(f, back);

        let h21: SymFunc = serde_json::from_str(
            r#"[{"basis":"h","partition":[2,1],"numerator":"1","denominator":"1"}]"#,
        )
        .unwrap();
        assert_eq!(h21, SymFunc::h(&pt(&[2, 1])));
    }

    #[test]
    fn h_monomial_coefficients_count_row_tuples() {
        // the coefficient of x^μ in h_λ is the number of λ-tuples of
        // one-row tableaux with content exactly μ
        fn all_row_words(len: u32, alphabet: u32) -> Vec<Vec<u32>> {
            let mut out: Vec<Vec<u32>> = vec![Vec::new()];
            for _ in 0..len {
                out = out
                    .into_iter()
                    .flat_map(|w| {
                        let lo = w.last().copied().unwrap_or(1);
                        (lo..=alphabet).map(move |v| {
                            let mut next = w.clone();
                            next.push(v);
                            next
                        })
                    })
                    .collect();
            }
            out
        }
        for weight in 1..=6u32 {
            for la in Partition::all_of(weight) {
                let alphabet = weight;
                let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
                let mut tuples: Vec<Vec<u32>> = vec![vec![0; alphabet as usize]];
                for &len in la.parts() {
                    let words = all_row_words(len, alphabet);
                    tuples = tuples
                        .into_iter()
                        .flat_map(|content| {
                            words.iter().map(move |w| {
                                let mut next = content.clone();
                                for &v in w {
                                    next[v as usize - 1] += 1;
                                }
                                next
                            })
                        })
                        .collect();
                }
                for content in tuples {
                    *counts.entry(content).or_insert(0) += 1;
                }
                let expansion = SymFunc::h(&la).monomial_expansion();
                for (mu, coeff) in &expansion {
                    let mut key = mu.parts().to_vec();
                    key.resize(alphabet as usize, 0);
                    assert_eq!(
                        coeff,
                        &BigRational::from_integer(BigInt::from(
                            counts.get(&key).copied().unwrap_or(0)
                        )),
                        "h_({la}) at {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn split_square_sums_to_square_on_random_inputs() {
        // deterministic congruential choice of p-basis combinations
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        let mut pool: Vec<Partition> = Vec::new();
        for d in 0..=4u32 {
            pool.extend(Partition::all_of(d));
        }
        for _ in 0..50 {
            let mut g = SymFunc::zero();
            for la in &pool {
                match next() % 3 {
                    0 => {}
                    _ => {
                        let numer = next() % 7 - 3;
                        let denom = next() % 3 + 1;
                        g = &g + &SymFunc::p(la).scaled(&ratio(numer, denom));
                    }
                }
            }
            let (sym, antisym) = split_square(&g);
            assert_eq!(&sym + &antisym, &g * &g);
        }
    }

    #[test]
    fn assignment_counts() {
        // coefficient of x^μ in p_λ
        assert_eq!(assignment_count(&pt(&[2, 2]), &pt(&[2, 2])), 2);
        assert_eq!(assignment_count(&pt(&[2, 1]), &pt(&[2, 1])), 1);
        assert_eq!(assignment_count(&pt(&[1, 1, 1]), &pt(&[1, 1, 1])), 6);
        assert_eq!(assignment_count(&pt(&[2]), &pt(&[1, 1])), 0);
        assert_eq!(assignment_count(&pt(&[1; 12]), &pt(&[1; 12])), 479001600);
    }
}
