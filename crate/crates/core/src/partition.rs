//! Partitions and compositions.
//!
//! A [`Partition`] is a weakly decreasing vector of positive integers in
//! canonical form (no stored trailing zeros); the empty partition is the
//! unit for all indexing purposes. A [`Composition`] is a vector of
//! letter multiplicities; internal zeros are meaningful and preserved,
//! trailing zeros are ignored by equality and hashing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing vector of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Fails if the parts
    /// are not weakly decreasing or a zero appears before a positive part.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part, zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The conjugate partition: `λ'_i = #{j : λ_j ≥ i+1}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|i| self.parts.iter().filter(|&&p| p as usize > i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `λ²`: each part repeated twice, order preserved.
    pub fn double(&self) -> Partition {
        let mut parts = Vec::with_capacity(2 * self.parts.len());
        for &p in &self.parts {
            parts.push(p);
            parts.push(p);
        }
        Partition { parts }
    }

    /// Cellwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// All partitions of `n` in descending lexicographic order,
    /// from `(n)` down to `(1^n)`.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            let mut k = n.min(max);
            while k >= 1 {
                prefix.push(k);
                rec(n - k, k, prefix, out);
                prefix.pop();
                k -= 1;
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses the comma-separated form used everywhere in text interfaces,
/// e.g. `"2,1"`. The empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Letter multiplicities: entry `i` is the multiplicity of letter `i+1`.
///
/// Trailing zeros do not affect equality or hashing, but internal zeros
/// are positional and preserved.
#[derive(Clone, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    counts: Vec<u32>,
}

impl Composition {
    pub fn new(counts: Vec<u32>) -> Self {
        Composition { counts }
    }

    pub fn empty() -> Self {
        Composition { counts: Vec::new() }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Multiplicity of letter `i+1`; zero beyond the stored length.
    pub fn get(&self, i: usize) -> u32 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sum() == 0
    }

    pub fn sum(&self) -> u32 {
        self.counts.iter().sum()
    }

    fn trimmed(&self) -> &[u32] {
        let mut n = self.counts.len();
        while n > 0 && self.counts[n - 1] == 0 {
            n -= 1;
        }
        &self.counts[..n]
    }

    /// True when the multiplicities weakly decrease, i.e. the content is
    /// a partition.
    pub fn is_partition(&self) -> bool {
        self.trimmed().windows(2).all(|w| w[0] >= w[1])
    }

    /// Reads the multiplicities as a partition, sorting is not applied.
    pub fn to_partition(&self) -> Result<Partition> {
        Partition::new(self.trimmed().to_vec())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            counts: p.parts().to_vec(),
        }
    }
}

impl PartialEq for Composition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Composition {}

impl std::hash::Hash for Composition {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let counts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad composition entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Composition::new(counts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = Partition::new(vec![2, 1, 0, 0]).unwrap();
        assert_eq!(p, Partition::new(vec![2, 1]).unwrap());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_small() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![2, 1, 1]).unwrap());
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_against_column_count_oracle() {
        // Independent oracle: count diagram cells column by column.
        let p = Partition::new(vec![9, 7, 4]).unwrap();
        let mut cols = Vec::new();
        for c in 0..p.part(0) as usize {
            let mut h = 0;
            for r in 0..p.len() {
                if (c as u32) < p.part(r) {
                    h += 1;
                }
            }
            cols.push(h);
        }
        assert_eq!(p.conjugate().parts(), &cols[..]);
        assert_eq!(
            p.conjugate(),
            Partition::new(vec![3, 3, 3, 3, 2, 2, 2, 1, 1]).unwrap()
        );
    }

    #[test]
    fn conjugate_is_involutive() {
        for n in 0..=12 {
            for p in Partition::all_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn double_examples() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(p.double(), Partition::new(vec![2, 2, 1, 1]).unwrap());
        assert_eq!(Partition::empty().double(), Partition::empty());
        let q = Partition::new(vec![4, 3]).unwrap();
        assert_eq!(q.double(), Partition::new(vec![4, 4, 3, 3]).unwrap());
        assert_eq!(q.double().size(), 2 * q.size());
    }

    #[test]
    fn double_conjugate_doubles_column_heights() {
        for n in 1..=8 {
            for p in Partition::all_of(n) {
                let dc = p.double().conjugate();
                let c = p.conjugate();
                for i in 0..dc.len() {
                    assert_eq!(dc.part(i), 2 * c.part(i));
                }
                assert_eq!(dc.size(), 2 * p.size());
            }
        }
    }

    #[test]
    fn all_of_descending_revlex() {
        let ps = Partition::all_of(4);
        let repr: Vec<Vec<u32>> = ps.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            repr,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(Partition::all_of(0).len(), 1);
        assert_eq!(Partition::all_of(10).len(), 42);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p: Partition = "2,1".parse().unwrap();
        assert_eq!(p.parts(), &[2, 1]);
        assert_eq!(p.to_string(), "2,1");
        let e: Partition = "".parse().unwrap();
        assert!(e.is_empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }

    #[test]
    fn composition_trailing_zero_equality() {
        let a = Composition::new(vec![3, 2, 3, 2, 1, 0, 2, 1]);
        let b = Composition::new(vec![3, 2, 3, 2, 1, 0, 2, 1, 0, 0]);
        assert_eq!(a, b);
        assert_eq!(a.get(5), 0);
        assert_eq!(a.get(6), 2);
        let c = Composition::new(vec![3, 2, 3, 2, 1, 2, 1]);
        assert_ne!(a, c);
    }
}
