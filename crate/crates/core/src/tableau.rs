//! Skew shapes, semistandard fillings and tuples of row/column tableaux.
//!
//! A [`Tableau`] stores a filling of a (possibly skew) shape. The type
//! itself only guarantees structural validity — one entry per cell,
//! entries positive — because the recording objects of the Burge-word
//! correspondence are *conjugate* semistandard (strict rows, weak
//! columns) and must be representable too. Operations state which of
//! [`Tableau::is_semistandard`] / [`Tableau::is_conjugate_semistandard`]
//! they require.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner ({inner}) not contained in outer ({outer})"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells `|outer| − |inner|`.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `inner[r]..outer[r]` of the filled cells in row `r`.
    pub fn row_span(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r) as usize..self.outer.part(r) as usize
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r < self.rows() && self.row_span(r).contains(&c)
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "({})", self.outer)
        } else {
            write!(f, "({})/({})", self.outer, self.inner)
        }
    }
}

/// A filling of a skew shape. Row `r` stores the entries of the cells in
/// columns `inner[r]..outer[r]`, left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau after structural validation only: one row of
    /// entries per shape row with the right length, all entries ≥ 1.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidTableau(format!(
                "{} entry rows for shape {shape}",
                rows.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_span(r).len() {
                return Err(Error::InvalidTableau(format!(
                    "row {r} has {} entries, shape {shape} wants {}",
                    row.len(),
                    shape.row_span(r).len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau(format!("zero entry in row {r}")));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Builds and validates a semistandard tableau.
    pub fn semistandard(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau::new(shape, rows)?;
        if !t.is_semistandard() {
            return Err(Error::InvalidTableau(format!("not semistandard: {t:?}")));
        }
        Ok(t)
    }

    /// Builds a straight-shape tableau from its rows (structural checks
    /// only; the row lengths must weakly decrease).
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        // A zero-length row may only appear at the end; Partition::new
        // already rejects interior zeros via the decreasing check.
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Tableau::new(SkewShape::straight(outer), rows)
    }

    /// Builds a skew tableau from the inner shape and the entry rows
    /// (the outer shape is implied), the format used by the JSON codec.
    pub fn from_skew_rows(inner: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() < inner.len() {
            return Err(Error::InvalidTableau(format!(
                "{} entry rows but inner shape has {} rows",
                rows.len(),
                inner.len()
            )));
        }
        let outer = Partition::new(
            rows.iter()
                .enumerate()
                .map(|(r, row)| inner.part(r) + row.len() as u32)
                .collect(),
        )?;
        let shape = SkewShape::new(outer, inner)?;
        Tableau::new(shape, rows)
    }

    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.shape.size() == 0
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entry rows, row `r` covering columns `inner[r]..outer[r]`.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn num_cells(&self) -> u32 {
        self.shape.size()
    }

    /// Entry at cell `(r, c)` in absolute column coordinates.
    pub fn entry(&self, r: usize, c: usize) -> Option<u32> {
        if !self.shape.contains_cell(r, c) {
            return None;
        }
        Some(self.rows[r][c - self.shape.inner().part(r) as usize])
    }

    /// Weakly increasing rows, strictly increasing columns (checked
    /// across the skew boundary).
    pub fn is_semistandard(&self) -> bool {
        self.check_increase(false)
    }

    /// Strictly increasing rows, weakly increasing columns: the filling
    /// is the conjugate of a semistandard tableau.
    pub fn is_conjugate_semistandard(&self) -> bool {
        self.check_increase(true)
    }

    fn check_increase(&self, conjugate: bool) -> bool {
        for r in 0..self.shape.rows() {
            for c in self.shape.row_span(r) {
                let e = self.entry(r, c).unwrap();
                if let Some(left) = c.checked_sub(1).and_then(|c| self.entry(r, c)) {
                    let ok = if conjugate { left < e } else { left <= e };
                    if !ok {
                        return false;
                    }
                }
                if let Some(above) = r.checked_sub(1).and_then(|r| self.entry(r, c)) {
                    let ok = if conjugate { above <= e } else { above < e };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Letter multiplicities of the filling.
    pub fn content(&self) -> Composition {
        let max = self
            .rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0);
        let mut counts = vec![0u32; max as usize];
        for row in &self.rows {
            for &e in row {
                counts[(e - 1) as usize] += 1;
            }
        }
        Composition::new(counts)
    }

    /// Entries read left to right within rows, rows bottom to top.
    pub fn reading_word(&self) -> Vec<u32> {
        let mut word = Vec::with_capacity(self.num_cells() as usize);
        for row in self.rows.iter().rev() {
            word.extend_from_slice(row);
        }
        word
    }

    /// The transposed filling on the conjugate shape.
    pub fn conjugate(&self) -> Tableau {
        let shape = self.shape.conjugate();
        let mut rows: Vec<Vec<u32>> = (0..shape.rows())
            .map(|r| Vec::with_capacity(shape.row_span(r).len()))
            .collect();
        for r in 0..self.shape.rows() {
            for c in self.shape.row_span(r) {
                rows[c].push(self.entry(r, c).unwrap());
            }
        }
        Tableau { shape, rows }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{}:", self.shape)?;
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "/")?;
            } else {
                write!(f, " ")?;
            }
            for &e in row {
                write!(f, "{e},")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for Tableau {
    /// Grid rendering with `.` for inner cells.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for r in 0..self.shape.rows() {
            for c in 0..self.shape.outer().part(r) as usize {
                if c > 0 {
                    write!(f, " ")?;
                }
                match self.entry(r, c) {
                    Some(e) => write!(f, "{e:>width$}")?,
                    None => write!(f, "{:>width$}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    #[serde(default)]
    inner: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr {
            inner: self.shape.inner().parts().to_vec(),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(deserializer)?;
        let inner = Partition::new(repr.inner).map_err(serde::de::Error::custom)?;
        Tableau::from_skew_rows(inner, repr.rows).map_err(serde::de::Error::custom)
    }
}

/// Whether a tuple consists of one-row or one-column tableaux.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TupleKind {
    Row,
    Column,
}

/// A tuple of one-row (or one-column) tableaux whose sizes are the parts
/// of a profile partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableauTuple {
    members: Vec<Tableau>,
    profile: Partition,
    kind: TupleKind,
}

impl TableauTuple {
    /// A tuple of row tableaux: each word must weakly increase and the
    /// word lengths must form a partition.
    pub fn rows(words: Vec<Vec<u32>>) -> Result<Self> {
        let profile = Partition::new(words.iter().map(|w| w.len() as u32).collect())?;
        let members = words
            .into_iter()
            .map(|w| {
                if !w.windows(2).all(|p| p[0] <= p[1]) {
                    return Err(Error::InvalidTableau(format!(
                        "row word not weakly increasing: {w:?}"
                    )));
                }
                Tableau::from_rows(vec![w])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TableauTuple {
            members,
            profile,
            kind: TupleKind::Row,
        })
    }

    /// A tuple of column tableaux: each column must strictly increase
    /// top to bottom.
    pub fn columns(cols: Vec<Vec<u32>>) -> Result<Self> {
        let profile = Partition::new(cols.iter().map(|c| c.len() as u32).collect())?;
        let members = cols
            .into_iter()
            .map(|col| {
                if !col.windows(2).all(|p| p[0] < p[1]) {
                    return Err(Error::InvalidTableau(format!(
                        "column not strictly increasing: {col:?}"
                    )));
                }
                Tableau::from_rows(col.into_iter().map(|e| vec![e]).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TableauTuple {
            members,
            profile,
            kind: TupleKind::Column,
        })
    }

    pub fn members(&self) -> &[Tableau] {
        &self.members
    }

    pub fn profile(&self) -> &Partition {
        &self.profile
    }

    pub fn kind(&self) -> TupleKind {
        self.kind
    }

    /// Sum of the member contents.
    pub fn content(&self) -> Composition {
        let max = self
            .members
            .iter()
            .map(|m| m.content().len())
            .max()
            .unwrap_or(0);
        let mut counts = vec![0u32; max];
        for m in &self.members {
            for (i, &c) in m.content().counts().iter().enumerate() {
                counts[i] += c;
            }
        }
        Composition::new(counts)
    }

    /// Concatenation of the member reading words, members in order.
    pub fn reading_word(&self) -> Vec<u32> {
        self.members
            .iter()
            .flat_map(|m| m.reading_word())
            .collect()
    }
}

/// All semistandard fillings of `shape` with the given content, in
/// row-reading lexicographic order. The empty list means no filling
/// exists (in particular when `|shape| ≠ Σ content`).
pub fn enumerate_ssyt(shape: &SkewShape, content: &Composition) -> Vec<Tableau> {
    if shape.size() != content.sum() {
        return Vec::new();
    }
    let mut remaining: Vec<u32> = content.counts().to_vec();
    enumerate_fillings(shape, &mut remaining, None)
}

/// All semistandard fillings of `shape` with entries at most
/// `max_entry`, any content.
pub fn enumerate_ssyt_bounded(shape: &SkewShape, max_entry: u32) -> Vec<Tableau> {
    let mut no_budget = Vec::new();
    enumerate_fillings(shape, &mut no_budget, Some(max_entry))
}

/// The Kostka number: the count of semistandard tableaux of the given
/// straight shape and content.
pub fn kostka(shape: &Partition, content: &Composition) -> u64 {
    enumerate_ssyt(&SkewShape::straight(shape.clone()), content).len() as u64
}

/// Cell-by-cell backtracking in row-reading order. When `max_entry` is
/// `None` the letter budget `remaining` is enforced instead.
fn enumerate_fillings(
    shape: &SkewShape,
    remaining: &mut Vec<u32>,
    max_entry: Option<u32>,
) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|r| shape.row_span(r).map(move |c| (r, c)))
        .collect();
    // Cells strictly below (r, c) in its column bound the entry from
    // above: entry ≤ max_letter − cells_below.
    let below: Vec<u32> = cells
        .iter()
        .map(|&(r, c)| {
            (r + 1..shape.rows())
                .take_while(|&rr| shape.contains_cell(rr, c))
                .count() as u32
        })
        .collect();
    let max_letter = match max_entry {
        Some(m) => m,
        None => remaining.len() as u32,
    };

    let mut grid: Vec<Vec<u32>> = (0..shape.rows())
        .map(|r| vec![0; shape.outer().part(r) as usize])
        .collect();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        shape: &SkewShape,
        cells: &[(usize, usize)],
        below: &[u32],
        idx: usize,
        max_letter: u32,
        budgeted: bool,
        remaining: &mut Vec<u32>,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            let rows = (0..shape.rows())
                .map(|r| grid[r][shape.row_span(r)].to_vec())
                .collect();
            out.push(Tableau {
                shape: shape.clone(),
                rows,
            });
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 && shape.contains_cell(r, c - 1) {
            grid[r][c - 1]
        } else {
            0
        };
        let above = if r > 0 && shape.contains_cell(r - 1, c) {
            grid[r - 1][c]
        } else {
            0
        };
        let lo = left.max(above + 1).max(1);
        let hi = max_letter - below[idx].min(max_letter);
        for v in lo..=hi {
            if budgeted {
                let slot = &mut remaining[(v - 1) as usize];
                if *slot == 0 {
                    continue;
                }
                *slot -= 1;
            }
            grid[r][c] = v;
            rec(
                shape, cells, below, idx + 1, max_letter, budgeted, remaining, grid, out,
            );
            if budgeted {
                remaining[(v - 1) as usize] += 1;
            }
        }
        grid[r][c] = 0;
    }

    let budgeted = max_entry.is_none();
    rec(
        shape,
        &cells,
        &below,
        0,
        max_letter,
        budgeted,
        remaining,
        &mut grid,
        &mut out,
    );
    out
}
