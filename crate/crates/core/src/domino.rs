//! Yamanouchi domino tableaux, cospin, and the domino-side derivation
//! of the one-row/one-column splittings.
//!
//! A domino tableau tiles a partition shape with two-cell dominoes, each
//! carrying one entry stamped into both of its cells; rows must weakly
//! increase and columns strictly increase between distinct dominoes.
//! The reading word scans rows left to right, bottom row first, emitting
//! each domino at its first scanned cell. Cospin is half the defect of
//! vertical dominoes against a maximal all-vertical paving; its parity
//! buckets the Yamanouchi tableaux of shapes `(2n,2n)` and `(2^{2n})`
//! into the symmetric and anti-symmetric parts of the square.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::sign::{table_from_counts, Basis, SignedKostkaTable};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// One domino: `(row, col)` is its top-left cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub orientation: Orientation,
    pub entry: u32,
}

impl Domino {
    pub fn cells(&self) -> [(usize, usize); 2] {
        match self.orientation {
            Orientation::Horizontal => [(self.row, self.col), (self.row, self.col + 1)],
            Orientation::Vertical => [(self.row, self.col), (self.row + 1, self.col)],
        }
    }
}

/// A tiling of a partition shape by entry-carrying dominoes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DominoTableau {
    shape: Partition,
    dominoes: Vec<Domino>,
}

impl DominoTableau {
    /// Dominoes are stored sorted by top-left cell, so equality does
    /// not depend on construction order.
    fn new(shape: Partition, mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort_unstable_by_key(|d| (d.row, d.col));
        DominoTableau { shape, dominoes }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn vertical_count(&self) -> u32 {
        self.dominoes
            .iter()
            .filter(|d| d.orientation == Orientation::Vertical)
            .count() as u32
    }

    pub fn horizontal_count(&self) -> u32 {
        self.dominoes.len() as u32 - self.vertical_count()
    }

    /// Rows weakly increase and columns strictly increase on the
    /// cell-stamped grid, comparing distinct dominoes only; the tiling
    /// must cover the shape exactly.
    pub fn is_semistandard(&self) -> bool {
        semistandard_filling(&self.shape, &self.dominoes)
    }

    /// Letter multiplicities, one per domino.
    pub fn content(&self) -> Vec<u32> {
        let max = self.dominoes.iter().map(|d| d.entry).max().unwrap_or(0);
        let mut counts = vec![0u32; max as usize];
        for d in &self.dominoes {
            counts[d.entry as usize - 1] += 1;
        }
        counts
    }

    /// Simple ASCII drawing: cell entries with walls suppressed inside
    /// each domino.
    #[allow(clippy::needless_range_loop)]
    pub fn render_ascii(&self) -> String {
        let rows = self.shape.len();
        let cols = self.shape.part(0) as usize;
        let mut id_grid = vec![vec![usize::MAX; cols]; rows];
        let mut entry_grid = vec![vec![0u32; cols]; rows];
        for (i, d) in self.dominoes.iter().enumerate() {
            for (r, c) in d.cells() {
                id_grid[r][c] = i;
                entry_grid[r][c] = d.entry;
            }
        }
        let width = self
            .dominoes
            .iter()
            .map(|d| d.entry.to_string().len())
            .max()
            .unwrap_or(1);
        let in_shape = |r: usize, c: usize| {
            r < rows && c < self.shape.part(r) as usize
        };
        let mut out = String::new();
        for r in 0..rows {
            // top border of row r
            for c in 0..self.shape.part(r) as usize {
                let wall = r == 0 || !in_shape(r - 1, c) || id_grid[r][c] != id_grid[r - 1][c];
                out.push('+');
                let fill = if wall { '-' } else { ' ' };
                for _ in 0..width + 2 {
                    out.push(fill);
                }
            }
            out.push_str("+\n");
            // entries of row r
            for c in 0..self.shape.part(r) as usize {
                let wall = c == 0 || id_grid[r][c] != id_grid[r][c - 1];
                out.push(if wall { '|' } else { ' ' });
                out.push_str(&format!(" {:>width$} ", entry_grid[r][c]));
            }
            out.push_str("|\n");
        }
        // bottom border
        for _ in 0..self.shape.part(rows.saturating_sub(1)) as usize {
            out.push('+');
            for _ in 0..3 + width - 1 {
                out.push('-');
            }
        }
        out.push_str("+\n");
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct Placement {
    row: usize,
    col: usize,
    orientation: Orientation,
}

/// All domino tilings of the shape, dominoes listed with top-left cells
/// in row-major order. Empty when the shape has no tiling.
fn enumerate_tilings(shape: &Partition) -> Vec<Vec<Placement>> {
    let rows = shape.len();
    let mut filled: Vec<Vec<bool>> = (0..rows)
        .map(|r| vec![false; shape.part(r) as usize])
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();

    fn first_free(filled: &[Vec<bool>]) -> Option<(usize, usize)> {
        for (r, row) in filled.iter().enumerate() {
            if let Some(c) = row.iter().position(|&f| !f) {
                return Some((r, c));
            }
        }
        None
    }

    fn rec(
        shape: &Partition,
        filled: &mut Vec<Vec<bool>>,
        current: &mut Vec<Placement>,
        out: &mut Vec<Vec<Placement>>,
    ) {
        let Some((r, c)) = first_free(filled) else {
            out.push(current.clone());
            return;
        };
        // horizontal
        if c + 1 < shape.part(r) as usize && !filled[r][c + 1] {
            filled[r][c] = true;
            filled[r][c + 1] = true;
            current.push(Placement {
                row: r,
                col: c,
                orientation: Orientation::Horizontal,
            });
            rec(shape, filled, current, out);
            current.pop();
            filled[r][c] = false;
            filled[r][c + 1] = false;
        }
        // vertical
        if r + 1 < shape.len() && c < shape.part(r + 1) as usize && !filled[r + 1][c] {
            filled[r][c] = true;
            filled[r + 1][c] = true;
            current.push(Placement {
                row: r,
                col: c,
                orientation: Orientation::Vertical,
            });
            rec(shape, filled, current, out);
            current.pop();
            filled[r][c] = false;
            filled[r + 1][c] = false;
        }
    }

    rec(shape, &mut filled, &mut current, &mut out);
    out
}

/// The largest number of vertical dominoes over all pavings of the
/// shape; zero when the shape has no paving.
pub fn max_vertical_dominoes(shape: &Partition) -> u32 {
    enumerate_tilings(shape)
        .iter()
        .map(|t| {
            t.iter()
                .filter(|p| p.orientation == Orientation::Vertical)
                .count() as u32
        })
        .max()
        .unwrap_or(0)
}

/// `(max vertical over pavings − vertical dominoes used) / 2`.
///
/// For the two-row rectangles `(2n, 2n)` and the two-column rectangles
/// `(2^{2n})` an all-vertical paving exists and this equals half the
/// number of horizontal dominoes.
pub fn cospin(d: &DominoTableau) -> u32 {
    let max = max_vertical_dominoes(d.shape());
    let defect = max - d.vertical_count();
    debug_assert!(defect.is_multiple_of(2), "vertical defect is always even");
    defect / 2
}

/// The scan order of a tiling: dominoes sorted by first visit when
/// scanning rows left to right, bottom row first (a vertical domino is
/// first seen at its bottom cell).
fn scan_order(rows: usize, dominoes: &[Placement]) -> Vec<usize> {
    let mut keyed: Vec<(usize, usize, usize)> = dominoes
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let first_row = match d.orientation {
                Orientation::Horizontal => d.row,
                Orientation::Vertical => d.row + 1,
            };
            (rows - 1 - first_row, d.col, i)
        })
        .collect();
    keyed.sort_unstable();
    keyed.into_iter().map(|(_, _, i)| i).collect()
}

/// The reading word: entries in scan order.
pub fn domino_reading_word(d: &DominoTableau) -> Vec<u32> {
    let placements: Vec<Placement> = d
        .dominoes
        .iter()
        .map(|d| Placement {
            row: d.row,
            col: d.col,
            orientation: d.orientation,
        })
        .collect();
    scan_order(d.shape.len(), &placements)
        .into_iter()
        .map(|i| d.dominoes[i].entry)
        .collect()
}

/// Every suffix has weakly decreasing letter multiplicities.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u32; max as usize];
    for &v in word.iter().rev() {
        counts[v as usize - 1] += 1;
        if v > 1 && counts[v as usize - 1] > counts[v as usize - 2] {
            return false;
        }
    }
    true
}

/// Checks rows weakly increasing and columns strictly increasing over
/// the cell-stamped grid, comparisons only between distinct dominoes.
fn semistandard_filling(shape: &Partition, dominoes: &[Domino]) -> bool {
    let rows = shape.len();
    let cols = shape.part(0) as usize;
    let mut id = vec![vec![usize::MAX; cols]; rows];
    let mut entry = vec![vec![0u32; cols]; rows];
    for (i, d) in dominoes.iter().enumerate() {
        for (r, c) in d.cells() {
            if r >= rows || c >= shape.part(r) as usize || id[r][c] != usize::MAX {
                return false;
            }
            id[r][c] = i;
            entry[r][c] = d.entry;
        }
    }
    for r in 0..rows {
        for c in 0..shape.part(r) as usize {
            if id[r][c] == usize::MAX {
                return false;
            }
            if c > 0 && id[r][c - 1] != id[r][c] && entry[r][c - 1] > entry[r][c] {
                return false;
            }
            if r > 0 && c < shape.part(r - 1) as usize
                && id[r - 1][c] != id[r][c] && entry[r - 1][c] >= entry[r][c] {
                    return false;
                }
        }
    }
    true
}

/// All domino tableaux of the shape with entries at most `max_entry`:
/// every tiling combined with every semistandard filling. Deterministic
/// order: tilings in backtracking order, entries filled ascending in
/// row-major order of the top-left cells.
pub fn enumerate_domino_tableaux(shape: &Partition, max_entry: u32) -> Vec<DominoTableau> {
    let tilings = enumerate_tilings(shape);
    tilings
        .into_iter()
        .flat_map(|tiling| fill_tiling(shape, &tiling, max_entry))
        .collect()
}

/// The semistandard fillings of one tiling.
fn fill_tiling(shape: &Partition, tiling: &[Placement], max_entry: u32) -> Vec<DominoTableau> {
    let rows = shape.len();
    let cols = shape.part(0) as usize;
    let mut id = vec![vec![usize::MAX; cols]; rows];
    for (i, p) in tiling.iter().enumerate() {
        let d = Domino {
            row: p.row,
            col: p.col,
            orientation: p.orientation,
            entry: 1,
        };
        for (r, c) in d.cells() {
            id[r][c] = i;
        }
    }
    let mut entries = vec![0u32; tiling.len()];
    let mut out = Vec::new();

    // assign entries in index order (top-left row-major); checking all
    // already-assigned neighbours of both cells keeps every adjacent
    // pair checked exactly once, whichever side is assigned later
    fn ok(
        shape: &Partition,
        id: &[Vec<usize>],
        entries: &[u32],
        tiling: &[Placement],
        idx: usize,
        v: u32,
    ) -> bool {
        let d = Domino {
            row: tiling[idx].row,
            col: tiling[idx].col,
            orientation: tiling[idx].orientation,
            entry: v,
        };
        for (r, c) in d.cells() {
            let neighbours: [(isize, isize, bool); 4] = [
                (-1, 0, true),  // above: strict
                (1, 0, true),   // below: strict
                (0, -1, false), // left: weak
                (0, 1, false),  // right: weak
            ];
            for (dr, dc, strict) in neighbours {
                let (nr, nc) = (r as isize + dr, c as isize + dc);
                if nr < 0 || nc < 0 {
                    continue;
                }
                let (nr, nc) = (nr as usize, nc as usize);
                if nr >= shape.len() || nc >= shape.part(nr) as usize {
                    continue;
                }
                let nid = id[nr][nc];
                if nid >= idx || entries[nid] == 0 {
                    continue;
                }
                let w = entries[nid];
                // (nr, nc) holds w; (r, c) holds v
                let fine = match (dr, dc, strict) {
                    (-1, _, true) => w < v,
                    (1, _, true) => v < w,
                    (_, -1, _) => w <= v,
                    _ => v <= w,
                };
                if !fine {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        shape: &Partition,
        id: &[Vec<usize>],
        tiling: &[Placement],
        entries: &mut Vec<u32>,
        idx: usize,
        max_entry: u32,
        out: &mut Vec<DominoTableau>,
    ) {
        if idx == tiling.len() {
            let dominoes = tiling
                .iter()
                .zip(entries.iter())
                .map(|(p, &e)| Domino {
                    row: p.row,
                    col: p.col,
                    orientation: p.orientation,
                    entry: e,
                })
                .collect();
            out.push(DominoTableau::new(shape.clone(), dominoes));
            return;
        }
        for v in 1..=max_entry {
            if ok(shape, id, entries, tiling, idx, v) {
                entries[idx] = v;
                rec(shape, id, tiling, entries, idx + 1, max_entry, out);
                entries[idx] = 0;
            }
        }
    }

    rec(shape, &id, tiling, &mut entries, 0, max_entry, &mut out);
    out
}

/// Yamanouchi domino tableaux only, enumerated with suffix-content
/// pruning: entries are assigned in reverse scan order, so the running
/// content must stay a partition at every step.
pub fn enumerate_yamanouchi_domino_tableaux(
    shape: &Partition,
    max_entry: u32,
) -> Vec<DominoTableau> {
    let tilings = enumerate_tilings(shape);
    let results: Vec<Vec<DominoTableau>> = tilings
        .par_iter()
        .map(|tiling| yamanouchi_fillings(shape, tiling, max_entry))
        .collect();
    results.into_iter().flatten().collect()
}

fn yamanouchi_fillings(
    shape: &Partition,
    tiling: &[Placement],
    max_entry: u32,
) -> Vec<DominoTableau> {
    let rows = shape.len();
    let cols = shape.part(0) as usize;
    let mut id = vec![vec![usize::MAX; cols]; rows];
    for (i, p) in tiling.iter().enumerate() {
        let d = Domino {
            row: p.row,
            col: p.col,
            orientation: p.orientation,
            entry: 1,
        };
        for (r, c) in d.cells() {
            id[r][c] = i;
        }
    }
    let order = scan_order(rows, tiling);
    let mut entries = vec![0u32; tiling.len()];
    let mut counts = vec![0u32; max_entry as usize];
    let mut out = Vec::new();

    // assigned(nid) now means "appears later in the scan order", so the
    // reverse fill sees exactly the suffix of the reading word
    fn neighbour_ok(
        shape: &Partition,
        id: &[Vec<usize>],
        entries: &[u32],
        tiling: &[Placement],
        idx: usize,
        v: u32,
    ) -> bool {
        let d = Domino {
            row: tiling[idx].row,
            col: tiling[idx].col,
            orientation: tiling[idx].orientation,
            entry: v,
        };
        for (r, c) in d.cells() {
            let neighbours: [(isize, isize); 4] = [(-1, 0), (1, 0), (0, -1), (0, 1)];
            for (dr, dc) in neighbours {
                let (nr, nc) = (r as isize + dr, c as isize + dc);
                if nr < 0 || nc < 0 {
                    continue;
                }
                let (nr, nc) = (nr as usize, nc as usize);
                if nr >= shape.len() || nc >= shape.part(nr) as usize {
                    continue;
                }
                let nid = id[nr][nc];
                if nid == idx || entries[nid] == 0 {
                    continue;
                }
                let w = entries[nid];
                let fine = match (dr, dc) {
                    (-1, _) => w < v,
                    (1, _) => v < w,
                    (_, -1) => w <= v,
                    _ => v <= w,
                };
                if !fine {
                    return false;
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        shape: &Partition,
        id: &[Vec<usize>],
        tiling: &[Placement],
        order: &[usize],
        pos: usize,
        entries: &mut Vec<u32>,
        counts: &mut Vec<u32>,
        max_entry: u32,
        out: &mut Vec<DominoTableau>,
    ) {
        if pos == order.len() {
            let dominoes = tiling
                .iter()
                .zip(entries.iter())
                .map(|(p, &e)| Domino {
                    row: p.row,
                    col: p.col,
                    orientation: p.orientation,
                    entry: e,
                })
                .collect();
            out.push(DominoTableau::new(shape.clone(), dominoes));
            return;
        }
        let idx = order[order.len() - 1 - pos];
        for v in 1..=max_entry {
            let vi = v as usize - 1;
            // suffix content must stay a partition
            if v > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            if !neighbour_ok(shape, id, entries, tiling, idx, v) {
                continue;
            }
            entries[idx] = v;
            counts[vi] += 1;
            rec(
                shape, id, tiling, order, pos + 1, entries, counts, max_entry, out,
            );
            counts[vi] -= 1;
            entries[idx] = 0;
        }
    }

    rec(
        shape,
        &id,
        tiling,
        &order,
        0,
        &mut entries,
        &mut counts,
        max_entry,
        &mut out,
    );
    out
}

/// The expected shape for the square on each side: `(2n, 2n)` for `h`,
/// `(2^{2n})` for `e`.
pub fn square_shape(basis: Basis, n: u32) -> Partition {
    match basis {
        Basis::H => Partition::new(vec![2 * n, 2 * n]).unwrap(),
        Basis::E => Partition::new(vec![2; 2 * n as usize]).unwrap(),
    }
}

/// Splits the square of the one-row (`h`) or one-column (`e`) case by
/// enumerating Yamanouchi domino tableaux of the corresponding shape
/// and bucketing their contents by cospin parity: even cospin counts
/// toward the symmetric part, odd toward the anti-symmetric part.
pub fn littlewood_via_domino(n: u32, basis: Basis) -> SignedKostkaTable {
    assert!(n >= 1);
    let shape = square_shape(basis, n);
    let max_vertical = max_vertical_dominoes(&shape);
    let mut entries: BTreeMap<Partition, (u64, u64)> = BTreeMap::new();
    for d in enumerate_yamanouchi_domino_tableaux(&shape, 2 * n) {
        let content =
            Partition::new(d.content()).expect("Yamanouchi content is a partition");
        let defect = max_vertical - d.vertical_count();
        let cospin = defect / 2;
        let slot = entries.entry(content).or_insert((0, 0));
        if cospin.is_multiple_of(2) {
            slot.0 += 1;
        } else {
            slot.1 += 1;
        }
    }
    table_from_counts(basis, Partition::new(vec![n]).unwrap(), entries)
}

/// The explicit one-parameter family of Yamanouchi domino tableaux for
/// the `h` side: `2n−2j` vertical dominoes of entry 1 followed by `j`
/// stacked pairs of horizontal dominoes with 1 on top of 2; and for the
/// `e` side: `n−j` side-by-side pairs of vertical dominoes with entries
/// `1..=n−j`, followed by `2j` horizontal dominoes with entries
/// `n−j+1..=n+j`. The member for parameter `j` has weight `(2n−j, j)`
/// (h) or `(2^{n−j}, 1^{2j})` (e) and cospin `j`.
pub fn family_member(basis: Basis, n: u32, j: u32) -> DominoTableau {
    assert!(j <= n);
    let shape = square_shape(basis, n);
    let mut dominoes = Vec::new();
    match basis {
        Basis::H => {
            for c in 0..(2 * n - 2 * j) as usize {
                dominoes.push(Domino {
                    row: 0,
                    col: c,
                    orientation: Orientation::Vertical,
                    entry: 1,
                });
            }
            for k in 0..j as usize {
                let col = (2 * n - 2 * j) as usize + 2 * k;
                dominoes.push(Domino {
                    row: 0,
                    col,
                    orientation: Orientation::Horizontal,
                    entry: 1,
                });
                dominoes.push(Domino {
                    row: 1,
                    col,
                    orientation: Orientation::Horizontal,
                    entry: 2,
                });
            }
        }
        Basis::E => {
            for k in 0..(n - j) as usize {
                for col in 0..2 {
                    dominoes.push(Domino {
                        row: 2 * k,
                        col,
                        orientation: Orientation::Vertical,
                        entry: k as u32 + 1,
                    });
                }
            }
            for m in 0..2 * j as usize {
                dominoes.push(Domino {
                    row: 2 * (n - j) as usize + m,
                    col: 0,
                    orientation: Orientation::Horizontal,
                    entry: n - j + m as u32 + 1,
                });
            }
        }
    }
    DominoTableau::new(shape, dominoes)
}
