//! Jeu de taquin slides, rectification, and the tableau product.
//!
//! A slide starts at an inner corner of a skew tableau and exchanges the
//! empty cell with its east or south neighbour, taking the smaller entry
//! (the south one on ties), until the empty cell reaches the outer
//! border. Rectifying repeats slides until the shape is straight; the
//! result does not depend on the slide order, which is separately
//! tested. The product of two straight tableaux is the rectification of
//! their diagonal juxtaposition.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{SkewShape, Tableau};

/// One slide: the corner it started from, the path the empty cell took,
/// and the resulting tableau.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SlideTrace {
    pub start_corner: (usize, usize),
    pub path: Vec<(usize, usize)>,
    pub result: Tableau,
}

/// The inner corners of a skew shape: cells of the inner partition whose
/// east and south neighbours lie outside it. Sorted by (row, column).
pub fn inner_corners(shape: &SkewShape) -> Vec<(usize, usize)> {
    let inner = shape.inner();
    let mut corners = Vec::new();
    for r in 0..inner.len() {
        let c = inner.part(r) as usize - 1;
        if inner.part(r + 1) as usize <= c {
            corners.push((r, c));
        }
    }
    corners
}

/// Mutable working form of a skew tableau: full-width rows with the
/// inner region unused.
struct Grid {
    outer: Vec<usize>,
    inner: Vec<usize>,
    cells: Vec<Vec<u32>>,
}

impl Grid {
    fn from_tableau(t: &Tableau) -> Grid {
        let shape = t.shape();
        let outer: Vec<usize> = (0..shape.rows())
            .map(|r| shape.outer().part(r) as usize)
            .collect();
        let inner: Vec<usize> = (0..shape.rows())
            .map(|r| shape.inner().part(r) as usize)
            .collect();
        let cells = (0..shape.rows())
            .map(|r| {
                let mut row = vec![0u32; outer[r]];
                for c in shape.row_span(r) {
                    row[c] = t.entry(r, c).unwrap();
                }
                row
            })
            .collect();
        Grid {
            outer,
            inner,
            cells,
        }
    }

    fn to_tableau(&self) -> Tableau {
        let rows_used = self.outer.iter().take_while(|&&o| o > 0).count();
        let outer = Partition::new(self.outer[..rows_used].iter().map(|&o| o as u32).collect())
            .expect("outer stays a partition during slides");
        let inner = Partition::new(
            self.inner[..rows_used]
                .iter()
                .map(|&i| i as u32)
                .take_while(|&i| i > 0)
                .collect::<Vec<_>>(),
        )
        .expect("inner stays a partition during slides");
        let shape = SkewShape::new(outer, inner).expect("inner stays inside outer");
        let rows = (0..rows_used)
            .map(|r| self.cells[r][self.inner[r]..self.outer[r]].to_vec())
            .collect();
        Tableau::new(shape, rows).expect("grid rows match shape")
    }

    fn filled(&self, r: usize, c: usize) -> bool {
        r < self.cells.len() && c < self.outer[r] && c >= self.inner[r]
    }

    /// Slides the hole from `corner` to the outer border and removes the
    /// freed border cell. Returns the path of the hole.
    fn slide(&mut self, corner: (usize, usize)) -> Vec<(usize, usize)> {
        let (mut r, mut c) = corner;
        let mut path = vec![(r, c)];
        loop {
            let east = self.filled(r, c + 1).then(|| self.cells[r][c + 1]);
            let south = self.filled(r + 1, c).then(|| self.cells[r + 1][c]);
            match (east, south) {
                (None, None) => break,
                (Some(_), None) => {
                    self.cells[r][c] = self.cells[r][c + 1];
                    c += 1;
                }
                (None, Some(_)) => {
                    self.cells[r][c] = self.cells[r + 1][c];
                    r += 1;
                }
                (Some(e), Some(s)) => {
                    if s <= e {
                        self.cells[r][c] = self.cells[r + 1][c];
                        r += 1;
                    } else {
                        self.cells[r][c] = self.cells[r][c + 1];
                        c += 1;
                    }
                }
            }
            path.push((r, c));
        }
        self.outer[r] -= 1;
        self.inner[corner.0] -= 1;
        path
    }
}

/// One jeu de taquin slide from the given inner corner.
pub fn jdt_slide(t: &Tableau, corner: (usize, usize)) -> Result<Tableau> {
    Ok(jdt_slide_traced(t, corner)?.0)
}

/// Like [`jdt_slide`] but also reports the path of the empty cell.
pub fn jdt_slide_traced(t: &Tableau, corner: (usize, usize)) -> Result<(Tableau, SlideTrace)> {
    if !inner_corners(t.shape()).contains(&corner) {
        return Err(Error::InvalidCorner {
            row: corner.0,
            col: corner.1,
        });
    }
    let mut grid = Grid::from_tableau(t);
    let path = grid.slide(corner);
    let result = grid.to_tableau();
    let trace = SlideTrace {
        start_corner: corner,
        path,
        result: result.clone(),
    };
    Ok((result, trace))
}

/// Default slide order: the inner corner with the largest row index,
/// ties broken by the largest column index.
fn last_corner(inner: &[usize]) -> Option<(usize, usize)> {
    let rows = inner.iter().take_while(|&&i| i > 0).count();
    rows.checked_sub(1).map(|r| (r, inner[r] - 1))
}

/// Rectifies a skew tableau to straight shape.
pub fn rectify(t: &Tableau) -> Tableau {
    let mut grid = Grid::from_tableau(t);
    while let Some(corner) = last_corner(&grid.inner) {
        grid.slide(corner);
    }
    grid.to_tableau()
}

/// Rectification emitting one trace per slide.
pub fn rectify_traced(t: &Tableau) -> (Tableau, Vec<SlideTrace>) {
    let mut current = t.clone();
    let mut traces = Vec::new();
    loop {
        let corners = inner_corners(current.shape());
        let Some(&corner) = corners.last() else { break };
        let (next, trace) = jdt_slide_traced(&current, corner).expect("corner from inner_corners");
        traces.push(trace);
        current = next;
    }
    (current, traces)
}

/// The diagonal juxtaposition `t1 ∗ t2`: `t1` below and left of `t2`,
/// as the skew tableau of shape
/// `(μ1+ν1, …, μ1+ν_ℓ, μ1, …, μ_k)/(μ1^ℓ)` where `μ = shape(t1)` and
/// `ν = shape(t2)`.
///
/// Panics if either operand is not of straight shape.
pub fn star_product(t1: &Tableau, t2: &Tableau) -> Tableau {
    assert!(
        t1.shape().is_straight() && t2.shape().is_straight(),
        "star_product operands must have straight shape"
    );
    if t1.is_empty() {
        return t2.clone();
    }
    if t2.is_empty() {
        return t1.clone();
    }
    let mu1 = t1.shape().outer().part(0);
    let l = t2.shape().rows();
    let mut outer: Vec<u32> = (0..l)
        .map(|r| mu1 + t2.shape().outer().part(r))
        .collect();
    outer.extend(t1.shape().outer().parts());
    let inner = vec![mu1; l];
    let shape = SkewShape::new(
        Partition::new(outer).expect("star outer is a partition"),
        Partition::new(inner).expect("star inner is a partition"),
    )
    .expect("star inner fits in outer");
    let mut rows: Vec<Vec<u32>> = t2.rows().to_vec();
    rows.extend(t1.rows().iter().cloned());
    Tableau::new(shape, rows).expect("star rows match shape")
}

/// The tableau product `Rect(t1 ∗ t2)`.
///
/// Panics if either operand is not of straight shape.
pub fn product(t1: &Tableau, t2: &Tableau) -> Tableau {
    rectify(&star_product(t1, t2))
}
