//! The RSK correspondence, its Burge-word variant, tuple↔word encodings
//! and recording-tableau dissection.
//!
//! Insertion is classical row bumping; the product-of-tableaux
//! description is kept as a cross-check (see the plactic-property
//! tests). The Burge-word variant runs the same insertion on words
//! whose bottom letters strictly decrease within a top-letter block;
//! its recording object is conjugate semistandard.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{SkewShape, Tableau, TableauTuple, TupleKind};

/// A lexicographically ordered biword: top letters weakly increase and
/// bottom letters weakly increase within a block of equal top letters.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct Biword {
    pairs: Vec<(u32, u32)>,
}

/// A Burge word: no repeated bi-letters, top letters weakly increase,
/// bottom letters strictly decrease within a block of equal top letters.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u32)>", into = "Vec<(u32, u32)>")]
pub struct BurgeWord {
    pairs: Vec<(u32, u32)>,
}

/// An insertion/recording tableau pair of equal shape.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RskPair {
    pub p: Tableau,
    pub q: Tableau,
}

fn check_positive(pairs: &[(u32, u32)]) -> Result<()> {
    if pairs.iter().any(|&(u, v)| u == 0 || v == 0) {
        return Err(Error::InvalidWord("letters must be positive".into()));
    }
    Ok(())
}

impl Biword {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        check_positive(&pairs)?;
        for w in pairs.windows(2) {
            let ((u1, v1), (u2, v2)) = (w[0], w[1]);
            if u1 > u2 || (u1 == u2 && v1 > v2) {
                return Err(Error::InvalidWord(format!(
                    "bi-letters ({u1};{v1}),({u2};{v2}) out of lexicographic order"
                )));
            }
        }
        Ok(Biword { pairs })
    }

    pub fn from_words(u: Vec<u32>, v: Vec<u32>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::InvalidWord(format!(
                "top word has {} letters, bottom word {}",
                u.len(),
                v.len()
            )));
        }
        Biword::new(u.into_iter().zip(v).collect())
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn top_word(&self) -> Vec<u32> {
        self.pairs.iter().map(|&(u, _)| u).collect()
    }

    pub fn bottom_word(&self) -> Vec<u32> {
        self.pairs.iter().map(|&(_, v)| v).collect()
    }
}

impl BurgeWord {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        check_positive(&pairs)?;
        for w in pairs.windows(2) {
            let ((u1, v1), (u2, v2)) = (w[0], w[1]);
            if u1 > u2 || (u1 == u2 && v1 <= v2) {
                return Err(Error::InvalidWord(format!(
                    "bi-letters ({u1};{v1}),({u2};{v2}) violate Burge order"
                )));
            }
        }
        Ok(BurgeWord { pairs })
    }

    pub fn from_words(u: Vec<u32>, v: Vec<u32>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::InvalidWord(format!(
                "top word has {} letters, bottom word {}",
                u.len(),
                v.len()
            )));
        }
        BurgeWord::new(u.into_iter().zip(v).collect())
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn top_word(&self) -> Vec<u32> {
        self.pairs.iter().map(|&(u, _)| u).collect()
    }

    pub fn bottom_word(&self) -> Vec<u32> {
        self.pairs.iter().map(|&(_, v)| v).collect()
    }
}

impl TryFrom<Vec<(u32, u32)>> for Biword {
    type Error = Error;
    fn try_from(pairs: Vec<(u32, u32)>) -> Result<Self> {
        Biword::new(pairs)
    }
}

impl From<Biword> for Vec<(u32, u32)> {
    fn from(w: Biword) -> Self {
        w.pairs
    }
}

impl TryFrom<Vec<(u32, u32)>> for BurgeWord {
    type Error = Error;
    fn try_from(pairs: Vec<(u32, u32)>) -> Result<Self> {
        BurgeWord::new(pairs)
    }
}

impl From<BurgeWord> for Vec<(u32, u32)> {
    fn from(w: BurgeWord) -> Self {
        w.pairs
    }
}

fn parse_words(s: &str) -> Result<(Vec<u32>, Vec<u32>)> {
    let (top, bottom) = s
        .split_once('/')
        .ok_or_else(|| Error::Parse("expected \"u1,u2,.../v1,v2,...\"".into()))?;
    let parse_side = |side: &str| -> Result<Vec<u32>> {
        let side = side.trim();
        if side.is_empty() {
            return Ok(Vec::new());
        }
        side.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))
            })
            .collect()
    };
    Ok((parse_side(top)?, parse_side(bottom)?))
}

/// Parses `"u1,u2,.../v1,v2,..."`.
impl FromStr for Biword {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (u, v) = parse_words(s)?;
        Biword::from_words(u, v)
    }
}

impl FromStr for BurgeWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (u, v) = parse_words(s)?;
        BurgeWord::from_words(u, v)
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = self.pairs.iter().map(|p| p.0.to_string()).collect();
        let bottom: Vec<String> = self.pairs.iter().map(|p| p.1.to_string()).collect();
        write!(f, "{}/{}", top.join(","), bottom.join(","))
    }
}

impl fmt::Display for BurgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = self.pairs.iter().map(|p| p.0.to_string()).collect();
        let bottom: Vec<String> = self.pairs.iter().map(|p| p.1.to_string()).collect();
        write!(f, "{}/{}", top.join(","), bottom.join(","))
    }
}

/// Row-inserts `v`, returning the cell where the new box appeared.
fn row_insert(rows: &mut Vec<Vec<u32>>, mut v: u32) -> (usize, usize) {
    for r in 0.. {
        if r == rows.len() {
            rows.push(vec![v]);
            return (r, 0);
        }
        match rows[r].iter().position(|&x| x > v) {
            None => {
                rows[r].push(v);
                return (r, rows[r].len() - 1);
            }
            Some(j) => {
                std::mem::swap(&mut rows[r][j], &mut v);
            }
        }
    }
    unreachable!()
}

fn insert_pairs(pairs: &[(u32, u32)]) -> RskPair {
    let mut p_rows: Vec<Vec<u32>> = Vec::new();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for &(u, v) in pairs {
        let (r, c) = row_insert(&mut p_rows, v);
        if r == q_rows.len() {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(c, q_rows[r].len());
        q_rows[r].push(u);
    }
    RskPair {
        p: Tableau::from_rows(p_rows).expect("insertion rows form a tableau"),
        q: Tableau::from_rows(q_rows).expect("recording rows form a tableau"),
    }
}

/// The RSK correspondence. The insertion tableau has the content of the
/// bottom word, the recording tableau the content of the top word, and
/// both have the same shape.
pub fn rsk(w: &Biword) -> RskPair {
    let pair = insert_pairs(w.pairs());
    debug_assert!(pair.p.is_semistandard());
    debug_assert!(pair.q.is_semistandard());
    pair
}

/// The Burge-word correspondence: same insertion, conjugate
/// semistandard recording tableau.
pub fn rsk_tilde(w: &BurgeWord) -> RskPair {
    let pair = insert_pairs(w.pairs());
    debug_assert!(pair.p.is_semistandard());
    debug_assert!(pair.q.is_conjugate_semistandard());
    pair
}

/// Inserts a plain word: the bi-letters are `(i, w_i)` with a standard
/// recording tableau.
pub fn insert_word(word: &[u32]) -> RskPair {
    let pairs: Vec<(u32, u32)> = word
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as u32 + 1, v))
        .collect();
    insert_pairs(&pairs)
}

/// Reverse bumping: removes the box at `(r, c)` of the insertion rows
/// and returns the expelled letter.
fn reverse_insert(rows: &mut Vec<Vec<u32>>, r: usize, c: usize) -> u32 {
    let mut x = rows[r].remove(c);
    if rows[r].is_empty() {
        rows.remove(r);
    }
    for row in rows[..r].iter_mut().rev() {
        // rightmost entry strictly smaller than x
        let j = row
            .iter()
            .rposition(|&y| y < x)
            .expect("reverse bump always finds a smaller entry");
        std::mem::swap(&mut row[j], &mut x);
    }
    x
}

fn shapes_match(pair: &RskPair) -> Result<()> {
    if pair.p.shape() != pair.q.shape() || !pair.p.shape().is_straight() {
        return Err(Error::ShapeMismatch(format!(
            "pair shapes {} and {} must be equal and straight",
            pair.p.shape(),
            pair.q.shape()
        )));
    }
    Ok(())
}

/// Pops the last-added cell of the recording rows. `tilde` picks the
/// lowest row among equal maximal entries (Burge); otherwise the
/// rightmost column (classical RSK).
fn pop_recording_cell(q_rows: &mut Vec<Vec<u32>>, tilde: bool) -> Result<(u32, usize, usize)> {
    let (mut best, mut max) = ((0usize, 0usize), 0u32);
    for (r, row) in q_rows.iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            let better = e > max
                || (e == max && if tilde { r > best.0 } else { c > best.1 });
            if better {
                best = (r, c);
                max = e;
            }
        }
    }
    let (r, c) = best;
    if c + 1 != q_rows[r].len() || q_rows.get(r + 1).is_some_and(|row| row.len() > c) {
        return Err(Error::InvalidTableau(
            "recording tableau is not a valid correspondence image".into(),
        ));
    }
    q_rows[r].pop();
    if q_rows[r].is_empty() {
        q_rows.remove(r);
    }
    Ok((max, r, c))
}

/// Inverts [`rsk`]. Among equal maximal recording entries the rightmost
/// column was added last.
pub fn rsk_inverse(pair: &RskPair) -> Result<Biword> {
    shapes_match(pair)?;
    if !pair.p.is_semistandard() || !pair.q.is_semistandard() {
        return Err(Error::InvalidTableau(
            "rsk_inverse needs two semistandard tableaux".into(),
        ));
    }
    let mut p_rows: Vec<Vec<u32>> = pair.p.rows().to_vec();
    let mut q_rows: Vec<Vec<u32>> = pair.q.rows().to_vec();
    let mut pairs = Vec::with_capacity(pair.p.num_cells() as usize);
    while !q_rows.is_empty() {
        let (u, r, c) = pop_recording_cell(&mut q_rows, false)?;
        let v = reverse_insert(&mut p_rows, r, c);
        pairs.push((u, v));
    }
    pairs.reverse();
    Biword::new(pairs)
}

/// Inverts [`rsk_tilde`]. Among equal maximal recording entries the
/// lowest row was added last.
pub fn rsk_tilde_inverse(pair: &RskPair) -> Result<BurgeWord> {
    shapes_match(pair)?;
    if !pair.p.is_semistandard() || !pair.q.is_conjugate_semistandard() {
        return Err(Error::InvalidTableau(
            "rsk_tilde_inverse needs a semistandard insertion tableau and a conjugate semistandard recording tableau".into(),
        ));
    }
    let mut p_rows: Vec<Vec<u32>> = pair.p.rows().to_vec();
    let mut q_rows: Vec<Vec<u32>> = pair.q.rows().to_vec();
    let mut pairs = Vec::with_capacity(pair.p.num_cells() as usize);
    while !q_rows.is_empty() {
        let (u, r, c) = pop_recording_cell(&mut q_rows, true)?;
        let v = reverse_insert(&mut p_rows, r, c);
        pairs.push((u, v));
    }
    pairs.reverse();
    BurgeWord::new(pairs)
}

/// Encodes a tuple of row tableaux as the biword with bi-letters
/// `(i; j)` for each entry `j` of member `i`.
pub fn row_tuple_to_biword(t: &TableauTuple) -> Biword {
    assert_eq!(t.kind(), TupleKind::Row, "expected a row tuple");
    let mut pairs = Vec::new();
    for (i, member) in t.members().iter().enumerate() {
        for v in member.reading_word() {
            pairs.push((i as u32 + 1, v));
        }
    }
    Biword::new(pairs).expect("row tuple encodes to a valid biword")
}

/// Decodes a biword whose top word is `1^{λ1} 2^{λ2} …` back to the row
/// tuple.
pub fn biword_to_row_tuple(w: &Biword) -> Result<TableauTuple> {
    let mut words: Vec<Vec<u32>> = Vec::new();
    for &(u, v) in w.pairs() {
        let idx = u as usize - 1;
        if idx > words.len() {
            return Err(Error::InvalidWord(format!(
                "top letter {u} skips a value; not a tuple encoding"
            )));
        }
        if idx == words.len() {
            words.push(Vec::new());
        }
        words[idx].push(v);
    }
    TableauTuple::rows(words)
}

/// Encodes a tuple of column tableaux as the Burge word whose bottom
/// blocks are the column reading words (bottom to top, so strictly
/// decreasing).
pub fn column_tuple_to_burge(t: &TableauTuple) -> BurgeWord {
    assert_eq!(t.kind(), TupleKind::Column, "expected a column tuple");
    let mut pairs = Vec::new();
    for (i, member) in t.members().iter().enumerate() {
        for v in member.reading_word() {
            pairs.push((i as u32 + 1, v));
        }
    }
    BurgeWord::new(pairs).expect("column tuple encodes to a valid Burge word")
}

/// Decodes a Burge word with top word `1^{λ1} 2^{λ2} …` back to the
/// column tuple.
pub fn burge_to_column_tuple(w: &BurgeWord) -> Result<TableauTuple> {
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for &(u, v) in w.pairs() {
        let idx = u as usize - 1;
        if idx > cols.len() {
            return Err(Error::InvalidWord(format!(
                "top letter {u} skips a value; not a tuple encoding"
            )));
        }
        if idx == cols.len() {
            cols.push(Vec::new());
        }
        cols[idx].push(v);
    }
    for col in &mut cols {
        col.reverse();
    }
    TableauTuple::columns(cols)
}

/// The skew subtableau of `q` on the cells holding `2i−1` or `2i`,
/// entries kept verbatim; the inner shape collects `q`'s own inner cells
/// plus the cells holding smaller entries.
pub fn subtableau(q: &Tableau, i: u32) -> Result<Tableau> {
    let lo = 2 * i - 1;
    let hi = 2 * i;
    let mut inner = Vec::new();
    let mut outer = Vec::new();
    let mut rows = Vec::new();
    for (r, row) in q.rows().iter().enumerate() {
        let offset = q.shape().inner().part(r);
        let small = row.iter().filter(|&&e| e < lo).count() as u32;
        let picked: Vec<u32> = row
            .iter()
            .copied()
            .filter(|&e| (lo..=hi).contains(&e))
            .collect();
        // in a (conjugate) semistandard row the picked entries sit in a
        // contiguous block right after the smaller ones
        let start = offset + small;
        inner.push(start);
        outer.push(start + picked.len() as u32);
        rows.push(picked);
    }
    // drop trailing rows that carry no cells
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
        outer.pop();
        inner.pop();
    }
    let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
    Tableau::new(shape, rows)
}

/// RSK of the sub-biword of a row λ²-tuple on members `2i−1` and `2i`,
/// top letters kept verbatim.
pub fn sub_biword_rsk(t: &TableauTuple, i: u32) -> RskPair {
    assert_eq!(t.kind(), TupleKind::Row, "expected a row tuple");
    insert_pairs(&sub_pairs(t, i))
}

/// Burge-word analogue of [`sub_biword_rsk`] for column λ²-tuples.
pub fn sub_burge_rsk_tilde(t: &TableauTuple, i: u32) -> RskPair {
    assert_eq!(t.kind(), TupleKind::Column, "expected a column tuple");
    insert_pairs(&sub_pairs(t, i))
}

fn sub_pairs(t: &TableauTuple, i: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for k in [2 * i - 2, 2 * i - 1] {
        let member = &t.members()[k as usize];
        for v in member.reading_word() {
            pairs.push((k + 1, v));
        }
    }
    pairs
}
