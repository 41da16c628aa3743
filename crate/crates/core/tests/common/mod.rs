#![allow(dead_code)] // each test binary uses its own subset

//! Shared generators for randomized integration tests. Everything is
//! seeded, so failures reproduce.

use plethyx_core::rsk::{Biword, BurgeWord};
use plethyx_core::{Partition, SkewShape, Tableau, TableauTuple};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_partition(rng: &mut ChaCha8Rng, size: u32) -> Partition {
    let all = Partition::all_of(size);
    all[rng.random_range(0..all.len())].clone()
}

/// A random skew shape with `outer ⊢ size` and a random inner shape
/// contained in it.
pub fn random_skew_shape(rng: &mut ChaCha8Rng, size: u32) -> SkewShape {
    let outer = random_partition(rng, size);
    let mut inner = Vec::new();
    let mut prev = u32::MAX;
    for i in 0..outer.len() {
        let hi = outer.part(i).min(prev);
        let pick = rng.random_range(0..=hi);
        inner.push(pick);
        prev = pick;
        if pick == 0 {
            break;
        }
    }
    let inner = Partition::new(inner).unwrap();
    SkewShape::new(outer, inner).unwrap()
}

/// A random semistandard filling with entries at most `max_letter`.
/// Each cell picks uniformly from its feasible interval; capping by the
/// number of cells below keeps the interval nonempty.
pub fn random_skew_tableau(rng: &mut ChaCha8Rng, size: u32, max_letter: u32) -> Tableau {
    let shape = random_skew_shape(rng, size);
    let rows_count = shape.rows();
    let mut grid: Vec<Vec<u32>> = (0..rows_count)
        .map(|r| vec![0; shape.outer().part(r) as usize])
        .collect();
    for r in 0..rows_count {
        for c in shape.row_span(r) {
            let below = (r + 1..rows_count)
                .take_while(|&rr| shape.contains_cell(rr, c))
                .count() as u32;
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
            let hi = max_letter - below;
            grid[r][c] = rng.random_range(lo..=hi);
        }
    }
    let rows = (0..rows_count)
        .map(|r| grid[r][shape.row_span(r)].to_vec())
        .collect();
    Tableau::semistandard(shape, rows).unwrap()
}

pub fn random_biword(rng: &mut ChaCha8Rng, len: usize, alphabet: u32) -> Biword {
    let mut pairs: Vec<(u32, u32)> = (0..len)
        .map(|_| {
            (
                rng.random_range(1..=alphabet),
                rng.random_range(1..=alphabet),
            )
        })
        .collect();
    pairs.sort_unstable();
    Biword::new(pairs).unwrap()
}

pub fn random_burge_word(rng: &mut ChaCha8Rng, max_len: usize, alphabet: u32) -> BurgeWord {
    let mut cells: Vec<(u32, u32)> = (1..=alphabet)
        .flat_map(|u| (1..=alphabet).map(move |v| (u, v)))
        .collect();
    cells.shuffle(rng);
    let take = rng.random_range(1..=max_len.min(cells.len()));
    let mut picked = cells[..take].to_vec();
    picked.sort_unstable_by_key(|a| (a.0, std::cmp::Reverse(a.1)));
    BurgeWord::new(picked).unwrap()
}

/// A weakly increasing word of the given length.
pub fn random_row_word(rng: &mut ChaCha8Rng, len: u32, alphabet: u32) -> Vec<u32> {
    let mut word: Vec<u32> = (0..len).map(|_| rng.random_range(1..=alphabet)).collect();
    word.sort_unstable();
    word
}

/// A strictly increasing column of the given height.
pub fn random_column_word(rng: &mut ChaCha8Rng, height: u32, alphabet: u32) -> Vec<u32> {
    debug_assert!(height <= alphabet);
    let mut letters: Vec<u32> = (1..=alphabet).collect();
    letters.shuffle(rng);
    let mut col = letters[..height as usize].to_vec();
    col.sort_unstable();
    col
}

/// A random λ²-tuple of row tableaux for a random λ of the given size.
pub fn random_doubled_row_tuple(
    rng: &mut ChaCha8Rng,
    lambda_size: u32,
    alphabet: u32,
) -> (Partition, TableauTuple) {
    let lambda = random_partition(rng, lambda_size);
    let words = lambda
        .double()
        .parts()
        .iter()
        .map(|&len| random_row_word(rng, len, alphabet))
        .collect();
    (lambda, TableauTuple::rows(words).unwrap())
}

/// A random λ²-tuple of column tableaux for a random λ of the given
/// size.
pub fn random_doubled_column_tuple(
    rng: &mut ChaCha8Rng,
    lambda_size: u32,
    alphabet: u32,
) -> (Partition, TableauTuple) {
    let lambda = random_partition(rng, lambda_size);
    let cols = lambda
        .double()
        .parts()
        .iter()
        .map(|&h| random_column_word(rng, h, alphabet))
        .collect();
    (lambda, TableauTuple::columns(cols).unwrap())
}
