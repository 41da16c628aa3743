//! The `verify` suites: named cross-checks between the combinatorial
//! decompositions, the power-sum engine, and the domino construction.
//!
//! Randomized suites derive every case from the base seed, and parallel
//! sections collect results in input order, so a fixed seed produces
//! byte-identical reports at any thread count.

use std::fmt::Write as _;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use plethyx_core::domino::{enumerate_yamanouchi_domino_tableaux, family_member, littlewood_via_domino, square_shape};
use plethyx_core::jdt::{inner_corners, jdt_slide, rectify};
use plethyx_core::rsk::{
    column_tuple_to_burge, row_tuple_to_biword, rsk, rsk_inverse, rsk_tilde, rsk_tilde_inverse,
    sub_biword_rsk, sub_burge_rsk_tilde, subtableau, Biword, BurgeWord,
};
use plethyx_core::sign::{
    decompose_e_square, decompose_h_square, littlewood_closed_form, Basis, SignedKostkaTable,
};
use plethyx_core::symfunc::{split_square, verify_symantisym, SymFunc};
use plethyx_core::{Partition, SkewShape, Tableau, TableauTuple};

pub struct SuiteConfig {
    pub max_n: u32,
    pub max_weight: u32,
    pub count: u64,
    pub seed: u64,
}

pub enum SuiteError {
    UnknownSuite(String),
    Failed(String),
}

struct Report {
    text: String,
    checks: u64,
    failed: bool,
}

impl Report {
    fn new() -> Self {
        Report {
            text: String::new(),
            checks: 0,
            failed: false,
        }
    }

    fn line(&mut self, s: &str) {
        self.text.push_str(s);
        self.text.push('\n');
    }

    fn check(&mut self, label: &str, ok: bool, counterexample: impl FnOnce() -> String) {
        self.checks += 1;
        if ok {
            self.line(&format!("{label}: ok"));
        } else {
            self.line(&format!("{label}: MISMATCH"));
            if !self.failed {
                let ce = counterexample();
                self.line(&format!("counterexample: {ce}"));
            }
            self.failed = true;
        }
    }

    fn finish(mut self, name: &str) -> Result<String, SuiteError> {
        if self.failed {
            let _ = writeln!(self.text, "suite {name}: FAIL");
            Err(SuiteError::Failed(self.text))
        } else {
            let _ = writeln!(self.text, "suite {name}: PASS ({} checks)", self.checks);
            Ok(self.text)
        }
    }
}

pub fn run(name: &str, cfg: SuiteConfig) -> Result<String, SuiteError> {
    match name {
        "littlewood" => littlewood(cfg),
        "oracle" => oracle(cfg),
        "rsk-roundtrip" => rsk_roundtrip(cfg),
        "jdt-order" => jdt_order(cfg),
        "corollary-qi" => corollary_qi(cfg),
        "domino" => domino(cfg),
        "symantisym" => symantisym(cfg),
        other => Err(SuiteError::UnknownSuite(other.to_string())),
    }
}

fn littlewood(cfg: SuiteConfig) -> Result<String, SuiteError> {
    let mut report = Report::new();
    report.line(&format!(
        "suite littlewood: closed forms for n = 1..={}, bases h and e",
        cfg.max_n
    ));
    for n in 1..=cfg.max_n {
        let la = Partition::new(vec![n]).unwrap();
        for basis in [Basis::H, Basis::E] {
            let table = match basis {
                Basis::H => decompose_h_square(&la),
                Basis::E => decompose_e_square(&la),
            };
            let expected = littlewood_closed_form(basis, n);
            report.check(&format!("littlewood {basis} n={n}"), table == expected, || {
                serde_json::json!({"got": table, "expected": expected}).to_string()
            });
        }
    }
    report.finish("littlewood")
}

fn table_equals_split(table: &SignedKostkaTable, sym: &SymFunc, antisym: &SymFunc) -> bool {
    let sym = sym.schur_expand();
    let antisym = antisym.schur_expand();
    let int = |n: u64| BigRational::from_integer(BigInt::from(n));
    let degree = 2 * table.lambda().size() + table.mu().size();
    Partition::all_of(degree).into_iter().all(|nu| {
        let (plus, minus) = table.counts(&nu);
        sym.get(&nu).cloned().unwrap_or_else(BigRational::zero) == int(plus)
            && antisym.get(&nu).cloned().unwrap_or_else(BigRational::zero) == int(minus)
    })
}

fn oracle(cfg: SuiteConfig) -> Result<String, SuiteError> {
    let mut report = Report::new();
    report.line(&format!(
        "suite oracle: sign tables vs power-sum plethysm, |lambda| <= {}",
        cfg.max_weight
    ));
    let lambdas: Vec<Partition> = (1..=cfg.max_weight)
        .flat_map(Partition::all_of)
        .collect();
    let results: Vec<(String, bool, String)> = lambdas
        .par_iter()
        .flat_map(|la| {
            [Basis::H, Basis::E]
                .into_par_iter()
                .map(move |basis| {
                    let (table, g) = match basis {
                        Basis::H => (decompose_h_square(la), SymFunc::h(la)),
                        Basis::E => (decompose_e_square(la), SymFunc::e(la)),
                    };
                    let (sym, antisym) = split_square(&g);
                    let ok = table_equals_split(&table, &sym, &antisym);
                    let ce = if ok {
                        String::new()
                    } else {
                        serde_json::to_string(&table).unwrap()
                    };
                    (format!("oracle {basis} lambda={la}"), ok, ce)
                })
        })
        .collect();
    for (label, ok, ce) in results {
        report.check(&label, ok, || ce.clone());
    }
    report.finish("oracle")
}

pub(crate) fn random_biword(rng: &mut ChaCha8Rng, len: usize, alphabet: u32) -> Biword {
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

pub(crate) fn random_burge_word(rng: &mut ChaCha8Rng, max_len: usize, alphabet: u32) -> BurgeWord {
    let mut cells: Vec<(u32, u32)> = (1..=alphabet)
        .flat_map(|u| (1..=alphabet).map(move |v| (u, v)))
        .collect();
    cells.shuffle(rng);
    let take = rng.random_range(1..=max_len.min(cells.len()));
    let mut picked = cells[..take].to_vec();
    picked
        .sort_unstable_by_key(|a| (a.0, std::cmp::Reverse(a.1)));
    BurgeWord::new(picked).unwrap()
}

fn rsk_roundtrip(cfg: SuiteConfig) -> Result<String, SuiteError> {
    let mut report = Report::new();
    report.line(&format!(
        "suite rsk-roundtrip: {} biwords and {} Burge words, seed {}",
        cfg.count, cfg.count, cfg.seed
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let biwords: Vec<Biword> = (0..cfg.count)
        .map(|_| {
            let len = rng.random_range(1..=20);
            random_biword(&mut rng, len, 8)
        })
        .collect();
    let burge: Vec<BurgeWord> = (0..cfg.count)
        .map(|_| random_burge_word(&mut rng, 20, 8))
        .collect();

    let bad_biword = biwords
        .par_iter()
        .find_first(|w| {
            let pair = rsk(w);
            pair.p.shape() != pair.q.shape() || rsk_inverse(&pair) != Ok((*w).clone())
        })
        .cloned();
    report.check("rsk-roundtrip biwords", bad_biword.is_none(), || {
        serde_json::to_string(&bad_biword).unwrap()
    });

    let bad_burge = burge
        .par_iter()
        .find_first(|w| {
            let pair = rsk_tilde(w);
            !pair.q.is_conjugate_semistandard() || rsk_tilde_inverse(&pair) != Ok((*w).clone())
        })
        .cloned();
    report.check("rsk-roundtrip burge words", bad_burge.is_none(), || {
        serde_json::to_string(&bad_burge).unwrap()
    });
    report.finish("rsk-roundtrip")
}

pub(crate) fn random_partition(rng: &mut ChaCha8Rng, size: u32) -> Partition {
    let all = Partition::all_of(size);
    all[rng.random_range(0..all.len())].clone()
}

pub(crate) fn random_skew_tableau(rng: &mut ChaCha8Rng, size: u32, max_letter: u32) -> Tableau {
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
    let shape = SkewShape::new(outer, Partition::new(inner).unwrap()).unwrap();
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
            grid[r][c] = rng.random_range(lo..=max_letter - below);
        }
    }
    let rows = (0..rows_count)
        .map(|r| grid[r][shape.row_span(r)].to_vec())
        .collect();
    Tableau::semistandard(shape, rows).unwrap()
}

fn rectify_in_order(t: &Tableau, rng: &mut ChaCha8Rng) -> Option<Tableau> {
    let mut current = t.clone();
    loop {
        let corners = inner_corners(current.shape());
        if corners.is_empty() {
            return Some(current);
        }
        let corner = corners[rng.random_range(0..corners.len())];
        current = jdt_slide(&current, corner).ok()?;
        if !current.is_semistandard() {
            return None;
        }
    }
}

fn jdt_order(cfg: SuiteConfig) -> Result<String, SuiteError> {
    let mut report = Report::new();
    report.line(&format!(
        "suite jdt-order: {} random skew tableaux, seed {}",
        cfg.count, cfg.seed
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cases: Vec<(Tableau, u64)> = (0..cfg.count)
        .map(|i| {
            let size = rng.random_range(1..=12);
            (random_skew_tableau(&mut rng, size, 14), cfg.seed ^ i)
        })
        .collect();
    let bad = cases
        .par_iter()
        .find_first(|(t, item_seed)| {
            let reference = rectify(t);
            if !reference.shape().is_straight() || reference.content() != t.content() {
                return true;
            }
            let mut item_rng = ChaCha8Rng::seed_from_u64(*item_seed);
            (0..3).any(|_| rectify_in_order(t, &mut item_rng) != Some(reference.clone()))
        })
        .map(|(t, _)| t.clone());
    report.check(
        "jdt-order slide independence + content conservation",
        bad.is_none(),
        || serde_json::to_string(&bad).unwrap(),
    );
    report.finish("jdt-order")
}

pub(crate) fn random_doubled_row_tuple(
    rng: &mut ChaCha8Rng,
    lambda_size: u32,
    alphabet: u32,
) -> (Partition, TableauTuple) {
    let lambda = random_partition(rng, lambda_size);
    let words = lambda
        .double()
        .parts()
        .iter()
        .map(|&len| {
            let mut word: Vec<u32> = (0..len).map(|_| rng.random_range(1..=alphabet)).collect();
            word.sort_unstable();
            word
        })
        .collect();
    (lambda, TableauTuple::rows(words).unwrap())
}

pub(crate) fn random_doubled_column_tuple(
    rng: &mut ChaCha8Rng,
    lambda_size: u32,
    alphabet: u32,
) -> (Partition, TableauTuple) {
    let lambda = random_partition(rng, lambda_size);
    let cols = lambda
        .double()
        .parts()
        .iter()
        .map(|&h| {
            let mut letters: Vec<u32> = (1..=alphabet).collect();
            letters.shuffle(rng);
            let mut col = letters[..h as usize].to_vec();
            col.sort_unstable();
            col
        })
        .collect();
    (lambda, TableauTuple::columns(cols).unwrap())
}

fn row_dissection_holds(t: &TableauTuple) -> bool {
    let pair = rsk(&row_tuple_to_biword(t));
    (1..=(t.members().len() / 2) as u32).all(|i| {
        let qi = sub_biword_rsk(t, i).q;
        match subtableau(&pair.q, i) {
            Ok(sub) => rectify(&sub) == qi,
            Err(_) => false,
        }
    })
}

fn column_dissection_holds(t: &TableauTuple) -> bool {
    let pair = rsk_tilde(&column_tuple_to_burge(t));
    (1..=(t.members().len() / 2) as u32).all(|i| {
        let qi = sub_burge_rsk_tilde(t, i).q;
        match subtableau(&pair.q, i) {
            Ok(sub) => rectify(&sub.conjugate()) == qi.conjugate(),
            Err(_) => false,
        }
    })
}

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

fn corollary_qi(cfg: SuiteConfig) -> Result<String, SuiteError> {
    let mut report = Report::new();
    report.line(&format!(
        "suite corollary-qi: exhaustive |lambda| <= 3 on alphabet 4, plus {} random row and {} random column tuples, seed {}",
        cfg.count, cfg.count, cfg.seed
    ));

    for lambda_size in 1..=3u32 {
        for lambda in Partition::all_of(lambda_size) {
            let doubled = lambda.double();
            let mut tuples: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
            for &len in doubled.parts() {
                let words = all_row_words(len, 4);
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| {
                        words.iter().map(move |w| {
                            let mut next = t.clone();
                            next.push(w.clone());
                            next
                        })
                    })
                    .collect();
            }
            let bad = tuples
                .par_iter()
                .find_first(|words| {
                    let t = TableauTuple::rows((*words).clone()).unwrap();
                    !row_dissection_holds(&t)
                })
                .cloned();
            report.check(
                &format!("corollary-qi exhaustive lambda={lambda}"),
                bad.is_none(),
                || serde_json::to_string(&bad).unwrap(),
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let rows: Vec<TableauTuple> = (0..cfg.count)
        .map(|_| {
            let size = rng.random_range(1..=5);
            random_doubled_row_tuple(&mut rng, size, 8).1
        })
        .collect();
    let bad = rows
        .par_iter()
        .find_first(|t| !row_dissection_holds(t))
        .map(|t| format!("{t:?}"));
    report.check("corollary-qi random row tuples", bad.is_none(), || {
        bad.clone().unwrap_or_default()
    });

    let cols: Vec<TableauTuple> = (0..cfg.count)
        .map(|_| {
            let size = rng.random_range(1..=4);
            random_doubled_column_tuple(&mut rng, size, 9).1
        })
        .collect();
    let bad = cols
        .par_iter()
        .find_first(|t| !column_dissection_holds(t))
        .map(|t| format!("{t:?}"));
    report.check("corollary-qi random column tuples", bad.is_none(), || {
        bad.clone().unwrap_or_default()
    });

    report.finish("corollary-qi")
}

fn domino(cfg: SuiteConfig) -> Result<String, SuiteError> {
    let mut report = Report::new();
    report.line(&format!(
        "suite domino: Yamanouchi families and cospin bucketing, n = 1..={}",
        cfg.max_n
    ));
    for n in 1..=cfg.max_n {
        for basis in [Basis::H, Basis::E] {
            let shape = square_shape(basis, n);
            let mut found = enumerate_yamanouchi_domino_tableaux(&shape, 2 * n);
            let mut family: Vec<_> = (0..=n).map(|j| family_member(basis, n, j)).collect();
            found.sort_by_key(|d| format!("{d:?}"));
            family.sort_by_key(|d| format!("{d:?}"));
            report.check(
                &format!("domino family {basis} n={n}"),
                found == family,
                || serde_json::json!({"found": found, "family": family}).to_string(),
            );

            let table = littlewood_via_domino(n, basis);
            let la = Partition::new(vec![n]).unwrap();
            let expected = match basis {
                Basis::H => decompose_h_square(&la),
                Basis::E => decompose_e_square(&la),
            };
            report.check(
                &format!("domino cospin table {basis} n={n}"),
                table == expected,
                || serde_json::json!({"got": table, "expected": expected}).to_string(),
            );
        }
    }
    report.finish("domino")
}

fn symantisym(_cfg: SuiteConfig) -> Result<String, SuiteError> {
    let mut report = Report::new();
    report.line("suite symantisym: generator tuples from {h1, h2, e2} up to 3 factors");
    let h1 = SymFunc::h(&Partition::new(vec![1]).unwrap());
    let h2 = SymFunc::h(&Partition::new(vec![2]).unwrap());
    let e2 = SymFunc::e(&Partition::new(vec![2]).unwrap());
    let generators: [(&str, &SymFunc); 3] = [("h1", &h1), ("h2", &h2), ("e2", &e2)];
    for len in 1..=3usize {
        let mut indices = vec![0usize; len];
        loop {
            let gs: Vec<SymFunc> = indices.iter().map(|&i| generators[i].1.clone()).collect();
            let names: Vec<&str> = indices.iter().map(|&i| generators[i].0).collect();
            report.check(
                &format!("symantisym ({})", names.join(",")),
                verify_symantisym(&gs),
                || names.join(","),
            );
            // advance odometer
            let mut pos = 0;
            loop {
                if pos == len {
                    break;
                }
                indices[pos] += 1;
                if indices[pos] < generators.len() {
                    break;
                }
                indices[pos] = 0;
                pos += 1;
            }
            if pos == len {
                break;
            }
        }
    }
    report.finish("symantisym")
}
