//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible with `--nocapture`) and asserting its runtime budget.
//! All comparisons are exact integer/rational equality.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use plethyx_core::domino::{
    cospin, enumerate_yamanouchi_domino_tableaux, family_member, littlewood_via_domino,
    square_shape,
};
use plethyx_core::jdt::{inner_corners, jdt_slide, product, rectify, star_product};
use plethyx_core::partition::Composition;
use plethyx_core::rsk::{
    column_tuple_to_burge, insert_word, row_tuple_to_biword, rsk, rsk_tilde, sub_biword_rsk,
    sub_burge_rsk_tilde, subtableau, Biword, BurgeWord,
};
use plethyx_core::sign::{
    decompose_e_square, decompose_h_square, decompose_skew_e_square, decompose_skew_h_square,
    littlewood_closed_form, sign_h, Basis, SignedKostkaTable,
};
use plethyx_core::symfunc::{split_square, verify_symantisym, SymFunc};
use plethyx_core::tableau::kostka;
use plethyx_core::{Partition, SkewShape, Tableau, TableauTuple};

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn tab(rows: &[&[u32]]) -> Tableau {
    Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} >= {budget:?}"
    );
    println!("criterion {criterion}: PASS ({elapsed:?})");
}

/// Criterion 1: the worked λ = (2,1) table — ν = (3,2,1) splits (2,2)
/// and the four tableaux carry signs +, −, −, +.
#[test]
fn criterion_01_worked_example() {
    let start = Instant::now();
    let la = pt(&[2, 1]);
    let table = decompose_h_square(&la);
    assert_eq!(table.counts(&pt(&[3, 2, 1])), (2, 2));
    let cases: [(&[&[u32]], i32); 4] = [
        (&[&[1, 1, 2], &[2, 3], &[4]], 1),
        (&[&[1, 1, 2], &[2, 4], &[3]], -1),
        (&[&[1, 1, 3], &[2, 2], &[4]], -1),
        (&[&[1, 1, 4], &[2, 2], &[3]], 1),
    ];
    for (rows, expected) in cases {
        assert_eq!(sign_h(&tab(rows), &la).unwrap(), expected);
    }
    finish("1 (worked example)", start, Duration::from_secs(1));
}

/// Criterion 2: Littlewood closed forms for n ≤ 8, both bases.
#[test]
fn criterion_02_littlewood_closed_forms() {
    let start = Instant::now();
    for n in 1..=8u32 {
        let la = pt(&[n]);
        assert_eq!(
            decompose_h_square(&la),
            littlewood_closed_form(Basis::H, n),
            "h n={n}"
        );
        assert_eq!(
            decompose_e_square(&la),
            littlewood_closed_form(Basis::E, n),
            "e n={n}"
        );
    }
    finish("2 (littlewood closed forms)", start, Duration::from_secs(10));
}

fn assert_table_equals_split(table: &SignedKostkaTable, sym: &SymFunc, antisym: &SymFunc) {
    let sym = sym.schur_expand();
    let antisym = antisym.schur_expand();
    let degree = 2 * table.lambda().size() + table.mu().size();
    for nu in Partition::all_of(degree) {
        let (plus, minus) = table.counts(&nu);
        assert_eq!(
            sym.get(&nu).cloned().unwrap_or_else(BigRational::zero),
            int(plus),
            "sym at {nu}, lambda={} mu={}",
            table.lambda(),
            table.mu()
        );
        assert_eq!(
            antisym.get(&nu).cloned().unwrap_or_else(BigRational::zero),
            int(minus),
            "antisym at {nu}, lambda={} mu={}",
            table.lambda(),
            table.mu()
        );
    }
}

/// Criterion 3: oracle equivalence for every λ with |λ| ≤ 5, both
/// bases, coefficientwise.
#[test]
fn criterion_03_oracle_equivalence() {
    let start = Instant::now();
    for weight in 1..=5u32 {
        for la in Partition::all_of(weight) {
            let (sym, antisym) = split_square(&SymFunc::h(&la));
            assert_table_equals_split(&decompose_h_square(&la), &sym, &antisym);
            let (sym, antisym) = split_square(&SymFunc::e(&la));
            assert_table_equals_split(&decompose_e_square(&la), &sym, &antisym);
        }
    }
    finish("3 (oracle equivalence)", start, Duration::from_secs(120));
}

/// Criterion 4: K⁺ + K⁻ equals the Kostka number for every ν and every
/// λ with |λ| ≤ 6, both bases.
#[test]
fn criterion_04_kostka_completeness() {
    let start = Instant::now();
    for weight in 1..=6u32 {
        for la in Partition::all_of(weight) {
            let content = Composition::from(&la.double());
            let h = decompose_h_square(&la);
            let e = decompose_e_square(&la);
            for nu in Partition::all_of(2 * weight) {
                let (p, m) = h.counts(&nu);
                assert_eq!(p + m, kostka(&nu, &content), "h lambda={la} nu={nu}");
                let (p, m) = e.counts(&nu);
                assert_eq!(
                    p + m,
                    kostka(&nu.conjugate(), &content),
                    "e lambda={la} nu={nu}"
                );
            }
        }
    }
    finish("4 (kostka completeness)", start, Duration::from_secs(120));
}

/// Criterion 5: the two worked correspondences produce exactly the
/// published pairs (with the recording tableau of the first example
/// corrected for its cell-count misprint, as forced by the
/// correspondence itself).
#[test]
fn criterion_05_rsk_example_fidelity() {
    let start = Instant::now();
    let w: Biword = "1,1,1,1,2,2,2,2,3,3,3,4,4,4/1,2,3,4,1,2,3,3,1,1,2,1,2,3"
        .parse()
        .unwrap();
    let pair = rsk(&w);
    assert_eq!(
        pair.p,
        tab(&[&[1, 1, 1, 1, 1, 2, 3], &[2, 2, 2, 3], &[3, 3], &[4]])
    );
    assert_eq!(
        pair.q,
        tab(&[&[1, 1, 1, 1, 2, 4, 4], &[2, 2, 2, 3], &[3, 3], &[4]])
    );

    let wt = BurgeWord::from_words(
        vec![1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4],
        vec![7, 5, 3, 2, 1, 8, 6, 4, 3, 1, 5, 3, 2, 4, 2, 1],
    )
    .unwrap();
    let pair = rsk_tilde(&wt);
    assert_eq!(
        pair.p,
        tab(&[
            &[1, 1, 1, 2],
            &[2, 2, 3, 4],
            &[3, 3, 5],
            &[4, 6],
            &[5, 8],
            &[7]
        ])
    );
    assert_eq!(
        pair.q,
        tab(&[
            &[1, 2, 3, 4],
            &[1, 2, 3, 4],
            &[1, 2, 3],
            &[1, 2],
            &[1, 2],
            &[4]
        ])
    );
    finish("5 (rsk example fidelity)", start, Duration::from_secs(1));
}

mod gen {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    pub fn random_partition(rng: &mut ChaCha8Rng, size: u32) -> Partition {
        let all = Partition::all_of(size);
        all[rng.random_range(0..all.len())].clone()
    }

    pub fn random_skew_tableau(rng: &mut ChaCha8Rng, size: u32, max_letter: u32) -> Tableau {
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
            .map(|&len| {
                let mut w: Vec<u32> = (0..len).map(|_| rng.random_range(1..=alphabet)).collect();
                w.sort_unstable();
                w
            })
            .collect();
        (lambda, TableauTuple::rows(words).unwrap())
    }

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

    pub fn all_row_words(len: u32, alphabet: u32) -> Vec<Vec<u32>> {
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
}

/// Criterion 6: the recording dissection identity, exhaustively for
/// |λ| ≤ 3 on alphabet ≤ 4 and on 10³ random larger row tuples, plus
/// the conjugate analogue on 10³ random column tuples.
#[test]
fn criterion_06_recording_dissection() {
    let start = Instant::now();
    for lambda_size in 1..=3u32 {
        for lambda in Partition::all_of(lambda_size) {
            let doubled = lambda.double();
            let mut tuples: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
            for &len in doubled.parts() {
                let words = gen::all_row_words(len, 4);
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
            for words in tuples {
                let t = TableauTuple::rows(words).unwrap();
                let pair = rsk(&row_tuple_to_biword(&t));
                for i in 1..=lambda.len() as u32 {
                    let qi = sub_biword_rsk(&t, i).q;
                    assert_eq!(rectify(&subtableau(&pair.q, i).unwrap()), qi);
                }
            }
        }
    }

    let mut rng = gen::rng(106);
    for _ in 0..1000 {
        let size = rng.random_range(1..=5);
        let (lambda, t) = gen::random_doubled_row_tuple(&mut rng, size, 8);
        let pair = rsk(&row_tuple_to_biword(&t));
        for i in 1..=lambda.len() as u32 {
            let qi = sub_biword_rsk(&t, i).q;
            assert_eq!(rectify(&subtableau(&pair.q, i).unwrap()), qi);
        }
    }
    for _ in 0..1000 {
        let size = rng.random_range(1..=4);
        let (lambda, t) = gen::random_doubled_column_tuple(&mut rng, size, 9);
        let pair = rsk_tilde(&column_tuple_to_burge(&t));
        for i in 1..=lambda.len() as u32 {
            let qi = sub_burge_rsk_tilde(&t, i).q;
            assert_eq!(
                rectify(&subtableau(&pair.q, i).unwrap().conjugate()),
                qi.conjugate()
            );
        }
    }
    finish("6 (recording dissection)", start, Duration::from_secs(60));
}

/// Criterion 7: slide-order independence and content conservation on
/// 10³ random skew tableaux, and the worked product (with the published
/// tableau's dropped cell restored — jeu de taquin preserves the cell
/// count 14 + 11 = 25).
#[test]
fn criterion_07_jdt_soundness() {
    let start = Instant::now();
    let mut rng = gen::rng(107);
    for case in 0..1000u64 {
        let size = rng.random_range(1..=12);
        let t = gen::random_skew_tableau(&mut rng, size, 14);
        let reference = rectify(&t);
        assert!(reference.shape().is_straight());
        assert_eq!(reference.content(), t.content(), "case {case}");
        for _ in 0..2 {
            let mut current = t.clone();
            loop {
                let corners = inner_corners(current.shape());
                if corners.is_empty() {
                    break;
                }
                let corner = corners[rng.random_range(0..corners.len())];
                current = jdt_slide(&current, corner).unwrap();
                assert!(current.is_semistandard());
            }
            assert_eq!(current, reference, "case {case}");
        }
    }

    let t1 = tab(&[&[1, 1, 2, 2, 3, 3, 3], &[2, 3, 3, 4], &[4, 4, 5]]);
    let t2 = tab(&[&[1, 2, 2, 2, 2], &[2, 3, 3], &[3, 4], &[5]]);
    let expected = tab(&[
        &[1, 1, 1, 2, 2, 2, 2, 2, 2, 3],
        &[2, 2, 3, 3, 3, 3, 3, 3],
        &[3, 4, 4, 4],
        &[4, 5],
        &[5],
    ]);
    assert_eq!(product(&t1, &t2), expected);
    finish("7 (jdt soundness)", start, Duration::from_secs(30));
}

/// Criterion 8: the plactic property on 10³ random pairs — inserting
/// the concatenated reading words gives the rectified star product.
#[test]
fn criterion_08_plactic_property() {
    let start = Instant::now();
    let mut rng = gen::rng(108);
    for _ in 0..1000 {
        let s1 = rng.random_range(1..=7);
        let t1 = rectify(&gen::random_skew_tableau(&mut rng, s1, 9));
        let s2 = rng.random_range(1..=7);
        let t2 = rectify(&gen::random_skew_tableau(&mut rng, s2, 9));
        let mut word = t1.reading_word();
        word.extend(t2.reading_word());
        assert_eq!(insert_word(&word).p, rectify(&star_product(&t1, &t2)));
    }
    finish("8 (plactic property)", start, Duration::from_secs(30));
}

/// Criterion 9: for n ≤ 6 and both shapes the Yamanouchi enumeration is
/// exactly the explicit family — one tableau per weight, cospin j — and
/// the cospin-parity bucketing equals the closed-form tables.
#[test]
fn criterion_09_domino_verification() {
    let start = Instant::now();
    for n in 1..=6u32 {
        for basis in [Basis::H, Basis::E] {
            let shape = square_shape(basis, n);
            let found = enumerate_yamanouchi_domino_tableaux(&shape, 2 * n);
            assert_eq!(found.len(), n as usize + 1, "{basis} n={n}");
            let mut weights = BTreeMap::new();
            for d in &found {
                let content = Partition::new(d.content()).unwrap();
                *weights.entry(content).or_insert(0u32) += 1;
            }
            for j in 0..=n {
                let member = family_member(basis, n, j);
                assert!(found.contains(&member), "{basis} n={n} j={j}");
                assert_eq!(cospin(&member), j);
                let weight = Partition::new(member.content()).unwrap();
                assert_eq!(weights.get(&weight), Some(&1), "{basis} n={n} j={j}");
            }
            assert_eq!(
                littlewood_via_domino(n, basis),
                littlewood_closed_form(basis, n)
            );
        }
    }
    finish("9 (domino verification)", start, Duration::from_secs(60));
}

/// Criterion 10: both product identities for the split of a square,
/// for all tuples of generators from {h_1, h_2, e_2} up to 3 factors.
#[test]
fn criterion_10_symantisym() {
    let start = Instant::now();
    let h1 = SymFunc::h(&pt(&[1]));
    let h2 = SymFunc::h(&pt(&[2]));
    let e2 = SymFunc::e(&pt(&[2]));
    let gens = [&h1, &h2, &e2];
    for len in 1..=3usize {
        let mut idx = vec![0usize; len];
        loop {
            let gs: Vec<SymFunc> = idx.iter().map(|&i| gens[i].clone()).collect();
            assert!(verify_symantisym(&gs), "tuple {idx:?}");
            let mut pos = 0;
            while pos < len {
                idx[pos] += 1;
                if idx[pos] < gens.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == len {
                break;
            }
        }
    }
    finish("10 (symantisym)", start, Duration::from_secs(60));
}

/// Criterion 11: skew tables equal the oracle products
/// `s_μ·(sym/antisym part)` for all |μ| ≤ 2, |λ| ≤ 3.
#[test]
fn criterion_11_skew_corollaries() {
    let start = Instant::now();
    for mu_weight in 0..=2u32 {
        for mu in Partition::all_of(mu_weight) {
            let smu = SymFunc::s(&mu);
            for lambda_weight in 1..=3u32 {
                for la in Partition::all_of(lambda_weight) {
                    let (sym, antisym) = split_square(&SymFunc::h(&la));
                    assert_table_equals_split(
                        &decompose_skew_h_square(&mu, &la),
                        &(&smu * &sym),
                        &(&smu * &antisym),
                    );
                    let (sym, antisym) = split_square(&SymFunc::e(&la));
                    assert_table_equals_split(
                        &decompose_skew_e_square(&mu, &la),
                        &(&smu * &sym),
                        &(&smu * &antisym),
                    );
                }
            }
        }
    }
    finish("11 (skew corollaries)", start, Duration::from_secs(120));
}

/// Criterion 12: fixed-seed verify suites are byte-identical at 1 and
/// 4 threads (flag and environment variable paths).
#[test]
fn criterion_12_determinism() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_plethyx");
    let run = |extra: &[&str], env_threads: Option<&str>| {
        let mut cmd = std::process::Command::new(bin);
        cmd.args(extra);
        if let Some(t) = env_threads {
            cmd.env("PLETHYX_THREADS", t);
        }
        let out = cmd.output().expect("binary runs");
        assert!(out.status.success(), "verify failed: {extra:?}");
        out.stdout
    };
    for suite_args in [
        vec!["verify", "--suite", "rsk-roundtrip", "--count", "4000", "--seed", "7"],
        vec!["verify", "--suite", "oracle", "--max-weight", "4"],
        vec!["verify", "--suite", "corollary-qi", "--count", "300", "--seed", "11"],
    ] {
        let mut one = suite_args.clone();
        one.extend(["--threads", "1"]);
        let mut four = suite_args.clone();
        four.extend(["--threads", "4"]);
        let out_one = run(&one, None);
        let out_four = run(&four, None);
        assert_eq!(out_one, out_four, "thread count changed bytes: {suite_args:?}");
        let out_env = run(&suite_args, Some("3"));
        assert_eq!(out_one, out_env, "env threads changed bytes: {suite_args:?}");
    }
    finish("12 (determinism)", start, Duration::from_secs(60));
}
