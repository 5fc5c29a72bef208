#![allow(dead_code)]

use hcc::presentations::{FreeWord, Letter};
use proptest::prelude::*;

/// Textbook row reduction over F_p, independent of the crate.
pub fn oracle_rank(rows: &[Vec<u32>], p: u32) -> usize {
    let mut rows: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect();
    let p = p as u64;
    let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(k) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, k);
        let f = inv(rows[rank][c]);
        let pivot: Vec<u64> = rows[rank].iter().map(|x| x * f % p).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let m = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - m * y % p) % p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((0..n, any::<bool>()), 0..=max_len)
        .prop_map(|ls| FreeWord::from_letters(ls.into_iter().map(|(g, i)| Letter::new(g, i))))
}
