#![allow(dead_code)]

use std::collections::BTreeSet;

use mincode::{Codeword, LinearCode, Symbol};

/// Parses a JSON array of integer arrays.
pub fn int_rows(text: &str) -> Vec<Vec<usize>> {
    text.split(']')
        .map(|chunk| chunk.trim_start_matches(|c: char| c == ',' || c == '[' || c.is_whitespace()))
        .filter(|chunk| !chunk.is_empty())
        .map(|chunk| chunk.split(',').map(|x| x.trim().parse().unwrap()).collect())
        .collect()
}

pub fn words(text: &str) -> BTreeSet<Vec<Symbol>> {
    int_rows(text).into_iter().map(|r| r.into_iter().map(|x| x as Symbol).collect()).collect()
}

pub fn sets(text: &str) -> BTreeSet<Vec<usize>> {
    int_rows(text).into_iter().collect()
}

pub fn covers(big: &[Symbol], small: &[Symbol]) -> bool {
    small.iter().zip(big).all(|(&a, &b)| a == 0 || b != 0)
}

/// Pairwise cover scan straight from the definition: c is minimal iff every
/// nonzero codeword it covers is a multiple of it.
pub fn naive_minimal(code: &LinearCode) -> bool {
    let all = code.codewords(u64::MAX).unwrap();
    all.iter().filter(|c| c.iter().any(|&x| x != 0)).all(|c| {
        all.iter()
            .filter(|d| d.iter().any(|&x| x != 0) && covers(c, d))
            .all(|d| code.fq().proportional(c, d).is_some())
    })
}

/// Codewords with first coordinate 1 that cover no other such codeword.
pub fn naive_minimal_codewords(code: &LinearCode) -> BTreeSet<Vec<Symbol>> {
    let ones: Vec<Vec<Symbol>> = code.codewords(u64::MAX).unwrap().into_iter().filter(|c| c[0] == 1).collect();
    ones.iter()
        .filter(|c| !ones.iter().any(|d| d != *c && covers(c, d)))
        .cloned()
        .collect()
}

pub fn symbols_of(c: &[Codeword]) -> BTreeSet<Vec<Symbol>> {
    c.iter().map(|w| w.symbols().to_vec()).collect()
}
