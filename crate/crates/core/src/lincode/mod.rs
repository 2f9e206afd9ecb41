//! Linear codes over GF(q): generator matrices, duals, weight
//! distributions, irreducible cyclic codes and shortening.
//!
//! Coordinates are 0-based. Coordinate 0 is the one that carries the secret
//! when a code is used for secret sharing.

mod cyclic;
mod enumerate;
mod shorten;

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use cyclic::{condensed_code, condensed_length, cyclic_code, cyclic_codeword};
pub use enumerate::{Visit, Walker};
pub use shorten::{shorten_once, shorten_steps, shorten_tail};

use crate::error::{Error, Result};
use crate::galois::{Fq, Symbol};
use crate::matrix::Matrix;

/// Default cap on the number of codewords an exhaustive routine may visit.
pub const DEFAULT_ENUM_LIMIT: u64 = 1 << 26;

/// Which construction produced a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Cyclic { q: u64, m: u32, n_div: u64 },
    /// The length-`l` section of C(q, m, N); the full code repeats it `t`
    /// times scaled by powers of `e`.
    Condensed { q: u64, m: u32, n_div: u64, l: usize, t: usize, e: Symbol },
    /// `parent` with its last `steps` coordinates shortened away.
    Shortened { parent: Box<Provenance>, steps: usize },
    Dual { of: Box<Provenance> },
    Explicit,
}

/// A linear [n, k; q] code. The generator is kept in reduced row echelon
/// form, so two codes are equal iff their generators are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    fq: Fq,
    gen: Matrix,
    pivots: Vec<usize>,
    provenance: Provenance,
}

impl LinearCode {
    /// Row-reduces `rows` and keeps the nonzero rows, so k is the rank.
    pub fn from_generator(fq: Fq, rows: Matrix, provenance: Provenance) -> Result<LinearCode> {
        if rows.cols() == 0 {
            return Err(Error::InvalidField("code length must be positive"));
        }
        for r in 0..rows.rows() {
            for &x in rows.row(r) {
                fq.check(x as u32)?;
            }
        }
        let mut gen = rows;
        let pivots = gen.rref(&fq);
        gen.truncate_rows(pivots.len());
        Ok(LinearCode { fq, gen, pivots, provenance })
    }

    /// Convenience for explicit codes given as rows of integer symbols.
    pub fn from_rows(fq: Fq, rows: &[Vec<u32>]) -> Result<LinearCode> {
        let n = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Symbol>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| fq.check(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        LinearCode::from_generator(fq, Matrix::from_rows(&rows, n)?, Provenance::Explicit)
    }

    pub fn fq(&self) -> &Fq {
        &self.fq
    }

    pub fn q(&self) -> u32 {
        self.fq.q()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> LinearCode {
        self.provenance = provenance;
        self
    }

    pub fn column(&self, j: usize) -> Vec<Symbol> {
        self.gen.column(j)
    }

    /// q^k, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        (self.q() as u64).checked_pow(self.k() as u32)
    }

    pub fn encode(&self, message: &[Symbol]) -> Vec<Symbol> {
        self.gen.left_mul(&self.fq, message)
    }

    /// The message u with u G = `word`, if `word` is a codeword.
    pub fn message_of(&self, word: &[Symbol]) -> Option<Vec<Symbol>> {
        if word.len() != self.n() {
            return None;
        }
        // RREF: the message is read off the pivot coordinates.
        let u: Vec<Symbol> = self.pivots.iter().map(|&c| word[c]).collect();
        (self.encode(&u) == word).then_some(u)
    }

    pub fn contains(&self, word: &[Symbol]) -> bool {
        self.message_of(word).is_some()
    }

    pub fn first_zero_column(&self) -> Option<usize> {
        (0..self.n()).find(|&j| (0..self.k()).all(|r| self.gen.get(r, j) == 0))
    }

    /// First pair of distinct nonzero columns that are GF(q)-multiples of
    /// each other, ordered by the second index.
    pub fn proportional_columns(&self) -> Option<(usize, usize)> {
        let mut seen: BTreeMap<Vec<Symbol>, usize> = BTreeMap::new();
        for j in 0..self.n() {
            let mut col = self.column(j);
            let Some(lead) = col.iter().copied().find(|&x| x != 0) else {
                continue;
            };
            let inv = self.fq.inv(lead);
            self.fq.scale(&mut col, inv);
            if let Some(&i) = seen.get(&col) {
                return Some((i, j));
            }
            seen.insert(col, j);
        }
        None
    }

    /// The dual has minimum distance > 2 iff the generator has no zero
    /// column and no two proportional columns.
    pub fn dual_distance_exceeds_two(&self) -> bool {
        self.first_zero_column().is_none() && self.proportional_columns().is_none()
    }

    pub fn walker(&self, limit: u64) -> Result<Walker<'_>> {
        Walker::new(self, limit)
    }

    /// Every codeword, in lexicographic message order.
    pub fn codewords(&self, limit: u64) -> Result<Vec<Vec<Symbol>>> {
        let mut out = Vec::new();
        self.walker(limit)?.for_each(|v| out.push(v.to_vec()));
        Ok(out)
    }
}

/// A word together with its support.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword {
    symbols: Vec<Symbol>,
    support: Vec<usize>,
}

impl Codeword {
    pub fn new(symbols: Vec<Symbol>) -> Codeword {
        let support = symbols.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect();
        Codeword { symbols, support }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Sorted nonzero positions.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }
}

impl From<Vec<Symbol>> for Codeword {
    fn from(symbols: Vec<Symbol>) -> Codeword {
        Codeword::new(symbols)
    }
}

/// Number of codewords of each Hamming weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn nonzero_weights(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts.keys().copied().filter(|&w| w > 0)
    }

    pub fn min_nonzero(&self) -> Option<usize> {
        self.nonzero_weights().next()
    }

    pub fn max_nonzero(&self) -> Option<usize> {
        self.nonzero_weights().last()
    }
}

impl FromIterator<(usize, u64)> for WeightDistribution {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        WeightDistribution { counts: iter.into_iter().collect() }
    }
}

pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    weight_distribution_within(code, DEFAULT_ENUM_LIMIT)
}

pub fn weight_distribution_within(code: &LinearCode, limit: u64) -> Result<WeightDistribution> {
    let mut counts = BTreeMap::new();
    code.walker(limit)?.for_each(|v| *counts.entry(v.weight()).or_insert(0u64) += 1);
    Ok(WeightDistribution { counts })
}

/// Smallest nonzero weight.
pub fn minimum_distance(code: &LinearCode) -> Result<usize> {
    minimum_distance_within(code, DEFAULT_ENUM_LIMIT)
}

pub fn minimum_distance_within(code: &LinearCode, limit: u64) -> Result<usize> {
    weight_distribution_within(code, limit)?.min_nonzero().ok_or(Error::EmptyCode)
}

/// The dual code. The dual of the full space is the zero code (k = 0).
pub fn dual(code: &LinearCode) -> LinearCode {
    let fq = code.fq.clone();
    let n = code.n();
    let rows = if code.k() == 0 {
        let mut id = Matrix::zeros(n, n);
        for i in 0..n {
            id.set(i, i, 1);
        }
        id
    } else {
        code.gen.kernel(&fq)
    };
    let provenance = Provenance::Dual { of: Box::new(code.provenance.clone()) };
    LinearCode::from_generator(fq, rows, provenance).expect("kernel of a valid generator is valid")
}
