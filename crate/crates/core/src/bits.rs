//! Packed bit vectors for supports and binary words.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> BitSet {
        BitSet { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set_to(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[cfg(test)]
    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| BitIter { word: w, base: wi * 64 })
    }

    /// Positions in `0..len` that are clear.
    pub fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        let len = self.len;
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let valid = if (wi + 1) * 64 <= len { !0u64 } else { (1u64 << (len % 64)) - 1 };
            BitIter { word: !w & valid, base: wi * 64 }
        })
    }
}

struct BitIter {
    word: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_and_zeros_partition() {
        let mut b = BitSet::new(70);
        for i in [0, 3, 63, 64, 69] {
            b.set_to(i, true);
        }
        let ones: Vec<usize> = b.ones().collect();
        assert_eq!(ones, [0, 3, 63, 64, 69]);
        assert_eq!(b.zeros().count(), 65);
        assert!(b.zeros().all(|i| i < 70 && !b.get(i)));
        assert_eq!(b.count(), 5);
    }

    #[test]
    fn subset_and_xor() {
        let mut a = BitSet::new(10);
        let mut b = BitSet::new(10);
        a.set_to(2, true);
        b.set_to(2, true);
        b.set_to(5, true);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        b.xor_assign(&a);
        assert_eq!(b.ones().collect::<Vec<_>>(), [5]);
    }
}
