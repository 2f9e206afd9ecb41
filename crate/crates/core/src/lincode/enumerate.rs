use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::LinearCode;
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::galois::Symbol;

/// Visits every codeword of a code in lexicographic message order (the last
/// message symbol varies fastest), updating the current word incrementally.
///
/// Binary codes are walked as packed bit rows; other alphabets keep a dense
/// symbol vector next to the packed support.
pub struct Walker<'a> {
    code: &'a LinearCode,
    binary: Option<Vec<BitSet>>,
    // deltas[t * q + j] = (sym(j + 1 mod q) - sym(j)) * row_t
    deltas: Vec<Vec<Symbol>>,
}

/// The codeword currently under the cursor.
pub struct Visit<'v> {
    message: &'v [Symbol],
    support: &'v BitSet,
    symbols: Option<&'v [Symbol]>,
}

impl Visit<'_> {
    pub fn message(&self) -> &[Symbol] {
        self.message
    }

    pub fn weight(&self) -> usize {
        self.support.count()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.len() == 0
    }

    #[inline]
    pub fn symbol(&self, i: usize) -> Symbol {
        match self.symbols {
            Some(s) => s[i],
            None => self.support.get(i) as Symbol,
        }
    }

    pub fn support(&self) -> Vec<usize> {
        self.support.ones().collect()
    }

    pub(crate) fn support_bits(&self) -> &BitSet {
        self.support
    }

    pub fn to_vec(&self) -> Vec<Symbol> {
        match self.symbols {
            Some(s) => s.to_vec(),
            None => (0..self.support.len()).map(|i| self.support.get(i) as Symbol).collect(),
        }
    }
}

impl<'a> Walker<'a> {
    pub(crate) fn new(code: &'a LinearCode, limit: u64) -> Result<Walker<'a>> {
        let size = code.size().ok_or(Error::TooLarge(u64::MAX))?;
        if size > limit {
            return Err(Error::TooLarge(size));
        }
        let fq = code.fq();
        let q = fq.q() as usize;
        if q == 2 {
            let rows = (0..code.k())
                .map(|r| {
                    let mut b = BitSet::new(code.n());
                    for (i, &x) in code.generator().row(r).iter().enumerate() {
                        b.set_to(i, x != 0);
                    }
                    b
                })
                .collect();
            return Ok(Walker { code, binary: Some(rows), deltas: Vec::new() });
        }
        let mut deltas = Vec::with_capacity(code.k() * q);
        for t in 0..code.k() {
            let row = code.generator().row(t);
            for j in 0..q {
                let step = fq.sub(((j + 1) % q) as Symbol, j as Symbol);
                let mut d = vec![0; code.n()];
                fq.axpy(&mut d, step, row);
                deltas.push(d);
            }
        }
        Ok(Walker { code, binary: None, deltas })
    }

    pub fn for_each(self, mut f: impl FnMut(&Visit<'_>)) {
        let _ = self.try_for_each(|v| {
            f(v);
            ControlFlow::<()>::Continue(())
        });
    }

    /// Stops at the first `Break` and returns its payload.
    pub fn try_for_each<B>(self, mut f: impl FnMut(&Visit<'_>) -> ControlFlow<B>) -> Option<B> {
        let k = self.code.k();
        let n = self.code.n();
        let q = self.code.q() as usize;
        let fq = self.code.fq();
        let mut message = vec![0 as Symbol; k];
        let mut support = BitSet::new(n);
        let mut word = vec![0 as Symbol; if self.binary.is_some() { 0 } else { n }];

        loop {
            let visit = Visit {
                message: &message,
                support: &support,
                symbols: if self.binary.is_some() { None } else { Some(&word) },
            };
            if let ControlFlow::Break(b) = f(&visit) {
                return Some(b);
            }

            // Odometer step; digits that wrap from q - 1 back to 0 also
            // contribute their delta.
            let mut t = k;
            loop {
                if t == 0 {
                    return None;
                }
                t -= 1;
                let digit = message[t] as usize;
                match &self.binary {
                    Some(rows) => support.xor_assign(&rows[t]),
                    None => {
                        let delta = &self.deltas[t * q + digit];
                        for (i, (&d, w)) in delta.iter().zip(word.iter_mut()).enumerate() {
                            if d != 0 {
                                let old = *w;
                                *w = fq.add(old, d);
                                if (old == 0) != (*w == 0) {
                                    support.set_to(i, *w != 0);
                                }
                            }
                        }
                    }
                }
                if digit == q - 1 {
                    message[t] = 0;
                } else {
                    message[t] = (digit + 1) as Symbol;
                    break;
                }
            }
        }
    }
}
