use alloc::vec;
use alloc::vec::Vec;

use super::field::{Elem, Field};
use crate::arith::prime_power;
use crate::error::{Error, Result};

/// A GF(q) symbol, `0..q`.
pub type Symbol = u8;

/// GF(q) as a symbol alphabet with full operation tables, q <= 256.
///
/// For prime q the symbols are residues. For q = p^s with s > 1, symbol 0
/// is zero and symbol j + 1 is g^j for a fixed generator g of GF(q)*;
/// `subfield_modulus` is the minimal polynomial of g over GF(p), which pins
/// the addition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fq {
    p: u32,
    s: u32,
    q: u32,
    subfield_modulus: Option<Vec<u32>>,
    add: Vec<Symbol>,
    mul: Vec<Symbol>,
    neg: Vec<Symbol>,
    inv: Vec<Symbol>,
}

impl Fq {
    /// GF(q) with the default ordering: residues for primes, powers of the
    /// default primitive element of GF(q) otherwise.
    pub fn new(q: u64) -> Result<Fq> {
        let (p, s) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > 256 {
            return Err(Error::AlphabetTooLarge(q));
        }
        if s == 1 {
            Ok(Self::prime(p as u32))
        } else {
            Self::from_field(&Field::new(p, s, 1, None)?)
        }
    }

    /// GF(p^s) ordered by powers of a root of `modulus`, which must be a
    /// primitive polynomial of degree s.
    pub fn with_subfield_modulus(p: u64, s: u32, modulus: &[u32]) -> Result<Fq> {
        let field = Field::with_generator(p, s, 1, Some(modulus), Some(&[0, 1]))?;
        Self::from_field(&field)
    }

    pub fn prime(p: u32) -> Fq {
        let q = p as usize;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for a in 0..q {
            neg[a] = ((q - a) % q) as Symbol;
            for b in 0..q {
                add[a * q + b] = ((a + b) % q) as Symbol;
                mul[a * q + b] = ((a * b) % q) as Symbol;
                if a * b % q == 1 {
                    inv[a] = b as Symbol;
                }
            }
        }
        Fq { p, s: 1, q: p, subfield_modulus: None, add, mul, neg, inv }
    }

    /// The subfield GF(q) of `field`, with symbols from
    /// [`Field::subfield_index`].
    pub fn from_field(field: &Field) -> Result<Fq> {
        let q = field.q();
        if q > 256 {
            return Err(Error::AlphabetTooLarge(q));
        }
        if field.s() == 1 {
            return Ok(Self::prime(field.p()));
        }
        let elems: Vec<Elem> =
            (0..q as u32).map(|i| field.subfield_element(i)).collect::<Result<_>>()?;
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for a in 0..qs {
            neg[a] = field.subfield_index(field.neg(elems[a]))? as Symbol;
            if let Some(x) = field.inv(elems[a]) {
                inv[a] = field.subfield_index(x)? as Symbol;
            }
            for b in 0..qs {
                add[a * qs + b] = field.subfield_index(field.add(elems[a], elems[b]))? as Symbol;
                mul[a * qs + b] = field.subfield_index(field.mul(elems[a], elems[b]))? as Symbol;
            }
        }
        Ok(Fq {
            p: field.p(),
            s: field.s(),
            q: q as u32,
            subfield_modulus: Some(field.minimal_polynomial(field.subfield_generator())),
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn subfield_modulus(&self) -> Option<&[u32]> {
        self.subfield_modulus.as_deref()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        (0..self.q).map(|s| s as Symbol)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Symbol> {
        (1..self.q).map(|s| s as Symbol)
    }

    #[inline]
    pub fn add(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: Symbol) -> Symbol {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: Symbol, b: Symbol) -> Symbol {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Inverse of a nonzero symbol; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: Symbol) -> Symbol {
        self.inv[a as usize]
    }

    pub fn div(&self, a: Symbol, b: Symbol) -> Symbol {
        self.mul(a, self.inv(b))
    }

    pub fn check(&self, symbol: u32) -> Result<Symbol> {
        if symbol < self.q {
            Ok(symbol as Symbol)
        } else {
            Err(Error::SymbolOutOfRange { symbol, q: self.q })
        }
    }

    pub fn dot(&self, a: &[Symbol], b: &[Symbol]) -> Symbol {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// `acc += c * v`, elementwise.
    pub fn axpy(&self, acc: &mut [Symbol], c: Symbol, v: &[Symbol]) {
        if c == 0 {
            return;
        }
        let row = &self.mul[c as usize * self.q as usize..(c as usize + 1) * self.q as usize];
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = self.add(*a, row[x as usize]);
        }
    }

    pub fn scale(&self, v: &mut [Symbol], c: Symbol) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Whether `a = c * b` for some nonzero c; `None` when they are not
    /// proportional. Zero vectors are proportional to nothing.
    pub fn proportional(&self, a: &[Symbol], b: &[Symbol]) -> Option<Symbol> {
        let i = b.iter().position(|&x| x != 0)?;
        if a[i] == 0 {
            return None;
        }
        let c = self.div(a[i], b[i]);
        a.iter().zip(b).all(|(&x, &y)| x == self.mul(c, y)).then_some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &Fq) {
        for a in f.symbols() {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in f.symbols() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in f.symbols() {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn prime_and_extension_tables_are_fields() {
        for q in [2u64, 3, 4, 5, 8, 9, 16, 25, 27] {
            check_axioms(&Fq::new(q).unwrap());
        }
    }

    #[test]
    fn power_ordering_for_extensions() {
        let f = Fq::new(9).unwrap();
        // symbol j+1 is g^j, so symbol 2 generates and products add exponents.
        for a in 1..9u8 {
            for b in 1..9u8 {
                let expect = ((a as u32 - 1 + b as u32 - 1) % 8 + 1) as u8;
                assert_eq!(f.mul(a, b), expect);
            }
        }
    }

    #[test]
    fn subfield_of_extension_round_trips_through_modulus() {
        let field = Field::new(2, 2, 3, None).unwrap();
        let a = Fq::from_field(&field).unwrap();
        let b = Fq::with_subfield_modulus(2, 2, a.subfield_modulus().unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert_eq!(Fq::new(6), Err(Error::NotPrimePower(6)));
        assert_eq!(Fq::new(512), Err(Error::AlphabetTooLarge(512)));
    }

    #[test]
    fn proportionality() {
        let f = Fq::prime(3);
        assert_eq!(f.proportional(&[2, 0, 1], &[1, 0, 2]), Some(2));
        assert_eq!(f.proportional(&[2, 0, 1], &[1, 0, 1]), None);
        assert_eq!(f.proportional(&[0, 0], &[0, 0]), None);
    }
}
