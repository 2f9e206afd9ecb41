use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{checked_pow, is_prime, prime_factors, prime_power};
use crate::error::{Error, Result};
use crate::poly;

/// Fields up to this order get discrete log/antilog tables.
pub const LOG_TABLE_LIMIT: u64 = 1 << 20;

/// Largest field order accepted by [`Field::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 32;

/// Largest subfield for which a symbol index is cached.
const SUBFIELD_INDEX_LIMIT: u64 = 1 << 16;

/// An element of GF(r), stored as its polynomial-basis coefficient vector
/// packed base p (constant term in the least significant digit).
///
/// Elements carry no reference to their field; every operation goes
/// through the [`Field`] that produced them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn raw(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

#[derive(Clone, Debug)]
struct Subfield {
    elems: Vec<Elem>,
    index: BTreeMap<Elem, u32>,
}

/// GF(r) with r = q^m and q = p^s, represented over GF(p) by a single
/// monic irreducible modulus of degree s*m. GF(q) is the subfield fixed by
/// x -> x^q.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    s: u32,
    m: u32,
    q: u64,
    order: u64,
    modulus: Vec<u32>,
    digit: Vec<u64>,
    alpha: Elem,
    group_factors: Vec<u64>,
    logs: Option<LogTables>,
    subfield: Option<Subfield>,
}

impl Field {
    /// Builds GF(p^(s*m)). Without a modulus, the lexicographically lowest
    /// monic irreducible polynomial (compared from the constant term up)
    /// whose root x is primitive is used, and x becomes the primitive
    /// element.
    pub fn new(p: u64, s: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        Self::with_generator(p, s, m, modulus, None)
    }

    /// Like [`Field::new`] but with an asserted primitive element, given as
    /// coefficients over GF(p).
    pub fn with_generator(
        p: u64,
        s: u32,
        m: u32,
        modulus: Option<&[u32]>,
        generator: Option<&[u32]>,
    ) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 || m == 0 {
            return Err(Error::InvalidField("s and m must be positive"));
        }
        let degree = s.checked_mul(m).ok_or(Error::InvalidField("degree overflow"))?;
        let order = checked_pow(p, degree)
            .filter(|&r| r <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(degree)))?;
        let q = checked_pow(p, s).expect("q <= r");
        let p32 = p as u32;

        let modulus = match modulus {
            Some(f) => {
                let f = validate_modulus(f, p32, degree)?;
                if !poly::is_irreducible(&f, p32) {
                    return Err(Error::ReducibleModulus);
                }
                f
            }
            None => search_modulus(p32, degree, order)?,
        };

        let digit = (0..=degree).map(|i| p.pow(i)).collect();
        let mut field = Field {
            p: p32,
            s,
            m,
            q,
            order,
            modulus,
            digit,
            alpha: Elem::ZERO,
            group_factors: prime_factors(order - 1),
            logs: None,
            subfield: None,
        };

        field.alpha = match generator {
            Some(g) => {
                let g = field.elem_from_coeffs(g)?;
                if !field.is_primitive(g) {
                    return Err(Error::NotPrimitive);
                }
                g
            }
            None => field.find_primitive()?,
        };
        if order <= LOG_TABLE_LIMIT {
            field.logs = Some(field.build_logs());
        }
        if s > 1 && q <= SUBFIELD_INDEX_LIMIT {
            field.subfield = Some(field.build_subfield());
        }
        Ok(field)
    }

    /// GF(q^m) for a prime power q.
    pub fn extension(q: u64, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        let (p, s) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, s, m, modulus)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> u32 {
        self.s * self.m
    }

    /// Size of the subfield GF(q).
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Size r of the whole field.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The cached primitive element alpha.
    pub fn primitive(&self) -> Elem {
        self.alpha
    }

    pub fn has_log_tables(&self) -> bool {
        self.logs.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    pub fn elem_from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.degree() as usize {
            return Err(Error::LengthMismatch { expected: self.degree() as usize, got: coeffs.len() });
        }
        let mut v = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.p {
                return Err(Error::SymbolOutOfRange { symbol: c, q: self.p });
            }
            v += c as u64 * self.digit[i];
        }
        Ok(Elem(v))
    }

    pub fn coeffs(&self, e: Elem) -> Vec<u32> {
        let mut out = vec![0u32; self.degree() as usize];
        self.unpack(e, &mut out);
        out
    }

    fn unpack(&self, e: Elem, out: &mut [u32]) {
        let mut v = e.0;
        for c in out.iter_mut() {
            *c = (v % self.p as u64) as u32;
            v /= self.p as u64;
        }
    }

    fn pack(&self, coeffs: &[u32]) -> Elem {
        Elem(coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p as u64 + c as u64))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let p = self.p as u64;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let p = self.p as u64;
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplication by a GF(p) scalar.
    pub fn scale(&self, a: Elem, c: u32) -> Elem {
        let mut coeffs = self.coeffs(a);
        for x in coeffs.iter_mut() {
            *x = ((*x as u64 * c as u64) % self.p as u64) as u32;
        }
        self.pack(&coeffs)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        match &self.logs {
            Some(t) => {
                let e = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % (self.order - 1);
                Elem(t.exp[e as usize] as u64)
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let d = self.degree() as usize;
        let p = self.p as u64;
        let mut x = vec![0u32; d];
        let mut y = vec![0u32; d];
        self.unpack(a, &mut x);
        self.unpack(b, &mut y);
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        // Reduce with the monic modulus: x^d = -(f_0 + ... + f_{d-1} x^{d-1}).
        for top in (d..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &fi) in self.modulus[..d].iter().enumerate() {
                let idx = top - d + i;
                prod[idx] = (prod[idx] + (p - c) * fi as u64) % p;
            }
        }
        let coeffs: Vec<u32> = prod[..d].iter().map(|&c| c as u32).collect();
        self.pack(&coeffs)
    }

    pub fn pow(&self, a: Elem, exp: u64) -> Elem {
        if exp == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        if let Some(t) = &self.logs {
            let e = (t.log[a.0 as usize] as u128 * exp as u128) % (self.order as u128 - 1);
            return Elem(t.exp[e as usize] as u64);
        }
        self.pow_slow(a, exp)
    }

    fn pow_slow(&self, a: Elem, mut exp: u64) -> Elem {
        let mut acc = Elem::ONE;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, self.order - 2))
        }
    }

    /// alpha^e.
    pub fn alpha_pow(&self, e: u64) -> Elem {
        match &self.logs {
            Some(t) => Elem(t.exp[(e % (self.order - 1)) as usize] as u64),
            None => self.pow_slow(self.alpha, e % (self.order - 1)),
        }
    }

    /// Discrete logarithm to base alpha. Available only for fields with log
    /// tables.
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        self.logs.as_ref().map(|t| t.log[a.0 as usize] as u64)
    }

    /// The Frobenius map x -> x^q over GF(q).
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.q)
    }

    /// Checks the order of `a` against every maximal proper divisor of r - 1.
    /// Does not rely on the log tables.
    pub fn is_primitive(&self, a: Elem) -> bool {
        if a.is_zero() {
            return false;
        }
        let n = self.order - 1;
        if self.pow_slow(a, n) != Elem::ONE {
            return false;
        }
        self.group_factors.iter().all(|&l| self.pow_slow(a, n / l) != Elem::ONE)
    }

    /// Multiplicative order by brute force over the divisors of r - 1.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut ord = self.order - 1;
        for &l in &self.group_factors {
            while ord % l == 0 && self.pow_slow(a, ord / l) == Elem::ONE {
                ord /= l;
            }
        }
        Some(ord)
    }

    fn find_primitive(&self) -> Result<Elem> {
        let x = self.pack(&{
            let mut v = vec![0u32; self.degree() as usize];
            if v.len() > 1 {
                v[1] = 1;
            } else {
                v[0] = (self.p - self.modulus[0]) % self.p;
            }
            v
        });
        if self.is_primitive(x) {
            return Ok(x);
        }
        (1..self.order).map(Elem).find(|&e| self.is_primitive(e)).ok_or(Error::NoPrimitiveRootFound)
    }

    fn build_logs(&self) -> LogTables {
        let n = (self.order - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![0u32; self.order as usize];
        let mut cur = Elem::ONE;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur.0 as u32;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_slow(cur, self.alpha);
        }
        LogTables { exp, log }
    }

    fn build_subfield(&self) -> Subfield {
        let g = self.pow(self.alpha, (self.order - 1) / (self.q - 1));
        let mut elems = Vec::with_capacity(self.q as usize);
        elems.push(Elem::ZERO);
        let mut cur = Elem::ONE;
        for _ in 0..self.q - 1 {
            elems.push(cur);
            cur = self.mul(cur, g);
        }
        let index = elems.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();
        Subfield { elems, index }
    }

    /// Generator g = alpha^((r-1)/(q-1)) of GF(q)*.
    pub fn subfield_generator(&self) -> Elem {
        self.pow(self.alpha, (self.order - 1) / (self.q - 1))
    }

    pub fn in_subfield(&self, a: Elem) -> bool {
        if self.s == 1 {
            // GF(p) is exactly the constant polynomials.
            return a.0 < self.p as u64;
        }
        self.frobenius(a) == a
    }

    /// Tr_{r/q}(b) = b + b^q + ... + b^(q^(m-1)).
    pub fn trace(&self, b: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut cur = b;
        for _ in 0..self.m {
            acc = self.add(acc, cur);
            cur = self.frobenius(cur);
        }
        acc
    }

    /// Tr(alpha^e) computed through exponents when log tables exist.
    pub fn trace_of_power(&self, e: u64) -> Elem {
        match &self.logs {
            Some(t) => {
                let n = self.order - 1;
                let mut acc = Elem::ZERO;
                let mut cur = e % n;
                for _ in 0..self.m {
                    acc = self.add(acc, Elem(t.exp[cur as usize] as u64));
                    cur = (cur as u128 * self.q as u128 % n as u128) as u64;
                }
                acc
            }
            None => self.trace(self.alpha_pow(e)),
        }
    }

    /// Symbol in `0..q` naming a subfield element. For s = 1 the symbol is
    /// the residue itself; otherwise 0 is symbol 0 and g^j is symbol j + 1.
    pub fn subfield_index(&self, a: Elem) -> Result<u32> {
        if self.s == 1 {
            return if a.0 < self.p as u64 { Ok(a.0 as u32) } else { Err(Error::NotInSubfield) };
        }
        match &self.subfield {
            Some(sf) => sf.index.get(&a).copied().ok_or(Error::NotInSubfield),
            None => Err(Error::AlphabetTooLarge(self.q)),
        }
    }

    /// Inverse of [`Field::subfield_index`].
    pub fn subfield_element(&self, symbol: u32) -> Result<Elem> {
        if symbol as u64 >= self.q {
            return Err(Error::SymbolOutOfRange { symbol, q: self.q.min(u32::MAX as u64) as u32 });
        }
        if self.s == 1 {
            return Ok(Elem(symbol as u64));
        }
        match &self.subfield {
            Some(sf) => Ok(sf.elems[symbol as usize]),
            None => Err(Error::AlphabetTooLarge(self.q)),
        }
    }

    /// Minimal polynomial over GF(p) of `a`, monic, little-endian.
    pub fn minimal_polynomial(&self, a: Elem) -> Vec<u32> {
        // Product of (X - a^(p^i)) over the distinct conjugates.
        let mut conjugates = vec![a];
        let mut cur = self.pow(a, self.p as u64);
        while cur != a {
            conjugates.push(cur);
            cur = self.pow(cur, self.p as u64);
        }
        let mut coeffs: Vec<Elem> = vec![Elem::ONE];
        for c in conjugates {
            let mut next = vec![Elem::ZERO; coeffs.len() + 1];
            for (i, &x) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], x);
                next[i] = self.sub(next[i], self.mul(x, c));
            }
            coeffs = next;
        }
        coeffs.into_iter().map(|e| e.0 as u32).collect()
    }
}

fn validate_modulus(f: &[u32], p: u32, degree: u32) -> Result<Vec<u32>> {
    let mut f = f.to_vec();
    while f.len() > 1 && f.last() == Some(&0) {
        f.pop();
    }
    if f.len() != degree as usize + 1 || f[degree as usize] != 1 {
        return Err(Error::BadModulus { expected: degree });
    }
    if let Some(&c) = f.iter().find(|&&c| c >= p) {
        return Err(Error::UnreducedCoefficient(c));
    }
    Ok(f)
}

/// Lowest monic irreducible of the given degree, ordered lexicographically by
/// (f_0, f_1, ..., f_{d-1}), whose root x generates the multiplicative group.
fn search_modulus(p: u32, degree: u32, order: u64) -> Result<Vec<u32>> {
    let d = degree as usize;
    let factors = prime_factors(order - 1);
    for idx in 0..order {
        // f_0 is the most significant digit of idx.
        let mut f = vec![0u32; d + 1];
        let mut rest = idx;
        for i in (0..d).rev() {
            f[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        f[d] = 1;
        if f[0] == 0 && d > 1 {
            continue;
        }
        if !poly::is_irreducible(&f, p) {
            continue;
        }
        let x: Vec<u32> = if d == 1 { vec![(p - f[0]) % p] } else { vec![0, 1] };
        let x_is_primitive = {
            let n = order - 1;
            let one = [1u32];
            poly::pow_mod(&x, n, &f, p) == one
                && factors.iter().all(|&l| poly::pow_mod(&x, n / l, &f, p) != one)
        };
        if x_is_primitive {
            return Ok(f);
        }
    }
    Err(Error::NoPrimitiveRootFound)
}
