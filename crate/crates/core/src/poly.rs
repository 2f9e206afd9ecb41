//! Dense polynomials over GF(p), coefficients little-endian.
//!
//! Only what field construction needs: reduction modulo a monic polynomial,
//! modular exponentiation, gcd and Rabin's irreducibility test.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::prime_factors;

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat; p is prime.
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// `a mod f` for a nonzero `f` (not necessarily monic).
pub fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut f = f.to_vec();
    trim(&mut f);
    let mut a = a.to_vec();
    trim(&mut a);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p) as u64;
    let p64 = p as u64;
    while a.len() > df {
        let top = a.len() - 1;
        let c = a[top] as u64 * lead_inv % p64;
        if c != 0 {
            let shift = top - df;
            for (i, &fc) in f.iter().enumerate() {
                let sub = c * fc as u64 % p64;
                a[shift + i] = ((a[shift + i] as u64 + p64 - sub) % p64) as u32;
            }
        }
        trim(&mut a);
    }
    a
}

pub fn mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    rem(&prod, f, p)
}

pub fn pow_mod(a: &[u32], mut exp: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut acc = rem(&[1], f, p);
    let mut base = rem(a, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &base, f, p);
        }
        base = mul_mod(&base, &base, f, p);
        exp >>= 1;
    }
    acc
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out: Vec<u32> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// x^(p^j) mod f, by j successive p-th powers.
fn frobenius_power_of_x(j: u32, f: &[u32], p: u32) -> Vec<u32> {
    let mut h = rem(&[0, 1], f, p);
    for _ in 0..j {
        h = pow_mod(&h, p as u64, f, p);
    }
    h
}

/// Rabin's test: `f` (monic, degree d >= 1) is irreducible over GF(p) iff
/// x^(p^d) = x mod f and gcd(x^(p^(d/l)) - x, f) = 1 for each prime l | d.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = [0u32, 1];
    let full = frobenius_power_of_x(d as u32, f, p);
    if sub(&full, &rem(&x, f, p), p) != Vec::<u32>::new() {
        return false;
    }
    for l in prime_factors(d as u64) {
        let h = frobenius_power_of_x((d as u64 / l) as u32, f, p);
        let g = gcd(f, &sub(&h, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
