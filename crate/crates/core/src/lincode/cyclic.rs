use alloc::vec::Vec;

use super::{LinearCode, Provenance};
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::galois::{Elem, Field, Fq, Symbol};
use crate::matrix::Matrix;

fn check_divisor(field: &Field, n_div: u64) -> Result<usize> {
    let r1 = field.order() - 1;
    if n_div == 0 || r1 % n_div != 0 {
        return Err(Error::DoesNotDivide { n: n_div, order_minus_one: r1 });
    }
    if n_div == 1 {
        return Err(Error::InvalidDivisor(n_div));
    }
    Ok((r1 / n_div) as usize)
}

/// (Tr(beta), Tr(beta theta), ..., Tr(beta theta^(len-1))) with
/// theta = alpha^N, as GF(q) symbols.
pub fn cyclic_codeword(field: &Field, n_div: u64, beta: Elem, len: usize) -> Result<Vec<Symbol>> {
    check_divisor(field, n_div)?;
    let theta = field.alpha_pow(n_div);
    let mut cur = beta;
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(field.subfield_index(field.trace(cur))? as Symbol);
        cur = field.mul(cur, theta);
    }
    Ok(out)
}

/// Rows for beta = alpha^0 .. alpha^(m-1), a GF(q)-basis of GF(r).
fn trace_rows(field: &Field, n_div: u64, len: usize) -> Result<Matrix> {
    let m = field.m() as usize;
    let mut gen = Matrix::zeros(m, len);
    for j in 0..m {
        for i in 0..len {
            let t = field.trace_of_power(j as u64 + n_div * i as u64);
            gen.set(j, i, field.subfield_index(t)? as Symbol);
        }
    }
    Ok(gen)
}

/// The irreducible cyclic code C(q, m, N) of length (r - 1)/N.
pub fn cyclic_code(field: &Field, n_div: u64) -> Result<LinearCode> {
    let n = check_divisor(field, n_div)?;
    let fq = Fq::from_field(field)?;
    let gen = trace_rows(field, n_div, n)?;
    LinearCode::from_generator(fq, gen, Provenance::Cyclic { q: field.q(), m: field.m(), n_div })
}

/// Least l > 0 with theta^l in GF(q), where theta = alpha^N.
///
/// alpha^(N l) lies in GF(q) iff (r-1)/(q-1) divides N l.
pub fn condensed_length(field: &Field, n_div: u64) -> Result<usize> {
    check_divisor(field, n_div)?;
    let cofactor = (field.order() - 1) / (field.q() - 1);
    Ok((cofactor / gcd(cofactor, n_div)) as usize)
}

/// The length-l section of C(q, m, N).
pub fn condensed_code(field: &Field, n_div: u64) -> Result<LinearCode> {
    let n = check_divisor(field, n_div)?;
    let l = condensed_length(field, n_div)?;
    debug_assert_eq!(n % l, 0);
    let fq = Fq::from_field(field)?;
    let e = field.subfield_index(field.alpha_pow(n_div * l as u64))? as Symbol;
    let gen = trace_rows(field, n_div, l)?;
    let provenance = Provenance::Condensed { q: field.q(), m: field.m(), n_div, l, t: n / l, e };
    LinearCode::from_generator(fq, gen, provenance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincode::weight_distribution;
    use alloc::collections::BTreeSet;

    #[test]
    fn paper_parameters() {
        let f = Field::new(2, 1, 6, None).unwrap();
        let c = cyclic_code(&f, 3).unwrap();
        assert_eq!((c.n(), c.k(), c.q()), (21, 6, 2));

        let f = Field::new(3, 1, 4, None).unwrap();
        let c = cyclic_code(&f, 2).unwrap();
        assert_eq!((c.n(), c.k(), c.q()), (40, 4, 3));
    }

    #[test]
    fn degenerate_length_one() {
        let f = Field::new(2, 1, 2, None).unwrap();
        let c = cyclic_code(&f, 3).unwrap();
        assert_eq!(c.n(), 1);
        assert_eq!(c.k(), 1);
    }

    #[test]
    fn divisor_errors() {
        let f = Field::new(2, 1, 6, None).unwrap();
        assert_eq!(cyclic_code(&f, 5).unwrap_err(), Error::DoesNotDivide { n: 5, order_minus_one: 63 });
        assert_eq!(cyclic_code(&f, 1).unwrap_err(), Error::InvalidDivisor(1));
        assert_eq!(condensed_code(&f, 0).unwrap_err(), Error::DoesNotDivide { n: 0, order_minus_one: 63 });
    }

    #[test]
    fn rows_span_all_trace_words() {
        for (p, s, m, n_div) in [(2u64, 1u32, 4u32, 3u64), (3, 1, 3, 2), (2, 2, 2, 5), (2, 1, 6, 7)] {
            let f = Field::new(p, s, m, None).unwrap();
            let c = cyclic_code(&f, n_div).unwrap();
            let from_beta: BTreeSet<Vec<Symbol>> =
                f.elements().map(|b| cyclic_codeword(&f, n_div, b, c.n()).unwrap()).collect();
            let walked: BTreeSet<Vec<Symbol>> = c.codewords(1 << 20).unwrap().into_iter().collect();
            assert_eq!(from_beta, walked, "C({}, {m}, {n_div})", f.q());
        }
    }

    #[test]
    fn cyclic_shifts_stay_in_code() {
        let f = Field::new(3, 1, 4, None).unwrap();
        let c = cyclic_code(&f, 2).unwrap();
        for w in c.codewords(1 << 10).unwrap() {
            let mut shifted = w.clone();
            shifted.rotate_right(1);
            assert!(c.contains(&shifted));
        }
    }

    #[test]
    fn condensed_lengths() {
        let f = Field::new(3, 1, 4, None).unwrap();
        assert_eq!(condensed_length(&f, 2).unwrap(), 20);
        let cbar = condensed_code(&f, 2).unwrap();
        assert_eq!((cbar.n(), cbar.k()), (20, 4));
        assert_eq!(
            cbar.provenance(),
            &Provenance::Condensed { q: 3, m: 4, n_div: 2, l: 20, t: 2, e: 2 }
        );

        let f = Field::new(2, 1, 6, None).unwrap();
        assert_eq!(condensed_length(&f, 3).unwrap(), 21);
        assert_eq!(condensed_code(&f, 3).unwrap().generator(), cyclic_code(&f, 3).unwrap().generator());
    }

    #[test]
    fn condensed_length_is_least_power_in_subfield() {
        for (p, s, m, n_div) in [(3u64, 1u32, 4u32, 2u64), (2, 1, 6, 3), (5, 1, 2, 3), (2, 2, 3, 3), (3, 1, 4, 5)] {
            let f = Field::new(p, s, m, None).unwrap();
            let theta = f.alpha_pow(n_div);
            let first = (1..).find(|&l| f.in_subfield(f.pow(theta, l))).unwrap();
            assert_eq!(condensed_length(&f, n_div).unwrap() as u64, first);
        }
    }

    #[test]
    fn full_code_weight_is_t_times_condensed() {
        let f = Field::new(3, 1, 4, None).unwrap();
        let c = cyclic_code(&f, 2).unwrap();
        let l = condensed_length(&f, 2).unwrap();
        let t = c.n() / l;
        for b in f.elements() {
            let w = cyclic_codeword(&f, 2, b, c.n()).unwrap();
            let full = w.iter().filter(|&&x| x != 0).count();
            let section = w[..l].iter().filter(|&&x| x != 0).count();
            assert_eq!(full, t * section);
        }
        let wc = weight_distribution(&c).unwrap();
        let wbar = weight_distribution(&condensed_code(&f, 2).unwrap()).unwrap();
        let scaled: Vec<(usize, u64)> = wbar.counts().iter().map(|(&w, &n)| (w * t, n)).collect();
        assert_eq!(wc.counts().iter().map(|(&w, &n)| (w, n)).collect::<Vec<_>>(), scaled);
    }

    #[test]
    fn extension_alphabet() {
        // s = 2: codes over GF(4) from GF(4^3).
        let f = Field::new(2, 2, 3, None).unwrap();
        let c = cyclic_code(&f, 3).unwrap();
        assert_eq!(c.q(), 4);
        assert_eq!(c.n(), 21);
        assert_eq!(c.k(), 3);
        assert!(c.fq().subfield_modulus().is_some());
    }
}
