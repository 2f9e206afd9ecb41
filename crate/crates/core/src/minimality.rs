//! Minimal codewords, minimal vectors and minimal linear codes.
//!
//! A nonzero codeword c is a minimal vector iff the only codewords supported
//! inside supp(c) are its scalar multiples. Those codewords form a subspace
//! of dimension k - rank(columns outside supp(c)), so c is minimal exactly
//! when the generator columns off its support have rank k - 1. The
//! exhaustive routines below apply that rank test to every codeword.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::arith::prime_power;
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::galois::{Field, Fq, Symbol};
use crate::lincode::{
    condensed_code, cyclic_code, weight_distribution_within, Codeword, LinearCode, DEFAULT_ENUM_LIMIT,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Minimal,
    NotMinimal,
    /// A sufficient condition did not apply; says nothing either way.
    Unknown,
}

/// The closed-form cases for C(q, m, N), N in {2, 3, 4}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// N = 2, m even, 2q - q^(m/2) - 1 < 0.
    QuadraticEvenM,
    /// N = 2, m odd: a one-weight code.
    QuadraticOddM,
    /// N = 3, q = 2 mod 3, m = 0 mod 4, 3q - q^(m/2) - 2 < 0.
    CubicZeroMod4,
    /// N = 3, q = 2 mod 3, m = 2 mod 4, 3q - q^(m/2) - 1 < 0.
    CubicTwoMod4,
    /// N = 3, q = 1 mod 3, m != 0 mod 3.
    CubicQOneMod3,
    /// N = 4, q = 3 mod 4, m = 0 mod 4, 4q - q^(m/2) - 3 < 0.
    QuarticQThreeZeroMod4,
    /// N = 4, q = 3 mod 4, m = 2 mod 4, 4q - q^(m/2) - 1 < 0.
    QuarticQThreeTwoMod4,
    /// N = 4, q = 1 mod 4, p = 3 mod 4, s even, m = 0 mod 4,
    /// 4q - q^(m/2) - 3 < 0.
    QuarticQOneZeroMod4,
    /// N = 4, q = 1 mod 4, p = 3 mod 4, s even, m = 2 mod 4,
    /// 2q - q^(m/2) - 1 < 0.
    QuarticQOneTwoMod4,
}

impl Theorem {
    /// Stable short tag used in certificates.
    pub fn id(self) -> &'static str {
        match self {
            Theorem::QuadraticEvenM => "3.3a",
            Theorem::QuadraticOddM => "3.3b",
            Theorem::CubicZeroMod4 => "3.4a",
            Theorem::CubicTwoMod4 => "3.4b",
            Theorem::CubicQOneMod3 => "3.4c",
            Theorem::QuarticQThreeZeroMod4 => "3.5a",
            Theorem::QuarticQThreeTwoMod4 => "3.5b",
            Theorem::QuarticQOneZeroMod4 => "3.6a",
            Theorem::QuarticQOneTwoMod4 => "3.6b",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exhaustive,
    WeightRatio,
    /// `None` when no closed-form case matched.
    ClosedForm(Option<Theorem>),
    OneWeight,
}

/// Two codewords where `covering` covers `covered` without being a
/// multiple of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub covering: Codeword,
    pub covered: Codeword,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Option<Witness>,
    /// (Wmin, Wmax), recorded when the weight-ratio test succeeded.
    pub ratio: Option<(usize, usize)>,
}

impl Certificate {
    fn new(verdict: Verdict, method: Method) -> Certificate {
        Certificate { verdict, method, witness: None, ratio: None }
    }

    pub fn is_minimal(&self) -> bool {
        self.verdict == Verdict::Minimal
    }
}

/// Whether `c2` covers `c1`, i.e. supp(c1) is inside supp(c2).
pub fn covers(c2: &Codeword, c1: &Codeword) -> Result<bool> {
    if c2.len() != c1.len() {
        return Err(Error::LengthMismatch { expected: c2.len(), got: c1.len() });
    }
    Ok(c1.symbols().iter().zip(c2.symbols()).all(|(&a, &b)| a == 0 || b != 0))
}

/// Rank of generator columns restricted to positions outside a support.
enum ColumnSpace<'a> {
    Binary { cols: Vec<u64> },
    General { cols: Vec<Vec<Symbol>>, fq: &'a Fq },
}

impl<'a> ColumnSpace<'a> {
    fn new(code: &'a LinearCode) -> ColumnSpace<'a> {
        let gen = code.generator();
        if code.q() == 2 && code.k() <= 64 {
            let cols = (0..code.n())
                .map(|j| (0..code.k()).fold(0u64, |acc, r| acc | (gen.get(r, j) as u64) << r))
                .collect();
            ColumnSpace::Binary { cols }
        } else {
            ColumnSpace::General { cols: (0..code.n()).map(|j| code.column(j)).collect(), fq: code.fq() }
        }
    }

    /// Rank of the columns at clear positions of `support`, counting stops
    /// once `target` is reached.
    fn rank_outside(&self, support: &BitSet, target: usize) -> usize {
        if target == 0 {
            return 0;
        }
        match self {
            ColumnSpace::Binary { cols } => {
                let mut basis = [0u64; 64];
                let mut rank = 0;
                for j in support.zeros() {
                    let mut v = cols[j];
                    while v != 0 {
                        let top = 63 - v.leading_zeros() as usize;
                        if basis[top] == 0 {
                            basis[top] = v;
                            rank += 1;
                            break;
                        }
                        v ^= basis[top];
                    }
                    if rank == target {
                        break;
                    }
                }
                rank
            }
            ColumnSpace::General { cols, fq } => {
                let mut basis: Vec<(usize, Vec<Symbol>)> = Vec::new();
                for j in support.zeros() {
                    let mut v = cols[j].clone();
                    for (pivot, b) in &basis {
                        let c = v[*pivot];
                        if c != 0 {
                            fq.axpy(&mut v, fq.neg(c), b);
                        }
                    }
                    if let Some(pivot) = v.iter().position(|&x| x != 0) {
                        let inv = fq.inv(v[pivot]);
                        fq.scale(&mut v, inv);
                        basis.push((pivot, v));
                        if basis.len() == target {
                            break;
                        }
                    }
                }
                basis.len()
            }
        }
    }
}

fn support_bits(symbols: &[Symbol]) -> BitSet {
    let mut b = BitSet::new(symbols.len());
    for (i, &x) in symbols.iter().enumerate() {
        b.set_to(i, x != 0);
    }
    b
}

/// Whether a nonzero codeword covers only its own multiples.
pub fn is_minimal_vector(c: &Codeword, code: &LinearCode) -> Result<bool> {
    if c.len() != code.n() {
        return Err(Error::LengthMismatch { expected: code.n(), got: c.len() });
    }
    if c.is_zero() {
        return Err(Error::ZeroWord);
    }
    if !code.contains(c.symbols()) {
        return Err(Error::NotInCode);
    }
    let target = code.k() - 1;
    Ok(ColumnSpace::new(code).rank_outside(&support_bits(c.symbols()), target) == target)
}

fn first_nonzero_is_one(message: &[Symbol]) -> bool {
    message.iter().find(|&&x| x != 0) == Some(&1)
}

pub fn is_minimal_code_exhaustive(code: &LinearCode) -> Result<Certificate> {
    is_minimal_code_exhaustive_within(code, DEFAULT_ENUM_LIMIT)
}

/// Certifies minimality by checking every nonzero codeword (one per
/// projective class). A non-minimal code gets the lexicographically first
/// (covering, covered) pair in message order as witness.
pub fn is_minimal_code_exhaustive_within(code: &LinearCode, limit: u64) -> Result<Certificate> {
    if let Some(j) = code.first_zero_column() {
        return Err(Error::ZeroColumn(j));
    }
    let weights = weight_distribution_within(code, limit)?;
    if weights.nonzero_weights().count() == 1 {
        return Ok(Certificate::new(Verdict::Minimal, Method::OneWeight));
    }
    let target = code.k() - 1;
    let space = ColumnSpace::new(code);
    let failing = code.walker(limit)?.try_for_each(|v| {
        if v.is_zero() || !first_nonzero_is_one(v.message()) {
            return ControlFlow::Continue(());
        }
        if space.rank_outside(v.support_bits(), target) < target {
            ControlFlow::Break((v.message().to_vec(), v.to_vec()))
        } else {
            ControlFlow::Continue(())
        }
    });
    match failing {
        None => Ok(Certificate::new(Verdict::Minimal, Method::Exhaustive)),
        Some((message, covering)) => {
            let covered = smallest_covered(code, &message, &covering);
            let mut cert = Certificate::new(Verdict::NotMinimal, Method::Exhaustive);
            cert.witness = Some(Witness { covering: Codeword::new(covering), covered: Codeword::new(covered) });
            Ok(cert)
        }
    }
}

/// Lexicographically smallest message x, not a multiple of `message`, whose
/// codeword is nonzero and supported inside supp(`covering`).
fn smallest_covered(code: &LinearCode, message: &[Symbol], covering: &[Symbol]) -> Vec<Symbol> {
    let fq = code.fq();
    let off: Vec<usize> = (0..code.n()).filter(|&j| covering[j] == 0).collect();
    // Messages x with x . g_j = 0 for every j off the support.
    let basis = code.generator().select_columns(&off).transpose().kernel(fq);
    let dim = basis.rows();
    let q = fq.q() as u64;
    let mut best: Option<Vec<Symbol>> = None;
    let mut coeffs = vec![0 as Symbol; dim];
    for idx in 0..q.pow(dim as u32) {
        let mut rest = idx;
        for c in coeffs.iter_mut() {
            *c = (rest % q) as Symbol;
            rest /= q;
        }
        let x = basis.left_mul(fq, &coeffs);
        if x.iter().all(|&s| s == 0) || fq.proportional(&x, message).is_some() {
            continue;
        }
        if best.as_ref().is_none_or(|b| x < *b) {
            best = Some(x);
        }
    }
    let x = best.expect("a non-minimal codeword covers a non-multiple");
    code.encode(&x)
}

pub fn weight_ratio_sufficient(code: &LinearCode) -> Result<Certificate> {
    weight_ratio_sufficient_within(code, DEFAULT_ENUM_LIMIT)
}

/// Minimal when q Wmin > (q - 1) Wmax and no column is zero; otherwise
/// `Unknown`.
pub fn weight_ratio_sufficient_within(code: &LinearCode, limit: u64) -> Result<Certificate> {
    if let Some(j) = code.first_zero_column() {
        return Err(Error::ZeroColumn(j));
    }
    let weights = weight_distribution_within(code, limit)?;
    let (Some(wmin), Some(wmax)) = (weights.min_nonzero(), weights.max_nonzero()) else {
        return Ok(Certificate::new(Verdict::Unknown, Method::WeightRatio));
    };
    let q = code.q() as u64;
    if q * wmin as u64 > (q - 1) * wmax as u64 {
        let mut cert = Certificate::new(Verdict::Minimal, Method::WeightRatio);
        cert.ratio = Some((wmin, wmax));
        Ok(cert)
    } else {
        Ok(Certificate::new(Verdict::Unknown, Method::WeightRatio))
    }
}

/// a*q - q^(m/2) - b < 0, without overflow.
fn below_zero(a: i128, q: u64, m: u32, b: i128) -> bool {
    match (q as i128).checked_pow(m / 2) {
        Some(root) => a * q as i128 - root - b < 0,
        None => true,
    }
}

/// Closed-form sufficient conditions for C(q, m, N) with N in {2, 3, 4}.
pub fn closed_form_predicate(q: u64, m: u32, n_div: u64) -> Result<Certificate> {
    if !(2..=4).contains(&n_div) {
        return Err(Error::UnsupportedN(n_div));
    }
    let (p, s) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if m == 0 {
        return Err(Error::InvalidField("s and m must be positive"));
    }
    let r1 = (q as u128).checked_pow(m).map(|r| r - 1);
    if let Some(r1) = r1 {
        if r1 % n_div as u128 != 0 {
            return Err(Error::DoesNotDivide { n: n_div, order_minus_one: r1.min(u64::MAX as u128) as u64 });
        }
    }

    let theorem = match n_div {
        2 if m % 2 == 1 => Some(Theorem::QuadraticOddM),
        2 => below_zero(2, q, m, 1).then_some(Theorem::QuadraticEvenM),
        3 if q % 3 == 2 => match m % 4 {
            0 if below_zero(3, q, m, 2) => Some(Theorem::CubicZeroMod4),
            2 if below_zero(3, q, m, 1) => Some(Theorem::CubicTwoMod4),
            _ => None,
        },
        3 if q % 3 == 1 && m % 3 != 0 => Some(Theorem::CubicQOneMod3),
        4 if q % 4 == 3 => match m % 4 {
            0 if below_zero(4, q, m, 3) => Some(Theorem::QuarticQThreeZeroMod4),
            2 if below_zero(4, q, m, 1) => Some(Theorem::QuarticQThreeTwoMod4),
            _ => None,
        },
        4 if q % 4 == 1 && p % 4 == 3 && s % 2 == 0 => match m % 4 {
            0 if below_zero(4, q, m, 3) => Some(Theorem::QuarticQOneZeroMod4),
            2 if below_zero(2, q, m, 1) => Some(Theorem::QuarticQOneTwoMod4),
            _ => None,
        },
        _ => None,
    };
    let verdict = if theorem.is_some() { Verdict::Minimal } else { Verdict::Unknown };
    Ok(Certificate::new(verdict, Method::ClosedForm(theorem)))
}

/// Exhaustive verdicts for C(q, m, N) and its condensed section.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub cyclic: Verdict,
    pub condensed: Verdict,
}

impl TransferReport {
    pub fn agree(&self) -> bool {
        self.cyclic == self.condensed
    }
}

pub fn minimality_transfer_condensed(field: &Field, n_div: u64) -> Result<TransferReport> {
    minimality_transfer_condensed_within(field, n_div, DEFAULT_ENUM_LIMIT)
}

pub fn minimality_transfer_condensed_within(field: &Field, n_div: u64, limit: u64) -> Result<TransferReport> {
    let cyclic = is_minimal_code_exhaustive_within(&cyclic_code(field, n_div)?, limit)?.verdict;
    let condensed = is_minimal_code_exhaustive_within(&condensed_code(field, n_div)?, limit)?.verdict;
    Ok(TransferReport { cyclic, condensed })
}

pub fn minimal_codewords(code: &LinearCode) -> Result<Vec<Codeword>> {
    minimal_codewords_within(code, DEFAULT_ENUM_LIMIT)
}

/// Codewords with first coordinate 1 that cover no other such codeword,
/// sorted lexicographically.
pub fn minimal_codewords_within(code: &LinearCode, limit: u64) -> Result<Vec<Codeword>> {
    if code.n() == 0 || (0..code.k()).all(|r| code.generator().get(r, 0) == 0) {
        return Err(Error::ZeroColumn(0));
    }
    // A word with first coordinate 1 covers another such word iff the
    // subspace supported inside its support has dimension >= 2, which is
    // the minimal-vector rank test again.
    let target = code.k() - 1;
    let space = ColumnSpace::new(code);
    let mut out = Vec::new();
    code.walker(limit)?.for_each(|v| {
        if v.symbol(0) == 1 && space.rank_outside(v.support_bits(), target) == target {
            out.push(Codeword::new(v.to_vec()));
        }
    });
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincode::Provenance;

    fn cw(v: &[u8]) -> Codeword {
        Codeword::new(v.to_vec())
    }

    #[test]
    fn cover_relation() {
        assert!(covers(&cw(&[1, 0, 1]), &cw(&[1, 0, 0])).unwrap());
        assert!(covers(&cw(&[1, 0, 1]), &cw(&[0, 0, 0])).unwrap());
        assert!(!covers(&cw(&[1, 0, 0]), &cw(&[0, 1, 0])).unwrap());
        assert_eq!(
            covers(&cw(&[1, 0]), &cw(&[1, 0, 0])),
            Err(Error::LengthMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn full_space_is_not_minimal() {
        let code = LinearCode::from_rows(Fq::new(2).unwrap(), &[alloc::vec![1, 0], alloc::vec![0, 1]]).unwrap();
        assert!(!is_minimal_vector(&cw(&[1, 1]), &code).unwrap());
        assert!(is_minimal_vector(&cw(&[1, 0]), &code).unwrap());
        let cert = is_minimal_code_exhaustive(&code).unwrap();
        assert_eq!(cert.verdict, Verdict::NotMinimal);
        let w = cert.witness.unwrap();
        // messages in order: (0,1) -> (0,1), (1,0) -> (1,0), (1,1) -> (1,1)
        assert_eq!(w.covering, cw(&[1, 1]));
        assert_eq!(w.covered, cw(&[0, 1]));
        assert!(covers(&w.covering, &w.covered).unwrap());
    }

    #[test]
    fn is_minimal_vector_errors() {
        let code = LinearCode::from_rows(Fq::new(3).unwrap(), &[alloc::vec![1, 1, 0]]).unwrap();
        assert_eq!(is_minimal_vector(&cw(&[0, 0, 0]), &code), Err(Error::ZeroWord));
        assert_eq!(is_minimal_vector(&cw(&[1, 0, 0]), &code), Err(Error::NotInCode));
        assert_eq!(
            is_minimal_vector(&cw(&[1, 1]), &code),
            Err(Error::LengthMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn weight_two_triangle_is_minimal() {
        let code =
            LinearCode::from_rows(Fq::new(2).unwrap(), &[alloc::vec![1, 1, 0], alloc::vec![0, 1, 1]]).unwrap();
        let cert = is_minimal_code_exhaustive(&code).unwrap();
        assert_eq!(cert.verdict, Verdict::Minimal);
        assert_eq!(cert.method, Method::OneWeight);
    }

    #[test]
    fn zero_column_rejected() {
        let code = LinearCode::from_rows(Fq::new(2).unwrap(), &[alloc::vec![1, 0, 1]]).unwrap();
        assert_eq!(is_minimal_code_exhaustive(&code), Err(Error::ZeroColumn(1)));
        assert_eq!(weight_ratio_sufficient(&code), Err(Error::ZeroColumn(1)));
    }

    #[test]
    fn closed_form_cases() {
        let c = closed_form_predicate(2, 6, 3).unwrap();
        assert_eq!(c.method, Method::ClosedForm(Some(Theorem::CubicTwoMod4)));
        assert!(c.is_minimal());
        let c = closed_form_predicate(3, 4, 2).unwrap();
        assert_eq!(c.method, Method::ClosedForm(Some(Theorem::QuadraticEvenM)));
        let c = closed_form_predicate(3, 3, 2).unwrap();
        assert_eq!(c.method, Method::ClosedForm(Some(Theorem::QuadraticOddM)));
        // 2*3 - 3 - 1 = 2 >= 0
        let c = closed_form_predicate(3, 2, 2).unwrap();
        assert_eq!(c.verdict, Verdict::Unknown);
        assert_eq!(closed_form_predicate(2, 6, 7), Err(Error::UnsupportedN(7)));
        assert_eq!(closed_form_predicate(2, 5, 3), Err(Error::DoesNotDivide { n: 3, order_minus_one: 31 }));
        // q = 4 = 1 mod 3, m = 2
        assert_eq!(
            closed_form_predicate(4, 2, 3).unwrap().method,
            Method::ClosedForm(Some(Theorem::CubicQOneMod3))
        );
        // q = 9: p = 3, s = 2
        assert_eq!(
            closed_form_predicate(9, 4, 4).unwrap().method,
            Method::ClosedForm(Some(Theorem::QuarticQOneZeroMod4))
        );
        // 4*3 - 9 - 3 = 0 is not negative
        assert_eq!(closed_form_predicate(3, 4, 4).unwrap().verdict, Verdict::Unknown);
        assert_eq!(
            closed_form_predicate(3, 8, 4).unwrap().method,
            Method::ClosedForm(Some(Theorem::QuarticQThreeZeroMod4))
        );
    }

    #[test]
    fn weight_ratio_on_ternary_example() {
        let f = Field::new(3, 1, 4, None).unwrap();
        let cert = weight_ratio_sufficient(&cyclic_code(&f, 2).unwrap()).unwrap();
        assert_eq!(cert.verdict, Verdict::Minimal);
        assert_eq!(cert.ratio, Some((24, 30)));
    }

    #[test]
    fn minimal_codewords_count_for_binary_example() {
        let f = Field::new(2, 1, 6, None).unwrap();
        let code = cyclic_code(&f, 3).unwrap();
        let mins = minimal_codewords(&code).unwrap();
        assert_eq!(mins.len(), 32);
        assert!(mins.iter().all(|c| c.symbols()[0] == 1));
        assert!(mins.iter().all(|c| is_minimal_vector(c, &code).unwrap()));
    }

    #[test]
    fn minimal_codewords_need_first_column() {
        let code = LinearCode::from_rows(Fq::new(2).unwrap(), &[alloc::vec![0, 1, 1]]).unwrap()
            .with_provenance(Provenance::Explicit);
        assert_eq!(minimal_codewords(&code), Err(Error::ZeroColumn(0)));
    }
}
