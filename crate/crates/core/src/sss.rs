//! Massey secret sharing on a linear code.
//!
//! The dealer picks a message u with u g_0 = secret and hands participant
//! P_i the symbol t_i of t = u G. A coalition recovers the secret iff g_0 is
//! in the span of its columns. When the scheme code is the dual of a minimal
//! code C, the minimal authorized subsets are the supports (minus coordinate
//! 0) of the minimal codewords of C.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field, Fq, Symbol};
use crate::lincode::{cyclic_code, LinearCode, Provenance};
use crate::matrix::Matrix;
use crate::minimality::{is_minimal_code_exhaustive, minimal_codewords, Certificate, Verdict};

/// One sharing of a secret: `shares[i - 1]` belongs to participant P_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareDeal {
    pub secret: Symbol,
    pub shares: Vec<Symbol>,
}

impl ShareDeal {
    /// The full word (secret, t_1, ..., t_{n-1}).
    pub fn word(&self) -> Vec<Symbol> {
        let mut w = Vec::with_capacity(self.shares.len() + 1);
        w.push(self.secret);
        w.extend_from_slice(&self.shares);
        w
    }

    /// Share map keyed by 1-based participant.
    pub fn share_map(&self) -> BTreeMap<usize, Symbol> {
        self.shares.iter().enumerate().map(|(i, &t)| (i + 1, t)).collect()
    }
}

fn uniform_symbol<R: RngCore + ?Sized>(rng: &mut R, q: u32) -> Symbol {
    let zone = u32::MAX - u32::MAX % q;
    loop {
        let x = rng.next_u32();
        if x < zone {
            return (x % q) as Symbol;
        }
    }
}

/// Deals `secret` with a message drawn uniformly among the q^(k-1) messages
/// u satisfying u g_0 = secret.
pub fn deal<R: RngCore + ?Sized>(code: &LinearCode, secret: Symbol, rng: &mut R) -> Result<ShareDeal> {
    let fq = code.fq();
    fq.check(secret as u32)?;
    let g0 = code.column(0);
    let pivot = g0.iter().position(|&x| x != 0).ok_or(Error::ZeroSecretColumn)?;
    let mut u: Vec<Symbol> = (0..code.k()).map(|_| uniform_symbol(rng, fq.q())).collect();
    u[pivot] = 0;
    let rest = fq.dot(&u, &g0);
    u[pivot] = fq.div(fq.sub(secret, rest), g0[pivot]);
    deal_with_message(code, &u)
}

/// The deal produced by a fixed message u.
pub fn deal_with_message(code: &LinearCode, message: &[Symbol]) -> Result<ShareDeal> {
    if message.len() != code.k() {
        return Err(Error::LengthMismatch { expected: code.k(), got: message.len() });
    }
    for &x in message {
        code.fq().check(x as u32)?;
    }
    if code.n() < 2 {
        return Err(Error::NoParticipants(code.n()));
    }
    let word = code.encode(message);
    Ok(ShareDeal { secret: word[0], shares: word[1..].to_vec() })
}

fn check_coalition(code: &LinearCode, coalition: &[usize]) -> Result<()> {
    match coalition.iter().find(|&&i| i == 0 || i >= code.n()) {
        Some(&i) => Err(Error::UnknownParticipant(i)),
        None => Ok(()),
    }
}

/// Coefficients x with sum_j x_j g_{i_j} = g_0, if the coalition is
/// authorized.
fn combination(code: &LinearCode, coalition: &[usize]) -> Option<Vec<Symbol>> {
    let cols: Matrix = code.generator().select_columns(coalition);
    cols.solve(code.fq(), &code.column(0))
}

pub fn is_authorized(code: &LinearCode, coalition: &[usize]) -> Result<bool> {
    check_coalition(code, coalition)?;
    Ok(combination(code, coalition).is_some())
}

/// Recovers the secret from the shares of a coalition (1-based indices).
pub fn reconstruct(code: &LinearCode, coalition: &[usize], shares: &BTreeMap<usize, Symbol>) -> Result<Symbol> {
    check_coalition(code, coalition)?;
    let mut values = Vec::with_capacity(coalition.len());
    for &i in coalition {
        let t = *shares.get(&i).ok_or(Error::MissingShare(i))?;
        values.push(code.fq().check(t as u32)?);
    }
    let x = combination(code, coalition).ok_or_else(|| Error::NotAuthorized(coalition.to_vec()))?;
    Ok(code.fq().dot(&x, &values))
}

/// Minimal authorized subsets of the scheme built on dual(C), with
/// participant statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccessStructure {
    /// Sorted subsets of 1-based participants, in lexicographic order.
    pub sets: Vec<Vec<usize>>,
    /// Participants in every set.
    pub dictators: Vec<usize>,
    /// Number of sets containing each participant 1..n-1.
    pub frequency: BTreeMap<usize, u64>,
    pub participants: usize,
    pub source: Provenance,
}

impl AccessStructure {
    pub fn count(&self) -> usize {
        self.sets.len()
    }

    fn from_sets(sets: BTreeSet<Vec<usize>>, participants: usize, source: Provenance) -> AccessStructure {
        let sets: Vec<Vec<usize>> = sets.into_iter().collect();
        let mut frequency: BTreeMap<usize, u64> = (1..=participants).map(|i| (i, 0)).collect();
        for set in &sets {
            for i in set {
                *frequency.entry(*i).or_insert(0) += 1;
            }
        }
        let dictators = if sets.is_empty() {
            Vec::new()
        } else {
            frequency.iter().filter(|(_, &f)| f as usize == sets.len()).map(|(&i, _)| i).collect()
        };
        AccessStructure { sets, dictators, frequency, participants, source }
    }
}

/// Certifies `code` exhaustively, then enumerates the access structure of
/// the scheme on its dual.
pub fn access_structure(code: &LinearCode) -> Result<AccessStructure> {
    if code.n() < 2 {
        return Err(Error::NoParticipants(code.n()));
    }
    let cert = is_minimal_code_exhaustive(code)?;
    access_structure_certified(code, &cert)
}

/// As [`access_structure`], trusting a certificate obtained elsewhere.
pub fn access_structure_certified(code: &LinearCode, cert: &Certificate) -> Result<AccessStructure> {
    if code.n() < 2 {
        return Err(Error::NoParticipants(code.n()));
    }
    if cert.verdict != Verdict::Minimal {
        return Err(Error::NotCertifiedMinimal);
    }
    let sets = minimal_codewords(code)?
        .iter()
        .map(|c| c.support().iter().filter(|&&i| i > 0).copied().collect())
        .collect();
    Ok(AccessStructure::from_sets(sets, code.n() - 1, code.provenance().clone()))
}

/// Access structure of the scheme on the dual of C(q, m, N) computed from
/// trace values: for every beta with Tr(beta) = 1, the set of j in 1..n-1
/// with Tr(beta theta^j) != 0. Only defined for prime q. The caller is
/// responsible for C(q, m, N) being minimal.
pub fn access_structure_trace(field: &Field, n_div: u64) -> Result<AccessStructure> {
    if field.s() != 1 {
        return Err(Error::UnsupportedS(field.s()));
    }
    let code = cyclic_code(field, n_div)?;
    let n = code.n();
    if n < 2 {
        return Err(Error::NoParticipants(n));
    }
    // beta = alpha^b, so Tr(beta theta^j) = Tr(alpha^(b + N j)).
    let period = field.order() - 1;
    let traces: Vec<Elem> = (0..period).map(|e| field.trace_of_power(e)).collect();
    let mut sets = BTreeSet::new();
    for b in (0..period).filter(|&b| traces[b as usize] == Elem::ONE) {
        let set: Vec<usize> =
            (1..n).filter(|&j| !traces[((b + n_div * j as u64) % period) as usize].is_zero()).collect();
        sets.insert(set);
    }
    Ok(AccessStructure::from_sets(sets, n - 1, code.provenance().clone()))
}

/// Dictators expected for C(q, m, N): none for q = 2; P_{n/2} for q = 3,
/// N = 2 and n even; otherwise the participants whose column is a multiple
/// of g_0.
pub fn dictator_prediction(q: u64, n_div: u64, code: &LinearCode) -> Vec<usize> {
    let n = code.n();
    if q == 2 {
        return Vec::new();
    }
    if q == 3 && n_div == 2 {
        return if n % 2 == 0 { vec![n / 2] } else { Vec::new() };
    }
    column_dictators(code.fq(), code)
}

/// Participants i with g_i a nonzero multiple of g_0.
pub fn column_dictators(fq: &Fq, code: &LinearCode) -> Vec<usize> {
    let g0 = code.column(0);
    (1..code.n()).filter(|&i| fq.proportional(&code.column(i), &g0).is_some()).collect()
}
