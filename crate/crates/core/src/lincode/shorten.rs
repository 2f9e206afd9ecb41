use alloc::boxed::Box;

use super::{LinearCode, Provenance};
use crate::error::{Error, Result};

fn shortened_provenance(parent: &Provenance) -> Provenance {
    match parent {
        Provenance::Shortened { parent, steps } => Provenance::Shortened { parent: parent.clone(), steps: steps + 1 },
        other => Provenance::Shortened { parent: Box::new(other.clone()), steps: 1 },
    }
}

/// C(n)[n-1]: the codewords vanishing on the last coordinate, with that
/// coordinate deleted. The result is an [n-1, k-1] code.
///
/// Requires that no two generator columns are proportional; then the
/// shortened generator has no zero column either.
pub fn shorten_once(code: &LinearCode) -> Result<LinearCode> {
    let n = code.n();
    let k = code.k();
    if k <= 1 {
        return Err(Error::DimensionExhausted(0));
    }
    let last = n - 1;
    match code.first_zero_column() {
        Some(j) if j == last => return Err(Error::ZeroLastColumn),
        Some(j) => return Err(Error::ZeroColumn(j)),
        None => {}
    }
    if let Some((i, j)) = code.proportional_columns() {
        return Err(Error::ColumnsProportional(i, j));
    }
    drop_last(code)
}

fn drop_last(code: &LinearCode) -> Result<LinearCode> {
    let k = code.k();
    let last = code.n() - 1;
    // Pivot on the last coordinate so exactly one row is nonzero there,
    // then drop that row and the coordinate.
    let mut gen = code.generator().clone();
    let pivot_row = (0..k).find(|&r| gen.get(r, last) != 0).ok_or(Error::ZeroLastColumn)?;
    gen.pivot_on(code.fq(), pivot_row, last);
    let reduced = gen.without_row(pivot_row).without_column(last);
    LinearCode::from_generator(code.fq().clone(), reduced, shortened_provenance(code.provenance()))
}

/// The codewords vanishing on the last `count` coordinates, with those
/// coordinates deleted. No conditions beyond each dropped coordinate being
/// nonzero somewhere in the current code; the result may have zero columns.
pub fn shorten_tail(code: &LinearCode, count: usize) -> Result<LinearCode> {
    if count >= code.n() {
        return Err(Error::DimensionExhausted(0));
    }
    let mut cur = code.clone();
    for _ in 0..count {
        if cur.k() == 0 || cur.first_zero_column() == Some(cur.n() - 1) {
            return Err(Error::ZeroLastColumn);
        }
        cur = drop_last(&cur)?;
    }
    Ok(cur)
}

/// C(n, n-1, ..., n-i)[n-i-1]: the codewords vanishing on the last `i + 1`
/// coordinates, with those deleted, giving an [n-i-1, k-i-1] code.
///
/// The dual-distance condition is checked on `code` only. Intermediate codes
/// may well have proportional columns, so the later steps skip that check.
/// Zero columns can still appear for i >= 1 (four steps on the [21, 6]
/// binary code already produce some), and are reported as `ZeroColumn`.
pub fn shorten_steps(code: &LinearCode, i: usize) -> Result<LinearCode> {
    let k = code.k();
    if k < i + 2 {
        return Err(Error::DimensionExhausted(k.saturating_sub(i + 1)));
    }
    if !code.dual_distance_exceeds_two() {
        return Err(Error::DualDistanceTooSmall);
    }
    let cur = shorten_tail(&shorten_once(code)?, i)?;
    if let Some(j) = cur.first_zero_column() {
        return Err(Error::ZeroColumn(j));
    }
    Ok(cur)
}
