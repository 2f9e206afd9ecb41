//! Exact arithmetic in GF(p), GF(q) = GF(p^s) and GF(r) = GF(q^m).

mod field;
mod symbols;

pub use field::{Elem, Field, LOG_TABLE_LIMIT, MAX_FIELD_ORDER};
pub use symbols::{Fq, Symbol};
