//! Coefficient ring `Z[q, q^-1]`.

mod integer;
mod laurent;

pub use integer::Integer;
pub use laurent::{qint, qint_sq, quantum_int, quantum_int_diff, LaurentPoly};
