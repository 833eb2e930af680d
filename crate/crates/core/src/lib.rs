//! Exact arithmetic in the Hecke-Clifford superalgebra `H^c_r` and the
//! structure constants of the queer q-Schur superalgebra `Q_q(n, r)`.

pub mod coeff_ring;
pub mod combinatorics;
pub mod hecke_clifford;
pub mod qschur;
pub mod verify;
mod error;

pub use coeff_ring::{Integer, LaurentPoly};
pub use combinatorics::{BaseMatrix, Composition, Perm, SuperMatrix};
pub use hecke_clifford::HCElem;
pub use qschur::{Engine, PhiVector};
pub use error::{Error, Result};
