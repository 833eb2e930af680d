//! The queer q-Schur superalgebra `Q_q(n, r)` in its standard basis `{φ_{A★}}`.

mod checks;
mod engine;
pub mod formulas;
mod lowering;
mod phi;
mod solve;
pub mod special;

pub use engine::Engine;
pub use phi::{PhiVector, Shift};
pub use solve::{rank, solve_combination};
pub use checks::{basis_property_check, parity_violations, tail_support_check};
pub use lowering::{lowering_tail_identity, odd_lowering_identity};
