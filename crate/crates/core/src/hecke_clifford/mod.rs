//! The Hecke-Clifford superalgebra `H^c_r` over `Z[q, q^-1]`.

mod basis_b;
pub mod clifford;
mod element;
mod named;
mod sdp;

pub use basis_b::{act_mask, c_then_t, from_basis_b, to_basis_b, BasisB};
pub use clifford::Mask;
pub use element::HCElem;
pub use named::{
    c_alpha, c_q, c_star, c_star_primed, h_prime, interval_down, interval_up, sigma_tail, sum_of, t_star,
    t_word, x_lambda,
};
pub use sdp::{d_commutator, sdp_commutes};
