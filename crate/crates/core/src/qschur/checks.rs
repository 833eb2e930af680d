//! Structural checks on products and on the standard basis.

use super::engine::Engine;
use super::phi::PhiVector;
use super::solve::rank;
use crate::combinatorics::{blm_lt, BaseMatrix, Composition, SuperMatrix};
use crate::hecke_clifford::HCElem;

/// Every key of `residual` must have a base strictly below (in the BLM
/// order) at least one of `bounds`. On failure returns the offending keys.
pub fn tail_support_check(residual: &PhiVector, bounds: &[BaseMatrix]) -> Result<(), Vec<SuperMatrix>> {
    let bad: Vec<SuperMatrix> = residual
        .support()
        .filter(|m| {
            let b = m.base();
            !bounds.iter().any(|a| blm_lt(&b, a))
        })
        .cloned()
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// Whether the `T_{A★}` with `ro(A) = λ`, `co(A) = μ` are linearly
/// independent. Returns `(rank, count)` alongside the verdict.
pub fn basis_property_check(engine: &Engine, lambda: &Composition, mu: &Composition) -> (bool, usize, usize) {
    let mats: Vec<SuperMatrix> = BaseMatrix::with_margins(lambda, mu)
        .iter()
        .flat_map(SuperMatrix::with_base)
        .collect();
    let elems: Vec<_> = mats.iter().map(|m| engine.t_star(m)).collect();
    let cols: Vec<&HCElem> = elems.iter().map(|e| e.as_ref()).collect();
    let rk = rank(&cols);
    (rk == cols.len(), rk, cols.len())
}

/// Keys of `v` whose parity differs from `p`.
pub fn parity_violations(v: &PhiVector, p: u8) -> Vec<SuperMatrix> {
    v.support().filter(|m| m.parity() != p).cloned().collect()
}
