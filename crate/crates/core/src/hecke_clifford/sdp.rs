//! Commutation of `T_{d_A}` with the Clifford generators.

use super::element::HCElem;
use crate::combinatorics::BaseMatrix;
use crate::error::{Error, Result};

/// `c_{d_A(i)} T_{d_A} - T_{d_A} c_i`. It vanishes at `q = 1`, where `d_A`
/// acts on the Clifford generators by permuting indices.
pub fn d_commutator(a: &BaseMatrix, i: usize) -> HCElem {
    let d = a.d_perm();
    let td = HCElem::t(&d);
    HCElem::c(a.size(), d.image(i)).mul(&td).sub(&td.mul_c(i))
}

/// Whether `c_{â_{h,k-1}+p} T_{d_A} = T_{d_A} c_{ã_{h-1,k}+p}` holds for every
/// `1 <= p <= a_{h,k}`, checked by multiplying out both sides.
pub fn sdp_commutes(a: &BaseMatrix, h: usize, k: usize) -> Result<bool> {
    let n = a.n();
    if h == 0 || k == 0 || h > n || k > n || a.get(h, k) == 0 {
        return Err(Error::Domain(format!("entry ({h},{k}) must be positive")));
    }
    let td = HCElem::t(&a.d_perm());
    let rank = a.size();
    let left = a.hat(h, k - 1);
    let right = a.tilde(h - 1, k);
    Ok((1..=a.get(h, k) as usize)
        .all(|p| HCElem::c(rank, left + p).mul(&td) == td.mul_c(right + p)))
}
