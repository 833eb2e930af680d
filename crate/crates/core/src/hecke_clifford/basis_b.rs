//! The second normal form `Σ g_{α,w} c^α T_w`.

use std::collections::BTreeMap;

use super::clifford::{self, Mask};
use super::element::HCElem;
use crate::coeff_ring::LaurentPoly;
use crate::combinatorics::Perm;
use crate::error::{Error, Result};

/// Coefficients in the basis `{c^α T_w}`, keyed by `(α, w)`.
pub type BasisB = BTreeMap<(Mask, Perm), LaurentPoly>;

/// `c^α T_w` written in the `T_w c^α` normal form.
pub fn c_then_t(rank: usize, mask: Mask, w: &Perm) -> HCElem {
    HCElem::monomial(Perm::identity(rank), mask, LaurentPoly::one()).mul(&HCElem::t(w))
}

/// `(α.w)_i = α_{w(i)}`: the Clifford mask carried by the leading term of `c^α T_w`.
pub fn act_mask(mask: Mask, w: &Perm) -> Mask {
    let mut out = 0;
    for i in 1..=w.rank() {
        if clifford::has(mask, w.image(i)) {
            out |= clifford::bit(i);
        }
    }
    out
}

/// Rewrite in the basis `{c^α T_w}` by peeling off the longest `T_w` first;
/// `c^α T_w = ± T_w c^{α.w} + (terms with shorter T_y)`.
pub fn to_basis_b(x: &HCElem) -> Result<BasisB> {
    let rank = x.rank();
    let mut rest = x.clone();
    let mut out = BasisB::new();
    while !rest.is_zero() {
        let (w, beta, f) = rest
            .terms()
            .max_by_key(|(w, m, _)| (w.length(), **w, *m))
            .map(|(w, m, f)| (*w, m, f.clone()))
            .unwrap();
        let alpha = act_mask(beta, &w.inverse());
        let e = c_then_t(rank, alpha, &w);
        let lead = e.coeff(&w, beta);
        let sign = match lead.as_unit() {
            Some((s, 0)) => s,
            _ => {
                return Err(Error::Domain(format!(
                    "leading coefficient {lead} of c^{alpha:b} T_{w:?} is not a sign"
                )))
            }
        };
        let g = f.scale_i64(sign);
        rest.add_scaled(&e, &-&g);
        out.insert((alpha, w), g);
    }
    Ok(out)
}

/// Inverse of [`to_basis_b`].
pub fn from_basis_b(rank: usize, b: &BasisB) -> HCElem {
    let mut out = HCElem::zero(rank);
    for ((m, w), g) in b {
        out.add_scaled(&c_then_t(rank, *m, w), g);
    }
    out
}
