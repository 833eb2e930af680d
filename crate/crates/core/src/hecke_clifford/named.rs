//! Named elements: `x_λ`, interval sums, the odd elements `c_{q,i,j}` and
//! the standard basis elements `T_{A★}`.

use super::clifford;
use super::element::HCElem;
use crate::coeff_ring::LaurentPoly;
use crate::combinatorics::{BaseMatrix, Composition, Perm, SuperMatrix};

/// `Σ_{w ∈ X} T_w`.
pub fn sum_of(rank: usize, perms: &[Perm]) -> HCElem {
    let mut out = HCElem::zero(rank);
    for w in perms {
        out.add_term(*w, 0, LaurentPoly::one());
    }
    out
}

/// `x_λ = Σ_{w ∈ S_λ} T_w`.
pub fn x_lambda(lambda: &Composition) -> HCElem {
    sum_of(lambda.size(), &lambda.young_subgroup())
}

/// `T(i,j) = 1 + T_i + T_i T_{i+1} + ... + T_i ... T_j`, and `1` if `i > j`.
pub fn interval_up(rank: usize, i: usize, j: usize) -> HCElem {
    let mut out = HCElem::one(rank);
    let mut w = Perm::identity(rank);
    let mut k = i;
    while k <= j {
        w = w.mul_simple(k);
        out.add_term(w, 0, LaurentPoly::one());
        k += 1;
    }
    out
}

/// `T'(j,i) = 1 + T_j + T_j T_{j-1} + ... + T_j ... T_i`, and `1` if `j < i`.
pub fn interval_down(rank: usize, j: usize, i: usize) -> HCElem {
    let mut out = HCElem::one(rank);
    let mut w = Perm::identity(rank);
    let mut k = j;
    while k >= i && k >= 1 {
        w = w.mul_simple(k);
        out.add_term(w, 0, LaurentPoly::one());
        k -= 1;
    }
    out
}

/// `T_{w}` for the word `s_{i_1} ... s_{i_k}`, multiplied out (the word need not be reduced).
pub fn t_word(rank: usize, word: &[usize]) -> HCElem {
    let mut out = HCElem::one(rank);
    for &i in word {
        out = out.mul_t(i);
    }
    out
}

/// `c_{q,i,j} = q^{j-i} c_i + ... + q c_{j-1} + c_j`, or the primed variant
/// `c'_{q,i,j} = c_i + q c_{i+1} + ... + q^{j-i} c_j`.
pub fn c_q(rank: usize, i: usize, j: usize, primed: bool) -> HCElem {
    let mut out = HCElem::zero(rank);
    let id = Perm::identity(rank);
    for k in i..=j {
        let e = if primed { k - i } else { j - k } as i32;
        out.add_term(id, clifford::bit(k), LaurentPoly::q_pow(e));
    }
    out
}

/// `c^α_λ = Π_i (c_{q, λ̃_{i-1}+1, λ̃_i})^{α_i}` (or the primed version).
pub fn c_alpha(lambda: &Composition, alpha: &[u32], primed: bool) -> HCElem {
    let rank = lambda.size();
    let mut out = HCElem::one(rank);
    for (idx, &a) in alpha.iter().enumerate() {
        if a == 0 || lambda.part(idx + 1) == 0 {
            continue;
        }
        let lo = lambda.partial(idx) + 1;
        let hi = lambda.partial(idx + 1);
        out = out.mul(&c_q(rank, lo, hi, primed));
    }
    out
}

/// `Σ_A = Σ_{σ ∈ D_{ν_A} ∩ S_{co(A)}} T_σ`.
pub fn sigma_tail(a: &BaseMatrix) -> HCElem {
    let nu = a.nu();
    sum_of(a.size(), &nu.min_reps_within(&a.co()))
}

/// `c_{A★} = c^{ν_{A¹}}_{ν_A}`.
pub fn c_star(a: &SuperMatrix) -> HCElem {
    c_alpha(&a.base().nu(), &a.odd().nu().0, false)
}

/// `c'_{A★}`.
pub fn c_star_primed(a: &SuperMatrix) -> HCElem {
    c_alpha(&a.base().nu(), &a.odd().nu().0, true)
}

/// `h' = T_{d_A} c_{A★} Σ_A`, so that `T_{A★} = x_{ro(A)} h'`.
pub fn h_prime(a: &SuperMatrix) -> HCElem {
    let base = a.base();
    HCElem::t(&base.d_perm()).mul(&c_star(a)).mul(&sigma_tail(&base))
}

/// `T_{A★} = x_{ro(A)} T_{d_A} c_{A★} Σ_A`.
pub fn t_star(a: &SuperMatrix) -> HCElem {
    let base = a.base();
    x_lambda(&base.ro())
        .mul_perm(&base.d_perm())
        .mul(&c_star(a))
        .mul(&sigma_tail(&base))
}
