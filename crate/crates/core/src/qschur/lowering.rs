//! Two identities in `H^c_r` behind the `F`-bar products. Both expand an
//! element built from `A★` and the lowered matrix `A⁻_{h,k}` into terms
//! indexed by super matrices with base `A⁻_{h,k}`.

use super::engine::Engine;
use super::phi::Shift;
use crate::coeff_ring::{qint, quantum_int_diff, LaurentPoly};
use crate::combinatorics::SuperMatrix;
use crate::error::{Error, Result};
use crate::hecke_clifford::{c_star, interval_down, sigma_tail, x_lambda, HCElem};

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

struct Lowered {
    til: usize,
    a: usize,
    b: i64,
    a0_below: i64,
    odd_above: usize,
    odd_here: usize,
}

fn prepare(a: &SuperMatrix, h: usize, k: usize) -> Result<Lowered> {
    let n = a.n();
    if h == 0 || h >= n || k == 0 || k > n || a.a(h, k) == 0 {
        return Err(Error::Domain(format!(
            "need 1 <= h < n and a positive entry at ({h},{k})"
        )));
    }
    let base = a.base();
    Ok(Lowered {
        til: base.tilde(h, k),
        a: base.get(h, k) as usize,
        b: base.get(h + 1, k) as i64,
        a0_below: a.a0(h + 1, k) as i64,
        odd_above: a.odd().tilde(h - 1, k),
        odd_here: a.a1(h, k) as usize,
    })
}

fn add_if(out: &mut HCElem, m: Shift, f: LaurentPoly, build: impl Fn(&SuperMatrix) -> HCElem) {
    if let Some(m) = m.to_matrix() {
        out.add_scaled(&build(&m), &f);
    }
}

/// Both sides of
/// `x_{ro(A⁻)} T_{d_{A⁻}} c_{ã} T'(ã-1, ã-a+1) c_{A★} Σ_A
///   = ± T_{(A⁰-E_{h,k} | A¹+E_{h+1,k})}
///     ∓ q^{-1}⟦b+1⟧_{q²,q} T_{(A⁰-E_{h,k}+2E_{h+1,k} | A¹-E_{h+1,k})}
///     + ... q^{a-1}⟦a⁰_{h+1,k}+1⟧ T_{(A⁰+E_{h+1,k} | A¹-E_{h,k})}`,
/// with `ã = ã_{h,k}`, `a = a_{h,k}`, `b = a_{h+1,k}`. Needs `a_{h,k} > 0`.
pub fn odd_lowering_identity(engine: &Engine, a: &SuperMatrix, h: usize, k: usize) -> Result<(HCElem, HCElem)> {
    let p = prepare(a, h, k)?;
    let base = a.base();
    let lowered = base.lower(h, k).expect("a_{h,k} > 0");
    let rank = a.size();
    let lhs = x_lambda(&lowered.ro())
        .mul_perm(&lowered.d_perm())
        .mul_c(p.til)
        .mul(&interval_down(rank, p.til - 1, p.til + 1 - p.a))
        .mul(&c_star(a))
        .mul(&sigma_tail(&base));

    let s = sign(p.odd_above + p.odd_here);
    let t = |m: &SuperMatrix| engine.t_star(m).as_ref().clone();
    let mut rhs = HCElem::zero(rank);
    add_if(&mut rhs, Shift::of(a).even(h, k, -1).odd(h + 1, k, 1), LaurentPoly::constant(s), t);
    add_if(
        &mut rhs,
        Shift::of(a).even(h, k, -1).even(h + 1, k, 2).odd(h + 1, k, -1),
        quantum_int_diff(p.b + 1, 2, 1).scale_i64(-s).shift(-1),
        t,
    );
    add_if(
        &mut rhs,
        Shift::of(a).even(h + 1, k, 1).odd(h, k, -1),
        qint(p.a0_below + 1).scale_i64(-sign(p.odd_above)).shift(p.a as i32 - 1),
        t,
    );
    Ok((lhs, rhs))
}

/// Both sides of
/// `x_{ν⁻} T'(ã-1, ã-a+1) c_{A★} Σ_A
///   = x_{ν⁻} ( ⟦a⁰_{h+1,k}+1⟧ c_{(A⁰-E_{h,k}+E_{h+1,k} | A¹)}
///            + q^{a-1} c_{(A⁰ | A¹-E_{h,k}+E_{h+1,k})}
///            - q^{a-2}⟦b+1⟧_{q²,q} c_{(A⁰+2E_{h+1,k} | A¹-E_{h,k}-E_{h+1,k})} ) Σ_{A⁻}`,
/// with `ν⁻ = ν_{A⁻_{h,k}}`. Needs `a_{h,k} > 0`.
pub fn lowering_tail_identity(a: &SuperMatrix, h: usize, k: usize) -> Result<(HCElem, HCElem)> {
    let p = prepare(a, h, k)?;
    let base = a.base();
    let lowered = base.lower(h, k).expect("a_{h,k} > 0");
    let rank = a.size();
    let x = x_lambda(&lowered.nu());
    let lhs = x
        .mul(&interval_down(rank, p.til - 1, p.til + 1 - p.a))
        .mul(&c_star(a))
        .mul(&sigma_tail(&base));

    let mut mid = HCElem::zero(rank);
    add_if(
        &mut mid,
        Shift::of(a).even(h, k, -1).even(h + 1, k, 1),
        qint(p.a0_below + 1),
        c_star,
    );
    add_if(
        &mut mid,
        Shift::of(a).odd(h, k, -1).odd(h + 1, k, 1),
        LaurentPoly::q_pow(p.a as i32 - 1),
        c_star,
    );
    add_if(
        &mut mid,
        Shift::of(a).even(h + 1, k, 2).odd(h, k, -1).odd(h + 1, k, -1),
        -quantum_int_diff(p.b + 1, 2, 1).shift(p.a as i32 - 2),
        c_star,
    );
    let rhs = x.mul(&mid).mul(&sigma_tail(&lowered));
    Ok((lhs, rhs))
}
