//! Closed multiplication formulas `φ_{X★} φ_{A★}` for the generators `X★`.
//!
//! Every formula here assumes `ro(A) = λ` where `X★` was built from `λ`;
//! otherwise the product is zero. Terms whose matrix leaves
//! `M_n(N|N_2)` are dropped.

use super::phi::{PhiVector, Shift};
use crate::coeff_ring::{qint, qint_sq, quantum_int_diff, LaurentPoly};
use crate::combinatorics::{blm_lt, BaseMatrix, Composition, SuperMatrix};

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn signed(lambda: &Composition) -> Vec<i64> {
    lambda.parts().iter().map(|&v| v as i64).collect()
}

/// `⟦m⟧_{q,q^2} = ⟦m⟧_q - ⟦m⟧_{q^2}`.
fn qdiff_q_qq(m: i64) -> LaurentPoly {
    quantum_int_diff(m, 1, 2)
}

/// `⟦m⟧_{q^2,q} = ⟦m⟧_{q^2} - ⟦m⟧_q`.
fn qdiff_qq_q(m: i64) -> LaurentPoly {
    quantum_int_diff(m, 2, 1)
}

/// `(λ | O)`.
pub fn x_diag(lambda: &Composition) -> SuperMatrix {
    SuperMatrix::diagonal(lambda)
}

/// `(λ + E_{h,h+1} - E_{h+1,h+1} | O)`, needs `λ_{h+1} >= 1`.
pub fn x_even_e(lambda: &Composition, h: usize) -> Option<SuperMatrix> {
    Shift::diagonal(lambda.len(), &signed(lambda))
        .even(h, h + 1, 1)
        .even(h + 1, h + 1, -1)
        .to_matrix()
}

/// `(λ - E_{h,h} + E_{h+1,h} | O)`, needs `λ_h >= 1`.
pub fn x_even_f(lambda: &Composition, h: usize) -> Option<SuperMatrix> {
    Shift::diagonal(lambda.len(), &signed(lambda))
        .even(h, h, -1)
        .even(h + 1, h, 1)
        .to_matrix()
}

/// `(λ - E_{h,h} | E_{h,h})`, needs `λ_h >= 1`.
pub fn x_odd_d(lambda: &Composition, h: usize) -> Option<SuperMatrix> {
    Shift::diagonal(lambda.len(), &signed(lambda))
        .even(h, h, -1)
        .odd(h, h, 1)
        .to_matrix()
}

/// `(λ - E_{h+1,h+1} | E_{h,h+1})`, needs `λ_{h+1} >= 1`.
pub fn x_odd_e(lambda: &Composition, h: usize) -> Option<SuperMatrix> {
    Shift::diagonal(lambda.len(), &signed(lambda))
        .even(h + 1, h + 1, -1)
        .odd(h, h + 1, 1)
        .to_matrix()
}

/// `(λ - E_{h,h} | E_{h+1,h})`, needs `λ_h >= 1`.
pub fn x_odd_f(lambda: &Composition, h: usize) -> Option<SuperMatrix> {
    Shift::diagonal(lambda.len(), &signed(lambda))
        .even(h, h, -1)
        .odd(h + 1, h, 1)
        .to_matrix()
}

/// `φ_{(μ|O)} φ_{A★} = δ_{μ,ro(A)} φ_{A★}`.
pub fn diag_left(mu: &Composition, a: &SuperMatrix) -> PhiVector {
    if a.ro() == *mu {
        PhiVector::single(a.clone(), LaurentPoly::one())
    } else {
        PhiVector::zero()
    }
}

/// `φ_{A★} φ_{(μ|O)} = δ_{μ,co(A)} φ_{A★}`.
pub fn diag_right(a: &SuperMatrix, mu: &Composition) -> PhiVector {
    if a.co() == *mu {
        PhiVector::single(a.clone(), LaurentPoly::one())
    } else {
        PhiVector::zero()
    }
}

/// `φ_{X★} φ_{A★}` for `X★ = (λ + E_{h,h+1} - E_{h+1,h+1} | O)`.
pub fn even_e(a: &SuperMatrix, h: usize) -> PhiVector {
    let base = a.base();
    let mut out = PhiVector::zero();
    for k in 1..=a.n() {
        let rs = base.row_suffix(h, k) as i32;
        let up = a.a1(h + 1, k) as i32;
        out.add_shifted(
            &Shift::of(a).even(h, k, 1).even(h + 1, k, -1),
            qint(a.a0(h, k) as i64 + 1).shift(rs + up),
        );
        out.add_shifted(&Shift::of(a).odd(h, k, 1).odd(h + 1, k, -1), LaurentPoly::q_pow(rs));
        out.add_shifted(
            &Shift::of(a).even(h, k, 2).odd(h, k, -1).odd(h + 1, k, -1),
            qdiff_q_qq(base.get(h, k) as i64 + 1).shift(rs - 1),
        );
    }
    out
}

/// `φ_{X★} φ_{A★}` for `X★ = (λ - E_{h,h} + E_{h+1,h} | O)`.
pub fn even_f(a: &SuperMatrix, h: usize) -> PhiVector {
    let base = a.base();
    let mut out = PhiVector::zero();
    for k in 1..=a.n() {
        let lp = base.row_prefix(h + 1, k) as i32;
        let ahk = base.get(h, k) as i32;
        out.add_shifted(
            &Shift::of(a).even(h, k, -1).even(h + 1, k, 1),
            qint(a.a0(h + 1, k) as i64 + 1).shift(lp),
        );
        out.add_shifted(
            &Shift::of(a).odd(h, k, -1).odd(h + 1, k, 1),
            LaurentPoly::q_pow(lp + ahk - 1),
        );
        out.add_shifted(
            &Shift::of(a).even(h + 1, k, 2).odd(h, k, -1).odd(h + 1, k, -1),
            qdiff_q_qq(base.get(h + 1, k) as i64 + 1).shift(lp + ahk - 2),
        );
    }
    out
}

/// Head of `φ_{X★} φ_{A★}` for `X★ = (λ - E_{h,h} | E_{h,h})`; the full
/// product when `A` has the SDP shape on row `h`.
pub fn odd_d_head(a: &SuperMatrix, h: usize) -> PhiVector {
    let base = a.base();
    let odd = a.odd();
    let mut out = PhiVector::zero();
    for k in 1..=a.n() {
        let s = sign(odd.tilde(h - 1, k));
        let rs = base.row_suffix(h, k) as i32;
        out.add_shifted(
            &Shift::of(a).even(h, k, -1).odd(h, k, 1),
            LaurentPoly::monomial(s, rs),
        );
        out.add_shifted(
            &Shift::of(a).even(h, k, 1).odd(h, k, -1),
            qint_sq(base.get(h, k) as i64).scale_i64(-s).shift(rs),
        );
    }
    out
}

/// Head of `φ_{X★} φ_{A★}` for `X★ = (λ - E_{h+1,h+1} | E_{h,h+1})`.
pub fn odd_e_head(a: &SuperMatrix, h: usize) -> PhiVector {
    let base = a.base();
    let odd = a.odd();
    let mut out = PhiVector::zero();
    for k in 1..=a.n() {
        let t = odd.tilde(h - 1, k);
        let rs = base.row_suffix(h, k) as i32;
        let up = a.a1(h + 1, k) as i32;
        out.add_shifted(
            &Shift::of(a).even(h + 1, k, -1).odd(h, k, 1),
            LaurentPoly::monomial(sign(t), rs + up),
        );
        out.add_shifted(
            &Shift::of(a).even(h, k, 1).odd(h + 1, k, -1),
            qint(a.a0(h, k) as i64 + 1)
                .scale_i64(sign(t + 1 + a.a1(h, k) as usize))
                .shift(rs),
        );
        out.add_shifted(
            &Shift::of(a).even(h, k, 2).even(h + 1, k, -1).odd(h, k, -1),
            qdiff_qq_q(base.get(h, k) as i64 + 1)
                .scale_i64(sign(t))
                .shift(rs - 1 + up),
        );
    }
    out
}

/// Head of `φ_{X★} φ_{A★}` for `X★ = (λ - E_{h,h} | E_{h+1,h})`.
pub fn odd_f_head(a: &SuperMatrix, h: usize) -> PhiVector {
    let base = a.base();
    let odd = a.odd();
    let mut out = PhiVector::zero();
    for k in 1..=a.n() {
        let ahk = base.get(h, k);
        if ahk == 0 {
            continue;
        }
        let t = odd.tilde(h - 1, k);
        let o = a.a1(h, k) as usize;
        out.add_shifted(
            &Shift::of(a).even(h, k, -1).odd(h + 1, k, 1),
            LaurentPoly::constant(sign(t + o)),
        );
        out.add_shifted(
            &Shift::of(a).even(h, k, -1).even(h + 1, k, 2).odd(h + 1, k, -1),
            qdiff_qq_q(base.get(h + 1, k) as i64 + 1)
                .scale_i64(sign(t + o + 1))
                .shift(-1),
        );
        out.add_shifted(
            &Shift::of(a).even(h + 1, k, 1).odd(h, k, -1),
            qint(a.a0(h + 1, k) as i64 + 1)
                .scale_i64(sign(t + 1))
                .shift(ahk as i32 - 1),
        );
    }
    out
}

/// The correction `HH` with `φ_{X★} φ_{A★} = head + (q-1) HH + tail` for
/// `X★ = (λ - E_{h,h} | E_{h+1,h})`.
pub fn odd_f_correction(a: &SuperMatrix, h: usize) -> PhiVector {
    let base = a.base();
    let odd = a.odd();
    let mut out = PhiVector::zero();
    for k in 1..=a.n() {
        let ahk = base.get(h, k) as i32;
        if ahk == 0 {
            continue;
        }
        let b = base.get(h + 1, k) as i64;
        for l in 1..k {
            let s = sign(odd.tilde(h, l));
            let e = base.row_suffix(h + 1, l) as i32 - base.row_suffix(h + 1, k - 1) as i32;
            let outer = LaurentPoly::monomial(s, e);
            let inner = qint_sq(base.get(h + 1, l) as i64);
            let pairs: [(LaurentPoly, Shift, Shift); 3] = [
                (
                    qint(a.a0(h + 1, k) as i64 + 1),
                    Shift::of(a).even(h, k, -1).even(h + 1, k, 1),
                    Shift::of(a),
                ),
                (
                    LaurentPoly::q_pow(ahk - 1),
                    Shift::of(a),
                    Shift::of(a).odd(h, k, -1).odd(h + 1, k, 1),
                ),
                (
                    -qdiff_qq_q(b + 1).shift(ahk - 2),
                    Shift::of(a).even(h + 1, k, 2),
                    Shift::of(a).odd(h, k, -1).odd(h + 1, k, -1),
                ),
            ];
            for (c, ev, od) in pairs {
                let c = &c * &outer;
                let first = Shift::combine(&ev, &od).even(h + 1, l, -1).odd(h + 1, l, 1);
                let second = Shift::combine(&ev, &od).even(h + 1, l, 1).odd(h + 1, l, -1);
                out.add_shifted(&first, c.clone());
                out.add_shifted(&second, -(&c * &inner));
            }
        }
    }
    out
}

/// Row `h` of `A` has the SDP shape at every nonzero entry.
pub fn sdp_row(a: &BaseMatrix, h: usize) -> bool {
    (1..=a.n()).all(|k| a.get(h, k) == 0 || a.sdp_shape(h, k))
}

/// Hypothesis for the closed `E`-bar formula: for every `k` with
/// `a_{h+1,k} > 0`, the lower-left corner of `A` at `(h,k)` vanishes.
pub fn odd_e_exact(a: &BaseMatrix, h: usize) -> bool {
    (1..=a.n()).all(|k| a.get(h + 1, k) == 0 || a.corner_lower_left(h, k) == 0)
}

/// Tail support bound for the `D`-bar product: `⌊B★⌋ ≺ A`.
pub fn odd_d_tail_ok(b: &BaseMatrix, a: &BaseMatrix) -> bool {
    blm_lt(b, a)
}

/// Tail support bound for the `E`-bar product: some `A⁺_{h,k}` strictly dominates.
/// Returns the witnessing `k`.
pub fn odd_e_tail_witness(b: &BaseMatrix, a: &BaseMatrix, h: usize) -> Option<usize> {
    (1..=a.n()).find(|&k| a.raise(h, k).is_some_and(|p| blm_lt(b, &p)))
}

/// Tail support bound for the `F`-bar product: some `A⁻_{h,k}` strictly dominates.
pub fn odd_f_tail_witness(b: &BaseMatrix, a: &BaseMatrix, h: usize) -> Option<usize> {
    (1..=a.n()).find(|&k| a.lower(h, k).is_some_and(|m| blm_lt(b, &m)))
}
