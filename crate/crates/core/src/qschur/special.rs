//! Products of two odd generators next to the diagonal, and the quadratic
//! relation mixing odd and even off-diagonal generators.

use super::engine::Engine;
use super::phi::{PhiVector, Shift};
use crate::coeff_ring::{qint, LaurentPoly};
use crate::combinatorics::{Composition, SuperMatrix};
use crate::error::Result;

/// A predicted product `φ_{left} φ_{right} = expected`.
#[derive(Clone, Debug)]
pub struct ProductIdentity {
    pub label: &'static str,
    pub left: SuperMatrix,
    pub right: SuperMatrix,
    pub expected: PhiVector,
}

fn diag(mu: &Composition) -> Shift {
    let v: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
    Shift::diagonal(mu.len(), &v)
}

fn qm1() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1i64), (0, -1)])
}

/// The four products of `(μ | E_{h,h+1})`, `(μ | E_{h+1,h})` with their
/// even and odd partners, for `μ ∈ Λ(n, r-1)` and `1 <= h < n`.
pub fn adjacent_odd_products(mu: &Composition, h: usize) -> Vec<ProductIdentity> {
    let m = |s: Shift| s.to_matrix().expect("valid by construction");
    let mh = mu.part(h) as i64;
    let mh1 = mu.part(h + 1) as i64;
    let mut out = Vec::new();

    let mut e1 = PhiVector::zero();
    e1.add_shifted(&diag(mu).even(h + 1, h + 1, -1).even(h + 1, h, 1).odd(h, h + 1, 1), LaurentPoly::one());
    e1.add_shifted(&diag(mu).odd(h, h, 1), LaurentPoly::q_pow(mh1 as i32));
    e1.add_shifted(
        &diag(mu).even(h + 1, h + 1, -1).even(h, h, 1).odd(h + 1, h + 1, 1),
        -(&qm1() * &qint(mh + 1)),
    );
    out.push(ProductIdentity {
        label: "E-bar * F-even",
        left: m(diag(mu).odd(h, h + 1, 1)),
        right: m(diag(mu).even(h + 1, h, 1)),
        expected: e1,
    });

    let mut e2 = PhiVector::zero();
    e2.add_shifted(&diag(mu).even(h, h, 1), -qint(mh + 1).shift(mh1 as i32));
    e2.add_shifted(
        &diag(mu).even(h + 1, h + 1, -1).odd(h, h + 1, 1).odd(h + 1, h, 1),
        LaurentPoly::constant(-1),
    );
    e2.add_shifted(
        &diag(mu).even(h + 1, h + 1, -1).odd(h, h, 1).odd(h + 1, h + 1, 1),
        qm1(),
    );
    out.push(ProductIdentity {
        label: "E-bar * F-bar",
        left: m(diag(mu).odd(h, h + 1, 1)),
        right: m(diag(mu).odd(h + 1, h, 1)),
        expected: e2,
    });

    let mut e3 = PhiVector::zero();
    e3.add_shifted(&diag(mu).even(h, h, -1).even(h, h + 1, 1).odd(h + 1, h, 1), LaurentPoly::one());
    e3.add_shifted(&diag(mu).odd(h + 1, h + 1, 1), LaurentPoly::one());
    out.push(ProductIdentity {
        label: "F-bar * E-even",
        left: m(diag(mu).odd(h + 1, h, 1)),
        right: m(diag(mu).even(h, h + 1, 1)),
        expected: e3,
    });

    let mut e4 = PhiVector::zero();
    e4.add_shifted(&diag(mu).even(h, h, -1).odd(h, h + 1, 1).odd(h + 1, h, 1), LaurentPoly::one());
    e4.add_shifted(&diag(mu).even(h + 1, h + 1, 1), -qint(mh1 + 1));
    out.push(ProductIdentity {
        label: "F-bar * E-bar",
        left: m(diag(mu).odd(h + 1, h, 1)),
        right: m(diag(mu).odd(h, h + 1, 1)),
        expected: e4,
    });
    out
}

/// Both sides of
/// `φ(λ|E_{h,h+1}) φ(λ|E_{h+1,h+2}) + q φ(λ+α_h|E_{h+1,h+2}) φ(λ-α_{h+1}|E_{h,h+1})
///  = -φ(λ+E_{h,h+1}|O) φ(λ+E_{h+1,h+2}|O) + q φ(λ+α_h+E_{h+1,h+2}|O) φ(λ-α_{h+1}+E_{h,h+1}|O)`
/// for `λ ∈ Λ(n, r-1)`, `1 <= h <= n-2`, with `α_h = E_{h,h} - E_{h+1,h+1}`.
/// Factors outside `M_n(N|N_2)` contribute zero.
pub fn odd_even_relation(engine: &Engine, lambda: &Composition, h: usize) -> Result<(PhiVector, PhiVector)> {
    let d = diag(lambda);
    let alpha_h = |s: Shift| s.even(h, h, 1).even(h + 1, h + 1, -1);
    let minus_alpha_h1 = |s: Shift| s.even(h + 1, h + 1, -1).even(h + 2, h + 2, 1);
    let prod = |x: Shift, y: Shift| -> Result<PhiVector> {
        match (x.to_matrix(), y.to_matrix()) {
            (Some(a), Some(b)) => engine.product(&a, &b),
            _ => Ok(PhiVector::zero()),
        }
    };
    let q = LaurentPoly::q();
    let mut lhs = prod(d.clone().odd(h, h + 1, 1), d.clone().odd(h + 1, h + 2, 1))?;
    lhs.add_scaled(
        &prod(alpha_h(d.clone()).odd(h + 1, h + 2, 1), minus_alpha_h1(d.clone()).odd(h, h + 1, 1))?,
        &q,
    );
    let mut rhs = prod(d.clone().even(h, h + 1, 1), d.clone().even(h + 1, h + 2, 1))?.scale(&LaurentPoly::constant(-1));
    rhs.add_scaled(
        &prod(alpha_h(d.clone()).even(h + 1, h + 2, 1), minus_alpha_h1(d.clone()).even(h, h + 1, 1))?,
        &q,
    );
    Ok((lhs, rhs))
}
