//! Closed multiplication formulas against the structure constants computed
//! in `H^c_r`.

use serde_json::json;

use super::structure::generator_partners;
use super::{Case, Config, Outcome};
use crate::coeff_ring::LaurentPoly;
use crate::combinatorics::{compositions, BaseMatrix, SuperMatrix};
use crate::hecke_clifford::sdp_commutes;
use crate::qschur::formulas as f;
use crate::qschur::{
    lowering_tail_identity, odd_lowering_identity, parity_violations, special, tail_support_check, Engine, PhiVector,
};

fn qm1() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1i64), (0, -1)])
}

/// `φ_{B★} φ_{A★}`, failing unless it is homogeneous of parity `p(B★) + p(A★)`.
fn product(eng: &Engine, b: &SuperMatrix, a: &SuperMatrix) -> Result<PhiVector, Outcome> {
    let v = eng.product(b, a).map_err(|e| Outcome::error(&e))?;
    let p = (b.parity() + a.parity()) % 2;
    let bad = parity_violations(&v, p);
    if bad.is_empty() {
        Ok(v)
    } else {
        Err(Outcome::Fail {
            expected: json!({ "parity": p }),
            got: json!({ "wrong_parity": bad }),
        })
    }
}

fn compare(eng: &Engine, x: &SuperMatrix, a: &SuperMatrix, expected: &PhiVector) -> Outcome {
    match product(eng, x, a) {
        Ok(v) => Outcome::phis(&v, expected),
        Err(o) => o,
    }
}

pub(super) fn even(cfg: &Config) -> Vec<Case<'static>> {
    let (n, r) = (cfg.n, cfg.r);
    let comps = compositions(n, r);
    let mut cases = Vec::new();
    for a in SuperMatrix::all(n, r) {
        let (b, comps2) = (a.clone(), comps.clone());
        cases.push(Case::new(json!({"formula": "diagonal", "A": a}), move |eng: &Engine| {
            Outcome::all(comps2.iter().flat_map(|mu| {
                let d = f::x_diag(mu);
                [
                    compare(eng, &d, &b, &f::diag_left(mu, &b)),
                    match product(eng, &b, &d) {
                        Ok(v) => Outcome::phis(&v, &f::diag_right(&b, mu)),
                        Err(o) => o,
                    },
                ]
            }))
        }));
        let lam = a.ro();
        for h in 1..n {
            type Gen = fn(&crate::Composition, usize) -> Option<SuperMatrix>;
            type Formula = fn(&SuperMatrix, usize) -> PhiVector;
            let fams: [(&str, Gen, Formula); 2] = [("E", f::x_even_e, f::even_e), ("F", f::x_even_f, f::even_f)];
            for (name, gen, formula) in fams {
                let a = a.clone();
                let x = gen(&lam, h);
                cases.push(Case::new(json!({"formula": name, "h": h, "A": a}), move |eng: &Engine| {
                    let expected = formula(&a, h);
                    match &x {
                        Some(x) => compare(eng, x, &a, &expected),
                        None => Outcome::phis(&expected, &PhiVector::zero()),
                    }
                }));
            }
        }
    }
    cases
}

pub(super) fn odd_head(cfg: &Config) -> Vec<Case<'static>> {
    let (n, r) = (cfg.n, cfg.r);
    let mut cases = Vec::new();
    for a in BaseMatrix::all(n, r) {
        for h in 1..n {
            let b = a.clone();
            cases.push(Case::new(
                json!({"check": "E-bar hypothesis equals SDP of raised matrices", "A": a.rows(), "h": h}),
                move |_| {
                    let literal = f::odd_e_exact(&b, h);
                    let raised = (1..=n).all(|k| match b.raise(h, k) {
                        Some(p) => sdp_commutes(&p, h, k).unwrap(),
                        None => true,
                    });
                    Outcome::flag(literal == raised, literal, raised)
                },
            ));
        }
    }
    for a in SuperMatrix::all(n, r) {
        let base = a.base();
        let lam = a.ro();
        for h in 1..=n {
            if f::sdp_row(&base, h) {
                let (a, x) = (a.clone(), f::x_odd_d(&lam, h));
                cases.push(Case::new(json!({"formula": "D-bar", "h": h, "A": a}), move |eng: &Engine| {
                    let head = f::odd_d_head(&a, h);
                    match &x {
                        Some(x) => compare(eng, x, &a, &head),
                        None => Outcome::phis(&head, &PhiVector::zero()),
                    }
                }));
            }
            if h == n {
                continue;
            }
            if f::odd_e_exact(&base, h) {
                let (a, x) = (a.clone(), f::x_odd_e(&lam, h));
                cases.push(Case::new(json!({"formula": "E-bar", "h": h, "A": a}), move |eng: &Engine| {
                    let head = f::odd_e_head(&a, h);
                    match &x {
                        Some(x) => compare(eng, x, &a, &head),
                        None => Outcome::phis(&head, &PhiVector::zero()),
                    }
                }));
            }
            if f::sdp_row(&base, h) {
                let (a, x) = (a.clone(), f::x_odd_f(&lam, h));
                cases.push(Case::new(json!({"formula": "F-bar", "h": h, "A": a}), move |eng: &Engine| {
                    let head = f::odd_f_head(&a, h);
                    match &x {
                        Some(x) => compare(eng, x, &a, &head),
                        None => Outcome::phis(&head, &PhiVector::zero()),
                    }
                }));
            }
        }
    }
    cases
}

fn tail_outcome(residual: &PhiVector, bounds: &[BaseMatrix]) -> Outcome {
    match tail_support_check(residual, bounds) {
        Ok(()) => Outcome::Pass,
        Err(bad) => Outcome::Fail {
            expected: json!({ "strictly_below": bounds.iter().map(|b| b.rows()).collect::<Vec<_>>() }),
            got: json!({ "offending": bad, "residual": residual.to_json() }),
        },
    }
}

pub(super) fn odd_tail(cfg: &Config) -> Vec<Case<'static>> {
    let (n, r) = (cfg.n, cfg.r);
    let mut cases = Vec::new();
    for a in SuperMatrix::all(n, r) {
        for (name, h, x) in generator_partners(&a) {
            let a = a.clone();
            cases.push(Case::new(json!({"formula": name, "h": h, "A": a}), move |eng: &Engine| {
                let got = match product(eng, &x, &a) {
                    Ok(v) => v,
                    Err(o) => return o,
                };
                let base = a.base();
                match name {
                    "D-bar" => tail_outcome(&got.sub(&f::odd_d_head(&a, h)), &[base]),
                    "E-bar" => {
                        let bounds: Vec<_> = (1..=n).filter_map(|k| base.raise(h, k)).collect();
                        tail_outcome(&got.sub(&f::odd_e_head(&a, h)), &bounds)
                    }
                    "F-bar" => {
                        let bounds: Vec<_> = (1..=n).filter_map(|k| base.lower(h, k)).collect();
                        let residual = got
                            .sub(&f::odd_f_head(&a, h))
                            .sub(&f::odd_f_correction(&a, h).scale(&qm1()));
                        tail_outcome(&residual, &bounds)
                    }
                    // even generators only contribute the parity check here
                    _ => Outcome::Pass,
                }
            }));
        }
    }
    cases
}

pub(super) fn special(cfg: &Config) -> Vec<Case<'static>> {
    let (n, r) = (cfg.n, cfg.r);
    let mut cases = Vec::new();
    if r < 2 {
        return cases;
    }
    for mu in compositions(n, r - 1) {
        for h in 1..n {
            for id in special::adjacent_odd_products(&mu, h) {
                cases.push(Case::new(
                    json!({"identity": id.label, "mu": mu.0, "h": h}),
                    move |eng: &Engine| compare(eng, &id.left, &id.right, &id.expected),
                ));
            }
            if h + 2 <= n {
                let mu = mu.clone();
                cases.push(Case::new(
                    json!({"identity": "odd-odd versus even-even", "lambda": mu.0, "h": h}),
                    move |eng: &Engine| match special::odd_even_relation(eng, &mu, h) {
                        Ok((lhs, rhs)) => Outcome::phis(&lhs, &rhs),
                        Err(e) => Outcome::error(&e),
                    },
                ));
            }
        }
    }
    cases
}

pub(super) fn appendix(cfg: &Config) -> Vec<Case<'static>> {
    let (n, r) = (cfg.n, cfg.r);
    let mut cases = Vec::new();
    for a in SuperMatrix::all(n, r) {
        for h in 1..n {
            for k in 1..=n {
                if a.a(h, k) == 0 {
                    continue;
                }
                let b = a.clone();
                cases.push(Case::new(
                    json!({"identity": "odd lowering", "A": a, "h": h, "k": k}),
                    move |eng: &Engine| match odd_lowering_identity(eng, &b, h, k) {
                        Ok((lhs, rhs)) => Outcome::elems(&lhs, &rhs),
                        Err(e) => Outcome::error(&e),
                    },
                ));
                let b = a.clone();
                cases.push(Case::new(
                    json!({"identity": "lowering through the tail", "A": a, "h": h, "k": k}),
                    move |_| match lowering_tail_identity(&b, h, k) {
                        Ok((lhs, rhs)) => Outcome::elems(&lhs, &rhs),
                        Err(e) => Outcome::error(&e),
                    },
                ));
            }
        }
    }
    cases
}
