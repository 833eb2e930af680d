//! Double coset representatives, the SDP condition, the `q = 1`
//! specialisation and the two standard bases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{elem_json, Case, Config, Outcome};
use crate::coeff_ring::LaurentPoly;
use crate::combinatorics::{all_perms, compositions, is_double_coset_rep, BaseMatrix, Perm, SuperMatrix};
use crate::hecke_clifford::{act_mask, c_then_t, d_commutator, from_basis_b, sdp_commutes, to_basis_b, HCElem};
use crate::qschur::{basis_property_check, formulas, parity_violations, Engine};

/// No two nonzero entries with one strictly south-west of the other.
fn is_staircase(a: &BaseMatrix) -> bool {
    let n = a.n();
    let cells: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| a.get(i, j) > 0)
        .collect();
    cells
        .iter()
        .all(|&(i, j)| cells.iter().all(|&(i2, j2)| !(i2 > i && j2 < j)))
}

/// `diag(λ) + Σ u_i E_{i,i+1}` or `diag(λ) + Σ u_i E_{i+1,i}`.
fn is_bidiagonal(a: &BaseMatrix) -> bool {
    let n = a.n();
    let cells = |f: &dyn Fn(usize, usize) -> bool| (1..=n).all(|i| (1..=n).all(|j| a.get(i, j) == 0 || f(i, j)));
    cells(&|i, j| j == i || j == i + 1) || cells(&|i, j| j == i || i == j + 1)
}

fn d_word_case(a: BaseMatrix) -> Case<'static> {
    Case::new(json!({"check": "d_A reduced word", "A": a.rows()}), move |_| {
        let d = a.d_perm();
        let word = a.d_word();
        let r = a.size();
        let ok = Perm::from_word(r, &word) == d
            && word.len() == d.length()
            && d.length() == a.d_length_formula()
            && is_double_coset_rep(&a.ro(), &d, &a.co())
            && BaseMatrix::from_double_coset(&a.ro(), &d, &a.co()) == a;
        Outcome::check(
            ok,
            || json!({"images": d.images(), "length": a.d_length_formula()}),
            || json!({"word": word, "recomposed": Perm::from_word(r, &word).images(), "length": d.length()}),
        )
    })
}

/// Products `φ_{X★} φ_{A★}` for the one-step generators `X★` with `co(X) = ro(A)`.
pub(super) fn generator_partners(a: &SuperMatrix) -> Vec<(&'static str, usize, SuperMatrix)> {
    let lam = a.ro();
    let n = a.n();
    let mut out = Vec::new();
    for h in 1..=n {
        if let Some(x) = formulas::x_odd_d(&lam, h) {
            out.push(("D-bar", h, x));
        }
        if h < n {
            let fams: [(&str, Option<SuperMatrix>); 4] = [
                ("E", formulas::x_even_e(&lam, h)),
                ("F", formulas::x_even_f(&lam, h)),
                ("E-bar", formulas::x_odd_e(&lam, h)),
                ("F-bar", formulas::x_odd_f(&lam, h)),
            ];
            for (name, x) in fams {
                if let Some(x) = x {
                    out.push((name, h, x));
                }
            }
        }
    }
    out
}

pub(super) fn sdp(cfg: &Config) -> Vec<Case<'static>> {
    let (n, r) = (cfg.n, cfg.r);
    let mut cases = Vec::new();

    let worked = BaseMatrix::from_rows(&[vec![0, 3, 2], vec![1, 1, 0], vec![2, 0, 0]]).expect("valid");
    cases.push(Case::new(json!({"check": "worked d_A", "A": worked.rows()}), move |_| {
        let d = worked.d_perm();
        Outcome::flag(
            d.images() == [6, 8, 9, 1, 2, 3, 7, 4, 5] && d.length() == 19,
            json!({"images": [6, 8, 9, 1, 2, 3, 7, 4, 5], "length": 19}),
            json!({"images": d.images(), "length": d.length()}),
        )
    }));
    cases.push(d_word_case(
        BaseMatrix::from_rows(&[vec![0, 3, 2], vec![1, 1, 0], vec![2, 0, 0]]).expect("valid"),
    ));

    for a in BaseMatrix::all(n, r) {
        cases.push(d_word_case(a.clone()));

        let b = a.clone();
        cases.push(Case::new(json!({"check": "d_A = 1 iff staircase support", "A": a.rows()}), move |_| {
            let trivial = b.d_perm().is_identity();
            let everywhere = (1..=n).all(|h| (1..=n).all(|k| b.get(h, k) == 0 || sdp_commutes(&b, h, k).unwrap()));
            let ok = trivial == is_staircase(&b) && (!trivial || everywhere) && (!is_bidiagonal(&b) || trivial);
            Outcome::flag(
                ok,
                json!({"identity": is_staircase(&b), "sdp_everywhere": true}),
                json!({"identity": trivial, "sdp_everywhere": everywhere}),
            )
        }));

        for h in 1..=n {
            for k in 1..=n {
                if a.get(h, k) == 0 {
                    continue;
                }
                let b = a.clone();
                cases.push(Case::new(
                    json!({"check": "commutation iff lower-left corner vanishes", "A": a.rows(), "h": h, "k": k}),
                    move |_| {
                        let alg = sdp_commutes(&b, h, k).unwrap();
                        let shape = b.sdp_shape(h, k);
                        let edge = k == 1 || h == n;
                        Outcome::flag(alg == shape && (!edge || alg), json!(shape || edge), json!(alg))
                    },
                ));
            }
        }

        for l in 1..=n {
            let zero_below = (l + 1..=n).all(|i| (1..n).all(|j| a.get(i, j) == 0));
            if !zero_below {
                continue;
            }
            let b = a.clone();
            cases.push(Case::new(
                json!({"check": "row condition from vanishing block", "A": a.rows(), "l": l}),
                move |_| {
                    let ok = (1..=n).all(|k| b.get(l, k) == 0 || sdp_commutes(&b, l, k).unwrap());
                    Outcome::flag(ok, true, false)
                },
            ));
        }

        let b = a.clone();
        cases.push(Case::new(json!({"check": "commutators vanish at q = 1", "A": a.rows()}), move |_| {
            Outcome::all((1..=r).map(|i| {
                let e = d_commutator(&b, i).at_q_one();
                Outcome::check(e.is_zero(), || json!({"i": i, "value": []}), || elem_json(&e))
            }))
        }));
    }

    for a in SuperMatrix::all(n, r) {
        for (name, h, x) in generator_partners(&a) {
            let a = a.clone();
            cases.push(Case::new(
                json!({"check": "structure constants at q = 1", "X": name, "h": h, "A": a}),
                move |eng: &Engine| {
                    let res: crate::Result<Outcome> = (|| {
                        let gamma = eng.product(&x, &a)?;
                        let z = eng.t_star(&x).mul(&eng.h_prime(&a)).at_q_one();
                        let mut sum = HCElem::zero(a.size());
                        for (m, g) in gamma.at_q_one().terms() {
                            sum.add_scaled(&eng.t_star(m).at_q_one(), g);
                        }
                        Ok(Outcome::elems(&sum, &z))
                    })();
                    res.into()
                },
            ));
        }
    }
    cases
}

pub(super) fn basis(cfg: &Config) -> Vec<Case<'static>> {
    let (n, r) = (cfg.n, cfg.r);
    let mut cases = Vec::new();

    for w in all_perms(r).iter().copied() {
        cases.push(Case::new(json!({"check": "B to B' transition block", "w": w.images()}), move |_| {
            let mut seen = vec![false; 1 << r];
            for mask in 0u32..(1 << r) {
                let e = c_then_t(r, mask, &w);
                let lead = act_mask(mask, &w);
                let diag: Vec<_> = e.terms().filter(|(y, _, _)| **y == w).collect();
                let ok = diag.len() == 1
                    && diag[0].1 == lead
                    && lead.count_ones() == mask.count_ones()
                    && diag[0].2.as_unit().is_some_and(|(_, x)| x == 0)
                    && e.terms().all(|(y, _, _)| *y == w || y.bruhat_le(&w))
                    && !seen[lead as usize];
                if !ok {
                    return Outcome::Fail {
                        expected: json!({"mask": mask, "leading": lead}),
                        got: elem_json(&e),
                    };
                }
                seen[lead as usize] = true;
            }
            Outcome::Pass
        }));
        cases.push(Case::new(json!({"check": "basis change round trip", "w": w.images()}), move |_| {
            Outcome::all((0u32..(1 << r)).map(|mask| {
                let e = HCElem::monomial(w, mask, LaurentPoly::one());
                match to_basis_b(&e) {
                    Ok(b) => Outcome::elems(&from_basis_b(r, &b), &e),
                    Err(err) => Outcome::error(&err),
                }
            }))
        }));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let perms = all_perms(r);
    for idx in 0..16 {
        let mut e = HCElem::zero(r);
        for _ in 0..4 {
            let w = perms[rng.gen_range(0..perms.len())];
            let m = rng.gen_range(0..(1u32 << r));
            e.add_term(w, m, LaurentPoly::monomial(rng.gen_range(1i64..=5), rng.gen_range(-3..=3)));
        }
        cases.push(Case::new(json!({"check": "basis change round trip", "sample": idx}), move |_| {
            match to_basis_b(&e) {
                Ok(b) => Outcome::elems(&from_basis_b(r, &b), &e),
                Err(err) => Outcome::error(&err),
            }
        }));
    }

    let comps = compositions(n, r);
    for lam in &comps {
        for mu in &comps {
            let (lam, mu) = (lam.clone(), mu.clone());
            cases.push(Case::new(
                json!({"check": "standard basis is independent", "lambda": lam.0, "mu": mu.0}),
                move |eng: &Engine| {
                    let (ok, rank, count) = basis_property_check(eng, &lam, &mu);
                    Outcome::flag(ok, json!({"rank": count}), json!({"rank": rank}))
                },
            ));
        }
    }

    let even: Vec<SuperMatrix> = BaseMatrix::all(n, r).iter().map(SuperMatrix::even_only).collect();
    for b in &even {
        for a in even.iter().filter(|a| a.ro() == b.co()) {
            let (a, b) = (a.clone(), b.clone());
            cases.push(Case::new(json!({"check": "even products stay even", "B": b, "A": a}), move |eng: &Engine| {
                match eng.product(&b, &a) {
                    Ok(v) => {
                        let bad = v.support().filter(|m| m.odd() != BaseMatrix::zero(n)).count();
                        Outcome::check(bad == 0 && parity_violations(&v, 0).is_empty(), || json!([]), || v.to_json())
                    }
                    Err(e) => Outcome::error(&e),
                }
            }));
        }
    }
    cases
}
