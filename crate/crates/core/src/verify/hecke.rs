//! Defining relations of `H^c_r` and the commutation lemmas used by the
//! multiplication formulas.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{Case, Config, Outcome};
use crate::coeff_ring::{qint, qint_sq, LaurentPoly};
use crate::combinatorics::{all_perms, compositions, BaseMatrix, Composition, Perm};
use crate::hecke_clifford::{
    act_mask, c_alpha, c_q, c_then_t, clifford, interval_down, interval_up, sigma_tail, t_word, x_lambda, HCElem,
};

fn qm1() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1i64), (0, -1)])
}

fn t(r: usize, i: usize) -> HCElem {
    HCElem::t_simple(r, i)
}

fn c(r: usize, j: usize) -> HCElem {
    HCElem::c(r, j)
}

fn t_inv(r: usize, i: usize) -> HCElem {
    HCElem::one(r).mul_t_inv(i)
}

fn scalar(r: usize, f: LaurentPoly) -> HCElem {
    HCElem::scalar(r, f)
}

/// Every reduced word of `w`, built from right descents.
fn reduced_words(w: &Perm) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 1..w.rank() {
        if w.has_right_descent(i) {
            for mut word in reduced_words(&w.mul_simple(i)) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out
}

pub(super) fn relations(cfg: &Config) -> Vec<Case<'static>> {
    let r = cfg.r;
    let mut cases = Vec::new();
    let q = LaurentPoly::q();

    for i in 1..=r {
        cases.push(Case::new(json!({"relation": "c_i^2 = -1", "i": i}), move |_| {
            Outcome::elems(&c(r, i).mul(&c(r, i)), &scalar(r, LaurentPoly::constant(-1)))
        }));
        for j in i + 1..=r {
            cases.push(Case::new(json!({"relation": "c_i c_j = -c_j c_i", "i": i, "j": j}), move |_| {
                Outcome::elems(&c(r, i).mul(&c(r, j)), &c(r, j).mul(&c(r, i)).neg())
            }));
        }
    }
    for i in 1..r {
        let q2 = q.clone();
        cases.push(Case::new(json!({"relation": "(T_i - q)(T_i + 1) = 0", "i": i}), move |_| {
            let a = t(r, i).sub(&scalar(r, q2.clone()));
            let b = t(r, i).add(&HCElem::one(r));
            Outcome::elems(&a.mul(&b), &HCElem::zero(r))
        }));
        for j in i + 2..r {
            cases.push(Case::new(json!({"relation": "T_i T_j = T_j T_i", "i": i, "j": j}), move |_| {
                Outcome::elems(&t(r, i).mul(&t(r, j)), &t(r, j).mul(&t(r, i)))
            }));
        }
        if i + 1 < r {
            cases.push(Case::new(json!({"relation": "braid", "i": i}), move |_| {
                Outcome::elems(&t_word(r, &[i, i + 1, i]), &t_word(r, &[i + 1, i, i + 1]))
            }));
        }
        for j in (1..=r).filter(|&j| j != i && j != i + 1) {
            cases.push(Case::new(json!({"relation": "c_j T_i = T_i c_j", "i": i, "j": j}), move |_| {
                Outcome::elems(&c(r, j).mul(&t(r, i)), &t(r, i).mul(&c(r, j)))
            }));
        }
        cases.push(Case::new(json!({"relation": "c_{i+1} T_i = T_i c_i", "i": i}), move |_| {
            Outcome::elems(&c(r, i + 1).mul(&t(r, i)), &t(r, i).mul(&c(r, i)))
        }));
        cases.push(Case::new(
            json!({"relation": "c_i T_i = T_i c_{i+1} + (q-1)(c_i - c_{i+1})", "i": i}),
            move |_| {
                let rhs = t(r, i).mul(&c(r, i + 1)).add(&c(r, i).sub(&c(r, i + 1)).scale(&qm1()));
                Outcome::elems(&c(r, i).mul(&t(r, i)), &rhs)
            },
        ));
        cases.push(Case::new(json!({"relation": "T_i T_i^-1 = 1 = T_i^-1 T_i", "i": i}), move |_| {
            Outcome::all([
                Outcome::elems(&t(r, i).mul(&t_inv(r, i)), &HCElem::one(r)),
                Outcome::elems(&t_inv(r, i).mul(&t(r, i)), &HCElem::one(r)),
            ])
        }));
        let q3 = q.clone();
        cases.push(Case::new(json!({"relation": "q T_k^-1 = T_k - (q-1)", "k": i}), move |_| {
            let rhs = t(r, i).sub(&scalar(r, qm1()));
            Outcome::elems(&t_inv(r, i).scale(&q3), &rhs)
        }));
        let q4 = q.clone();
        cases.push(Case::new(
            json!({"relation": "T_k c_{k+1} = q c_k T_k^-1 + (q-1) c_{k+1}", "k": i}),
            move |_| {
                let rhs = c(r, i).mul(&t_inv(r, i)).scale(&q4).add(&c(r, i + 1).scale(&qm1()));
                Outcome::elems(&t(r, i).mul(&c(r, i + 1)), &rhs)
            },
        ));
        let q5 = q.clone();
        cases.push(Case::new(
            json!({"relation": "c_k T_k = q T_k^-1 c_{k+1} + (q-1) c_k", "k": i}),
            move |_| {
                let rhs = t_inv(r, i).mul(&c(r, i + 1)).scale(&q5).add(&c(r, i).scale(&qm1()));
                Outcome::elems(&c(r, i).mul(&t(r, i)), &rhs)
            },
        ));
    }

    for &w in all_perms(r).iter() {
        cases.push(Case::new(json!({"relation": "T_w independent of the reduced word", "w": w.images()}), move |_| {
            let tw = HCElem::t(&w);
            Outcome::all(reduced_words(&w).into_iter().map(|word| {
                Outcome::check(
                    t_word(r, &word) == tw,
                    || json!({ "word": word.clone(), "element": super::elem_json(&tw) }),
                    || super::elem_json(&t_word(r, &word)),
                )
            }))
        }));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let perms = all_perms(r);
    let random_monomial = |rng: &mut ChaCha8Rng| {
        let w = perms[rng.gen_range(0..perms.len())];
        let m: clifford::Mask = rng.gen_range(0..(1u32 << r));
        let f = LaurentPoly::monomial([1i64, 2, 3, -1, -2, -3][rng.gen_range(0..6)], rng.gen_range(-2..=2));
        HCElem::monomial(w, m, f)
    };
    for idx in 0..64 {
        let x = random_monomial(&mut rng).add(&random_monomial(&mut rng));
        let y = random_monomial(&mut rng);
        let z = random_monomial(&mut rng).add(&random_monomial(&mut rng));
        cases.push(Case::new(json!({"relation": "associativity", "sample": idx}), move |_| {
            Outcome::elems(&x.mul(&y).mul(&z), &x.mul(&y.mul(&z)))
        }));
    }
    cases
}

/// `T_{s_{i_1}} ... T_{s_{i_k}}` for consecutive indices `from, from±1, ..., to`.
fn t_run(r: usize, from: usize, to: usize) -> HCElem {
    let word: Vec<usize> = if from <= to {
        (from..=to).collect()
    } else {
        (to..=from).rev().collect()
    };
    t_word(r, &word)
}

/// `T_u^{-1} T_{u+1}^{-1} ... T_{u+k-1}^{-1}`.
fn t_inv_run(r: usize, u: usize, k: usize) -> HCElem {
    let mut out = HCElem::one(r);
    for i in u..u + k {
        out = out.mul_t_inv(i);
    }
    out
}

/// Lemma on `d_A` versus `d_{A⁺_{h,k}}`: for `a_{h+1,k} > 0`,
/// `Σ_{j=←r(h+1,k)}^{←r(h+1,k+1)-1} T_{λ̃_h+1} ... T_{λ̃_h+j} T_{d_A}
///   = T_{λ̃_h} ... T_{λ̃_h-→r(h,k)+1} T_{d_{A⁺}} T(ã_{h,k}+1, ã_{h,k}+a_{h+1,k}-1)`.
pub(crate) fn raise_shift(a: &BaseMatrix, h: usize, k: usize) -> Option<(HCElem, HCElem)> {
    let plus = a.raise(h, k)?;
    let r = a.size();
    let lt = a.ro().partial(h);
    let td = HCElem::t(&a.d_perm());
    let mut lhs = HCElem::zero(r);
    for j in a.row_prefix(h + 1, k)..a.row_prefix(h + 1, k + 1) {
        let word: Vec<usize> = (lt + 1..=lt + j).collect();
        lhs.add_assign(&t_word(r, &word).mul(&td));
    }
    let down: Vec<usize> = (0..a.row_suffix(h, k)).map(|s| lt - s).collect();
    let til = a.tilde(h, k);
    let rhs = t_word(r, &down)
        .mul_perm(&plus.d_perm())
        .mul(&interval_up(r, til + 1, til + a.get(h + 1, k) as usize - 1));
    Some((lhs, rhs))
}

/// The mirror statement for `A⁻_{h,k}`, `a_{h,k} > 0`:
/// `Σ_{j=→r(h,k)}^{→r(h,k-1)-1} T_{λ̃_h-1} ... T_{λ̃_h-j} T_{d_A}
///   = T_{λ̃_h} ... T_{λ̃_h+←r(h+1,k)-1} T_{d_{A⁻}} T'(ã_{h,k}-1, ã_{h,k}-a_{h,k}+1)`.
pub(crate) fn lower_shift(a: &BaseMatrix, h: usize, k: usize) -> Option<(HCElem, HCElem)> {
    let minus = a.lower(h, k)?;
    let r = a.size();
    let lt = a.ro().partial(h);
    let td = HCElem::t(&a.d_perm());
    let mut lhs = HCElem::zero(r);
    for j in a.row_suffix(h, k)..a.row_suffix(h, k - 1) {
        let word: Vec<usize> = (1..=j).map(|s| lt - s).collect();
        lhs.add_assign(&t_word(r, &word).mul(&td));
    }
    let up: Vec<usize> = (0..a.row_prefix(h + 1, k)).map(|s| lt + s).collect();
    let til = a.tilde(h, k);
    let ahk = a.get(h, k) as usize;
    let rhs = t_word(r, &up)
        .mul_perm(&minus.d_perm())
        .mul(&interval_down(r, til - 1, til + 1 - ahk));
    Some((lhs, rhs))
}

/// Exchanging tails: `T(ã+1, ã+b-1) Σ_A = T'(ã, ã-a+1) Σ_{A⁺}` for `b >= 1`.
pub(crate) fn raise_tail(a: &BaseMatrix, h: usize, k: usize) -> Option<(HCElem, HCElem)> {
    let plus = a.raise(h, k)?;
    let r = a.size();
    let til = a.tilde(h, k);
    let (ahk, b) = (a.get(h, k) as usize, a.get(h + 1, k) as usize);
    let lhs = interval_up(r, til + 1, til + b - 1).mul(&sigma_tail(a));
    let rhs = interval_down(r, til, (til + 1).saturating_sub(ahk)).mul(&sigma_tail(&plus));
    Some((lhs, rhs))
}

/// `T'(ã-1, ã-a+1) Σ_A = T(ã, ã+b-1) Σ_{A⁻}` for `a >= 1`.
pub(crate) fn lower_tail(a: &BaseMatrix, h: usize, k: usize) -> Option<(HCElem, HCElem)> {
    let minus = a.lower(h, k)?;
    let r = a.size();
    let til = a.tilde(h, k);
    let (ahk, b) = (a.get(h, k) as usize, a.get(h + 1, k) as usize);
    let lhs = interval_down(r, til - 1, til + 1 - ahk).mul(&sigma_tail(a));
    let rhs = interval_up(r, til, til + b - 1).mul(&sigma_tail(&minus));
    Some((lhs, rhs))
}

fn in_young(alpha: &Composition, lo: usize, hi: usize) -> bool {
    (lo..=hi).all(|i| alpha.contains_simple(i))
}

pub(super) fn lemmas(cfg: &Config) -> Vec<Case<'static>> {
    let (n, r) = (cfg.n, cfg.r);
    let mut cases = Vec::new();

    for a in BaseMatrix::all(n, r) {
        for h in 1..n {
            for k in 1..=n {
                type Builder = fn(&BaseMatrix, usize, usize) -> Option<(HCElem, HCElem)>;
                // (name, builder, raises)
                let builders: [(&str, Builder, bool); 4] = [
                    ("shift d_A to d_A+", raise_shift, true),
                    ("shift d_A to d_A-", lower_shift, false),
                    ("tail exchange A to A+", raise_tail, true),
                    ("tail exchange A to A-", lower_tail, false),
                ];
                for (name, build, raises) in builders {
                    let entry = if raises { a.get(h + 1, k) } else { a.get(h, k) };
                    if entry == 0 {
                        continue;
                    }
                    let a = a.clone();
                    cases.push(Case::new(
                        json!({"identity": name, "A": a.rows(), "h": h, "k": k}),
                        move |_| {
                            let (lhs, rhs) = build(&a, h, k).expect("admissible by construction");
                            Outcome::elems(&lhs, &rhs)
                        },
                    ));
                }
            }
        }
    }

    for alpha in compositions(n, r) {
        let x = x_lambda(&alpha);
        for u in 1..r {
            for j in 0..r - u {
                if !in_young(&alpha, u + 1, u + j) {
                    continue;
                }
                let input = |name: &str| json!({"identity": name, "alpha": alpha.0, "u": u, "j": j});
                if alpha.contains_simple(u) {
                    let x0 = x.clone();
                    cases.push(Case::new(input("x T(u,u+j) = x T'(u+j,u) = [j+2] x"), move |_| {
                        let rhs = x0.scale(&qint(j as i64 + 2));
                        Outcome::all([
                            Outcome::elems(&x0.mul(&interval_up(r, u, u + j)), &rhs),
                            Outcome::elems(&x0.mul(&interval_down(r, u + j, u)), &rhs),
                        ])
                    }));
                    let x = x.clone();
                    cases.push(Case::new(input("x c_u T(u,u+j) = x c_{q,u,u+j+1}"), move |_| {
                        Outcome::elems(
                            &x.mul_c(u).mul(&interval_up(r, u, u + j)),
                            &x.mul(&c_q(r, u, u + j + 1, false)),
                        )
                    }));
                }
                let x1 = x.clone();
                cases.push(Case::new(input("inverse run expansion"), move |_| {
                    let e = -(j as i32) - 1;
                    let mut rhs = x1.mul(&t_run(r, u, u + j)).scale(&LaurentPoly::q_pow(e));
                    let tail = if j == 0 {
                        HCElem::one(r)
                    } else {
                        interval_up(r, u, u + j - 1)
                    };
                    rhs.add_scaled(&x1.mul(&tail), &-(&LaurentPoly::q_pow(e) * &qm1()));
                    Outcome::elems(&x1.mul(&t_inv_run(r, u, j + 1)), &rhs)
                }));
                let x2 = x.clone();
                cases.push(Case::new(input("x c_u T_u ... T_{u+j}"), move |_| {
                    let mut rhs = x2
                        .mul(&t_inv_run(r, u, j + 1))
                        .mul_c(u + j + 1)
                        .scale(&LaurentPoly::q_pow(j as i32 + 1));
                    let f = &qm1() * &LaurentPoly::q_pow(j as i32);
                    for kk in 0..=j {
                        rhs.add_scaled(&x2.mul(&t_inv_run(r, u, kk)).mul_c(u + kk), &f);
                    }
                    Outcome::elems(&x2.mul_c(u).mul(&t_run(r, u, u + j)), &rhs)
                }));
                let x3 = x.clone();
                cases.push(Case::new(input("x c_u T(u,u+j) via inverse runs"), move |_| {
                    let mut sum = HCElem::zero(r);
                    for kk in 0..=j + 1 {
                        sum.add_assign(&t_inv_run(r, u, kk).mul_c(u + kk));
                    }
                    let rhs = x3.mul(&sum).scale(&LaurentPoly::q_pow(j as i32 + 1));
                    Outcome::elems(&x3.mul_c(u).mul(&interval_up(r, u, u + j)), &rhs)
                }));
            }
            // descending variant: s_u, s_{u-1}, ..., s_{u-j} in S_α
            for j in 0..u {
                if !in_young(&alpha, u - j, u) {
                    continue;
                }
                let x = x.clone();
                cases.push(Case::new(
                    json!({"identity": "x c_{u+1} T'(u,u-j) = x c_{q,u-j,u+1}", "alpha": alpha.0, "u": u, "j": j}),
                    move |_| {
                        Outcome::elems(
                            &x.mul_c(u + 1).mul(&interval_down(r, u, u - j)),
                            &x.mul(&c_q(r, u - j, u + 1, false)),
                        )
                    },
                ));
            }
        }
        // x_λ c^α_λ = (c^α_λ)' x_λ
        let parts = alpha.0.clone();
        for bits in 0u32..(1 << n) {
            let al: Vec<u32> = (0..n).map(|i| (bits >> i) & 1).collect();
            if al.iter().zip(&parts).any(|(&b, &p)| b > p) {
                continue;
            }
            let (lam, x) = (alpha.clone(), x.clone());
            cases.push(Case::new(
                json!({"identity": "x c^a = (c^a)' x", "lambda": lam.0, "a": al}),
                move |_| Outcome::elems(&x.mul(&c_alpha(&lam, &al, false)), &c_alpha(&lam, &al, true).mul(&x)),
            ));
        }
    }

    for i in 1..=r {
        for j in i..=r {
            cases.push(Case::new(json!({"identity": "c_{q,i,j}^2 = -[j-i+1]_{q^2}", "i": i, "j": j}), move |_| {
                let e = c_q(r, i, j, false);
                Outcome::elems(&e.mul(&e), &scalar(r, -qint_sq((j - i + 1) as i64)))
            }));
        }
    }

    for i in 1..r {
        for tt in i..r {
            for j in tt..r {
                cases.push(Case::new(
                    json!({"identity": "c_t T_j ... T_i", "i": i, "t": tt, "j": j}),
                    move |_| {
                        let run = t_run(r, j, i);
                        let mut gap: Vec<usize> = (tt + 1..=j).rev().collect();
                        gap.extend((i..tt).rev());
                        let mut rhs = run.mul_c(tt + 1);
                        rhs.add_scaled(&t_word(r, &gap).mul(&c(r, i).sub(&c(r, tt + 1))), &qm1());
                        Outcome::elems(&c(r, tt).mul(&run), &rhs)
                    },
                ));
            }
        }
    }

    for w in all_perms(r).iter().copied() {
        for j in 1..=r {
            cases.push(Case::new(json!({"identity": "c_j T_w - T_w c_{w^-1(j)} below w", "w": w.images(), "j": j}), move |_| {
                let tw = HCElem::t(&w);
                let diff = c(r, j).mul(&tw).sub(&tw.mul_c(w.inverse().image(j)));
                let bad: Vec<String> = diff
                    .terms()
                    .filter(|(y, _, _)| !(y.bruhat_le(&w) && **y != w))
                    .map(|(y, m, _)| format!("T{y} c[{}]", clifford::to_bit_string(m, r)))
                    .collect();
                Outcome::flag(bad.is_empty(), json!([]), json!(bad))
            }));
        }
        for mask in 0u32..(1 << r) {
            // Lower terms keep the Clifford weight only modulo 2 once |a| >= 2:
            // c_1 c_2 T_1 = -T_1 c_1 c_2 + (q-1)(c_1 c_2 - 1).
            cases.push(Case::new(json!({"identity": "c^a T_w keeps Clifford parity", "w": w.images(), "a": clifford::to_bit_string(mask, r)}), move |_| {
                let e = c_then_t(r, mask, &w);
                let weight = mask.count_ones();
                let lead = e.coeff(&w, act_mask(mask, &w));
                let kept = |m: clifford::Mask| {
                    if weight <= 1 {
                        m.count_ones() == weight
                    } else {
                        m.count_ones() % 2 == weight % 2
                    }
                };
                let ok = e.terms().all(|(_, m, _)| kept(m)) && lead.as_unit().is_some_and(|(_, x)| x == 0);
                Outcome::check(ok, || json!({"weight": weight}), || super::elem_json(&e))
            }));
        }
    }
    cases
}
