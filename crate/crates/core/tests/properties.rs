use num_bigint::BigInt;
use proptest::prelude::*;
use queer_schur::combinatorics::{all_perms, blm_leq, blm_lt};
use queer_schur::hecke_clifford::{from_basis_b, to_basis_b};
use queer_schur::{BaseMatrix, HCElem, Integer, LaurentPoly, Perm, SuperMatrix};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..5, -6i64..7), 0..5).prop_map(LaurentPoly::from_terms)
}

fn perm(r: usize) -> impl Strategy<Value = Perm> {
    let n = all_perms(r).len();
    (0..n).prop_map(move |i| all_perms(r)[i])
}

fn hc_elem(r: usize) -> impl Strategy<Value = HCElem> {
    prop::collection::vec((perm(r), 0u32..(1 << r), -3i64..4, -2i32..3), 0..4).prop_map(move |ts| {
        let mut x = HCElem::zero(r);
        for (w, m, c, e) in ts {
            x.add_term(w, m, LaurentPoly::monomial(c, e));
        }
        x
    })
}

fn base_matrix(n: usize) -> impl Strategy<Value = BaseMatrix> {
    prop::collection::vec(0u32..3, n * n).prop_map(move |a| BaseMatrix::from_flat(n, a))
}

fn super_matrix(n: usize) -> impl Strategy<Value = SuperMatrix> {
    (prop::collection::vec(0i64..3, n * n), prop::collection::vec(0i64..2, n * n))
        .prop_map(move |(a0, a1)| SuperMatrix::from_signed(n, &a0, &a1).unwrap())
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_division_inverts_product(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).eval_at_one(), &a.eval_at_one() * &b.eval_at_one());
        prop_assert_eq!((&a + &b).eval_at_one(), &a.eval_at_one() + &b.eval_at_one());
    }

    #[test]
    fn integer_matches_bigint(x in any::<i64>(), y in any::<i64>(), e in 0u32..4) {
        let (a, b) = (Integer::from(x), Integer::from(y));
        let (bx, by) = (BigInt::from(x), BigInt::from(y));
        prop_assert_eq!((&a * &b).to_big(), &bx * &by);
        prop_assert_eq!((&a + &b).to_big(), &bx + &by);
        prop_assert_eq!((&a - &b).to_big(), &bx - &by);
        prop_assert_eq!(a.pow(e).to_big(), bx.pow(e));
    }

    #[test]
    fn perm_group_laws(u in perm(5), v in perm(5), w in perm(5)) {
        prop_assert!(u.compose(&u.inverse()).is_identity());
        prop_assert_eq!(u.compose(&v).compose(&w), u.compose(&v.compose(&w)));
        for i in 1..=5 {
            prop_assert_eq!(u.compose(&v).image(i), u.image(v.image(i)));
        }
        let word = u.reduced_word();
        prop_assert_eq!(word.len(), u.length());
        prop_assert_eq!(Perm::from_word(5, &word), u);
    }

    #[test]
    fn bruhat_criteria_agree(u in perm(5), v in perm(5)) {
        prop_assert_eq!(u.bruhat_le(&v), u.bruhat_le_tableau(&v));
        if u.bruhat_le(&v) && v.bruhat_le(&u) {
            prop_assert_eq!(u, v);
        }
    }

    #[test]
    fn hecke_clifford_associative(x in hc_elem(3), y in hc_elem(3), z in hc_elem(3)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn second_normal_form_round_trip(x in hc_elem(4)) {
        let b = to_basis_b(&x).unwrap();
        prop_assert_eq!(from_basis_b(4, &b), x);
    }

    #[test]
    fn blm_order_is_partial(a in base_matrix(3), b in base_matrix(3), c in base_matrix(3)) {
        prop_assert!(blm_leq(&a, &a));
        prop_assert!(!blm_lt(&a, &a));
        if blm_leq(&a, &b) && blm_leq(&b, &c) {
            prop_assert!(blm_leq(&a, &c));
        }
    }

    #[test]
    fn d_a_is_a_double_coset_rep(a in base_matrix(3)) {
        prop_assume!(a.size() > 0 && a.size() <= 8);
        let d = a.d_perm();
        prop_assert_eq!(d.length(), a.d_length_formula());
        prop_assert_eq!(Perm::from_word(a.size(), &a.d_word()), d);
        prop_assert!(queer_schur::combinatorics::is_double_coset_rep(&a.ro(), &d, &a.co()));
        prop_assert_eq!(BaseMatrix::from_double_coset(&a.ro(), &d, &a.co()), a);
    }

    #[test]
    fn super_matrix_json_round_trip(m in super_matrix(3)) {
        let s = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<SuperMatrix>(&s).unwrap(), m);
    }
}

/// A composable triple `(C, B, A)` with `co(C) = ro(B)` and `co(B) = ro(A)`.
fn chain(n: usize, r: usize) -> impl Strategy<Value = (SuperMatrix, SuperMatrix, SuperMatrix)> {
    let all = SuperMatrix::all(n, r);
    (0..all.len(), any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(move |(i, j, k)| {
        let a = all[i].clone();
        let left_of = |m: &SuperMatrix| all.iter().filter(|x| x.co() == m.ro()).cloned().collect::<Vec<_>>();
        let bs = left_of(&a);
        let b = j.get(&bs).clone();
        let cs = left_of(&b);
        let c = k.get(&cs).clone();
        (c, b, a)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_associate((c, b, a) in chain(2, 3)) {
        let e = queer_schur::Engine::global();
        let one = |m: &SuperMatrix| queer_schur::PhiVector::single(m.clone(), LaurentPoly::one());
        let left = e.product_vec(&e.product(&c, &b).unwrap(), &one(&a)).unwrap();
        let right = e.product_vec(&one(&c), &e.product(&b, &a).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
