//! Elements of `H^c_r` in the normal form `Σ f_{w,α} T_w c^α`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use super::clifford::{self, Mask};
use crate::coeff_ring::LaurentPoly;
use crate::combinatorics::Perm;
use crate::error::{Error, Result};

/// An element of the Hecke-Clifford superalgebra of rank `r`, stored in the
/// basis `{T_w c^α}` with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HCElem {
    rank: usize,
    terms: BTreeMap<(Perm, Mask), LaurentPoly>,
}

fn accumulate(map: &mut BTreeMap<(Perm, Mask), LaurentPoly>, key: (Perm, Mask), f: LaurentPoly) {
    if f.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(f);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &f;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl HCElem {
    pub fn zero(rank: usize) -> Self {
        HCElem { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::t(&Perm::identity(rank))
    }

    /// `T_w`.
    pub fn t(w: &Perm) -> Self {
        Self::monomial(*w, 0, LaurentPoly::one())
    }

    /// `T_i`.
    pub fn t_simple(rank: usize, i: usize) -> Self {
        Self::t(&Perm::from_word(rank, &[i]))
    }

    /// `c_j`.
    pub fn c(rank: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= rank, "c_{j} out of range for rank {rank}");
        Self::monomial(Perm::identity(rank), clifford::bit(j), LaurentPoly::one())
    }

    /// `f T_w c^α`.
    pub fn monomial(w: Perm, mask: Mask, f: LaurentPoly) -> Self {
        let mut e = Self::zero(w.rank());
        accumulate(&mut e.terms, (w, mask), f);
        e
    }

    pub fn scalar(rank: usize, f: LaurentPoly) -> Self {
        Self::monomial(Perm::identity(rank), 0, f)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, Mask, &LaurentPoly)> {
        self.terms.iter().map(|((w, m), f)| (w, *m, f))
    }

    pub fn coeff(&self, w: &Perm, mask: Mask) -> LaurentPoly {
        self.terms.get(&(*w, mask)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Perm, mask: Mask, f: LaurentPoly) {
        assert_eq!(w.rank(), self.rank);
        accumulate(&mut self.terms, (w, mask), f);
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            Err(Error::RankMismatch(self.rank, other.rank))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (k, f) in &other.terms {
            accumulate(&mut out.terms, *k, f.clone());
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.check_rank(other).expect("rank mismatch");
        for (k, f) in &other.terms {
            accumulate(&mut self.terms, *k, f.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, f: &LaurentPoly) {
        self.check_rank(other).expect("rank mismatch");
        if f.is_zero() {
            return;
        }
        for (k, g) in &other.terms {
            accumulate(&mut self.terms, *k, g * f);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("rank mismatch")
    }

    pub fn scale(&self, f: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.rank);
        out.add_scaled(self, f);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&LaurentPoly::constant(-1))
    }

    /// `self · T_i`.
    pub fn mul_t(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.rank, "T_{i} out of range for rank {}", self.rank);
        let qm1 = LaurentPoly::from_terms([(1, 1i64), (0, -1)]);
        let q = LaurentPoly::q();
        let bi = clifford::bit(i);
        let bj = clifford::bit(i + 1);
        let mut out = BTreeMap::new();
        for ((w, a), f) in &self.terms {
            // c^α T_i = ε T_i c^{α'} + (q-1)(c^α - c^{α''})
            let (eps, a1, extra) = match (a & bi != 0, a & bj != 0) {
                (false, false) => (1i64, *a, None),
                (false, true) => (1, (a & !bj) | bi, None),
                (true, false) => (1, (a & !bi) | bj, Some((a & !bi) | bj)),
                (true, true) => (-1, *a, Some(a & !(bi | bj))),
            };
            let ef = f.scale_i64(eps);
            let ws = w.mul_simple(i);
            if !w.has_right_descent(i) {
                accumulate(&mut out, (ws, a1), ef);
            } else {
                accumulate(&mut out, (ws, a1), &ef * &q);
                accumulate(&mut out, (*w, a1), &ef * &qm1);
            }
            if let Some(a2) = extra {
                let g = f * &qm1;
                accumulate(&mut out, (*w, *a), g.clone());
                accumulate(&mut out, (*w, a2), -g);
            }
        }
        HCElem { rank: self.rank, terms: out }
    }

    /// `self · c^β`.
    pub fn mul_c_mask(&self, b: Mask) -> Self {
        if b == 0 {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for ((w, a), f) in &self.terms {
            let (s, m) = clifford::mul(*a, b);
            accumulate(&mut out, (*w, m), f.scale_i64(s));
        }
        HCElem { rank: self.rank, terms: out }
    }

    /// `self · c_j`.
    pub fn mul_c(&self, j: usize) -> Self {
        assert!(j >= 1 && j <= self.rank);
        self.mul_c_mask(clifford::bit(j))
    }

    /// `self · T_w`, along a reduced word of `w`.
    pub fn mul_perm(&self, w: &Perm) -> Self {
        let mut out = self.clone();
        for i in w.reduced_word() {
            out = out.mul_t(i);
        }
        out
    }

    /// `self · T_i^{-1} = q^{-1} self · (T_i - (q-1))`.
    pub fn mul_t_inv(&self, i: usize) -> Self {
        let qm1 = LaurentPoly::from_terms([(1, 1i64), (0, -1)]);
        let mut out = self.mul_t(i);
        out.add_scaled(self, &-&qm1);
        out.scale(&LaurentPoly::q_pow(-1))
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_rank(other).expect("rank mismatch");
        let mut memo: HashMap<Perm, HCElem> = HashMap::new();
        memo.insert(Perm::identity(self.rank), self.clone());
        let mut out = Self::zero(self.rank);
        let mut by_perm: BTreeMap<Perm, Vec<(Mask, &LaurentPoly)>> = BTreeMap::new();
        for ((v, b), g) in &other.terms {
            by_perm.entry(*v).or_default().push((*b, g));
        }
        for (v, list) in by_perm {
            let xv = right_perm(&mut memo, &v);
            for (b, g) in list {
                out.add_scaled(&xv.mul_c_mask(b), g);
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self.mul(other))
    }

    /// `c_j · self`.
    pub fn c_mul(&self, j: usize) -> Self {
        Self::c(self.rank, j).mul(self)
    }

    /// `T_i · self`.
    pub fn t_mul(&self, i: usize) -> Self {
        Self::t_simple(self.rank, i).mul(self)
    }

    /// Parity when every term has the same Clifford degree mod 2.
    pub fn parity(&self) -> Option<u8> {
        let mut p = None;
        for (_, m) in self.terms.keys() {
            let b = (m.count_ones() % 2) as u8;
            match p {
                None => p = Some(b),
                Some(x) if x != b => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }

    /// Coefficients evaluated at `q = 1`, as an element of the Sergeev
    /// superalgebra written in the same basis.
    pub fn at_q_one(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for ((w, m), f) in &self.terms {
            out.add_term(*w, *m, LaurentPoly::constant(f.eval_at_one()));
        }
        out
    }

    /// Debug dump, one term per line: `T[w-images] c[mask-bits] : laurent-json`,
    /// sorted by length of `w`, then `w` and mask lexicographically.
    pub fn dump(&self) -> String {
        let mut rows: Vec<(usize, Vec<usize>, String, String)> = self
            .terms
            .iter()
            .map(|((w, m), f)| {
                (
                    w.length(),
                    w.images(),
                    clifford::to_bit_string(*m, self.rank),
                    serde_json::to_string(f).unwrap(),
                )
            })
            .collect();
        rows.sort();
        let mut s = String::new();
        for (_, w, m, f) in rows {
            let w: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "T[{}] c[{}] : {}", w.join(","), m, f);
        }
        s
    }
}

/// `x · T_v`, reusing memoised products for prefixes of a reduced word of `v`.
fn right_perm(memo: &mut HashMap<Perm, HCElem>, v: &Perm) -> HCElem {
    if let Some(e) = memo.get(v) {
        return e.clone();
    }
    let i = v.first_right_descent().expect("identity is memoised");
    let shorter = v.mul_simple(i);
    let prev = right_perm(memo, &shorter);
    let e = prev.mul_t(i);
    memo.insert(*v, e.clone());
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    fn qm1() -> LaurentPoly {
        LaurentPoly::from_terms([(1, 1i64), (0, -1)])
    }

    #[test]
    fn quadratic_relation() {
        let t1 = HCElem::t_simple(2, 1);
        let lhs = t1.mul(&t1);
        let mut rhs = t1.scale(&qm1());
        rhs.add_assign(&HCElem::scalar(2, q()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_relation() {
        // c_1 T_1 = T_1 c_2 + (q-1)(c_1 - c_2)
        let lhs = HCElem::c(2, 1).mul(&HCElem::t_simple(2, 1));
        let mut rhs = HCElem::t_simple(2, 1).mul_c(2);
        rhs.add_assign(&HCElem::c(2, 1).sub(&HCElem::c(2, 2)).scale(&qm1()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dump_format() {
        let e = HCElem::t_simple(2, 1).mul_c(2);
        assert_eq!(e.dump(), "T[2,1] c[01] : {\"0\":1}\n");
    }

    #[test]
    fn inverse() {
        let t = HCElem::t_simple(3, 2);
        assert_eq!(t.mul_t_inv(2), HCElem::one(3));
    }
}
