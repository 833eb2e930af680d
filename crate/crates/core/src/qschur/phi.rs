//! Linear combinations `Σ γ_M φ_{M★}` of standard basis elements.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff_ring::LaurentPoly;
use crate::combinatorics::{BaseMatrix, SuperMatrix};

/// A finite combination of basis elements `φ_{M★}` with Laurent coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct PhiVector {
    terms: BTreeMap<SuperMatrix, LaurentPoly>,
}

impl PhiVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(m: SuperMatrix, f: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add(m, f);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMatrix, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &SuperMatrix> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &SuperMatrix) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, m: SuperMatrix, f: LaurentPoly) {
        if f.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += &f;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Add `f φ_{M★}` where `M★` is given by signed entries; terms whose
    /// matrix falls outside `M_n(N|N_2)` are dropped.
    pub fn add_shifted(&mut self, s: &Shift, f: LaurentPoly) {
        if let Some(m) = SuperMatrix::from_signed(s.n, &s.a0, &s.a1) {
            self.add(m, f);
        }
    }

    pub fn add_vec(&mut self, other: &PhiVector) {
        for (m, f) in &other.terms {
            self.add(m.clone(), f.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &PhiVector, k: &LaurentPoly) {
        for (m, f) in &other.terms {
            self.add(m.clone(), f * k);
        }
    }

    pub fn sub(&self, other: &PhiVector) -> PhiVector {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        out
    }

    pub fn scale(&self, k: &LaurentPoly) -> PhiVector {
        let mut out = PhiVector::zero();
        out.add_scaled(self, k);
        out
    }

    /// Keep only the terms whose matrix satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&SuperMatrix) -> bool) -> PhiVector {
        PhiVector {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, f)| (m.clone(), f.clone()))
                .collect(),
        }
    }

    /// Distinct base matrices in the support.
    pub fn bases(&self) -> Vec<BaseMatrix> {
        let mut b: Vec<BaseMatrix> = self.terms.keys().map(|m| m.base()).collect();
        b.dedup();
        b.sort();
        b.dedup();
        b
    }

    /// Coefficients evaluated at `q = 1`.
    pub fn at_q_one(&self) -> PhiVector {
        let mut out = PhiVector::zero();
        for (m, f) in &self.terms {
            out.add(m.clone(), LaurentPoly::constant(f.eval_at_one()));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serialisable")
    }
}

#[derive(Serialize, Deserialize)]
struct PhiTerm {
    a0: Vec<Vec<u32>>,
    a1: Vec<Vec<u32>>,
    coeff: LaurentPoly,
}

impl Serialize for PhiVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<PhiTerm> = self
            .terms
            .iter()
            .map(|(m, f)| PhiTerm {
                a0: m.even().rows(),
                a1: m.odd().rows(),
                coeff: f.clone(),
            })
            .collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PhiVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let list: Vec<PhiTerm> = Vec::deserialize(d)?;
        let mut v = PhiVector::zero();
        for t in list {
            let m = SuperMatrix::from_rows(&t.a0, &t.a1).map_err(D::Error::custom)?;
            v.add(m, t.coeff);
        }
        Ok(v)
    }
}

/// Signed even and odd parts used while building `(A⁰ + ... | A¹ + ...)`.
#[derive(Clone, Debug)]
pub struct Shift {
    n: usize,
    a0: Vec<i64>,
    a1: Vec<i64>,
}

impl Shift {
    pub fn of(a: &SuperMatrix) -> Self {
        Shift {
            n: a.n(),
            a0: a.even_signed(),
            a1: a.odd_signed(),
        }
    }

    /// `(diag(μ) | O)` in signed form.
    pub fn diagonal(n: usize, mu: &[i64]) -> Self {
        let mut a0 = vec![0; n * n];
        for (i, &v) in mu.iter().enumerate() {
            a0[i * n + i] = v;
        }
        Shift { n, a0, a1: vec![0; n * n] }
    }

    /// Add `d E_{i,j}` to the even part.
    pub fn even(mut self, i: usize, j: usize, d: i64) -> Self {
        self.a0[(i - 1) * self.n + (j - 1)] += d;
        self
    }

    /// Add `d E_{i,j}` to the odd part.
    pub fn odd(mut self, i: usize, j: usize, d: i64) -> Self {
        self.a1[(i - 1) * self.n + (j - 1)] += d;
        self
    }

    /// Even part of `ev` with odd part of `od`.
    pub fn combine(ev: &Shift, od: &Shift) -> Shift {
        Shift {
            n: ev.n,
            a0: ev.a0.clone(),
            a1: od.a1.clone(),
        }
    }

    pub fn to_matrix(&self) -> Option<SuperMatrix> {
        SuperMatrix::from_signed(self.n, &self.a0, &self.a1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let a = SuperMatrix::from_rows(&[vec![1, 0], vec![0, 1]], &[vec![0, 1], vec![0, 0]]).unwrap();
        let v = PhiVector::single(a, LaurentPoly::from_terms([(-1, 2i64)]));
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[{"a0":[[1,0],[0,1]],"a1":[[0,1],[0,0]],"coeff":{"-1":2}}]"#);
        assert_eq!(serde_json::from_str::<PhiVector>(&s).unwrap(), v);
    }

    #[test]
    fn out_of_domain_terms_vanish() {
        let a = SuperMatrix::from_rows(&[vec![1, 0], vec![0, 1]], &[vec![0, 0], vec![0, 0]]).unwrap();
        let mut v = PhiVector::zero();
        v.add_shifted(&Shift::of(&a).even(1, 2, -1), LaurentPoly::one());
        v.add_shifted(&Shift::of(&a).odd(1, 1, 2), LaurentPoly::one());
        assert!(v.is_zero());
        v.add_shifted(&Shift::of(&a).even(1, 1, -1).odd(1, 1, 1), LaurentPoly::one());
        assert_eq!(v.len(), 1);
    }
}
