//! Sparse Laurent polynomials in one variable `q` over the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::integer::Integer;

/// Dense products are used while the exponent span stays below this.
const DENSE_SPAN_LIMIT: i64 = 1 << 14;

/// A Laurent polynomial stored as `(exponent, coefficient)` pairs, sorted by
/// exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, Integer)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<Integer>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// Build from arbitrary pairs; repeated exponents are summed.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<Integer>,
    {
        let mut m: BTreeMap<i32, Integer> = BTreeMap::new();
        for (e, c) in it {
            let c = c.into();
            let slot = m.entry(e).or_default();
            *slot += &c;
        }
        LaurentPoly {
            terms: m.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(i32, Integer)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Returns `(sign, e)` when `self == sign * q^e` with `sign = ±1`.
    pub fn as_unit(&self) -> Option<(i64, i32)> {
        match self.terms.as_slice() {
            [(e, c)] if c.is_unit() => Some((c.to_i64().unwrap(), *e)),
            _ => None,
        }
    }

    pub fn coeff(&self, e: i32) -> Integer {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Integer::ZERO,
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Integer) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.mul_i64(k))).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Integer {
        let mut acc = Integer::ZERO;
        for (_, c) in &self.terms {
            acc += c;
        }
        acc
    }

    /// Value at an integer point; negative exponents need `x = ±1`.
    pub fn eval_i64(&self, x: i64) -> Option<Integer> {
        let mut acc = Integer::ZERO;
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                Integer::from(x).pow(*e as u32)
            } else if x == 1 || x == -1 {
                Integer::from(x).pow(e.unsigned_abs())
            } else {
                return None;
            };
            acc += &(c * &p);
        }
        Some(acc)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        LaurentPoly { terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.scale(c).shift(*e);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.scale(c).shift(*e);
        }
        let lo = self.terms[0].0 as i64 + other.terms[0].0 as i64;
        let hi = self.terms.last().unwrap().0 as i64 + other.terms.last().unwrap().0 as i64;
        if hi - lo < DENSE_SPAN_LIMIT {
            if let Some(p) = self.mul_dense_small(other, lo, hi) {
                return p;
            }
        }
        let mut m: BTreeMap<i32, Integer> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *m.entry(ea + eb).or_default() += &(ca * cb);
            }
        }
        LaurentPoly {
            terms: m.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Dense `i128` accumulation; `None` if any coefficient is large or a
    /// partial sum overflows.
    fn mul_dense_small(&self, other: &Self, lo: i64, hi: i64) -> Option<Self> {
        let mut buf = vec![0i128; (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            let ca = ca.to_i64()? as i128;
            for (eb, cb) in &other.terms {
                let cb = cb.to_i64()? as i128;
                let slot = &mut buf[(*ea as i64 + *eb as i64 - lo) as usize];
                *slot = slot.checked_add(ca * cb)?;
            }
        }
        let terms = buf
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| ((lo + i as i64) as i32, Integer::from(c)))
            .collect();
        Some(LaurentPoly { terms })
    }

    /// Exact quotient in `Z[q, q^-1]`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((s, e)) = d.as_unit() {
            return Some(self.scale_i64(s).shift(-e));
        }
        // Shift both to polynomials with nonzero constant term; the quotient
        // is then a polynomial and long division from the top is exact.
        let ea = self.terms[0].0;
        let eb = d.terms[0].0;
        let num = self.shift(-ea);
        let den = d.shift(-eb);
        let dl = den.terms.last().unwrap().0;
        let dlc = den.terms.last().unwrap().1.clone();
        let mut rem: BTreeMap<i32, Integer> = num.terms.into_iter().collect();
        let mut quo: Vec<(i32, Integer)> = Vec::new();
        while let Some((&top, c)) = rem.iter().next_back() {
            if top < dl {
                return None;
            }
            let qc = c.div_exact(&dlc)?;
            let qe = top - dl;
            for (e, dc) in &den.terms {
                let slot = rem.entry(e + qe).or_default();
                *slot -= &(dc * &qc);
                if slot.is_zero() {
                    rem.remove(&(e + qe));
                }
            }
            quo.push((qe, qc));
        }
        quo.reverse();
        Some(LaurentPoly { terms: quo }.shift(ea - eb))
    }

    /// `self += a * b`.
    pub fn add_mul(&mut self, a: &Self, b: &Self) {
        let p = a * b;
        *self += &p;
    }
}

/// Quantum integer `⟦m⟧_{q^step} = 1 + q^step + ... + q^{step (m-1)}`,
/// extended to negative `m` by `⟦-m⟧_x = -x^{-m} ⟦m⟧_x`.
pub fn quantum_int(m: i64, step: i32) -> LaurentPoly {
    if m >= 0 {
        LaurentPoly::from_terms((0..m).map(|i| (step * i as i32, 1i64)))
    } else {
        LaurentPoly::from_terms((1..=-m).map(|i| (-step * i as i32, -1i64)))
    }
}

/// `⟦m⟧_q`.
pub fn qint(m: i64) -> LaurentPoly {
    quantum_int(m, 1)
}

/// `⟦m⟧_{q^2}`.
pub fn qint_sq(m: i64) -> LaurentPoly {
    quantum_int(m, 2)
}

/// `⟦m⟧_{x,y} = ⟦m⟧_x - ⟦m⟧_y` with `x = q^step_x`, `y = q^step_y`.
pub fn quantum_int_diff(m: i64, step_x: i32, step_y: i32) -> LaurentPoly {
    &quantum_int(m, step_x) - &quantum_int(m, step_y)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.to_i64() {
                Some(v) => m.serialize_entry(&e.to_string(), &v)?,
                None => m.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        m.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonCoeff {
    Int(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, JsonCoeff> = BTreeMap::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (k, v) in raw {
            let e: i32 = k
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent key {k:?}")))?;
            let c = match v {
                JsonCoeff::Int(i) => Integer::from(i),
                JsonCoeff::Text(t) => t
                    .trim()
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {t:?}")))?,
            };
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, true);
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ts: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(ts.iter().copied())
    }

    #[test]
    fn product_example() {
        let a = p(&[(-1, 1), (2, -3)]);
        let b = p(&[(0, 1), (1, 1)]);
        assert_eq!(&a * &b, p(&[(-1, 1), (0, 1), (2, -3), (3, -3)]));
    }

    #[test]
    fn json_round_trip() {
        let a = p(&[(-1, 1), (2, -3)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"-1":1,"2":-3}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn quantum_values() {
        assert_eq!(qint(3), p(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(qint_sq(2), p(&[(0, 1), (2, 1)]));
        assert_eq!(quantum_int_diff(2, 2, 1), p(&[(1, -1), (2, 1)]));
        assert!(qint(0).is_zero());
        // ⟦-m⟧ = -q^{-m}⟦m⟧
        assert_eq!(qint(-2), (-qint(2)).shift(-2));
    }

    #[test]
    fn division() {
        let a = p(&[(-2, 2), (0, 5), (3, -1)]);
        let b = qint(4).shift(-3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&a), Some(b));
        assert_eq!(qint(3).div_exact(&qint(2)), None);
        assert_eq!(p(&[(0, 3)]).div_exact(&p(&[(0, 2)])), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(-1, 1), (0, -1), (2, -3)]).to_string(), "q^-1 - 1 - 3q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn large_coefficients_fall_back() {
        let big = LaurentPoly::from_terms([(0, i64::MAX), (1, i64::MAX)]);
        let sq = &big * &big;
        assert_eq!(sq.div_exact(&big), Some(big.clone()));
        let s = serde_json::to_string(&sq).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, sq);
    }
}
