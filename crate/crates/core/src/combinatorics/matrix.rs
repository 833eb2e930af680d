//! Base matrices, super matrices and their row/column statistics.
//!
//! All indices are 1-based to match the usual matrix notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::{compositions, Composition};
use super::perm::Perm;
use crate::error::Error;

/// An `n x n` matrix over the naturals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseMatrix {
    n: usize,
    a: Vec<u32>,
}

impl BaseMatrix {
    pub fn zero(n: usize) -> Self {
        BaseMatrix { n, a: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Domain("matrix must have at least one row".into()));
        }
        let mut a = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Domain(format!("matrix is not square: {rows:?}")));
            }
            a.extend_from_slice(row);
        }
        Ok(BaseMatrix { n, a })
    }

    pub fn from_flat(n: usize, a: Vec<u32>) -> Self {
        assert_eq!(a.len(), n * n);
        BaseMatrix { n, a }
    }

    /// `diag(λ)`.
    pub fn diagonal(lambda: &Composition) -> Self {
        let n = lambda.len();
        let mut m = BaseMatrix::zero(n);
        for i in 1..=n {
            m.set(i, i, lambda.part(i));
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flat(&self) -> &[u32] {
        &self.a
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.a.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.a[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.a[(i - 1) * self.n + (j - 1)] = v;
    }

    /// `|A|`.
    pub fn size(&self) -> usize {
        self.a.iter().map(|&v| v as usize).sum()
    }

    pub fn is_diagonal(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| i == j || self.get(i, j) == 0))
    }

    pub fn ro(&self) -> Composition {
        Composition((1..=self.n).map(|i| (1..=self.n).map(|j| self.get(i, j)).sum()).collect())
    }

    pub fn co(&self) -> Composition {
        Composition((1..=self.n).map(|j| (1..=self.n).map(|i| self.get(i, j)).sum()).collect())
    }

    fn block_sum(&self, rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>) -> usize {
        let mut s = 0;
        for i in rows {
            for j in cols.clone() {
                s += self.get(i, j) as usize;
            }
        }
        s
    }

    /// `Σ_{u<k} a_{h,u}` for `1 <= k <= n+1`.
    pub fn row_prefix(&self, h: usize, k: usize) -> usize {
        (1..k).map(|u| self.get(h, u) as usize).sum()
    }

    /// `Σ_{j>k} a_{h,j}` for `0 <= k <= n`.
    pub fn row_suffix(&self, h: usize, k: usize) -> usize {
        (k + 1..=self.n).map(|j| self.get(h, j) as usize).sum()
    }

    /// Column-reading partial sums `ã_{i,j}` for `0 <= i <= n`, `1 <= j <= n`.
    pub fn tilde(&self, i: usize, j: usize) -> usize {
        self.block_sum(1..=self.n, 1..=j - 1) + self.block_sum(1..=i, j..=j)
    }

    /// Row-reading partial sums `â_{i,j}` for `1 <= i <= n`, `0 <= j <= n`.
    pub fn hat(&self, i: usize, j: usize) -> usize {
        self.block_sum(1..=i - 1, 1..=self.n) + self.block_sum(i..=i, 1..=j)
    }

    /// Hook sum `σ_{i,j} = μ̃_{j-1} + Σ_{u<=i, t>=j} a_{u,t}`.
    pub fn sigma(&self, i: usize, j: usize) -> usize {
        self.block_sum(1..=self.n, 1..=j - 1) + self.block_sum(1..=i, j..=self.n)
    }

    /// Size of the upper-right corner at `(h,k)`: `Σ_{s<h, t>k} a_{s,t}`.
    pub fn corner_upper_right(&self, h: usize, k: usize) -> usize {
        self.block_sum(1..=h - 1, k + 1..=self.n)
    }

    /// Size of the lower-left corner at `(h,k)`: `Σ_{i>h, j<k} a_{i,j}`.
    pub fn corner_lower_left(&self, h: usize, k: usize) -> usize {
        self.block_sum(h + 1..=self.n, 1..=k - 1)
    }

    /// Column-reading composition `ν_A = (a_11, ..., a_n1, a_12, ..., a_nn)`.
    pub fn nu(&self) -> Composition {
        let mut v = Vec::with_capacity(self.n * self.n);
        for j in 1..=self.n {
            for i in 1..=self.n {
                v.push(self.get(i, j));
            }
        }
        Composition(v)
    }

    /// `A + delta E_{h,k}`, or `None` if an entry would go negative.
    pub fn add_unit(&self, h: usize, k: usize, delta: i64) -> Option<Self> {
        let v = self.get(h, k) as i64 + delta;
        if v < 0 {
            return None;
        }
        let mut m = self.clone();
        m.set(h, k, v as u32);
        Some(m)
    }

    /// `A⁺_{h,k} = A + E_{h,k} - E_{h+1,k}`, defined when `a_{h+1,k} > 0`.
    pub fn raise(&self, h: usize, k: usize) -> Option<Self> {
        self.add_unit(h + 1, k, -1)?.add_unit(h, k, 1)
    }

    /// `A⁻_{h,k} = A - E_{h,k} + E_{h+1,k}`, defined when `a_{h,k} > 0`.
    pub fn lower(&self, h: usize, k: usize) -> Option<Self> {
        self.add_unit(h, k, -1)?.add_unit(h + 1, k, 1)
    }

    /// The distinguished double coset representative `d_A`, given by
    /// `d_A(ã_{h-1,k} + p) = â_{h,k-1} + p` for `1 <= p <= a_{h,k}`.
    pub fn d_perm(&self) -> Perm {
        let r = self.size();
        let mut images = vec![0usize; r];
        for k in 1..=self.n {
            for h in 1..=self.n {
                let src = self.tilde(h - 1, k);
                let dst = self.hat(h, k - 1);
                for p in 1..=self.get(h, k) as usize {
                    images[src + p - 1] = dst + p;
                }
            }
        }
        Perm::from_images(&images).expect("d_A is a permutation")
    }

    /// The factor `w_{i,j}` of the reduced expression of `d_A` as a word.
    pub fn w_factor(&self, i: usize, j: usize) -> Vec<usize> {
        let mut word = Vec::new();
        if i < 2 || j >= self.n {
            return word;
        }
        let a = self.get(i, j) as usize;
        let sig = self.sigma(i - 1, j);
        let til = self.tilde(i - 1, j);
        if a == 0 || sig == til {
            return word;
        }
        for k in 1..=a {
            let mut t = sig + k - 1;
            while t >= til + k {
                word.push(t);
                t -= 1;
            }
        }
        word
    }

    /// Reduced word of `d_A`: the factors `w_{i,j}` read down column 1,
    /// then column 2, and so on.
    pub fn d_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        for j in 1..self.n {
            for i in 2..=self.n {
                word.extend(self.w_factor(i, j));
            }
        }
        word
    }

    /// `Σ a_{i,j} |upper-right corner at (i,j)|`.
    pub fn d_length_formula(&self) -> usize {
        let mut l = 0;
        for i in 1..=self.n {
            for j in 1..=self.n {
                l += self.get(i, j) as usize * self.corner_upper_right(i, j);
            }
        }
        l
    }

    /// The shape condition under which `c_{â_{h,k-1}+p} T_{d_A} = T_{d_A} c_{ã_{h-1,k}+p}`
    /// for all `1 <= p <= a_{h,k}`: a nonzero entry whose lower-left corner vanishes.
    pub fn sdp_shape(&self, h: usize, k: usize) -> bool {
        self.get(h, k) > 0 && self.corner_lower_left(h, k) == 0
    }

    /// The matrix of the double coset `S_λ w S_μ`:
    /// `a_{i,j} = |block_i(λ) ∩ w(block_j(μ))|`.
    pub fn from_double_coset(lambda: &Composition, w: &Perm, mu: &Composition) -> Self {
        let n = lambda.len();
        assert_eq!(mu.len(), n);
        let mut m = BaseMatrix::zero(n);
        for x in 1..=mu.size() {
            let j = mu.block_of(x);
            let i = lambda.block_of(w.image(x));
            let v = m.get(i, j);
            m.set(i, j, v + 1);
        }
        m
    }

    /// All `n x n` matrices of size `r`.
    pub fn all(n: usize, r: usize) -> Vec<Self> {
        compositions(n * n, r)
            .into_iter()
            .map(|c| BaseMatrix { n, a: c.0 })
            .collect()
    }

    /// All matrices with row sums `λ` and column sums `μ`.
    pub fn with_margins(lambda: &Composition, mu: &Composition) -> Vec<Self> {
        let n = lambda.len();
        Self::all(n, lambda.size())
            .into_iter()
            .filter(|m| m.ro() == *lambda && m.co() == *mu)
            .collect()
    }
}

impl fmt::Debug for BaseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// The BLM partial order `B ⪯ A`: for all `s < t`,
/// `Σ_{i<=s, j>=t} b_{i,j} <= Σ_{i<=s, j>=t} a_{i,j}`, and for all `t < s`,
/// `Σ_{i>=s, j<=t} b_{i,j} <= Σ_{i>=s, j<=t} a_{i,j}`.
pub fn blm_leq(b: &BaseMatrix, a: &BaseMatrix) -> bool {
    let n = a.n;
    assert_eq!(b.n, n);
    for s in 1..=n {
        for t in 1..=n {
            if s < t {
                if b.block_sum(1..=s, t..=n) > a.block_sum(1..=s, t..=n) {
                    return false;
                }
            } else if t < s && b.block_sum(s..=n, 1..=t) > a.block_sum(s..=n, 1..=t) {
                return false;
            }
        }
    }
    true
}

/// `B ≺ A`: `B ⪯ A` and `B != A`.
pub fn blm_lt(b: &BaseMatrix, a: &BaseMatrix) -> bool {
    b != a && blm_leq(b, a)
}

/// A super matrix `(A⁰ | A¹)` with `A⁰` over the naturals and `A¹` over `{0,1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSuperMatrix", into = "RawSuperMatrix")]
pub struct SuperMatrix {
    n: usize,
    a0: Vec<u32>,
    a1: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSuperMatrix {
    n: usize,
    a0: Vec<Vec<u32>>,
    a1: Vec<Vec<u32>>,
}

impl TryFrom<RawSuperMatrix> for SuperMatrix {
    type Error = Error;

    fn try_from(raw: RawSuperMatrix) -> Result<Self, Error> {
        let m = SuperMatrix::from_rows(&raw.a0, &raw.a1)?;
        if m.n != raw.n {
            return Err(Error::Domain(format!(
                "declared n = {} but matrices are {}x{}",
                raw.n, m.n, m.n
            )));
        }
        Ok(m)
    }
}

impl From<SuperMatrix> for RawSuperMatrix {
    fn from(m: SuperMatrix) -> Self {
        RawSuperMatrix {
            n: m.n,
            a0: m.even().rows(),
            a1: m.odd().rows(),
        }
    }
}

impl SuperMatrix {
    pub fn from_rows(a0: &[Vec<u32>], a1: &[Vec<u32>]) -> Result<Self, Error> {
        let e = BaseMatrix::from_rows(a0)?;
        let o = BaseMatrix::from_rows(a1)?;
        Self::from_parts(&e, &o)
    }

    pub fn from_parts(a0: &BaseMatrix, a1: &BaseMatrix) -> Result<Self, Error> {
        if a0.n != a1.n {
            return Err(Error::Domain("even and odd parts differ in size".into()));
        }
        if a1.a.iter().any(|&v| v > 1) {
            return Err(Error::Domain("odd part must have entries in {0,1}".into()));
        }
        Ok(SuperMatrix {
            n: a0.n,
            a0: a0.a.clone(),
            a1: a1.a.iter().map(|&v| v as u8).collect(),
        })
    }

    /// `(A | O)`.
    pub fn even_only(a: &BaseMatrix) -> Self {
        SuperMatrix {
            n: a.n,
            a0: a.a.clone(),
            a1: vec![0; a.n * a.n],
        }
    }

    /// `(diag(λ) | O)`.
    pub fn diagonal(lambda: &Composition) -> Self {
        Self::even_only(&BaseMatrix::diagonal(lambda))
    }

    /// From signed entries; `None` outside the domain (a negative entry or
    /// an odd entry other than 0, 1).
    pub fn from_signed(n: usize, a0: &[i64], a1: &[i64]) -> Option<Self> {
        if a0.iter().any(|&v| v < 0) || a1.iter().any(|&v| !(0..=1).contains(&v)) {
            return None;
        }
        Some(SuperMatrix {
            n,
            a0: a0.iter().map(|&v| v as u32).collect(),
            a1: a1.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn a0(&self, i: usize, j: usize) -> u32 {
        self.a0[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    pub fn a1(&self, i: usize, j: usize) -> u32 {
        self.a1[(i - 1) * self.n + (j - 1)] as u32
    }

    /// Entry of the base matrix, `a_{i,j} = a⁰_{i,j} + a¹_{i,j}`.
    pub fn a(&self, i: usize, j: usize) -> u32 {
        self.a0(i, j) + self.a1(i, j)
    }

    pub fn even(&self) -> BaseMatrix {
        BaseMatrix { n: self.n, a: self.a0.clone() }
    }

    pub fn odd(&self) -> BaseMatrix {
        BaseMatrix {
            n: self.n,
            a: self.a1.iter().map(|&v| v as u32).collect(),
        }
    }

    /// The base `⌊A★⌋ = A⁰ + A¹`.
    pub fn base(&self) -> BaseMatrix {
        BaseMatrix {
            n: self.n,
            a: self.a0.iter().zip(&self.a1).map(|(&e, &o)| e + o as u32).collect(),
        }
    }

    pub fn even_signed(&self) -> Vec<i64> {
        self.a0.iter().map(|&v| v as i64).collect()
    }

    pub fn odd_signed(&self) -> Vec<i64> {
        self.a1.iter().map(|&v| v as i64).collect()
    }

    /// `|A¹| mod 2`.
    pub fn parity(&self) -> u8 {
        (self.a1.iter().map(|&v| v as u32).sum::<u32>() % 2) as u8
    }

    pub fn size(&self) -> usize {
        self.base().size()
    }

    pub fn ro(&self) -> Composition {
        self.base().ro()
    }

    pub fn co(&self) -> Composition {
        self.base().co()
    }

    /// All super matrices with the given base.
    pub fn with_base(base: &BaseMatrix) -> Vec<Self> {
        let cells: Vec<usize> = (0..base.a.len()).filter(|&i| base.a[i] > 0).collect();
        let mut out = Vec::with_capacity(1 << cells.len());
        for mask in 0u32..(1 << cells.len()) {
            let mut a1 = vec![0u8; base.a.len()];
            for (b, &c) in cells.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    a1[c] = 1;
                }
            }
            let a0 = base.a.iter().zip(&a1).map(|(&v, &o)| v - o as u32).collect();
            out.push(SuperMatrix { n: base.n, a0, a1 });
        }
        out.sort();
        out
    }

    /// `M_n(N|N_2)` restricted to size `r`.
    pub fn all(n: usize, r: usize) -> Vec<Self> {
        let mut out: Vec<Self> = BaseMatrix::all(n, r)
            .iter()
            .flat_map(Self::with_base)
            .collect();
        out.sort();
        out
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}|{:?})", self.even(), self.odd())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u32]]) -> BaseMatrix {
        BaseMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn tilde_of_small_diagonal() {
        let a = m(&[&[2, 0], &[0, 1]]);
        assert_eq!(a.tilde(1, 1), 2);
        assert_eq!(a.tilde(2, 1), 2);
        assert_eq!(a.tilde(1, 2), 2);
        assert_eq!(a.tilde(2, 2), 3);
        assert_eq!(a.tilde(0, 2), a.tilde(2, 1));
    }

    #[test]
    fn worked_d_perm() {
        let a = m(&[&[0, 3, 2], &[1, 1, 0], &[2, 0, 0]]);
        assert_eq!(a.sigma(1, 1), 5);
        let d = a.d_perm();
        assert_eq!(d.images(), vec![6, 8, 9, 1, 2, 3, 7, 4, 5]);
        assert_eq!(d.length(), 19);
        assert_eq!(a.d_length_formula(), 19);
        assert_eq!(Perm::from_word(9, &a.d_word()), d);
        assert_eq!(a.d_word().len(), 19);
    }

    #[test]
    fn hook_sum_identities() {
        let a = m(&[&[0, 3, 2], &[1, 1, 0], &[2, 0, 0]]);
        for h in 2..=3 {
            for k in 1..=3 {
                let s = a.sigma(h - 1, k);
                assert_eq!(s, a.tilde(h - 1, k) + a.corner_upper_right(h, k));
                assert_eq!(s, a.hat(h, k - 1) + a.corner_lower_left(h, k));
            }
        }
    }

    #[test]
    fn super_matrix_json() {
        let s = SuperMatrix::from_rows(&[vec![1, 0], vec![0, 0]], &[vec![0, 1], vec![0, 0]]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"n":2,"a0":[[1,0],[0,0]],"a1":[[0,1],[0,0]]}"#);
        assert_eq!(serde_json::from_str::<SuperMatrix>(&j).unwrap(), s);
        assert!(serde_json::from_str::<SuperMatrix>(r#"{"n":2,"a0":[[1,0],[0,0]],"a1":[[0,2],[0,0]]}"#).is_err());
        assert!(serde_json::from_str::<SuperMatrix>(r#"{"n":3,"a0":[[1,0],[0,0]],"a1":[[0,0],[0,0]]}"#).is_err());
    }

    #[test]
    fn with_base_counts() {
        let a = m(&[&[2, 0], &[1, 0]]);
        assert_eq!(SuperMatrix::with_base(&a).len(), 4);
    }
}
