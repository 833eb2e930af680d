//! Permutations of `{1, ..., r}` for `r <= 16`, packed four bits per image.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::Error;

pub const MAX_RANK: usize = 16;

/// A permutation `w` of `{1, ..., r}`.
///
/// Nibble `i` of `code` holds `w(i + 1) - 1`. Composition follows functions:
/// `(u v)(x) = u(v(x))`, so `w s_i` swaps the images at positions `i, i+1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    len: u8,
    code: u64,
}

impl Perm {
    pub fn identity(r: usize) -> Perm {
        assert!(r <= MAX_RANK, "rank {r} exceeds {MAX_RANK}");
        let mut code = 0u64;
        for i in 0..r {
            code |= (i as u64) << (4 * i);
        }
        Perm { len: r as u8, code }
    }

    /// From one-line notation with 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Perm, Error> {
        let r = images.len();
        if r > MAX_RANK {
            return Err(Error::Domain(format!("rank {r} exceeds {MAX_RANK}")));
        }
        let mut seen = 0u32;
        let mut code = 0u64;
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v > r || seen & (1 << (v - 1)) != 0 {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
            seen |= 1 << (v - 1);
            code |= ((v - 1) as u64) << (4 * i);
        }
        Ok(Perm { len: r as u8, code })
    }

    /// `s_{i_1} s_{i_2} ... s_{i_k}` in `S_r`.
    pub fn from_word(r: usize, word: &[usize]) -> Perm {
        let mut w = Perm::identity(r);
        for &i in word {
            w = w.mul_simple(i);
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.len as usize
    }

    #[inline]
    fn raw(&self, i: usize) -> usize {
        ((self.code >> (4 * i)) & 0xF) as usize
    }

    /// `w(i)` for `1 <= i <= r`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.rank());
        self.raw(i - 1) + 1
    }

    pub fn images(&self) -> Vec<usize> {
        (1..=self.rank()).map(|i| self.image(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm::identity(self.rank())
    }

    pub fn inverse(&self) -> Perm {
        let mut code = 0u64;
        for i in 0..self.rank() {
            code |= (i as u64) << (4 * self.raw(i));
        }
        Perm { len: self.len, code }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len, other.len, "rank mismatch in composition");
        let mut code = 0u64;
        for i in 0..self.rank() {
            code |= (self.raw(other.raw(i)) as u64) << (4 * i);
        }
        Perm { len: self.len, code }
    }

    /// `w s_i`: swap the images at positions `i` and `i + 1`.
    #[inline]
    pub fn mul_simple(&self, i: usize) -> Perm {
        debug_assert!(i >= 1 && i < self.rank());
        let sh = 4 * (i - 1);
        let a = (self.code >> sh) & 0xF;
        let b = (self.code >> (sh + 4)) & 0xF;
        let cleared = self.code & !(0xFFu64 << sh);
        Perm {
            len: self.len,
            code: cleared | (b << sh) | (a << (sh + 4)),
        }
    }

    /// `s_i w`: swap the values `i` and `i + 1`.
    pub fn simple_mul(&self, i: usize) -> Perm {
        let mut code = 0u64;
        for p in 0..self.rank() {
            let v = self.raw(p);
            let v = if v == i - 1 {
                i
            } else if v == i {
                i - 1
            } else {
                v
            };
            code |= (v as u64) << (4 * p);
        }
        Perm { len: self.len, code }
    }

    /// `w(i) > w(i+1)`, i.e. `l(w s_i) < l(w)`.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.raw(i - 1) > self.raw(i)
    }

    /// `w^{-1}(i) > w^{-1}(i+1)`, i.e. `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let r = self.rank();
        let mut l = 0;
        for i in 0..r {
            for j in i + 1..r {
                if self.raw(i) > self.raw(j) {
                    l += 1;
                }
            }
        }
        l
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut word = Vec::with_capacity(w.length());
        'outer: loop {
            for i in 1..w.rank() {
                if w.has_right_descent(i) {
                    word.push(i);
                    w = w.mul_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// Some `i` with `l(w s_i) < l(w)`, if `w` is not the identity.
    pub fn first_right_descent(&self) -> Option<usize> {
        (1..self.rank()).find(|&i| self.has_right_descent(i))
    }

    /// Bruhat order `self <= w` via the lifting property: for a right
    /// descent `s` of `w`, `u <= w` iff `min(u, us) <= ws`.
    pub fn bruhat_le(&self, w: &Perm) -> bool {
        assert_eq!(self.len, w.len, "rank mismatch in Bruhat comparison");
        let mut u = *self;
        let mut w = *w;
        loop {
            let Some(i) = w.first_right_descent() else {
                return u.is_identity();
            };
            if u.has_right_descent(i) {
                u = u.mul_simple(i);
            }
            w = w.mul_simple(i);
            if u.length() > w.length() {
                return false;
            }
        }
    }

    /// Bruhat order by the tableau criterion: for every `k`, the sorted
    /// first `k` images of `self` are dominated entrywise by those of `w`.
    pub fn bruhat_le_tableau(&self, w: &Perm) -> bool {
        let r = self.rank();
        for k in 1..=r {
            let mut a: Vec<usize> = (0..k).map(|i| self.raw(i)).collect();
            let mut b: Vec<usize> = (0..k).map(|i| w.raw(i)).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

static ALL_PERMS: [OnceLock<Arc<Vec<Perm>>>; MAX_RANK + 1] = [const { OnceLock::new() }; MAX_RANK + 1];

/// All of `S_r` in lexicographic order of one-line notation. Cached.
pub fn all_perms(r: usize) -> Arc<Vec<Perm>> {
    assert!(r <= 9, "refusing to enumerate S_{r}");
    ALL_PERMS[r]
        .get_or_init(|| {
            let mut cur: Vec<usize> = (1..=r).collect();
            let mut out = vec![Perm::from_images(&cur).unwrap()];
            while next_permutation(&mut cur) {
                out.push(Perm::from_images(&cur).unwrap());
            }
            Arc::new(out)
        })
        .clone()
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_convention() {
        let s1 = Perm::from_word(3, &[1]);
        let s2 = Perm::from_word(3, &[2]);
        assert_eq!(s1.compose(&s2).images(), vec![2, 3, 1]);
        assert_eq!(s1.compose(&s2), Perm::from_word(3, &[1, 2]));
    }

    #[test]
    fn reduced_word_round_trip() {
        for w in all_perms(5).iter() {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Perm::from_word(5, &word), *w);
        }
    }

    #[test]
    fn left_and_right_multiplication() {
        let w = Perm::from_images(&[3, 1, 4, 2]).unwrap();
        let s2 = Perm::from_word(4, &[2]);
        assert_eq!(w.mul_simple(2), w.compose(&s2));
        assert_eq!(w.simple_mul(2), s2.compose(&w));
        assert_eq!(w.inverse().compose(&w), Perm::identity(4));
    }

    #[test]
    fn bruhat_criteria_agree() {
        let ps = all_perms(4);
        for u in ps.iter() {
            for w in ps.iter() {
                assert_eq!(u.bruhat_le(w), u.bruhat_le_tableau(w), "{u:?} {w:?}");
            }
        }
    }

    #[test]
    fn rejects_bad_images() {
        assert!(Perm::from_images(&[1, 1]).is_err());
        assert!(Perm::from_images(&[0, 1]).is_err());
        assert_eq!(all_perms(4).len(), 24);
    }
}
