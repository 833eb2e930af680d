//! Compositions, Young subgroups and distinguished coset representatives.

use serde::{Deserialize, Serialize};

use super::perm::{all_perms, Perm};

/// A composition `λ = (λ_1, ..., λ_m)` of `r` with possibly zero parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i`, 1-based.
    pub fn part(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Partial sum `λ̃_i = λ_1 + ... + λ_i`, with `λ̃_0 = 0`.
    pub fn partial(&self, i: usize) -> usize {
        self.0[..i].iter().map(|&p| p as usize).sum()
    }

    /// The (1-based) part containing the position `x`.
    pub fn block_of(&self, x: usize) -> usize {
        let mut acc = 0;
        for (i, &p) in self.0.iter().enumerate() {
            acc += p as usize;
            if x <= acc {
                return i + 1;
            }
        }
        panic!("position {x} outside composition of {}", self.size())
    }

    /// Whether `s_i` lies in the Young subgroup `S_λ`.
    pub fn contains_simple(&self, i: usize) -> bool {
        self.block_of(i) == self.block_of(i + 1)
    }

    /// Simple reflections generating `S_λ`.
    pub fn simple_generators(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.contains_simple(i)).collect()
    }

    /// Whether `w ∈ S_λ`.
    pub fn young_contains(&self, w: &Perm) -> bool {
        (1..=self.size()).all(|x| self.block_of(w.image(x)) == self.block_of(x))
    }

    /// Whether `w ∈ D_λ`, the shortest representatives of right cosets
    /// `S_λ w`: `l(s w) > l(w)` for every `s ∈ S_λ`.
    pub fn is_min_coset_rep(&self, w: &Perm) -> bool {
        let inv = w.inverse();
        self.simple_generators()
            .into_iter()
            .all(|i| !inv.has_right_descent(i))
    }

    /// Elements of `S_λ`.
    pub fn young_subgroup(&self) -> Vec<Perm> {
        all_perms(self.size())
            .iter()
            .filter(|w| self.young_contains(w))
            .copied()
            .collect()
    }

    /// Elements of `D_λ ∩ S_μ`.
    pub fn min_reps_within(&self, mu: &Composition) -> Vec<Perm> {
        all_perms(self.size())
            .iter()
            .filter(|w| mu.young_contains(w) && self.is_min_coset_rep(w))
            .copied()
            .collect()
    }
}

/// Whether `w ∈ D_{λ,μ} = D_λ ∩ D_μ^{-1}`.
pub fn is_double_coset_rep(lambda: &Composition, w: &Perm, mu: &Composition) -> bool {
    lambda.is_min_coset_rep(w) && mu.is_min_coset_rep(&w.inverse())
}

/// All compositions of `r` into exactly `n` parts, `Λ(n, r)`, in lexicographic order.
pub fn compositions(n: usize, r: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if cur.len() + 1 == n {
            cur.push(left as u32);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for p in 0..=left {
            cur.push(p as u32);
            rec(n, left - p, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        if r == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(n, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_sums_and_blocks() {
        let l = Composition(vec![2, 0, 3]);
        assert_eq!(l.partial(0), 0);
        assert_eq!(l.partial(2), 2);
        assert_eq!(l.block_of(3), 3);
        assert_eq!(l.simple_generators(), vec![1, 3, 4]);
    }

    #[test]
    fn coset_rep_counts() {
        // |D_λ| = r! / |S_λ|
        let l = Composition(vec![2, 1, 2]);
        let reps = all_perms(5).iter().filter(|w| l.is_min_coset_rep(w)).count();
        assert_eq!(reps * l.young_subgroup().len(), 120);
        // each element factors uniquely as x d with x ∈ S_λ, d ∈ D_λ
        for w in all_perms(5).iter() {
            let n = l
                .young_subgroup()
                .iter()
                .filter(|x| l.is_min_coset_rep(&x.inverse().compose(w)))
                .count();
            assert_eq!(n, 1);
        }
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(compositions(1, 4), vec![Composition(vec![4])]);
    }
}
