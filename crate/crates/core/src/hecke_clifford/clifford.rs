//! Clifford monomials `c^α = c_1^{α_1} ... c_r^{α_r}` as bit masks.
//!
//! Bit `j - 1` of a mask stands for `c_j`.

pub type Mask = u32;

#[inline]
pub fn bit(j: usize) -> Mask {
    1 << (j - 1)
}

#[inline]
pub fn has(mask: Mask, j: usize) -> bool {
    mask & bit(j) != 0
}

/// Bits strictly above position `j`.
#[inline]
fn above(j: usize) -> Mask {
    if j >= 32 {
        0
    } else {
        !0u32 << j
    }
}

/// `c^a c^b = sign * c^{a xor b}`, using `c_i^2 = -1` and `c_i c_j = -c_j c_i`.
#[inline]
pub fn mul(a: Mask, b: Mask) -> (i64, Mask) {
    let mut swaps = (a & b).count_ones();
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize + 1;
        swaps += (a & above(j)).count_ones();
        rest &= rest - 1;
    }
    (if swaps.is_multiple_of(2) { 1 } else { -1 }, a ^ b)
}

/// `|α|`.
pub fn weight(mask: Mask) -> u32 {
    mask.count_ones()
}

/// Bits as a `0/1` string of length `r`, `c_1` first.
pub fn to_bit_string(mask: Mask, r: usize) -> String {
    (1..=r).map(|j| if has(mask, j) { '1' } else { '0' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(mul(bit(1) | bit(2), bit(2) | bit(3)), (-1, bit(1) | bit(3)));
        assert_eq!(mul(bit(2), bit(1)), (-1, bit(1) | bit(2)));
        assert_eq!(mul(bit(1), bit(2)), (1, bit(1) | bit(2)));
        assert_eq!(mul(bit(1), bit(1)), (-1, 0));
    }

    #[test]
    fn associativity() {
        for a in 0..16u32 {
            for b in 0..16u32 {
                for c in 0..16u32 {
                    let (s1, ab) = mul(a, b);
                    let (s2, l) = mul(ab, c);
                    let (s3, bc) = mul(b, c);
                    let (s4, r) = mul(a, bc);
                    assert_eq!((s1 * s2, l), (s3 * s4, r));
                }
            }
        }
    }
}
