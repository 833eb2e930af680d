//! Arbitrary precision integers with an inline machine-word fast path.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An integer that stays in an `i64` until an operation overflows.
///
/// Values that fit in an `i64` are always stored as `Small`, so derived
/// equality and hashing agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    /// True for `1` and `-1`.
    pub fn is_unit(&self) -> bool {
        matches!(self, Integer::Small(1) | Integer::Small(-1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Big(BigInt::from(*v).abs()),
            },
            Integer::Big(b) => Integer::from_big(b.abs()),
        }
    }

    /// Quotient `self / d` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Integer) -> Option<Integer> {
        if d.is_zero() {
            return None;
        }
        if let (Integer::Small(a), Integer::Small(b)) = (self, d) {
            if let Some(r) = a.checked_rem(*b) {
                return if r == 0 {
                    Some(Integer::Small(a / b))
                } else {
                    None
                };
            }
        }
        let (q, r) = self.to_big().div_rem(&d.to_big());
        if r.is_zero() {
            Some(Integer::from_big(q))
        } else {
            None
        }
    }

    /// Multiply in place by a machine integer.
    pub fn mul_i64(&self, k: i64) -> Integer {
        if let Integer::Small(a) = self {
            if let Some(v) = a.checked_mul(k) {
                return Integer::Small(v);
            }
        }
        Integer::from_big(self.to_big() * k)
    }

    pub fn pow(&self, e: u32) -> Integer {
        let mut acc = Integer::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<i128> for Integer {
    fn from(v: i128) -> Self {
        match i64::try_from(v) {
            Ok(s) => Integer::Small(s),
            Err(_) => Integer::Big(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(v) => Ok(Integer::Small(v)),
            Err(_) => s.parse::<BigInt>().map(Integer::from_big),
        }
    }
}

impl<'a> Add<&'a Integer> for &'a Integer {
    type Output = Integer;

    fn add(self, rhs: &'a Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Integer::Small(v);
            }
        }
        Integer::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Integer> for &'a Integer {
    type Output = Integer;

    fn sub(self, rhs: &'a Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Integer::Small(v);
            }
        }
        Integer::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Integer> for &'a Integer {
    type Output = Integer;

    fn mul(self, rhs: &'a Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Integer::Small(v);
            }
        }
        Integer::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Integer {
    type Output = Integer;

    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;

    fn neg(self) -> Integer {
        -&self
    }
}

impl Add for Integer {
    type Output = Integer;

    fn add(self, rhs: Integer) -> Integer {
        &self + &rhs
    }
}

impl Sub for Integer {
    type Output = Integer;

    fn sub(self, rhs: Integer) -> Integer {
        &self - &rhs
    }
}

impl Mul for Integer {
    type Output = Integer;

    fn mul(self, rhs: Integer) -> Integer {
        &self * &rhs
    }
}

impl AddAssign<&Integer> for Integer {
    fn add_assign(&mut self, rhs: &Integer) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Integer> for Integer {
    fn sub_assign(&mut self, rhs: &Integer) {
        *self = &*self - rhs;
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }

    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_shrinks_back() {
        let big = Integer::from(i64::MAX);
        let s = &big + &Integer::ONE;
        assert!(matches!(s, Integer::Big(_)));
        let back = &s - &Integer::ONE;
        assert_eq!(back, Integer::Small(i64::MAX));
        let sq = &big * &big;
        assert_eq!(sq.div_exact(&big), Some(big.clone()));
    }

    #[test]
    fn min_value_negation() {
        let m = Integer::from(i64::MIN);
        let n = -&m;
        assert!(matches!(n, Integer::Big(_)));
        assert_eq!(-&n, m);
    }

    #[test]
    fn exact_division() {
        assert_eq!(Integer::from(12).div_exact(&Integer::from(-4)), Some(Integer::from(-3)));
        assert_eq!(Integer::from(12).div_exact(&Integer::from(5)), None);
        assert_eq!(Integer::from(1).div_exact(&Integer::ZERO), None);
    }

    #[test]
    fn parse_round_trip() {
        let s = "123456789012345678901234567890";
        let v: Integer = s.parse().unwrap();
        assert_eq!(v.to_string(), s);
        assert_eq!("-7".parse::<Integer>().unwrap(), Integer::from(-7));
    }
}
