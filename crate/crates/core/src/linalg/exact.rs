use core::fmt::Debug;
use core::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};

/// Integer scalars usable by the fraction-free elimination routines.
///
/// `i64` runs the fast path and reports overflow through the checked
/// operations; `BigInt` never overflows.
pub trait ExactInt:
    Clone + Debug + Ord + Hash + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul
{
    fn to_big(&self) -> BigInt;
    fn from_big(value: &BigInt) -> Option<Self>;
}

impl ExactInt for i64 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn from_big(value: &BigInt) -> Option<Self> {
        // keep i64::MIN out so that negation can never overflow
        value.to_i64().filter(|v| *v != i64::MIN)
    }
}

impl ExactInt for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }

    fn from_big(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
}

/// `a*x - b*y`, or `None` on overflow.
#[inline]
pub(crate) fn cross<T: ExactInt>(a: &T, x: &T, b: &T, y: &T) -> Option<T> {
    a.checked_mul(x)?.checked_sub(&b.checked_mul(y)?)
}

/// Divides `v` by the gcd of its entries. Zero vectors are left untouched.
pub(crate) fn make_primitive<T: ExactInt>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_floor(&g);
    }
}

/// Negates `v` if its first nonzero entry is negative.
pub(crate) fn normalize_sign<T: ExactInt>(v: &mut [T]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub(crate) fn leading_index<T: ExactInt>(v: &[T]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

pub(crate) fn to_small(v: &[BigInt]) -> Option<alloc::vec::Vec<i64>> {
    v.iter().map(i64::from_big).collect()
}
