//! Coefficient ring abstraction for the exact polynomial core.
//!
//! Everything downstream (Laurent polynomials, Bareiss elimination,
//! resultants, state sums) is generic over an integer-like scalar. The
//! production scalar is [`num_bigint::BigInt`]; fixed-width integers such
//! as `i64` satisfy the same bounds and are handy for small oracles, at
//! the caller's own overflow risk.

use std::fmt;

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed coefficient ring.
///
/// `Signed` brings in `Zero`, `One`, the ring ops, and `abs`; the
/// primitive conversions are used at serialization boundaries and for
/// building small constants like `±1`.
pub trait Coeff:
    Clone + Eq + fmt::Debug + fmt::Display + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 must embed into the coefficient ring")
    }
}

impl<T> Coeff for T where
    T: Clone + Eq + fmt::Debug + fmt::Display + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Exact division, panicking on a nonzero remainder.
///
/// Callers only invoke this where divisibility is guaranteed (Bareiss
/// pivots, known-exact polynomial quotients), so a remainder is an
/// internal invariant violation, not a user error.
pub fn exact_div<C: Coeff>(a: &C, b: &C) -> C {
    debug_assert!(!b.is_zero(), "exact_div by zero");
    let q = a.clone() / b.clone();
    let r = a.clone() - q.clone() * b.clone();
    assert!(r.is_zero(), "inexact coefficient division: {a} / {b}");
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn exact_div_i64() {
        assert_eq!(exact_div(&-12i64, &4), -3);
        assert_eq!(exact_div(&0i64, &7), 0);
    }

    #[test]
    fn exact_div_bigint() {
        let a = BigInt::from(3) * BigInt::from(10).pow(30);
        let b = BigInt::from(10).pow(30);
        assert_eq!(exact_div(&a, &b), BigInt::from(3));
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn exact_div_rejects_remainder() {
        exact_div(&5i64, &2);
    }
}
