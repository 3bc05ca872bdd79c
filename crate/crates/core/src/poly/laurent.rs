//! Integer-coefficient Laurent polynomials in one variable `t`.
//!
//! The representation is dense: a lowest exponent (possibly negative) and
//! the coefficient run from there upward. The zero polynomial is the
//! unique value with an empty coefficient vector; nonzero values keep
//! their first and last coefficients nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::{exact_div, Coeff};
use crate::error::{Result, SpiralError};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    minexp: i64,
    coeffs: Vec<C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { minexp: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    pub fn constant_i64(v: i64) -> Self {
        Self::constant(C::from_i64(v))
    }

    /// The monomial `c * t^exp`.
    pub fn term(c: C, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::term(C::one(), 1)
    }

    /// Builds a polynomial from `coeffs[i] * t^(minexp + i)`, trimming
    /// zero coefficients at both ends.
    pub fn from_coeffs(minexp: i64, coeffs: Vec<C>) -> Self {
        let mut p = LaurentPoly { minexp, coeffs };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(minexp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(minexp, coeffs.iter().map(|&v| C::from_i64(v)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.minexp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.minexp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.minexp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent. 0 for the zero polynomial.
    pub fn minexp(&self) -> i64 {
        self.minexp
    }

    /// Highest exponent. 0 for the zero polynomial.
    pub fn maxexp(&self) -> i64 {
        if self.is_zero() { 0 } else { self.minexp + self.coeffs.len() as i64 - 1 }
    }

    /// Highest minus lowest exponent; 0 for zero.
    pub fn span(&self) -> usize {
        if self.is_zero() { 0 } else { self.coeffs.len() - 1 }
    }

    pub fn coeff_at(&self, exp: i64) -> C {
        let idx = exp - self.minexp;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            C::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Coefficients from `minexp` upward.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn trailing_coeff(&self) -> C {
        self.coeffs.first().cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_coeff(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    /// Multiplication by the unit `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { minexp: self.minexp + k, coeffs: self.coeffs.clone() }
    }

    /// Multiplication by the monomial `c * t^k`.
    pub fn mul_term(&self, c: &C, k: i64) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            minexp: self.minexp + k,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Evaluation at `t = 1` or `t = -1` (the only integer units, so the
    /// negative exponents cause no trouble).
    pub fn eval_unit(&self, at: i8) -> C {
        assert!(at == 1 || at == -1);
        let mut acc = C::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.minexp + i as i64;
            if at == 1 || e.rem_euclid(2) == 0 {
                acc = acc + c.clone();
            } else {
                acc = acc - c.clone();
            }
        }
        acc
    }

    /// The substitution `t -> 1/t`.
    pub fn reversed(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { minexp: -self.maxexp(), coeffs }
    }

    /// Whether the coefficient run equals plus or minus its own reversal.
    pub fn is_palindromic_up_to_sign(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let n = self.coeffs.len();
        let fwd = || self.coeffs.iter();
        let same = fwd().zip(self.coeffs.iter().rev()).all(|(a, b)| a == b);
        let anti = fwd().zip(self.coeffs.iter().rev()).all(|(a, b)| *a == -b.clone());
        let _ = n;
        same || anti
    }

    /// The unique associate `±t^k · self` with lowest exponent 0 and a
    /// positive constant term.
    pub fn normalize_unit(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(SpiralError::ZeroPolynomial);
        }
        let mut out = self.shifted(-self.minexp);
        if out.coeffs[0].is_negative() {
            out = -&out;
        }
        Ok(out)
    }

    /// Exact quotient `self / rhs` in the Laurent ring; panics if the
    /// division leaves a remainder (an internal invariant violation at
    /// every call site).
    pub fn exact_div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        // Strip the unit parts: both coefficient runs now start with a
        // nonzero constant term, so ordinary descending long division
        // applies; the exponent offset is restored at the end.
        let shift = self.minexp - rhs.minexp;
        let mut rem = self.coeffs.clone();
        let div = &rhs.coeffs;
        assert!(rem.len() >= div.len(), "inexact polynomial division (degree)");
        let qlen = rem.len() - div.len() + 1;
        let mut quot = vec![C::zero(); qlen];
        let dlead = div.last().unwrap();
        for qi in (0..qlen).rev() {
            let lead = rem[qi + div.len() - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let q = exact_div(&lead, dlead);
            for (di, d) in div.iter().enumerate() {
                rem[qi + di] = rem[qi + di].clone() - q.clone() * d.clone();
            }
            quot[qi] = q;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division (remainder)");
        Self::from_coeffs(shift, quot)
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.minexp.min(rhs.minexp);
        let hi = self.maxexp().max(rhs.maxexp());
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.minexp - lo) as usize + i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let j = (rhs.minexp - lo) as usize + i;
            coeffs[j] = coeffs[j].clone() + c.clone();
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            minexp: self.minexp,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPoly::from_coeffs(self.minexp + rhs.minexp, coeffs)
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    /// Human form in descending powers, e.g. `t^2 - 3t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let exp = self.minexp + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            if !unit_mag || exp == 0 {
                write!(f, "{mag}")?;
            }
            match exp {
                0 => {}
                1 => write!(f, "t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fmt_debug_as_display!();
}

macro_rules! fmt_debug_as_display {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            fmt::Display::fmt(self, f)
        }
    };
}
use fmt_debug_as_display;

impl<C: Coeff> Serialize for LaurentPoly<C> {
    /// `{"minexp": k, "coeffs": [c0, c1, ...]}` listed from `minexp`
    /// upward. Coefficients that fit in an i64 serialize as numbers;
    /// anything wider falls back to a decimal string.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct CoeffSer<'a, C>(&'a C);
        impl<C: Coeff> Serialize for CoeffSer<'_, C> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                match self.0.to_i64() {
                    Some(v) => serializer.serialize_i64(v),
                    None => serializer.serialize_str(&self.0.to_string()),
                }
            }
        }
        let mut st = serializer.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("minexp", &self.minexp)?;
        st.serialize_field("coeffs", &self.coeffs.iter().map(CoeffSer).collect::<Vec<_>>())?;
        st.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffDe<C>(C);
        impl<'de, C: Coeff> Deserialize<'de> for CoeffDe<C> {
            fn deserialize<D: Deserializer<'de>>(
                deserializer: D,
            ) -> std::result::Result<Self, D::Error> {
                struct V<C>(std::marker::PhantomData<C>);
                impl<C: Coeff> Visitor<'_> for V<C> {
                    type Value = CoeffDe<C>;
                    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                        write!(f, "an integer or a decimal string")
                    }
                    fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<CoeffDe<C>, E> {
                        Ok(CoeffDe(C::from_i64(v)))
                    }
                    fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<CoeffDe<C>, E> {
                        num_traits::FromPrimitive::from_u64(v)
                            .map(CoeffDe)
                            .ok_or_else(|| E::custom("coefficient out of range"))
                    }
                    fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<CoeffDe<C>, E> {
                        C::from_str_radix(v, 10)
                            .map(CoeffDe)
                            .map_err(|_| E::custom(format!("bad coefficient: {v:?}")))
                    }
                }
                deserializer.deserialize_any(V(std::marker::PhantomData))
            }
        }

        #[derive(Deserialize)]
        struct Raw<C: Coeff> {
            minexp: i64,
            #[serde(bound = "")]
            coeffs: Vec<CoeffDe<C>>,
        }
        let raw = Raw::<C>::deserialize(deserializer)?;
        Ok(LaurentPoly::from_coeffs(raw.minexp, raw.coeffs.into_iter().map(|c| c.0).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = LaurentPoly<BigInt>;

    #[test]
    fn trims_to_canonical_form() {
        let p = P::from_i64_coeffs(-2, &[0, 0, 3, 0]);
        assert_eq!(p.minexp(), 0);
        assert_eq!(p.coeffs().len(), 1);
        assert!(P::from_i64_coeffs(5, &[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic_basics() {
        let a = P::from_i64_coeffs(0, &[1, 2]); // 1 + 2t
        let b = P::from_i64_coeffs(-1, &[1, -1]); // t^-1 - 1
        assert_eq!(&a * &b, P::from_i64_coeffs(-1, &[1, 1, -2]));
        assert_eq!(&(&a + &b) - &a, b);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn normalize_unit_examples() {
        // -t^2 + 3t - 1  ->  t^2 - 3t + 1
        let p = P::from_i64_coeffs(0, &[-1, 3, -1]);
        assert_eq!(p.normalize_unit().unwrap(), P::from_i64_coeffs(0, &[1, -3, 1]));
        // t^-2 - t^-1 + 1  ->  t^2 - t + 1 (shift by t^2)
        let p = P::from_i64_coeffs(-2, &[1, -1, 1]);
        assert_eq!(p.normalize_unit().unwrap(), P::from_i64_coeffs(0, &[1, -1, 1]));
        // 1 -> 1
        assert_eq!(P::one().normalize_unit().unwrap(), P::one());
        assert!(P::zero().normalize_unit().is_err());
    }

    #[test]
    fn exact_division_round_trips() {
        let a = P::from_i64_coeffs(-1, &[2, 0, -3, 1]);
        let b = P::from_i64_coeffs(2, &[-1, 1, 4]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b), a);
        assert_eq!(prod.exact_div(&a), b);
    }

    #[test]
    fn eval_and_reverse() {
        let p = P::from_i64_coeffs(-1, &[1, -3, 1]); // t^-1 - 3 + t
        assert_eq!(p.eval_unit(1), BigInt::from(-1));
        assert_eq!(p.eval_unit(-1), BigInt::from(-5));
        assert_eq!(p.reversed(), p);
        assert!(p.is_palindromic_up_to_sign());
    }

    #[test]
    fn display_form() {
        let p = P::from_i64_coeffs(0, &[1, -3, 1]);
        assert_eq!(p.to_string(), "t^2 - 3t + 1");
        let q = P::from_i64_coeffs(-2, &[-1, 0, 2]);
        assert_eq!(q.to_string(), "2 - t^-2");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn serde_round_trip() {
        let p = P::from_i64_coeffs(-1, &[1, -3, 1]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"minexp":-1,"coeffs":[1,-3,1]}"#);
        let back: P = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        // big coefficients fall back to strings
        let big = P::from_coeffs(0, vec![BigInt::from(10).pow(30)]);
        let js = serde_json::to_string(&big).unwrap();
        assert!(js.contains('"'));
        let back: P = serde_json::from_str(&js).unwrap();
        assert_eq!(back, big);
    }
}
