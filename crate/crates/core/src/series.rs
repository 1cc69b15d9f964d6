//! Exact power series in `q`, truncated at a fixed order.
//!
//! A [`TruncatedQSeries`] holds the coefficients of `q^0..=q^N` as
//! arbitrary-precision integers. The truncation order is part of the value:
//! combining series of different orders is an error, never an implicit
//! re-truncation.
//!
//! The constructors [`pochhammer`] and [`bracket`] expand the finite and
//! infinite q-Pochhammer symbols `(x; q^b)_n` and `[q^a; q^m]_n`. Infinite
//! products are cut at the first factor that is `1 mod q^(N+1)`, which is
//! exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sign of a monomial `±q^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn from_i64(s: i64) -> Option<Self> {
        match s {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Self {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// The monomial `sign * q^exponent`, used as the argument of a Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub sign: Sign,
    pub exponent: usize,
}

impl Monomial {
    /// `+q^exponent`
    pub fn q_pow(exponent: usize) -> Self {
        Monomial {
            sign: Sign::Plus,
            exponent,
        }
    }

    /// `-q^exponent`
    pub fn neg_q_pow(exponent: usize) -> Self {
        Monomial {
            sign: Sign::Minus,
            exponent,
        }
    }
}

/// Length of a Pochhammer product: a finite number of factors or infinitely many.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => f.write_str("inf"),
        }
    }
}

/// A power series `sum_{n=0}^{order} c_n q^n` with exact integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedQSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedQSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedQSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `c * q^exponent`, which is zero if `exponent > order`.
    pub fn monomial(c: BigInt, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// Builds a series from its coefficient vector; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        TruncatedQSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Zero-pads or cuts a coefficient list to exactly `order + 1` entries.
    pub fn from_coeffs_at(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedQSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Explicitly drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot truncate {} up to {}", self.order(), order);
        TruncatedQSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedQSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedQSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product truncated at the shared order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedQSeries { coeffs: out })
    }

    pub fn add_assign_checked(&mut self, other: &Self) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    /// Multiplicative inverse, defined when the constant term is `±1`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let unit = if c0.is_one() {
            Sign::Plus
        } else if (-c0).is_one() {
            Sign::Minus
        } else {
            return Err(Error::NotInvertible(c0.to_string()));
        };
        let order = self.order();
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        out.push(BigInt::from(unit.as_i64()));
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out[n - k];
                }
            }
            // b_n = -c0^{-1} * sum_{k>=1} a_k b_{n-k}, and c0^{-1} = c0
            out.push(match unit {
                Sign::Plus => -acc,
                Sign::Minus => acc,
            });
        }
        Ok(TruncatedQSeries { coeffs: out })
    }

    /// Multiplies in place by `(1 - sign * q^exponent)`.
    pub fn mul_binomial(&mut self, sign: Sign, exponent: usize) {
        let order = self.order();
        if exponent > order {
            return;
        }
        if exponent == 0 {
            match sign {
                Sign::Plus => self.coeffs.iter_mut().for_each(|c| c.set_zero()),
                Sign::Minus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
            }
            return;
        }
        for n in (exponent..=order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match sign {
                Sign::Plus => hi[0] -= &lo[n - exponent],
                Sign::Minus => hi[0] += &lo[n - exponent],
            }
        }
    }

    /// Divides in place by `(1 - sign * q^exponent)` for `exponent >= 1`.
    pub fn div_binomial(&mut self, sign: Sign, exponent: usize) {
        assert!(exponent >= 1, "1 - q^0 has no unit constant term");
        let order = self.order();
        for n in exponent..=order {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match sign {
                Sign::Plus => hi[0] += &lo[n - exponent],
                Sign::Minus => hi[0] -= &lo[n - exponent],
            }
        }
    }

    /// Multiplies by `sign * q^shift`, dropping what falls past the order.
    pub fn shifted(&self, sign: Sign, shift: usize) -> Self {
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        if shift <= order {
            for (n, c) in self.coeffs[..=order - shift].iter().enumerate() {
                out[n + shift] = match sign {
                    Sign::Plus => c.clone(),
                    Sign::Minus => -c,
                };
            }
        }
        TruncatedQSeries { coeffs: out }
    }

    /// Adds `sign * q^shift * other` into `self`; `other` may be shorter than `self`.
    pub(crate) fn add_shifted(&mut self, other: &[BigInt], sign: Sign, shift: usize) {
        let order = self.order();
        if shift > order {
            return;
        }
        let len = other.len().min(order - shift + 1);
        for (dst, src) in self.coeffs[shift..shift + len].iter_mut().zip(&other[..len]) {
            match sign {
                Sign::Plus => *dst += src,
                Sign::Minus => *dst -= src,
            }
        }
    }

    /// Replaces `q` by `q^k`.
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * k > order {
                break;
            }
            out[n * k] = c.clone();
        }
        TruncatedQSeries { coeffs: out }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Smallest exponent at which the two series differ, or `None` if they agree.
pub fn first_mismatch(a: &TruncatedQSeries, b: &TruncatedQSeries) -> Result<Option<usize>> {
    a.check_order(b)?;
    Ok(a.coeffs.iter().zip(&b.coeffs).position(|(x, y)| x != y))
}

/// Expansion of `(x; q^step)_count = prod_i (1 - x q^{step*i})` up to `q^order`.
pub fn pochhammer(x: Monomial, step: usize, count: Count, order: usize) -> Result<TruncatedQSeries> {
    if step == 0 {
        return Err(Error::Divergent("Pochhammer step must be at least 1".into()));
    }
    let mut s = TruncatedQSeries::one(order);
    match count {
        Count::Finite(n) => {
            for i in 0..n {
                let e = x.exponent + step * i;
                if e > order {
                    break;
                }
                s.mul_binomial(x.sign, e);
            }
        }
        Count::Infinite => {
            if x.exponent == 0 {
                return Err(Error::Divergent(format!(
                    "infinite Pochhammer with argument {}q^0 does not converge",
                    if x.sign == Sign::Minus { "-" } else { "" }
                )));
            }
            let mut e = x.exponent;
            while e <= order {
                s.mul_binomial(x.sign, e);
                e += step;
            }
        }
    }
    Ok(s)
}

/// Expansion of `[q^a; q^m]_count = (q^a; q^m)_count (q^{m-a}; q^m)_count`.
pub fn bracket(a: usize, modulus: usize, count: Count, order: usize) -> Result<TruncatedQSeries> {
    if a == 0 || a >= modulus {
        return Err(Error::Divergent(format!(
            "bracket [q^{a}; q^{modulus}] needs 1 <= a < m"
        )));
    }
    let mut s = pochhammer(Monomial::q_pow(a), modulus, count, order)?;
    let other = pochhammer(Monomial::q_pow(modulus - a), modulus, count, order)?;
    s = s.checked_mul(&other)?;
    Ok(s)
}

/// `1 / (q^step; q^step)_n`, built by repeated division.
pub fn inverse_q_factorial(step: usize, n: usize, order: usize) -> TruncatedQSeries {
    let mut s = TruncatedQSeries::one(order);
    for i in 1..=n {
        if step * i > order {
            break;
        }
        s.div_binomial(Sign::Plus, step * i);
    }
    s
}

impl fmt::Debug for TruncatedQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedQSeries({self} + O(q^{}))", self.order() + 1)
    }
}

impl fmt::Display for TruncatedQSeries {
    /// Space-separated decimal coefficients, constant term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

macro_rules! panicking_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &TruncatedQSeries {
            type Output = TruncatedQSeries;

            /// Panics if the orders differ; use the `checked_` method to get an error instead.
            fn $method(self, rhs: Self) -> TruncatedQSeries {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait for TruncatedQSeries {
            type Output = TruncatedQSeries;

            fn $method(self, rhs: Self) -> TruncatedQSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for &TruncatedQSeries {
    type Output = TruncatedQSeries;

    fn neg(self) -> TruncatedQSeries {
        TruncatedQSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TruncatedQSeries {
    type Output = TruncatedQSeries;

    fn neg(self) -> TruncatedQSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64]) -> TruncatedQSeries {
        TruncatedQSeries::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(s(&[1, 1]) + s(&[1, -1]), s(&[2, 0]));
        let x = s(&[3, -1, 4, 1]);
        assert_eq!(&x + &TruncatedQSeries::zero(3), x);
        assert_eq!(s(&[1, -1, -1, 1]) + s(&[0, 1, 1, 0]), s(&[1, 0, 0, 1]));
        assert_eq!(&x - &x, TruncatedQSeries::zero(3));
        assert_eq!(-s(&[1, -2]), s(&[-1, 2]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = s(&[1, 1]).checked_add(&s(&[1, 1, 1])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 1, right: 2 });
        assert!(s(&[1]).checked_mul(&s(&[1, 0])).is_err());
        assert!(first_mismatch(&s(&[1]), &s(&[1, 0])).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, -1, 0, 0]) * s(&[1, 1, 1, 1]), s(&[1, 0, 0, 0]));
        assert_eq!(s(&[1, -1, 0, 0]) * s(&[1, 0, -1, 0]), s(&[1, -1, -1, 1]));
        let x = s(&[2, 0, -7, 5]);
        assert_eq!(&x * &TruncatedQSeries::one(3), x);
    }

    #[test]
    fn invert_examples() {
        let geo = s(&[1, -1, 0, 0, 0, 0]).invert().unwrap();
        assert_eq!(geo, s(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(TruncatedQSeries::one(4).invert().unwrap(), TruncatedQSeries::one(4));
        let a = s(&[1, -1, -1, 1, 0, 0, 0]);
        let b = a.invert().unwrap();
        assert_eq!(&a * &b, TruncatedQSeries::one(6));
        assert_eq!(&b.coeffs()[..4], &[1, 1, 2, 2].map(BigInt::from));
        // negative unit constant term
        let neg = s(&[-1, 3, 0]);
        assert_eq!(&neg * &neg.invert().unwrap(), TruncatedQSeries::one(2));
    }

    #[test]
    fn invert_rejects_non_units() {
        assert_eq!(s(&[2, 1]).invert().unwrap_err(), Error::NotInvertible("2".into()));
        assert!(s(&[0, 1]).invert().is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let p = pochhammer(Monomial::q_pow(1), 1, Count::Finite(2), 3).unwrap();
        assert_eq!(p, s(&[1, -1, -1, 1]));
        let empty = pochhammer(Monomial::q_pow(1), 1, Count::Finite(0), 5).unwrap();
        assert_eq!(empty, TruncatedQSeries::one(5));
        // (q;q)_inf at order 3 against (1-q)(1-q^2)(1-q^3) multiplied out directly
        let direct = s(&[1, -1, 0, 0]) * s(&[1, 0, -1, 0]) * s(&[1, 0, 0, -1]);
        let inf = pochhammer(Monomial::q_pow(1), 1, Count::Infinite, 3).unwrap();
        assert_eq!(inf, direct);
        assert_eq!(inf, s(&[1, -1, -1, 0]));
    }

    #[test]
    fn pochhammer_divergence() {
        let err = pochhammer(Monomial::q_pow(0), 1, Count::Infinite, 3).unwrap_err();
        assert!(matches!(err, Error::Divergent(_)));
        // finite products with a q^0 argument are fine: (1;q)_2 = 0, (-1;q)_1 = 2
        assert!(pochhammer(Monomial::q_pow(0), 1, Count::Finite(2), 3).unwrap().is_zero());
        assert_eq!(
            pochhammer(Monomial::neg_q_pow(0), 1, Count::Finite(1), 2).unwrap(),
            s(&[2, 0, 0])
        );
    }

    #[test]
    fn bracket_examples() {
        let b = bracket(1, 5, Count::Infinite, 4).unwrap();
        let p1 = pochhammer(Monomial::q_pow(1), 5, Count::Infinite, 4).unwrap();
        let p4 = pochhammer(Monomial::q_pow(4), 5, Count::Infinite, 4).unwrap();
        assert_eq!(b, &p1 * &p4);
        assert_eq!(b, s(&[1, -1, 0, 0, -1]));
        assert_eq!(bracket(2, 7, Count::Finite(0), 6).unwrap(), TruncatedQSeries::one(6));
        // partitions of n <= 4 into parts = +-1 mod 5: only 1s and 4s
        assert_eq!(b.invert().unwrap(), s(&[1, 1, 1, 1, 2]));
        assert!(bracket(0, 5, Count::Infinite, 4).is_err());
        assert!(bracket(5, 5, Count::Infinite, 4).is_err());
    }

    #[test]
    fn first_mismatch_examples() {
        let x = s(&[1, 2, 3]);
        assert_eq!(first_mismatch(&x, &x).unwrap(), None);
        assert_eq!(first_mismatch(&TruncatedQSeries::one(3), &s(&[1, 0, 0, 1])).unwrap(), Some(3));
    }

    #[test]
    fn display_is_space_separated() {
        assert_eq!(s(&[1, -1, 0, 12]).to_string(), "1 -1 0 12");
    }

    #[test]
    fn inflate_and_shift() {
        assert_eq!(s(&[1, 1, 1, 1, 1]).inflate(2), s(&[1, 0, 1, 0, 1]));
        assert_eq!(s(&[1, 2, 3]).shifted(Sign::Minus, 1), s(&[0, -1, -2]));
        assert_eq!(s(&[1, 2, 3]).shifted(Sign::Plus, 3), s(&[0, 0, 0]));
    }

    fn series_strategy(order: usize) -> impl Strategy<Value = TruncatedQSeries> {
        proptest::collection::vec(-20i64..20, order + 1).prop_map(|v| s(&v))
    }

    fn unit_series_strategy(order: usize) -> impl Strategy<Value = TruncatedQSeries> {
        (prop::bool::ANY, proptest::collection::vec(-20i64..20, order)).prop_map(|(neg, mut v)| {
            v.insert(0, if neg { -1 } else { 1 });
            s(&v)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in series_strategy(12), b in series_strategy(12), c in series_strategy(12)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn invert_is_two_sided(a in unit_series_strategy(15)) {
            let b = a.invert().unwrap();
            prop_assert_eq!(&a * &b, TruncatedQSeries::one(15));
            prop_assert_eq!(&b * &a, TruncatedQSeries::one(15));
        }

        #[test]
        fn binomial_helpers_match_mul(a in series_strategy(10), e in 1usize..12, neg in prop::bool::ANY) {
            let sign = if neg { Sign::Minus } else { Sign::Plus };
            let factor = TruncatedQSeries::one(10).checked_sub(
                &TruncatedQSeries::monomial(BigInt::from(sign.as_i64()), e, 10)).unwrap();
            let mut m = a.clone();
            m.mul_binomial(sign, e);
            prop_assert_eq!(&m, &(&a * &factor));
            m.div_binomial(sign, e);
            prop_assert_eq!(m, a);
        }
    }
}
