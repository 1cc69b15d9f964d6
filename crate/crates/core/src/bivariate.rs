//! Polynomials in `x` of bounded degree with [`TruncatedQSeries`] coefficients.
//!
//! Truncation is independent in both variables. Multiplication by `x^e q^c`
//! and the substitution `x -> x q^t` only move coefficients to higher
//! degrees, so they are exact under both truncations. Products and inverses
//! are exact because every coefficient of `x^m q^n` only depends on lower
//! coefficients in both variables.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{Count, Sign, TruncatedQSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<TruncatedQSeries>,
}

impl BivariateSeries {
    pub fn zero(x_degree: usize, order: usize) -> Self {
        BivariateSeries {
            rows: vec![TruncatedQSeries::zero(order); x_degree + 1],
        }
    }

    pub fn one(x_degree: usize, order: usize) -> Self {
        let mut s = Self::zero(x_degree, order);
        s.rows[0] = TruncatedQSeries::one(order);
        s
    }

    /// `x^m * coeff`, zero if `m` exceeds the x-degree.
    pub fn x_monomial(m: usize, coeff: TruncatedQSeries, x_degree: usize) -> Self {
        let mut s = Self::zero(x_degree, coeff.order());
        if m <= x_degree {
            s.rows[m] = coeff;
        }
        s
    }

    /// Panics if the rows are empty or have different q orders.
    pub fn from_rows(rows: Vec<TruncatedQSeries>) -> Self {
        assert!(!rows.is_empty(), "a bivariate series needs at least one row");
        let order = rows[0].order();
        assert!(
            rows.iter().all(|r| r.order() == order),
            "every x-coefficient must share the q order"
        );
        BivariateSeries { rows }
    }

    pub fn x_degree(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn order(&self) -> usize {
        self.rows[0].order()
    }

    pub fn rows(&self) -> &[TruncatedQSeries] {
        &self.rows
    }

    /// Coefficient of `x^m` as a q-series.
    pub fn row(&self, m: usize) -> &TruncatedQSeries {
        &self.rows[m]
    }

    pub(crate) fn row_mut(&mut self, m: usize) -> &mut TruncatedQSeries {
        &mut self.rows[m]
    }

    pub fn coeff(&self, m: usize, n: usize) -> BigInt {
        self.rows.get(m).map(|r| r.coeff(n)).unwrap_or_default()
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        if self.x_degree() != other.x_degree() {
            return Err(Error::XDegreeMismatch {
                left: self.x_degree(),
                right: other.x_degree(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(BivariateSeries { rows })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Result<_>>()?;
        Ok(BivariateSeries { rows })
    }

    /// Product truncated in both `x` and `q`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let d = self.x_degree();
        let mut out = Self::zero(d, self.order());
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows[..=d - i].iter().enumerate() {
                if !b.is_zero() {
                    out.rows[i + j].add_assign_checked(&a.checked_mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every x-coefficient by the q-series `s`.
    pub fn scale(&self, s: &TruncatedQSeries) -> Result<Self> {
        let rows = self.rows.iter().map(|r| r.checked_mul(s)).collect::<Result<_>>()?;
        Ok(BivariateSeries { rows })
    }

    /// Multiplies by `sign * x^e * q^c`.
    pub fn mul_monomial(&self, sign: Sign, e: usize, c: usize) -> Self {
        let d = self.x_degree();
        let mut out = Self::zero(d, self.order());
        for m in 0..=d.saturating_sub(e) {
            if m + e > d {
                break;
            }
            out.rows[m + e] = self.rows[m].shifted(sign, c);
        }
        out
    }

    /// The substitution `x -> x q^t`: the `x^m` coefficient is multiplied by `q^{t m}`.
    pub fn substitute(&self, t: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(m, r)| r.shifted(Sign::Plus, t * m))
            .collect();
        BivariateSeries { rows }
    }

    /// Inverse, defined when the `x^0` coefficient is a unit q-series.
    pub fn invert(&self) -> Result<Self> {
        let d = self.x_degree();
        let inv0 = self.rows[0].invert()?;
        let neg_inv0 = -&inv0;
        let mut out: Vec<TruncatedQSeries> = Vec::with_capacity(d + 1);
        out.push(inv0);
        for m in 1..=d {
            let mut acc = TruncatedQSeries::zero(self.order());
            for k in 1..=m {
                if !self.rows[k].is_zero() {
                    acc.add_assign_checked(&self.rows[k].checked_mul(&out[m - k])?)?;
                }
            }
            out.push(acc.checked_mul(&neg_inv0)?);
        }
        Ok(BivariateSeries { rows: out })
    }

    /// Sum of all x-coefficients. Equals the specialization `x = 1` only when
    /// the x-degree bounds every contributing power of `x` below the q order.
    pub fn sum_rows(&self) -> TruncatedQSeries {
        let mut acc = TruncatedQSeries::zero(self.order());
        for r in &self.rows {
            acc.add_assign_checked(r).expect("rows share the q order");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(TruncatedQSeries::is_zero)
    }
}

/// First `(x exponent, q exponent)` where the two series differ, scanning rows in order.
pub fn bi_first_mismatch(a: &BivariateSeries, b: &BivariateSeries) -> Result<Option<(usize, usize)>> {
    a.check_dims(b)?;
    for (m, (ra, rb)) in a.rows.iter().zip(&b.rows).enumerate() {
        if let Some(n) = crate::series::first_mismatch(ra, rb)? {
            return Ok(Some((m, n)));
        }
    }
    Ok(None)
}

/// `(sign * x^x_power * q^q_exponent; q^step)_count` as a bivariate series.
///
/// With `x_power >= 1` the infinite product converges in both truncations
/// even when `q_exponent = 0`.
pub fn bi_pochhammer(
    sign: Sign,
    x_power: usize,
    q_exponent: usize,
    step: usize,
    count: Count,
    x_degree: usize,
    order: usize,
) -> Result<BivariateSeries> {
    if step == 0 {
        return Err(Error::Divergent("Pochhammer step must be at least 1".into()));
    }
    if x_power == 0 {
        let s = crate::series::pochhammer(
            crate::series::Monomial { sign, exponent: q_exponent },
            step,
            count,
            order,
        )?;
        return Ok(BivariateSeries::x_monomial(0, s, x_degree));
    }
    let mut acc = BivariateSeries::one(x_degree, order);
    let mut e = q_exponent;
    let mut i = 0usize;
    loop {
        if let Count::Finite(n) = count {
            if i >= n {
                break;
            }
        }
        if e > order || x_power > x_degree {
            break;
        }
        // acc *= (1 - sign x^x_power q^e)
        let term = acc.mul_monomial(sign, x_power, e);
        acc = acc.checked_sub(&term)?;
        e += step;
        i += 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TruncatedQSeries as Q;

    fn xpoly(coeffs: &[i64], x_degree: usize, order: usize) -> BivariateSeries {
        let mut s = BivariateSeries::zero(x_degree, order);
        for (m, &c) in coeffs.iter().enumerate() {
            s.rows[m] = Q::monomial(BigInt::from(c), 0, order);
        }
        s
    }

    #[test]
    fn substitute_examples() {
        let x = xpoly(&[0, 1], 2, 5);
        let expected = BivariateSeries::x_monomial(1, Q::monomial(1.into(), 3, 5), 2);
        assert_eq!(x.substitute(3), expected);
        let a = xpoly(&[2, -1, 4], 2, 5);
        assert_eq!(a.substitute(0), a);
    }

    #[test]
    fn mul_examples() {
        let a = xpoly(&[1, 1], 3, 2);
        let b = xpoly(&[1, -1], 3, 2);
        assert_eq!(a.checked_mul(&b).unwrap(), xpoly(&[1, 0, -1], 3, 2));
        // truncated in x
        let a = xpoly(&[1, 1], 1, 2);
        let b = xpoly(&[1, 1], 1, 2);
        assert_eq!(a.checked_mul(&b).unwrap(), xpoly(&[1, 2], 1, 2));
    }

    #[test]
    fn dimension_mismatch() {
        let a = BivariateSeries::one(2, 3);
        assert!(matches!(
            a.checked_mul(&BivariateSeries::one(3, 3)),
            Err(Error::XDegreeMismatch { .. })
        ));
        assert!(matches!(
            a.checked_add(&BivariateSeries::one(2, 4)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn invert_round_trip() {
        let p = bi_pochhammer(Sign::Plus, 1, 0, 1, Count::Infinite, 6, 10).unwrap();
        let inv = p.invert().unwrap();
        assert_eq!(p.checked_mul(&inv).unwrap(), BivariateSeries::one(6, 10));
    }

    #[test]
    fn bi_pochhammer_matches_direct_product() {
        // (x q; q^2)_3 = (1 - x q)(1 - x q^3)(1 - x q^5)
        let got = bi_pochhammer(Sign::Plus, 1, 1, 2, Count::Finite(3), 3, 9).unwrap();
        let mut direct = BivariateSeries::one(3, 9);
        for e in [1, 3, 5] {
            let factor = BivariateSeries::one(3, 9)
                .checked_sub(&BivariateSeries::one(3, 9).mul_monomial(Sign::Plus, 1, e))
                .unwrap();
            direct = direct.checked_mul(&factor).unwrap();
        }
        assert_eq!(got, direct);
        assert_eq!(got.coeff(3, 9), BigInt::from(-1));
    }

    #[test]
    fn first_mismatch_reports_row_and_exponent() {
        let a = BivariateSeries::one(2, 4);
        let mut b = a.clone();
        b.rows[2] = Q::monomial(5.into(), 3, 4);
        assert_eq!(bi_first_mismatch(&a, &b).unwrap(), Some((2, 3)));
        assert_eq!(bi_first_mismatch(&a, &a).unwrap(), None);
    }
}
