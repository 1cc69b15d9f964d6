//! Infinite-product sides: principal characters and Euler-type products.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{Count, Sign, TruncatedQSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Pochhammer,
    Bracket,
}

/// One factor `(±q^a; q^m)_count^{±1}` or `[q^a; q^m]_count^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductFactor {
    pub kind: FactorKind,
    pub sign: Sign,
    pub a: usize,
    pub m: usize,
    pub count: Count,
    pub inverted: bool,
}

impl ProductFactor {
    pub fn pochhammer(sign: Sign, a: usize, m: usize, count: Count, inverted: bool) -> Result<Self> {
        let f = ProductFactor {
            kind: FactorKind::Pochhammer,
            sign,
            a,
            m,
            count,
            inverted,
        };
        f.validate()?;
        Ok(f)
    }

    /// A bracket factor; the residue is reduced mod `m` and must not vanish.
    pub fn bracket(a: usize, m: usize, count: Count, inverted: bool) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidProduct("bracket modulus must be positive".into()));
        }
        let f = ProductFactor {
            kind: FactorKind::Bracket,
            sign: Sign::Plus,
            a: a % m,
            m,
            count,
            inverted,
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidProduct("step must be positive".into()));
        }
        match self.kind {
            FactorKind::Bracket => {
                if self.a == 0 {
                    return Err(Error::InvalidProduct(format!("bracket residue 0 mod {}", self.m)));
                }
            }
            FactorKind::Pochhammer => {
                if self.count == Count::Infinite && self.a == 0 {
                    return Err(Error::InvalidProduct("infinite Pochhammer needs a >= 1".into()));
                }
            }
        }
        Ok(())
    }

    /// The exponents `e` such that the factor is `prod (1 - sign q^e)` up to `order`.
    fn binomials(&self, order: usize) -> Vec<(Sign, usize)> {
        let arguments: Vec<(Sign, usize)> = match self.kind {
            FactorKind::Pochhammer => vec![(self.sign, self.a)],
            FactorKind::Bracket => vec![(Sign::Plus, self.a), (Sign::Plus, self.m - self.a)],
        };
        let mut out = Vec::new();
        for (sign, start) in arguments {
            let mut e = start;
            let mut i = 0;
            while e <= order {
                if let Count::Finite(n) = self.count {
                    if i >= n {
                        break;
                    }
                }
                out.push((sign, e));
                e += self.m;
                i += 1;
            }
        }
        out
    }
}

/// A product of factors; the empty product is 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProductSpec {
    pub factors: Vec<ProductFactor>,
}

impl ProductSpec {
    pub fn new(factors: Vec<ProductFactor>) -> Self {
        ProductSpec { factors }
    }

    /// `1 / [q^{r_1}, .., q^{r_n}; q^m]_inf`
    pub fn inverse_brackets(residues: &[usize], m: usize) -> Result<Self> {
        residues
            .iter()
            .map(|&r| ProductFactor::bracket(r, m, Count::Infinite, true))
            .collect::<Result<_>>()
            .map(ProductSpec::new)
    }

    /// `(sign q^{r_1}, .., sign q^{r_n}; q^m)_inf^{±1}`
    pub fn pochhammers(sign: Sign, residues: &[usize], m: usize, inverted: bool) -> Result<Self> {
        residues
            .iter()
            .map(|&r| ProductFactor::pochhammer(sign, r, m, Count::Infinite, inverted))
            .collect::<Result<_>>()
            .map(ProductSpec::new)
    }

    pub fn times(mut self, other: ProductSpec) -> Self {
        self.factors.extend(other.factors);
        self
    }

    /// Exact expansion. Numerator factors are multiplied in first; inverted
    /// factors are then divided out one binomial at a time.
    pub fn eval(&self, order: usize) -> Result<TruncatedQSeries> {
        let mut s = TruncatedQSeries::one(order);
        for f in self.factors.iter().filter(|f| !f.inverted) {
            for (sign, e) in f.binomials(order) {
                s.mul_binomial(sign, e);
            }
        }
        for f in self.factors.iter().filter(|f| f.inverted) {
            for (sign, e) in f.binomials(order) {
                if e == 0 {
                    return Err(Error::NotInvertible(format!(
                        "factor (1 {} q^0) in the denominator",
                        if sign == Sign::Plus { "-" } else { "+" }
                    )));
                }
                s.div_binomial(sign, e);
            }
        }
        Ok(s)
    }
}

/// A dominant weight `d0 Λ0 + d1 Λ1` of the twisted affine algebra of type
/// A_2^(2); its level is `d0 + 2 d1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct A22Weight {
    pub d0: usize,
    pub d1: usize,
}

impl A22Weight {
    pub fn new(d0: usize, d1: usize) -> Self {
        A22Weight { d0, d1 }
    }

    pub fn level(&self) -> usize {
        self.d0 + 2 * self.d1
    }

    /// Parses tags such as `3L0+L1`, `2L1`, `7Λ0`.
    pub fn parse(tag: &str) -> Result<Self> {
        let norm = tag.replace('Λ', "L").replace(' ', "");
        let mut w = A22Weight::new(0, 0);
        for term in norm.split('+') {
            let bad = || Error::Parse(format!("bad weight tag `{tag}`"));
            let (coef, idx) = term.split_once('L').ok_or_else(bad)?;
            let c = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad())?
            };
            match idx {
                "0" => w.d0 += c,
                "1" => w.d1 += c,
                _ => return Err(bad()),
            }
        }
        Ok(w)
    }
}

impl fmt::Display for A22Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: usize, i: usize| match c {
            1 => format!("L{i}"),
            c => format!("{c}L{i}"),
        };
        match (self.d0, self.d1) {
            (0, 0) => f.write_str("0"),
            (d0, 0) => f.write_str(&term(d0, 0)),
            (0, d1) => f.write_str(&term(d1, 1)),
            (d0, d1) => write!(f, "{}+{}", term(d0, 0), term(d1, 1)),
        }
    }
}

/// Principal characters of the A_2^(2) standard modules of levels 3, 4, 5, 7
/// that have product forms in the catalog.
pub fn char_a22(level: usize, weight: A22Weight) -> Result<ProductSpec> {
    if weight.level() != level {
        return Err(Error::InvalidProduct(format!(
            "weight {weight} has level {}, not {level}",
            weight.level()
        )));
    }
    let (residues, m): (&[usize], usize) = match (weight.d0, weight.d1) {
        (3, 0) => (&[2, 3], 12),
        (1, 1) => {
            let num = ProductSpec::new(vec![ProductFactor::bracket(2, 12, Count::Infinite, false)?]);
            return Ok(num.times(ProductSpec::inverse_brackets(&[1, 3, 5], 12)?));
        }
        (4, 0) => (&[2, 3, 4], 14),
        (2, 1) => (&[1, 4, 6], 14),
        (0, 2) => (&[2, 5, 6], 14),
        (5, 0) => (&[2, 3, 4, 5], 16),
        (1, 2) => (&[1, 4, 6, 7], 16),
        (3, 1) => (&[1, 3, 5, 7], 16),
        (5, 1) => (&[1, 3, 4, 5, 7, 9], 20),
        (1, 3) => (&[1, 3, 5, 7, 8, 9], 20),
        (7, 0) => (&[2, 3, 4, 5, 6, 7], 20),
        (3, 2) => (&[1, 2, 5, 6, 8, 9], 20),
        _ => {
            return Err(Error::InvalidProduct(format!(
                "no product form for level {level} weight {weight}"
            )))
        }
    };
    ProductSpec::inverse_brackets(residues, m)
}

/// Level 2 principal characters of A_{2l+1}^(2) with bracket modulus
/// `modulus = 2l + 4`:
/// `(q^M; q^M)_inf / (q^2; q^2)_inf * [q^{2i}; q^M]_inf / [q^i; q^M]_inf`.
///
/// `i = 0` is rejected: the bracket `[q^0; q^M]` vanishes and that character
/// comes from a smaller period, which this constructor does not model.
pub fn char_a_odd_level2(modulus: usize, i: usize) -> Result<ProductSpec> {
    if modulus < 4 || modulus % 2 != 0 {
        return Err(Error::InvalidProduct(format!("modulus {modulus} must be even and >= 4")));
    }
    let max_i = (modulus - 2) / 2;
    if i == 0 || i > max_i {
        return Err(Error::InvalidProduct(format!("i must be in 1..={max_i}, got {i}")));
    }
    let mut factors = vec![
        ProductFactor::pochhammer(Sign::Plus, modulus, modulus, Count::Infinite, false)?,
        ProductFactor::pochhammer(Sign::Plus, 2, 2, Count::Infinite, true)?,
        ProductFactor::bracket(i, modulus, Count::Infinite, true)?,
    ];
    let doubled = (2 * i) % modulus;
    if doubled != 0 {
        factors.push(ProductFactor::bracket(doubled, modulus, Count::Infinite, false)?);
    } else {
        return Err(Error::InvalidProduct(format!("[q^{}; q^{modulus}] vanishes", 2 * i)));
    }
    Ok(ProductSpec::new(factors))
}

/// Level 2 principal characters of A_13^(2), `1 <= i <= 7`.
pub fn char_a13_level2(i: usize) -> Result<ProductSpec> {
    char_a_odd_level2(16, i)
}

/// `(q^i, q^{2k+1-i}, q^{2k+1}; q^{2k+1})_inf / (q;q)_inf`
pub fn andrews_gordon_product(k: usize, i: usize) -> Result<ProductSpec> {
    if k < 2 || i < 1 || i > k {
        return Err(Error::InvalidProduct(format!("need k >= 2, 1 <= i <= k; got k={k}, i={i}")));
    }
    let m = 2 * k + 1;
    Ok(ProductSpec::pochhammers(Sign::Plus, &[i, m - i, m], m, false)?
        .times(ProductSpec::pochhammers(Sign::Plus, &[1], 1, true)?))
}

/// Serialized form of a factor: `kind`, `sign`, `a`, `m`, `count` (integer or `"inf"`), `power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorData {
    pub kind: FactorKind,
    #[serde(default = "plus_one")]
    pub sign: i64,
    pub a: usize,
    pub m: usize,
    pub count: CountData,
    pub power: i64,
}

fn plus_one() -> i64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CountData {
    Finite(usize),
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductData {
    #[serde(default)]
    pub factors: Vec<FactorData>,
}

impl TryFrom<FactorData> for ProductFactor {
    type Error = Error;

    fn try_from(d: FactorData) -> Result<Self> {
        let sign = Sign::from_i64(d.sign).ok_or_else(|| Error::InvalidProduct(format!("sign must be +1 or -1, got {}", d.sign)))?;
        let count = match d.count {
            CountData::Finite(n) => Count::Finite(n),
            CountData::Named(s) if s == "inf" || s == "infinity" => Count::Infinite,
            CountData::Named(s) => return Err(Error::InvalidProduct(format!("bad count `{s}`"))),
        };
        let inverted = match d.power {
            1 => false,
            -1 => true,
            p => return Err(Error::InvalidProduct(format!("power must be +1 or -1, got {p}"))),
        };
        match d.kind {
            FactorKind::Pochhammer => ProductFactor::pochhammer(sign, d.a, d.m, count, inverted),
            FactorKind::Bracket => {
                if sign != Sign::Plus {
                    return Err(Error::InvalidProduct("bracket factors take no sign".into()));
                }
                if count == Count::Infinite && d.a >= d.m {
                    return Err(Error::InvalidProduct(format!("bracket needs 1 <= a < m, got a={}, m={}", d.a, d.m)));
                }
                ProductFactor::bracket(d.a, d.m, count, inverted)
            }
        }
    }
}

impl TryFrom<ProductData> for ProductSpec {
    type Error = Error;

    fn try_from(d: ProductData) -> Result<Self> {
        d.factors
            .into_iter()
            .map(ProductFactor::try_from)
            .collect::<Result<_>>()
            .map(ProductSpec::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedQSeries {
        TruncatedQSeries::from_i64s(c)
    }

    /// Partitions of each n <= order into parts allowed by `allowed`.
    fn restricted_partition_counts(order: usize, allowed: impl Fn(usize) -> bool) -> Vec<i64> {
        let mut counts = vec![0i64; order + 1];
        counts[0] = 1;
        for part in (1..=order).filter(|&p| allowed(p)) {
            for n in part..=order {
                counts[n] += counts[n - part];
            }
        }
        counts
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(ProductSpec::default().eval(7).unwrap(), TruncatedQSeries::one(7));
    }

    #[test]
    fn rogers_ramanujan_product() {
        let p = ProductSpec::inverse_brackets(&[1], 5).unwrap().eval(4).unwrap();
        assert_eq!(p, s(&[1, 1, 1, 1, 2]));
        let p = ProductSpec::inverse_brackets(&[1], 5).unwrap().eval(40).unwrap();
        let oracle = restricted_partition_counts(40, |k| k % 5 == 1 || k % 5 == 4);
        assert_eq!(p, s(&oracle));
    }

    #[test]
    fn odd_parts_product() {
        let p = ProductSpec::pochhammers(Sign::Plus, &[1], 2, true).unwrap().eval(6).unwrap();
        assert_eq!(p, s(&[1, 1, 1, 2, 2, 3, 4]));
        assert_eq!(p, s(&restricted_partition_counts(6, |k| k % 2 == 1)));
    }

    #[test]
    fn missing_level5_module_is_odd_parts() {
        let bracket = char_a22(5, A22Weight::new(3, 1)).unwrap().eval(120).unwrap();
        let odd = ProductSpec::pochhammers(Sign::Plus, &[1], 2, true).unwrap().eval(120).unwrap();
        assert_eq!(bracket, odd);
    }

    #[test]
    fn level3_bracket_and_pochhammer_forms() {
        let bracket = char_a22(3, A22Weight::new(3, 0)).unwrap().eval(120).unwrap();
        let poch = ProductSpec::pochhammers(Sign::Minus, &[2, 3, 4, 6], 6, false).unwrap().eval(120).unwrap();
        assert_eq!(bracket, poch);
        let bracket = char_a22(3, A22Weight::new(1, 1)).unwrap().eval(120).unwrap();
        let poch = ProductSpec::pochhammers(Sign::Minus, &[1, 3, 5, 6], 6, false).unwrap().eval(120).unwrap();
        assert_eq!(bracket, poch);
    }

    #[test]
    fn level7_vacuum_character_counts() {
        let p = char_a22(7, A22Weight::new(7, 0)).unwrap().eval(7).unwrap();
        // 5 = 5 = 3 + 2
        assert_eq!(p.coeff(5), 2.into());
        let oracle = restricted_partition_counts(7, |k| matches!(k % 20, 2..=7 | 13..=18));
        assert_eq!(p, s(&oracle));
    }

    #[test]
    fn level4_products_match_a11_level2() {
        for (w, i) in [(A22Weight::new(4, 0), 3), (A22Weight::new(2, 1), 1), (A22Weight::new(0, 2), 5)] {
            let a22 = char_a22(4, w).unwrap().eval(150).unwrap();
            let a11 = char_a_odd_level2(14, i).unwrap().eval(150).unwrap();
            assert_eq!(a22, a11, "weight {w}");
        }
    }

    #[test]
    fn pure_denominator_characters_are_nonnegative() {
        for (level, d0, d1) in [(4, 4, 0), (4, 2, 1), (4, 0, 2), (5, 5, 0), (5, 1, 2), (5, 3, 1), (7, 5, 1), (7, 1, 3), (7, 7, 0), (7, 3, 2), (3, 3, 0)] {
            let p = char_a22(level, A22Weight::new(d0, d1)).unwrap().eval(200).unwrap();
            assert!(p.has_nonnegative_coeffs());
            assert_eq!(p.coeff(0), 1.into());
        }
    }

    #[test]
    fn a13_constructor_bounds() {
        assert!(char_a13_level2(0).is_err());
        assert!(char_a13_level2(8).is_err());
        for i in 1..=7 {
            let p = char_a13_level2(i).unwrap().eval(60).unwrap();
            assert_eq!(p.coeff(0), 1.into());
        }
    }

    #[test]
    fn weight_tags() {
        assert_eq!(A22Weight::parse("3L0+L1").unwrap(), A22Weight::new(3, 1));
        assert_eq!(A22Weight::parse("3Λ0+Λ1").unwrap(), A22Weight::new(3, 1));
        assert_eq!(A22Weight::parse("2L1").unwrap(), A22Weight::new(0, 2));
        assert_eq!(A22Weight::new(1, 3).to_string(), "L0+3L1");
        assert!(A22Weight::parse("L2").is_err());
        assert!(char_a22(5, A22Weight::new(7, 0)).is_err());
        assert!(char_a22(6, A22Weight::new(6, 0)).is_err());
    }

    #[test]
    fn residues_reduce_and_zero_is_rejected() {
        let f = ProductFactor::bracket(17, 16, Count::Infinite, true).unwrap();
        assert_eq!(f.a, 1);
        assert!(ProductFactor::bracket(16, 16, Count::Infinite, true).is_err());
        assert!(ProductFactor::pochhammer(Sign::Plus, 0, 1, Count::Infinite, false).is_err());
    }

    #[test]
    fn andrews_gordon_product_k2_is_rogers_ramanujan() {
        let ag = andrews_gordon_product(2, 2).unwrap().eval(60).unwrap();
        let rr = ProductSpec::inverse_brackets(&[1], 5).unwrap().eval(60).unwrap();
        assert_eq!(ag, rr);
    }
}
