//! Andrews-Gordon type multisums
//!
//! ```text
//!   sum_{i_1..i_s >= 0}  (-1)^{sum L_l i_l} q^{Q(i)} x^{sum w_l i_l} (1 + x^e q^{c_0 + sum c_l i_l})
//!                        ---------------------------------------------------------------------
//!                                   prod_l (q^{C_l}; q^{C_l})_{i_l}
//!
//!   Q(i) = sum_l d_l binom(i_l, 2) + sum_{j<k} a_{jk} i_j i_k + sum_l B_l i_l
//! ```
//!
//! evaluated exactly as truncated series. The x-weights and the tail factor
//! are optional; without them the sum is univariate.

mod catalog;
mod eval;
mod slater;

pub use catalog::*;
pub use eval::boxed_eval;
pub use slater::SlaterSum;

use serde::{Deserialize, Serialize};

use crate::bivariate::BivariateSeries;
use crate::error::{Error, Result};
use crate::series::TruncatedQSeries;

/// The affine factor `(1 + x^x_power q^{constant + sum coeffs_l i_l})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tail {
    #[serde(rename = "e")]
    pub x_power: usize,
    #[serde(rename = "c0")]
    pub constant: usize,
    #[serde(rename = "c")]
    pub coeffs: Vec<usize>,
}

/// Raw quadratic-form data, mirroring the on-disk spec schema.
///
/// `cross` is the full symmetric `s x s` table with a zero diagonal; an empty
/// table means no cross terms. Empty `sign` means all plus, empty
/// `denom_step` means all steps are 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultisumData {
    pub s: usize,
    pub diag: Vec<usize>,
    #[serde(default)]
    pub cross: Vec<Vec<usize>>,
    pub linear: Vec<usize>,
    #[serde(default)]
    pub sign: Vec<u8>,
    #[serde(default)]
    pub denom_step: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_weight: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<Tail>,
}

/// A validated multisum. Every variable is bounded: its own quadratic or
/// linear exponent grows (`d_l >= 1` or `B_l >= 1`), or it carries a positive
/// x-weight and is bounded by the x-degree in bivariate evaluation. Cross
/// coefficients and linear coefficients are nonnegative, so every lattice
/// point has a nonnegative exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisumSpec {
    diag: Vec<usize>,
    cross: Vec<Vec<usize>>,
    linear: Vec<usize>,
    sign: Vec<bool>,
    denom_step: Vec<usize>,
    x_weight: Option<Vec<usize>>,
    tail: Option<Tail>,
}

/// A univariate evaluation together with the number of contributing lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluated<T> {
    pub value: T,
    pub term_count: u64,
}

impl MultisumSpec {
    /// Shorthand for catalog constructors: `cross` lists `(j, k, a_jk)` with `j < k`.
    pub fn from_parts(
        diag: &[usize],
        cross: &[(usize, usize, usize)],
        linear: &[usize],
        sign: &[u8],
        denom_step: &[usize],
    ) -> Result<Self> {
        Self::from_parts_weighted(diag, cross, linear, sign, denom_step, None)
    }

    /// As [`MultisumSpec::from_parts`] with x-weights, needed when some
    /// variable is bounded only through its power of `x`.
    pub fn from_parts_weighted(
        diag: &[usize],
        cross: &[(usize, usize, usize)],
        linear: &[usize],
        sign: &[u8],
        denom_step: &[usize],
        x_weight: Option<&[usize]>,
    ) -> Result<Self> {
        let s = diag.len();
        let mut table = vec![vec![0; s]; s];
        for &(j, k, a) in cross {
            if j >= s || k >= s || j == k {
                return Err(Error::InvalidSpec(format!("bad cross index ({j}, {k})")));
            }
            table[j][k] = a;
            table[k][j] = a;
        }
        MultisumData {
            s,
            diag: diag.to_vec(),
            cross: table,
            linear: linear.to_vec(),
            sign: sign.to_vec(),
            denom_step: denom_step.to_vec(),
            x_weight: x_weight.map(<[usize]>::to_vec),
            tail: None,
        }
        .try_into()
    }

    pub fn with_x_weight(self, w: &[usize]) -> Result<Self> {
        let mut data = self.to_data();
        data.x_weight = Some(w.to_vec());
        data.try_into()
    }

    pub fn with_tail(self, tail: Tail) -> Result<Self> {
        let mut data = self.to_data();
        data.tail = Some(tail);
        data.try_into()
    }

    pub fn to_data(&self) -> MultisumData {
        MultisumData {
            s: self.s(),
            diag: self.diag.clone(),
            cross: self.cross.clone(),
            linear: self.linear.clone(),
            sign: self.sign.iter().map(|&b| b as u8).collect(),
            denom_step: self.denom_step.clone(),
            x_weight: self.x_weight.clone(),
            tail: self.tail.clone(),
        }
    }

    pub fn s(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[usize] {
        &self.diag
    }

    pub fn cross(&self, j: usize, k: usize) -> usize {
        self.cross[j][k]
    }

    pub fn linear(&self) -> &[usize] {
        &self.linear
    }

    pub fn signs(&self) -> &[bool] {
        &self.sign
    }

    pub fn denom_steps(&self) -> &[usize] {
        &self.denom_step
    }

    pub fn x_weight(&self) -> Option<&[usize]> {
        self.x_weight.as_deref()
    }

    pub fn tail(&self) -> Option<&Tail> {
        self.tail.as_ref()
    }

    /// `Q(i)` at a lattice point.
    pub fn exponent(&self, point: &[usize]) -> usize {
        let s = self.s();
        let mut q = 0;
        for l in 0..s {
            let i = point[l];
            q += self.diag[l] * (i * i.saturating_sub(1) / 2) + self.linear[l] * i;
            for k in l + 1..s {
                q += self.cross[l][k] * i * point[k];
            }
        }
        q
    }

    /// The spec with linear coefficient `l` increased by one.
    pub fn bump_linear(&self, l: usize) -> Self {
        let mut out = self.clone();
        out.linear[l] += 1;
        out
    }

    /// The sub-sum obtained by fixing variable `l` to zero.
    pub fn restrict_to_zero(&self, l: usize) -> Result<Self> {
        if self.s() < 2 || l >= self.s() {
            return Err(Error::InvalidSpec(format!("cannot drop variable {l} of {}", self.s())));
        }
        let keep = |v: &[usize]| -> Vec<usize> {
            v.iter()
                .enumerate()
                .filter(|&(m, _)| m != l)
                .map(|(_, &x)| x)
                .collect()
        };
        let data = MultisumData {
            s: self.s() - 1,
            diag: keep(&self.diag),
            cross: self
                .cross
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != l)
                .map(|(_, row)| keep(row))
                .collect(),
            linear: keep(&self.linear),
            sign: self
                .sign
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != l)
                .map(|(_, &b)| b as u8)
                .collect(),
            denom_step: keep(&self.denom_step),
            x_weight: self.x_weight.as_deref().map(keep),
            tail: self.tail.as_ref().map(|t| Tail {
                x_power: t.x_power,
                constant: t.constant,
                coeffs: keep(&t.coeffs),
            }),
        };
        data.try_into()
    }

    /// The specialization `x = 1`: x-weights are dropped and the tail keeps
    /// only its q-part.
    pub fn at_x_equals_one(&self) -> Result<Self> {
        let mut data = self.to_data();
        data.x_weight = None;
        if let Some(t) = data.tail.as_mut() {
            t.x_power = 0;
        }
        data.try_into()
    }

    fn is_univariate(&self) -> bool {
        self.x_weight.is_none() && self.tail.as_ref().is_none_or(|t| t.x_power == 0)
    }

    /// Exact univariate evaluation to `q^order`.
    pub fn eval(&self, order: usize) -> Result<TruncatedQSeries> {
        Ok(self.eval_counted(order)?.value)
    }

    pub fn eval_counted(&self, order: usize) -> Result<Evaluated<TruncatedQSeries>> {
        if !self.is_univariate() {
            return Err(Error::InvalidSpec(
                "spec carries x-weights or an x-tail; use eval_bivariate or at_x_equals_one".into(),
            ));
        }
        if let Some(l) = (0..self.s()).find(|&l| self.diag[l] == 0 && self.linear[l] == 0) {
            return Err(Error::InvalidSpec(format!(
                "variable {l} has no q-growth and diverges without an x bound"
            )));
        }
        Ok(eval::eval_univariate(self, order))
    }

    /// Exact evaluation as a polynomial in `x` of degree `x_degree`.
    pub fn eval_bivariate(&self, x_degree: usize, order: usize) -> Result<BivariateSeries> {
        Ok(self.eval_bivariate_counted(x_degree, order)?.value)
    }

    pub fn eval_bivariate_counted(
        &self,
        x_degree: usize,
        order: usize,
    ) -> Result<Evaluated<BivariateSeries>> {
        if self.x_weight.is_none() {
            return Err(Error::InvalidSpec("bivariate evaluation needs x-weights".into()));
        }
        Ok(eval::eval_bivariate(self, x_degree, order))
    }
}

impl TryFrom<MultisumData> for MultisumSpec {
    type Error = Error;

    fn try_from(d: MultisumData) -> Result<Self> {
        let s = d.s;
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        if s == 0 {
            return bad("s must be at least 1".into());
        }
        if d.diag.len() != s || d.linear.len() != s {
            return bad(format!("diag and linear must have length s = {s}"));
        }
        let cross = if d.cross.is_empty() {
            vec![vec![0; s]; s]
        } else {
            d.cross
        };
        if cross.len() != s || cross.iter().any(|r| r.len() != s) {
            return bad(format!("cross must be an {s}x{s} table"));
        }
        for j in 0..s {
            if cross[j][j] != 0 {
                return bad(format!("cross[{j}][{j}] must be zero; use diag"));
            }
            for k in 0..j {
                if cross[j][k] != cross[k][j] {
                    return bad(format!("cross is not symmetric at ({k}, {j})"));
                }
            }
        }
        let sign = if d.sign.is_empty() { vec![0; s] } else { d.sign };
        if sign.len() != s || sign.iter().any(|&b| b > 1) {
            return bad("sign must have length s with entries 0 or 1".into());
        }
        let denom_step = if d.denom_step.is_empty() {
            vec![1; s]
        } else {
            d.denom_step
        };
        if denom_step.len() != s || denom_step.contains(&0) {
            return bad("denom_step must have length s with entries >= 1".into());
        }
        if let Some(w) = &d.x_weight {
            if w.len() != s {
                return bad("x_weight must have length s".into());
            }
        }
        if let Some(t) = &d.tail {
            if t.coeffs.len() != s {
                return bad("tail.c must have length s".into());
            }
            if t.constant == 0 {
                return bad("tail.c0 must be at least 1".into());
            }
        }
        for l in 0..s {
            let x_bounded = d.x_weight.as_ref().is_some_and(|w| w[l] >= 1);
            if d.diag[l] == 0 && d.linear[l] == 0 && !x_bounded {
                return bad(format!(
                    "variable {l} is unbounded: needs diag >= 1, linear >= 1, or an x-weight"
                ));
            }
        }
        Ok(MultisumSpec {
            diag: d.diag,
            cross,
            linear: d.linear,
            sign: sign.into_iter().map(|b| b == 1).collect(),
            denom_step,
            x_weight: d.x_weight,
            tail: d.tail,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_data() {
        assert!(MultisumSpec::from_parts(&[0], &[], &[0], &[], &[]).is_err());
        assert!(MultisumSpec::from_parts(&[1, 1], &[(0, 0, 1)], &[1, 1], &[], &[]).is_err());
        assert!(MultisumSpec::from_parts(&[1], &[], &[1], &[2], &[]).is_err());
        assert!(MultisumSpec::from_parts(&[1], &[], &[1], &[], &[0]).is_err());
        assert!(MultisumSpec::from_parts(&[1, 2], &[], &[1], &[], &[]).is_err());
        let asym = MultisumData {
            s: 2,
            diag: vec![1, 1],
            cross: vec![vec![0, 1], vec![2, 0]],
            linear: vec![1, 1],
            sign: vec![],
            denom_step: vec![],
            x_weight: None,
            tail: None,
        };
        assert!(MultisumSpec::try_from(asym).is_err());
    }

    #[test]
    fn x_weight_bounds_flat_variables() {
        let spec = MultisumSpec::from_parts(&[0, 0], &[], &[0, 1], &[], &[2, 2]);
        assert!(spec.is_err());
        let data = MultisumData {
            s: 2,
            diag: vec![0, 0],
            cross: vec![],
            linear: vec![0, 1],
            sign: vec![],
            denom_step: vec![2, 2],
            x_weight: Some(vec![1, 1]),
            tail: None,
        };
        let spec = MultisumSpec::try_from(data).unwrap();
        assert!(spec.eval(5).is_err());
        assert!(spec.eval_bivariate(3, 5).is_ok());
    }

    #[test]
    fn exponent_matches_definition() {
        let spec = MultisumSpec::from_parts(&[1, 8, 2], &[(0, 1, 2), (0, 2, 2), (1, 2, 4)], &[1, 5, 1], &[0, 0, 1], &[1, 2, 2]).unwrap();
        // C(3,2) + 8 C(2,2) + 2 C(1,2) + 2*6 + 2*3 + 4*2 + 3 + 10 + 1
        assert_eq!(spec.exponent(&[3, 2, 1]), 3 + 8 + 0 + 12 + 6 + 8 + 3 + 10 + 1);
    }

    #[test]
    fn restrict_drops_a_variable() {
        let spec = MultisumSpec::from_parts(&[1, 8, 2], &[(0, 1, 2), (0, 2, 2), (1, 2, 4)], &[1, 5, 1], &[0, 0, 1], &[1, 2, 2]).unwrap();
        let r = spec.restrict_to_zero(1).unwrap();
        assert_eq!(r, MultisumSpec::from_parts(&[1, 2], &[(0, 1, 2)], &[1, 1], &[0, 1], &[1, 2]).unwrap());
    }

    #[test]
    fn univariate_eval_refuses_x_data() {
        let spec = capparelli_double_sum(1).unwrap();
        assert!(spec.eval(10).is_err());
        assert!(spec.at_x_equals_one().unwrap().eval(10).is_ok());
    }
}
