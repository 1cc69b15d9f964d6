//! Pruned lattice enumeration.
//!
//! Variables are fixed outermost first. While a variable runs upward the
//! reciprocal denominator `1/prod (q^C; q^C)_i` is updated in place by one
//! division by `(1 - q^{C i})`, and is cut to the number of coefficients
//! that can still reach the truncation order. All exponent contributions
//! are nonnegative and nondecreasing in each variable, so a loop stops at
//! the first value whose accrued exponent passes the order.

use num_bigint::BigInt;

use super::{Evaluated, MultisumSpec};
use crate::bivariate::BivariateSeries;
use crate::error::Result;
use crate::series::{inverse_q_factorial, Sign, TruncatedQSeries};

enum Out<'a> {
    Uni(&'a mut TruncatedQSeries),
    Bi(&'a mut BivariateSeries),
}

struct Walker<'a> {
    spec: &'a MultisumSpec,
    order: usize,
    x_limit: Option<usize>,
    out: Out<'a>,
    terms: u64,
}

fn binom2(i: usize) -> usize {
    i * i.saturating_sub(1) / 2
}

fn div_in_place(p: &mut [BigInt], e: usize) {
    for n in e..p.len() {
        let (lo, hi) = p.split_at_mut(n);
        hi[0] += &lo[n - e];
    }
}

impl Walker<'_> {
    fn weight(&self, l: usize) -> usize {
        match (self.x_limit, self.spec.x_weight()) {
            (Some(_), Some(w)) => w[l],
            _ => 0,
        }
    }

    fn leaf(&mut self, p: &[BigInt], exponent: usize, odd: bool, tail_acc: usize, x_used: usize) {
        self.terms += 1;
        let sign = Sign::from_parity(odd);
        let tail = self.spec.tail();
        match &mut self.out {
            Out::Uni(s) => {
                s.add_shifted(p, sign, exponent);
                if let Some(t) = tail {
                    s.add_shifted(p, sign, exponent + t.constant + tail_acc);
                }
            }
            Out::Bi(b) => {
                b.row_mut(x_used).add_shifted(p, sign, exponent);
                if let Some(t) = tail {
                    let m = x_used + t.x_power;
                    if m <= b.x_degree() {
                        b.row_mut(m).add_shifted(p, sign, exponent + t.constant + tail_acc);
                    }
                }
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &mut self,
        depth: usize,
        accrued: usize,
        lin: &[usize],
        tail_acc: usize,
        x_used: usize,
        odd: bool,
        mut p: Vec<BigInt>,
    ) {
        let spec = self.spec;
        let s = spec.s();
        let d = spec.diag()[depth];
        let step = spec.denom_steps()[depth];
        let w = self.weight(depth);
        let flip = spec.signs()[depth];
        let tail_c = spec.tail().map_or(0, |t| t.coeffs[depth]);
        let last = depth + 1 == s;
        let mut next_lin = lin.to_vec();

        let mut i = 0usize;
        loop {
            let e = accrued + d * binom2(i) + lin[depth] * i;
            if e > self.order {
                break;
            }
            let xu = x_used + w * i;
            if let Some(limit) = self.x_limit {
                if xu > limit {
                    break;
                }
            }
            if i > 0 {
                p.truncate(self.order - e + 1);
                if step * i < p.len() {
                    div_in_place(&mut p, step * i);
                }
            }
            let odd_i = odd ^ (flip && i % 2 == 1);
            let tail_i = tail_acc + tail_c * i;
            if last {
                self.leaf(&p, e, odd_i, tail_i, xu);
            } else {
                for m in depth + 1..s {
                    next_lin[m] = lin[m] + spec.cross(depth, m) * i;
                }
                let keep = (self.order - e + 1).min(p.len());
                self.walk(depth + 1, e, &next_lin, tail_i, xu, odd_i, p[..keep].to_vec());
            }
            i += 1;
        }
    }
}

pub(super) fn eval_univariate(spec: &MultisumSpec, order: usize) -> Evaluated<TruncatedQSeries> {
    let mut out = TruncatedQSeries::zero(order);
    let terms = {
        let mut w = Walker {
            spec,
            order,
            x_limit: None,
            out: Out::Uni(&mut out),
            terms: 0,
        };
        w.walk(0, 0, spec.linear(), 0, 0, false, TruncatedQSeries::one(order).into_coeffs());
        w.terms
    };
    Evaluated {
        value: out,
        term_count: terms,
    }
}

pub(super) fn eval_bivariate(
    spec: &MultisumSpec,
    x_degree: usize,
    order: usize,
) -> Evaluated<BivariateSeries> {
    let mut out = BivariateSeries::zero(x_degree, order);
    let terms = {
        let mut w = Walker {
            spec,
            order,
            x_limit: Some(x_degree),
            out: Out::Bi(&mut out),
            terms: 0,
        };
        w.walk(0, 0, spec.linear(), 0, 0, false, TruncatedQSeries::one(order).into_coeffs());
        w.terms
    };
    Evaluated {
        value: out,
        term_count: terms,
    }
}

/// Reference evaluation over a fixed box `i_l <= 3 + ceil(sqrt(2N/d_l))`
/// (or the linear / x-degree bound for variables with `d_l = 0`), with each
/// term computed from scratch by full series multiplication.
///
/// With `x_degree = None` the spec must be univariate and the result has a
/// single row.
pub fn boxed_eval(spec: &MultisumSpec, x_degree: Option<usize>, order: usize) -> Result<BivariateSeries> {
    if x_degree.is_none() {
        // surface the same precondition errors as the pruned evaluator
        spec.eval_counted(0)?;
    } else {
        spec.eval_bivariate_counted(0, 0)?;
    }
    let s = spec.s();
    let bounds: Vec<usize> = (0..s)
        .map(|l| {
            let d = spec.diag()[l];
            let mut bound = if d >= 1 {
                3 + ((2.0 * order as f64 / d as f64).sqrt().ceil() as usize)
            } else if spec.linear()[l] >= 1 {
                order / spec.linear()[l] + 1
            } else {
                usize::MAX
            };
            if let (Some(dx), Some(w)) = (x_degree, spec.x_weight()) {
                if w[l] >= 1 {
                    bound = bound.min(dx / w[l]);
                }
            }
            bound
        })
        .collect();
    let rows = x_degree.unwrap_or(0);
    let mut out = BivariateSeries::zero(rows, order);
    let mut point = vec![0usize; s];
    loop {
        let q = spec.exponent(&point);
        let xdeg: usize = match (x_degree, spec.x_weight()) {
            (Some(_), Some(w)) => point.iter().zip(w).map(|(i, w)| i * w).sum(),
            _ => 0,
        };
        if q <= order && xdeg <= rows {
            let mut term = TruncatedQSeries::one(order);
            for l in 0..s {
                term = term.checked_mul(&inverse_q_factorial(spec.denom_steps()[l], point[l], order))?;
            }
            let odd = (0..s).filter(|&l| spec.signs()[l]).map(|l| point[l]).sum::<usize>() % 2 == 1;
            let sign = Sign::from_parity(odd);
            out.row_mut(xdeg).add_shifted(term.coeffs(), sign, q);
            if let Some(t) = spec.tail() {
                let shift = q + t.constant + point.iter().zip(&t.coeffs).map(|(i, c)| i * c).sum::<usize>();
                let m = if x_degree.is_some() { xdeg + t.x_power } else { 0 };
                if m <= rows {
                    out.row_mut(m).add_shifted(term.coeffs(), sign, shift);
                }
            }
        }
        // odometer
        let mut l = s;
        loop {
            if l == 0 {
                return Ok(out);
            }
            l -= 1;
            if point[l] < bounds[l] {
                point[l] += 1;
                break;
            }
            point[l] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisum::{andrews_gordon_spec, MultisumSpec};
    use crate::series::{first_mismatch, pochhammer, Count, Monomial};

    /// sum_n q^{n^2}/(q;q)_n by explicit division of each term.
    fn rr_brute(order: usize, extra_linear: usize) -> TruncatedQSeries {
        let mut acc = TruncatedQSeries::zero(order);
        for n in 0..=order {
            let e = n * n + extra_linear * n;
            if e > order {
                break;
            }
            let den = pochhammer(Monomial::q_pow(1), 1, Count::Finite(n), order).unwrap();
            let term = TruncatedQSeries::monomial(1.into(), e, order).checked_mul(&den.invert().unwrap()).unwrap();
            acc = acc + term;
        }
        acc
    }

    #[test]
    fn rogers_ramanujan_first_sum() {
        let spec = MultisumSpec::from_parts(&[2], &[], &[1], &[], &[]).unwrap();
        let got = spec.eval(4).unwrap();
        assert_eq!(got, rr_brute(4, 0));
        assert_eq!(got, TruncatedQSeries::from_i64s(&[1, 1, 1, 1, 2]));
        assert_eq!(spec.eval(60).unwrap(), rr_brute(60, 0));
        let second = MultisumSpec::from_parts(&[2], &[], &[2], &[], &[]).unwrap();
        assert_eq!(second.eval(60).unwrap(), rr_brute(60, 1));
    }

    #[test]
    fn order_zero_is_one() {
        for spec in [
            level5_triple_sum(0).unwrap(),
            level7_quad_sum(1).unwrap(),
            f3(1, 5, 1, 12).unwrap(),
            andrews_gordon_spec(5, 3).unwrap(),
        ] {
            assert_eq!(spec.eval(0).unwrap(), TruncatedQSeries::one(0));
        }
    }

    use crate::multisum::{f3, level5_triple_sum, level7_quad_sum};

    /// The N_j form of the k = 3 Andrews-Gordon sum, summed directly.
    fn ag3_direct(i: usize, order: usize) -> TruncatedQSeries {
        let mut acc = TruncatedQSeries::zero(order);
        for n1 in 0..=order {
            for n2 in 0..=order {
                let big1 = n1 + n2;
                let big2 = n2;
                let mut e = big1 * big1 + big2 * big2;
                if i <= 1 {
                    e += big1;
                }
                if i <= 2 {
                    e += big2;
                }
                if e > order {
                    continue;
                }
                let d1 = pochhammer(Monomial::q_pow(1), 1, Count::Finite(n1), order).unwrap();
                let d2 = pochhammer(Monomial::q_pow(1), 1, Count::Finite(n2), order).unwrap();
                let den = (&d1 * &d2).invert().unwrap();
                acc = acc + TruncatedQSeries::monomial(1.into(), e, order) * den;
            }
        }
        acc
    }

    #[test]
    fn andrews_gordon_k3_against_n_form() {
        for i in 1..=3 {
            let spec = andrews_gordon_spec(3, i).unwrap();
            assert_eq!(first_mismatch(&spec.eval(40).unwrap(), &ag3_direct(i, 40)).unwrap(), None, "i = {i}");
        }
    }

    #[test]
    fn pruned_matches_boxed_small() {
        let spec = level5_triple_sum(1).unwrap();
        let pruned = spec.eval(25).unwrap();
        let boxed = boxed_eval(&spec, None, 25).unwrap();
        assert_eq!(&pruned, boxed.row(0));
    }

    #[test]
    fn term_count_counts_lattice_points() {
        // q^{n^2}: n = 0, 1, 2 at order 4
        let spec = MultisumSpec::from_parts(&[2], &[], &[1], &[], &[]).unwrap();
        assert_eq!(spec.eval_counted(4).unwrap().term_count, 3);
    }
}
