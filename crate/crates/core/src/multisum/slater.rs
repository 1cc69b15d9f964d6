use num_bigint::BigInt;

use super::Evaluated;
use crate::series::{Sign, TruncatedQSeries};

/// Single sums `sum_n q^{alpha n^2 + beta n} / (q;q)_{2n + shift}`, the
/// shape of the Slater-list identities. The doubled Pochhammer length falls
/// outside the multisum normal form, so these get their own evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlaterSum {
    pub quadratic: usize,
    pub linear: usize,
    pub shift: usize,
}

impl SlaterSum {
    pub fn new(quadratic: usize, linear: usize, shift: usize) -> Self {
        assert!(quadratic >= 1, "the quadratic coefficient bounds the sum");
        SlaterSum {
            quadratic,
            linear,
            shift,
        }
    }

    pub fn exponent(&self, n: usize) -> usize {
        self.quadratic * n * n + self.linear * n
    }

    pub fn eval(&self, order: usize) -> TruncatedQSeries {
        self.eval_counted(order).value
    }

    pub fn eval_counted(&self, order: usize) -> Evaluated<TruncatedQSeries> {
        let mut out = TruncatedQSeries::zero(order);
        // running 1/(q;q)_{2n+shift}
        let mut p = TruncatedQSeries::one(order);
        for k in 1..=self.shift.min(order) {
            p.div_binomial(Sign::Plus, k);
        }
        let mut len = self.shift;
        let mut terms = 0;
        let mut n = 0;
        loop {
            let e = self.exponent(n);
            if e > order {
                break;
            }
            while len < 2 * n + self.shift {
                len += 1;
                if len <= order {
                    p.div_binomial(Sign::Plus, len);
                }
            }
            out.add_shifted(p.coeffs(), Sign::Plus, e);
            terms += 1;
            n += 1;
        }
        Evaluated {
            value: out,
            term_count: terms,
        }
    }

    /// The `n`-th term with its denominator expanded and inverted from scratch.
    pub fn term_by_division(&self, n: usize, order: usize) -> TruncatedQSeries {
        let den = crate::series::pochhammer(
            crate::series::Monomial::q_pow(1),
            1,
            crate::series::Count::Finite(2 * n + self.shift),
            order,
        )
        .expect("finite Pochhammer");
        TruncatedQSeries::monomial(BigInt::from(1), self.exponent(n), order)
            .checked_mul(&den.invert().expect("unit constant term"))
            .expect("same order")
    }
}
