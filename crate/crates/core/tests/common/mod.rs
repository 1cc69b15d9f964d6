//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use qrr::bivariate::BivariateSeries;
use qrr::series::{pochhammer, Count, Monomial, Sign, TruncatedQSeries};

/// Every partition of `n`, parts in decreasing order.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `sum_n #{partitions of n with keep} q^n`, by filtering every partition.
pub fn filtered_gf(order: usize, keep: impl Fn(&[usize]) -> bool) -> TruncatedQSeries {
    let coeffs: Vec<i64> = (0..=order)
        .map(|n| all_partitions(n).iter().filter(|p| keep(p)).count() as i64)
        .collect();
    TruncatedQSeries::from_i64s(&coeffs)
}

/// `sum_k (-1)^k q^{k(3k-1)/2}` over all integers `k`.
pub fn pentagonal(order: usize) -> TruncatedQSeries {
    let mut c = vec![0i64; order + 1];
    for k in -(order as i64)..=(order as i64) {
        let e = k * (3 * k - 1) / 2;
        if (0..=order as i64).contains(&e) {
            c[e as usize] += if k % 2 == 0 { 1 } else { -1 };
        }
    }
    TruncatedQSeries::from_i64s(&c)
}

/// `1/(q;q)_n` by inverting the expanded product.
pub fn inv_qfac(n: usize, order: usize) -> TruncatedQSeries {
    pochhammer(Monomial::q_pow(1), 1, Count::Finite(n), order).unwrap().invert().unwrap()
}

/// `sum_n c_n(q) x^n` from a per-n coefficient function.
pub fn x_series(x_degree: usize, c: impl Fn(usize) -> TruncatedQSeries) -> BivariateSeries {
    BivariateSeries::from_rows((0..=x_degree).map(c).collect())
}

pub fn q_monomial(sign: Sign, e: usize, order: usize) -> TruncatedQSeries {
    TruncatedQSeries::monomial(BigInt::from(sign.as_i64()), e, order)
}
