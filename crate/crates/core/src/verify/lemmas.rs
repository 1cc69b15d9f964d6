//! The four finite summation lemmas and the WZ certificate of the last one.

use std::time::Instant;

use num_bigint::BigInt;

use super::{compare_values, eval_bi_product, BiFactor, Mismatch, StatusClaim, Value, VerifyReport};
use crate::bivariate::BivariateSeries;
use crate::error::{Error, Result};
use crate::multisum::lemma_family;
use crate::series::{first_mismatch, inverse_q_factorial, pochhammer, Count, Monomial, Sign, TruncatedQSeries};

/// `sign q^exponent prod (q;q)_n over numer / prod (q;q)_n over denom`,
/// built by in-place binomial multiplications and divisions.
fn q_ratio(sign: Sign, exponent: usize, numer: &[usize], denom: &[usize], order: usize) -> TruncatedQSeries {
    let mut s = TruncatedQSeries::monomial(BigInt::from(sign.as_i64()), exponent, order);
    if exponent > order {
        return s;
    }
    for &n in numer {
        for t in 1..=n {
            s.mul_binomial(Sign::Plus, t);
        }
    }
    for &n in denom {
        for t in 1..=n.min(order) {
            s.div_binomial(Sign::Plus, t);
        }
    }
    s
}

fn wz_exponent(m: usize, j: usize) -> i64 {
    let (m, j) = (m as i64, j as i64);
    3 * (j * (j - 1) / 2) + (m - j) * j + 2 * j
}

/// `f_{M,j} = (-1)^j q^{3 binom(j,2) + (M-j) j + 2j} (q)_M^2 / ((q)_{M-j} (q)_j (q)_{2M})`,
/// zero for `j > M`.
pub fn wz_f(m: usize, j: usize, order: usize) -> TruncatedQSeries {
    if j > m {
        return TruncatedQSeries::zero(order);
    }
    let e = wz_exponent(m, j);
    debug_assert!(e >= 0);
    q_ratio(Sign::from_parity(j % 2 == 1), e as usize, &[m, m], &[m - j, j, 2 * m], order)
}

/// The certificate `g_{M,j}`, using `1/(q;q)_n = 0` for `n < 0`.
pub fn wz_g(m: usize, j: usize, order: usize) -> TruncatedQSeries {
    // 1/(q)_{j-1} and 1/(q)_{M-j+1} vanish outside 1 <= j <= M+1
    if j == 0 || j > m + 1 {
        return TruncatedQSeries::zero(order);
    }
    let e = wz_exponent(m, j);
    assert!(e >= 0, "g exponent is nonnegative on its support");
    let mut base = q_ratio(
        Sign::from_parity(j % 2 == 1),
        e as usize,
        &[m, m],
        &[m + 1 - j, j - 1, 2 * m],
        order,
    );
    if m < order {
        base.div_binomial(Sign::Minus, m + 1);
    }
    if 2 * m < order {
        base.div_binomial(Sign::Plus, 2 * m + 1);
    }
    // times (1 - q^{M+1-j} - q^{2M+2-j})
    let mut out = base.clone();
    out.add_shifted(base.coeffs(), Sign::Minus, m + 1 - j);
    out.add_shifted(base.coeffs(), Sign::Minus, 2 * m + 2 - j);
    out
}

fn series_mismatch(a: &TruncatedQSeries, b: &TruncatedQSeries, m: usize) -> Result<Option<Mismatch>> {
    Ok(first_mismatch(a, b)?.map(|n| Mismatch {
        exponent: n,
        x_exponent: Some(m),
        lhs: a.coeff(n).to_string(),
        rhs: b.coeff(n).to_string(),
    }))
}

/// Checks the telescoping relation, the support of `g`, `sum_j f_{M,j} = 1`
/// and the summation identity itself for every `M <= m_max`.
pub fn check_wz(m_max: usize, order: usize) -> Result<VerifyReport> {
    let started = Instant::now();
    let mut terms = 0u64;
    let fail = |m: Option<Mismatch>, note: String, terms: u64| -> VerifyReport {
        let mut r = VerifyReport::from_mismatch("wz", StatusClaim::Theorem, order, None, m, started, terms);
        r.note = Some(note);
        r
    };
    let zero = TruncatedQSeries::zero(order);
    for m in 0..=m_max {
        let g: Vec<TruncatedQSeries> = (0..=m + 3).map(|j| wz_g(m, j, order)).collect();
        for (j, gj) in g.iter().enumerate().take(m + 3) {
            if !gj.is_zero() && !(1..=m + 1).contains(&j) {
                let mm = series_mismatch(gj, &zero, m)?;
                return Ok(fail(mm, format!("g_{{{m},{j}}} is nonzero outside its support"), terms));
            }
        }
        for j in 0..=m + 2 {
            let lhs = wz_f(m + 1, j, order).checked_sub(&wz_f(m, j, order))?;
            let rhs = g[j + 1].checked_sub(&g[j])?;
            terms += 1;
            if let Some(mm) = series_mismatch(&lhs, &rhs, m)? {
                return Ok(fail(Some(mm), format!("telescoping fails at (M, j) = ({m}, {j})"), terms));
            }
        }
        let mut total = TruncatedQSeries::zero(order);
        for j in 0..=m {
            total.add_assign_checked(&wz_f(m, j, order))?;
        }
        if let Some(mm) = series_mismatch(&total, &TruncatedQSeries::one(order), m)? {
            return Ok(fail(Some(mm), format!("sum over j of f_{{{m},j}} is not 1"), terms));
        }
    }
    let lemma = check_lemma(4, m_max, order)?;
    terms += lemma.term_count;
    if !lemma.verified() {
        return Ok(fail(lemma.first_mismatch, "summation identity fails".into(), terms));
    }
    Ok(fail(None, "telescoping, support, sum and identity hold".into(), terms))
}

/// Closed forms of the four lemmas as polynomials in `x` with `x^M` coefficient the right side.
fn lemma_rhs(part: usize, m_max: usize, order: usize) -> Result<BivariateSeries> {
    if part == 2 {
        // (xq;q^2)_inf / (x;q^2)_inf
        let factors = [
            BiFactor {
                sign: Sign::Plus,
                x_power: 1,
                q_exponent: 1,
                step: 2,
                count: Count::Infinite,
                inverted: false,
            },
            BiFactor {
                sign: Sign::Plus,
                x_power: 1,
                q_exponent: 0,
                step: 2,
                count: Count::Infinite,
                inverted: true,
            },
        ];
        return eval_bi_product(&factors, m_max, order);
    }
    let rows = (0..=m_max)
        .map(|m| -> Result<TruncatedQSeries> {
            Ok(match part {
                1 => inverse_q_factorial(1, m, order),
                3 => {
                    let h = m / 2;
                    pochhammer(Monomial::neg_q_pow(1), 1, Count::Finite(h), order)?
                        .checked_mul(&inverse_q_factorial(1, h, order))?
                }
                4 => {
                    let inv = inverse_q_factorial(1, m, order);
                    pochhammer(Monomial::q_pow(1), 1, Count::Finite(2 * m), order)?
                        .checked_mul(&inv)?
                        .checked_mul(&inv)?
                }
                _ => unreachable!(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BivariateSeries::from_rows(rows))
}

/// Checks lemma `part` (1..=4) for every `M <= m_max`: the constrained
/// lattice sum against its closed form. Mismatches report `M` as the x exponent.
pub fn check_lemma(part: usize, m_max: usize, order: usize) -> Result<VerifyReport> {
    if !(1..=4).contains(&part) {
        return Err(Error::InvalidSpec(format!("lemma part must be 1..=4, got {part}")));
    }
    let started = Instant::now();
    let lhs = lemma_family(part)?.eval_bivariate_counted(m_max, order)?;
    let rhs = lemma_rhs(part, m_max, order)?;
    let mm = compare_values(&Value::Bi(lhs.value), &Value::Bi(rhs))?;
    Ok(VerifyReport::from_mismatch(
        format!("lemma-part{part}"),
        StatusClaim::Theorem,
        order,
        Some(m_max),
        mm,
        started,
        lhs.term_count,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Monomial as Mo;

    #[test]
    fn f_at_zero() {
        assert_eq!(wz_f(0, 0, 10), TruncatedQSeries::one(10));
        for j in 1..4 {
            assert!(wz_f(0, j, 10).is_zero());
        }
    }

    #[test]
    fn f_by_direct_division() {
        let order = 40;
        for (m, j) in [(3, 1), (4, 2), (5, 5)] {
            let qf = |n: usize| pochhammer(Mo::q_pow(1), 1, Count::Finite(n), order).unwrap();
            let num = qf(m).checked_mul(&qf(m)).unwrap();
            let den = qf(m - j).checked_mul(&qf(j)).unwrap().checked_mul(&qf(2 * m)).unwrap();
            let e = wz_exponent(m, j) as usize;
            let sign = if j % 2 == 1 { -1 } else { 1 };
            let direct = TruncatedQSeries::monomial(BigInt::from(sign), e, order)
                .checked_mul(&num)
                .unwrap()
                .checked_mul(&den.invert().unwrap())
                .unwrap();
            assert_eq!(wz_f(m, j, order), direct);
        }
    }

    #[test]
    fn telescoping_at_2_1() {
        let order = 80;
        let lhs = wz_f(3, 1, order) - wz_f(2, 1, order);
        let rhs = wz_g(2, 2, order) - wz_g(2, 1, order);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn g_support() {
        assert!(wz_g(3, 0, 30).is_zero());
        assert!(wz_g(3, 5, 30).is_zero());
        assert!(!wz_g(3, 4, 30).is_zero());
    }

    #[test]
    fn wz_small() {
        let r = check_wz(6, 40).unwrap();
        assert!(r.verified(), "{r:?}");
    }

    #[test]
    fn part1_at_m1() {
        // 1/(q^2;q^2)_1 + q/(q^2;q^2)_1 = 1/(q;q)_1
        let order = 12;
        let a = inverse_q_factorial(2, 1, order);
        let sum = a.clone() + a.shifted(Sign::Plus, 1);
        assert_eq!(sum, inverse_q_factorial(1, 1, order));
        let fam = lemma_family(1).unwrap().eval_bivariate(3, order).unwrap();
        assert_eq!(fam.row(1), &sum);
    }

    #[test]
    fn part3_at_m2() {
        // (2,0,0), (1,1,0), (0,2,0), (0,0,1)
        let order = 30;
        let inv = |n| inverse_q_factorial(1, n, order);
        let t200 = inv(2);
        let t110 = -(inv(1).checked_mul(&inv(1)).unwrap().shifted(Sign::Plus, 2));
        let t020 = inv(2).shifted(Sign::Plus, 2);
        let t001 = inverse_q_factorial(2, 1, order).shifted(Sign::Plus, 1);
        let direct = t200 + t110 + t020 + t001;
        let closed = pochhammer(Mo::neg_q_pow(1), 1, Count::Finite(1), order).unwrap() * inv(1);
        assert_eq!(direct, closed);
        let fam = lemma_family(3).unwrap().eval_bivariate(2, order).unwrap();
        assert_eq!(fam.row(2), &direct);
    }

    #[test]
    fn part2_rhs_is_the_q_binomial_coefficient() {
        // validated at M = 0, 1, 2 and beyond: (q;q^2)_M / (q^2;q^2)_M
        let order = 50;
        let rhs = lemma_rhs(2, 8, order).unwrap();
        for m in 0..=8 {
            let closed = pochhammer(Mo::q_pow(1), 2, Count::Finite(m), order).unwrap() * inverse_q_factorial(2, m, order);
            assert_eq!(rhs.row(m), &closed, "M = {m}");
        }
        assert_eq!(rhs.row(1).truncate(4), TruncatedQSeries::from_i64s(&[1, -1, 1, -1, 1]));
    }

    #[test]
    fn m1_identity_four() {
        // 1/(q)_1 - q^2/(q)_1 = (q;q)_2/(q;q)_1^2 = 1 + q
        let order = 20;
        let fam = lemma_family(4).unwrap().eval_bivariate(1, order).unwrap();
        let mut coeffs = vec![0; order + 1];
        coeffs[0] = 1;
        coeffs[1] = 1;
        let expect = TruncatedQSeries::from_i64s(&coeffs);
        assert_eq!(fam.row(1), &expect);
    }

    #[test]
    fn all_parts_small() {
        for part in 1..=4 {
            let r = check_lemma(part, 8, 30).unwrap();
            assert!(r.verified(), "part {part}: {r:?}");
        }
    }
}
