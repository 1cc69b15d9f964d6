//! Checks around the Capparelli generating functions `f_a(x, q)`.

use std::time::Instant;

use super::{compare_values, Mismatch, StatusClaim, Value, VerifyReport};
use crate::bivariate::BivariateSeries;
use crate::error::{Error, Result};
use crate::multisum::{capparelli_double_sum, capparelli_double_sum_alt, capparelli_triple_sum};
use crate::partitions::capparelli_gf_bivariate;
use crate::products::{char_a22, A22Weight, ProductSpec};
use crate::series::Sign;

/// `(1 + x q^3) F(xq^3) + x (q^{3-a} + q^{3+a} + x q^6) F(xq^6) + x^2 q^9 (1 - x q^6) F(xq^9)`.
pub fn qdiff_rhs(f: &BivariateSeries, a: usize) -> Result<BivariateSeries> {
    if !(1..=2).contains(&a) {
        return Err(Error::InvalidSpec(format!("a must be 1 or 2, got {a}")));
    }
    let f3 = f.substitute(3);
    let f6 = f.substitute(6);
    let f9 = f.substitute(9);
    let terms = [
        f3.clone(),
        f3.mul_monomial(Sign::Plus, 1, 3),
        f6.mul_monomial(Sign::Plus, 1, 3 - a),
        f6.mul_monomial(Sign::Plus, 1, 3 + a),
        f6.mul_monomial(Sign::Plus, 2, 6),
        f9.mul_monomial(Sign::Plus, 2, 9),
        f9.mul_monomial(Sign::Minus, 3, 15),
    ];
    let mut acc = BivariateSeries::zero(f.x_degree(), f.order());
    for t in &terms {
        acc = acc.checked_add(t)?;
    }
    Ok(acc)
}

/// Builds `f_a(x, q)` from partitions, the double sum and the triple sum,
/// checks they agree, then checks the q-difference equation. For `a = 2`
/// the two double-sum forms are also compared.
pub fn check_qdiff_capparelli(a: usize, x_degree: usize, order: usize) -> Result<VerifyReport> {
    if !(1..=2).contains(&a) {
        return Err(Error::InvalidSpec(format!("a must be 1 or 2, got {a}")));
    }
    let started = Instant::now();
    let enumerated = capparelli_gf_bivariate(a, x_degree, order)?;
    let double = capparelli_double_sum(a)?.eval_bivariate_counted(x_degree, order)?;
    let triple = capparelli_triple_sum(a)?.eval_bivariate_counted(x_degree, order)?;
    let mut terms = double.term_count + triple.term_count;
    let mut builds = vec![("double sum", double.value), ("triple sum", triple.value)];
    if a == 2 {
        let alt = capparelli_double_sum_alt()?.eval_bivariate_counted(x_degree, order)?;
        terms += alt.term_count;
        builds.push(("alternative double sum", alt.value));
    }
    let name = format!("qdiff-a{a}");
    let report = |mm: Option<Mismatch>, note: String| {
        let mut r = VerifyReport::from_mismatch(name.clone(), StatusClaim::Theorem, order, Some(x_degree), mm, started, terms);
        r.note = Some(note);
        r
    };
    let enum_value = Value::Bi(enumerated.clone());
    for (label, b) in &builds {
        if let Some(mm) = compare_values(&enum_value, &Value::Bi(b.clone()))? {
            return Ok(report(Some(mm), format!("enumeration differs from the {label}")));
        }
    }
    let rhs = qdiff_rhs(&enumerated, a)?;
    let mm = compare_values(&enum_value, &Value::Bi(rhs))?;
    let note = if mm.is_some() {
        "q-difference equation fails"
    } else {
        "all builds agree and satisfy the q-difference equation"
    };
    Ok(report(mm, note.into()))
}

/// The level 3 character of the Capparelli identity: `(-q^2,-q^3,-q^4,-q^6;q^6)_inf`
/// for `a = 1`, `(-q,-q^3,-q^5,-q^6;q^6)_inf` for `a = 2`.
pub fn capparelli_product(a: usize) -> Result<ProductSpec> {
    match a {
        1 => ProductSpec::pochhammers(Sign::Minus, &[2, 3, 4, 6], 6, false),
        2 => ProductSpec::pochhammers(Sign::Minus, &[1, 3, 5, 6], 6, false),
        _ => Err(Error::InvalidSpec(format!("a must be 1 or 2, got {a}"))),
    }
}

/// Pairwise comparison of the partition generating function, the double
/// sum, the triple sum and the character product. The three bivariate builds
/// are compared in both variables; all four are compared at `x = 1`, which
/// the row sums reproduce once `x_degree` exceeds the number of parts any
/// partition of size at most `order` can have.
pub fn level3_triangle(a: usize, x_degree: usize, order: usize) -> Result<Vec<VerifyReport>> {
    let started = Instant::now();
    let weight = if a == 1 { A22Weight::new(3, 0) } else { A22Weight::new(1, 1) };
    let builds = [
        ("enumeration", capparelli_gf_bivariate(a, x_degree, order)?),
        ("double", capparelli_double_sum(a)?.eval_bivariate(x_degree, order)?),
        ("triple", capparelli_triple_sum(a)?.eval_bivariate(x_degree, order)?),
    ];
    let mut at_one: Vec<(&str, Value)> = builds.iter().map(|(n, b)| (*n, Value::Uni(b.sum_rows()))).collect();
    at_one.push(("product", Value::Uni(capparelli_product(a)?.eval(order)?)));
    at_one.push(("character", Value::Uni(char_a22(3, weight)?.eval(order)?)));
    let mut out = Vec::new();
    for i in 0..builds.len() {
        for j in i + 1..builds.len() {
            let mm = compare_values(&Value::Bi(builds[i].1.clone()), &Value::Bi(builds[j].1.clone()))?;
            out.push(VerifyReport::from_mismatch(
                format!("triangle-a{a}-{}-{}", builds[i].0, builds[j].0),
                StatusClaim::Theorem,
                order,
                Some(x_degree),
                mm,
                started,
                0,
            ));
        }
    }
    for i in 0..at_one.len() {
        for j in i + 1..at_one.len() {
            let mm = compare_values(&at_one[i].1, &at_one[j].1)?;
            out.push(VerifyReport::from_mismatch(
                format!("triangle-a{a}-{}-{}-at-x1", at_one[i].0, at_one[j].0),
                StatusClaim::Theorem,
                order,
                None,
                mm,
                started,
                0,
            ));
        }
    }
    Ok(out)
}
