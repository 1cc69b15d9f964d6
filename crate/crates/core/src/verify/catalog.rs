//! The named identities.

use super::{BiFactor, CatalogEntry, Side, StatusClaim};
use crate::error::{Error, Result};
use crate::multisum::*;
use crate::partitions::PartitionPredicate;
use crate::products::{andrews_gordon_product, char_a13_level2, char_a22, A22Weight, ProductSpec};
use crate::series::{Count, Sign};

fn entry(name: impl Into<String>, lhs: Side, rhs: Side, status_claim: StatusClaim, reference: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        lhs,
        rhs,
        status_claim,
        reference: reference.to_string(),
    }
}

fn a22(level: usize, d0: usize, d1: usize) -> Result<Side> {
    Ok(Side::Product(char_a22(level, A22Weight::new(d0, d1))?))
}

fn build() -> Result<Vec<CatalogEntry>> {
    use StatusClaim::{Conjecture, Theorem};
    let ms = Side::Multisum;
    let mut out = vec![
        entry(
            "rr-1",
            ms(andrews_gordon_spec(2, 2)?),
            Side::Product(ProductSpec::inverse_brackets(&[1], 5)?),
            Theorem,
            "first Rogers-Ramanujan identity",
        ),
        entry(
            "rr-2",
            ms(andrews_gordon_spec(2, 1)?),
            Side::Product(ProductSpec::inverse_brackets(&[2], 5)?),
            Theorem,
            "second Rogers-Ramanujan identity",
        ),
    ];
    for k in 2..=5 {
        for i in 1..=k {
            out.push(entry(
                format!("ag-{k}-{i}"),
                ms(andrews_gordon_spec(k, i)?),
                Side::Product(andrews_gordon_product(k, i)?),
                Theorem,
                "Andrews-Gordon identity",
            ));
        }
    }
    let level5 = [(5, 0), (1, 2)];
    let level7_triple = [(5, 1), (1, 3)];
    let level7_quad = [(7, 0), (3, 2)];
    for a in 0..=1 {
        out.push(entry(
            format!("a22-l5-a{a}"),
            ms(level5_triple_sum(a)?),
            a22(5, level5[a].0, level5[a].1)?,
            Theorem,
            "level 5 A2(2) standard modules",
        ));
        out.push(entry(
            format!("a22-l7-triple-a{a}"),
            ms(level7_triple_sum(a)?),
            a22(7, level7_triple[a].0, level7_triple[a].1)?,
            Theorem,
            "level 7 A2(2) standard modules, triple sums",
        ));
        out.push(entry(
            format!("a22-l7-quad-a{a}"),
            ms(level7_quad_sum(a)?),
            a22(7, level7_quad[a].0, level7_quad[a].1)?,
            Theorem,
            "level 7 A2(2) standard modules, quadruple sums",
        ));
        out.push(entry(
            format!("reduction-l5-j0-a{a}"),
            ms(level5_triple_sum(a)?.restrict_to_zero(1)?),
            ms(level4_double_sum(1, 1 + 2 * a)?),
            Theorem,
            "j = 0 part of the level 5 triple sums",
        ));
    }
    out.push(entry(
        "remark-l5-missing",
        a22(5, 3, 1)?,
        Side::Product(ProductSpec::pochhammers(Sign::Plus, &[1], 2, true)?),
        Theorem,
        "the level 5 module 3L0+L1 as partitions into odd parts",
    ));
    let slater = [(39, (5, 0)), (38, (1, 2)), (99, (7, 0)), (94, (3, 2)), (79, (5, 1)), (96, (1, 3))];
    for (number, (d0, d1)) in slater {
        out.push(entry(
            format!("slater-{number}"),
            Side::Slater(slater_sum(number)?),
            a22(d0 + 2 * d1, d0, d1)?,
            Theorem,
            "Slater-list single sum",
        ));
    }
    for (tag, (li, lk), (d0, d1)) in [("234", (1, 1), (4, 0)), ("146", (1, 3), (2, 1)), ("256", (2, 3), (0, 2))] {
        out.push(entry(
            format!("tt-l4-{tag}"),
            ms(level4_double_sum(li, lk)?),
            a22(4, d0, d1)?,
            Theorem,
            "level 4 double sums",
        ));
    }
    for (tag, (a, b, c), lk) in [("L3", (1, 1, 8), 1), ("L0L1", (1, 3, 12), 3)] {
        out.push(entry(
            format!("reduction-f2-k0-{tag}"),
            ms(f2(a, b, c)?.restrict_to_zero(2)?),
            ms(level4_double_sum(1, lk)?),
            Theorem,
            "k = 0 part of the F2 sums",
        ));
    }
    for (tag, (a, b, c), i) in [("L3", (2, 2, 2), 3), ("L5", (4, 2, 6), 5), ("L7", (6, 4, 6), 7)] {
        out.push(entry(
            format!("conj-f1-{tag}"),
            ms(f1(a, b, c)?),
            Side::Product(char_a13_level2(i)?),
            Conjecture,
            "F1 sums as level 2 A13(2) characters",
        ));
    }
    for (tag, (a, b, c), i) in [("L0L1", (1, 3, 12), 1), ("L3", (1, 1, 8), 3), ("L7", (3, 3, 16), 7)] {
        out.push(entry(
            format!("conj-f2-{tag}"),
            ms(f2(a, b, c)?),
            Side::Product(char_a13_level2(i)?),
            Conjecture,
            "F2 sums as level 2 A13(2) characters",
        ));
        out.push(entry(
            format!("remark-f2-eq-f3-{tag}"),
            ms(f2(a, b, c)?),
            ms(f3(a, 2 * a + 1, b, c)?),
            Theorem,
            "F2(a,b,c) = F3(a,2a+1,b,c)",
        ));
    }
    out.push(entry(
        "conj-f3-L5",
        ms(f3(1, 5, 1, 12)?),
        Side::Product(char_a13_level2(5)?),
        Conjecture,
        "F3 sum as a level 2 A13(2) character",
    ));
    out.push(entry(
        "remark-aux-halving",
        Side::BivariateMultisum(halving_family()?),
        Side::BivariateProduct(vec![BiFactor {
            sign: Sign::Plus,
            x_power: 1,
            q_exponent: 0,
            step: 1,
            count: Count::Infinite,
            inverted: true,
        }]),
        Theorem,
        "sum over i + 2j = M of q^binom(i,2) / ((q)_i (q^2;q^2)_j) = 1/(q)_M",
    ));
    for a in 1..=2 {
        out.push(entry(
            format!("cap-kur-{a}"),
            ms(capparelli_double_sum(a)?.at_x_equals_one()?),
            Side::Product(super::capparelli::capparelli_product(a)?),
            Theorem,
            "Capparelli identity via double sums at x = 1",
        ));
        out.push(entry(
            format!("cap-triple-a{a}"),
            Side::BivariateMultisum(capparelli_triple_sum(a)?),
            Side::PartitionsByLength(PartitionPredicate::CapC { a }),
            Theorem,
            "Capparelli partitions by length as triple sums",
        ));
    }
    out.push(entry(
        "cap-alt-double",
        Side::BivariateMultisum(capparelli_double_sum(2)?),
        Side::BivariateMultisum(capparelli_double_sum_alt()?),
        Theorem,
        "two double-sum forms of f_2(x, q)",
    ));
    for (tag, (d0, d1), residues) in [("3L0", (3, 0), [2, 3, 4, 6]), ("L0L1", (1, 1), [1, 3, 5, 6])] {
        out.push(entry(
            format!("prod-equiv-l3-{tag}"),
            a22(3, d0, d1)?,
            Side::Product(ProductSpec::pochhammers(Sign::Minus, &residues, 6, false)?),
            Theorem,
            "bracket and Pochhammer forms of the level 3 characters",
        ));
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// Every catalog entry, sorted by name.
pub fn catalog() -> Vec<CatalogEntry> {
    build().expect("catalog constructors are valid")
}

/// Looks up an entry; unknown names come back with up to three near matches.
pub fn find_entry(name: &str) -> Result<CatalogEntry> {
    let all = catalog();
    if let Some(e) = all.iter().find(|e| e.name == name) {
        return Ok(e.clone());
    }
    let mut scored: Vec<(f64, &str)> = all
        .iter()
        .map(|e| (strsim::jaro_winkler(name, &e.name), e.name.as_str()))
        .filter(|(s, _)| *s > 0.7)
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(b.1)));
    Err(Error::UnknownName {
        name: name.to_string(),
        suggestions: scored.into_iter().take(3).map(|(_, n)| n.to_string()).collect(),
    })
}

/// Copies of `entry` with one linear coefficient of one sum raised by 1, named `<entry>/<side>-B<l>`.
pub fn linear_mutations(entry: &CatalogEntry) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for (label, side) in [("lhs", &entry.lhs), ("rhs", &entry.rhs)] {
        let mutated: Vec<Side> = match side {
            Side::Multisum(s) => (0..s.s()).map(|l| Side::Multisum(s.bump_linear(l))).collect(),
            Side::BivariateMultisum(s) => (0..s.s()).map(|l| Side::BivariateMultisum(s.bump_linear(l))).collect(),
            Side::Slater(s) => {
                let mut t = *s;
                t.linear += 1;
                vec![Side::Slater(t)]
            }
            _ => Vec::new(),
        };
        for (l, m) in mutated.into_iter().enumerate() {
            let mut e = entry.clone();
            e.name = format!("{}/{label}-B{l}", entry.name);
            if label == "lhs" {
                e.lhs = m;
            } else {
                e.rhs = m;
            }
            out.push(e);
        }
    }
    out
}
