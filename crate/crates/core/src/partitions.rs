//! Partition enumeration under difference and congruence conditions.
//!
//! Partitions are built part by part in weakly decreasing order. Each
//! predicate exposes how many of the most recent parts it needs to see
//! (`window`), so counts are memoized on `(remaining size, window, number of
//! ones)` without ever materializing the partitions. [`enumerate`] lists
//! them explicitly for small sizes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bivariate::BivariateSeries;
use crate::error::{Error, Result};
use crate::series::TruncatedQSeries;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPredicate("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// The closed family of partition conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PartitionPredicate {
    /// `λ_j - λ_{j+k-1} >= 2` and fewer than `i` parts equal to 1.
    AgC { k: usize, i: usize },
    /// No part `≡ 0, ±i (mod 2k+1)`.
    AgD { k: usize, i: usize },
    /// Gaps at least 2, gaps at most 3 only between parts summing to a
    /// multiple of 3, and no part equal to `a`.
    CapC { a: usize },
    /// Distinct parts, none `≡ ±a (mod 6)`.
    CapD { a: usize },
    /// Every part is congruent to a member of `residues` mod `m`.
    Residues {
        m: usize,
        residues: Vec<usize>,
        distinct: bool,
    },
}

impl PartitionPredicate {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidPredicate(m.to_string()));
        match self {
            PartitionPredicate::AgC { k, i } | PartitionPredicate::AgD { k, i } => {
                if *k < 2 || *i < 1 || i > k {
                    return bad("ag-c/ag-d need k >= 2 and 1 <= i <= k");
                }
            }
            PartitionPredicate::CapC { a } | PartitionPredicate::CapD { a } => {
                if !(1..=2).contains(a) {
                    return bad("cap-c/cap-d need a in {1, 2}");
                }
            }
            PartitionPredicate::Residues { m, .. } => {
                if *m == 0 {
                    return bad("residue modulus must be positive");
                }
            }
        }
        Ok(())
    }

    fn window(&self) -> usize {
        match self {
            PartitionPredicate::AgC { k, .. } => k - 1,
            _ => 1,
        }
    }

    fn part_allowed(&self, p: usize) -> bool {
        match self {
            PartitionPredicate::AgC { .. } => true,
            PartitionPredicate::AgD { k, i } => {
                let m = 2 * k + 1;
                let r = p % m;
                r != 0 && r != *i && r != m - i
            }
            PartitionPredicate::CapC { a } => p != *a,
            PartitionPredicate::CapD { a } => {
                let r = p % 6;
                r != *a && r != 6 - a
            }
            PartitionPredicate::Residues { m, residues, .. } => residues.iter().any(|r| r % m == p % m),
        }
    }

    /// Largest admissible next part after `prev`.
    fn next_bound(&self, prev: Option<usize>, remaining: usize) -> usize {
        let Some(prev) = prev else {
            return remaining;
        };
        let gap = match self {
            PartitionPredicate::CapC { .. } => 2,
            PartitionPredicate::CapD { .. } => 1,
            PartitionPredicate::Residues { distinct: true, .. } => 1,
            PartitionPredicate::AgC { k: 2, .. } => 2,
            _ => 0,
        };
        prev.saturating_sub(gap).min(remaining)
    }

    /// Whether `next` may follow the parts in `window` (most recent last).
    fn admits(&self, window: &[usize], ones: usize, next: usize) -> bool {
        if !self.part_allowed(next) {
            return false;
        }
        match self {
            PartitionPredicate::AgC { k, i } => {
                if next == 1 && ones + 1 >= *i {
                    return false;
                }
                window.len() < k - 1 || window[0] >= next + 2
            }
            PartitionPredicate::CapC { .. } => match window.last() {
                None => true,
                Some(&prev) => {
                    let gap = prev - next;
                    gap >= 2 && (gap > 3 || (prev + next) % 3 == 0)
                }
            },
            _ => true,
        }
    }

    /// Checks a whole partition against the predicate.
    pub fn holds(&self, partition: &Partition) -> bool {
        let w = self.window();
        let mut window: Vec<usize> = Vec::new();
        let mut ones = 0;
        for &p in partition.parts() {
            if let Some(&prev) = window.last() {
                if p > self.next_bound(Some(prev), usize::MAX) {
                    return false;
                }
            }
            if !self.admits(&window, ones, p) {
                return false;
            }
            if p == 1 {
                ones += 1;
            }
            window.push(p);
            if window.len() > w {
                window.remove(0);
            }
        }
        true
    }
}

impl fmt::Display for PartitionPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionPredicate::AgC { k, i } => write!(f, "ag-c {k} {i}"),
            PartitionPredicate::AgD { k, i } => write!(f, "ag-d {k} {i}"),
            PartitionPredicate::CapC { a } => write!(f, "cap-c {a}"),
            PartitionPredicate::CapD { a } => write!(f, "cap-d {a}"),
            PartitionPredicate::Residues { m, residues, distinct } => {
                let list: Vec<String> = residues.iter().map(usize::to_string).collect();
                write!(f, "residues {m} {}", list.join(","))?;
                if *distinct {
                    f.write_str(" --distinct")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for PartitionPredicate {
    type Err = Error;

    /// Accepts `ag-c k i`, `ag-d k i`, `cap-c a`, `cap-d a` and
    /// `residues m s1,s2,... [--distinct]`, with spaces or commas as separators.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let bad = || Error::InvalidPredicate(format!("cannot parse predicate `{s}`"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let pred = match tokens.as_slice() {
            ["ag-c", k, i] => PartitionPredicate::AgC { k: num(k)?, i: num(i)? },
            ["ag-d", k, i] => PartitionPredicate::AgD { k: num(k)?, i: num(i)? },
            ["cap-c", a] => PartitionPredicate::CapC { a: num(a)? },
            ["cap-d", a] => PartitionPredicate::CapD { a: num(a)? },
            ["residues", m, rest @ ..] => {
                let mut distinct = false;
                let mut residues = Vec::new();
                for t in rest {
                    match *t {
                        "--distinct" | "distinct" => distinct = true,
                        t => residues.push(num(t)?),
                    }
                }
                if residues.is_empty() {
                    return Err(bad());
                }
                PartitionPredicate::Residues {
                    m: num(m)?,
                    residues,
                    distinct,
                }
            }
            _ => return Err(bad()),
        };
        pred.validate()?;
        Ok(pred)
    }
}

type Key = (usize, Vec<usize>, usize);

struct Counter<'a> {
    pred: &'a PartitionPredicate,
    memo: HashMap<Key, BigUint>,
}

impl Counter<'_> {
    fn count(&mut self, remaining: usize, window: &[usize], ones: usize) -> BigUint {
        if remaining == 0 {
            return BigUint::one();
        }
        let key = (remaining, window.to_vec(), ones);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let top = self.pred.next_bound(window.last().copied(), remaining);
        let mut next_window = Vec::with_capacity(self.pred.window() + 1);
        for p in (1..=top).rev() {
            if !self.pred.admits(window, ones, p) {
                continue;
            }
            next_window.clear();
            next_window.extend_from_slice(window);
            next_window.push(p);
            if next_window.len() > self.pred.window() {
                next_window.remove(0);
            }
            let w = next_window.clone();
            total += self.count(remaining - p, &w, ones + usize::from(p == 1));
        }
        self.memo.insert(key, total.clone());
        total
    }
}

struct LengthCounter<'a> {
    pred: &'a PartitionPredicate,
    max_len: usize,
    memo: HashMap<Key, Vec<BigUint>>,
}

impl LengthCounter<'_> {
    /// Counts completions by number of parts, `0..=max_len`.
    fn count(&mut self, remaining: usize, window: &[usize], ones: usize) -> Vec<BigUint> {
        let mut out = vec![BigUint::zero(); self.max_len + 1];
        if remaining == 0 {
            out[0] = BigUint::one();
            return out;
        }
        let key = (remaining, window.to_vec(), ones);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let top = self.pred.next_bound(window.last().copied(), remaining);
        for p in (1..=top).rev() {
            if !self.pred.admits(window, ones, p) {
                continue;
            }
            let mut w = window.to_vec();
            w.push(p);
            if w.len() > self.pred.window() {
                w.remove(0);
            }
            let sub = self.count(remaining - p, &w, ones + usize::from(p == 1));
            for len in 1..=self.max_len {
                out[len] += &sub[len - 1];
            }
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// Number of partitions of `n` satisfying `pred`.
pub fn count(n: usize, pred: &PartitionPredicate) -> BigUint {
    Counter {
        pred,
        memo: HashMap::new(),
    }
    .count(n, &[], 0)
}

/// `sum_{n <= order} count(n, pred) q^n`.
pub fn gf(pred: &PartitionPredicate, order: usize) -> TruncatedQSeries {
    let mut counter = Counter {
        pred,
        memo: HashMap::new(),
    };
    let coeffs = (0..=order).map(|n| BigInt::from(counter.count(n, &[], 0))).collect();
    TruncatedQSeries::from_coeffs(coeffs)
}

/// `sum_λ x^{ℓ(λ)} q^{|λ|}` over partitions satisfying `pred`, truncated in both variables.
pub fn gf_by_length(pred: &PartitionPredicate, x_degree: usize, order: usize) -> BivariateSeries {
    let mut counter = LengthCounter {
        pred,
        max_len: x_degree,
        memo: HashMap::new(),
    };
    let mut rows = vec![vec![BigInt::zero(); order + 1]; x_degree + 1];
    for n in 0..=order {
        for (len, c) in counter.count(n, &[], 0).into_iter().enumerate() {
            rows[len][n] = BigInt::from(c);
        }
    }
    BivariateSeries::from_rows(rows.into_iter().map(TruncatedQSeries::from_coeffs).collect())
}

/// `f_a(x, q)`: Capparelli partitions counted by size and number of parts.
pub fn capparelli_gf_bivariate(a: usize, x_degree: usize, order: usize) -> Result<BivariateSeries> {
    let pred = PartitionPredicate::CapC { a };
    pred.validate()?;
    Ok(gf_by_length(&pred, x_degree, order))
}

/// Every partition of `n` satisfying `pred`, in reverse lexicographic order.
pub fn enumerate(n: usize, pred: &PartitionPredicate) -> Vec<Partition> {
    fn go(
        pred: &PartitionPredicate,
        remaining: usize,
        window: &[usize],
        ones: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = pred.next_bound(window.last().copied(), remaining);
        for p in (1..=top).rev() {
            if !pred.admits(window, ones, p) {
                continue;
            }
            let mut w = window.to_vec();
            w.push(p);
            if w.len() > pred.window() {
                w.remove(0);
            }
            current.push(p);
            go(pred, remaining - p, &w, ones + usize::from(p == 1), current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(pred, n, &[], 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// All partitions of n, unfiltered.
    fn all_partitions(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for q in (1..=max.min(rem)).rev() {
                cur.push(q);
                go(rem - q, q, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn empty_partition_satisfies_everything() {
        for pred in [
            PartitionPredicate::AgC { k: 3, i: 1 },
            PartitionPredicate::AgD { k: 2, i: 2 },
            PartitionPredicate::CapC { a: 1 },
            PartitionPredicate::CapD { a: 2 },
            PartitionPredicate::Residues { m: 2, residues: vec![1], distinct: true },
        ] {
            assert_eq!(count(0, &pred), BigUint::one());
        }
    }

    #[test]
    fn capparelli_six() {
        assert_eq!(enumerate(6, &PartitionPredicate::CapC { a: 1 }), vec![p(&[6]), p(&[4, 2])]);
        assert_eq!(enumerate(6, &PartitionPredicate::CapD { a: 1 }), vec![p(&[6]), p(&[4, 2])]);
        assert_eq!(count(6, &PartitionPredicate::CapC { a: 1 }), 2u32.into());
    }

    #[test]
    fn rogers_ramanujan_d_side() {
        let pred = PartitionPredicate::AgD { k: 2, i: 2 };
        assert_eq!(enumerate(4, &pred), vec![p(&[4]), p(&[1, 1, 1, 1])]);
        assert_eq!(gf(&pred, 4), TruncatedQSeries::from_i64s(&[1, 1, 1, 1, 2]));
    }

    #[test]
    fn odd_parts() {
        let pred = PartitionPredicate::Residues { m: 2, residues: vec![1], distinct: false };
        assert_eq!(gf(&pred, 6), TruncatedQSeries::from_i64s(&[1, 1, 1, 2, 2, 3, 4]));
    }

    #[test]
    fn memoized_enumeration_agrees_with_filtering_all_partitions() {
        let preds = [
            PartitionPredicate::AgC { k: 2, i: 1 },
            PartitionPredicate::AgC { k: 3, i: 2 },
            PartitionPredicate::AgC { k: 4, i: 4 },
            PartitionPredicate::AgD { k: 3, i: 1 },
            PartitionPredicate::CapC { a: 1 },
            PartitionPredicate::CapC { a: 2 },
            PartitionPredicate::CapD { a: 2 },
            PartitionPredicate::Residues { m: 5, residues: vec![1, 4], distinct: true },
        ];
        for pred in &preds {
            for n in 0..=18 {
                let filtered: Vec<Partition> = all_partitions(n).into_iter().filter(|x| pred.holds(x)).collect();
                assert_eq!(enumerate(n, pred), filtered, "{pred} n={n}");
                assert_eq!(count(n, pred), BigUint::from(filtered.len()), "{pred} n={n}");
            }
        }
    }

    #[test]
    fn holds_checks_conditions() {
        let c = PartitionPredicate::CapC { a: 2 };
        assert!(c.holds(&p(&[7, 5])));
        assert!(!c.holds(&p(&[6, 4])));
        assert!(c.holds(&p(&[9, 5, 1])));
        assert!(!c.holds(&p(&[5, 2])));
        let ag = PartitionPredicate::AgC { k: 3, i: 2 };
        assert!(ag.holds(&p(&[3, 3, 1])));
        assert!(!ag.holds(&p(&[3, 2, 2])));
        assert!(!ag.holds(&p(&[4, 1, 1])));
    }

    #[test]
    fn length_counts_sum_to_counts() {
        let pred = PartitionPredicate::CapC { a: 2 };
        let bi = gf_by_length(&pred, 10, 40);
        assert_eq!(bi.sum_rows(), gf(&pred, 40));
        assert_eq!(*bi.row(0), TruncatedQSeries::one(40));
    }

    #[test]
    fn parse_predicates() {
        assert_eq!("cap-c,1".parse::<PartitionPredicate>().unwrap(), PartitionPredicate::CapC { a: 1 });
        assert_eq!("ag-d 3 2".parse::<PartitionPredicate>().unwrap(), PartitionPredicate::AgD { k: 3, i: 2 });
        assert_eq!(
            "residues 6 1,5 --distinct".parse::<PartitionPredicate>().unwrap(),
            PartitionPredicate::Residues { m: 6, residues: vec![1, 5], distinct: true }
        );
        assert_eq!(
            "residues,5,1,4".parse::<PartitionPredicate>().unwrap(),
            PartitionPredicate::Residues { m: 5, residues: vec![1, 4], distinct: false }
        );
        assert!("cap-c 3".parse::<PartitionPredicate>().is_err());
        assert!("ag-c 2 3".parse::<PartitionPredicate>().is_err());
        assert!("bogus".parse::<PartitionPredicate>().is_err());
        let round = PartitionPredicate::Residues { m: 6, residues: vec![1, 5], distinct: true };
        assert_eq!(round.to_string().parse::<PartitionPredicate>().unwrap(), round);
    }
}
