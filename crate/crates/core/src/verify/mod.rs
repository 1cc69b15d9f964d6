//! Identity catalog and coefficient-by-coefficient verification.

mod capparelli;
mod catalog;
mod lemmas;

pub use capparelli::{capparelli_product, check_qdiff_capparelli, level3_triangle, qdiff_rhs};
pub use catalog::{catalog, find_entry, linear_mutations};
pub use lemmas::{check_lemma, check_wz, wz_f, wz_g};

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bivariate::{bi_first_mismatch, bi_pochhammer, BivariateSeries};
use crate::error::{Error, Result};
use crate::multisum::{MultisumSpec, SlaterSum};
use crate::partitions::{self, PartitionPredicate};
use crate::products::ProductSpec;
use crate::series::{first_mismatch, Count, Sign, TruncatedQSeries};

pub const DEFAULT_THEOREM_ORDER: usize = 200;
pub const DEFAULT_CONJECTURE_ORDER: usize = 400;
pub const DEFAULT_X_DEGREE: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatusClaim {
    Theorem,
    Conjecture,
}

/// One factor `(sign x^x_power q^q_exponent; q^step)_count^{±1}` of a product in two variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiFactor {
    pub sign: Sign,
    pub x_power: usize,
    pub q_exponent: usize,
    pub step: usize,
    pub count: Count,
    pub inverted: bool,
}

/// A side of an identity.
#[derive(Debug, Clone, PartialEq)]
pub enum Side {
    Multisum(MultisumSpec),
    Slater(SlaterSum),
    Product(ProductSpec),
    Partitions(PartitionPredicate),
    BivariateMultisum(MultisumSpec),
    PartitionsByLength(PartitionPredicate),
    BivariateProduct(Vec<BiFactor>),
}

/// A side evaluated to a concrete series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Uni(TruncatedQSeries),
    Bi(BivariateSeries),
}

impl Side {
    pub fn is_bivariate(&self) -> bool {
        matches!(
            self,
            Side::BivariateMultisum(_) | Side::PartitionsByLength(_) | Side::BivariateProduct(_)
        )
    }

    /// Evaluates to `q^order` (and `x^x_degree` for bivariate sides), with the number of lattice terms summed.
    pub fn eval(&self, order: usize, x_degree: usize) -> Result<(Value, u64)> {
        Ok(match self {
            Side::Multisum(spec) => {
                let e = spec.eval_counted(order)?;
                (Value::Uni(e.value), e.term_count)
            }
            Side::Slater(sum) => {
                let e = sum.eval_counted(order);
                (Value::Uni(e.value), e.term_count)
            }
            Side::Product(p) => (Value::Uni(p.eval(order)?), 0),
            Side::Partitions(pred) => (Value::Uni(partitions::gf(pred, order)), 0),
            Side::BivariateMultisum(spec) => {
                let e = spec.eval_bivariate_counted(x_degree, order)?;
                (Value::Bi(e.value), e.term_count)
            }
            Side::PartitionsByLength(pred) => (Value::Bi(partitions::gf_by_length(pred, x_degree, order)), 0),
            Side::BivariateProduct(factors) => (Value::Bi(eval_bi_product(factors, x_degree, order)?), 0),
        })
    }
}

pub fn eval_bi_product(factors: &[BiFactor], x_degree: usize, order: usize) -> Result<BivariateSeries> {
    let mut num = BivariateSeries::one(x_degree, order);
    let mut den = BivariateSeries::one(x_degree, order);
    for f in factors {
        let p = bi_pochhammer(f.sign, f.x_power, f.q_exponent, f.step, f.count, x_degree, order)?;
        if f.inverted {
            den = den.checked_mul(&p)?;
        } else {
            num = num.checked_mul(&p)?;
        }
    }
    num.checked_mul(&den.invert()?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub lhs: Side,
    pub rhs: Side,
    pub status_claim: StatusClaim,
    pub reference: String,
}

impl CatalogEntry {
    pub fn is_bivariate(&self) -> bool {
        self.lhs.is_bivariate()
    }

    pub fn default_order(&self) -> usize {
        match self.status_claim {
            StatusClaim::Theorem => DEFAULT_THEOREM_ORDER,
            StatusClaim::Conjecture => DEFAULT_CONJECTURE_ORDER,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Verified,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub exponent: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_exponent: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub name: String,
    pub status_claim: StatusClaim,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_degree: Option<usize>,
    pub outcome: Outcome,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: u64,
    pub term_count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerifyReport {
    pub fn verified(&self) -> bool {
        self.outcome == Outcome::Verified
    }

    pub(crate) fn from_mismatch(
        name: impl Into<String>,
        status_claim: StatusClaim,
        order: usize,
        x_degree: Option<usize>,
        first_mismatch: Option<Mismatch>,
        started: Instant,
        term_count: u64,
    ) -> Self {
        VerifyReport {
            name: name.into(),
            status_claim,
            order,
            x_degree,
            outcome: if first_mismatch.is_none() {
                Outcome::Verified
            } else {
                Outcome::Mismatch
            },
            first_mismatch,
            elapsed_ms: started.elapsed().as_millis() as u64,
            term_count,
            note: None,
        }
    }
}

/// A whole verification run, serialized as the JSON report document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub order: usize,
    pub entries: Vec<VerifyReport>,
}

pub(crate) fn compare_values(a: &Value, b: &Value) -> Result<Option<Mismatch>> {
    match (a, b) {
        (Value::Uni(x), Value::Uni(y)) => Ok(first_mismatch(x, y)?.map(|n| Mismatch {
            exponent: n,
            x_exponent: None,
            lhs: x.coeff(n).to_string(),
            rhs: y.coeff(n).to_string(),
        })),
        (Value::Bi(x), Value::Bi(y)) => Ok(bi_first_mismatch(x, y)?.map(|(m, n)| Mismatch {
            exponent: n,
            x_exponent: Some(m),
            lhs: x.coeff(m, n).to_string(),
            rhs: y.coeff(m, n).to_string(),
        })),
        _ => Err(Error::ShapeMismatch("comparison".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// `None` uses the default order for the entry's status claim.
    pub order: Option<usize>,
    pub x_degree: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: None,
            x_degree: DEFAULT_X_DEGREE,
        }
    }
}

/// Evaluates both sides of `entry` and reports the first differing coefficient.
pub fn verify(entry: &CatalogEntry, opts: VerifyOptions) -> Result<VerifyReport> {
    let started = Instant::now();
    let order = opts.order.unwrap_or_else(|| entry.default_order());
    if entry.lhs.is_bivariate() != entry.rhs.is_bivariate() {
        return Err(Error::ShapeMismatch(entry.name.clone()));
    }
    let (lhs, lt) = entry.lhs.eval(order, opts.x_degree)?;
    let (rhs, rt) = entry.rhs.eval(order, opts.x_degree)?;
    let mismatch = compare_values(&lhs, &rhs)?;
    Ok(VerifyReport::from_mismatch(
        entry.name.clone(),
        entry.status_claim,
        order,
        entry.is_bivariate().then_some(opts.x_degree),
        mismatch,
        started,
        lt + rt,
    ))
}

/// Verifies a catalog entry by name at the given order.
pub fn verify_entry(name: &str, order: usize) -> Result<VerifyReport> {
    verify(
        &find_entry(name)?,
        VerifyOptions {
            order: Some(order),
            ..VerifyOptions::default()
        },
    )
}

/// Which catalog entries a run covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    All,
    Theorems,
    Conjectures,
    Glob(String),
    Names(Vec<String>),
}

impl Filter {
    pub fn select(&self) -> Result<Vec<CatalogEntry>> {
        let all = catalog();
        Ok(match self {
            Filter::All => all,
            Filter::Theorems => all.into_iter().filter(|e| e.status_claim == StatusClaim::Theorem).collect(),
            Filter::Conjectures => all
                .into_iter()
                .filter(|e| e.status_claim == StatusClaim::Conjecture)
                .collect(),
            Filter::Glob(pattern) => {
                let pat = glob::Pattern::new(pattern).map_err(|e| Error::Parse(format!("bad glob `{pattern}`: {e}")))?;
                all.into_iter().filter(|e| pat.matches(&e.name)).collect()
            }
            Filter::Names(names) => {
                let mut out = names.iter().map(|n| find_entry(n)).collect::<Result<Vec<_>>>()?;
                out.sort_by(|a, b| a.name.cmp(&b.name));
                out.dedup_by(|a, b| a.name == b.name);
                out
            }
        })
    }
}

/// Verifies every selected entry on a pool of `parallelism` workers; the
/// reports are sorted by name.
pub fn verify_all(filter: &Filter, opts: VerifyOptions, parallelism: usize) -> Result<Vec<VerifyReport>> {
    let entries = filter.select()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let mut reports = pool.install(|| {
        entries
            .par_iter()
            .map(|e| verify(e, opts))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}
