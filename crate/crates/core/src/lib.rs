//! Exact verification of q-series identities of Rogers-Ramanujan type.
//!
//! Every value is a power series in `q` (optionally a polynomial in `x` over
//! such series) with arbitrary-precision integer coefficients, truncated at a
//! fixed order. Identities are checked coefficient by coefficient.

pub mod bivariate;
pub mod cli;
pub mod error;
pub mod multisum;
pub mod partitions;
pub mod products;
pub mod series;
pub mod verify;

pub use bivariate::BivariateSeries;
pub use error::{Error, Result};
pub use multisum::{MultisumData, MultisumSpec, SlaterSum};
pub use partitions::{Partition, PartitionPredicate};
pub use products::{ProductFactor, ProductSpec};
pub use series::{Count, Monomial, Sign, TruncatedQSeries};
pub use verify::{CatalogEntry, VerifyReport};
