//! Exact computation of Stanley's partition function `t(n)`, its complement
//! `u(n) = p(n) - t(n)` and the signed count `f(n) = t(n) - u(n)`, together
//! with a harness that checks their generating functions, congruences and
//! hook-length characterizations against brute-force enumeration.

pub mod cache;
pub mod cli;
pub mod export;
pub mod partitions;
pub mod series;
pub mod stanley;
pub mod verify;

pub use partitions::{Cell, Partition, PartitionStats};
pub use series::{Factor, ProductSpec, Sign, ThetaSpec, TruncatedSeries};
pub use stanley::{Stat, StanleyTable};
pub use verify::VerificationReport;
