//! The partition functions p, t, u and f, each available from brute-force
//! enumeration and from generating functions.
//!
//! * `t(n)` counts partitions with `O(λ) ≡ O(λ') (mod 4)`.
//! * `u(n) = p(n) - t(n)`.
//! * `f(n) = t(n) - u(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{is_t_type_parts, Partitions};
use crate::series::{eta_quotient, expand_product, Factor, ProductSpec, SeriesError, TruncatedSeries};

/// Default truncation order for series computations.
pub const DEFAULT_ORDER: usize = 200;
/// Default bound for exhaustive hook and corner checks.
pub const DEFAULT_ENUM_BOUND: usize = 25;
/// Default bound for series-vs-enumeration cross-checks.
pub const DEFAULT_ORACLE_BOUND: usize = 60;

/// `(q^2)^2 (q^16)^5 / ((q)(q^4)^5 (q^32)^2)`, the eta-quotient for `t(n)`.
pub const T_ETA_QUOTIENT: [(usize, i64); 5] = [(2, 2), (16, 5), (1, -1), (4, -5), (32, -2)];
/// `(q^2)^2 (q^8)^2 (q^32)^2 / ((q)(q^4)^5 (q^16))`; `u` is `2q^2` times this.
pub const U_ETA_QUOTIENT: [(usize, i64); 6] = [(2, 2), (8, 2), (32, 2), (1, -1), (4, -5), (16, -1)];
/// `V(q) = (q^2)^2 (q^8)^2 / ((q)^5 (q^4))`.
pub const V_ETA_QUOTIENT: [(usize, i64); 4] = [(2, 2), (8, 2), (1, -5), (4, -1)];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StanleyError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("order {0} is too small; the u(n) series needs order >= 2")]
    OrderTooSmall(usize),
    #[error("p(n) + f(n) is odd at n = {index}; t(n) = (p(n) + f(n))/2 does not hold")]
    OddSum { index: usize },
    #[error("progression residue {0} is not in 0..=3")]
    BadResidue(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    P,
    T,
    U,
    F,
}

impl Stat {
    pub const ALL: [Stat; 4] = [Stat::P, Stat::T, Stat::U, Stat::F];

    pub fn name(self) -> &'static str {
        match self {
            Stat::P => "p",
            Stat::T => "t",
            Stat::U => "u",
            Stat::F => "f",
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "p" => Ok(Stat::P),
            "t" => Ok(Stat::T),
            "u" => Ok(Stat::U),
            "f" => Ok(Stat::F),
            other => Err(format!("unknown statistic `{other}` (expected p, t, u or f)")),
        }
    }
}

fn product(factors: &[Factor], order: usize) -> TruncatedSeries {
    let spec: ProductSpec = factors.iter().copied().collect();
    expand_product(&spec, order).expect("product factors are statically valid")
}

/// `1/(q;q)_inf`
pub fn p_series(order: usize) -> TruncatedSeries {
    product(&[Factor::eta(1).pow(-1)], order)
}

/// `prod (1 + q^(2i-1)) / ((1 - q^(4i)) (1 + q^(4i-2))^2)`
pub fn f_series(order: usize) -> TruncatedSeries {
    product(
        &[
            Factor::neg_poch(1, 2),
            Factor::eta(4).pow(-1),
            Factor::neg_poch(2, 4).pow(-2),
        ],
        order,
    )
}

/// `t(n) = (p(n) + f(n)) / 2`, halved exactly.
pub fn t_series_eq1(order: usize) -> Result<TruncatedSeries, StanleyError> {
    (p_series(order) + f_series(order))
        .halve_exact()
        .map_err(|e| match e {
            SeriesError::OddCoefficient { index, .. } => StanleyError::OddSum { index },
            other => other.into(),
        })
}

/// Eta-quotient for `sum t(n) q^n`.
pub fn t_series_andrews(order: usize) -> TruncatedSeries {
    eta_quotient(&T_ETA_QUOTIENT, order).expect("eta factors have unit constant term")
}

/// `2q^2 (q^2;q^2)^2 (q^8;q^8)^2 (q^32;q^32)^2 / ((q;q)(q^4;q^4)^5 (q^16;q^16))`
pub fn u_series(order: usize) -> Result<TruncatedSeries, StanleyError> {
    if order < 2 {
        return Err(StanleyError::OrderTooSmall(order));
    }
    let body = eta_quotient(&U_ETA_QUOTIENT, order)?;
    Ok(body.scale(&BigInt::from(2)).shift(2))
}

pub fn v_series(order: usize) -> TruncatedSeries {
    eta_quotient(&V_ETA_QUOTIENT, order).expect("eta factors have unit constant term")
}

/// Generating function of `u(4n + i)`:
/// `2 q^s (q^16;q^16)(-q^a;q^16)(-q^b;q^16) V(q)` with
/// `(s, a, b)` = (2, 1, 15), (1, 3, 13), (0, 7, 9), (0, 5, 11) for i = 0..3.
pub fn u_progression_series(i: usize, order: usize) -> Result<TruncatedSeries, StanleyError> {
    let (shift, a, b) = match i {
        0 => (2, 1, 15),
        1 => (1, 3, 13),
        2 => (0, 7, 9),
        3 => (0, 5, 11),
        other => return Err(StanleyError::BadResidue(other)),
    };
    let theta = product(
        &[Factor::eta(16), Factor::neg_poch(a, 16), Factor::neg_poch(b, 16)],
        order,
    );
    Ok((theta * v_series(order)).scale(&BigInt::from(2)).shift(shift))
}

pub fn series_for(stat: Stat, order: usize) -> Result<TruncatedSeries, StanleyError> {
    match stat {
        Stat::P => Ok(p_series(order)),
        Stat::T => Ok(t_series_andrews(order)),
        Stat::U => u_series(order.max(2)).and_then(|s| Ok(s.truncate(order)?)),
        Stat::F => Ok(f_series(order)),
    }
}

/// Partition counts of `n` split by type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TypeCounts {
    pub total: u64,
    pub t_type: u64,
}

impl TypeCounts {
    pub fn u_type(&self) -> u64 {
        self.total - self.t_type
    }
}

/// Streams every partition of `n` once.
pub fn count_types(n: usize) -> TypeCounts {
    let mut counts = TypeCounts::default();
    let mut it = Partitions::new(n);
    while let Some(parts) = it.next_parts() {
        counts.total += 1;
        if is_t_type_parts(parts) {
            counts.t_type += 1;
        }
    }
    counts
}

pub fn t_bruteforce(n: usize) -> BigInt {
    BigInt::from(count_types(n).t_type)
}

pub fn u_bruteforce(n: usize) -> BigInt {
    BigInt::from(count_types(n).u_type())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Enumeration,
    GeneratingFunction,
}

/// `p, t, u, f` for `0..=max_n` together with where the numbers came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyTable {
    pub max_n: usize,
    pub p: Vec<BigInt>,
    pub t: Vec<BigInt>,
    pub u: Vec<BigInt>,
    pub f: Vec<BigInt>,
    pub source: Source,
}

impl StanleyTable {
    /// Brute force over every partition of every `n <= max_n`, fanned out
    /// across threads by `n`.
    pub fn from_enumeration(max_n: usize) -> Self {
        let counts: Vec<TypeCounts> = (0..=max_n).into_par_iter().map(count_types).collect();
        let p = counts.iter().map(|c| BigInt::from(c.total)).collect();
        let t: Vec<BigInt> = counts.iter().map(|c| BigInt::from(c.t_type)).collect();
        let u: Vec<BigInt> = counts.iter().map(|c| BigInt::from(c.u_type())).collect();
        let f = t.iter().zip(&u).map(|(a, b)| a - b).collect();
        Self {
            max_n,
            p,
            t,
            u,
            f,
            source: Source::Enumeration,
        }
    }

    /// Each column from its own product formula; `t` from the eta-quotient.
    pub fn from_series(max_n: usize) -> Self {
        let order = max_n.max(2);
        let column = |s: TruncatedSeries| s.into_coeffs().into_iter().take(max_n + 1).collect();
        Self {
            max_n,
            p: column(p_series(order)),
            t: column(t_series_andrews(order)),
            u: column(u_series(order).expect("order >= 2")),
            f: column(f_series(order)),
            source: Source::GeneratingFunction,
        }
    }

    pub fn column(&self, stat: Stat) -> &[BigInt] {
        match stat {
            Stat::P => &self.p,
            Stat::T => &self.t,
            Stat::U => &self.u,
            Stat::F => &self.f,
        }
    }

    /// First `n` at which `p = t + u` or `f = t - u` fails.
    pub fn first_inconsistency(&self) -> Option<usize> {
        (0..=self.max_n).find(|&n| {
            self.p[n] != &self.t[n] + &self.u[n] || self.f[n] != &self.t[n] - &self.u[n]
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn p_series_values() {
        assert_eq!(p_series(6).coeffs(), ints(&[1, 1, 2, 3, 5, 7, 11]).as_slice());
        assert_eq!(p_series(10).coeff(10), &BigInt::from(42));
    }

    #[test]
    fn brute_force_small() {
        assert_eq!(t_bruteforce(0), BigInt::from(1));
        assert_eq!(t_bruteforce(2), BigInt::from(0));
        assert_eq!(t_bruteforce(4), BigInt::from(5));
        assert_eq!(u_bruteforce(2), BigInt::from(2));
        assert_eq!(u_bruteforce(3), BigInt::from(2));
        assert_eq!(u_bruteforce(4), BigInt::from(0));
    }

    #[test]
    fn f_series_values() {
        assert_eq!(f_series(4).coeffs(), ints(&[1, 1, -2, -1, 5]).as_slice());
    }

    #[test]
    fn t_series_values() {
        let eq1 = t_series_eq1(9).unwrap();
        let andrews = t_series_andrews(9);
        assert_eq!(eq1, andrews);
        assert_eq!(&andrews.coeffs()[..5], ints(&[1, 1, 0, 1, 5]).as_slice());
        assert_eq!(andrews.coeff(9) % 5, BigInt::from(0));
    }

    #[test]
    fn u_series_values() {
        let u = u_series(30).unwrap();
        assert_eq!(&u.coeffs()[..5], ints(&[0, 0, 2, 2, 0]).as_slice());
        assert!(u.coeffs().iter().all(|c| c % 2 == BigInt::from(0)));
        assert_eq!(u_series(1), Err(StanleyError::OrderTooSmall(1)));
    }

    #[test]
    fn progression_constant_terms() {
        assert_eq!(u_progression_series(2, 5).unwrap().coeff(0), &BigInt::from(2));
        let p0 = u_progression_series(0, 5).unwrap();
        assert_eq!(p0.coeff(0), &BigInt::from(0));
        assert_eq!(p0.coeff(1), &BigInt::from(0));
        assert_eq!(u_progression_series(4, 5), Err(StanleyError::BadResidue(4)));
    }

    #[test]
    fn progression_of_u_at_residue_two() {
        // u(2), u(6), u(10), ... by enumeration
        let got = u_series(22).unwrap().extract_progression(2, 4).unwrap();
        assert_eq!(got.coeffs(), ints(&[2, 10, 36, 110, 300, 752]).as_slice());
        let brute: Vec<BigInt> = (0..6).map(|k| u_bruteforce(4 * k + 2)).collect();
        assert_eq!(got.coeffs(), brute.as_slice());
    }

    #[test]
    fn tables_are_consistent() {
        let e = StanleyTable::from_enumeration(20);
        let s = StanleyTable::from_series(20);
        assert_eq!(e.first_inconsistency(), None);
        assert_eq!(s.first_inconsistency(), None);
        for stat in Stat::ALL {
            assert_eq!(e.column(stat), s.column(stat), "{stat}");
        }
        assert_eq!(StanleyTable::from_series(0).p, ints(&[1]));
    }

    #[test]
    fn series_for_small_orders() {
        assert_eq!(series_for(Stat::U, 0).unwrap().coeffs(), ints(&[0]).as_slice());
        assert_eq!(series_for(Stat::P, 0).unwrap().coeffs(), ints(&[1]).as_slice());
    }

    #[test]
    fn stat_parsing() {
        assert_eq!("t".parse::<Stat>(), Ok(Stat::T));
        assert!("x".parse::<Stat>().is_err());
    }
}
