//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0 ..= q^N`. Binary operations on series of different orders produce a
//! result at the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Largest order a dilation may produce unless a caller asks for more.
pub const DEFAULT_MAX_ORDER: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("monomial q^{exp} is not representable at order {order}")]
    MonomialOutOfRange { exp: usize, order: usize },
    #[error("series with constant term {constant} has no reciprocal over the integers")]
    NotInvertible { constant: BigInt },
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("product factor {index}: {reason}")]
    InvalidFactor { index: usize, reason: &'static str },
    #[error("residue {residue} is not below modulus {modulus}")]
    InvalidProgression { residue: usize, modulus: usize },
    #[error("dilation to order {requested} exceeds the maximum order {max}")]
    DilationTooLarge { requested: usize, max: usize },
    #[error("theta exponent {quadratic}n^2 + {linear}n + {constant} is {reason}")]
    InvalidTheta {
        quadratic: i64,
        linear: i64,
        constant: i64,
        reason: &'static str,
    },
    #[error("coefficient {index} is odd and cannot be halved exactly: {value}")]
    OddCoefficient { index: usize, value: BigInt },
    #[error("cannot raise a series of order {order} to order {requested}")]
    CannotExtend { order: usize, requested: usize },
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `coef * q^exp` at the given order.
    pub fn monomial(coef: impl Into<BigInt>, exp: usize, order: usize) -> Result<Self> {
        if exp > order {
            return Err(SeriesError::MonomialOutOfRange { exp, order });
        }
        let mut s = Self::zero(order);
        s.coeffs[exp] = coef.into();
        Ok(s)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor for small literal series.
    ///
    /// # Panics
    /// Panics on an empty slice.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`.
    ///
    /// # Panics
    /// Panics if `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Asking for a higher order is an
    /// error: the missing coefficients are unknown, not zero.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(SeriesError::CannotExtend {
                order: self.order(),
                requested: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Divides every coefficient by two, failing on the first odd one.
    pub fn halve_exact(&self) -> Result<Self> {
        let two = BigInt::from(2);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (index, c) in self.coeffs.iter().enumerate() {
            let (quot, rem) = c.div_rem(&two);
            if !rem.is_zero() {
                return Err(SeriesError::OddCoefficient {
                    index,
                    value: c.clone(),
                });
            }
            coeffs.push(quot);
        }
        Ok(Self { coeffs })
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.order() {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    fn min_order(a: &Self, b: &Self) -> usize {
        a.order().min(b.order())
    }

    fn add_impl(a: &Self, b: &Self) -> Self {
        let n = Self::min_order(a, b);
        Self {
            coeffs: (0..=n).map(|k| &a.coeffs[k] + &b.coeffs[k]).collect(),
        }
    }

    fn sub_impl(a: &Self, b: &Self) -> Self {
        let n = Self::min_order(a, b);
        Self {
            coeffs: (0..=n).map(|k| &a.coeffs[k] - &b.coeffs[k]).collect(),
        }
    }

    fn mul_impl(a: &Self, b: &Self) -> Self {
        let n = Self::min_order(a, b);
        let mut out = Self::zero(n);
        for (i, x) in a.coeffs[..=n].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs[..=n - i].iter().enumerate() {
                if !y.is_zero() {
                    out.coeffs[i + j] += x * y;
                }
            }
        }
        out
    }

    /// Multiplicative inverse, defined when the constant term is a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(SeriesError::NotInvertible {
                constant: c0.clone(),
            });
        }
        // r[0] = 1/c0 = c0 for c0 = +-1; r[n] = -c0 * sum_{k>=1} a[k] r[n-k]
        let n = self.order();
        let mut r = Vec::with_capacity(n + 1);
        r.push(c0.clone());
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &r[m - k];
                }
            }
            r.push(-(acc * c0));
        }
        Ok(Self { coeffs: r })
    }

    /// Integer power; negative exponents go through [`Self::reciprocal`].
    pub fn pow(&self, exponent: i64) -> Result<Self> {
        let base = if exponent < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Substitutes `q -> q^m` using [`DEFAULT_MAX_ORDER`] as the ceiling.
    pub fn dilate(&self, m: usize) -> Result<Self> {
        self.dilate_with_limit(m, DEFAULT_MAX_ORDER)
    }

    /// Substitutes `q -> q^m`. The result has order `self.order() * m`, which
    /// must not exceed `max_order`.
    ///
    /// # Panics
    /// Panics if `m == 0`.
    pub fn dilate_with_limit(&self, m: usize, max_order: usize) -> Result<Self> {
        assert!(m >= 1, "dilation factor must be positive");
        let requested = self.order().saturating_mul(m);
        if requested > max_order {
            return Err(SeriesError::DilationTooLarge {
                requested,
                max: max_order,
            });
        }
        let mut out = Self::zero(requested);
        for (k, c) in self.coeffs.iter().enumerate() {
            out.coeffs[k * m] = c.clone();
        }
        Ok(out)
    }

    /// The series `sum_n a[m n + r] q^n`.
    ///
    /// # Panics
    /// Panics if `m == 0`.
    pub fn extract_progression(&self, r: usize, m: usize) -> Result<Self> {
        assert!(m >= 1, "progression modulus must be positive");
        if r >= m || r > self.order() {
            return Err(SeriesError::InvalidProgression {
                residue: r,
                modulus: m,
            });
        }
        Ok(Self {
            coeffs: self.coeffs.iter().skip(r).step_by(m).cloned().collect(),
        })
    }

    /// Multiplies in place by `1 + sign * q^d` (d >= 1).
    fn mul_binomial_in_place(&mut self, sign: Sign, d: usize) {
        for k in (d..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            match sign {
                Sign::Plus => hi[0] += &lo[k - d],
                Sign::Minus => hi[0] -= &lo[k - d],
            }
        }
    }

    /// Divides in place by `1 + sign * q^d` (d >= 1).
    fn div_binomial_in_place(&mut self, sign: Sign, d: usize) {
        for k in d..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            match sign {
                Sign::Plus => hi[0] -= &lo[k - d],
                Sign::Minus => hi[0] += &lo[k - d],
            }
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(q^{})]", self.order() + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{k}")?,
                _ => write!(f, "{mag}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                TruncatedSeries::$imp(self, rhs)
            }
        }
        impl $trait<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                TruncatedSeries::$imp(&self, &rhs)
            }
        }
        impl $trait<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                TruncatedSeries::$imp(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One factor `prod_{i>=0} (1 + sign * q^(offset + step*i))^exponent`.
///
/// With `sign = Minus` this is the q-Pochhammer symbol `(q^offset; q^step)_inf`,
/// with `sign = Plus` it is `(-q^offset; q^step)_inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub sign: Sign,
    pub offset: usize,
    pub step: usize,
    pub exponent: i64,
}

impl Factor {
    /// `(q^offset; q^step)_inf`
    pub fn poch(offset: usize, step: usize) -> Self {
        Self {
            sign: Sign::Minus,
            offset,
            step,
            exponent: 1,
        }
    }

    /// `(-q^offset; q^step)_inf`
    pub fn neg_poch(offset: usize, step: usize) -> Self {
        Self {
            sign: Sign::Plus,
            offset,
            step,
            exponent: 1,
        }
    }

    /// `(q^a; q^a)_inf`, the building block of eta-quotients.
    pub fn eta(a: usize) -> Self {
        Self::poch(a, a)
    }

    pub fn pow(self, exponent: i64) -> Self {
        Self { exponent, ..self }
    }

    fn validate(&self, index: usize) -> Result<()> {
        let invalid = |reason| Err(SeriesError::InvalidFactor { index, reason });
        if self.step == 0 {
            return invalid("step must be positive");
        }
        if self.offset == 0 {
            match self.sign {
                Sign::Minus => return invalid("(1; q^m) vanishes identically"),
                Sign::Plus if self.exponent < 0 => {
                    return invalid("(-1; q^m) has constant term 2 and no integer reciprocal")
                }
                Sign::Plus => {}
            }
        }
        Ok(())
    }
}

/// A finite product of [`Factor`]s.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    pub factors: Vec<Factor>,
}

impl ProductSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, factor: Factor) -> Self {
        self.factors.push(factor);
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.factors
            .iter()
            .enumerate()
            .try_for_each(|(i, f)| f.validate(i))
    }
}

impl FromIterator<Factor> for ProductSpec {
    fn from_iter<T: IntoIterator<Item = Factor>>(iter: T) -> Self {
        Self {
            factors: iter.into_iter().collect(),
        }
    }
}

/// Expands a product of q-Pochhammer factors to the given order.
///
/// Each binomial `1 + s q^d` is applied in place, so negative exponents cost
/// the same as positive ones. A `(-1; q^m)` factor contributes its constant
/// term 2 times the remaining binomials.
pub fn expand_product(spec: &ProductSpec, order: usize) -> Result<TruncatedSeries> {
    spec.validate()?;
    let mut out = TruncatedSeries::one(order);
    for factor in &spec.factors {
        let mut offset = factor.offset;
        if offset == 0 {
            // (1 + 1)^e with e >= 0, guaranteed by validate
            let two_pow = BigInt::from(2).pow(factor.exponent as u32);
            out = out.scale(&two_pow);
            offset = factor.step;
        }
        let reps = factor.exponent.unsigned_abs();
        let mut d = offset;
        while d <= order {
            for _ in 0..reps {
                if factor.exponent > 0 {
                    out.mul_binomial_in_place(factor.sign, d);
                } else {
                    out.div_binomial_in_place(factor.sign, d);
                }
            }
            d += factor.step;
        }
    }
    Ok(out)
}

/// `prod (q^scale; q^scale)_inf^exponent`, built by expanding each eta factor
/// once and raising it to its power with [`TruncatedSeries::pow`].
pub fn eta_quotient(terms: &[(usize, i64)], order: usize) -> Result<TruncatedSeries> {
    let mut out = TruncatedSeries::one(order);
    for &(scale, exponent) in terms {
        let base = expand_product(&ProductSpec::new().with(Factor::eta(scale)), order)?;
        out = &out * &base.pow(exponent)?;
    }
    Ok(out)
}

/// The bilateral sum `sum_{n in Z} (+-1)^n q^(A n^2 + B n + C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaSpec {
    quadratic: i64,
    linear: i64,
    constant: i64,
    alternating: bool,
}

impl ThetaSpec {
    /// Requires `A > 0` and an exponent that is nonnegative at every integer.
    pub fn new(quadratic: i64, linear: i64, constant: i64, alternating: bool) -> Result<Self> {
        let spec = Self {
            quadratic,
            linear,
            constant,
            alternating,
        };
        let invalid = |reason| {
            Err(SeriesError::InvalidTheta {
                quadratic,
                linear,
                constant,
                reason,
            })
        };
        if quadratic <= 0 {
            return invalid("not positive definite");
        }
        // integer minimum sits at floor or ceil of the vertex -B/(2A)
        let vertex = Integer::div_floor(&(-linear), &(2 * quadratic));
        if spec.exponent_at(vertex) < 0 || spec.exponent_at(vertex + 1) < 0 {
            return invalid("negative at some integer");
        }
        Ok(spec)
    }

    pub fn quadratic(&self) -> i64 {
        self.quadratic
    }

    pub fn linear(&self) -> i64 {
        self.linear
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    pub fn alternating(&self) -> bool {
        self.alternating
    }

    fn exponent_at(&self, n: i64) -> i128 {
        let n = n as i128;
        self.quadratic as i128 * n * n + self.linear as i128 * n + self.constant as i128
    }

    /// Closed integer interval containing every `n` whose exponent is at most
    /// `order`: the real roots of `A n^2 + B n + C - order`, widened by one.
    fn index_bounds(&self, order: usize) -> (i64, i64) {
        let a = self.quadratic as f64;
        let b = self.linear as f64;
        let c = self.constant as f64 - order as f64;
        let disc = (b * b - 4.0 * a * c).max(0.0).sqrt();
        let lo = ((-b - disc) / (2.0 * a)).floor() as i64 - 1;
        let hi = ((-b + disc) / (2.0 * a)).ceil() as i64 + 1;
        (lo, hi)
    }
}

pub fn expand_theta(spec: &ThetaSpec, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let (lo, hi) = spec.index_bounds(order);
    for n in lo..=hi {
        let e = spec.exponent_at(n);
        if e < 0 || e > order as i128 {
            continue;
        }
        let slot = &mut out.coeffs[e as usize];
        if spec.alternating && n.rem_euclid(2) == 1 {
            *slot -= 1;
        } else {
            *slot += 1;
        }
    }
    out
}
