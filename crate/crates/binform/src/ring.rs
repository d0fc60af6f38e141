//! Exact scalar arithmetic.
//!
//! # Key operations
//! - [`Rational`]: arbitrary-precision rational numbers (never floating point).
//! - [`factorial`] / [`binomial`]: memoized big-integer combinatorics.
//! - [`parse_rational`] / [`format_rational`]: the `"p/q"` wire format
//!   (plain `"p"` when the denominator is 1).
//! - [`Coeff`]: the coefficient-ring abstraction that lets binary forms carry
//!   either rational numbers or multivariate polynomials.
//!
//! # Design notes
//! Factorials are cached in a growable table behind a mutex so that the
//! recoupling formulas (which evaluate thousands of factorial ratios) never
//! recompute a product. All public values are fully reduced rationals.

use std::sync::Mutex;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar.
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den == 0` (programming error, not input).
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rational with zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse the `"p/q"` (or `"p"`) wire format into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    let parse_int = |part: &str| -> Result<BigInt> {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer `{part}` in rational `{s}`")))
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(t)?)),
        Some((num, den)) => {
            if den.contains('/') {
                return Err(Error::Parse(format!("too many `/` in rational `{s}`")));
            }
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in rational `{s}`")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Render a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

static FACTORIALS: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// `n!` as a big integer, memoized in a growable shared table.
pub fn factorial(n: u64) -> BigInt {
    let mut table = FACTORIALS.lock().expect("factorial table poisoned");
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while (table.len() as u64) <= n {
        let next = table.last().expect("nonempty") * BigInt::from(table.len() as u64);
        table.push(next);
    }
    table[n as usize].clone()
}

/// `n!` when `n >= 0`, `None` for negative arguments.
///
/// The recoupling sums are quantified over "all integers for which the
/// factorial arguments are nonnegative"; this helper encodes that guard.
pub fn factorial_opt(n: i64) -> Option<BigInt> {
    if n < 0 {
        None
    } else {
        Some(factorial(n as u64))
    }
}

/// `n!` as a rational (convenience for building coefficient ratios).
pub fn factorial_rat(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Binomial coefficient `C(n, k)` (0 when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Binomial coefficient as a rational.
pub fn binomial_rat(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// Coefficient ring for binary forms.
///
/// Implemented by [`Rational`] (numeric forms) and by
/// [`MultiPoly`](crate::poly::MultiPoly) (forms whose coefficients are
/// polynomials in symbolic parameters). All operations are exact.
pub trait Coeff:
    Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static + Zero + One
{
    /// `self + rhs`.
    fn add_ref(&self, rhs: &Self) -> Self;
    /// `self - rhs`.
    fn sub_ref(&self, rhs: &Self) -> Self;
    /// `self * rhs`.
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// `-self`.
    fn neg_ref(&self) -> Self;
    /// `self * k` for a rational scalar `k`.
    fn scale(&self, k: &Rational) -> Self;
    /// Embed a rational scalar into the ring.
    fn from_rational(k: &Rational) -> Self;
}

impl Coeff for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Rational) -> Self {
        self * k
    }
    fn from_rational(k: &Rational) -> Self {
        k.clone()
    }
}

/// `x^k` in an arbitrary coefficient ring (k = 0 gives 1).
pub fn ring_pow<R: Coeff>(x: &R, k: usize) -> R {
    let mut acc = R::one();
    for _ in 0..k {
        acc = acc.mul_ref(x);
    }
    acc
}

/// True when the rational is a perfect square of another rational; if so,
/// returns the nonnegative square root.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer().sqrt();
    let den = x.denom().sqrt();
    if &(&num * &num) == x.numer() && &(&den * &den) == x.denom() {
        Some(Rational::new(num, den))
    } else {
        None
    }
}
