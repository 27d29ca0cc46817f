//! Exact rational scalars and the handful of integer helpers used everywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::Error;

/// The scalar field: arbitrary-precision rationals.
pub type Q = BigRational;

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_ratio(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Renders `p/q` with the denominator omitted when it is 1.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, or `p/q`. Whitespace is not accepted.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = den.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Q::from_integer(n))
    }
}

/// Binomial coefficient with an arbitrary integer upper argument:
/// `C(n, k) = n (n-1) ... (n-k+1) / k!`. Always an integer.
pub fn binomial(n: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(n) - BigInt::from(t);
    }
    let mut den = BigInt::one();
    for t in 1..=k {
        den *= BigInt::from(t);
    }
    num / den
}

/// `(-1)^n` for arbitrary integer `n`.
pub fn neg_one_pow(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `x^n` for integer `n`; errors on `0^{negative}`.
pub fn q_pow(x: &Q, n: i64) -> Result<Q, Error> {
    if x.is_zero() && n < 0 {
        return Err(Error::Domain("negative power of zero".into()));
    }
    let mut out = q_one();
    let base = if n < 0 { x.recip() } else { x.clone() };
    for _ in 0..n.unsigned_abs() {
        out *= &base;
    }
    Ok(out)
}
