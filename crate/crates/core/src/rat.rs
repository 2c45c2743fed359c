//! Exact rational scalars.
//!
//! Every quantity in this crate is a `Rat`: an arbitrary-precision rational
//! kept in lowest terms with a positive denominator. The textual form is
//! `"p/q"`, or just `"p"` when the denominator is one; parsing accepts both
//! and re-canonicalizes, so a write/read cycle is bit-exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::CoreError;

pub type Rat = BigRational;

/// Rational from an integer pair; panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

/// Canonical text form: `"p"` or `"p/q"` with `q > 1` and the sign on `p`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"`; the result is reduced and the denominator made
/// positive. A zero denominator is rejected.
pub fn parse_rat(s: &str) -> Result<Rat, CoreError> {
    let bad = |_| CoreError::MalformedRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next().unwrap_or("").trim().parse().map_err(bad)?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(bad)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(CoreError::MalformedRational(s.to_string()));
    }
    Ok(Rat::new(numer, denom))
}

/// Invariant check used by tests and by the JSON layer after parsing.
pub fn is_canonical(r: &Rat) -> bool {
    r.denom().is_positive() && num::Integer::gcd(r.numer(), r.denom()).is_one()
}
