use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::field::{ExactField, Field};
use super::NumericsError;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, NumericsError> {
    let t = s.trim();
    let bad = || NumericsError::Parse(s.to_string());
    match t.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, d))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Exact square root if `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_root(r.numer(), 2)?;
    let d = exact_root(r.denom(), 2)?;
    Some(Rational::new(n, d))
}

/// Exact real cube root if `r` is the cube of a rational.
pub fn rational_cbrt(r: &Rational) -> Option<Rational> {
    let n = exact_root(&r.numer().abs(), 3)?;
    let d = exact_root(r.denom(), 3)?;
    let s = Rational::new(n, d);
    Some(if r.is_negative() { -s } else { s })
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

impl Field for Rational {
    fn from_i64(n: i64) -> Self {
        q(n)
    }
}

impl ExactField for Rational {}
