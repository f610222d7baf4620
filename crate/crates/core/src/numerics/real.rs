use std::cmp::Ordering;

use num_traits::Signed;

use super::bigfloat::BigFloat;
use super::field::{Field, Zero};
use super::rational::{rational_cbrt, rational_sqrt, Rational};

/// Ordered field with (possibly partial) square and cube roots.
///
/// `Rational` returns roots only when they are exact, which lets witness code
/// run exactly when it can and fall back to [`BigFloat`] otherwise.
pub trait Real: Field {
    fn from_rational(r: &Rational, digits: u32) -> Self;
    fn sqrt(&self) -> Option<Self>;
    fn cbrt(&self) -> Option<Self>;
    fn signum(&self) -> i32;
    fn cmp_abs(&self, o: &Self) -> Ordering;
    fn to_bigfloat(&self, digits: u32) -> BigFloat;
}

impl Real for Rational {
    fn from_rational(r: &Rational, _: u32) -> Self {
        r.clone()
    }
    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
    fn cbrt(&self) -> Option<Self> {
        rational_cbrt(self)
    }
    fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }
    fn cmp_abs(&self, o: &Self) -> Ordering {
        self.abs().cmp(&o.abs())
    }
    fn to_bigfloat(&self, digits: u32) -> BigFloat {
        BigFloat::from_rational(self, digits)
    }
}

impl Real for BigFloat {
    fn from_rational(r: &Rational, digits: u32) -> Self {
        BigFloat::from_rational(r, digits)
    }
    fn sqrt(&self) -> Option<Self> {
        BigFloat::sqrt(self)
    }
    fn cbrt(&self) -> Option<Self> {
        Some(BigFloat::cbrt(self))
    }
    fn signum(&self) -> i32 {
        BigFloat::signum(self)
    }
    fn cmp_abs(&self, o: &Self) -> Ordering {
        self.abs().cmp_value(&o.abs())
    }
    fn to_bigfloat(&self, digits: u32) -> BigFloat {
        BigFloat::from_rational(&self.to_rational(), digits)
    }
}
