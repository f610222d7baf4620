use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{ExactField, Field};
use super::rational::{q, Rational};

/// Element re + i·im of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: q(0) }
    }

    pub fn i() -> Self {
        Self { re: q(0), im: q(1) }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|² = re² + im².
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { re: &self.re * r, im: &self.im * r }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "re": self.re.to_string(), "im": self.im.to_string() })
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Add<&GaussianRational> for GaussianRational {
    type Output = Self;
    fn add(self, o: &Self) -> Self {
        Self { re: self.re + &o.re, im: self.im + &o.im }
    }
}

impl Sub<&GaussianRational> for GaussianRational {
    type Output = Self;
    fn sub(self, o: &Self) -> Self {
        Self { re: self.re - &o.re, im: self.im - &o.im }
    }
}

impl Mul<&GaussianRational> for GaussianRational {
    type Output = Self;
    fn mul(self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Div<&GaussianRational> for GaussianRational {
    type Output = Self;
    fn div(self, o: &Self) -> Self {
        let d = o.norm_sq();
        assert!(!d.is_zero(), "division by zero in Q(i)");
        (self * &o.conj()).scale(&(q(1) / d))
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::real(q(0))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(q(1))
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}

impl Field for GaussianRational {
    fn from_i64(n: i64) -> Self {
        Self::real(q(n))
    }
}

impl ExactField for GaussianRational {}
