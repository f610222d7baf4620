use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::Field;
use super::rational::Rational;

/// Default working precision in decimal digits.
pub const DEFAULT_PRECISION: u32 = 60;

const GUARD_BITS: u64 = 32;

/// Binary floating point value `mant · 2^exp` carrying `digits` decimal digits.
///
/// Every operation rounds to nearest at the larger of its operands' precisions.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    digits: u32,
}

fn bits_for(digits: u32) -> u64 {
    // log2(10) < 3.33
    (digits as u64 * 333).div_ceil(100) + GUARD_BITS
}

impl BigFloat {
    pub fn zero_with(digits: u32) -> Self {
        Self { mant: BigInt::zero(), exp: 0, digits }
    }

    pub fn from_int(n: i64, digits: u32) -> Self {
        Self { mant: BigInt::from(n), exp: 0, digits }.normalized()
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        let bits = bits_for(digits) as i64;
        if r.is_zero() {
            return Self::zero_with(digits);
        }
        let shift = bits + r.denom().bits() as i64 - r.numer().bits() as i64 + 2;
        let shift = shift.max(0);
        let num = r.numer() << (shift as usize);
        let mant = round_div(&num, r.denom());
        Self { mant, exp: -shift, digits }.normalized()
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Tolerance 10^(−P/2) used by residual checks.
    pub fn tolerance(digits: u32) -> Self {
        let r = Rational::new(BigInt::one(), BigInt::from(10).pow(digits / 2));
        Self::from_rational(&r, digits)
    }

    fn normalized(mut self) -> Self {
        let bits = bits_for(self.digits);
        let len = self.mant.bits();
        if len > bits {
            let drop = len - bits;
            self.mant = round_shift(&self.mant, drop);
            self.exp += drop as i64;
        }
        if self.mant.is_zero() {
            self.exp = 0;
        }
        self
    }

    fn prec(&self, o: &Self) -> u32 {
        self.digits.max(o.digits)
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Self { mant: self.mant.abs(), ..self.clone() }
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << (self.exp as usize))
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << ((-self.exp) as usize))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Square root; `None` for negative input.
    pub fn sqrt(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let bits = bits_for(self.digits) as i64;
        let mut shift = 2 * bits - self.mant.bits() as i64 + 2;
        shift = shift.max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = (&self.mant << (shift as usize)).sqrt();
        Some(Self { mant: m, exp: (self.exp - shift) / 2, digits: self.digits }.normalized())
    }

    /// Real cube root, defined for every sign.
    pub fn cbrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let bits = bits_for(self.digits) as i64;
        let mut shift = 3 * bits - self.mant.bits() as i64 + 3;
        shift = shift.max(0);
        while (self.exp - shift).rem_euclid(3) != 0 {
            shift += 1;
        }
        let m = (self.mant.abs() << (shift as usize)).cbrt();
        let m = if self.signum() < 0 { -m } else { m };
        Self { mant: m, exp: (self.exp - shift).div_euclid(3), digits: self.digits }.normalized()
    }

    /// Scientific notation with `sig` significant digits, e.g. `1.2e-31`.
    pub fn to_sci(&self, sig: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let r = self.to_rational();
        let neg = r.is_negative();
        let r = r.abs();
        let ten = Rational::from_integer(BigInt::from(10));
        // estimate the decimal exponent from bit lengths, then correct
        let est = ((r.numer().bits() as f64 - r.denom().bits() as f64) * std::f64::consts::LOG10_2).floor() as i64;
        let mut e = est;
        let pow = |k: i64| -> Rational {
            if k >= 0 {
                ten.pow(k as i32)
            } else {
                Rational::one() / ten.pow((-k) as i32)
            }
        };
        while r >= pow(e + 1) {
            e += 1;
        }
        while r < pow(e) {
            e -= 1;
        }
        let scaled = &r / pow(e) * pow(sig as i64 - 1);
        let mut digits = round_div(scaled.numer(), scaled.denom());
        if digits >= BigInt::from(10).pow(sig as u32) {
            digits /= 10;
            e += 1;
        }
        let s = digits.to_string();
        let (head, tail) = s.split_at(1);
        let tail = tail.trim_end_matches('0');
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{e}")
        } else {
            format!("{sign}{head}.{tail}e{e}")
        }
    }
}

fn round_shift(m: &BigInt, drop: u64) -> BigInt {
    let half = BigInt::one() << ((drop - 1) as usize);
    if m.is_negative() {
        -((-m + half) >> (drop as usize))
    } else {
        (m + half) >> (drop as usize)
    }
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let twice = (n << 1usize) + if n.is_negative() { -d } else { d.clone() };
    twice / (d << 1usize)
}

fn align(a: &BigFloat, b: &BigFloat) -> (BigInt, BigInt, i64) {
    let e = a.exp.min(b.exp);
    ((&a.mant << ((a.exp - e) as usize)), (&b.mant << ((b.exp - e) as usize)), e)
}

impl PartialEq for BigFloat {
    fn eq(&self, o: &Self) -> bool {
        self.cmp_value(o) == Ordering::Equal
    }
}

impl BigFloat {
    pub fn cmp_value(&self, o: &Self) -> Ordering {
        let (a, b, _) = align(self, o);
        a.cmp(&b)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci(self.digits as usize))
    }
}

impl Neg for BigFloat {
    type Output = Self;
    fn neg(self) -> Self {
        Self { mant: -self.mant, ..self }
    }
}

impl Add<&BigFloat> for BigFloat {
    type Output = Self;
    fn add(self, o: &Self) -> Self {
        if o.is_zero() {
            return Self { digits: self.prec(o), ..self };
        }
        let (a, b, e) = align(&self, o);
        Self { mant: a + b, exp: e, digits: self.prec(o) }.normalized()
    }
}

impl Sub<&BigFloat> for BigFloat {
    type Output = Self;
    fn sub(self, o: &Self) -> Self {
        self + &(-o.clone())
    }
}

impl Mul<&BigFloat> for BigFloat {
    type Output = Self;
    fn mul(self, o: &Self) -> Self {
        let digits = self.prec(o);
        Self { mant: self.mant * &o.mant, exp: self.exp + o.exp, digits }.normalized()
    }
}

impl Div<&BigFloat> for BigFloat {
    type Output = Self;
    fn div(self, o: &Self) -> Self {
        assert!(!o.is_zero(), "BigFloat division by zero");
        let digits = self.prec(o);
        let bits = bits_for(digits) as i64;
        let shift = (bits + o.mant.bits() as i64 - self.mant.bits() as i64 + 2).max(0);
        let num = &self.mant << (shift as usize);
        let mant = round_div(&num, &o.mant);
        Self { mant, exp: self.exp - o.exp - shift, digits }.normalized()
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        Self::zero_with(DEFAULT_PRECISION)
    }
    fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }
}

impl One for BigFloat {
    fn one() -> Self {
        Self::from_int(1, DEFAULT_PRECISION)
    }
}

impl Add for BigFloat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}

impl Mul for BigFloat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}

impl Field for BigFloat {
    fn from_i64(n: i64) -> Self {
        Self::from_int(n, DEFAULT_PRECISION)
    }
}

/// Real cube root at the precision of the argument.
pub fn real_cube_root(a: &BigFloat) -> BigFloat {
    a.cbrt()
}
