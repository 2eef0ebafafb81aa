//! Exact integer and rational primitives.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Signed integer scalar used by the algorithm.
///
/// Fixed-width implementations report [`Error::Overflow`] through the checked
/// helpers instead of wrapping.
pub trait Int:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Send
    + Sync
    + 'static
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + FromStr
{
    fn to_big(&self) -> BigInt;
    fn from_big(v: &BigInt) -> Option<Self>;
}

impl Int for i64 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
}

impl Int for i128 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl Int for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

/// Exact fraction, always stored reduced with a positive denominator.
pub type Rational = Ratio<BigInt>;

pub(crate) fn lit<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("small literal fits every integer type")
}

pub(crate) fn add<T: Int>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub<T: Int>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: Int>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn neg<T: Int>(a: &T) -> Result<T> {
    sub(&T::zero(), a)
}

/// `a` reduced into `[0, |b|)`.
pub fn mod_pos<T: Int>(a: &T, b: &T) -> Result<T> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let m = if b.is_negative() { neg(b)? } else { b.clone() };
    Ok(a.mod_floor(&m))
}

pub fn gcd<T: Int>(a: &T, b: &T) -> Result<T> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    Ok(a.gcd(b))
}

/// The `x` in `(0, m)` with `a*x = 1 (mod m)`.
pub fn mod_inverse<T: Int>(a: &T, m: &T) -> Result<T> {
    if *m <= T::one() {
        return Err(Error::Domain(format!("modulus {m} must exceed 1")));
    }
    let r = mod_pos(a, m)?;
    let eg = r.extended_gcd(m);
    if !eg.gcd.is_one() {
        return Err(Error::NotInvertible { a: a.to_string(), m: m.to_string() });
    }
    mod_pos(&eg.x, m)
}

pub fn floor_div<T: Int>(a: &T, b: &T) -> Result<T> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a.div_floor(b))
}

pub fn ceil_div<T: Int>(a: &T, b: &T) -> Result<T> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        Ok(q)
    } else {
        add(&q, &T::one())
    }
}

pub fn floor_rat(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn ceil_rat(x: &Rational) -> BigInt {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

/// Three-way comparison by cross-multiplication.
pub fn rat_cmp(x: &Rational, y: &Rational) -> Ordering {
    (x.numer() * y.denom()).cmp(&(y.numer() * x.denom()))
}

/// Compares an integer with a fraction without building a `Ratio`.
pub fn cmp_int_rat<T: Int>(a: &T, x: &Rational) -> Ordering {
    (a.to_big() * x.denom()).cmp(x.numer())
}

pub fn rat_from_int<T: Int>(a: &T) -> Rational {
    Rational::from_integer(a.to_big())
}

/// Decimal rendering rounded half-up to `digits` significant digits, with
/// trailing zeros dropped down to a single fractional digit: 27/5 gives "5.4"
/// and 83 gives "83.0".
pub fn rat_decimal(x: &Rational, digits: u32) -> String {
    assert!(digits > 0, "at least one significant digit");
    if x.is_zero() {
        return "0.0".to_string();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let num = x.numer().abs();
    let den = x.denom().clone();
    let ten = BigInt::from(10);

    let abs = Ratio::new(num.clone(), den.clone());
    let pow10 = |e: i64| -> Rational {
        let p = num_traits::pow(ten.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            Ratio::from_integer(p)
        } else {
            Ratio::new(BigInt::one(), p)
        }
    };
    // Largest e with 10^e <= |x|.
    let mut e: i64 = 0;
    while abs >= pow10(e + 1) {
        e += 1;
    }
    while abs < pow10(e) {
        e -= 1;
    }

    let round = |k: i64| -> BigInt {
        let (n, d) = if k >= 0 {
            (&num * num_traits::pow(ten.clone(), k as usize), den.clone())
        } else {
            (num.clone(), &den * num_traits::pow(ten.clone(), (-k) as usize))
        };
        let twice: BigInt = n * 2 + &d;
        twice.div_floor(&(d * 2))
    };
    let mut k = digits as i64 - 1 - e;
    let mut r = round(k);
    if r >= num_traits::pow(ten.clone(), digits as usize) {
        k -= 1;
        r = round(k);
    }

    if k <= 0 {
        let int = r * num_traits::pow(ten, (-k) as usize);
        return format!("{sign}{int}.0");
    }
    let s = r.to_string();
    let k = k as usize;
    let padded = if s.len() <= k { format!("{}{}", "0".repeat(k + 1 - s.len()), s) } else { s };
    let (int_part, frac_part) = padded.split_at(padded.len() - k);
    let trimmed = frac_part.trim_end_matches('0');
    let frac = if trimmed.is_empty() { "0" } else { trimmed };
    format!("{sign}{int_part}.{frac}")
}
