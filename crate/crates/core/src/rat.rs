//! Checked exact rationals.
//!
//! `Rat` is always stored in lowest terms with a positive denominator. Every
//! arithmetic operation is checked: an overflow of the underlying `i128`
//! surfaces as [`Error::Overflow`] instead of wrapping or panicking.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(Ratio<i128>);

impl Rat {
    pub const ZERO: Rat = Rat(Ratio::new_raw(0, 1));
    pub const ONE: Rat = Rat(Ratio::new_raw(1, 1));

    pub fn new(num: i128, den: i128) -> Result<Rat> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        // Ratio::new reduces; i128::MIN cannot be negated so reject it up front.
        if num == i128::MIN || den == i128::MIN {
            return Err(Error::Overflow);
        }
        Ok(Rat(Ratio::new(num, den)))
    }

    pub fn integer(n: i128) -> Rat {
        Rat(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> i128 {
        Integer::div_floor(&self.numer(), &self.denom())
    }

    pub fn ceil(&self) -> i128 {
        Integer::div_ceil(&self.numer(), &self.denom())
    }

    /// Fractional part `x - floor(x)`, always in `[0, 1)`.
    pub fn fract(&self) -> Rat {
        Rat(Ratio::new_raw(self.numer().mod_floor(&self.denom()), self.denom()))
    }

    pub fn add(&self, rhs: &Rat) -> Result<Rat> {
        self.0.checked_add(&rhs.0).map(Rat).ok_or(Error::Overflow)
    }

    pub fn sub(&self, rhs: &Rat) -> Result<Rat> {
        self.0.checked_sub(&rhs.0).map(Rat).ok_or(Error::Overflow)
    }

    pub fn mul(&self, rhs: &Rat) -> Result<Rat> {
        self.0.checked_mul(&rhs.0).map(Rat).ok_or(Error::Overflow)
    }

    pub fn div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        self.0.checked_div(&rhs.0).map(Rat).ok_or(Error::Overflow)
    }

    pub fn neg(&self) -> Result<Rat> {
        Rat::ZERO.sub(self)
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Rat>) -> Result<Rat> {
        items.into_iter().try_fold(Rat::ZERO, |acc, x| acc.add(x))
    }

    pub fn cmp_int(&self, n: i128) -> Ordering {
        self.cmp(&Rat::integer(n))
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::integer(n as i128)
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Self {
        Rat::integer(n as i128)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p` or `p/q` with decimal integers. Decimal fractions such as
/// `0.5` are rejected.
impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let bad = || Error::ParseRational(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: i128 = num.parse().map_err(|_| bad())?;
        let den: i128 = den.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Rat::new(num, den)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
