//! Half-integers, stored exactly as twice their value.
//!
//! Rotation weights and the discrete spectral indices of this crate live in
//! (1/2)Z. Storing `2n` as an `i32` keeps membership tests and index
//! arithmetic exact; conversion to `f64` happens only at evaluation time.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

/// An element of (1/2)Z, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    /// Builds from twice the value: `from_twice(3)` is 3/2.
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    /// Builds from an integer value.
    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    /// Twice the value, exact.
    pub const fn twice(self) -> i32 {
        self.0
    }

    /// True when the value is an integer (not a strict half-integer).
    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub const fn abs(self) -> HalfInt {
        HalfInt(self.0.abs())
    }

    /// Parses "0", "-2", "3/2", "-5/2", "1.5", "-0.5".
    fn parse(s: &str) -> Option<HalfInt> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return None;
            }
            return num.trim().parse::<i32>().ok().map(HalfInt);
        }
        if let Ok(n) = s.parse::<i32>() {
            return Some(HalfInt(2 * n));
        }
        let x = s.parse::<f64>().ok()?;
        let twice = 2.0 * x;
        if twice.fract() != 0.0 || twice.abs() > i32::MAX as f64 {
            return None;
        }
        Some(HalfInt(twice as i32))
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HalfInt::parse(s)
            .ok_or_else(|| crate::error::Error::Parse(format!("not a half-integer: {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for (txt, twice) in [("0", 0), ("-2", -4), ("3/2", 3), ("-5/2", -5), ("1.5", 3)] {
            let h: HalfInt = txt.parse().unwrap();
            assert_eq!(h.twice(), twice, "{txt}");
            let again: HalfInt = h.to_string().parse().unwrap();
            assert_eq!(again, h);
        }
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.3".parse::<HalfInt>().is_err());
    }

    #[test]
    fn integer_predicate_and_abs() {
        assert!(HalfInt::from_int(-3).is_integer());
        assert!(!HalfInt::from_twice(5).is_integer());
        assert_eq!(HalfInt::from_twice(-5).abs(), HalfInt::from_twice(5));
        assert_eq!(HalfInt::from_twice(-5).as_f64(), -2.5);
    }
}
