use core::fmt;
use core::str::FromStr;

use crate::Error;

/// An angular momentum quantum number, stored as twice its value so that
/// half-integer spins stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Spin(u32);

impl Spin {
    pub const ZERO: Spin = Spin(0);
    pub const HALF: Spin = Spin(1);

    pub const fn from_twice(twice: u32) -> Self {
        Spin(twice)
    }

    pub const fn integer(j: u32) -> Self {
        Spin(2 * j)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// Dimension `2j+1` of the irrep carried by this spin.
    pub const fn multiplicity(self) -> u64 {
        self.0 as u64 + 1
    }

    /// Parses a decimal spin value such as `4`, `7.5` or `2.0`.
    pub fn from_decimal(x: f64) -> Result<Self, Error> {
        let twice = 2.0 * x;
        if !twice.is_finite()
            || twice < 0.0
            || twice > f64::from(u32::MAX)
            || twice != libm::round(twice)
        {
            return Err(Error::InvalidSpin);
        }
        Ok(Spin(twice as u32))
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

impl FromStr for Spin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        // Plain decimals only; reject "inf", "nan" and exponents.
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit() || b == b'.') {
            return Err(Error::InvalidSpin);
        }
        let x: f64 = s.parse().map_err(|_| Error::InvalidSpin)?;
        Spin::from_decimal(x)
    }
}
