use core::fmt;

use crate::Spin;

/// Errors raised by the model, the algebra builders and the fits.
#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// Space dimension must be odd and at least 3.
    InvalidDimension(u64),
    /// A band-derived space must have dimension at least 5.
    BandSpaceTooSmall(u64),
    /// Text that is not a nonnegative multiple of 1/2.
    InvalidSpin,
    /// Spin range that is empty or not a whole number of steps.
    MalformedSpinRange {
        j_min: Spin,
        j_max: Spin,
        step: Spin,
    },
    /// A bracket product under a square root went negative.
    NegativeBracketProduct { j: Spin, m2: i64, value: f64 },
    /// `τ(j+1) ≥ π`: the sine form is outside its monotone regime.
    RegimeViolation { j: Spin, tau: f64 },
    /// Fewer levels than a fit needs.
    TooFewLevels(usize),
    /// Spins not strictly increasing at the given level index.
    NonMonotoneSpin { index: usize },
    /// Same spin listed twice at the given level index.
    DuplicateSpin { index: usize },
    /// Spin step differs from the first step at the given level index.
    InconsistentStep {
        index: usize,
        expected: Spin,
        found: Spin,
    },
    /// Energies not strictly increasing at the given level index.
    NonIncreasingEnergy { index: usize },
    /// Energy that is NaN or infinite at the given level index.
    NonFiniteEnergy { index: usize },
    /// Band-head energy below zero.
    NegativeBandHead(f64),
    /// `A` must be positive and finite.
    NonPositiveA(f64),
    /// Model basis is identically zero, so `A` is undetermined.
    DegenerateBand,
    /// The brute-force scan found its minimum on the edge of the grid.
    MinimumOnGridBoundary { a: f64 },
    /// Grid with `lo ≥ hi` or too few points.
    InvalidGrid,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDimension(d) => write!(f, "space dimension {d} must be odd and at least 3"),
            Error::BandSpaceTooSmall(d) => {
                write!(f, "band spans a space of dimension {d}; at least 5 is required")
            }
            Error::InvalidSpin => f.write_str("spin must be a nonnegative integer or half-integer"),
            Error::MalformedSpinRange { j_min, j_max, step } => {
                write!(f, "malformed spin range {j_min}..{j_max} in steps of {step}")
            }
            Error::NegativeBracketProduct { j, m2, value } => write!(
                f,
                "negative bracket product {value:e} in irrep j={j} at m={}; space too small for this spin",
                HalfInt(*m2)
            ),
            Error::RegimeViolation { j, tau } => {
                write!(f, "tau*(j+1) >= pi for j={j}, tau={tau}; spin outside the q-rotor regime")
            }
            Error::TooFewLevels(n) => write!(f, "band has {n} levels; at least 3 are required"),
            Error::NonMonotoneSpin { index } => write!(f, "non-monotone spin at level {index}"),
            Error::DuplicateSpin { index } => write!(f, "duplicate spin at level {index}"),
            Error::InconsistentStep { index, expected, found } => write!(
                f,
                "inconsistent spin step at level {index}: expected {expected}, found {found}"
            ),
            Error::NonIncreasingEnergy { index } => {
                write!(f, "energy does not increase with spin at level {index}")
            }
            Error::NonFiniteEnergy { index } => write!(f, "non-finite energy at level {index}"),
            Error::NegativeBandHead(e) => write!(f, "band-head energy {e} keV is negative"),
            Error::NonPositiveA(a) => write!(f, "A = {a} keV is not positive"),
            Error::DegenerateBand => f.write_str("model energies are all equal; A is undetermined"),
            Error::MinimumOnGridBoundary { a } => {
                write!(f, "chi-square minimum at grid boundary A = {a} keV; widen the grid")
            }
            Error::InvalidGrid => f.write_str("grid needs lo < hi and at least 1000 points"),
        }
    }
}

impl core::error::Error for Error {}

struct HalfInt(i64);

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
