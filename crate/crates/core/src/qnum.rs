//! q-numbers for a pure-phase deformation `q = e^{iτ}`.
//!
//! For such `q` the bracket `[x] = (q^x - q^{-x}) / (q - q^{-1})` is real and
//! equals `sin(τx) / sin τ`. It tends to `x` as `τ → 0`.

use core::f64::consts::PI;

use crate::{Error, Spin};

/// Deformation parameter `τ = 2π/D` of a Barnett-Pegg space of odd
/// dimension `D = 2l+1`, plus the reference angle `θ₀` of its angle grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParameter {
    tau: f64,
    dim: u64,
    theta0: f64,
}

impl QParameter {
    pub fn new(dim: u64) -> Result<Self, Error> {
        if dim < 3 || dim.is_multiple_of(2) {
            return Err(Error::InvalidDimension(dim));
        }
        Ok(QParameter {
            tau: 2.0 * PI / dim as f64,
            dim,
            theta0: 0.0,
        })
    }

    pub fn with_theta0(self, theta0: f64) -> Self {
        QParameter { theta0, ..self }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// `l` with `D = 2l+1`; always an integer since `D` is odd.
    pub fn l(&self) -> u64 {
        (self.dim - 1) / 2
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    /// Whether the standard `(2j+1)`-dimensional irrep has nonnegative
    /// brackets throughout, i.e. `τ(2j+1) < π`.
    pub fn admits_irrep(&self, j: Spin) -> bool {
        self.tau * (j.multiplicity() as f64) < PI
    }
}

pub(crate) fn sine_bracket(x: f64, tau: f64) -> f64 {
    libm::sin(tau * x) / libm::sin(tau)
}

/// The q-number `[x] = sin(τx)/sin τ`.
pub fn qbracket(x: f64, qp: &QParameter) -> f64 {
    sine_bracket(x, qp.tau)
}

/// The undeformed limit of [`qbracket`].
pub fn qbracket_classical(x: f64) -> f64 {
    x
}

/// Eigenvalue `[j][j+1]` of the second-order SU_q(2) Casimir on the spin-`j`
/// irrep.
pub fn casimir_eigenvalue(j: f64, qp: &QParameter) -> f64 {
    qbracket(j, qp) * qbracket(j + 1.0, qp)
}

/// Either a q-deformation with a fixed parameter or the undeformed
/// (`τ → 0`) algebra. Lets every builder and fit run in both variants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Deformation {
    Q(QParameter),
    Classical,
}

impl Deformation {
    pub fn bracket(&self, x: f64) -> f64 {
        match self {
            Deformation::Q(qp) => qbracket(x, qp),
            Deformation::Classical => qbracket_classical(x),
        }
    }

    pub fn casimir(&self, j: f64) -> f64 {
        self.bracket(j) * self.bracket(j + 1.0)
    }

    pub fn qparameter(&self) -> Option<&QParameter> {
        match self {
            Deformation::Q(qp) => Some(qp),
            Deformation::Classical => None,
        }
    }

    pub fn tau(&self) -> f64 {
        self.qparameter().map_or(0.0, QParameter::tau)
    }
}

impl From<QParameter> for Deformation {
    fn from(qp: QParameter) -> Self {
        Deformation::Q(qp)
    }
}
