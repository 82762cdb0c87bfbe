#![no_std]
#![forbid(unsafe_code)]

//! Core numerics of the q-deformed rotor.
//!
//! The deformation parameter of the rotor is not fitted. It is fixed by the
//! spin content of the band: the dimensions `2j+1` of all irreps in the band
//! are summed (rounded up to the next odd number) to give the size `D` of a
//! finite Barnett-Pegg angle space, and `q = e^{iτ}` with `τ = 2π/D`. Band
//! energies then follow `E_j = A [j][j+1]` with `[x] = sin(τx)/sin τ`, and the
//! single remaining parameter `A = 1/2I` is found by linear least squares.
//!
//! The crate also carries dense matrix realizations of the angle space and of
//! the SU_q(2) irreps so the underlying operator identities can be checked
//! numerically.
//!
//! This crate depends only on [`core`] and [`alloc`].

extern crate alloc;

pub mod bp_space;
mod error;
pub mod fit;
pub mod matrix;
pub mod model;
pub mod qnum;
mod spin;
pub mod suq2;

pub use error::Error;
pub use fit::{compare, fit_a, fit_a_oracle, Comparison, FitResult, Grid, Residual, Variant};
pub use model::{band_energies, energy, q_parameter_from_band, space_size, BandData, Level};
pub use qnum::{casimir_eigenvalue, qbracket, qbracket_classical, Deformation, QParameter};
pub use spin::Spin;

pub type Result<T, E = Error> = core::result::Result<T, E>;
