//! Dense realization of the `(2l+1)`-dimensional Barnett-Pegg angle space.
//!
//! Basis index `k = 0..D` labels the angular momentum state `|m⟩` with
//! `m = k − l`. The angle states are
//!
//! ```text
//! |θ_n⟩ = D^{-1/2} Σ_m e^{−i m θ_n} |m⟩,    θ_n = θ₀ + 2πn/D,  n = 0..D
//! ```
//!
//! and the exponentiated angle operator is `e^{iΦ} = Σ_n e^{iθ_n} |θ_n⟩⟨θ_n|`.
//!
//! Sign convention: this module uses `q = e^{−2πi/D}`, so `q^{J_z}` is
//! `diag(e^{−2πi m/D})`. The energy formula uses the real bracket with
//! `τ = +2π/D`; the bracket product `[j][j+1]` is even in `τ`, so the two
//! conventions give identical energies.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::matrix::{inner, ComplexMatrix};
use crate::{Error, QParameter, Spin};

#[derive(Debug, Clone)]
pub struct BPSpace {
    qp: QParameter,
    exp_iphi: ComplexMatrix,
    q_jz: ComplexMatrix,
    angle_basis: Vec<Vec<Complex64>>,
}

/// Builds the angle space for angular momentum cutoff `l` (`D = 2l+1`).
///
/// `l` must be an integer with `l ≥ 1`: the space carries a [`QParameter`],
/// whose dimension is odd.
pub fn build_space(l: Spin, theta0: f64) -> Result<BPSpace, Error> {
    let dim = l.multiplicity();
    if !l.is_integer() || dim < 3 {
        return Err(Error::InvalidDimension(dim));
    }
    let qp = QParameter::new(dim)?.with_theta0(theta0);
    let d = dim as usize;
    let l = qp.l() as i64;
    let m_of = |k: usize| k as i64 - l;
    let theta = |n: usize| theta0 + 2.0 * PI * n as f64 / dim as f64;
    let norm = 1.0 / libm::sqrt(dim as f64);

    let angle_basis: Vec<Vec<Complex64>> = (0..d)
        .map(|n| {
            let th = theta(n);
            (0..d)
                .map(|k| Complex64::cis(-(m_of(k) as f64) * th) * norm)
                .collect()
        })
        .collect();

    // ⟨m_a| e^{iΦ} |m_b⟩ = D⁻¹ Σ_n e^{iθ_n (1 + m_b − m_a)} depends only on
    // the offset 1 + m_b − m_a ∈ [2 − D, D]; sum each offset once.
    let offset_sum: Vec<Complex64> = (2 - dim as i64..=dim as i64)
        .map(|p| {
            (0..d)
                .map(|n| Complex64::cis(p as f64 * theta(n)))
                .sum::<Complex64>()
                / dim as f64
        })
        .collect();
    let exp_iphi = ComplexMatrix::from_fn(d, d, |a, b| {
        let p = 1 + m_of(b) - m_of(a);
        offset_sum[(p - (2 - dim as i64)) as usize]
    });

    let q_jz_diag: Vec<Complex64> = (0..d)
        .map(|k| Complex64::cis(-2.0 * PI * m_of(k) as f64 / dim as f64))
        .collect();
    let q_jz = ComplexMatrix::diagonal(&q_jz_diag);

    Ok(BPSpace {
        qp,
        exp_iphi,
        q_jz,
        angle_basis,
    })
}

impl BPSpace {
    pub fn qparameter(&self) -> &QParameter {
        &self.qp
    }

    pub fn dim(&self) -> usize {
        self.qp.dim() as usize
    }

    pub fn l(&self) -> i64 {
        self.qp.l() as i64
    }

    pub fn exp_iphi(&self) -> &ComplexMatrix {
        &self.exp_iphi
    }

    /// `e^{−iΦ}`, the adjoint of [`BPSpace::exp_iphi`].
    pub fn exp_minus_iphi(&self) -> ComplexMatrix {
        self.exp_iphi.adjoint()
    }

    pub fn q_jz(&self) -> &ComplexMatrix {
        &self.q_jz
    }

    pub fn angle_basis(&self) -> &[Vec<Complex64>] {
        &self.angle_basis
    }

    /// The scalar `q = e^{−2πi/D}` of this space.
    pub fn q(&self) -> Complex64 {
        Complex64::cis(-self.qp.tau())
    }

    /// Basis vector `|m⟩`, for `−l ≤ m ≤ l`.
    pub fn m_state(&self, m: i64) -> Vec<Complex64> {
        let l = self.l();
        assert!((-l..=l).contains(&m), "m = {m} outside -{l}..={l}");
        let mut v = alloc::vec![Complex64::new(0.0, 0.0); self.dim()];
        v[(m + l) as usize] = Complex64::new(1.0, 0.0);
        v
    }

    /// Max entry of `|⟨θ_m|θ_n⟩ − δ_mn|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let d = self.dim();
        let mut worst = 0.0f64;
        for a in 0..d {
            for b in 0..d {
                let target = if a == b { 1.0 } else { 0.0 };
                let g = inner(&self.angle_basis[a], &self.angle_basis[b]);
                worst = worst.max((g - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    /// Distance of `Σ_n |θ_n⟩⟨θ_n|` from the identity.
    pub fn completeness_defect(&self) -> f64 {
        let d = self.dim();
        let sum = ComplexMatrix::from_fn(d, d, |a, b| {
            self.angle_basis.iter().map(|v| v[a] * v[b].conj()).sum()
        });
        sum.max_abs_diff(&ComplexMatrix::identity(d))
    }

    /// The raising matrix `e^{iΦ}` must equal: ones on the subdiagonal
    /// (`|m⟩ → |m+1⟩`) and `e^{iDθ₀}` in the corner (`|l⟩ → |−l⟩`).
    pub fn cyclic_shift_target(&self) -> ComplexMatrix {
        let d = self.dim();
        let corner = Complex64::cis(d as f64 * self.qp.theta0());
        ComplexMatrix::from_fn(d, d, |a, b| {
            if a == b + 1 {
                Complex64::new(1.0, 0.0)
            } else if a == 0 && b == d - 1 {
                corner
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }
}

/// Max-norm of `q^{J_z} e^{iΦ} − q e^{iΦ} q^{J_z}`.
pub fn check_quantum_plane(space: &BPSpace) -> f64 {
    let lhs = space.q_jz.matmul(&space.exp_iphi);
    let rhs = space.exp_iphi.matmul(&space.q_jz).scale(space.q());
    lhs.max_abs_diff(&rhs)
}

/// Max deviation of `e^{iΦ}` from the cyclic raising matrix.
pub fn check_cyclic_shift(space: &BPSpace) -> f64 {
    space.exp_iphi.max_abs_diff(&space.cyclic_shift_target())
}
